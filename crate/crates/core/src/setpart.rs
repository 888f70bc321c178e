//! Set partitions of a two-sided ground set `{1..r} ∪ {_1.._r}`: diagram
//! composition, the two-sided symmetric group action, and restricted-growth
//! enumeration.

use crate::letter::{Letter, Multiset};
use crate::msetpart::MultisetPartition;
use crate::partitions::Coloring;
use crate::perm::Permutation;
use crate::uf::UnionFind;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A set partition with blocks kept sorted by minimum element. Letters must
/// be globally distinct across blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    blocks: Vec<Multiset>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Multiset>) -> Result<Self> {
        blocks.retain(|b| !b.is_empty());
        // Canonical form sorts blocks by their minimum element.
        blocks.sort_by_key(|b| b.letters()[0]);
        let all: Vec<Letter> = blocks.iter().flat_map(|b| b.iter().copied()).collect();
        let ground = Multiset::new(all);
        if !ground.is_set() {
            return Err(Error::invalid(format!(
                "blocks of a set partition must be disjoint sets, got ground {ground}"
            )));
        }
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Multiset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground(&self) -> Multiset {
        Multiset::new(self.blocks.iter().flat_map(|b| b.iter().copied()).collect())
    }

    /// True when the ground set is exactly `{1..r} ∪ {_1.._r}`.
    pub fn is_diagram(&self, r: usize) -> bool {
        self.ground() == diagram_ground(r)
    }

    /// Blocks containing both an underlined and a non-underlined element.
    pub fn propagating_count(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.any_underlined() && !b.all_underlined())
            .count()
    }

    /// All set partitions of the listed ground elements, enumerated by
    /// restricted growth strings over the given element order.
    pub fn all_of_ground(ground: &[Letter]) -> Vec<SetPartition> {
        let n = ground.len();
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn go(
            i: usize,
            maxb: usize,
            ground: &[Letter],
            rgs: &mut Vec<usize>,
            out: &mut Vec<SetPartition>,
        ) {
            if i == ground.len() {
                let nb = rgs.iter().copied().max().map_or(0, |m| m + 1);
                let mut blocks = vec![Vec::new(); nb];
                for (j, &b) in rgs.iter().enumerate() {
                    blocks[b].push(ground[j]);
                }
                let blocks = blocks.into_iter().map(Multiset::new).collect();
                out.push(SetPartition::new(blocks).expect("rgs blocks are disjoint"));
                return;
            }
            for b in 0..=maxb {
                rgs[i] = b;
                go(i + 1, maxb.max(b + 1), ground, rgs, out);
            }
        }
        if n == 0 {
            return vec![SetPartition { blocks: Vec::new() }];
        }
        go(0, 0, ground, &mut rgs, &mut out);
        out
    }

    /// All diagrams on `{1..r} ∪ {_1.._r}`, in restricted-growth order over
    /// `1, .., r, _1, .., _r`.
    pub fn diagrams(r: usize) -> Vec<SetPartition> {
        SetPartition::all_of_ground(diagram_ground(r).letters())
    }

    /// The identity diagram `{{1,_1},..,{r,_r}}`.
    pub fn identity_diagram(r: usize) -> SetPartition {
        let blocks = (1..=r as u32)
            .map(|i| Multiset::new(vec![Letter::plain(i), Letter::und(i)]))
            .collect();
        SetPartition::new(blocks).expect("identity blocks are disjoint")
    }

    /// The diagram of a permutation: `{{σ(i), _i}}` for each `i`.
    pub fn perm_diagram(sigma: &Permutation) -> SetPartition {
        let blocks = (0..sigma.len())
            .map(|i| {
                Multiset::new(vec![
                    Letter::plain((sigma.apply(i) + 1) as u32),
                    Letter::und((i + 1) as u32),
                ])
            })
            .collect();
        SetPartition::new(blocks).expect("permutation blocks are disjoint")
    }

    /// Three-tier composition with `self` on top: returns `self ∘ other` and
    /// the number of components confined to the middle tier.
    pub fn compose(&self, other: &SetPartition, r: usize) -> Result<(SetPartition, usize)> {
        if !self.is_diagram(r) || !other.is_diagram(r) {
            return Err(Error::invalid(format!(
                "compose requires two diagrams on {{1..{r}}} ∪ {{_1.._{r}}}"
            )));
        }
        // Vertex layout: tops 0..r, middles r..2r, bottoms 2r..3r.
        let mut uf = UnionFind::new(3 * r);
        let mut join_block = |b: &Multiset, top_base: usize, bot_base: usize| {
            let idx: Vec<usize> = b
                .iter()
                .map(|l| {
                    let v = l.value as usize - 1;
                    if l.underlined {
                        bot_base + v
                    } else {
                        top_base + v
                    }
                })
                .collect();
            for w in idx.windows(2) {
                uf.union(w[0], w[1]);
            }
        };
        for b in &self.blocks {
            join_block(b, 0, r);
        }
        for b in &other.blocks {
            join_block(b, r, 2 * r);
        }
        let mut middle_only = 0usize;
        let mut blocks = Vec::new();
        for class in uf.classes() {
            let letters: Vec<Letter> = class
                .iter()
                .filter_map(|&v| {
                    if v < r {
                        Some(Letter::plain((v + 1) as u32))
                    } else if v < 2 * r {
                        None
                    } else {
                        Some(Letter::und((v - 2 * r + 1) as u32))
                    }
                })
                .collect();
            if letters.is_empty() {
                middle_only += 1;
            } else {
                blocks.push(Multiset::new(letters));
            }
        }
        Ok((SetPartition::new(blocks)?, middle_only))
    }

    /// The two-sided action: `i ↦ σ₁(i)` on non-underlined elements and
    /// `_i ↦ _σ₂⁻¹(i)` on underlined ones, matching
    /// `L_{σ₁} L_π L_{σ₂} = L_{σ₁.π.σ₂}`.
    pub fn act(&self, sigma1: &Permutation, sigma2: &Permutation) -> SetPartition {
        let inv2 = sigma2.inverse();
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.map(|l| {
                    let v = l.value as usize - 1;
                    if l.underlined {
                        Letter::und((inv2.apply(v) + 1) as u32)
                    } else {
                        Letter::plain((sigma1.apply(v) + 1) as u32)
                    }
                })
            })
            .collect();
        SetPartition::new(blocks).expect("relabeling preserves disjointness")
    }

    /// Image under a coloring, block by block.
    pub fn kappa_image(&self, kappa: &Coloring) -> Result<MultisetPartition> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| kappa.apply_multiset(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(MultisetPartition::new(blocks))
    }
}

/// Which two-sided group a stabilizer is taken in: the full `S_r × S_r`, or
/// the product of Young subgroups cut out by a coloring on both sides.
#[derive(Clone, Debug)]
pub enum StabGroup<'a> {
    Full(usize),
    Colored(&'a Coloring),
}

/// The stabilizer of a diagram, decomposed as `(∏_B N_B) ⋊ H`: each `N_B`
/// permutes elements within the block `B` (per side, and per color class in
/// the colored case), while `H` permutes whole blocks of equal signature.
#[derive(Clone, Debug)]
pub struct StabilizerDecomposition {
    /// `|N_B|` for each block, in canonical block order.
    pub block_factor_orders: Vec<u128>,
    /// Generators of `H` as pairs of block indices that can be swapped.
    pub h_generators: Vec<(usize, usize)>,
    /// `|H|`.
    pub h_order: u128,
    /// `|N| · |H|`.
    pub order: u128,
}

impl SetPartition {
    /// Decompose the stabilizer of `self` under the two-sided action of the
    /// given group.
    pub fn stabilizer(&self, group: &StabGroup) -> Result<StabilizerDecomposition> {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        // Signature of a block: per-(side, class) element counts. In the full
        // group there is one class per side; in the colored group one per
        // color.
        let signature = |b: &Multiset| -> Result<Vec<(Letter, usize)>> {
            let mut counts: std::collections::BTreeMap<Letter, usize> = Default::default();
            for &l in b.iter() {
                let class = match group {
                    StabGroup::Full(_) => Letter {
                        value: 0,
                        barred: false,
                        underlined: l.underlined,
                    },
                    StabGroup::Colored(kappa) => {
                        kappa.apply(Letter { value: l.value, barred: false, underlined: l.underlined })?
                    }
                };
                *counts.entry(class).or_insert(0) += 1;
            }
            Ok(counts.into_iter().collect())
        };
        let sigs = self
            .blocks
            .iter()
            .map(|b| signature(b))
            .collect::<Result<Vec<_>>>()?;
        let block_factor_orders: Vec<u128> = sigs
            .iter()
            .map(|sig| sig.iter().map(|&(_, c)| fact(c)).product())
            .collect();
        let mut h_generators = Vec::new();
        let mut h_order = 1u128;
        let mut class_sizes: std::collections::BTreeMap<&[(Letter, usize)], Vec<usize>> =
            Default::default();
        for (i, sig) in sigs.iter().enumerate() {
            class_sizes.entry(sig.as_slice()).or_default().push(i);
        }
        for members in class_sizes.values() {
            h_order *= fact(members.len());
            for w in members.windows(2) {
                h_generators.push((w[0], w[1]));
            }
        }
        let n_order: u128 = block_factor_orders.iter().product();
        Ok(StabilizerDecomposition {
            block_factor_orders,
            h_generators,
            h_order,
            order: n_order * h_order,
        })
    }
}

/// The ground multiset `{1..r} ∪ {_1.._r}` in its standard order.
pub fn diagram_ground(r: usize) -> Multiset {
    let mut v: Vec<Letter> = (1..=r as u32).map(Letter::plain).collect();
    v.extend((1..=r as u32).map(Letter::und));
    Multiset::new(v)
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
