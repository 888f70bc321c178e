//! Multiset partitions on a colored two-sided ground multiset: validity and
//! restriction predicates, enumeration through set-partition lifts, and
//! standardization back to set partitions.

use crate::letter::{Letter, Multiset};
use crate::partitions::Coloring;
use crate::setpart::SetPartition;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A multiset of multiset blocks, kept sorted in last-letter order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultisetPartition {
    blocks: Vec<Multiset>,
}

impl MultisetPartition {
    pub fn new(mut blocks: Vec<Multiset>) -> Self {
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        MultisetPartition { blocks }
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

    pub fn content(&self) -> Multiset {
        Multiset::new(self.blocks.iter().flat_map(|b| b.iter().copied()).collect())
    }

    /// No block may repeat a barred letter.
    pub fn barred_letters_distinct(&self) -> bool {
        self.blocks.iter().all(|b| {
            let barred: Vec<Letter> = b.iter().filter(|l| l.barred).copied().collect();
            Multiset::new(barred).is_set()
        })
    }

    /// Membership in the diagram set for the coloring: the content is the full
    /// two-sided palette and no block repeats a barred letter.
    pub fn is_diagram(&self, kappa: &Coloring) -> bool {
        self.content() == two_sided_palette(kappa) && self.barred_letters_distinct()
    }

    /// The restriction: blocks occurring more than once must contain an even
    /// number of barred letters.
    pub fn is_restricted(&self) -> bool {
        let mut i = 0;
        while i < self.blocks.len() {
            let mut j = i + 1;
            while j < self.blocks.len() && self.blocks[j] == self.blocks[i] {
                j += 1;
            }
            if j - i >= 2 && self.blocks[i].parity() == 1 {
                return false;
            }
            i = j;
        }
        true
    }

    /// Blocks with both an underlined and a non-underlined letter.
    pub fn propagating_blocks(&self) -> Vec<&Multiset> {
        self.blocks
            .iter()
            .filter(|b| b.any_underlined() && !b.all_underlined())
            .collect()
    }

    /// All diagrams for the coloring, as images of set-partition lifts, in
    /// lexicographic order on the canonical form.
    pub fn enumerate_diagrams(kappa: &Coloring) -> Vec<MultisetPartition> {
        let n = kappa.degree();
        let mut seen = BTreeSet::new();
        for lift in SetPartition::diagrams(n) {
            let img = lift.kappa_image(kappa).expect("diagram values lie in the domain");
            if img.barred_letters_distinct() {
                seen.insert(img);
            }
        }
        seen.into_iter().collect()
    }

    /// All restricted diagrams for the coloring.
    pub fn enumerate_restricted(kappa: &Coloring) -> Vec<MultisetPartition> {
        Self::enumerate_diagrams(kappa)
            .into_iter()
            .filter(|m| m.is_restricted())
            .collect()
    }

    /// True when every letter of `self.content()` fits inside the two-sided
    /// palette with multiplicity to spare.
    pub fn content_fits(&self, kappa: &Coloring) -> bool {
        let palette = two_sided_palette(kappa);
        let mut counts: std::collections::BTreeMap<Letter, isize> = Default::default();
        for &l in palette.iter() {
            *counts.entry(l).or_insert(0) += 1;
        }
        for &l in self.content().iter() {
            let c = counts.entry(l).or_insert(0);
            *c -= 1;
            if *c < 0 {
                return false;
            }
        }
        true
    }

    /// The canonical set-partition lift: blocks in last-letter order receive,
    /// color by color, the preimage values in increasing order. The content
    /// may be any sub-multiset of the two-sided palette (tableau contents
    /// live on the top side only).
    pub fn standardize(&self, kappa: &Coloring) -> Result<SetPartition> {
        SetPartition::new(self.standardize_blocks(kappa)?)
    }

    /// The lifted blocks of [`standardize`](Self::standardize), aligned
    /// positionally with `self.blocks()`. Equal blocks receive their lifts in
    /// increasing order.
    pub fn standardize_blocks(&self, kappa: &Coloring) -> Result<Vec<Multiset>> {
        if !self.content_fits(kappa) || !self.barred_letters_distinct() {
            return Err(Error::invalid(format!(
                "{self} does not embed in the palette of the coloring a={:?}, b={:?}",
                kappa.a, kappa.b
            )));
        }
        let mut queues = PreimageQueues::new(kappa);
        Ok(self
            .blocks
            .iter()
            .map(|b| Multiset::new(b.iter().map(|&l| queues.next_value(l)).collect()))
            .collect())
    }
}

/// All partitions of a multiset of letters into nonempty blocks, skipping any
/// block that repeats a barred letter. Generated with blocks in weakly
/// decreasing last-letter order, each block anchored on the largest remaining
/// letter, so every partition appears exactly once.
pub fn partitions_of_multiset(palette: &Multiset) -> Vec<MultisetPartition> {
    fn sub_blocks(remaining: &Multiset, bound: Option<&Multiset>) -> Vec<Multiset> {
        // Candidate blocks: contain one copy of the max remaining letter,
        // respect the bound, keep barred letters distinct.
        let Some(top) = remaining.max() else {
            return Vec::new();
        };
        let mut distinct: Vec<(Letter, usize)> = Vec::new();
        for &l in remaining.iter() {
            match distinct.last_mut() {
                Some((d, c)) if *d == l => *c += 1,
                _ => distinct.push((l, 1)),
            }
        }
        let mut out = Vec::new();
        let mut picks = vec![0usize; distinct.len()];
        fn go(
            i: usize,
            distinct: &[(Letter, usize)],
            picks: &mut Vec<usize>,
            top: Letter,
            out: &mut Vec<Multiset>,
        ) {
            if i == distinct.len() {
                let letters: Vec<Letter> = distinct
                    .iter()
                    .zip(picks.iter())
                    .flat_map(|(&(l, _), &k)| std::iter::repeat(l).take(k))
                    .collect();
                if letters.is_empty() {
                    return;
                }
                let m = Multiset::new(letters);
                if Multiset::max(&m) != Some(top) {
                    return;
                }
                out.push(m);
                return;
            }
            let (l, avail) = distinct[i];
            let cap = if l.barred { avail.min(1) } else { avail };
            for k in 0..=cap {
                picks[i] = k;
                go(i + 1, distinct, picks, top, out);
            }
            picks[i] = 0;
        }
        go(0, &distinct, &mut picks, top, &mut out);
        if let Some(bound) = bound {
            out.retain(|m| m <= bound);
        }
        out
    }

    fn recurse(
        remaining: &Multiset,
        bound: Option<&Multiset>,
        acc: &mut Vec<Multiset>,
        out: &mut Vec<MultisetPartition>,
    ) {
        if remaining.is_empty() {
            out.push(MultisetPartition::new(acc.clone()));
            return;
        }
        for block in sub_blocks(remaining, bound) {
            let mut rest: Vec<Letter> = remaining.letters().to_vec();
            for &l in block.iter() {
                let pos = rest.iter().position(|&x| x == l).expect("block drawn from remaining");
                rest.remove(pos);
            }
            let rest = Multiset::new(rest);
            acc.push(block.clone());
            recurse(&rest, Some(&block), acc, out);
            acc.pop();
        }
    }

    let mut out = Vec::new();
    recurse(palette, None, &mut Vec::new(), &mut out);
    out
}

/// Preimage values of each colored letter, handed out in increasing order.
struct PreimageQueues {
    next: std::collections::BTreeMap<Letter, u32>,
    hi: std::collections::BTreeMap<Letter, u32>,
}

impl PreimageQueues {
    fn new(kappa: &Coloring) -> Self {
        let mut next = std::collections::BTreeMap::new();
        let mut hi = std::collections::BTreeMap::new();
        let r: usize = kappa.a.iter().sum();
        let mut acc = 0u32;
        for (t, &part) in kappa.a.iter().enumerate() {
            let color = Letter::plain((t + 1) as u32);
            next.insert(color, acc + 1);
            hi.insert(color, acc + part as u32);
            acc += part as u32;
        }
        let mut acc = r as u32;
        for (t, &part) in kappa.b.iter().enumerate() {
            let color = Letter::barred((t + 1) as u32);
            next.insert(color, acc + 1);
            hi.insert(color, acc + part as u32);
            acc += part as u32;
        }
        // Underlined colors draw from their own copies of the same ranges.
        for (color, lo) in next.clone() {
            next.insert(color.underlined(), lo);
        }
        for (color, h) in hi.clone() {
            hi.insert(color.underlined(), h);
        }
        PreimageQueues { next, hi }
    }

    fn next_value(&mut self, color: Letter) -> Letter {
        let v = *self.next.get(&color).expect("color present in palette");
        debug_assert!(v <= *self.hi.get(&color).unwrap());
        self.next.insert(color, v + 1);
        Letter { value: v, barred: false, underlined: color.underlined }
    }
}

/// The palette together with its underlined copy.
pub fn two_sided_palette(kappa: &Coloring) -> Multiset {
    let top = kappa.full_palette();
    let bottom = top.map(|l| l.underlined());
    top.union(&bottom)
}

impl fmt::Display for MultisetPartition {
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

impl fmt::Debug for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
