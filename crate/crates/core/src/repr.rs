//! Modules over the two algebras: the diagram action on tableaux with
//! set-partition content, the straightening algorithm onto the standard
//! basis, its signed-average counterpart onto the semistandard basis, and
//! exact dimension checks against brute-force projected spans.
//!
//! Working vectors live at two levels. At the *lift* level a tableau has
//! set-partition content of `{1..r}` and spans `P^λ`; at the *palette*
//! level the boxes hold colored multisets and span `MP^λ`. The bridge is
//! the signed group average `e = (1/|G|) Σ sgn(τ) ℒ_{στ}` over the Young
//! group `G = S_a × S_b` of value relabelings: every palette tableau `T̃`
//! yields `y_T̃ = e·v_T` for its standardized lift `T`, and any other lift
//! reaches the same vector up to the sign of the barred relabeling factor.

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigInt, BigRational, Integer, One, Zero};

use crate::algebra::MPElement;
use crate::letter::{Letter, Multiset};
use crate::msetpart::MultisetPartition;
use crate::partitions::{is_partition, partition_sum, Coloring, Partition};
use crate::perm::{Permutation, YoungGroup};
use crate::setpart::SetPartition;
use crate::tableau::{enumerate_smt, enumerate_ssmt, shape_of_label, MPTableau, TabClass};
use crate::uf::UnionFind;
use crate::{Error, Result};

/// A finite rational combination of same-shape tableaux. The specialization
/// is carried along: the shape is a partition of `n`, and dead loops formed
/// during the diagram action scale by `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    n: i64,
    shape: Partition,
    terms: BTreeMap<MPTableau, BigRational>,
}

impl ModuleVector {
    pub fn zero(shape: Partition) -> Self {
        ModuleVector {
            n: partition_sum(&shape) as i64,
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(t: MPTableau) -> Self {
        let mut v = ModuleVector::zero(t.shape());
        v.terms.insert(t, BigRational::one());
        v
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn terms(&self) -> &BTreeMap<MPTableau, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &MPTableau) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, t: MPTableau, c: BigRational) -> Result<()> {
        if t.shape() != self.shape {
            return Err(Error::invalid(format!(
                "term shape {:?} does not match vector shape {:?}",
                t.shape(),
                self.shape
            )));
        }
        let entry = self.terms.entry(t).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        if self.shape != other.shape {
            return Err(Error::invalid("cannot add vectors of different shapes".to_string()));
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.shape.clone());
        }
        ModuleVector {
            n: self.n,
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * c)).collect(),
        }
    }
}

/// Degree of a set-partition content: the blocks must tile `{1..r}` with
/// plain letters, each value exactly once.
fn set_partition_degree(content: &MultisetPartition) -> Result<usize> {
    let ground = content.content();
    let r = ground.len();
    let expected: Vec<Letter> = (1..=r as u32).map(Letter::plain).collect();
    if ground.letters() != expected.as_slice() {
        return Err(Error::invalid(
            "tableau content is not a set partition of {1..r}".to_string(),
        ));
    }
    Ok(r)
}

/// Act by a set-partition diagram on a basis tableau with set-partition
/// content. The diagram's blocks glue to the boxes through the underlined
/// letters; each connected component is then read off: a box above row 1
/// keeps its position and receives the component's top values, boxes in
/// row 1 dissolve, top values with no surviving box open a new row-1 box,
/// and a valueless component with no box above row 1 becomes a dead loop.
///
/// Returns `None` when the action is zero — two boxes above row 1 fall into
/// one component, or such a box receives no values — and otherwise the
/// relabeled tableau with the number of dead loops, each worth a factor `n`.
pub fn act_on_smt(pi: &SetPartition, t: &MPTableau) -> Result<Option<(MPTableau, usize)>> {
    let r = set_partition_degree(&t.content())?;
    if !pi.is_diagram(r) {
        return Err(Error::invalid(format!("not a diagram on 2·{r} elements")));
    }
    let boxes: Vec<((usize, usize), Multiset)> =
        t.boxes().map(|(p, m)| (p, m.clone())).collect();
    let nb = boxes.len();
    let pblocks = pi.blocks();
    let mut box_of_value = vec![usize::MAX; r + 1];
    for (k, (_, m)) in boxes.iter().enumerate() {
        for l in m.iter() {
            box_of_value[l.value as usize] = k;
        }
    }
    let mut uf = UnionFind::new(nb + pblocks.len());
    for (bi, block) in pblocks.iter().enumerate() {
        for l in block.iter() {
            if l.underlined {
                uf.union(nb + bi, box_of_value[l.value as usize]);
            }
        }
    }
    let mut dead = 0usize;
    let mut above: BTreeMap<(usize, usize), Multiset> = BTreeMap::new();
    let mut row1: Vec<Multiset> = Vec::new();
    for class in uf.classes() {
        let mut top = Multiset::empty();
        let mut high: Vec<(usize, usize)> = Vec::new();
        for id in class {
            if id < nb {
                let pos = boxes[id].0;
                if pos.0 > 0 {
                    high.push(pos);
                }
            } else {
                for l in pblocks[id - nb].iter() {
                    if !l.underlined {
                        top.insert(Letter::plain(l.value));
                    }
                }
            }
        }
        match (high.len(), top.is_empty()) {
            (2.., _) | (1, true) => return Ok(None),
            (1, false) => {
                above.insert(high[0], top);
            }
            (0, true) => dead += 1,
            (0, false) => row1.push(top),
        }
    }
    let shape = t.shape();
    let lambda2 = shape.get(1).copied().unwrap_or(0);
    row1.sort();
    if row1.len() + lambda2 > shape[0] {
        return Err(Error::invalid(
            "row 1 cannot absorb the loose blocks at this specialization".to_string(),
        ));
    }
    let mut rows: Vec<Vec<Option<Multiset>>> = Vec::with_capacity(shape.len());
    rows.push(
        vec![None; shape[0] - row1.len()]
            .into_iter()
            .chain(row1.into_iter().map(Some))
            .collect(),
    );
    for (i, len) in shape.iter().enumerate().skip(1) {
        rows.push(
            (0..*len)
                .map(|j| {
                    Some(above.remove(&(i, j)).expect("boxes above row 1 survive a nonzero action"))
                })
                .collect(),
        );
    }
    Ok(Some((MPTableau::new(rows)?, dead)))
}

fn box_labels(kappa: &Coloring, t: &MPTableau) -> Result<Vec<Vec<Option<Multiset>>>> {
    t.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| match c {
                    None => Ok(None),
                    Some(m) => kappa.apply_multiset(m).map(Some),
                })
                .collect()
        })
        .collect()
}

fn repeated_barred(m: &Multiset) -> bool {
    m.letters().windows(2).any(|w| w[0] == w[1] && w[0].barred)
}

/// Sign of a sequence of distinct indices read as a permutation.
fn perm_sign(order: &[usize]) -> i8 {
    let mut inv = 0usize;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The κ-level straightening engine. Terms are kept as canonical lifts —
/// the standardized lift of the term's κ-image, with row 1 in the
/// standardization's order — and coefficients carry the sign of the barred
/// relabeling factor needed to reach the stored lift from the pushed one.
struct Straightener<'k> {
    kappa: &'k Coloring,
    state: BTreeMap<MPTableau, BigRational>,
}

enum Rewrite {
    Swap(usize, usize),
    Garnir(usize, usize),
}

impl<'k> Straightener<'k> {
    fn new(kappa: &'k Coloring) -> Self {
        Straightener {
            kappa,
            state: BTreeMap::new(),
        }
    }

    /// A pushed term dies when its signed average is visibly zero: some box
    /// holds two values of one barred color, two κ-equal even blocks share
    /// a column, or two κ-equal odd blocks sit in row 1. Each case hides a
    /// relabeling of negative barred sign fixing the vector.
    fn is_killed(&self, labels: &[Vec<Option<Multiset>>]) -> bool {
        for row in labels {
            for m in row.iter().flatten() {
                if repeated_barred(m) {
                    return true;
                }
            }
        }
        let width = labels[0].len();
        for j in 0..width {
            let col: Vec<&Multiset> = labels
                .iter()
                .filter_map(|row| row.get(j).and_then(|c| c.as_ref()))
                .collect();
            for (x, y) in col.iter().tuple_combinations() {
                if x == y && x.parity() == 0 {
                    return true;
                }
            }
        }
        let bottom: Vec<&Multiset> = labels[0].iter().flatten().collect();
        for (x, y) in bottom.iter().tuple_combinations() {
            if x == y && x.parity() == 1 {
                return true;
            }
        }
        false
    }

    /// Canonical form of a lift-level tableau: `None` when killed, otherwise
    /// the standardized lift of its κ-image together with the sign of the
    /// barred factor of a value relabeling carrying the canonical lift to
    /// the input. The sign does not depend on the choice of carrier: an
    /// ambiguity would need a sign-reversing stabilizer, and those are
    /// exactly the killed terms.
    fn canonical_of(&self, u: &MPTableau) -> Result<Option<(MPTableau, i8)>> {
        let labels = box_labels(self.kappa, u)?;
        if self.is_killed(&labels) {
            return Ok(None);
        }
        // Row 1 sorted by (κ-label, lift): the κ-image below is then sorted,
        // so taking it preserves every box position.
        let mut row1: Vec<(Multiset, Multiset)> = u.rows()[0]
            .iter()
            .zip(labels[0].iter())
            .filter_map(|(c, l)| c.clone().map(|m| (l.clone().unwrap(), m)))
            .collect();
        row1.sort();
        let empties = u.rows()[0].len() - row1.len();
        let mut rows: Vec<Vec<Option<Multiset>>> = vec![vec![None; empties]
            .into_iter()
            .chain(row1.into_iter().map(|(_, m)| Some(m)))
            .collect()];
        rows.extend(u.rows().iter().skip(1).cloned());
        let u1 = MPTableau::new(rows)?;
        let ktab = u1.kappa_image(self.kappa)?;
        let vstd = ktab.standardize(self.kappa)?;
        // Carrier: boxes above row 1 correspond by position; row-1 lifts
        // pair up inside each κ-class, sorted order to sorted order.
        let r = self.kappa.degree();
        let mut g = vec![0usize; r + 1];
        for i in 1..u1.rows().len() {
            for j in 0..u1.rows()[i].len() {
                self.match_values(vstd.cell(i, j).unwrap(), u1.cell(i, j).unwrap(), &mut g)?;
            }
        }
        let mut from: BTreeMap<Multiset, Vec<&Multiset>> = BTreeMap::new();
        for m in vstd.rows()[0].iter().flatten() {
            from.entry(self.kappa.apply_multiset(m)?).or_default().push(m);
        }
        let mut to: BTreeMap<Multiset, Vec<&Multiset>> = BTreeMap::new();
        for m in u1.rows()[0].iter().flatten() {
            to.entry(self.kappa.apply_multiset(m)?).or_default().push(m);
        }
        for (label, vs) in from {
            let us = to
                .remove(&label)
                .expect("κ-images of a tableau and its standardization agree");
            for (v, u) in vs.into_iter().zip(us) {
                self.match_values(v, u, &mut g)?;
            }
        }
        let lo = self.kappa.top_degree() + 1;
        let seq: Vec<usize> = (lo..=r).map(|v| g[v]).collect();
        Ok(Some((vstd, perm_sign(&seq))))
    }

    /// Extend the value map by the color-preserving matching of two κ-equal
    /// blocks: inside each color the values pair off in increasing order.
    fn match_values(&self, from: &Multiset, to: &Multiset, g: &mut [usize]) -> Result<()> {
        let mut fv: BTreeMap<Letter, Vec<u32>> = BTreeMap::new();
        for l in from.iter() {
            fv.entry(self.kappa.color_of_value(l.value as usize)?)
                .or_default()
                .push(l.value);
        }
        let mut tv: BTreeMap<Letter, Vec<u32>> = BTreeMap::new();
        for l in to.iter() {
            tv.entry(self.kappa.color_of_value(l.value as usize)?)
                .or_default()
                .push(l.value);
        }
        for (color, fs) in fv {
            let ts = tv
                .remove(&color)
                .expect("κ-equal blocks share their color profile");
            for (a, b) in fs.into_iter().zip(ts) {
                g[a as usize] = b as usize;
            }
        }
        Ok(())
    }

    fn push(&mut self, u: &MPTableau, c: &BigRational) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if let Some((key, s)) = self.canonical_of(u)? {
            let w = if s < 0 { -c.clone() } else { c.clone() };
            self.accumulate(key, w);
        }
        Ok(())
    }

    fn accumulate(&mut self, key: MPTableau, w: BigRational) {
        let entry = self.state.entry(key).or_insert_with(BigRational::zero);
        *entry += w;
        if entry.is_zero() {
            let k = self
                .state
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = k {
                self.state.remove(&k);
            }
        }
    }

    /// First strict κ-decrease up a column, lowest row then leftmost. Row 1
    /// never participates: its boxes sit right of the empty prefix, where no
    /// higher row reaches.
    fn first_column_inversion(labels: &[Vec<Option<Multiset>>]) -> Option<(usize, usize)> {
        for i in 0..labels.len().saturating_sub(1) {
            for j in 0..labels[i + 1].len() {
                if let (Some(lo), Some(hi)) = (&labels[i][j], &labels[i + 1][j]) {
                    if lo > hi {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    /// First violation along a row above row 1: a strict κ-decrease, or a
    /// κ-equal adjacent pair of odd parity.
    fn first_row_violation(labels: &[Vec<Option<Multiset>>]) -> Option<(usize, usize)> {
        for (i, row) in labels.iter().enumerate().skip(1) {
            for j in 0..row.len().saturating_sub(1) {
                let (a, b) = (row[j].as_ref().unwrap(), row[j + 1].as_ref().unwrap());
                if a > b || (a == b && a.parity() == 1) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn run(&mut self) -> Result<()> {
        let mut budget = 200_000usize;
        loop {
            let mut found: Option<(MPTableau, Rewrite)> = None;
            for key in self.state.keys() {
                let labels = box_labels(self.kappa, key)?;
                if let Some((i, j)) = Self::first_column_inversion(&labels) {
                    found = Some((key.clone(), Rewrite::Swap(i, j)));
                    break;
                }
                if let Some((i, j)) = Self::first_row_violation(&labels) {
                    found = Some((key.clone(), Rewrite::Garnir(i, j)));
                    break;
                }
            }
            let Some((key, rw)) = found else {
                return Ok(());
            };
            assert!(budget > 0, "straightening exceeded its rewrite budget");
            budget -= 1;
            let c = self.state.remove(&key).expect("key was drawn from the state");
            match rw {
                Rewrite::Swap(i, j) => {
                    let mut rows: Vec<Vec<Option<Multiset>>> = key.rows().to_vec();
                    let upper = rows[i + 1][j].take();
                    rows[i + 1][j] = std::mem::replace(&mut rows[i][j], upper);
                    self.push(&MPTableau::new(rows)?, &-c)?;
                }
                Rewrite::Garnir(i, j) => self.garnir(&key, &c, i, j)?,
            }
        }
    }

    /// The Garnir relation at a row violation in row `i` between columns `j`
    /// and `j+1`: the alternating sum over all redistributions of the upper
    /// part of column `j` and the lower part of column `j+1` vanishes. Terms
    /// folding back onto the key's own κ-class are collected on the left;
    /// the rest move to strictly column-dominance-larger classes. Any coset
    /// representative works, since rearranging within a column scales the
    /// vector and the permutation sign by the same unit.
    fn garnir(&mut self, key: &MPTableau, c: &BigRational, i: usize, j: usize) -> Result<()> {
        let rows = key.rows();
        let mut pos: Vec<(usize, usize)> = Vec::new();
        let mut up = i;
        while up < rows.len() && rows[up].len() > j {
            pos.push((up, j));
            up += 1;
        }
        let asz = pos.len();
        for low in 1..=i {
            pos.push((low, j + 1));
        }
        let m = pos.len();
        let contents: Vec<Multiset> = pos
            .iter()
            .map(|&(a, b)| key.cell(a, b).unwrap().clone())
            .collect();
        let mut fold = 0i64;
        let mut rest: Vec<(MPTableau, i64)> = Vec::new();
        for x in (0..m).combinations(asz) {
            let mut order = x.clone();
            order.extend((0..m).filter(|s| !x.contains(s)));
            let sgn = perm_sign(&order);
            let mut arranged = rows.to_vec();
            for (slot, &src) in order.iter().enumerate() {
                let (a, b) = pos[slot];
                arranged[a][b] = Some(contents[src].clone());
            }
            match self.canonical_of(&MPTableau::new(arranged)?)? {
                None => {}
                Some((k2, s2)) => {
                    let w = (sgn * s2) as i64;
                    if k2 == *key {
                        fold += w;
                    } else {
                        rest.push((k2, w));
                    }
                }
            }
        }
        assert!(fold != 0, "Garnir fold-back coefficient vanished");
        let scale = -c / BigRational::from_integer(BigInt::from(fold));
        for (k2, w) in rest {
            self.accumulate(k2, &scale * BigRational::from_integer(BigInt::from(w)));
        }
        Ok(())
    }

    /// Read the settled state off as a vector over κ-level tableaux. Every
    /// remaining key is rewrite-free, so its κ-image is semistandard.
    fn into_vector(self, shape: &Partition) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(shape.clone());
        for (key, c) in self.state {
            let ktab = key.kappa_image(self.kappa)?;
            debug_assert!(ktab.is_ssmt_filling());
            out.add_term(ktab, c)?;
        }
        Ok(out)
    }
}

/// Straighten a vector over tableaux with set-partition content onto the
/// standard basis: sorting a column collects a sign, and the Garnir
/// relation trades a row decrease for strictly column-dominance-larger
/// tableaux. Realized as the κ-level engine under the identity coloring,
/// where every value is its own plain color and no kill rule can fire.
pub fn straighten_smt(v: &ModuleVector) -> Result<ModuleVector> {
    let Some(first) = v.terms.keys().next() else {
        return Ok(v.clone());
    };
    let r = set_partition_degree(&first.content())?;
    for key in v.terms.keys() {
        if set_partition_degree(&key.content())? != r {
            return Err(Error::invalid("terms with mixed content degrees".to_string()));
        }
    }
    let kappa = Coloring::new(vec![1; r], vec![]);
    let mut st = Straightener::new(&kappa);
    for (t, c) in &v.terms {
        st.push(t, c)?;
    }
    st.run()?;
    st.into_vector(&v.shape)
}

/// The signed-average vector `y_T̃ = e·v_T` of a multiset tableau, expanded
/// over the semistandard basis. Zero exactly when a kill rule fires, in
/// particular whenever a column repeats an even block.
pub fn y_vector(tt: &MPTableau, kappa: &Coloring) -> Result<ModuleVector> {
    if !tt.classify(kappa).contains(&TabClass::MT) {
        return Err(Error::invalid(
            "not a multiset tableau for this profile".to_string(),
        ));
    }
    let mut st = Straightener::new(kappa);
    st.push(&tt.standardize(kappa)?, &BigRational::one())?;
    st.run()?;
    st.into_vector(&tt.shape())
}

/// Straighten a vector over palette-level tableaux onto the semistandard
/// basis. Agrees with lifting each term, projecting by the signed group
/// average, and straightening classically.
pub fn straighten_ssmt(v: &ModuleVector, kappa: &Coloring) -> Result<ModuleVector> {
    let mut st = Straightener::new(kappa);
    for (t, c) in &v.terms {
        if !t.content().barred_letters_distinct() {
            continue;
        }
        st.push(&t.standardize(kappa)?, c)?;
    }
    st.run()?;
    st.into_vector(&v.shape)
}

/// Brute-force signed group average `e·v_T`: relabel by every element of
/// `S_a × S_b`, weight by the sign of the barred factor, and straighten
/// classically. Independent of the κ-level kill and carrier rules.
pub fn ev_oracle(t: &MPTableau, kappa: &Coloring) -> Result<ModuleVector> {
    let r = kappa.degree();
    if set_partition_degree(&t.content())? != r {
        return Err(Error::invalid("content degree does not match the profile".to_string()));
    }
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let inv = BigRational::new(BigInt::one(), BigInt::from(group.order()));
    let identity = Coloring::new(vec![1; r], vec![]);
    let mut st = Straightener::new(&identity);
    for (g, sg) in group.elements() {
        let relabeled = relabel_tableau(t, &g)?;
        let c = if sg < 0 { -inv.clone() } else { inv.clone() };
        st.push(&relabeled, &c)?;
    }
    st.run()?;
    st.into_vector(&t.shape())
}

/// Relabel every value through a permutation, keeping box positions.
fn relabel_tableau(t: &MPTableau, g: &Permutation) -> Result<MPTableau> {
    let rows = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    c.as_ref()
                        .map(|m| m.map(|l| Letter::plain(g.apply(l.value as usize - 1) as u32 + 1)))
                })
                .collect()
        })
        .collect();
    MPTableau::new(rows)
}

/// Act by an element of the multiset partition algebra on a vector over the
/// semistandard basis: each diagram standardizes to a set partition, the
/// signed average over the Young group is pushed through the set-partition
/// action on standardized lifts, and the result is straightened back onto
/// the semistandard basis. Dead loops contribute factors of `n`.
pub fn mp_act(d: &MPElement, v: &ModuleVector) -> Result<ModuleVector> {
    let kappa = d.kappa();
    let r = kappa.degree();
    let n = v.n();
    let palette = kappa.full_palette();
    for key in v.terms.keys() {
        if key.content().content() != palette {
            return Err(Error::invalid(
                "vector content does not match the element's profile".to_string(),
            ));
        }
    }
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let elems = group.elements();
    let inv = BigRational::new(BigInt::one(), BigInt::from(group.order()));
    let identity = Permutation::identity(r);
    let nrat = BigRational::from_integer(BigInt::from(n));
    let mut st = Straightener::new(kappa);
    for (pihat, poly) in d.terms() {
        let pi = pihat.standardize(kappa)?;
        let base = poly.evaluate_int(n);
        if base.is_zero() {
            continue;
        }
        for (tt, q) in &v.terms {
            let lift = tt.standardize(kappa)?;
            let c0 = &base * q * &inv;
            for (g, sg) in &elems {
                let rho = pi.act(&identity, g);
                if let Some((t2, dead)) = act_on_smt(&rho, &lift)? {
                    let mut w = c0.clone();
                    for _ in 0..dead {
                        w *= &nrat;
                    }
                    if *sg < 0 {
                        w = -w;
                    }
                    st.push(&t2, &w)?;
                }
            }
        }
    }
    st.run()?;
    st.into_vector(&v.shape)
}

/// Dimension of the simple module with inner shape `mu`: the count of
/// semistandard multiset tableaux, taken at the stable specialization
/// `n = 2(|a|+|b|)`.
pub fn module_dimension(mu: &[usize], kappa: &Coloring) -> Result<usize> {
    if !is_partition(mu) {
        return Err(Error::invalid(format!("{mu:?} is not a partition")));
    }
    let r = kappa.degree();
    if r > 6 {
        return Err(Error::ResourceBound(format!(
            "module dimensions for |a|+|b| = {r} (tableau counts grow fast; limit 6)"
        )));
    }
    if partition_sum(mu) > r {
        return Ok(0);
    }
    Ok(enumerate_ssmt(2 * r, mu, kappa).len())
}

/// Rank of the projected span `{e·v_T : T standard}` inside the standard
/// basis, by exact fraction-free elimination. Equals the module dimension.
pub fn module_rank_oracle(mu: &[usize], kappa: &Coloring) -> Result<usize> {
    if !is_partition(mu) {
        return Err(Error::invalid(format!("{mu:?} is not a partition")));
    }
    let r = kappa.degree();
    if partition_sum(mu) > r {
        return Ok(0);
    }
    let lambda = shape_of_label(2 * r, mu);
    let basis = enumerate_smt(&lambda, r);
    let index: BTreeMap<&MPTableau, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut mat = Vec::with_capacity(basis.len());
    for t in &basis {
        let w = ev_oracle(t, kappa)?;
        let mut row = vec![BigRational::zero(); basis.len()];
        for (k, c) in w.terms() {
            row[*index.get(k).expect("straightened keys are standard")] = c.clone();
        }
        mat.push(row);
    }
    Ok(rational_rank(mat))
}

/// Matrix of an algebra element on the semistandard basis of the module
/// with inner shape `mu` at specialization `n`, one column per basis
/// vector. The basis is returned alongside in its enumeration order.
pub fn mp_action_matrix(
    d: &MPElement,
    mu: &[usize],
    n: i64,
) -> Result<(Vec<MPTableau>, Vec<Vec<BigRational>>)> {
    let basis = enumerate_ssmt(n as usize, mu, d.kappa());
    let index: BTreeMap<&MPTableau, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let cols = crate::par::try_par_map(&basis, |t| {
        let w = mp_act(d, &ModuleVector::basis(t.clone()))?;
        let mut col = vec![BigRational::zero(); basis.len()];
        for (k, c) in w.terms() {
            col[*index.get(k).expect("straightened keys are semistandard")] = c.clone();
        }
        Ok(col)
    })?;
    Ok((basis, cols))
}

fn rational_rank(mat: Vec<Vec<BigRational>>) -> usize {
    let m: Vec<Vec<BigInt>> = mat
        .into_iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.into_iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    integer_rank(m)
}

/// Fraction-free Bareiss elimination; every division is exact.
fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..rows {
            for jc in col + 1..cols {
                m[i][jc] = (&m[rank][col] * &m[i][jc] - &m[i][col] * &m[rank][jc]) / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
