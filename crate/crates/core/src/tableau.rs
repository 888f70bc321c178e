//! Multiset-partition tableaux: the tableau classes (standard, semistandard,
//! and the singleton-block variant), standardization of fillings, the column
//! dominance order, and enumeration.
//!
//! Rows are stored bottom-to-top: `rows[0]` is row 1, the longest row. Empty
//! cells appear only as a prefix of row 1 and are stored explicitly, so a
//! shape `λ ⊢ n` always carries exactly `n` cells.

use crate::letter::{Letter, Multiset};
use crate::msetpart::{partitions_of_multiset, MultisetPartition};
use crate::partitions::{is_partition, Coloring, Partition};
use crate::setpart::SetPartition;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Tableau classes recognized by [`MPTableau::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TabClass {
    /// Content partitions the full palette of the coloring, with at least
    /// `λ₂` empty cells leading row 1.
    MT,
    /// Set-partition content with strict row and column increase.
    SMT,
    /// Weak row/column increase; identical even blocks never share a column,
    /// identical odd blocks never share a row.
    SSMT,
    /// SSMT with every block a singleton.
    SSMTPrime,
}

/// Outcome of a column dominance comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomCmp {
    Equal,
    Less,
    Greater,
    Incomparable,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPTableau {
    rows: Vec<Vec<Option<Multiset>>>,
}

impl MPTableau {
    pub fn new(rows: Vec<Vec<Option<Multiset>>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        if !is_partition(&shape) {
            return Err(Error::invalid(format!(
                "row lengths {shape:?} do not weakly decrease upward"
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let empties = row.iter().take_while(|c| c.is_none()).count();
            if row.iter().skip(empties).any(|c| c.is_none()) {
                return Err(Error::invalid(
                    "empty cells must form a prefix of their row".to_string(),
                ));
            }
            if i > 0 && empties > 0 {
                return Err(Error::invalid(
                    "empty cells may appear only in row 1".to_string(),
                ));
            }
        }
        Ok(MPTableau { rows })
    }

    /// Tableau with the given shape: `boxes` lists the nonempty cells of row 1
    /// (in order, after the empty prefix) followed by full rows 2, 3, ...
    pub fn from_rows(rows: Vec<Vec<Multiset>>, lambda1: usize) -> Result<Self> {
        let mut out: Vec<Vec<Option<Multiset>>> = Vec::new();
        for (i, row) in rows.into_iter().enumerate() {
            if i == 0 {
                if row.len() > lambda1 {
                    return Err(Error::invalid("row 1 longer than λ₁".to_string()));
                }
                let mut r: Vec<Option<Multiset>> = vec![None; lambda1 - row.len()];
                r.extend(row.into_iter().map(Some));
                out.push(r);
            } else {
                out.push(row.into_iter().map(Some).collect());
            }
        }
        MPTableau::new(out)
    }

    pub fn shape(&self) -> Partition {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Total number of cells, empty cells included.
    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Option<Multiset>>] {
        &self.rows
    }

    /// Cell at (row, col), both 0-based from the bottom-left; `None` for an
    /// empty cell or out of range.
    pub fn cell(&self, i: usize, j: usize) -> Option<&Multiset> {
        self.rows.get(i)?.get(j)?.as_ref()
    }

    pub fn empty_count(&self) -> usize {
        self.rows[0].iter().filter(|c| c.is_none()).count()
    }

    /// Nonempty cells with their coordinates, row-major from the bottom.
    pub fn boxes(&self) -> impl Iterator<Item = ((usize, usize), &Multiset)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(j, c)| c.as_ref().map(|m| ((i, j), m)))
        })
    }

    pub fn content(&self) -> MultisetPartition {
        MultisetPartition::new(self.boxes().map(|(_, m)| m.clone()).collect())
    }

    fn rows_monotone(&self, strict: bool) -> bool {
        self.rows.iter().all(|row| {
            row.iter()
                .filter_map(|c| c.as_ref())
                .collect::<Vec<_>>()
                .windows(2)
                .all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] })
        })
    }

    fn cols_monotone(&self, strict: bool) -> bool {
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                let above = self.rows[i][j].as_ref();
                let below = self.rows[i - 1][j].as_ref();
                let ok = match (below, above) {
                    (None, Some(_)) => true,
                    (Some(b), Some(a)) => {
                        if strict {
                            b < a
                        } else {
                            b <= a
                        }
                    }
                    (_, None) => unreachable!("empty cells live in row 1 only"),
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// The parity-dependent repeat rules: identical even blocks may not share
    /// a column, identical odd blocks may not share a row. Weak monotonicity
    /// makes any same-line repeat adjacent, so adjacency checks suffice.
    fn repeat_rules_hold(&self) -> bool {
        for row in &self.rows {
            let cells: Vec<&Multiset> = row.iter().filter_map(|c| c.as_ref()).collect();
            for w in cells.windows(2) {
                if w[0] == w[1] && w[0].parity() == 1 {
                    return false;
                }
            }
        }
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                if let (Some(b), Some(a)) = (self.rows[i - 1][j].as_ref(), self.rows[i][j].as_ref())
                {
                    if b == a && b.parity() == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when the content is a set partition of `{1..r}`: plain letters,
    /// each value exactly once.
    fn content_is_set_partition(&self) -> bool {
        let content = self.content().content();
        let r = content.len();
        let expected: Vec<Letter> = (1..=r as u32).map(Letter::plain).collect();
        content.letters() == expected.as_slice()
    }

    pub fn classify(&self, kappa: &Coloring) -> BTreeSet<TabClass> {
        let mut out = BTreeSet::new();
        let shape = self.shape();
        let lambda2 = shape.get(1).copied().unwrap_or(0);
        let content = self.content();
        if content.content() == kappa.full_palette()
            && content.barred_letters_distinct()
            && self.empty_count() >= lambda2
        {
            out.insert(TabClass::MT);
        }
        if self.content_is_set_partition() && self.rows_monotone(true) && self.cols_monotone(true) {
            out.insert(TabClass::SMT);
        }
        if content.barred_letters_distinct()
            && self.rows_monotone(false)
            && self.cols_monotone(false)
            && self.repeat_rules_hold()
        {
            out.insert(TabClass::SSMT);
            if content.blocks().iter().all(|b| b.len() == 1) {
                out.insert(TabClass::SSMTPrime);
            }
        }
        out
    }

    /// Semistandardness without reference to a coloring (content may be any
    /// sub-palette); used by enumeration and straightening.
    pub fn is_ssmt_filling(&self) -> bool {
        self.content().barred_letters_distinct()
            && self.rows_monotone(false)
            && self.cols_monotone(false)
            && self.repeat_rules_hold()
    }

    pub fn is_smt_filling(&self) -> bool {
        self.content_is_set_partition() && self.rows_monotone(true) && self.cols_monotone(true)
    }

    /// Replace cell contents of the nonempty boxes, keeping shape and empty
    /// prefix, then re-sort row 1's nonempty cells in increasing order.
    fn with_boxes(&self, mut assign: impl FnMut(usize, usize, &Multiset) -> Multiset) -> MPTableau {
        let mut rows: Vec<Vec<Option<Multiset>>> = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            rows.push(
                row.iter()
                    .enumerate()
                    .map(|(j, c)| c.as_ref().map(|m| assign(i, j, m)))
                    .collect(),
            );
        }
        let mut row1: Vec<Multiset> = rows[0].iter().filter_map(|c| c.clone()).collect();
        row1.sort();
        let empties = rows[0].len() - row1.len();
        rows[0] = vec![None; empties]
            .into_iter()
            .chain(row1.into_iter().map(Some))
            .collect();
        MPTableau { rows }
    }

    /// The unique standard-content lift: the content is standardized, and
    /// equal blocks hand their lifts to boxes scanned columns right-to-left,
    /// rows bottom-to-top ("weakly to the right and weakly below"). Row 1 is
    /// re-sorted afterwards.
    pub fn standardize(&self, kappa: &Coloring) -> Result<MPTableau> {
        let content = self.content();
        let lifts = content.standardize_blocks(kappa)?;
        // Blocks of `content` are sorted, so equal blocks are adjacent and
        // their lifts increase. Hand lift queues out per distinct block value.
        let mut queues: std::collections::BTreeMap<&Multiset, std::collections::VecDeque<&Multiset>> =
            Default::default();
        for (b, l) in content.blocks().iter().zip(lifts.iter()) {
            queues.entry(b).or_default().push_back(l);
        }
        let mut assignment: std::collections::BTreeMap<(usize, usize), Multiset> = Default::default();
        let max_cols = self.rows[0].len();
        for j in (0..max_cols).rev() {
            for (i, row) in self.rows.iter().enumerate() {
                if let Some(Some(m)) = row.get(j) {
                    let lift = queues
                        .get_mut(m)
                        .and_then(|q| q.pop_front())
                        .expect("every box content appears in the tableau content");
                    assignment.insert((i, j), lift.clone());
                }
            }
        }
        Ok(self.with_boxes(|i, j, _| assignment.remove(&(i, j)).expect("assigned above")))
    }

    /// Apply a coloring to every box.
    pub fn kappa_image(&self, kappa: &Coloring) -> Result<MPTableau> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let mut out = Vec::with_capacity(row.len());
            for c in row {
                out.push(match c {
                    None => None,
                    Some(m) => Some(kappa.apply_multiset(m)?),
                });
            }
            rows.push(out);
        }
        // Row 1 may need re-sorting after collapsing values.
        Ok(MPTableau { rows }.with_boxes(|_, _, m| m.clone()))
    }

    /// Per distinct content block `B̃` in increasing order, the column counts
    /// of nonempty boxes with content `≤ B̃`.
    pub fn alpha_sequences(&self) -> Vec<(Multiset, Vec<usize>)> {
        let content = self.content();
        let mut distinct: Vec<&Multiset> = Vec::new();
        for b in content.blocks() {
            if distinct.last() != Some(&b) {
                distinct.push(b);
            }
        }
        let cols = self.rows[0].len();
        distinct
            .into_iter()
            .map(|bound| {
                let mut alpha = vec![0usize; cols];
                for ((_, j), m) in self.boxes() {
                    if m <= bound {
                        alpha[j] += 1;
                    }
                }
                (bound.clone(), alpha)
            })
            .collect()
    }
}

/// Compare two same-content tableaux in the column dominance order: `Less`
/// when every α-vector of the first is dominated by the second's and at least
/// one strictly. Tableaux with identical α data but different fillings are
/// reported incomparable.
pub fn col_dominance_cmp(s: &MPTableau, t: &MPTableau) -> Result<DomCmp> {
    if s.content() != t.content() {
        return Err(Error::invalid(format!(
            "column dominance compares tableaux of equal content, got {} vs {}",
            s.content(),
            t.content()
        )));
    }
    if s == t {
        return Ok(DomCmp::Equal);
    }
    let alpha_s = s.alpha_sequences();
    let alpha_t = t.alpha_sequences();
    let mut all_leq = true;
    let mut all_geq = true;
    let mut any_strict_leq = false;
    let mut any_strict_geq = false;
    for ((_, a), (_, b)) in alpha_s.iter().zip(alpha_t.iter()) {
        let leq = crate::partitions::dominance_leq(a, b);
        let geq = crate::partitions::dominance_leq(b, a);
        all_leq &= leq;
        all_geq &= geq;
        any_strict_leq |= leq && !geq;
        any_strict_geq |= geq && !leq;
    }
    Ok(match (all_leq && any_strict_leq, all_geq && any_strict_geq) {
        (true, false) => DomCmp::Less,
        (false, true) => DomCmp::Greater,
        _ => DomCmp::Incomparable,
    })
}

/// Fill the nonempty cells of `shape` (after `empties` leading row-1 cells)
/// with the given blocks, one cell at a time in row-major order, keeping rows
/// and columns monotone. `strict` selects the standard (strict) rules; the
/// semistandard rules additionally apply the parity repeat constraints.
fn fillings(
    shape: &[usize],
    empties: usize,
    blocks: &[Multiset],
    strict: bool,
) -> Vec<MPTableau> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .filter(|&(i, j)| i > 0 || j >= empties)
        .collect();
    let mut remaining: Vec<(Multiset, usize)> = Vec::new();
    for b in blocks {
        match remaining.last_mut() {
            Some((m, c)) if m == b => *c += 1,
            _ => remaining.push((b.clone(), 1)),
        }
    }
    let mut grid: Vec<Vec<Option<Multiset>>> =
        shape.iter().map(|&len| vec![None; len]).collect();
    let mut out = Vec::new();
    fn ok_here(
        grid: &[Vec<Option<Multiset>>],
        i: usize,
        j: usize,
        empties: usize,
        m: &Multiset,
        strict: bool,
    ) -> bool {
        let left = if j > 0 { grid[i][j - 1].as_ref() } else { None };
        if let Some(l) = left {
            let row_ok = if strict {
                l < m
            } else {
                l <= m && !(l == m && m.parity() == 1)
            };
            if !row_ok {
                return false;
            }
        } else if i == 0 && j > 0 && j > empties {
            // Cell to the left is an empty cell only inside the prefix.
            unreachable!("row-major fill never leaves gaps");
        }
        if i > 0 {
            match grid[i - 1][j].as_ref() {
                Some(b) => {
                    let col_ok = if strict {
                        b < m
                    } else {
                        b <= m && !(b == m && m.parity() == 0)
                    };
                    if !col_ok {
                        return false;
                    }
                }
                None => {}
            }
        }
        true
    }
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        empties: usize,
        remaining: &mut Vec<(Multiset, usize)>,
        grid: &mut Vec<Vec<Option<Multiset>>>,
        strict: bool,
        out: &mut Vec<MPTableau>,
    ) {
        if idx == cells.len() {
            out.push(
                MPTableau::new(grid.clone()).expect("fill respects shape and prefix"),
            );
            return;
        }
        let (i, j) = cells[idx];
        for k in 0..remaining.len() {
            if remaining[k].1 == 0 {
                continue;
            }
            let m = remaining[k].0.clone();
            if !ok_here(grid, i, j, empties, &m, strict) {
                continue;
            }
            remaining[k].1 -= 1;
            grid[i][j] = Some(m);
            go(idx + 1, cells, empties, remaining, grid, strict, out);
            grid[i][j] = None;
            remaining[k].1 += 1;
        }
    }
    go(0, &cells, empties, &mut remaining, &mut grid, strict, &mut out);
    out
}

/// All standard Young tableaux of the shape: singleton cells `{1} .. {n}`.
pub fn enumerate_syt(shape: &[usize]) -> Vec<MPTableau> {
    let n: usize = shape.iter().sum();
    let blocks: Vec<Multiset> = (1..=n as u32)
        .map(|v| Multiset::singleton(Letter::plain(v)))
        .collect();
    fillings(shape, 0, &blocks, true)
}

/// All standard multiset tableaux of the shape with content a set partition
/// of `{1..r}`.
pub fn enumerate_smt(shape: &[usize], r: usize) -> Vec<MPTableau> {
    let n: usize = shape.iter().sum();
    let ground: Vec<Letter> = (1..=r as u32).map(Letter::plain).collect();
    let mut out = Vec::new();
    for sp in SetPartition::all_of_ground(&ground) {
        out.extend(fillings_of_content(shape, n, sp.blocks(), true));
    }
    out
}

fn fillings_of_content(
    shape: &[usize],
    n: usize,
    blocks: &[Multiset],
    strict: bool,
) -> Vec<MPTableau> {
    let k = blocks.len();
    if k > n {
        return Vec::new();
    }
    let empties = n - k;
    if empties > shape[0] {
        return Vec::new();
    }
    let mut sorted = blocks.to_vec();
    sorted.sort();
    fillings(shape, empties, &sorted, strict)
}

/// The shape labels `λ = (n − |μ|, μ)` admissible at the given `n`: `μ` runs
/// over partitions with `|μ| ≤ max_inner` and `n − |μ| ≥ μ₁`.
pub fn shape_labels(n: usize, max_inner: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 0..=max_inner {
        for mu in crate::partitions::partitions_of(m) {
            let first = n.checked_sub(m);
            let Some(first) = first else { continue };
            if first >= mu.first().copied().unwrap_or(0) && first > 0 {
                out.push(mu);
            }
        }
    }
    out
}

/// Assemble `λ = (n − |μ|, μ)`.
pub fn shape_of_label(n: usize, mu: &[usize]) -> Partition {
    let mut lambda = vec![n - mu.iter().sum::<usize>()];
    lambda.extend_from_slice(mu);
    lambda
}

/// All semistandard multiset tableaux of shape `(n − |μ|, μ)` whose content
/// partitions the full palette of the coloring.
pub fn enumerate_ssmt(n: usize, mu: &[usize], kappa: &Coloring) -> Vec<MPTableau> {
    let shape = shape_of_label(n, mu);
    if !is_partition(&shape) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for content in partitions_of_multiset(&kappa.full_palette()) {
        out.extend(fillings_of_content(&shape, n, content.blocks(), false));
    }
    out
}

/// The singleton-block subclass of [`enumerate_ssmt`].
pub fn enumerate_ssmt_prime(n: usize, mu: &[usize], kappa: &Coloring) -> Vec<MPTableau> {
    let shape = shape_of_label(n, mu);
    if !is_partition(&shape) {
        return Vec::new();
    }
    let blocks: Vec<Multiset> = kappa
        .full_palette()
        .iter()
        .map(|&l| Multiset::singleton(l))
        .collect();
    fillings_of_content(&shape, n, &blocks, false)
}

impl fmt::Display for MPTableau {
    /// Rows bottom-to-top joined by `| `, cells space-separated, `.` for an
    /// empty cell: `[. . {1}| {~1} {2}]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "| ")?;
            }
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                match c {
                    None => write!(f, ".")?,
                    Some(m) => write!(f, "{m}")?,
                }
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MPTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
