//! The insertion bijection between restricted two-sided multiset partitions
//! and same-shape pairs of semistandard multiset-partition tableaux.
//!
//! Propagating blocks are split into their non-underlined and underlined
//! halves and run through super insertion; non-propagating blocks land in the
//! first row of the output pair, purely non-underlined blocks beside the
//! tableau carrying the non-underlined content and purely underlined ones
//! (underlines dropped) beside the other.

use crate::letter::{Letter, Multiset};
use crate::msetpart::MultisetPartition;
use crate::partitions::partition_sum;
use crate::srsk::{self, Biword, SuperTableau};
use crate::tableau::MPTableau;
use crate::{Error, Result};

/// The ordered biword over the propagating blocks: top coordinate the
/// non-underlined elements, bottom coordinate the underlined ones with
/// underlines removed.
pub fn biword_of(pt: &MultisetPartition) -> Result<Biword> {
    if !pt.is_restricted() {
        return Err(Error::invalid("multiset partition is not restricted"));
    }
    let letters = pt
        .propagating_blocks()
        .iter()
        .map(|b| (b.top_part(), b.bottom_part_de_underlined()))
        .collect();
    Biword::sorted(letters)
}

fn row_one_blocks(pt: &MultisetPartition) -> (Vec<Multiset>, Vec<Multiset>) {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for b in pt.blocks() {
        if b.is_empty() {
            continue;
        }
        if !b.any_underlined() {
            top.push(b.clone());
        } else if b.all_underlined() {
            bottom.push(b.map(Letter::de_underlined));
        }
    }
    top.sort();
    bottom.sort();
    (top, bottom)
}

/// Map a restricted partition to its tableau pair at size `n`.
pub fn smrsk(pt: &MultisetPartition, n: usize) -> Result<(MPTableau, MPTableau)> {
    let ground = pt.content().len();
    if n < ground {
        return Err(Error::invalid(format!(
            "n = {n} is smaller than the ground multiset size {ground}"
        )));
    }
    if n == 0 {
        return Ok((MPTableau::new(Vec::new())?, MPTableau::new(Vec::new())?));
    }
    let w = biword_of(pt)?;
    let (ins, rec) = srsk::srsk(&w);
    let lambda1 = n - partition_sum(&ins.shape());
    let (top_extra, bottom_extra) = row_one_blocks(pt);

    let mut p_rows = vec![top_extra];
    p_rows.extend(rec.into_rows());
    let mut q_rows = vec![bottom_extra];
    q_rows.extend(ins.into_rows());
    Ok((
        MPTableau::from_rows(p_rows, lambda1)?,
        MPTableau::from_rows(q_rows, lambda1)?,
    ))
}

/// Recover the partition from a tableau pair: first rows give the
/// non-propagating blocks (the second tableau's re-underlined), reverse
/// insertion on the remaining rows gives the propagating ones.
pub fn smrsk_inverse(p: &MPTableau, q: &MPTableau) -> Result<MultisetPartition> {
    if p.shape() != q.shape() {
        return Err(Error::invalid("tableaux have different shapes"));
    }
    let mut blocks: Vec<Multiset> = Vec::new();
    if p.num_rows() > 0 {
        for cell in p.rows()[0].iter().flatten() {
            blocks.push(cell.clone());
        }
        for cell in q.rows()[0].iter().flatten() {
            blocks.push(cell.map(Letter::underlined));
        }
    }
    let upper = |t: &MPTableau| -> Vec<Vec<Multiset>> {
        t.rows()
            .iter()
            .skip(1)
            .map(|row| row.iter().map(|c| c.clone().expect("no gaps above row 1")).collect())
            .collect()
    };
    let rec_rem = SuperTableau::from_rows(upper(p))?;
    let ins_rem = SuperTableau::from_rows(upper(q))?;
    let w = srsk::srsk_inverse(&ins_rem, &rec_rem)?;
    for (a, b) in w.letters() {
        blocks.push(a.union(&b.map(Letter::underlined)));
    }
    let pt = MultisetPartition::new(blocks);
    if !pt.is_restricted() {
        return Err(Error::invalid("reassembled partition is not restricted"));
    }
    Ok(pt)
}
