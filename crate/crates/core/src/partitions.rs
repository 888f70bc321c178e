//! Integer partitions, weak compositions, dominance order, and the coloring
//! map that collapses a two-sided value alphabet onto colored letters.

use crate::letter::{Letter, Multiset};
use crate::{Error, Result};
use std::cmp::Ordering;

/// A partition is a weakly decreasing list of positive parts; a composition
/// may be any list of nonnegative parts.
pub type Partition = Vec<usize>;

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1]) && p.iter().all(|&x| x > 0)
}

pub fn partition_sum(p: &[usize]) -> usize {
    p.iter().sum()
}

/// All partitions of `n`, in descending lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    if n == 0 {
        // go() already pushed the empty partition.
    }
    out
}

/// All compositions of `n` into positive parts each at most `max_part`
/// (the empty composition for `n == 0`).
pub fn compositions_bounded(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in 1..=rem.min(max_part) {
            cur.push(part);
            go(rem - part, max_part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[usize]) -> Partition {
    let mut out = Vec::new();
    let mut col = 0;
    while p.first().copied().unwrap_or(0) > col {
        out.push(p.iter().filter(|&&x| x > col).count());
        col += 1;
    }
    out
}

/// Dominance order on partitions of equal size: `a` is dominated by `b` when
/// every prefix sum of `a` is at most the corresponding prefix sum of `b`.
pub fn dominance_leq(a: &[usize], b: &[usize]) -> bool {
    debug_assert_eq!(partition_sum(a), partition_sum(b));
    let mut sa = 0usize;
    let mut sb = 0usize;
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Number of standard Young tableaux of shape `p` (hook length formula).
pub fn syt_count(p: &[usize]) -> u128 {
    let n: usize = partition_sum(p);
    let conj = conjugate(p);
    let mut numer = 1u128;
    for k in 1..=n {
        numer = numer.checked_mul(k as u128).expect("factorial overflow");
    }
    let mut denom = 1u128;
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row {
            let hook = (row - j) + (conj[j] - i) - 1;
            denom = denom.checked_mul(hook as u128).expect("hook overflow");
        }
    }
    numer / denom
}

/// The coloring map attached to a pair of compositions `a` (plain colors) and
/// `b` (barred colors): values `1..=|a|` collapse onto plain colors by prefix
/// sums of `a`, values `|a|+1..=|a|+|b|` onto barred colors by prefix sums of
/// `b`, and underlines pass through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Coloring {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Self {
        Coloring { a, b }
    }

    /// Total number of values in the domain, `|a| + |b|`.
    pub fn degree(&self) -> usize {
        self.a.iter().sum::<usize>() + self.b.iter().sum::<usize>()
    }

    pub fn top_degree(&self) -> usize {
        self.a.iter().sum()
    }

    pub fn bottom_degree(&self) -> usize {
        self.b.iter().sum()
    }

    /// Image of the plain value `v` (1-based); underlines are handled by
    /// [`Coloring::apply`].
    pub fn color_of_value(&self, v: usize) -> Result<Letter> {
        let r: usize = self.a.iter().sum();
        let s: usize = self.b.iter().sum();
        if v == 0 || v > r + s {
            return Err(Error::invalid(format!(
                "value {v} outside coloring domain 1..={}",
                r + s
            )));
        }
        if v <= r {
            let mut acc = 0;
            for (t, &part) in self.a.iter().enumerate() {
                acc += part;
                if v <= acc {
                    return Ok(Letter::plain((t + 1) as u32));
                }
            }
            unreachable!()
        } else {
            let mut acc = r;
            for (t, &part) in self.b.iter().enumerate() {
                acc += part;
                if v <= acc {
                    return Ok(Letter::barred((t + 1) as u32));
                }
            }
            unreachable!()
        }
    }

    pub fn apply(&self, l: Letter) -> Result<Letter> {
        if l.barred {
            return Err(Error::invalid(format!(
                "letter {l} is not in the coloring domain (barred)"
            )));
        }
        let img = self.color_of_value(l.value as usize)?;
        Ok(if l.underlined { img.underlined() } else { img })
    }

    pub fn apply_multiset(&self, m: &Multiset) -> Result<Multiset> {
        m.iter().map(|&l| self.apply(l)).collect::<Result<Vec<_>>>().map(Multiset::new)
    }

    /// The multiset of colors of `1..=degree` (the content a fully plain
    /// object must carry), i.e. color `t` with multiplicity `a_t` and barred
    /// color `t` with multiplicity `b_t`.
    pub fn full_palette(&self) -> Multiset {
        let mut v = Vec::new();
        for (t, &mult) in self.a.iter().enumerate() {
            v.extend(std::iter::repeat(Letter::plain((t + 1) as u32)).take(mult));
        }
        for (t, &mult) in self.b.iter().enumerate() {
            v.extend(std::iter::repeat(Letter::barred((t + 1) as u32)).take(mult));
        }
        Multiset::new(v)
    }
}

/// Total order used when listing partitions "largest first": descending
/// lexicographic, which refines dominance on partitions of equal size.
pub fn lex_cmp_desc(a: &[usize], b: &[usize]) -> Ordering {
    b.iter().cmp(a.iter())
}

/// Canonical text form of a shape: `[3,1]`, with `[]` for the empty shape.
pub fn shape_string(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}
