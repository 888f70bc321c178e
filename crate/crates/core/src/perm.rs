//! Permutations in one-line notation and Young subgroups attached to a pair
//! of compositions, iterated together with the sign of their second factor.

use std::fmt;

/// A permutation of `{0, .., n-1}` in one-line notation: `map[i]` is the image
/// of `i`. Values exposed to callers are 0-based; the 1-based world of
/// diagrams converts at the boundary.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn from_one_line(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&v| {
                v < seen.len() && !std::mem::replace(&mut seen[v], true)
            })
        });
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation { map: other.map.iter().map(|&v| self.map[v]).collect() }
    }

    pub fn sign(&self) -> i8 {
        let mut seen = vec![false; self.map.len()];
        let mut sign = 1i8;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.map[cur];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, j);
        Permutation { map }
    }

    /// All permutations of `{0,..,n-1}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { map: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        go(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm{:?}", self.map)
    }
}

/// The Young subgroup of `S_{r+s}` preserving the consecutive intervals cut
/// out by `a` (first `r` points) and `b` (last `s` points). Elements are
/// produced as whole permutations of `{0,..,r+s-1}` paired with the sign of
/// their `b`-part.
#[derive(Clone, Debug)]
pub struct YoungGroup {
    n: usize,
    intervals_a: Vec<(usize, usize)>,
    intervals_b: Vec<(usize, usize)>,
}

impl YoungGroup {
    pub fn new(a: &[usize], b: &[usize]) -> Self {
        let mut intervals_a = Vec::new();
        let mut pos = 0;
        for &part in a {
            intervals_a.push((pos, pos + part));
            pos += part;
        }
        let mut intervals_b = Vec::new();
        for &part in b {
            intervals_b.push((pos, pos + part));
            pos += part;
        }
        YoungGroup { n: pos, intervals_a, intervals_b }
    }

    /// Degree of the ambient symmetric group, `|a| + |b|`.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        self.intervals_a
            .iter()
            .chain(&self.intervals_b)
            .map(|&(lo, hi)| fact(hi - lo))
            .product()
    }

    /// Every element `(στ, sgn τ)` with `σ` permuting the `a`-intervals and
    /// `τ` the `b`-intervals.
    pub fn elements(&self) -> Vec<(Permutation, i8)> {
        let mut out = vec![(Permutation::identity(self.n), 1i8)];
        let extend = |out: Vec<(Permutation, i8)>, lo: usize, hi: usize, signed: bool| {
            let mut next = Vec::with_capacity(out.len());
            let locals = Permutation::all(hi - lo);
            for (p, s) in &out {
                for q in &locals {
                    let mut map = p.map.clone();
                    for i in lo..hi {
                        map[i] = p.map[lo + q.apply(i - lo)];
                    }
                    let s2 = if signed { s * q.sign() } else { *s };
                    next.push((Permutation { map }, s2));
                }
            }
            next
        };
        for &(lo, hi) in &self.intervals_a {
            out = extend(out, lo, hi, false);
        }
        for &(lo, hi) in &self.intervals_b {
            out = extend(out, lo, hi, true);
        }
        out
    }
}
