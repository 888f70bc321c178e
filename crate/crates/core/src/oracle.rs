//! Independent brute-force checks: symmetric-group characters by border-strip
//! recursion, multiplicities of irreducibles in the bigraded polynomial ring
//! computed straight from the signed permutation action on monomials, and the
//! dimension of the centralizer of that action, computed by solving the
//! commutation equations for the group generators.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::partitions::{partition_sum, partitions_of, Partition};
use crate::{Error, Result};

/// The irreducible character χ^λ evaluated on the class of cycle type μ, by
/// recursive border-strip removal on first-column hook lengths.
pub fn mn_character(lambda: &[usize], mu: &[usize]) -> Result<i64> {
    let n = partition_sum(lambda);
    if n != partition_sum(mu) {
        return Err(Error::invalid(format!(
            "shape {lambda:?} and cycle type {mu:?} have different sizes"
        )));
    }
    if n > 8 {
        return Err(Error::ResourceBound(format!(
            "character of a partition of {n} (limit 8)"
        )));
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (len - 1 - i))
        .collect();
    Ok(strip_rec(&beta, mu))
}

fn strip_rec(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let crossings = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[idx] = target;
        total += sign * strip_rec(&next, rest);
    }
    total
}

/// |class of cycle type μ| in S_n: n!/z_μ.
pub fn class_size(mu: &[usize]) -> u64 {
    let n = partition_sum(mu) as u64;
    let factorial = |m: u64| (1..=m).product::<u64>();
    let mut z: u64 = 1;
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &k in mu {
        *counts.entry(k).or_insert(0) += 1;
    }
    for (k, m) in counts {
        z *= (k as u64).pow(m as u32) * factorial(m);
    }
    factorial(n) / z
}

/// One monomial of the bigraded piece: a sorted multiset of row indices per
/// symmetric column and a sorted set of row indices per alternating column.
type Monomial = (Vec<Vec<usize>>, Vec<Vec<usize>>);

fn monomial_basis(n: usize, a: &[usize], b: &[usize]) -> Vec<Monomial> {
    let sym_cols: Vec<Vec<Vec<usize>>> = a
        .iter()
        .map(|&k| (0..n).combinations_with_replacement(k).collect())
        .collect();
    let alt_cols: Vec<Vec<Vec<usize>>> = b
        .iter()
        .map(|&k| (0..n).combinations(k).collect())
        .collect();
    let sym_part: Vec<Vec<Vec<usize>>> = if sym_cols.is_empty() {
        vec![Vec::new()]
    } else {
        sym_cols
            .iter()
            .map(|c| c.iter().cloned())
            .multi_cartesian_product()
            .collect()
    };
    let alt_part: Vec<Vec<Vec<usize>>> = if alt_cols.is_empty() {
        vec![Vec::new()]
    } else {
        alt_cols
            .iter()
            .map(|c| c.iter().cloned())
            .multi_cartesian_product()
            .collect()
    };
    let mut out = Vec::with_capacity(sym_part.len() * alt_part.len());
    for xs in &sym_part {
        for ts in &alt_part {
            out.push((xs.clone(), ts.clone()));
        }
    }
    out
}

/// Image of a monomial under a permutation of row indices, with the sign
/// induced by re-sorting the alternating factors; `None` when a factor would
/// repeat (cannot happen for a permutation, kept for clarity of the sort).
fn apply_to_monomial(g: &[usize], m: &Monomial) -> (Monomial, i64) {
    let xs: Vec<Vec<usize>> = m
        .0
        .iter()
        .map(|col| {
            let mut mapped: Vec<usize> = col.iter().map(|&i| g[i]).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    let mut sign = 1i64;
    let ts: Vec<Vec<usize>> = m
        .1
        .iter()
        .map(|col| {
            let mapped: Vec<usize> = col.iter().map(|&i| g[i]).collect();
            let mut inv = 0usize;
            for (x, y) in mapped.iter().tuple_combinations() {
                if x > y {
                    inv += 1;
                }
            }
            if inv % 2 == 1 {
                sign = -sign;
            }
            let mut sorted = mapped;
            sorted.sort_unstable();
            sorted
        })
        .collect();
    ((xs, ts), sign)
}

/// A permutation of 0..n with the given cycle type, cycles laid out
/// consecutively.
fn permutation_of_type(mu: &[usize]) -> Vec<usize> {
    let mut g = Vec::new();
    let mut base = 0;
    for &k in mu {
        for i in 0..k {
            g.push(base + (i + 1) % k);
        }
        base += k;
    }
    g
}

/// The character of the bigraded piece on each cycle type: the signed count
/// of monomials fixed by a permutation of that type.
fn graded_character(n: usize, a: &[usize], b: &[usize]) -> BTreeMap<Partition, i64> {
    let basis = monomial_basis(n, a, b);
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        let g = permutation_of_type(&mu);
        let mut chi = 0i64;
        for m in &basis {
            let (image, sign) = apply_to_monomial(&g, m);
            if &image == m {
                chi += sign;
            }
        }
        out.insert(mu, chi);
    }
    out
}

/// Multiplicity of each irreducible S_n-module in the bigraded piece of the
/// polynomial-times-exterior ring with symmetric column degrees `a` and
/// alternating column degrees `b`, by the standard character inner product.
/// Shapes with multiplicity zero are omitted.
pub fn graded_piece_multiplicities(
    n: usize,
    a: &[usize],
    b: &[usize],
) -> Result<BTreeMap<Partition, usize>> {
    let r: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
    if n > 8 || r > 3 {
        return Err(Error::ResourceBound(format!(
            "graded multiplicities at n = {n}, degree {r} (limits 8 and 3)"
        )));
    }
    let chars = graded_character(n, a, b);
    let factorial: i128 = (1..=n as i128).product();
    let mut out = BTreeMap::new();
    for lambda in partitions_of(n) {
        let mut dot: i128 = 0;
        for (mu, &chi) in &chars {
            dot += class_size(mu) as i128 * chi as i128 * mn_character(&lambda, mu)? as i128;
        }
        if dot % factorial != 0 || dot < 0 {
            return Err(Error::invalid(format!(
                "character inner product {dot}/{factorial} at shape {lambda:?} is not a \
                 non-negative integer"
            )));
        }
        let mult = (dot / factorial) as usize;
        if mult > 0 {
            out.insert(lambda, mult);
        }
    }
    Ok(out)
}

/// Union-find over variables related by x_u = ±x_v; a class forced to satisfy
/// x = −x is dead (identically zero).
struct SignedClasses {
    parent: Vec<usize>,
    sign_to_parent: Vec<i64>,
    dead: Vec<bool>,
}

impl SignedClasses {
    fn new(len: usize) -> Self {
        SignedClasses {
            parent: (0..len).collect(),
            sign_to_parent: vec![1; len],
            dead: vec![false; len],
        }
    }

    fn find(&mut self, v: usize) -> (usize, i64) {
        if self.parent[v] == v {
            return (v, 1);
        }
        let (root, sign) = self.find(self.parent[v]);
        self.parent[v] = root;
        self.sign_to_parent[v] *= sign;
        (root, self.sign_to_parent[v])
    }

    /// Impose x_u = rel·x_v.
    fn relate(&mut self, u: usize, v: usize, rel: i64) {
        let (ru, su) = self.find(u);
        let (rv, sv) = self.find(v);
        if ru == rv {
            if su != rel * sv {
                self.dead[ru] = true;
            }
            return;
        }
        self.parent[ru] = rv;
        self.sign_to_parent[ru] = su * rel * sv;
        self.dead[rv] |= self.dead[ru];
    }

    fn live_classes(&mut self) -> usize {
        let mut roots = std::collections::BTreeSet::new();
        for v in 0..self.parent.len() {
            let (root, _) = self.find(v);
            if !self.dead[root] {
                roots.insert(root);
            }
        }
        roots.len()
    }
}

/// Dimension of the space of matrices commuting with the S_n-action on the
/// bigraded monomial basis, solved exactly from the commutation equations
/// X·A_g = A_g·X for the adjacent transpositions and the n-cycle.  Each A_g
/// is a signed permutation matrix, so every equation relates two entries of X
/// up to sign and the system reduces to signed classes of entries.
pub fn commutant_dimension(n: usize, a: &[usize], b: &[usize]) -> Result<usize> {
    let basis = monomial_basis(n, a, b);
    let dim = basis.len();
    if dim > 40 {
        return Err(Error::ResourceBound(format!(
            "commutant of a module of dimension {dim} (limit 40)"
        )));
    }
    let index: BTreeMap<&Monomial, usize> = basis.iter().zip(0..).collect();
    let mut generators: Vec<Vec<usize>> = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut g: Vec<usize> = (0..n).collect();
        g.swap(i, i + 1);
        generators.push(g);
    }
    if n >= 2 {
        generators.push((0..n).map(|i| (i + 1) % n).collect());
    }
    let mut classes = SignedClasses::new(dim * dim);
    for g in &generators {
        // g·e_k = sign[k]·e_{perm[k]}
        let mut perm = vec![0usize; dim];
        let mut sign = vec![1i64; dim];
        let mut inv = vec![0usize; dim];
        for (k, m) in basis.iter().enumerate() {
            let (image, s) = apply_to_monomial(g, m);
            let target = index[&image];
            perm[k] = target;
            sign[k] = s;
            inv[target] = k;
        }
        // (X·A_g)[i,j] = sign[j]·X[i,perm[j]] and (A_g·X)[i,j] =
        // sign[inv[i]]·X[inv[i],j]; equating them relates two entries.
        for i in 0..dim {
            for j in 0..dim {
                let u = i * dim + perm[j];
                let v = inv[i] * dim + j;
                classes.relate(u, v, sign[inv[i]] * sign[j]);
            }
        }
    }
    Ok(classes.live_classes())
}
