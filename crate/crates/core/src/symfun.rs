//! Symmetric polynomials in a fixed number of variables: Schur, complete
//! homogeneous, and elementary families, the tableau-counting Schur expansion
//! of a product h_a·e_b, and the correspondence sending a factored monomial of
//! such a product to an ordered restricted biword.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::letter::{Letter, Multiset};
use crate::partitions::{
    is_partition, lex_cmp_desc, partition_sum, partitions_of, shape_string, Coloring, Partition,
};
use crate::srsk::{Biletter, Biword};
use crate::tableau::enumerate_ssmt_prime;
use crate::{Error, Result};

/// A polynomial in `nvars` commuting variables with exact rational
/// coefficients, keyed by exponent vector.  The constructors here only ever
/// produce symmetric polynomials, but the type does not enforce symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl SymPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SymPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], BigRational::one());
        SymPolynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, expt: &[u32]) -> BigRational {
        self.terms.get(expt).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, expt: Vec<u32>, c: &BigRational) -> Result<()> {
        if expt.len() != self.nvars {
            return Err(Error::invalid(format!(
                "exponent vector length {} does not match {} variables",
                expt.len(),
                self.nvars
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(expt).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(key) = key {
                self.terms.remove(&key);
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &SymPolynomial) -> Result<SymPolynomial> {
        if self.nvars != other.nvars {
            return Err(Error::invalid("variable counts differ"));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> SymPolynomial {
        if c.is_zero() {
            return SymPolynomial::zero(self.nvars);
        }
        SymPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &SymPolynomial) -> Result<SymPolynomial> {
        if self.nvars != other.nvars {
            return Err(Error::invalid("variable counts differ"));
        }
        let mut out = SymPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2))?;
            }
        }
        Ok(out)
    }

    /// The largest exponent vector in lexicographic order, if any.  For a
    /// symmetric polynomial it is weakly decreasing.
    pub fn leading_exponent(&self) -> Option<&Vec<u32>> {
        self.terms.keys().max_by(|a, b| a.iter().cmp(b.iter()))
    }
}

fn check_expansion_bounds(lambda: &[usize], nvars: usize) -> Result<()> {
    if !is_partition(lambda) {
        return Err(Error::invalid(format!("{lambda:?} is not a partition")));
    }
    if nvars > 8 || partition_sum(lambda) > 8 {
        return Err(Error::ResourceBound(format!(
            "Schur polynomial for shape {} in {} variables (limit: 8 cells, 8 variables)",
            shape_string(lambda),
            nvars
        )));
    }
    Ok(())
}

/// The Schur polynomial s_λ(x₁,…,x_N): the sum of x^T over semistandard Young
/// tableaux of shape λ with entries in 1..=N.  Zero when λ has more than N
/// rows.
pub fn schur_poly(lambda: &[usize], nvars: usize) -> Result<SymPolynomial> {
    check_expansion_bounds(lambda, nvars)?;
    let mut out = SymPolynomial::zero(nvars);
    if lambda.len() > nvars {
        return Ok(out);
    }
    let mut rows: Vec<Vec<u32>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    fn fill(
        cells: &[(usize, usize)],
        k: usize,
        rows: &mut Vec<Vec<u32>>,
        nvars: usize,
        out: &mut SymPolynomial,
    ) {
        let Some(&(i, j)) = cells.get(k) else {
            let mut expt = vec![0u32; nvars];
            for row in rows.iter() {
                for &v in row {
                    expt[(v - 1) as usize] += 1;
                }
            }
            out.add_term(expt, &BigRational::one()).expect("lengths match");
            return;
        };
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(rows[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(rows[i - 1][j] + 1);
        }
        for v in lo..=(nvars as u32) {
            rows[i][j] = v;
            fill(cells, k + 1, rows, nvars, out);
        }
        rows[i][j] = 0;
    }
    fill(&cells, 0, &mut rows, nvars, &mut out);
    Ok(out)
}

/// The complete homogeneous polynomial h_k(x₁,…,x_N): one term per weakly
/// increasing index tuple of length k.
pub fn h_poly(k: usize, nvars: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(nvars);
    for combo in (0..nvars).combinations_with_replacement(k) {
        let mut expt = vec![0u32; nvars];
        for i in combo {
            expt[i] += 1;
        }
        out.add_term(expt, &BigRational::one()).expect("lengths match");
    }
    out
}

/// The elementary polynomial e_k(x₁,…,x_N): one term per strictly increasing
/// index tuple of length k; zero when k > N.
pub fn e_poly(k: usize, nvars: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(nvars);
    for combo in (0..nvars).combinations(k) {
        let mut expt = vec![0u32; nvars];
        for i in combo {
            expt[i] += 1;
        }
        out.add_term(expt, &BigRational::one()).expect("lengths match");
    }
    out
}

/// A non-negative integer combination of Schur polynomials, keyed by shape.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, usize>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, usize> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &[usize]) -> usize {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, lambda: Partition, coeff: usize) {
        if coeff > 0 {
            self.terms.insert(lambda, coeff);
        }
    }

    /// Terms listed largest shape first: descending lexicographic order,
    /// which refines dominance-descending order on shapes of equal size.
    pub fn sorted_terms(&self) -> Vec<(&Partition, usize)> {
        let mut v: Vec<(&Partition, usize)> = self.terms.iter().map(|(l, &c)| (l, c)).collect();
        v.sort_by(|x, y| lex_cmp_desc(x.0, y.0));
        v
    }

    /// Total degree check: every shape is a partition of the same number.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(|l| partition_sum(l));
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .iter()
            .map(|(l, c)| format!("{}*s{}", c, shape_string(l)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The Schur expansion of h_a·e_b by tableau counting: the coefficient of s_λ
/// is the number of semistandard multiset tableaux of shape λ whose blocks
/// all have size one and whose unbarred/barred value multiplicities are a/b.
pub fn he_expand_tableaux(a: &[usize], b: &[usize]) -> Result<SchurExpansion> {
    let r: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
    if r > 10 {
        return Err(Error::ResourceBound(format!(
            "h·e expansion of total degree {r} (limit 10)"
        )));
    }
    let kappa = Coloring::new(a.to_vec(), b.to_vec());
    let mut out = SchurExpansion::new();
    if r == 0 {
        out.insert(Vec::new(), 1);
        return Ok(out);
    }
    let shapes = partitions_of(r);
    let counts = crate::par::par_map(&shapes, |lambda| {
        enumerate_ssmt_prime(r, &lambda[1..], &kappa).len()
    });
    for (lambda, count) in shapes.into_iter().zip(counts) {
        out.insert(lambda, count);
    }
    Ok(out)
}

/// Independent Schur expansion of h_a·e_b: multiply the named polynomials out
/// over `nvars` variables, then peel off Schur polynomials greedily.  Each
/// round removes the Schur polynomial indexed by the lexicographically largest
/// remaining exponent vector; Schur triangularity makes that coefficient
/// exact.  A non-integer or negative peel coefficient, or a leading exponent
/// that is not a partition, means the input was not Schur-positive and is
/// reported as an error.
pub fn he_expand_oracle(a: &[usize], b: &[usize], nvars: usize) -> Result<SchurExpansion> {
    let r: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
    if nvars < r {
        return Err(Error::invalid(format!(
            "{nvars} variables cannot resolve a degree-{r} expansion (need at least {r})"
        )));
    }
    let mut product = SymPolynomial::one(nvars);
    for &k in a {
        product = product.mul(&h_poly(k, nvars))?;
    }
    for &k in b {
        product = product.mul(&e_poly(k, nvars))?;
    }
    let mut out = SchurExpansion::new();
    while let Some(lead) = product.leading_exponent().cloned() {
        let lambda: Partition = lead
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| e as usize)
            .collect();
        if !is_partition(&lambda) || lead.iter().skip(lambda.len()).any(|&e| e > 0) {
            return Err(Error::invalid(format!(
                "leading exponent {lead:?} is not a partition; the product is not symmetric"
            )));
        }
        let c = product.coeff(&lead);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::invalid(format!(
                "peel coefficient {c} at shape {} is not a non-negative integer",
                shape_string(&lambda)
            )));
        }
        let count = usize::try_from(c.to_integer())
            .map_err(|_| Error::invalid("peel coefficient does not fit a machine word"))?;
        product = product.add(&schur_poly(&lambda, nvars)?.scale(&-BigRational::from(
            BigInt::from(count),
        )))?;
        if product.coeff(&lead) != BigRational::zero() {
            return Err(Error::invalid("peeling failed to clear the leading term"));
        }
        out.insert(lambda, count);
    }
    Ok(out)
}

/// The biword of a factored monomial of h_{a₁}…h_{aₘ}·e_{b₁}…e_{bₘ′}: the
/// s-th homogeneous factor x_{i₁}…x_{i_{aₛ}} contributes the biletters
/// (s, i_j), the t-th elementary factor contributes (t̄, j) per subscript, and
/// the multiset of biletters is listed in biletter order.  Subscripts must be
/// distinct within each elementary factor.
pub fn monomial_to_biword(h_factors: &[Vec<u32>], e_factors: &[Vec<u32>]) -> Result<Biword> {
    let mut letters: Vec<Biletter> = Vec::new();
    for (s, factor) in h_factors.iter().enumerate() {
        let top = Multiset::singleton(Letter::plain((s + 1) as u32));
        for &i in factor {
            letters.push((top.clone(), Multiset::singleton(Letter::plain(i))));
        }
    }
    for (t, factor) in e_factors.iter().enumerate() {
        let mut sorted = factor.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "elementary factor {} repeats a subscript",
                t + 1
            )));
        }
        let top = Multiset::singleton(Letter::barred((t + 1) as u32));
        for &j in factor {
            letters.push((top.clone(), Multiset::singleton(Letter::plain(j))));
        }
    }
    Biword::sorted(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srsk::{srsk, SuperTableau};

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn sing(l: Letter) -> Multiset {
        Multiset::singleton(l)
    }

    fn compositions_small(total: usize, max_part: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        while let Some(c) = frontier.pop() {
            let used: usize = c.iter().sum();
            for part in 1..=max_part.min(total - used) {
                let mut next = c.clone();
                next.push(part);
                out.push(next.clone());
                frontier.push(next);
            }
        }
        out
    }

    #[test]
    fn schur_small_shapes() {
        let s1 = schur_poly(&[1], 2).unwrap();
        assert_eq!(s1.coeff(&[1, 0]), rat(1));
        assert_eq!(s1.coeff(&[0, 1]), rat(1));
        assert_eq!(s1.terms().len(), 2);

        let s11 = schur_poly(&[1, 1], 2).unwrap();
        assert_eq!(s11.coeff(&[1, 1]), rat(1));
        assert_eq!(s11.terms().len(), 1);

        let s21 = schur_poly(&[2, 1], 3).unwrap();
        assert_eq!(s21.coeff(&[1, 1, 1]), rat(2));

        // More rows than variables: the empty sum.
        assert!(schur_poly(&[1, 1, 1], 2).unwrap().is_zero());
        assert!(matches!(
            schur_poly(&[9], 3),
            Err(Error::ResourceBound(_))
        ));
    }

    #[test]
    fn schur_is_symmetric_under_variable_swap() {
        let s = schur_poly(&[3, 1], 3).unwrap();
        for (e, c) in s.terms() {
            for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
                let swapped: Vec<u32> = perm.iter().map(|&i| e[i]).collect();
                assert_eq!(&s.coeff(&swapped), c);
            }
        }
    }

    #[test]
    fn named_families_are_single_schur_polynomials() {
        assert_eq!(h_poly(2, 3), schur_poly(&[2], 3).unwrap());
        assert_eq!(e_poly(2, 3), schur_poly(&[1, 1], 3).unwrap());
        assert_eq!(e_poly(3, 3), schur_poly(&[1, 1, 1], 3).unwrap());
        assert!(e_poly(4, 3).is_zero());
    }

    #[test]
    fn tableau_expansion_small_products() {
        let h2 = he_expand_tableaux(&[2], &[]).unwrap();
        assert_eq!(h2.sorted_terms(), vec![(&vec![2], 1)]);

        let e2 = he_expand_tableaux(&[], &[2]).unwrap();
        assert_eq!(e2.sorted_terms(), vec![(&vec![1, 1], 1)]);

        let h1e1 = he_expand_tableaux(&[1], &[1]).unwrap();
        assert_eq!(h1e1.coeff(&[2]), 1);
        assert_eq!(h1e1.coeff(&[1, 1]), 1);
        assert_eq!(h1e1.terms().len(), 2);

        let unit = he_expand_tableaux(&[], &[]).unwrap();
        assert_eq!(unit.coeff(&[]), 1);
        assert_eq!(unit.terms().len(), 1);
    }

    #[test]
    fn oracle_matches_pieri_products() {
        let h2e1 = he_expand_oracle(&[2], &[1], 3).unwrap();
        assert_eq!(h2e1.coeff(&[3]), 1);
        assert_eq!(h2e1.coeff(&[2, 1]), 1);
        assert_eq!(h2e1.terms().len(), 2);

        let e2e1 = he_expand_oracle(&[], &[2, 1], 3).unwrap();
        assert_eq!(e2e1.coeff(&[1, 1, 1]), 1);
        assert_eq!(e2e1.coeff(&[2, 1]), 1);
        assert_eq!(e2e1.terms().len(), 2);

        assert!(he_expand_oracle(&[2], &[1], 2).is_err());
    }

    #[test]
    fn tableau_counts_match_polynomial_oracle() {
        for total in 0..=4 {
            for r in 0..=total {
                let s = total - r;
                for a in compositions_small(r, 3) {
                    if a.iter().sum::<usize>() != r {
                        continue;
                    }
                    for b in compositions_small(s, 3) {
                        if b.iter().sum::<usize>() != s {
                            continue;
                        }
                        let tab = he_expand_tableaux(&a, &b).unwrap();
                        let orc = he_expand_oracle(&a, &b, total.max(1)).unwrap();
                        assert_eq!(tab, orc, "a={a:?} b={b:?}");
                        if total > 0 {
                            assert_eq!(tab.homogeneous_degree(), Some(total));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factored_monomial_biword_and_insertion() {
        // (x₁x₁x₃)(x₂x₃)(x₁x₂)(x₂x₄) as a monomial of h₃h₂e₂e₂.
        let w = monomial_to_biword(
            &[vec![1, 1, 3], vec![2, 3]],
            &[vec![1, 2], vec![2, 4]],
        )
        .unwrap();
        let p = Letter::plain;
        let b = Letter::barred;
        let tops: Vec<Multiset> = w.letters().iter().map(|bl| bl.0.clone()).collect();
        let bots: Vec<Multiset> = w.letters().iter().map(|bl| bl.1.clone()).collect();
        let expect_top: Vec<Multiset> = [p(1), p(1), p(1), p(2), p(2), b(1), b(1), b(2), b(2)]
            .into_iter()
            .map(sing)
            .collect();
        let expect_bot: Vec<Multiset> = [p(1), p(1), p(3), p(2), p(3), p(1), p(2), p(2), p(4)]
            .into_iter()
            .map(sing)
            .collect();
        assert_eq!(tops, expect_top);
        assert_eq!(bots, expect_bot);

        let (u, t) = srsk(&w);
        assert_eq!(u.shape(), vec![5, 3, 1]);
        assert_eq!(t.shape(), vec![5, 3, 1]);
        let expect_u = SuperTableau::from_rows(vec![
            vec![sing(p(1)), sing(p(1)), sing(p(1)), sing(p(2)), sing(p(3))],
            vec![sing(p(2)), sing(p(2)), sing(p(3))],
            vec![sing(p(4))],
        ])
        .unwrap();
        let expect_t = SuperTableau::from_rows(vec![
            vec![sing(p(1)), sing(p(1)), sing(p(1)), sing(p(2)), sing(b(1))],
            vec![sing(p(2)), sing(b(1)), sing(b(2))],
            vec![sing(b(2))],
        ])
        .unwrap();
        assert_eq!(u, expect_u);
        assert_eq!(t, expect_t);
    }

    #[test]
    fn biword_corner_cases() {
        let w = monomial_to_biword(&[vec![5]], &[]).unwrap();
        assert_eq!(
            w.letters(),
            &[(sing(Letter::plain(1)), sing(Letter::plain(5)))]
        );
        assert!(monomial_to_biword(&[], &[vec![2, 2]]).is_err());
    }

    #[test]
    fn expansion_display_orders_by_dominance() {
        let h2e1 = he_expand_oracle(&[2], &[1], 3).unwrap();
        assert_eq!(h2e1.to_string(), "1*s[3] + 1*s[2,1]");
    }
}
