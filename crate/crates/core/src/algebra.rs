//! The diagram algebra on two-sided set partitions over ℚ[x], its
//! signed-average idempotent, and the mixed multiset partition algebra the
//! idempotent carves out, with exact integer specialization.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One};

use crate::msetpart::MultisetPartition;
use crate::partitions::Coloring;
use crate::perm::{Permutation, YoungGroup};
use crate::poly::CoeffPoly;
use crate::setpart::SetPartition;
use crate::{Error, Result};

/// A finite ℚ[x]-combination of set-partition diagrams on `{1..r, _1.._r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAElement {
    r: usize,
    terms: BTreeMap<SetPartition, CoeffPoly>,
}

impl PAElement {
    pub fn zero(r: usize) -> Self {
        PAElement {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(pi: SetPartition, r: usize) -> Result<Self> {
        if !pi.is_diagram(r) {
            return Err(Error::invalid(format!("not a diagram on 2·{r} elements")));
        }
        let mut terms = BTreeMap::new();
        terms.insert(pi, CoeffPoly::one());
        Ok(PAElement { r, terms })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, CoeffPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pi: &SetPartition) -> CoeffPoly {
        self.terms.get(pi).cloned().unwrap_or_else(CoeffPoly::zero)
    }

    pub fn add_term(&mut self, pi: SetPartition, c: CoeffPoly) {
        let entry = self.terms.entry(pi);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PAElement) -> Result<PAElement> {
        if self.r != other.r {
            return Err(Error::invalid("size mismatch"));
        }
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.add_term(pi.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffPoly) -> PAElement {
        if c.is_zero() {
            return PAElement::zero(self.r);
        }
        PAElement {
            r: self.r,
            terms: self
                .terms
                .iter()
                .map(|(pi, v)| (pi.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Evaluate every coefficient at `x = n`.
    pub fn specialize(&self, n: i64) -> PAElement {
        let mut out = PAElement::zero(self.r);
        for (pi, c) in &self.terms {
            out.add_term(pi.clone(), CoeffPoly::constant(c.evaluate_int(n)));
        }
        out
    }
}

/// Bilinear extension of the diagram product
/// `ℒ_π ℒ_ν = x^{c(π,ν)} ℒ_{π∘ν}`.
pub fn pa_multiply(u: &PAElement, v: &PAElement) -> Result<PAElement> {
    if u.r != v.r {
        return Err(Error::invalid("size mismatch"));
    }
    let mut out = PAElement::zero(u.r);
    for (pi, cu) in &u.terms {
        for (nu, cv) in &v.terms {
            let (comp, c) = pi.compose(nu, u.r)?;
            out.add_term(comp, cu.clone() * cv.clone() * CoeffPoly::x_pow(c));
        }
    }
    Ok(out)
}

fn group_order_inverse(g: &YoungGroup) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(g.order()))
}

/// The signed average `(1/|S_a×S_b|) Σ sgn(τ) ℒ_{στ}` as a diagram element.
pub fn idempotent(kappa: &Coloring) -> Result<PAElement> {
    if kappa.degree() > 5 {
        return Err(Error::ResourceBound(format!(
            "idempotent for |a|+|b| = {} (groups grow factorially; limit 5)",
            kappa.degree()
        )));
    }
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let inv = CoeffPoly::constant(group_order_inverse(&group));
    let mut out = PAElement::zero(kappa.degree());
    for (g, sign) in group.elements() {
        out.add_term(
            SetPartition::perm_diagram(&g),
            inv.scale(&BigRational::from(BigInt::from(sign))),
        );
    }
    Ok(out)
}

/// `e ℒ_π e` by the orbit sum: breadth-first closure of the two-sided signed
/// orbit of `π`; a sign conflict means the stabilizer kills the average.
pub fn expand_ele(pi: &SetPartition, kappa: &Coloring) -> Result<PAElement> {
    let r = kappa.degree();
    if !pi.is_diagram(r) {
        return Err(Error::invalid(format!("not a diagram on 2·{r} elements")));
    }
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let elems = group.elements();
    let mut signs: BTreeMap<SetPartition, i8> = BTreeMap::new();
    signs.insert(pi.clone(), 1);
    let mut queue = vec![pi.clone()];
    while let Some(rho) = queue.pop() {
        let s = signs[&rho];
        for (g, sg) in &elems {
            let id = Permutation::identity(r);
            for next in [rho.act(g, &id), rho.act(&id, g)] {
                let ns = s * sg;
                match signs.get(&next) {
                    None => {
                        signs.insert(next.clone(), ns);
                        queue.push(next);
                    }
                    Some(&old) if old != ns => return Ok(PAElement::zero(r)),
                    _ => {}
                }
            }
        }
    }
    let inv = BigRational::new(BigInt::one(), BigInt::from(signs.len() as u64));
    let mut out = PAElement::zero(r);
    for (rho, s) in signs {
        out.add_term(
            rho,
            CoeffPoly::constant(&inv * BigRational::from(BigInt::from(s))),
        );
    }
    Ok(out)
}

/// `e ℒ_π e` summed literally over `(S_a×S_b)²`; the test oracle for
/// [`expand_ele`].
pub fn expand_ele_oracle(pi: &SetPartition, kappa: &Coloring) -> Result<PAElement> {
    let r = kappa.degree();
    let e = idempotent(kappa)?;
    pa_multiply(&pa_multiply(&e, &PAElement::basis(pi.clone(), r)?)?, &e)
}

/// A finite ℚ[x]-combination of restricted multiset partition diagrams for a
/// fixed coloring profile.
#[derive(Clone, Debug, PartialEq)]
pub struct MPElement {
    kappa: Coloring,
    terms: BTreeMap<MultisetPartition, CoeffPoly>,
}

impl MPElement {
    pub fn zero(kappa: Coloring) -> Self {
        MPElement {
            kappa,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(pihat: MultisetPartition, kappa: Coloring) -> Result<Self> {
        if !pihat.is_diagram(&kappa) || !pihat.is_restricted() {
            return Err(Error::invalid(
                "not a restricted diagram for this profile",
            ));
        }
        let mut terms = BTreeMap::new();
        terms.insert(pihat, CoeffPoly::one());
        Ok(MPElement { kappa, terms })
    }

    pub fn kappa(&self) -> &Coloring {
        &self.kappa
    }

    pub fn terms(&self) -> &BTreeMap<MultisetPartition, CoeffPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, pihat: &MultisetPartition) -> CoeffPoly {
        self.terms
            .get(pihat)
            .cloned()
            .unwrap_or_else(CoeffPoly::zero)
    }

    pub fn add_term(&mut self, pihat: MultisetPartition, c: CoeffPoly) {
        let entry = self.terms.entry(pihat);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPElement) -> Result<MPElement> {
        if self.kappa != other.kappa {
            return Err(Error::invalid("profile mismatch"));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffPoly) -> MPElement {
        if c.is_zero() {
            return MPElement::zero(self.kappa.clone());
        }
        MPElement {
            kappa: self.kappa.clone(),
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn specialize(&self, n: i64) -> MPElement {
        let mut out = MPElement::zero(self.kappa.clone());
        for (p, c) in &self.terms {
            out.add_term(p.clone(), CoeffPoly::constant(c.evaluate_int(n)));
        }
        out
    }
}

/// All `(σ₁τ₁, σ₂τ₂)` carrying the standardization of `κ(π)` to `π`, with
/// their signs `sgn(τ₁)sgn(τ₂)`.
pub fn carriers(pi: &SetPartition, kappa: &Coloring) -> Result<Vec<(Permutation, Permutation, i8)>> {
    let pihat = pi.kappa_image(kappa)?;
    let std = pihat.standardize(kappa)?;
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let elems = group.elements();
    let mut out = Vec::new();
    for (g1, s1) in &elems {
        for (g2, s2) in &elems {
            if std.act(g1, g2) == *pi {
                out.push((g1.clone(), g2.clone(), s1 * s2));
            }
        }
    }
    Ok(out)
}

/// `±𝒟_{κ(π)}`, or zero when the coloring image leaves the restricted
/// diagram set; the sign comes from any carrier of the standardization.
pub fn project_to_d(pi: &SetPartition, kappa: &Coloring) -> Result<MPElement> {
    let pihat = pi.kappa_image(kappa)?;
    if !pihat.is_diagram(kappa) || !pihat.is_restricted() {
        return Ok(MPElement::zero(kappa.clone()));
    }
    let carrier = carriers(pi, kappa)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::invalid("no carrier from the standardization"))?;
    let mut out = MPElement::zero(kappa.clone());
    out.add_term(
        pihat,
        CoeffPoly::from_integer(i64::from(carrier.2)),
    );
    Ok(out)
}

/// `𝒟_π̂ 𝒟_ν̂ = (1/|G|) Σ_{στ} sgn(τ) x^{c(π, στ.ν)} project(π ∘ στ.ν)`
/// extended bilinearly, with `π, ν` the standardizations.
pub fn mp_multiply(u: &MPElement, v: &MPElement) -> Result<MPElement> {
    if u.kappa != v.kappa {
        return Err(Error::invalid("profile mismatch"));
    }
    let kappa = &u.kappa;
    let r = kappa.degree();
    let group = YoungGroup::new(&kappa.a, &kappa.b);
    let elems = group.elements();
    let inv = group_order_inverse(&group);
    let id = Permutation::identity(r);
    let mut out = MPElement::zero(kappa.clone());
    for (pihat, cu) in &u.terms {
        let pi = pihat.standardize(kappa)?;
        for (nuhat, cv) in &v.terms {
            let nu = nuhat.standardize(kappa)?;
            for (g, sg) in &elems {
                let gnu = nu.act(g, &id);
                let (comp, c) = pi.compose(&gnu, r)?;
                let proj = project_to_d(&comp, kappa)?;
                let weight = cu.clone()
                    * cv.clone()
                    * CoeffPoly::x_pow(c)
                        .scale(&(&inv * BigRational::from(BigInt::from(*sg))));
                for (key, val) in proj.terms {
                    out.add_term(key, val * weight.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The embedding `Φ`: send each `𝒟_π̂` to `e ℒ_{std(π̂)} e` in the diagram
/// basis.
pub fn phi(u: &MPElement) -> Result<PAElement> {
    let r = u.kappa.degree();
    let mut out = PAElement::zero(r);
    for (pihat, c) in &u.terms {
        let std = pihat.standardize(&u.kappa)?;
        out = out.add(&expand_ele(&std, &u.kappa)?.scale(c))?;
    }
    Ok(out)
}

/// The unit of the mixed algebra: the projection of the identity diagram.
pub fn mp_unit(kappa: &Coloring) -> Result<MPElement> {
    project_to_d(&SetPartition::identity_diagram(kappa.degree()), kappa)
}
