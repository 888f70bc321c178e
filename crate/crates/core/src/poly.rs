//! Polynomials in one indeterminate `x` over exact rationals.
//!
//! Structure constants of the diagram algebra live in `ℚ[x]`: stacking two
//! diagrams produces a power of `x` counting collapsed middle components, and
//! the symmetrizer normalization introduces rational scalars. Coefficients are
//! kept exact; nothing here ever rounds.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Dense polynomial, coefficient of `x^i` at index `i`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly(Vec<BigRational>);

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly(Vec::new())
    }

    pub fn one() -> Self {
        CoeffPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = CoeffPoly(vec![c]);
        p.trim();
        p
    }

    pub fn from_integer(n: i64) -> Self {
        CoeffPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `c · x^k`
    pub fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return CoeffPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        CoeffPoly(coeffs)
    }

    pub fn x_pow(k: usize) -> Self {
        CoeffPoly::monomial(k, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.0.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return CoeffPoly::zero();
        }
        CoeffPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Evaluate at an exact rational point.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn evaluate_int(&self, n: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl Add for CoeffPoly {
    type Output = CoeffPoly;
    fn add(mut self, rhs: CoeffPoly) -> CoeffPoly {
        self += rhs;
        self
    }
}

impl AddAssign for CoeffPoly {
    fn add_assign(&mut self, rhs: CoeffPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigRational::zero());
        }
        for (i, c) in rhs.0.into_iter().enumerate() {
            self.0[i] += c;
        }
        self.trim();
    }
}

impl Sub for CoeffPoly {
    type Output = CoeffPoly;
    fn sub(mut self, rhs: CoeffPoly) -> CoeffPoly {
        self -= rhs;
        self
    }
}

impl SubAssign for CoeffPoly {
    fn sub_assign(&mut self, rhs: CoeffPoly) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), BigRational::zero());
        }
        for (i, c) in rhs.0.into_iter().enumerate() {
            self.0[i] -= c;
        }
        self.trim();
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        if self.is_zero() || rhs.is_zero() {
            return CoeffPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = CoeffPoly(out);
        p.trim();
        p
    }
}

impl Mul for CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: CoeffPoly) -> CoeffPoly {
        &self * &rhs
    }
}

impl MulAssign<&CoeffPoly> for CoeffPoly {
    fn mul_assign(&mut self, rhs: &CoeffPoly) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// One term's magnitude: `3`, `x`, `x^2`, `3x`, `(1/2)x^2`.
fn fmt_term(c_abs: &BigRational, k: usize) -> String {
    let var = match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    };
    if k == 0 {
        return fmt_rational(c_abs);
    }
    if c_abs.is_one() {
        return var;
    }
    if c_abs.denom().is_one() {
        format!("{}{}", c_abs.numer(), var)
    } else {
        format!("({}){}", fmt_rational(c_abs), var)
    }
}

impl fmt::Display for CoeffPoly {
    /// Descending degree, ` + ` / ` - ` separators: `(1/2)x^2 + 3`, `x - 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.0.len()).rev() {
            let c = &self.0[k];
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_term(&c.abs(), k))?;
        }
        Ok(())
    }
}
