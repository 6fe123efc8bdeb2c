//! Rational functions in `p` — the scalar field of the polynomial tower.

use std::fmt;

use num::{BigRational, One};

use super::PPoly;
use crate::{QError, Result};

/// Rational function `num/den` in `p`, kept canonical: the gcd of
/// numerator and denominator is a unit, and the denominator is monic with
/// minimal p-exponent 0. Equality is plain structural equality of the
/// canonical form (which agrees with cross-multiplication equality).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PRational {
    num: PPoly,
    den: PPoly,
}

impl PRational {
    pub fn new(num: PPoly, den: PPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: PPoly, den: PPoly) -> Self {
        if num.is_zero() {
            return PRational {
                num: PPoly::zero(),
                den: PPoly::one(),
            };
        }
        let (mut num, mut den) = if den.as_monomial().is_some() {
            (num.divide_exact(&den).expect("monomial division"), PPoly::one())
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.divide_exact(&g).expect("gcd divides numerator"),
                    den.divide_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        // Normalize denominator: minimal p-exponent 0 and trailing
        // coefficient 1 (so `1 - q` stays `1 - q`).
        let shift = den.min_exp().unwrap();
        if shift != 0 {
            den = den.shift(-shift);
            num = num.shift(-shift);
        }
        let tc = den.coeff(0);
        if !tc.is_one() {
            let inv = tc.recip();
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        PRational { num, den }
    }

    pub fn zero() -> Self {
        PRational {
            num: PPoly::zero(),
            den: PPoly::one(),
        }
    }

    pub fn one() -> Self {
        PRational {
            num: PPoly::one(),
            den: PPoly::one(),
        }
    }

    pub fn from_poly(p: PPoly) -> Self {
        PRational {
            num: p,
            den: PPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(PPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(PPoly::monomial(0, c))
    }

    /// `q^{quarters/4}`.
    pub fn q_power(quarters: i64) -> Self {
        Self::from_poly(PPoly::q_power(quarters))
    }

    pub fn numerator(&self) -> &PPoly {
        &self.num
    }

    pub fn denominator(&self) -> &PPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &PRational) -> PRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        // Divisibility fast path: denominators here are typically nested
        // Pochhammer products.
        if let Ok(f) = other.den.divide_exact(&self.den) {
            return Self::canonical(self.num.mul(&f).add(&other.num), other.den.clone());
        }
        if let Ok(f) = self.den.divide_exact(&other.den) {
            return Self::canonical(self.num.add(&other.num.mul(&f)), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let d1 = self.den.divide_exact(&g).expect("gcd divides");
        let d2 = other.den.divide_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        let den = self.den.mul(&d2);
        Self::canonical(num, den)
    }

    pub fn neg(&self) -> PRational {
        PRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &PRational) -> PRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PRational) -> PRational {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Cross-reduce before multiplying to keep degrees down.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.divide_exact(&g1).unwrap_or_else(|_| self.num.clone());
        let d2 = other.den.divide_exact(&g1).unwrap_or_else(|_| other.den.clone());
        let n2 = other.num.divide_exact(&g2).unwrap_or_else(|_| other.num.clone());
        let d1 = self.den.divide_exact(&g2).unwrap_or_else(|_| self.den.clone());
        Self::canonical(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<PRational> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &PRational) -> Result<PRational> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, n: u32) -> PRational {
        let mut acc = PRational::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at `p = q_val^{1/4}`.
    pub fn eval_q(&self, q_val: f64) -> f64 {
        self.num.eval_q(q_val) / self.den.eval_q(q_val)
    }
}

impl fmt::Debug for PRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PRational({})", crate::render::render_prational(self))
    }
}
