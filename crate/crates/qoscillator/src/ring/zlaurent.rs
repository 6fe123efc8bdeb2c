//! Laurent polynomials in `z` over the rational-function field, carrying
//! an optional formal parameter in a second exponent slot.
//!
//! `z` stands for `e^{i theta}` with `x = (z + z^-1)/2`; symmetric
//! elements (`coeff(k, j) = coeff(-k, j)`) are exactly the functions of
//! `x`. The parameter slot hosts whichever formal symbol an expression
//! needs (`a`, `alpha`, `beta`, `lambda`, ...). Family constructors only
//! produce non-negative parameter exponents; intermediate values in the
//! resummation replays may go negative, which the sparse representation
//! supports directly.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use super::{PPoly, PRational};
use crate::{QError, Result};

/// Sparse bivariate Laurent polynomial: `(z-exponent, parameter-exponent)
/// -> PRational` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ZLaurent {
    terms: BTreeMap<(i64, i64), PRational>,
}

impl ZLaurent {
    pub fn zero() -> Self {
        ZLaurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, PRational::one())
    }

    pub fn monomial(z_exp: i64, a_exp: i64, coeff: PRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((z_exp, a_exp), coeff);
        }
        ZLaurent { terms }
    }

    pub fn scalar(c: PRational) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The variable `z^k`.
    pub fn z_power(k: i64) -> Self {
        Self::monomial(k, 0, PRational::one())
    }

    /// The formal parameter.
    pub fn param() -> Self {
        Self::monomial(0, 1, PRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &PRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, z_exp: i64, a_exp: i64) -> PRational {
        self.terms
            .get(&(z_exp, a_exp))
            .cloned()
            .unwrap_or_else(PRational::zero)
    }

    /// The scalar constant coefficient, if the element is `c * z^0 * a^0`
    /// plus nothing else in the `(0,0)` slot.
    pub fn constant_coeff(&self) -> PRational {
        self.coeff(0, 0)
    }

    /// True when the element is a pure scalar (only the `(0,0)` term).
    pub fn as_scalar(&self) -> Option<PRational> {
        if self.is_zero() {
            return Some(PRational::zero());
        }
        if self.terms.len() == 1 {
            self.terms.get(&(0, 0)).cloned()
        } else {
            None
        }
    }

    pub fn add(&self, other: &ZLaurent) -> ZLaurent {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let entry = terms.entry(*k).or_insert_with(PRational::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        ZLaurent { terms }
    }

    pub fn neg(&self) -> ZLaurent {
        ZLaurent {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &ZLaurent) -> ZLaurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZLaurent) -> ZLaurent {
        let mut terms: BTreeMap<(i64, i64), PRational> = BTreeMap::new();
        for ((z1, a1), c1) in &self.terms {
            for ((z2, a2), c2) in &other.terms {
                let key = (z1 + z2, a1 + a2);
                let prod = c1.mul(c2);
                if prod.is_zero() {
                    continue;
                }
                let entry = terms.entry(key).or_insert_with(PRational::zero);
                *entry = entry.add(&prod);
                if entry.is_zero() {
                    terms.remove(&key);
                }
            }
        }
        ZLaurent { terms }
    }

    pub fn scale(&self, c: &PRational) -> ZLaurent {
        if c.is_zero() {
            return ZLaurent::zero();
        }
        ZLaurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v.mul(c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> ZLaurent {
        let mut acc = ZLaurent::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Half q-shift `T_z^{dir/2}`: `z^k -> q^{dir*k/2} z^k = p^{2*dir*k} z^k`.
    pub fn half_shift(&self, dir: i64) -> ZLaurent {
        ZLaurent {
            terms: self
                .terms
                .iter()
                .map(|((z, a), c)| {
                    ((*z, *a), c.mul(&PRational::q_power(2 * dir * z)))
                })
                .collect(),
        }
    }

    /// Full q-shift `T_z^{dir}`: `z^k -> q^{dir*k} z^k`.
    pub fn full_shift(&self, dir: i64) -> ZLaurent {
        ZLaurent {
            terms: self
                .terms
                .iter()
                .map(|((z, a), c)| {
                    ((*z, *a), c.mul(&PRational::q_power(4 * dir * z)))
                })
                .collect(),
        }
    }

    /// Substitute the parameter `a -> c * a` for a scalar `c`.
    pub fn scale_param(&self, c: &PRational) -> ZLaurent {
        let mut out = BTreeMap::new();
        for ((z, a), v) in &self.terms {
            let scaled = if *a >= 0 {
                v.mul(&c.pow(*a as u32))
            } else {
                v.mul(&c.inv().expect("scale_param with zero scalar and negative exponent").pow((-a) as u32))
            };
            if !scaled.is_zero() {
                out.insert((*z, *a), scaled);
            }
        }
        ZLaurent { terms: out }
    }

    /// Substitute the parameter `a -> value` (a scalar), collapsing the
    /// parameter slot.
    pub fn substitute_param(&self, value: &PRational) -> ZLaurent {
        let mut out = ZLaurent::zero();
        for ((z, a), v) in &self.terms {
            let c = if *a >= 0 {
                v.mul(&value.pow(*a as u32))
            } else {
                match value.inv() {
                    Ok(inv) => v.mul(&inv.pow((-a) as u32)),
                    Err(_) => continue, // a = 0 kills negative powers only if numerator already zero
                }
            };
            out = out.add(&ZLaurent::monomial(*z, 0, c));
        }
        out
    }

    /// Exact division in the bivariate Laurent ring.
    ///
    /// Returns `f` with `f * den = self`, or `NotDivisible` when no exact
    /// Laurent quotient exists.
    pub fn divide_exact(&self, den: &ZLaurent) -> Result<ZLaurent> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(ZLaurent::zero());
        }
        if den.terms.len() == 1 {
            let ((dz, da), dc) = den.terms.iter().next().unwrap();
            let inv = dc.inv()?;
            return Ok(ZLaurent {
                terms: self
                    .terms
                    .iter()
                    .map(|((z, a), c)| ((z - dz, a - da), c.mul(&inv)))
                    .collect(),
            });
        }
        // Leading-term cancellation under the (z, a) lexicographic order.
        // Monomial units make the Laurent shift irrelevant.
        let lead = |f: &ZLaurent| -> ((i64, i64), PRational) {
            let (k, c) = f.terms.iter().next_back().unwrap();
            (*k, c.clone())
        };
        let ((dz, da), dc) = lead(den);
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = ZLaurent::zero();
        // Each step strictly decreases the leading monomial of the
        // remainder, and exponents are bounded below by the minimal
        // exponents of self and den, so this terminates.
        let min_z = self.terms.keys().map(|(z, _)| *z).min().unwrap()
            - den.terms.keys().map(|(z, _)| *z).min().unwrap();
        let min_a = self.terms.keys().map(|(_, a)| *a).min().unwrap()
            - den.terms.keys().map(|(_, a)| *a).min().unwrap();
        while !rem.is_zero() {
            let ((rz, ra), rc) = lead(&rem);
            let qz = rz - dz;
            let qa = ra - da;
            if qz < min_z || qa < min_a {
                return Err(QError::NotDivisible);
            }
            let t = ZLaurent::monomial(qz, qa, rc.mul(&dc_inv));
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(den));
        }
        Ok(quot)
    }

    /// True when `coeff(k, j) = coeff(-k, j)` for all terms.
    pub fn is_symmetric_in_z(&self) -> bool {
        self.terms
            .iter()
            .all(|((z, a), c)| self.coeff(-z, *a) == *c)
    }

    /// Numeric value at `q = q_val`, real `x = cos(theta)`, optional
    /// parameter value. Symmetric pairs `z^k + z^{-k}` evaluate to
    /// `2 T_k(x)` via the Chebyshev recurrence; asymmetric elements are
    /// rejected.
    pub fn eval_real_x(&self, q_val: f64, x: f64, a_val: f64) -> Result<f64> {
        if !self.is_symmetric_in_z() {
            return Err(QError::AsymmetricElement);
        }
        let max_k = self.terms.keys().map(|(z, _)| z.abs()).max().unwrap_or(0);
        // T_0 .. T_max via the recurrence T_{k+1} = 2x T_k - T_{k-1}.
        let mut cheb = Vec::with_capacity(max_k as usize + 1);
        cheb.push(1.0);
        if max_k >= 1 {
            cheb.push(x);
        }
        for k in 2..=max_k {
            let t = 2.0 * x * cheb[(k - 1) as usize] - cheb[(k - 2) as usize];
            cheb.push(t);
        }
        let mut sum = 0.0;
        for ((z, a), c) in &self.terms {
            if *z < 0 {
                continue; // counted through the mirror term
            }
            let weight = if *z == 0 { 1.0 } else { 2.0 * cheb[*z as usize] };
            sum += c.eval_q(q_val) * weight * a_val.powi(*a as i32);
        }
        Ok(sum)
    }

    /// Numeric value at `q = q_val` and complex `z`.
    pub fn eval_complex(&self, q_val: f64, z: Complex64, a_val: f64) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for ((k, a), c) in &self.terms {
            sum += z.powi(*k as i32) * c.eval_q(q_val) * a_val.powi(*a as i32);
        }
        sum
    }

    /// Ring homomorphism into `PPoly`-free scalars is not needed; but a
    /// purely scalar view is: error if any non-scalar term remains.
    pub fn expect_scalar(&self) -> Result<PRational> {
        self.as_scalar().ok_or(QError::AsymmetricElement)
    }
}

impl From<PPoly> for ZLaurent {
    fn from(p: PPoly) -> Self {
        ZLaurent::scalar(PRational::from_poly(p))
    }
}

impl fmt::Debug for ZLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZLaurent({})", crate::render::render_zlaurent(self, "z", "a"))
    }
}
