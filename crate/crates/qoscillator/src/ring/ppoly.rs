//! Laurent polynomials in the base variable `p`, with `q = p^4`.
//!
//! A q-exponent of `k/4` (k integer) is stored as p-exponent `k`; this
//! keeps every quarter-integer power of `q` an exact monomial.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::{BigRational, One, Zero};

use crate::{QError, Result};

/// Sparse Laurent polynomial in `p` over the big rationals.
///
/// Invariants: no stored zero coefficients, exponents unique.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl PPoly {
    pub fn zero() -> Self {
        PPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(p_exp: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(p_exp, coeff);
        }
        PPoly { terms }
    }

    /// `q^{quarters/4}` as a monomial, i.e. `p^{quarters}`.
    pub fn q_power(quarters: i64) -> Self {
        Self::monomial(quarters, BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, BigRational::from_integer(BigInt::from(n)))
    }

    /// `1 - q^{quarters/4}`.
    pub fn one_minus_q_power(quarters: i64) -> Self {
        Self::one().sub(&Self::q_power(quarters))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// A single-term element (a unit in the Laurent ring).
    pub fn as_monomial(&self) -> Option<(i64, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, p_exp: i64) -> BigRational {
        self.terms.get(&p_exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of the highest power of `p`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn add(&self, other: &PPoly) -> PPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        PPoly { terms }
    }

    pub fn sub(&self, other: &PPoly) -> PPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PPoly {
        PPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &PPoly) -> PPoly {
        let mut terms: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let prod = c1 * c2;
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += prod;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        PPoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> PPoly {
        if c.is_zero() {
            return PPoly::zero();
        }
        PPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by the monomial `p^{shift}`.
    pub fn shift(&self, shift: i64) -> PPoly {
        PPoly {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> PPoly {
        let mut acc = PPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact Laurent division; `Err(NotDivisible)` when no quotient exists.
    pub fn divide_exact(&self, den: &PPoly) -> Result<PPoly> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(PPoly::zero());
        }
        if let Some((e, c)) = den.as_monomial() {
            let inv = c.recip();
            return Ok(PPoly {
                terms: self.terms.iter().map(|(e1, c1)| (e1 - e, c1 * &inv)).collect(),
            });
        }
        // Shift both operands to ordinary polynomials and do dense division
        // from the top; the Laurent quotient absorbs the exponent offset.
        let num_min = self.min_exp().unwrap();
        let den_min = den.min_exp().unwrap();
        let num_deg = (self.max_exp().unwrap() - num_min) as usize;
        let den_deg = (den.max_exp().unwrap() - den_min) as usize;
        if num_deg < den_deg {
            return Err(QError::NotDivisible);
        }
        let mut rem: Vec<BigRational> = vec![BigRational::zero(); num_deg + 1];
        for (e, c) in &self.terms {
            rem[(e - num_min) as usize] = c.clone();
        }
        let mut d: Vec<BigRational> = vec![BigRational::zero(); den_deg + 1];
        for (e, c) in &den.terms {
            d[(e - den_min) as usize] = c.clone();
        }
        let lead_inv = d[den_deg].recip();
        let mut quot: Vec<BigRational> = vec![BigRational::zero(); num_deg - den_deg + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + den_deg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.iter().enumerate() {
                if !dc.is_zero() {
                    let t = &c * dc;
                    rem[i + j] -= t;
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QError::NotDivisible);
        }
        let offset = num_min - den_min;
        let terms = quot
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + offset, c))
            .collect();
        Ok(PPoly { terms })
    }

    pub fn divides(&self, other: &PPoly) -> bool {
        other.divide_exact(self).is_ok()
    }

    /// Greatest common divisor, normalized monic with minimal p-exponent 0.
    ///
    /// Monomial (unit) factors are irrelevant in the Laurent ring, so the
    /// result always has a nonzero constant term.
    pub fn gcd(&self, other: &PPoly) -> PPoly {
        if self.is_zero() {
            return normalize_unit(other);
        }
        if other.is_zero() {
            return normalize_unit(self);
        }
        if self.as_monomial().is_some() || other.as_monomial().is_some() {
            return PPoly::one();
        }
        let a = normalize_unit(self);
        let b = normalize_unit(other);
        // Divisibility fast paths: nested Pochhammer denominators make one
        // operand a factor of the other most of the time.
        if a.divides(&b) {
            return a;
        }
        if b.divides(&a) {
            return b;
        }
        // Subresultant-style Euclid over primitive integer polynomials.
        let mut f = to_primitive_int(&a);
        let mut g = to_primitive_int(&b);
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            if g.iter().all(|c| c.is_zero()) {
                return from_int_monic(&f);
            }
            let r = pseudo_rem(&f, &g);
            f = g;
            g = primitive(r);
        }
    }

    /// Evaluate at `p = q_val^{1/4}`.
    pub fn eval_q(&self, q_val: f64) -> f64 {
        let p = q_val.powf(0.25);
        self.terms
            .iter()
            .map(|(e, c)| rational_to_f64(c) * p.powi(*e as i32))
            .sum()
    }
}

fn rational_to_f64(c: &BigRational) -> f64 {
    let n = c.numer();
    let d = c.denom();
    // f64 conversion via string is lossy-safe for the magnitudes used here;
    // go through BigInt -> f64 with fallback scaling for huge values.
    big_to_f64(n) / big_to_f64(d)
}

fn big_to_f64(n: &BigInt) -> f64 {
    use num::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

/// Strip the monomial unit: shift min exponent to 0 and make monic.
fn normalize_unit(f: &PPoly) -> PPoly {
    if f.is_zero() {
        return PPoly::zero();
    }
    let shifted = f.shift(-f.min_exp().unwrap());
    let lc = shifted.leading_coeff().unwrap().clone();
    shifted.scale(&lc.recip())
}

fn to_primitive_int(f: &PPoly) -> Vec<BigInt> {
    let deg = f.max_exp().unwrap() as usize;
    let mut lcm = BigInt::one();
    for (_, c) in f.terms() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let mut out = vec![BigInt::zero(); deg + 1];
    for (e, c) in f.terms() {
        out[*e as usize] = c.numer() * (&lcm / c.denom());
    }
    primitive(out)
}

fn primitive(mut f: Vec<BigInt>) -> Vec<BigInt> {
    while f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
    let mut g = BigInt::zero();
    for c in &f {
        g = num::integer::gcd(g, c.clone());
    }
    if g.is_zero() || g.is_one() {
        return f;
    }
    for c in f.iter_mut() {
        *c = &*c / &g;
    }
    f
}

/// Pseudo-remainder of dense integer polynomials (degrees as vec len - 1).
fn pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = f.to_vec();
    let dg = g.len() - 1;
    let lg = g[dg].clone();
    while r.len() > dg && !r.iter().all(|c| c.is_zero()) {
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
        if r.len() <= dg {
            break;
        }
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lg;
        }
        for j in 0..=dg {
            r[dr - dg + j] -= &lr * &g[j];
        }
        while r.last().map(|c| c.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    r
}

fn from_int_monic(f: &[BigInt]) -> PPoly {
    let mut terms = BTreeMap::new();
    let lead = f.last().cloned().unwrap_or_else(BigInt::one);
    for (i, c) in f.iter().enumerate() {
        if !c.is_zero() {
            terms.insert(
                i as i64,
                BigRational::new(c.clone(), lead.clone()),
            );
        }
    }
    PPoly { terms }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PPoly({})", crate::render::render_ppoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> PPoly {
        PPoly::q_power(4)
    }

    #[test]
    fn additive_inverse_cancels() {
        let p2 = PPoly::q_power(2);
        assert!(p2.add(&p2.neg()).is_zero());
    }

    #[test]
    fn sum_cancellation() {
        // (1 + q) + (1 - q) = 2
        let a = PPoly::one().add(&q());
        let b = PPoly::one().sub(&q());
        assert_eq!(a.add(&b), PPoly::from_int(2));
    }

    #[test]
    fn product_difference_of_squares() {
        // (1 - q)(1 + q) = 1 - q^2
        let a = PPoly::one().sub(&q());
        let b = PPoly::one().add(&q());
        let expected = PPoly::one().sub(&PPoly::q_power(8));
        assert_eq!(a.mul(&b), expected);
    }

    #[test]
    fn exact_division_of_laurent() {
        // (1 - q^2) / (1 - q) = 1 + q, with a Laurent shift thrown in
        let num = PPoly::one().sub(&PPoly::q_power(8)).shift(-3);
        let den = PPoly::one().sub(&q());
        let quot = num.divide_exact(&den).unwrap();
        assert_eq!(quot, PPoly::one().add(&q()).shift(-3));
    }

    #[test]
    fn inexact_division_errors() {
        let num = PPoly::one().add(&q());
        let den = PPoly::one().sub(&q());
        assert_eq!(num.divide_exact(&den), Err(QError::NotDivisible));
    }

    #[test]
    fn gcd_of_pochhammer_products() {
        // gcd(1-q^2, 1-q^3) = 1 - q up to units
        let g = PPoly::one_minus_q_power(8).gcd(&PPoly::one_minus_q_power(12));
        assert_eq!(g, normalize_unit(&PPoly::one_minus_q_power(4)));
        // (1-q)(1-q^2) divides (1-q^2)(1-q^3), so it is the gcd itself.
        let f1 = PPoly::one_minus_q_power(4).mul(&PPoly::one_minus_q_power(8));
        let f2 = PPoly::one_minus_q_power(8).mul(&PPoly::one_minus_q_power(12));
        assert_eq!(f1.gcd(&f2), normalize_unit(&f1));
    }

    #[test]
    fn gcd_coprime() {
        let f1 = PPoly::one().add(&q());
        let f2 = PPoly::one().add(&q()).add(&PPoly::q_power(8)); // 1 + q + q^2
        assert!(f1.gcd(&f2).is_one());
    }

    #[test]
    fn eval_q_power() {
        let v = PPoly::q_power(4).eval_q(0.25);
        assert!((v - 0.25).abs() < 1e-15);
        let v = PPoly::q_power(2).eval_q(0.25); // q^{1/2}
        assert!((v - 0.5).abs() < 1e-15);
    }
}
