//! Dense univariate polynomials in a formal argument `x` over the
//! rational-function scalars, used by the Wall, q-Laguerre and kernel
//! polynomial families.

use std::fmt;

use super::PRational;

/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros trimmed.
#[derive(Clone, PartialEq, Default)]
pub struct UPoly {
    coeffs: Vec<PRational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly {
            coeffs: vec![PRational::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<PRational>) -> Self {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    pub fn monomial(k: usize, c: PRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![PRational::zero(); k + 1];
        coeffs[k] = c;
        UPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> PRational {
        self.coeffs.get(k).cloned().unwrap_or_else(PRational::zero)
    }

    pub fn coeffs(&self) -> &[PRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add(&other.coeff(k)));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![PRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &PRational) -> UPoly {
        Self::from_coeffs(self.coeffs.iter().map(|k| k.mul(c)).collect())
    }

    /// Substitute `x -> c * x`.
    pub fn scale_arg(&self, c: &PRational) -> UPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        let mut power = PRational::one();
        for k in &self.coeffs {
            coeffs.push(k.mul(&power));
            power = power.mul(c);
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval_scalar(&self, x: &PRational) -> PRational {
        let mut acc = PRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({})", crate::render::render_upoly(self, "x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let x = UPoly::monomial(1, PRational::one());
        let one = UPoly::one();
        // (1 + x)(1 - x) = 1 - x^2
        let prod = one.add(&x).mul(&one.sub(&x));
        let expected = one.sub(&UPoly::monomial(2, PRational::one()));
        assert_eq!(prod, expected);
    }

    #[test]
    fn scale_arg_powers() {
        let p = UPoly::from_coeffs(vec![
            PRational::one(),
            PRational::one(),
            PRational::one(),
        ]);
        let c = PRational::q_power(4);
        let scaled = p.scale_arg(&c);
        assert_eq!(scaled.coeff(0), PRational::one());
        assert_eq!(scaled.coeff(1), PRational::q_power(4));
        assert_eq!(scaled.coeff(2), PRational::q_power(8));
    }
}
