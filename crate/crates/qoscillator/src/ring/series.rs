//! Truncated formal power series in one expansion variable with
//! [`ZLaurent`] coefficients.

use std::fmt;

use super::{PRational, ZLaurent};
use crate::{QError, Result};

/// Formal power series truncated at a stated order: `coeffs[n]` is the
/// coefficient of the n-th power of the expansion variable,
/// `coeffs.len() == order + 1`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<ZLaurent>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ZLaurent::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ZLaurent::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<ZLaurent>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    /// `c * t^k` truncated at `order`.
    pub fn monomial(k: usize, coeff: ZLaurent, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = coeff;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &ZLaurent {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ZLaurent] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.order() != other.order() {
            return Err(QError::OrderMismatch(self.order(), other.order()));
        }
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product truncated at `min(order_self, order_other)`.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ZLaurent::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn scale(&self, c: &ZLaurent) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|k| k.mul(c)).collect(),
        }
    }

    pub fn scale_scalar(&self, c: &PRational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|k| k.scale(c)).collect(),
        }
    }

    /// Multiply by `t^k` (dropping overflowed coefficients).
    pub fn shift_up(&self, k: usize) -> TruncatedSeries {
        let order = self.order();
        let mut coeffs = vec![ZLaurent::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= order {
                coeffs[i + k] = c.clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Reciprocal up to the stated order. The constant coefficient must be
    /// an invertible scalar.
    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        let c0 = self.coeffs[0]
            .as_scalar()
            .ok_or(QError::ZeroConstantTerm)?;
        if c0.is_zero() {
            return Err(QError::ZeroConstantTerm);
        }
        let c0_inv = PRational::one().div(&c0)?;
        let order = self.order();
        let mut rec = vec![ZLaurent::zero(); order + 1];
        rec[0] = ZLaurent::scalar(c0_inv.clone());
        for n in 1..=order {
            let mut acc = ZLaurent::zero();
            for k in 1..=n {
                acc = acc.add(&self.coeffs[k].mul(&rec[n - k]));
            }
            rec[n] = acc.neg().scale(&c0_inv);
        }
        Ok(TruncatedSeries { coeffs: rec })
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<F: Fn(&ZLaurent) -> ZLaurent>(&self, f: F) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Numeric evaluation: sum of `coeff_n(q) * t_val^n` for scalar
    /// coefficients.
    pub fn eval_scalar(&self, q_val: f64, t_val: f64) -> Result<f64> {
        let mut sum = 0.0;
        for (n, c) in self.coeffs.iter().enumerate() {
            let s = c.as_scalar().ok_or(QError::AsymmetricElement)?;
            sum += s.eval_q(q_val) * t_val.powi(n as i32);
        }
        if sum.is_finite() {
            Ok(sum)
        } else {
            Err(QError::NumericOverflow)
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TruncatedSeries[order {}]", self.order())?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "  t^{}: {:?}", n, c)?;
        }
        Ok(())
    }
}
