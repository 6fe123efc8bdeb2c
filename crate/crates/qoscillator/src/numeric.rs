//! Floating-point evaluation of the exact objects and verification of
//! the classical `q -> 1` limits.
//!
//! All checks run in double precision over a sequence of `q` values
//! approaching 1 from below; a check passes when the error at the final
//! (largest) `q` is within the stated relative tolerance *and* the error
//! is non-increasing over the last three members of the sequence.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::identity::{Counterexample, IdentityReport, Status};
use crate::qfunctions::{continuous_big_q_hermite, continuous_q_hermite, QuarterInt};
use crate::ring::ZLaurent;
use crate::{QError, Result};

/// Physicists' Hermite polynomial by the three-term recurrence.
pub fn classical_hermite(n: u32, x: f64) -> f64 {
    let mut h_prev = 1.0;
    if n == 0 {
        return h_prev;
    }
    let mut h = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * h - 2.0 * (k as f64) * h_prev;
        h_prev = h;
        h = next;
    }
    h
}

/// Which classical-limit statement to check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LimitIdentity {
    /// Scaled base polynomial tends to the classical Hermite polynomial.
    Eq6,
    /// Finite identity between classical Hermite polynomials (no limit).
    Eq32,
    /// Scaled extended polynomial tends to the shifted classical Hermite
    /// polynomial.
    Eq33,
    /// The q-exponential family tends to the ordinary exponential.
    QExpLimit,
}

impl LimitIdentity {
    pub fn id(self) -> &'static str {
        match self {
            LimitIdentity::Eq6 => "eq6",
            LimitIdentity::Eq32 => "eq32",
            LimitIdentity::Eq33 => "eq33",
            LimitIdentity::QExpLimit => "qexp_limit",
        }
    }
}

/// Specification of one limit check.
#[derive(Clone, Debug)]
pub struct LimitCheckSpec {
    pub identity: LimitIdentity,
    pub n: u32,
    pub x_points: Vec<f64>,
    pub a_values: Vec<f64>,
    /// Quarter exponent of the q-exponential family (QExpLimit only).
    pub mu: QuarterInt,
    pub q_sequence: Vec<f64>,
    pub tolerance: f64,
}

impl LimitCheckSpec {
    /// Default grid: x in {-0.9, -0.5, 0, 0.5, 0.9}, a in {0, 0.3},
    /// q = 1 - 10^-j for j = 1..4, relative tolerance 1e-2 (1e-10 for
    /// the finite identity, which holds to machine precision).
    pub fn new(identity: LimitIdentity, n: u32) -> Self {
        LimitCheckSpec {
            identity,
            n,
            x_points: vec![-0.9, -0.5, 0.0, 0.5, 0.9],
            a_values: vec![0.0, 0.3],
            mu: QuarterInt(0),
            q_sequence: (1..=4).map(|j| 1.0 - 10f64.powi(-j)).collect(),
            tolerance: if identity == LimitIdentity::Eq32 {
                1e-10
            } else {
                1e-2
            },
        }
    }

    pub fn with_mu(mut self, mu: QuarterInt) -> Self {
        self.mu = mu;
        self
    }

    fn validate(&self) -> Result<()> {
        let increasing = self
            .q_sequence
            .windows(2)
            .all(|w| w[0] < w[1]);
        let in_range = self.q_sequence.iter().all(|&q| q > 0.0 && q < 1.0);
        if !increasing || !in_range || self.tolerance <= 0.0 || self.q_sequence.is_empty() {
            return Err(QError::NumericOverflow);
        }
        Ok(())
    }
}

fn rel_error(value: f64, target: f64) -> f64 {
    let denom = if target.abs() < 1e-12 { 1.0 } else { target.abs() };
    (value - target).abs() / denom
}

/// Scaled evaluation of the degree-n member at one `(q, x, a)` point:
/// `((1-q)/2)^{-n/2} f(x sqrt((1-q)/2); a sqrt(2(1-q)) | q)`.
fn scaled_eval(f: &ZLaurent, n: u32, q: f64, x: f64, a: f64) -> Result<f64> {
    let s = ((1.0 - q) / 2.0).sqrt();
    let value = f.eval_real_x(q, x * s, a * (2.0 * (1.0 - q)).sqrt())?;
    let scaled = value * s.powi(-(n as i32));
    if scaled.is_finite() {
        Ok(scaled)
    } else {
        Err(QError::NumericOverflow)
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c = c * (n - i) as f64 / (i + 1) as f64;
    }
    c
}

/// Right side of the finite classical identity:
/// `sum_k (-1)^{n-k} (2a)^{n-k} C(n,k) H_k(x)`.
pub fn classical_shift_expansion(n: u32, x: f64, a: f64) -> f64 {
    let mut sum = 0.0;
    for k in 0..=n {
        let d = (n - k) as f64;
        let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (2.0 * a).powf(d) * binomial(n, k) * classical_hermite(k, x);
    }
    sum
}

/// Truncated q-exponential `E_q^{(mu)}((1-q) x)` evaluated numerically,
/// summed to the given order.
fn q_exp_numeric(mu: QuarterInt, q: f64, x: f64, order: u32) -> f64 {
    let mu_f = mu.quarters() as f64 / 4.0;
    let mut sum = 0.0;
    let mut term_base = 1.0; // ((1-q) x)^n / (q;q)_n
    for n in 0..=order {
        if n > 0 {
            term_base *= (1.0 - q) * x / (1.0 - q.powi(n as i32));
        }
        sum += q.powf(mu_f * (n * n) as f64) * term_base;
    }
    sum
}

/// Run one limit check, producing the same report shape as the exact
/// verifiers.
pub fn check_limit(spec: &LimitCheckSpec) -> Result<IdentityReport> {
    let start = Instant::now();
    spec.validate()?;
    let n = spec.n;
    let mut params: BTreeMap<String, serde_json::Value> = BTreeMap::new();
    params.insert("n".into(), n.into());
    params.insert("tolerance".into(), spec.tolerance.into());
    params.insert(
        "q_final".into(),
        (*spec.q_sequence.last().expect("validated non-empty")).into(),
    );
    if spec.identity == LimitIdentity::QExpLimit {
        params.insert("mu".into(), spec.mu.as_literal().into());
    }

    // Per-q worst error over the (x, a) grid, plus the worst point for
    // reporting.
    let exact = match spec.identity {
        LimitIdentity::Eq6 => Some(continuous_q_hermite(n)),
        LimitIdentity::Eq33 => Some(continuous_big_q_hermite(n)),
        _ => None,
    };
    let a_grid: &[f64] = match spec.identity {
        LimitIdentity::Eq6 | LimitIdentity::QExpLimit => &[0.0],
        _ => &spec.a_values,
    };
    let mut per_q_errors = Vec::with_capacity(spec.q_sequence.len());
    let mut worst_point = (0.0f64, 0.0f64, 0.0f64, 0.0f64); // x, a, value, target
    for &q in &spec.q_sequence {
        let mut worst = 0.0f64;
        for &x in &spec.x_points {
            for &a in a_grid {
                let (value, target) = match spec.identity {
                    LimitIdentity::Eq6 => (
                        scaled_eval(exact.as_ref().expect("set above"), n, q, x, 0.0)?,
                        classical_hermite(n, x),
                    ),
                    LimitIdentity::Eq33 => (
                        scaled_eval(exact.as_ref().expect("set above"), n, q, x, a)?,
                        classical_hermite(n, x - a),
                    ),
                    LimitIdentity::Eq32 => (
                        classical_shift_expansion(n, x, a),
                        classical_hermite(n, x - a),
                    ),
                    LimitIdentity::QExpLimit => {
                        (q_exp_numeric(spec.mu, q, x, 30), x.exp())
                    }
                };
                if !value.is_finite() || !target.is_finite() {
                    return Err(QError::NumericOverflow);
                }
                let err = rel_error(value, target);
                if err > worst {
                    worst = err;
                    worst_point = (x, a, value, target);
                }
            }
        }
        per_q_errors.push(worst);
    }

    let final_err = *per_q_errors.last().expect("non-empty");
    // Errors below the noise floor are rounding artifacts of the exact
    // evaluation (the identity holds to machine precision there) and are
    // exempt from the monotonicity requirement.
    let noise_floor = 1e-9;
    let tail = &per_q_errors[per_q_errors.len().saturating_sub(3)..];
    let monotone = tail
        .windows(2)
        .all(|w| w[1] <= w[0] + 1e-12 || w[1] <= noise_floor);
    let counterexample = if final_err > spec.tolerance || !monotone {
        let (x, a, value, target) = worst_point;
        let mut point = BTreeMap::new();
        point.insert("n".to_string(), serde_json::Value::from(n));
        point.insert("x".to_string(), serde_json::Value::from(x));
        point.insert("a".to_string(), serde_json::Value::from(a));
        point.insert(
            "q".to_string(),
            serde_json::Value::from(*spec.q_sequence.last().expect("non-empty")),
        );
        Some(Counterexample {
            point,
            difference: if monotone {
                format!(
                    "relative error {:.3e} exceeds tolerance {:.3e} (value {:.12e}, target {:.12e})",
                    final_err, spec.tolerance, value, target
                )
            } else {
                format!(
                    "error sequence not non-increasing over the last three q values: {:?}",
                    per_q_errors
                )
            },
        })
    } else {
        None
    };

    Ok(IdentityReport {
        identity: spec.identity.id().to_string(),
        params,
        status: if counterexample.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        checked: format!(
            "limit check over {} q values, {} x points, final relative error {:.3e}",
            spec.q_sequence.len(),
            spec.x_points.len(),
            final_err
        ),
        counterexample,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_hermite_values() {
        assert_eq!(classical_hermite(0, 0.7), 1.0);
        assert_eq!(classical_hermite(1, 0.5), 1.0);
        assert_eq!(classical_hermite(2, 1.0), 2.0);
        // H_3(x) = 8x^3 - 12x
        assert!((classical_hermite(3, 0.5) - (-5.0)).abs() < 1e-12);
    }

    #[test]
    fn hermite_limit_low_degrees() {
        for n in 0..=6 {
            let report = check_limit(&LimitCheckSpec::new(LimitIdentity::Eq6, n)).unwrap();
            assert!(report.is_pass(), "n={} {:?}", n, report.counterexample);
        }
    }

    #[test]
    fn hermite_limit_n1_is_scale_exact() {
        // Degree 1 is exactly 2x at every q after scaling.
        let h1 = continuous_q_hermite(1);
        for q in [0.3, 0.9, 0.999] {
            let v = scaled_eval(&h1, 1, q, 0.7, 0.0).unwrap();
            assert!((v - 1.4).abs() < 1e-12, "q={} v={}", q, v);
        }
    }

    #[test]
    fn big_hermite_limit_low_degrees() {
        for n in 0..=6 {
            let report = check_limit(&LimitCheckSpec::new(LimitIdentity::Eq33, n)).unwrap();
            assert!(report.is_pass(), "n={} {:?}", n, report.counterexample);
        }
    }

    #[test]
    fn finite_shift_identity_machine_precision() {
        for n in 0..=8 {
            let report = check_limit(&LimitCheckSpec::new(LimitIdentity::Eq32, n)).unwrap();
            assert!(report.is_pass(), "n={} {:?}", n, report.counterexample);
        }
    }

    #[test]
    fn q_exponential_limit_all_quarters() {
        for mu in [QuarterInt(0), QuarterInt(1), QuarterInt(2), QuarterInt(3)] {
            let spec = LimitCheckSpec::new(LimitIdentity::QExpLimit, 0)
                .with_mu(mu)
                .clone();
            let report = check_limit(&spec).unwrap();
            assert!(report.is_pass(), "mu={:?} {:?}", mu, report.counterexample);
        }
    }

    #[test]
    fn connection_formula_shadow_of_the_classical_shift() {
        // The exact expansion side, scaled and evaluated numerically,
        // approaches the shifted classical polynomial.
        let q = 1.0 - 1e-4;
        for n in 0..=6u32 {
            let mut rhs = ZLaurent::zero();
            for k in 0..=n {
                let kk = k as i64;
                let mut c = crate::ring::PRational::q_power(2 * kk * (kk - 1)).mul(
                    &crate::ring::PRational::from_poly(crate::qfunctions::q_binomial(
                        n, kk,
                    )),
                );
                if k % 2 == 1 {
                    c = c.neg();
                }
                rhs = rhs.add(
                    &continuous_q_hermite(n - k)
                        .mul(&ZLaurent::monomial(0, kk, c)),
                );
            }
            for &x in &[-0.5, 0.0, 0.5] {
                for &a in &[0.0, 0.3] {
                    let value = scaled_eval(&rhs, n, q, x, a).unwrap();
                    let target = classical_hermite(n, x - a);
                    assert!(
                        rel_error(value, target) < 1e-2,
                        "n={} x={} a={} value={} target={}",
                        n,
                        x,
                        a,
                        value,
                        target
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_spec_rejected() {
        let mut spec = LimitCheckSpec::new(LimitIdentity::Eq6, 2);
        spec.q_sequence = vec![0.9, 0.5];
        assert!(check_limit(&spec).is_err());
    }
}
