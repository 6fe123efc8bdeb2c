//! q-combinatorial quantities and the polynomial families built from
//! them: q-Pochhammer symbols, Gaussian binomials, the q-exponential
//! families, basic hypergeometric sums, continuous (big) q-Hermite,
//! Wall, q-Laguerre, and the two-parameter kernel polynomials that show
//! up in the matrix elements.

use crate::ring::{PPoly, PRational, TruncatedSeries, UPoly, ZLaurent};
use crate::{QError, Result};

/// An exact quarter-integer exponent: `QuarterInt(k)` stands for `k/4`,
/// so the values used throughout are `0, 1/4, 1/2, 3/4` and their
/// relatives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QuarterInt(pub i64);

impl QuarterInt {
    pub fn quarters(self) -> i64 {
        self.0
    }

    /// Parse one of the literal strings `0`, `1/4`, `1/2`, `3/4`.
    pub fn parse_literal(s: &str) -> Option<QuarterInt> {
        match s {
            "0" => Some(QuarterInt(0)),
            "1/4" => Some(QuarterInt(1)),
            "1/2" => Some(QuarterInt(2)),
            "3/4" => Some(QuarterInt(3)),
            _ => None,
        }
    }

    pub fn as_literal(self) -> String {
        match self.0 {
            0 => "0".to_string(),
            1 => "1/4".to_string(),
            2 => "1/2".to_string(),
            3 => "3/4".to_string(),
            k => format!("{}/4", k),
        }
    }
}

/// `(base; q)_n = prod_{k=0}^{n-1} (1 - base * q^k)` for a Laurent base.
pub fn q_pochhammer(base: &ZLaurent, n: u32) -> ZLaurent {
    let mut acc = ZLaurent::one();
    for k in 0..n {
        let factor = ZLaurent::one().sub(&base.scale(&PRational::q_power(4 * k as i64)));
        acc = acc.mul(&factor);
    }
    acc
}

/// `(base; q)_n` for a scalar base.
pub fn q_pochhammer_scalar(base: &PRational, n: u32) -> PRational {
    let mut acc = PRational::one();
    for k in 0..n {
        acc = acc.mul(&PRational::one().sub(&base.mul(&PRational::q_power(4 * k as i64))));
    }
    acc
}

/// `(q^{j/4}; q)_n` with `j` in quarters. Exactly zero iff some factor
/// `1 - q^{j/4 + i}` vanishes, i.e. `j + 4i = 0` for `0 <= i < n`.
pub fn q_pochhammer_q_power(j_quarters: i64, n: u32) -> PRational {
    q_pochhammer_scalar(&PRational::q_power(j_quarters), n)
}

/// True iff `(q^{j/4}; q)_n = 0`.
pub fn q_pochhammer_q_power_vanishes(j_quarters: i64, n: u32) -> bool {
    (0..n as i64).any(|i| j_quarters + 4 * i == 0)
}

/// `(q; q)_n` as a polynomial in `q`.
pub fn q_factorial(n: u32) -> PPoly {
    let mut acc = PPoly::one();
    for k in 1..=n {
        acc = acc.mul(&PPoly::one_minus_q_power(4 * k as i64));
    }
    acc
}

/// Gaussian binomial `[n over k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})`,
/// an exact polynomial in `q`; zero for `k` outside `0..=n`.
pub fn q_binomial(n: u32, k: i64) -> PPoly {
    if k < 0 || k > n as i64 {
        return PPoly::zero();
    }
    let k = k as u32;
    let num = q_factorial(n);
    let den = q_factorial(k).mul(&q_factorial(n - k));
    num.divide_exact(&den)
        .expect("Gaussian binomial division is always exact")
}

/// The q-exponential family: `sum_n q^{mu n^2} / (q;q)_n (c t)^n`
/// truncated at `order`, returned as a series in `t` whose n-th
/// coefficient carries `c^n` for a Laurent coefficient `c`.
pub fn q_exponential(mu: QuarterInt, arg_coeff: &ZLaurent, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = ZLaurent::one();
    for n in 0..=order as i64 {
        if n > 0 {
            power = power.mul(arg_coeff);
        }
        let scalar = PRational::q_power(mu.quarters() * n * n)
            .div(&PRational::from_poly(q_factorial(n as u32)))
            .expect("(q;q)_n is nonzero");
        coeffs.push(power.scale(&scalar));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(c t; q)_infinity` as an exact truncated series in `t` via the Euler
/// expansion `sum_n (-1)^n q^{n(n-1)/2} c^n t^n / (q;q)_n`.
///
/// A finite product of factors `(1 - c q^j t)` is *not* exact to any
/// t-order (every factor touches the t^1 coefficient); the series
/// expansion is.
pub fn infinite_pochhammer_series(coeff: &ZLaurent, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = ZLaurent::one();
    for n in 0..=order as i64 {
        if n > 0 {
            power = power.mul(coeff);
        }
        let mut scalar = PRational::q_power(2 * n * (n - 1))
            .div(&PRational::from_poly(q_factorial(n as u32)))
            .expect("(q;q)_n is nonzero");
        if n % 2 == 1 {
            scalar = scalar.neg();
        }
        coeffs.push(power.scale(&scalar));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// `(c t; q)_n` as a truncated series in `t` (finite product, exact).
pub fn finite_pochhammer_series(coeff: &ZLaurent, n: u32, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for j in 0..n as i64 {
        let factor = TruncatedSeries::one(order)
            .sub(&TruncatedSeries::monomial(
                1,
                coeff.scale(&PRational::q_power(4 * j)),
                order,
            ))
            .expect("orders match");
        acc = acc.mul(&factor);
    }
    acc
}

/// The two-variable q-exponential: series in `b` with coefficients
/// `q^{n^2/4}/(q;q)_n (a q^{(1-n)/2} z; q)_n (a q^{(1-n)/2} z^{-1}; q)_n`,
/// with `e^{+-i theta}` realized as `z^{+-1}` and `a` carried in the
/// parameter slot of the coefficients (or any specialization of it).
pub fn curly_e_q(a_param: &ZLaurent, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order as i64 {
        // a q^{(1-n)/2} has p-exponent shift 2(1-n) on the parameter.
        let shifted = a_param.scale(&PRational::q_power(2 * (1 - n)));
        let poch_plus = q_pochhammer(&shifted.mul(&ZLaurent::z_power(1)), n as u32);
        let poch_minus = q_pochhammer(&shifted.mul(&ZLaurent::z_power(-1)), n as u32);
        let scalar = PRational::q_power(n * n)
            .div(&PRational::from_poly(q_factorial(n as u32)))
            .expect("(q;q)_n is nonzero");
        coeffs.push(poch_plus.mul(&poch_minus).scale(&scalar));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// Upper parameter of a basic hypergeometric series, in structured form.
#[derive(Clone, Debug)]
pub enum UpperParam {
    Zero,
    /// `q^{quarters/4}`; `QPower(-4n)` marks a terminating series.
    QPower(i64),
    Element(ZLaurent),
}

/// Lower parameter; only scalar q-powers (or zero) are supported here.
#[derive(Clone, Debug)]
pub enum LowerParam {
    Zero,
    QPower(i64),
}

/// Structured description of an `r_phi_s` series.
#[derive(Clone, Debug)]
pub struct HypergeometricSpec {
    pub upper: Vec<UpperParam>,
    pub lower: Vec<LowerParam>,
}

impl HypergeometricSpec {
    /// The termination order `n` when some upper parameter is exactly
    /// `q^{-n}` (recognized only in structured form).
    pub fn terminating_order(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter_map(|p| match p {
                UpperParam::QPower(j) if *j <= 0 && j % 4 == 0 => Some((-j / 4) as u32),
                _ => None,
            })
            .min()
    }
}

/// Terminating basic hypergeometric sum
/// `r_phi_s(a_1..a_r; b_1..b_s | q; arg)` including the balancing factor
/// `[(-1)^k q^{k(k-1)/2}]^{1+s-r}`, evaluated exactly as a Laurent
/// element.
pub fn basic_hypergeometric(spec: &HypergeometricSpec, arg: &ZLaurent) -> Result<ZLaurent> {
    let n = spec
        .terminating_order()
        .expect("basic_hypergeometric requires a terminating upper parameter");
    let sign_exp = 1 + spec.lower.len() as i64 - spec.upper.len() as i64;
    let mut sum = ZLaurent::zero();
    for k in 0..=n {
        let mut term = ZLaurent::scalar(hyper_term_scalar(spec, k)?);
        for p in &spec.upper {
            if let UpperParam::Element(e) = p {
                term = term.mul(&q_pochhammer(e, k));
            }
        }
        // Balancing factor.
        let kk = k as i64;
        let mut balance = PRational::q_power(sign_exp * 2 * kk * (kk - 1));
        if (kk * sign_exp) % 2 != 0 {
            balance = balance.neg();
        }
        term = term.scale(&balance);
        sum = sum.add(&term.mul(&arg.pow(k)));
    }
    Ok(sum)
}

/// The scalar part of the k-th term: upper q-power/zero Pochhammers over
/// `(q;q)_k` and the lower Pochhammers.
fn hyper_term_scalar(spec: &HypergeometricSpec, k: u32) -> Result<PRational> {
    let mut num = PRational::one();
    for p in &spec.upper {
        match p {
            UpperParam::Zero => {}
            UpperParam::QPower(j) => num = num.mul(&q_pochhammer_q_power(*j, k)),
            UpperParam::Element(_) => {}
        }
    }
    let mut den = PRational::from_poly(q_factorial(k));
    for p in &spec.lower {
        match p {
            LowerParam::Zero => {}
            LowerParam::QPower(j) => {
                if q_pochhammer_q_power_vanishes(*j, k) {
                    return Err(QError::LowerParameterPole);
                }
                den = den.mul(&q_pochhammer_q_power(*j, k));
            }
        }
    }
    num.div(&den)
}

/// `1_phi_1(0; c_l t | q; c_a t)` as a truncated series in `t`: the
/// lower parameter is itself t-dependent, so `1/(c_l t; q)_k` is expanded
/// term by term via the series reciprocal.
pub fn confluent_phi_series(
    lower_coeff: &ZLaurent,
    arg_coeff: &ZLaurent,
    order: usize,
) -> TruncatedSeries {
    let mut sum = TruncatedSeries::zero(order);
    let mut arg_power = ZLaurent::one();
    for k in 0..=order as i64 {
        if k > 0 {
            arg_power = arg_power.mul(arg_coeff);
        }
        let mut scalar = PRational::q_power(2 * k * (k - 1))
            .div(&PRational::from_poly(q_factorial(k as u32)))
            .expect("(q;q)_k nonzero");
        if k % 2 == 1 {
            scalar = scalar.neg();
        }
        let lower_recip = finite_pochhammer_series(lower_coeff, k as u32, order)
            .reciprocal()
            .expect("finite Pochhammer has constant term 1");
        let term = lower_recip
            .shift_up(k as usize)
            .scale(&arg_power.scale(&scalar));
        sum = sum.add(&term).expect("orders match");
    }
    sum
}

/// Continuous q-Hermite polynomial as a symmetric Laurent element:
/// `sum_{k=0}^n [n over k]_q z^{n-2k}`.
///
/// ```
/// use qoscillator::qfunctions::continuous_q_hermite;
/// use qoscillator::ring::ZLaurent;
///
/// assert!(continuous_q_hermite(0).is_one());
/// assert_eq!(
///     continuous_q_hermite(1),
///     ZLaurent::z_power(1).add(&ZLaurent::z_power(-1))
/// );
/// ```
pub fn continuous_q_hermite(n: u32) -> ZLaurent {
    let mut sum = ZLaurent::zero();
    for k in 0..=n as i64 {
        let coeff = PRational::from_poly(q_binomial(n, k));
        sum = sum.add(&ZLaurent::monomial(n as i64 - 2 * k, 0, coeff));
    }
    sum
}

/// Continuous big q-Hermite polynomial, polynomial in the formal
/// parameter `a`: `z^n 2_phi_0(q^{-n}, a z; - | q; q^n z^{-2})` expanded
/// exactly. Setting `a = 0` recovers [`continuous_q_hermite`].
pub fn continuous_big_q_hermite(n: u32) -> ZLaurent {
    let az = ZLaurent::param().mul(&ZLaurent::z_power(1));
    let mut sum = ZLaurent::zero();
    for k in 0..=n {
        let kk = k as i64;
        // [(-1)^k q^{k(k-1)/2}]^{-1} from r=2, s=0.
        let mut scalar = q_pochhammer_q_power(-4 * n as i64, k)
            .mul(&PRational::q_power(-2 * kk * (kk - 1)))
            .mul(&PRational::q_power(4 * n as i64 * kk))
            .div(&PRational::from_poly(q_factorial(k)))
            .expect("(q;q)_k nonzero");
        if k % 2 == 1 {
            scalar = scalar.neg();
        }
        let term = q_pochhammer(&az, k)
            .mul(&ZLaurent::z_power(-2 * kk))
            .scale(&scalar);
        sum = sum.add(&term);
    }
    sum.mul(&ZLaurent::z_power(n as i64))
}

/// Wall (little q-Laguerre) polynomial
/// `p_n(x; a | q) = 2_phi_1(q^{-n}, 0; a q | q; q x)` with `a = q^{j/4}`
/// given in quarters, as a polynomial in the formal argument `x`.
pub fn wall_polynomial(n: u32, a_quarters: i64) -> Result<UPoly> {
    let lower = a_quarters + 4;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        if q_pochhammer_q_power_vanishes(lower, k) {
            return Err(QError::LowerParameterPole);
        }
        let c = q_pochhammer_q_power(-4 * n as i64, k)
            .mul(&PRational::q_power(4 * k as i64))
            .div(
                &PRational::from_poly(q_factorial(k))
                    .mul(&q_pochhammer_q_power(lower, k)),
            )?;
        coeffs.push(c);
    }
    Ok(UPoly::from_coeffs(coeffs))
}

/// q-Laguerre polynomial
/// `L_n^{(rho)}(x; q) = (q^{rho+1};q)_n/(q;q)_n
///  1_phi_1(q^{-n}; q^{rho+1} | q; -x q^{n+rho+1})` for integer
/// `rho >= 0`, as a polynomial in the formal argument `x`.
pub fn q_laguerre(n: u32, rho: i64) -> UPoly {
    assert!(rho >= 0, "q_laguerre requires integer rho >= 0");
    let prefactor = q_pochhammer_q_power(4 * (rho + 1), n)
        .div(&PRational::from_poly(q_factorial(n)))
        .expect("(q;q)_n nonzero");
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let kk = k as i64;
        // (-1)^k from the balancing factor cancels (-1)^k from the
        // argument -x q^{n+rho+1}.
        let c = q_pochhammer_q_power(-4 * n as i64, k)
            .mul(&PRational::q_power(2 * kk * (kk - 1) + 4 * kk * (n as i64 + rho + 1)))
            .div(
                &PRational::from_poly(q_factorial(k))
                    .mul(&q_pochhammer_q_power(4 * (rho + 1), k)),
            )
            .expect("lower parameter q^{rho+1} has no pole for rho >= 0");
        coeffs.push(c.mul(&prefactor));
    }
    UPoly::from_coeffs(coeffs)
}

/// The two-parameter kernel polynomials
/// `sum_{k=0}^n q^{k^2(mu+nu) + 2 nu gamma k} (q^{-n};q)_k /
///  ((q;q)_k (q^{gamma+1};q)_k) x^k`.
pub fn p_polynomial(n: u32, mu: QuarterInt, nu: QuarterInt, gamma: i64) -> Result<UPoly> {
    let lower = 4 * (gamma + 1);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        if q_pochhammer_q_power_vanishes(lower, k) {
            return Err(QError::LowerParameterPole);
        }
        let kk = k as i64;
        let p_exp = kk * kk * (mu.quarters() + nu.quarters()) + 2 * nu.quarters() * gamma * kk;
        let c = q_pochhammer_q_power(-4 * n as i64, k)
            .mul(&PRational::q_power(p_exp))
            .div(
                &PRational::from_poly(q_factorial(k))
                    .mul(&q_pochhammer_q_power(lower, k)),
            )?;
        coeffs.push(c);
    }
    Ok(UPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ZLaurent;

    fn q() -> PPoly {
        PPoly::q_power(4)
    }

    #[test]
    fn pochhammer_empty_product() {
        assert!(q_pochhammer(&ZLaurent::param(), 0).is_one());
    }

    #[test]
    fn pochhammer_two_factors() {
        // (a; q)_2 = (1 - a)(1 - a q)
        let a = ZLaurent::param();
        let expected = ZLaurent::one()
            .sub(&a)
            .mul(&ZLaurent::one().sub(&a.scale(&PRational::q_power(4))));
        assert_eq!(q_pochhammer(&a, 2), expected);
    }

    #[test]
    fn pochhammer_q_base() {
        // (q; q)_3 = (1-q)(1-q^2)(1-q^3)
        let got = q_pochhammer_scalar(&PRational::q_power(4), 3);
        assert_eq!(got, PRational::from_poly(q_factorial(3)));
    }

    #[test]
    fn q_binomial_edges() {
        assert!(q_binomial(5, 0).is_one());
        assert!(q_binomial(5, 5).is_one());
        assert!(q_binomial(5, 6).is_zero());
        assert!(q_binomial(5, -1).is_zero());
    }

    #[test]
    fn q_binomial_2_1() {
        // [2 over 1]_q = 1 + q
        assert_eq!(q_binomial(2, 1), PPoly::one().add(&q()));
    }

    #[test]
    fn q_binomial_4_2() {
        // [4 over 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let expected = PPoly::one()
            .add(&q())
            .add(&PPoly::q_power(8).scale(&num::BigRational::from_integer(2.into())))
            .add(&PPoly::q_power(12))
            .add(&PPoly::q_power(16));
        assert_eq!(q_binomial(4, 2), expected);
    }

    #[test]
    fn q_binomial_symmetry() {
        for n in 0..=20u32 {
            for k in 0..=n as i64 {
                assert_eq!(q_binomial(n, k), q_binomial(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn q_binomial_counts_at_q_one() {
        // Sum of coefficients = ordinary binomial.
        for n in 0..=12u32 {
            for k in 0..=n as i64 {
                let poly = q_binomial(n, k);
                let total: num::BigRational =
                    poly.terms().map(|(_, c)| c.clone()).sum();
                let mut binom = num::BigRational::from_integer(1.into());
                for i in 0..k {
                    binom = binom
                        * num::BigRational::from_integer((n as i64 - i).into())
                        / num::BigRational::from_integer((i + 1).into());
                }
                assert_eq!(total, binom, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn q_exponential_low_orders() {
        // mu = 0: 1 + t/(1-q) + t^2/((1-q)(1-q^2))
        let s = q_exponential(QuarterInt(0), &ZLaurent::one(), 2);
        assert!(s.coeff(0).is_one());
        assert_eq!(
            s.coeff(1).as_scalar().unwrap(),
            PRational::new(PPoly::one(), q_factorial(1)).unwrap()
        );
        assert_eq!(
            s.coeff(2).as_scalar().unwrap(),
            PRational::new(PPoly::one(), q_factorial(2)).unwrap()
        );
        // mu = 1/2: 1 + q^{1/2} t/(1-q)
        let s = q_exponential(QuarterInt(2), &ZLaurent::one(), 1);
        assert_eq!(
            s.coeff(1).as_scalar().unwrap(),
            PRational::new(PPoly::q_power(2), q_factorial(1)).unwrap()
        );
        // zero argument -> 1
        let s = q_exponential(QuarterInt(3), &ZLaurent::zero(), 4);
        assert_eq!(s, TruncatedSeries::one(4));
    }

    #[test]
    fn euler_series_reciprocal_matches_e_q() {
        // reciprocal of the (t;q)_infinity series = sum t^n/(q;q)_n, order 12
        let product = infinite_pochhammer_series(&ZLaurent::one(), 12);
        let rec = product.reciprocal().unwrap();
        let e_q = q_exponential(QuarterInt(0), &ZLaurent::one(), 12);
        assert_eq!(rec, e_q);
    }

    #[test]
    fn big_e_q_product_form() {
        // E_q^{(1/2)}(t) = (-q^{1/2} t; q)_infinity, order 12
        let lhs = q_exponential(QuarterInt(2), &ZLaurent::one(), 12);
        let rhs = infinite_pochhammer_series(
            &ZLaurent::scalar(PRational::q_power(2).neg()),
            12,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn curly_e_q_at_zero_parameter_is_quarter_exponential() {
        // a = 0 collapses to E_q^{(1/4)}, order 12
        let lhs = curly_e_q(&ZLaurent::zero(), 12);
        let rhs = q_exponential(QuarterInt(1), &ZLaurent::one(), 12);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn curly_e_q_first_order_coefficient() {
        // b^1 coefficient: q^{1/4} (1 - a z)(1 - a z^-1)/(1-q)
        let s = curly_e_q(&ZLaurent::param(), 1);
        let az = ZLaurent::param().mul(&ZLaurent::z_power(1));
        let az_inv = ZLaurent::param().mul(&ZLaurent::z_power(-1));
        let expected = ZLaurent::one()
            .sub(&az)
            .mul(&ZLaurent::one().sub(&az_inv))
            .scale(&PRational::new(PPoly::q_power(1), q_factorial(1)).unwrap());
        assert_eq!(*s.coeff(1), expected);
        assert!(s.coeff(0).is_one());
    }

    #[test]
    fn hypergeometric_immediate_termination() {
        // 2_phi_1(q^0, anything; b | q; x) = 1
        let spec = HypergeometricSpec {
            upper: vec![UpperParam::QPower(0), UpperParam::Element(ZLaurent::param())],
            lower: vec![LowerParam::QPower(8)],
        };
        let v = basic_hypergeometric(&spec, &ZLaurent::z_power(1)).unwrap();
        assert!(v.is_one());
    }

    #[test]
    fn hypergeometric_wall_first_order() {
        // 2_phi_1(q^{-1}, 0; q | q; q x) = 1 - x/(1-q) with a = q^0
        let spec = HypergeometricSpec {
            upper: vec![UpperParam::QPower(-4), UpperParam::Zero],
            lower: vec![LowerParam::QPower(4)],
        };
        let x = ZLaurent::param();
        let arg = x.scale(&PRational::q_power(4));
        let v = basic_hypergeometric(&spec, &arg).unwrap();
        let expected = ZLaurent::one().sub(
            &x.scale(&PRational::new(PPoly::one(), q_factorial(1)).unwrap()),
        );
        assert_eq!(v, expected);
    }

    #[test]
    fn hypergeometric_lower_pole_detected() {
        // lower parameter q^{-1} hits (q^{-1};q)_2 = ... (1 - q^0) = 0
        let spec = HypergeometricSpec {
            upper: vec![UpperParam::QPower(-8), UpperParam::Zero],
            lower: vec![LowerParam::QPower(-4)],
        };
        assert_eq!(
            basic_hypergeometric(&spec, &ZLaurent::param()),
            Err(QError::LowerParameterPole)
        );
    }

    #[test]
    fn confluent_phi_first_order() {
        // 1_phi_1(0; t z | q; t/z) at order 1: 1 - (1/z) t / (1-q)
        let s = confluent_phi_series(&ZLaurent::z_power(1), &ZLaurent::z_power(-1), 1);
        assert!(s.coeff(0).is_one());
        let expected = ZLaurent::monomial(
            -1,
            0,
            PRational::new(PPoly::one(), q_factorial(1)).unwrap().neg(),
        );
        assert_eq!(*s.coeff(1), expected);
    }

    #[test]
    fn hermite_low_degrees() {
        assert!(continuous_q_hermite(0).is_one());
        let h1 = continuous_q_hermite(1);
        assert_eq!(h1, ZLaurent::z_power(1).add(&ZLaurent::z_power(-1)));
        let h2 = continuous_q_hermite(2);
        let expected = ZLaurent::z_power(2)
            .add(&ZLaurent::z_power(-2))
            .add(&ZLaurent::scalar(PRational::from_poly(
                PPoly::one().add(&q()),
            )));
        assert_eq!(h2, expected);
    }

    #[test]
    fn hermite_symmetric_with_unit_top_term() {
        for n in 0..=20u32 {
            let h = continuous_q_hermite(n);
            assert!(h.is_symmetric_in_z(), "n={}", n);
            assert!(h.coeff(n as i64, 0).is_one(), "n={}", n);
        }
    }

    #[test]
    fn big_hermite_low_degrees() {
        assert!(continuous_big_q_hermite(0).is_one());
        // n = 1: z + z^-1 - a
        let h1 = continuous_big_q_hermite(1);
        let expected = ZLaurent::z_power(1)
            .add(&ZLaurent::z_power(-1))
            .sub(&ZLaurent::param());
        assert_eq!(h1, expected);
    }

    #[test]
    fn big_hermite_at_zero_parameter() {
        for n in 0..=16u32 {
            let big = continuous_big_q_hermite(n).substitute_param(&PRational::zero());
            assert_eq!(big, continuous_q_hermite(n), "n={}", n);
        }
    }

    #[test]
    fn wall_basics() {
        assert!(wall_polynomial(0, 0).unwrap().is_zero() == false);
        assert!(wall_polynomial(0, 0).unwrap().coeff(0).is_one());
        // p_n(0; a|q) = 1 for all n
        for n in 0..=6u32 {
            let p = wall_polynomial(n, 0).unwrap();
            assert!(p.coeff(0).is_one(), "n={}", n);
        }
        // n = 1, a = q^0: 1 - x/(1-q)
        let p = wall_polynomial(1, 0).unwrap();
        assert_eq!(
            p.coeff(1),
            PRational::new(PPoly::one(), q_factorial(1)).unwrap().neg()
        );
    }

    #[test]
    fn wall_pole_detected() {
        // a = q^{-2}: lower parameter q^{-1}, (q^{-1};q)_2 vanishes
        assert_eq!(wall_polynomial(2, -8), Err(QError::LowerParameterPole));
    }

    #[test]
    fn laguerre_basics() {
        assert!(q_laguerre(0, 0).coeff(0).is_one());
        // L_n at x = 0 -> (q^{rho+1};q)_n/(q;q)_n
        for n in 0..=5u32 {
            for rho in 0..=2i64 {
                let l = q_laguerre(n, rho);
                let expected = q_pochhammer_q_power(4 * (rho + 1), n)
                    .div(&PRational::from_poly(q_factorial(n)))
                    .unwrap();
                assert_eq!(l.coeff(0), expected, "n={} rho={}", n, rho);
            }
        }
    }

    #[test]
    fn laguerre_n1_rho0_regression() {
        // L_1^{(0)}(x;q) = 1 - q x/(1-q): the k=1 coefficient collapses to
        // (1-q^{-1}) q^2 / (1-q)^2 = -q/(1-q).
        let l = q_laguerre(1, 0);
        assert!(l.coeff(0).is_one());
        let expected = PRational::new(PPoly::q_power(4), q_factorial(1))
            .unwrap()
            .neg();
        assert_eq!(l.coeff(1), expected);
    }

    #[test]
    fn p_polynomial_basics() {
        assert!(p_polynomial(0, QuarterInt(0), QuarterInt(0), 0)
            .unwrap()
            .coeff(0)
            .is_one());
        // n = 1, mu = nu = 0, gamma = 0: 1 - x/(q(1-q))
        let p = p_polynomial(1, QuarterInt(0), QuarterInt(0), 0).unwrap();
        let expected = PRational::new(PPoly::one(), PPoly::q_power(4).mul(&q_factorial(1)))
            .unwrap()
            .neg();
        assert_eq!(p.coeff(1), expected);
    }

    #[test]
    fn p_polynomial_pole_for_negative_gamma() {
        assert_eq!(
            p_polynomial(2, QuarterInt(0), QuarterInt(0), -1),
            Err(QError::LowerParameterPole)
        );
    }
}
