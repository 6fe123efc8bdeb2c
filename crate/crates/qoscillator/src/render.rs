//! Diff-stable text rendering of the exact types.
//!
//! q-powers are printed as `q^(k/4)` reduced fractions with the internal
//! p-representation hidden; Laurent terms are sorted by descending
//! z-exponent, then ascending parameter exponent.

use num::{BigRational, One, Signed};

use crate::ring::{PPoly, PRational, UPoly, ZLaurent};

fn render_q_power(quarters: i64) -> String {
    if quarters == 0 {
        return String::new();
    }
    if quarters % 4 == 0 {
        let e = quarters / 4;
        if e == 1 {
            "q".to_string()
        } else {
            format!("q^{}", e)
        }
    } else {
        let g = num::integer::gcd(quarters.abs(), 4);
        format!("q^({}/{})", quarters / g, 4 / g)
    }
}

fn render_coeff_monomial(c: &BigRational, quarters: i64) -> String {
    let qpart = render_q_power(quarters);
    let is_one = c.is_one();
    let is_minus_one = (-c).is_one();
    if qpart.is_empty() {
        format!("{}", c)
    } else if is_one {
        qpart
    } else if is_minus_one {
        format!("-{}", qpart)
    } else {
        format!("{}{}", c, qpart)
    }
}

/// Render with terms in ascending p-exponent, compactly: `1+q-q^2`.
pub fn render_ppoly(p: &PPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let term = render_coeff_monomial(c, *e);
        if i == 0 {
            out.push_str(&term);
        } else if let Some(stripped) = term.strip_prefix('-') {
            out.push('-');
            out.push_str(stripped);
        } else {
            out.push('+');
            out.push_str(&term);
        }
    }
    out
}

fn paren_if_sum(p: &PPoly) -> String {
    let s = render_ppoly(p);
    if p.num_terms() > 1 {
        format!("({})", s)
    } else {
        s
    }
}

pub fn render_prational(r: &PRational) -> String {
    if r.denominator().is_one() {
        render_ppoly(r.numerator())
    } else {
        format!(
            "{}/{}",
            paren_if_sum(r.numerator()),
            paren_if_sum(r.denominator())
        )
    }
}

/// Factor a leading sign out of a single-term numerator so it can be
/// rendered as a subtraction.
fn sign_factored(c: &PRational) -> (PRational, bool) {
    let single_neg = c.numerator().num_terms() == 1
        && c.numerator()
            .leading_coeff()
            .map(|x| x.is_negative())
            .unwrap_or(false);
    if single_neg {
        (c.neg(), false)
    } else {
        (c.clone(), true)
    }
}

/// Scalar coefficient rendered for use in front of a variable part.
/// Returns `("", positive)` for +-1 so the variable part stands alone.
fn coeff_prefix(c: &PRational) -> (String, bool) {
    if c.is_one() {
        return (String::new(), true);
    }
    if c.neg().is_one() {
        return (String::new(), false);
    }
    let (cc, positive) = sign_factored(c);
    let needs_paren = !cc.denominator().is_one() || cc.numerator().num_terms() > 1;
    let s = render_prational(&cc);
    if needs_paren {
        (format!("({})*", s), positive)
    } else {
        (format!("{}*", s), positive)
    }
}

/// Standalone scalar term: sign-factored and parenthesized when it is a
/// sum or quotient.
fn render_scalar_atom(c: &PRational) -> String {
    let (cc, positive) = sign_factored(c);
    let needs_paren = !cc.denominator().is_one() || cc.numerator().num_terms() > 1;
    let body = if needs_paren {
        format!("({})", render_prational(&cc))
    } else {
        render_prational(&cc)
    };
    if positive {
        body
    } else {
        format!("-{}", body)
    }
}

fn render_var_power(name: &str, e: i64) -> String {
    if e == 0 {
        String::new()
    } else if e == 1 {
        name.to_string()
    } else {
        format!("{}^{}", name, e)
    }
}

/// Render with terms sorted by descending z-exponent, then ascending
/// parameter exponent, e.g. `z^2 + (1+q) + z^-2`.
pub fn render_zlaurent(f: &ZLaurent, z_name: &str, a_name: &str) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&(i64, i64), &PRational)> = f.terms().collect();
    terms.sort_by_key(|((z, a), _)| (-z, *a));
    let mut out = String::new();
    for (i, ((z, a), c)) in terms.into_iter().enumerate() {
        let zp = render_var_power(z_name, *z);
        let ap = render_var_power(a_name, *a);
        let var = match (zp.is_empty(), ap.is_empty()) {
            (true, true) => String::new(),
            (false, true) => zp,
            (true, false) => ap,
            (false, false) => format!("{}*{}", zp, ap),
        };
        let term = if var.is_empty() {
            render_scalar_atom(c)
        } else {
            let (prefix, positive) = coeff_prefix(c);
            let body = format!("{}{}", prefix, var);
            if positive {
                body
            } else {
                format!("-{}", body)
            }
        };
        if i == 0 {
            out.push_str(&term);
        } else if let Some(stripped) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

pub fn render_upoly(p: &UPoly, x_name: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if k == 0 {
            render_scalar_atom(c)
        } else {
            let (prefix, positive) = coeff_prefix(c);
            let body = format!("{}{}", prefix, render_var_power(x_name, k as i64));
            if positive {
                body
            } else {
                format!("-{}", body)
            }
        };
        if first {
            out.push_str(&term);
            first = false;
        } else if let Some(stripped) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}
