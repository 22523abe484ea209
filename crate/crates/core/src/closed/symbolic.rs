//! Exact values of ∫₀^∞ tanh(x)/x · sech^L x · e^{-Tx} dx at integer T, L = 1..4.

use rug::Rational;

use super::combination::{Basis, ConstantCombination};
use crate::error::{Error, Result};

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

// Σ_i c_i x^i with c_i = (num, den) in ascending order.
fn poly(c: &[(i64, i64)], x: &Rational) -> Rational {
    let mut acc = Rational::new();
    for &(n, d) in c.iter().rev() {
        acc *= x;
        acc += q(n, d);
    }
    acc
}

struct Form {
    terms: &'static [(Basis, &'static [(i64, i64)])],
    // log-sum weight polynomial in d = j - k (before the (-1)^j), and whether the
    // argument is 2j+1 (j = 0..k-1) or j (j = 1..k)
    log_poly: &'static [(i64, i64)],
    odd_args: bool,
}

const Z: (i64, i64) = (0, 1);

const L1_EVEN: Form = Form {
    terms: &[
        (Basis::Log2, &[Z, (6, 1)]),
        (Basis::LogPi, &[Z, (4, 1)]),
        (Basis::LogGammaQuarter, &[Z, (-8, 1)]),
        (Basis::Beta2OverPi, &[(4, 1)]),
    ],
    // 2 (2d + 1)
    log_poly: &[(2, 1), (4, 1)],
    odd_args: true,
};

const L1_ODD: Form = Form {
    terms: &[
        (Basis::Log2, &[(-1, 3), (2, 1)]),
        (Basis::LogPi, &[(-1, 1), (-2, 1)]),
        (Basis::ZetaDotM1, &[(-12, 1)]),
    ],
    // -2 (2d - 1)
    log_poly: &[(2, 1), (-4, 1)],
    odd_args: false,
};

const L2_EVEN: Form = Form {
    terms: &[
        (Basis::Log2, &[Z, (8, 3), (-2, 1)]),
        (Basis::LogPi, &[Z, Z, (2, 1)]),
        (Basis::ZetaDotM1, &[Z, (24, 1)]),
        (Basis::Zeta3OverPi2, &[(7, 1)]),
    ],
    log_poly: &[Z, Z, (-4, 1)],
    odd_args: false,
};

const L2_ODD: Form = Form {
    terms: &[
        (Basis::Log2, &[(3, 2), (6, 1), (6, 1)]),
        (Basis::LogPi, &[(1, 1), (4, 1), (4, 1)]),
        (Basis::LogGammaQuarter, &[(-2, 1), (-8, 1), (-8, 1)]),
        (Basis::Beta2OverPi, &[(4, 1), (8, 1)]),
        (Basis::BetaDotM2, &[(-1, 1)]),
    ],
    log_poly: &[Z, Z, (-4, 1)],
    odd_args: true,
};

const L3_EVEN: Form = Form {
    terms: &[
        (Basis::Log2, &[Z, (1, 1), Z, (-4, 1)]),
        (Basis::LogPi, &[Z, (2, 3), Z, (-8, 3)]),
        (Basis::LogGammaQuarter, &[Z, (-4, 3), Z, (16, 3)]),
        (Basis::Beta2OverPi, &[(2, 3), Z, (-8, 1)]),
        (Basis::BetaDotM2, &[Z, (2, 1)]),
        (Basis::Beta4OverPi3, &[(16, 1)]),
    ],
    // -(8/3 d³ + 4 d² + 4/3 d)
    log_poly: &[Z, (-4, 3), (-4, 1), (-8, 3)],
    odd_args: true,
};

const L3_ODD: Form = Form {
    terms: &[
        (Basis::Log2, &[(4, 45), (2, 1), (2, 3), (-4, 3)]),
        (Basis::LogPi, &[Z, (2, 3), (2, 1), (4, 3)]),
        (Basis::ZetaDotM1, &[(4, 1), (24, 1), (24, 1)]),
        (Basis::Zeta3OverPi2, &[(7, 1), (14, 1)]),
        (Basis::ZetaDotM3, &[(40, 1)]),
    ],
    // 8/3 d³ - 4 d² + 4/3 d
    log_poly: &[Z, (4, 3), (-4, 1), (8, 3)],
    odd_args: false,
};

const L4_EVEN: Form = Form {
    terms: &[
        (Basis::Log2, &[Z, (8, 5), (-2, 3), (-16, 9), (2, 3)]),
        (Basis::LogPi, &[Z, Z, (2, 3), Z, (-2, 3)]),
        (Basis::ZetaDotM1, &[Z, (8, 1), Z, (-16, 1)]),
        (Basis::Zeta3OverPi2, &[(7, 3), Z, (-14, 1)]),
        (Basis::ZetaDotM3, &[Z, (-80, 1)]),
        (Basis::Zeta5OverPi4, &[(31, 1)]),
    ],
    // 4/3 d⁴ - 4/3 d²
    log_poly: &[Z, Z, (-4, 3), Z, (4, 3)],
    odd_args: false,
};

const L4_ODD: Form = Form {
    terms: &[
        (Basis::Log2, &[(3, 8), (1, 1), (-1, 1), (-4, 1), (-2, 1)]),
        (Basis::LogPi, &[(1, 4), (2, 3), (-2, 3), (-8, 3), (-4, 3)]),
        (Basis::LogGammaQuarter, &[(-1, 2), (-4, 3), (4, 3), (16, 3), (8, 3)]),
        (Basis::Beta2OverPi, &[(2, 3), (-4, 3), (-8, 1), (-16, 3)]),
        (Basis::BetaDotM2, &[(1, 6), (2, 1), (2, 1)]),
        (Basis::Beta4OverPi3, &[(16, 1), (32, 1)]),
        (Basis::BetaDotM4, &[(1, 12)]),
    ],
    log_poly: &[Z, Z, (-4, 3), Z, (4, 3)],
    odd_args: true,
};

fn form(l: u32, odd_t: bool) -> Result<&'static Form> {
    Ok(match (l, odd_t) {
        (1, false) => &L1_EVEN,
        (1, true) => &L1_ODD,
        (2, false) => &L2_EVEN,
        (2, true) => &L2_ODD,
        (3, false) => &L3_EVEN,
        (3, true) => &L3_ODD,
        (4, false) => &L4_EVEN,
        (4, true) => &L4_ODD,
        _ => {
            return Err(Error::UnsupportedParameter(format!(
                "exact integer-T forms exist for L = 1..4, got L = {l}"
            )))
        }
    })
}

/// Raw form data: per-basis polynomials in k, the log weight polynomial in
/// d = j - k, and whether the log arguments are 2j+1.
#[cfg(test)]
pub(crate) fn form_polys(l: u32, odd_t: bool) -> Result<(Vec<(Basis, Vec<Rational>)>, Vec<Rational>, bool)> {
    let f = form(l, odd_t)?;
    let conv = |c: &[(i64, i64)]| c.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>();
    let terms = f.terms.iter().map(|(b, p)| (*b, conv(p))).collect();
    Ok((terms, conv(f.log_poly), f.odd_args))
}

/// Basis constants used by the (L, T mod 2) form, in basis order.
pub fn basis_used(l: u32, odd_t: bool) -> Result<Vec<Basis>> {
    let mut v: Vec<Basis> = form(l, odd_t)?.terms.iter().map(|t| t.0).collect();
    v.sort();
    Ok(v)
}

/// Exact value at integer T = 2k or 2k+1 with global sign (-1)^k; the log sum runs
/// over the arguments 2j+1 (0 ≤ j < k) or j (1 ≤ j ≤ k) depending on the form.
pub fn tanh_over_x_sech_exp_symbolic(l: u32, t: u64) -> Result<ConstantCombination> {
    let odd_t = t % 2 == 1;
    let f = form(l, odd_t)?;
    let k = t / 2;
    let kq = Rational::from(k);
    let mut c = ConstantCombination::zero();
    c.global_sign = if k % 2 == 0 { 1 } else { -1 };
    for (b, p) in f.terms {
        c.add(*b, poly(p, &kq));
    }
    let js: Box<dyn Iterator<Item = u64>> = if f.odd_args { Box::new(0..k) } else { Box::new(1..=k) };
    for j in js {
        let d = Rational::from(j as i64 - k as i64);
        let mut w = poly(f.log_poly, &d);
        if j % 2 == 1 {
            w = -w;
        }
        let arg = if f.odd_args { 2 * j + 1 } else { j };
        c.add_log(w, arg);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::hurwitz::tanh_over_x_sech_exp;
    use crate::hiprec::PrecisionContext;
    use rug::Float;

    #[test]
    fn printed_instances() {
        let c = tanh_over_x_sech_exp_symbolic(2, 1).unwrap();
        assert_eq!(c.coefficient(Basis::Log2), q(3, 2));
        assert_eq!(c.coefficient(Basis::LogPi), 1);
        assert_eq!(c.coefficient(Basis::LogGammaQuarter), -2);
        assert_eq!(c.coefficient(Basis::Beta2OverPi), 4);
        assert_eq!(c.coefficient(Basis::BetaDotM2), -1);
        assert!(c.log_sum.is_empty());
        assert_eq!(c.coeffs.len(), 5);

        let c = tanh_over_x_sech_exp_symbolic(1, 0).unwrap();
        assert_eq!(c.coeffs.len(), 1);
        assert_eq!(c.coefficient(Basis::Beta2OverPi), 4);

        let c = tanh_over_x_sech_exp_symbolic(4, 1).unwrap();
        assert_eq!(c.coefficient(Basis::BetaDotM4), q(1, 12));
        assert_eq!(c.coefficient(Basis::Beta4OverPi3), 16);
        assert_eq!(c.coefficient(Basis::Zeta3OverPi2), 0);
    }

    #[test]
    fn every_basis_constant_appears() {
        let mut seen = std::collections::BTreeSet::new();
        for l in 1..=4 {
            for odd in [false, true] {
                seen.extend(basis_used(l, odd).unwrap());
            }
        }
        // the constant 1 never shows up in these forms
        assert_eq!(seen.len(), Basis::ALL.len() - 1);
    }

    #[test]
    fn agrees_with_continuous_form() {
        let ctx = PrecisionContext::new(128).unwrap();
        for l in 1..=4u32 {
            for t in 0..=12u64 {
                let s = tanh_over_x_sech_exp_symbolic(l, t).unwrap().evaluate(&ctx).unwrap();
                let v = tanh_over_x_sech_exp(l, &ctx.real(t), &ctx).unwrap();
                let e = Float::with_val(ctx.prec(), &s - &v).abs();
                assert!(e < 1e-35, "L={l} T={t}: {}", e.to_f64());
            }
        }
    }

    #[test]
    fn rejects_l5() {
        assert!(matches!(tanh_over_x_sech_exp_symbolic(5, 0), Err(Error::UnsupportedParameter(_))));
    }
}
