//! Polylog-weighted sums Σ_k I_L(T_k) / n_k^{s+L} of the integer-T integrals,
//! written as Dirichlet series values plus an alternating double log series.

use rug::ops::Pow;
use rug::{Float, Rational};
use serde_json::json;

use super::case::{params, tolerance, IdentityCase};
use crate::closed::{Basis, ConstantCombination, IntegralSpec};
use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::hiprec::context::finite;
use crate::hiprec::{dirichlet_beta, dirichlet_eta, PrecisionContext, Polylog};
use crate::quad::{extrapolate_partial_sums, integrate_semi_infinite, ExtrapolationPlan, SeriesResult};

/// Which Dirichlet series the right-hand side is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DirichletKind {
    /// D(σ) = β(σ); the sum runs over T = 2k or 2k+1 with n = 2k+1, k ≥ 0.
    Beta,
    /// D(σ) = (2^{1-σ} - 1) ζ(σ); the sum runs over T = 2k or 2k+1 with n = k ≥ 1.
    Zeta,
}

type Q = (i64, i64);

/// Σ_k I_L(T_k) n_k^{-(s+L)} = Σ_{i=0}^{L} c_i D(s+i)
///     + factor · Σ_k (Σ_j (-1)^j P(j-k) log a_j) (-1)^k n_k^{-(s+L)}.
pub struct FunctionalEquation {
    pub id: u32,
    pub l: u32,
    pub kind: DirichletKind,
    pub odd_t: bool,
    coeffs: &'static [&'static [(Basis, Q)]],
    series_factor: Q,
    series_poly: &'static [Q],
}

use Basis::*;

const FE: [FunctionalEquation; 8] = [
    FunctionalEquation {
        id: 1,
        l: 1,
        kind: DirichletKind::Beta,
        odd_t: false,
        coeffs: &[
            &[(Log2, (3, 1)), (LogPi, (2, 1)), (LogGammaQuarter, (-4, 1))],
            &[(Beta2OverPi, (4, 1)), (Log2, (-3, 1)), (LogPi, (-2, 1)), (LogGammaQuarter, (4, 1))],
        ],
        series_factor: (2, 1),
        series_poly: &[(1, 1), (2, 1)],
    },
    FunctionalEquation {
        id: 2,
        l: 1,
        kind: DirichletKind::Zeta,
        odd_t: true,
        coeffs: &[
            &[(Log2, (2, 1)), (LogPi, (-2, 1))],
            &[(Log2, (-1, 3)), (LogPi, (-1, 1)), (ZetaDotM1, (-12, 1))],
        ],
        series_factor: (-2, 1),
        series_poly: &[(-1, 1), (2, 1)],
    },
    FunctionalEquation {
        id: 3,
        l: 2,
        kind: DirichletKind::Zeta,
        odd_t: false,
        coeffs: &[
            &[(Log2, (-2, 1)), (LogPi, (2, 1))],
            &[(Log2, (8, 3)), (ZetaDotM1, (24, 1))],
            &[(Zeta3OverPi2, (7, 1))],
        ],
        series_factor: (-4, 1),
        series_poly: &[(0, 1), (0, 1), (1, 1)],
    },
    FunctionalEquation {
        id: 4,
        l: 2,
        kind: DirichletKind::Beta,
        odd_t: true,
        coeffs: &[
            &[(Log2, (3, 2)), (LogPi, (1, 1)), (LogGammaQuarter, (-2, 1))],
            &[(Beta2OverPi, (4, 1))],
            &[(BetaDotM2, (-1, 1))],
        ],
        series_factor: (-4, 1),
        series_poly: &[(0, 1), (0, 1), (1, 1)],
    },
    FunctionalEquation {
        id: 5,
        l: 3,
        kind: DirichletKind::Beta,
        odd_t: false,
        coeffs: &[
            &[(Log2, (-1, 2)), (LogPi, (-1, 3)), (LogGammaQuarter, (2, 3))],
            &[(Log2, (3, 2)), (LogPi, (1, 1)), (LogGammaQuarter, (-2, 1)), (Beta2OverPi, (-2, 1))],
            &[
                (Log2, (-1, 1)),
                (LogPi, (-2, 3)),
                (LogGammaQuarter, (4, 3)),
                (Beta2OverPi, (4, 1)),
                (BetaDotM2, (1, 1)),
            ],
            &[(Beta2OverPi, (-4, 3)), (BetaDotM2, (-1, 1)), (Beta4OverPi3, (16, 1))],
        ],
        series_factor: (-1, 1),
        series_poly: &[(0, 1), (4, 3), (4, 1), (8, 3)],
    },
    FunctionalEquation {
        id: 6,
        l: 3,
        kind: DirichletKind::Zeta,
        odd_t: true,
        coeffs: &[
            &[(Log2, (-4, 3)), (LogPi, (4, 3))],
            &[(Log2, (2, 3)), (LogPi, (2, 1)), (ZetaDotM1, (24, 1))],
            &[(Log2, (2, 1)), (LogPi, (2, 3)), (ZetaDotM1, (24, 1)), (Zeta3OverPi2, (14, 1))],
            &[(Log2, (4, 45)), (ZetaDotM1, (4, 1)), (Zeta3OverPi2, (7, 1)), (ZetaDotM3, (40, 1))],
        ],
        series_factor: (1, 1),
        series_poly: &[(0, 1), (4, 3), (-4, 1), (8, 3)],
    },
    FunctionalEquation {
        id: 7,
        l: 4,
        kind: DirichletKind::Zeta,
        odd_t: false,
        coeffs: &[
            &[(Log2, (2, 3)), (LogPi, (-2, 3))],
            &[(Log2, (-16, 9)), (ZetaDotM1, (-16, 1))],
            &[(Log2, (-2, 3)), (LogPi, (2, 3)), (Zeta3OverPi2, (-14, 1))],
            &[(Log2, (8, 5)), (ZetaDotM1, (8, 1)), (ZetaDotM3, (-80, 1))],
            &[(Zeta3OverPi2, (7, 3)), (Zeta5OverPi4, (31, 1))],
        ],
        series_factor: (1, 1),
        series_poly: &[(0, 1), (0, 1), (-4, 3), (0, 1), (4, 3)],
    },
    FunctionalEquation {
        id: 8,
        l: 4,
        kind: DirichletKind::Beta,
        odd_t: true,
        coeffs: &[
            &[(Log2, (-1, 8)), (LogPi, (-1, 12)), (LogGammaQuarter, (1, 6))],
            &[(Beta2OverPi, (-2, 3))],
            &[(Log2, (1, 2)), (LogPi, (1, 3)), (LogGammaQuarter, (-2, 3)), (BetaDotM2, (1, 2))],
            &[(Beta2OverPi, (4, 3)), (Beta4OverPi3, (16, 1))],
            &[(BetaDotM2, (-1, 3)), (BetaDotM4, (1, 12))],
        ],
        series_factor: (1, 1),
        series_poly: &[(0, 1), (0, 1), (-4, 3), (0, 1), (4, 3)],
    },
];

fn q(c: Q) -> Rational {
    Rational::from(c)
}

/// The identity with the given number (1..=8).
pub fn functional_equation(id: u32) -> Result<&'static FunctionalEquation> {
    FE.iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Domain(format!("functional equation ids are 1..8, got {id}")))
}

pub fn all_functional_equations() -> &'static [FunctionalEquation] {
    &FE
}

impl FunctionalEquation {
    /// Exact coefficient c_i of D(s+i).
    pub fn dirichlet_coefficient(&self, i: u32) -> ConstantCombination {
        let mut c = ConstantCombination::zero();
        if let Some(row) = self.coeffs.get(i as usize) {
            for &(b, v) in row.iter() {
                c.add(b, q(v));
            }
        }
        c
    }

    /// factor · P(d) as coefficients in d, ascending.
    pub fn log_weight(&self) -> Vec<Rational> {
        self.series_poly.iter().map(|&c| q(c) * q(self.series_factor)).collect()
    }

    /// Every basis constant appearing on the right-hand side.
    pub fn basis_used(&self) -> Vec<Basis> {
        let mut v: Vec<Basis> = self.coeffs.iter().flat_map(|r| r.iter().map(|t| t.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    fn dirichlet(&self, sigma: &Float, ctx: &PrecisionContext) -> Result<Float> {
        match self.kind {
            DirichletKind::Beta => dirichlet_beta(sigma, ctx),
            DirichletKind::Zeta => Ok(-dirichlet_eta(sigma, ctx)?),
        }
    }

    /// Σ_k I_L(T_k) n_k^{-(s+L)} as one quadrature of the polylog-weighted integrand.
    pub fn lhs(&self, s: &Float, ctx: &PrecisionContext) -> Result<crate::quad::QuadratureResult> {
        let c = ctx.raised(16);
        let p = c.prec();
        let sigma = Float::with_val(p, s + self.l);
        let li = Polylog::new(&sigma, &c)?;
        let half_pow = (-Float::with_val(p, &sigma * c.ln2())).exp();
        let spec = IntegralSpec::new(1, 0, &c.real(self.l), &c.real(0))?;
        let kind = self.kind;
        let odd_t = self.odd_t;
        let f = move |x: &Float| -> Result<Float> {
            // the integrand is below e^{-Lx}·2^L/x
            if *x > p {
                return Ok(Float::with_val(p, 0));
            }
            let x2 = Float::with_val(p, x * 2u32);
            let w = match kind {
                DirichletKind::Beta => {
                    let a = li.eval_neg_log(x)?;
                    let b = li.eval_neg_log(&x2)?;
                    let odd_sum = a - b * &half_pow;
                    if odd_t {
                        odd_sum
                    } else {
                        odd_sum * Float::with_val(p, x.exp_ref())
                    }
                }
                DirichletKind::Zeta => {
                    let b = li.eval_neg_log(&x2)?;
                    if odd_t {
                        b * (-Float::with_val(p, x)).exp()
                    } else {
                        b
                    }
                }
            };
            Ok(spec.integrand(x, p) * w)
        };
        integrate_semi_infinite(&f, ctx, None)
    }

    /// Σ_i c_i D(s+i) + the log series, with the series' extrapolation error.
    pub fn rhs(&self, s: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
        let c = ctx.raised(16);
        let p = c.prec();
        let mut v = Float::with_val(p, 0);
        for i in 0..=self.l {
            let coef = self.dirichlet_coefficient(i).evaluate(&c)?;
            if coef.is_zero() {
                continue;
            }
            v += coef * self.dirichlet(&Float::with_val(p, s + i), &c)?;
        }
        let series = self.log_series(s, &c)?;
        v += &series.value;
        Ok((finite(Float::with_val(ctx.prec(), v), "functional rhs")?, series.est_error))
    }

    /// factor Σ_k (-1)^k A_k n_k^{-(s+L)}, A_k = Σ_j (-1)^j P(j-k) log a_j, summed by
    /// extrapolating even-index partial sums (tail K^{-s} times a series in 1/K).
    pub fn log_series(&self, s: &Float, ctx: &PrecisionContext) -> Result<SeriesResult> {
        let plan = ExtrapolationPlan::for_precision(ctx);
        let kmax = plan.max_index();
        let p = ctx.prec() + 64;
        let sigma = Float::with_val(p, s + self.l);
        let poly = self.log_weight();
        let deg = poly.len() - 1;
        // R_e = Σ_j (-1)^j j^e log a_j over the j already included
        let mut r = vec![Float::with_val(p, 0); deg + 1];
        let mut partial = Vec::with_capacity(kmax as usize + 1);
        let mut acc = Float::with_val(p, 0);
        partial.push(acc.clone());
        let add_j = |r: &mut Vec<Float>, j: u64, arg: u64| {
            if arg <= 1 {
                return;
            }
            let mut t = Float::with_val(p, arg).ln();
            if j % 2 == 1 {
                t = -t;
            }
            for re in r.iter_mut() {
                *re += &t;
                t *= j;
            }
        };
        for idx in 0..kmax {
            let (k, n) = match self.kind {
                DirichletKind::Beta => (idx, 2 * idx + 1),
                DirichletKind::Zeta => (idx + 1, idx + 1),
            };
            if self.kind == DirichletKind::Zeta {
                add_j(&mut r, k, k);
            }
            // P(j - k) = Σ_e q_e(k) j^e, q_e(k) = Σ_{i≥e} p_i C(i,e) (-k)^{i-e}
            let mk = Rational::from(-(k as i64));
            let mut a = Float::with_val(p, 0);
            for e in 0..=deg {
                let mut qe = Rational::new();
                for i in e..=deg {
                    if poly[i] == 0 {
                        continue;
                    }
                    let pw = Rational::from(mk.clone().pow((i - e) as i32));
                    qe += Rational::from(&poly[i] * binomial(i as u32, e as u32)) * pw;
                }
                if qe != 0 {
                    a += Float::with_val(p, &qe) * &r[e];
                }
            }
            let nf = Float::with_val(p, n);
            let mut term = a * (-(Float::with_val(p, nf.ln_ref()) * &sigma)).exp();
            if k % 2 == 1 {
                term = -term;
            }
            acc += term;
            partial.push(acc.clone());
            if self.kind == DirichletKind::Beta {
                add_j(&mut r, k, 2 * k + 1);
            }
        }
        extrapolate_partial_sums(&partial, s.to_f64(), true, ctx)
    }
}

/// Checks one functional equation at s > 0.
pub fn verify_functional_equation(id: u32, s: &Float, ctx: &PrecisionContext) -> Result<IdentityCase> {
    let fe = functional_equation(id)?;
    if !s.is_finite() || *s <= 0 {
        return Err(Error::Domain(format!("functional equations need s > 0, got {}", s.to_f64())));
    }
    let case_id = format!("func_eq_{id}");
    let ps = params([("s", json!(s.to_f64()))]);
    let run = || -> Result<IdentityCase> {
        let lhs = fe.lhs(s, ctx)?;
        let (rhs, series_err) = fe.rhs(s, ctx)?;
        let est = Float::with_val(ctx.prec(), &lhs.est_error + &series_err);
        let tol = tolerance(&est, super::FLOOR_IDENTITY, ctx);
        Ok(IdentityCase::compare(&case_id, ps.clone(), &lhs.value, &rhs, &tol, ctx))
    };
    Ok(run().unwrap_or_else(|e| IdentityCase::failed(&case_id, ps.clone(), &e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::symbolic::form_polys;

    // coefficients in n of p((n-1)/2)
    fn in_odd_n(a: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::new(); a.len()];
        for (i, ai) in a.iter().enumerate() {
            // ((n-1)/2)^i = 2^{-i} Σ_m C(i,m) n^m (-1)^{i-m}
            for m in 0..=i {
                let mut t = Rational::from(ai * binomial(i as u32, m as u32)) / Rational::from(1u64 << i);
                if (i - m) % 2 == 1 {
                    t = -t;
                }
                out[m] += t;
            }
        }
        out
    }

    #[test]
    fn tables_follow_from_integer_t_forms() {
        for fe in all_functional_equations() {
            let (terms, log_poly, odd_args) = form_polys(fe.l, fe.odd_t).unwrap();
            assert_eq!(odd_args, fe.kind == DirichletKind::Beta, "id {}", fe.id);
            assert_eq!(fe.log_weight(), log_poly, "id {}", fe.id);
            let mut derived = vec![ConstantCombination::zero(); fe.l as usize + 1];
            for (b, poly) in terms {
                let inn = match fe.kind {
                    DirichletKind::Beta => in_odd_n(&poly),
                    DirichletKind::Zeta => poly,
                };
                for (i, c) in inn.into_iter().enumerate() {
                    // n^i pairs with D(s + L - i)
                    derived[fe.l as usize - i].add(b, c);
                }
            }
            for (i, d) in derived.iter().enumerate() {
                assert_eq!(fe.dirichlet_coefficient(i as u32), *d, "id {} index {}", fe.id, i);
            }
        }
    }

    #[test]
    fn every_basis_constant_is_exercised() {
        let mut seen = std::collections::BTreeSet::new();
        for fe in all_functional_equations() {
            seen.extend(fe.basis_used());
        }
        let want: Vec<Basis> = Basis::ALL.into_iter().filter(|b| *b != Basis::One).collect();
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), want);
    }

    #[test]
    fn printed_examples_pass() {
        let ctx = PrecisionContext::new(128).unwrap();
        for (id, s) in [(3, 2.0), (1, 1.5), (8, 1.0)] {
            let c = verify_functional_equation(id, &ctx.real(s), &ctx).unwrap();
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn bad_arguments() {
        let ctx = PrecisionContext::new(128).unwrap();
        assert!(verify_functional_equation(9, &ctx.real(1), &ctx).is_err());
        assert!(verify_functional_equation(1, &ctx.real(0), &ctx).is_err());
    }
}
