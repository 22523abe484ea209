//! Hurwitz zeta ζ(s,a) and its s-derivative by Euler-Maclaurin summation, and
//! the Dirichlet series built on it (ζ, β, η, λ).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::context::{finite, PrecisionContext};
use super::gamma::{bernoulli_even, log_gamma};
use crate::error::{Error, Result};
use crate::exact::{euler_number, factorial};

fn coeff_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<Float>>>> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<Vec<Float>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

// B_{2j}/(2j)! for j = 0..count at precision prec.
fn em_coeffs(prec: u32, count: usize) -> Arc<Vec<Float>> {
    let mut c = coeff_cache().lock().unwrap();
    if let Some(v) = c.get(&prec) {
        if v.len() >= count {
            return v.clone();
        }
    }
    let n = count.max(48);
    let b = bernoulli_even(prec, n);
    let v: Vec<Float> = (0..n)
        .map(|j| Float::with_val(prec, &b[j] / &Float::with_val(prec, &factorial(2 * j as u32))))
        .collect();
    let v = Arc::new(v);
    c.insert(prec, v.clone());
    v
}

struct EmPlan {
    prec: u32,
    m: u32,
}

fn plan(s: &Float, a: &Float, ctx: &PrecisionContext) -> EmPlan {
    let bits = ctx.prec();
    let sa = s.to_f64().abs();
    let m = (0.7 * bits as f64).ceil() as u32 + sa.ceil() as u32;
    let mut extra = 8u32;
    let sf = s.to_f64();
    if sf < 1.0 {
        // the direct sum grows like (M+a)^{1-s} and cancels against the tail
        let top = (m as f64 + a.to_f64() + 1.0).log2();
        extra += ((1.0 - sf) * top).ceil() as u32;
    }
    EmPlan { prec: bits + extra, m }
}

struct EmResult {
    value: Float,
    deriv: Option<Float>,
}

// Σ_{n<M} (n+a)^{-s} + (M+a)^{1-s}/(s-1) + (M+a)^{-s}/2
//   + Σ_j B_{2j}/(2j)! (s)_{2j-1} (M+a)^{-s-2j+1}
// and its exact s-derivative (log weights, no differencing).
fn hurwitz_em(s: &Float, a: &Float, ctx: &PrecisionContext, want_deriv: bool) -> Result<EmResult> {
    let EmPlan { prec: p, m } = plan(s, a, ctx);
    let s = Float::with_val(p, s);
    let a = Float::with_val(p, a);
    let mut val = Float::with_val(p, 0);
    let mut dval = Float::with_val(p, 0);
    for n in 0..m {
        let x = Float::with_val(p, &a + n);
        let l = x.ln();
        let t = Float::with_val(p, &l * &s);
        let e = (-t).exp();
        if want_deriv {
            dval -= Float::with_val(p, &l * &e);
        }
        val += e;
    }
    let b = Float::with_val(p, &a + m);
    let lb = Float::with_val(p, b.ln_ref());
    let pb = Float::with_val(p, &lb * &s);
    let pb = (-pb).exp(); // b^{-s}
    let sm1 = Float::with_val(p, &s - 1u32);
    let bp = Float::with_val(p, &b * &pb); // b^{1-s}
    val += Float::with_val(p, &bp / &sm1);
    val += Float::with_val(p, &pb / 2u32);
    if want_deriv {
        let inv = Float::with_val(p, sm1.recip_ref());
        let inner = Float::with_val(p, &lb * &inv) + Float::with_val(p, inv.square_ref());
        dval -= Float::with_val(p, &bp * &inner);
        dval -= Float::with_val(p, &lb * &pb) / 2u32;
    }
    let scale = Float::with_val(p, val.abs_ref()).max(&Float::with_val(p, bp.abs_ref()));
    let dscale = Float::with_val(p, dval.abs_ref()).max(&Float::with_val(p, &bp * &lb).abs());
    let eps = Float::with_val(p, 1) >> p as i32;
    let tol = Float::with_val(p, &scale * &eps);
    let dtol = Float::with_val(p, &dscale * &eps);
    let binv2 = Float::with_val(p, b.recip_ref()).square();
    // (s)_{2j-1} and its derivative, starting at j = 1: (s)_1 = s
    let mut poch = s.clone();
    let mut dpoch = Float::with_val(p, 1);
    let mut pw = pb.clone(); // b^{-s-2j+1}, j = 1
    pw /= &b;
    let jmin = ((s.to_f64().abs() + 3.0) / 2.0).ceil() as usize;
    let mut j = 1usize;
    loop {
        let c = em_coeffs(p, j + 2);
        let cw = Float::with_val(p, &c[j] * &pw);
        let term = Float::with_val(p, &cw * &poch);
        val += &term;
        let mut small = term.abs() <= tol;
        if want_deriv {
            let dterm = cw * (Float::with_val(p, &dpoch - &Float::with_val(p, &poch * &lb)));
            small = small && dterm.clone().abs() <= dtol;
            dval += dterm;
        }
        if (small && j >= jmin) || j > 4 * p as usize {
            break;
        }
        // (s)_{2j+1} = (s)_{2j-1} (s+2j-1)(s+2j)
        for i in [2 * j - 1, 2 * j] {
            let f = Float::with_val(p, &s + i as u32);
            dpoch = Float::with_val(p, &dpoch * &f) + &poch;
            poch *= f;
        }
        pw *= &binv2;
        j += 1;
    }
    Ok(EmResult {
        value: Float::with_val(ctx.prec(), val),
        deriv: want_deriv.then(|| Float::with_val(ctx.prec(), dval)),
    })
}

fn check_args(s: &Float, a: &Float, what: &str) -> Result<()> {
    if !s.is_finite() {
        return Err(Error::Domain(format!("{what}: non-finite s")));
    }
    if !a.is_finite() || *a <= 0 {
        return Err(Error::Domain(format!("{what}: requires a > 0")));
    }
    if *s == 1 {
        return Err(Error::Pole(format!("{what} at s = 1")));
    }
    Ok(())
}

/// Hurwitz zeta ζ(s, a) for real s ≠ 1 and a > 0.
pub fn hurwitz_zeta(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_args(s, a, "hurwitz_zeta")?;
    finite(hurwitz_em(s, a, ctx, false)?.value, "hurwitz_zeta")
}

/// ∂/∂s ζ(s, a) for real s ≠ 1 and a > 0.
pub fn hurwitz_zeta_sderiv(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_args(s, a, "hurwitz_zeta_sderiv")?;
    finite(hurwitz_em(s, a, ctx, true)?.deriv.unwrap(), "hurwitz_zeta_sderiv")
}

/// ζ(s,a) and ∂ζ/∂s(s,a) from one pass.
pub fn hurwitz_zeta_both(s: &Float, a: &Float, ctx: &PrecisionContext) -> Result<(Float, Float)> {
    check_args(s, a, "hurwitz_zeta")?;
    let r = hurwitz_em(s, a, ctx, true)?;
    Ok((finite(r.value, "hurwitz_zeta")?, finite(r.deriv.unwrap(), "hurwitz_zeta_sderiv")?))
}

/// ζ(s,a) - ζ(s,b), finite at s = 1 where it equals ψ(b) - ψ(a).
pub fn hurwitz_zeta_diff(s: &Float, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Float> {
    for x in [a, b] {
        if !x.is_finite() || *x <= 0 {
            return Err(Error::Domain("hurwitz_zeta_diff: requires a, b > 0".into()));
        }
    }
    let big = if a > b { a } else { b };
    let EmPlan { prec: p, m } = plan(s, big, ctx);
    let s = Float::with_val(p, s);
    let mut val = Float::with_val(p, 0);
    let mut scale = Float::with_val(p, 0);
    let mut tails = Vec::with_capacity(2);
    for (x0, sign) in [(a, 1i32), (b, -1i32)] {
        let x0 = Float::with_val(p, x0);
        let mut part = Float::with_val(p, 0);
        for n in 0..m {
            let x = Float::with_val(p, &x0 + n);
            let t = x.ln() * &s;
            part += (-t).exp();
        }
        let bb = Float::with_val(p, &x0 + m);
        let lb = Float::with_val(p, bb.ln_ref());
        let pb = (-Float::with_val(p, &lb * &s)).exp();
        part += Float::with_val(p, &pb / 2u32);
        let binv2 = Float::with_val(p, bb.recip_ref()).square();
        let mut poch = s.clone();
        let mut pw = Float::with_val(p, &pb / &bb);
        let eps = Float::with_val(p, 1) >> p as i32;
        let jmin = ((s.to_f64().abs() + 3.0) / 2.0).ceil() as usize;
        let mut j = 1usize;
        loop {
            let c = em_coeffs(p, j + 2);
            let term = Float::with_val(p, &c[j] * &pw) * &poch;
            part += &term;
            if (term.abs() <= Float::with_val(p, part.abs_ref()) * &eps && j >= jmin) || j > 4 * p as usize {
                break;
            }
            for i in [2 * j - 1, 2 * j] {
                poch *= Float::with_val(p, &s + i as u32);
            }
            pw *= &binv2;
            j += 1;
        }
        scale = scale.max(&Float::with_val(p, part.abs_ref()));
        if sign > 0 {
            val += part;
        } else {
            val -= part;
        }
        tails.push(lb);
    }
    // [(M+a)^{1-s} - (M+b)^{1-s}] / (s-1) = -(M+b)^u expm1(u (la - lb)) / u, u = 1 - s
    let u = Float::with_val(p, 1u32 - &s);
    let d = Float::with_val(p, &tails[0] - &tails[1]);
    let pole_free = if u.is_zero() {
        -d
    } else {
        let e = Float::with_val(p, &u * &d).exp_m1();
        let lead = Float::with_val(p, &u * &tails[1]).exp();
        -(lead * e / &u)
    };
    val += pole_free;
    let _ = scale;
    finite(Float::with_val(ctx.prec(), val), "hurwitz_zeta_diff")
}

/// Riemann zeta ζ(s) for real s ≠ 1.
pub fn riemann_zeta(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if *s == 1 {
        return Err(Error::Pole("riemann_zeta at s = 1".into()));
    }
    if *s < -10 {
        return zeta_reflected(s, ctx);
    }
    hurwitz_zeta(s, &ctx.real(1), ctx)
}

// ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s) for s < 0.
fn zeta_reflected(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(16);
    let p = c.prec();
    let t = Float::with_val(p, 1u32 - s);
    let pi = Float::with_val(p, Constant::Pi);
    let lg = log_gamma(&t, &c)?;
    let z = hurwitz_zeta(&t, &c.real(1), &c)?;
    let sin = (Float::with_val(p, &pi * s) / 2u32).sin();
    let mag = Float::with_val(p, s * Float::with_val(p, 2u32).ln()) + Float::with_val(p, s - 1u32) * pi.ln() + lg;
    finite(Float::with_val(ctx.prec(), mag.exp() * sin * z), "riemann_zeta")
}

/// Dirichlet beta β(s) = Σ (-1)^n (2n+1)^{-s}, continued to all real s.
pub fn dirichlet_beta(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(8);
    let d = hurwitz_zeta_diff(s, &c.real(0.25), &c.real(0.75), &c)?;
    let scale = (Float::with_val(c.prec(), s * c.ln2()) * -2i32).exp();
    finite(Float::with_val(ctx.prec(), d * scale), "dirichlet_beta")
}

/// Dirichlet eta η(s) = (1 - 2^{1-s}) ζ(s), finite at s = 1 (η(1) = log 2).
pub fn dirichlet_eta(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(8);
    let d = hurwitz_zeta_diff(s, &c.real(0.5), &c.real(1), &c)?;
    let scale = (-Float::with_val(c.prec(), s * c.ln2())).exp();
    finite(Float::with_val(ctx.prec(), d * scale), "dirichlet_eta")
}

/// Dirichlet lambda λ(s) = Σ (2n+1)^{-s} = (1 - 2^{-s}) ζ(s).
pub fn dirichlet_lambda(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(8);
    let z = hurwitz_zeta(s, &c.real(0.5), &c)?;
    let scale = (-Float::with_val(c.prec(), s * c.ln2())).exp();
    finite(Float::with_val(ctx.prec(), z * scale), "dirichlet_lambda")
}

/// ζ'(s) for real s ≠ 1.
pub fn zeta_sderiv(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    hurwitz_zeta_sderiv(s, &ctx.real(1), ctx)
}

/// β'(s) = -log 4 · β(s) + 4^{-s} (ζ'(s,1/4) - ζ'(s,3/4)).
pub fn dirichlet_beta_sderiv(s: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(8);
    let p = c.prec();
    let (z1, d1) = hurwitz_zeta_both(s, &c.real(0.25), &c)?;
    let (z3, d3) = hurwitz_zeta_both(s, &c.real(0.75), &c)?;
    let ln4 = c.ln2() * 2u32;
    let scale = (-Float::with_val(p, s * &ln4)).exp();
    let beta = Float::with_val(p, &z1 - &z3) * &scale;
    let v = Float::with_val(p, &d1 - &d3) * &scale - beta * ln4;
    finite(Float::with_val(ctx.prec(), v), "dirichlet_beta_sderiv")
}

/// ζ'(-2k) = (-1)^k ½ (2π)^{-2k} (2k)! ζ(2k+1), k ≥ 1.
pub fn zeta_sderiv_neg_even(k: u32, ctx: &PrecisionContext) -> Result<Float> {
    if k == 0 {
        return zeta_sderiv(&ctx.real(0), ctx);
    }
    let c = ctx.raised(8);
    let p = c.prec();
    let z = riemann_zeta(&c.real(2 * k + 1), &c)?;
    let twopi = c.pi() * 2u32;
    let v = z * Float::with_val(p, &factorial(2 * k)) / twopi.pow(2 * k) / 2u32;
    let v = if k % 2 == 1 { -v } else { v };
    finite(Float::with_val(ctx.prec(), v), "zeta_sderiv_neg_even")
}

/// β'(1-2k) = (-1)^{k+1} (2/π)^{2k-1} (2k-1)! β(2k), k ≥ 1.
pub fn beta_sderiv_neg_odd(k: u32, ctx: &PrecisionContext) -> Result<Float> {
    if k == 0 {
        return Err(Error::UnsupportedParameter("beta_sderiv_neg_odd needs k >= 1".into()));
    }
    let c = ctx.raised(8);
    let p = c.prec();
    let b = dirichlet_beta(&c.real(2 * k), &c)?;
    let r = Float::with_val(p, 2u32) / c.pi();
    let v = b * Float::with_val(p, &factorial(2 * k - 1)) * r.pow(2 * k - 1);
    let v = if k % 2 == 0 { -v } else { v };
    finite(Float::with_val(ctx.prec(), v), "beta_sderiv_neg_odd")
}

/// β'(-2k) from the Hurwitz s-derivatives at a = 1/4 and 3/4:
/// β'(-2k) = -log 4 · E_{2k}/2 + 4^{2k} (ζ'(-2k,1/4) - ζ'(-2k,3/4)).
pub fn beta_sderiv_neg_even(k: u32, ctx: &PrecisionContext) -> Result<Float> {
    let c = ctx.raised(8);
    let p = c.prec();
    let s = c.real(-(2 * k as i64));
    let d1 = hurwitz_zeta_sderiv(&s, &c.real(0.25), &c)?;
    let d3 = hurwitz_zeta_sderiv(&s, &c.real(0.75), &c)?;
    let half_e = Float::with_val(p, &euler_number(2 * k)) / 2u32;
    let ln4 = c.ln2() * 2u32;
    let v = (d1 - d3) * Float::with_val(p, 4u32).pow(2 * k) - half_e * ln4;
    finite(Float::with_val(ctx.prec(), v), "beta_sderiv_neg_even")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(128).unwrap()
    }

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        Float::with_val(a.prec(), a - b).abs() <= tol * (1.0 + b.to_f64().abs())
    }

    #[test]
    fn zeta_against_mpfr() {
        let c = ctx();
        for s in [-14.5, -9.0, -3.5, -2.0, -1.0, 0.0, 0.5, 1.5, 2.0, 3.0, 7.25, 40.0] {
            let x = c.real(s);
            let ours = riemann_zeta(&x, &c).unwrap();
            let oracle = Float::with_val(c.prec(), x.zeta_ref());
            assert!(close(&ours, &oracle, 1e-40), "s={s}: {ours} vs {oracle}");
        }
        assert!(matches!(riemann_zeta(&c.real(1), &c), Err(Error::Pole(_))));
    }

    #[test]
    fn hurwitz_known_values() {
        let c = ctx();
        let pi2 = c.pi().square();
        // ζ(2, 1/2) = π²/2
        let v = hurwitz_zeta(&c.real(2), &c.real(0.5), &c).unwrap();
        assert!(close(&v, &(pi2.clone() / 2u32), 1e-40));
        // ζ(-2, 1/4) - ζ(-2, 3/4) = -1/32 (Bernoulli polynomials: -B_3(a)/3)
        let d = hurwitz_zeta(&c.real(-2), &c.real(0.25), &c).unwrap()
            - hurwitz_zeta(&c.real(-2), &c.real(0.75), &c).unwrap();
        assert!(close(&d, &c.real(-1.0 / 32.0), 1e-40));
        // ζ(0, a) = 1/2 - a
        let z0 = hurwitz_zeta(&c.real(0), &c.real(0.3), &c).unwrap();
        assert!(close(&z0, &(c.real(0.5) - c.real(0.3)), 1e-40));
    }

    #[test]
    fn lerch_formula() {
        let c = ctx();
        let half_log_2pi = (c.pi() * 2u32).ln() / 2u32;
        for a in [0.25, 0.5, 0.75, 1.0, 2.5, 7.0] {
            let d = hurwitz_zeta_sderiv(&c.real(0), &c.real(a), &c).unwrap();
            let e = log_gamma(&c.real(a), &c).unwrap() - half_log_2pi.clone();
            assert!(close(&d, &e, 1e-40), "a={a}");
        }
    }

    // Oracle: central difference of MPFR's zeta at high precision.
    #[test]
    fn zeta_derivative_against_difference() {
        let c = PrecisionContext::new(64).unwrap();
        let hp = 400;
        for s in [-3.0, -1.0, 0.5, 2.0, 3.5] {
            let h = Float::with_val(hp, 1) >> 100;
            let up = Float::with_val(hp, Float::with_val(hp, s) + &h).zeta();
            let dn = Float::with_val(hp, Float::with_val(hp, s) - &h).zeta();
            let oracle = (up - dn) / (h * 2u32);
            let ours = zeta_sderiv(&c.real(s), &c).unwrap();
            assert!(close(&ours, &oracle, 1e-25), "s={s}");
        }
        let d = zeta_sderiv(&ctx().real(-1), &ctx()).unwrap();
        assert!((d.to_f64() + 0.1654211437004509).abs() < 1e-15);
    }

    #[test]
    fn special_derivatives() {
        let c = ctx();
        for k in 1..=4 {
            let direct = zeta_sderiv(&c.real(-2.0 * k as f64), &c).unwrap();
            assert!(close(&direct, &zeta_sderiv_neg_even(k, &c).unwrap(), 1e-40), "k={k}");
        }
        // ζ'(-2) = -ζ(3)/(4π²)
        let z3 = riemann_zeta(&c.real(3), &c).unwrap();
        let e = -(z3 / (c.pi().square() * 4u32));
        assert!(close(&zeta_sderiv_neg_even(1, &c).unwrap(), &e, 1e-40));
        for k in 1..=3 {
            let s = c.real(1.0 - 2.0 * k as f64);
            let direct = dirichlet_beta_sderiv(&s, &c).unwrap();
            assert!(close(&direct, &beta_sderiv_neg_odd(k, &c).unwrap(), 1e-40), "k={k}");
        }
        // β'(-1) = 2β(2)/π
        let b2 = dirichlet_beta(&c.real(2), &c).unwrap();
        assert!(close(&beta_sderiv_neg_odd(1, &c).unwrap(), &(b2 * 2u32 / c.pi()), 1e-40));
        for k in 0..=2 {
            let s = c.real(-2.0 * k as f64);
            let direct = dirichlet_beta_sderiv(&s, &c).unwrap();
            assert!(close(&direct, &beta_sderiv_neg_even(k, &c).unwrap(), 1e-40), "k={k}");
        }
        // β'(0) = log(Γ(1/4)² / (2π√2))
        let lg = log_gamma(&c.real(0.25), &c).unwrap();
        let e = lg * 2u32 - (c.pi() * 2u32).ln() - c.ln2() / 2u32;
        assert!(close(&beta_sderiv_neg_even(0, &c).unwrap(), &e, 1e-40));
    }

    #[test]
    fn dirichlet_series_values() {
        let c = ctx();
        assert!(close(&dirichlet_beta(&c.real(-2), &c).unwrap(), &c.real(-0.5), 1e-40));
        assert!(close(&dirichlet_beta(&c.real(1), &c).unwrap(), &(c.pi() / 4u32), 1e-40));
        let catalan = Float::with_val(c.prec(), Constant::Catalan);
        assert!(close(&dirichlet_beta(&c.real(2), &c).unwrap(), &catalan, 1e-40));
        // β(3) = π³/32
        assert!(close(&dirichlet_beta(&c.real(3), &c).unwrap(), &(c.pi().pow(3u32) / 32u32), 1e-40));
        assert!(close(&dirichlet_eta(&c.real(1), &c).unwrap(), &c.ln2(), 1e-40));
        for s in [0.5, 2.0, 3.7] {
            let x = c.real(s);
            let z = riemann_zeta(&x, &c).unwrap();
            let two = Float::with_val(c.prec(), 2u32);
            let eta = Float::with_val(c.prec(), 1u32 - two.clone().pow(Float::with_val(c.prec(), 1u32 - &x))) * &z;
            assert!(close(&dirichlet_eta(&x, &c).unwrap(), &eta, 1e-40));
            let lam = Float::with_val(c.prec(), 1u32 - two.pow(-x.clone())) * &z;
            assert!(close(&dirichlet_lambda(&x, &c).unwrap(), &lam, 1e-40));
        }
    }

    #[test]
    fn pole_free_difference_at_one() {
        let c = ctx();
        let a = c.real(0.3);
        let b = c.real(1.7);
        let d = hurwitz_zeta_diff(&c.real(1), &a, &b, &c).unwrap();
        let e = super::super::gamma::digamma(&b, &c).unwrap() - super::super::gamma::digamma(&a, &c).unwrap();
        assert!(close(&d, &e, 1e-40));
        let s = c.real(2.5);
        let d = hurwitz_zeta_diff(&s, &a, &b, &c).unwrap();
        let e = hurwitz_zeta(&s, &a, &c).unwrap() - hurwitz_zeta(&s, &b, &c).unwrap();
        assert!(close(&d, &e, 1e-40));
    }
}
