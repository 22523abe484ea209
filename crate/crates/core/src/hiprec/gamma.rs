//! log Γ, ψ and ψ^{(m)} on the positive real axis from the Stirling series
//! after an upward shift by the functional equation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::ops::Pow;
use rug::Float;

use super::context::{finite, PrecisionContext};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial};

fn bernoulli_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<Float>>>> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<Vec<Float>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// B_{2j} as floats at precision `prec`, for j = 0..count.
pub(crate) fn bernoulli_even(prec: u32, count: usize) -> Arc<Vec<Float>> {
    let mut c = bernoulli_cache().lock().unwrap();
    if let Some(v) = c.get(&prec) {
        if v.len() >= count {
            return v.clone();
        }
    }
    let n = count.max(64);
    let v: Vec<Float> = (0..n).map(|j| Float::with_val(prec, &bernoulli(2 * j as u32))).collect();
    let v = Arc::new(v);
    c.insert(prec, v.clone());
    v
}

fn shift_floor(prec: u32, order: u32) -> u32 {
    (0.12 * prec as f64).ceil() as u32 + 4 + order
}

fn check_positive(z: &Float, what: &str) -> Result<()> {
    if !z.is_finite() || *z <= 0 {
        return Err(Error::Domain(format!("{what} requires z > 0, got {}", z.to_f64())));
    }
    Ok(())
}

/// log Γ(z) for real z > 0.
pub fn log_gamma(z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_positive(z, "log_gamma")?;
    let p = ctx.prec() + 16;
    let floor = shift_floor(p, 0);
    let mut w = Float::with_val(p, z);
    let mut prod = Float::with_val(p, 1);
    while w < floor {
        prod *= &w;
        w += 1;
    }
    let pi2 = Float::with_val(p, rug::float::Constant::Pi) * 2u32;
    let lw = Float::with_val(p, w.ln_ref());
    let mut res = Float::with_val(p, &w - 0.5f64) * &lw - &w + pi2.ln() / 2u32;
    let inv = Float::with_val(p, w.recip_ref());
    let inv2 = Float::with_val(p, inv.square_ref());
    let mut pw = inv;
    let eps = Float::with_val(p, 1) >> p as i32;
    let mut j = 1usize;
    loop {
        let b = bernoulli_even(p, j + 1);
        let term = Float::with_val(p, &b[j] * &pw) / ((2 * j * (2 * j - 1)) as u32);
        res += &term;
        if term.abs() <= Float::with_val(p, res.abs_ref()) * &eps || j > 4 * p as usize {
            break;
        }
        pw *= &inv2;
        j += 1;
    }
    if prod != 1 {
        res -= prod.ln();
    }
    finite(Float::with_val(ctx.prec(), res), "log_gamma")
}

/// Digamma ψ(z) for real z > 0.
pub fn digamma(z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_positive(z, "digamma")?;
    let p = ctx.prec() + 16;
    let floor = shift_floor(p, 0);
    let mut w = Float::with_val(p, z);
    let mut shift = Float::with_val(p, 0);
    while w < floor {
        shift += Float::with_val(p, w.recip_ref());
        w += 1;
    }
    let mut res = Float::with_val(p, w.ln_ref()) - Float::with_val(p, w.recip_ref()) / 2u32;
    let inv2 = Float::with_val(p, w.recip_ref()).square();
    let mut pw = inv2.clone();
    let eps = Float::with_val(p, 1) >> p as i32;
    let mut j = 1usize;
    loop {
        let b = bernoulli_even(p, j + 1);
        let term = Float::with_val(p, &b[j] * &pw) / (2 * j as u32);
        res -= &term;
        if term.abs() <= Float::with_val(p, res.abs_ref()) * &eps || j > 4 * p as usize {
            break;
        }
        pw *= &inv2;
        j += 1;
    }
    finite(Float::with_val(ctx.prec(), res - shift), "digamma")
}

/// Polygamma ψ^{(m)}(z) for integer m ≥ 0 and real z > 0.
pub fn polygamma(m: u32, z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if m == 0 {
        return digamma(z, ctx);
    }
    check_positive(z, "polygamma")?;
    let p = ctx.prec() + 16 + 2 * m;
    let floor = shift_floor(p, 2 * m);
    let mut w = Float::with_val(p, z);
    // Σ (z+i)^{-m-1} over the shift
    let mut shift = Float::with_val(p, 0);
    while w < floor {
        shift += Float::with_val(p, w.recip_ref()).pow(m + 1);
        w += 1;
    }
    let inv = Float::with_val(p, w.recip_ref());
    let inv2 = Float::with_val(p, inv.square_ref());
    let fm1 = Float::with_val(p, &factorial(m - 1));
    let fm = Float::with_val(p, &factorial(m));
    let invm = Float::with_val(p, (&inv).pow(m));
    let mut res = Float::with_val(p, &fm1 * &invm) + Float::with_val(p, &fm * &invm) * &inv / 2u32;
    // running (2j+m-1)!/(2j)! and w^{-(2j+m)}
    let mut ratio = Float::with_val(p, &factorial(m + 1)) / 2u32;
    let mut pw = Float::with_val(p, &invm * &inv2);
    let eps = Float::with_val(p, 1) >> p as i32;
    let mut j = 1usize;
    loop {
        let b = bernoulli_even(p, j + 1);
        let term = Float::with_val(p, &b[j] * &ratio) * &pw;
        res += &term;
        if term.abs() <= Float::with_val(p, res.abs_ref()) * &eps || j > 4 * p as usize {
            break;
        }
        let jj = j as u32;
        // (2j+m+1)!/(2j+2)! from (2j+m-1)!/(2j)!
        ratio *= (2 * jj + m) * (2 * jj + m + 1);
        ratio /= (2 * jj + 1) * (2 * jj + 2);
        pw *= &inv2;
        j += 1;
    }
    if m % 2 == 0 {
        res = -res;
    }
    // ψ^{(m)}(z) = ψ^{(m)}(z+n) - (-1)^m m! Σ (z+i)^{-m-1}
    let corr = shift * &fm;
    if m % 2 == 0 {
        res -= corr;
    } else {
        res += corr;
    }
    finite(Float::with_val(ctx.prec(), res), "polygamma")
}

/// Γ(z) for real non-integer z ≤ 0 or z > 0, by reflection when z < 1/2.
pub(crate) fn gamma_real(z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let p = ctx.prec() + 16;
    if *z > 0.5 {
        return Ok(log_gamma(z, &ctx.raised(16))?.exp());
    }
    let pi = Float::with_val(p, rug::float::Constant::Pi);
    let s = Float::with_val(p, &pi * z).sin();
    if s.is_zero() {
        return Err(Error::Pole(format!("Gamma at {}", z.to_f64())));
    }
    let one_minus = Float::with_val(p, 1) - z;
    let g = log_gamma(&one_minus, &ctx.raised(16))?.exp();
    finite(Float::with_val(ctx.prec(), pi / (s * g)), "gamma")
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

    // MPFR's lngamma and digamma serve as independent oracles.
    #[test]
    fn log_gamma_against_mpfr() {
        let c = ctx();
        for z in [0.001, 0.25, 0.5, 1.0, 1.5, 3.75, 17.0, 123.456] {
            let x = c.real(z);
            let ours = log_gamma(&x, &c).unwrap();
            let oracle = Float::with_val(c.prec(), x.ln_gamma_ref());
            assert!(close(&ours, &oracle, 1e-40), "z={z}");
        }
        let q = log_gamma(&c.real(0.25), &c).unwrap();
        assert!((q.to_f64() - 1.288022524698077).abs() < 1e-15);
        assert!(matches!(log_gamma(&c.real(0), &c), Err(Error::Domain(_))));
        assert!(matches!(log_gamma(&c.real(-1.5), &c), Err(Error::Domain(_))));
    }

    #[test]
    fn digamma_against_mpfr() {
        let c = ctx();
        for z in [1e-3, 0.25, 0.75, 1.0, 2.5, 40.0] {
            let x = c.real(z);
            let ours = digamma(&x, &c).unwrap();
            let oracle = Float::with_val(c.prec(), x.digamma_ref());
            assert!(close(&ours, &oracle, 1e-40), "z={z}");
        }
        // ψ(3/4) - ψ(1/4) = π
        let d = digamma(&c.real(0.75), &c).unwrap() - digamma(&c.real(0.25), &c).unwrap();
        assert!(close(&d, &c.pi(), 1e-40));
        // ψ(1) = -γ
        assert!(close(&digamma(&c.real(1), &c).unwrap(), &(-c.euler_gamma()), 1e-40));
    }

    // Oracle: ψ^{(m)}(z) = (-1)^{m+1} m! Σ_{n≥0} (z+n)^{-m-1}, summed directly with an
    // integral tail estimate plus Euler-Maclaurin corrections at a large cutoff.
    fn polygamma_direct(m: u32, z: f64, prec: u32) -> Float {
        let cut = 4000u32;
        let mut s = Float::with_val(prec, 0);
        for n in 0..cut {
            s += Float::with_val(prec, z + n as f64).pow(-(m as i32) - 1);
        }
        let x = Float::with_val(prec, z + cut as f64);
        let q = m as i32 + 1;
        // ∫_x^∞ t^{-q} + x^{-q}/2 + q x^{-q-1}/12 - q(q+1)(q+2) x^{-q-3}/720
        let mut tail = Float::with_val(prec, (&x).pow(1 - q)) / m;
        tail += Float::with_val(prec, (&x).pow(-q)) / 2u32;
        tail += Float::with_val(prec, (&x).pow(-q - 1)) * q / 12u32;
        tail -= Float::with_val(prec, (&x).pow(-q - 3)) * (q * (q + 1) * (q + 2)) / 720u32;
        let v = (s + tail) * Float::with_val(prec, &factorial(m));
        if m % 2 == 1 {
            v
        } else {
            -v
        }
    }

    #[test]
    fn polygamma_against_direct_sum() {
        let c = PrecisionContext::new(64).unwrap();
        for m in 1..=5 {
            for z in [0.25, 0.75, 1.0, 3.5] {
                let ours = polygamma(m, &c.real(z), &c).unwrap();
                let oracle = polygamma_direct(m, z, 200);
                assert!(close(&ours, &oracle, 1e-18), "m={m} z={z}: {ours} vs {oracle}");
            }
        }
        // ψ'(1) = π²/6
        let c = ctx();
        let t = polygamma(1, &c.real(1), &c).unwrap();
        assert!(close(&t, &(c.pi().square() / 6u32), 1e-40));
    }

    #[test]
    fn gamma_reflection() {
        let c = ctx();
        // Γ(-1/2) = -2√π
        let g = gamma_real(&c.real(-0.5), &c).unwrap();
        let e = -(c.pi().sqrt() * 2u32);
        assert!(close(&g, &e, 1e-40));
    }
}
