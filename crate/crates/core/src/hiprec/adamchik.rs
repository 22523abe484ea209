//! ∫₀^z x^n ψ(x) dx in closed form through Hurwitz s-derivatives.

use rug::ops::Pow;
use rug::Float;

use super::context::{finite, PrecisionContext};
use super::zeta::{hurwitz_zeta_sderiv, zeta_sderiv};
use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, harmonic};

/// Bernoulli polynomial B_n(z) at a real point.
pub fn bernoulli_poly_real(n: u32, z: &Float, prec: u32) -> Float {
    let mut acc = Float::with_val(prec, 0);
    for k in 0..=n {
        let c = Float::with_val(prec, &bernoulli(k)) * Float::with_val(prec, &binomial(n, k));
        acc += c * Float::with_val(prec, (&z).pow(n - k));
    }
    acc
}

/// ∫₀^z x^n ψ(x) dx for n ≥ 1 and z > 0:
///
/// ```text
/// (-1)^{n-1} ζ'(-n) + (-1)^n/(n+1) B_{n+1} H_n
///   - Σ_{k=0}^n (-1)^k C(n,k) z^{n-k}/(k+1) B_{k+1}(z) H_k
///   + Σ_{k=0}^n (-1)^k C(n,k) z^{n-k} ζ'(-k, z)
/// ```
///
/// For n = 0 the integral diverges at the origin; the same expression then
/// returns the regularized value log Γ(z).
pub fn adamchik_psi_integral(n: u32, z: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !z.is_finite() || *z <= 0 {
        return Err(Error::Domain("adamchik_psi_integral needs z > 0".into()));
    }
    let c = ctx.raised(16 + 2 * n);
    let p = c.prec();
    let z = Float::with_val(p, z);
    let sgn = |k: u32| if k % 2 == 0 { 1i32 } else { -1i32 };
    let mut acc = zeta_sderiv(&c.real(-(n as i64)), &c)? * (-sgn(n));
    acc += Float::with_val(p, &(bernoulli(n + 1) * harmonic(n))) * sgn(n) / (n + 1);
    for k in 0..=n {
        let zp = Float::with_val(p, (&z).pow(n - k)) * Float::with_val(p, &binomial(n, k)) * sgn(k);
        if k > 0 {
            let bk = bernoulli_poly_real(k + 1, &z, p) * Float::with_val(p, &harmonic(k)) / (k + 1);
            acc -= Float::with_val(p, &zp * &bk);
        }
        acc += zp * hurwitz_zeta_sderiv(&c.real(-(k as i64)), &z, &c)?;
    }
    finite(Float::with_val(ctx.prec(), acc), "adamchik_psi_integral")
}
