//! Exact rational combinations of the named constants plus finite log sums.

use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::{Float, Rational};
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::hiprec::{Constants, PrecisionContext};

/// The constants every integer-T closed form is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    One,
    Log2,
    LogPi,
    LogGammaQuarter,
    Beta2OverPi,
    Beta4OverPi3,
    Zeta3OverPi2,
    Zeta5OverPi4,
    ZetaDotM1,
    ZetaDotM3,
    BetaDotM2,
    BetaDotM4,
}

impl Basis {
    pub const ALL: [Basis; 12] = [
        Basis::One,
        Basis::Log2,
        Basis::LogPi,
        Basis::LogGammaQuarter,
        Basis::Beta2OverPi,
        Basis::Beta4OverPi3,
        Basis::Zeta3OverPi2,
        Basis::Zeta5OverPi4,
        Basis::ZetaDotM1,
        Basis::ZetaDotM3,
        Basis::BetaDotM2,
        Basis::BetaDotM4,
    ];

    /// Key used in JSON output.
    pub fn key(self) -> &'static str {
        match self {
            Basis::One => "1",
            Basis::Log2 => "log2",
            Basis::LogPi => "logpi",
            Basis::LogGammaQuarter => "loggamma_quarter",
            Basis::Beta2OverPi => "beta2/pi",
            Basis::Beta4OverPi3 => "beta4/pi^3",
            Basis::Zeta3OverPi2 => "zeta3/pi^2",
            Basis::Zeta5OverPi4 => "zeta5/pi^4",
            Basis::ZetaDotM1 => "zeta_dot(-1)",
            Basis::ZetaDotM3 => "zeta_dot(-3)",
            Basis::BetaDotM2 => "beta_dot(-2)",
            Basis::BetaDotM4 => "beta_dot(-4)",
        }
    }

    /// Human-readable symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::One => "1",
            Basis::Log2 => "log 2",
            Basis::LogPi => "log π",
            Basis::LogGammaQuarter => "log Γ(1/4)",
            Basis::Beta2OverPi => "β(2)/π",
            Basis::Beta4OverPi3 => "β(4)/π³",
            Basis::Zeta3OverPi2 => "ζ(3)/π²",
            Basis::Zeta5OverPi4 => "ζ(5)/π⁴",
            Basis::ZetaDotM1 => "ζ'(-1)",
            Basis::ZetaDotM3 => "ζ'(-3)",
            Basis::BetaDotM2 => "β'(-2)",
            Basis::BetaDotM4 => "β'(-4)",
        }
    }

    pub fn from_key(key: &str) -> Option<Basis> {
        Basis::ALL.into_iter().find(|b| b.key() == key)
    }

    /// Numerical value from a constants table.
    pub fn value(self, c: &Constants) -> Float {
        let p = c.pi.prec();
        let pow_pi = |e: u32| Float::with_val(p, (&c.pi).pow(e));
        match self {
            Basis::One => Float::with_val(p, 1),
            Basis::Log2 => c.log2.clone(),
            Basis::LogPi => c.logpi.clone(),
            Basis::LogGammaQuarter => c.loggamma_quarter.clone(),
            Basis::Beta2OverPi => Float::with_val(p, &c.beta2 / &c.pi),
            Basis::Beta4OverPi3 => Float::with_val(p, &c.beta4 / pow_pi(3)),
            Basis::Zeta3OverPi2 => Float::with_val(p, &c.zeta3 / pow_pi(2)),
            Basis::Zeta5OverPi4 => Float::with_val(p, &c.zeta5 / pow_pi(4)),
            Basis::ZetaDotM1 => c.zeta_dot_m1.clone(),
            Basis::ZetaDotM3 => c.zeta_dot_m3.clone(),
            Basis::BetaDotM2 => c.beta_dot_m2.clone(),
            Basis::BetaDotM4 => c.beta_dot_m4.clone(),
        }
    }
}

/// global_sign · (Σ coeff_b · b + Σ c_i log m_i), all coefficients exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantCombination {
    pub coeffs: BTreeMap<Basis, Rational>,
    pub log_sum: Vec<(Rational, u64)>,
    pub global_sign: i8,
}

impl Default for ConstantCombination {
    fn default() -> Self {
        Self::zero()
    }
}

impl ConstantCombination {
    pub fn zero() -> Self {
        ConstantCombination { coeffs: BTreeMap::new(), log_sum: Vec::new(), global_sign: 1 }
    }

    /// Adds `c · b` (inside the global sign).
    pub fn add(&mut self, b: Basis, c: Rational) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(b).or_default();
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&b);
        }
    }

    /// Appends `c · log m` (inside the global sign).
    pub fn add_log(&mut self, c: Rational, m: u64) {
        if c != 0 && m > 1 {
            self.log_sum.push((c, m));
        }
    }

    pub fn coefficient(&self, b: Basis) -> Rational {
        self.coeffs.get(&b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        let c = self.canonical();
        c.coeffs.is_empty() && c.log_sum.is_empty()
    }

    /// Folds the sign in, splits log arguments into primes (log 2 joins the basis),
    /// merges equal arguments and drops zeros. Equal values give equal canonical forms
    /// as long as the basis constants are linearly independent over the rationals.
    pub fn canonical(&self) -> ConstantCombination {
        let sign = Rational::from(self.global_sign);
        let mut out = ConstantCombination::zero();
        for (b, c) in &self.coeffs {
            out.add(*b, Rational::from(c * &sign));
        }
        let mut logs: BTreeMap<u64, Rational> = BTreeMap::new();
        for (c, m) in &self.log_sum {
            for (prime, e) in factorize(*m) {
                let w = Rational::from(c * &sign) * e;
                *logs.entry(prime).or_default() += w;
            }
        }
        for (prime, c) in logs {
            if prime == 2 {
                out.add(Basis::Log2, c);
            } else if c != 0 {
                out.log_sum.push((c, prime));
            }
        }
        out
    }

    /// Numerical value at the context precision.
    pub fn evaluate(&self, ctx: &PrecisionContext) -> Result<Float> {
        let c = Constants::at(ctx)?;
        let p = ctx.prec();
        let mut v = Float::with_val(p, 0);
        for (b, q) in &self.coeffs {
            v += Float::with_val(p, q) * b.value(&c);
        }
        for (q, m) in &self.log_sum {
            v += Float::with_val(p, q) * Float::with_val(p, *m).ln();
        }
        if self.global_sign < 0 {
            v = -v;
        }
        Ok(v)
    }

    /// JSON object with every basis key, the log sum and the sign.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for b in Basis::ALL {
            m.insert(b.key().to_string(), Value::String(self.coefficient(b).to_string()));
        }
        let logs: Vec<Value> = self.log_sum.iter().map(|(c, a)| json!([c.to_string(), a])).collect();
        m.insert("log_sum".into(), Value::Array(logs));
        m.insert("global_sign".into(), json!(self.global_sign));
        Value::Object(m)
    }
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn write_term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &Rational, sym: &str) -> fmt::Result {
    let neg = *c < 0;
    let a = Rational::from(c.abs_ref());
    if *first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { "-" } else { "+" })?;
    }
    *first = false;
    if sym == "1" {
        write!(f, "{a}")
    } else if a == 1 {
        write!(f, "{sym}")
    } else {
        write!(f, "{a}·{sym}")
    }
}

impl fmt::Display for ConstantCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        let mut first = true;
        for (b, q) in &c.coeffs {
            write_term(f, &mut first, q, b.symbol())?;
        }
        for (q, m) in &c.log_sum {
            write_term(f, &mut first, q, &format!("log {m}"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_evaluates_to_zero() {
        let ctx = PrecisionContext::new(128).unwrap();
        let z = ConstantCombination::zero();
        assert!(z.evaluate(&ctx).unwrap().is_zero());
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn canonical_folds_logs() {
        let mut a = ConstantCombination::zero();
        a.global_sign = -1;
        a.add_log(Rational::from(1), 12);
        a.add(Basis::Log2, Rational::from(-2));
        let c = a.canonical();
        // -(log 12 - 2 log 2) = -log 3
        assert_eq!(c.coefficient(Basis::Log2), 0);
        assert_eq!(c.log_sum, vec![(Rational::from(-1), 3)]);
        let ctx = PrecisionContext::new(128).unwrap();
        let d = a.evaluate(&ctx).unwrap() - c.evaluate(&ctx).unwrap();
        assert!(d.abs() < 1e-45);
    }

    #[test]
    fn json_has_all_keys() {
        let mut a = ConstantCombination::zero();
        a.add(Basis::Beta2OverPi, Rational::from(4));
        let j = a.to_json();
        for b in Basis::ALL {
            assert!(j.get(b.key()).is_some());
            assert_eq!(Basis::from_key(b.key()), Some(b));
        }
        assert_eq!(j["beta2/pi"], "4");
        assert_eq!(a.to_string(), "4·β(2)/π");
    }
}
