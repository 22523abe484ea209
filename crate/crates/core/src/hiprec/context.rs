use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};

/// Multiprecision real; finiteness is checked wherever a value leaves the crate.
pub type Real = Float;

/// Target precision plus guard bits used for intermediate work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    pub bits: u32,
    pub guard_bits: u32,
}

pub const DEFAULT_BITS: u32 = 128;
pub const DEFAULT_GUARD: u32 = 32;

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            bits: DEFAULT_BITS,
            guard_bits: DEFAULT_GUARD,
        }
    }
}

impl PrecisionContext {
    pub fn new(bits: u32) -> Result<Self> {
        Self::with_guard(bits, DEFAULT_GUARD)
    }

    pub fn with_guard(bits: u32, guard_bits: u32) -> Result<Self> {
        if bits < 64 {
            return Err(Error::Precision(format!("bits must be >= 64, got {bits}")));
        }
        if guard_bits < 32 {
            return Err(Error::Precision(format!("guard bits must be >= 32, got {guard_bits}")));
        }
        Ok(PrecisionContext { bits, guard_bits })
    }

    /// Working precision in bits (target + guard).
    pub fn prec(&self) -> u32 {
        self.bits + self.guard_bits
    }

    /// Same target with `extra` more guard bits.
    pub fn raised(&self, extra: u32) -> Self {
        PrecisionContext {
            bits: self.bits,
            guard_bits: self.guard_bits + extra,
        }
    }

    /// Context whose target is `extra` bits higher.
    pub fn widened(&self, extra: u32) -> Self {
        PrecisionContext {
            bits: self.bits + extra,
            guard_bits: self.guard_bits,
        }
    }

    pub fn real<T>(&self, v: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.prec(), v)
    }

    /// 2^-prec, the unit roundoff of the working precision.
    pub fn eps(&self) -> Float {
        Float::with_val(self.prec(), 1) >> self.prec() as i32
    }

    /// Default numerical tolerance 2^-(bits-24).
    pub fn target(&self) -> Float {
        Float::with_val(self.prec(), 1) >> (self.bits as i32 - 24)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), Constant::Pi)
    }

    pub fn ln2(&self) -> Float {
        Float::with_val(self.prec(), Constant::Log2)
    }

    pub fn euler_gamma(&self) -> Float {
        Float::with_val(self.prec(), Constant::Euler)
    }

    /// Significant decimal digits shown for this precision: ⌊bits·0.301⌋ - 2.
    pub fn display_digits(&self) -> usize {
        ((self.bits as f64 * 0.301).floor() as usize).saturating_sub(2).max(1)
    }
}

pub(crate) fn finite(x: Float, what: &str) -> Result<Float> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::NoConvergence(format!("{what} produced a non-finite value")))
    }
}

/// Decimal rendering with the context's display digits.
pub fn format_real(x: &Float, ctx: &PrecisionContext) -> String {
    format_digits(x, ctx.display_digits())
}

pub fn format_digits(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_bounds() {
        assert!(PrecisionContext::new(63).is_err());
        assert!(PrecisionContext::with_guard(128, 8).is_err());
        let c = PrecisionContext::new(128).unwrap();
        assert_eq!(c.prec(), 160);
        assert_eq!(c.display_digits(), 36);
    }
}
