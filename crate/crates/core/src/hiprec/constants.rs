//! Named constants shared by the closed forms and the `constants` dump.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::Float;

use super::context::PrecisionContext;
use super::gamma::log_gamma;
use super::zeta::{beta_sderiv_neg_even, dirichlet_beta, riemann_zeta, zeta_sderiv};
use crate::error::Result;

/// The constants appearing in the closed forms, at one precision.
#[derive(Clone, Debug)]
pub struct Constants {
    pub pi: Float,
    pub euler_gamma: Float,
    pub log2: Float,
    pub logpi: Float,
    pub loggamma_quarter: Float,
    pub beta2: Float,
    pub beta4: Float,
    pub zeta3: Float,
    pub zeta5: Float,
    pub zeta_dot_m1: Float,
    pub zeta_dot_m3: Float,
    pub beta_dot_m2: Float,
    pub beta_dot_m4: Float,
}

fn cache() -> &'static Mutex<HashMap<PrecisionContext, Arc<Constants>>> {
    static C: OnceLock<Mutex<HashMap<PrecisionContext, Arc<Constants>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Constants {
    /// Computes (or fetches) all constants at the context's working precision.
    pub fn at(ctx: &PrecisionContext) -> Result<Arc<Constants>> {
        if let Some(c) = cache().lock().unwrap().get(ctx) {
            return Ok(c.clone());
        }
        let c = Arc::new(Self::compute(ctx)?);
        cache().lock().unwrap().insert(*ctx, c.clone());
        Ok(c)
    }

    fn compute(ctx: &PrecisionContext) -> Result<Constants> {
        let pi = ctx.pi();
        Ok(Constants {
            logpi: Float::with_val(ctx.prec(), pi.ln_ref()),
            pi,
            euler_gamma: ctx.euler_gamma(),
            log2: ctx.ln2(),
            loggamma_quarter: log_gamma(&ctx.real(0.25), ctx)?,
            beta2: dirichlet_beta(&ctx.real(2), ctx)?,
            beta4: dirichlet_beta(&ctx.real(4), ctx)?,
            zeta3: riemann_zeta(&ctx.real(3), ctx)?,
            zeta5: riemann_zeta(&ctx.real(5), ctx)?,
            zeta_dot_m1: zeta_sderiv(&ctx.real(-1), ctx)?,
            zeta_dot_m3: zeta_sderiv(&ctx.real(-3), ctx)?,
            beta_dot_m2: beta_sderiv_neg_even(1, ctx)?,
            beta_dot_m4: beta_sderiv_neg_even(2, ctx)?,
        })
    }

    /// (key, value) pairs in a fixed order.
    pub fn named(&self) -> Vec<(&'static str, &Float)> {
        vec![
            ("pi", &self.pi),
            ("euler_gamma", &self.euler_gamma),
            ("log2", &self.log2),
            ("logpi", &self.logpi),
            ("loggamma_quarter", &self.loggamma_quarter),
            ("beta2", &self.beta2),
            ("beta4", &self.beta4),
            ("zeta3", &self.zeta3),
            ("zeta5", &self.zeta5),
            ("zeta_dot_m1", &self.zeta_dot_m1),
            ("zeta_dot_m3", &self.zeta_dot_m3),
            ("beta_dot_m2", &self.beta_dot_m2),
            ("beta_dot_m4", &self.beta_dot_m4),
        ]
    }
}
