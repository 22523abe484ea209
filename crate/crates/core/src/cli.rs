//! The `hypint` command line: evaluate integrals, dump tables and constants,
//! run certification suites and explore the product formulas.
//!
//! Exit codes: 0 success, 1 failing cases or runtime errors, 2 bad flags or
//! arguments, 3 parameters outside the closed forms (e.g. sech^5 at T ≠ 0).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Float, Rational};
use serde_json::{json, Map, Value};

use crate::closed::{
    beta_recurrence_coeffs, beta_recurrence_eval, tanh_over_x_power, tanh_over_x_sech_exp,
    tanh_over_x_sech_exp_symbolic, zeta_recurrence_coeffs, zeta_recurrence_eval, IntegralSpec,
};
use crate::error::{Error, Result};
use crate::exact::{table, to_csv, to_json, TableKind};
use crate::hiprec::{f_closed, f_product_partial, format_digits, format_real, Constants, PrecisionContext};
use crate::suite::{run_suite, DEFAULT_SEED};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "hypint", version, about = "Closed forms and certification for ∫ (tanh x/x)^N tanh^K x sech^L x e^{-Tx} dx")]
pub struct Cli {
    /// Target precision in bits (≥ 64).
    #[arg(long, global = true, env = "HYPINT_BITS", default_value_t = 128)]
    pub bits: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an integral from its closed form (or by quadrature for general N, K).
    Eval(EvalArgs),
    /// Exact constant combination at integer T (same as `eval --symbolic`).
    Symbolic(EvalArgs),
    /// Print an exact coefficient table.
    Table(TableArgs),
    /// Print the named constants.
    Constants,
    /// Run a certification suite and write its JSON report.
    Verify(VerifyArgs),
    /// Truncated products against their closed forms.
    Products(ProductArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Power of sech.
    #[arg(long = "L")]
    pub l: Option<f64>,
    /// Power of tanh(x)/x.
    #[arg(long = "N")]
    pub n: Option<u32>,
    /// Power of tanh.
    #[arg(long = "K")]
    pub k: Option<u32>,
    /// Exponential rate.
    #[arg(long = "T", default_value_t = 0.0, allow_negative_numbers = true)]
    pub t: f64,
    /// Require the exact constant combination (integer T, L = 1..4).
    #[arg(long)]
    pub symbolic: bool,
    /// ∫ (tanh x/x)^N dx for N ≥ 2.
    #[arg(long)]
    pub power: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_parser = ["g", "h", "c", "d", "u", "v", "x", "y", "dN"])]
    pub kind: String,
    /// Largest row (the order N for dN).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Random draws per suite (per-suite default when omitted).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Argument of f(s); without it the β(2) and ζ'(-1) products are shown.
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub terms: u64,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedParameter(_) | Error::UnsupportedDegree(_) | Error::DivergentInput(_) => 3,
        Error::Domain(_) | Error::UnknownSuite(_) | Error::Precision(_) | Error::Pole(_) => 2,
        _ => 1,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ctx = PrecisionContext::new(cli.bits)?;
    match &cli.command {
        Command::Eval(a) => eval(a, a.symbolic, cli.format, &ctx, out),
        Command::Symbolic(a) => eval(a, true, cli.format, &ctx, out),
        Command::Table(a) => cmd_table(a, cli.format, out),
        Command::Constants => cmd_constants(cli.format, &ctx, out),
        Command::Verify(a) => cmd_verify(a, cli.format, &ctx, out),
        Command::Products(a) => cmd_products(a, cli.format, &ctx, out),
    }
}

fn integer_of(x: f64) -> Option<u64> {
    (x >= 0.0 && x.fract() == 0.0 && x < 1e15).then_some(x as u64)
}

// "c₁·sym(1) + c₂·sym(2) ..." for rational coefficients
fn combination_text(coeffs: &[Rational], sym: impl Fn(u32) -> String) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let neg = *c < 0;
        let a = Rational::from(c.abs_ref());
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let k = i as u32 + 1;
        if a == 1 {
            s.push_str(&sym(k));
        } else {
            s.push_str(&format!("{a}·{}", sym(k)));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn zeta_sym(k: u32) -> String {
    format!("ζ({})/π^{}", 2 * k + 1, 2 * k)
}

fn beta_sym(k: u32) -> String {
    format!("β({})/π^{}", 2 * k, 2 * k - 1)
}

struct Evaluated {
    what: String,
    value: Float,
    exact: Option<String>,
    exact_json: Option<(&'static str, Value)>,
    error_estimate: Option<Float>,
}

fn eval(a: &EvalArgs, symbolic: bool, format: Format, ctx: &PrecisionContext, out: &mut dyn Write) -> Result<i32> {
    let t = a.t;
    if !t.is_finite() || t < 0.0 {
        return Err(Error::UnsupportedParameter(format!("T must be >= 0, got {t}")));
    }
    let ev = if a.power {
        let n = a.n.ok_or_else(|| Error::Domain("--power needs --N".into()))?;
        if a.l.unwrap_or(0.0) != 0.0 || a.k.unwrap_or(0) != 0 || t != 0.0 {
            return Err(Error::Domain("--power takes only --N".into()));
        }
        let v = tanh_over_x_power(n, ctx)?;
        Evaluated {
            what: format!("∫ (tanh x/x)^{n} dx"),
            exact: Some(combination_text(&v.zeta_coeffs, zeta_sym)),
            exact_json: Some(("coefficients", json!(v.zeta_coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()))),
            value: v.value,
            error_estimate: None,
        }
    } else if a.n.is_some_and(|n| n != 1) || a.k.is_some_and(|k| k != 0) {
        if symbolic {
            return Err(Error::UnsupportedParameter("exact forms exist for N = 1, K = 0 only".into()));
        }
        let (n, k) = (a.n.unwrap_or(1), a.k.unwrap_or(0));
        let l = a.l.unwrap_or(0.0);
        let spec = IntegralSpec::new(n, k, &ctx.real(l), &ctx.real(t))?;
        let q = spec.integral(ctx)?;
        Evaluated {
            what: format!("I(N={n}, K={k}, L={l}, T={t}) by quadrature"),
            value: q.value,
            exact: None,
            exact_json: None,
            error_estimate: Some(q.est_error),
        }
    } else {
        let l = a.l.ok_or_else(|| Error::Domain("eval needs --L, or --N with --power".into()))?;
        let li = integer_of(l)
            .filter(|&v| v >= 1)
            .ok_or_else(|| Error::UnsupportedParameter(format!("closed forms need an integer L >= 1, got {l}")))?
            as u32;
        let what = if t == 0.0 {
            format!("∫ tanh(x)/x · sech^{li} x dx")
        } else {
            format!("∫ tanh(x)/x · sech^{li} x · e^(-{t}x) dx")
        };
        match (li, integer_of(t)) {
            (1..=4, ti) => {
                let value = tanh_over_x_sech_exp(li, &ctx.real(t), ctx)?;
                let sym = match ti {
                    Some(ti) => Some(tanh_over_x_sech_exp_symbolic(li, ti)?),
                    None if symbolic => {
                        return Err(Error::UnsupportedParameter(format!("--symbolic needs integer T, got {t}")))
                    }
                    None => None,
                };
                Evaluated {
                    what,
                    value,
                    exact: sym.as_ref().map(|c| c.to_string()),
                    exact_json: sym.as_ref().map(|c| ("combination", c.to_json())),
                    error_estimate: None,
                }
            }
            (_, Some(0)) => {
                let (value, coeffs, sym): (Float, Vec<Rational>, fn(u32) -> String) = if li % 2 == 1 {
                    let n = (li - 1) / 2;
                    (beta_recurrence_eval(n, ctx)?, beta_recurrence_coeffs(n)?, beta_sym)
                } else {
                    let n = li / 2;
                    (zeta_recurrence_eval(n, ctx)?, zeta_recurrence_coeffs(n)?, zeta_sym)
                };
                Evaluated {
                    what,
                    value,
                    exact: Some(combination_text(&coeffs, sym)),
                    exact_json: Some(("coefficients", json!(coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()))),
                    error_estimate: None,
                }
            }
            _ => {
                return Err(Error::UnsupportedParameter(format!(
                    "no closed form for L = {li} at T = {t}: the L ≥ 5 forms in T rest on the conjectured polynomial shape and are not implemented"
                )))
            }
        }
    };
    let value = format_real(&ev.value, ctx);
    match format {
        Format::Json => {
            let mut m = Map::new();
            m.insert("integral".into(), json!(ev.what));
            m.insert("bits".into(), json!(ctx.bits));
            m.insert("value".into(), json!(value));
            if let Some(e) = &ev.exact {
                m.insert("exact".into(), json!(e));
            }
            if let Some((key, j)) = ev.exact_json {
                m.insert(key.into(), j);
            }
            if let Some(e) = &ev.error_estimate {
                m.insert("error_estimate".into(), json!(format_digits(e, 6)));
            }
            emit(out, &format!("{}\n", serde_json::to_string_pretty(&Value::Object(m)).unwrap()))?;
        }
        Format::Text | Format::Csv => {
            let mut line = String::new();
            if let Some(e) = &ev.exact {
                line.push_str(&format!("{e} = "));
            }
            line.push_str(&value);
            if let Some(e) = &ev.error_estimate {
                line.push_str(&format!("  (± {})", format_digits(e, 3)));
            }
            emit(out, &format!("{}\n{line}\n", ev.what))?;
        }
    }
    Ok(0)
}

fn cmd_table(a: &TableArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let kind: TableKind = match a.kind.parse()? {
        TableKind::DN(_) => TableKind::DN(a.n),
        k => k,
    };
    let t = table(kind, a.n)?;
    let text = match format {
        Format::Json => to_json(&t) + "\n",
        _ => to_csv(&t),
    };
    emit(out, &text)?;
    Ok(0)
}

fn cmd_constants(format: Format, ctx: &PrecisionContext, out: &mut dyn Write) -> Result<i32> {
    let c = Constants::at(ctx)?;
    let named: Vec<(&str, String)> = c.named().into_iter().map(|(k, v)| (k, format_real(v, ctx))).collect();
    match format {
        Format::Json => {
            let m: Map<String, Value> = named.into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            let v = json!({"bits": ctx.bits, "constants": m});
            emit(out, &format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))?;
        }
        Format::Csv => {
            let mut s = String::from("name,value\n");
            for (k, v) in named {
                s.push_str(&format!("{k},{v}\n"));
            }
            emit(out, &s)?;
        }
        Format::Text => {
            let mut s = String::new();
            for (k, v) in named {
                s.push_str(&format!("{k:<18} {v}\n"));
            }
            emit(out, &s)?;
        }
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, format: Format, ctx: &PrecisionContext, out: &mut dyn Write) -> Result<i32> {
    let report = run_suite(&a.suite, a.trials, a.seed, ctx)?;
    let json_text = serde_json::to_string_pretty(&report.to_json()).unwrap() + "\n";
    if let Some(path) = &a.out {
        std::fs::write(path, &json_text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    match format {
        Format::Json => emit(out, &json_text)?,
        _ => {
            let mut s = String::new();
            for c in report.failures() {
                s.push_str(&format!(
                    "FAIL {} {} abs_err={} tol={}{}\n",
                    c.id,
                    serde_json::to_string(&c.params).unwrap(),
                    c.abs_err,
                    c.tolerance,
                    c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                ));
            }
            s.push_str(&format!(
                "suite {} [{}] at {} bits, seed {}: {} pass, {} fail, {} skipped ({:.1}s)\n",
                report.suite,
                report.sub_suites.join(", "),
                report.precision_bits,
                report.seed,
                report.summary.pass,
                report.summary.fail,
                report.summary.skipped,
                report.wall_time
            ));
            emit(out, &s)?;
        }
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn cmd_products(a: &ProductArgs, format: Format, ctx: &PrecisionContext, out: &mut dyn Write) -> Result<i32> {
    use crate::closed::{infinite_product_beta2, infinite_product_zdot};
    use crate::hiprec::{dirichlet_beta, zeta_sderiv};
    let rows: Vec<(String, Float, Float)> = match a.s {
        Some(s) => {
            let sf = ctx.real(s);
            vec![(format!("f({s})"), f_product_partial(&sf, a.terms, ctx)?, f_closed(&sf, ctx)?)]
        }
        None => vec![
            ("beta2".to_string(), infinite_product_beta2(a.terms, ctx)?, dirichlet_beta(&ctx.real(2), ctx)?),
            ("zeta_dot_m1".to_string(), infinite_product_zdot(a.terms, ctx)?, zeta_sderiv(&ctx.real(-1), ctx)?),
        ],
    };
    let gap = |p: &Float, c: &Float| format_digits(&Float::with_val(ctx.prec(), p - c).abs(), 6);
    match format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(name, p, c)| {
                    json!({"name": name, "terms": a.terms, "partial": format_real(p, ctx), "closed": format_real(c, ctx), "gap": gap(p, c)})
                })
                .collect();
            emit(out, &format!("{}\n", serde_json::to_string_pretty(&v).unwrap()))?;
        }
        _ => {
            let mut s = String::new();
            for (name, p, c) in &rows {
                s.push_str(&format!("{name} with {} terms\n  partial {}\n  closed  {}\n  gap     {}\n", a.terms, format_real(p, ctx), format_real(c, ctx), gap(p, c)));
            }
            emit(out, &s)?;
        }
    }
    Ok(0)
}
