//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::hodge::HodgeResult;
use crate::polyring::BiLaurent;
use crate::rank2_bundles::{BundleModuliQuery, BundleVariant};
use crate::triples22::{
    critical_values_22, cumulative_22, flip_difference, flip_difference_by_kind, large_sigma_22,
    poincare, small_sigma_22, Regime,
};
use crate::triples_low_rank::{
    critical_values_12, critical_values_21, hodge_12, hodge_21, sigma_interval, Bound, SigmaValue,
    TripleType,
};
use crate::verify::{json_lines, run_suite, summary_table, Suite, SuiteParams};

#[derive(Parser, Debug)]
#[command(name = "triples-hodge", about = "Hodge polynomials of moduli of rank-2 bundles and triples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hodge (or Poincare) polynomial of one moduli space.
    Compute(ComputeArgs),
    /// Critical parameter values of a triple type.
    Critical(CriticalArgs),
    /// Wall-crossing differences of a rank (2,2) type.
    Flips(FlipsArgs),
    /// Run the consistency battery.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    M2Odd,
    M2EvenStable,
    M2EvenPolystable,
    T21,
    T12,
    T22Small,
    T22Large,
    T22At,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    space: Space,
    #[arg(long)]
    g: u32,
    #[arg(long, allow_negative_numbers = true)]
    d: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    d1: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    d2: Option<i64>,
    /// NUM[/DEN][+|-], or sm+ / sM+.
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    #[arg(long)]
    poincare: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct CriticalArgs {
    /// N1,N2
    #[arg(long)]
    rank: String,
    #[arg(long)]
    g: u32,
    #[arg(long, allow_negative_numbers = true)]
    d1: i64,
    #[arg(long, allow_negative_numbers = true)]
    d2: i64,
}

#[derive(Args, Debug)]
struct FlipsArgs {
    #[arg(long)]
    g: u32,
    #[arg(long, allow_negative_numbers = true)]
    d1: i64,
    #[arg(long, allow_negative_numbers = true)]
    d2: i64,
    #[arg(long)]
    wall: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "fast")]
    suite: String,
    /// A..B
    #[arg(long, default_value = "2..3")]
    g_range: String,
    #[arg(long, default_value_t = 2)]
    span: u32,
}

/// Parses argv (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the exit code: 0 on success, 1 for
/// rejected input, 2 for an internal consistency failure.
pub fn dispatch<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a, out),
        Command::Critical(a) => critical(&a, out),
        Command::Flips(a) => flips(&a, out),
        Command::Verify(a) => verify(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

fn need(v: Option<i64>, flag: &str) -> Result<i64> {
    v.ok_or_else(|| Error::Domain(format!("--{flag} is required for this space")))
}

fn degrees(a: &ComputeArgs) -> Result<(i64, i64)> {
    Ok((need(a.d1, "d1")?, need(a.d2, "d2")?))
}

/// `sm+` is `sigma_m^+`. `sM+` is just past the last wall for rank (2,2)
/// and, for bounded intervals, just below `sigma_M`, the last point where
/// the moduli space is non-empty.
fn parse_sigma(s: &str, t: &TripleType) -> Result<SigmaValue> {
    let (lo, hi) = sigma_interval(t)?;
    match s {
        "sm+" => Ok(SigmaValue::plus(lo)),
        "sM+" => match hi {
            Bound::Finite(h) => Ok(SigmaValue::minus(h)),
            Bound::Unbounded => Ok(SigmaValue::plus(lo * Rational64::from_integer(2))),
        },
        _ => s.parse(),
    }
}

fn sigma_for(a: &ComputeArgs, t: &TripleType) -> Result<SigmaValue> {
    let s = a
        .sigma
        .as_deref()
        .ok_or_else(|| Error::Domain("--sigma is required for this space".into()))?;
    parse_sigma(s, t)
}

type LowRankFn = fn(&TripleType, &SigmaValue) -> Result<HodgeResult>;

fn compute_hodge(a: &ComputeArgs) -> Result<(String, HodgeResult, Option<TripleType>)> {
    let bundle = |variant| -> Result<HodgeResult> {
        BundleModuliQuery::new(a.g, need(a.d, "d")?, variant)?.compute()
    };
    Ok(match a.space {
        Space::M2Odd => ("m2-odd".into(), bundle(BundleVariant::OddStable)?, None),
        Space::M2EvenStable => ("m2-even-stable".into(), bundle(BundleVariant::EvenStable)?, None),
        Space::M2EvenPolystable => ("m2-even-polystable".into(), bundle(BundleVariant::EvenPolystable)?, None),
        Space::T21 | Space::T12 => {
            let (d1, d2) = degrees(a)?;
            let (t, f): (TripleType, LowRankFn) = match a.space {
                Space::T21 => (TripleType::rank21(a.g, d1, d2), hodge_21),
                _ => (TripleType::rank12(a.g, d1, d2), hodge_12),
            };
            let s = sigma_for(a, &t)?;
            (format!("{t} sigma={s}"), f(&t, &s)?, Some(t))
        }
        Space::T22Small | Space::T22Large | Space::T22At => {
            let (d1, d2) = degrees(a)?;
            let t = TripleType::rank22(a.g, d1, d2);
            match a.space {
                Space::T22Small => (format!("{t} small"), small_sigma_22(&t)?, Some(t)),
                Space::T22Large => (format!("{t} large"), large_sigma_22(&t)?, Some(t)),
                _ => {
                    let s = sigma_for(a, &t)?;
                    (format!("{t} sigma={s}"), cumulative_22(&t, &s)?, Some(t))
                }
            }
        }
    })
}

fn render(p: &BiLaurent, format: Format, univariate: bool) -> String {
    match (format, univariate) {
        (Format::Latex, _) => p.to_latex(),
        (_, true) => p.to_univariate_string("t"),
        _ => p.to_string(),
    }
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    let (label, h, t) = compute_hodge(a)?;
    let poly = if a.poincare {
        match (a.space, t) {
            (Space::T22Small, Some(t)) => poincare(&t, Regime::Small)?,
            (Space::T22Large, Some(t)) => poincare(&t, Regime::Large)?,
            _ => h.poly.diagonal(),
        }
    } else {
        h.poly.clone()
    };
    let text = match a.format {
        Format::Json => {
            let key = if a.poincare { "poincare" } else { "hodge" };
            json!({
                "space": label,
                "dim": h.dim,
                "smooth": h.smooth,
                "projective": h.projective,
                key: poly,
            })
            .to_string()
        }
        f => render(&poly, f, a.poincare),
    };
    writeln!(out, "{text}").map_err(io)?;
    Ok(0)
}

fn io(e: std::io::Error) -> Error {
    Error::UnsupportedOperation(format!("write failed: {e}"))
}

fn critical(a: &CriticalArgs, out: &mut dyn Write) -> Result<i32> {
    let rank: Vec<i64> = a
        .rank
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Domain(format!("--rank expects N1,N2, got '{}'", a.rank)))?;
    match rank.as_slice() {
        [2, 1] => {
            for c in critical_values_21(&TripleType::rank21(a.g, a.d1, a.d2))? {
                writeln!(out, "{c}").map_err(io)?;
            }
        }
        [1, 2] => {
            for c in critical_values_12(&TripleType::rank12(a.g, a.d1, a.d2))? {
                writeln!(out, "{c}").map_err(io)?;
            }
        }
        [2, 2] => {
            for w in critical_values_22(&TripleType::rank22(a.g, a.d1, a.d2))? {
                writeln!(out, "{w}").map_err(io)?;
            }
        }
        _ => return Err(Error::Domain(format!("unsupported rank {}; expected 2,1 or 1,2 or 2,2", a.rank))),
    }
    Ok(0)
}

fn flips(a: &FlipsArgs, out: &mut dyn Write) -> Result<i32> {
    let t = TripleType::rank22(a.g, a.d1, a.d2);
    let walls = critical_values_22(&t)?;
    let selected: Vec<_> = match a.wall {
        Some(n) => {
            let w = walls.iter().find(|w| w.n == n).copied().ok_or_else(|| {
                Error::Domain(format!("no wall with index n = {n} for {t}"))
            })?;
            vec![w]
        }
        None => walls,
    };
    for w in selected {
        if !w.flips_supported() {
            if a.wall.is_some() {
                return Err(Error::EvenDegreeSum(t.d1 + t.d2));
            }
            writeln!(out, "{w}").map_err(io)?;
            continue;
        }
        let unified = flip_difference(&t, &w)?;
        let residual = &unified - &flip_difference_by_kind(&t, &w)?;
        if !residual.is_zero() {
            return Err(Error::Consistency { check: format!("flip routes {t} n={}", w.n), residual });
        }
        let line = match a.format {
            Format::Json => json!({ "wall": w, "difference": unified }).to_string(),
            f => format!("{w}: {}", render(&unified, f, false)),
        };
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(0)
}

fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Domain(format!("--g-range expects A..B, got '{s}'"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || b < a {
        return Err(Error::Domain(format!("--g-range needs 2 <= A <= B, got {s}")));
    }
    Ok((a, b))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let suite: Suite = a.suite.parse()?;
    let (g_min, g_max) = parse_range(&a.g_range)?;
    let reports = run_suite(&suite, &SuiteParams { g_min, g_max, span: a.span });
    write!(out, "{}", json_lines(&reports)).map_err(io)?;
    write!(err, "{}", summary_table(&reports)).map_err(io)?;
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("triples-hodge").chain(args.iter().copied());
        let code = dispatch(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sigma_aliases() {
        let t = TripleType::rank21(2, 5, 0);
        assert_eq!(parse_sigma("sm+", &t).unwrap(), SigmaValue::plus(Rational64::new(5, 2)));
        assert_eq!(parse_sigma("sM+", &t).unwrap(), SigmaValue::minus(Rational64::from_integer(10)));
        let t22 = TripleType::rank22(2, 6, 1);
        assert_eq!(parse_sigma("sM+", &t22).unwrap(), SigmaValue::plus(Rational64::from_integer(5)));
        assert_eq!(parse_sigma("7/2-", &t22).unwrap(), SigmaValue::minus(Rational64::new(7, 2)));
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..3").unwrap(), (2, 3));
        assert!(parse_range("3..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, err) = run(&["compute", "--bogus"]);
        assert_eq!(code, 1);
        assert!(err.contains("Usage"));
    }

    #[test]
    fn missing_sigma_is_rejected() {
        let (code, _, err) = run(&["compute", "--space", "t21", "--g", "2", "--d1", "5", "--d2", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("--sigma"));
    }
}
