//! `pmcx`: generate, verify and inspect moment-problem counterexamples as
//! JSON.
//!
//! Exit codes: 0 on success, 1 when `verify` reaches a negative verdict, 2 on
//! malformed input or invalid parameters.

pub mod document;
pub mod presets;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use pmcx_core::construct::{build_cheby_case, build_power_case};
use pmcx_core::decomp::{common_right_factors, right_factor};
use pmcx_core::moments::{moment_sequence, moment_sequence_with_numeric};
use pmcx_core::serial::{CycElemDoc, PolyDoc, ScalarDoc};
use pmcx_core::verify::{verify_instance, DEFAULT_MAX_MOMENT};
use pmcx_core::{cheby, CycElem, CyclotomicContext, Instance, Poly, Rational};
use pmcx_core::{ChebyCaseParams, PowerCaseParams};
use serde::Deserialize;
use serde_json::{json, Value};

use document::InstanceDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pmcx",
    version,
    about = "Generate and certify polynomial moment instances that violate the composition conjecture"
)]
struct Cli {
    /// Write JSON here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Power-family instance: B = z^m, D = z^n R(z^m).
    GenPower {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// R as a preset name (z, z-1, z+1, z-2, z^2-1, z^2+z-2, z^2-3z+2,
        /// z^2-2z) or a JSON polynomial.
        #[arg(long)]
        r: String,
        /// Rational scale with R(c^m) = 0.
        #[arg(long, default_value = "1")]
        c: String,
        /// Root exponents j,l with 0 <= j < l < m.
        #[arg(long, default_value = "0,1")]
        roots: String,
        /// Outer polynomial applied to P (preset or JSON).
        #[arg(long)]
        outer: Option<String>,
    },
    /// Chebyshev-family instance: B = T_n, D = T_m.
    GenCheby {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        outer: Option<String>,
    },
    /// Certify an instance and print the report.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_MOMENT)]
        max_moment: usize,
        #[command(flatten)]
        numeric: NumericArgs,
        input: Option<PathBuf>,
    },
    /// Exact moment sequence of an instance.
    Moments {
        #[arg(long, default_value_t = DEFAULT_MAX_MOMENT)]
        max_moment: usize,
        #[arg(long)]
        numeric: bool,
        input: Option<PathBuf>,
    },
    /// Right factors of a polynomial, or common right factors of P and Q.
    ///
    /// Input is a JSON polynomial, an object {"P", "Q", "a"?, "b"?}, or an
    /// instance document.
    Decompose { input: Option<PathBuf> },
    /// Chebyshev polynomial T_k (T_0 = 2, T_1 = z).
    Cheby { k: usize },
}

#[derive(Debug, Args)]
struct NumericArgs {
    /// Also compute double-precision moments.
    #[arg(long)]
    numeric: bool,
    /// Bound on |numeric m_i|.
    #[arg(long, default_value_t = 1e-6, requires = "numeric")]
    tol: f64,
}

struct Output {
    value: Value,
    code: i32,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output {
            value,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let result = execute(&cli.command, stdin).and_then(|out| {
        let mut text = serde_json::to_string_pretty(&out.value)?;
        text.push('\n');
        match &cli.output {
            Some(path) => {
                fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
            }
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_INPUT
        }
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> anyhow::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn parse_roots(s: &str) -> anyhow::Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [j, l] = parts[..] else {
        bail!("--roots expects j,l, got {s:?}");
    };
    Ok((j.parse().context("--roots")?, l.parse().context("--roots")?))
}

fn instance_json(inst: &Instance) -> anyhow::Result<Value> {
    Ok(serde_json::to_value(InstanceDocument::from_instance(inst))?)
}

fn execute(command: &Command, stdin: &mut dyn Read) -> anyhow::Result<Output> {
    match command {
        Command::GenPower {
            m,
            n,
            r,
            c,
            roots,
            outer,
        } => {
            let params = PowerCaseParams {
                m: *m,
                n: *n,
                r: presets::parse_poly_arg(r)?,
                c: c.parse().map_err(|e| anyhow!("--c: {e}"))?,
                root_pair: parse_roots(roots)?,
                outer: outer.as_deref().map(presets::parse_poly_arg).transpose()?,
            };
            Ok(Output::ok(instance_json(&build_power_case(&params)?)?))
        }
        Command::GenCheby { n, m, outer } => {
            let params = ChebyCaseParams {
                n: *n,
                m: *m,
                outer: outer.as_deref().map(presets::parse_poly_arg).transpose()?,
            };
            Ok(Output::ok(instance_json(&build_cheby_case(&params)?)?))
        }
        Command::Verify {
            max_moment,
            numeric,
            input,
        } => {
            let inst = document::parse_instance(&read_input(input, stdin)?)?;
            let report = verify_instance(&inst, *max_moment, numeric.numeric, numeric.tol)?;
            let passed =
                report.counterexample_established && report.numeric_within_tol != Some(false);
            Ok(Output {
                value: serde_json::to_value(&report)?,
                code: if passed { EXIT_OK } else { EXIT_VERDICT },
            })
        }
        Command::Moments {
            max_moment,
            numeric,
            input,
        } => {
            let inst = document::parse_instance(&read_input(input, stdin)?)?;
            let (p, q, a, b) = (&inst.p, &inst.q, &inst.a, &inst.b);
            let seq = if *numeric {
                moment_sequence_with_numeric(p, q, a, b, *max_moment)?
            } else {
                moment_sequence(p, q, a, b, *max_moment)?
            };
            Ok(Output::ok(
                json!({ "field_order": inst.field_order, "moments": seq }),
            ))
        }
        Command::Decompose { input } => decompose(&read_input(input, stdin)?).map(Output::ok),
        Command::Cheby { k } => Ok(Output::ok(serde_json::to_value(cheby::chebyshev(*k))?)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput {
    #[serde(rename = "P")]
    p: Poly<Rational>,
    #[serde(rename = "Q")]
    q: Poly<Rational>,
    #[serde(default)]
    a: Option<ScalarDoc>,
    #[serde(default)]
    b: Option<ScalarDoc>,
}

fn endpoint(doc: ScalarDoc, order: u64) -> anyhow::Result<CycElem> {
    let ctx = CyclotomicContext::new(order)?;
    Ok(match doc {
        ScalarDoc::Rational(q) => ctx.embed(&q),
        ScalarDoc::Cyclotomic(c) => c.to_elem(&ctx)?,
    })
}

fn endpoint_order(doc: &ScalarDoc) -> u64 {
    match doc {
        ScalarDoc::Rational(_) => 1,
        ScalarDoc::Cyclotomic(CycElemDoc { order, .. }) => *order,
    }
}

fn decompose(text: &str) -> anyhow::Result<Value> {
    let value: Value = serde_json::from_str(text).context("malformed JSON")?;
    if value.get("schema_version").is_some() {
        let inst = document::InstanceDocument::deserialize(&value)
            .context("malformed instance document")?
            .to_instance()?;
        return pair_factors(&inst.p, &inst.q, Some((inst.a, inst.b)));
    }
    if value.get("field").is_some() {
        let p = PolyDoc::deserialize(&value)
            .context("malformed polynomial")?
            .to_rational()?;
        return single_factors(&p);
    }
    let pair = PairInput::deserialize(&value)
        .context("expected a polynomial, a {P, Q} pair or an instance")?;
    let endpoints = match (pair.a, pair.b) {
        (Some(a), Some(b)) => {
            let order = endpoint_order(&a).max(endpoint_order(&b));
            let lift =
                |d: &ScalarDoc| endpoint_order(d) == order || matches!(d, ScalarDoc::Rational(_));
            if !(lift(&a) && lift(&b)) {
                bail!("endpoints a and b must lie in the same field");
            }
            Some((endpoint(a, order)?, endpoint(b, order)?))
        }
        (None, None) => None,
        _ => bail!("a and b must be given together"),
    };
    pair_factors(&pair.p, &pair.q, endpoints)
}

fn single_factors(p: &Poly<Rational>) -> anyhow::Result<Value> {
    let n = p.deg().unwrap_or(0);
    let mut factors = Vec::new();
    for d in (2..n).filter(|d| n.is_multiple_of(*d)) {
        if let Some((w, outer)) = right_factor(p, d)? {
            debug_assert_eq!(outer.compose(&w), *p);
            factors.push(json!({ "d": d, "W": w, "outer": outer }));
        }
    }
    Ok(json!({ "P": p, "factors": factors }))
}

fn pair_factors(
    p: &Poly<Rational>,
    q: &Poly<Rational>,
    endpoints: Option<(CycElem, CycElem)>,
) -> anyhow::Result<Value> {
    let entries = common_right_factors(p, q);
    let mut out = json!({ "P": p, "Q": q, "factor_entries": &entries });
    if let Some((a, b)) = endpoints {
        let agreement: Vec<bool> = entries
            .iter()
            .map(|e| e.w().eval_embedded(&a) == e.w().eval_embedded(&b))
            .collect();
        out["factor_endpoint_agreement"] = json!(agreement);
        out["composition_condition"] = json!(agreement.iter().any(|&x| x));
    }
    Ok(out)
}
