//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text for stdout and stderr; `main` only prints it.
//!
//! Exit codes: 0 success, 1 failed check or evaluation error, 2 usage error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::TauError;
use crate::partitions::Partition;
use crate::poly::Family;
use crate::rspec::RSpec;
use crate::scalar::{parse_list, Scalar};
use crate::schur::TimesSpec;
use crate::suite::{Suite, CRITERIA};
use crate::tau::{
    clebsch_gordan_q, pfs_coefficients, pfs_multivar, qphi_coefficients, qphi_coefficients_qa, qphi_multivar,
    qphi_multivar_qa, AskeyWilson, Spins, TauExpansion,
};
use crate::verify::{
    check_hirota, check_kp_bilinear, check_ode, check_prop4, check_prop4_qb, check_qdiff, check_qdiff_qa,
    check_remark1, check_toda, det_oracle_tau, CheckReport, Gauge, Remark1Mode,
};

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "taukit", version, about = "Exact Schur-series tau-functions and identity checks")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients r_λ(M) for all |λ| ≤ d
    Expand {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate a special-function family
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Run one identity check and print its report
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run the acceptance battery
    Suite {
        /// Comma-separated criterion numbers; all by default
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// r(D) as JSON, or @path to a JSON file
    #[arg(long, allow_hyphen_values = true)]
    rspec: String,
    #[arg(short = 'M', default_value_t = 0, allow_negative_numbers = true)]
    m: i64,
    #[arg(short = 'd', default_value_t = 5)]
    d: usize,
}

#[derive(Args, Debug)]
struct Params {
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    b: String,
}

#[derive(Args, Debug)]
struct QValues {
    /// Values of q^{a_k}, used instead of --a
    #[arg(long, allow_hyphen_values = true)]
    qa: Option<String>,
    /// Values of q^{b_k}, used instead of --b
    #[arg(long, allow_hyphen_values = true)]
    qb: Option<String>,
}

#[derive(Subcommand, Debug)]
enum EvalCmd {
    /// pF_s: one-variable coefficients, and the multivariate value at --x
    Pfq {
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(short = 'M', default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// pΦ_s, the q-analogue
    Qphi {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        qv: QValues,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(short = 'M', default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Askey-Wilson polynomial p_n(x; a, b, c, d | q) with x = cos η
    Aw {
        #[arg(short = 'n')]
        n: i64,
        /// a,b,c,d
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// cos η
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// q-Clebsch-Gordan coefficient
    Cg {
        /// l1,l2,l,j,k; half-integers allowed
        #[arg(long, allow_hyphen_values = true)]
        spins: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GaugeArg {
    Generalized,
    Standard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    QSpec,
    Miwa,
    Dual,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// τ(M)∂β1∂t1τ(M) - ∂t1τ ∂β1τ = r(M)τ(M-1)τ(M+1)
    Hirota {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Toda lattice at site M, generalized or standard gauge
    Toda {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = GaugeArg::Generalized)]
        gauge: GaugeArg,
    },
    /// (D1^4 + 3D2^2 - 4D1D3) τ·τ = 0
    Kp {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Hypergeometric ODE on the pF_s coefficients
    Ode {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// q-difference equation on the pΦ_s coefficients
    Qdiff {
        #[command(flatten)]
        params: Params,
        #[command(flatten)]
        qv: QValues,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Determinant of the finite window against the Schur series
    Oracle {
        #[command(flatten)]
        spec: SpecArgs,
        /// Defaults to d
        #[arg(long)]
        window: Option<usize>,
    },
    /// Vanishing for partitions longer than N (or wider than K)
    Remark1 {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// N for q-spec and miwa, K for dual
        #[arg(short = 'N', default_value_t = 2)]
        n: usize,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        q: String,
        /// Miwa variables; defaults to 1/2, 1/3, …
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(short = 'd', default_value_t = 7)]
        d: usize,
    },
    /// Both sides of the b-reparametrisation
    Prop4 {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Value of q^b, for q-rational r
        #[arg(long, allow_hyphen_values = true)]
        qb: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Eval(Box<TauError>),
}

impl From<TauError> for Failure {
    fn from(e: TauError) -> Self {
        Failure::Eval(Box::new(e))
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage<T>(e: impl ToString) -> CliResult<T> {
    Err(Failure::Usage(e.to_string()))
}

fn scalar(s: &str) -> CliResult<Scalar> {
    s.parse().or_else(usage)
}

fn list(s: &str) -> CliResult<Vec<Scalar>> {
    parse_list(s).or_else(usage)
}

fn read_rspec(src: &str) -> CliResult<RSpec> {
    let text = match src.strip_prefix('@') {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return usage(format!("cannot read {path}: {e}")),
        },
        None => src.to_string(),
    };
    RSpec::from_json(&text).or_else(usage)
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                // --help and --version
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.cmd) {
        Ok((pass, stdout)) => Output { code: if pass { 0 } else { 1 }, stdout, stderr: String::new() },
        Err(Failure::Usage(m)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Eval(e)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cmd: Command) -> CliResult<(bool, String)> {
    match cmd {
        Command::Expand { spec, format } => {
            let r = read_rspec(&spec.rspec)?;
            let coeffs = TauExpansion::new(&r, spec.m, spec.d).coeffs()?;
            Ok((true, emit_expansion(&coeffs, format)))
        }
        Command::Eval(e) => eval(e),
        Command::Verify(v) => {
            let rep = verify(v)?;
            Ok((rep.pass, format!("{}\n", rep.to_json())))
        }
        Command::Suite { only, format } => {
            let suite = Suite::from_env().or_else(usage)?;
            let ids: Vec<u32> = match only {
                None => (1..=CRITERIA).collect(),
                Some(s) => s
                    .split(',')
                    .map(|x| x.trim().parse::<u32>().ok().filter(|i| (1..=CRITERIA).contains(i)))
                    .collect::<Option<_>>()
                    .map_or_else(|| usage(format!("--only expects numbers 1..={CRITERIA}")), Ok)?,
            };
            let results: Vec<_> = ids.iter().map(|&id| suite.run(id)).collect();
            let pass = results.iter().all(|r| r.pass);
            let out = match format {
                Format::Json => {
                    let v = json!({ "seed": suite.seed.to_string(), "pass": pass, "criteria": results });
                    format!("{v}\n")
                }
                Format::Csv => csv_rows(
                    ["criterion", "pass", "checks"],
                    results.iter().map(|r| [r.id.to_string(), r.pass.to_string(), r.checks.to_string()]),
                ),
            };
            Ok((pass, out))
        }
    }
}

fn csv_rows<const N: usize>(header: [&str; N], rows: impl Iterator<Item = [String; N]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn coefficient_table(c: &[Scalar], format: Format, mut head: Map<String, Value>, value: Option<Scalar>) -> String {
    match format {
        Format::Csv => {
            csv_rows(["k", "coefficient"], c.iter().enumerate().map(|(k, x)| [k.to_string(), x.to_string()]))
        }
        Format::Json => {
            head.insert("coefficients".into(), json!(c));
            if let Some(v) = value {
                head.insert("value".into(), json!(v));
            }
            format!("{}\n", Value::Object(head))
        }
    }
}

fn eval(cmd: EvalCmd) -> CliResult<(bool, String)> {
    match cmd {
        EvalCmd::Pfq { params, x, order, m, format } => {
            let (a, b) = (list(&params.a)?, list(&params.b)?);
            let c = pfs_coefficients(&a, &b, m, order)?;
            let mut head = Map::new();
            head.insert("family".into(), json!("pfq"));
            head.insert("a".into(), json!(a));
            head.insert("b".into(), json!(b));
            head.insert("M".into(), json!(m));
            head.insert("order".into(), json!(order));
            let value = match x {
                Some(x) => {
                    let x = list(&x)?;
                    head.insert("x".into(), json!(x));
                    let v = pfs_multivar(&a, &b, m, &TimesSpec::MiwaPlus(x), order)?;
                    Some(v.as_value().expect("numeric times").clone())
                }
                None => None,
            };
            Ok((true, coefficient_table(&c, format, head, value)))
        }
        EvalCmd::Qphi { params, qv, q, x, order, m, format } => {
            let q = scalar(&q)?;
            let mut head = Map::new();
            head.insert("family".into(), json!("qphi"));
            head.insert("q".into(), json!(q));
            head.insert("M".into(), json!(m));
            head.insert("order".into(), json!(order));
            let x = x.map(|x| list(&x)).transpose()?;
            let (c, value) = if qv.qa.is_some() || qv.qb.is_some() {
                let qa = list(qv.qa.as_deref().unwrap_or(""))?;
                let qb = list(qv.qb.as_deref().unwrap_or(""))?;
                head.insert("qa".into(), json!(qa));
                head.insert("qb".into(), json!(qb));
                let c = qphi_coefficients_qa(&qa, &qb, m, &q, order)?;
                let v = x.as_ref().map(|x| qphi_multivar_qa(&qa, &qb, m, &q, x, order)).transpose()?;
                (c, v)
            } else {
                let (a, b) = (list(&params.a)?, list(&params.b)?);
                head.insert("a".into(), json!(a));
                head.insert("b".into(), json!(b));
                let c = qphi_coefficients(&a, &b, m, &q, order)?;
                let v = x.as_ref().map(|x| qphi_multivar(&a, &b, m, &q, x, order)).transpose()?;
                (c, v)
            };
            if let Some(x) = x {
                head.insert("x".into(), json!(x));
            }
            Ok((true, coefficient_table(&c, format, head, value)))
        }
        EvalCmd::Aw { n, params, q, x } => {
            let p = list(&params)?;
            let [a, b, c, d] = <[Scalar; 4]>::try_from(p).or_else(|_| usage("--params needs exactly a,b,c,d"))?;
            let aw = AskeyWilson { n, a, b, c, d, q: scalar(&q)?, cos_eta: scalar(&x)? };
            let phi = aw.phi(0)?;
            let pre = aw.prefactor()?;
            let v = json!({
                "family": "aw", "n": n, "q": aw.q, "x": aw.cos_eta,
                "params": [aw.a, aw.b, aw.c, aw.d],
                "phi": phi, "prefactor": pre, "value": &pre * &phi,
            });
            Ok((true, format!("{v}\n")))
        }
        EvalCmd::Cg { spins, q } => {
            let s = list(&spins)?;
            let [l1, l2, l, j, k] = <[Scalar; 5]>::try_from(s).or_else(|_| usage("--spins needs l1,l2,l,j,k"))?;
            let q = scalar(&q)?;
            let sp = Spins::new(l1, l2, l, j, k);
            let v = clebsch_gordan_q(&sp, &q)?;
            let out = json!({
                "family": "cg", "q": q,
                "spins": [sp.l1, sp.l2, sp.l, sp.j, sp.k],
                "phi": crate::tau::cg_phi(&sp, &q)?,
                "rational": v.rational, "q_exponent": v.q_exponent, "radicand": v.radicand,
                "approx": v.to_f64(),
            });
            Ok((true, format!("{out}\n")))
        }
    }
}

fn verify(cmd: VerifyCmd) -> CliResult<CheckReport> {
    Ok(match cmd {
        VerifyCmd::Hirota { spec } => check_hirota(&read_rspec(&spec.rspec)?, spec.m, spec.d)?,
        VerifyCmd::Toda { spec, gauge } => {
            let g = match gauge {
                GaugeArg::Generalized => Gauge::Generalized,
                GaugeArg::Standard => Gauge::Standard,
            };
            check_toda(&read_rspec(&spec.rspec)?, spec.m, spec.d, g)?
        }
        VerifyCmd::Kp { spec } => check_kp_bilinear(&read_rspec(&spec.rspec)?, spec.m, spec.d)?,
        VerifyCmd::Ode { params, order } => check_ode(&list(&params.a)?, &list(&params.b)?, order)?,
        VerifyCmd::Qdiff { params, qv, q, order } => {
            let q = scalar(&q)?;
            if qv.qa.is_some() || qv.qb.is_some() {
                let qa = list(qv.qa.as_deref().unwrap_or(""))?;
                let qb = list(qv.qb.as_deref().unwrap_or(""))?;
                check_qdiff_qa(&qa, &qb, &q, order)?
            } else {
                check_qdiff(&list(&params.a)?, &list(&params.b)?, &q, order)?
            }
        }
        VerifyCmd::Oracle { spec, window } => {
            let r = read_rspec(&spec.rspec)?;
            let w = window.unwrap_or(spec.d);
            if w < spec.d {
                return usage(format!("--window {w} is below -d {}", spec.d));
            }
            let res = det_oracle_tau(&r, spec.m, spec.d, w)?;
            res.report
        }
        VerifyCmd::Remark1 { mode, n, q, x, d } => {
            let q = scalar(&q)?;
            let mode = match mode {
                ModeArg::QSpec => Remark1Mode::QSpec { n, q },
                ModeArg::Dual => Remark1Mode::Dual { k: n, q },
                ModeArg::Miwa => {
                    let x = match x {
                        Some(x) => list(&x)?,
                        None => (0..n).map(|i| Scalar::new(1, i as i64 + 2)).collect(),
                    };
                    Remark1Mode::Miwa { x }
                }
            };
            check_remark1(&mode, d)?
        }
        VerifyCmd::Prop4 { spec, b, qb } => {
            let r = read_rspec(&spec.rspec)?;
            let t = TimesSpec::Generic(Family::T);
            match (b, qb) {
                (Some(b), None) => check_prop4(&r, &scalar(&b)?, spec.m, spec.d, &t)?,
                (None, Some(qb)) => check_prop4_qb(&r, &scalar(&qb)?, spec.m, spec.d, &t)?,
                _ => return usage("prop4 takes exactly one of --b and --qb"),
            }
        }
    })
}

/// JSON object `{"[2,1]": "1/2", …}` or CSV with header `partition,coefficient`.
pub fn emit_expansion(coeffs: &[(Partition, Scalar)], format: Format) -> String {
    match format {
        Format::Json => {
            let map: Map<String, Value> =
                coeffs.iter().map(|(p, c)| (p.to_string(), Value::String(c.to_string()))).collect();
            format!("{}\n", Value::Object(map))
        }
        Format::Csv => {
            csv_rows(["partition", "coefficient"], coeffs.iter().map(|(p, c)| [p.to_string(), c.to_string()]))
        }
    }
}

/// Inverse of [`emit_expansion`].
pub fn parse_expansion(text: &str, format: Format) -> crate::Result<Vec<(Partition, Scalar)>> {
    let bad = |m: &str| TauError::Parse(m.to_string());
    let partition = |key: &str| -> crate::Result<Partition> {
        serde_json::from_str(key).map_err(|e| TauError::Parse(format!("partition {key:?}: {e}")))
    };
    match format {
        Format::Json => {
            let map: Map<String, Value> = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
            map.iter()
                .map(|(k, v)| {
                    let c = v.as_str().ok_or_else(|| bad("coefficients must be strings"))?;
                    Ok((partition(k)?, c.parse()?))
                })
                .collect()
        }
        Format::Csv => {
            let mut r = csv::Reader::from_reader(text.as_bytes());
            let header = r.headers().map_err(|e| bad(&e.to_string()))?;
            if header != vec!["partition", "coefficient"] {
                return Err(bad("expected header partition,coefficient"));
            }
            r.records()
                .map(|rec| {
                    let rec = rec.map_err(|e| bad(&e.to_string()))?;
                    Ok((partition(&rec[0])?, rec[1].parse()?))
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("taukit").chain(args.iter().copied()))
    }

    const D: &str = r#"{"constant":"1","num":[{"lin":{"shift":"0"}}],"den":[]}"#;

    #[test]
    fn expand_r_equal_d() {
        let out = run_args(&["expand", "--rspec", D, "-M", "1", "-d", "2"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.trim(), r#"{"[]":"1","[1]":"1","[2]":"2","[1,1]":"0"}"#);
        let out = run_args(&["expand", "--rspec", D, "-M", "-1", "-d", "1"]);
        assert_eq!(out.stdout.trim(), r#"{"[]":"1","[1]":"-1"}"#);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["expand", "--rspec", "{nope", "-d", "2"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["verify", "ode", "--a", "1/2", "--b", "x"]).code, 2);
        // pole of 1/(D - 1) at the second cell
        let pole = r#"{"num":[],"den":[{"lin":{"shift":"-1"}}]}"#;
        let out = run_args(&["expand", "--rspec", pole, "-d", "2"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("pole"), "{}", out.stderr);
        assert_eq!(run_args(&["verify", "hirota", "--rspec", D, "-M", "0", "-d", "3"]).code, 0);
    }

    #[test]
    fn expansion_round_trip() {
        let r = RSpec::rational(&[Scalar::new(1, 2)], &[Scalar::new(-2, 3)]);
        let coeffs = TauExpansion::new(&r, 1, 4).coeffs().unwrap();
        for f in [Format::Json, Format::Csv] {
            let text = emit_expansion(&coeffs, f);
            let back = parse_expansion(&text, f).unwrap();
            assert_eq!(back, coeffs);
            assert_eq!(emit_expansion(&back, f), text);
        }
    }
}
