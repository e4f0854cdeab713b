//! Command-line front end. [`run`] is the whole program; `main` only wires it to the process.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use groupring::algebra::Upsilon;
use groupring::oracle::{run_oracle, OracleReport};
use groupring::regularity::{
    certify_regular, criterion_check, support_subgroup, verify_certificate, CertificateDoc, CertifyError, Outcome,
    RadicalSumDoc, VerdictReport, SCHEMA_VERSION,
};
use groupring::scalars::DEFAULT_PRECISION_CAP;
use groupring::{parse_element, AlgebraElement, GroupSpec};
use serde::Serialize;

pub const EXIT_REGULAR: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_HYPOTHESIS_NOT_MET: i32 = 3;
pub const EXIT_UNDECIDED: i32 = 4;
pub const EXIT_DEGENERATE_ZERO: i32 = 5;
pub const EXIT_CERTIFICATE_UNAVAILABLE: i32 = 6;
pub const EXIT_VERIFY_REJECTED: i32 = 7;

/// Digits printed for the approximate value of the 1-norm.
pub const DECIMAL_DIGITS: usize = 40;

pub fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::Regular => EXIT_REGULAR,
        Outcome::Inconclusive => EXIT_INCONCLUSIVE,
        Outcome::HypothesisNotMet => EXIT_HYPOTHESIS_NOT_MET,
        Outcome::Undecided => EXIT_UNDECIDED,
        Outcome::DegenerateZero => EXIT_DEGENERATE_ZERO,
    }
}

#[derive(Parser, Debug)]
#[command(name = "groupring", version, about = "Exact regularity checks for complex group algebras")]
pub struct Cli {
    /// Group: free:N, abelian:N, cyclic:N or cayley:PATH.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest interval precision, in bits, tried when deciding a sign.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    pub precision_cap: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate 2|a|_2^2 >= |a|_1^2.
    Check {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Produce a regularity certificate.
    Certify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also write the certificate JSON to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate file.
    Verify { certificate: PathBuf },
    /// Multiply two elements.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// 1-norm, squared 2-norm and (for self-adjoint input) upsilon.
    Norms {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Kernel of left multiplication (finite groups) or the Laurent domain property.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Subgroup generated by the support.
    Support {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Failure with its exit code; the message goes to stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

type Exit = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if help {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Exit {
    match &cli.command {
        Command::Check { expr } => run_check(cli, io, expr),
        Command::Certify { expr, output } => run_certify(cli, io, expr, output.as_ref()),
        Command::Verify { certificate } => run_verify(cli, io, certificate),
        Command::Mul { left, right } => run_mul(cli, io, left, right),
        Command::Norms { expr } => run_norms(cli, io, expr),
        Command::Oracle { expr } => run_oracle_cmd(cli, io, expr),
        Command::Support { expr } => run_support(cli, io, expr),
    }
}

fn group(cli: &Cli) -> Result<Arc<GroupSpec>, Failure> {
    let descriptor = cli.group.as_deref().ok_or_else(|| Failure::usage("--group is required for this command"))?;
    GroupSpec::parse(descriptor).map(Arc::new).map_err(Failure::usage)
}

fn element(spec: &Arc<GroupSpec>, expr: &str) -> Result<AlgebraElement, Failure> {
    parse_element(spec, expr).map_err(|e| Failure::usage(format!("in {expr:?}: {e}")))
}

fn emit(io: &mut Io, text: &str) -> Result<(), Failure> {
    io.out.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn describe_oracle(report: &OracleReport) -> String {
    match report {
        OracleReport::FiniteKernel { kernel_dimension, witness: Some(w), .. } => {
            format!("kernel dimension {kernel_dimension}, witness {w} (product checked)")
        }
        OracleReport::FiniteKernel { kernel_dimension, witness: None, .. } => {
            format!("kernel dimension {kernel_dimension}, no witness")
        }
        OracleReport::LaurentDomain { regular } => {
            format!("Laurent polynomial ring, {}", if *regular { "regular" } else { "zero element" })
        }
        OracleReport::Unavailable { reason } => format!("unavailable: {reason}"),
    }
}

fn run_check(cli: &Cli, io: &mut Io, expr: &str) -> Exit {
    let spec = group(cli)?;
    let alpha = element(&spec, expr)?;
    let verdict = criterion_check(&alpha, cli.precision_cap);
    let oracle = matches!(*spec, GroupSpec::Finite(_)).then(|| run_oracle(&alpha));
    let report = VerdictReport::new(&alpha, &verdict, oracle);
    let text = if cli.json {
        to_json(&report)
    } else {
        let mut s = String::new();
        let tf = if verdict.torsion_free { "torsion-free" } else { "has torsion" };
        writeln!(s, "element: {alpha}").unwrap();
        writeln!(s, "group: {} ({tf})", report.group).unwrap();
        writeln!(s, "2*|a|_2^2 = {}", report.gap.two_norm2_sq).unwrap();
        writeln!(s, "|a|_1 = {}", verdict.norm1).unwrap();
        writeln!(s, "|a|_1^2 = {}", verdict.norm1_squared).unwrap();
        writeln!(s, "gap sign: {}", verdict.gap_sign.as_str()).unwrap();
        if let Some(o) = &report.oracle {
            writeln!(s, "oracle: {}", describe_oracle(o)).unwrap();
        }
        writeln!(s, "verdict: {}", verdict.outcome).unwrap();
        s
    };
    emit(io, &text)?;
    Ok(exit_code(verdict.outcome))
}

#[derive(Serialize)]
struct CertifyRefusal {
    element: String,
    group: String,
    status: &'static str,
    verdict: Outcome,
    reason: String,
    schema_version: u32,
}

fn run_certify(cli: &Cli, io: &mut Io, expr: &str, output: Option<&PathBuf>) -> Exit {
    let spec = group(cli)?;
    let alpha = element(&spec, expr)?;
    let (status, verdict, reason, code) = match certify_regular(&alpha, cli.precision_cap) {
        Ok(cert) => {
            let doc = CertificateDoc::from(&cert);
            let json = doc.to_json() + "\n";
            if let Some(path) = output {
                std::fs::write(path, &json)
                    .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let text = if cli.json {
                json
            } else {
                let mut s = String::new();
                writeln!(s, "element: {}", doc.element).unwrap();
                writeln!(s, "verdict: {}", doc.verdict).unwrap();
                writeln!(s, "a* a = {}", doc.sigma).unwrap();
                writeln!(s, "upsilon constant: {}", doc.upsilon_constant).unwrap();
                for f in &doc.factors {
                    writeln!(s, "factor: {} * b*b with b = {} + {}", f.weight, f.unit_coeff, f.g).unwrap();
                }
                for step in &doc.chain {
                    writeln!(s, "chain: {step}").unwrap();
                }
                s
            };
            emit(io, &text)?;
            return Ok(EXIT_REGULAR);
        }
        Err(CertifyError::NotRegular(v)) => {
            let code = exit_code(v.outcome);
            ("not-regular", v.outcome, format!("criterion verdict is {}", v.outcome), code)
        }
        Err(CertifyError::Unavailable { verdict, reason }) => {
            ("unavailable", verdict.outcome, reason, EXIT_CERTIFICATE_UNAVAILABLE)
        }
    };
    let refusal = CertifyRefusal {
        element: alpha.to_string(),
        group: spec.descriptor(),
        status,
        verdict,
        reason,
        schema_version: SCHEMA_VERSION,
    };
    let text = if cli.json {
        to_json(&refusal)
    } else {
        format!("no certificate ({}): {}\nverdict: {}\n", refusal.status, refusal.reason, refusal.verdict)
    };
    emit(io, &text)?;
    Ok(code)
}

fn run_verify(cli: &Cli, io: &mut Io, path: &PathBuf) -> Exit {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = CertificateDoc::from_json(&text).map_err(|e| Failure::usage(format!("invalid certificate at {e}")))?;
    let cert = doc.to_certificate().map_err(|e| Failure::usage(format!("invalid certificate at {e}")))?;
    match verify_certificate(&cert, cli.precision_cap) {
        Ok(()) => {
            let msg = if cli.json {
                to_json(&serde_json::json!({"valid": true, "element": doc.element, "group": doc.group, "schema_version": SCHEMA_VERSION}))
            } else {
                format!("certificate valid: {} is regular over {}\n", doc.element, doc.group)
            };
            emit(io, &msg)?;
            Ok(0)
        }
        Err(reason) => {
            if cli.json {
                emit(io, &to_json(&serde_json::json!({"valid": false, "reason": reason.to_string(), "schema_version": SCHEMA_VERSION})))?;
            }
            Err(Failure { code: EXIT_VERIFY_REJECTED, message: format!("certificate rejected: {reason}") })
        }
    }
}

fn run_mul(cli: &Cli, io: &mut Io, left: &str, right: &str) -> Exit {
    let spec = group(cli)?;
    let product = element(&spec, left)?.mul(&element(&spec, right)?).expect("same group");
    let text = if cli.json {
        to_json(&serde_json::json!({"product": product.to_string(), "schema_version": SCHEMA_VERSION}))
    } else {
        format!("{product}\n")
    };
    emit(io, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct UpsilonDoc {
    target: String,
    radical: RadicalSumDoc,
    sign: String,
}

impl From<&Upsilon> for UpsilonDoc {
    fn from(u: &Upsilon) -> Self {
        UpsilonDoc { target: u.target.to_string(), radical: (&u.radical).into(), sign: u.sign.as_str().to_string() }
    }
}

#[derive(Serialize)]
struct NormsReport {
    element: String,
    group: String,
    one_norm: RadicalSumDoc,
    one_norm_decimal_approx: String,
    two_norm_sq: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    upsilon: Option<UpsilonDoc>,
    schema_version: u32,
}

fn run_norms(cli: &Cli, io: &mut Io, expr: &str) -> Exit {
    let spec = group(cli)?;
    let alpha = element(&spec, expr)?;
    let one = alpha.norm1();
    let approx = one.to_decimal(DECIMAL_DIGITS);
    let upsilon = alpha.upsilon(cli.precision_cap).ok();
    let text = if cli.json {
        to_json(&NormsReport {
            element: alpha.to_string(),
            group: spec.descriptor(),
            one_norm: (&one).into(),
            one_norm_decimal_approx: approx,
            two_norm_sq: alpha.norm2_squared().to_string(),
            upsilon: upsilon.as_ref().map(UpsilonDoc::from),
            schema_version: SCHEMA_VERSION,
        })
    } else {
        let mut s = String::new();
        writeln!(s, "one_norm: {one}").unwrap();
        writeln!(s, "one_norm (approximate, {DECIMAL_DIGITS} digits): {approx}").unwrap();
        writeln!(s, "two_norm_sq: {}", alpha.norm2_squared()).unwrap();
        match &upsilon {
            Some(u) => match u.exact_value() {
                Some(v) => writeln!(s, "upsilon: {v} ({})", u.sign.as_str()).unwrap(),
                None => writeln!(s, "upsilon: {} - ({}) ({})", u.target, u.radical, u.sign.as_str()).unwrap(),
            },
            None => writeln!(s, "upsilon: not defined (element is not self-adjoint)").unwrap(),
        }
        s
    };
    emit(io, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleOutput {
    element: String,
    group: String,
    oracle: OracleReport,
    schema_version: u32,
}

fn run_oracle_cmd(cli: &Cli, io: &mut Io, expr: &str) -> Exit {
    let spec = group(cli)?;
    let alpha = element(&spec, expr)?;
    let report = run_oracle(&alpha);
    let text = if cli.json {
        to_json(&OracleOutput { element: alpha.to_string(), group: spec.descriptor(), oracle: report, schema_version: SCHEMA_VERSION })
    } else {
        match &report {
            OracleReport::FiniteKernel { kernel_dimension, witness, .. } => {
                let mut s = format!("kernel dimension: {kernel_dimension}\n");
                if let Some(w) = witness {
                    writeln!(s, "witness: {w}").unwrap();
                }
                s
            }
            other => format!("{}\n", describe_oracle(other)),
        }
    };
    emit(io, &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct SupportOutput {
    element: String,
    group: String,
    #[serde(flatten)]
    report: groupring::regularity::SubgroupReport,
    schema_version: u32,
}

fn run_support(cli: &Cli, io: &mut Io, expr: &str) -> Exit {
    let spec = group(cli)?;
    let alpha = element(&spec, expr)?;
    let report = support_subgroup(&alpha).map_err(Failure::usage)?;
    let text = if cli.json {
        to_json(&SupportOutput { element: alpha.to_string(), group: spec.descriptor(), report, schema_version: SCHEMA_VERSION })
    } else {
        let mut s = format!("generators: {}\n", report.generators.join(", "));
        if let (Some(basis), Some(rank)) = (&report.lattice_basis, report.rank) {
            let rows: Vec<String> = basis
                .iter()
                .map(|r| format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
                .collect();
            writeln!(s, "lattice basis: {}", if rows.is_empty() { "(none)".to_string() } else { rows.join(" ") }).unwrap();
            writeln!(s, "rank: {rank}").unwrap();
        }
        s
    };
    emit(io, &text)?;
    Ok(0)
}
