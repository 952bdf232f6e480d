//! `ffperm`: build, verify, and audit permutation polynomial families.
//!
//! Exit codes: 0 success / pass, 1 verification failure, 2 usage, parse,
//! applicability, or cap error.

mod suites;

use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use ffperm_core::constructions::{self, Family, FamilyParams};
use ffperm_core::verify::{Verifier, VerifyReport};
use ffperm_core::{limits, make_field, Elem, FieldSpec, MultiPoly};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "ffperm",
    version,
    about = "Permutation and local permutation polynomials over small finite fields"
)]
struct Cli {
    /// Record wall time in reports (otherwise `ms` is 0 and output is reproducible).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a polynomial family and print it.
    Construct(ConstructArgs),
    /// Check a polynomial read from JSON.
    Verify(VerifyArgs),
    /// Run a named verification suite over its parameter grid.
    Check(CheckArgs),
    /// Print the field's modulus, generator, and operation tables.
    Field(FieldArgs),
    /// Enumerate every balanced function F_q^n -> F_q and check the PP degree bound.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct FieldOpts {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: u32,
}

impl FieldOpts {
    fn build(&self) -> ffperm_core::Result<FieldSpec> {
        make_field(self.p, self.r)
    }
}

#[derive(Args)]
struct ConstructArgs {
    /// Family tag, e.g. pp_hn, lpp_beta, lpp_3var_c; pp_product and lpp_three take --variant.
    #[arg(long)]
    family: String,
    #[command(flatten)]
    field: FieldOpts,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// b for lpp_power (default: smallest admissible).
    #[arg(long)]
    b: Option<u64>,
    /// Recursion depth for lpp_power.
    #[arg(long)]
    k: Option<u32>,
    /// qnr|noncube|mersenne for pp_product, a|b|c for lpp_three.
    #[arg(long)]
    variant: Option<String>,
    /// Rank of the non-residue / constant used by the product families.
    #[arg(long)]
    alpha_rank: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["pp", "lpp", "degree"])))]
struct VerifyArgs {
    /// Polynomial JSON file, or `-` for stdin.
    #[arg(long)]
    input: String,
    #[arg(long)]
    pp: bool,
    #[arg(long)]
    lpp: bool,
    /// Expected total degree.
    #[arg(long, allow_negative_numbers = true)]
    degree: Option<i64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["suite", "all"])))]
pub struct CheckArgs {
    /// One of: prop3.1 thm3.2 remark3 thm4.1 thm4.3 thm4.4 lemma2.2 lemma4.5 thm5.2 thm5.3 thm5.4 conjecture.
    #[arg(long)]
    suite: Option<String>,
    /// Run every suite on its default grid.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = limits::DEFAULT_SCAN_CAP)]
    scan_cap: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct FieldArgs {
    #[command(flatten)]
    field: FieldOpts,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    field: FieldOpts,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = limits::DEFAULT_SCAN_CAP)]
    scan_cap: u64,
}

/// Failure modes mapped to exit codes.
enum Fail {
    /// Exit 1: the check ran and did not pass.
    Verdict,
    /// Exit 2: one-line reason on stderr.
    Usage(String),
}

impl From<ffperm_core::Error> for Fail {
    fn from(e: ffperm_core::Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verifier = Verifier {
        timing: cli.timing,
        ..Verifier::default()
    };
    let res = match cli.cmd {
        Cmd::Construct(a) => construct(&a),
        Cmd::Verify(a) => verify(&a, &verifier),
        Cmd::Check(a) => suites::run(&a, &verifier),
        Cmd::Field(a) => field(&a),
        Cmd::Scan(a) => scan(&a, verifier),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verdict) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn construct(a: &ConstructArgs) -> CmdResult {
    let field = a.field.build()?;
    let family = Family::parse(&a.family, a.variant.as_deref())?;
    let constant = a.alpha_rank.map(|r| field.elem(r)).transpose()?;
    let params = FamilyParams {
        b: a.b,
        k: a.k,
        constant,
        ..Default::default()
    };
    if !constructions::family_applies(family, &field) {
        return Err(Fail::Usage(format!(
            "{} does not apply to q = {}",
            family.cli_name(),
            field.q()
        )));
    }
    let f = constructions::build(family, &field, a.n, &params)?;
    match a.format {
        Format::Text => println!("{}", f.to_text()),
        Format::Json => {
            let mut v = serde_json::to_value(f.to_json()).expect("serializable");
            v["family"] = json!(family.tag());
            v["params"] = constructions::params_json(&field, family, &params);
            v["params"]["n"] = json!(a.n);
            println!("{v}");
        }
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String, Fail> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|c| s = c)
    };
    res.map_err(|e| Fail::Usage(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn emit(rep: &VerifyReport) -> CmdResult {
    println!("{}", rep.to_json_string());
    if rep.passed() {
        Ok(())
    } else {
        Err(Fail::Verdict)
    }
}

fn verify(a: &VerifyArgs, v: &Verifier) -> CmdResult {
    let f = MultiPoly::from_json_str(&read_input(&a.input)?)?;
    let rep = match a.degree {
        Some(d) => v.assert_degree(&f, d),
        None if a.pp => v.is_pp(&f)?,
        None => v.is_lpp(&f)?,
    };
    emit(&rep)
}

fn scan(a: &ScanArgs, v: Verifier) -> CmdResult {
    let field = a.field.build()?;
    let v = Verifier {
        scan_cap: a.scan_cap,
        ..v
    };
    emit(&v.scan_pp_degree_bound(&field, a.n)?)
}

fn field(a: &FieldArgs) -> CmdResult {
    let f = a.field.build()?;
    let show = |e: Elem| f.fmt_elem(e);
    let desc = json!({
        "p": f.p(),
        "r": f.r(),
        "q": f.q(),
        "modulus": f.describe().modulus,
        "generator": f.coeffs(f.generator()),
    });
    if a.format == Format::Json {
        let elems: Vec<_> = f.elements().map(|e| f.coeffs(e)).collect();
        let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<u32>> {
            f.elements()
                .map(|x| f.elements().map(|y| op(x, y).rank()).collect())
                .collect()
        };
        let mut out = desc;
        out["elements"] = json!(elems);
        out["add"] = json!(table(&|x, y| f.add(x, y)));
        out["mul"] = json!(table(&|x, y| f.mul(x, y)));
        println!("{out}");
        return Ok(());
    }
    if f.r() == 1 {
        println!("F_{} (prime field)", f.q());
    } else {
        println!("F_{} = F_{}[z]/({})", f.q(), f.p(), modulus_text(&f));
    }
    println!("generator: {}", show(f.generator()));
    println!("elements (rank: value):");
    for e in f.elements() {
        println!("  {}: {}", e.rank(), show(e));
    }
    for (name, op) in [("add", 0), ("mul", 1)] {
        println!("{name} (ranks):");
        for x in f.elements() {
            let row: Vec<String> = f
                .elements()
                .map(|y| if op == 0 { f.add(x, y) } else { f.mul(x, y) }.rank().to_string())
                .collect();
            println!("  {}", row.join(" "));
        }
    }
    Ok(())
}

fn modulus_text(f: &FieldSpec) -> String {
    let m = f.describe().modulus;
    let mut parts = Vec::new();
    for (i, &c) in m.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{i}"),
        };
        parts.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    parts.join(" + ")
}
