//! The `zforge` command line.
//!
//! Every subcommand prints one JSON document on success (except `table`,
//! which prints CSV) and exits with a [`Status`]. Rationals are printed as
//! `"p/q"` strings, so outputs are byte-identical across runs.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{self, format_rational, BoundReport, Regime};
use crate::gdd::{self, verify_gdd, Gdd, GddError, GddType};
use crate::hypercore::{verify_witness, WitnessDocument};
use crate::oracle::{self, OracleError};
use crate::triangles::{with_ambient_budget, EngineError, DEFAULT_BUDGET};
use crate::witness::{self, WitnessError};

/// Largest `m` accepted by `table`.
pub const TABLE_MAX_M: u64 = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailed = 1,
    Infeasible = 2,
    BudgetExhausted = 3,
    Usage = 4,
}

#[derive(Debug, Parser)]
#[command(name = "zforge", version, about = "Exact Zarankiewicz numbers Z(2,2;m,n) with certified witnesses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Move budget per engine run, or node budget for `oracle`.
    #[arg(long, global = true, env = "ZFORGE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Treat the below-threshold formula as proven for this m.
    #[arg(long, global = true)]
    pub assume_large: bool,
    /// Write the witness or design here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The three upper bounds at (m, n).
    Bounds { m: u64, n: u64 },
    /// The exact value and the regime it comes from.
    Z { m: u64, n: u64 },
    /// Build and verify a witness hypergraph.
    Construct { m: usize, n: usize },
    /// Check a witness file.
    Verify {
        path: PathBuf,
        /// Only check the hypergraph, not that it matches its recorded construction.
        #[arg(long)]
        structural: bool,
    },
    /// Build a 3-GDD of the given type, e.g. "4^3 2^6".
    Gdd { r#type: String },
    /// Exhaustive search for small m.
    Oracle { m: usize, n: usize },
    /// Regime boundaries and values for a range of m.
    Table {
        m_from: u64,
        m_to: u64,
        /// Keep only rows of this regime.
        #[arg(long)]
        regime: Option<RegimeArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegimeArg(pub Regime);

impl FromStr for RegimeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Regime::*;
        [AboveCase1, AboveCase2, AboveCase3, BelowCase1, BelowCase2, BelowCase3, Uncovered]
            .into_iter()
            .find(|r| r.as_str() == s)
            .map(RegimeArg)
            .ok_or_else(|| format!("unknown regime {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { status: Status::Success, stdout, stderr: String::new() }
    }

    fn fail(status: Status, reason: impl std::fmt::Display) -> Self {
        Outcome { status, stdout: String::new(), stderr: format!("zforge: {reason}\n") }
    }

    fn json(value: &impl Serialize) -> Self {
        Outcome::ok(to_line(value))
    }
}

fn to_line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { status: Status::Usage, stdout: String::new(), stderr: text },
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let out = run_args(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.status as u8)
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Bounds { m, n } => bounds_cmd(*m, *n),
        Command::Z { m, n } => z_cmd(*m, *n, cli.assume_large),
        Command::Construct { m, n } => {
            with_ambient_budget(cli.budget, || construct_cmd(*m, *n, cli.seed, cli.out.as_deref()))
        }
        Command::Verify { path, structural } => with_ambient_budget(cli.budget, || verify_cmd(path, *structural)),
        Command::Gdd { r#type } => with_ambient_budget(cli.budget, || gdd_cmd(r#type, cli.seed, cli.out.as_deref())),
        Command::Oracle { m, n } => oracle_cmd(*m, *n, cli.budget),
        Command::Table { m_from, m_to, regime } => table_cmd(*m_from, *m_to, regime.map(|r| r.0)),
    }
}

#[derive(Serialize)]
struct BoundsOut {
    m: u64,
    n: u64,
    u_plus: String,
    u_zero: String,
    u_minus: String,
    u_plus_floor: u64,
    u_zero_floor: u64,
    u_minus_floor: u64,
    min_floor: u64,
}

fn bounds_cmd(m: u64, n: u64) -> Outcome {
    if m == 0 || n == 0 {
        return Outcome::fail(Status::Usage, "m and n must be positive");
    }
    let r = bounds::upper_bounds(m, n);
    Outcome::json(&BoundsOut {
        m,
        n,
        u_plus: format_rational(&r.u_plus),
        u_zero: format_rational(&r.u_zero),
        u_minus: format_rational(&r.u_minus),
        u_plus_floor: r.floor_plus,
        u_zero_floor: r.floor_zero,
        u_minus_floor: r.floor_minus,
        min_floor: r.roman_min,
    })
}

#[derive(Serialize)]
struct ZOut {
    z: u64,
    regime: &'static str,
    m: u64,
    n: u64,
    decrement: u8,
    asymptotic: bool,
    u_plus: String,
    u_zero: String,
    u_minus: String,
    u_plus_floor: u64,
    u_zero_floor: u64,
    u_minus_floor: u64,
}

fn z_out(r: &BoundReport) -> Option<ZOut> {
    Some(ZOut {
        z: r.z?,
        regime: r.regime.as_str(),
        m: r.m,
        n: r.n,
        decrement: r.decrement,
        asymptotic: r.asymptotic,
        u_plus: format_rational(&r.u_plus),
        u_zero: format_rational(&r.u_zero),
        u_minus: format_rational(&r.u_minus),
        u_plus_floor: r.floor_plus,
        u_zero_floor: r.floor_zero,
        u_minus_floor: r.floor_minus,
    })
}

fn z_cmd(m: u64, n: u64, assume_large: bool) -> Outcome {
    match z_out(&bounds::z_value(m, n, assume_large)) {
        Some(out) => Outcome::json(&out),
        None => Outcome::fail(Status::Infeasible, format!("no exact formula covers (m, n) = ({m}, {n})")),
    }
}

fn engine_status(e: &EngineError) -> Status {
    match e {
        EngineError::BudgetExhausted { .. } => Status::BudgetExhausted,
        _ => Status::Infeasible,
    }
}

fn witness_status(e: &WitnessError) -> Status {
    match e {
        WitnessError::Uncovered { .. } | WitnessError::Precondition { .. } => Status::Infeasible,
        WitnessError::Layout { .. } => Status::BudgetExhausted,
        WitnessError::Engine(e) => engine_status(e),
        WitnessError::Gdd(e) => gdd_status(e),
    }
}

fn gdd_status(e: &GddError) -> Status {
    match e {
        GddError::Parse(_) => Status::Usage,
        GddError::Engine(e) => engine_status(e),
        _ => Status::Infeasible,
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text).map_err(|e| Outcome::fail(Status::Usage, format!("cannot write {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ConstructOut<'a> {
    z: usize,
    regime: &'static str,
    m: usize,
    n: usize,
    construction: &'a str,
    seed: Option<u64>,
    verified: bool,
    out: String,
}

fn construct_cmd(m: usize, n: usize, seed: u64, out: Option<&Path>) -> Outcome {
    let w = match witness::construct(m, n, seed) {
        Ok(w) => w,
        Err(e) => return Outcome::fail(witness_status(&e), e),
    };
    let report = w.verify();
    if !report.passed() {
        return Outcome::fail(Status::VerificationFailed, format!("constructed witness failed verification: {:?}", report.failures));
    }
    let doc = w.document().to_json();
    let Some(path) = out else {
        return Outcome::ok(doc);
    };
    if let Err(o) = write_out(path, &doc) {
        return o;
    }
    Outcome::json(&ConstructOut {
        z: w.z,
        regime: bounds::z_value(m as u64, n as u64, true).regime.as_str(),
        m,
        n,
        construction: w.construction,
        seed: w.seed,
        verified: true,
        out: path.display().to_string(),
    })
}

#[derive(Serialize)]
struct VerifyOut {
    passed: bool,
    m: Option<usize>,
    n: Option<usize>,
    z: Option<usize>,
    rebuilt: bool,
    failures: Vec<String>,
}

fn verify_cmd(path: &Path, structural: bool) -> Outcome {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => return Outcome::fail(Status::Usage, format!("cannot read {}: {e}", path.display())),
    };
    let mut out = VerifyOut { passed: false, m: None, n: None, z: None, rebuilt: false, failures: Vec::new() };
    let failed = |mut out: VerifyOut, msg: String| {
        out.failures.push(msg);
        Outcome { status: Status::VerificationFailed, stdout: to_line(&out), stderr: String::new() }
    };
    let doc = match std::str::from_utf8(&bytes)
        .map_err(|_| "witness document is not ASCII".to_string())
        .and_then(|text| WitnessDocument::from_json(text).map_err(|e| e.to_string()))
    {
        Ok(d) => d,
        Err(msg) => return failed(out, msg),
    };
    (out.m, out.n, out.z) = (Some(doc.m), Some(doc.n), Some(doc.z));
    let h = match doc.hypergraph() {
        Ok(h) => h,
        Err(e) => return failed(out, e.to_string()),
    };
    out.failures.extend(verify_witness(&h, doc.m, doc.n, doc.z).failures.iter().map(|f| f.to_string()));
    if let Some(exact) = bounds::z_value(doc.m as u64, doc.n as u64, true).z {
        if doc.z as u64 != exact {
            out.failures.push(format!("z = {} but the exact value is {exact}", doc.z));
        }
    }
    if !structural && out.failures.is_empty() {
        if let Some(seed) = doc.seed {
            if witness::builder_for(doc.m, doc.n) == Some(doc.construction.as_str()) {
                match witness::construct_once(doc.m, doc.n, seed) {
                    Ok(w) if w.hypergraph.edges() == h.edges() => out.rebuilt = true,
                    Ok(_) => out
                        .failures
                        .push(format!("edges differ from construction {} at seed {seed}", doc.construction)),
                    Err(e) => return Outcome::fail(witness_status(&e), format!("could not rebuild: {e}")),
                }
            }
        }
    }
    out.passed = out.failures.is_empty();
    let status = if out.passed { Status::Success } else { Status::VerificationFailed };
    Outcome { status, stdout: to_line(&out), stderr: String::new() }
}

#[derive(Serialize)]
struct GddOut<'a> {
    r#type: String,
    m: usize,
    verified: bool,
    groups: &'a [Vec<usize>],
    triples: &'a [[usize; 3]],
}

#[derive(Serialize)]
struct GddSummary {
    r#type: String,
    m: usize,
    verified: bool,
    triple_count: usize,
    out: String,
}

fn gdd_cmd(spec: &str, seed: u64, out: Option<&Path>) -> Outcome {
    let ty: GddType = match spec.parse() {
        Ok(t) => t,
        Err(e) => return Outcome::fail(Status::Usage, e),
    };
    let design: Gdd = match gdd::construct(&ty, seed) {
        Ok(d) => d,
        Err(e) => return Outcome::fail(gdd_status(&e), e),
    };
    let report = verify_gdd(&design, &ty);
    if !report.passed() {
        let list: Vec<String> = report.failures.iter().map(|f| f.to_string()).collect();
        return Outcome::fail(Status::VerificationFailed, format!("design failed verification: {}", list.join("; ")));
    }
    let text = to_line(&GddOut {
        r#type: ty.to_string(),
        m: design.m,
        verified: true,
        groups: &design.groups,
        triples: &design.triples,
    });
    let Some(path) = out else {
        return Outcome::ok(text);
    };
    if let Err(o) = write_out(path, &text) {
        return o;
    }
    Outcome::json(&GddSummary {
        r#type: ty.to_string(),
        m: design.m,
        verified: true,
        triple_count: design.triples.len(),
        out: path.display().to_string(),
    })
}

#[derive(Serialize)]
struct OracleOut {
    z: u64,
    regime: &'static str,
    m: usize,
    n: usize,
    nodes_expanded: u64,
    prunes_by_bound: u64,
    elapsed_steps: u64,
    edges: Vec<Vec<usize>>,
}

fn oracle_cmd(m: usize, n: usize, budget: u64) -> Outcome {
    match oracle::exact_z(m, n, budget) {
        Ok(s) => Outcome::json(&OracleOut {
            z: s.optimum,
            regime: bounds::z_value(m as u64, n as u64, false).regime.as_str(),
            m,
            n,
            nodes_expanded: s.nodes_expanded,
            prunes_by_bound: s.prunes_by_bound,
            elapsed_steps: s.elapsed_steps,
            edges: s.optimal_witness.edges().to_vec(),
        }),
        Err(e @ OracleError::BudgetExhausted { .. }) => Outcome::fail(Status::BudgetExhausted, e),
        Err(e) => Outcome::fail(Status::Infeasible, e),
    }
}

/// The `n` at which `table` samples row `m`: each regime boundary and its
/// two neighbours, plus `C(m,2)`.
pub fn table_points(m: u64) -> Vec<u64> {
    let c = bounds::c2(m);
    let mut marks = vec![bounds::above_lo(m) as i64, bounds::above_u0_hi(m) as i64, bounds::third_minus_quarter_floor(m), c as i64];
    if let Some((lo, hi)) = bounds::below_range(m) {
        marks.extend([lo as i64, hi as i64]);
    }
    let mut pts: Vec<u64> = marks
        .into_iter()
        .flat_map(|b| [b - 1, b, b + 1])
        .filter(|&n| n >= 1 && n <= c as i64)
        .map(|n| n as u64)
        .collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn table_cmd(m_from: u64, m_to: u64, regime: Option<Regime>) -> Outcome {
    if m_from == 0 || m_from > m_to || m_to > TABLE_MAX_M {
        return Outcome::fail(Status::Usage, format!("need 1 <= m_from <= m_to <= {TABLE_MAX_M}"));
    }
    let mut s = String::from("m,n,regime,z,u_plus_floor,u_zero_floor,u_minus_floor,decrement\n");
    for m in m_from..=m_to {
        for n in table_points(m) {
            let r = bounds::z_value(m, n, false);
            if regime.is_some_and(|want| want != r.regime) {
                continue;
            }
            let z = r.z.map_or_else(|| "-".to_string(), |z| z.to_string());
            writeln!(
                s,
                "{m},{n},{},{z},{},{},{},{}",
                r.regime, r.floor_plus, r.floor_zero, r.floor_minus, r.decrement
            )
            .expect("writing to a string");
        }
    }
    Outcome::ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> Outcome {
        run_args(std::iter::once("zforge").chain(args.iter().copied()))
    }

    #[test]
    fn z_example() {
        let o = run_str(&["z", "8", "11"]);
        assert_eq!(o.status, Status::Success);
        assert!(o.stdout.starts_with(r#"{"z":30,"regime":"above-case1","#), "{}", o.stdout);
    }

    #[test]
    fn gdd_inadmissible() {
        let o = run_str(&["gdd", "4^2 2^2"]);
        assert_eq!(o.status, Status::Infeasible);
        assert!(o.stderr.contains("u ≡ 2 (mod 3)"), "{}", o.stderr);
        assert_eq!(run_str(&["gdd", "4^x"]).status, Status::Usage);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["z", "8"]).status, Status::Usage);
        assert_eq!(run_str(&["table", "5", "3"]).status, Status::Usage);
        assert_eq!(run_str(&["table", "1", "2001"]).status, Status::Usage);
        assert_eq!(run_str(&["frobnicate"]).status, Status::Usage);
        assert_eq!(run_str(&["--help"]).status, Status::Success);
    }

    #[test]
    fn table_rows() {
        let o = run_str(&["table", "8", "11"]);
        assert_eq!(o.status, Status::Success);
        let rows: Vec<&str> = o.stdout.lines().collect();
        assert_eq!(rows[0], "m,n,regime,z,u_plus_floor,u_zero_floor,u_minus_floor,decrement");
        let find = |m: &str, n: &str| {
            rows.iter()
                .map(|r| r.split(',').collect::<Vec<_>>())
                .find(|c| c[0] == m && c[1] == n)
                .unwrap_or_else(|| panic!("row ({m}, {n}) missing"))
        };
        assert_eq!(find("8", "11")[2..4], ["above-case1", "30"]);
        let r = find("11", "19");
        assert_eq!((r[2], r[3], r[7]), ("above-case2", "55", "1"));
        assert_eq!(find("9", "36")[2..4], ["above-case3", "72"]);
        let only = run_str(&["table", "8", "11", "--regime", "above-case2"]);
        assert!(only.stdout.lines().skip(1).all(|l| l.contains("above-case2")));
    }

    #[test]
    fn oracle_and_bounds() {
        let o = run_str(&["oracle", "5", "4"]);
        assert!(o.stdout.starts_with(r#"{"z":10,"regime":"above-case2","#), "{}", o.stdout);
        assert_eq!(run_str(&["oracle", "12", "4"]).status, Status::Infeasible);
        assert_eq!(run_str(&["oracle", "8", "20", "--budget", "5"]).status, Status::BudgetExhausted);
        let b = run_str(&["bounds", "8", "11"]);
        assert!(b.stdout.contains(r#""u_zero":"212/7""#), "{}", b.stdout);
    }
}
