//! Command-line frontend for the hypertournament toolkit.
//!
//! Exit codes: 0 when the requested check or construction succeeded, 1 when
//! a checked property failed or a budget ran out (output names the seed or
//! reason), 2 for usage, parse, or configuration errors.
//!
//! All results go to stdout (or `-o` files) and are byte-deterministic for
//! a fixed command line; progress and timing notes go to stderr only.

mod experiment;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hypertour::formats;
use hypertour::{
    check_cycle_bounds, check_matching_inequality, degenerate_tournament, enumerate_th,
    gallai_milgram_chain, hamiltonian_cycle, hamiltonian_path, is_strong, is_vertex_pancyclic,
    random_strong_tournament, random_tournament, search_no_strong_witness, two_kings,
    verify_membership, Error, HyperCycle, HyperPath, HyperTournament, Tournament,
};

#[derive(Parser)]
#[command(
    name = "hypertour",
    version,
    about = "Spanning structures, degeneration, covers, and counting checks \
             for tuple-ordered hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a seeded random complete structure (`.kht` to stdout).
    Gen(GenArgs),
    /// Check a property of a structure read from a file or `-` (stdin).
    #[command(subcommand)]
    Check(CheckCmd),
    /// Degenerate a strong structure into a strong generated tournament.
    Degenerate(DegenerateArgs),
    /// Enumerate every tournament generated by distinct arcs of the input.
    /// Families grow combinatorially with the instance; pass `--limit` unless
    /// the input is known to be small.
    EnumerateTh(EnumerateArgs),
    /// Compute path covers and independence numbers with their chain.
    Cover(CoverArgs),
    /// Evaluate counting facts: the matching inequality and cycle bounds.
    #[command(subcommand)]
    Lemmas(LemmasCmd),
    /// Search for a structure none of whose generated tournaments is strong.
    SearchWitness(SearchArgs),
    /// Run a seeded experiment campaign described by a config file.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Arity of every arc.
    #[arg(short)]
    k: u32,
    /// Number of vertices.
    #[arg(short)]
    n: u32,
    /// Master seed (decimal or 0x-prefixed hex).
    #[arg(long)]
    seed: String,
    /// Retry derived seeds until the instance is strong.
    #[arg(long)]
    strong: bool,
    /// Attempt budget for `--strong`.
    #[arg(long, default_value_t = 200)]
    max_attempts: u32,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Exit 0 iff every ordered vertex pair is joined by a path.
    Strong { input: String },
    /// Find a spanning path and print it.
    HamPath { input: String },
    /// Find a spanning cycle and print it.
    HamCycle { input: String },
    /// Exit 0 iff every vertex lies on a cycle of every length 3..=n.
    Pancyclic { input: String },
    /// List vertices that reach every other vertex within two hops.
    Kings {
        input: String,
        /// Smallest acceptable number of such vertices.
        #[arg(long, default_value_t = 3)]
        min: usize,
    },
}

#[derive(Args)]
struct DegenerateArgs {
    input: String,
    /// Write the tournament here (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also write the generation certificate here.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    input: String,
    /// Stop with exit 1 if more members than this exist.
    #[arg(long)]
    limit: Option<usize>,
    /// Exit 1 if any member is strong (requires exhaustive enumeration).
    #[arg(long)]
    assert_no_strong: bool,
}

#[derive(Args)]
struct CoverArgs {
    input: String,
    /// Vertex cap for the exhaustive procedures (default 16).
    #[arg(long)]
    bound: Option<u32>,
}

#[derive(Subcommand)]
enum LemmasCmd {
    /// Evaluate the matching-feasibility inequality at one point.
    Inequality { k: u32, n: u32 },
    /// Print the inequality over the standard grid.
    InequalityGrid,
    /// Check pair-occurrence bounds on the input's canonical spanning cycle.
    CycleBounds { input: String },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(short)]
    k: u32,
    #[arg(short)]
    n: u32,
    #[arg(long)]
    seed: String,
    /// Number of scored candidates before giving up.
    #[arg(long, default_value_t = 1000)]
    budget: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Campaign config file (`key = value` lines).
    config: PathBuf,
    /// Write the report here (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

/// Exit with code 2 for malformed inputs and unsupported ranges, 1 for
/// everything that means "the computation ran and said no".
fn code_for(e: &Error) -> u8 {
    match e {
        Error::BadTuple(_)
        | Error::DuplicateSubset(_)
        | Error::MissingSubset { .. }
        | Error::Parse { .. }
        | Error::RangeUnsupported(_)
        | Error::BadCycle(_) => 2,
        Error::NotStrong | Error::BudgetExceeded | Error::InternalGuaranteeViolated(_) => 1,
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("hypertour: {msg}");
    ExitCode::from(code)
}

fn fail_err(e: &Error) -> ExitCode {
    fail(code_for(e), e)
}

use experiment::parse_seed;

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_structure(path: &str) -> Result<HyperTournament, ExitCode> {
    let text = read_input(path).map_err(|m| fail(2, m))?;
    formats::kht_from_str(&text).map_err(|e| fail_err(&e))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| fail(2, format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_path(p: &HyperPath) {
    let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
    println!("path {}", vs.join(" "));
    for a in p.arcs() {
        let row: Vec<String> = a.seq().iter().map(|v| v.to_string()).collect();
        println!("arc {}", row.join(" "));
    }
}

fn print_cycle(c: &HyperCycle) {
    let vs: Vec<String> = c.vertices().iter().map(|v| v.to_string()).collect();
    println!("cycle {}", vs.join(" "));
    for a in c.arcs() {
        let row: Vec<String> = a.seq().iter().map(|v| v.to_string()).collect();
        println!("arc {}", row.join(" "));
    }
}

/// One member of the generated-tournament family as a single line: winners
/// in ascending pair order.
fn member_line(t: &Tournament) -> String {
    let mut cells = Vec::new();
    for a in 1..=t.n() {
        for b in a + 1..=t.n() {
            let (u, v) = (
                hypertour::VertexId::new(a),
                hypertour::VertexId::new(b),
            );
            if t.has_arc(u, v) {
                cells.push(format!("{a}>{b}"));
            } else {
                cells.push(format!("{b}>{a}"));
            }
        }
    }
    cells.join(" ")
}

fn main() -> ExitCode {
    // Die silently on SIGPIPE like other line-oriented tools instead of
    // panicking when a downstream consumer closes the pipe early.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Check(what) => cmd_check(what),
        Cmd::Degenerate(args) => cmd_degenerate(args),
        Cmd::EnumerateTh(args) => cmd_enumerate(args),
        Cmd::Cover(args) => cmd_cover(args),
        Cmd::Lemmas(what) => cmd_lemmas(what),
        Cmd::SearchWitness(args) => cmd_search(args),
        Cmd::Experiment(args) => cmd_experiment(args),
    }
}

fn cmd_gen(args: GenArgs) -> ExitCode {
    let seed = match parse_seed(&args.seed) {
        Ok(s) => s,
        Err(m) => return fail(2, m),
    };
    let h = if args.strong {
        match random_strong_tournament(args.k, args.n, seed, args.max_attempts) {
            Ok((h, attempt)) => {
                eprintln!("strong instance found on attempt {attempt}");
                h
            }
            Err(e @ Error::BudgetExceeded) => {
                return fail(
                    1,
                    format!("{e}: no strong instance within {} attempts", args.max_attempts),
                )
            }
            Err(e) => return fail_err(&e),
        }
    } else {
        match random_tournament(args.k, args.n, seed) {
            Ok(h) => h,
            Err(e) => return fail_err(&e),
        }
    };
    match emit(&args.out, &formats::kht_to_string(&h)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(c) => c,
    }
}

fn cmd_check(what: CheckCmd) -> ExitCode {
    match what {
        CheckCmd::Strong { input } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            let ok = is_strong(&h);
            println!("strong {ok}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        CheckCmd::HamPath { input } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            match hamiltonian_path(&h) {
                Ok(p) => {
                    print_path(&p);
                    ExitCode::SUCCESS
                }
                Err(e) => fail_err(&e),
            }
        }
        CheckCmd::HamCycle { input } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            match hamiltonian_cycle(&h) {
                Ok(Some(c)) => {
                    print_cycle(&c);
                    ExitCode::SUCCESS
                }
                Ok(None) => fail(1, "no spanning cycle"),
                Err(e) => fail_err(&e),
            }
        }
        CheckCmd::Pancyclic { input } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            let ok = is_vertex_pancyclic(&h);
            println!("vertex-pancyclic {ok}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        CheckCmd::Kings { input, min } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            let kings = two_kings(&h);
            let row: Vec<String> = kings.iter().map(|v| v.to_string()).collect();
            println!("kings {}", row.join(" "));
            if kings.len() >= min {
                ExitCode::SUCCESS
            } else {
                fail(1, format!("only {} two-step kings, wanted {min}", kings.len()))
            }
        }
    }
}

fn cmd_degenerate(args: DegenerateArgs) -> ExitCode {
    let h = match load_structure(&args.input) {
        Ok(h) => h,
        Err(c) => return c,
    };
    let (t, cert) = match degenerate_tournament(&h) {
        Ok(pair) => pair,
        Err(e) => return fail_err(&e),
    };
    let report = verify_membership(&t, &h, &cert);
    if !report.ok {
        let e = Error::InternalGuaranteeViolated(format!(
            "constructed tournament failed its own certificate: {:?}",
            report.violations
        ));
        return fail_err(&e);
    }
    if !t.is_strong() {
        let e = Error::InternalGuaranteeViolated(
            "constructed tournament is not strong".into(),
        );
        return fail_err(&e);
    }
    if let Some(path) = &args.cert {
        let text = formats::cert_to_string(&cert, h.n());
        if let Err(e) = fs::write(path, text) {
            return fail(2, format!("writing {}: {e}", path.display()));
        }
    }
    match emit(&args.out, &formats::trn_to_string(&t)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(c) => c,
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> ExitCode {
    let h = match load_structure(&args.input) {
        Ok(h) => h,
        Err(c) => return c,
    };
    let mut count = 0usize;
    for item in enumerate_th(&h, args.limit) {
        match item {
            Ok((t, cert)) => {
                let report = verify_membership(&t, &h, &cert);
                if !report.ok {
                    let e = Error::InternalGuaranteeViolated(format!(
                        "enumerated member failed its certificate: {:?}",
                        report.violations
                    ));
                    return fail_err(&e);
                }
                if args.assert_no_strong && t.is_strong() {
                    println!("strong-member {count} {}", member_line(&t));
                    return fail(1, "a strong generated tournament exists");
                }
                println!("member {count} {}", member_line(&t));
                count += 1;
            }
            Err(Error::BudgetExceeded) => {
                println!("members {count}");
                return fail(1, "more members exist than the limit allows");
            }
            Err(e) => return fail_err(&e),
        }
    }
    println!("members {count}");
    if args.assert_no_strong {
        println!("no-strong-member");
    }
    ExitCode::SUCCESS
}

fn cmd_cover(args: CoverArgs) -> ExitCode {
    let h = match load_structure(&args.input) {
        Ok(h) => h,
        Err(c) => return c,
    };
    let report = match gallai_milgram_chain(&h, args.bound) {
        Ok(r) => r,
        Err(e) => return fail_err(&e),
    };
    if let Err(e) = report.validate(&h) {
        let wrapped =
            Error::InternalGuaranteeViolated(format!("cover witnesses failed validation: {e}"));
        return fail_err(&wrapped);
    }
    let (pc_h, pc_d, alpha_d, alpha_h) = report.values();
    println!("pc-structure {pc_h}");
    println!("pc-digraph {pc_d}");
    println!("alpha-digraph {alpha_d}");
    println!("alpha-structure {alpha_h}");
    for p in report.hyper_cover.paths() {
        let vs: Vec<String> = p.vertices().iter().map(|v| v.to_string()).collect();
        let arcs: Vec<String> = p.arcs().iter().map(|a| a.to_string()).collect();
        if arcs.is_empty() {
            println!("path {}", vs.join(" "));
        } else {
            println!("path {} via {}", vs.join(" "), arcs.join(" "));
        }
    }
    for p in &report.digraph_cover {
        let vs: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        println!("dpath {}", vs.join(" "));
    }
    let di: Vec<String> = report.digraph_independent.iter().map(|v| v.to_string()).collect();
    println!("independent-digraph {}", di.join(" "));
    let hi: Vec<String> = report.hyper_independent.iter().map(|v| v.to_string()).collect();
    println!("independent-structure {}", hi.join(" "));
    if report.chain_holds() {
        println!("chain pass");
        ExitCode::SUCCESS
    } else {
        println!("chain fail");
        fail(1, "cover/independence chain violated")
    }
}

fn cmd_lemmas(what: LemmasCmd) -> ExitCode {
    match what {
        LemmasCmd::Inequality { k, n } => match check_matching_inequality(k, n) {
            Ok(c) => {
                println!(
                    "inequality k={k} n={n} lhs={} rhs={} holds={}",
                    c.lhs, c.rhs, c.holds
                );
                ExitCode::SUCCESS
            }
            Err(e) => fail_err(&e),
        },
        LemmasCmd::InequalityGrid => {
            let mut points: Vec<(u32, u32)> = Vec::new();
            points.extend((5..=40).map(|n| (3, n)));
            points.extend((6..=40).map(|n| (4, n)));
            for k in 5..=15 {
                points.extend((k..=k + 20).map(|n| (k, n)));
            }
            for (k, n) in points {
                let c = check_matching_inequality(k, n)
                    .expect("grid points satisfy the preconditions");
                println!(
                    "inequality k={k} n={n} lhs={} rhs={} holds={}",
                    c.lhs, c.rhs, c.holds
                );
            }
            ExitCode::SUCCESS
        }
        LemmasCmd::CycleBounds { input } => {
            let h = match load_structure(&input) {
                Ok(h) => h,
                Err(c) => return c,
            };
            let cycle = match hamiltonian_cycle(&h) {
                Ok(Some(c)) => c,
                Ok(None) => return fail(1, "no spanning cycle to check"),
                Err(e) => return fail_err(&e),
            };
            let verdict = match check_cycle_bounds(&cycle) {
                Ok(v) => v,
                Err(e) => return fail_err(&e),
            };
            for b in &verdict.checks {
                println!(
                    "bound {} observed={} limit={} ok={}",
                    b.name, b.observed, b.limit, b.ok
                );
            }
            if verdict.pass {
                println!("verdict pass");
                ExitCode::SUCCESS
            } else {
                println!("verdict fail");
                fail(1, "a pair-occurrence bound failed")
            }
        }
    }
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    let seed = match parse_seed(&args.seed) {
        Ok(s) => s,
        Err(m) => return fail(2, m),
    };
    match search_no_strong_witness(args.k, args.n, args.budget, seed) {
        Ok(h) => match emit(&args.out, &formats::kht_to_string(&h)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(c) => c,
        },
        Err(e @ Error::BudgetExceeded) => fail(
            1,
            format!("{e}: no witness within {} scored candidates", args.budget),
        ),
        Err(e) => fail_err(&e),
    }
}

fn cmd_experiment(args: ExperimentArgs) -> ExitCode {
    let text = match fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => return fail(2, format!("reading {}: {e}", args.config.display())),
    };
    let config = match experiment::Config::parse(&text) {
        Ok(c) => c,
        Err(m) => return fail(2, format!("config: {m}")),
    };
    let threads = match experiment::thread_count() {
        Ok(t) => t,
        Err(m) => return fail(2, m),
    };
    let report = experiment::run(&config, threads);
    let pass = report.pass;
    match emit(&args.out, &report.text) {
        Ok(()) => {}
        Err(c) => return c,
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        fail(1, "experiment verdict: fail (failure lines carry seeds)")
    }
}
