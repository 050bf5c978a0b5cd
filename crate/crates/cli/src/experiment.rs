//! Seeded experiment campaigns with deterministic, machine-readable
//! reports.
//!
//! A campaign config is a flat `key = value` file (`#` starts a comment):
//!
//! ```text
//! campaign = degenerate-sweep
//! grid = 3x7,3x8,4x7
//! trials = 200
//! seed = 0xD1CE
//! ```
//!
//! Trial `t` of config index `ci` uses the derived seed
//! `derive_seed(master, ci * trials + t)`, so reports are reproducible
//! line by line. Trials are striped over worker threads
//! (`HYPERTOUR_THREADS`, default: available parallelism) and merged back
//! in index order, so the report bytes do not depend on the thread count.
//! Timing goes to stderr only.

use std::fmt::Write as _;
use std::time::Instant;

use hypertour::formats;
use hypertour::{
    check_cycle_bounds, degenerate_tournament, derive_seed, gallai_milgram_chain,
    hamiltonian_cycle, is_vertex_pancyclic, pancyclic_hyperarcs_on_cycle, random_hyperdigraph,
    random_strong_tournament, search_no_strong_witness, two_kings, verify_membership,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Campaign {
    DegenerateSweep,
    LemmaSweep,
    PancyclicSweep,
    CoverSweep,
    KingsSweep,
    WitnessSearch,
}

impl Campaign {
    fn name(self) -> &'static str {
        match self {
            Campaign::DegenerateSweep => "degenerate-sweep",
            Campaign::LemmaSweep => "lemma-sweep",
            Campaign::PancyclicSweep => "pancyclic-sweep",
            Campaign::CoverSweep => "cover-sweep",
            Campaign::KingsSweep => "kings-sweep",
            Campaign::WitnessSearch => "witness-search",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub campaign: Campaign,
    pub grid: Vec<(u32, u32)>,
    pub trials: u32,
    pub seed: u64,
    /// Scored-candidate budget for `witness-search`.
    pub budget: u64,
    /// Vertex cap for the exhaustive cover procedures.
    pub bound: Option<u32>,
    /// Smallest acceptable number of two-step kings (`kings-sweep`).
    pub min_kings: usize,
    /// Smallest acceptable count of all-length arcs (`pancyclic-sweep`).
    pub min_arcs: usize,
    /// Attempt budget when drawing strong instances.
    pub max_attempts: u32,
}

pub fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        s.parse::<u64>()
    };
    parsed.map_err(|_| format!("invalid seed `{s}`"))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut campaign = None;
        let mut grid = None;
        let mut trials = None;
        let mut seed = None;
        let mut budget = 1000u64;
        let mut bound = None;
        let mut min_kings = 3usize;
        let mut min_arcs = 3usize;
        let mut max_attempts = 200u32;
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {lineno}: expected `key = value`"));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "campaign" => {
                    campaign = Some(match value {
                        "degenerate-sweep" => Campaign::DegenerateSweep,
                        "lemma-sweep" => Campaign::LemmaSweep,
                        "pancyclic-sweep" => Campaign::PancyclicSweep,
                        "cover-sweep" => Campaign::CoverSweep,
                        "kings-sweep" => Campaign::KingsSweep,
                        "witness-search" => Campaign::WitnessSearch,
                        other => return Err(format!("line {lineno}: unknown campaign `{other}`")),
                    });
                }
                "grid" => {
                    let mut parsed = Vec::new();
                    for cell in value.split(',') {
                        let cell = cell.trim();
                        let Some((k, n)) = cell.split_once('x') else {
                            return Err(format!(
                                "line {lineno}: grid cells look like `3x7`, got `{cell}`"
                            ));
                        };
                        let k: u32 = k
                            .trim()
                            .parse()
                            .map_err(|_| format!("line {lineno}: bad arity in `{cell}`"))?;
                        let n: u32 = n
                            .trim()
                            .parse()
                            .map_err(|_| format!("line {lineno}: bad size in `{cell}`"))?;
                        parsed.push((k, n));
                    }
                    if parsed.is_empty() {
                        return Err(format!("line {lineno}: empty grid"));
                    }
                    grid = Some(parsed);
                }
                "trials" => {
                    trials = Some(
                        value
                            .parse::<u32>()
                            .map_err(|_| format!("line {lineno}: bad trials `{value}`"))?,
                    );
                }
                "seed" => {
                    seed = Some(parse_seed(value).map_err(|m| format!("line {lineno}: {m}"))?);
                }
                "budget" => {
                    budget = value
                        .parse()
                        .map_err(|_| format!("line {lineno}: bad budget `{value}`"))?;
                }
                "bound" => {
                    bound = Some(
                        value
                            .parse()
                            .map_err(|_| format!("line {lineno}: bad bound `{value}`"))?,
                    );
                }
                "min-kings" => {
                    min_kings = value
                        .parse()
                        .map_err(|_| format!("line {lineno}: bad min-kings `{value}`"))?;
                }
                "min-arcs" => {
                    min_arcs = value
                        .parse()
                        .map_err(|_| format!("line {lineno}: bad min-arcs `{value}`"))?;
                }
                "max-attempts" => {
                    max_attempts = value
                        .parse()
                        .map_err(|_| format!("line {lineno}: bad max-attempts `{value}`"))?;
                }
                other => return Err(format!("line {lineno}: unknown key `{other}`")),
            }
        }
        let campaign = campaign.ok_or("missing `campaign`")?;
        let grid = grid.ok_or("missing `grid`")?;
        let trials = trials.ok_or("missing `trials`")?;
        let seed = seed.ok_or("missing `seed`")?;
        if trials == 0 {
            return Err("trials must be positive".into());
        }
        if campaign == Campaign::CoverSweep && trials < 2 {
            return Err("cover-sweep needs at least 2 trials to sweep density".into());
        }
        Ok(Config {
            campaign,
            grid,
            trials,
            seed,
            budget,
            bound,
            min_kings,
            min_arcs,
            max_attempts,
        })
    }
}

/// Worker count from `HYPERTOUR_THREADS` (default: available parallelism).
pub fn thread_count() -> Result<usize, String> {
    match std::env::var("HYPERTOUR_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!(
                "HYPERTOUR_THREADS must be a positive integer, got `{v}`"
            )),
        },
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)),
        Err(e) => Err(format!("HYPERTOUR_THREADS: {e}")),
    }
}

pub struct Report {
    pub text: String,
    pub pass: bool,
}

/// Extra report lines on success, or a one-line failure reason.
type TrialOutcome = Result<Vec<String>, String>;

fn sanitize(reason: String) -> String {
    reason.replace('\n', "; ")
}

fn run_trial(cfg: &Config, k: u32, n: u32, t: u32, trial_seed: u64) -> TrialOutcome {
    match cfg.campaign {
        Campaign::DegenerateSweep => {
            let (h, _) = random_strong_tournament(k, n, trial_seed, cfg.max_attempts)
                .map_err(|e| sanitize(format!("drawing strong instance: {e}")))?;
            let (tour, cert) =
                degenerate_tournament(&h).map_err(|e| sanitize(e.to_string()))?;
            let report = verify_membership(&tour, &h, &cert);
            if !report.ok {
                let rows: Vec<String> =
                    report.violations.iter().map(|v| v.to_string()).collect();
                return Err(sanitize(format!("certificate: {}", rows.join("; "))));
            }
            if !tour.is_strong() {
                return Err("degenerate tournament is not strong".into());
            }
            Ok(Vec::new())
        }
        Campaign::LemmaSweep => {
            let (h, _) = random_strong_tournament(k, n, trial_seed, cfg.max_attempts)
                .map_err(|e| sanitize(format!("drawing strong instance: {e}")))?;
            let cycle = hamiltonian_cycle(&h)
                .map_err(|e| sanitize(e.to_string()))?
                .ok_or("no spanning cycle")?;
            let verdict = check_cycle_bounds(&cycle).map_err(|e| sanitize(e.to_string()))?;
            if !verdict.pass {
                let bad: Vec<&str> = verdict
                    .checks
                    .iter()
                    .filter(|b| !b.ok)
                    .map(|b| b.name)
                    .collect();
                return Err(format!("bounds failed: {}", bad.join(", ")));
            }
            Ok(Vec::new())
        }
        Campaign::PancyclicSweep => {
            let (h, _) = random_strong_tournament(k, n, trial_seed, cfg.max_attempts)
                .map_err(|e| sanitize(format!("drawing strong instance: {e}")))?;
            if !is_vertex_pancyclic(&h) {
                return Err("not vertex-pancyclic".into());
            }
            let cycle = hamiltonian_cycle(&h)
                .map_err(|e| sanitize(e.to_string()))?
                .ok_or("no spanning cycle")?;
            let arcs = pancyclic_hyperarcs_on_cycle(&h, &cycle)
                .map_err(|e| sanitize(e.to_string()))?;
            if arcs.len() < cfg.min_arcs {
                return Err(format!(
                    "only {} all-length arcs on the cycle, wanted {}",
                    arcs.len(),
                    cfg.min_arcs
                ));
            }
            Ok(Vec::new())
        }
        Campaign::CoverSweep => {
            let density = f64::from(t) / f64::from(cfg.trials - 1);
            let h = random_hyperdigraph(k, n, density, trial_seed)
                .map_err(|e| sanitize(e.to_string()))?;
            let report =
                gallai_milgram_chain(&h, cfg.bound).map_err(|e| sanitize(e.to_string()))?;
            if !report.chain_holds() {
                let (a, b, c, d) = report.values();
                return Err(format!("chain violated: {a} {b} {c} {d}"));
            }
            report
                .validate(&h)
                .map_err(|e| sanitize(format!("witness validation: {e}")))?;
            Ok(Vec::new())
        }
        Campaign::KingsSweep => {
            let (h, _) = random_strong_tournament(k, n, trial_seed, cfg.max_attempts)
                .map_err(|e| sanitize(format!("drawing strong instance: {e}")))?;
            let kings = two_kings(&h);
            if kings.len() < cfg.min_kings {
                return Err(format!(
                    "only {} two-step kings, wanted {}",
                    kings.len(),
                    cfg.min_kings
                ));
            }
            Ok(Vec::new())
        }
        Campaign::WitnessSearch => match search_no_strong_witness(k, n, cfg.budget, trial_seed) {
            Ok(h) => {
                let lines = formats::kht_to_string(&h)
                    .lines()
                    .map(|l| format!("witness {l}"))
                    .collect();
                Ok(lines)
            }
            Err(e) => Err(sanitize(e.to_string())),
        },
    }
}

/// Runs every trial of the campaign, striped across `threads` workers, and
/// assembles the deterministic report.
pub fn run(cfg: &Config, threads: usize) -> Report {
    let started = Instant::now();
    let total = cfg.grid.len() * cfg.trials as usize;
    let mut slots: Vec<Option<TrialOutcome>> = Vec::new();
    slots.resize_with(total, || None);

    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..threads.min(total.max(1)) {
            let cfg = &*cfg;
            handles.push(scope.spawn(move || {
                let mut mine: Vec<(usize, TrialOutcome)> = Vec::new();
                let mut idx = w;
                while idx < total {
                    let ci = idx / cfg.trials as usize;
                    let t = (idx % cfg.trials as usize) as u32;
                    let (k, n) = cfg.grid[ci];
                    let trial_seed = derive_seed(cfg.seed, idx as u64);
                    mine.push((idx, run_trial(cfg, k, n, t, trial_seed)));
                    idx += threads;
                }
                mine
            }));
        }
        for h in handles {
            for (idx, outcome) in h.join().expect("worker panicked") {
                slots[idx] = Some(outcome);
            }
        }
    });

    let mut text = String::new();
    let _ = writeln!(text, "report 1");
    let _ = writeln!(text, "campaign={}", cfg.campaign.name());
    let _ = writeln!(text, "seed=0x{:016X}", cfg.seed);
    let _ = writeln!(text, "trials={}", cfg.trials);
    let grid_cells: Vec<String> = cfg.grid.iter().map(|(k, n)| format!("{k}x{n}")).collect();
    let _ = writeln!(text, "grid={}", grid_cells.join(","));
    let mut pass = true;
    for (ci, &(k, n)) in cfg.grid.iter().enumerate() {
        let mut ok = 0u32;
        let mut failures: Vec<(u32, u64, String)> = Vec::new();
        let mut extras: Vec<String> = Vec::new();
        for t in 0..cfg.trials {
            let idx = ci * cfg.trials as usize + t as usize;
            let trial_seed = derive_seed(cfg.seed, idx as u64);
            match slots[idx].take().expect("every trial ran") {
                Ok(lines) => {
                    ok += 1;
                    extras.extend(lines);
                }
                Err(reason) => failures.push((t, trial_seed, reason)),
            }
        }
        let _ = writeln!(
            text,
            "config k={k} n={n} pass={ok} fail={}",
            failures.len()
        );
        for (t, s, reason) in &failures {
            pass = false;
            let _ = writeln!(
                text,
                "failure config={k}x{n} trial={t} seed=0x{s:016X} reason={reason}"
            );
        }
        for line in extras {
            let _ = writeln!(text, "{line}");
        }
    }
    let _ = writeln!(text, "verdict={}", if pass { "pass" } else { "fail" });
    eprintln!(
        "campaign {} finished in {:.2?} on {} thread(s)",
        cfg.campaign.name(),
        started.elapsed(),
        threads
    );
    Report { text, pass }
}
