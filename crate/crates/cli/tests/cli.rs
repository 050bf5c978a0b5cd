//! Behavioural tests for the `hypertour` binary: exit codes, stdin handling,
//! file round trips, and error reporting.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Stdio};

use hypertour::formats;
use hypertour::hypercore::ascending_tournament;
use hypertour::{is_strong, verify_membership, Tournament, VertexId};

const BIN: &str = env!("CARGO_BIN_EXE_hypertour");

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Output {
    run_with(args, None, &[])
}

fn run_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.stdin(if stdin.is_some() {
        Stdio::piped()
    } else {
        Stdio::null()
    });
    cmd.stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    let out = child.wait_with_output().expect("binary runs");
    Output {
        code: out.status.code().expect("no signal"),
        stdout: String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        stderr: String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    }
}

/// The four-vertex fixture used across the library's own tests.
const H4_TEXT: &str = "kht 1\n3 4\n1 2 3\n2 4 1\n3 4 1\n2 3 4\n";

/// A structure where vertex 1 precedes everything, hence is unreachable.
fn ascending_text(k: u32, n: u32) -> String {
    formats::kht_to_string(&ascending_tournament(k, n).unwrap())
}

#[test]
fn gen_emits_parseable_canonical_text() {
    let out = run(&["gen", "-k", "3", "-n", "6", "--seed", "42"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.starts_with("kht 1\n3 6\n"));
    let h = formats::kht_from_str(&out.stdout).expect("gen output parses");
    assert_eq!((h.k(), h.n()), (3, 6));
}

#[test]
fn gen_rejects_bad_seed_and_bad_shape() {
    let bad_seed = run(&["gen", "-k", "3", "-n", "6", "--seed", "0xZZ"]);
    assert_eq!(bad_seed.code, 2);
    let bad_shape = run(&["gen", "-k", "7", "-n", "4", "--seed", "1"]);
    assert_eq!(bad_shape.code, 2, "stderr: {}", bad_shape.stderr);
}

#[test]
fn gen_strong_reports_attempt_on_stderr_only() {
    let out = run(&["gen", "-k", "3", "-n", "7", "--seed", "7", "--strong"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("attempt"));
    assert!(!out.stdout.contains("attempt"));
    let h = formats::kht_from_str(&out.stdout).unwrap();
    assert!(is_strong(&h));
}

#[test]
fn check_strong_reads_stdin_and_sets_exit_code() {
    let strong = run_with(&["check", "strong", "-"], Some(H4_TEXT), &[]);
    assert_eq!(strong.code, 0);
    assert_eq!(strong.stdout, "strong true\n");

    let weak = run_with(&["check", "strong", "-"], Some(&ascending_text(3, 6)), &[]);
    assert_eq!(weak.code, 1);
    assert_eq!(weak.stdout, "strong false\n");
}

#[test]
fn check_ham_path_prints_path_and_arcs() {
    let out = run_with(&["check", "ham-path", "-"], Some(&ascending_text(3, 5)), &[]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    let path = lines.next().unwrap();
    assert!(path.starts_with("path "));
    assert_eq!(path.split_whitespace().count(), 6, "five vertices after the tag");
    assert_eq!(lines.filter(|l| l.starts_with("arc ")).count(), 4);
}

#[test]
fn check_ham_cycle_on_cycle_free_input_exits_one() {
    // Vertex 1 is never preceded, so no spanning cycle exists.
    let out = run_with(&["check", "ham-cycle", "-"], Some(&ascending_text(3, 7)), &[]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("no spanning cycle"));
}

#[test]
fn check_ham_cycle_prints_canonical_cycle() {
    let out = run_with(&["check", "ham-cycle", "-"], Some(H4_TEXT), &[]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("cycle 1 "), "cycles start at vertex 1");
    assert_eq!(out.stdout.lines().filter(|l| l.starts_with("arc ")).count(), 4);
}

#[test]
fn check_kings_honours_min() {
    let ok = run_with(&["check", "kings", "-"], Some(H4_TEXT), &[]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.starts_with("kings "));
    let too_many = run_with(&["check", "kings", "-", "--min", "5"], Some(H4_TEXT), &[]);
    assert_eq!(too_many.code, 1);
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let bad_header = run_with(&["check", "strong", "-"], Some("kht 2\n3 4\n"), &[]);
    assert_eq!(bad_header.code, 2);
    assert!(bad_header.stderr.contains("line 1"), "stderr: {}", bad_header.stderr);

    let missing_rows = run_with(&["check", "strong", "-"], Some("kht 1\n3 4\n1 2 3\n"), &[]);
    assert_eq!(missing_rows.code, 2);

    let missing_file = run(&["check", "strong", "/nonexistent/x.kht"]);
    assert_eq!(missing_file.code, 2);
}

#[test]
fn degenerate_unsupported_range_exits_two() {
    let out = run_with(&["degenerate", "-"], Some(H4_TEXT), &[]);
    assert_eq!(out.code, 2, "order 4 is outside the supported degeneration range");
}

#[test]
fn degenerate_requires_strong_input() {
    let out = run_with(&["degenerate", "-"], Some(&ascending_text(3, 7)), &[]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("strong"));
}

#[test]
fn degenerate_writes_tournament_and_certificate_files() {
    let dir = tempfile::tempdir().unwrap();
    let kht = dir.path().join("in.kht");
    let trn = dir.path().join("out.trn");
    let cert = dir.path().join("out.cert");

    let gen = run(&["gen", "-k", "3", "-n", "8", "--seed", "11", "--strong"]);
    assert_eq!(gen.code, 0);
    std::fs::write(&kht, &gen.stdout).unwrap();

    let out = run(&[
        "degenerate",
        kht.to_str().unwrap(),
        "-o",
        trn.to_str().unwrap(),
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "", "tournament went to the file, not stdout");

    let h = formats::kht_from_str(&gen.stdout).unwrap();
    let t_text = std::fs::read_to_string(&trn).unwrap();
    assert!(t_text.starts_with("trn 1\n8\n"));
    let t: Tournament = formats::trn_from_str(&t_text).unwrap();
    assert!(t.is_strong());

    let c_text = std::fs::read_to_string(&cert).unwrap();
    assert!(c_text.starts_with("cert 1\n8\n"));
    let c = formats::cert_from_str(&c_text, &h).unwrap();
    let report = verify_membership(&t, &h, &c);
    assert!(report.ok, "round-tripped certificate verifies: {:?}", report.violations);
}

#[test]
fn enumerate_th_counts_members_and_enforces_limit() {
    let witness = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/witness_3_5.kht");
    let witness = witness.to_str().unwrap();

    let full = run(&["enumerate-th", witness, "--assert-no-strong"]);
    assert_eq!(full.code, 0, "stderr: {}", full.stderr);
    assert!(full.stdout.contains("\nmembers 13\n"), "stdout: {}", full.stdout);
    assert!(full.stdout.ends_with("no-strong-member\n"));
    assert_eq!(
        full.stdout.lines().filter(|l| l.starts_with("member ")).count(),
        13
    );

    let limited = run(&["enumerate-th", witness, "--limit", "2"]);
    assert_eq!(limited.code, 1);
    assert!(limited.stdout.contains("members 2"));
}

#[test]
fn enumerate_th_flags_strong_members() {
    // The four-vertex fixture generates nothing; a strong (3,5) instance
    // usually generates at least one strong tournament.
    let empty = run_with(&["enumerate-th", "-", "--assert-no-strong"], Some(H4_TEXT), &[]);
    assert_eq!(empty.code, 0);
    assert!(empty.stdout.contains("members 0"));
}

#[test]
fn cover_reports_chain_and_witnesses() {
    let out = run_with(&["cover", "-"], Some(H4_TEXT), &[]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("pc-structure 1\n"));
    assert!(out.stdout.contains("pc-digraph 1\n"));
    assert!(out.stdout.contains("alpha-digraph 1\n"));
    assert!(out.stdout.contains("alpha-structure 2\n"));
    assert!(out.stdout.contains("\nchain pass\n"));
    assert!(out.stdout.lines().any(|l| l.starts_with("path ")));
    assert!(out.stdout.lines().any(|l| l.starts_with("dpath ")));
}

#[test]
fn cover_bound_overflow_exits_one() {
    let big = ascending_text(3, 17);
    let out = run_with(&["cover", "-"], Some(&big), &[]);
    assert_eq!(out.code, 1, "order 17 exceeds the default exhaustive bound");
    assert!(out.stderr.contains("budget"), "stderr: {}", out.stderr);
}

#[test]
fn lemmas_inequality_prints_exact_values() {
    let point = run(&["lemmas", "inequality", "3", "9"]);
    assert_eq!(point.code, 0);
    assert_eq!(point.stdout, "inequality k=3 n=9 lhs=3 rhs=3 holds=true\n");

    let out_of_domain = run(&["lemmas", "inequality", "2", "9"]);
    assert_eq!(out_of_domain.code, 2);

    let grid = run(&["lemmas", "inequality-grid"]);
    assert_eq!(grid.code, 0);
    assert_eq!(grid.stdout.lines().count(), 36 + 35 + 11 * 21);
    assert!(grid.stdout.contains("inequality k=3 n=5 lhs=3 rhs=-1 holds=false\n"));
    assert!(grid.stdout.contains("inequality k=4 n=8 lhs=6 rhs=7 holds=true\n"));
}

#[test]
fn lemmas_cycle_bounds_passes_on_generated_instance() {
    let gen = run(&["gen", "-k", "3", "-n", "7", "--seed", "3", "--strong"]);
    assert_eq!(gen.code, 0);
    let out = run_with(&["lemmas", "cycle-bounds", "-"], Some(&gen.stdout), &[]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("bound nonconsecutive-pair-occurrences "));
    assert!(out.stdout.ends_with("verdict pass\n"));

    let unsupported = run_with(
        &["lemmas", "cycle-bounds", "-"],
        Some(&formats::kht_to_string(
            &hypertour::random_strong_tournament(4, 8, 5, 200).unwrap().0,
        )),
        &[],
    );
    assert_eq!(unsupported.code, 2, "arity 4 bounds only cover order 7");
}

#[test]
fn search_witness_budget_failure_exits_one() {
    let out = run(&["search-witness", "-k", "3", "-n", "5", "--seed", "1", "--budget", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("budget"), "stderr: {}", out.stderr);
}

#[test]
fn experiment_rejects_bad_configs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");

    std::fs::write(&cfg, "campaign = degenerate-sweep\nwidget = 3\n").unwrap();
    let unknown = run(&["experiment", cfg.to_str().unwrap()]);
    assert_eq!(unknown.code, 2);
    assert!(unknown.stderr.contains("unknown key"));

    std::fs::write(&cfg, "campaign = nonsense\n").unwrap();
    let campaign = run(&["experiment", cfg.to_str().unwrap()]);
    assert_eq!(campaign.code, 2);

    std::fs::write(
        &cfg,
        "campaign = degenerate-sweep\ngrid = 3x7\ntrials = 1\nseed = 1\n",
    )
    .unwrap();
    let threads = run_with(
        &["experiment", cfg.to_str().unwrap()],
        None,
        &[("HYPERTOUR_THREADS", "zero")],
    );
    assert_eq!(threads.code, 2);
    assert!(threads.stderr.contains("HYPERTOUR_THREADS"));
}

#[test]
fn experiment_runs_small_campaign_to_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("kings.cfg");
    std::fs::write(
        &cfg,
        "# at least three two-step kings on every strong instance\n\
         campaign = kings-sweep\n\
         grid = 3x7,4x8\n\
         trials = 5\n\
         seed = 0x00000000000000AB\n",
    )
    .unwrap();
    let out = run(&["experiment", cfg.to_str().unwrap()]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.starts_with("report 1\ncampaign=kings-sweep\n"));
    assert!(out.stdout.contains("\nconfig k=3 n=7 pass=5 fail=0\n"));
    assert!(out.stdout.contains("\nconfig k=4 n=8 pass=5 fail=0\n"));
    assert!(out.stdout.ends_with("verdict=pass\n"));
    assert!(!out.stdout.contains("elapsed"), "timing stays off stdout");
}

#[test]
fn member_lines_orient_every_pair() {
    let witness = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/witness_3_5.kht");
    let out = run(&["enumerate-th", witness.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let first = out
        .stdout
        .lines()
        .find(|l| l.starts_with("member 0 "))
        .expect("at least one member");
    // 5 vertices -> 10 oriented pairs after the "member 0" prefix.
    assert_eq!(first.split_whitespace().count(), 2 + 10);
    assert!(first.split_whitespace().skip(2).all(|c| c.contains('>')));
}

#[test]
fn vertex_id_display_matches_member_format() {
    // Guards the CLI's reliance on bare numeric Display for vertices.
    assert_eq!(VertexId::new(7).to_string(), "7");
}

#[cfg(unix)]
#[test]
fn early_closed_stdout_does_not_panic() {
    // ~90KB of output exceeds the pipe buffer, so once the reader closes the
    // writer is guaranteed to hit the broken pipe. It must die silently like
    // other line-oriented tools, not with a panic backtrace.
    let mut child = Command::new(BIN)
        .args(["gen", "-k", "3", "-n", "40", "--seed", "1"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    drop(child.stdout.take());
    let out = child.wait_with_output().expect("binary finishes");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        !stderr.contains("panicked"),
        "broken pipe must not panic: {stderr}"
    );
}
