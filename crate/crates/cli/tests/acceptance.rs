//! Acceptance check for output determinism: every command must emit
//! byte-identical stdout for a fixed command line, across repeated runs and
//! across worker-thread counts (`HYPERTOUR_THREADS`).

use std::process::{Command, Stdio};
use std::time::Instant;

const BIN: &str = env!("CARGO_BIN_EXE_hypertour");

fn capture(args: &[&str], env: &[(&str, &str)]) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(BIN);
    cmd.args(args).stdin(Stdio::null());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        out.stdout,
    )
}

fn check(name: &str, f: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    match f() {
        Ok(()) => println!("[acceptance] {name}: PASS ({:?})", started.elapsed()),
        Err(msg) => {
            println!("[acceptance] {name}: FAIL - {msg}");
            panic!("[acceptance] {name}: FAIL - {msg}");
        }
    }
}

/// Repeated runs of the same command line produce byte-identical stdout, and
/// experiment reports do not change when the worker count does.
#[test]
fn outputs_are_deterministic() {
    check("outputs_are_deterministic", || {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;

        // Plain commands, run twice each.
        let kht = dir.path().join("in.kht");
        let (code, first) = capture(&["gen", "-k", "3", "-n", "9", "--seed", "0xDECADE", "--strong"], &[]);
        if code != 0 {
            return Err("gen failed".into());
        }
        std::fs::write(&kht, &first).map_err(|e| e.to_string())?;
        let input = kht.to_str().unwrap();
        // Exhaustive member enumeration only terminates quickly on small
        // families, so it runs against the stored order-5 witness.
        let witness = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/witness_3_5.kht");
        let repeated: &[&[&str]] = &[
            &["gen", "-k", "3", "-n", "9", "--seed", "0xDECADE", "--strong"],
            &["check", "ham-cycle", input],
            &["degenerate", input],
            &["enumerate-th", witness, "--assert-no-strong"],
            &["cover", input],
            &["lemmas", "inequality-grid"],
            &["lemmas", "cycle-bounds", input],
        ];
        for args in repeated {
            let (c1, o1) = capture(args, &[]);
            let (c2, o2) = capture(args, &[]);
            if (c1, &o1) != (c2, &o2) {
                return Err(format!("`{}` differed between runs", args.join(" ")));
            }
            if o1.is_empty() {
                return Err(format!("`{}` printed nothing to compare", args.join(" ")));
            }
        }

        // Experiment reports across thread counts, both stdout and -o file.
        let campaigns = [
            (
                "degenerate.cfg",
                "campaign = degenerate-sweep\ngrid = 3x7,3x8,4x7,4x8\ntrials = 25\nseed = 0xFEED\n",
            ),
            (
                "cover.cfg",
                "campaign = cover-sweep\ngrid = 3x7,4x8\ntrials = 10\nseed = 0xFEED\n",
            ),
            (
                "lemma.cfg",
                "campaign = lemma-sweep\ngrid = 3x7,3x9\ntrials = 20\nseed = 0xFEED\n",
            ),
        ];
        for (file, cfg) in campaigns {
            let path = dir.path().join(file);
            std::fs::write(&path, cfg).map_err(|e| e.to_string())?;
            let cfg_arg = path.to_str().unwrap();
            let mut reference: Option<Vec<u8>> = None;
            for threads in ["1", "2", "4"] {
                let out_file = dir.path().join(format!("{file}.{threads}.report"));
                let (code, stdout) = capture(
                    &["experiment", cfg_arg, "-o", out_file.to_str().unwrap()],
                    &[("HYPERTOUR_THREADS", threads)],
                );
                if code != 0 {
                    return Err(format!("{file}: campaign failed at {threads} threads"));
                }
                if !stdout.is_empty() {
                    return Err(format!("{file}: report leaked to stdout alongside -o"));
                }
                let report = std::fs::read(&out_file).map_err(|e| e.to_string())?;
                if !report.ends_with(b"verdict=pass\n") {
                    return Err(format!("{file}: campaign did not pass at {threads} threads"));
                }
                match &reference {
                    None => reference = Some(report),
                    Some(expected) => {
                        if &report != expected {
                            return Err(format!(
                                "{file}: report differs between thread counts (at {threads})"
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    });
}
