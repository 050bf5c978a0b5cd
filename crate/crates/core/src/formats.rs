//! Plain-text serialization of structures, tournaments, and generation
//! certificates.
//!
//! All three formats share one line discipline: LF line endings only, a
//! required trailing newline, single spaces between fields, and no blank
//! lines. Rows follow a canonical order, so serialization is a bijection:
//! equal values produce byte-identical text.
//!
//! `.kht` — a complete structure:
//! ```text
//! kht 1
//! k n
//! <one row per k-subset, in ascending subset order: the arc's tuple>
//! ```
//!
//! `.trn` — a tournament:
//! ```text
//! trn 1
//! n
//! <one row per vertex pair, in ascending pair order: winner first>
//! ```
//!
//! `.cert` — a generation certificate:
//! ```text
//! cert 1
//! n
//! <one row per entry, ascending by (u, v): "u v s" with s the 0-based
//!  rank of the generating arc's subset>
//! ```
//! Certificate rows need not cover every pair: completeness is the
//! verifier's business, so a truncated certificate parses and then fails
//! verification with a precise violation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::degenerate::GenerationCertificate;
use crate::error::{Error, Result};
use crate::hypercore::{
    binomial, subset_rank, subset_unrank, HyperArc, HyperTournament, Tournament, VertexId,
};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits strictly LF-terminated text into lines, rejecting carriage
/// returns and a missing final newline.
fn split_lines(s: &str) -> Result<Vec<&str>> {
    if s.is_empty() {
        return Err(parse_err(1, "empty input"));
    }
    if let Some(pos) = s.find('\r') {
        let line = s[..pos].matches('\n').count() + 1;
        return Err(parse_err(line, "carriage return; lines must end with LF only"));
    }
    let Some(body) = s.strip_suffix('\n') else {
        let line = s.matches('\n').count() + 1;
        return Err(parse_err(line, "missing trailing newline"));
    };
    Ok(body.split('\n').collect())
}

/// Splits a line into single-space-separated nonempty fields.
fn fields(line: &str, lineno: usize) -> Result<Vec<&str>> {
    if line.is_empty() {
        return Err(parse_err(lineno, "blank line"));
    }
    let parts: Vec<&str> = line.split(' ').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(parse_err(
            lineno,
            "fields must be separated by single spaces",
        ));
    }
    Ok(parts)
}

fn parse_u32(tok: &str, lineno: usize) -> Result<u32> {
    tok.parse::<u32>()
        .map_err(|_| parse_err(lineno, format!("invalid integer `{tok}`")))
}

fn parse_u64(tok: &str, lineno: usize) -> Result<u64> {
    tok.parse::<u64>()
        .map_err(|_| parse_err(lineno, format!("invalid integer `{tok}`")))
}

fn expect_header(lines: &[&str], tag: &str) -> Result<()> {
    let Some(first) = lines.first() else {
        return Err(parse_err(1, format!("expected header `{tag} 1`")));
    };
    let parts = fields(first, 1)?;
    if parts != [tag, "1"] {
        return Err(parse_err(1, format!("expected header `{tag} 1`")));
    }
    Ok(())
}

/// Serializes a complete structure. Rows follow ascending subset order, so
/// the output is canonical.
pub fn kht_to_string(h: &HyperTournament) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kht 1");
    let _ = writeln!(out, "{} {}", h.k(), h.n());
    for arc in h.arcs() {
        let row: Vec<String> = arc.seq().iter().map(|v| v.get().to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the `.kht` format, enforcing the canonical row order.
pub fn kht_from_str(s: &str) -> Result<HyperTournament> {
    let lines = split_lines(s)?;
    expect_header(&lines, "kht")?;
    if lines.len() < 2 {
        return Err(parse_err(2, "expected `k n`"));
    }
    let head = fields(lines[1], 2)?;
    if head.len() != 2 {
        return Err(parse_err(2, "expected `k n`"));
    }
    let k = parse_u32(head[0], 2)?;
    let n = parse_u32(head[1], 2)?;
    if k < 2 {
        return Err(parse_err(2, "arity must be at least 2"));
    }
    let expected = binomial(u64::from(n), u64::from(k));
    let found = (lines.len() - 2) as u128;
    if found < expected {
        return Err(Error::MissingSubset {
            expected: expected.min(u128::from(u64::MAX)) as u64,
            found: found as u64,
        });
    }
    if found > expected {
        return Err(parse_err(2 + expected as usize + 1, "unexpected extra row"));
    }
    let mut tuples: Vec<Vec<u32>> = Vec::with_capacity(lines.len() - 2);
    let mut prev_key: Option<Vec<VertexId>> = None;
    for (i, line) in lines[2..].iter().enumerate() {
        let lineno = i + 3;
        let parts = fields(line, lineno)?;
        if parts.len() != k as usize {
            return Err(parse_err(
                lineno,
                format!("expected {k} vertex ids, found {}", parts.len()),
            ));
        }
        let mut ids = Vec::with_capacity(parts.len());
        for p in &parts {
            ids.push(parse_u32(p, lineno)?);
        }
        let arc = HyperArc::from_ids(&ids).map_err(|e| parse_err(lineno, e.to_string()))?;
        let key = arc.key();
        if let Some(prev) = &prev_key {
            if *prev == key {
                return Err(Error::DuplicateSubset(
                    key.iter().map(|v| v.get()).collect(),
                ));
            }
            if *prev > key {
                return Err(parse_err(lineno, "subset out of canonical order"));
            }
        }
        prev_key = Some(key);
        tuples.push(ids);
    }
    HyperTournament::build(k, n, &tuples)
}

/// Serializes a tournament: one row per unordered pair in ascending order,
/// winner printed first.
pub fn trn_to_string(t: &Tournament) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "trn 1");
    let _ = writeln!(out, "{}", t.n());
    for a in 1..=t.n() {
        for b in a + 1..=t.n() {
            let (u, v) = (VertexId::new(a), VertexId::new(b));
            if t.has_arc(u, v) {
                let _ = writeln!(out, "{a} {b}");
            } else {
                let _ = writeln!(out, "{b} {a}");
            }
        }
    }
    out
}

/// Parses the `.trn` format, enforcing the canonical pair order.
pub fn trn_from_str(s: &str) -> Result<Tournament> {
    let lines = split_lines(s)?;
    expect_header(&lines, "trn")?;
    if lines.len() < 2 {
        return Err(parse_err(2, "expected vertex count"));
    }
    let head = fields(lines[1], 2)?;
    if head.len() != 1 {
        return Err(parse_err(2, "expected a single vertex count"));
    }
    let n = parse_u32(head[0], 2)?;
    let expected = (u64::from(n) * u64::from(n.saturating_sub(1)) / 2) as usize;
    let found = lines.len() - 2;
    if found != expected {
        return Err(parse_err(
            2 + found.min(expected) + 1,
            format!("expected {expected} pair rows, found {found}"),
        ));
    }
    let mut rows = lines[2..].iter();
    let mut arcs: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut lineno = 2;
    for a in 1..=n {
        for b in a + 1..=n {
            lineno += 1;
            let line = rows.next().expect("row count was checked");
            let parts = fields(line, lineno)?;
            if parts.len() != 2 {
                return Err(parse_err(lineno, "expected `u v`"));
            }
            let u = parse_u32(parts[0], lineno)?;
            let v = parse_u32(parts[1], lineno)?;
            if !(u == a && v == b || u == b && v == a) {
                return Err(parse_err(lineno, format!("expected pair {{{a},{b}}}")));
            }
            arcs.insert((VertexId::new(u), VertexId::new(v)));
        }
    }
    Tournament::new(n, arcs)
}

/// Serializes a generation certificate for a structure on `n` vertices:
/// one row per entry in ascending `(u, v)` order, each generating arc
/// written as the 0-based rank of its subset.
pub fn cert_to_string(cert: &GenerationCertificate, n: u32) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cert 1");
    let _ = writeln!(out, "{n}");
    for ((u, v), arc) in cert.entries() {
        let rank = subset_rank(n, &arc.key());
        let _ = writeln!(out, "{u} {v} {rank}");
    }
    out
}

/// Parses a certificate against the structure its subset ranks refer to.
/// Completeness is not required here; `verify_membership` reports missing
/// or extra entries.
pub fn cert_from_str(s: &str, h: &HyperTournament) -> Result<GenerationCertificate> {
    let lines = split_lines(s)?;
    expect_header(&lines, "cert")?;
    if lines.len() < 2 {
        return Err(parse_err(2, "expected vertex count"));
    }
    let head = fields(lines[1], 2)?;
    if head.len() != 1 {
        return Err(parse_err(2, "expected a single vertex count"));
    }
    let n = parse_u32(head[0], 2)?;
    if n != h.n() {
        return Err(parse_err(
            2,
            format!("vertex count {n} does not match the structure ({})", h.n()),
        ));
    }
    let total = binomial(u64::from(h.n()), u64::from(h.k()));
    let mut entries: BTreeMap<(VertexId, VertexId), HyperArc> = BTreeMap::new();
    let mut prev: Option<(u32, u32)> = None;
    for (i, line) in lines[2..].iter().enumerate() {
        let lineno = i + 3;
        let parts = fields(line, lineno)?;
        if parts.len() != 3 {
            return Err(parse_err(lineno, "expected `u v subset-rank`"));
        }
        let u = parse_u32(parts[0], lineno)?;
        let v = parse_u32(parts[1], lineno)?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(lineno, "vertex id out of range"));
        }
        if u == v {
            return Err(parse_err(lineno, "pair endpoints must differ"));
        }
        if let Some(p) = prev {
            if p >= (u, v) {
                return Err(parse_err(lineno, "entries out of `(u, v)` order"));
            }
        }
        prev = Some((u, v));
        let rank = parse_u64(parts[2], lineno)?;
        if u128::from(rank) >= total {
            return Err(parse_err(
                lineno,
                format!("subset rank {rank} out of range (structure has {total} arcs)"),
            ));
        }
        let subset = subset_unrank(h.n(), h.k(), rank)
            .expect("rank was checked against the subset count");
        let arc = h.arc_on(&subset)?.clone();
        entries.insert(
            (VertexId::new(u), VertexId::new(v)),
            arc,
        );
    }
    Ok(GenerationCertificate::new(entries))
}
