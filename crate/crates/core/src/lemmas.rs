//! Counting checks on hypercycles and the matching-side inequality.
//!
//! `pair_occurrence_profile` tabulates, for every pair of cycle vertices,
//! how many arcs of the cycle contain both. `check_cycle_bounds` asserts
//! the occurrence bounds that make the covering matching of the
//! degeneration feasible in the small cases (arity 3 at any length, and
//! arity 4 at length 7). `check_matching_inequality` evaluates the exact
//! integer inequality that settles feasibility for all larger cases.

use std::collections::BTreeMap;

use crate::connectivity::HyperCycle;
use crate::error::{Error, Result};
use crate::hypercore::{binomial, VertexId};

/// Occurrence counts of vertex pairs along a cycle.
#[derive(Debug, Clone)]
pub struct PairOccurrenceProfile {
    /// `(lo, hi)` -> number of cycle arcs containing both.
    counts: BTreeMap<(VertexId, VertexId), usize>,
    /// Position of each vertex along the cycle.
    positions: BTreeMap<VertexId, usize>,
    /// Cycle length (number of vertices = number of arcs).
    n: usize,
    /// Uniform arity of the cycle's arcs.
    k: u32,
}

fn norm(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl PairOccurrenceProfile {
    /// Number of cycle arcs containing both `u` and `v` (0 when either is
    /// not a cycle vertex).
    pub fn count(&self, u: VertexId, v: VertexId) -> usize {
        self.counts.get(&norm(u, v)).copied().unwrap_or(0)
    }

    /// All pairs of cycle vertices with their counts, in key order.
    pub fn counts(&self) -> impl Iterator<Item = ((VertexId, VertexId), usize)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }

    /// Hops along the cycle between `u` and `v`, the shorter way around.
    pub fn cyclic_distance(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let (i, j) = (*self.positions.get(&u)?, *self.positions.get(&v)?);
        let d = (j + self.n - i) % self.n;
        Some(d.min(self.n - d))
    }

    /// Whether `u` and `v` sit next to each other on the cycle.
    pub fn is_consecutive(&self, u: VertexId, v: VertexId) -> bool {
        self.cyclic_distance(u, v) == Some(1)
    }

    /// Pairs at cyclic distance at least 2, with counts, in key order.
    pub fn nonconsecutive(&self) -> impl Iterator<Item = ((VertexId, VertexId), usize)> + '_ {
        self.counts
            .iter()
            .filter(|((u, v), _)| self.cyclic_distance(*u, *v).unwrap_or(0) >= 2)
            .map(|(&p, &c)| (p, c))
    }

    /// Sum of all counts; equals `n * C(k,2)` because every arc contributes
    /// each of its vertex pairs once (off-cycle arc vertices contribute
    /// nothing to pair keys but arcs of a spanning cycle have none).
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

/// Tabulates pair occurrences along `c`. Pairs are unordered pairs of cycle
/// vertices; every arc of the cycle contributes one occurrence for each pair
/// of cycle vertices inside its vertex set. Arity 2 is accepted (each arc
/// then holds exactly its own hop pair).
pub fn pair_occurrence_profile(c: &HyperCycle) -> PairOccurrenceProfile {
    let vs = c.vertices();
    let n = vs.len();
    let positions: BTreeMap<VertexId, usize> =
        vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            counts.insert(norm(vs[i], vs[j]), 0);
        }
    }
    for a in c.arcs() {
        let members: Vec<VertexId> = a
            .seq()
            .iter()
            .copied()
            .filter(|v| positions.contains_key(v))
            .collect();
        for x in 0..members.len() {
            for y in x + 1..members.len() {
                *counts
                    .entry(norm(members[x], members[y]))
                    .or_insert(0) += 1;
            }
        }
    }
    let k = c.arcs().first().expect("cycles are nonempty").k() as u32;
    PairOccurrenceProfile {
        counts,
        positions,
        n,
        k,
    }
}

/// One asserted bound: `observed <= limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub ok: bool,
    pub observed: u64,
    pub limit: u64,
}

impl BoundCheck {
    fn new(name: &'static str, observed: u64, limit: u64) -> Self {
        BoundCheck {
            name,
            ok: observed <= limit,
            observed,
            limit,
        }
    }
}

/// Verdict of `check_cycle_bounds`: all bounds applicable to the cycle's
/// arity and length, and whether every one held.
#[derive(Debug, Clone)]
pub struct CycleBoundsVerdict {
    pub k: u32,
    pub n: u32,
    pub pass: bool,
    pub checks: Vec<BoundCheck>,
}

/// Verifies the pair-occurrence bounds on a cycle.
///
/// Arity 3, any length `n`: every nonconsecutive pair lies in at most 4
/// arcs; a pair hitting 4 sits at cyclic distance at least 3; at `n = 8` at
/// most two pairs hit 4; at `n = 7` at most one pair hits 4, at most two
/// pairs reach 3, and when one pair hits 4 while another reaches exactly 3,
/// every remaining nonconsecutive pair lies in at most one arc.
///
/// Arity 4, length 7: any two distinct nonconsecutive pairs lie together in
/// at most 4 common arcs.
///
/// Other `(arity, length)` combinations are unsupported.
pub fn check_cycle_bounds(c: &HyperCycle) -> Result<CycleBoundsVerdict> {
    let profile = pair_occurrence_profile(c);
    let (k, n) = (profile.k(), profile.n() as u32);
    let mut checks = Vec::new();
    match (k, n) {
        (3, _) => {
            let nc: Vec<((VertexId, VertexId), usize)> = profile.nonconsecutive().collect();
            let max = nc.iter().map(|&(_, c)| c).max().unwrap_or(0);
            checks.push(BoundCheck::new("nonconsecutive-pair-occurrences", max as u64, 4));
            let near_four = nc
                .iter()
                .filter(|((u, v), c)| {
                    *c == 4 && profile.cyclic_distance(*u, *v).unwrap_or(0) < 3
                })
                .count();
            checks.push(BoundCheck::new(
                "four-occurrence-pairs-at-distance-two",
                near_four as u64,
                0,
            ));
            let fours = nc.iter().filter(|&&(_, c)| c == 4).count();
            let threes_up = nc.iter().filter(|&&(_, c)| c >= 3).count();
            if n == 8 {
                checks.push(BoundCheck::new("four-occurrence-pairs", fours as u64, 2));
            }
            if n == 7 {
                checks.push(BoundCheck::new("four-occurrence-pairs", fours as u64, 1));
                checks.push(BoundCheck::new(
                    "three-plus-occurrence-pairs",
                    threes_up as u64,
                    2,
                ));
                let has_exact_three = nc.iter().any(|&(_, c)| c == 3);
                let residue = if fours == 1 && has_exact_three {
                    nc.iter().filter(|&&(_, c)| c != 4 && c != 3 && c > 1).count()
                } else {
                    0
                };
                checks.push(BoundCheck::new(
                    "residual-pairs-beyond-one-occurrence",
                    residue as u64,
                    0,
                ));
            }
        }
        (4, 7) => {
            let nc: Vec<(VertexId, VertexId)> =
                profile.nonconsecutive().map(|(p, _)| p).collect();
            let mut max_common = 0usize;
            for i in 0..nc.len() {
                for j in i + 1..nc.len() {
                    let (a, b) = (nc[i], nc[j]);
                    let common = c
                        .arcs()
                        .iter()
                        .filter(|arc| {
                            arc.contains(a.0)
                                && arc.contains(a.1)
                                && arc.contains(b.0)
                                && arc.contains(b.1)
                        })
                        .count();
                    max_common = max_common.max(common);
                }
            }
            checks.push(BoundCheck::new(
                "pair-pair-common-arcs",
                max_common as u64,
                4,
            ));
        }
        _ => {
            return Err(Error::RangeUnsupported(format!(
                "occurrence bounds cover arity 3 (any length) and arity 4 at length 7; \
                 got arity {k}, length {n}"
            )));
        }
    }
    let pass = checks.iter().all(|c| c.ok);
    Ok(CycleBoundsVerdict { k, n, pass, checks })
}

/// Result of the matching-side inequality evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InequalityCheck {
    pub holds: bool,
    /// `C(k,2)`: the largest possible arc degree in the covering instance.
    pub lhs: i128,
    /// `C(n-2, k-2) - 4` for arity 3, `C(n-2, k-2) - n` otherwise: the
    /// smallest guaranteed pair degree.
    pub rhs: i128,
}

/// Evaluates, in exact integer arithmetic, whether the guaranteed minimum
/// pair degree dominates the maximum arc degree of the covering instance:
/// `C(k,2) <= C(n-2,k-2) - 4` when `k = 3`, and `C(k,2) <= C(n-2,k-2) - n`
/// when `k >= 4`. Requires `k >= 3` and `n >= k`.
pub fn check_matching_inequality(k: u32, n: u32) -> Result<InequalityCheck> {
    if k < 3 || n < k {
        return Err(Error::RangeUnsupported(format!(
            "inequality is defined for arity >= 3 and n >= arity; got ({k}, {n})"
        )));
    }
    let lhs = binomial(u64::from(k), 2) as i128;
    let base = binomial(u64::from(n) - 2, u64::from(k) - 2) as i128;
    let rhs = if k == 3 {
        base - 4
    } else {
        base - i128::from(n)
    };
    Ok(InequalityCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::HyperArc;
    use crate::testutil::ids;

    fn vid(v: u32) -> VertexId {
        VertexId::new(v)
    }

    /// Length-n arity-3 cycle with rolling arcs (v_i, v_{i+1}, v_{i+2}).
    fn rolling3(n: u32) -> HyperCycle {
        let vs: Vec<u32> = (1..=n).collect();
        let arcs: Vec<HyperArc> = (0..n as usize)
            .map(|i| {
                HyperArc::from_ids(&[
                    vs[i],
                    vs[(i + 1) % n as usize],
                    vs[(i + 2) % n as usize],
                ])
                .unwrap()
            })
            .collect();
        HyperCycle::new(ids(&vs), arcs).unwrap()
    }

    #[test]
    fn rolling_profile_counts() {
        let c = rolling3(7);
        let p = pair_occurrence_profile(&c);
        assert_eq!(p.count(vid(1), vid(3)), 1);
        assert_eq!(p.count(vid(1), vid(4)), 0);
        assert_eq!(p.count(vid(1), vid(2)), 2);
        assert!(p.is_consecutive(vid(1), vid(2)));
        assert!(p.is_consecutive(vid(1), vid(7)));
        assert!(!p.is_consecutive(vid(1), vid(3)));
        assert_eq!(p.cyclic_distance(vid(1), vid(5)), Some(3));
        assert_eq!(p.total(), 7 * 3);
    }

    #[test]
    fn rolling_cycles_pass_bounds() {
        for n in [4, 5, 6, 7, 8, 9, 12] {
            let v = check_cycle_bounds(&rolling3(n)).unwrap();
            assert!(v.pass, "length {n} verdict failed: {:?}", v.checks);
            assert_eq!(v.k, 3);
            assert_eq!(v.n, n);
        }
    }

    /// A length-8 cycle realizing a pair contained in four arcs.
    fn concentrated8() -> HyperCycle {
        let raw: [[u32; 3]; 8] = [
            [1, 2, 5],
            [2, 3, 6],
            [3, 4, 7],
            [4, 5, 1],
            [5, 6, 1],
            [6, 7, 2],
            [7, 8, 3],
            [8, 1, 5],
        ];
        let arcs = raw
            .iter()
            .map(|t| HyperArc::from_ids(t).unwrap())
            .collect();
        HyperCycle::new(ids(&[1, 2, 3, 4, 5, 6, 7, 8]), arcs).unwrap()
    }

    #[test]
    fn concentrated_pair_hits_four_and_passes() {
        let c = concentrated8();
        let p = pair_occurrence_profile(&c);
        assert_eq!(p.count(vid(1), vid(5)), 4);
        assert_eq!(p.cyclic_distance(vid(1), vid(5)), Some(4));
        assert_eq!(p.count(vid(2), vid(6)), 2);
        assert_eq!(p.total(), 8 * 3);
        let v = check_cycle_bounds(&c).unwrap();
        assert!(v.pass, "{:?}", v.checks);
        let fours = v
            .checks
            .iter()
            .find(|b| b.name == "four-occurrence-pairs")
            .unwrap();
        assert_eq!(fours.observed, 1);
        assert_eq!(fours.limit, 2);
    }

    #[test]
    fn arity_four_length_seven_bound() {
        let vs: Vec<u32> = (1..=7).collect();
        let arcs: Vec<HyperArc> = (0..7)
            .map(|i| {
                HyperArc::from_ids(&[
                    vs[i],
                    vs[(i + 1) % 7],
                    vs[(i + 2) % 7],
                    vs[(i + 3) % 7],
                ])
                .unwrap()
            })
            .collect();
        let c = HyperCycle::new(ids(&[1, 2, 3, 4, 5, 6, 7]), arcs).unwrap();
        let v = check_cycle_bounds(&c).unwrap();
        assert!(v.pass, "{:?}", v.checks);
        assert_eq!(v.checks.len(), 1);
        assert_eq!(v.checks[0].name, "pair-pair-common-arcs");
    }

    #[test]
    fn unsupported_shapes_are_rejected() {
        // Arity 2 triangle.
        let arcs = vec![
            HyperArc::from_ids(&[1, 2]).unwrap(),
            HyperArc::from_ids(&[2, 3]).unwrap(),
            HyperArc::from_ids(&[3, 1]).unwrap(),
        ];
        let c = HyperCycle::new(ids(&[1, 2, 3]), arcs).unwrap();
        let p = pair_occurrence_profile(&c);
        assert_eq!(p.total(), 3);
        assert!(matches!(
            check_cycle_bounds(&c),
            Err(Error::RangeUnsupported(_))
        ));
    }

    #[test]
    fn inequality_oracles() {
        let c = check_matching_inequality(3, 9).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 3, 3));
        let c = check_matching_inequality(4, 8).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (true, 6, 7));
        let c = check_matching_inequality(3, 5).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (false, 3, -1));
        let c = check_matching_inequality(3, 6).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (false, 3, 0));
        let c = check_matching_inequality(4, 7).unwrap();
        assert_eq!((c.holds, c.lhs, c.rhs), (false, 6, 3));
        assert!(check_matching_inequality(2, 5).is_err());
        assert!(check_matching_inequality(3, 2).is_err());
    }

    #[test]
    fn inequality_grid_boundaries() {
        for n in 9..=40 {
            assert!(check_matching_inequality(3, n).unwrap().holds, "(3,{n})");
        }
        assert!(!check_matching_inequality(3, 8).unwrap().holds);
        for n in 8..=40 {
            assert!(check_matching_inequality(4, n).unwrap().holds, "(4,{n})");
        }
        for k in 5..=15 {
            for n in k + 3..=k + 20 {
                assert!(check_matching_inequality(k, n).unwrap().holds, "({k},{n})");
            }
            assert!(!check_matching_inequality(k, k + 2).unwrap().holds);
        }
    }
}
