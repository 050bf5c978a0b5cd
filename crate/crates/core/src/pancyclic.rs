//! Fixed-length cycle searches through anchors, and pancyclicity checks.

use crate::connectivity::{cycle_from_raw, HyperCycle};
use crate::error::{Error, Result};
use crate::hypercore::{subset_rank, HyperArc, HyperTournament, VertexId};
use crate::search::{anchored_cycle_impl, AnchorSpec, HopTable};

/// What a cycle must pass through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleAnchor {
    Vertex(VertexId),
    Arc(HyperArc),
}

fn anchor_spec(h: &HyperTournament, anchor: &CycleAnchor) -> Result<AnchorSpec> {
    match anchor {
        CycleAnchor::Vertex(v) => {
            if v.get() == 0 || v.get() > h.n() {
                return Err(Error::BadTuple(format!(
                    "vertex {v} is out of range 1..={}",
                    h.n()
                )));
            }
            Ok(AnchorSpec::Vertex(v.index()))
        }
        CycleAnchor::Arc(a) => {
            match h.hyperarc_of(&a.key())? {
                Some(own) if own.seq() == a.seq() => {}
                _ => {
                    return Err(Error::BadTuple(format!(
                        "hyperarc {a} is not an arc of the structure"
                    )));
                }
            }
            // Arcs are stored in canonical subset order, so the subset rank
            // is the arc's position in the search table.
            Ok(AnchorSpec::ArcId(subset_rank(h.n(), &a.key()) as u32))
        }
    }
}

/// First cycle of exactly `len` vertices through the anchor, in canonical
/// order, or `None` when no such cycle exists. `len` must lie in `3..=n`.
pub fn cycle_through(
    h: &HyperTournament,
    anchor: &CycleAnchor,
    len: usize,
) -> Result<Option<HyperCycle>> {
    if len < 3 || len > h.n() as usize {
        return Err(Error::BadTuple(format!(
            "cycle length {len} is outside 3..={}",
            h.n()
        )));
    }
    let spec = anchor_spec(h, anchor)?;
    let t = HopTable::new(h);
    Ok(anchored_cycle_impl(&t, &spec, len).map(|(vs, arcs)| cycle_from_raw(&t, vs, arcs)))
}

/// Whether every vertex lies on a cycle of every length `3..=n`. Vacuously
/// true below three vertices.
pub fn is_vertex_pancyclic(h: &HyperTournament) -> bool {
    let n = h.n() as usize;
    let t = HopTable::new(h);
    for len in 3..=n {
        let mut witnessed = vec![false; n];
        for v in 0..n {
            if witnessed[v] {
                continue;
            }
            match anchored_cycle_impl(&t, &AnchorSpec::Vertex(v), len) {
                None => return false,
                Some((vs, _)) => {
                    // The found cycle witnesses this length for everything on it.
                    for w in vs {
                        witnessed[w] = true;
                    }
                }
            }
        }
    }
    true
}

/// The hyperarcs of `c` (in cycle order) that lie on cycles of every length
/// `3..=n`. `c` must be a valid cycle of `h`.
pub fn pancyclic_hyperarcs_on_cycle(
    h: &HyperTournament,
    c: &HyperCycle,
) -> Result<Vec<HyperArc>> {
    c.validate(h)?;
    let n = h.n() as usize;
    let t = HopTable::new(h);
    let ids: Vec<u32> = c
        .arcs()
        .iter()
        .map(|a| subset_rank(h.n(), &a.key()) as u32)
        .collect();
    let mut alive: Vec<bool> = vec![true; ids.len()];
    for len in 3..=n {
        let mut witnessed = vec![false; ids.len()];
        for (i, &aid) in ids.iter().enumerate() {
            if !alive[i] || witnessed[i] {
                continue;
            }
            match anchored_cycle_impl(&t, &AnchorSpec::ArcId(aid), len) {
                None => alive[i] = false,
                Some((_, arcs)) => {
                    // Mark every cycle arc the witness happens to use.
                    for &used in &arcs {
                        for (j, &bid) in ids.iter().enumerate() {
                            if bid == used {
                                witnessed[j] = true;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(c.arcs()
        .iter()
        .zip(&alive)
        .filter(|&(_, &a)| a)
        .map(|(arc, _)| arc.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::hamiltonian_cycle;
    use crate::hypercore::HyperArc;
    use crate::testutil::{h4, ids};

    #[test]
    fn fixture_is_vertex_pancyclic() {
        let h = h4();
        assert!(is_vertex_pancyclic(&h));
        for v in 1..=4 {
            for len in 3..=4 {
                let c = cycle_through(&h, &CycleAnchor::Vertex(VertexId::new(v)), len)
                    .unwrap()
                    .expect("fixture is vertex-pancyclic");
                assert_eq!(c.len(), len);
                assert!(c.vertices().contains(&VertexId::new(v)));
                assert!(c.validate(&h).is_ok());
            }
        }
    }

    #[test]
    fn arc_anchored_cycles() {
        let h = h4();
        let a = HyperArc::from_ids(&[2, 4, 1]).unwrap();
        let c = cycle_through(&h, &CycleAnchor::Arc(a.clone()), 3)
            .unwrap()
            .expect("arc lies on a 3-cycle");
        assert!(c.arcs().iter().any(|b| b.seq() == a.seq()));
        assert!(c.validate(&h).is_ok());
    }

    #[test]
    fn bad_anchors_are_rejected() {
        let h = h4();
        assert!(matches!(
            cycle_through(&h, &CycleAnchor::Vertex(VertexId::new(9)), 3),
            Err(Error::BadTuple(_))
        ));
        let absent = HyperArc::from_ids(&[1, 3, 2]).unwrap();
        assert!(matches!(
            cycle_through(&h, &CycleAnchor::Arc(absent), 3),
            Err(Error::BadTuple(_))
        ));
        assert!(matches!(
            cycle_through(&h, &CycleAnchor::Vertex(VertexId::new(1)), 2),
            Err(Error::BadTuple(_))
        ));
        assert!(matches!(
            cycle_through(&h, &CycleAnchor::Vertex(VertexId::new(1)), 5),
            Err(Error::BadTuple(_))
        ));
    }

    #[test]
    fn fixture_spanning_cycle_arcs_are_all_pancyclic() {
        let h = h4();
        let c = hamiltonian_cycle(&h).unwrap().unwrap();
        let pan = pancyclic_hyperarcs_on_cycle(&h, &c).unwrap();
        // Verified by hand: every arc of the canonical spanning cycle lies on
        // a 3-cycle and on the spanning cycle itself.
        assert_eq!(pan.len(), 4);
        assert!(pan.len() >= 3);
    }

    #[test]
    fn ascending_is_not_pancyclic() {
        let h = crate::hypercore::ascending_tournament(3, 5).unwrap();
        assert!(!is_vertex_pancyclic(&h));
    }

    #[test]
    fn pancyclic_rejects_foreign_cycles() {
        let h = h4();
        let c = HyperCycle::new(
            ids(&[1, 2, 3, 4]),
            vec![
                HyperArc::from_ids(&[1, 2, 3]).unwrap(),
                HyperArc::from_ids(&[2, 3, 4]).unwrap(),
                HyperArc::from_ids(&[3, 4, 1]).unwrap(),
                HyperArc::from_ids(&[4, 2, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert!(matches!(
            pancyclic_hyperarcs_on_cycle(&h, &c),
            Err(Error::BadCycle(_))
        ));
    }
}
