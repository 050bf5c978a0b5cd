//! Complete searches for spanning paths and spanning cycles.
//!
//! Existence background the error contract leans on: every hypertournament
//! with arity `k >= 3` on `n >= k + 1` vertices has a spanning path, and
//! every strong one on `n >= k + 2` vertices has a spanning cycle; arity 2
//! always has a spanning path, and strong arity 2 on `n >= 3` always has a
//! spanning cycle. Inside those ranges a failed search is reported as an
//! internal error, never as an honest absence.

use crate::connectivity::{cycle_from_raw, is_strong, path_from_raw, HyperCycle, HyperPath};
use crate::error::{Error, Result};
use crate::hypercore::HyperTournament;
use crate::search::{ham_cycle_impl, ham_path_impl, HopTable};

/// First spanning path in canonical order. `RangeUnsupported` only outside
/// the guaranteed ranges (in practice: `n == k` with `k >= 3`, where the
/// single arc cannot chain all vertices).
pub fn hamiltonian_path(h: &HyperTournament) -> Result<HyperPath> {
    let t = HopTable::new(h);
    if let Some((vs, arcs)) = ham_path_impl(&t) {
        return Ok(path_from_raw(&t, vs, arcs));
    }
    let (k, n) = (h.k(), h.n());
    if k == 2 || (k >= 3 && n >= k + 1) {
        Err(Error::InternalGuaranteeViolated(format!(
            "no spanning path found on k={k}, n={n}, where one must exist"
        )))
    } else {
        Err(Error::RangeUnsupported(format!(
            "no spanning path; k={k}, n={n} carries no existence guarantee"
        )))
    }
}

/// First spanning cycle in canonical order (rotation pinned at vertex 1), or
/// `None` when the instance has no spanning cycle. A miss on a strong
/// instance inside the guaranteed range is an internal error.
pub fn hamiltonian_cycle(h: &HyperTournament) -> Result<Option<HyperCycle>> {
    let t = HopTable::new(h);
    if let Some((vs, arcs)) = ham_cycle_impl(&t) {
        return Ok(Some(cycle_from_raw(&t, vs, arcs)));
    }
    let (k, n) = (h.k(), h.n());
    let guaranteed = (k >= 3 && n >= k + 2) || (k == 2 && n >= 3);
    if guaranteed && is_strong(h) {
        return Err(Error::InternalGuaranteeViolated(format!(
            "no spanning cycle found on a strong instance with k={k}, n={n}"
        )));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_strong;
    use crate::hypercore::{ascending_tournament, random_tournament, HyperTournament, VertexId};
    use crate::testutil::{h4, ids};

    #[test]
    fn ascending_instance_has_the_ascending_path() {
        let h = ascending_tournament(3, 4).unwrap();
        let p = hamiltonian_path(&h).unwrap();
        assert_eq!(p.vertices(), &ids(&[1, 2, 3, 4])[..]);
        let keys: Vec<Vec<VertexId>> = p.arcs().iter().map(|a| a.key()).collect();
        assert_eq!(keys, vec![ids(&[1, 2, 3]), ids(&[2, 3, 4]), ids(&[1, 3, 4])]);
        assert!(p.validate(&h).is_ok());
    }

    #[test]
    fn fixture_spanning_cycle_is_canonical() {
        let h = h4();
        let c = hamiltonian_cycle(&h).unwrap().unwrap();
        assert_eq!(c.vertices(), &ids(&[1, 2, 3, 4])[..]);
        let seqs: Vec<Vec<VertexId>> = c.arcs().iter().map(|a| a.seq().to_vec()).collect();
        assert_eq!(
            seqs,
            vec![ids(&[1, 2, 3]), ids(&[2, 3, 4]), ids(&[3, 4, 1]), ids(&[2, 4, 1])]
        );
        assert!(c.validate(&h).is_ok());
    }

    #[test]
    fn single_arc_instance_has_no_spanning_path() {
        let h = HyperTournament::build(3, 3, &[vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            hamiltonian_path(&h),
            Err(Error::RangeUnsupported(_))
        ));
        assert_eq!(hamiltonian_cycle(&h).unwrap(), None);
    }

    #[test]
    fn ascending_instance_has_no_spanning_cycle() {
        let h = ascending_tournament(3, 6).unwrap();
        assert!(!is_strong(&h));
        assert_eq!(hamiltonian_cycle(&h).unwrap(), None);
    }

    #[test]
    fn guaranteed_range_always_yields_paths() {
        for seed in 0..20 {
            let h = random_tournament(3, 5, seed).unwrap();
            let p = hamiltonian_path(&h).unwrap();
            assert_eq!(p.vertices().len(), 5);
            assert!(p.validate(&h).is_ok());
        }
    }

    #[test]
    fn strong_instances_in_range_always_yield_cycles() {
        let mut found = 0;
        for seed in 0..40 {
            let h = random_tournament(3, 5, seed).unwrap();
            if !is_strong(&h) {
                continue;
            }
            found += 1;
            let c = hamiltonian_cycle(&h).unwrap().expect("guaranteed range");
            assert_eq!(c.len(), 5);
            assert!(c.validate(&h).is_ok());
        }
        assert!(found > 0);
    }

    #[test]
    fn pair_tournament_cycle() {
        // Strong arity-2 instance: directed triangle.
        let h = HyperTournament::build(2, 3, &[vec![1, 2], vec![3, 1], vec![2, 3]]).unwrap();
        let c = hamiltonian_cycle(&h).unwrap().unwrap();
        assert_eq!(c.len(), 3);
    }
}
