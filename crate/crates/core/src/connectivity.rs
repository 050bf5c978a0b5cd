//! Paths, cycles, strong connectivity, and kings.
//!
//! A path here alternates distinct vertices and distinct hyperarcs,
//! `x_1 a_1 x_2 ... a_m x_{m+1}`, where each `a_i` places `x_i` before
//! `x_{i+1}`. A cycle is the same shape closed back to its first vertex and
//! needs at least two hops. Length counts hops, not vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypercore::{
    derive_seed, random_tournament, HyperArc, HyperDigraph, HyperTournament, VertexId,
};
use crate::search::{find_path_impl, HopTable};

/// Alternating vertex/arc sequence with per-hop precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperPath {
    vertices: Vec<VertexId>,
    arcs: Vec<HyperArc>,
}

fn check_distinct_vertices(vertices: &[VertexId]) -> std::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for v in vertices {
        if !seen.insert(*v) {
            return Err(format!("vertex {v} repeats"));
        }
    }
    Ok(())
}

fn check_distinct_uniform_arcs(arcs: &[HyperArc]) -> std::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for a in arcs {
        if a.k() != arcs[0].k() {
            return Err("mixed hyperarc arities".into());
        }
        if !seen.insert(a.seq().to_vec()) {
            return Err(format!("hyperarc {a} repeats"));
        }
    }
    Ok(())
}

impl HyperPath {
    /// Structural constructor: checks shape, distinctness, and precedence.
    pub fn new(vertices: Vec<VertexId>, arcs: Vec<HyperArc>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::BadTuple("a path has at least one vertex".into()));
        }
        if arcs.len() + 1 != vertices.len() {
            return Err(Error::BadTuple(format!(
                "{} vertices need {} hyperarcs, found {}",
                vertices.len(),
                vertices.len() - 1,
                arcs.len()
            )));
        }
        check_distinct_vertices(&vertices).map_err(Error::BadTuple)?;
        check_distinct_uniform_arcs(&arcs).map_err(Error::BadTuple)?;
        for (i, a) in arcs.iter().enumerate() {
            if !a.precedes(vertices[i], vertices[i + 1]) {
                return Err(Error::BadTuple(format!(
                    "hyperarc {a} does not place {} before {}",
                    vertices[i],
                    vertices[i + 1]
                )));
            }
        }
        Ok(HyperPath { vertices, arcs })
    }

    pub fn singleton(v: VertexId) -> Self {
        HyperPath {
            vertices: vec![v],
            arcs: Vec::new(),
        }
    }

    /// Number of hops.
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[HyperArc] {
        &self.arcs
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Full check against a host structure: the structural invariants plus
    /// vertex range and every hyperarc being an arc of `h` (same tuple).
    pub fn validate(&self, h: &HyperDigraph) -> Result<()> {
        Self::new(self.vertices.clone(), self.arcs.clone())?;
        for v in &self.vertices {
            if v.get() > h.n() {
                return Err(Error::BadTuple(format!(
                    "vertex {v} is out of range 1..={}",
                    h.n()
                )));
            }
        }
        for a in &self.arcs {
            match h.hyperarc_of(&a.key())? {
                Some(own) if own.seq() == a.seq() => {}
                _ => {
                    return Err(Error::BadTuple(format!("hyperarc {a} is not in the structure")));
                }
            }
        }
        Ok(())
    }
}

/// Closed alternating sequence: `m >= 2` distinct vertices and `m` distinct
/// hyperarcs, hop `i` placing vertex `i` before vertex `i+1` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperCycle {
    vertices: Vec<VertexId>,
    arcs: Vec<HyperArc>,
}

impl HyperCycle {
    pub fn new(vertices: Vec<VertexId>, arcs: Vec<HyperArc>) -> Result<Self> {
        let m = vertices.len();
        if m < 2 {
            return Err(Error::BadCycle("a cycle has at least two vertices".into()));
        }
        if arcs.len() != m {
            return Err(Error::BadCycle(format!(
                "{m} vertices need {m} hyperarcs, found {}",
                arcs.len()
            )));
        }
        check_distinct_vertices(&vertices).map_err(Error::BadCycle)?;
        check_distinct_uniform_arcs(&arcs).map_err(Error::BadCycle)?;
        for i in 0..m {
            let (u, v) = (vertices[i], vertices[(i + 1) % m]);
            if !arcs[i].precedes(u, v) {
                return Err(Error::BadCycle(format!(
                    "hyperarc {} does not place {u} before {v}",
                    arcs[i]
                )));
            }
        }
        Ok(HyperCycle { vertices, arcs })
    }

    /// Number of vertices (equal to the number of hops).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[HyperArc] {
        &self.arcs
    }

    pub fn is_hamiltonian(&self, h: &HyperDigraph) -> bool {
        self.vertices.len() == h.n() as usize
    }

    /// Full check against a host structure.
    pub fn validate(&self, h: &HyperDigraph) -> Result<()> {
        Self::new(self.vertices.clone(), self.arcs.clone())?;
        for v in &self.vertices {
            if v.get() > h.n() {
                return Err(Error::BadCycle(format!(
                    "vertex {v} is out of range 1..={}",
                    h.n()
                )));
            }
        }
        for a in &self.arcs {
            match h.hyperarc_of(&a.key()).map_err(|e| match e {
                Error::BadTuple(m) => Error::BadCycle(m),
                other => other,
            })? {
                Some(own) if own.seq() == a.seq() => {}
                _ => {
                    return Err(Error::BadCycle(format!("hyperarc {a} is not in the structure")));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn path_from_raw(t: &HopTable, vseq: Vec<usize>, aseq: Vec<u32>) -> HyperPath {
    let vertices = vseq.into_iter().map(VertexId::from_index).collect();
    let arcs = aseq
        .into_iter()
        .map(|aid| t.arcs[aid as usize].clone())
        .collect();
    HyperPath::new(vertices, arcs).expect("searches return valid paths")
}

pub(crate) fn cycle_from_raw(t: &HopTable, vseq: Vec<usize>, aseq: Vec<u32>) -> HyperCycle {
    let vertices = vseq.into_iter().map(VertexId::from_index).collect();
    let arcs = aseq
        .into_iter()
        .map(|aid| t.arcs[aid as usize].clone())
        .collect();
    HyperCycle::new(vertices, arcs).expect("searches return valid cycles")
}

/// First path from `u` to `v` in canonical order, using at most `max_len`
/// hops (`None` caps at `n - 1`, which no path can exceed anyway).
pub fn find_path(
    h: &HyperDigraph,
    u: VertexId,
    v: VertexId,
    max_len: Option<usize>,
) -> Result<Option<HyperPath>> {
    for w in [u, v] {
        if w.get() == 0 || w.get() > h.n() {
            return Err(Error::BadTuple(format!(
                "vertex {w} is out of range 1..={}",
                h.n()
            )));
        }
    }
    if u == v {
        return Err(Error::BadTuple("path endpoints must differ".into()));
    }
    let cap = max_len
        .unwrap_or(h.n() as usize - 1)
        .min(h.n() as usize - 1);
    let t = HopTable::new(h);
    Ok(find_path_impl(&t, u.index(), v.index(), cap).map(|(vs, arcs)| path_from_raw(&t, vs, arcs)))
}

/// Strong connectivity: a path exists for every ordered vertex pair.
/// Structures on at most one vertex are strong.
pub fn is_strong(h: &HyperDigraph) -> bool {
    let n = h.n() as usize;
    if n <= 1 {
        return true;
    }
    // The hop digraph over-approximates connectivity, so failing there is a
    // cheap definitive no.
    if !h.generated_digraph().is_strong() {
        return false;
    }
    let t = HopTable::new(h);
    let mut ok = vec![false; n * n];
    for u in 0..n {
        ok[u * n + u] = true;
    }
    for u in 0..n {
        for v in 0..n {
            if ok[u * n + v] {
                continue;
            }
            match find_path_impl(&t, u, v, n - 1) {
                None => return false,
                Some((vs, _)) => {
                    // Every contiguous piece of a valid path is itself a
                    // valid path, so mark all implied pairs.
                    for i in 0..vs.len() {
                        for j in i + 1..vs.len() {
                            ok[vs[i] * n + vs[j]] = true;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Vertices that reach every other vertex by a path of at most two hops,
/// sorted ascending.
pub fn two_kings(h: &HyperDigraph) -> Vec<VertexId> {
    let n = h.n() as usize;
    let t = HopTable::new(h);
    let mut kings = Vec::new();
    for u in 0..n {
        let mut reached = vec![false; n];
        reached[u] = true;
        for v in 0..n {
            if v != u && t.has_hop(u, v) {
                reached[v] = true;
            }
        }
        let directs: Vec<usize> = (0..n).filter(|&w| w != u && reached[w]).collect();
        for v in 0..n {
            if reached[v] {
                continue;
            }
            'mid: for &w in &directs {
                let first = t.candidates(u, w);
                let second = t.candidates(w, v);
                if second.is_empty() {
                    continue;
                }
                // Two distinct arcs are needed; only impossible when both
                // hops are forced through the same single arc.
                if first.len() == 1 && second.len() == 1 && first[0] == second[0] {
                    continue;
                }
                reached[v] = true;
                break 'mid;
            }
        }
        if reached.iter().all(|&r| r) {
            kings.push(VertexId::from_index(u));
        }
    }
    kings
}

/// Rejection-samples seeded random instances until one is strong. Attempt
/// `i` uses `derive_seed(seed, i)`; returns the instance and the number of
/// attempts consumed. Fails with `BudgetExceeded` when `max_attempts` random
/// instances were all non-strong.
pub fn random_strong_tournament(
    k: u32,
    n: u32,
    seed: u64,
    max_attempts: u32,
) -> Result<(HyperTournament, u32)> {
    for i in 0..max_attempts {
        let h = random_tournament(k, n, derive_seed(seed, i as u64))?;
        if is_strong(&h) {
            return Ok((h, i + 1));
        }
    }
    Err(Error::BudgetExceeded)
}
