//! Exhaustive path-cover and independence computations, and the chain
//! report tying them together.
//!
//! Coverage convention: a path covers its own vertices plus every vertex of
//! every hyperarc it travels through, while disjointness between the paths
//! of a cover is required only on the paths' own vertices. Hyperarcs may be
//! shared across different paths of a cover (never within one path). Under
//! this convention the minimum cover of a structure never exceeds the
//! minimum (vertex-disjoint, strict) path cover of its generated digraph:
//! a digraph cover lifts path by path, and whatever a lift loses to arc
//! collisions is still covered by those arcs' vertex sets. Together with the
//! classical bound of covers by independence, and with independence in the
//! structure being weaker than in the digraph, this gives the chain
//! `pc(H) <= pc(D) <= alpha(D) <= alpha(H)` checked by the report.
//!
//! Everything here is exponential-time and guarded by an explicit vertex
//! bound; these are reference procedures meant for desk-scale instances.

use std::collections::{BTreeSet, HashMap};

use crate::connectivity::HyperPath;
use crate::error::{Error, Result};
use crate::hypercore::{Digraph, HyperArc, HyperDigraph, VertexId};
use crate::search::HopTable;

/// Default cap on `n` for the exhaustive procedures.
pub const DEFAULT_EXHAUSTIVE_BOUND: u32 = 16;

/// Hard cap (bitmask width) no explicit bound can exceed.
const HARD_BOUND: u32 = 24;

fn check_bound(n: u32, bound: Option<u32>) -> Result<()> {
    let cap = bound.unwrap_or(DEFAULT_EXHAUSTIVE_BOUND).min(HARD_BOUND);
    if n > cap {
        return Err(Error::BudgetExceeded);
    }
    Ok(())
}

/// A set of paths whose joint coverage is the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<HyperPath>,
}

impl PathCover {
    pub fn new(paths: Vec<HyperPath>) -> Self {
        PathCover { paths }
    }

    pub fn paths(&self) -> &[HyperPath] {
        &self.paths
    }

    pub fn size(&self) -> usize {
        self.paths.len()
    }

    /// Everything the cover touches: path vertices plus the vertices of
    /// every hyperarc used.
    pub fn covered_vertices(&self) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for p in &self.paths {
            out.extend(p.vertices().iter().copied());
            for a in p.arcs() {
                out.extend(a.seq().iter().copied());
            }
        }
        out
    }

    /// Checks the cover against `h`: every path valid in `h`, path vertex
    /// sets pairwise disjoint, and joint coverage equal to the vertex set.
    pub fn validate(&self, h: &HyperDigraph) -> Result<()> {
        let mut own = BTreeSet::new();
        for p in &self.paths {
            p.validate(h)?;
            for v in p.vertices() {
                if !own.insert(*v) {
                    return Err(Error::BadTuple(format!(
                        "vertex {v} lies on two paths of the cover"
                    )));
                }
            }
        }
        let covered = self.covered_vertices();
        for v in h.vertices() {
            if !covered.contains(&v) {
                return Err(Error::BadTuple(format!("vertex {v} is uncovered")));
            }
        }
        Ok(())
    }
}

/// Largest vertex set spanning no hyperarc, with a deterministic witness
/// (first maximum in ascending bitmask order).
pub fn independence_number(
    h: &HyperDigraph,
    bound: Option<u32>,
) -> Result<(usize, Vec<VertexId>)> {
    check_bound(h.n(), bound)?;
    let n = h.n() as usize;
    let arc_masks: Vec<u32> = h
        .arcs()
        .map(|a| a.seq().iter().fold(0u32, |m, v| m | 1 << v.index()))
        .collect();
    Ok(best_independent(n, &arc_masks))
}

/// Largest vertex set inducing no arc of the digraph.
pub fn digraph_independence_number(
    d: &Digraph,
    bound: Option<u32>,
) -> Result<(usize, Vec<VertexId>)> {
    check_bound(d.n(), bound)?;
    let n = d.n() as usize;
    let arc_masks: Vec<u32> = d
        .arcs()
        .map(|(u, v)| (1u32 << u.index()) | (1 << v.index()))
        .collect();
    Ok(best_independent(n, &arc_masks))
}

fn best_independent(n: usize, arc_masks: &[u32]) -> (usize, Vec<VertexId>) {
    let mut best_mask = 0u32;
    let mut best = 0u32;
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() <= best {
            continue;
        }
        if arc_masks.iter().all(|&am| am & mask != am) {
            best = mask.count_ones();
            best_mask = mask;
        }
    }
    let witness = (0..n)
        .filter(|&i| best_mask & (1 << i) != 0)
        .map(VertexId::from_index)
        .collect();
    (best as usize, witness)
}

/// Backtracking context for the exhaustive structure cover. Path systems are
/// explored with path starts strictly ascending (a canonical representative
/// of every system), vertices and arcs in canonical order, extending before
/// closing. Failed between-path states are memoized ­-- sound because a
/// failure with `p` paths left is a failure for any smaller budget too.
struct CoverCtx<'a> {
    t: &'a HopTable,
    arc_vmask: Vec<u32>,
    full: u32,
    /// (x_used, covered, min_start) -> largest paths_left that still failed.
    failed: HashMap<u64, usize>,
    acc: Vec<(Vec<usize>, Vec<u32>)>,
}

impl<'a> CoverCtx<'a> {
    fn new(t: &'a HopTable, n: usize) -> Self {
        let arc_vmask = t
            .arcs
            .iter()
            .map(|a| a.seq().iter().fold(0u32, |m, v| m | 1 << v.index()))
            .collect();
        CoverCtx {
            t,
            arc_vmask,
            full: (1u32 << n) - 1,
            failed: HashMap::new(),
            acc: Vec::new(),
        }
    }

    /// Vertices that are uncovered and untouchable by any still-usable arc;
    /// each will need its own singleton path. `tail` is the open path's end,
    /// which may still source hops.
    fn isolated(&self, x_used: u32, covered: u32, tail: Option<usize>) -> u32 {
        let mut usable_union = 0u32;
        'arcs: for (aid, a) in self.t.arcs.iter().enumerate() {
            let seq = a.seq();
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    let (u, w) = (seq[i].index(), seq[j].index());
                    let u_ok = x_used & (1 << u) == 0 || tail == Some(u);
                    let w_ok = x_used & (1 << w) == 0;
                    if u_ok && w_ok {
                        usable_union |= self.arc_vmask[aid];
                        continue 'arcs;
                    }
                }
            }
        }
        (self.full & !covered) & !usable_union
    }

    fn open(&mut self, min_start: usize, x_used: u32, covered: u32, paths_left: usize) -> bool {
        if covered == self.full {
            return true;
        }
        if paths_left == 0 {
            return false;
        }
        let key = x_used as u64 | (covered as u64) << 24 | (min_start as u64) << 48;
        if let Some(&p) = self.failed.get(&key) {
            if p >= paths_left {
                return false;
            }
        }
        let isolated = self.isolated(x_used, covered, None);
        if isolated.count_ones() as usize > paths_left {
            self.failed.insert(key, paths_left);
            return false;
        }
        for s in min_start..self.t.n {
            if x_used & (1 << s) != 0 {
                continue;
            }
            self.acc.push((vec![s], Vec::new()));
            if self.extend(s + 1, x_used | (1 << s), covered | (1 << s), paths_left - 1) {
                return true;
            }
            self.acc.pop();
        }
        self.failed.insert(key, paths_left);
        false
    }

    fn extend(
        &mut self,
        next_min_start: usize,
        x_used: u32,
        covered: u32,
        paths_left: usize,
    ) -> bool {
        let cur = *self
            .acc
            .last()
            .expect("a path is open")
            .0
            .last()
            .expect("paths are nonempty");
        let isolated = self.isolated(x_used, covered, Some(cur));
        if isolated.count_ones() as usize > paths_left {
            return false;
        }
        for w in 0..self.t.n {
            if x_used & (1 << w) != 0 {
                continue;
            }
            let cands: Vec<u32> = self.t.candidates(cur, w).to_vec();
            for aid in cands {
                if self.acc.last().expect("a path is open").1.contains(&aid) {
                    continue;
                }
                {
                    let open = self.acc.last_mut().expect("a path is open");
                    open.0.push(w);
                    open.1.push(aid);
                }
                if self.extend(
                    next_min_start,
                    x_used | (1 << w),
                    covered | (1 << w) | self.arc_vmask[aid as usize],
                    paths_left,
                ) {
                    return true;
                }
                let open = self.acc.last_mut().expect("a path is open");
                open.0.pop();
                open.1.pop();
            }
        }
        // Close the open path and continue with the next start.
        self.open(next_min_start, x_used, covered, paths_left)
    }
}

/// Minimum path cover of `h` under the coverage convention above, found by
/// iterative deepening on the cover size, with a deterministic witness.
pub fn min_path_cover(h: &HyperDigraph, bound: Option<u32>) -> Result<PathCover> {
    check_bound(h.n(), bound)?;
    let t = HopTable::new(h);
    let n = h.n() as usize;
    let mut ctx = CoverCtx::new(&t, n);
    for m in 1..=n {
        ctx.acc.clear();
        if ctx.open(0, 0, 0, m) {
            let paths = ctx
                .acc
                .iter()
                .map(|(vs, arcs)| raw_to_path(&t, vs, arcs))
                .collect();
            return Ok(PathCover::new(paths));
        }
    }
    Err(Error::InternalGuaranteeViolated(
        "singleton cover of every vertex was not found".into(),
    ))
}

fn raw_to_path(t: &HopTable, vs: &[usize], arcs: &[u32]) -> HyperPath {
    let vertices: Vec<VertexId> = vs.iter().map(|&v| VertexId::from_index(v)).collect();
    let hyperarcs: Vec<HyperArc> = arcs
        .iter()
        .map(|&aid| t.arcs[aid as usize].clone())
        .collect();
    HyperPath::new(vertices, hyperarcs).expect("cover search builds valid paths")
}

/// Minimum vertex-disjoint path cover of a digraph (paths cover exactly
/// their vertices; singletons allowed), by iterative deepening. The witness
/// is deterministic: the smallest uncovered vertex anchors each successive
/// path as that path's minimum vertex.
pub fn digraph_min_path_cover(
    d: &Digraph,
    bound: Option<u32>,
) -> Result<(usize, Vec<Vec<VertexId>>)> {
    check_bound(d.n(), bound)?;
    let n = d.n() as usize;
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        adj[u.index()][v.index()] = true;
    }
    let mut ctx = DigraphCoverCtx {
        adj,
        n,
        full: (1u32 << n) - 1,
        failed: HashMap::new(),
        acc: Vec::new(),
    };
    for m in 1..=n {
        ctx.acc.clear();
        if ctx.cover(0, m) {
            let witness = ctx
                .acc
                .iter()
                .map(|p| p.iter().map(|&v| VertexId::from_index(v)).collect())
                .collect();
            return Ok((m, witness));
        }
    }
    Err(Error::InternalGuaranteeViolated(
        "singleton cover of every vertex was not found".into(),
    ))
}

struct DigraphCoverCtx {
    adj: Vec<Vec<bool>>,
    n: usize,
    full: u32,
    /// covered -> largest paths_left that still failed.
    failed: HashMap<u32, usize>,
    acc: Vec<Vec<usize>>,
}

impl DigraphCoverCtx {
    fn cover(&mut self, covered: u32, paths_left: usize) -> bool {
        if covered == self.full {
            return true;
        }
        if paths_left == 0 {
            return false;
        }
        if let Some(&p) = self.failed.get(&covered) {
            if p >= paths_left {
                return false;
            }
        }
        let mut isolated = 0usize;
        for v in 0..self.n {
            if covered & (1 << v) != 0 {
                continue;
            }
            let touched = (0..self.n).any(|w| {
                covered & (1 << w) == 0 && w != v && (self.adj[v][w] || self.adj[w][v])
            });
            if !touched {
                isolated += 1;
            }
        }
        if isolated > paths_left {
            self.failed.insert(covered, paths_left);
            return false;
        }
        let u = (0..self.n)
            .find(|&v| covered & (1 << v) == 0)
            .expect("not full");
        // Every path inside the uncovered set that contains u has u as its
        // minimum vertex; enumerate forward chains out of u, then backward
        // chains into it.
        let mut fwd = vec![u];
        if self.fwd(covered | (1 << u), paths_left, &mut fwd) {
            return true;
        }
        self.failed.insert(covered, paths_left);
        false
    }

    fn fwd(&mut self, covered: u32, paths_left: usize, fwd: &mut Vec<usize>) -> bool {
        let tip = *fwd.last().expect("chain holds the anchor");
        for w in 0..self.n {
            if covered & (1 << w) != 0 || !self.adj[tip][w] {
                continue;
            }
            fwd.push(w);
            if self.fwd(covered | (1 << w), paths_left, fwd) {
                return true;
            }
            fwd.pop();
        }
        let mut bwd = Vec::new();
        self.bwd(covered, paths_left, fwd, &mut bwd)
    }

    fn bwd(
        &mut self,
        covered: u32,
        paths_left: usize,
        fwd: &[usize],
        bwd: &mut Vec<usize>,
    ) -> bool {
        let head = *bwd.last().unwrap_or(&fwd[0]);
        for w in 0..self.n {
            if covered & (1 << w) != 0 || !self.adj[w][head] {
                continue;
            }
            bwd.push(w);
            if self.bwd(covered | (1 << w), paths_left, fwd, bwd) {
                return true;
            }
            bwd.pop();
        }
        let mut path: Vec<usize> = bwd.iter().rev().copied().collect();
        path.extend_from_slice(fwd);
        let mask = path.iter().fold(0u32, |m, &v| m | 1 << v);
        self.acc.push(path);
        if self.cover(covered | mask, paths_left - 1) {
            return true;
        }
        self.acc.pop();
        false
    }
}

/// The full chain report: minimum-cover and independence witnesses for the
/// structure and for its generated digraph.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub hyper_cover: PathCover,
    pub digraph_cover: Vec<Vec<VertexId>>,
    pub digraph_independent: Vec<VertexId>,
    pub hyper_independent: Vec<VertexId>,
}

impl CoverReport {
    /// `(pc(H), pc(D), alpha(D), alpha(H))`.
    pub fn values(&self) -> (usize, usize, usize, usize) {
        (
            self.hyper_cover.size(),
            self.digraph_cover.len(),
            self.digraph_independent.len(),
            self.hyper_independent.len(),
        )
    }

    pub fn chain_holds(&self) -> bool {
        let (a, b, c, d) = self.values();
        a <= b && b <= c && c <= d
    }

    /// Re-validates every witness against `h` from scratch.
    pub fn validate(&self, h: &HyperDigraph) -> Result<()> {
        self.hyper_cover.validate(h)?;
        let d = h.generated_digraph();
        let mut covered = BTreeSet::new();
        for path in &self.digraph_cover {
            if path.is_empty() {
                return Err(Error::BadTuple("empty digraph path".into()));
            }
            for w in path.windows(2) {
                if !d.has_arc(w[0], w[1]) {
                    return Err(Error::BadTuple(format!(
                        "digraph cover uses missing arc ({},{})",
                        w[0], w[1]
                    )));
                }
            }
            for v in path {
                if v.get() == 0 || v.get() > h.n() {
                    return Err(Error::BadTuple(format!("vertex {v} out of range")));
                }
                if !covered.insert(*v) {
                    return Err(Error::BadTuple(format!(
                        "vertex {v} lies on two digraph paths"
                    )));
                }
            }
        }
        if covered.len() != h.n() as usize {
            return Err(Error::BadTuple(format!(
                "digraph cover misses {} vertices",
                h.n() as usize - covered.len()
            )));
        }
        for (name, set) in [
            ("digraph", &self.digraph_independent),
            ("structure", &self.hyper_independent),
        ] {
            let mut seen = BTreeSet::new();
            for v in set {
                if v.get() == 0 || v.get() > h.n() || !seen.insert(*v) {
                    return Err(Error::BadTuple(format!(
                        "{name} independent set is malformed at {v}"
                    )));
                }
            }
        }
        let dset: BTreeSet<VertexId> = self.digraph_independent.iter().copied().collect();
        for (u, v) in d.arcs() {
            if dset.contains(&u) && dset.contains(&v) {
                return Err(Error::BadTuple(format!(
                    "digraph independent set spans arc ({u},{v})"
                )));
            }
        }
        let hset: BTreeSet<VertexId> = self.hyper_independent.iter().copied().collect();
        for a in h.arcs() {
            if a.seq().iter().all(|v| hset.contains(v)) {
                return Err(Error::BadTuple(format!(
                    "structure independent set spans hyperarc {a}"
                )));
            }
        }
        Ok(())
    }
}

/// Computes the whole chain for `h`: minimum covers and independence numbers
/// of the structure and of its generated digraph, with witnesses.
pub fn gallai_milgram_chain(h: &HyperDigraph, bound: Option<u32>) -> Result<CoverReport> {
    check_bound(h.n(), bound)?;
    let d = h.generated_digraph();
    let hyper_cover = min_path_cover(h, bound)?;
    let (_, digraph_cover) = digraph_min_path_cover(&d, bound)?;
    let (_, digraph_independent) = digraph_independence_number(&d, bound)?;
    let (_, hyper_independent) = independence_number(h, bound)?;
    Ok(CoverReport {
        hyper_cover,
        digraph_cover,
        digraph_independent,
        hyper_independent,
    })
}

/// Lifts a digraph path (given by its vertices) onto `h` with the same
/// vertex sequence, assigning every hop a distinct hyperarc ordering it,
/// when such an assignment exists.
pub fn lift_d_path(h: &HyperDigraph, vertices: &[VertexId]) -> Option<HyperPath> {
    if vertices.is_empty() {
        return None;
    }
    let mut seen = BTreeSet::new();
    for v in vertices {
        if v.get() == 0 || v.get() > h.n() || !seen.insert(*v) {
            return None;
        }
    }
    let t = HopTable::new(h);

    fn assign(t: &HopTable, vertices: &[VertexId], chosen: &mut Vec<u32>) -> bool {
        let i = chosen.len();
        if i == vertices.len() - 1 {
            return true;
        }
        let (u, v) = (vertices[i].index(), vertices[i + 1].index());
        for &aid in t.candidates(u, v) {
            if chosen.contains(&aid) {
                continue;
            }
            chosen.push(aid);
            if assign(t, vertices, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen: Vec<u32> = Vec::with_capacity(vertices.len() - 1);
    if !assign(&t, vertices, &mut chosen) {
        return None;
    }
    let arcs = chosen
        .into_iter()
        .map(|aid| t.arcs[aid as usize].clone())
        .collect();
    Some(HyperPath::new(vertices.to_vec(), arcs).expect("assignment respects precedence"))
}
