//! Shared backtracking machinery for hyperpath and hypercycle searches.
//!
//! Every search explores (next vertex, generating arc) choices in canonical
//! order -- vertices ascending, then arcs ascending in subset order -- and
//! returns the first hit, so results are deterministic functions of the
//! input. Pruning uses the hop relation "some arc places u before v": the
//! digraph of all hops over-approximates reachability (it ignores the
//! distinct-arc rule), so unreachability there is a sound reason to cut.
//! Memoizing states would be unsound here: two visits to the same (vertex,
//! used-arc) state can carry different visited-vertex sets.

use crate::hypercore::{HyperArc, HyperDigraph};

pub(crate) struct HopTable {
    pub n: usize,
    /// Arcs in canonical order; positions double as arc ids during search.
    pub arcs: Vec<HyperArc>,
    /// `hop[u * n + v]`: ids of arcs placing `u` before `v` (0-based u, v).
    hop: Vec<Vec<u32>>,
}

impl HopTable {
    pub fn new(h: &HyperDigraph) -> Self {
        let n = h.n() as usize;
        let arcs: Vec<HyperArc> = h.arcs().cloned().collect();
        let mut hop = vec![Vec::new(); n * n];
        for (id, arc) in arcs.iter().enumerate() {
            let seq = arc.seq();
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    hop[seq[i].index() * n + seq[j].index()].push(id as u32);
                }
            }
        }
        HopTable { n, arcs, hop }
    }

    /// Ids of arcs that can realize the hop `u -> v`, ascending.
    pub fn candidates(&self, u: usize, v: usize) -> &[u32] {
        &self.hop[u * self.n + v]
    }

    pub fn has_hop(&self, u: usize, v: usize) -> bool {
        !self.candidates(u, v).is_empty()
    }

    /// Hop-relation reachability from `from` restricted to `allowed`
    /// vertices. Arc reuse is ignored, so the result is a superset of what a
    /// real path can reach.
    pub fn reachable_within(&self, from: usize, allowed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for v in 0..self.n {
                if allowed[v] && !seen[v] && self.has_hop(u, v) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Hop-relation BFS distance from `from` to `to` within `allowed`.
    pub fn distance_within(&self, from: usize, to: usize, allowed: &[bool]) -> Option<usize> {
        if from == to {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut frontier = vec![from];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for v in 0..self.n {
                    if allowed[v] && dist[v] == usize::MAX && self.has_hop(u, v) {
                        if v == to {
                            return Some(dist[u] + 1);
                        }
                        dist[v] = dist[u] + 1;
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        None
    }
}

struct PathState {
    visited: Vec<bool>,
    used: Vec<bool>,
    vseq: Vec<usize>,
    aseq: Vec<u32>,
}

impl PathState {
    fn new(t: &HopTable, start: usize) -> Self {
        let mut visited = vec![false; t.n];
        visited[start] = true;
        PathState {
            visited,
            used: vec![false; t.arcs.len()],
            vseq: vec![start],
            aseq: Vec::new(),
        }
    }

    fn push(&mut self, v: usize, aid: u32) {
        self.visited[v] = true;
        self.used[aid as usize] = true;
        self.vseq.push(v);
        self.aseq.push(aid);
    }

    fn pop(&mut self) {
        let v = self.vseq.pop().expect("pop matches a push");
        let aid = self.aseq.pop().expect("pop matches a push");
        self.visited[v] = false;
        self.used[aid as usize] = false;
    }
}

/// First path (canonical order) from `from` to `to` using at most `max_len`
/// hops. Returns the vertex sequence and arc ids.
pub(crate) fn find_path_impl(
    t: &HopTable,
    from: usize,
    to: usize,
    max_len: usize,
) -> Option<(Vec<usize>, Vec<u32>)> {
    if from == to {
        return Some((vec![from], Vec::new()));
    }
    if max_len == 0 {
        return None;
    }
    let allowed = vec![true; t.n];
    match t.distance_within(from, to, &allowed) {
        Some(d) if d <= max_len => {}
        _ => return None,
    }
    let mut st = PathState::new(t, from);
    if dfs_to(&mut st, t, to, max_len) {
        Some((st.vseq, st.aseq))
    } else {
        None
    }
}

fn dfs_to(st: &mut PathState, t: &HopTable, to: usize, max_len: usize) -> bool {
    if st.aseq.len() == max_len {
        return false;
    }
    let cur = *st.vseq.last().expect("path is nonempty");
    for w in 0..t.n {
        if st.visited[w] {
            continue;
        }
        let cands = t.candidates(cur, w);
        if cands.is_empty() {
            continue;
        }
        if w == to {
            for &aid in cands {
                if !st.used[aid as usize] {
                    st.push(w, aid);
                    return true;
                }
            }
            continue;
        }
        // Before committing to w, make sure the target still fits in the
        // remaining hop budget through unvisited vertices.
        let allowed: Vec<bool> = st.visited.iter().map(|&b| !b).collect();
        let rem = max_len - st.aseq.len() - 1;
        let fits = match t.distance_within(w, to, &allowed) {
            Some(d) => d <= rem,
            None => false,
        };
        if !fits {
            continue;
        }
        for &aid in cands {
            if st.used[aid as usize] {
                continue;
            }
            st.push(w, aid);
            if dfs_to(st, t, to, max_len) {
                return true;
            }
            st.pop();
        }
    }
    false
}

/// First spanning path in canonical order: start vertices ascending, then
/// (next vertex, arc) choices ascending.
pub(crate) fn ham_path_impl(t: &HopTable) -> Option<(Vec<usize>, Vec<u32>)> {
    if t.n == 0 {
        return None;
    }
    if t.n == 1 {
        return Some((vec![0], Vec::new()));
    }
    for start in 0..t.n {
        let mut st = PathState::new(t, start);
        if dfs_cover(&mut st, t) {
            return Some((st.vseq, st.aseq));
        }
    }
    None
}

fn dfs_cover(st: &mut PathState, t: &HopTable) -> bool {
    if st.vseq.len() == t.n {
        return true;
    }
    let cur = *st.vseq.last().expect("path is nonempty");
    let mut allowed: Vec<bool> = st.visited.iter().map(|&b| !b).collect();
    allowed[cur] = true;
    let reach = t.reachable_within(cur, &allowed);
    for w in 0..t.n {
        if !st.visited[w] && !reach[w] {
            return false;
        }
    }
    for w in 0..t.n {
        if st.visited[w] {
            continue;
        }
        for &aid in t.candidates(cur, w) {
            if st.used[aid as usize] {
                continue;
            }
            st.push(w, aid);
            if dfs_cover(st, t) {
                return true;
            }
            st.pop();
        }
    }
    false
}

/// First spanning cycle in canonical order. The rotation is normalized by
/// pinning vertex 0 first, so the result is unique per instance.
pub(crate) fn ham_cycle_impl(t: &HopTable) -> Option<(Vec<usize>, Vec<u32>)> {
    if t.n < 2 {
        return None;
    }
    let mut st = PathState::new(t, 0);
    if dfs_cycle(&mut st, t) {
        Some((st.vseq, st.aseq))
    } else {
        None
    }
}

fn dfs_cycle(st: &mut PathState, t: &HopTable) -> bool {
    let cur = *st.vseq.last().expect("path is nonempty");
    if st.vseq.len() == t.n {
        for &aid in t.candidates(cur, 0) {
            if !st.used[aid as usize] {
                st.aseq.push(aid);
                return true;
            }
        }
        return false;
    }
    let mut allowed: Vec<bool> = st.visited.iter().map(|&b| !b).collect();
    allowed[cur] = true;
    allowed[0] = true;
    let reach = t.reachable_within(cur, &allowed);
    if !reach[0] {
        return false;
    }
    for w in 0..t.n {
        if !st.visited[w] && !reach[w] {
            return false;
        }
    }
    for w in 1..t.n {
        if st.visited[w] {
            continue;
        }
        for &aid in t.candidates(cur, w) {
            if st.used[aid as usize] {
                continue;
            }
            st.push(w, aid);
            if dfs_cycle(st, t) {
                return true;
            }
            st.pop();
        }
    }
    false
}

pub(crate) enum AnchorSpec {
    Vertex(usize),
    ArcId(u32),
}

/// First cycle of exactly `len` vertices through the anchor, in canonical
/// order. Vertex anchors are pinned to position 1; arc anchors are pinned to
/// the first hop (every cycle through the arc has a rotation of that shape).
pub(crate) fn anchored_cycle_impl(
    t: &HopTable,
    anchor: &AnchorSpec,
    len: usize,
) -> Option<(Vec<usize>, Vec<u32>)> {
    if len < 2 || len > t.n {
        return None;
    }
    match *anchor {
        AnchorSpec::Vertex(s) => {
            let mut st = PathState::new(t, s);
            if dfs_len(&mut st, t, s, len) {
                Some((st.vseq, st.aseq))
            } else {
                None
            }
        }
        AnchorSpec::ArcId(aid) => {
            let seq = t.arcs[aid as usize].seq().to_vec();
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    pairs.push((seq[i].index(), seq[j].index()));
                }
            }
            pairs.sort_unstable();
            for (u, v) in pairs {
                let mut st = PathState::new(t, u);
                st.push(v, aid);
                if dfs_len(&mut st, t, u, len) {
                    return Some((st.vseq, st.aseq));
                }
            }
            None
        }
    }
}

fn dfs_len(st: &mut PathState, t: &HopTable, start: usize, len: usize) -> bool {
    let cur = *st.vseq.last().expect("path is nonempty");
    if st.vseq.len() == len {
        for &aid in t.candidates(cur, start) {
            if !st.used[aid as usize] {
                st.aseq.push(aid);
                return true;
            }
        }
        return false;
    }
    let mut allowed: Vec<bool> = st.visited.iter().map(|&b| !b).collect();
    allowed[cur] = true;
    allowed[start] = true;
    let rem = len - st.vseq.len() + 1;
    match t.distance_within(cur, start, &allowed) {
        Some(d) if d <= rem => {}
        _ => return false,
    }
    for w in 0..t.n {
        if st.visited[w] || w == start {
            continue;
        }
        for &aid in t.candidates(cur, w) {
            if st.used[aid as usize] {
                continue;
            }
            st.push(w, aid);
            if dfs_len(st, t, start, len) {
                return true;
            }
            st.pop();
        }
    }
    false
}
