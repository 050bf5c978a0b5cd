//! Core structures: vertices, hyperarcs, hypergraph containers, plain
//! digraphs, and the seeded generators the rest of the crate builds on.
//!
//! Conventions used everywhere:
//! - vertex ids are 1-based and contiguous: a structure on `n` vertices uses
//!   ids `1..=n`;
//! - the canonical order of hyperarcs is lexicographic on their sorted vertex
//!   subsets, and every container iterates in that order;
//! - all randomness flows through ChaCha8 seeded from a caller-provided
//!   `u64`, with a fixed number of draws per decision, so generated instances
//!   are identical across platforms and runs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

/// 1-based vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(id: u32) -> Self {
        VertexId(id)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// 0-based position, for indexing vectors sized by `n`.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(index: usize) -> Self {
        VertexId(index as u32 + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered tuple of distinct vertices; position in the tuple is the
/// precedence order the arc imposes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperArc {
    seq: Vec<VertexId>,
}

impl HyperArc {
    /// Builds an arc from its precedence sequence. Rejects arity below 2,
    /// the id 0, and repeated vertices.
    pub fn new(seq: Vec<VertexId>) -> Result<Self> {
        if seq.len() < 2 {
            return Err(Error::BadTuple(format!(
                "hyperarc arity {} is below 2",
                seq.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for v in &seq {
            if v.get() == 0 {
                return Err(Error::BadTuple("vertex id 0 (ids are 1-based)".into()));
            }
            if !seen.insert(*v) {
                return Err(Error::BadTuple(format!("repeated vertex {v} in hyperarc")));
            }
        }
        Ok(HyperArc { seq })
    }

    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        HyperArc::new(ids.iter().copied().map(VertexId::new).collect())
    }

    /// Arity of the arc.
    pub fn k(&self) -> usize {
        self.seq.len()
    }

    /// The precedence sequence.
    pub fn seq(&self) -> &[VertexId] {
        &self.seq
    }

    /// The underlying vertex subset, sorted ascending. This is the arc's
    /// identity within a hyperdigraph.
    pub fn key(&self) -> Vec<VertexId> {
        let mut k = self.seq.clone();
        k.sort();
        k
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.seq.contains(&v)
    }

    /// Position of `v` in the precedence sequence.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.seq.iter().position(|&u| u == v)
    }

    /// True when `u` appears before `v` in the tuple; false when either is
    /// absent (or `u == v`).
    pub fn precedes(&self, u: VertexId, v: VertexId) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(i), Some(j)) => i < j,
            _ => false,
        }
    }
}

impl fmt::Display for HyperArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Whether `u` appears before `v` in hyperarc `a`.
pub fn precedes(a: &HyperArc, u: VertexId, v: VertexId) -> bool {
    a.precedes(u, v)
}

/// Exact binomial coefficient. Callers in this crate stay well inside u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // The running product is always an integer: each prefix is itself
        // a binomial coefficient.
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Lexicographic iterator over the k-element subsets of `1..=n`, each yielded
/// sorted ascending. This order is the canonical subset order of the crate.
pub fn k_subsets(n: u32, k: u32) -> KSubsets {
    let first = if k == 0 || k > n {
        None
    } else {
        Some((1..=k).collect())
    };
    KSubsets { n, k, next: first }
}

pub struct KSubsets {
    n: u32,
    k: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for KSubsets {
    type Item = Vec<VertexId>;

    fn next(&mut self) -> Option<Vec<VertexId>> {
        let cur = self.next.take()?;
        let out = cur.iter().map(|&x| VertexId::new(x)).collect();
        let k = self.k as usize;
        let mut next = cur;
        let mut i = k;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if next[i] < self.n - (k - 1 - i) as u32 {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.next = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// 0-based position of a sorted subset in the canonical order of all
/// `|subset|`-element subsets of `1..=n`.
pub fn subset_rank(n: u32, subset: &[VertexId]) -> u64 {
    let k = subset.len() as u64;
    let mut rank: u128 = 0;
    let mut prev = 0u64;
    for (i, v) in subset.iter().enumerate() {
        let vi = v.get() as u64;
        for w in prev + 1..vi {
            rank += binomial(n as u64 - w, k - i as u64 - 1);
        }
        prev = vi;
    }
    rank as u64
}

/// Inverse of [`subset_rank`]: the subset at `rank` in canonical order, or
/// `None` when `rank >= C(n,k)`.
pub fn subset_unrank(n: u32, k: u32, rank: u64) -> Option<Vec<VertexId>> {
    if u128::from(rank) >= binomial(n as u64, k as u64) {
        return None;
    }
    let mut rank = u128::from(rank);
    let mut out = Vec::with_capacity(k as usize);
    let mut v = 1u64;
    for i in 0..k as u64 {
        loop {
            let block = binomial(n as u64 - v, k as u64 - i - 1);
            if rank < block {
                out.push(VertexId::new(v as u32));
                v += 1;
                break;
            }
            rank -= block;
            v += 1;
        }
    }
    Some(out)
}

fn normalize_subset(n: u32, k: u32, subset: &[VertexId]) -> Result<Vec<VertexId>> {
    if subset.len() != k as usize {
        return Err(Error::BadTuple(format!(
            "subset size {} does not match arity {k}",
            subset.len()
        )));
    }
    let mut key: Vec<VertexId> = subset.to_vec();
    key.sort();
    for w in key.windows(2) {
        if w[0] == w[1] {
            return Err(Error::BadTuple(format!("repeated vertex {} in subset", w[0])));
        }
    }
    if let Some(first) = key.first() {
        if first.get() == 0 {
            return Err(Error::BadTuple("vertex id 0 (ids are 1-based)".into()));
        }
    }
    if let Some(last) = key.last() {
        if last.get() > n {
            return Err(Error::BadTuple(format!(
                "vertex {last} is out of range 1..={n}"
            )));
        }
    }
    Ok(key)
}

/// A k-uniform hyperdigraph: at most one ordered tuple per k-element vertex
/// subset. `k > n` is permitted and means the structure can hold no arcs
/// (useful for induced substructures smaller than the arity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperDigraph {
    n: u32,
    k: u32,
    arcs: BTreeMap<Vec<VertexId>, HyperArc>,
}

impl HyperDigraph {
    /// Largest arc table the constructors accept.
    pub const MAX_ARCS: u64 = 1 << 20;

    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadTuple("n must be at least 1".into()));
        }
        if k < 2 {
            return Err(Error::BadTuple(format!("arity k={k} is below 2")));
        }
        if binomial(n as u64, k as u64) > Self::MAX_ARCS as u128 {
            return Err(Error::RangeUnsupported(format!(
                "C({n},{k}) exceeds the supported arc-table size"
            )));
        }
        Ok(HyperDigraph {
            n,
            k,
            arcs: BTreeMap::new(),
        })
    }

    pub fn with_arcs(n: u32, k: u32, arcs: Vec<HyperArc>) -> Result<Self> {
        let mut h = Self::new(n, k)?;
        for a in arcs {
            h.insert(a)?;
        }
        Ok(h)
    }

    /// Adds a hyperarc. The subset must be fresh, the arity must match, and
    /// all vertices must be in range.
    pub fn insert(&mut self, arc: HyperArc) -> Result<()> {
        if arc.k() != self.k as usize {
            return Err(Error::BadTuple(format!(
                "arc arity {} does not match structure arity {}",
                arc.k(),
                self.k
            )));
        }
        if let Some(max) = arc.seq().iter().max() {
            if max.get() > self.n {
                return Err(Error::BadTuple(format!(
                    "vertex {max} is out of range 1..={}",
                    self.n
                )));
            }
        }
        let key = arc.key();
        if self.arcs.contains_key(&key) {
            return Err(Error::DuplicateSubset(
                key.iter().map(|v| v.get()).collect(),
            ));
        }
        self.arcs.insert(key, arc);
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        let n = self.n;
        (1..=n).map(VertexId::new)
    }

    /// Hyperarcs in canonical order.
    pub fn arcs(&self) -> impl Iterator<Item = &HyperArc> {
        self.arcs.values()
    }

    /// The arc on `subset`, if present. The subset must be well-formed.
    pub fn hyperarc_of(&self, subset: &[VertexId]) -> Result<Option<&HyperArc>> {
        let key = normalize_subset(self.n, self.k, subset)?;
        Ok(self.arcs.get(&key))
    }

    /// The substructure induced on `s`: keeps exactly the arcs whose vertex
    /// set lies inside `s`, relabelled to `1..=|s|` preserving relative id
    /// order.
    pub fn induced(&self, s: &[VertexId]) -> Result<InducedSubgraph> {
        if s.is_empty() {
            return Err(Error::BadTuple("induced set must be nonempty".into()));
        }
        let mut map: Vec<VertexId> = s.to_vec();
        map.sort();
        for w in map.windows(2) {
            if w[0] == w[1] {
                return Err(Error::BadTuple(format!(
                    "repeated vertex {} in induced set",
                    w[0]
                )));
            }
        }
        if map[0].get() == 0 || map[map.len() - 1].get() > self.n {
            return Err(Error::BadTuple("induced set out of range".into()));
        }
        let position: BTreeMap<VertexId, VertexId> = map
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, VertexId::from_index(i)))
            .collect();
        let mut sub = HyperDigraph::new(map.len() as u32, self.k)?;
        for arc in self.arcs.values() {
            if arc.seq().iter().all(|v| position.contains_key(v)) {
                let seq = arc.seq().iter().map(|v| position[v]).collect();
                sub.insert(HyperArc::new(seq).expect("relabelled arc stays valid"))
                    .expect("induced arcs have distinct subsets");
            }
        }
        Ok(InducedSubgraph { sub, map })
    }

    /// The digraph holding, for every hyperarc, every ordered vertex pair the
    /// arc places in precedence order, deduplicated across arcs.
    pub fn generated_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.n);
        for arc in self.arcs.values() {
            let seq = arc.seq();
            for i in 0..seq.len() {
                for j in i + 1..seq.len() {
                    d.insert_arc(seq[i], seq[j])
                        .expect("arc vertices are in range and distinct");
                }
            }
        }
        d
    }
}

/// Result of [`HyperDigraph::induced`]: the relabelled substructure plus the
/// translation back to original ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    /// Substructure on `1..=s.len()`.
    pub sub: HyperDigraph,
    /// `map[i]` is the original id of new vertex `i+1`.
    pub map: Vec<VertexId>,
}

/// A complete [`HyperDigraph`]: exactly one hyperarc on every k-element
/// subset, with `2 <= k <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperTournament {
    inner: HyperDigraph,
}

impl HyperTournament {
    pub fn new(inner: HyperDigraph) -> Result<Self> {
        if inner.k() > inner.n() {
            return Err(Error::BadTuple(format!(
                "arity k={} exceeds n={}",
                inner.k(),
                inner.n()
            )));
        }
        let expected = binomial(inner.n() as u64, inner.k() as u64) as u64;
        let found = inner.arc_count() as u64;
        if found < expected {
            return Err(Error::MissingSubset { expected, found });
        }
        Ok(HyperTournament { inner })
    }

    /// Builds from raw tuples of 1-based ids in precedence order.
    pub fn build(k: u32, n: u32, tuples: &[Vec<u32>]) -> Result<Self> {
        let mut h = HyperDigraph::new(n, k)?;
        for t in tuples {
            h.insert(HyperArc::from_ids(t)?)?;
        }
        HyperTournament::new(h)
    }

    pub fn as_hyperdigraph(&self) -> &HyperDigraph {
        &self.inner
    }

    pub fn into_inner(self) -> HyperDigraph {
        self.inner
    }

    /// The unique arc on `subset`.
    pub fn arc_on(&self, subset: &[VertexId]) -> Result<&HyperArc> {
        self.inner.hyperarc_of(subset)?.ok_or_else(|| {
            Error::InternalGuaranteeViolated("complete structure misses a subset".into())
        })
    }
}

impl Deref for HyperTournament {
    type Target = HyperDigraph;

    fn deref(&self) -> &HyperDigraph {
        &self.inner
    }
}

/// Plain digraph on `1..=n` with set semantics: no parallel arcs, no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: u32,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Digraph {
    pub fn new(n: u32) -> Self {
        Digraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    /// Adds an arc; re-adding is a no-op. Loops and out-of-range ids are
    /// rejected.
    pub fn insert_arc(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::BadTuple(format!("loop at vertex {u}")));
        }
        for w in [u, v] {
            if w.get() == 0 || w.get() > self.n {
                return Err(Error::BadTuple(format!(
                    "vertex {w} is out of range 1..={}",
                    self.n
                )));
            }
        }
        self.arcs.insert((u, v));
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Arcs in ascending (tail, head) order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn out_neighbors(&self, u: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.arcs
            .range((u, VertexId::new(0))..=(u, VertexId::new(u32::MAX)))
            .map(|&(_, v)| v)
    }

    /// Vertices reachable from `from`, indexed 0-based; `from` is marked.
    pub fn reachable(&self, from: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.n as usize];
        seen[from.index()] = true;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for v in self.out_neighbors(u) {
                if !seen[v.index()] {
                    seen[v.index()] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Strong connectivity: every vertex reaches every other. Structures on
    /// at most one vertex are strong.
    pub fn is_strong(&self) -> bool {
        let n = self.n as usize;
        if n <= 1 {
            return true;
        }
        let root = VertexId::new(1);
        if self.reachable(root).iter().any(|&r| !r) {
            return false;
        }
        // Reverse reachability from the root.
        let mut radj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &self.arcs {
            radj[v.index()].push(u.index());
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &u in &radj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&r| r)
    }
}

/// An orientation of every vertex pair: exactly one of (u,v), (v,u) per
/// unordered pair of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tournament {
    n: u32,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

impl Tournament {
    pub fn new(n: u32, arcs: BTreeSet<(VertexId, VertexId)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadTuple("n must be at least 1".into()));
        }
        for &(u, v) in &arcs {
            if u == v {
                return Err(Error::BadTuple(format!("loop at vertex {u}")));
            }
            for w in [u, v] {
                if w.get() == 0 || w.get() > n {
                    return Err(Error::BadTuple(format!("vertex {w} is out of range 1..={n}")));
                }
            }
            if arcs.contains(&(v, u)) {
                return Err(Error::BadTuple(format!(
                    "pair {{{u},{v}}} is oriented both ways"
                )));
            }
        }
        let expected = binomial(n as u64, 2) as usize;
        if arcs.len() != expected {
            return Err(Error::BadTuple(format!(
                "expected {expected} arcs for a tournament on {n} vertices, found {}",
                arcs.len()
            )));
        }
        Ok(Tournament { n, arcs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Arcs in ascending (tail, head) order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut d = Digraph::new(self.n);
        for (u, v) in self.arcs() {
            d.insert_arc(u, v).expect("tournament arcs are valid");
        }
        d
    }

    /// Strong connectivity, computed directly on adjacency lists.
    pub fn is_strong(&self) -> bool {
        let n = self.n as usize;
        if n <= 1 {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut radj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &self.arcs {
            adj[u.index()].push(v.index());
            radj[v.index()].push(u.index());
        }
        for lists in [&adj, &radj] {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0usize];
            while let Some(u) = stack.pop() {
                for &v in &lists[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            if seen.iter().any(|&r| !r) {
                return false;
            }
        }
        true
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from a master seed and an index.
/// Stable across platforms and releases; used to give every trial of a
/// campaign its own reproducible seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

/// Shuffle consuming exactly `seq.len() - 1` draws from the stream. The
/// modulo step keeps the draw count fixed, which matters more here than the
/// negligible bias at these tuple sizes.
fn shuffle(seq: &mut [VertexId], rng: &mut ChaCha8Rng) {
    for i in (1..seq.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        seq.swap(i, j);
    }
}

/// Uniformly random hypertournament: every subset's tuple is an independent
/// uniform permutation. Subsets are visited in canonical order and each
/// consumes exactly `k-1` draws, so the instance is a pure function of
/// `(k, n, seed)`.
pub fn random_tournament(k: u32, n: u32, seed: u64) -> Result<HyperTournament> {
    if k > n {
        return Err(Error::BadTuple(format!("arity k={k} exceeds n={n}")));
    }
    let mut h = HyperDigraph::new(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for subset in k_subsets(n, k) {
        let mut seq = subset;
        shuffle(&mut seq, &mut rng);
        h.insert(HyperArc::new(seq).expect("subsets are distinct"))
            .expect("subsets are fresh");
    }
    HyperTournament::new(h)
}

/// Random hyperdigraph: each subset independently receives an arc with
/// probability `density`, and each present arc is a uniform permutation.
/// One inclusion draw per subset, plus `k-1` permutation draws when present.
pub fn random_hyperdigraph(k: u32, n: u32, density: f64, seed: u64) -> Result<HyperDigraph> {
    if k > n {
        return Err(Error::BadTuple(format!("arity k={k} exceeds n={n}")));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::BadTuple(format!(
            "density {density} is outside [0,1]"
        )));
    }
    let threshold: u128 = if density >= 1.0 {
        1 << 64
    } else {
        (density * (u64::MAX as f64 + 1.0)) as u128
    };
    let mut h = HyperDigraph::new(n, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for subset in k_subsets(n, k) {
        let include = u128::from(rng.next_u64()) < threshold;
        if include {
            let mut seq = subset;
            shuffle(&mut seq, &mut rng);
            h.insert(HyperArc::new(seq).expect("subsets are distinct"))
                .expect("subsets are fresh");
        }
    }
    Ok(h)
}

/// The hypertournament whose every tuple lists its subset in ascending id
/// order. Never strong for `n > k - 1` vertices of interest: vertex `n`
/// never precedes anything, so nothing is reachable from it.
pub fn ascending_tournament(k: u32, n: u32) -> Result<HyperTournament> {
    if k > n {
        return Err(Error::BadTuple(format!("arity k={k} exceeds n={n}")));
    }
    let mut h = HyperDigraph::new(n, k)?;
    for subset in k_subsets(n, k) {
        h.insert(HyperArc::new(subset).expect("subsets are distinct"))
            .expect("subsets are fresh");
    }
    HyperTournament::new(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(xs: &[u32]) -> Vec<VertexId> {
        xs.iter().copied().map(VertexId::new).collect()
    }

    /// Shared 4-vertex, arity-3 fixture used all over the test suite.
    pub(crate) fn h4() -> HyperTournament {
        HyperTournament::build(
            3,
            4,
            &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 4, 1], vec![2, 3, 4]],
        )
        .expect("fixture is well-formed")
    }

    #[test]
    fn hyperarc_validation() {
        assert!(HyperArc::from_ids(&[1, 2, 3]).is_ok());
        assert!(matches!(
            HyperArc::from_ids(&[1]),
            Err(Error::BadTuple(_))
        ));
        assert!(matches!(
            HyperArc::from_ids(&[1, 2, 1]),
            Err(Error::BadTuple(_))
        ));
        assert!(matches!(
            HyperArc::from_ids(&[0, 1, 2]),
            Err(Error::BadTuple(_))
        ));
    }

    #[test]
    fn hyperarc_precedence() {
        let a = HyperArc::from_ids(&[2, 4, 1]).unwrap();
        assert!(a.precedes(VertexId::new(2), VertexId::new(4)));
        assert!(a.precedes(VertexId::new(2), VertexId::new(1)));
        assert!(a.precedes(VertexId::new(4), VertexId::new(1)));
        assert!(!a.precedes(VertexId::new(1), VertexId::new(2)));
        assert!(!a.precedes(VertexId::new(2), VertexId::new(3)));
        assert!(!a.precedes(VertexId::new(2), VertexId::new(2)));
        assert_eq!(a.key(), ids(&[1, 2, 4]));
        assert_eq!(a.to_string(), "(2,4,1)");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn subsets_canonical_order() {
        let all: Vec<Vec<VertexId>> = k_subsets(4, 3).collect();
        assert_eq!(
            all,
            vec![ids(&[1, 2, 3]), ids(&[1, 2, 4]), ids(&[1, 3, 4]), ids(&[2, 3, 4])]
        );
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(3, 4).count(), 0);
    }

    #[test]
    fn subset_rank_roundtrip() {
        for (rank, subset) in k_subsets(6, 3).enumerate() {
            assert_eq!(subset_rank(6, &subset), rank as u64);
            assert_eq!(subset_unrank(6, 3, rank as u64).unwrap(), subset);
        }
        assert_eq!(subset_unrank(6, 3, 20), None);
    }

    #[test]
    fn duplicate_subset_rejected() {
        let mut h = HyperDigraph::new(4, 3).unwrap();
        h.insert(HyperArc::from_ids(&[1, 2, 3]).unwrap()).unwrap();
        let err = h.insert(HyperArc::from_ids(&[3, 1, 2]).unwrap()).unwrap_err();
        assert_eq!(err, Error::DuplicateSubset(vec![1, 2, 3]));
    }

    #[test]
    fn tournament_requires_all_subsets() {
        let err = HyperTournament::build(3, 4, &[vec![1, 2, 3]]).unwrap_err();
        assert_eq!(
            err,
            Error::MissingSubset {
                expected: 4,
                found: 1
            }
        );
    }

    #[test]
    fn h4_lookup_and_arcs() {
        let h = h4();
        assert_eq!(h.n(), 4);
        assert_eq!(h.k(), 3);
        assert_eq!(h.arc_count(), 4);
        let a = h.hyperarc_of(&ids(&[4, 1, 2])).unwrap().unwrap();
        assert_eq!(a.seq(), &ids(&[2, 4, 1])[..]);
        let keys: Vec<Vec<VertexId>> = h.arcs().map(|a| a.key()).collect();
        assert_eq!(
            keys,
            vec![ids(&[1, 2, 3]), ids(&[1, 2, 4]), ids(&[1, 3, 4]), ids(&[2, 3, 4])]
        );
        assert!(matches!(
            h.hyperarc_of(&ids(&[1, 2])),
            Err(Error::BadTuple(_))
        ));
    }

    #[test]
    fn h4_generated_digraph() {
        let d = h4().generated_digraph();
        let got: Vec<(u32, u32)> = d.arcs().map(|(u, v)| (u.get(), v.get())).collect();
        assert_eq!(
            got,
            vec![
                (1, 2),
                (1, 3),
                (2, 1),
                (2, 3),
                (2, 4),
                (3, 1),
                (3, 4),
                (4, 1)
            ]
        );
        assert!(d.is_strong());
    }

    #[test]
    fn induced_substructure() {
        let h = h4();
        let got = h.induced(&ids(&[2, 3, 4])).unwrap();
        assert_eq!(got.sub.n(), 3);
        assert_eq!(got.sub.arc_count(), 1);
        // Arc (2,3,4) relabels to (1,2,3).
        let a = got.sub.hyperarc_of(&ids(&[1, 2, 3])).unwrap().unwrap();
        assert_eq!(a.seq(), &ids(&[1, 2, 3])[..]);
        assert_eq!(got.map, ids(&[2, 3, 4]));

        // Induced set smaller than the arity: no arcs can survive.
        let small = h.induced(&ids(&[1, 2])).unwrap();
        assert_eq!(small.sub.n(), 2);
        assert_eq!(small.sub.arc_count(), 0);
    }

    #[test]
    fn digraph_strongness() {
        let mut d = Digraph::new(3);
        d.insert_arc(VertexId::new(1), VertexId::new(2)).unwrap();
        d.insert_arc(VertexId::new(2), VertexId::new(3)).unwrap();
        assert!(!d.is_strong());
        d.insert_arc(VertexId::new(3), VertexId::new(1)).unwrap();
        assert!(d.is_strong());
        assert!(Digraph::new(1).is_strong());
        assert!(matches!(
            d.insert_arc(VertexId::new(2), VertexId::new(2)),
            Err(Error::BadTuple(_))
        ));
    }

    #[test]
    fn tournament_validation() {
        let arcs: BTreeSet<(VertexId, VertexId)> = [(1u32, 2u32), (2, 3), (1, 3)]
            .iter()
            .map(|&(u, v)| (VertexId::new(u), VertexId::new(v)))
            .collect();
        let t = Tournament::new(3, arcs.clone()).unwrap();
        assert!(!t.is_strong());

        let mut both = arcs.clone();
        both.insert((VertexId::new(2), VertexId::new(1)));
        assert!(matches!(Tournament::new(3, both), Err(Error::BadTuple(_))));

        let mut short = arcs;
        short.remove(&(VertexId::new(1), VertexId::new(3)));
        assert!(matches!(Tournament::new(3, short), Err(Error::BadTuple(_))));
    }

    #[test]
    fn cyclic_triangle_is_strong() {
        let arcs: BTreeSet<(VertexId, VertexId)> = [(1u32, 2u32), (2, 3), (3, 1)]
            .iter()
            .map(|&(u, v)| (VertexId::new(u), VertexId::new(v)))
            .collect();
        assert!(Tournament::new(3, arcs).unwrap().is_strong());
    }

    #[test]
    fn derive_seed_is_stable() {
        // Frozen values: campaign reproducibility depends on these.
        assert_eq!(derive_seed(0, 0), derive_seed(0, 0));
        assert_ne!(derive_seed(0, 0), derive_seed(0, 1));
        assert_ne!(derive_seed(0, 0), derive_seed(1, 0));
        let a = derive_seed(0xDEAD_BEEF, 42);
        assert_eq!(a, derive_seed(0xDEAD_BEEF, 42));
    }

    #[test]
    fn random_tournament_is_reproducible() {
        let a = random_tournament(3, 6, 7).unwrap();
        let b = random_tournament(3, 6, 7).unwrap();
        assert_eq!(a, b);
        let c = random_tournament(3, 6, 8).unwrap();
        assert_ne!(a, c);
        assert_eq!(a.arc_count(), 20);
        assert!(matches!(
            random_tournament(5, 4, 0),
            Err(Error::BadTuple(_))
        ));
    }

    #[test]
    fn random_hyperdigraph_density_extremes() {
        let empty = random_hyperdigraph(3, 6, 0.0, 9).unwrap();
        assert_eq!(empty.arc_count(), 0);
        let full = random_hyperdigraph(3, 6, 1.0, 9).unwrap();
        assert_eq!(full.arc_count(), 20);
        let mid = random_hyperdigraph(3, 6, 0.5, 9).unwrap();
        assert_eq!(mid, random_hyperdigraph(3, 6, 0.5, 9).unwrap());
        assert!(mid.arc_count() > 0 && mid.arc_count() < 20);
    }

    #[test]
    fn ascending_is_complete_but_one_sided() {
        let h = ascending_tournament(3, 4).unwrap();
        assert_eq!(h.arc_count(), 4);
        for a in h.arcs() {
            let s = a.seq();
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
