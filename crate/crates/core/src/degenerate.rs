//! Degeneration of a strong hypertournament into a strong tournament in
//! which every pair is oriented by its own distinct hyperarc.
//!
//! The pipeline: take the canonical spanning cycle, orient its consecutive
//! pairs along the cycle using the cycle's own arcs, then assign every
//! remaining pair a distinct non-cycle hyperarc containing it via a maximum
//! bipartite matching, and orient the pair the way that arc orders it. The
//! resulting tournament inherits the spanning cycle, hence is strong. The
//! module also provides the membership verifier, the exhaustive member
//! enumeration, and a randomized search for instances with no strong member.

use std::collections::{BTreeMap, BTreeSet};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::connectivity::{is_strong, HyperCycle};
use crate::error::{Error, Result};
use crate::hamiltonian::hamiltonian_cycle;
use crate::hypercore::{
    binomial, derive_seed, HyperArc, HyperDigraph, HyperTournament, Tournament, VertexId,
};

/// Unordered vertex pair, stored as `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PairKey {
    lo: VertexId,
    hi: VertexId,
}

impl PairKey {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        if a == b {
            return Err(Error::BadTuple(format!("pair needs two distinct vertices, got {a}")));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        Ok(PairKey { lo, hi })
    }

    pub fn lo(self) -> VertexId {
        self.lo
    }

    pub fn hi(self) -> VertexId {
        self.hi
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }
}

impl std::fmt::Display for PairKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// The bipartite side data for one degeneration: non-consecutive pairs on
/// one side, non-cycle hyperarcs on the other, adjacency by containment.
#[derive(Debug, Clone)]
pub struct BipartiteInstance {
    pairs: Vec<PairKey>,
    arcs: Vec<HyperArc>,
    adj: Vec<Vec<usize>>,
    cycle: HyperCycle,
}

impl BipartiteInstance {
    /// Pairs in canonical `(lo, hi)` order.
    pub fn pairs(&self) -> &[PairKey] {
        &self.pairs
    }

    /// Non-cycle hyperarcs in canonical subset order.
    pub fn arcs(&self) -> &[HyperArc] {
        &self.arcs
    }

    /// Arc indexes adjacent to pair `i`, ascending.
    pub fn adjacency(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn cycle(&self) -> &HyperCycle {
        &self.cycle
    }

    pub fn pair_degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Degree of every arc node, indexed like `arcs()`.
    pub fn arc_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.arcs.len()];
        for row in &self.adj {
            for &j in row {
                deg[j] += 1;
            }
        }
        deg
    }
}

/// Builds the matching instance for `h` and a spanning cycle `c` of `h`:
/// side A holds every pair of vertices not consecutive on `c`, side B every
/// hyperarc not used by `c`, and a pair is adjacent to the arcs whose vertex
/// set contains it.
pub fn build_bipartite(h: &HyperTournament, c: &HyperCycle) -> Result<BipartiteInstance> {
    if h.k() < 3 {
        return Err(Error::RangeUnsupported(
            "arity 2 leaves no non-cycle pairs to match".into(),
        ));
    }
    c.validate(h)?;
    if !c.is_hamiltonian(h) {
        return Err(Error::BadCycle(format!(
            "cycle covers {} of {} vertices",
            c.len(),
            h.n()
        )));
    }
    let n = h.n();
    let m = c.len();
    let mut consecutive = BTreeSet::new();
    for i in 0..m {
        let pair = PairKey::new(c.vertices()[i], c.vertices()[(i + 1) % m])
            .expect("cycle vertices are distinct");
        consecutive.insert(pair);
    }
    let cycle_keys: BTreeSet<Vec<VertexId>> = c.arcs().iter().map(|a| a.key()).collect();

    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            let pair = PairKey::new(VertexId::new(u), VertexId::new(v)).expect("u < v");
            if !consecutive.contains(&pair) {
                pairs.push(pair);
            }
        }
    }
    let arcs: Vec<HyperArc> = h
        .arcs()
        .filter(|a| !cycle_keys.contains(&a.key()))
        .cloned()
        .collect();
    let adj = pairs
        .iter()
        .map(|p| {
            arcs.iter()
                .enumerate()
                .filter(|(_, a)| a.contains(p.lo()) && a.contains(p.hi()))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    Ok(BipartiteInstance {
        pairs,
        arcs,
        adj,
        cycle: c.clone(),
    })
}

/// An assignment of a distinct arc to every pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pair_to_arc: Vec<usize>,
}

impl Matching {
    /// Arc index matched to pair `i`.
    pub fn arc_index(&self, i: usize) -> usize {
        self.pair_to_arc[i]
    }

    pub fn len(&self) -> usize {
        self.pair_to_arc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pair_to_arc.is_empty()
    }
}

/// A matching covering every pair node, or `None` when none exists.
/// Deterministic: pairs are processed in canonical order and augmenting
/// paths prefer lower arc indexes.
pub fn max_matching(b: &BipartiteInstance) -> Option<Matching> {
    let owner = kuhn(b.pairs.len(), b.arcs.len(), |i| &b.adj[i])?;
    Some(Matching { pair_to_arc: owner })
}

/// Kuhn's augmenting-path matching over an adjacency accessor. Returns the
/// arc matched to each left node when full coverage is possible.
fn kuhn<'a, F>(left: usize, right: usize, adj: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> &'a [usize] + 'a + Copy,
{
    fn augment<'a, F>(
        i: usize,
        adj: F,
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool
    where
        F: Fn(usize) -> &'a [usize] + 'a + Copy,
    {
        for &j in adj(i) {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            let take = match owner[j] {
                None => true,
                Some(prev) => augment(prev, adj, owner, seen),
            };
            if take {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }

    let mut owner: Vec<Option<usize>> = vec![None; right];
    for i in 0..left {
        let mut seen = vec![false; right];
        if !augment(i, adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut pair_to_arc = vec![usize::MAX; left];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            pair_to_arc[i] = j;
        }
    }
    Some(pair_to_arc)
}

/// For every arc `(u, v)` of the produced tournament, the hyperarc whose
/// precedence order generated it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationCertificate {
    entries: BTreeMap<(VertexId, VertexId), HyperArc>,
}

impl GenerationCertificate {
    pub fn new(entries: BTreeMap<(VertexId, VertexId), HyperArc>) -> Self {
        GenerationCertificate { entries }
    }

    pub fn generator(&self, u: VertexId, v: VertexId) -> Option<&HyperArc> {
        self.entries.get(&(u, v))
    }

    /// Entries in ascending (tail, head) order.
    pub fn entries(&self) -> impl Iterator<Item = ((VertexId, VertexId), &HyperArc)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Ranges the degeneration pipeline accepts: `3 <= k <= n - 3` and `n >= 7`.
pub fn degeneration_range_supported(k: u32, n: u32) -> bool {
    k >= 3 && k + 3 <= n && n >= 7
}

/// Degenerates a strong instance into a strong tournament member: spanning
/// cycle plus covering matching, as described in the module docs.
pub fn degenerate_tournament(
    h: &HyperTournament,
) -> Result<(Tournament, GenerationCertificate)> {
    let (k, n) = (h.k(), h.n());
    if !degeneration_range_supported(k, n) {
        return Err(Error::RangeUnsupported(format!(
            "degeneration needs 3 <= k <= n-3 and n >= 7, got k={k}, n={n}"
        )));
    }
    if !is_strong(h) {
        return Err(Error::NotStrong);
    }
    let cycle = hamiltonian_cycle(h)?.ok_or_else(|| {
        Error::InternalGuaranteeViolated("strong instance without a spanning cycle".into())
    })?;
    let b = build_bipartite(h, &cycle)?;
    let m = max_matching(&b).ok_or_else(|| {
        Error::InternalGuaranteeViolated("no matching covers the non-consecutive pairs".into())
    })?;

    let mut arcs: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut entries: BTreeMap<(VertexId, VertexId), HyperArc> = BTreeMap::new();
    for (i, pair) in b.pairs().iter().enumerate() {
        let arc = &b.arcs()[m.arc_index(i)];
        let (u, v) = if arc.precedes(pair.lo(), pair.hi()) {
            (pair.lo(), pair.hi())
        } else {
            (pair.hi(), pair.lo())
        };
        arcs.insert((u, v));
        entries.insert((u, v), arc.clone());
    }
    let mv = cycle.vertices();
    for i in 0..cycle.len() {
        let (u, v) = (mv[i], mv[(i + 1) % cycle.len()]);
        arcs.insert((u, v));
        entries.insert((u, v), cycle.arcs()[i].clone());
    }
    let t = Tournament::new(n, arcs).map_err(|e| {
        Error::InternalGuaranteeViolated(format!("assembled orientation is not a tournament: {e}"))
    })?;
    Ok((t, GenerationCertificate::new(entries)))
}

/// One specific defect found by [`verify_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipViolation {
    VertexCountMismatch { tournament: u32, hypertournament: u32 },
    /// Tournament arc with no certificate entry.
    MissingGenerator { u: VertexId, v: VertexId },
    /// Certificate entry that is not an arc of the tournament.
    ExtraEntry { u: VertexId, v: VertexId },
    /// Generator tuple that is not an arc of the hypertournament.
    UnknownHyperArc { u: VertexId, v: VertexId },
    /// Generator that does not place `u` before `v`.
    WrongPrecedence { u: VertexId, v: VertexId },
    /// One hyperarc used as the generator of several tournament arcs.
    ReusedHyperArc { subset: Vec<u32> },
}

impl std::fmt::Display for MembershipViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MembershipViolation::VertexCountMismatch {
                tournament,
                hypertournament,
            } => write!(
                f,
                "vertex-count-mismatch tournament={tournament} hypertournament={hypertournament}"
            ),
            MembershipViolation::MissingGenerator { u, v } => {
                write!(f, "missing-generator u={u} v={v}")
            }
            MembershipViolation::ExtraEntry { u, v } => write!(f, "extra-entry u={u} v={v}"),
            MembershipViolation::UnknownHyperArc { u, v } => {
                write!(f, "unknown-hyperarc u={u} v={v}")
            }
            MembershipViolation::WrongPrecedence { u, v } => {
                write!(f, "wrong-precedence u={u} v={v}")
            }
            MembershipViolation::ReusedHyperArc { subset } => {
                let s: Vec<String> = subset.iter().map(|x| x.to_string()).collect();
                write!(f, "reused-hyperarc subset={}", s.join(","))
            }
        }
    }
}

/// Outcome of a membership verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub ok: bool,
    pub violations: Vec<MembershipViolation>,
}

/// Checks that `cert` exhibits `t` as a member generated from `h`: every
/// tournament arc has a generator, generators are arcs of `h`, orient their
/// pair the right way, and no hyperarc generates twice.
pub fn verify_membership(
    t: &Tournament,
    h: &HyperTournament,
    cert: &GenerationCertificate,
) -> MembershipReport {
    let mut violations = Vec::new();
    if t.n() != h.n() {
        violations.push(MembershipViolation::VertexCountMismatch {
            tournament: t.n(),
            hypertournament: h.n(),
        });
    }
    for (u, v) in t.arcs() {
        if cert.generator(u, v).is_none() {
            violations.push(MembershipViolation::MissingGenerator { u, v });
        }
    }
    let mut usage: BTreeMap<Vec<VertexId>, usize> = BTreeMap::new();
    for ((u, v), arc) in cert.entries() {
        if !t.has_arc(u, v) {
            violations.push(MembershipViolation::ExtraEntry { u, v });
        }
        let known = match h.hyperarc_of(&arc.key()) {
            Ok(Some(own)) => own.seq() == arc.seq(),
            _ => false,
        };
        if !known {
            violations.push(MembershipViolation::UnknownHyperArc { u, v });
        }
        if !arc.precedes(u, v) {
            violations.push(MembershipViolation::WrongPrecedence { u, v });
        }
        *usage.entry(arc.key()).or_insert(0) += 1;
    }
    for (key, count) in usage {
        if count > 1 {
            violations.push(MembershipViolation::ReusedHyperArc {
                subset: key.iter().map(|v| v.get()).collect(),
            });
        }
    }
    MembershipReport {
        ok: violations.is_empty(),
        violations,
    }
}

/// Streaming enumeration of the member tournaments of `h`: every tournament
/// obtainable by orienting each pair with its own distinct hyperarc, each
/// yielded exactly once with a certificate. When a `limit` is set and more
/// members exist beyond it, the stream ends with one `BudgetExceeded` error.
pub fn enumerate_th(h: &HyperTournament, limit: Option<usize>) -> ThEnumerator<'_> {
    let n = h.n();
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            pairs.push(PairKey::new(VertexId::new(u), VertexId::new(v)).expect("u < v"));
        }
    }
    let arcs: Vec<HyperArc> = h.arcs().cloned().collect();
    // cands[i][0]: arcs orienting pair i as lo -> hi; cands[i][1]: hi -> lo.
    let cands: Vec<[Vec<u32>; 2]> = pairs
        .iter()
        .map(|p| {
            let mut fwd = Vec::new();
            let mut rev = Vec::new();
            for (j, a) in arcs.iter().enumerate() {
                if a.precedes(p.lo(), p.hi()) {
                    fwd.push(j as u32);
                } else if a.precedes(p.hi(), p.lo()) {
                    rev.push(j as u32);
                }
            }
            [fwd, rev]
        })
        .collect();
    ThEnumerator {
        h,
        pairs,
        arcs,
        cands,
        choice: Vec::new(),
        limit,
        emitted: 0,
        done: false,
        fresh: true,
    }
}

pub struct ThEnumerator<'a> {
    h: &'a HyperTournament,
    pairs: Vec<PairKey>,
    arcs: Vec<HyperArc>,
    cands: Vec<[Vec<u32>; 2]>,
    /// Current partial orientation; index is the pair position.
    choice: Vec<u8>,
    limit: Option<usize>,
    emitted: usize,
    done: bool,
    fresh: bool,
}

impl ThEnumerator<'_> {
    /// Whether some system of distinct arcs is compatible with the current
    /// partial orientation (decided pairs restricted to agreeing arcs,
    /// undecided pairs free).
    fn feasible(&self) -> bool {
        let rows: Vec<Vec<usize>> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(i, _)| {
                if i < self.choice.len() {
                    self.cands[i][self.choice[i] as usize]
                        .iter()
                        .map(|&x| x as usize)
                        .collect()
                } else {
                    let mut both: Vec<usize> = self.cands[i][0]
                        .iter()
                        .chain(self.cands[i][1].iter())
                        .map(|&x| x as usize)
                        .collect();
                    both.sort_unstable();
                    both
                }
            })
            .collect();
        kuhn(self.pairs.len(), self.arcs.len(), |i| &rows[i]).is_some()
    }

    /// Moves `choice` to the next feasible leaf; `false` when exhausted.
    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            if !self.feasible() {
                return false;
            }
        } else {
            // Step past the current leaf.
            if !self.backtrack() {
                return false;
            }
        }
        loop {
            if self.choice.len() == self.pairs.len() {
                return true;
            }
            self.choice.push(0);
            if self.feasible() {
                continue;
            }
            *self.choice.last_mut().expect("just pushed") = 1;
            if self.feasible() {
                continue;
            }
            self.choice.pop();
            if !self.backtrack() {
                return false;
            }
        }
    }

    /// Flips the deepest 0 to 1 (dropping the tail), retrying until feasible;
    /// `false` when the tree is exhausted.
    fn backtrack(&mut self) -> bool {
        loop {
            while self.choice.last() == Some(&1) {
                self.choice.pop();
            }
            match self.choice.last_mut() {
                None => return false,
                Some(last) => *last = 1,
            }
            if self.feasible() {
                return true;
            }
        }
    }

    /// Builds the member at the current leaf.
    fn leaf(&self) -> Result<(Tournament, GenerationCertificate)> {
        let rows: Vec<Vec<usize>> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(i, _)| {
                self.cands[i][self.choice[i] as usize]
                    .iter()
                    .map(|&x| x as usize)
                    .collect()
            })
            .collect();
        let assignment = kuhn(self.pairs.len(), self.arcs.len(), |i| &rows[i])
            .expect("leaves are feasible by construction");
        let mut arcs = BTreeSet::new();
        let mut entries = BTreeMap::new();
        for (i, pair) in self.pairs.iter().enumerate() {
            let (u, v) = if self.choice[i] == 0 {
                (pair.lo(), pair.hi())
            } else {
                (pair.hi(), pair.lo())
            };
            arcs.insert((u, v));
            entries.insert((u, v), self.arcs[assignment[i]].clone());
        }
        let t = Tournament::new(self.h.n(), arcs).map_err(|e| {
            Error::InternalGuaranteeViolated(format!("enumerated member is malformed: {e}"))
        })?;
        Ok((t, GenerationCertificate::new(entries)))
    }
}

impl Iterator for ThEnumerator<'_> {
    type Item = Result<(Tournament, GenerationCertificate)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if !self.advance() {
            self.done = true;
            return None;
        }
        if let Some(limit) = self.limit {
            if self.emitted >= limit {
                self.done = true;
                return Some(Err(Error::BudgetExceeded));
            }
        }
        self.emitted += 1;
        Some(self.leaf())
    }
}

/// Counts members of `h` that are strong, up to `cap` members inspected.
/// Returns `(strong_count, exhausted)`; `exhausted` is false when the cap
/// stopped the walk early.
pub fn count_strong_members(h: &HyperTournament, cap: usize) -> (usize, bool) {
    let mut strong = 0;
    for (inspected, item) in enumerate_th(h, None).enumerate() {
        if inspected >= cap {
            return (strong, false);
        }
        match item {
            Ok((t, _)) if t.is_strong() => strong += 1,
            _ => {}
        }
    }
    (strong, true)
}

/// Samples one member of `h` by orienting pairs in canonical order with
/// coin flips, flipping any infeasible branch. One draw per pair. Returns
/// `None` when `h` has no members at all.
fn random_member(h: &HyperTournament, rng: &mut ChaCha8Rng) -> Option<Tournament> {
    let mut e = enumerate_th(h, None);
    if !e.feasible() {
        return None;
    }
    for i in 0..e.pairs.len() {
        let first = (rng.next_u64() & 1) as u8;
        e.choice.push(first);
        if e.feasible() {
            continue;
        }
        *e.choice.last_mut().expect("just pushed") = 1 - first;
        if !e.feasible() {
            // Both directions dead at a prefix that was feasible: impossible
            // for a matching relaxation, but bail out safely.
            e.choice.truncate(i);
            return None;
        }
    }
    let (t, _) = e.leaf().ok()?;
    Some(t)
}

/// Randomized search for a strong instance none of whose members is strong.
///
/// Restart `r` draws a strong random instance from `derive_seed(seed, r)`,
/// then walks: each step rewrites one subset's tuple, keeps the instance
/// strong, and accepts the rewrite when the quick score (strong members seen
/// among lexicographically-first members plus random probes) does not grow.
/// A candidate scoring zero is re-checked by full exhaustive enumeration
/// (capped; a cap hit just skips the candidate) and returned only when the
/// full walk confirms no strong member. Every scored candidate counts
/// against `budget`; expiry yields `BudgetExceeded`.
pub fn search_no_strong_witness(
    k: u32,
    n: u32,
    budget: u64,
    seed: u64,
) -> Result<HyperTournament> {
    const LEX_SCAN: usize = 24;
    const PROBES: usize = 12;
    const STEPS_PER_RESTART: u64 = 160;
    const VERIFY_CAP: usize = 1 << 17;

    fn score(h: &HyperTournament, probe_rng: &mut ChaCha8Rng) -> usize {
        let mut s = 0;
        for item in enumerate_th(h, None).take(LEX_SCAN) {
            if let Ok((t, _)) = item {
                if t.is_strong() {
                    s += 1;
                }
            }
        }
        for _ in 0..PROBES {
            if let Some(t) = random_member(h, probe_rng) {
                if t.is_strong() {
                    s += 1;
                }
            }
        }
        s
    }

    /// Full check with a node cap: `Some(true)` means confirmed witness.
    fn confirm(h: &HyperTournament, cap: usize) -> Option<bool> {
        let mut inspected = 0;
        for item in enumerate_th(h, None) {
            inspected += 1;
            if inspected > cap {
                return None;
            }
            if let Ok((t, _)) = item {
                if t.is_strong() {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    if k < 2 || k > n {
        return Err(Error::BadTuple(format!("invalid arity/order k={k}, n={n}")));
    }
    let mut spent: u64 = 0;
    let mut restart: u64 = 0;
    while spent < budget {
        let restart_seed = derive_seed(seed, restart);
        let (mut cur, _) = match crate::connectivity::random_strong_tournament(
            k,
            n,
            restart_seed,
            200,
        ) {
            Ok(found) => found,
            Err(_) => {
                restart += 1;
                continue;
            }
        };
        let mut move_rng = ChaCha8Rng::seed_from_u64(derive_seed(restart_seed, 1));
        let mut probe_rng = ChaCha8Rng::seed_from_u64(derive_seed(restart_seed, 2));
        let mut cur_score = score(&cur, &mut probe_rng);
        spent += 1;
        let mut step = 0;
        while step < STEPS_PER_RESTART && spent < budget {
            step += 1;
            if cur_score == 0 {
                if let Some(true) = confirm(&cur, VERIFY_CAP) {
                    return Ok(cur);
                }
                // Ambiguous or refuted: leave this basin.
                break;
            }
            // Rewrite one subset's tuple and keep the instance strong.
            let arc_count = binomial(n as u64, k as u64) as u64;
            let target = move_rng.next_u64() % arc_count;
            let mut next_arcs: Vec<HyperArc> = Vec::with_capacity(arc_count as usize);
            for (idx, a) in cur.arcs().enumerate() {
                if idx as u64 == target {
                    let mut seq = a.key();
                    for i in (1..seq.len()).rev() {
                        let j = (move_rng.next_u64() % (i as u64 + 1)) as usize;
                        seq.swap(i, j);
                    }
                    next_arcs.push(HyperArc::new(seq).expect("permutation of a valid subset"));
                } else {
                    next_arcs.push(a.clone());
                }
            }
            let next = HyperTournament::new(
                HyperDigraph::with_arcs(n, k, next_arcs).expect("subset set unchanged"),
            )
            .expect("completeness unchanged");
            if next == cur || !is_strong(&next) {
                continue;
            }
            let next_score = score(&next, &mut probe_rng);
            spent += 1;
            if next_score <= cur_score {
                cur = next;
                cur_score = next_score;
            }
        }
        restart += 1;
    }
    Err(Error::BudgetExceeded)
}
