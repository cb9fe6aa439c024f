//! Membership tests for the forbidden family `M = M1 ∪ M2 ∪ M3`.
//!
//! * `M1 = {K_5^3-}`.
//! * `M2`: 3-graphs on at most 28 vertices with a 7-vertex core `S` (all
//!   pairs of `S` covered) such that the edges inside `S` need two vertices
//!   to be hit.
//! * `M3`: 3-graphs on at most 21 vertices with a 6-vertex core that are
//!   neither semibipartite nor `G2(6)`-colorable.
//!
//! `H` contains a member of `M2` exactly when some 7-set is covered in `H`
//! and `τ(H[S]) ≥ 2`: the member `H[S]` plus one covering edge per pair has
//! at most `7 + 21` vertices. Both non-semibipartiteness and
//! non-colorability pass to supergraphs, so for `v(H) ≤ 21` the graph `H`
//! itself is the best candidate member of `M3` and the test is exact. Above
//! 21 vertices the exact mode builds one 21-vertex candidate per core and
//! reports whether the negative answer is conclusive.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, full_mask, iter_members, k_subsets, mask_of, members};
use crate::constructions::{self, make_g26, make_k53minus};
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::hypergraph::{BlowupSpec, Hypergraph};

/// Vertex bound for members of `M3`.
pub const M3_VERTEX_BOUND: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    Semibipartite,
    G26Coloring,
}

/// A vertex partition: part `0` is `A` and part `1` is `B` for a
/// semibipartition, parts `0..6` are the vertices of `G2(6)` for a coloring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub kind: PartitionKind,
    pub assignment: Vec<u8>,
}

impl PartitionWitness {
    pub fn validate(&self, h: &Hypergraph) -> bool {
        if self.assignment.len() != h.vertex_count() || h.uniformity() != 3 {
            return false;
        }
        match self.kind {
            PartitionKind::Semibipartite => {
                let a = self.part_mask(0);
                self.assignment.iter().all(|&p| p < 2)
                    && h.edges().iter().all(|&e| (e & a).count_ones() == 1)
            }
            PartitionKind::G26Coloring => {
                let g = make_g26();
                self.assignment.iter().all(|&p| p < 6)
                    && h.edges().iter().all(|&e| {
                        let img =
                            iter_members(e).fold(0u64, |m, v| m | bit(self.assignment[v] as usize));
                        img.count_ones() == 3 && g.has_edge(img)
                    })
            }
        }
    }

    pub fn part_mask(&self, part: u8) -> u64 {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == part)
            .fold(0, |m, (v, _)| m | bit(v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MKind {
    M1,
    M2,
    M3,
}

impl fmt::Display for MKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MKind::M1 => "M1",
            MKind::M2 => "M2",
            MKind::M3 => "M3",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum M3Mode {
    #[default]
    Exact,
    Fast,
}

impl FromStr for M3Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(M3Mode::Exact),
            "fast" => Ok(M3Mode::Fast),
            other => Err(Error::InvalidMode(other.to_string())),
        }
    }
}

/// A member of `M` found inside `H`, in `H`'s labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MViolation {
    pub kind: MKind,
    pub core_set: Vec<usize>,
    pub witness_edges: Vec<Vec<usize>>,
    /// Set by the fast `M3` mode when the witness exceeds the vertex bound,
    /// so membership of the witness itself is not established.
    pub flagged: bool,
}

impl MViolation {
    fn new(kind: MKind, core: u64, edges: &[u64], flagged: bool) -> Self {
        let mut edges = edges.to_vec();
        edges.sort_by(|&a, &b| crate::bits::lex_cmp(a, b));
        edges.dedup();
        MViolation {
            kind,
            core_set: members(core),
            witness_edges: edges.into_iter().map(members).collect(),
            flagged,
        }
    }

    /// The witness edges as a hypergraph on `H`'s vertex set.
    pub fn witness(&self, n: usize) -> Result<Hypergraph> {
        Hypergraph::new(3, n, self.witness_edges.iter())
    }

    /// Recomputes the certificate against `h`.
    pub fn validate(&self, h: &Hypergraph) -> bool {
        let Ok(f) = self.witness(h.vertex_count()) else {
            return false;
        };
        if !f.is_subgraph_of(h) || self.core_set.iter().any(|&v| v >= h.vertex_count()) {
            return false;
        }
        let core = mask_of(&self.core_set);
        let used = f.edges().iter().fold(0u64, |m, &e| m | e);
        let covered = covers_pairs(&f, core);
        match self.kind {
            MKind::M1 => {
                self.core_set.len() == 5
                    && used == core
                    && contains_subgraph(&make_k53minus(), &f.induced(core)).is_some()
            }
            MKind::M2 => {
                self.core_set.len() == 7
                    && covered
                    && (used | core).count_ones() <= 28
                    && f.induced(core).transversal() >= 2
            }
            MKind::M3 => {
                let support = used | core;
                let small = f.induced(support);
                self.core_set.len() == 6
                    && covered
                    && (self.flagged || support.count_ones() as usize <= M3_VERTEX_BOUND)
                    && is_semibipartite(&small).is_none()
                    && is_g26_colorable(&small).is_none()
            }
        }
    }
}

fn covers_pairs(f: &Hypergraph, set: u64) -> bool {
    let adj = f.adjacency_masks();
    iter_members(set).all(|v| set & !bit(v) & !adj[v] == 0)
}

/// Calls `visit` on every `k`-clique of the graph `adj` (masks of
/// neighbors) in lexicographic order until it returns `true`.
pub(crate) fn find_clique<F>(adj: &[u64], k: usize, mut visit: F) -> Option<u64>
where
    F: FnMut(u64) -> bool,
{
    fn go<F: FnMut(u64) -> bool>(
        adj: &[u64],
        k: usize,
        chosen: u64,
        candidates: u64,
        visit: &mut F,
    ) -> Option<u64> {
        if k == 0 {
            return visit(chosen).then_some(chosen);
        }
        if (candidates.count_ones() as usize) < k {
            return None;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (rest.count_ones() as usize) + 1 < k {
                break;
            }
            if let Some(found) = go(adj, k - 1, chosen | bit(v), rest & adj[v], visit) {
                return Some(found);
            }
        }
        None
    }
    go(adj, k, 0, full_mask(adj.len()), &mut visit)
}

/// A partition with every edge meeting `A` in exactly one vertex.
/// Vertices in no edge go to `B`.
pub fn is_semibipartite(h: &Hypergraph) -> Option<PartitionWitness> {
    if h.uniformity() != 3 {
        return None;
    }
    let covered = h.edges().iter().fold(0u64, |m, &e| m | e);
    let degrees = h.degrees();
    let a = semi_search(h.edges(), covered, &degrees, 0, 0)?;
    let assignment = (0..h.vertex_count())
        .map(|v| if a & bit(v) != 0 { 0 } else { 1 })
        .collect();
    Some(PartitionWitness {
        kind: PartitionKind::Semibipartite,
        assignment,
    })
}

fn semi_propagate(edges: &[u64], mut a: u64, mut b: u64) -> Option<(u64, u64)> {
    loop {
        let before = (a, b);
        for &e in edges {
            let ea = (e & a).count_ones();
            let eb = (e & b).count_ones();
            if ea >= 2 || eb == 3 {
                return None;
            }
            if ea == 1 {
                b |= e & !a;
            } else if eb == 2 {
                a |= e & !b;
            }
        }
        if a & b != 0 {
            return None;
        }
        if (a, b) == before {
            return Some((a, b));
        }
    }
}

fn semi_search(edges: &[u64], covered: u64, degrees: &[usize], a: u64, b: u64) -> Option<u64> {
    let (a, b) = semi_propagate(edges, a, b)?;
    let free = covered & !a & !b;
    if free == 0 {
        return Some(a);
    }
    let v = iter_members(free)
        .max_by_key(|&v| (degrees[v], std::cmp::Reverse(v)))
        .unwrap();
    semi_search(edges, covered, degrees, a | bit(v), b)
        .or_else(|| semi_search(edges, covered, degrees, a, b | bit(v)))
}

/// A map into the vertices of `G2(6)` sending every edge to an edge.
pub fn is_g26_colorable(h: &Hypergraph) -> Option<PartitionWitness> {
    if h.uniformity() != 3 {
        return None;
    }
    let n = h.vertex_count();
    let g = make_g26();
    // third[p][q]: colors s with {p, q, s} an edge of G2(6)
    let mut third = [[0u8; 6]; 6];
    for &e in g.edges() {
        let v = members(e);
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            third[v[i]][v[j]] |= 1 << v[k];
            third[v[j]][v[i]] |= 1 << v[k];
        }
    }
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &e in h.edges() {
        let v = members(e);
        incident[v[0]].push((v[1], v[2]));
        incident[v[1]].push((v[0], v[2]));
        incident[v[2]].push((v[0], v[1]));
    }
    let solver = Colorer { third, incident };
    let mut domains = vec![0x3fu8; n];
    let mut assigned = vec![false; n];
    if !solver.search(&mut domains, &mut assigned) {
        return None;
    }
    let assignment = domains.iter().map(|d| d.trailing_zeros() as u8).collect();
    Some(PartitionWitness {
        kind: PartitionKind::G26Coloring,
        assignment,
    })
}

struct Colorer {
    third: [[u8; 6]; 6],
    incident: Vec<Vec<(usize, usize)>>,
}

impl Colorer {
    fn assign(&self, v: usize, c: usize, domains: &mut [u8], assigned: &mut [bool]) -> bool {
        domains[v] = 1 << c;
        assigned[v] = true;
        for &(x, y) in &self.incident[v] {
            match (assigned[x], assigned[y]) {
                (true, true) => {
                    let (cx, cy) = (single(domains[x]), single(domains[y]));
                    if self.third[c][cx] & (1 << cy) == 0 {
                        return false;
                    }
                }
                (true, false) => {
                    domains[y] &= self.third[c][single(domains[x])];
                    if domains[y] == 0 {
                        return false;
                    }
                }
                (false, true) => {
                    domains[x] &= self.third[c][single(domains[y])];
                    if domains[x] == 0 {
                        return false;
                    }
                }
                (false, false) => {
                    domains[x] &= !(1 << c);
                    domains[y] &= !(1 << c);
                    if domains[x] == 0 || domains[y] == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(&self, domains: &mut Vec<u8>, assigned: &mut Vec<bool>) -> bool {
        let next = (0..domains.len())
            .filter(|&v| !assigned[v])
            .min_by_key(|&v| {
                (
                    domains[v].count_ones(),
                    std::cmp::Reverse(self.incident[v].len()),
                    v,
                )
            });
        let Some(v) = next else {
            return true;
        };
        if self.incident[v].is_empty() {
            // only isolated vertices remain
            for u in 0..domains.len() {
                if !assigned[u] {
                    domains[u] = 1 << domains[u].trailing_zeros();
                    assigned[u] = true;
                }
            }
            return true;
        }
        let options = domains[v];
        for c in 0..6 {
            if options & (1 << c) == 0 {
                continue;
            }
            let mut d = domains.clone();
            let mut a = assigned.clone();
            if self.assign(v, c, &mut d, &mut a) && self.search(&mut d, &mut a) {
                *domains = d;
                *assigned = a;
                return true;
            }
        }
        false
    }
}

fn single(domain: u8) -> usize {
    domain.trailing_zeros() as usize
}

pub fn contains_m1(h: &Hypergraph) -> Option<MViolation> {
    if h.uniformity() != 3 {
        return None;
    }
    let pattern = make_k53minus();
    let map = contains_subgraph(&pattern, h)?;
    let core = (0..5).fold(0u64, |m, v| m | bit(map.image(v)));
    let edges: Vec<u64> = pattern
        .edges()
        .iter()
        .map(|&e| map.image_of_mask(e))
        .collect();
    Some(MViolation::new(MKind::M1, core, &edges, false))
}

/// Lexicographically first edge of `h` containing the pair `{u, v}`.
fn covering_edge(h: &Hypergraph, u: usize, v: usize) -> Option<u64> {
    let pair = bit(u) | bit(v);
    h.edges().iter().copied().find(|&e| e & pair == pair)
}

fn covering_edges(h: &Hypergraph, set: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for pair in k_subsets(set, 2) {
        let p = members(pair);
        if let Some(e) = covering_edge(h, p[0], p[1]) {
            out.push(e);
        }
    }
    out
}

fn edges_inside(h: &Hypergraph, set: u64) -> Vec<u64> {
    k_subsets(set, 3).filter(|&t| h.has_edge(t)).collect()
}

/// `τ ≥ 2` for a nonempty list of edges without a common vertex.
fn not_a_star(edges: &[u64]) -> bool {
    !edges.is_empty() && edges.iter().fold(u64::MAX, |acc, &e| acc & e) == 0
}

pub fn contains_m2(h: &Hypergraph) -> Option<MViolation> {
    if h.uniformity() != 3 || h.vertex_count() < 7 {
        return None;
    }
    let adj = h.adjacency_masks();
    let core = find_clique(&adj, 7, |s| not_a_star(&edges_inside(h, s)))?;
    let mut edges = edges_inside(h, core);
    edges.extend(covering_edges(h, core));
    Some(MViolation::new(MKind::M2, core, &edges, false))
}

/// Outcome of an `M3` test together with whether a negative answer is
/// conclusive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct M3Report {
    pub violation: Option<MViolation>,
    pub conclusive: bool,
}

pub fn contains_m3(h: &Hypergraph, mode: M3Mode) -> Option<MViolation> {
    contains_m3_report(h, mode).violation
}

pub fn contains_m3_report(h: &Hypergraph, mode: M3Mode) -> M3Report {
    let none = M3Report {
        violation: None,
        conclusive: true,
    };
    if h.uniformity() != 3 || h.vertex_count() < 6 {
        return none;
    }
    let adj = h.adjacency_masks();
    match mode {
        M3Mode::Fast => {
            let mut found = None;
            find_clique(&adj, 6, |s| {
                let edges: Vec<u64> = h
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&e| (e & s).count_ones() >= 2)
                    .collect();
                let support = edges.iter().fold(s, |m, &e| m | e);
                let f = relabel_onto(&edges, support);
                if is_semibipartite(&f).is_none() && is_g26_colorable(&f).is_none() {
                    let flagged = support.count_ones() as usize > M3_VERTEX_BOUND;
                    found = Some(MViolation::new(MKind::M3, s, &edges, flagged));
                    true
                } else {
                    false
                }
            });
            M3Report {
                conclusive: true,
                violation: found,
            }
        }
        M3Mode::Exact => {
            if is_semibipartite(h).is_some() || is_g26_colorable(h).is_some() {
                return none;
            }
            if h.vertex_count() <= M3_VERTEX_BOUND {
                return match find_clique(&adj, 6, |_| true) {
                    Some(core) => M3Report {
                        violation: Some(MViolation::new(MKind::M3, core, h.edges(), false)),
                        conclusive: true,
                    },
                    None => none,
                };
            }
            let mut any_core = false;
            let mut found = None;
            find_clique(&adj, 6, |s| {
                any_core = true;
                let support = candidate_support(h, s);
                let f = h.induced(support);
                if is_semibipartite(&f).is_none() && is_g26_colorable(&f).is_none() {
                    let edges: Vec<u64> = h.edges_within(support).collect();
                    found = Some(MViolation::new(MKind::M3, s, &edges, false));
                    true
                } else {
                    false
                }
            });
            M3Report {
                conclusive: found.is_some() || !any_core,
                violation: found,
            }
        }
    }
}

/// The core, one covering third vertex per pair, then the smallest
/// remaining labels until the vertex bound is reached.
fn candidate_support(h: &Hypergraph, core: u64) -> u64 {
    let mut support = covering_edges(h, core).iter().fold(core, |m, &e| m | e);
    let mut v = 0;
    while (support.count_ones() as usize) < M3_VERTEX_BOUND && v < h.vertex_count() {
        support |= bit(v);
        v += 1;
    }
    support
}

/// The given edges, relabeled onto `0..|support|` preserving order.
fn relabel_onto(edges: &[u64], support: u64) -> Hypergraph {
    let keep = members(support);
    let mut relabel = [0usize; 64];
    for (i, &v) in keep.iter().enumerate() {
        relabel[v] = i;
    }
    let masks = edges
        .iter()
        .map(|&e| iter_members(e).fold(0u64, |m, v| m | bit(relabel[v])));
    Hypergraph::from_masks(3, keep.len(), masks).expect("relabeled edges are valid")
}

/// The first member of `M` found, checking `M1`, `M2`, then `M3` (exact).
pub fn is_m_free(h: &Hypergraph) -> Option<MViolation> {
    contains_m1(h)
        .or_else(|| contains_m2(h))
        .or_else(|| contains_m3(h, M3Mode::Exact))
}

/// Whether the blowup of `h` with all parts of size 3 is `M`-free.
pub fn is_m_hom_free(h: &Hypergraph) -> Result<bool> {
    let blown = h.blowup(&BlowupSpec::uniform(h.vertex_count(), 3)?)?;
    Ok(is_m_free(&blown).is_none())
}

pub fn g1_bound(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("g1 needs n >= 3, got {n}")));
    }
    Ok(constructions::g1_size(n))
}

pub fn g2_bound(n: usize) -> Result<u128> {
    constructions::g2_size(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_complete, make_g1, make_g2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Hypergraph {
        let edges: Vec<u64> = k_subsets(full_mask(n), 3)
            .filter(|_| rng.gen_bool(p))
            .collect();
        Hypergraph::from_masks(3, n, edges).unwrap()
    }

    fn brute_semibipartite(h: &Hypergraph) -> bool {
        (0..1u64 << h.vertex_count()).any(|a| h.edges().iter().all(|&e| (e & a).count_ones() == 1))
    }

    fn brute_colorable(h: &Hypergraph) -> bool {
        let n = h.vertex_count();
        let g = make_g26();
        let mut colors = vec![0usize; n];
        loop {
            let ok = h.edges().iter().all(|&e| {
                let img = iter_members(e).fold(0u64, |m, v| m | bit(colors[v]));
                img.count_ones() == 3 && g.has_edge(img)
            });
            if ok {
                return true;
            }
            let mut i = 0;
            while i < n && colors[i] == 5 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                return false;
            }
            colors[i] += 1;
        }
    }

    #[test]
    fn semibipartite_examples() {
        let w = is_semibipartite(&make_g1(9).unwrap()).unwrap();
        assert_eq!(w.part_mask(0), 0b111);
        assert!(is_semibipartite(&make_complete(4, 3).unwrap()).is_none());
        let empty = Hypergraph::empty(3, 5).unwrap();
        assert_eq!(is_semibipartite(&empty).unwrap().part_mask(0), 0);
    }

    #[test]
    fn colorable_examples() {
        let g = make_g26();
        assert!(is_g26_colorable(&g).unwrap().validate(&g));
        let g12 = make_g2(12).unwrap();
        assert!(is_g26_colorable(&g12).unwrap().validate(&g12));
        assert!(is_g26_colorable(&make_complete(7, 3).unwrap()).is_none());
        assert!(is_g26_colorable(&make_complete(4, 3).unwrap()).is_some());
    }

    #[test]
    fn partition_tests_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(3..=7);
            let p = [0.1, 0.25, 0.5][rng.gen_range(0..3)];
            let h = random_graph(&mut rng, n, p);
            let semi = is_semibipartite(&h);
            assert_eq!(semi.is_some(), brute_semibipartite(&h), "{h:?}");
            assert!(semi.is_none_or(|w| w.validate(&h)));
            let col = is_g26_colorable(&h);
            assert_eq!(col.is_some(), brute_colorable(&h), "{h:?}");
            assert!(col.is_none_or(|w| w.validate(&h)));
        }
    }

    #[test]
    fn m1_examples() {
        let k5 = make_complete(5, 3).unwrap();
        let v = contains_m1(&k5).unwrap();
        assert!(v.validate(&k5));
        assert!(contains_m1(&make_k53minus()).is_some());
        for n in 3..=10 {
            assert!(contains_m1(&make_g1(n).unwrap()).is_none());
        }
    }

    #[test]
    fn m2_examples() {
        assert!(contains_m2(&make_complete(6, 3).unwrap()).is_none());
        let k7 = make_complete(7, 3).unwrap();
        assert!(contains_m2(&k7).unwrap().validate(&k7));
        assert!(contains_m2(&make_g1(21).unwrap()).is_none());
    }

    /// Figure-style member of `M2`: core `{0..7}` carrying only two disjoint
    /// edges, every other core pair covered through an outside vertex.
    #[test]
    fn sparse_core_member_of_m2() {
        let core = full_mask(7);
        let mut edges = vec![mask_of(&[0, 2, 3]), mask_of(&[1, 4, 5])];
        let mut next = 7;
        for pair in k_subsets(core, 2) {
            if edges.iter().any(|&e| e & pair == pair) {
                continue;
            }
            edges.push(pair | bit(next));
            next += 1;
        }
        let h = Hypergraph::from_masks(3, next, edges).unwrap();
        assert!(next <= 28);
        let v = contains_m2(&h).unwrap();
        assert_eq!(v.core_set, (0..7).collect::<Vec<_>>());
        assert!(v.validate(&h));
    }

    #[test]
    fn m3_examples() {
        let k6 = make_complete(6, 3).unwrap();
        let v = contains_m3(&k6, M3Mode::Exact).unwrap();
        assert!(v.validate(&k6));
        assert!(contains_m3(&k6, M3Mode::Fast).is_some());
        assert!(contains_m3(&make_g26(), M3Mode::Exact).is_none());
        assert!(contains_m3(&make_g26(), M3Mode::Fast).is_none());
        assert!(contains_m3(&make_complete(5, 3).unwrap(), M3Mode::Exact).is_none());
        assert_eq!("fast".parse::<M3Mode>().unwrap(), M3Mode::Fast);
        assert!("slow".parse::<M3Mode>().is_err());
    }

    #[test]
    fn m_free_examples() {
        assert!(is_m_free(&make_g1(6).unwrap()).is_none());
        assert_eq!(
            is_m_free(&make_complete(5, 3).unwrap()).unwrap().kind,
            MKind::M1
        );
        assert!(is_m_free(&make_g2(12).unwrap()).is_none());
        assert!(is_m_free(&make_complete(4, 3).unwrap()).is_none());
    }

    #[test]
    fn hom_free_examples() {
        assert!(is_m_hom_free(&make_g26()).unwrap());
        assert!(!is_m_hom_free(&make_k53minus()).unwrap());
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(is_m_hom_free(&edge).unwrap());
    }

    #[test]
    fn bounds() {
        assert_eq!(g1_bound(6).unwrap(), 12);
        assert_eq!(g2_bound(6).unwrap(), 16);
        assert_eq!(g1_bound(3).unwrap(), 1);
        assert!(g1_bound(2).is_err());
        assert!(g2_bound(5).is_err());
    }

    #[test]
    fn monotone_under_adding_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(5..=8);
            let h = random_graph(&mut rng, n, 0.4);
            if is_m_free(&h).is_some() {
                let mut bigger = h.clone();
                for t in k_subsets(full_mask(n), 3) {
                    if rng.gen_bool(0.3) && !bigger.has_edge(t) {
                        bigger = bigger.with_edge(t).unwrap();
                    }
                }
                assert!(is_m_free(&bigger).is_some());
            }
        }
    }

    /// For small hosts, compare the 7-set criterion with an explicit search
    /// for a member built from a core, one covering edge per pair and the
    /// induced edges.
    #[test]
    fn m2_criterion_matches_explicit_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(7..=9);
            let h = random_graph(&mut rng, n, 0.55);
            let explicit = k_subsets(full_mask(n), 7).any(|s| {
                let pairs: Vec<u64> = k_subsets(s, 2).collect();
                let choices: Vec<Vec<u64>> = pairs
                    .iter()
                    .map(|&p| h.edges().iter().copied().filter(|&e| e & p == p).collect())
                    .collect();
                if choices.iter().any(|c| c.is_empty()) {
                    return false;
                }
                let inside: Vec<u64> = h.edges_within(s).collect();
                let mut member: Vec<u64> = inside.clone();
                member.extend(choices.iter().map(|c| c[0]));
                let f = Hypergraph::from_masks_dedup(3, n, member).unwrap();
                let support = f.edges().iter().fold(s, |m, &e| m | e);
                support.count_ones() <= 28 && f.induced(s).transversal() >= 2
            });
            assert_eq!(contains_m2(&h).is_some(), explicit, "{h:?}");
        }
    }
}
