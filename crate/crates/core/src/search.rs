//! Exhaustive include/exclude search for the largest family-free 3-graph
//! on `n` vertices.
//!
//! Containment of a member of `M`, or of any fixed pattern, survives adding
//! edges, so a branch is cut as soon as an inclusion creates one. The only
//! other pruning is `current + remaining ≤ best`, plus, when enabled,
//! fixing the first candidate triple as an edge.

use serde::{Deserialize, Serialize};

use crate::bits::{full_mask, k_subsets};
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::family_m::{contains_m2, find_clique, is_g26_colorable, is_semibipartite};
use crate::hypergraph::Hypergraph;
use crate::Rational;

/// Largest `n` accepted for the family `M`.
pub const MAX_M_SEARCH_VERTICES: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Family {
    M,
    Custom(Vec<Hypergraph>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    pub family: Family,
    /// Stop after this many nodes; the result is then not optimal.
    pub node_budget: Option<u64>,
    pub symmetry_pruning: bool,
    /// Vertex relabeling applied to the lexicographic candidate order.
    pub relabel: Option<Vec<usize>>,
}

impl SearchConfig {
    pub fn new(n: usize, family: Family) -> Self {
        SearchConfig {
            n,
            family,
            node_budget: None,
            symmetry_pruning: true,
            relabel: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub max_edges: usize,
    pub witness: Hypergraph,
    pub nodes_expanded: u64,
    pub optimal: bool,
}

/// `2n³/27`.
pub fn two_n_cubed_bound(n: usize) -> Rational {
    Rational::new(2 * (n as i128).pow(3), 27)
}

pub fn max_free_edges(config: &SearchConfig) -> Result<SearchResult> {
    let n = config.n;
    let r = match &config.family {
        Family::M => {
            if n > MAX_M_SEARCH_VERTICES {
                return Err(Error::InvalidParameter(format!(
                    "the search over M supports n <= {MAX_M_SEARCH_VERTICES}, got {n}"
                )));
            }
            3
        }
        Family::Custom(list) => {
            let r = list.first().map_or(3, Hypergraph::uniformity);
            if list.iter().any(|f| f.uniformity() != r) {
                return Err(Error::InvalidParameter(
                    "patterns of mixed uniformity".into(),
                ));
            }
            r
        }
    };
    if n > crate::hypergraph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut candidates: Vec<u64> = k_subsets(full_mask(n), r).collect();
    if let Some(perm) = &config.relabel {
        let map = crate::hypergraph::VertexMap(perm.clone());
        if perm.len() != n || !map.is_injective() || perm.iter().any(|&p| p >= n) {
            return Err(Error::InvalidParameter(
                "relabel is not a permutation".into(),
            ));
        }
        candidates = candidates.iter().map(|&c| map.image_of_mask(c)).collect();
    }
    let mut search = Search {
        n,
        r,
        family: &config.family,
        candidates,
        budget: config.node_budget,
        nodes: 0,
        exhausted: false,
        current: Vec::new(),
        best: Vec::new(),
    };
    let forced = config.symmetry_pruning && !search.candidates.is_empty();
    search.go(0, forced);
    Ok(SearchResult {
        max_edges: search.best.len(),
        witness: Hypergraph::from_masks(r, n, search.best.clone())?,
        nodes_expanded: search.nodes,
        optimal: !search.exhausted,
    })
}

struct Search<'a> {
    n: usize,
    r: usize,
    family: &'a Family,
    candidates: Vec<u64>,
    budget: Option<u64>,
    nodes: u64,
    exhausted: bool,
    current: Vec<u64>,
    best: Vec<u64>,
}

impl Search<'_> {
    fn go(&mut self, idx: usize, forced: bool) {
        if self.exhausted {
            return;
        }
        if self.budget.is_some_and(|b| self.nodes >= b) {
            self.exhausted = true;
            return;
        }
        self.nodes += 1;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let remaining = self.candidates.len() - idx;
        if remaining == 0 || self.current.len() + remaining <= self.best.len() {
            return;
        }
        let e = self.candidates[idx];
        self.current.push(e);
        if !self.violates(e) {
            self.go(idx + 1, false);
        }
        self.current.pop();
        // any nonempty graph has a relabeling through the first candidate
        if !(forced && idx == 0) {
            self.go(idx + 1, false);
        }
    }

    /// Whether `current` (which ends with the new edge `e`) contains a
    /// forbidden configuration.
    fn violates(&self, e: u64) -> bool {
        let h = Hypergraph::from_masks(self.r, self.n, self.current.iter().copied())
            .expect("candidates are distinct");
        match self.family {
            Family::Custom(list) => list.iter().any(|f| contains_subgraph(f, &h).is_some()),
            Family::M => m1_through(&h, e) || contains_m2(&h).is_some() || m3_exact_small(&h),
        }
    }
}

/// A 5-set through `e` spanning at least 9 edges, i.e. a copy of `K_5^3-`.
fn m1_through(h: &Hypergraph, e: u64) -> bool {
    let rest = full_mask(h.vertex_count()) & !e;
    k_subsets(rest, 2).any(|pair| h.induced_edge_count(e | pair) >= 9)
}

/// The exact `M3` criterion for at most 21 vertices.
fn m3_exact_small(h: &Hypergraph) -> bool {
    let adj = h.adjacency_masks();
    find_clique(&adj, 6, |_| true).is_some()
        && is_semibipartite(h).is_none()
        && is_g26_colorable(h).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_g26, make_k53minus};
    use crate::family_m::is_m_free;

    #[test]
    fn bound_values() {
        assert_eq!(two_n_cubed_bound(6), Rational::from_integer(16));
        assert_eq!(two_n_cubed_bound(3), Rational::from_integer(2));
        assert_eq!(two_n_cubed_bound(12), Rational::from_integer(128));
    }

    #[test]
    fn small_m_values() {
        let expect = [(3, 1), (4, 4), (5, 8)];
        for (n, ex) in expect {
            let r = max_free_edges(&SearchConfig::new(n, Family::M)).unwrap();
            assert!(r.optimal);
            assert_eq!(r.max_edges, ex, "n={n}");
            assert!(is_m_free(&r.witness).is_none());
        }
    }

    /// `ex(5, {K_5^3-})` by brute force over all 2^10 edge sets.
    #[test]
    fn k53minus_alone_matches_brute_force() {
        let triples: Vec<u64> = k_subsets(full_mask(5), 3).collect();
        let pattern = make_k53minus();
        let brute = (0u32..1 << 10)
            .filter(|s| {
                let h = Hypergraph::from_masks(
                    3,
                    5,
                    (0..10).filter(|&t| s & (1 << t) != 0).map(|t| triples[t]),
                )
                .unwrap();
                contains_subgraph(&pattern, &h).is_none()
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap();
        let r = max_free_edges(&SearchConfig::new(5, Family::Custom(vec![pattern]))).unwrap();
        assert_eq!(r.max_edges, brute);
        assert_eq!(brute, 8);
    }

    #[test]
    fn relabeled_candidates_give_the_same_value() {
        for n in 3..=5 {
            let base = max_free_edges(&SearchConfig::new(n, Family::M))
                .unwrap()
                .max_edges;
            let mut cfg = SearchConfig::new(n, Family::M);
            cfg.relabel = Some((0..n).rev().collect());
            cfg.symmetry_pruning = false;
            assert_eq!(max_free_edges(&cfg).unwrap().max_edges, base);
        }
    }

    #[test]
    fn budget_stops_early() {
        let mut cfg = SearchConfig::new(6, Family::M);
        cfg.node_budget = Some(10);
        let r = max_free_edges(&cfg).unwrap();
        assert!(!r.optimal);
        assert!(r.nodes_expanded <= 10);
        assert!(max_free_edges(&SearchConfig::new(11, Family::M)).is_err());
    }

    #[test]
    fn six_vertices() {
        let r = max_free_edges(&SearchConfig::new(6, Family::M)).unwrap();
        assert!(r.optimal);
        assert_eq!(r.max_edges, 16);
        let g = make_g26();
        assert!(contains_subgraph(&g, &r.witness).is_some());
        assert!(contains_subgraph(&r.witness, &g).is_some());
    }
}
