//! Backtracking search for edge-preserving maps between hypergraphs.
//!
//! Pattern vertices are assigned in order of descending degree (ties by
//! smallest label). A host candidate must be adjacent to the images of all
//! already-placed pattern neighbors, and every pattern edge is checked as
//! soon as its last vertex is placed.

use crate::bits::{bit, iter_members};
use crate::hypergraph::{Hypergraph, VertexMap};

/// An injective map witnessing `pattern ⊆ host`, if one exists.
pub fn contains_subgraph(pattern: &Hypergraph, host: &Hypergraph) -> Option<VertexMap> {
    Search::new(pattern, host, true)?.run()
}

/// An edge-preserving map `pattern → host`, not necessarily injective.
pub fn homomorphism_exists(pattern: &Hypergraph, host: &Hypergraph) -> Option<VertexMap> {
    Search::new(pattern, host, false)?.run()
}

struct Search<'a> {
    host: &'a Hypergraph,
    injective: bool,
    order: Vec<usize>,
    /// for each position, pattern edges completed by that assignment
    closing: Vec<Vec<u64>>,
    /// for each position, earlier-placed pattern neighbors
    earlier_neighbors: Vec<Vec<usize>>,
    pattern_degree: Vec<usize>,
    host_degree: Vec<usize>,
    host_adj: Vec<u64>,
    image: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(pattern: &'a Hypergraph, host: &'a Hypergraph, injective: bool) -> Option<Self> {
        if pattern.uniformity() != host.uniformity() {
            return None;
        }
        let k = pattern.vertex_count();
        if injective && (k > host.vertex_count() || pattern.edge_count() > host.edge_count()) {
            return None;
        }
        if k > 0 && host.vertex_count() == 0 {
            return None;
        }
        let pattern_degree = pattern.degrees();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern_degree[v]), v));
        let mut position = vec![0; k];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = vec![Vec::new(); k];
        for &e in pattern.edges() {
            let last = iter_members(e).map(|v| position[v]).max().unwrap();
            closing[last].push(e);
        }
        let padj = pattern.adjacency_masks();
        let earlier_neighbors = order
            .iter()
            .enumerate()
            .map(|(i, &v)| iter_members(padj[v]).filter(|&u| position[u] < i).collect())
            .collect();
        Some(Search {
            host,
            injective,
            order,
            closing,
            earlier_neighbors,
            pattern_degree,
            host_degree: host.degrees(),
            host_adj: host.adjacency_masks(),
            image: vec![usize::MAX; k],
        })
    }

    fn run(mut self) -> Option<VertexMap> {
        if self.place(0, 0) {
            Some(VertexMap(self.image))
        } else {
            None
        }
    }

    fn place(&mut self, pos: usize, used: u64) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let p = self.order[pos];
        let mut candidates = self.host.vertex_mask();
        if self.injective {
            candidates &= !used;
        }
        for &q in &self.earlier_neighbors[pos] {
            candidates &= self.host_adj[self.image[q]];
        }
        for c in iter_members(candidates) {
            if self.injective && self.host_degree[c] < self.pattern_degree[p] {
                continue;
            }
            self.image[p] = c;
            let ok = self.closing[pos].iter().all(|&e| {
                let img = iter_members(e).fold(0u64, |m, v| m | bit(self.image[v]));
                self.host.has_edge(img)
            });
            if ok && self.place(pos + 1, used | bit(c)) {
                return true;
            }
        }
        self.image[p] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_complete, make_g1, make_g26, make_k53minus};

    #[test]
    fn containment_examples() {
        let k5 = make_complete(5, 3).unwrap();
        let k5m = make_k53minus();
        let w = contains_subgraph(&k5m, &k5).unwrap();
        assert!(w.is_embedding(&k5m, &k5));
        let k4 = make_complete(4, 3).unwrap();
        assert!(contains_subgraph(&k4, &make_g1(9).unwrap()).is_none());
        let g = make_g26();
        let id = contains_subgraph(&g, &g).unwrap();
        assert!(id.is_embedding(&g, &g));
    }

    #[test]
    fn homomorphism_examples() {
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let g = make_g26();
        assert!(homomorphism_exists(&edge, &g).is_some());
        let k4 = make_complete(4, 3).unwrap();
        assert!(homomorphism_exists(&k4, &edge).is_none());
        assert!(homomorphism_exists(&g, &g).unwrap().is_homomorphism(&g, &g));
    }

    #[test]
    fn k4_into_single_edge_is_impossible_by_exhaustion() {
        // all 3^4 maps collapse some edge
        let k4 = make_complete(4, 3).unwrap();
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        for code in 0..81usize {
            let map = VertexMap((0..4).map(|i| code / 3usize.pow(i) % 3).collect());
            assert!(!map.is_homomorphism(&k4, &edge));
        }
    }

    #[test]
    fn non_injective_homomorphism_found() {
        // two edges sharing two vertices fold onto one edge
        let two = Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(contains_subgraph(&two, &edge).is_none());
        let h = homomorphism_exists(&two, &edge).unwrap();
        assert!(h.is_homomorphism(&two, &edge));
        assert!(!h.is_injective());
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let pat = Hypergraph::new(3, 5, [[0, 1, 2]]).unwrap();
        let host = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert!(contains_subgraph(&pat, &host).is_none());
        assert!(homomorphism_exists(&pat, &host).is_some());
    }
}
