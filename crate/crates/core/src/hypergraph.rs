//! The uniform hypergraph kernel.
//!
//! Edges are `u64` vertex masks, so every hypergraph lives on at most 64
//! labeled vertices `0..n`. Edges are kept in lexicographic order of their
//! sorted vertex tuples, and every set-valued output follows that order.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, full_mask, iter_members, lex_cmp, members};
use crate::error::{Error, Result};
use crate::Rational;

pub const MAX_VERTICES: usize = 64;

/// An `r`-uniform hypergraph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    /// canonical (lexicographic) order
    edges: Vec<u64>,
    /// numeric order, for membership tests
    lookup: Vec<u64>,
}

/// A family of `k`-subsets of a ground set `0..n`, e.g. a shadow or a link.
/// `k` may be zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    uniformity: usize,
    n: usize,
    sets: Vec<u64>,
}

impl EdgeSet {
    fn from_unsorted(uniformity: usize, n: usize, mut sets: Vec<u64>) -> Self {
        sets.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        sets.dedup();
        EdgeSet {
            uniformity,
            n,
            sets,
        }
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.sets
    }

    pub fn contains(&self, set: u64) -> bool {
        self.sets
            .binary_search_by(|probe| lex_cmp(*probe, set))
            .is_ok()
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.sets.iter().all(|&s| other.contains(s))
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| members(s)).collect()
    }

    /// View as a hypergraph; fails only for 0-uniform families.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::from_masks(self.uniformity, self.n, self.sets.iter().copied())
    }
}

/// Part sizes of a blowup, one positive entry per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec(Vec<usize>);

impl BlowupSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&t| t == 0) {
            return Err(Error::InvalidParameter(format!(
                "blowup part {i} has size 0"
            )));
        }
        Ok(BlowupSpec(parts))
    }

    pub fn uniform(vertices: usize, size: usize) -> Result<Self> {
        Self::new(vec![size; vertices])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// `image[i]` is the host vertex assigned to pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn image_of_mask(&self, mask: u64) -> u64 {
        iter_members(mask).fold(0, |m, v| m | bit(self.0[v]))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.0.iter().all(|&v| {
            let fresh = seen & bit(v) == 0;
            seen |= bit(v);
            fresh
        })
    }

    /// Every pattern edge lands on a host edge.
    pub fn is_homomorphism(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        self.0.len() == pattern.vertex_count()
            && self.0.iter().all(|&v| v < host.vertex_count())
            && pattern
                .edges()
                .iter()
                .all(|&e| host.has_edge(self.image_of_mask(e)))
    }

    pub fn is_embedding(&self, pattern: &Hypergraph, host: &Hypergraph) -> bool {
        self.is_injective() && self.is_homomorphism(pattern, host)
    }
}

/// A point of the standard simplex: nonnegative weights summing to one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimplexPoint(Vec<f64>);

pub const SIMPLEX_TOLERANCE: f64 = 1e-12;

impl SimplexPoint {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| **w < 0.0 || w.is_nan())
        {
            return Err(Error::NegativeWeight { index, value });
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOLERANCE {
            return Err(Error::WeightSum(sum));
        }
        Ok(SimplexPoint(weights))
    }

    pub fn uniform(n: usize) -> Self {
        SimplexPoint(vec![1.0 / n as f64; n])
    }

    pub fn uniform_on(n: usize, support: u64) -> Self {
        let k = support.count_ones() as f64;
        SimplexPoint(
            (0..n)
                .map(|i| if support & bit(i) != 0 { 1.0 / k } else { 0.0 })
                .collect(),
        )
    }

    /// Wraps weights already known to be on the simplex.
    pub(crate) fn from_trusted(weights: Vec<f64>) -> Self {
        SimplexPoint(weights)
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from vertex lists. Each list must hold `r`
    /// distinct vertices below `n`; order inside a list is irrelevant.
    pub fn new<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_ground(r, n)?;
        let mut masks = Vec::new();
        for e in edges {
            let e = e.as_ref();
            let mut m = 0u64;
            for &v in e {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                m |= bit(v);
            }
            if e.len() != r || m.count_ones() as usize != r {
                return Err(Error::EdgeSize {
                    expected: r,
                    found: m.count_ones() as usize,
                });
            }
            masks.push(m);
        }
        Self::from_masks(r, n, masks)
    }

    pub fn from_masks<I: IntoIterator<Item = u64>>(r: usize, n: usize, masks: I) -> Result<Self> {
        check_ground(r, n)?;
        let ground = full_mask(n);
        let mut edges: Vec<u64> = Vec::new();
        for m in masks {
            if m & !ground != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (m & !ground).trailing_zeros() as usize,
                    n,
                });
            }
            if m.count_ones() as usize != r {
                return Err(Error::EdgeSize {
                    expected: r,
                    found: m.count_ones() as usize,
                });
            }
            edges.push(m);
        }
        let mut lookup = edges.clone();
        lookup.sort_unstable();
        if let Some(w) = lookup.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(members(w[0])));
        }
        edges.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        Ok(Hypergraph {
            r,
            n,
            edges,
            lookup,
        })
    }

    /// Like [`Hypergraph::from_masks`] but silently merges duplicates.
    pub(crate) fn from_masks_dedup<I: IntoIterator<Item = u64>>(
        r: usize,
        n: usize,
        masks: I,
    ) -> Result<Self> {
        let mut v: Vec<u64> = masks.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_masks(r, n, v)
    }

    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::from_masks(r, n, std::iter::empty())
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Edge masks in canonical order.
    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&e| members(e)).collect()
    }

    pub fn has_edge(&self, mask: u64) -> bool {
        self.lookup.binary_search(&mask).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn shadow(&self) -> EdgeSet {
        let mut sets = Vec::with_capacity(self.edges.len() * self.r);
        for &e in &self.edges {
            for v in iter_members(e) {
                sets.push(e & !bit(v));
            }
        }
        EdgeSet::from_unsorted(self.r - 1, self.n, sets)
    }

    /// The link of `v`: the `(r-1)`-sets completing `v` to an edge.
    pub fn link(&self, v: usize) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        Ok(EdgeSet {
            uniformity: self.r - 1,
            n: self.n,
            // removing a common vertex preserves lexicographic order
            sets: self
                .edges
                .iter()
                .filter(|&&e| e & bit(v) != 0)
                .map(|&e| e & !bit(v))
                .collect(),
        })
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&e| e & bit(v) != 0).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &e in &self.edges {
            for v in iter_members(e) {
                d[v] += 1;
            }
        }
        d
    }

    /// `None` on the vertexless hypergraph.
    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().into_iter().min()
    }

    /// Vertices outside `set` that lie in a common edge with all of `set`.
    pub fn neighborhood(&self, set: u64) -> u64 {
        self.edges
            .iter()
            .filter(|&&e| e & set == set)
            .fold(0, |acc, &e| acc | e)
            & !set
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v
            && self
                .edges
                .iter()
                .any(|&e| e & bit(u) != 0 && e & bit(v) != 0)
    }

    /// `adjacency_masks()[v]` is the neighborhood of `{v}`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &e in &self.edges {
            for v in iter_members(e) {
                adj[v] |= e;
            }
        }
        for (v, a) in adj.iter_mut().enumerate() {
            *a &= !bit(v);
        }
        adj
    }

    /// `H[S]`, relabeled to `0..|S|` preserving vertex order.
    pub fn induced(&self, set: u64) -> Hypergraph {
        let set = set & self.vertex_mask();
        let keep = members(set);
        let mut relabel = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let edges: Vec<u64> = self
            .edges
            .iter()
            .filter(|&&e| e & set == e)
            .map(|&e| iter_members(e).fold(0, |m, v| m | bit(relabel[v])))
            .collect();
        Hypergraph::from_masks(self.r, keep.len(), edges).expect("induced edges are valid")
    }

    /// Edges of `H` inside `set`, keeping the original labels.
    pub fn edges_within(&self, set: u64) -> impl Iterator<Item = u64> + '_ {
        self.edges.iter().copied().filter(move |&e| e & set == e)
    }

    pub fn induced_edge_count(&self, set: u64) -> usize {
        self.edges.iter().filter(|&&e| e & set == e).count()
    }

    pub fn complement(&self) -> Hypergraph {
        let edges = bits::k_subsets(self.vertex_mask(), self.r).filter(|&s| !self.has_edge(s));
        Hypergraph::from_masks(self.r, self.n, edges).expect("complement edges are valid")
    }

    /// Replaces vertex `i` by `t_i` clones occupying a consecutive index
    /// block; every edge becomes the complete `r`-partite bundle.
    pub fn blowup(&self, spec: &BlowupSpec) -> Result<Hypergraph> {
        if spec.parts().len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: spec.parts().len(),
            });
        }
        let total = spec.total();
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut start = Vec::with_capacity(self.n);
        let mut acc = 0;
        for &t in spec.parts() {
            start.push(acc);
            acc += t;
        }
        let mut out = Vec::new();
        for &e in &self.edges {
            let verts = members(e);
            let mut partial = vec![0u64];
            for &v in &verts {
                let mut next = Vec::with_capacity(partial.len() * spec.parts()[v]);
                for &p in &partial {
                    for c in 0..spec.parts()[v] {
                        next.push(p | bit(start[v] + c));
                    }
                }
                partial = next;
            }
            out.extend(partial);
        }
        Hypergraph::from_masks(self.r, total, out)
    }

    /// Minimum number of vertices meeting every edge; 0 when edgeless.
    pub fn transversal(&self) -> usize {
        fn go(edges: &[u64], chosen: u64, size: usize, best: &mut usize) {
            if size >= *best {
                return;
            }
            match edges.iter().find(|&&e| e & chosen == 0) {
                None => *best = size,
                Some(&e) => {
                    if size + 1 >= *best {
                        return;
                    }
                    for v in iter_members(e) {
                        go(edges, chosen | bit(v), size + 1, best);
                    }
                }
            }
        }
        let mut best = self.n.min(self.edges.len());
        go(&self.edges, 0, 0, &mut best);
        best
    }

    /// Every pair of vertices lies in a common edge.
    pub fn is_2_covered(&self) -> bool {
        let all = self.vertex_mask();
        self.adjacency_masks()
            .iter()
            .enumerate()
            .all(|(v, &a)| a | bit(v) == all)
    }

    /// A vertex common to all edges (the smallest such). On the edgeless
    /// hypergraph this is vertex 0, or `None` when there are no vertices.
    pub fn star_center(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let common = self
            .edges
            .iter()
            .fold(self.vertex_mask(), |acc, &e| acc & e);
        if common == 0 {
            None
        } else {
            Some(common.trailing_zeros() as usize)
        }
    }

    /// `sum over edges of the product of the weights of its vertices`.
    pub fn weight_polynomial(&self, x: &SimplexPoint) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        Ok(self.eval(x.weights()))
    }

    /// Unchecked evaluation at an arbitrary real vector of length `n`.
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.edges
            .iter()
            .map(|&e| iter_members(e).map(|v| x[v]).product::<f64>())
            .sum()
    }

    /// Gradient of the weight polynomial at `x`.
    pub fn gradient(&self, x: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|g| *g = 0.0);
        for &e in &self.edges {
            for v in iter_members(e) {
                out[v] += iter_members(e & !bit(v)).map(|u| x[u]).product::<f64>();
            }
        }
    }

    pub fn weight_polynomial_exact(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        let mut total = Rational::zero();
        for &e in &self.edges {
            let term = iter_members(e).fold(Rational::one(), |acc, v| acc * x[v]);
            total += term;
        }
        Ok(total)
    }

    /// The same hypergraph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let map = VertexMap(perm.to_vec());
        if !map.is_injective() || perm.iter().any(|&p| p >= self.n) {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Hypergraph::from_masks(
            self.r,
            self.n,
            self.edges.iter().map(|&e| map.image_of_mask(e)),
        )
    }

    pub fn with_edge(&self, mask: u64) -> Result<Hypergraph> {
        Hypergraph::from_masks_dedup(
            self.r,
            self.n,
            self.edges.iter().copied().chain(std::iter::once(mask)),
        )
    }

    pub fn without_edge(&self, mask: u64) -> Hypergraph {
        Hypergraph::from_masks(
            self.r,
            self.n,
            self.edges.iter().copied().filter(|&e| e != mask),
        )
        .expect("subset of valid edges")
    }

    pub fn is_subgraph_of(&self, other: &Hypergraph) -> bool {
        self.r == other.r && self.n <= other.n && self.edges.iter().all(|&e| other.has_edge(e))
    }

    /// Canonical text form: header `r n`, then one sorted edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.r, self.n);
        for &e in &self.edges {
            let line: Vec<String> = members(e).iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Hypergraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<u64> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| parse_err(format!("not a nonnegative integer: {tok:?}")))
                })
                .collect::<Result<_>>()?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(parse_err("header must be `r n`".into()));
                    }
                    check_ground(nums[0], nums[1]).map_err(|e| parse_err(e.to_string()))?;
                    header = Some((nums[0], nums[1]));
                }
                Some((r, n)) => {
                    if nums.len() != r {
                        return Err(parse_err(format!(
                            "expected {r} vertices, found {}",
                            nums.len()
                        )));
                    }
                    let mut m = 0u64;
                    for &v in &nums {
                        if v >= n {
                            return Err(parse_err(format!("vertex {v} out of range 0..{n}")));
                        }
                        if m & bit(v) != 0 {
                            return Err(parse_err(format!("vertex {v} repeated")));
                        }
                        m |= bit(v);
                    }
                    if !seen.insert(m) {
                        return Err(parse_err(format!("duplicate edge {:?}", members(m))));
                    }
                    edges.push(m);
                }
            }
        }
        let (r, n) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing `r n` header".into(),
        })?;
        Hypergraph::from_masks(r, n, edges)
    }
}

fn check_ground(r: usize, n: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidUniformity);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Hypergraph(r={}, n={}, {:?})",
            self.r,
            self.n,
            self.edge_lists()
        )
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Hypergraph::parse_edge_list(s)
    }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphRepr {
            r: self.r,
            n: self.n,
            edges: self.edge_lists(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HypergraphRepr::deserialize(d)?;
        Hypergraph::new(repr.r, repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphRepr {
            r: self.uniformity,
            n: self.n,
            edges: self.to_lists(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_complete, make_g26};

    fn h(r: usize, n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(r, n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph::new(3, 4, [[0, 1, 4]]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 4, n: 4 }
        );
        assert!(matches!(
            Hypergraph::new(3, 4, [[0, 1, 1]]),
            Err(Error::EdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert_eq!(
            Hypergraph::empty(3, 65).unwrap_err(),
            Error::TooManyVertices(65)
        );
        assert_eq!(
            Hypergraph::empty(0, 3).unwrap_err(),
            Error::InvalidUniformity
        );
    }

    #[test]
    fn shadow_examples() {
        assert!(Hypergraph::empty(3, 5).unwrap().shadow().is_empty());
        let one = h(3, 3, &[&[0, 1, 2]]);
        assert_eq!(
            one.shadow().to_lists(),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        // union of pairs of the 16 edges, enumerated by hand
        let g = make_g26();
        let mut pairs = std::collections::BTreeSet::new();
        for e in g.edge_lists() {
            pairs.insert((e[0], e[1]));
            pairs.insert((e[0], e[2]));
            pairs.insert((e[1], e[2]));
        }
        assert_eq!(pairs.len(), 15);
        assert_eq!(g.shadow().len(), 15);
    }

    #[test]
    fn links_and_degrees() {
        let g = make_g26();
        assert_eq!(g.degrees(), vec![8; 6]);
        let one = h(3, 4, &[&[0, 1, 2]]);
        assert_eq!(one.link(0).unwrap().to_lists(), vec![vec![1, 2]]);
        assert!(one.link(3).unwrap().is_empty());
        assert_eq!(one.min_degree(), Some(0));
        assert!(matches!(one.link(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn transversal_examples() {
        assert_eq!(Hypergraph::empty(3, 4).unwrap().transversal(), 0);
        assert_eq!(h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]).transversal(), 2);
        assert_eq!(make_complete(4, 3).unwrap().transversal(), 2);
    }

    #[test]
    fn neighborhood_examples() {
        let one = h(3, 4, &[&[0, 1, 2]]);
        assert_eq!(members(one.neighborhood(bit(0))), vec![1, 2]);
        let two = h(3, 4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert_eq!(members(two.neighborhood(bit(0) | bit(1))), vec![2, 3]);
        assert_eq!(one.neighborhood(bit(3)), 0);
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(two.adjacent(u, v), two.neighborhood(bit(v)) & bit(u) != 0);
            }
        }
    }

    #[test]
    fn induced_examples() {
        let g = make_g26();
        assert_eq!(g.induced(g.vertex_mask()), g);
        let none = g.induced(0);
        assert_eq!((none.vertex_count(), none.edge_count()), (0, 0));
        // complement triples inside {0..4}: 012, 234
        assert_eq!(g.induced(0b11111).edge_count(), 10 - 2);
    }

    #[test]
    fn complement_examples() {
        let empty = Hypergraph::empty(3, 6).unwrap();
        assert_eq!(empty.complement().edge_count(), 20);
        assert_eq!(
            make_g26().complement().edge_lists(),
            vec![vec![0, 1, 2], vec![0, 1, 5], vec![2, 3, 4], vec![3, 4, 5]]
        );
        assert!(make_complete(4, 3).unwrap().complement().is_empty());
    }

    #[test]
    fn blowup_examples() {
        let one = h(3, 3, &[&[0, 1, 2]]);
        let b = one.blowup(&BlowupSpec::uniform(3, 2).unwrap()).unwrap();
        assert_eq!(b.edge_count(), 8);
        let g = make_g26();
        assert_eq!(g.blowup(&BlowupSpec::uniform(6, 1).unwrap()).unwrap(), g);
        assert_eq!(
            g.blowup(&BlowupSpec::uniform(6, 2).unwrap())
                .unwrap()
                .edge_count(),
            128
        );
        assert!(matches!(
            g.blowup(&BlowupSpec::uniform(5, 1).unwrap()),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(BlowupSpec::new(vec![1, 0]).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            h(3, 5, &[&[0, 1, 2], &[0, 1, 3], &[0, 1, 4]]).star_center(),
            Some(0)
        );
        assert_eq!(h(3, 6, &[&[0, 1, 2], &[3, 4, 5]]).star_center(), None);
        assert_eq!(Hypergraph::empty(3, 4).unwrap().star_center(), Some(0));
        assert_eq!(Hypergraph::empty(3, 0).unwrap().star_center(), None);
        assert_eq!(h(3, 4, &[&[1, 2, 3]]).star_center(), Some(1));
    }

    #[test]
    fn weight_polynomial_examples() {
        let k4 = make_complete(4, 3).unwrap();
        let p = k4.weight_polynomial(&SimplexPoint::uniform(4)).unwrap();
        assert!((p - 1.0 / 16.0).abs() < 1e-15);
        let g = make_g26();
        let p = g.weight_polynomial(&SimplexPoint::uniform(6)).unwrap();
        assert!((p - 2.0 / 27.0).abs() < 1e-15);
        let mut e0 = vec![0.0; 6];
        e0[0] = 1.0;
        assert_eq!(
            g.weight_polynomial(&SimplexPoint::new(e0).unwrap())
                .unwrap(),
            0.0
        );
        assert!(matches!(
            g.weight_polynomial(&SimplexPoint::uniform(5)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            SimplexPoint::new(vec![1.5, -0.5]),
            Err(Error::NegativeWeight { index: 1, .. })
        ));
        assert!(matches!(
            SimplexPoint::new(vec![0.5, 0.4]),
            Err(Error::WeightSum(_))
        ));
    }

    #[test]
    fn text_format_is_canonical() {
        let text = "# unordered input\n3 5\n4 2 0\n\n0 1 2\n";
        let g: Hypergraph = text.parse().unwrap();
        assert_eq!(g.to_edge_list(), "3 5\n0 1 2\n0 2 4\n");
        let err = Hypergraph::parse_edge_list("3 5\n0 1 2\n0 1 9\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "vertex 9 out of range 0..5".into()
            }
        );
        assert!(matches!(
            Hypergraph::parse_edge_list("3 5\n0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Hypergraph::parse_edge_list("# nothing\n"),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            Hypergraph::parse_edge_list("3 5\n0 1 2\n2 1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
