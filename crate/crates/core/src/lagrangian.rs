//! Lagrangians: multi-start projected gradient ascent for lower bounds and
//! an exhaustive simplex-lattice certificate for upper bounds.
//!
//! For the certificate, every `x` in the simplex lies within `1/D` per
//! coordinate of a lattice point `y = k/D` with `x - y` summing to zero.
//! Expanding the cubic `p` around `y` gives
//!
//! ```text
//! p(x) ≤ p(y) + L(y) + Q(y) + |H|/D³
//! L(y) = (1/D) Σ_{i ≤ n/2} (g_(i) − g_(n+1−i))     (sorted gradient)
//! Q(y) = (1/D²) Σ_{pairs ij} Σ_{ijk ∈ H} y_k
//! ```
//!
//! Scaled by `D³` all three terms are integers in the lattice counts, so
//! the maximum is found in exact arithmetic. Coordinates of vertices that
//! are twins (swapping them is an automorphism) are enumerated in
//! nonincreasing order only.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{bit, full_mask, iter_members, k_subsets, members};
use crate::constructions::make_g26;
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::hypergraph::{BlowupSpec, Hypergraph, SimplexPoint};
use crate::{rational_to_f64, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LagrangianConfig {
    pub seed: u64,
    pub restarts: usize,
    /// Ascent stops once a step gains less than this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Uniform starts on every support are used up to this many vertices;
    /// above it only the edges serve as supports.
    pub support_limit: usize,
}

impl Default for LagrangianConfig {
    fn default() -> Self {
        LagrangianConfig {
            seed: 0,
            restarts: 200,
            tolerance: 1e-13,
            max_iterations: 10_000,
            support_limit: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LagrangianResult {
    pub lower_bound: f64,
    pub maximizer: SimplexPoint,
    pub certified_upper_bound: Option<f64>,
    pub certificate: Option<UpperBound>,
    pub iterations: usize,
    pub restarts: usize,
}

/// A certified upper bound from the lattice of denominator `resolution`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UpperBound {
    pub resolution: usize,
    /// The bound itself, exactly.
    pub exact: Rational,
    pub value: f64,
    /// Largest value of `p` on the lattice, a lower bound on `λ`.
    pub lattice_max: f64,
    /// `value - lattice_max`.
    pub correction: f64,
}

/// Multi-start ascent. Deterministic for a fixed configuration.
pub fn lagrangian_lower(h: &Hypergraph, config: &LagrangianConfig) -> Result<LagrangianResult> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "the Lagrangian needs n >= 1".into(),
        ));
    }
    let starts = starting_points(h, config);
    let restarts = starts.len();
    let runs: Vec<(Vec<f64>, f64, usize)> = starts
        .into_par_iter()
        .map(|x0| ascend(h, x0, config))
        .collect();
    let iterations = runs.iter().map(|r| r.2).sum();
    let (best, value, _) = runs
        .into_iter()
        .reduce(|a, b| match better(&b.0, b.1, &a.0, a.1) {
            true => b,
            false => a,
        })
        .expect("at least one start");
    Ok(LagrangianResult {
        lower_bound: value,
        maximizer: SimplexPoint::from_trusted(best),
        certified_upper_bound: None,
        certificate: None,
        iterations,
        restarts,
    })
}

/// Lower bound plus the lattice certificate.
pub fn lagrangian_certified(
    h: &Hypergraph,
    config: &LagrangianConfig,
    resolution: usize,
) -> Result<LagrangianResult> {
    let mut result = lagrangian_lower(h, config)?;
    let ub = lagrangian_upper(h, resolution)?;
    result.certified_upper_bound = Some(ub.value.max(result.lower_bound));
    result.certificate = Some(ub);
    Ok(result)
}

/// `b` beats `a`: larger value, then lexicographically smaller point.
fn better(b: &[f64], bv: f64, a: &[f64], av: f64) -> bool {
    match bv.partial_cmp(&av) {
        Some(Ordering::Greater) => true,
        Some(Ordering::Less) => false,
        _ => b.partial_cmp(a) == Some(Ordering::Less),
    }
}

fn starting_points(h: &Hypergraph, config: &LagrangianConfig) -> Vec<Vec<f64>> {
    let n = h.vertex_count();
    let r = h.uniformity();
    let mut starts = vec![SimplexPoint::uniform(n).weights().to_vec()];
    if n <= config.support_limit {
        for support in 1..=full_mask(n) {
            if support.count_ones() as usize >= r && support != full_mask(n) {
                starts.push(SimplexPoint::uniform_on(n, support).weights().to_vec());
            }
        }
    } else {
        for &e in h.edges() {
            starts.push(SimplexPoint::uniform_on(n, e).weights().to_vec());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.restarts {
        let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        let s: f64 = raw.iter().sum();
        starts.push(raw.iter().map(|w| w / s).collect());
    }
    starts
}

/// Projected gradient ascent with a backtracking step that only accepts
/// strict improvements.
fn ascend(h: &Hypergraph, mut x: Vec<f64>, config: &LagrangianConfig) -> (Vec<f64>, f64, usize) {
    let n = x.len();
    let mut p = h.eval(&x);
    let mut grad = vec![0.0; n];
    let mut trial = vec![0.0; n];
    let mut step = 1.0;
    let mut iterations = 0;
    while iterations < config.max_iterations {
        iterations += 1;
        h.gradient(&x, &mut grad);
        let mut accepted = None;
        while step > 1e-18 {
            for i in 0..n {
                trial[i] = x[i] + step * grad[i];
            }
            project_to_simplex(&mut trial);
            let pt = h.eval(&trial);
            if pt > p {
                accepted = Some(pt);
                break;
            }
            step *= 0.5;
        }
        let Some(pt) = accepted else {
            break;
        };
        let gain = pt - p;
        std::mem::swap(&mut x, &mut trial);
        p = pt;
        step = (step * 2.0).min(1e6);
        if gain < config.tolerance {
            break;
        }
    }
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|w| *w /= s);
    let p = h.eval(&x);
    (x, p, iterations)
}

/// Euclidean projection onto the simplex by sorting.
pub fn project_to_simplex(v: &mut [f64]) {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        cum += uj;
        let t = (cum - 1.0) / (j + 1) as f64;
        if uj - t > 0.0 {
            theta = t;
        }
    }
    v.iter_mut().for_each(|w| *w = (*w - theta).max(0.0));
}

/// Default lattice denominator by vertex count.
pub fn default_resolution(n: usize) -> usize {
    match n {
        0..=6 => 120,
        7 => 48,
        _ => 30,
    }
}

pub const MAX_CERTIFIED_VERTICES: usize = 8;

/// Certified upper bound on `λ(H)` for 3-graphs on at most 8 vertices
/// (after dropping isolated vertices).
pub fn lagrangian_upper(h: &Hypergraph, resolution: usize) -> Result<UpperBound> {
    if h.uniformity() != 3 {
        return Err(Error::InvalidParameter(
            "certificates are for 3-graphs".into(),
        ));
    }
    if resolution == 0 {
        return Err(Error::InvalidParameter(
            "resolution must be positive".into(),
        ));
    }
    let used = h.edges().iter().fold(0u64, |m, &e| m | e);
    let core = h.induced(used);
    let n = core.vertex_count();
    if n > MAX_CERTIFIED_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let d = resolution as i64;
    let scale = Rational::from_integer((d as i128).pow(3));
    if core.is_empty() {
        return Ok(UpperBound {
            resolution,
            exact: Rational::from_integer(0),
            value: 0.0,
            lattice_max: 0.0,
            correction: 0.0,
        });
    }
    let lattice = Lattice::new(&core, d);
    let (best_f, best_p) = lattice.maximize();
    let exact = Rational::from_integer((best_f + core.edge_count() as i64) as i128) / scale;
    let value = rational_to_f64(&exact);
    let lattice_max = best_p as f64 / (d as f64).powi(3);
    let correction = value - lattice_max;
    if correction > lattice_max && lattice_max > 0.0 {
        return Err(Error::ResolutionTooCoarse {
            resolution,
            correction,
            value: lattice_max,
        });
    }
    Ok(UpperBound {
        resolution,
        exact,
        value,
        lattice_max,
        correction,
    })
}

struct Lattice {
    n: usize,
    d: i64,
    edges: Vec<[usize; 3]>,
    degree: Vec<i64>,
    /// `twin_of[i]`: the previous vertex in `i`'s twin class, if any
    twin_of: Vec<Option<usize>>,
}

impl Lattice {
    fn new(h: &Hypergraph, d: i64) -> Self {
        let n = h.vertex_count();
        let edges = h
            .edges()
            .iter()
            .map(|&e| {
                let v = members(e);
                [v[0], v[1], v[2]]
            })
            .collect();
        let degree = h.degrees().into_iter().map(|x| x as i64).collect();
        let twin_of = (0..n)
            .map(|j| {
                (0..j)
                    .rev()
                    .find(|&i| is_transposition_automorphism(h, i, j))
            })
            .collect();
        Lattice {
            n,
            d,
            edges,
            degree,
            twin_of,
        }
    }

    /// `(max of D³·(p + L + Q), max of D³·p)` over the lattice.
    fn maximize(&self) -> (i64, i64) {
        let first_max = self.d;
        (0..=first_max)
            .into_par_iter()
            .map(|k0| {
                let mut k = vec![0i64; self.n];
                k[0] = k0;
                let mut best = (i64::MIN, i64::MIN);
                let mut g = vec![0i64; self.n];
                self.recurse(1, self.d - k0, &mut k, &mut g, &mut best);
                best
            })
            .reduce(|| (i64::MIN, i64::MIN), |a, b| (a.0.max(b.0), a.1.max(b.1)))
    }

    fn recurse(&self, i: usize, left: i64, k: &mut [i64], g: &mut [i64], best: &mut (i64, i64)) {
        let cap = |i: usize, k: &[i64]| self.twin_of[i].map_or(i64::MAX, |t| k[t]);
        if i == self.n - 1 {
            if left > cap(i, k) {
                return;
            }
            k[i] = left;
            let (f, p) = self.evaluate(k, g);
            best.0 = best.0.max(f);
            best.1 = best.1.max(p);
            return;
        }
        let top = left.min(cap(i, k));
        for ki in 0..=top {
            k[i] = ki;
            self.recurse(i + 1, left - ki, k, g, best);
        }
    }

    fn evaluate(&self, k: &[i64], g: &mut [i64]) -> (i64, i64) {
        g.iter_mut().for_each(|x| *x = 0);
        let mut p = 0;
        for &[a, b, c] in &self.edges {
            let (ka, kb, kc) = (k[a], k[b], k[c]);
            let bc = kb * kc;
            g[a] += bc;
            g[b] += ka * kc;
            g[c] += ka * kb;
            p += ka * bc;
        }
        let q: i64 = k.iter().zip(&self.degree).map(|(x, dg)| x * dg).sum();
        g.sort_unstable();
        let n = self.n;
        let l: i64 = (0..n / 2).map(|i| g[n - 1 - i] - g[i]).sum();
        (p + l + q, p)
    }
}

fn is_transposition_automorphism(h: &Hypergraph, i: usize, j: usize) -> bool {
    let swap = |e: u64| {
        let (bi, bj) = (e & bit(i) != 0, e & bit(j) != 0);
        let mut m = e & !bit(i) & !bit(j);
        if bi {
            m |= bit(j);
        }
        if bj {
            m |= bit(i);
        }
        m
    };
    h.edges().iter().all(|&e| h.has_edge(swap(e)))
}

/// Summary of the sweep over 3-graphs on five vertices with at most eight
/// edges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub resolution: usize,
    pub instances: usize,
    pub isomorphism_classes: usize,
    pub eight_edge_instances: usize,
    pub eight_edge_all_embed: bool,
    pub max_lower_bound: f64,
    pub max_certified: f64,
    /// `2/27 - max_certified`
    pub min_gap: f64,
    pub margin: f64,
    pub passed: bool,
}

pub const SWEEP_MARGIN: f64 = 1e-3;

pub fn verify_five_vertex_sweep(
    resolution: usize,
    config: &LagrangianConfig,
) -> Result<SweepReport> {
    let triples: Vec<u64> = k_subsets(full_mask(5), 3).collect();
    let perms = permutations(5);
    let canonical = |sel: u32| -> u32 {
        perms
            .iter()
            .map(|p| {
                (0..10)
                    .filter(|&t| sel & (1 << t) != 0)
                    .map(|t| {
                        let img = iter_members(triples[t]).fold(0u64, |m, v| m | bit(p[v]));
                        1u32 << triples.iter().position(|&x| x == img).unwrap()
                    })
                    .fold(0, |a, b| a | b)
            })
            .min()
            .unwrap()
    };
    let as_graph = |sel: u32| {
        let edges = (0..10).filter(|&t| sel & (1 << t) != 0).map(|t| triples[t]);
        Hypergraph::from_masks(3, 5, edges).expect("valid triples")
    };
    let instances: Vec<u32> = (0u32..1 << 10).filter(|s| s.count_ones() <= 8).collect();
    let mut classes: Vec<u32> = instances.iter().map(|&s| canonical(s)).collect();
    classes.sort_unstable();
    classes.dedup();

    let g26 = make_g26();
    let eight: Vec<u32> = instances
        .iter()
        .copied()
        .filter(|s| s.count_ones() == 8)
        .collect();
    let eight_edge_all_embed = eight
        .iter()
        .all(|&s| contains_subgraph(&as_graph(s), &g26).is_some());

    let bounds: Vec<(f64, f64)> = classes
        .iter()
        .map(|&c| {
            let h = as_graph(c);
            let lower = if h.is_empty() {
                0.0
            } else {
                lagrangian_lower(&h, config)?.lower_bound
            };
            let upper = lagrangian_upper(&h, resolution)?.value;
            Ok((lower, upper))
        })
        .collect::<Result<_>>()?;
    let max_lower_bound = bounds.iter().map(|b| b.0).fold(0.0, f64::max);
    let max_certified = bounds.iter().map(|b| b.1).fold(0.0, f64::max);
    let min_gap = 2.0 / 27.0 - max_certified;
    Ok(SweepReport {
        resolution,
        instances: instances.len(),
        isomorphism_classes: classes.len(),
        eight_edge_instances: eight.len(),
        eight_edge_all_embed,
        max_lower_bound,
        max_certified,
        min_gap,
        margin: SWEEP_MARGIN,
        passed: eight_edge_all_embed && min_gap > SWEEP_MARGIN,
    })
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: u64, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if used & bit(v) == 0 {
                prefix.push(v);
                go(prefix, used | bit(v), n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

/// `(s-2)/(2(s-1)) · 4/27`: the maximum of the star estimate
/// `(s-2)/(2(s-1)) · x(1-x)²`, attained at `x = 1/3`.
pub fn star_lagrangian_bound(s: usize) -> Result<f64> {
    if s < 3 {
        return Err(Error::InvalidParameter(format!(
            "star bound needs s >= 3, got {s}"
        )));
    }
    let s = s as f64;
    Ok((s - 2.0) / (2.0 * (s - 1.0)) * (4.0 / 27.0))
}

/// Checks `|T(t)| = p_T(t/N)·N^r` exactly and `p_T(t/N) ≤ λ(T)`, the latter
/// against the ascent's lower bound.
pub fn check_blowup_bound(
    t: &Hypergraph,
    spec: &BlowupSpec,
    config: &LagrangianConfig,
) -> Result<bool> {
    if spec.parts().len() != t.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: t.vertex_count(),
            found: spec.parts().len(),
        });
    }
    let total = spec.total() as i128;
    let x: Vec<Rational> = spec
        .parts()
        .iter()
        .map(|&p| Rational::new(p as i128, total))
        .collect();
    let p = t.weight_polynomial_exact(&x)?;
    let scaled = p * Rational::from_integer(total.pow(t.uniformity() as u32));
    let size = crate::constructions::blowup_size(t, spec.parts()) as i128;
    let mut exact = scaled == Rational::from_integer(size);
    if spec.total() <= crate::hypergraph::MAX_VERTICES {
        exact &= t.blowup(spec)?.edge_count() as i128 == size;
    }
    if t.is_empty() {
        return Ok(exact);
    }
    let lambda = lagrangian_lower(t, config)?.lower_bound;
    Ok(exact && rational_to_f64(&p) <= lambda + 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_complete, make_full_star, make_k53minus};

    fn quick() -> LagrangianConfig {
        LagrangianConfig {
            restarts: 20,
            ..LagrangianConfig::default()
        }
    }

    #[test]
    fn known_values() {
        let k4 = make_complete(4, 3).unwrap();
        let r = lagrangian_lower(&k4, &quick()).unwrap();
        assert!((r.lower_bound - 1.0 / 16.0).abs() < 1e-9);
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let r = lagrangian_lower(&edge, &quick()).unwrap();
        assert!((r.lower_bound - 1.0 / 27.0).abs() < 1e-9);
        for w in r.maximizer.weights() {
            assert!((w - 1.0 / 3.0).abs() < 1e-6);
        }
    }

    #[test]
    fn lower_bound_matches_its_maximizer_and_is_reproducible() {
        let h = make_k53minus();
        let a = lagrangian_lower(&h, &quick()).unwrap();
        let b = lagrangian_lower(&h, &quick()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.lower_bound, h.weight_polynomial(&a.maximizer).unwrap());
        assert!(SimplexPoint::new(a.maximizer.weights().to_vec()).is_ok());
    }

    #[test]
    fn projection_lands_on_simplex() {
        let mut v = vec![0.5, 2.0, -1.0, 0.1];
        project_to_simplex(&mut v);
        assert!((v.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(v.iter().all(|&w| w >= 0.0));
        let mut u = vec![0.25; 4];
        project_to_simplex(&mut u);
        assert_eq!(u, vec![0.25; 4]);
    }

    #[test]
    fn upper_bounds_bracket_lambda() {
        let empty = Hypergraph::empty(3, 4).unwrap();
        assert_eq!(lagrangian_upper(&empty, 10).unwrap().value, 0.0);
        let k4 = make_complete(4, 3).unwrap();
        let ub = lagrangian_upper(&k4, 60).unwrap();
        assert!(ub.value >= 1.0 / 16.0);
        assert!(ub.lattice_max <= 1.0 / 16.0 + 1e-15);
        assert!(ub.correction > 0.0 && ub.correction < 0.01);
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(matches!(
            lagrangian_upper(&edge, 3),
            Err(Error::ResolutionTooCoarse { .. })
        ));
    }

    /// The certificate must dominate an independent dense grid search.
    #[test]
    fn certificate_dominates_grid_oracle() {
        let h = make_k53minus();
        let ub = lagrangian_upper(&h, 24).unwrap();
        let steps = 40;
        let mut best: f64 = 0.0;
        for a in 0..=steps {
            for b in 0..=steps - a {
                for c in 0..=steps - a - b {
                    for d in 0..=steps - a - b - c {
                        let e = steps - a - b - c - d;
                        let x: Vec<f64> = [a, b, c, d, e]
                            .iter()
                            .map(|&v| v as f64 / steps as f64)
                            .collect();
                        best = best.max(h.eval(&x));
                    }
                }
            }
        }
        assert!(best <= ub.value, "{best} > {}", ub.value);
    }

    #[test]
    fn star_bound() {
        assert!((star_lagrangian_bound(3).unwrap() - 1.0 / 27.0).abs() < 1e-15);
        assert!(star_lagrangian_bound(2).is_err());
        let big = star_lagrangian_bound(1_000_000).unwrap();
        assert!((big - 2.0 / 27.0).abs() < 1e-6);
        for s in 3..=7 {
            let star = make_full_star(s).unwrap();
            let l = lagrangian_lower(&star, &quick()).unwrap().lower_bound;
            assert!(l <= star_lagrangian_bound(s).unwrap() + 1e-12, "s={s}");
        }
    }

    #[test]
    fn blowup_bound_examples() {
        let g = make_g26();
        assert!(check_blowup_bound(&g, &BlowupSpec::uniform(6, 2).unwrap(), &quick()).unwrap());
        let edge = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let spec = BlowupSpec::new(vec![1, 2, 3]).unwrap();
        assert!(check_blowup_bound(&edge, &spec, &quick()).unwrap());
        assert!(check_blowup_bound(&g, &BlowupSpec::uniform(5, 1).unwrap(), &quick()).is_err());
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(5).len(), 120);
    }
}
