//! Symmetrization by vertex duplication, with and without cleaning.
//!
//! Labels are fixed for the whole run: the working hypergraph always lives
//! on the input's label set, removed vertices are dropped from an `alive`
//! mask, and duplicated vertices reuse the labels of the class they replace.
//!
//! Tie-breaking:
//!
//! * the pair `(u, v)` minimizes `(-max(d(u), d(v)), min label, max label)`
//!   over non-adjacent non-equivalent pairs; `u` has the larger degree, the
//!   smaller label on a tie;
//! * cleaning removes the smallest label among the poset-minimal vertices
//!   of minimum degree.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, iter_members, k_subsets, members};
use crate::error::{Error, Result};
use crate::hypergraph::{BlowupSpec, Hypergraph};
use crate::Rational;

/// Equivalence classes (non-adjacent with equal links) of the alive
/// vertices, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceClasses {
    pub classes: Vec<Vec<usize>>,
    /// Class index of each label, `None` for vertices that are not alive.
    pub class_of: Vec<Option<usize>>,
}

impl EquivalenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_mask(&self, v: usize) -> u64 {
        self.class_of[v].map_or(0, |c| self.classes[c].iter().fold(0, |m, &x| m | bit(x)))
    }

    /// The smallest member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

pub fn equivalence_classes(h: &Hypergraph) -> EquivalenceClasses {
    classes_on(h, h.vertex_mask())
}

fn links(h: &Hypergraph) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new(); h.vertex_count()];
    for &e in h.edges() {
        for v in iter_members(e) {
            out[v].push(e & !bit(v));
        }
    }
    out.iter_mut().for_each(|l| l.sort_unstable());
    out
}

fn classes_on(h: &Hypergraph, alive: u64) -> EquivalenceClasses {
    let adj = h.adjacency_masks();
    let link = links(h);
    let mut class_of = vec![None; h.vertex_count()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in iter_members(alive) {
        let found = classes
            .iter()
            .position(|c| adj[c[0]] & bit(v) == 0 && link[c[0]] == link[v]);
        match found {
            Some(i) => {
                classes[i].push(v);
                class_of[v] = Some(i);
            }
            None => {
                class_of[v] = Some(classes.len());
                classes.push(vec![v]);
            }
        }
    }
    EquivalenceClasses { classes, class_of }
}

fn min_degree(h: &Hypergraph, alive: u64) -> Option<usize> {
    let d = h.degrees();
    iter_members(alive).map(|v| d[v]).min()
}

/// The pair `(u, v)` to symmetrize, `u` being the vertex duplicated.
fn choose_pair(h: &Hypergraph, alive: u64) -> Option<(usize, usize)> {
    let adj = h.adjacency_masks();
    let link = links(h);
    let d = h.degrees();
    type Key = (std::cmp::Reverse<usize>, usize, usize);
    let mut best: Option<(Key, (usize, usize))> = None;
    let verts = members(alive);
    for (i, &a) in verts.iter().enumerate() {
        for &b in &verts[i + 1..] {
            if adj[a] & bit(b) != 0 || link[a] == link[b] {
                continue;
            }
            let key = (std::cmp::Reverse(d[a].max(d[b])), a, b);
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                let pair = if d[b] > d[a] { (b, a) } else { (a, b) };
                best = Some((key, pair));
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Deletes the class `cv` and puts a copy of `u` on each of its labels.
fn duplicate(h: &Hypergraph, u: usize, cv: u64) -> Hypergraph {
    let link_u: Vec<u64> = h
        .edges()
        .iter()
        .filter(|&&e| e & bit(u) != 0)
        .map(|&e| e & !bit(u))
        .collect();
    let mut edges: Vec<u64> = h.edges().iter().copied().filter(|&e| e & cv == 0).collect();
    for w in iter_members(cv) {
        edges.extend(link_u.iter().map(|&a| a | bit(w)));
    }
    Hypergraph::from_masks(h.uniformity(), h.vertex_count(), edges).expect("duplication is valid")
}

fn remove_vertex(h: &Hypergraph, z: usize) -> Hypergraph {
    Hypergraph::from_masks(
        h.uniformity(),
        h.vertex_count(),
        h.edges().iter().copied().filter(|&e| e & bit(z) == 0),
    )
    .expect("subset of valid edges")
}

/// One duplication: the class `from` (containing `v`) is replaced by copies
/// of `to`, whose class before the step was `to_class`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrizeStep {
    pub from: Vec<usize>,
    pub to: usize,
    pub to_class: Vec<usize>,
}

/// Round `0` holds the initial cleaning; round `i ≥ 1` an optional
/// duplication followed by the cleaning removals `Z_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub symmetrize: Option<SymmetrizeStep>,
    pub removed: Vec<usize>,
    /// Size and minimum degree of `H_i`.
    pub vertices: usize,
    pub min_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetrizationTrace {
    pub algorithm: u8,
    pub alpha: Option<Rational>,
    pub input: Hypergraph,
    pub rounds: Vec<Round>,
    /// The output on the input's label set; removed labels are isolated.
    pub output: Hypergraph,
    /// Labels of the output's vertex set `W`.
    pub vertices: Vec<usize>,
}

impl SymmetrizationTrace {
    pub fn alive_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    /// The output with its vertex set relabeled to `0..|W|`.
    pub fn output_graph(&self) -> Hypergraph {
        self.output.induced(self.alive_mask())
    }

    /// All removed vertices `Z`, in removal order.
    pub fn removed(&self) -> Vec<usize> {
        self.rounds
            .iter()
            .flat_map(|r| r.removed.iter().copied())
            .collect()
    }

    pub fn symmetrize_steps(&self) -> usize {
        self.rounds
            .iter()
            .filter(|r| r.symmetrize.is_some())
            .count()
    }

    /// `(H_i, alive_i)` for every round, recomputed from the input.
    pub fn states(&self) -> Result<Vec<(Hypergraph, u64)>> {
        let mut h = self.input.clone();
        let mut alive = h.vertex_mask();
        let mut out = Vec::with_capacity(self.rounds.len());
        for round in &self.rounds {
            if let Some(step) = &round.symmetrize {
                let cv = step.from.iter().fold(0, |m, &x| m | bit(x));
                if cv & !alive != 0 || alive & bit(step.to) == 0 || cv & bit(step.to) != 0 {
                    return Err(Error::InvalidParameter(
                        "trace step on dead vertices".into(),
                    ));
                }
                h = duplicate(&h, step.to, cv);
            }
            for &z in &round.removed {
                if alive & bit(z) == 0 {
                    return Err(Error::InvalidParameter(format!("vertex {z} removed twice")));
                }
                h = remove_vertex(&h, z);
                alive &= !bit(z);
            }
            out.push((h.clone(), alive));
        }
        Ok(out)
    }

    /// Replaying the events reproduces the recorded output.
    pub fn replay_matches(&self) -> bool {
        match self.states() {
            Ok(states) => match states.last() {
                Some((h, alive)) => *h == self.output && *alive == self.alive_mask(),
                None => self.input == self.output,
            },
            Err(_) => false,
        }
    }
}

/// Symmetrization without cleaning.
pub fn algorithm1(h: &Hypergraph) -> SymmetrizationTrace {
    let alive = h.vertex_mask();
    let mut cur = h.clone();
    let mut rounds = vec![Round {
        vertices: h.vertex_count(),
        min_degree: h.min_degree().unwrap_or(0),
        ..Round::default()
    }];
    while let Some((u, v)) = choose_pair(&cur, alive) {
        let classes = classes_on(&cur, alive);
        let cv = classes.class_mask(v);
        let step = SymmetrizeStep {
            from: members(cv),
            to: u,
            to_class: members(classes.class_mask(u)),
        };
        cur = duplicate(&cur, u, cv);
        rounds.push(Round {
            symmetrize: Some(step),
            removed: Vec::new(),
            vertices: h.vertex_count(),
            min_degree: cur.min_degree().unwrap_or(0),
        });
    }
    SymmetrizationTrace {
        algorithm: 1,
        alpha: None,
        input: h.clone(),
        rounds,
        output: cur,
        vertices: members(alive),
    }
}

/// `δ ≥ α·C(v-1, 2)` in integers: `Q·2·δ ≥ P·(v-1)(v-2)`.
pub fn is_alpha_dense(h: &Hypergraph, alive: u64, alpha: Rational) -> bool {
    let v = alive.count_ones() as i128;
    let Some(delta) = min_degree(h, alive) else {
        return true;
    };
    if v < 3 {
        return true;
    }
    *alpha.denom() * 2 * delta as i128 >= *alpha.numer() * (v - 1) * (v - 2)
}

fn check_alpha(alpha: Rational) -> Result<()> {
    if alpha < Rational::from_integer(0) || alpha > Rational::from_integer(1) {
        Err(Error::InvalidParameter(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )))
    } else {
        Ok(())
    }
}

/// `4/9 - 3·sqrt(ε)` rounded to a multiple of `10^-9`.
pub fn alpha_from_epsilon(eps: f64) -> Result<Rational> {
    let value = 4.0 / 9.0 - 3.0 * eps.sqrt();
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::InvalidParameter(format!(
            "alpha {value} outside [0, 1]"
        )));
    }
    let den = 1_000_000_000i128;
    Ok(Rational::new((value * den as f64).round() as i128, den))
}

/// Strict partial order on labels, kept transitively closed:
/// `below[x]` is the set of `y` with `y ≺ x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RemovalPoset {
    below: Vec<u64>,
}

impl RemovalPoset {
    pub fn new(n: usize) -> Self {
        RemovalPoset { below: vec![0; n] }
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.below[b] & bit(a) != 0
    }

    /// Adds `a ≺ b` for all `a ∈ lower`, `b ∈ upper`, then closes.
    pub fn add(&mut self, lower: u64, upper: u64) {
        let add = iter_members(lower).fold(lower, |m, a| m | self.below[a]);
        let mut raise = upper;
        for x in 0..self.below.len() {
            if self.below[x] & upper != 0 {
                raise |= bit(x);
            }
        }
        for x in iter_members(raise) {
            self.below[x] |= add;
        }
        debug_assert!(self.is_acyclic());
    }

    pub fn is_acyclic(&self) -> bool {
        self.below.iter().enumerate().all(|(x, &b)| b & bit(x) == 0)
    }

    /// Smallest label in `set` with nothing of `set` below it.
    pub fn minimal_in(&self, set: u64) -> Option<usize> {
        iter_members(set).find(|&x| self.below[x] & set == 0)
    }
}

/// Symmetrization and cleaning with threshold `alpha`.
pub fn algorithm2(h: &Hypergraph, alpha: Rational) -> Result<SymmetrizationTrace> {
    check_alpha(alpha)?;
    let n = h.vertex_count();
    let mut cur = h.clone();
    let mut alive = h.vertex_mask();
    let mut poset = RemovalPoset::new(n);
    let snapshot = |r: Round, cur: &Hypergraph, alive: u64| Round {
        vertices: alive.count_ones() as usize,
        min_degree: min_degree(cur, alive).unwrap_or(0),
        ..r
    };

    let mut initial = Vec::new();
    clean(&mut cur, &mut alive, &poset, alpha, &mut initial);
    let mut rounds = vec![snapshot(
        Round {
            removed: initial,
            ..Round::default()
        },
        &cur,
        alive,
    )];

    loop {
        if cur.is_empty() {
            break;
        }
        let pair = choose_pair(&cur, alive);
        let dense = is_alpha_dense(&cur, alive, alpha);
        if dense && pair.is_none() {
            break;
        }
        let mut round = Round::default();
        if let Some((u, v)) = pair {
            let classes = classes_on(&cur, alive);
            let cv = classes.class_mask(v);
            let cu = classes.class_mask(u);
            cur = duplicate(&cur, u, cv);
            poset.add(cv, cu);
            round.symmetrize = Some(SymmetrizeStep {
                from: members(cv),
                to: u,
                to_class: members(cu),
            });
        }
        clean(&mut cur, &mut alive, &poset, alpha, &mut round.removed);
        rounds.push(snapshot(round, &cur, alive));
    }
    Ok(SymmetrizationTrace {
        algorithm: 2,
        alpha: Some(alpha),
        input: h.clone(),
        rounds,
        output: cur,
        vertices: members(alive),
    })
}

fn clean(
    cur: &mut Hypergraph,
    alive: &mut u64,
    poset: &RemovalPoset,
    alpha: Rational,
    out: &mut Vec<usize>,
) {
    while !cur.is_empty() && !is_alpha_dense(cur, *alive, alpha) {
        let d = cur.degrees();
        let delta = iter_members(*alive)
            .map(|v| d[v])
            .min()
            .expect("alive vertices");
        let b = iter_members(*alive)
            .filter(|&v| d[v] == delta)
            .fold(0u64, |m, v| m | bit(v));
        let z = poset
            .minimal_in(b)
            .expect("finite posets have minimal elements");
        *cur = remove_vertex(cur, z);
        *alive &= !bit(z);
        out.push(z);
    }
}

/// No two alive vertices are non-adjacent and non-equivalent.
pub fn is_symmetric(h: &Hypergraph, alive: u64) -> bool {
    choose_pair(h, alive).is_none()
}

/// `H_i[W]` for every round, relabeled onto `0..|W|`.
pub fn restrict_trace(trace: &SymmetrizationTrace, w: &[usize]) -> Result<Vec<Hypergraph>> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted != trace.vertices {
        return Err(Error::InvalidParameter(
            "W must be the vertex set of the trace's output".into(),
        ));
    }
    let wm = trace.alive_mask();
    Ok(trace
        .states()?
        .into_iter()
        .map(|(h, _)| h.induced(wm))
        .collect())
}

/// Consecutive restrictions to `W` are equal, or the later one arises by
/// deleting `V_i = C_v ∩ W` and duplicating a vertex of `U_i = C_u ⊆ W`.
pub fn check_dichotomy(trace: &SymmetrizationTrace) -> Result<bool> {
    let wm = trace.alive_mask();
    let states = trace.states()?;
    let within = |h: &Hypergraph| {
        Hypergraph::from_masks(3, h.vertex_count(), h.edges_within(wm)).expect("valid edges")
    };
    for i in 1..states.len() {
        let prev = within(&states[i - 1].0);
        let next = within(&states[i].0);
        let ok = match &trace.rounds[i].symmetrize {
            None => prev == next,
            Some(step) => {
                let vi = step.from.iter().fold(0u64, |m, &x| m | bit(x)) & wm;
                let ui = step.to_class.iter().fold(0u64, |m, &x| m | bit(x));
                if vi == 0 {
                    prev == next
                } else {
                    ui & !wm == 0 && duplicate(&prev, step.to, vi) == next
                }
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Representatives `T` (smallest label per class) with class sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupStructure {
    pub representatives: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// `H[T]`, relabeled onto `0..|T|`.
    pub pattern: Hypergraph,
}

pub fn blowup_structure(h: &Hypergraph, alive: u64) -> BlowupStructure {
    let classes = classes_on(h, alive);
    let representatives = classes.representatives();
    let class_sizes = classes.classes.iter().map(Vec::len).collect();
    let t = representatives.iter().fold(0u64, |m, &v| m | bit(v));
    BlowupStructure {
        representatives,
        class_sizes,
        pattern: h.induced(t),
    }
}

impl BlowupStructure {
    pub fn spec(&self) -> Result<BlowupSpec> {
        BlowupSpec::new(self.class_sizes.clone())
    }
}

/// `H[alive]` equals the blowup of `H[T]` by the class sizes: a triple of
/// alive vertices is an edge exactly when its classes are distinct and
/// their representatives form an edge.
pub fn is_blowup_of_representatives(h: &Hypergraph, alive: u64) -> bool {
    let classes = classes_on(h, alive);
    let rep = |v: usize| classes.classes[classes.class_of[v].expect("alive")][0];
    k_subsets(alive, h.uniformity()).all(|s| {
        let img = iter_members(s).fold(0u64, |m, v| m | bit(rep(v)));
        let expected = img.count_ones() as usize == h.uniformity() && h.has_edge(img);
        h.has_edge(s) == expected
    })
}
