//! Batch verification of the library's headline claims.
//!
//! Every claim recomputes its quantities from scratch and reports a single
//! pass/fail verdict plus the measured values. Random inputs are drawn from
//! `ChaCha8Rng` seeded from the report seed, so reports are reproducible up
//! to their timings.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{binomial, full_mask, k_subsets};
use crate::constructions::{
    g1_size, g2_size, make_complete, make_g1, make_g2, make_g26, make_kostochka, KostochkaSpec,
};
use crate::embed::contains_subgraph;
use crate::error::{Error, Result};
use crate::family_m::{g1_bound, g2_bound, is_g26_colorable, is_m_free, is_semibipartite};
use crate::hypergraph::{BlowupSpec, Hypergraph};
use crate::lagrangian::{lagrangian_certified, verify_five_vertex_sweep, LagrangianConfig};
use crate::region::{
    count_induced_k43minus, edit_distance_lower_bound, full_star_region_point, g1_region_point,
    g2_region_point, is_k4_free, phi_formula,
};
use crate::search::{max_free_edges, two_n_cubed_bound, Family, SearchConfig};
use crate::symmetrize::{
    algorithm1, algorithm2, alpha_from_epsilon, blowup_structure, check_dichotomy, is_alpha_dense,
    is_blowup_of_representatives, is_symmetric,
};
use crate::{rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Lagrangian,
    Search,
    Region,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Suite::Core),
            "lagrangian" => Ok(Suite::Lagrangian),
            "search" => Ok(Suite::Search),
            "region" => Ok(Suite::Region),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidMode(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Core => "core",
            Suite::Lagrangian => "lagrangian",
            Suite::Search => "search",
            Suite::Region => "region",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

/// A rational with its float rendering, as it appears in reports.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Exact {
    pub num: i128,
    pub den: i128,
    pub float: f64,
}

impl From<Rational> for Exact {
    fn from(x: Rational) -> Self {
        Exact {
            num: *x.numer(),
            den: *x.denom(),
            float: rational_to_f64(&x),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Measured {
    pub name: String,
    pub value: f64,
    pub exact: Option<Exact>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub measured: Vec<Measured>,
    pub detail: String,
    pub seconds: f64,
}

impl Claim {
    fn new(id: &str, statement: &str) -> Self {
        Claim {
            id: id.to_string(),
            statement: statement.to_string(),
            passed: true,
            measured: Vec::new(),
            detail: String::new(),
            seconds: 0.0,
        }
    }

    fn float(&mut self, name: &str, value: f64) {
        self.measured.push(Measured {
            name: name.to_string(),
            value,
            exact: None,
        });
    }

    fn exact(&mut self, name: &str, value: Rational) {
        self.measured.push(Measured {
            name: name.to_string(),
            value: rational_to_f64(&value),
            exact: Some(value.into()),
        });
    }

    fn count(&mut self, name: &str, value: u128) {
        self.exact(name, Rational::from_integer(value as i128));
    }

    fn require(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(&failure());
        }
    }

    /// A one-line summary: verdict, id and measured values.
    pub fn line(&self) -> String {
        let values: Vec<String> = self
            .measured
            .iter()
            .map(|m| match &m.exact {
                Some(e) if e.den == 1 => format!("{}={}", m.name, e.num),
                Some(e) => format!("{}={}/{} ({:.9})", m.name, e.num, e.den, e.float),
                None => format!("{}={:.9}", m.name, m.value),
            })
            .collect();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} {} [{}]", self.id, values.join(", "));
        if !self.detail.is_empty() {
            s.push_str(" -- ");
            s.push_str(&self.detail);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub claims: Vec<Claim>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }
}

pub type ClaimFn = fn(u64) -> Result<Claim>;

const SEARCH: &[ClaimFn] = &[search_n6, search_small];
const LAGRANGIAN: &[ClaimFn] = &[lagrangian_values, five_vertex_sweep];
const REGION: &[ClaimFn] = &[phi_counts, region_targets, edit_distance_examples];
const CORE: &[ClaimFn] = &[
    search_n6,
    lagrangian_values,
    five_vertex_sweep,
    phi_counts,
    kostochka_sizes,
    constructions_m_free,
    algorithm1_contracts,
    blowup_equivalence,
    region_targets,
    partition_bounds,
    algorithm2_diagnostics,
];

/// Claims run by a suite, in report order.
pub fn suite_claims(suite: Suite) -> Vec<ClaimFn> {
    match suite {
        Suite::Core => CORE.to_vec(),
        Suite::Lagrangian => LAGRANGIAN.to_vec(),
        Suite::Search => SEARCH.to_vec(),
        Suite::Region => REGION.to_vec(),
        Suite::All => {
            let mut all = CORE.to_vec();
            all.extend([search_small as ClaimFn, edit_distance_examples]);
            all
        }
    }
}

/// Runs every claim of the suite. `progress` sees each claim as it finishes.
pub fn run_suite(suite: Suite, seed: u64, mut progress: impl FnMut(&Claim)) -> VerifyReport {
    let claims = suite_claims(suite)
        .into_iter()
        .map(|f| {
            let start = Instant::now();
            let mut claim = match f(seed) {
                Ok(c) => c,
                Err(e) => {
                    let mut c = Claim::new("error", "claim raised an error");
                    c.require(false, || e.to_string());
                    c
                }
            };
            claim.seconds = start.elapsed().as_secs_f64();
            progress(&claim);
            claim
        })
        .collect();
    VerifyReport {
        suite,
        seed,
        claims,
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Hypergraph {
    let edges: Vec<u64> = k_subsets(full_mask(n), 3)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Hypergraph::from_masks(3, n, edges).expect("triples of [n]")
}

fn random_subgraph(rng: &mut impl Rng, h: &Hypergraph, keep: f64) -> Hypergraph {
    let mut perm: Vec<usize> = (0..h.vertex_count()).collect();
    perm.shuffle(rng);
    let g = h.relabeled(&perm).expect("permutation");
    let edges: Vec<u64> = g
        .edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(keep))
        .collect();
    Hypergraph::from_masks(3, g.vertex_count(), edges).expect("subset of edges")
}

fn search_n6(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "search-n6",
        "the largest M-free 3-graph on 6 vertices has 2*6^3/27 = 16 edges and is G2(6)",
    );
    let r = max_free_edges(&SearchConfig::new(6, Family::M))?;
    let g = make_g26();
    c.count("max_edges", r.max_edges as u128);
    c.exact("bound", two_n_cubed_bound(6));
    c.count("nodes", r.nodes_expanded as u128);
    c.require(r.optimal, || "search did not finish".into());
    c.require(
        Rational::from_integer(r.max_edges as i128) == two_n_cubed_bound(6),
        || format!("expected 16 edges, got {}", r.max_edges),
    );
    c.require(
        contains_subgraph(&g, &r.witness).is_some() && contains_subgraph(&r.witness, &g).is_some(),
        || "witness is not isomorphic to G2(6)".into(),
    );
    Ok(c)
}

fn search_small(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "search-small",
        "ex(n, M) for n = 3, 4, 5 stays below 2n^3/27",
    );
    for n in 3..=5 {
        let r = max_free_edges(&SearchConfig::new(n, Family::M))?;
        c.count(&format!("ex({n})"), r.max_edges as u128);
        let bound = two_n_cubed_bound(n);
        c.require(
            r.optimal && Rational::from_integer(r.max_edges as i128) <= bound,
            || format!("n={n}: {} edges exceeds {bound}", r.max_edges),
        );
        c.require(is_m_free(&r.witness).is_none(), || {
            format!("n={n}: witness not M-free")
        });
    }
    Ok(c)
}

fn lagrangian_values(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "lagrangian-values",
        "lambda(K4) = 1/16 and lambda(G2(6)) = 2/27 at the uniform point, both certified",
    );
    let config = LagrangianConfig {
        seed,
        ..LagrangianConfig::default()
    };
    for (name, h, target) in [
        ("k4", make_complete(4, 3)?, Rational::new(1, 16)),
        ("g26", make_g26(), Rational::new(2, 27)),
    ] {
        let r = lagrangian_certified(&h, &config, 120)?;
        let ub = r.certificate.clone().expect("certified");
        let t = rational_to_f64(&target);
        c.float(&format!("{name}_lower"), r.lower_bound);
        c.exact(&format!("{name}_upper"), ub.exact);
        c.float(&format!("{name}_correction"), ub.correction);
        c.require((r.lower_bound - t).abs() <= 1e-9, || {
            format!(
                "{name}: lower bound {} not within 1e-9 of {t}",
                r.lower_bound
            )
        });
        c.require(ub.exact >= target && ub.lattice_max <= t + 1e-12, || {
            format!("{name}: certificate inconsistent with {target}")
        });
        c.require(ub.value <= t + ub.correction + 1e-12, || {
            format!("{name}: upper bound exceeds target plus correction")
        });
        if name == "g26" {
            let off = r
                .maximizer
                .weights()
                .iter()
                .map(|w| (w - 1.0 / 6.0).abs())
                .fold(0.0, f64::max);
            c.float("g26_distance_to_uniform", off);
            c.require(off <= 1e-6, || format!("maximizer {off} away from uniform"));
        }
    }
    Ok(c)
}

fn five_vertex_sweep(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "five-vertex-sweep",
        "every 3-graph on 5 vertices with at most 8 edges has certified lambda < 2/27 - 1e-3, \
         and every 8-edge one embeds in G2(6)",
    );
    let config = LagrangianConfig {
        seed,
        ..LagrangianConfig::default()
    };
    let r = verify_five_vertex_sweep(120, &config)?;
    c.count("instances", r.instances as u128);
    c.count("isomorphism_classes", r.isomorphism_classes as u128);
    c.count("eight_edge_instances", r.eight_edge_instances as u128);
    c.float("max_lower_bound", r.max_lower_bound);
    c.float("max_certified", r.max_certified);
    c.float("min_gap", r.min_gap);
    let all: u128 = (0..=8).map(|k| binomial(10, k)).sum();
    c.require(r.instances as u128 == all, || {
        format!("swept {} of {all}", r.instances)
    });
    c.require(r.passed, || {
        format!("gap {} below margin {}", r.min_gap, r.margin)
    });
    c.require(r.eight_edge_all_embed, || {
        "an 8-edge instance misses G2(6)".into()
    });
    Ok(c)
}

fn phi_counts(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "phi-formula",
        "G(n, m) has m^2(n-3m)(n-3m-3)/6 induced copies of K4 minus an edge",
    );
    let mut checked = 0u128;
    for n in [6, 9, 12, 15] {
        for m in 0..=n / 3 {
            let count = count_induced_k43minus(&make_kostochka(KostochkaSpec::new(n, m)?)) as u128;
            let phi = phi_formula(n, m)?;
            checked += 1;
            c.require(count == phi, || {
                format!("n={n} m={m}: counted {count}, formula {phi}")
            });
        }
    }
    c.count("pairs_checked", checked);
    c.count("phi(15,2)", phi_formula(15, 2)?);
    Ok(c)
}

fn kostochka_sizes(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "kostochka",
        "|G(n, m)| = n(n-3)(2n-3)/27 and its complement is K4-free",
    );
    for n in [6, 9, 12] {
        let formula = (n * (n - 3) * (2 * n - 3) / 27) as u128;
        for m in 0..=n / 3 {
            let g = make_kostochka(KostochkaSpec::new(n, m)?);
            c.require(g.edge_count() as u128 == formula, || {
                format!("n={n} m={m}: {} edges, formula {formula}", g.edge_count())
            });
            c.require(is_k4_free(&g.complement()), || {
                format!("n={n} m={m}: complement has K4")
            });
        }
        c.count(&format!("size({n})"), formula);
    }
    Ok(c)
}

fn constructions_m_free(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "constructions-m-free",
        "G1(n) and G2(n) are M-free for n = 6..10",
    );
    for n in 6..=10 {
        let g1 = make_g1(n)?;
        let g2 = make_g2(n)?;
        c.require(is_m_free(&g1).is_none(), || {
            format!("G1({n}) contains a member of M")
        });
        c.require(is_m_free(&g2).is_none(), || {
            format!("G2({n}) contains a member of M")
        });
        c.require(g1.edge_count() as u128 == g1_size(n), || {
            format!("|G1({n})| wrong")
        });
        c.require(g2.edge_count() as u128 == g2_size(n)?, || {
            format!("|G2({n})| wrong")
        });
    }
    c.count("g1(10)", g1_size(10));
    c.count("g2(10)", g2_size(10)?);
    Ok(c)
}

fn algorithm1_contracts(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "algorithm1-contracts",
        "symmetrization never loses edges, ends at a 2-covered blowup and preserves M-freeness",
    );
    let mut rng = rng(seed, 7);
    let mut m_free_inputs = 0u128;
    for i in 0..200 {
        let n = rng.gen_range(4..=9);
        let h = if n >= 6 && i % 2 == 1 {
            let base = if rng.gen_bool(0.5) {
                make_g1(n)?
            } else {
                make_g2(n)?
            };
            let keep = rng.gen_range(0.5..=1.0);
            random_subgraph(&mut rng, &base, keep)
        } else {
            let p = rng.gen_range(0.05..0.7);
            random_graph(&mut rng, n, p)
        };
        let t = algorithm1(&h);
        let out = &t.output;
        c.require(out.edge_count() >= h.edge_count(), || {
            format!("#{i}: edges lost")
        });
        c.require(is_blowup_of_representatives(out, out.vertex_mask()), || {
            format!("#{i}: output is not a blowup of its representatives")
        });
        let structure = blowup_structure(out, out.vertex_mask());
        if !out.is_empty() {
            c.require(structure.pattern.is_2_covered(), || {
                format!("#{i}: H[T] not 2-covered")
            });
        }
        let expected = structure.pattern.blowup(&structure.spec()?)?;
        c.require(out.edge_count() == expected.edge_count(), || {
            format!("#{i}: class sizes do not reproduce the edge count")
        });
        if is_m_free(&h).is_none() {
            m_free_inputs += 1;
            for (g, alive) in t.states()? {
                c.require(is_m_free(&g.induced(alive)).is_none(), || {
                    format!("#{i}: an intermediate graph contains a member of M")
                });
            }
        }
    }
    c.count("inputs", 200);
    c.count("m_free_inputs", m_free_inputs);
    Ok(c)
}

fn blowup_equivalence(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "blowup-equivalence",
        "H is M-free exactly when its blowup with parts of size 2 is",
    );
    let mut rng = rng(seed, 8);
    let mut free = 0u128;
    for i in 0..200 {
        let n = rng.gen_range(3..=7);
        let p = rng.gen_range(0.05..0.8);
        let h = random_graph(&mut rng, n, p);
        let b = h.blowup(&BlowupSpec::uniform(n, 2)?)?;
        let (a, bb) = (is_m_free(&h).is_none(), is_m_free(&b).is_none());
        free += a as u128;
        c.require(a == bb, || {
            format!("#{i}: H free = {a}, blowup free = {bb}")
        });
    }
    c.count("inputs", 200);
    c.count("m_free_inputs", free);
    Ok(c)
}

fn region_targets(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "region-targets",
        "G1(240) is near (8/9, 4/9), G2(240) near (5/6, 4/9), the full star has complete shadow",
    );
    let g1 = g1_region_point(240)?;
    let g2 = g2_region_point(240)?;
    let star = full_star_region_point(100);
    c.exact("g1_shadow", g1.shadow_density);
    c.exact("g1_edges", g1.edge_density);
    c.exact("g2_shadow", g2.shadow_density);
    c.exact("g2_edges", g2.edge_density);
    c.exact("star_shadow", star.shadow_density);
    let d1 = g1.distance_to(8.0 / 9.0, 4.0 / 9.0);
    let d2 = g2.distance_to(5.0 / 6.0, 4.0 / 9.0);
    c.require(d1 <= 0.01, || format!("G1(240) is {d1} away"));
    c.require(d2 <= 0.01, || format!("G2(240) is {d2} away"));
    c.require(star.shadow_density == Rational::from_integer(1), || {
        "star shadow incomplete".into()
    });
    Ok(c)
}

fn edit_distance_examples(_seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "edit-distance",
        "the K4-minus-an-edge count separates G(n, m) from G(n, 0)",
    );
    let g = |n, m| KostochkaSpec::new(n, m).map(make_kostochka);
    let a = edit_distance_lower_bound(&g(9, 1)?, &g(9, 0)?)?;
    let b = edit_distance_lower_bound(&g(12, 2)?, &g(12, 0)?)?;
    c.exact("ed_lb(9,1)", a);
    c.exact("ed_lb(12,2)", b);
    c.require(a == Rational::new(1, 2), || format!("G(9,1): {a}"));
    c.require(b == Rational::new(4, 3), || format!("G(12,2): {b}"));
    Ok(c)
}

fn partition_bounds(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "partition-bounds",
        "semibipartite graphs have at most g1(n) edges, G2(6)-colorable ones at most g2(n)",
    );
    let mut rng = rng(seed, 10);
    let g26 = make_g26();
    let mut closest = (u128::MAX, u128::MAX);
    for i in 0..100 {
        let n = rng.gen_range(6..=12);
        let keep = if i % 4 == 0 {
            1.0
        } else {
            rng.gen_range(0.3..1.0)
        };
        let in_a: Vec<bool> = (0..n).map(|_| rng.gen_bool(1.0 / 3.0)).collect();
        let semi: Vec<u64> = k_subsets(full_mask(n), 3)
            .filter(|&e| crate::bits::iter_members(e).filter(|&v| in_a[v]).count() == 1)
            .filter(|_| rng.gen_bool(keep))
            .collect();
        let h = Hypergraph::from_masks(3, n, semi)?;
        let colour: Vec<usize> = (0..n).map(|_| rng.gen_range(0..6)).collect();
        let coloured: Vec<u64> = k_subsets(full_mask(n), 3)
            .filter(|&e| {
                let img = crate::bits::iter_members(e).fold(0u64, |m, v| m | 1 << colour[v]);
                img.count_ones() == 3 && g26.has_edge(img)
            })
            .filter(|_| rng.gen_bool(keep))
            .collect();
        let k = Hypergraph::from_masks(3, n, coloured)?;
        let (b1, b2) = (g1_bound(n)?, g2_bound(n)?);
        c.require(is_semibipartite(&h).is_some(), || {
            format!("#{i}: partition not found")
        });
        c.require(is_g26_colorable(&k).is_some(), || {
            format!("#{i}: colouring not found")
        });
        c.require(h.edge_count() as u128 <= b1, || {
            format!("#{i}: {} > g1({n})", h.edge_count())
        });
        c.require(k.edge_count() as u128 <= b2, || {
            format!("#{i}: {} > g2({n})", k.edge_count())
        });
        closest.0 = closest.0.min(b1 - (h.edge_count() as u128).min(b1));
        closest.1 = closest.1.min(b2 - (k.edge_count() as u128).min(b2));
    }
    c.count("min_slack_g1", closest.0);
    c.count("min_slack_g2", closest.1);
    Ok(c)
}

fn algorithm2_diagnostics(seed: u64) -> Result<Claim> {
    let mut c = Claim::new(
        "algorithm2-diagnostics",
        "on perturbed extremal inputs, cleaning plus symmetrization ends edgeless or \
         alpha-dense with no non-adjacent non-equivalent pair",
    );
    let mut rng = rng(seed, 11);
    let mut trajectories = Vec::new();
    for eps in [0.01, 0.005] {
        let alpha = alpha_from_epsilon(eps)?;
        for n in [12, 18, 24] {
            let bases = [("g1", make_g1(n)?), ("g2", make_g2(n)?)];
            for ((name, base), thin) in bases.iter().flat_map(|b| [(b, false), (b, true)]) {
                let all: Vec<u64> = k_subsets(full_mask(n), 3).collect();
                let flips = (eps * all.len() as f64).round().max(1.0) as usize;
                let mut h = base.clone();
                for &t in all.choose_multiple(&mut rng, flips) {
                    h = if h.has_edge(t) {
                        h.without_edge(t)
                    } else {
                        h.with_edge(t)?
                    };
                }
                if thin {
                    // keep a tenth of the edges at one vertex
                    let v = rng.gen_range(0..n);
                    for e in h.edges().to_vec() {
                        if e & (1 << v) != 0 && !rng.gen_bool(0.1) {
                            h = h.without_edge(e);
                        }
                    }
                }
                let name = if thin {
                    format!("{name}-thin")
                } else {
                    name.to_string()
                };
                let t = algorithm2(&h, alpha)?;
                let out = t.output_graph();
                let alive = t.alive_mask();
                let label = format!("{name}({n}) eps={eps}");
                c.require(
                    out.is_empty() || is_alpha_dense(&t.output, alive, alpha),
                    || format!("{label}: output neither edgeless nor dense"),
                );
                c.require(out.is_empty() || is_symmetric(&t.output, alive), || {
                    format!("{label}: a non-adjacent non-equivalent pair remains")
                });
                c.require(t.replay_matches() && check_dichotomy(&t)?, || {
                    format!("{label}: trace does not replay")
                });
                let degrees: Vec<String> =
                    t.rounds.iter().map(|r| r.min_degree.to_string()).collect();
                trajectories.push(format!(
                    "{label}: |Z|={} |W|={} delta=[{}]",
                    t.removed().len(),
                    t.vertices.len(),
                    degrees.join(",")
                ));
            }
        }
        c.exact(&format!("alpha(eps={eps})"), alpha);
    }
    if c.passed {
        c.detail = trajectories.join("; ");
    }
    Ok(c)
}
