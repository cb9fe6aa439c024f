//! Feasible-region points, induced `K_4^3-` counts and the edit-distance
//! bound obtained from them.
//!
//! The named constructions also have closed-form shadow and edge counts,
//! which give their region points at any `n`, including beyond the 64
//! vertices a materialized hypergraph can hold.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, full_mask, k_subsets};
use crate::constructions::{self, make_g26, make_kostochka, KostochkaSpec};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::{rational_to_f64, Rational};

/// `(|∂H| / C(n, r-1), |H| / C(n, r))`, exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionPoint {
    pub n: usize,
    pub r: usize,
    pub shadow_size: u128,
    pub edge_count: u128,
    pub shadow_density: Rational,
    pub edge_density: Rational,
}

impl RegionPoint {
    pub fn from_counts(n: usize, r: usize, shadow_size: u128, edge_count: u128) -> Self {
        let density = |count: u128, k: usize| {
            let total = bits::binomial(n, k);
            if total == 0 {
                Rational::from_integer(0)
            } else {
                Rational::new(count as i128, total as i128)
            }
        };
        RegionPoint {
            n,
            r,
            shadow_size,
            edge_count,
            shadow_density: density(shadow_size, r - 1),
            edge_density: density(edge_count, r),
        }
    }

    pub fn shadow_f64(&self) -> f64 {
        rational_to_f64(&self.shadow_density)
    }

    pub fn edge_f64(&self) -> f64 {
        rational_to_f64(&self.edge_density)
    }

    /// Largest coordinate distance to `(x, y)`.
    pub fn distance_to(&self, x: f64, y: f64) -> f64 {
        (self.shadow_f64() - x)
            .abs()
            .max((self.edge_f64() - y).abs())
    }
}

pub fn region_point(h: &Hypergraph) -> RegionPoint {
    RegionPoint::from_counts(
        h.vertex_count(),
        h.uniformity(),
        h.shadow().len() as u128,
        h.edge_count() as u128,
    )
}

/// Region point of `G1(n)` from its part sizes.
pub fn g1_region_point(n: usize) -> Result<RegionPoint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("G1 needs n >= 3, got {n}")));
    }
    let a = (n / 3) as u128;
    let b = (n - n / 3) as u128;
    let shadow = b * (b - 1) / 2 + a * b;
    Ok(RegionPoint::from_counts(
        n,
        3,
        shadow,
        constructions::g1_size(n),
    ))
}

/// Region point of `G2(n)`: parts are independent, so a pair is in the
/// shadow when its parts span a pair of `G2(6)` (all of them do).
pub fn g2_region_point(n: usize) -> Result<RegionPoint> {
    let parts = constructions::g2_parts(n)?;
    let g = make_g26();
    let shadow: u128 = g
        .shadow()
        .masks()
        .iter()
        .map(|&p| {
            bits::iter_members(p)
                .map(|v| parts[v] as u128)
                .product::<u128>()
        })
        .sum();
    Ok(RegionPoint::from_counts(
        n,
        3,
        shadow,
        constructions::blowup_size(&g, &parts),
    ))
}

/// Region point of the full star `S_n`.
pub fn full_star_region_point(n: usize) -> RegionPoint {
    let edges = bits::binomial(n.saturating_sub(1), 2);
    let shadow = if n >= 3 { bits::binomial(n, 2) } else { 0 };
    RegionPoint::from_counts(n, 3, shadow, edges)
}

/// Number of 4-sets spanning exactly three edges.
pub fn count_induced_k43minus(h: &Hypergraph) -> u64 {
    count_4sets(h, 3)
}

fn count_4sets(h: &Hypergraph, edges: usize) -> u64 {
    if h.uniformity() != 3 || h.vertex_count() < 4 {
        return 0;
    }
    let n = h.vertex_count();
    (0..n)
        .into_par_iter()
        .map(|first| {
            let later = full_mask(n) & !full_mask(first + 1);
            k_subsets(later, 3)
                .filter(|&rest| {
                    let s = rest | bit(first);
                    k_subsets(s, 3).filter(|&t| h.has_edge(t)).count() == edges
                })
                .count() as u64
        })
        .sum()
}

pub fn is_k4_free(h: &Hypergraph) -> bool {
    count_4sets(h, 4) == 0
}

/// `m²(n-3m)(n-3m-3)/6`.
pub fn phi_formula(n: usize, m: usize) -> Result<u128> {
    KostochkaSpec::new(n, m)?;
    let (n, m) = (n as i128, m as i128);
    let value = m * m * (n - 3 * m) * (n - 3 * m - 3) / 6;
    Ok(value as u128)
}

/// `3m²·C(n/3 - m, 2)`, the same quantity.
pub fn phi_by_classes(n: usize, m: usize) -> Result<u128> {
    KostochkaSpec::new(n, m)?;
    Ok(3 * (m as u128).pow(2) * bits::binomial(n / 3 - m, 2))
}

/// `|count(H1) - count(H2)| / (n - 3)`: one edge edit changes the number
/// of induced `K_4^3-` by at most `n - 3`.
pub fn edit_distance_lower_bound(h1: &Hypergraph, h2: &Hypergraph) -> Result<Rational> {
    let n = h1.vertex_count();
    if h2.vertex_count() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h2.vertex_count(),
        });
    }
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "edit distance bound needs n >= 4, got {n}"
        )));
    }
    if h1.uniformity() != 3 || h2.uniformity() != 3 {
        return Err(Error::InvalidParameter(
            "edit distance bound is for 3-graphs".into(),
        ));
    }
    let c1 = count_induced_k43minus(h1) as i128;
    let c2 = count_induced_k43minus(h2) as i128;
    Ok(Rational::new((c1 - c2).abs(), n as i128 - 3))
}

/// Complements of `G(n, m)` for each `m`, each checked to be `K_4^3`-free.
pub fn kostochka_complement_family(n: usize, ms: &[usize]) -> Result<Vec<Hypergraph>> {
    ms.iter()
        .map(|&m| {
            let c = make_kostochka(KostochkaSpec::new(n, m)?).complement();
            if is_k4_free(&c) {
                Ok(c)
            } else {
                Err(Error::InvalidParameter(format!(
                    "complement of G({n}, {m}) contains K4"
                )))
            }
        })
        .collect()
}
