//! Generators for the named hypergraphs.
//!
//! Vertex layouts are fixed so that serialized output is reproducible:
//!
//! * `G1(n)`: `A = {0, .., ⌊n/3⌋-1}`, `B` the rest.
//! * `G2(6)`: vertices `0..6`, complement `{012, 015, 234, 345}`.
//! * blowups: part `i` occupies a consecutive index block, in part order.
//! * `G(n, m)`: `V_j = [j·n/3, (j+1)·n/3)`, its first `m` vertices form
//!   `V_{1,j}` and the rest `V_{2,j}`.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, full_mask, k_subsets, mask_of};
use crate::error::{Error, Result};
use crate::hypergraph::{BlowupSpec, Hypergraph, MAX_VERTICES};

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// The size of `G1(n)`: `⌊n/3⌋ · C(⌈2n/3⌉, 2)`.
pub fn g1_size(n: usize) -> u128 {
    let a = n / 3;
    bits::binomial(n - a, 2) * a as u128
}

/// All triples with one vertex in `A` and two in `B`.
pub fn make_g1(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("G1 needs n >= 3, got {n}")));
    }
    check_size(n)?;
    let a = n / 3;
    let b_mask = full_mask(n) & !full_mask(a);
    let mut edges = Vec::new();
    for x in 0..a {
        for pair in k_subsets(b_mask, 2) {
            edges.push(pair | bit(x));
        }
    }
    Hypergraph::from_masks(3, n, edges)
}

/// Triples missing from `G2(6)`.
pub const G26_COMPLEMENT: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 5], [2, 3, 4], [3, 4, 5]];

pub fn make_g26() -> Hypergraph {
    let missing: Vec<u64> = G26_COMPLEMENT.iter().map(|t| mask_of(t)).collect();
    let edges = k_subsets(full_mask(6), 3).filter(|m| !missing.contains(m));
    Hypergraph::from_masks(3, 6, edges).expect("static construction")
}

/// Part sizes of the largest blowup of `G2(6)` on `n` vertices whose parts
/// have sizes `⌊n/6⌋` or `⌈n/6⌉`. Among the `C(6, n mod 6)` placements of
/// the larger parts the first (lexicographic) one of maximum size wins.
pub fn g2_parts(n: usize) -> Result<Vec<usize>> {
    if n < 6 {
        return Err(Error::InvalidParameter(format!("G2 needs n >= 6, got {n}")));
    }
    let base = n / 6;
    let extra = n % 6;
    let g = make_g26();
    let mut best: Option<(u128, Vec<usize>)> = None;
    for big in k_subsets(full_mask(6), extra) {
        let parts: Vec<usize> = (0..6)
            .map(|i| base + usize::from(big & bit(i) != 0))
            .collect();
        let size = blowup_size(&g, &parts);
        if best.as_ref().is_none_or(|(s, _)| size > *s) {
            best = Some((size, parts));
        }
    }
    Ok(best.expect("at least one placement").1)
}

/// `sum over edges of the product of part sizes`.
pub fn blowup_size(pattern: &Hypergraph, parts: &[usize]) -> u128 {
    pattern
        .edges()
        .iter()
        .map(|&e| {
            bits::iter_members(e)
                .map(|v| parts[v] as u128)
                .product::<u128>()
        })
        .sum()
}

pub fn make_g2(n: usize) -> Result<Hypergraph> {
    check_size(n)?;
    let parts = g2_parts(n)?;
    make_g26().blowup(&BlowupSpec::new(parts)?)
}

pub fn g2_size(n: usize) -> Result<u128> {
    Ok(blowup_size(&make_g26(), &g2_parts(n)?))
}

/// Balanced part sizes: the first `n mod parts` parts get the extra vertex.
pub fn balanced_parts(n: usize, parts: usize) -> Vec<usize> {
    (0..parts)
        .map(|i| n / parts + usize::from(i < n % parts))
        .collect()
}

/// The generalized Turán graph `T_r(n, ℓ)`: `r`-sets meeting each of `ℓ`
/// balanced parts at most once.
pub fn make_turan(r: usize, n: usize, parts: usize) -> Result<Hypergraph> {
    if r < 2 || parts < r || n < parts {
        return Err(Error::InvalidParameter(format!(
            "T_r(n, l) needs l >= r >= 2 and n >= l, got r={r}, n={n}, l={parts}"
        )));
    }
    check_size(n)?;
    make_complete(parts, r)?.blowup(&BlowupSpec::new(balanced_parts(n, parts))?)
}

/// Parameters of Kostochka's construction `G(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostochkaSpec {
    n: usize,
    m: usize,
}

impl KostochkaSpec {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if !n.is_multiple_of(3) || 3 * m > n {
            return Err(Error::InvalidParameter(format!(
                "G(n, m) needs 3 | n and 0 <= m <= n/3, got n={n}, m={m}"
            )));
        }
        check_size(n)?;
        Ok(KostochkaSpec { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `(V_{1,j}, V_{2,j})` as masks.
    pub fn parts(&self, j: usize) -> (u64, u64) {
        let third = self.n / 3;
        let start = j * third;
        let v1 = full_mask(start + self.m) & !full_mask(start);
        let v2 = full_mask(start + third) & !full_mask(start + self.m);
        (v1, v2)
    }

    /// `n(n-3)(2n-3)/27`, independent of `m`.
    pub fn edge_count_formula(&self) -> u128 {
        let n = self.n as u128;
        n * (n - 3.min(n)) * (2 * n).saturating_sub(3) / 27
    }
}

pub fn make_kostochka(spec: KostochkaSpec) -> Hypergraph {
    let whole = |j: usize| {
        let (a, b) = spec.parts(j % 3);
        a | b
    };
    let mut edges = Vec::new();
    for j in 0..3 {
        let (v1, v2) = spec.parts(j);
        let next = whole(j + 1);
        let prev = whole(j + 2);
        let (next1, _) = spec.parts((j + 1) % 3);
        // 1. inside one V_{i,j}
        edges.extend(k_subsets(v1, 3));
        edges.extend(k_subsets(v2, 3));
        for pair in k_subsets(v1, 2) {
            // 2. two in V_{1,j}, one in V_{2,j}
            edges.extend(bits::iter_members(v2).map(|c| pair | bit(c)));
            // 3. two in V_{1,j}, one in V_{j+1}
            edges.extend(bits::iter_members(next).map(|c| pair | bit(c)));
        }
        for pair in k_subsets(v2, 2) {
            // 4. two in V_{2,j}, one in V_{1,j+1}
            edges.extend(bits::iter_members(next1).map(|c| pair | bit(c)));
            // 5. two in V_{2,j}, one in V_{j-1}
            edges.extend(bits::iter_members(prev).map(|c| pair | bit(c)));
        }
        // 6. one each in V_{1,j}, V_{2,j}, V_{j+1}
        for a in bits::iter_members(v1) {
            for b in bits::iter_members(v2) {
                edges.extend(bits::iter_members(next).map(|c| bit(a) | bit(b) | bit(c)));
            }
        }
    }
    Hypergraph::from_masks_dedup(3, spec.n, edges).expect("valid construction")
}

/// `K_ℓ^r`: all `r`-subsets of `ℓ` vertices.
pub fn make_complete(vertices: usize, r: usize) -> Result<Hypergraph> {
    if r == 0 {
        return Err(Error::InvalidUniformity);
    }
    check_size(vertices)?;
    Hypergraph::from_masks(r, vertices, k_subsets(full_mask(vertices), r))
}

/// `K_5^3` with the lexicographically last triple `{2,3,4}` removed.
pub fn make_k53minus() -> Hypergraph {
    let last = mask_of(&[2, 3, 4]);
    Hypergraph::from_masks(3, 5, k_subsets(full_mask(5), 3).filter(|&m| m != last))
        .expect("static construction")
}

/// `F_{3,2}`: edges `{012, 013, 014, 234}`.
pub fn make_f32() -> Hypergraph {
    Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [2, 3, 4]])
        .expect("static construction")
}

/// The full star: every triple through vertex 0.
pub fn make_full_star(n: usize) -> Result<Hypergraph> {
    check_size(n)?;
    if n == 0 {
        return Hypergraph::empty(3, 0);
    }
    let edges: Vec<u64> = k_subsets(full_mask(n) & !1, 2).map(|p| p | 1).collect();
    Hypergraph::from_masks(3, n, edges)
}

/// Named generator lookup used by the command line front end.
pub fn by_name(name: &str, params: &[usize]) -> Result<Hypergraph> {
    let want = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "`{name}` takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "g1" => {
            want(1)?;
            make_g1(params[0])
        }
        "g2" => {
            want(1)?;
            make_g2(params[0])
        }
        "g26" => {
            want(0)?;
            Ok(make_g26())
        }
        "turan" => {
            want(3)?;
            make_turan(params[0], params[1], params[2])
        }
        "kostochka" => {
            want(2)?;
            Ok(make_kostochka(KostochkaSpec::new(params[0], params[1])?))
        }
        "complete" => {
            want(2)?;
            make_complete(params[0], params[1])
        }
        "k53minus" => {
            want(0)?;
            Ok(make_k53minus())
        }
        "f32" => {
            want(0)?;
            Ok(make_f32())
        }
        "star" => {
            want(1)?;
            make_full_star(params[0])
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown construction {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_examples() {
        assert_eq!(make_g1(6).unwrap().edge_count(), 12);
        assert_eq!(make_g1(3).unwrap().edge_count(), 1);
        assert!(make_g1(2).is_err());
        for n in 3..40 {
            assert_eq!(make_g1(n).unwrap().edge_count() as u128, g1_size(n));
        }
        let ratio = g1_size(600) as f64 / 600f64.powi(3);
        assert!((ratio - 2.0 / 27.0).abs() < 1e-3, "{ratio}");
    }

    #[test]
    fn g26_examples() {
        let g = make_g26();
        assert_eq!(g.edge_count(), 16);
        assert!(!g.has_edge(mask_of(&[0, 1, 2])));
        assert!(g.has_edge(mask_of(&[0, 2, 3])));
    }

    #[test]
    fn g2_examples() {
        assert_eq!(make_g2(6).unwrap(), make_g26());
        assert_eq!(make_g2(12).unwrap().edge_count(), 128);
        assert!(make_g2(5).is_err());
        let ratio = g2_size(600).unwrap() as f64 / 600f64.powi(3);
        assert!((ratio - 2.0 / 27.0).abs() < 1e-3, "{ratio}");
    }

    #[test]
    fn g2_beats_every_composition() {
        // exhaustive over all compositions of n into six positive parts
        let g = make_g26();
        fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 1 {
                return vec![vec![n]];
            }
            (1..=n - (k - 1))
                .flat_map(|first| {
                    compositions(n - first, k - 1)
                        .into_iter()
                        .map(move |mut rest| {
                            rest.insert(0, first);
                            rest
                        })
                })
                .collect()
        }
        for n in 6..=10 {
            let best = compositions(n, 6)
                .iter()
                .map(|t| blowup_size(&g, t))
                .max()
                .unwrap();
            assert_eq!(g2_size(n).unwrap(), best, "n={n}");
        }
    }

    #[test]
    fn turan_examples() {
        assert_eq!(make_turan(2, 4, 2).unwrap().edge_count(), 4);
        assert_eq!(make_turan(3, 6, 3).unwrap().edge_count(), 8);
        assert_eq!(make_turan(3, 6, 6).unwrap().edge_count(), 20);
        assert!(make_turan(3, 6, 2).is_err());
        assert!(make_turan(3, 2, 3).is_err());
    }

    #[test]
    fn kostochka_sizes() {
        for n in (3..=18).step_by(3) {
            for m in 0..=n / 3 {
                let spec = KostochkaSpec::new(n, m).unwrap();
                assert_eq!(
                    make_kostochka(spec).edge_count() as u128,
                    spec.edge_count_formula(),
                    "n={n} m={m}"
                );
            }
        }
        assert_eq!(KostochkaSpec::new(9, 0).unwrap().edge_count_formula(), 30);
        assert!(KostochkaSpec::new(7, 1).is_err());
        assert!(KostochkaSpec::new(9, 4).is_err());
    }

    #[test]
    fn small_named_graphs() {
        assert_eq!(make_k53minus().edge_count(), 9);
        assert_eq!(make_f32().edge_count(), 4);
        assert_eq!(make_full_star(6).unwrap().edge_count(), 10);
        assert_eq!(make_full_star(6).unwrap().star_center(), Some(0));
        assert_eq!(make_complete(5, 3).unwrap().edge_count(), 10);
        assert!(by_name("nope", &[]).is_err());
        assert!(by_name("g1", &[]).is_err());
        assert_eq!(by_name("kostochka", &[9, 1]).unwrap().edge_count(), 30);
    }
}
