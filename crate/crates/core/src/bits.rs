//! Bit-mask helpers shared by every module. A vertex set is a `u64` with
//! bit `v` set when vertex `v` belongs to the set.

use std::cmp::Ordering;

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of the vertices `0..n`.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertices of a mask in increasing order.
pub fn members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

pub fn iter_members(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

/// Lexicographic order on the sorted vertex tuples of two masks.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
        if la != lb {
            return la.cmp(&lb);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// All `k`-subsets of `ground`, as masks, in lexicographic order of their
/// sorted vertex tuples.
pub fn k_subsets(ground: u64, k: usize) -> KSubsets {
    let pool = members(ground);
    let idx = if k <= pool.len() {
        Some((0..k).collect())
    } else {
        None
    };
    KSubsets { pool, idx }
}

pub struct KSubsets {
    pool: Vec<usize>,
    idx: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let idx = self.idx.as_mut()?;
        let out = idx.iter().fold(0u64, |m, &i| m | bit(self.pool[i]));
        let k = idx.len();
        let n = self.pool.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.idx = None;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let all: Vec<u64> = k_subsets(full_mask(5), 3).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(members(all[0]), vec![0, 1, 2]);
        assert_eq!(members(all[1]), vec![0, 1, 3]);
        assert_eq!(members(all[9]), vec![2, 3, 4]);
        for w in all.windows(2) {
            assert_eq!(lex_cmp(w[0], w[1]), Ordering::Less);
        }
    }

    #[test]
    fn zero_subsets_and_oversized_requests() {
        assert_eq!(k_subsets(full_mask(4), 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(full_mask(2), 3).count(), 0);
        assert_eq!(k_subsets(0, 0).count(), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(240, 3), 2_275_280);
        assert_eq!(binomial(3, 5), 0);
    }
}
