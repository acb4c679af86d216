//! Bitmask bases of exterior powers.
//!
//! A basis element `e_{i_1} ∧ … ∧ e_{i_k}` with `i_1 < … < i_k` is stored as
//! the bitmask with bits `i_1..i_k` set. Bases of `⋀^k` list the masks in
//! lexicographic order of their sorted index lists.

use std::collections::HashMap;

use num_traits::Zero;

use crate::qkernel::Rational;

/// `k`-subsets of `{0..n}` as bitmasks, lexicographic in the sorted lists.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    assert!(n <= 31, "exterior bases limited to 31 generators");
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

/// Sign of moving `e_i` to the front past the generators in `mask` below it.
pub fn insertion_sign(mask: u32, i: usize) -> i32 {
    if (mask & ((1u32 << i) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of sorting the concatenation `e_a ∧ e_b` (0 if they overlap).
pub fn merge_sign(a: u32, b: u32) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let inversions: u32 = bits(b)
        .map(|y| (a & !((2u32 << y) - 1)).count_ones())
        .sum();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Basis of `⋀^k` of an `n`-dimensional space with reverse lookup.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    k: usize,
    masks: Vec<u32>,
    index: HashMap<u32, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, k: usize) -> Self {
        let masks = subsets(n, k);
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ExteriorBasis { n, k, masks, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn mask(&self, i: usize) -> u32 {
        self.masks[i]
    }

    pub fn index_of(&self, mask: u32) -> Option<usize> {
        self.index.get(&mask).copied()
    }
}

/// Wedge product of coordinate vectors in `⋀^ka` and `⋀^kb` of an
/// `n`-dimensional space.
pub fn wedge(n: usize, ka: usize, a: &[Rational], kb: usize, b: &[Rational]) -> Vec<Rational> {
    let ba = ExteriorBasis::new(n, ka);
    let bb = ExteriorBasis::new(n, kb);
    let bc = ExteriorBasis::new(n, ka + kb);
    assert_eq!(a.len(), ba.len());
    assert_eq!(b.len(), bb.len());
    let mut out = vec![Rational::zero(); bc.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let (ma, mb) = (ba.mask(i), bb.mask(j));
            let s = merge_sign(ma, mb);
            if s == 0 {
                continue;
            }
            let idx = bc.index_of(ma | mb).expect("mask of right degree");
            let p = x * y;
            if s > 0 {
                out[idx] += p;
            } else {
                out[idx] -= p;
            }
        }
    }
    out
}
