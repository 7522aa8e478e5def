//! Exhaustive enumeration helpers: ranks of all column subsets and all
//! subspaces of a small coordinate space.

use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;

/// `table[J]` is the rank of the columns of `m` indexed by the bitmask `J`.
///
/// Subsets are visited depth-first in increasing element order while an
/// echelon basis of the chosen columns is maintained incrementally, so each
/// of the `2^cols` entries costs one vector reduction. The caller is
/// responsible for keeping `cols` small.
pub fn column_rank_table(m: &Matrix) -> Vec<u8> {
    let n = m.cols();
    assert!(n < usize::BITS as usize, "too many columns for a subset table");
    let mut table = vec![0u8; 1usize << n];
    if m.field().is_binary() && m.rows() <= 64 {
        let cols: Vec<u64> = (0..n)
            .map(|c| {
                (0..m.rows()).fold(0u64, |acc, r| {
                    if m.get(r, c).is_zero() {
                        acc
                    } else {
                        acc | (1 << r)
                    }
                })
            })
            .collect();
        let mut basis: Vec<(u64, u64)> = Vec::with_capacity(m.rows());
        binary_walk(&cols, 0, 0, &mut basis, &mut table);
    } else {
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|c| (0..m.rows()).map(|r| m.get(r, c)).collect())
            .collect();
        let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::with_capacity(m.rows());
        generic_walk(m.field(), &cols, 0, 0, &mut basis, &mut table);
    }
    table
}

fn binary_walk(
    cols: &[u64],
    start: usize,
    mask: usize,
    basis: &mut Vec<(u64, u64)>,
    table: &mut [u8],
) {
    for e in start..cols.len() {
        let mut v = cols[e];
        for &(pivot, b) in basis.iter() {
            if v & pivot != 0 {
                v ^= b;
            }
        }
        let next = mask | (1 << e);
        if v != 0 {
            basis.push((v & v.wrapping_neg(), v));
            table[next] = basis.len() as u8;
            binary_walk(cols, e + 1, next, basis, table);
            basis.pop();
        } else {
            table[next] = basis.len() as u8;
            binary_walk(cols, e + 1, next, basis, table);
        }
    }
}

fn generic_walk(
    f: &FieldSpec,
    cols: &[Vec<Scalar>],
    start: usize,
    mask: usize,
    basis: &mut Vec<(usize, Vec<Scalar>)>,
    table: &mut [u8],
) {
    for e in start..cols.len() {
        let mut v = cols[e].clone();
        for (pivot, b) in basis.iter() {
            let c = v[*pivot];
            if !c.is_zero() {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let next = mask | (1 << e);
        match v.iter().position(|s| !s.is_zero()) {
            Some(p) => {
                let inv = f.inv(v[p]).expect("nonzero pivot");
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                basis.push((p, v));
                table[next] = basis.len() as u8;
                generic_walk(f, cols, e + 1, next, basis, table);
                basis.pop();
            }
            None => {
                table[next] = basis.len() as u8;
                generic_walk(f, cols, e + 1, next, basis, table);
            }
        }
    }
}

/// Number of `r`-dimensional subspaces of `GF(q)^k` (Gaussian binomial),
/// saturating at `u128::MAX`.
pub fn gaussian_binomial(q: u32, k: usize, r: usize) -> u128 {
    if r > k {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        let a = q.checked_pow((k - i) as u32).and_then(|x| x.checked_sub(1));
        let b = q.checked_pow((i + 1) as u32).and_then(|x| x.checked_sub(1));
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(n2), Some(d2)) => {
                num = n2;
                den = d2;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Total number of subspaces of `GF(q)^k`, zero and whole space included.
pub fn subspace_count(q: u32, k: usize) -> u128 {
    (0..=k).fold(0u128, |acc, r| acc.saturating_add(gaussian_binomial(q, k, r)))
}

/// Every `r`-dimensional subspace of `GF(q)^k`, each as its unique `r x k`
/// RREF basis matrix.
pub fn rref_matrices(field: &FieldSpec, k: usize, r: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    if r > k {
        return out;
    }
    for pivots in combinations(k, r) {
        // Free positions: row i, column c > pivots[i], c not a pivot.
        let free: Vec<(usize, usize)> = (0..r)
            .flat_map(|i| {
                let pv = &pivots;
                ((pv[i] + 1)..k)
                    .filter(move |c| !pv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let q = field.q() as usize;
        let total = q.pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = Matrix::zeros(field, r, k);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, Scalar::ONE);
            }
            for &(i, c) in &free {
                m.set(i, c, field.elem((code % q) as u32).expect("digit below q"));
                code /= q;
            }
            out.push(m);
        }
    }
    out
}

/// All `r`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn go(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    go(n, r, 0, &mut cur, &mut out);
    out
}
