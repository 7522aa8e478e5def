//! Tensor product codes: the Schaathun lower bound on their weights, its
//! witness construction, and the semistability of products.

use crate::algebra::Matrix;
use crate::check::CheckReport;
use crate::code::{LinearCode, Subcode, SupportSet};
use crate::error::{Error, Result};
use crate::hn::CodeHn;
use crate::Rational;

fn validate_hierarchy(d: &[usize], name: &str) -> Result<()> {
    if d.first() != Some(&0) || d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidHierarchy(format!(
            "{name} hierarchy {d:?} is not strictly increasing from 0"
        )));
    }
    Ok(())
}

/// `d_r^*`: the minimum of `Σ_i (dA_i - dA_{i-1}) dB_{t_i}` over
/// `0 <= t_{kA} <= ... <= t_1 <= kB` with `Σ t_i >= r`.
///
/// Dynamic programming over (index, ceiling on the next `t`, residual sum).
pub fn schaathun_bound(da: &[usize], db: &[usize], r: usize) -> Result<usize> {
    schaathun_bounds(da, db)?
        .get(r)
        .copied()
        .ok_or_else(|| Error::InvalidArgument(format!("r = {r} exceeds the product dimension")))
}

/// `d_r^*` for every `r` in `0..=kA kB`.
pub fn schaathun_bounds(da: &[usize], db: &[usize]) -> Result<Vec<usize>> {
    validate_hierarchy(da, "first")?;
    validate_hierarchy(db, "second")?;
    let (ka, kb) = (da.len() - 1, db.len() - 1);
    let rmax = ka * kb;
    const INF: usize = usize::MAX;
    // next[c][s]: best value of the terms i+1..kA when t_{i+1} <= c and
    // they must contribute at least s
    let mut next = vec![vec![INF; rmax + 1]; kb + 1];
    for row in next.iter_mut() {
        row[0] = 0;
    }
    for i in (1..=ka).rev() {
        let step = da[i] - da[i - 1];
        let mut cur = vec![vec![INF; rmax + 1]; kb + 1];
        for (c, row) in cur.iter_mut().enumerate() {
            for (s, cell) in row.iter_mut().enumerate() {
                let mut best = INF;
                for t in 0..=c {
                    let rest = next[t][s.saturating_sub(t)];
                    if rest != INF {
                        best = best.min(step * db[t] + rest);
                    }
                }
                *cell = best;
            }
        }
        next = cur;
    }
    Ok(next[kb].clone())
}

/// `d_r(A ⊗ B) >= d_r^*` for every `r`.
pub fn schaathun_verify(a: &LinearCode, b: &LinearCode, limit: usize) -> Result<CheckReport> {
    let product = a.tensor(b)?;
    let d = product.weight_hierarchy_with_limit(limit)?;
    let star = schaathun_bounds(&a.weight_hierarchy_with_limit(limit)?, &b.weight_hierarchy_with_limit(limit)?)?;
    let mut report = CheckReport::new("Schaathun bound");
    for (r, (&dr, &sr)) in d.iter().zip(&star).enumerate() {
        report.case(dr >= sr, || format!("d_{r} = {dr} below bound {sr}"));
    }
    Ok(report)
}

/// Data of the column decomposition of a subcode `C ⊆ A ⊗ B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchaathunWitness {
    pub dim: usize,
    pub weight: usize,
    /// `dim π̂_j(C)` for each column `j` of `[n_B]`.
    pub column_dims: Vec<usize>,
    /// `w(π̂_j(C))`.
    pub column_weights: Vec<usize>,
    /// `J_1 ⊇ ... ⊇ J_{kA}` with `J_i = {j : dim π̂_j(C) >= i}`.
    pub sets: Vec<SupportSet>,
    /// `t_i = dim B_{J_i}`.
    pub t: Vec<usize>,
    /// `Σ_i (dA_i - dA_{i-1}) dB_{t_i}`.
    pub bound: usize,
}

/// Entry `(i, j)` of a tensor codeword, stored at `i * n_B + j`.
fn column(word: &[crate::algebra::Scalar], n_b: usize, j: usize) -> Vec<crate::algebra::Scalar> {
    word.iter().skip(j).step_by(n_b).copied().collect()
}

fn contains_all(code: &LinearCode, vectors: Vec<Vec<crate::algebra::Scalar>>) -> Result<bool> {
    if vectors.is_empty() {
        return Ok(true);
    }
    let rows = vectors.len();
    let m = Matrix::new(code.field(), rows, code.n(), vectors.concat())?;
    Ok(code.generator().stack(&m)?.rank() == code.k())
}

/// Builds the witness of a subcode of `A ⊗ B` from the column projections.
///
/// Every basis word, read as an `n_A × n_B` matrix, must have its columns in
/// `A` and its rows in `B`.
pub fn witness(sub: &Subcode, a: &LinearCode, b: &LinearCode, limit: usize) -> Result<SchaathunWitness> {
    let (na, nb) = (a.n(), b.n());
    if sub.parent().n() != na * nb {
        return Err(Error::DimensionMismatch(format!(
            "subcode of length {} for factors of lengths {na} and {nb}",
            sub.parent().n()
        )));
    }
    let basis = sub.basis();
    let words: Vec<&[crate::algebra::Scalar]> = (0..basis.rows()).map(|r| basis.row(r)).collect();
    for w in &words {
        let cols = (0..nb).map(|j| column(w, nb, j)).collect();
        let rows = (0..na).map(|i| w[i * nb..(i + 1) * nb].to_vec()).collect();
        if !contains_all(a, cols)? || !contains_all(b, rows)? {
            return Err(Error::NotASubcode);
        }
    }
    let f = a.field();
    let mut column_dims = Vec::with_capacity(nb);
    let mut column_weights = Vec::with_capacity(nb);
    for j in 0..nb {
        let data: Vec<_> = words.iter().flat_map(|w| column(w, nb, j)).collect();
        let m = Matrix::new(f, words.len(), na, data)?;
        column_dims.push(m.rank());
        column_weights.push(crate::code::row_support(&m).len());
    }
    let da = a.weight_hierarchy_with_limit(limit)?;
    let db = b.weight_hierarchy_with_limit(limit)?;
    let sets: Vec<SupportSet> = (1..=a.k())
        .map(|i| SupportSet::from_indices((0..nb).filter(|&j| column_dims[j] >= i)))
        .collect();
    let t: Vec<usize> = sets.iter().map(|&j| b.shorten(j).dim()).collect();
    let bound = (1..=a.k()).map(|i| (da[i] - da[i - 1]) * db[t[i - 1]]).sum();
    Ok(SchaathunWitness {
        dim: sub.dim(),
        weight: sub.weight(),
        column_dims,
        column_weights,
        sets,
        t,
        bound,
    })
}

impl SchaathunWitness {
    /// Nesting of the sets, monotonicity of `t`, the weight estimate, the
    /// dimension estimate and the column decomposition of the support size.
    pub fn verify(&self) -> CheckReport {
        let mut report = CheckReport::new("Schaathun witness");
        report.case(self.sets.windows(2).all(|w| w[1].is_subset(w[0])), || {
            format!("sets {:?} not nested", self.sets)
        });
        report.case(self.t.windows(2).all(|w| w[0] >= w[1]), || {
            format!("t = {:?} not non-increasing", self.t)
        });
        report.case(self.weight >= self.bound, || {
            format!("weight {} below {}", self.weight, self.bound)
        });
        let total: usize = self.t.iter().sum();
        report.case(total >= self.dim, || format!("Σ t = {total} below dim {}", self.dim));
        let cols: usize = self.column_weights.iter().sum();
        report.case(cols == self.weight, || {
            format!("column weights sum to {cols}, weight {}", self.weight)
        });
        report
    }
}

/// For semistable `A` and `B`: `A ⊗ B` is semistable, and for each given
/// subcode the chain of inequalities leading to `w(C) >= dim(C) / R(A ⊗ B)`
/// is re-derived step by step from its witness.
pub fn tensor_semistable_check(
    a: &LinearCode,
    b: &LinearCode,
    subcodes: &[Subcode],
    limit: usize,
) -> Result<CheckReport> {
    let (ha, hb) = (CodeHn::with_limit(a, limit)?, CodeHn::with_limit(b, limit)?);
    if !ha.is_semistable() || !hb.is_semistable() {
        return Err(Error::Precondition("both factors must be semistable".into()));
    }
    let product = a.tensor(b)?;
    let mut report = CheckReport::new("tensor semistability");
    let hp = CodeHn::with_limit(&product, limit)?;
    report.case(hp.is_semistable(), || "product is not semistable".into());
    let da = ha.hierarchy();
    // 1/R = w/k for each factor
    let inv_ra = Rational::new(ha.support_size() as i64, a.k() as i64);
    let inv_rb = Rational::new(hb.support_size() as i64, b.k() as i64);
    let ka = a.k();
    for sub in subcodes {
        let w = witness(sub, a, b, limit)?;
        report.absorb(w.verify());
        let t = |i: usize| if i >= 1 && i <= ka { w.t[i - 1] as i64 } else { 0 };
        let q = |x: usize| Rational::from_integer(x as i64);
        let weight = q(w.weight);
        let s1 = q(w.bound);
        let s2 = inv_rb * (1..=ka).map(|i| q(da[i] - da[i - 1]) * Rational::from_integer(t(i))).sum::<Rational>();
        let s3 = inv_rb * (1..=ka).map(|i| q(da[i]) * Rational::from_integer(t(i) - t(i + 1))).sum::<Rational>();
        let s4 = inv_ra * inv_rb * (1..=ka).map(|i| q(i) * Rational::from_integer(t(i) - t(i + 1))).sum::<Rational>();
        let s5 = inv_ra * inv_rb * Rational::from_integer((1..=ka).map(t).sum());
        let s6 = inv_ra * inv_rb * q(w.dim);
        let chain = [weight, s1, s2, s3, s4, s5, s6];
        let ok = weight >= s1 && s1 >= s2 && s2 == s3 && s3 >= s4 && s4 == s5 && s5 >= s6;
        report.case(ok, || format!("inequality chain broken: {chain:?}"));
    }
    Ok(report)
}

/// Whether supports `J^(1) ⊆ ... ⊆ J^(k)` exist with `#J^(i) = d_i` and
/// `dim C_{J^(i)} = i`, by layered reachability over minimum weight supports.
pub fn is_chained(code: &LinearCode, limit: usize) -> Result<bool> {
    let hn = CodeHn::with_limit(code, limit)?;
    let mut reachable: Vec<SupportSet> =
        code.minimum_weight_supports_from(hn.rank_table(), hn.hierarchy(), 1);
    for i in 2..=code.k() {
        let layer = code.minimum_weight_supports_from(hn.rank_table(), hn.hierarchy(), i);
        reachable = layer
            .into_iter()
            .filter(|j| reachable.iter().any(|p| p.is_subset(*j)))
            .collect();
        if reachable.is_empty() {
            return Ok(false);
        }
    }
    Ok(!reachable.is_empty())
}

/// For chained `A` and `B`: `d_r(A ⊗ B) = d_r^*` for every `r`.
pub fn wei_yang_check(a: &LinearCode, b: &LinearCode, limit: usize) -> Result<CheckReport> {
    if !is_chained(a, limit)? || !is_chained(b, limit)? {
        return Err(Error::Precondition("both factors must be chained".into()));
    }
    let d = a.tensor(b)?.weight_hierarchy_with_limit(limit)?;
    let star = schaathun_bounds(&a.weight_hierarchy_with_limit(limit)?, &b.weight_hierarchy_with_limit(limit)?)?;
    let mut report = CheckReport::new("chained product weights");
    for (r, (&dr, &sr)) in d.iter().zip(&star).enumerate() {
        report.case(dr == sr, || format!("d_{r} = {dr} but bound {sr}"));
    }
    Ok(report)
}
