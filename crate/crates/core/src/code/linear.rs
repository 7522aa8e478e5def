use std::fmt;

use rand::Rng;

use super::support::SupportSet;
use crate::algebra::subsets::{column_rank_table, rref_matrices};
use crate::algebra::{FieldSpec, Matrix, Scalar};
use crate::error::{Error, Result};
use crate::Rational;

/// Default bound on the number of coordinates for `2^n` subset enumeration.
pub const DEFAULT_ENUM_LIMIT: usize = 20;

/// A linear `[n, k]` code, stored by its RREF generator matrix.
///
/// Since the RREF of a row space is unique, two codes are equal exactly when
/// they have the same field, length and row space.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}] code over GF({}) ", self.n(), self.k(), self.field().q())?;
        fmt::Debug::fmt(&self.gen, f)
    }
}

/// Left kernel of `m`: coefficient rows `x` with `x m = 0`.
pub(crate) fn left_kernel(m: &Matrix) -> Matrix {
    m.transpose().nullspace()
}

impl LinearCode {
    /// Builds a code from a generator matrix, which must have full row rank.
    pub fn new(gen: Matrix) -> Result<LinearCode> {
        let (reduced, pivots) = gen.rref();
        if pivots.len() != gen.rows() {
            return Err(Error::NotFullRank {
                rank: pivots.len(),
                rows: gen.rows(),
            });
        }
        LinearCode::from_reduced(reduced)
    }

    /// Builds the code spanned by the rows of `m`, which may be dependent.
    pub fn from_spanning(m: &Matrix) -> Result<LinearCode> {
        LinearCode::from_reduced(m.row_basis())
    }

    fn from_reduced(gen: Matrix) -> Result<LinearCode> {
        if gen.cols() > 64 {
            return Err(Error::LengthTooLarge(gen.cols()));
        }
        if gen.rows() == 0 {
            return Err(Error::EmptyCode);
        }
        Ok(LinearCode { gen })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &FieldSpec, n: usize, rows: &[R]) -> Result<LinearCode> {
        LinearCode::new(Matrix::from_rows(field, n, rows)?)
    }

    /// Every `[n, k]` code over `field`, one per row space.
    pub fn enumerate(field: &FieldSpec, n: usize, k: usize) -> Vec<LinearCode> {
        if k == 0 {
            return Vec::new();
        }
        rref_matrices(field, n, k)
            .into_iter()
            .map(|gen| LinearCode { gen })
            .collect()
    }

    /// A uniformly random `k x n` full-rank generator, reduced.
    pub fn random<R: Rng + ?Sized>(field: &FieldSpec, n: usize, k: usize, rng: &mut R) -> Result<LinearCode> {
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!("cannot build a random [{n},{k}] code")));
        }
        loop {
            let data: Vec<Scalar> = (0..n * k)
                .map(|_| field.elem(rng.gen_range(0..field.q())).expect("in range"))
                .collect();
            let m = Matrix::new(field, k, n, data)?;
            if let Ok(c) = LinearCode::new(m) {
                return Ok(c);
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// `k / n`.
    pub fn rate(&self) -> Rational {
        Rational::new(self.k() as i64, self.n() as i64)
    }

    pub fn support(&self) -> SupportSet {
        row_support(&self.gen)
    }

    pub fn has_full_support(&self) -> bool {
        self.support() == SupportSet::full(self.n())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        let row = Matrix::new(self.field(), 1, self.n(), v.to_vec())?;
        Ok(self.gen.stack(&row)?.rank() == self.k())
    }

    pub fn whole(&self) -> Subcode {
        Subcode {
            parent: self.clone(),
            basis: self.gen.clone(),
        }
    }

    pub fn zero_subcode(&self) -> Subcode {
        Subcode {
            parent: self.clone(),
            basis: Matrix::zeros(self.field(), 0, self.n()),
        }
    }

    /// Image of the coefficient rows `x` (length `k`) under the generator.
    pub fn encode(&self, coefficients: &Matrix) -> Result<Matrix> {
        coefficients.mul(&self.gen)
    }

    /// The largest subcode supported inside `j`: `C ∩ F^J`.
    pub fn shorten(&self, j: SupportSet) -> Subcode {
        let outside = j.complement(self.n()).indices();
        let coeffs = left_kernel(&self.gen.select_columns(&outside));
        let basis = coeffs.mul(&self.gen).expect("shapes agree").row_basis();
        Subcode {
            parent: self.clone(),
            basis,
        }
    }

    /// Projection of the code onto the coordinates in `j`, in increasing order.
    pub fn puncture(&self, j: SupportSet) -> Result<LinearCode> {
        LinearCode::from_spanning(&self.gen.select_columns(&j.indices()))
    }

    /// Dimension of the projection onto `j` (the rank of the column submatrix).
    pub fn column_rank(&self, j: SupportSet) -> usize {
        self.gen.select_columns(&j.indices()).rank()
    }

    /// The orthogonal `[n, n-k]` code for the standard bilinear form.
    pub fn dual(&self) -> Result<LinearCode> {
        let h = self.gen.nullspace();
        if h.rows() == 0 {
            return Err(Error::EmptyCode);
        }
        LinearCode::new(h)
    }

    /// Kronecker (tensor) product code, indexing pair `(i, j)` as `i * n_B + j`.
    pub fn tensor(&self, other: &LinearCode) -> Result<LinearCode> {
        LinearCode::from_spanning(&self.gen.kron(&other.gen)?)
    }

    /// Span of all componentwise products of generator rows.
    pub fn schur_product(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "componentwise product of lengths {} and {}",
                self.n(),
                other.n()
            )));
        }
        let f = self.field();
        let mut data = Vec::with_capacity(self.k() * other.k() * self.n());
        for a in 0..self.k() {
            for b in 0..other.k() {
                data.extend(
                    self.gen
                        .row(a)
                        .iter()
                        .zip(other.gen.row(b))
                        .map(|(&x, &y)| f.mul(x, y)),
                );
            }
        }
        let m = Matrix::new(f, self.k() * other.k(), self.n(), data)?;
        LinearCode::from_spanning(&m)
    }

    pub fn schur_square(&self) -> Result<LinearCode> {
        self.schur_product(self)
    }

    fn check_enum(&self, limit: usize) -> Result<()> {
        if self.n() > limit {
            Err(Error::SizeLimitExceeded {
                required: self.n(),
                cap: limit,
            })
        } else {
            Ok(())
        }
    }

    /// Ranks `r(J)` of every column subset, indexed by bitmask.
    pub fn rank_table(&self, limit: usize) -> Result<Vec<u8>> {
        self.check_enum(limit)?;
        Ok(column_rank_table(&self.gen))
    }

    /// `min_rank[s]`: the minimum of `r(J)` over subsets of size `s`.
    fn min_rank_by_size(&self, table: &[u8]) -> Vec<usize> {
        let n = self.n();
        let mut min = vec![usize::MAX; n + 1];
        for (mask, &r) in table.iter().enumerate() {
            let s = mask.count_ones() as usize;
            min[s] = min[s].min(r as usize);
        }
        min
    }

    /// Dimension/length profile `k_0..k_n` with the default enumeration cap.
    pub fn dlp(&self) -> Result<Vec<usize>> {
        self.dlp_with_limit(DEFAULT_ENUM_LIMIT)
    }

    /// `k_j = max{dim C_J : #J = j} = k - min{r(J') : #J' = n - j}`.
    pub fn dlp_with_limit(&self, limit: usize) -> Result<Vec<usize>> {
        let table = self.rank_table(limit)?;
        Ok(self.dlp_from_table(&table))
    }

    pub(crate) fn dlp_from_table(&self, table: &[u8]) -> Vec<usize> {
        let n = self.n();
        let min = self.min_rank_by_size(table);
        (0..=n).map(|j| self.k() - min[n - j]).collect()
    }

    /// Generalized Hamming weights `d_0..d_k` with the default enumeration cap.
    pub fn weight_hierarchy(&self) -> Result<Vec<usize>> {
        self.weight_hierarchy_with_limit(DEFAULT_ENUM_LIMIT)
    }

    pub fn weight_hierarchy_with_limit(&self, limit: usize) -> Result<Vec<usize>> {
        Ok(hierarchy_from_dlp(&self.dlp_with_limit(limit)?, self.k()))
    }

    /// Minimum distance `d_1`.
    pub fn minimum_distance(&self) -> Result<usize> {
        Ok(self.weight_hierarchy()?[1])
    }

    /// All supports `J` with `#J = d_i` and `dim C_J = i`; these are exactly
    /// the supports of the `i`-dimensional minimum weight subcodes.
    pub fn minimum_weight_supports(&self, i: usize, limit: usize) -> Result<Vec<SupportSet>> {
        let table = self.rank_table(limit)?;
        let d = hierarchy_from_dlp(&self.dlp_from_table(&table), self.k());
        Ok(self.minimum_weight_supports_from(&table, &d, i))
    }

    pub(crate) fn minimum_weight_supports_from(
        &self,
        table: &[u8],
        hierarchy: &[usize],
        i: usize,
    ) -> Vec<SupportSet> {
        let n = self.n();
        let full = (1usize << n) - 1;
        let target = hierarchy[i];
        (0..=full)
            .filter(|&m| m.count_ones() as usize == target)
            .filter(|&m| self.k() - table[full & !m] as usize >= i)
            .map(|m| SupportSet::from_bits(m as u64))
            .collect()
    }

    /// All `q^k` codewords, in coefficient order.
    pub fn codewords(&self) -> Vec<Vec<Scalar>> {
        let f = self.field();
        let q = f.q() as usize;
        let total = q.pow(self.k() as u32);
        (0..total)
            .map(|mut idx| {
                let mut w = vec![Scalar::ZERO; self.n()];
                for r in 0..self.k() {
                    let c = f.elem((idx % q) as u32).expect("digit");
                    idx /= q;
                    if c.is_zero() {
                        continue;
                    }
                    for (x, &g) in w.iter_mut().zip(self.gen.row(r)) {
                        *x = f.add(*x, f.mul(c, g));
                    }
                }
                w
            })
            .collect()
    }
}

/// `d_i = min{j : k_j >= i}` for `i = 0..=k`.
pub fn hierarchy_from_dlp(dlp: &[usize], k: usize) -> Vec<usize> {
    (0..=k)
        .map(|i| dlp.iter().position(|&kj| kj >= i).expect("k_n = k"))
        .collect()
}

pub(crate) fn row_support(m: &Matrix) -> SupportSet {
    let mut s = SupportSet::EMPTY;
    for r in 0..m.rows() {
        for (c, v) in m.row(r).iter().enumerate() {
            if !v.is_zero() {
                s.insert(c);
            }
        }
    }
    s
}

/// A subspace of a parent code, stored by its RREF basis (no zero rows).
#[derive(Clone, PartialEq, Eq)]
pub struct Subcode {
    parent: LinearCode,
    basis: Matrix,
}

impl fmt::Debug for Subcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subcode of dim {} supported on {:?} ", self.dim(), self.support())?;
        fmt::Debug::fmt(&self.basis, f)
    }
}

impl Subcode {
    /// The span of the rows of `vectors`, which must all lie in `parent`.
    pub fn span(parent: &LinearCode, vectors: &Matrix) -> Result<Subcode> {
        if vectors.field() != parent.field() {
            return Err(Error::FieldMismatch);
        }
        if vectors.cols() != parent.n() {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} in a code of length {}",
                vectors.cols(),
                parent.n()
            )));
        }
        if parent.gen.stack(vectors)?.rank() != parent.k() {
            return Err(Error::NotASubcode);
        }
        Ok(Subcode {
            parent: parent.clone(),
            basis: vectors.row_basis(),
        })
    }

    /// The subcode `x G` for coefficient rows `x`.
    pub fn from_coefficients(parent: &LinearCode, coefficients: &Matrix) -> Result<Subcode> {
        let v = parent.encode(coefficients)?;
        Ok(Subcode {
            parent: parent.clone(),
            basis: v.row_basis(),
        })
    }

    pub fn parent(&self) -> &LinearCode {
        &self.parent
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn support(&self) -> SupportSet {
        row_support(&self.basis)
    }

    /// Support size `w`.
    pub fn weight(&self) -> usize {
        self.support().len()
    }

    /// Coordinates where the subcode vanishes identically.
    pub fn cosupport(&self) -> SupportSet {
        self.support().complement(self.parent.n())
    }

    /// `n - w`, so the zero subcode has degree `n`.
    pub fn degree(&self) -> i64 {
        self.parent.n() as i64 - self.weight() as i64
    }

    /// `dim / w`.
    pub fn effective_rate(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::ZeroSubcode);
        }
        Ok(Rational::new(self.dim() as i64, self.weight() as i64))
    }

    /// `C_{Supp(S)}`: the smallest closed subcode containing `self`.
    pub fn closure(&self) -> Subcode {
        self.parent.shorten(self.support())
    }

    pub fn is_closed(&self) -> bool {
        self.closure().dim() == self.dim()
    }

    pub fn is_subcode_of(&self, other: &Subcode) -> bool {
        other.basis.stack(&self.basis).map(|m| m.rank()).ok() == Some(other.dim())
    }

    pub fn join(&self, other: &Subcode) -> Result<Subcode> {
        if self.parent != other.parent {
            return Err(Error::InvalidArgument("subcodes of different codes".into()));
        }
        Ok(Subcode {
            parent: self.parent.clone(),
            basis: self.basis.stack(&other.basis)?.row_basis(),
        })
    }

    pub fn meet(&self, other: &Subcode) -> Result<Subcode> {
        if self.parent != other.parent {
            return Err(Error::InvalidArgument("subcodes of different codes".into()));
        }
        let stacked = self.basis.stack(&other.basis)?;
        let kernel = left_kernel(&stacked);
        let first: Vec<usize> = (0..self.dim()).collect();
        let x = kernel.select_columns(&first);
        Ok(Subcode {
            parent: self.parent.clone(),
            basis: x.mul(&self.basis)?.row_basis(),
        })
    }

    /// The subcode viewed as a code in its own right (same length).
    pub fn to_code(&self) -> Result<LinearCode> {
        LinearCode::from_reduced(self.basis.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn construction_checks_rank() {
        let err = LinearCode::from_rows(&gf2(), 3, &[[1, 1, 0], [1, 1, 0]]).unwrap_err();
        assert_eq!(err, Error::NotFullRank { rank: 1, rows: 2 });
        assert_eq!(
            LinearCode::from_rows::<[u32; 3]>(&gf2(), 3, &[]).unwrap_err(),
            Error::EmptyCode
        );
    }

    #[test]
    fn support_and_degree() {
        let c = catalog::unstable_9_7();
        assert_eq!(c.zero_subcode().support(), SupportSet::EMPTY);
        assert_eq!(c.zero_subcode().degree(), 9);
        assert_eq!(c.whole().degree(), 0);
        assert_eq!(catalog::stable_5_2().support(), SupportSet::full(5));

        // rows 3..6 of the generator as printed
        let rows = Matrix::from_rows(
            &gf2(),
            9,
            &[
                [0, 0, 0, 0, 1, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 1, 0, 0, 1],
                [0, 0, 0, 0, 0, 0, 1, 0, 1],
                [0, 0, 0, 0, 0, 0, 0, 1, 1],
            ],
        )
        .unwrap();
        let s = Subcode::span(&c, &rows).unwrap();
        assert_eq!(s.support(), SupportSet::from_one_based(5..=9));
        assert_eq!(s.degree(), 4);
        assert_eq!(s.effective_rate().unwrap(), Rational::new(4, 5));
        assert_eq!(c.whole().effective_rate().unwrap(), Rational::new(7, 9));
        assert_eq!(c.zero_subcode().effective_rate().unwrap_err(), Error::ZeroSubcode);
        assert_eq!(c.shorten(SupportSet::from_one_based(5..=9)), s);
    }

    #[test]
    fn weight_one_subcode_has_rate_one() {
        let c = LinearCode::from_rows(&gf2(), 3, &[[1, 0, 0], [0, 1, 1]]).unwrap();
        let s = c.shorten(SupportSet::from_indices([0]));
        assert_eq!(s.dim(), 1);
        assert_eq!(s.effective_rate().unwrap(), Rational::from_integer(1));
    }

    #[test]
    fn shorten_extremes() {
        let c = catalog::unstable_9_7();
        assert_eq!(c.shorten(SupportSet::full(9)), c.whole());
        assert!(c.shorten(SupportSet::EMPTY).is_zero());
        assert_eq!(c.shorten(SupportSet::from_one_based(5..=9)).dim(), 4);
    }

    #[test]
    fn puncture_examples() {
        let c = catalog::unstable_9_7();
        assert_eq!(c.puncture(SupportSet::full(9)).unwrap(), c);
        let rep = catalog::repetition(&gf2(), 3);
        assert_eq!(
            rep.puncture(SupportSet::from_indices([0, 1])).unwrap(),
            catalog::repetition(&gf2(), 2)
        );
        let j = SupportSet::from_one_based(5..=9);
        let piece = c.shorten(j).to_code().unwrap().puncture(j).unwrap();
        assert_eq!((piece.n(), piece.k()), (5, 4));
    }

    #[test]
    fn dual_examples() {
        let f = gf2();
        assert_eq!(catalog::parity(&f, 5).dual().unwrap(), catalog::repetition(&f, 5));
        assert_eq!(catalog::full_space(&f, 3).dual().unwrap_err(), Error::EmptyCode);
        let h = catalog::simplex_7_3().dual().unwrap();
        assert_eq!((h.n(), h.k()), (7, 4));
        assert_eq!(h.weight_hierarchy().unwrap(), vec![0, 3, 5, 6, 7]);
        let c = catalog::unstable_9_7();
        assert!(c.generator().mul(&c.dual().unwrap().generator().transpose()).unwrap().is_zero());
        assert_eq!(c.dual().unwrap().dual().unwrap(), c);
    }

    #[test]
    fn dlp_and_hierarchy_examples() {
        let f = gf2();
        let full = catalog::full_space(&f, 3);
        assert_eq!(full.dlp().unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(full.weight_hierarchy().unwrap(), vec![0, 1, 2, 3]);
        let rep = catalog::repetition(&f, 3);
        assert_eq!(rep.dlp().unwrap(), vec![0, 0, 0, 1]);
        let dlp = catalog::unstable_9_7().dlp().unwrap();
        assert_eq!(dlp[1], 0);
        assert_eq!(dlp[2], 1);
        assert_eq!(catalog::simplex_7_3().weight_hierarchy().unwrap(), vec![0, 4, 6, 7]);
        assert_eq!(catalog::even_weight_3_2().weight_hierarchy().unwrap(), vec![0, 2, 3]);
    }

    #[test]
    fn enumeration_cap() {
        let f = gf2();
        let c = catalog::repetition(&f, 21);
        assert_eq!(
            c.dlp().unwrap_err(),
            Error::SizeLimitExceeded {
                required: 21,
                cap: 20
            }
        );
        assert!(c.dlp_with_limit(21).is_ok());
    }

    #[test]
    fn tensor_examples() {
        let f = gf2();
        let r2 = catalog::repetition(&f, 2);
        let t = r2.tensor(&r2).unwrap();
        assert_eq!((t.n(), t.k()), (4, 1));
        assert_eq!(t.weight_hierarchy().unwrap(), vec![0, 4]);
        let e = catalog::even_weight_3_2();
        let t = e.tensor(&e).unwrap();
        assert_eq!((t.n(), t.k()), (9, 4));
        assert_eq!(t.rate(), e.rate() * e.rate());
    }

    #[test]
    fn schur_examples() {
        let f = gf2();
        let c = catalog::unstable_9_7();
        assert_eq!(c.schur_product(&catalog::repetition(&f, 9)).unwrap(), c);
        let sq = catalog::stable_5_2().schur_square().unwrap();
        assert_eq!(sq, catalog::stable_5_2_square());
        assert!(sq.k() <= 3);
        assert_eq!(
            c.schur_product(&catalog::repetition(&f, 4)).unwrap_err(),
            Error::DimensionMismatch("componentwise product of lengths 9 and 4".into())
        );
    }

    #[test]
    fn closure_examples() {
        let c = catalog::unstable_9_7();
        let s = c.shorten(SupportSet::from_one_based(5..=9));
        assert_eq!(s.closure(), s);
        assert!(c.zero_subcode().closure().is_zero());
        let simplex = catalog::simplex_7_3();
        for w in simplex.codewords().into_iter().filter(|w| w.iter().any(|x| !x.is_zero())) {
            let m = Matrix::new(simplex.field(), 1, 7, w).unwrap();
            let s = Subcode::span(&simplex, &m).unwrap();
            assert_eq!(s.closure(), s);
            assert_eq!(s.closure().degree(), s.degree());
        }
    }

    #[test]
    fn subcode_lattice_operations() {
        let c = catalog::simplex_7_3();
        let f = c.field().clone();
        let a = Subcode::from_coefficients(&c, &Matrix::from_rows(&f, 3, &[[1, 0, 0], [0, 1, 0]]).unwrap()).unwrap();
        let b = Subcode::from_coefficients(&c, &Matrix::from_rows(&f, 3, &[[0, 1, 0], [0, 0, 1]]).unwrap()).unwrap();
        let m = a.meet(&b).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(j, c.whole());
        assert!(m.is_subcode_of(&a) && m.is_subcode_of(&b));
        let outside = Matrix::from_rows(&f, 7, &[[1, 0, 0, 0, 0, 0, 0]]).unwrap();
        assert_eq!(Subcode::span(&c, &outside).unwrap_err(), Error::NotASubcode);
    }
}
