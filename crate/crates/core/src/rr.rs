//! Cohomology of a code relative to a coordinate set, Riemann-Roch, Serre
//! duality and the duality theorems for weights, profiles and slopes.

use crate::algebra::Matrix;
use crate::check::CheckReport;
use crate::code::{LinearCode, Subcode, SupportSet};
use crate::error::{Error, Result, SupportDefect};
use crate::hn::lattice::{lattice_filtration, SubsetLattice};
use crate::hn::{CanonicalPolygon, CodeHn};
use crate::Rational;

/// `H0(C, J) = C ∩ F^J` and `H1(C, J) = F^{[n] \ J} / π_{[n] \ J}(C)`.
#[derive(Debug, Clone)]
pub struct CohomologyPair {
    pub j: SupportSet,
    pub h0: usize,
    pub h1: usize,
    /// RREF basis of `C ∩ F^J`.
    pub h0_basis: Matrix,
    /// Coordinates outside `J` whose unit vectors span a complement of the
    /// projected code: the non-pivot columns of the projection.
    pub h1_complement: Vec<usize>,
}

pub fn cohomology(code: &LinearCode, j: SupportSet) -> CohomologyPair {
    let n = code.n();
    let outside = j.complement(n).indices();
    let shortened = code.shorten(j);
    let (_, pivots) = code.generator().select_columns(&outside).rref();
    let h1_complement: Vec<usize> = outside
        .iter()
        .enumerate()
        .filter(|(pos, _)| !pivots.contains(pos))
        .map(|(_, &c)| c)
        .collect();
    CohomologyPair {
        j,
        h0: shortened.dim(),
        h1: h1_complement.len(),
        h0_basis: shortened.basis().clone(),
        h1_complement,
    }
}

/// Rank tables of a code and its dual; the dual of the whole space is the
/// zero code, whose ranks all vanish.
struct DualTables {
    n: usize,
    k: usize,
    code: Vec<u8>,
    dual: Vec<u8>,
}

impl DualTables {
    fn new(code: &LinearCode, limit: usize) -> Result<DualTables> {
        let table = code.rank_table(limit)?;
        let dual = if code.k() == code.n() {
            vec![0; table.len()]
        } else {
            code.dual()?.rank_table(limit)?
        };
        Ok(DualTables {
            n: code.n(),
            k: code.k(),
            code: table,
            dual,
        })
    }

    fn full(&self) -> usize {
        (1usize << self.n) - 1
    }

    /// `h0(C, J) = k - r(complement)`.
    fn h0(&self, j: usize) -> usize {
        self.k - self.code[self.full() & !j] as usize
    }

    /// `h1(C, J) = #complement - r(complement)`.
    fn h1(&self, j: usize) -> usize {
        let c = self.full() & !j;
        c.count_ones() as usize - self.code[c] as usize
    }

    /// `h0(C⊥, J)`.
    fn dual_h0(&self, j: usize) -> usize {
        (self.n - self.k) - self.dual[self.full() & !j] as usize
    }
}

/// `h0(C, J) - h0(C⊥, [n] \ J) = #J + k - n` for every `J`, together with
/// the Euler relation `h0 - h1 = #J + k - n`.
pub fn rr_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    let t = DualTables::new(code, limit)?;
    let mut report = CheckReport::new("Riemann-Roch");
    for j in 0..=t.full() {
        let chi = j.count_ones() as i64 + t.k as i64 - t.n as i64;
        let lhs = t.h0(j) as i64 - t.dual_h0(t.full() & !j) as i64;
        let euler = t.h0(j) as i64 - t.h1(j) as i64;
        report.case(lhs == chi && euler == chi, || {
            format!("J = {:?}: difference {lhs}, Euler {euler}, expected {chi}", SupportSet::from_bits(j as u64))
        });
    }
    Ok(report)
}

/// `h1(C, J) = h0(C⊥, [n] \ J)` for every `J`.
pub fn serre_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    let t = DualTables::new(code, limit)?;
    let mut report = CheckReport::new("Serre duality");
    for j in 0..=t.full() {
        let (h1, dual) = (t.h1(j), t.dual_h0(t.full() & !j));
        report.case(h1 == dual, || {
            format!("J = {:?}: h1 {h1}, dual h0 {dual}", SupportSet::from_bits(j as u64))
        });
    }
    Ok(report)
}

/// Normalized form of Riemann-Roch: `|J|_norm = #J - d` and `g = n - k - d + 1`
/// with `d` the minimum distance. `g` is computed verbatim even when the code
/// lacks full support, which is flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizedRr {
    pub normalized_size: i64,
    pub genus: i64,
    pub full_support: bool,
}

pub fn rr_normalized(code: &LinearCode, j: SupportSet) -> Result<NormalizedRr> {
    let d = code.minimum_distance()? as i64;
    let (n, k) = (code.n() as i64, code.k() as i64);
    Ok(NormalizedRr {
        normalized_size: j.len() as i64 - d,
        genus: n - k - d + 1,
        full_support: code.has_full_support(),
    })
}

/// Dimension-level exactness of
/// `0 → H0(J) → H0(J ⊔ J') → F^{J'} → H1(J) → H1(J ⊔ J') → 0`.
pub fn les_check(code: &LinearCode, j: SupportSet, j2: SupportSet) -> Result<CheckReport> {
    if !j.is_disjoint(j2) {
        return Err(Error::InvalidArgument("the two coordinate sets must be disjoint".into()));
    }
    let mut report = CheckReport::new("long exact sequence");
    let small = cohomology(code, j);
    let big = cohomology(code, j.union(j2));
    let middle = big.h0_basis.select_columns(&j2.indices()).rank();
    let terms = [small.h0, big.h0, j2.len(), small.h1, big.h1];
    let alternating = terms[0] as i64 - terms[1] as i64 + terms[2] as i64 - terms[3] as i64 + terms[4] as i64;
    report.case(alternating == 0, || format!("alternating sum {alternating} for dims {terms:?}"));
    report.case(small.h0 <= big.h0, || "first map not injective".into());
    report.case(small.h1 >= big.h1, || "last map not surjective".into());
    let (gain, drop) = (big.h0 as i64 - small.h0 as i64, small.h1 as i64 - big.h1 as i64);
    report.case(middle as i64 == gain, || format!("projection rank {middle}, expected {gain}"));
    report.case((j2.len() - middle) as i64 == drop, || {
        format!("connecting map rank {}, expected {drop}", j2.len() - middle)
    });
    Ok(report)
}

/// `h0(C, J) <= #J / 2` for a self-dual code.
pub fn clifford_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    if code.k() * 2 != code.n() || code.dual()? != *code {
        return Err(Error::NotSelfDual);
    }
    let t = DualTables::new(code, limit)?;
    let mut report = CheckReport::new("Clifford estimate");
    for j in 0..=t.full() {
        let h0 = t.h0(j);
        report.case(2 * h0 <= j.count_ones() as usize, || {
            format!("J = {:?}: h0 = {h0}", SupportSet::from_bits(j as u64))
        });
    }
    Ok(report)
}

/// Weights `d_1..d_k` of a code, empty for the zero code of `k = n`.
fn nonzero_weights(code: &LinearCode, limit: usize) -> Result<Vec<usize>> {
    Ok(code.weight_hierarchy_with_limit(limit)?[1..].to_vec())
}

fn dual_weights(code: &LinearCode, limit: usize) -> Result<Vec<usize>> {
    if code.k() == code.n() {
        return Ok(Vec::new());
    }
    nonzero_weights(&code.dual()?, limit)
}

/// `{d_i(C)} ⊔ {n + 1 - d_i(C⊥)} = [n]`.
///
/// Holds for every code once the weights are read as `min{#J : dim C_J >= i}`;
/// the support status of both sides is available from [`support_defects`].
pub fn wei_duality_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    let n = code.n();
    let own = nonzero_weights(code, limit)?;
    let dual = dual_weights(code, limit)?;
    let mut hits = vec![0usize; n + 2];
    for &d in &own {
        hits[d] += 1;
    }
    for &d in &dual {
        hits[n + 1 - d] += 1;
    }
    let mut report = CheckReport::new("Wei duality");
    for (j, &h) in hits.iter().enumerate().take(n + 1).skip(1) {
        report.case(h == 1, || format!("{j} covered {h} times by {own:?} and dual {dual:?}"));
    }
    Ok(report)
}

/// Zero coordinates of the code, and coordinates `i` with `e_i ∈ C`
/// (the zero coordinates of the dual).
pub fn support_defects(code: &LinearCode) -> (Vec<usize>, Vec<usize>) {
    let n = code.n();
    let zero = code.support().complement(n).indices();
    let weight_one = (0..n)
        .filter(|&i| code.shorten(SupportSet::from_indices([i])).dim() == 1)
        .collect();
    (zero, weight_one)
}

/// `k_{n-j}(C⊥) = k_j(C) + n - j - k` for all `j`, and every `J` realizing
/// `k_j(C)` has a complement realizing `k_{n-j}(C⊥)`.
pub fn dual_dlp_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    let t = DualTables::new(code, limit)?;
    let (n, k) = (t.n, t.k);
    let mut best = vec![0usize; n + 1];
    let mut best_dual = vec![0usize; n + 1];
    for j in 0..=t.full() {
        let s = j.count_ones() as usize;
        best[s] = best[s].max(t.h0(j));
        best_dual[s] = best_dual[s].max(t.dual_h0(j));
    }
    let mut report = CheckReport::new("dual profile");
    for j in 0..=n {
        let want = best[j] + n - j - k;
        report.case(best_dual[n - j] == want, || {
            format!("k_{}(dual) = {}, expected {want}", n - j, best_dual[n - j])
        });
    }
    for j in 0..=t.full() {
        let s = j.count_ones() as usize;
        if t.h0(j) == best[s] {
            let c = t.full() & !j;
            report.case(t.dual_h0(c) == best_dual[n - s], || {
                format!("complement of maximizer {:?} is not maximal for the dual", SupportSet::from_bits(j as u64))
            });
        }
    }
    Ok(report)
}

/// The subset polygon of `C⊥` predicted from that of `C`:
/// `(ξ, η) ↦ (n - ξ, η + ξ - k)`, i.e. the opposite polygon followed by the
/// affine map `η ↦ (n - k) - ξ + η`.
pub fn dual_polygon(code: &LinearCode, limit: usize) -> Result<CanonicalPolygon> {
    let (n, k) = (code.n() as i64, code.k() as i64);
    CodeHn::with_limit(code, limit)?.subset_polygon().opposite().affine_transform(
        Rational::from_integer(n - k),
        Rational::from_integer(-1),
        Rational::from_integer(1),
    )
}

fn subset_filtration(code: &LinearCode, limit: usize) -> Result<Vec<SupportSet>> {
    let l = SubsetLattice::cosupport(code, limit)?;
    Ok(lattice_filtration(&l)?.into_iter().map(|x| l.set(x)).collect())
}

/// The predicted dual subset polygon equals the computed one, slopes map
/// `μ ↦ -1 - μ` in reverse order, and the filtration sets complement.
pub fn dual_polygon_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    let dual = code.dual()?;
    let mut report = CheckReport::new("dual subset polygon");
    let predicted = dual_polygon(code, limit)?;
    let actual = CodeHn::with_limit(&dual, limit)?.subset_polygon();
    report.case(predicted == actual, || format!("dual polygon {actual:?}, predicted {predicted:?}"));
    let own = CodeHn::with_limit(code, limit)?.subset_polygon();
    let mapped: Vec<Rational> = own.slopes().iter().rev().map(|m| Rational::from_integer(-1) - m).collect();
    report.case(actual.slopes() == mapped, || {
        format!("dual slopes {:?}, mapped {mapped:?}", actual.slopes())
    });
    let n = code.n();
    let complements: Vec<SupportSet> = subset_filtration(code, limit)?.iter().rev().map(|j| j.complement(n)).collect();
    let dual_filt = subset_filtration(&dual, limit)?;
    report.case(complements == dual_filt, || {
        format!("dual filtration {dual_filt:?}, complements {complements:?}")
    });
    Ok(report)
}

/// `μ ↦ -1 + (μ + 1)^{-1}`.
pub fn dual_slope(mu: Rational) -> Result<Rational> {
    let shifted = mu + Rational::from_integer(1);
    if shifted == Rational::from_integer(0) {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::from_integer(-1) + shifted.recip())
}

fn require_full_support(code: &LinearCode) -> Result<()> {
    let (zero, weight_one) = support_defects(code);
    if !zero.is_empty() {
        return Err(Error::NotFullSupport(SupportDefect::Code { zero_coordinates: zero }));
    }
    if !weight_one.is_empty() {
        return Err(Error::NotFullSupport(SupportDefect::Dual {
            weight_one_coordinates: weight_one,
        }));
    }
    Ok(())
}

/// Code slopes of `C⊥` predicted from those of `C`, in decreasing order.
///
/// Requires both `C` and `C⊥` to have full support; otherwise the error
/// carries the zero coordinates of the offending side.
pub fn dual_code_slopes(code: &LinearCode) -> Result<Vec<Rational>> {
    require_full_support(code)?;
    mapped_slopes(&CodeHn::new(code)?)
}

fn mapped_slopes(hn: &CodeHn) -> Result<Vec<Rational>> {
    hn.code_polygon().slopes().iter().rev().map(|&m| dual_slope(m)).collect()
}

/// Compares the predicted dual code slopes with the computed polygon of
/// `C⊥`, checks that the dual filtration is `(C⊥)_{[n] \ Supp(C_α)}` in
/// reverse order, and that semistability agrees on both sides.
pub fn dual_slopes_check(code: &LinearCode, limit: usize) -> Result<CheckReport> {
    require_full_support(code)?;
    let dual = code.dual()?;
    let own = CodeHn::with_limit(code, limit)?;
    let predicted = mapped_slopes(&own)?;
    let other = CodeHn::with_limit(&dual, limit)?;
    let mut report = CheckReport::new("dual code slopes");
    let actual = other.code_polygon().slopes();
    report.case(actual == predicted, || format!("dual slopes {actual:?}, predicted {predicted:?}"));
    let n = code.n();
    let expected: Vec<Subcode> = own
        .canonical_filtration()?
        .steps
        .iter()
        .rev()
        .map(|s| dual.shorten(s.support().complement(n)))
        .collect();
    let dual_steps = other.canonical_filtration()?.steps;
    report.case(expected == dual_steps, || "dual filtration is not the complement chain".into());
    report.case(own.is_semistable() == other.is_semistable(), || {
        "semistability differs between the code and its dual".into()
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::catalog;
    use crate::code::DEFAULT_ENUM_LIMIT;
    use rand::{Rng, SeedableRng};

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn cohomology_examples() {
        let c = catalog::unstable_9_7();
        let all = cohomology(&c, SupportSet::full(9));
        assert_eq!((all.h0, all.h1), (7, 0));
        let none = cohomology(&c, SupportSet::EMPTY);
        assert_eq!((none.h0, none.h1), (0, 2));
        let p = cohomology(&c, SupportSet::from_one_based([1, 2]));
        assert_eq!((p.h0, p.h1), (1, 1));
        assert_eq!(p.h0_basis.row_values(0), vec![1, 1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn rr_and_serre_on_catalog() {
        let f3 = FieldSpec::prime(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut codes = vec![
            catalog::unstable_9_7(),
            catalog::extended_hamming_8_4(),
            catalog::full_space(&gf2(), 4),
            LinearCode::random(&f3, 8, 3, &mut rng).unwrap(),
        ];
        codes.push(catalog::repetition(&f3, 5));
        for c in &codes {
            assert!(rr_check(c, DEFAULT_ENUM_LIMIT).unwrap().passed());
            assert!(serre_check(c, DEFAULT_ENUM_LIMIT).unwrap().passed());
            assert!(wei_duality_check(c, DEFAULT_ENUM_LIMIT).unwrap().passed());
            assert!(dual_dlp_check(c, DEFAULT_ENUM_LIMIT).unwrap().passed());
        }
    }

    #[test]
    fn self_dual_code() {
        let c = catalog::extended_hamming_8_4();
        assert!(clifford_check(&c, DEFAULT_ENUM_LIMIT).unwrap().passed());
        for bits in 0..256u64 {
            let j = SupportSet::from_bits(bits);
            assert_eq!(cohomology(&c, j).h1, cohomology(&c, j.complement(8)).h0);
        }
        let f = gf2();
        let small = catalog::repetition(&f, 2);
        assert_eq!(cohomology(&small, SupportSet::from_indices([0])).h0, 0);
        assert!(clifford_check(&small, 20).unwrap().passed());
        assert_eq!(clifford_check(&catalog::simplex_7_3(), 20).unwrap_err(), Error::NotSelfDual);
    }

    #[test]
    fn normalized_examples() {
        let f = gf2();
        assert_eq!(rr_normalized(&catalog::repetition(&f, 5), SupportSet::EMPTY).unwrap().genus, 0);
        assert_eq!(rr_normalized(&catalog::hamming_7_4(), SupportSet::EMPTY).unwrap().genus, 1);
        let r = rr_normalized(&catalog::unstable_9_7(), SupportSet::from_indices([0, 1, 2])).unwrap();
        assert_eq!((r.normalized_size, r.genus, r.full_support), (1, 1, true));
    }

    #[test]
    fn les_on_random_pairs() {
        let f = FieldSpec::new(2, 2, Some(7)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c = LinearCode::random(&f, 7, 3, &mut rng).unwrap();
            let a: u64 = rng.gen_range(0..128);
            let b: u64 = rng.gen_range(0..128) & !a;
            let r = les_check(&c, SupportSet::from_bits(a), SupportSet::from_bits(b)).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
        }
        let c = catalog::simplex_7_3();
        assert!(les_check(&c, SupportSet::from_bits(3), SupportSet::from_bits(1)).is_err());
    }

    #[test]
    fn wei_simplex_and_parity() {
        let c = catalog::simplex_7_3();
        assert_eq!(nonzero_weights(&c, 20).unwrap(), vec![4, 6, 7]);
        assert_eq!(dual_weights(&c, 20).unwrap(), vec![3, 5, 6, 7]);
        let f = gf2();
        for n in 2..7 {
            assert!(wei_duality_check(&catalog::parity(&f, n), 20).unwrap().passed());
        }
    }

    #[test]
    fn dual_slope_examples() {
        assert_eq!(dual_slope(Rational::from_integer(-2)).unwrap(), Rational::from_integer(-2));
        assert_eq!(dual_slope(Rational::new(-5, 2)).unwrap(), Rational::new(-5, 3));
        assert_eq!(dual_code_slopes(&catalog::stable_5_2()).unwrap(), vec![Rational::new(-5, 3)]);
        let r = dual_slopes_check(&catalog::stable_5_2(), 20).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        let r = dual_slopes_check(&catalog::unstable_9_7(), 20).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn weight_one_words_block_dual_slopes() {
        let c = catalog::isolated_coordinate_5_3();
        match dual_code_slopes(&c) {
            Err(Error::NotFullSupport(SupportDefect::Dual { weight_one_coordinates })) => {
                assert_eq!(weight_one_coordinates, vec![0]);
            }
            other => panic!("unexpected {other:?}"),
        }
        // the top slope is then -1 and the first step is spanned by weight-one words
        let hn = CodeHn::new(&c).unwrap();
        assert_eq!(hn.code_polygon().mu_max(), Some(Rational::from_integer(-1)));
        assert_eq!(hn.canonical_filtration().unwrap().steps[1].support(), SupportSet::from_indices([0]));
    }

    #[test]
    fn dual_polygon_examples() {
        let f = gf2();
        for c in [catalog::parity(&f, 5), catalog::unstable_9_7(), catalog::isolated_coordinate_5_3()] {
            let r = dual_polygon_check(&c, 20).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
        }
        // rate one half is a fixed point of μ ↦ -1 - μ
        let p = dual_polygon(&catalog::extended_hamming_8_4(), 20).unwrap();
        assert_eq!(p.slopes(), vec![Rational::new(-1, 2)]);
    }
}
