//! Property tests for the algebraic and structural invariants.

use hn_codes::algebra::{FieldSpec, Matrix};
use hn_codes::code::{LinearCode, Subcode, SupportSet};
use hn_codes::format::{parse_code, write_code};
use hn_codes::hn::{verify_galois, CodeHn};
use hn_codes::matroid::Matroid;
use hn_codes::{rr, tensor, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field(q: u32) -> FieldSpec {
    match q {
        4 => FieldSpec::new(2, 2, Some(7)).unwrap(),
        p => FieldSpec::prime(p).unwrap(),
    }
}

prop_compose! {
    fn code_strategy(max_n: usize)(q in prop::sample::select(vec![2u32, 3, 4]), n in 1..=max_n)
        (q in Just(q), n in Just(n), k in 1..=n, seed in any::<u64>()) -> LinearCode {
        LinearCode::random(&field(q), n, k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    }
}

prop_compose! {
    fn binary_code(max_n: usize)(n in 1..=max_n)(n in Just(n), k in 1..=n, seed in any::<u64>()) -> LinearCode {
        LinearCode::random(&field(2), n, k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    }
}

prop_compose! {
    fn matrix_strategy()(q in prop::sample::select(vec![2u32, 3, 4, 5]), rows in 0..6usize, cols in 1..7usize)
        (q in Just(q), rows in Just(rows), cols in Just(cols), seed in any::<u64>()) -> Matrix {
        let f = field(q);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Vec<u32>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..q)).collect()).collect();
        Matrix::from_rows(&f, cols, &data).unwrap()
    }
}

fn random_subcode(code: &LinearCode, rng: &mut ChaCha8Rng) -> Subcode {
    let r = rng.gen_range(0..=code.k());
    let q = code.field().q();
    let rows: Vec<Vec<u32>> = (0..r).map(|_| (0..code.k()).map(|_| rng.gen_range(0..q)).collect()).collect();
    if rows.is_empty() {
        return code.zero_subcode();
    }
    Subcode::from_coefficients(code, &Matrix::from_rows(code.field(), code.k(), &rows).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_is_transpose_invariant(m in matrix_strategy()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(m in matrix_strategy()) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
        prop_assert!(m.same_row_space(&r));
    }

    #[test]
    fn nullspace_is_annihilated(m in matrix_strategy()) {
        let h = m.nullspace();
        prop_assert_eq!(h.rows() + m.rank(), m.cols());
        if h.rows() > 0 && m.rows() > 0 {
            prop_assert!(m.mul(&h.transpose()).unwrap().is_zero());
        }
        prop_assert_eq!(h.rank(), h.rows());
    }

    #[test]
    fn biduality(c in code_strategy(9)) {
        prop_assume!(c.k() < c.n());
        let d = c.dual().unwrap();
        prop_assert_eq!(d.k(), c.n() - c.k());
        prop_assert!(c.generator().mul(&d.generator().transpose()).unwrap().is_zero());
        prop_assert_eq!(d.dual().unwrap(), c);
    }

    #[test]
    fn profile_increments_are_unit(c in code_strategy(10)) {
        let dlp = c.dlp().unwrap();
        prop_assert_eq!(dlp[0], 0);
        prop_assert_eq!(dlp[c.n()], c.k());
        let steps: Vec<usize> = dlp.windows(2).map(|w| w[1] - w[0]).collect();
        prop_assert!(steps.iter().all(|&s| s <= 1));
        prop_assert_eq!(steps.iter().sum::<usize>(), c.k());
        let d = c.weight_hierarchy().unwrap();
        prop_assert!(d.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(*d.last().unwrap(), c.support().len());
    }

    #[test]
    fn slopes_bracket_the_mean(c in code_strategy(10)) {
        let p = CodeHn::new(&c).unwrap().code_polygon();
        let overall = p.overall_slope().unwrap();
        prop_assert!(p.mu_max().unwrap() >= overall && overall >= p.mu_min().unwrap());
        prop_assert!(p.slopes().windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn full_support_slopes_at_most_minus_one(c in code_strategy(10)) {
        prop_assume!(c.has_full_support());
        let hn = CodeHn::new(&c).unwrap();
        let mu = hn.code_polygon().mu_max().unwrap();
        prop_assert!(mu <= Rational::from_integer(-1));
        if hn.hierarchy()[1] >= 2 {
            prop_assert!(mu < Rational::from_integer(-1));
        }
    }

    #[test]
    fn filtration_is_canonical(c in code_strategy(10)) {
        let hn = CodeHn::new(&c).unwrap();
        let f = hn.canonical_filtration().unwrap();
        let d = hn.hierarchy();
        for (step, &(rank, deg)) in f.steps.iter().zip(f.polygon.vertices()) {
            prop_assert_eq!(step.dim(), rank);
            prop_assert_eq!(Rational::from_integer(step.degree()), deg);
            prop_assert_eq!(step.weight(), d[rank]);
            prop_assert!(step.is_closed());
        }
        prop_assert!(f.steps.windows(2).all(|w| w[0].support().is_subset(w[1].support())));
        prop_assert_eq!(f.polygon.sides() <= 1, hn.is_semistable());
        if hn.is_stable() {
            prop_assert!(hn.is_semistable());
        }
    }

    #[test]
    fn graded_pieces_are_semistable(c in code_strategy(10)) {
        prop_assume!(c.has_full_support());
        let hn = CodeHn::new(&c).unwrap();
        let pieces = hn.graded_pieces().unwrap();
        let slopes = hn.code_polygon().slopes();
        prop_assert_eq!(pieces.len(), slopes.len());
        prop_assert_eq!(pieces.iter().map(|p| p.k()).sum::<usize>(), c.k());
        prop_assert_eq!(pieces.iter().map(|p| p.n()).sum::<usize>(), c.n());
        for (piece, slope) in pieces.iter().zip(slopes) {
            let h = CodeHn::new(piece).unwrap();
            prop_assert!(h.is_semistable());
            prop_assert_eq!(h.code_polygon().slopes(), vec![slope]);
        }
    }

    #[test]
    fn reflection_for_full_support(c in code_strategy(10)) {
        prop_assume!(c.has_full_support());
        prop_assert!(CodeHn::new(&c).unwrap().reflection_check().unwrap().passed());
    }

    #[test]
    fn extension_of_scalars_keeps_weights(c in binary_code(9)) {
        let rows = c.generator().to_values();
        let lifted = LinearCode::from_rows(&field(4), c.n(), &rows).unwrap();
        prop_assert_eq!(lifted.weight_hierarchy().unwrap(), c.weight_hierarchy().unwrap());
        prop_assert_eq!(CodeHn::new(&lifted).unwrap().is_semistable(), CodeHn::new(&c).unwrap().is_semistable());
    }

    #[test]
    fn semistability_is_self_dual(q in prop::sample::select(vec![2u32, 3, 4]), n in 2..=10usize, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // redraw until both the code and its dual have full support
        let pair = (0..200).find_map(|_| {
            let c = LinearCode::random(&field(q), n, rng.gen_range(1..n), &mut rng).unwrap();
            let d = c.dual().unwrap();
            (c.has_full_support() && d.has_full_support()).then_some((c, d))
        });
        prop_assume!(pair.is_some());
        let (c, d) = pair.unwrap();
        prop_assert_eq!(CodeHn::new(&c).unwrap().is_semistable(), CodeHn::new(&d).unwrap().is_semistable());
    }

    #[test]
    fn cohomology_is_monotone(c in code_strategy(8), a in any::<u64>(), b in any::<u64>()) {
        let n = c.n();
        let small = SupportSet::from_bits(a).intersection(SupportSet::full(n));
        let big = small.union(SupportSet::from_bits(b).intersection(SupportSet::full(n)));
        let (hs, hb) = (rr::cohomology(&c, small), rr::cohomology(&c, big));
        prop_assert!(hs.h0 <= hb.h0 && hs.h1 >= hb.h1);
        prop_assert_eq!(hs.h0 as i64 - hs.h1 as i64, small.len() as i64 + c.k() as i64 - n as i64);
        prop_assert!(rr::les_check(&c, small, big.difference(small)).unwrap().passed());
    }

    #[test]
    fn closure_laws(c in code_strategy(8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_subcode(&c, &mut rng);
        let cl = s.closure();
        prop_assert!(s.is_subcode_of(&cl));
        prop_assert_eq!(cl.closure(), cl.clone());
        prop_assert_eq!(cl.degree(), s.degree());
    }

    #[test]
    fn galois_laws(c in code_strategy(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let subs: Vec<Subcode> = (0..5).map(|_| random_subcode(&c, &mut rng)).collect();
        let sets: Vec<SupportSet> = (0..5).map(|_| SupportSet::from_bits(rng.gen_range(0..1u64 << c.n()))).collect();
        let r = verify_galois(&c, &subs, &sets).unwrap();
        prop_assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn schur_product_bounds(c in code_strategy(8)) {
        let sq = c.schur_square().unwrap();
        prop_assert!(sq.k() <= c.k() * (c.k() + 1) / 2);
        let ones = LinearCode::from_rows(c.field(), c.n(), &[vec![1u32; c.n()]]).unwrap();
        prop_assert_eq!(c.schur_product(&ones).unwrap(), c);
    }

    #[test]
    fn matroid_invariants(c in code_strategy(9)) {
        let m = Matroid::from_code(&c).unwrap();
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert!(m.rr_check().passed());
        prop_assert!(m.gap_check().passed());
        prop_assert!(m.wei_partition_check().passed());
        prop_assert!(m.dual_polygon_check().unwrap().passed());
        prop_assert_eq!(m.hierarchy().weights, c.weight_hierarchy().unwrap());
        prop_assert_eq!(m.polygon(), CodeHn::new(&c).unwrap().subset_polygon());
    }

    #[test]
    fn schaathun_bound_is_monotone(
        da in prop::collection::vec(1usize..4, 1..5),
        db in prop::collection::vec(1usize..4, 1..5),
    ) {
        let acc = |v: &[usize]| std::iter::once(0).chain(v.iter().scan(0, |s, &x| { *s += x; Some(*s) })).collect::<Vec<_>>();
        let (da, db) = (acc(&da), acc(&db));
        let star = tensor::schaathun_bounds(&da, &db).unwrap();
        prop_assert!(star.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(*star.last().unwrap(), da.last().unwrap() * db.last().unwrap());
        prop_assert_eq!(star[0], 0);
        prop_assert_eq!(star[1], da[1] * db[1]);
    }

    #[test]
    fn column_decomposition_of_weight(a in binary_code(3), b in binary_code(3), seed in any::<u64>()) {
        let p = a.tensor(&b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_subcode(&p, &mut rng);
        let w = tensor::witness(&s, &a, &b, 20).unwrap();
        prop_assert!(w.verify().passed(), "{:?}", w.verify().violations);
    }

    #[test]
    fn code_files_round_trip(c in code_strategy(12)) {
        prop_assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
    }
}
