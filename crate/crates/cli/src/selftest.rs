//! Worked examples and exhaustive verification suites.
//!
//! Each suite takes its sizes as arguments: the `selftest` command runs them
//! small, the acceptance target runs them at full size.

use hn_codes::algebra::{FieldSpec, Matrix};
use hn_codes::catalog;
use hn_codes::check::CheckReport;
use hn_codes::code::{LinearCode, Subcode, SupportSet};
use hn_codes::hn::{self, lattice, CodeHn, SubspaceLattice};
use hn_codes::matroid::Matroid;
use hn_codes::{rr, tensor, Error, Rational, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::check;

pub fn field(q: u32) -> FieldSpec {
    match q {
        4 => FieldSpec::new(2, 2, Some(7)).expect("GF(4)"),
        p => FieldSpec::prime(p).expect("prime field"),
    }
}

/// `count` random codes with `q` drawn from `qs`, `1 <= n <= max_n` and
/// `1 <= k <= n`.
pub fn random_codes(seed: u64, count: usize, qs: &[u32], max_n: usize) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = qs[rng.gen_range(0..qs.len())];
            let n = rng.gen_range(1..=max_n);
            let k = rng.gen_range(1..=n);
            LinearCode::random(&field(q), n, k, &mut rng).expect("valid parameters")
        })
        .collect()
}

/// Every binary code with `n <= max_n` and `1 <= k <= min(n, max_k)`.
pub fn all_binary_codes(max_n: usize, max_k: usize) -> Vec<LinearCode> {
    let f = field(2);
    (1..=max_n)
        .flat_map(|n| (1..=n.min(max_k)).flat_map({
            let f = f.clone();
            move |k| LinearCode::enumerate(&f, n, k)
        }))
        .collect()
}

/// A subcode spanned by `0..=k` random combinations of the generator rows.
pub fn random_subcode(code: &LinearCode, rng: &mut impl Rng) -> Subcode {
    let r = rng.gen_range(0..=code.k());
    if r == 0 {
        return code.zero_subcode();
    }
    let q = code.field().q();
    let rows: Vec<Vec<u32>> = (0..r).map(|_| (0..code.k()).map(|_| rng.gen_range(0..q)).collect()).collect();
    let coefficients = Matrix::from_rows(code.field(), code.k(), &rows).expect("entries in range");
    Subcode::from_coefficients(code, &coefficients).expect("combinations of the generator")
}

/// Wei duality and the dual profile identity.
pub fn duality_suite(codes: &[LinearCode], limit: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("Wei duality and dual profile");
    for c in codes.iter().filter(|c| c.k() < c.n()) {
        report.absorb(rr::wei_duality_check(c, limit)?);
        report.absorb(rr::dual_dlp_check(c, limit)?);
    }
    Ok(report)
}

/// Riemann-Roch and Serre duality over all subsets.
pub fn rr_suite(codes: &[LinearCode], limit: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("Riemann-Roch and Serre duality");
    for c in codes {
        report.absorb(rr::rr_check(c, limit)?);
        report.absorb(rr::serre_check(c, limit)?);
    }
    Ok(report)
}

/// The slope map on every code whose dual also has full support, and the
/// subset-side duality on all of them.
pub fn dual_slope_suite(codes: &[LinearCode], limit: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("dual slopes");
    let minus_two = Rational::from_integer(-2);
    report.case(rr::dual_slope(minus_two)? == minus_two, || "-2 is not fixed".into());
    for c in codes.iter().filter(|c| c.k() < c.n()) {
        report.absorb(rr::dual_polygon_check(c, limit)?);
        match rr::dual_slopes_check(c, limit) {
            Ok(r) => report.absorb(r),
            Err(Error::NotFullSupport(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Returns how many codes satisfied the slope map's precondition.
pub fn count_full_support_pairs(codes: &[LinearCode]) -> usize {
    codes.iter().filter(|c| c.k() < c.n() && rr::dual_code_slopes(c).is_ok()).count()
}

/// Parallelogram constraint, reflection, filtration uniqueness and the gap
/// condition on the full subcode lattice of every given code.
pub fn lattice_suite(codes: &[LinearCode]) -> Result<CheckReport> {
    let mut report = CheckReport::new("subcode lattice");
    for c in codes {
        let l = SubspaceLattice::new(c)?;
        report.absorb(lattice::verify_parallelogram_exhaustive(&l));
        report.absorb(hn::gap_condition_check(c)?);
        if c.has_full_support() {
            report.absorb(CodeHn::new(c)?.reflection_check()?);
        }
    }
    Ok(report)
}

/// The bound on every pair, and equality when both factors are chained.
pub fn schaathun_suite(codes: &[LinearCode], limit: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("Schaathun bound");
    let chained: Vec<bool> = codes.iter().map(|c| tensor::is_chained(c, limit)).collect::<Result<_>>()?;
    for (i, a) in codes.iter().enumerate() {
        for (j, b) in codes.iter().enumerate() {
            report.absorb(tensor::schaathun_verify(a, b, limit)?);
            if chained[i] && chained[j] {
                report.absorb(tensor::wei_yang_check(a, b, limit)?);
            }
        }
    }
    Ok(report)
}

/// Witness estimates for random subcodes of products of random binary codes
/// with `n_A, n_B <= max_n`.
pub fn witness_suite(seed: u64, count: usize, max_n: usize, limit: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = field(2);
    let mut report = CheckReport::new("Schaathun witnesses");
    for _ in 0..count {
        let (na, nb) = (rng.gen_range(1..=max_n), rng.gen_range(1..=max_n));
        let a = LinearCode::random(&f, na, rng.gen_range(1..=na), &mut rng)?;
        let b = LinearCode::random(&f, nb, rng.gen_range(1..=nb), &mut rng)?;
        let sub = random_subcode(&a.tensor(&b)?, &mut rng);
        report.absorb(tensor::witness(&sub, &a, &b, limit)?.verify());
    }
    Ok(report)
}

/// Products of semistable codes, each with a few random subcodes pushed
/// through the inequality chain.
pub fn tensor_semistable_suite(pairs: &[(LinearCode, LinearCode)], seed: u64, limit: usize) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport::new("tensor semistability");
    for (a, b) in pairs {
        let p = a.tensor(b)?;
        let subs: Vec<Subcode> = (0..3).map(|_| random_subcode(&p, &mut rng)).filter(|s| !s.is_zero()).collect();
        report.absorb(tensor::tensor_semistable_check(a, b, &subs, limit)?);
    }
    Ok(report)
}

/// All ordered pairs drawn from the semistable codes in `codes`.
pub fn semistable_pairs(codes: &[LinearCode]) -> Result<Vec<(LinearCode, LinearCode)>> {
    let mut ss = Vec::new();
    for c in codes {
        if CodeHn::new(c)?.is_semistable() {
            ss.push(c.clone());
        }
    }
    Ok(ss.iter().flat_map(|a| ss.iter().map(move |b| (a.clone(), b.clone()))).collect())
}

/// Matroid identities on one matroid, plus agreement with the code when one
/// is given.
pub fn matroid_checks(m: &Matroid, code: Option<&LinearCode>) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("matroid of rank {} on {} elements", m.rank_of_ground(), m.n()));
    report.absorb(m.rr_check());
    report.absorb(m.wei_partition_check());
    report.absorb(m.gap_check());
    report.absorb(m.dual_polygon_check()?);
    let h = m.hierarchy();
    let (n, k) = (m.n(), m.rank_of_ground());
    report.case(h.gaps.len() == n - k, || format!("{} gaps, expected {}", h.gaps.len(), n - k));
    report.case(m.dual().dual() == *m, || "dual is not an involution".into());
    if let Some(c) = code {
        for bits in 0..1u64 << n {
            let j = SupportSet::from_bits(bits);
            report.case(m.h0(j) == c.shorten(j).dim(), || format!("h0 differs at {j:?}"));
        }
        report.case(h.weights == c.weight_hierarchy()?, || "weights differ from the code".into());
    }
    Ok(report)
}

/// Uniform matroids for every `k <= n <= max_n` and the matroids of `codes`.
pub fn matroid_suite(codes: &[LinearCode], max_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("matroids");
    for n in 1..=max_n {
        for k in 0..=n {
            report.absorb(matroid_checks(&Matroid::uniform(k, n)?, None)?);
        }
    }
    for c in codes {
        report.absorb(matroid_checks(&Matroid::from_code(c)?, Some(c))?);
    }
    Ok(report)
}

/// One worked example: named expectations and whether each held.
pub fn example(name: &str, facts: Vec<(&str, Value, Value)>) -> Value {
    let passed = facts.iter().all(|(_, got, want)| got == want);
    let facts: Vec<Value> = facts
        .into_iter()
        .map(|(what, got, want)| json!({ "fact": what, "value": got, "expected": want, "holds": got == want }))
        .collect();
    json!({ "name": name, "passed": passed, "facts": facts })
}

fn rate(r: Rational) -> Value {
    crate::report::rational(r)
}

/// The three worked examples, plus the simplex code.
pub fn examples() -> Result<Vec<Value>> {
    let mut out = Vec::new();

    let c = catalog::even_weight_3_2();
    let h = CodeHn::new(&c)?;
    out.push(example(
        "[3,2,2] even-weight code",
        vec![("stable", json!(h.is_stable()), json!(true)), ("weight_hierarchy", json!(h.hierarchy()), json!([0, 2, 3]))],
    ));

    let c = catalog::stable_5_2();
    let h = CodeHn::new(&c)?;
    let square = c.schur_square()?;
    let hs = CodeHn::new(&square)?;
    let w = hs.destabilizing_subcode()?;
    out.push(example(
        "[5,2] code and its square",
        vec![
            ("stable", json!(h.is_stable()), json!(true)),
            ("square equals the listed [5,3] code", json!(square == catalog::stable_5_2_square()), json!(true)),
            ("square semistable", json!(hs.is_semistable()), json!(false)),
            ("witness dim", json!(w.as_ref().map(|s| s.dim())), json!(1)),
            ("witness weight", json!(w.as_ref().map(|s| s.weight())), json!(1)),
        ],
    ));

    let c = catalog::unstable_9_7();
    let h = CodeHn::new(&c)?;
    let w = h.destabilizing_subcode()?;
    out.push(example(
        "[9,7] code",
        vec![
            ("semistable", json!(h.is_semistable()), json!(false)),
            ("witness support", json!(w.as_ref().map(|s| s.support().one_based())), json!([5, 6, 7, 8, 9])),
            ("witness dim", json!(w.as_ref().map(|s| s.dim())), json!(4)),
            (
                "witness rate",
                json!(w.as_ref().map(|s| s.effective_rate().map(rate).unwrap_or(Value::Null))),
                json!("4/5"),
            ),
            ("code rate", rate(c.rate()), json!("7/9")),
        ],
    ));

    let c = catalog::simplex_7_3();
    let h = CodeHn::new(&c)?;
    out.push(example(
        "[7,3] simplex code",
        vec![("stable", json!(h.is_stable()), json!(true)), ("weight_hierarchy", json!(h.hierarchy()), json!([0, 4, 6, 7]))],
    ));
    Ok(out)
}

/// Every suite at the built-in sizes. Returns the reports in a fixed order.
pub fn suites() -> Result<Vec<CheckReport>> {
    let limit = 20;
    let random = random_codes(11, 150, &[2, 3, 4], 10);
    let binary = all_binary_codes(5, 3);
    let small = all_binary_codes(3, 3);
    let tensor_pairs = semistable_pairs(&all_binary_codes(3, 3))?;
    let matroid_codes = random_codes(12, 40, &[2, 3, 4], 8);
    Ok(vec![
        duality_suite(&random, limit)?,
        rr_suite(&random, limit)?,
        dual_slope_suite(&random, limit)?,
        lattice_suite(&binary)?,
        schaathun_suite(&small, limit)?,
        witness_suite(13, 300, 3, limit)?,
        tensor_semistable_suite(&tensor_pairs, 14, limit)?,
        matroid_suite(&matroid_codes, 8)?,
    ])
}

/// Results object of the `selftest` command and whether everything held.
pub fn run() -> Result<(Value, bool)> {
    let examples = examples()?;
    let suites = suites()?;
    let passed = examples.iter().all(|e| e["passed"] == json!(true)) && suites.iter().all(CheckReport::passed);
    let results = json!({
        "examples": examples,
        "suites": suites.iter().map(check).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok((results, passed))
}
