//! Finite modular lattices with a degree function, enumerated explicitly.

use std::collections::HashMap;

use super::polygon::{CanonicalPolygon, RankDegreeProfile};
use crate::algebra::subsets::{rref_matrices, subspace_count};
use crate::algebra::Matrix;
use crate::check::CheckReport;
use crate::code::{LinearCode, Subcode, SupportSet};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::Rational;

/// An enumerable finite lattice with rank and degree functions.
///
/// Elements are identified by indices `0..len()`.
pub trait HnLattice {
    fn len(&self) -> usize;
    fn bottom(&self) -> usize;
    fn top(&self) -> usize;
    fn rank(&self, x: usize) -> usize;
    fn degree(&self, x: usize) -> i64;
    fn leq(&self, x: usize, y: usize) -> bool;
    fn meet(&self, x: usize, y: usize) -> usize;
    fn join(&self, x: usize, y: usize) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Largest number of subspaces the subspace backend agrees to enumerate.
pub const SUBSPACE_ELEMENT_BOUND: u128 = 200_000;
/// Largest `q^k` accepted by the subspace backend.
pub const SUBSPACE_SIZE_BOUND: u128 = 4096;

/// All subcodes of a code, with `deg = n - w`.
///
/// Subcodes are enumerated through their RREF coefficient matrices in
/// `GF(q)^k`, which the generator maps isomorphically onto the subcodes.
pub struct SubspaceLattice {
    code: LinearCode,
    coeffs: Vec<Matrix>,
    ranks: Vec<usize>,
    degrees: Vec<i64>,
    supports: Vec<SupportSet>,
    index: HashMap<Vec<Vec<u32>>, usize>,
}

impl SubspaceLattice {
    pub fn new(code: &LinearCode) -> Result<SubspaceLattice> {
        let q = code.field().q() as u128;
        let k = code.k();
        let size = q.checked_pow(k as u32).unwrap_or(u128::MAX);
        if size > SUBSPACE_SIZE_BOUND {
            return Err(Error::LatticeTooLarge {
                elements: size,
                bound: SUBSPACE_SIZE_BOUND,
            });
        }
        let count = subspace_count(code.field().q(), k);
        if count > SUBSPACE_ELEMENT_BOUND {
            return Err(Error::LatticeTooLarge {
                elements: count,
                bound: SUBSPACE_ELEMENT_BOUND,
            });
        }
        let mut lat = SubspaceLattice {
            code: code.clone(),
            coeffs: Vec::new(),
            ranks: Vec::new(),
            degrees: Vec::new(),
            supports: Vec::new(),
            index: HashMap::new(),
        };
        for r in 0..=k {
            for m in rref_matrices(code.field(), k, r) {
                let words = code.encode(&m)?;
                let support = crate::code::row_support(&words);
                lat.index.insert(m.to_values(), lat.coeffs.len());
                lat.ranks.push(r);
                lat.degrees.push(code.n() as i64 - support.len() as i64);
                lat.supports.push(support);
                lat.coeffs.push(m);
            }
        }
        Ok(lat)
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn support(&self, x: usize) -> SupportSet {
        self.supports[x]
    }

    pub fn subcode(&self, x: usize) -> Subcode {
        Subcode::from_coefficients(&self.code, &self.coeffs[x]).expect("shapes agree")
    }

    /// Index of the element equal to the given subcode.
    pub fn find(&self, s: &Subcode) -> Option<usize> {
        // coefficients of the basis rows: solve x G = v through the RREF pivots
        let g = self.code.generator();
        let pivots = g.rref().1;
        let x = s.basis().select_columns(&pivots);
        self.lookup(&x)
    }

    fn lookup(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&m.row_basis().to_values()).copied()
    }
}

impl HnLattice for SubspaceLattice {
    fn len(&self) -> usize {
        self.coeffs.len()
    }

    fn bottom(&self) -> usize {
        0
    }

    fn top(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    fn degree(&self, x: usize) -> i64 {
        self.degrees[x]
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        let s = self.coeffs[y].stack(&self.coeffs[x]).expect("same shape");
        s.rank() == self.ranks[y]
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        let (a, b) = (&self.coeffs[x], &self.coeffs[y]);
        let stacked = a.stack(b).expect("same shape");
        let kernel = crate::code::left_kernel(&stacked);
        let first: Vec<usize> = (0..a.rows()).collect();
        let m = kernel.select_columns(&first).mul(a).expect("shapes agree");
        self.lookup(&m).expect("meet is a subspace")
    }

    fn join(&self, x: usize, y: usize) -> usize {
        let m = self.coeffs[x].stack(&self.coeffs[y]).expect("same shape");
        self.lookup(&m).expect("join is a subspace")
    }
}

/// The Boolean lattice of subsets of `[n]` with an arbitrary degree table.
pub struct SubsetLattice {
    n: usize,
    degrees: Vec<i64>,
}

/// Largest ground set the subset backend enumerates.
pub const SUBSET_LATTICE_BOUND: usize = 24;

impl SubsetLattice {
    pub fn from_degrees(n: usize, degrees: Vec<i64>) -> Result<SubsetLattice> {
        if n > SUBSET_LATTICE_BOUND {
            return Err(Error::SizeLimitExceeded {
                required: n,
                cap: SUBSET_LATTICE_BOUND,
            });
        }
        if degrees.len() != 1 << n {
            return Err(Error::DimensionMismatch(format!(
                "{} degrees for {} subsets",
                degrees.len(),
                1usize << n
            )));
        }
        Ok(SubsetLattice { n, degrees })
    }

    /// `deg(J) = dim C_{[n] \ J} = k - r(J)`: the side of the cosupport
    /// connection facing the coordinates.
    pub fn cosupport(code: &LinearCode, limit: usize) -> Result<SubsetLattice> {
        let table = code.rank_table(limit)?;
        let k = code.k() as i64;
        SubsetLattice::from_degrees(code.n(), table.iter().map(|&r| k - r as i64).collect())
    }

    /// `deg(J) = k - r(J)` for a matroid.
    pub fn matroid(m: &Matroid) -> Result<SubsetLattice> {
        let k = m.rank_of_ground() as i64;
        SubsetLattice::from_degrees(
            m.n(),
            (0..1usize << m.n()).map(|j| k - m.rank_bits(j) as i64).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&self, x: usize) -> SupportSet {
        SupportSet::from_bits(x as u64)
    }
}

impl HnLattice for SubsetLattice {
    fn len(&self) -> usize {
        self.degrees.len()
    }

    fn bottom(&self) -> usize {
        0
    }

    fn top(&self) -> usize {
        self.degrees.len() - 1
    }

    fn rank(&self, x: usize) -> usize {
        x.count_ones() as usize
    }

    fn degree(&self, x: usize) -> i64 {
        self.degrees[x]
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        x & !y == 0
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        x & y
    }

    fn join(&self, x: usize, y: usize) -> usize {
        x | y
    }
}

pub fn lattice_profile<L: HnLattice + ?Sized>(l: &L) -> RankDegreeProfile {
    let r = l.rank(l.top());
    let mut maxdeg: Vec<Option<i64>> = vec![None; r + 1];
    for x in 0..l.len() {
        let slot = &mut maxdeg[l.rank(x)];
        let d = l.degree(x);
        if slot.is_none_or(|m| d > m) {
            *slot = Some(d);
        }
    }
    RankDegreeProfile::new(maxdeg.into_iter().map(|d| d.map(Rational::from_integer)).collect())
}

pub fn lattice_polygon<L: HnLattice + ?Sized>(l: &L) -> Result<CanonicalPolygon> {
    CanonicalPolygon::from_profile(&lattice_profile(l))
}

/// The canonical filtration as element indices, one per polygon vertex.
///
/// Existence and uniqueness of each vertex element and the chain property
/// are checked, not assumed; a failure is reported as a violation.
pub fn lattice_filtration<L: HnLattice + ?Sized>(l: &L) -> Result<Vec<usize>> {
    let polygon = lattice_polygon(l)?;
    let mut chain = Vec::with_capacity(polygon.vertices().len());
    for &(rank, deg) in polygon.vertices() {
        let hits: Vec<usize> = (0..l.len())
            .filter(|&x| l.rank(x) == rank && Rational::from_integer(l.degree(x)) == deg)
            .collect();
        match hits.as_slice() {
            [x] => chain.push(*x),
            [] => return Err(Error::Violation(format!("no element realizes vertex ({rank}, {deg})"))),
            _ => {
                return Err(Error::Violation(format!(
                    "{} elements realize vertex ({rank}, {deg})",
                    hits.len()
                )))
            }
        }
    }
    if let Some(w) = chain.windows(2).find(|w| !l.leq(w[0], w[1])) {
        return Err(Error::Violation(format!(
            "filtration elements {} and {} are not nested",
            w[0], w[1]
        )));
    }
    Ok(chain)
}

/// Every element of rank `i_α` other than `x_α` has degree at most
/// `P(i_α) - (μ_α - μ_{α+1})`, at each interior vertex.
pub fn gap_condition<L: HnLattice + ?Sized>(l: &L) -> Result<CheckReport> {
    let polygon = lattice_polygon(l)?;
    let chain = lattice_filtration(l)?;
    let slopes = polygon.slopes();
    let mut report = CheckReport::new("gap condition");
    for alpha in 1..polygon.sides() {
        let (rank, value) = polygon.vertices()[alpha];
        let gap = slopes[alpha - 1] - slopes[alpha];
        let bound = value - gap;
        for y in (0..l.len()).filter(|&y| l.rank(y) == rank && y != chain[alpha]) {
            let d = Rational::from_integer(l.degree(y));
            report.case(d <= bound, || {
                format!("element {y} of rank {rank} has degree {d} above {bound}")
            });
        }
    }
    Ok(report)
}

/// Rank modularity and degree lower semimodularity on the given pairs.
pub fn verify_parallelogram<L: HnLattice + ?Sized>(l: &L, pairs: &[(usize, usize)]) -> CheckReport {
    let mut report = CheckReport::new("parallelogram constraint");
    for &(x, y) in pairs {
        let (m, j) = (l.meet(x, y), l.join(x, y));
        let rank_ok = l.rank(x) + l.rank(y) == l.rank(m) + l.rank(j);
        let deg_ok = l.degree(x) + l.degree(y) <= l.degree(m) + l.degree(j);
        report.case(rank_ok && deg_ok, || {
            format!("pair ({x},{y}): rank modular {rank_ok}, degree semimodular {deg_ok}")
        });
    }
    report
}

pub fn verify_parallelogram_exhaustive<L: HnLattice + ?Sized>(l: &L) -> CheckReport {
    let pairs: Vec<(usize, usize)> = (0..l.len())
        .flat_map(|x| (x..l.len()).map(move |y| (x, y)))
        .collect();
    verify_parallelogram(l, &pairs)
}

pub fn lattice_is_semistable<L: HnLattice + ?Sized>(l: &L) -> Result<bool> {
    Ok(lattice_polygon(l)?.is_semistable())
}

/// Every `x ≠ 0, 1` has slope `μ(x/0) < μ(L)`.
pub fn lattice_is_stable<L: HnLattice + ?Sized>(l: &L) -> bool {
    let (b, t) = (l.bottom(), l.top());
    let r = l.rank(t) as i64;
    let total = l.degree(t) - l.degree(b);
    (0..l.len())
        .filter(|&x| x != b && x != t && l.rank(x) > 0 && l.rank(x) < l.rank(t))
        .all(|x| (l.degree(x) - l.degree(b)) * r < total * l.rank(x) as i64)
}
