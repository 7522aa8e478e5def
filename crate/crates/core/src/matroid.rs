//! Matroids on `[n]` given by a full rank table.

use crate::check::CheckReport;
use crate::code::{LinearCode, SupportSet};
use crate::error::{Error, Result};
use crate::hn::lattice::{lattice_filtration, lattice_polygon, SubsetLattice};
use crate::hn::CanonicalPolygon;
use crate::Rational;

/// Hard cap on the ground set: the rank table has `2^n` entries.
pub const MATROID_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    ranks: Vec<u8>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "matroid of rank {} on {} elements", self.rank_of_ground(), self.n)
    }
}

/// Weight hierarchy and dimension/length profile of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidHierarchy {
    /// `d_0 = 0, d_1, ..., d_k`.
    pub weights: Vec<usize>,
    /// `k_0, ..., k_n`.
    pub dlp: Vec<usize>,
    /// `j` in `1..=n` with `k_j = k_{j-1}`.
    pub gaps: Vec<usize>,
    /// `j` in `1..=n` with `k_j = k_{j-1} + 1`.
    pub nongaps: Vec<usize>,
}

fn check_size(n: usize) -> Result<()> {
    if n > MATROID_LIMIT {
        return Err(Error::SizeLimitExceeded {
            required: n,
            cap: MATROID_LIMIT,
        });
    }
    Ok(())
}

impl Matroid {
    /// Validates `r(∅) = 0`, unit increments and local submodularity
    /// `r(J+a) + r(J+b) >= r(J+a+b) + r(J)`, which together imply the
    /// rank axioms.
    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Matroid> {
        check_size(n)?;
        if ranks.len() != 1 << n {
            return Err(Error::InvalidMatroid(format!(
                "{} rank values for {} subsets",
                ranks.len(),
                1usize << n
            )));
        }
        if ranks[0] != 0 {
            return Err(Error::InvalidMatroid("rank of the empty set is not 0".into()));
        }
        for j in 0..ranks.len() {
            for a in (0..n).filter(|&a| j & (1 << a) == 0) {
                let ja = j | 1 << a;
                if ranks[ja] < ranks[j] || ranks[ja] > ranks[j] + 1 {
                    return Err(Error::InvalidMatroid(format!(
                        "rank jumps from {} to {} adding element {a} to set {j:#b}",
                        ranks[j], ranks[ja]
                    )));
                }
                for b in (a + 1..n).filter(|&b| j & (1 << b) == 0) {
                    let jb = j | 1 << b;
                    if (ranks[ja] as u32 + ranks[jb] as u32) < ranks[ja | jb] as u32 + ranks[j] as u32 {
                        return Err(Error::InvalidMatroid(format!(
                            "submodularity fails at set {j:#b} with elements {a}, {b}"
                        )));
                    }
                }
            }
        }
        Ok(Matroid { n, ranks })
    }

    /// Column matroid of a generator matrix.
    pub fn from_code(code: &LinearCode) -> Result<Matroid> {
        check_size(code.n())?;
        Ok(Matroid {
            n: code.n(),
            ranks: code.rank_table(MATROID_LIMIT)?,
        })
    }

    /// `U_{k,n}`: `r(J) = min(#J, k)`.
    pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
        check_size(n)?;
        if k > n {
            return Err(Error::InvalidMatroid(format!("U_{{{k},{n}}} has rank above its size")));
        }
        Ok(Matroid {
            n,
            ranks: (0..1usize << n).map(|j| (j.count_ones() as usize).min(k) as u8).collect(),
        })
    }

    /// Matroid with the given bases (as bitmasks); `r(J) = max #(B ∩ J)`.
    pub fn from_bases(n: usize, bases: &[u64]) -> Result<Matroid> {
        check_size(n)?;
        if bases.is_empty() {
            return Err(Error::InvalidMatroid("no bases given".into()));
        }
        let full = (1u64 << n) - 1;
        let size = bases[0].count_ones();
        if let Some(b) = bases.iter().find(|&&b| b & !full != 0 || b.count_ones() != size) {
            return Err(Error::InvalidMatroid(format!(
                "basis {b:#b} is outside the ground set or has the wrong size"
            )));
        }
        let ranks = (0..1u64 << n)
            .map(|j| bases.iter().map(|b| (b & j).count_ones()).max().unwrap_or(0) as u8)
            .collect();
        let m = Matroid::from_rank_table(n, ranks)?;
        // the rank table of a non-basis family can satisfy the axioms while
        // having more bases than given
        let count = (0..1usize << n)
            .filter(|&j| j.count_ones() == size && m.ranks[j] as u32 == size)
            .count();
        let mut distinct = bases.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if count != distinct.len() {
            return Err(Error::InvalidMatroid("the given sets do not satisfy basis exchange".into()));
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k = r(E)`.
    pub fn rank_of_ground(&self) -> usize {
        *self.ranks.last().expect("nonempty table") as usize
    }

    pub fn rank(&self, j: SupportSet) -> usize {
        self.ranks[j.bits() as usize] as usize
    }

    pub fn rank_bits(&self, j: usize) -> usize {
        self.ranks[j] as usize
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    fn full(&self) -> usize {
        (1usize << self.n) - 1
    }

    /// Bases as bitmasks, in increasing order.
    pub fn bases(&self) -> Vec<u64> {
        let k = self.rank_of_ground();
        (0..=self.full())
            .filter(|&j| j.count_ones() as usize == k && self.ranks[j] as usize == k)
            .map(|j| j as u64)
            .collect()
    }

    /// `k - r(J)`.
    pub fn degree(&self, j: SupportSet) -> usize {
        self.rank_of_ground() - self.rank(j)
    }

    /// `r*(J) = #J + r(E \ J) - r(E)`.
    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let k = self.rank_of_ground();
        Matroid {
            n: self.n,
            ranks: (0..=full)
                .map(|j| (j.count_ones() as usize + self.ranks[full & !j] as usize - k) as u8)
                .collect(),
        }
    }

    /// `h0(J) = r(E) - r(E \ J)`.
    pub fn h0(&self, j: SupportSet) -> usize {
        self.rank_of_ground() - self.rank(j.complement(self.n))
    }

    /// `h1(J) = #(E \ J) - r(E \ J)`.
    pub fn h1(&self, j: SupportSet) -> usize {
        let c = j.complement(self.n);
        c.len() - self.rank(c)
    }

    /// `h0(M, J) - h0(M*, E \ J) = #J + k - n` and `h1(M, J) = h0(M*, E \ J)`
    /// for every `J`.
    pub fn rr_check(&self) -> CheckReport {
        let dual = self.dual();
        let (n, k) = (self.n as i64, self.rank_of_ground() as i64);
        let mut report = CheckReport::new("matroid Riemann-Roch");
        for bits in 0..=self.full() {
            let j = SupportSet::from_bits(bits as u64);
            let c = j.complement(self.n);
            let lhs = self.h0(j) as i64 - dual.h0(c) as i64;
            let rhs = j.len() as i64 + k - n;
            let serre = self.h1(j) == dual.h0(c);
            report.case(lhs == rhs && serre, || {
                format!("J = {j:?}: h0 difference {lhs}, expected {rhs}, Serre {serre}")
            });
        }
        report
    }

    /// `k_j = max{h0(J) : #J = j}` and the derived weights and gaps.
    pub fn hierarchy(&self) -> MatroidHierarchy {
        let n = self.n;
        let k = self.rank_of_ground();
        let mut min_rank = vec![usize::MAX; n + 1];
        for (j, &r) in self.ranks.iter().enumerate() {
            let s = j.count_ones() as usize;
            min_rank[s] = min_rank[s].min(r as usize);
        }
        let dlp: Vec<usize> = (0..=n).map(|j| k - min_rank[n - j]).collect();
        let weights = crate::code::hierarchy_from_dlp(&dlp, k);
        let (mut gaps, mut nongaps) = (Vec::new(), Vec::new());
        for j in 1..=n {
            if dlp[j] == dlp[j - 1] {
                gaps.push(j);
            } else {
                nongaps.push(j);
            }
        }
        MatroidHierarchy {
            weights,
            dlp,
            gaps,
            nongaps,
        }
    }

    /// `{d_i(M)} ⊔ {n + 1 - d_i(M*)} = [n]`.
    pub fn wei_partition_check(&self) -> CheckReport {
        let mut report = CheckReport::new("matroid Wei partition");
        let n = self.n;
        let own = self.hierarchy().weights;
        let dual = self.dual().hierarchy().weights;
        let mut hits = vec![0usize; n + 2];
        for &d in &own[1..] {
            hits[d] += 1;
        }
        for &d in &dual[1..] {
            hits[n + 1 - d] += 1;
        }
        for (j, &h) in hits.iter().enumerate().take(n + 1).skip(1) {
            report.case(h == 1, || format!("{j} is covered {h} times"));
        }
        report.case(hits[0] == 0 && hits[n + 1] == 0, || "values outside [n]".into());
        report
    }

    /// Non-gaps are the weights, there are exactly `n - k` gaps, and `j` is
    /// a non-gap of `M` exactly when `n + 1 - j` is a gap of `M*`.
    pub fn gap_check(&self) -> CheckReport {
        let mut report = CheckReport::new("gaps and non-gaps");
        let n = self.n;
        let k = self.rank_of_ground();
        let h = self.hierarchy();
        let hd = self.dual().hierarchy();
        report.case(h.gaps.len() == n - k, || {
            format!("{} gaps, expected {}", h.gaps.len(), n - k)
        });
        report.case(h.nongaps == h.weights[1..], || {
            format!("non-gaps {:?} differ from weights {:?}", h.nongaps, &h.weights[1..])
        });
        for j in 1..=n {
            let nongap = h.nongaps.contains(&j);
            let dual_gap = hd.gaps.contains(&(n + 1 - j));
            report.case(nongap == dual_gap, || {
                format!("{j} non-gap {nongap} but {} dual gap {dual_gap}", n + 1 - j)
            });
        }
        report
    }

    fn lattice(&self) -> SubsetLattice {
        SubsetLattice::matroid(self).expect("size already bounded")
    }

    /// Canonical polygon of the subset lattice with degree `k - r(J)`.
    pub fn polygon(&self) -> CanonicalPolygon {
        lattice_polygon(&self.lattice()).expect("endpoints always present")
    }

    pub fn is_semistable(&self) -> bool {
        self.polygon().is_semistable()
    }

    /// Sets `J_0 = ∅ ⊂ ... ⊂ J_N = E` realizing the polygon vertices.
    pub fn filtration(&self) -> Result<Vec<SupportSet>> {
        Ok(lattice_filtration(&self.lattice())?
            .into_iter()
            .map(|x| SupportSet::from_bits(x as u64))
            .collect())
    }

    /// The minor `(M / A)|_T` for disjoint `A` and `T`, relabelled onto
    /// `0..#T` in increasing order.
    pub fn contract_restrict(&self, contract: SupportSet, onto: SupportSet) -> Result<Matroid> {
        if !contract.is_disjoint(onto) {
            return Err(Error::InvalidArgument("contracted and kept sets overlap".into()));
        }
        let elems = onto.indices();
        let base = self.rank(contract);
        let m = elems.len();
        let ranks = (0..1usize << m)
            .map(|x| {
                let mut j = contract;
                for (i, &e) in elems.iter().enumerate() {
                    if x & (1 << i) != 0 {
                        j.insert(e);
                    }
                }
                (self.rank(j) - base) as u8
            })
            .collect();
        Ok(Matroid { n: m, ranks })
    }

    /// Graded pieces of the canonical filtration: the interval
    /// `[J_{α-1}, J_α]`, which is the minor `(M / J_{α-1})|_{J_α \ J_{α-1}}`.
    pub fn graded(&self) -> Result<Vec<Matroid>> {
        let filt = self.filtration()?;
        filt.windows(2)
            .map(|w| self.contract_restrict(w[0], w[1].difference(w[0])))
            .collect()
    }

    /// `P_{M*}(x) = P_M(n - x) + n - x - k`, with the dual filtration made of
    /// the complements of the filtration sets, in reverse order.
    pub fn dual_polygon_check(&self) -> Result<CheckReport> {
        let mut report = CheckReport::new("matroid dual polygon");
        let n = self.n as i64;
        let k = self.rank_of_ground() as i64;
        let dual = self.dual();
        let predicted = self
            .polygon()
            .opposite()
            .affine_transform(Rational::from_integer(n - k), Rational::from_integer(-1), Rational::from_integer(1))?;
        let actual = dual.polygon();
        report.case(predicted == actual, || {
            format!("dual polygon {actual:?}, predicted {predicted:?}")
        });
        let expected: Vec<Rational> = self.polygon().slopes().iter().rev().map(|m| Rational::from_integer(-1) - m).collect();
        report.case(actual.slopes() == expected, || {
            format!("dual slopes {:?}, predicted {expected:?}", actual.slopes())
        });
        let filt: Vec<SupportSet> = self.filtration()?.iter().rev().map(|j| j.complement(self.n)).collect();
        let dual_filt = dual.filtration()?;
        report.case(filt == dual_filt, || {
            format!("dual filtration {dual_filt:?}, complements {filt:?}")
        });
        report.case(self.is_semistable() == dual.is_semistable(), || {
            "semistability differs from the dual".into()
        });
        Ok(report)
    }
}
