//! The subcode lattice of a code, analysed through column ranks.

use super::lattice::{gap_condition, lattice_filtration, SubspaceLattice};
use super::polygon::{CanonicalPolygon, RankDegreeProfile};
use crate::check::CheckReport;
use crate::code::{hierarchy_from_dlp, LinearCode, Subcode, SupportSet, DEFAULT_ENUM_LIMIT};
use crate::error::{Error, Result, SupportDefect};
use crate::Rational;

/// A chain `x_0 < x_1 < ... < x_N` realizing the vertices of a polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration<T> {
    pub polygon: CanonicalPolygon,
    pub steps: Vec<T>,
}

impl<T> Filtration<T> {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Trivial means `0 < top` only.
    pub fn is_trivial(&self) -> bool {
        self.steps.len() <= 2
    }
}

/// Rank table, dimension/length profile and weight hierarchy of one code,
/// computed once and shared by the analyses below.
#[derive(Debug, Clone)]
pub struct CodeHn {
    code: LinearCode,
    table: Vec<u8>,
    dlp: Vec<usize>,
    hierarchy: Vec<usize>,
}

impl CodeHn {
    pub fn new(code: &LinearCode) -> Result<CodeHn> {
        CodeHn::with_limit(code, DEFAULT_ENUM_LIMIT)
    }

    pub fn with_limit(code: &LinearCode, limit: usize) -> Result<CodeHn> {
        let table = code.rank_table(limit)?;
        let dlp = code.dlp_from_table(&table);
        let hierarchy = hierarchy_from_dlp(&dlp, code.k());
        Ok(CodeHn {
            code: code.clone(),
            table,
            dlp,
            hierarchy,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.table
    }

    pub fn dlp(&self) -> &[usize] {
        &self.dlp
    }

    pub fn hierarchy(&self) -> &[usize] {
        &self.hierarchy
    }

    /// Support size of the whole code, `d_k`.
    pub fn support_size(&self) -> usize {
        *self.hierarchy.last().expect("k >= 1")
    }

    /// Envelope of `(i, n - d_i)`.
    pub fn code_polygon(&self) -> CanonicalPolygon {
        let n = self.code.n() as i64;
        CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers(
            self.hierarchy.iter().map(|&d| n - d as i64),
        ))
        .expect("ranks 0..=k all present")
    }

    /// Envelope of `(j, k_{n-j})`: the cosupport side.
    pub fn subset_polygon(&self) -> CanonicalPolygon {
        let n = self.code.n();
        CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers(
            (0..=n).map(|j| self.dlp[n - j] as i64),
        ))
        .expect("ranks 0..=n all present")
    }

    /// `k d_i >= i w(C)` for every `i`.
    pub fn is_semistable(&self) -> bool {
        let (k, w) = (self.code.k(), self.support_size());
        (0..=k).all(|i| k * self.hierarchy[i] >= i * w)
    }

    /// `k d_i > i w(C)` for `0 < i < k`.
    pub fn is_stable(&self) -> bool {
        let (k, w) = (self.code.k(), self.support_size());
        (1..k).all(|i| k * self.hierarchy[i] > i * w)
    }

    /// The closed subcodes `C_J` with `#J = d_i` and `dim C_J = i`.
    pub fn minimum_weight_subcodes(&self, i: usize) -> Vec<Subcode> {
        self.code
            .minimum_weight_supports_from(&self.table, &self.hierarchy, i)
            .into_iter()
            .map(|j| self.code.shorten(j))
            .collect()
    }

    /// Canonical filtration by closed minimum weight subcodes.
    ///
    /// At each vertex the minimizing supports are enumerated; they must all
    /// yield one and the same subcode, the steps must be nested, and each
    /// step must be closed. Any failure is a [`Error::Violation`].
    pub fn canonical_filtration(&self) -> Result<Filtration<Subcode>> {
        let polygon = self.code_polygon();
        let mut steps: Vec<Subcode> = Vec::with_capacity(polygon.vertices().len());
        for &(rank, _) in polygon.vertices() {
            let step = if rank == 0 {
                self.code.zero_subcode()
            } else {
                let mut found = self.minimum_weight_subcodes(rank);
                found.dedup();
                if found.len() != 1 || found[0].dim() != rank {
                    return Err(Error::Violation(format!(
                        "{} candidate subcodes at vertex rank {rank}",
                        found.len()
                    )));
                }
                found.pop().expect("one candidate")
            };
            if !step.is_closed() {
                return Err(Error::Violation(format!("filtration step of rank {rank} is not closed")));
            }
            if let Some(prev) = steps.last() {
                if !prev.is_subcode_of(&step) || prev.dim() >= step.dim() {
                    return Err(Error::Violation(format!(
                        "filtration step of rank {rank} does not contain the previous one"
                    )));
                }
            }
            steps.push(step);
        }
        Ok(Filtration { polygon, steps })
    }

    /// The subcode of maximal effective rate and maximal dimension among
    /// those, when it beats the code's own rate.
    pub fn destabilizing_subcode(&self) -> Result<Option<Subcode>> {
        if self.is_semistable() {
            return Ok(None);
        }
        let mut f = self.canonical_filtration()?;
        Ok(Some(f.steps.swap_remove(1)))
    }

    /// `π_{T_α}(C_α)` with `T_α = Supp(C_α) \ Supp(C_{α-1})`.
    pub fn graded_pieces(&self) -> Result<Vec<LinearCode>> {
        if !self.code.has_full_support() {
            return Err(Error::NotFullSupport(SupportDefect::Code {
                zero_coordinates: self.code.support().complement(self.code.n()).indices(),
            }));
        }
        let f = self.canonical_filtration()?;
        f.steps
            .windows(2)
            .map(|w| {
                let t = w[1].support().difference(w[0].support());
                w[1].to_code()?.puncture(t)
            })
            .collect()
    }

    /// For full-support codes the subset polygon is the diagonal mirror of
    /// the code polygon, so slopes map to their inverses in reverse order.
    pub fn reflection_check(&self) -> Result<CheckReport> {
        if !self.code.has_full_support() {
            return Err(Error::NotFullSupport(SupportDefect::Code {
                zero_coordinates: self.code.support().complement(self.code.n()).indices(),
            }));
        }
        let mut report = CheckReport::new("polygon reflection");
        let code = self.code_polygon();
        let subset = self.subset_polygon();
        let mirrored: Vec<(usize, Rational)> = code
            .vertices()
            .iter()
            .rev()
            .map(|&(x, y)| (y.to_integer() as usize, Rational::from_integer(x as i64)))
            .collect();
        report.case(subset.vertices() == mirrored.as_slice(), || {
            format!("subset vertices {:?}, mirrored {:?}", subset.vertices(), mirrored)
        });
        let inverted: Vec<Rational> = code.slopes().iter().rev().map(|m| m.recip()).collect();
        report.case(subset.slopes() == inverted, || {
            format!("subset slopes {:?}, inverted {:?}", subset.slopes(), inverted)
        });
        Ok(report)
    }
}

pub fn code_polygon(code: &LinearCode) -> Result<CanonicalPolygon> {
    Ok(CodeHn::new(code)?.code_polygon())
}

pub fn subset_polygon(code: &LinearCode) -> Result<CanonicalPolygon> {
    Ok(CodeHn::new(code)?.subset_polygon())
}

pub fn canonical_filtration(code: &LinearCode) -> Result<Filtration<Subcode>> {
    CodeHn::new(code)?.canonical_filtration()
}

pub fn is_semistable(code: &LinearCode) -> Result<bool> {
    Ok(CodeHn::new(code)?.is_semistable())
}

pub fn is_stable(code: &LinearCode) -> Result<bool> {
    Ok(CodeHn::new(code)?.is_stable())
}

pub fn graded_pieces(code: &LinearCode) -> Result<Vec<LinearCode>> {
    CodeHn::new(code)?.graded_pieces()
}

/// The cosupport Galois connection between subcodes and coordinate sets,
/// checked on the given samples: both closure inclusions, the adjunction
/// `l ⊆ J° ⟺ J ⊆ l°`, join inclusion and meet equality on both sides, and
/// `deg(l) = #l°`.
pub fn verify_galois(code: &LinearCode, subcodes: &[Subcode], sets: &[SupportSet]) -> Result<CheckReport> {
    let n = code.n();
    let mut report = CheckReport::new("cosupport Galois connection");
    // J° = C ∩ F^{[n] \ J}, l° = cosupport(l)
    let set_dual = |j: SupportSet| code.shorten(j.complement(n));
    for l in subcodes {
        if l.parent() != code {
            return Err(Error::InvalidArgument("subcode of another code".into()));
        }
        let back = set_dual(l.cosupport());
        report.case(l.is_subcode_of(&back), || format!("{l:?} not inside its double dual"));
        report.case(l.degree() == l.cosupport().len() as i64, || {
            format!("degree of {l:?} differs from its cosupport size")
        });
        for &j in sets {
            let lhs = l.is_subcode_of(&set_dual(j));
            let rhs = j.is_subset(l.cosupport());
            report.case(lhs == rhs, || format!("adjunction fails for {l:?} and {j:?}"));
        }
    }
    for &j in sets {
        let back = set_dual(j).cosupport();
        report.case(j.is_subset(back), || format!("{j:?} not inside its double dual"));
    }
    for (a, x) in subcodes.iter().enumerate() {
        for y in &subcodes[a..] {
            let join = x.join(y)?;
            let meet = x.meet(y)?;
            report.case(x.cosupport().union(y.cosupport()).is_subset(meet.cosupport()), || {
                format!("cosupport join inclusion fails for {x:?}, {y:?}")
            });
            report.case(join.cosupport() == x.cosupport().intersection(y.cosupport()), || {
                format!("cosupport of a join differs for {x:?}, {y:?}")
            });
        }
    }
    for (a, &j) in sets.iter().enumerate() {
        for &k in &sets[a..] {
            let (dj, dk) = (set_dual(j), set_dual(k));
            let join = dj.join(&dk)?;
            report.case(join.is_subcode_of(&set_dual(j.intersection(k))), || {
                format!("join inclusion fails for {j:?}, {k:?}")
            });
            report.case(set_dual(j.union(k)) == dj.meet(&dk)?, || {
                format!("meet equality fails for {j:?}, {k:?}")
            });
        }
    }
    Ok(report)
}

/// The gap condition over the full subcode lattice, together with agreement
/// between the lattice filtration and [`CodeHn::canonical_filtration`].
pub fn gap_condition_check(code: &LinearCode) -> Result<CheckReport> {
    let lattice = SubspaceLattice::new(code)?;
    let mut report = gap_condition(&lattice)?;
    let chain = lattice_filtration(&lattice)?;
    let filtration = CodeHn::new(code)?.canonical_filtration()?;
    let from_lattice: Vec<Subcode> = chain.iter().map(|&x| lattice.subcode(x)).collect();
    report.case(from_lattice == filtration.steps, || {
        "lattice filtration differs from the support-based one".into()
    });
    Ok(report)
}
