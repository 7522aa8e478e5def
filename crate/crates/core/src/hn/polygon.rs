use crate::error::{Error, Result};
use crate::Rational;

/// For each rank `0..=R`, the maximal degree of a lattice element of that
/// rank (`None` when no element has that rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDegreeProfile {
    pub maxdeg: Vec<Option<Rational>>,
}

impl RankDegreeProfile {
    pub fn new(maxdeg: Vec<Option<Rational>>) -> RankDegreeProfile {
        RankDegreeProfile { maxdeg }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> RankDegreeProfile {
        RankDegreeProfile {
            maxdeg: values.into_iter().map(|v| Some(Rational::from_integer(v))).collect(),
        }
    }

    pub fn total_rank(&self) -> usize {
        self.maxdeg.len().saturating_sub(1)
    }
}

/// The canonical polygon: the least concave majorant of the rank/degree
/// point cloud, given by its vertices.
///
/// Consecutive slopes are strictly decreasing and vertex ranks are integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalPolygon {
    vertices: Vec<(usize, Rational)>,
}

fn cross_nonneg(o: (usize, Rational), a: (usize, Rational), b: (usize, Rational)) -> bool {
    // a lies on or below segment o-b  <=>  slope(o,a) <= slope(o,b)
    let dx1 = Rational::from_integer(a.0 as i64 - o.0 as i64);
    let dx2 = Rational::from_integer(b.0 as i64 - o.0 as i64);
    (a.1 - o.1) * dx2 <= (b.1 - o.1) * dx1
}

impl CanonicalPolygon {
    /// Builds a polygon from explicit vertices, checking strict concavity.
    pub fn from_vertices(vertices: Vec<(usize, Rational)>) -> Result<CanonicalPolygon> {
        if vertices.is_empty() {
            return Err(Error::EmptyProfile);
        }
        if vertices.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidArgument("vertex ranks must increase".into()));
        }
        let p = CanonicalPolygon { vertices };
        if p.slopes().windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument("slopes must strictly decrease".into()));
        }
        Ok(p)
    }

    /// Upper concave envelope of the points `(i, maxdeg[i])`, computed by a
    /// monotone-chain upper hull. Collinear points are dropped, so every
    /// returned vertex is a genuine corner.
    pub fn from_profile(profile: &RankDegreeProfile) -> Result<CanonicalPolygon> {
        let points: Vec<(usize, Rational)> = profile
            .maxdeg
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| (i, d)))
            .collect();
        let r = profile.total_rank();
        if points.is_empty() || points[0].0 != 0 || points.last().unwrap().0 != r {
            return Err(Error::EmptyProfile);
        }
        let mut hull: Vec<(usize, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while hull.len() >= 2 && cross_nonneg(hull[hull.len() - 2], hull[hull.len() - 1], p) {
                hull.pop();
            }
            hull.push(p);
        }
        Ok(CanonicalPolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[(usize, Rational)] {
        &self.vertices
    }

    pub fn vertex_ranks(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.0).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.vertices.last().map(|v| v.0).unwrap_or(0)
    }

    /// Number of sides `N`.
    pub fn sides(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `μ_1 > ... > μ_N`.
    pub fn slopes(&self) -> Vec<Rational> {
        self.vertices
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / Rational::from_integer(w[1].0 as i64 - w[0].0 as i64))
            .collect()
    }

    pub fn mu_max(&self) -> Option<Rational> {
        self.slopes().first().copied()
    }

    pub fn mu_min(&self) -> Option<Rational> {
        self.slopes().last().copied()
    }

    /// Slope of the chord from the first to the last vertex.
    pub fn overall_slope(&self) -> Option<Rational> {
        let (a, b) = (self.vertices.first()?, self.vertices.last()?);
        if a.0 == b.0 {
            return None;
        }
        Some((b.1 - a.1) / Rational::from_integer(b.0 as i64 - a.0 as i64))
    }

    /// `P(x)` at an integer rank, by linear interpolation.
    pub fn value_at(&self, x: usize) -> Option<Rational> {
        let i = self.vertices.iter().position(|v| v.0 >= x)?;
        let (xi, yi) = self.vertices[i];
        if xi == x {
            return Some(yi);
        }
        if i == 0 {
            return None;
        }
        let (x0, y0) = self.vertices[i - 1];
        let t = Rational::new(x as i64 - x0 as i64, xi as i64 - x0 as i64);
        Some(y0 + (yi - y0) * t)
    }

    /// Slope of the side containing the unit segment `[x-1, x]`.
    pub fn slope_at(&self, x: usize) -> Option<Rational> {
        let i = self.vertices.iter().position(|v| v.0 >= x)?;
        if i == 0 {
            return None;
        }
        Some(self.slopes()[i - 1])
    }

    pub fn is_semistable(&self) -> bool {
        self.sides() <= 1
    }

    /// The image under `(ξ, η) ↦ (ξ, a + bξ + cη)`, `c > 0`.
    pub fn affine_transform(&self, a: Rational, b: Rational, c: Rational) -> Result<CanonicalPolygon> {
        if c <= Rational::from_integer(0) {
            return Err(Error::InvalidArgument("scale factor must be positive".into()));
        }
        Ok(CanonicalPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|&(x, y)| (x, a + b * Rational::from_integer(x as i64) + c * y))
                .collect(),
        })
    }

    /// The polygon of the opposite lattice: `(ξ, η) ↦ (R - ξ, η)`.
    pub fn opposite(&self) -> CanonicalPolygon {
        let r = self.total_rank();
        CanonicalPolygon {
            vertices: self.vertices.iter().rev().map(|&(x, y)| (r - x, y)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn collinear_points_give_one_side() {
        let p = CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers([3, 2, 1, 0])).unwrap();
        assert_eq!(p.vertices(), &[(0, q(3, 1)), (3, q(0, 1))]);
        assert_eq!(p.slopes(), vec![q(-1, 1)]);
        assert!(p.is_semistable());
    }

    #[test]
    fn envelope_skips_interior_points() {
        // (0,6),(1,5),(2,3),(3,0): three sides; (0,5),(1,4),(2,2),(3,0): (2,2) is on a side
        let p = CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers([6, 5, 3, 0])).unwrap();
        assert_eq!(p.slopes(), vec![q(-1, 1), q(-2, 1), q(-3, 1)]);
        let p = CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers([5, 4, 2, 0])).unwrap();
        assert_eq!(p.vertex_ranks(), vec![0, 1, 3]);
        assert_eq!(p.value_at(2), Some(q(2, 1)));
        assert_eq!(p.slope_at(2), Some(q(-2, 1)));
    }

    #[test]
    fn missing_endpoint_is_an_error() {
        assert_eq!(
            CanonicalPolygon::from_profile(&RankDegreeProfile::new(vec![])).unwrap_err(),
            Error::EmptyProfile
        );
        let prof = RankDegreeProfile::new(vec![Some(q(1, 1)), None]);
        assert_eq!(CanonicalPolygon::from_profile(&prof).unwrap_err(), Error::EmptyProfile);
        // interior gaps are allowed
        let prof = RankDegreeProfile::new(vec![Some(q(2, 1)), None, Some(q(0, 1))]);
        assert_eq!(CanonicalPolygon::from_profile(&prof).unwrap().sides(), 1);
    }

    #[test]
    fn affine_examples() {
        let p = CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers([6, 5, 3, 0])).unwrap();
        let zero = q(0, 1);
        let one = q(1, 1);
        assert_eq!(p.affine_transform(zero, zero, one).unwrap(), p);
        let shifted = p.affine_transform(zero, one, one).unwrap();
        assert_eq!(shifted.slopes(), p.slopes().iter().map(|m| m + one).collect::<Vec<_>>());
        let doubled = p.affine_transform(zero, zero, q(2, 1)).unwrap();
        assert_eq!(doubled.slopes(), p.slopes().iter().map(|m| m * 2).collect::<Vec<_>>());
        assert!(p.affine_transform(zero, zero, zero).is_err());
    }

    #[test]
    fn opposite_examples() {
        let single = CanonicalPolygon::from_vertices(vec![(0, q(5, 1)), (2, q(0, 1))]).unwrap();
        assert_eq!(single.opposite().slopes(), vec![q(5, 2)]);
        let p = CanonicalPolygon::from_profile(&RankDegreeProfile::from_integers([6, 5, 3, 0])).unwrap();
        let o = p.opposite();
        assert_eq!(o.opposite(), p);
        assert_eq!(o.vertices().first().unwrap().0, 0);
        assert_eq!(o.vertices(), &[(0, q(0, 1)), (1, q(3, 1)), (2, q(5, 1)), (3, q(6, 1))]);
        assert_eq!(o.slopes(), vec![q(3, 1), q(2, 1), q(1, 1)]);
    }

    #[test]
    fn from_vertices_validates() {
        assert!(CanonicalPolygon::from_vertices(vec![(0, q(0, 1)), (1, q(1, 1)), (2, q(3, 1))]).is_err());
        assert!(CanonicalPolygon::from_vertices(vec![(1, q(0, 1)), (1, q(1, 1))]).is_err());
    }
}
