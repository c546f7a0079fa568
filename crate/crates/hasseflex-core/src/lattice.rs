//! Newton polygons, Minkowski sums, lattice-point counts, lower hulls and
//! delta invariants.
//!
//! Polygon equality is vertex-list equality: hulls are canonicalized to
//! counterclockwise order with no three collinear stored vertices, starting
//! at the lexicographically least vertex. Degenerate hulls (points,
//! segments) are allowed and flagged.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Convex integral polygon with canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    /// Counterclockwise, strictly convex, starting at the lexicographic
    /// minimum. A point stores one vertex, a segment two.
    pub verts: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl LatticePolygon {
    /// Convex hull of a point set (Andrew's monotone chain), canonicalized.
    pub fn hull(points: &[(i64, i64)]) -> Self {
        let mut pts: Vec<(i64, i64)> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() <= 2 {
            return LatticePolygon { verts: pts };
        }
        let mut lower: Vec<(i64, i64)> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<(i64, i64)> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() <= 2 {
            // all points collinear
            let mut seg = vec![*pts.first().unwrap(), *pts.last().unwrap()];
            seg.sort_unstable();
            seg.dedup();
            return LatticePolygon { verts: seg };
        }
        // canonical start: lexicographic minimum (CCW order is preserved)
        let start = lower
            .iter()
            .enumerate()
            .min_by_key(|(_, &p)| p)
            .map(|(i, _)| i)
            .unwrap();
        lower.rotate_left(start);
        LatticePolygon { verts: lower }
    }

    pub fn from_vertices(verts: &[(i64, i64)]) -> Self {
        Self::hull(verts)
    }

    pub fn is_degenerate(&self) -> bool {
        self.verts.len() < 3
    }

    /// Twice the Euclidean area (shoelace).
    pub fn area2(&self) -> i64 {
        if self.is_degenerate() {
            return 0;
        }
        let n = self.verts.len();
        let mut a = 0i64;
        for i in 0..n {
            let p = self.verts[i];
            let q = self.verts[(i + 1) % n];
            a += p.0 * q.1 - q.0 * p.1;
        }
        a
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_points(&self) -> i64 {
        match self.verts.len() {
            0 => 0,
            1 => 1,
            _ => {
                let n = self.verts.len();
                let mut b = 0i64;
                let closed = n > 2;
                let last = if closed { n } else { n - 1 };
                for i in 0..last {
                    let p = self.verts[i];
                    let q = self.verts[(i + 1) % n];
                    b += gcd64((q.0 - p.0).abs(), (q.1 - p.1).abs());
                }
                if closed {
                    b
                } else {
                    b + 1
                }
            }
        }
    }

    /// True when the point lies strictly inside.
    pub fn contains_strict(&self, p: (i64, i64)) -> bool {
        if self.is_degenerate() {
            return false;
        }
        let n = self.verts.len();
        for i in 0..n {
            let a = self.verts[i];
            let b = self.verts[(i + 1) % n];
            if cross(a, b, p) <= 0 {
                return false;
            }
        }
        true
    }

    /// True when the point lies inside or on the boundary.
    pub fn contains(&self, p: (i64, i64)) -> bool {
        match self.verts.len() {
            0 => false,
            1 => self.verts[0] == p,
            2 => {
                let (a, b) = (self.verts[0], self.verts[1]);
                cross(a, b, p) == 0
                    && p.0 >= a.0.min(b.0)
                    && p.0 <= a.0.max(b.0)
                    && p.1 >= a.1.min(b.1)
                    && p.1 <= a.1.max(b.1)
            }
            _ => {
                let n = self.verts.len();
                (0..n).all(|i| cross(self.verts[i], self.verts[(i + 1) % n], p) >= 0)
            }
        }
    }

    /// Interior lattice points by direct enumeration, cross-checked against
    /// Pick's formula `i = A - b/2 + 1`.
    pub fn interior_lattice_points(&self) -> (i64, Vec<(i64, i64)>) {
        if self.is_degenerate() {
            return (0, Vec::new());
        }
        let xs: Vec<i64> = self.verts.iter().map(|p| p.0).collect();
        let ys: Vec<i64> = self.verts.iter().map(|p| p.1).collect();
        let mut list = Vec::new();
        for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
            for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
                if self.contains_strict((x, y)) {
                    list.push((x, y));
                }
            }
        }
        let pick = (self.area2() - self.boundary_points() + 2) / 2;
        assert_eq!(
            pick,
            list.len() as i64,
            "Pick's formula disagrees with enumeration"
        );
        (list.len() as i64, list)
    }

    /// Minkowski sum. Computed as the hull of pairwise vertex sums, which
    /// coincides with the edge-merge construction and handles degenerate
    /// summands uniformly.
    pub fn minkowski_sum(&self, o: &Self) -> Self {
        let mut pts = Vec::with_capacity(self.verts.len() * o.verts.len());
        for &a in &self.verts {
            for &b in &o.verts {
                pts.push((a.0 + b.0, a.1 + b.1));
            }
        }
        Self::hull(&pts)
    }

    pub fn translate(&self, d: (i64, i64)) -> Self {
        LatticePolygon {
            verts: self.verts.iter().map(|p| (p.0 + d.0, p.1 + d.1)).collect(),
        }
    }
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

/// Newton polygon of a polynomial with respect to a variable pair.
pub fn newton_polygon<C: Coeff>(p: &MPoly<C>, vx: &str, vy: &str) -> Result<LatticePolygon> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(LatticePolygon::hull(&p.support_2d(vx, vy)?))
}

/// Lower hull of a support: the convex chain from the leftmost-lowest
/// support point to the rightmost-lowest one, weakly decreasing in y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerHull {
    pub chain: Vec<(i64, i64)>,
}

impl LowerHull {
    pub fn of_support(points: &[(i64, i64)]) -> Self {
        let mut pts: Vec<(i64, i64)> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let mut chain: Vec<(i64, i64)> = Vec::new();
        for &p in &pts {
            while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0
            {
                chain.pop();
            }
            // drop dominated points with equal x (keep the lowest y)
            if let Some(&last) = chain.last() {
                if last.0 == p.0 {
                    continue;
                }
            }
            chain.push(p);
        }
        LowerHull { chain }
    }

    /// Hull height at abscissa `x` as a rational comparison:
    /// returns `Some(true)` when `(x, y)` is on or below the hull.
    fn on_or_below(&self, x: i64, y: i64) -> bool {
        let n = self.chain.len();
        if n == 0 {
            return false;
        }
        if x < self.chain[0].0 || x > self.chain[n - 1].0 {
            return false;
        }
        for i in 0..n - 1 {
            let a = self.chain[i];
            let b = self.chain[i + 1];
            if x >= a.0 && x <= b.0 {
                // y <= line through a,b at x  <=>  (y - a.1)(b.0 - a.0) <= (b.1 - a.1)(x - a.0)
                return (y - a.1) * (b.0 - a.0) <= (b.1 - a.1) * (x - a.0);
            }
        }
        x == self.chain[0].0 && y <= self.chain[0].1
    }
}

/// Lower hull and delta invariant of a polynomial in coordinates centered
/// at a point of the curve.
///
/// The delta invariant is operationalized as
/// `delta = #{(i,j) : i >= 1, j >= 1, (i,j) on or below the lower hull}`,
/// the count of first-quadrant lattice points excluded by the hull.
/// Errors when the center is not on the curve (nonzero constant term) or
/// the support misses the vertical axis.
pub fn lower_hull_delta<C: Coeff>(
    p: &MPoly<C>,
    vx: &str,
    vy: &str,
) -> Result<(LowerHull, i64)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let supp = p.support_2d(vx, vy)?;
    if supp.contains(&(0, 0)) {
        return Err(Error::Hypotheses("center not on curve".into()));
    }
    if supp.iter().all(|&(x, _)| x > 0) {
        return Err(Error::Hypotheses(
            "support misses the vertical axis".into(),
        ));
    }
    let hull = LowerHull::of_support(&supp);
    let xmax = hull.chain.last().map(|p| p.0).unwrap_or(0);
    let ymax = hull.chain.first().map(|p| p.1).unwrap_or(0);
    let mut delta = 0i64;
    for i in 1..=xmax {
        for j in 1..=ymax {
            if hull.on_or_below(i, j) {
                delta += 1;
            }
        }
    }
    Ok((hull, delta))
}

// ---------------------------------------------------------------------------
// Registered polygon statements
// ---------------------------------------------------------------------------

/// The polygon statements with literal vertex constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolygonStatement {
    /// Generic polygon of the Legendre pencil `y^n = x^a (x-1)^b (x-lam)^c`.
    LegendreGeneric { a: i64, b: i64, c: i64, m: i64 },
    /// Half-integer-exponent Legendre polygon (`u = 1/2`), `m >= 2`.
    LegendreUHalf { m: i64 },
    /// Weierstrass polygon in coordinates centered at `(1, -3)`, `m >= 3`.
    WeierstrassCentered { m: i64 },
    /// D4 polygon at the origin, any `m >= 2` (generic `u`).
    D4Origin { m: i64 },
    /// D4 polygon centered at `(±sqrt(-1/2), 1/4)`; stated for `m = 3, 4, 5`.
    /// Refused for `m >= 6` (the stated vertex list is garbled there).
    D4Centered { m: i64 },
    /// D6 polygon of `P_3` at the origin.
    D6Origin,
    /// D6 polygon of the reduced factor `P_{m,*}` at the origin, `m >= 4`.
    D6StarOrigin { m: i64 },
}

fn phi1(r: i64) -> i64 {
    [-4, -2, 0, -1, 1, 3][r as usize]
}

fn phi2(m: i64) -> i64 {
    match m {
        3 | 4 => 2,
        5 => 3,
        6 => 4,
        _ => 4 + ((m - 7) / 6) * 5 + (m - 1) % 6,
    }
}

/// Builds the literal stated polygon, with conditional vertices resolved
/// per parity and parameter.
pub fn expected_polygon(stmt: &PolygonStatement) -> Result<LatticePolygon> {
    use PolygonStatement::*;
    let verts: Vec<(i64, i64)> = match stmt {
        LegendreGeneric { a, b, c, m } => {
            if *a < 1 || *b < 1 || *c < 1 || *m < 1 {
                return Err(Error::Refused("parameters must be positive".into()));
            }
            vec![
                (m * a + m * c - m, 0),
                (m * a + m * b + m * c - m, 0),
                (m * a - m, m * c),
                (m * a + m * b - m, m * c),
            ]
        }
        LegendreUHalf { m } => {
            if *m < 2 {
                return Err(Error::Refused("stated for m >= 2".into()));
            }
            vec![
                (0, *m),
                (m - 2, *m),
                (m - 2, 2),
                (2 * m - 1, 1),
                (2 * m - 1, 0),
                (2 * m, 0),
            ]
        }
        WeierstrassCentered { m } => {
            if *m < 3 {
                return Err(Error::Refused("stated for m >= 3".into()));
            }
            let mut v = vec![
                (0, (m + 1) / 2),
                (0, *m),
                (m - 2, 1),
                (2 * m - 1, 0),
                (2 * m, 0),
            ];
            if m % 2 == 1 {
                v.push((1, (m - 1) / 2));
            }
            v
        }
        D4Origin { m } => {
            if *m < 1 {
                return Err(Error::Refused("stated for m >= 1".into()));
            }
            vec![(0, *m), (2 * m, 0), (4 * m, 0)]
        }
        D4Centered { m } => match m {
            3 => vec![(0, 3), (0, 2), (2, 1), (5, 0), (12, 0)],
            4 => vec![(0, 4), (0, 2), (2, 1), (8, 0), (16, 0)],
            5 => vec![(0, 5), (0, 3), (1, 2), (3, 1), (9, 0), (20, 0)],
            _ => {
                return Err(Error::Refused(
                    "the stated vertex list for m >= 6 is incomplete; \
                     report the computed polygon instead"
                        .into(),
                ))
            }
        },
        D6Origin => vec![(0, 2), (3, 2), (6, 0), (15, 0)],
        D6StarOrigin { m } => {
            if *m < 4 {
                return Err(Error::Refused("stated for m >= 4".into()));
            }
            if *m == 4 {
                vec![(0, 2), (6, 0), (12, 0)]
            } else {
                let v1 = (2 * m - (2 * m).rem_euclid(3), 0);
                let v2 = (4 * m + 6 * ((m - 4) / 6) + phi1((m - 4).rem_euclid(6)), 0);
                let v3 = (0, phi2(*m));
                let v4 = (3, phi2(*m));
                let v5 = (0, (2 * m) / 3);
                let mut v = vec![v1, v2, v3, v5];
                if matches!(m.rem_euclid(6), 1 | 2 | 3) {
                    v.push(v4);
                }
                v
            }
        }
    };
    Ok(LatticePolygon::from_vertices(&verts))
}

// ---------------------------------------------------------------------------
// Genus pipeline
// ---------------------------------------------------------------------------

/// Arithmetic-genus / delta-invariant bookkeeping for one curve.
#[derive(Clone, Debug)]
pub struct GenusReport {
    /// Interior lattice points of the ambient class polygon.
    pub arithmetic_genus: i64,
    /// Per-singularity (label, delta) entries.
    pub deltas: Vec<(String, i64)>,
    /// `arithmetic_genus - sum(deltas)`.
    pub geometric_genus: i64,
    /// Assumptions the computation is conditional on.
    pub assumptions: Vec<String>,
}

impl GenusReport {
    pub fn new(ambient: &LatticePolygon, deltas: Vec<(String, i64)>, assumptions: Vec<String>) -> Self {
        let pa = ambient.interior_lattice_points().0;
        let total: i64 = deltas.iter().map(|(_, d)| d).sum();
        GenusReport {
            arithmetic_genus: pa,
            deltas,
            geometric_genus: pa - total,
            assumptions,
        }
    }
}

/// The ambient class simplex `Conv((0,0), (w*m, 0), (0, m))` used by the
/// weighted-plane compactifications.
pub fn ambient_simplex(w: i64, m: i64) -> LatticePolygon {
    LatticePolygon::from_vertices(&[(0, 0), (w * m, 0), (0, m)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{vars, MPoly};

    #[test]
    fn hull_canonical_and_pick() {
        let p = LatticePolygon::hull(&[(0, 0), (6, 0), (0, 3), (1, 1), (3, 0), (2, 2)]);
        assert_eq!(p.verts, vec![(0, 0), (6, 0), (0, 3)]);
        let (i, pts) = p.interior_lattice_points();
        assert_eq!(i, 4); // (m-1)^2 with m=3 for the half-weighted simplex
        assert_eq!(pts.len(), 4);
    }

    #[test]
    fn weighted_simplices() {
        // side lengths m, m, 2m: interior = (m-1)^2
        for m in 2..7 {
            assert_eq!(
                ambient_simplex(2, m).interior_lattice_points().0,
                (m - 1) * (m - 1)
            );
        }
        // D4 simplex: (2m-1)(m-1)
        for m in 2..7 {
            assert_eq!(
                ambient_simplex(4, m).interior_lattice_points().0,
                (2 * m - 1) * (m - 1)
            );
        }
        // unit triangle
        assert_eq!(
            LatticePolygon::hull(&[(0, 0), (1, 0), (0, 1)])
                .interior_lattice_points()
                .0,
            0
        );
    }

    #[test]
    fn minkowski_translation_and_newton_f() {
        // A + point(a, 0) is a translation
        let a = LatticePolygon::hull(&[(0, 0), (2, 0), (0, 2)]);
        let pt = LatticePolygon::hull(&[(3, 0)]);
        assert_eq!(a.minkowski_sum(&pt), a.translate((3, 0)));
        // segment(0,0)-(b,0) + segment((0,c),(c,0)) + point(a,0)
        //   = Conv((a+c,0),(a+b+c,0),(a,c),(a+b,c))
        let (aa, bb, cc) = (2i64, 3i64, 2i64);
        let s1 = LatticePolygon::hull(&[(0, 0), (bb, 0)]);
        let s2 = LatticePolygon::hull(&[(0, cc), (cc, 0)]);
        let p = LatticePolygon::hull(&[(aa, 0)]);
        let sum = s1.minkowski_sum(&s2).minkowski_sum(&p);
        let expect = LatticePolygon::from_vertices(&[
            (aa + cc, 0),
            (aa + bb + cc, 0),
            (aa, cc),
            (aa + bb, cc),
        ]);
        assert_eq!(sum, expect);
    }

    #[test]
    fn newton_polygon_of_legendre_base() {
        // f = x^a (x-1)^b (x-lam)^c
        let v = vars(&["x", "lam"]);
        let x = MPoly::var(&v, "x");
        let lam = MPoly::var(&v, "lam");
        let one = MPoly::one(&v);
        let (a, b, c) = (2usize, 1usize, 3usize);
        let f = x
            .pow(a)
            .mul(&x.sub(&one).pow(b))
            .mul(&x.sub(&lam).pow(c));
        let np = newton_polygon(&f, "x", "lam").unwrap();
        let expect = LatticePolygon::from_vertices(&[
            ((a + c) as i64, 0),
            ((a + b + c) as i64, 0),
            (a as i64, c as i64),
            ((a + b) as i64, c as i64),
        ]);
        assert_eq!(np, expect);
        // constant polynomial -> single point
        let np1 = newton_polygon(&one, "x", "lam").unwrap();
        assert_eq!(np1.verts, vec![(0, 0)]);
    }

    #[test]
    fn delta_counts() {
        // Weierstrass m=3 shape: support with lower hull (0,2),(1,1),(5,0)
        let supp = [(0i64, 2), (0, 3), (1, 1), (5, 0), (6, 0)];
        let hull = LowerHull::of_support(&supp);
        assert_eq!(hull.chain, vec![(0, 2), (1, 1), (5, 0), (6, 0)]);
        // delta = 1
        let mut delta = 0;
        for i in 1..=6 {
            for j in 1..=3 {
                if hull.on_or_below(i, j) {
                    delta += 1;
                }
            }
        }
        assert_eq!(delta, 1);
    }

    #[test]
    fn expected_polygon_examples() {
        let p = expected_polygon(&PolygonStatement::LegendreUHalf { m: 4 }).unwrap();
        assert_eq!(
            p,
            LatticePolygon::from_vertices(&[(0, 4), (2, 4), (2, 2), (7, 1), (7, 0), (8, 0)])
        );
        let w = expected_polygon(&PolygonStatement::WeierstrassCentered { m: 5 }).unwrap();
        assert_eq!(
            w,
            LatticePolygon::from_vertices(&[(0, 3), (0, 5), (1, 2), (3, 1), (9, 0), (10, 0)])
        );
        let d6 = expected_polygon(&PolygonStatement::D6Origin).unwrap();
        assert_eq!(
            d6,
            LatticePolygon::from_vertices(&[(0, 2), (3, 2), (6, 0), (15, 0)])
        );
        assert!(matches!(
            expected_polygon(&PolygonStatement::D4Centered { m: 6 }),
            Err(Error::Refused(_))
        ));
    }
}
