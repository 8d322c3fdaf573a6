use super::constants::*;
use super::spec::{FamilySpec, Vertex};
use super::FamilyError;
use crate::geometry::{
    combination, hull_bodies, hull_points_disks, intersect_disks_halfplanes, wrap_angle, ArcPolygon, Disk,
    HalfPlane, Point,
};
use crate::numeric::{bisect, golden_min};
use crate::radii::width;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

/// Vertices of the equilateral triangle inscribed in the unit circle, apex up.
pub fn unit_eqt() -> [Point; 3] {
    [90.0f64, 210.0, 330.0].map(|d| Point::polar(d.to_radians()))
}

/// The three disks whose intersection is the Reuleaux triangle.
pub fn reuleaux_disks() -> Vec<Disk> {
    unit_eqt().iter().map(|&p| Disk::new(p, sqrt3())).collect()
}

/// Outward halfplanes of a counter-clockwise polygon.
pub(crate) fn polygon_halfplanes(v: &[Point]) -> Vec<HalfPlane> {
    (0..v.len())
        .map(|i| {
            let a = v[i];
            let d = v[(i + 1) % v.len()] - a;
            let n = Point::new(d.y, -d.x).normalized();
            HalfPlane { normal: n, offset: n.dot(a) }
        })
        .collect()
}

/// Acute frame: the two long sides meet at `p1` with angle γ, the base `p1p2` is horizontal.
fn acute_frame(gamma: f64) -> ([Point; 3], f64, f64) {
    let d = iso_diameter(gamma);
    let h = (0.5 * gamma).sin();
    let p1 = Point::new(-0.5 * d, -h);
    let p2 = Point::new(0.5 * d, -h);
    let p3 = p1 + Point::polar(gamma) * d;
    ([p1, p2, p3], d, h)
}

/// Isosceles triangle with apex angle γ ∈ (0, π/2], counter-clockwise; `None` at γ = 0.
///
/// Up to π/3 the acute frame is used; beyond, the apex sits at the top of the circle.
pub fn iso_triangle(gamma: f64) -> Option<[Point; 3]> {
    if gamma <= 0.0 {
        return None;
    }
    if gamma <= FRAC_PI_3 {
        Some(acute_frame(gamma).0)
    } else {
        Some([Point::polar(-FRAC_PI_2 - gamma), Point::polar(-FRAC_PI_2 + gamma), Point::new(0.0, 1.0)])
    }
}

/// Triangle with longest side `d` as a chord of the unit circle and inradius `r`.
pub fn triangle_vertices(r: f64, d: f64) -> Result<Option<[Point; 3]>, FamilyError> {
    let gamma = (0.5 * d).min(1.0).asin();
    let b1 = Point::polar(-FRAC_PI_2 - gamma);
    let b2 = Point::polar(-FRAC_PI_2 + gamma);
    let inr = |phi: f64| {
        let p3 = Point::polar(FRAC_PI_2 + phi);
        let area = 0.5 * (b2 - b1).cross(p3 - b1);
        let per = b1.dist(b2) + b2.dist(p3) + p3.dist(b1);
        2.0 * area / per
    };
    let top = (3.0 * gamma - PI).max(0.0);
    if r <= 0.0 && inr(top) <= 1e-12 {
        return Ok(None);
    }
    let phi = if (inr(0.0) - r).abs() <= 1e-15 {
        0.0
    } else if (inr(top) - r).abs() <= 1e-15 {
        top
    } else {
        bisect(|p| inr(p) - r, 0.0, top, 1e-15)
            .ok_or_else(|| FamilyError::Tangency((inr(0.0) - r).min(r - inr(top))))?
    };
    let res = inr(phi) - r;
    if res.abs() > 1e-10 {
        return Err(FamilyError::Tangency(res));
    }
    Ok(Some([b1, b2, Point::polar(FRAC_PI_2 + phi)]))
}

fn diameter_segment() -> ArcPolygon {
    ArcPolygon::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0))
}

/// Center of the inball shared by the bent pentagon and bent isosceles family.
pub(crate) fn bent_center(r: f64, gamma: f64) -> Point {
    let (_, d, h) = acute_frame(gamma);
    Point::new(0.0, -h + ((d - r).powi(2) - 0.25 * d * d).max(0.0).sqrt())
}

/// Normal angle of the slice line through `p2` tangent to the inball, on the floor side.
fn slice_normal(p2: Point, c: Point, r: f64) -> f64 {
    let v = p2 - c;
    let delta = v.angle();
    let a = (r / v.norm()).clamp(-1.0, 1.0).acos();
    let gap = |t: f64| wrap_angle(t + FRAC_PI_2 + PI) - PI;
    let (x, y) = (delta + a, delta - a);
    if gap(x).abs() <= gap(y).abs() {
        x
    } else {
        y
    }
}

fn bent_pentagon(r: f64, gamma: f64) -> Result<ArcPolygon, FamilyError> {
    let ([p1, p2, p3], d, _) = acute_frame(gamma);
    let c = bent_center(r, gamma);
    let phi = slice_normal(p2, c, r);
    let disks = [Disk::new(p1, d), Disk::new(p2, d), Disk::new(p3, d)];
    let halves = [HalfPlane::through(phi, p2), HalfPlane::through(phi + PI, p3)];
    Ok(intersect_disks_halfplanes(&disks, &halves)?)
}

fn bent_trapezoid(gamma: f64) -> Result<ArcPolygon, FamilyError> {
    if gamma <= 0.0 {
        return Ok(diameter_segment());
    }
    let ([p1, p2, p3], d, h) = acute_frame(gamma);
    let disks = [Disk::new(p1, d), Disk::new(p2, d)];
    let halves = [HalfPlane::new(FRAC_PI_2, p3.y), HalfPlane::new(-FRAC_PI_2, h)];
    Ok(intersect_disks_halfplanes(&disks, &halves)?)
}

fn boat(r: f64, gamma: f64) -> Result<ArcPolygon, FamilyError> {
    let tri = iso_triangle(gamma).expect("γ ≥ π/3");
    let s = r / iso_inradius(gamma);
    let apex = tri[2];
    let scaled: Vec<Point> = tri.iter().map(|&p| apex + (p - apex) * s).collect();
    Ok(intersect_disks_halfplanes(&[Disk::new(Point::ORIGIN, 1.0)], &polygon_halfplanes(&scaled))?)
}

fn polygon(v: &[Point]) -> Result<ArcPolygon, FamilyError> {
    Ok(ArcPolygon::polygon(v)?)
}

/// Incenter of a triangle.
pub(crate) fn incenter(t: &[Point; 3]) -> Point {
    let a = t[1].dist(t[2]);
    let b = t[2].dist(t[0]);
    let c = t[0].dist(t[1]);
    (t[0] * a + t[1] * b + t[2] * c) * (1.0 / (a + b + c))
}

/// Height of the floor cut and slice geometry of the sliced Reuleaux family at inradius `r`.
fn sliced_center_y(r: f64) -> f64 {
    bent_center(r, FRAC_PI_3).y
}

fn general_sliced(r: f64, t: f64) -> Result<ArcPolygon, FamilyError> {
    let yc = sliced_center_y(r);
    let corner = unit_eqt()[2];
    let floor = HalfPlane::new(-FRAC_PI_2, r - yc);
    let filled = intersect_disks_halfplanes(&reuleaux_disks(), &[floor])?;
    let (w0, _) = width(&filled)?;
    let start = -FRAC_PI_3 - (w0 / sqrt3()).min(1.0).acos();
    let end = slice_normal(corner, Point::new(0.0, yc), r);
    let phi = start + (end - start) * t;
    Ok(intersect_disks_halfplanes(&reuleaux_disks(), &[floor, HalfPlane::through(phi, corner)])?)
}

fn shifted_blossom(r: f64, shift: f64) -> Result<ArcPolygon, FamilyError> {
    let stop = if r <= r_flattened() { r - 0.5 } else { sliced_center_y(r) };
    let v = Point::new(0.0, shift * stop);
    let halves: Vec<HalfPlane> = [-FRAC_PI_2, FRAC_PI_6, 5.0 * FRAC_PI_6]
        .iter()
        .map(|&t| HalfPlane::new(t, r + Point::polar(t).dot(v)))
        .collect();
    Ok(intersect_disks_halfplanes(&reuleaux_disks(), &halves)?)
}

fn isosceles_ball(gamma: f64, r: f64) -> Result<ArcPolygon, FamilyError> {
    if gamma <= 0.0 {
        return Ok(diameter_segment());
    }
    let ([p1, p2, p3], d, h) = acute_frame(gamma);
    // The disk rests on the base; between the two corner-tangent positions it pokes through
    // both other sides, so it stays the inball of the hull.
    let corner_x = |p: Point, a: Point, b: Point| {
        let (u, v) = ((a - p).normalized(), (b - p).normalized());
        let half = 0.5 * u.dot(v).clamp(-1.0, 1.0).acos();
        (p + (u + v).normalized() * (r / half.sin())).x
    };
    let (x_lo, x_hi) = (corner_x(p2, p1, p3), corner_x(p1, p2, p3));
    let center = |x: f64| Point::new(x, -h + r);
    // Positive where the disk would enlarge the diameter or the circumradius.
    let excess = |x: f64| {
        let c = center(x);
        [p1, p2, p3].iter().map(|p| c.dist(*p) + r - d).fold(c.norm() + r - 1.0, f64::max)
    };
    let x = if x_hi - x_lo <= 1e-15 {
        0.5 * (x_lo + x_hi)
    } else {
        let (x_best, e_best) = golden_min(excess, x_lo, x_hi, 1e-14);
        if e_best >= 0.0 {
            x_best
        } else {
            let left = if excess(x_lo) > 0.0 { bisect(excess, x_lo, x_best, 1e-15).unwrap_or(x_best) } else { x_lo };
            let right = if excess(x_hi) > 0.0 { bisect(excess, x_best, x_hi, 1e-15).unwrap_or(x_best) } else { x_hi };
            0.5 * (left + right)
        }
    };
    Ok(hull_points_disks(&[p1, p2, p3], &[Disk::new(center(x), r)])?)
}

/// Builds the body of `spec`; its circumball is the unit disk at the origin.
pub fn construct(spec: &FamilySpec) -> Result<ArcPolygon, FamilyError> {
    spec.validate()?;
    match *spec {
        FamilySpec::Vertex(v) => construct_vertex(v),
        FamilySpec::Isosceles { gamma } => match iso_triangle(gamma) {
            Some(t) => polygon(&t),
            None => Ok(diameter_segment()),
        },
        FamilySpec::RightTriangle { r } => construct(&FamilySpec::Triangle { r, diameter: 2.0 }),
        FamilySpec::Triangle { r, diameter } => match triangle_vertices(r, diameter)? {
            Some(t) => polygon(&t),
            None => Ok(diameter_segment()),
        },
        FamilySpec::Blossom { r } => {
            let halves: Vec<HalfPlane> =
                [-FRAC_PI_2, FRAC_PI_6, 5.0 * FRAC_PI_6].iter().map(|&t| HalfPlane::new(t, r)).collect();
            Ok(intersect_disks_halfplanes(&reuleaux_disks(), &halves)?)
        }
        FamilySpec::Yamanouti { r } => {
            let v = unit_eqt();
            let disks: Vec<Disk> = v.iter().map(|&p| Disk::new(p, r + 1.0)).collect();
            let lens = intersect_disks_halfplanes(&disks, &[])?;
            Ok(hull_bodies(&[&polygon(&v)?, &lens])?)
        }
        FamilySpec::ConcentricBoat { gamma } => boat((0.5 * gamma).sin(), gamma),
        FamilySpec::RightBoat { r } => boat(r, FRAC_PI_2),
        FamilySpec::Boat { r, gamma } => boat(r, gamma),
        FamilySpec::BentEquilateral { r } => {
            Ok(hull_points_disks(&unit_eqt(), &[Disk::new(Point::new(0.0, r - 0.5), r)])?)
        }
        FamilySpec::SlicedReuleaux { r } => bent_pentagon(r, FRAC_PI_3),
        FamilySpec::ConcentricSliced { gamma } => Ok(intersect_disks_halfplanes(
            &reuleaux_disks(),
            &[HalfPlane::through(gamma - FRAC_PI_2, unit_eqt()[2])],
        )?),
        FamilySpec::BentTrapezoid { gamma } => bent_trapezoid(gamma),
        FamilySpec::Hood { gamma } => bent_pentagon(iso_diameter(gamma) - 1.0, gamma),
        FamilySpec::BentPentagon { r, gamma } => bent_pentagon(r, gamma),
        FamilySpec::BentIsosceles { r, gamma } => {
            let tri = iso_triangle(gamma).expect("validated γ > 0");
            Ok(hull_points_disks(&tri, &[Disk::new(bent_center(r, gamma), r)])?)
        }
        FamilySpec::Rounded { ref inner, lambda } => {
            let k = construct(inner)?;
            Ok(combination(&k, 1.0 - lambda, &ArcPolygon::disk(Point::ORIGIN, 1.0), lambda)?)
        }
        FamilySpec::CompletionMix { lambda } => {
            let eqt = construct_vertex(Vertex::EquilateralTriangle)?;
            let ret = construct_vertex(Vertex::ReuleauxTriangle)?;
            Ok(combination(&eqt, lambda, &ret, 1.0 - lambda)?)
        }
        FamilySpec::ShiftedBlossom { r, shift } => shifted_blossom(r, shift),
        FamilySpec::GeneralSliced { r, rotation } => general_sliced(r, rotation),
        FamilySpec::IsoscelesBall { gamma, r } => isosceles_ball(gamma, r),
    }
}

fn construct_vertex(v: Vertex) -> Result<ArcPolygon, FamilyError> {
    match v {
        Vertex::Ball => Ok(ArcPolygon::disk(Point::ORIGIN, 1.0)),
        Vertex::LineSegment => Ok(diameter_segment()),
        Vertex::EquilateralTriangle => polygon(&unit_eqt()),
        Vertex::ReuleauxTriangle => Ok(intersect_disks_halfplanes(&reuleaux_disks(), &[])?),
        Vertex::RightAngledTriangle => polygon(&iso_triangle(FRAC_PI_2).expect("γ > 0")),
        Vertex::SailingBoat => Ok(intersect_disks_halfplanes(
            &[Disk::new(Point::ORIGIN, 1.0)],
            &[
                HalfPlane::new(FRAC_PI_4, FRAC_1_SQRT_2),
                HalfPlane::new(3.0 * FRAC_PI_4, FRAC_1_SQRT_2),
                HalfPlane::new(-FRAC_PI_2, FRAC_1_SQRT_2),
            ],
        )?),
        Vertex::SlicedReuleauxTriangle => {
            let phi = -FRAC_PI_6 - r_reuleaux().acos();
            Ok(intersect_disks_halfplanes(&reuleaux_disks(), &[HalfPlane::through(phi, unit_eqt()[2])])?)
        }
        Vertex::FlattenedReuleauxTriangle => Ok(intersect_disks_halfplanes(
            &reuleaux_disks(),
            &[HalfPlane::new(-FRAC_PI_2, 0.5)],
        )?),
        Vertex::BentTrapezoid => bent_trapezoid(gamma_bent_trapezoid()),
        Vertex::Hood => {
            let g = gamma_hood();
            bent_pentagon(iso_diameter(g) - 1.0, g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radii::compute_radii;

    fn radii(spec: &FamilySpec) -> [f64; 4] {
        compute_radii(&construct(spec).unwrap()).unwrap().radii.values()
    }

    #[test]
    fn vertex_radii() {
        let close = |a: [f64; 4], b: [f64; 4]| a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
        let s3 = sqrt3();
        assert!(close(radii(&FamilySpec::Vertex(Vertex::EquilateralTriangle)), [0.5, 1.5, s3, 1.0]));
        assert!(close(radii(&FamilySpec::Vertex(Vertex::ReuleauxTriangle)), [s3 - 1.0, s3, s3, 1.0]));
        assert!(close(
            radii(&FamilySpec::Vertex(Vertex::FlattenedReuleauxTriangle)),
            [r_flattened(), 1.5, s3, 1.0]
        ));
        assert!(close(
            radii(&FamilySpec::Vertex(Vertex::SlicedReuleauxTriangle)),
            [s3 - 1.0, w_sliced(), s3, 1.0]
        ));
        let rh = r_hood();
        assert!(close(radii(&FamilySpec::Vertex(Vertex::Hood)), [rh, 2.0 * rh, 1.0 + rh, 1.0]));
    }

    #[test]
    fn bent_pentagon_matches_width_formula() {
        for (r, g) in [(0.7, 1.0), (0.72, 0.9), (0.66, 1.04)] {
            let d = iso_diameter(g);
            let v = radii(&FamilySpec::BentPentagon { r, gamma: g });
            assert!((v[0] - r).abs() < 1e-9, "{v:?}");
            assert!((v[1] - bent_pentagon_width(r, d)).abs() < 1e-9, "{v:?}");
            assert!((v[2] - d).abs() < 1e-9 && (v[3] - 1.0).abs() < 1e-9);
        }
    }
}
