use super::build::{bent_center, construct, incenter, iso_triangle, polygon_halfplanes, unit_eqt};
use super::constants::*;
use super::spec::{FamilySpec, Vertex};
use super::FamilyError;
use crate::diagram::DiagramPoint;
use crate::geometry::{hull_bodies, hull_points_disks, intersect_disks_halfplanes, ArcPolygon, Disk, Point};
use crate::numeric::solve2;
use crate::radii::inball;
use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3};

/// One column entry of the tightness pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Tight,
    Slack,
    /// Tight, but only as an artefact of a joint inequality pair.
    Artefact,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Tight => "+",
            Sign::Slack => "-",
            Sign::Artefact => "±",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexRow {
    pub vertex: Vertex,
    pub point: DiagramPoint,
    /// Coordinates as printed to four decimals.
    pub printed: [f64; 3],
    /// Order lb₁ lb₂ lb₃ ib₁ ib₂ ib₃ ub₁ ub₂ ub₃.
    pub signs: [Sign; 9],
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

fn signs(p: &str) -> [Sign; 9] {
    let v: Vec<Sign> = p
        .split_whitespace()
        .map(|c| match c {
            "+" => Sign::Tight,
            "-" => Sign::Slack,
            _ => Sign::Artefact,
        })
        .collect();
    v.try_into().expect("nine signs")
}

/// The ten vertices with exact coordinates and tightness patterns.
pub fn vertex_table() -> Vec<VertexRow> {
    let s3 = sqrt3();
    let dbt = d_bent_trapezoid();
    let rh = r_hood();
    let row = |vertex, p: [f64; 3], printed, pat| VertexRow {
        vertex,
        point: DiagramPoint::new(p[0], p[1], p[2]),
        printed,
        signs: signs(pat),
    };
    vec![
        row(Vertex::Ball, [1.0, 1.0, 1.0], [1.0, 1.0, 1.0], "+ - - + + - + - -"),
        row(Vertex::EquilateralTriangle, [0.5, 0.75, 0.5 * s3], [0.5, 0.75, 0.8660], "- + - - - + + + +"),
        row(Vertex::LineSegment, [0.0, 0.0, 1.0], [0.0, 0.0, 1.0], "+ + - + - - - ± +"),
        row(
            Vertex::ReuleauxTriangle,
            [s3 - 1.0, 0.5 * s3, 0.5 * s3],
            [0.7321, 0.8660, 0.8660],
            "- - - - + + + - -",
        ),
        row(
            Vertex::RightAngledTriangle,
            [2f64.sqrt() - 1.0, 0.5, 1.0],
            [0.4142, 0.5, 1.0],
            "- - - + - - - + +",
        ),
        row(
            Vertex::SailingBoat,
            [FRAC_1_SQRT_2, 0.5 * (FRAC_1_SQRT_2 + 1.0), 1.0],
            [0.7071, 0.8536, 1.0],
            "- - - + - - + + -",
        ),
        row(
            Vertex::SlicedReuleauxTriangle,
            [s3 - 1.0, 0.5 * w_sliced(), 0.5 * s3],
            [0.7321, 0.8440, 0.8660],
            "- - + - + + - - -",
        ),
        row(
            Vertex::FlattenedReuleauxTriangle,
            [r_flattened(), 0.75, 0.5 * s3],
            [0.6495, 0.75, 0.8660],
            "- + + - - + - - -",
        ),
        row(
            Vertex::BentTrapezoid,
            [0.375 * dbt, 0.375 * dbt, 0.5 * dbt],
            [0.6836, 0.6836, 0.9114],
            "+ + + - - - - - -",
        ),
        row(Vertex::Hood, [rh, rh, 0.5 * (1.0 + rh)], [0.7935, 0.7935, 0.8967], "+ - + - + - - - -"),
    ]
}

/// Minimal and maximal bodies sharing the diagram point of a family member.
#[derive(Clone, Debug)]
pub struct Companions {
    pub min: Option<ArcPolygon>,
    pub max: Option<ArcPolygon>,
    /// Why no companions exist, when they do not.
    pub note: Option<String>,
}

/// A minimal body of the sailing boat with inradius `r` and apex angle γ ≥ π/3.
fn boat_min(r: f64, gamma: f64) -> Result<ArcPolygon, FamilyError> {
    let tri = iso_triangle(gamma).expect("γ > 0");
    let apex = tri[2];
    let s = r / iso_inradius(gamma);
    let scaled: Vec<Point> = tri.iter().map(|&p| apex + (p - apex) * s).collect();
    let w = r * (1.0 + 1.0 / (0.5 * gamma).sin());
    if w <= apex.dist(tri[0]) {
        let cap = intersect_disks_halfplanes(
            &[Disk::new(Point::ORIGIN, 1.0), Disk::new(apex, w)],
            &polygon_halfplanes(&scaled),
        )?;
        return Ok(hull_bodies(&[&ArcPolygon::polygon(&tri)?, &cap])?);
    }
    // Not unique here; take the pentagon cut by the inball tangent opposite the apex.
    let c = incenter(&[scaled[0], scaled[1], scaled[2]]);
    let n = (c - apex).normalized();
    let foot = |p: Point| {
        let d = (p - apex).normalized();
        let mut m = Point::new(-d.y, d.x);
        if m.dot(c - apex) < 0.0 {
            m = m * -1.0;
        }
        solve2([[n.x, n.y], [m.x, m.y]], [n.dot(c) + r, m.dot(apex) + w]).map(|[x, y]| Point::new(x, y))
    };
    let (Some(p4), Some(p5)) = (foot(tri[0]), foot(tri[1])) else {
        return Err(FamilyError::Tangency(f64::NAN));
    };
    Ok(hull_points_disks(&[tri[0], tri[1], tri[2], p4, p5], &[])?)
}

/// Hull of the underlying triangle and the inball of the maximal body.
fn hull_with_inball(tri: &[Point], max: &ArcPolygon) -> Result<ArcPolygon, FamilyError> {
    let (c, r, _) = inball(max)?;
    Ok(hull_points_disks(tri, &[Disk::new(c, r)])?)
}

pub fn min_max_companions(spec: &FamilySpec) -> Result<Companions, FamilyError> {
    let max = construct(spec)?;
    let triangle: Option<Vec<Point>> = match *spec {
        FamilySpec::Vertex(Vertex::SlicedReuleauxTriangle)
        | FamilySpec::Vertex(Vertex::FlattenedReuleauxTriangle)
        | FamilySpec::SlicedReuleaux { .. } => Some(unit_eqt().to_vec()),
        FamilySpec::Vertex(Vertex::BentTrapezoid) => iso_triangle(gamma_bent_trapezoid()).map(|t| t.to_vec()),
        FamilySpec::Vertex(Vertex::Hood) => iso_triangle(gamma_hood()).map(|t| t.to_vec()),
        FamilySpec::BentTrapezoid { gamma }
        | FamilySpec::Hood { gamma }
        | FamilySpec::BentPentagon { gamma, .. }
        | FamilySpec::ConcentricBoat { gamma }
        | FamilySpec::Boat { gamma, .. } => iso_triangle(gamma).map(|t| t.to_vec()),
        FamilySpec::RightBoat { .. } | FamilySpec::Vertex(Vertex::SailingBoat) => iso_triangle(FRAC_PI_2).map(|t| t.to_vec()),
        _ => None,
    };
    let Some(tri) = triangle else {
        return Ok(Companions {
            min: None,
            max: None,
            note: Some(format!("no companion bodies are defined for {}", spec.family_name())),
        });
    };
    let min = match *spec {
        FamilySpec::RightBoat { r } => boat_min(r, FRAC_PI_2)?,
        FamilySpec::Vertex(Vertex::SailingBoat) => boat_min(FRAC_1_SQRT_2, FRAC_PI_2)?,
        FamilySpec::Boat { r, gamma } => boat_min(r, gamma)?,
        // The pentagon spanned by the vertices of the boat.
        FamilySpec::ConcentricBoat { .. } => ArcPolygon::polygon(&max.vertices())?,
        // The bent isosceles family is the minimal companion by construction.
        FamilySpec::BentPentagon { r, gamma } => {
            construct(&FamilySpec::BentIsosceles { r, gamma })?
        }
        FamilySpec::SlicedReuleaux { r } => hull_points_disks(&tri, &[Disk::new(bent_center(r, FRAC_PI_3), r)])?,
        _ => hull_with_inball(&tri, &max)?,
    };
    Ok(Companions { min: Some(min), max: Some(max), note: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::f_map;

    #[test]
    fn companions_share_diagram_point() {
        for spec in [
            FamilySpec::Vertex(Vertex::SlicedReuleauxTriangle),
            FamilySpec::Vertex(Vertex::FlattenedReuleauxTriangle),
            FamilySpec::Vertex(Vertex::BentTrapezoid),
            FamilySpec::Vertex(Vertex::Hood),
            FamilySpec::BentPentagon { r: 0.7, gamma: 1.0 },
            FamilySpec::RightBoat { r: 0.6 },
            FamilySpec::RightBoat { r: 0.45 },
            FamilySpec::Vertex(Vertex::SailingBoat),
            FamilySpec::ConcentricBoat { gamma: 1.2 },
            FamilySpec::Boat { r: 0.55, gamma: 1.2 },
            FamilySpec::BentTrapezoid { gamma: 0.5 },
        ] {
            let c = min_max_companions(&spec).unwrap();
            let a = f_map(c.min.as_ref().unwrap()).unwrap();
            let b = f_map(c.max.as_ref().unwrap()).unwrap();
            assert!(a.dist_inf(&b) < 1e-6, "{spec}: {a:?} vs {b:?}");
        }
        assert!(min_max_companions(&FamilySpec::Vertex(Vertex::Ball)).unwrap().min.is_none());
    }
}
