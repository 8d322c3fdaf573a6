use super::constants::*;
use super::spec::{FamilySpec, Vertex};
use super::FamilyError;
use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3};

/// Closed-form radii; `None` marks a radius without a closed form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct ExpectedRadii {
    pub r: Option<f64>,
    pub w: Option<f64>,
    pub d: Option<f64>,
    pub big_r: Option<f64>,
}

impl ExpectedRadii {
    fn all(r: f64, w: f64, d: f64) -> Self {
        ExpectedRadii { r: Some(r), w: Some(w), d: Some(d), big_r: Some(1.0) }
    }

    pub fn values(&self) -> [Option<f64>; 4] {
        [self.r, self.w, self.d, self.big_r]
    }
}

fn vertex_radii(v: Vertex) -> ExpectedRadii {
    let s3 = sqrt3();
    match v {
        Vertex::Ball => ExpectedRadii::all(1.0, 2.0, 2.0),
        Vertex::LineSegment => ExpectedRadii::all(0.0, 0.0, 2.0),
        Vertex::EquilateralTriangle => ExpectedRadii::all(0.5, 1.5, s3),
        Vertex::ReuleauxTriangle => ExpectedRadii::all(s3 - 1.0, s3, s3),
        Vertex::RightAngledTriangle => ExpectedRadii::all(2f64.sqrt() - 1.0, 1.0, 2.0),
        Vertex::SailingBoat => ExpectedRadii::all(FRAC_1_SQRT_2, 1.0 + FRAC_1_SQRT_2, 2.0),
        Vertex::SlicedReuleauxTriangle => ExpectedRadii::all(s3 - 1.0, w_sliced(), s3),
        Vertex::FlattenedReuleauxTriangle => ExpectedRadii::all(r_flattened(), 1.5, s3),
        Vertex::BentTrapezoid => {
            let d = d_bent_trapezoid();
            ExpectedRadii::all(0.375 * d, 0.75 * d, d)
        }
        Vertex::Hood => {
            let r = r_hood();
            ExpectedRadii::all(r, 2.0 * r, 1.0 + r)
        }
    }
}

/// Width of the sliced Reuleaux family at inradius `r`.
fn sliced_width(r: f64) -> f64 {
    let d = sqrt3();
    d * (std::f64::consts::FRAC_PI_6 - (r / (d - r)).asin() + (d / (2.0 * (d - r))).acos()).cos()
}

/// Closed-form radii of a family member.
pub fn expected_radii(spec: &FamilySpec) -> Result<ExpectedRadii, FamilyError> {
    spec.validate()?;
    let s3 = sqrt3();
    Ok(match *spec {
        FamilySpec::Vertex(v) => vertex_radii(v),
        FamilySpec::Isosceles { gamma } => {
            let (w, r) = iso_width_inradius(gamma);
            ExpectedRadii::all(r, w, iso_diameter_any(gamma))
        }
        FamilySpec::RightTriangle { r } => ExpectedRadii::all(r, r * (r + 2.0), 2.0),
        FamilySpec::Triangle { r, diameter } => {
            let gamma = (0.5 * diameter).asin();
            ExpectedRadii::all(r, 2.0 * r * (diameter + r / (0.5 * gamma).tan()) / diameter, diameter)
        }
        FamilySpec::Blossom { r } | FamilySpec::Yamanouti { r } => ExpectedRadii::all(r, r + 1.0, s3),
        FamilySpec::ConcentricBoat { gamma } => {
            let r = (0.5 * gamma).sin();
            ExpectedRadii::all(r, r + 1.0, 2.0 * gamma.sin())
        }
        FamilySpec::RightBoat { r } => ExpectedRadii::all(r, (2f64.sqrt() + 1.0) * r, 2.0),
        FamilySpec::Boat { r, gamma } => {
            ExpectedRadii::all(r, r * (1.0 + 1.0 / (0.5 * gamma).sin()), 2.0 * gamma.sin())
        }
        FamilySpec::BentEquilateral { r } => ExpectedRadii::all(r, 1.5, s3),
        FamilySpec::SlicedReuleaux { r } => ExpectedRadii::all(r, sliced_width(r), s3),
        FamilySpec::ConcentricSliced { gamma } => {
            ExpectedRadii::all(s3 - 1.0, s3 * (FRAC_PI_3 + gamma).sin(), s3)
        }
        FamilySpec::BentTrapezoid { gamma } => {
            let d = iso_diameter(gamma);
            ExpectedRadii::all(r_bent_trapezoid_at(gamma), d * gamma.sin(), d)
        }
        FamilySpec::Hood { gamma } => {
            let d = iso_diameter(gamma);
            let r = d - 1.0;
            ExpectedRadii::all(r, 2.0 * d * (0.5 * gamma).sin() * (gamma - r.asin()).cos(), d)
        }
        FamilySpec::BentPentagon { r, gamma } | FamilySpec::BentIsosceles { r, gamma } => {
            let d = iso_diameter(gamma);
            ExpectedRadii::all(r, bent_pentagon_width(r, d), d)
        }
        FamilySpec::Rounded { ref inner, lambda } => {
            let e = expected_radii(inner)?;
            let mix = |x: Option<f64>, b: f64| x.map(|x| (1.0 - lambda) * x + lambda * b);
            ExpectedRadii { r: mix(e.r, 1.0), w: mix(e.w, 2.0), d: mix(e.d, 2.0), big_r: mix(e.big_r, 1.0) }
        }
        FamilySpec::CompletionMix { lambda } => ExpectedRadii {
            r: None,
            w: Some(1.5 * lambda + s3 * (1.0 - lambda)),
            d: Some(s3),
            big_r: Some(1.0),
        },
        FamilySpec::ShiftedBlossom { r, .. } | FamilySpec::GeneralSliced { r, .. } => {
            ExpectedRadii { r: Some(r), w: None, d: Some(s3), big_r: Some(1.0) }
        }
        FamilySpec::IsoscelesBall { gamma, r } => {
            let (w, _) = iso_width_inradius(gamma);
            ExpectedRadii::all(r, w, iso_diameter(gamma))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct;
    use crate::radii::compute_radii;

    fn check(spec: FamilySpec) {
        let e = expected_radii(&spec).unwrap();
        let got = compute_radii(&construct(&spec).unwrap()).unwrap().radii.values();
        for (g, x) in got.iter().zip(e.values()) {
            if let Some(x) = x {
                assert!((g - x).abs() < 1e-6, "{spec}: computed {got:?}, expected {e:?}");
            }
        }
    }

    #[test]
    fn closed_forms_match_kernel() {
        check(FamilySpec::Isosceles { gamma: 0.7 });
        check(FamilySpec::Isosceles { gamma: 1.3 });
        check(FamilySpec::RightTriangle { r: 0.3 });
        check(FamilySpec::Triangle { r: 0.48, diameter: 1.85 });
        check(FamilySpec::Blossom { r: 0.6 });
        check(FamilySpec::Yamanouti { r: 0.6 });
        check(FamilySpec::ConcentricBoat { gamma: 1.2 });
        check(FamilySpec::RightBoat { r: 0.6 });
        check(FamilySpec::Boat { r: 0.55, gamma: 1.3 });
        check(FamilySpec::BentEquilateral { r: 0.6 });
        check(FamilySpec::SlicedReuleaux { r: 0.7 });
        check(FamilySpec::ConcentricSliced { gamma: 0.4 });
        check(FamilySpec::BentTrapezoid { gamma: 0.5 });
        check(FamilySpec::BentTrapezoid { gamma: 0.95 });
        check(FamilySpec::Hood { gamma: 0.95 });
        check(FamilySpec::BentIsosceles { r: 0.7, gamma: 1.0 });
        check(FamilySpec::IsoscelesBall { gamma: 0.6, r: 0.45 });
        check(FamilySpec::IsoscelesBall { gamma: 0.95, r: 0.6 });
        check(FamilySpec::ShiftedBlossom { r: 0.6, shift: 0.5 });
        check(FamilySpec::ShiftedBlossom { r: 0.7, shift: 1.0 });
        check(FamilySpec::GeneralSliced { r: 0.7, rotation: 0.5 });
        check(FamilySpec::CompletionMix { lambda: 0.3 });
        check(FamilySpec::Rounded { inner: Box::new(FamilySpec::Hood { gamma: 1.0 }), lambda: 0.4 });
    }
}
