use super::constants::*;
use super::FamilyError;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};
use std::fmt;
use std::str::FromStr;

/// The ten bodies mapped to vertices of the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    Ball,
    LineSegment,
    EquilateralTriangle,
    ReuleauxTriangle,
    RightAngledTriangle,
    SailingBoat,
    SlicedReuleauxTriangle,
    FlattenedReuleauxTriangle,
    BentTrapezoid,
    Hood,
}

impl Vertex {
    pub const ALL: [Vertex; 10] = [
        Vertex::Ball,
        Vertex::EquilateralTriangle,
        Vertex::LineSegment,
        Vertex::ReuleauxTriangle,
        Vertex::RightAngledTriangle,
        Vertex::SailingBoat,
        Vertex::SlicedReuleauxTriangle,
        Vertex::FlattenedReuleauxTriangle,
        Vertex::BentTrapezoid,
        Vertex::Hood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Vertex::Ball => "Ball",
            Vertex::LineSegment => "LineSegment",
            Vertex::EquilateralTriangle => "EquilateralTriangle",
            Vertex::ReuleauxTriangle => "ReuleauxTriangle",
            Vertex::RightAngledTriangle => "RightAngledTriangle",
            Vertex::SailingBoat => "SailingBoat",
            Vertex::SlicedReuleauxTriangle => "SlicedReuleauxTriangle",
            Vertex::FlattenedReuleauxTriangle => "FlattenedReuleauxTriangle",
            Vertex::BentTrapezoid => "BentTrapezoid",
            Vertex::Hood => "Hood",
        }
    }

    /// Short symbol used in edge names and in the spec syntax.
    pub fn symbol(self) -> &'static str {
        match self {
            Vertex::Ball => "B",
            Vertex::LineSegment => "L",
            Vertex::EquilateralTriangle => "EqT",
            Vertex::ReuleauxTriangle => "ReT",
            Vertex::RightAngledTriangle => "RAT",
            Vertex::SailingBoat => "SB",
            Vertex::SlicedReuleauxTriangle => "SRT",
            Vertex::FlattenedReuleauxTriangle => "FRT",
            Vertex::BentTrapezoid => "BT",
            Vertex::Hood => "H",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Vertex::Ball => "ball",
            Vertex::LineSegment => "segment",
            Vertex::EquilateralTriangle => "eqt",
            Vertex::ReuleauxTriangle => "ret",
            Vertex::RightAngledTriangle => "rat",
            Vertex::SailingBoat => "sb",
            Vertex::SlicedReuleauxTriangle => "srt",
            Vertex::FlattenedReuleauxTriangle => "frt",
            Vertex::BentTrapezoid => "bt",
            Vertex::Hood => "h",
        }
    }
}

/// A named body or a member of a parametric family. Angles are in radians.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Vertex(Vertex),
    /// Isosceles triangle with apex angle γ ∈ [0, π/2] inscribed in the unit circle.
    Isosceles { gamma: f64 },
    /// Triangle with a diameter of the circumcircle as its longest side.
    RightTriangle { r: f64 },
    /// Reuleaux blossom: Reuleaux triangle cut by an enlarged concentric triangle.
    Blossom { r: f64 },
    Yamanouti { r: f64 },
    /// Sailing boat whose inball is concentric with the circumball.
    ConcentricBoat { gamma: f64 },
    /// Sailing boat over the right-angled triangle.
    RightBoat { r: f64 },
    Boat { r: f64, gamma: f64 },
    BentEquilateral { r: f64 },
    SlicedReuleaux { r: f64 },
    ConcentricSliced { gamma: f64 },
    BentTrapezoid { gamma: f64 },
    Hood { gamma: f64 },
    BentPentagon { r: f64, gamma: f64 },
    BentIsosceles { r: f64, gamma: f64 },
    Triangle { r: f64, diameter: f64 },
    /// `(1 − λ)K + λ𝔹`.
    Rounded { inner: Box<FamilySpec>, lambda: f64 },
    /// `λ·EqT + (1 − λ)·ReT`.
    CompletionMix { lambda: f64 },
    /// Blossom whose cutting triangle is shifted along the symmetry axis.
    ShiftedBlossom { r: f64, shift: f64 },
    /// Reuleaux triangle with a floor cut and a rotating slice through a vertex.
    GeneralSliced { r: f64, rotation: f64 },
    /// Hull of an acute isosceles triangle and a ball resting on its longest side.
    IsoscelesBall { gamma: f64, r: f64 },
}

const EPS: f64 = 1e-12;

fn in_range(family: &'static str, param: &'static str, value: f64, lo: f64, hi: f64) -> Result<(), FamilyError> {
    if value.is_finite() && value >= lo - EPS && value <= hi + EPS {
        Ok(())
    } else {
        Err(FamilyError::OutOfRange { family, param, value, lo, hi })
    }
}

/// Admissible inradius interval of the facet triangle family at diameter `d`.
pub(crate) fn triangle_r_range(d: f64) -> (f64, f64) {
    let lo = iso_inradius(2.0 * (0.5 * d).min(1.0).acos());
    let hi = iso_inradius((0.5 * d).min(1.0).asin());
    (lo, hi)
}

/// Admissible inradius interval of the sailing boats at apex angle γ.
pub(crate) fn boat_r_range(gamma: f64) -> (f64, f64) {
    (iso_inradius(gamma), (0.5 * gamma).sin())
}

/// Admissible inradius interval of the isosceles-ball family at apex angle γ.
pub(crate) fn iso_ball_r_range(gamma: f64) -> (f64, f64) {
    (iso_inradius(gamma), r_bent_trapezoid_at(gamma))
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Vertex(v) => v.name(),
            FamilySpec::Isosceles { .. } => "Isosceles",
            FamilySpec::RightTriangle { .. } => "RightTriangle",
            FamilySpec::Blossom { .. } => "Blossom",
            FamilySpec::Yamanouti { .. } => "Yamanouti",
            FamilySpec::ConcentricBoat { .. } => "ConcentricBoat",
            FamilySpec::RightBoat { .. } => "RightBoat",
            FamilySpec::Boat { .. } => "Boat",
            FamilySpec::BentEquilateral { .. } => "BentEquilateral",
            FamilySpec::SlicedReuleaux { .. } => "SlicedReuleaux",
            FamilySpec::ConcentricSliced { .. } => "ConcentricSliced",
            FamilySpec::BentTrapezoid { .. } => "BentTrapezoid",
            FamilySpec::Hood { .. } => "Hood",
            FamilySpec::BentPentagon { .. } => "BentPentagon",
            FamilySpec::BentIsosceles { .. } => "BentIsosceles",
            FamilySpec::Triangle { .. } => "Triangle",
            FamilySpec::Rounded { .. } => "Rounded",
            FamilySpec::CompletionMix { .. } => "CompletionMix",
            FamilySpec::ShiftedBlossom { .. } => "ShiftedBlossom",
            FamilySpec::GeneralSliced { .. } => "GeneralSliced",
            FamilySpec::IsoscelesBall { .. } => "IsoscelesBall",
        }
    }

    /// Checks the documented parameter ranges.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.family_name();
        match *self {
            FamilySpec::Vertex(_) => Ok(()),
            FamilySpec::Isosceles { gamma } => in_range(name, "gamma", gamma, 0.0, FRAC_PI_2),
            FamilySpec::RightTriangle { r } => in_range(name, "r", r, 0.0, 2f64.sqrt() - 1.0),
            FamilySpec::Blossom { r } | FamilySpec::Yamanouti { r } => {
                in_range(name, "r", r, 0.5, r_reuleaux())
            }
            FamilySpec::ConcentricBoat { gamma } => in_range(name, "gamma", gamma, FRAC_PI_3, FRAC_PI_2),
            FamilySpec::RightBoat { r } => {
                in_range(name, "r", r, 2f64.sqrt() - 1.0, std::f64::consts::FRAC_1_SQRT_2)
            }
            FamilySpec::Boat { r, gamma } => {
                in_range(name, "gamma", gamma, FRAC_PI_3, FRAC_PI_2)?;
                let (lo, hi) = boat_r_range(gamma);
                in_range(name, "r", r, lo, hi)
            }
            FamilySpec::BentEquilateral { r } => in_range(name, "r", r, 0.5, r_flattened()),
            FamilySpec::SlicedReuleaux { r } => in_range(name, "r", r, r_flattened(), r_reuleaux()),
            FamilySpec::ConcentricSliced { gamma } => {
                in_range(name, "gamma", gamma, gamma_csrt_min(), FRAC_PI_6)
            }
            FamilySpec::BentTrapezoid { gamma } => in_range(name, "gamma", gamma, 0.0, FRAC_PI_3),
            FamilySpec::Hood { gamma } => in_range(name, "gamma", gamma, gamma_hood(), FRAC_PI_3),
            FamilySpec::BentPentagon { r, gamma } | FamilySpec::BentIsosceles { r, gamma } => {
                in_range(name, "gamma", gamma, 0.0, FRAC_PI_3)?;
                let d = iso_diameter(gamma);
                if 8.0 * r < 3.0 * d - 1e-12 {
                    return Err(FamilyError::Predicate(format!(
                        "{name}: 8r ≥ 3D violated (r = {r}, D = {d})"
                    )));
                }
                if r > d - 1.0 + 1e-12 {
                    return Err(FamilyError::Predicate(format!(
                        "{name}: r + R ≤ D violated (r = {r}, D = {d})"
                    )));
                }
                if bent_pentagon_width(r, d) < 2.0 * r - 1e-12 {
                    return Err(FamilyError::Predicate(format!(
                        "{name}: width would fall below 2r (r = {r}, D = {d})"
                    )));
                }
                Ok(())
            }
            FamilySpec::Triangle { r, diameter } => {
                in_range(name, "diameter", diameter, sqrt3(), 2.0)?;
                let (lo, hi) = triangle_r_range(diameter);
                in_range(name, "r", r, lo, hi)
            }
            FamilySpec::Rounded { ref inner, lambda } => {
                in_range(name, "lambda", lambda, 0.0, 1.0)?;
                inner.validate()
            }
            FamilySpec::CompletionMix { lambda } => in_range(name, "lambda", lambda, 0.0, 1.0),
            FamilySpec::ShiftedBlossom { r, shift } => {
                in_range(name, "r", r, 0.5, r_reuleaux())?;
                in_range(name, "shift", shift, 0.0, 1.0)
            }
            FamilySpec::GeneralSliced { r, rotation } => {
                in_range(name, "r", r, r_flattened(), r_reuleaux())?;
                in_range(name, "rotation", rotation, 0.0, 1.0)
            }
            FamilySpec::IsoscelesBall { gamma, r } => {
                in_range(name, "gamma", gamma, 0.0, FRAC_PI_3)?;
                let (lo, hi) = iso_ball_r_range(gamma);
                in_range(name, "r", r, lo, hi)
            }
        }
    }

    fn key(&self) -> &'static str {
        match self {
            FamilySpec::Vertex(v) => v.key(),
            FamilySpec::Isosceles { .. } => "iso",
            FamilySpec::RightTriangle { .. } => "rect",
            FamilySpec::Blossom { .. } => "reb",
            FamilySpec::Yamanouti { .. } => "yamanouti",
            FamilySpec::ConcentricBoat { .. } => "csb",
            FamilySpec::RightBoat { .. } => "rsb",
            FamilySpec::Boat { .. } => "sboat",
            FamilySpec::BentEquilateral { .. } => "beq",
            FamilySpec::SlicedReuleaux { .. } => "slirt",
            FamilySpec::ConcentricSliced { .. } => "csrt",
            FamilySpec::BentTrapezoid { .. } => "btrap",
            FamilySpec::Hood { .. } => "hood",
            FamilySpec::BentPentagon { .. } => "bpen",
            FamilySpec::BentIsosceles { .. } => "biso",
            FamilySpec::Triangle { .. } => "triangle",
            FamilySpec::Rounded { .. } => "rounded",
            FamilySpec::CompletionMix { .. } => "mix",
            FamilySpec::ShiftedBlossom { .. } => "ncreb",
            FamilySpec::GeneralSliced { .. } => "gsliced",
            FamilySpec::IsoscelesBall { .. } => "isoball",
        }
    }

    /// Named real parameters in syntax order.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            FamilySpec::Vertex(_) => vec![],
            FamilySpec::Isosceles { gamma }
            | FamilySpec::ConcentricBoat { gamma }
            | FamilySpec::ConcentricSliced { gamma }
            | FamilySpec::BentTrapezoid { gamma }
            | FamilySpec::Hood { gamma } => vec![("gamma", gamma)],
            FamilySpec::RightTriangle { r }
            | FamilySpec::Blossom { r }
            | FamilySpec::Yamanouti { r }
            | FamilySpec::RightBoat { r }
            | FamilySpec::BentEquilateral { r }
            | FamilySpec::SlicedReuleaux { r } => vec![("r", r)],
            FamilySpec::Boat { r, gamma }
            | FamilySpec::BentPentagon { r, gamma }
            | FamilySpec::BentIsosceles { r, gamma } => vec![("r", r), ("gamma", gamma)],
            FamilySpec::Triangle { r, diameter } => vec![("r", r), ("d", diameter)],
            FamilySpec::Rounded { lambda, .. } | FamilySpec::CompletionMix { lambda } => {
                vec![("lambda", lambda)]
            }
            FamilySpec::ShiftedBlossom { r, shift } => vec![("r", r), ("shift", shift)],
            FamilySpec::GeneralSliced { r, rotation } => vec![("r", r), ("rotation", rotation)],
            FamilySpec::IsoscelesBall { gamma, r } => vec![("gamma", gamma), ("r", r)],
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let FamilySpec::Rounded { inner, lambda } = self {
            return write!(f, "rounded:inner={inner},lambda={lambda}");
        }
        f.write_str(self.key())?;
        for (i, (k, v)) in self.params().iter().enumerate() {
            write!(f, "{}{k}={v}", if i == 0 { ':' } else { ',' })?;
        }
        Ok(())
    }
}

impl serde::Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let s = s.trim();
        let syntax = |reason: &str| FamilyError::Syntax { spec: s.to_string(), reason: reason.to_string() };
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let name = name.to_ascii_lowercase();
        if name == "rounded" {
            let body = rest.strip_prefix("inner=").ok_or_else(|| syntax("expected `inner=`"))?;
            let (inner, lambda) =
                body.rsplit_once(",lambda=").ok_or_else(|| syntax("expected `,lambda=`"))?;
            let lambda: f64 = lambda.trim().parse().map_err(|_| syntax("lambda is not a number"))?;
            let spec = FamilySpec::Rounded { inner: Box::new(inner.parse()?), lambda };
            spec.validate()?;
            return Ok(spec);
        }
        let mut kv: Vec<(String, f64)> = Vec::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| syntax("expected key=value"))?;
            let v: f64 = v.trim().parse().map_err(|_| syntax("value is not a number"))?;
            kv.push((k.trim().to_ascii_lowercase(), v));
        }
        let mut take = |key: &str| -> Result<f64, FamilyError> {
            let i = kv
                .iter()
                .position(|(k, _)| k == key)
                .ok_or_else(|| syntax(&format!("missing parameter `{key}`")))?;
            Ok(kv.remove(i).1)
        };
        let vertex = Vertex::ALL.iter().find(|v| v.key() == name);
        let spec = if let Some(&v) = vertex {
            FamilySpec::Vertex(v)
        } else {
            match name.as_str() {
                "iso" => FamilySpec::Isosceles { gamma: take("gamma")? },
                "rect" => FamilySpec::RightTriangle { r: take("r")? },
                "reb" => FamilySpec::Blossom { r: take("r")? },
                "yamanouti" => FamilySpec::Yamanouti { r: take("r")? },
                "csb" => FamilySpec::ConcentricBoat { gamma: take("gamma")? },
                "rsb" => FamilySpec::RightBoat { r: take("r")? },
                "sboat" => FamilySpec::Boat { r: take("r")?, gamma: take("gamma")? },
                "beq" => FamilySpec::BentEquilateral { r: take("r")? },
                "slirt" => FamilySpec::SlicedReuleaux { r: take("r")? },
                "csrt" => FamilySpec::ConcentricSliced { gamma: take("gamma")? },
                "btrap" => FamilySpec::BentTrapezoid { gamma: take("gamma")? },
                "hood" => FamilySpec::Hood { gamma: take("gamma")? },
                "bpen" => FamilySpec::BentPentagon { r: take("r")?, gamma: take("gamma")? },
                "biso" => FamilySpec::BentIsosceles { r: take("r")?, gamma: take("gamma")? },
                "triangle" => FamilySpec::Triangle { r: take("r")?, diameter: take("d")? },
                "mix" => FamilySpec::CompletionMix { lambda: take("lambda")? },
                "ncreb" => FamilySpec::ShiftedBlossom { r: take("r")?, shift: take("shift")? },
                "gsliced" => FamilySpec::GeneralSliced { r: take("r")?, rotation: take("rotation")? },
                "isoball" => FamilySpec::IsoscelesBall { gamma: take("gamma")?, r: take("r")? },
                _ => return Err(FamilyError::Unknown(name)),
            }
        };
        if let Some((k, _)) = kv.first() {
            return Err(syntax(&format!("unexpected parameter `{k}`")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "iso:gamma=0.9",
            "bpen:r=0.7,gamma=1",
            "rounded:inner=reb:r=0.6,lambda=0.3",
            "rounded:inner=rounded:inner=sboat:r=0.55,gamma=1.2,lambda=0.5,lambda=0.25",
            "h",
            "triangle:r=0.45,d=1.9",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!("iso:gamma=2".parse::<FamilySpec>(), Err(FamilyError::OutOfRange { .. })));
        assert!(matches!("nope".parse::<FamilySpec>(), Err(FamilyError::Unknown(_))));
        assert!(matches!("iso:alpha=1".parse::<FamilySpec>(), Err(FamilyError::Syntax { .. })));
        assert!(matches!(
            "bpen:r=0.5,gamma=0.9".parse::<FamilySpec>(),
            Err(FamilyError::Predicate(_))
        ));
    }
}
