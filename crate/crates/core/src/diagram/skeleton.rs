use super::ineq::Ineq;
use super::DiagramPoint;
use crate::families::constants::*;
use crate::families::{construct, min_max_companions, vertex_table, FamilyError, FamilySpec, Sign, Vertex};
use crate::geometry::ArcPolygon;
use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LabelKind {
    Interior,
    Facet(String),
    Edge(String),
    Vertex(String),
    Outside,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkeletonLabel {
    pub kind: LabelKind,
    pub tight_set: Vec<Ineq>,
    /// Inequalities violated beyond the tolerance (only for `Outside`).
    pub violated: Vec<Ineq>,
}

impl fmt::Display for SkeletonLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            LabelKind::Interior => f.write_str("interior"),
            LabelKind::Facet(n) => write!(f, "facet:{n}"),
            LabelKind::Edge(n) => write!(f, "edge:{n}"),
            LabelKind::Vertex(n) => write!(f, "vertex:{n}"),
            LabelKind::Outside => f.write_str("outside"),
        }
    }
}

/// One edge of the skeleton: the curve where exactly two inequalities are tight.
#[derive(Clone, Copy, Debug)]
pub struct EdgeInfo {
    pub ends: (Vertex, Vertex),
    pub tight: [Ineq; 2],
    chart: fn(f64) -> FamilySpec,
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

fn rounded(inner: FamilySpec, lambda: f64) -> FamilySpec {
    FamilySpec::Rounded { inner: Box::new(inner), lambda }
}

/// Apex angle of the bent pentagon on the lb₁ ∩ lb₃ edge at inradius `r`.
pub(crate) fn lb1_edge_gamma(r: f64) -> f64 {
    if r <= r_bent_trapezoid() + 1e-13 {
        return gamma_bent_trapezoid();
    }
    if r >= r_hood() - 1e-13 {
        return gamma_hood();
    }
    gamma_lb1_edge(r).unwrap_or(gamma_bent_trapezoid())
}

impl EdgeInfo {
    pub fn name(&self) -> String {
        format!("{}–{}", self.ends.0.symbol(), self.ends.1.symbol())
    }

    /// Family member at `t ∈ [0, 1]`, running from the first to the second endpoint.
    pub fn family(&self, t: f64) -> FamilySpec {
        (self.chart)(t.clamp(0.0, 1.0))
    }

    /// The body the family must reproduce at endpoint `i` (0 or 1).
    pub fn endpoint_body(&self, i: usize) -> Result<ArcPolygon, FamilyError> {
        let v = if i == 0 { self.ends.0 } else { self.ends.1 };
        // The bent equilateral family ends in the minimal body of the flattened vertex.
        if v == Vertex::FlattenedReuleauxTriangle && self.ends.0 == Vertex::EquilateralTriangle {
            let c = min_max_companions(&FamilySpec::Vertex(v))?;
            if let Some(min) = c.min {
                return Ok(min);
            }
        }
        construct(&FamilySpec::Vertex(v))
    }
}

pub fn edge_table() -> Vec<EdgeInfo> {
    use Ineq::*;
    use Vertex::*;
    let e = |a, b, tight, chart| EdgeInfo { ends: (a, b), tight, chart };
    vec![
        e(ReuleauxTriangle, Ball, [Ub1, Ib2], |t| rounded(FamilySpec::Vertex(ReuleauxTriangle), t)),
        e(LineSegment, Ball, [Lb1, Ib1], |t| rounded(FamilySpec::Vertex(LineSegment), t)),
        e(SailingBoat, Ball, [Ib1, Ub1], |t| rounded(FamilySpec::Vertex(SailingBoat), t)),
        e(Hood, Ball, [Lb1, Ib2], |t| rounded(FamilySpec::Vertex(Hood), t)),
        e(LineSegment, EquilateralTriangle, [Lb2, Ub3], |t| FamilySpec::Isosceles { gamma: t * FRAC_PI_3 }),
        e(EquilateralTriangle, RightAngledTriangle, [Ub2, Ub3], |t| FamilySpec::Isosceles {
            gamma: FRAC_PI_3 + t * FRAC_PI_6,
        }),
        e(LineSegment, RightAngledTriangle, [Ib1, Ub3], |t| FamilySpec::RightTriangle {
            r: t * (2f64.sqrt() - 1.0),
        }),
        e(EquilateralTriangle, ReuleauxTriangle, [Ib3, Ub1], |t| FamilySpec::Blossom {
            r: lerp(0.5, r_reuleaux(), t),
        }),
        e(EquilateralTriangle, SailingBoat, [Ub1, Ub2], |t| FamilySpec::ConcentricBoat {
            gamma: lerp(FRAC_PI_3, FRAC_PI_2, t),
        }),
        e(RightAngledTriangle, SailingBoat, [Ib1, Ub2], |t| FamilySpec::RightBoat {
            r: lerp(2f64.sqrt() - 1.0, FRAC_1_SQRT_2, t),
        }),
        e(EquilateralTriangle, FlattenedReuleauxTriangle, [Lb2, Ib3], |t| FamilySpec::BentEquilateral {
            r: lerp(0.5, r_flattened(), t),
        }),
        e(FlattenedReuleauxTriangle, SlicedReuleauxTriangle, [Lb3, Ib3], |t| FamilySpec::SlicedReuleaux {
            r: lerp(r_flattened(), r_reuleaux(), t),
        }),
        e(SlicedReuleauxTriangle, ReuleauxTriangle, [Ib2, Ib3], |t| FamilySpec::ConcentricSliced {
            gamma: lerp(gamma_csrt_min(), FRAC_PI_6, t),
        }),
        e(LineSegment, BentTrapezoid, [Lb1, Lb2], |t| FamilySpec::BentTrapezoid {
            gamma: t * gamma_bent_trapezoid(),
        }),
        e(BentTrapezoid, FlattenedReuleauxTriangle, [Lb2, Lb3], |t| FamilySpec::BentTrapezoid {
            gamma: lerp(gamma_bent_trapezoid(), FRAC_PI_3, t),
        }),
        e(SlicedReuleauxTriangle, Hood, [Lb3, Ib2], |t| FamilySpec::Hood { gamma: lerp(FRAC_PI_3, gamma_hood(), t) }),
        e(BentTrapezoid, Hood, [Lb1, Lb3], |t| {
            let r = lerp(r_bent_trapezoid(), r_hood(), t);
            FamilySpec::BentPentagon { r, gamma: lb1_edge_gamma(r) }
        }),
    ]
}

fn vertex_pattern(signs: &[Sign; 9]) -> Vec<Ineq> {
    Ineq::ALL.into_iter().zip(signs).filter(|(_, s)| **s != Sign::Slack).map(|(i, _)| i).collect()
}

/// Locates `p` on the skeleton: tight inequalities are those with `|slack| ≤ tol`.
pub fn classify(p: &DiagramPoint, tol: f64) -> SkeletonLabel {
    let slacks = p.slacks().slacks;
    let violated = slacks.violated(tol);
    let tight_set = slacks.tight(tol);
    let label = |kind| SkeletonLabel { kind, tight_set: tight_set.clone(), violated: violated.clone() };
    if !violated.is_empty() {
        return label(LabelKind::Outside);
    }
    let edge_name = |set: &[Ineq]| {
        edge_table().into_iter().find(|e| set.len() == 2 && e.tight.iter().all(|i| set.contains(i))).map(|e| e.name())
    };
    match tight_set.len() {
        0 => label(LabelKind::Interior),
        1 => label(LabelKind::Facet(tight_set[0].name().to_string())),
        2 => {
            let name = edge_name(&tight_set)
                .unwrap_or_else(|| format!("{}+{}", tight_set[0].name(), tight_set[1].name()));
            label(LabelKind::Edge(name))
        }
        _ => {
            let best = vertex_table()
                .into_iter()
                .map(|row| (row.vertex, vertex_pattern(&row.signs)))
                .filter(|(_, pat)| pat.len() >= 3 && pat.iter().all(|i| tight_set.contains(i)))
                .max_by_key(|(_, pat)| pat.len());
            if let Some((v, _)) = best {
                return label(LabelKind::Vertex(v.name().to_string()));
            }
            // ub₂ and ub₃ may be tight together as a joint pair along an edge.
            let reduced: Vec<Ineq> = tight_set.iter().copied().filter(|&i| i != Ineq::Ub2).collect();
            if let Some(name) = edge_name(&reduced) {
                return label(LabelKind::Edge(name));
            }
            let names: Vec<&str> = tight_set.iter().map(|i| i.name()).collect();
            label(LabelKind::Vertex(names.join("+")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::f_map;

    #[test]
    fn vertices_classify_by_name() {
        for row in vertex_table() {
            let l = classify(&row.point, 1e-9);
            assert_eq!(l.kind, LabelKind::Vertex(row.vertex.name().into()), "{l:?}");
        }
    }

    #[test]
    fn edge_members_classify_as_their_edge() {
        for e in edge_table() {
            for t in [0.3, 0.7] {
                let spec = e.family(t);
                let p = f_map(&construct(&spec).unwrap()).unwrap();
                let l = classify(&p, 1e-7);
                assert_eq!(l.kind, LabelKind::Edge(e.name()), "{spec}: {p:?} {l:?}");
            }
        }
    }

    #[test]
    fn edge_endpoints_match_vertices() {
        for e in edge_table() {
            for (i, t) in [(0, 0.0), (1, 1.0)] {
                let a = f_map(&construct(&e.family(t)).unwrap()).unwrap();
                let b = f_map(&e.endpoint_body(i).unwrap()).unwrap();
                assert!(a.dist_inf(&b) < 1e-7, "{} end {i}: {a:?} vs {b:?}", e.name());
            }
        }
    }

    #[test]
    fn interior_and_outside() {
        assert_eq!(classify(&DiagramPoint::new(0.9, 0.9, 0.9), 1e-6).kind, LabelKind::Outside);
        let l = classify(&DiagramPoint::new(0.6, 0.75, 0.95), 1e-6);
        assert_eq!(l.kind, LabelKind::Interior, "{l:?}");
    }
}
