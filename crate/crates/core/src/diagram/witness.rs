use super::ineq::Ineq;
use super::{f_map, DiagramError, DiagramPoint, MEMBER_TOL};
use crate::families::constants::*;
use crate::families::{boat_r_range, construct, iso_ball_r_range, triangle_r_range, vertex_table, FamilySpec};
use crate::geometry::ArcPolygon;
use crate::radii::width;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

const RAY_STEPS: usize = 80;

fn point_on_ray(target: &DiagramPoint, s: f64) -> DiagramPoint {
    DiagramPoint::BALL.lerp(target, s)
}

/// Largest ray parameter keeping all coordinates nonnegative.
fn ray_limit(target: &DiagramPoint) -> f64 {
    target
        .as_array()
        .iter()
        .filter(|&&t| t < 1.0)
        .map(|&t| 1.0 / (1.0 - t))
        .fold(f64::INFINITY, f64::min)
}

fn curved_min(p: &DiagramPoint) -> f64 {
    p.slacks().slacks.min_over(&Ineq::CURVED)
}

/// Ray parameter where the segment from the ball through `target` leaves the diagram.
fn exit_parameter(target: &DiagramPoint) -> f64 {
    let s_max = ray_limit(target);
    if !s_max.is_finite() {
        return 1.0;
    }
    if curved_min(&point_on_ray(target, s_max)) >= 0.0 {
        return s_max;
    }
    let (mut lo, mut hi) = (1.0, s_max);
    for _ in 0..RAY_STEPS {
        let mid = 0.5 * (lo + hi);
        if curved_min(&point_on_ray(target, mid)) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

fn clamp_range(x: f64, (lo, hi): (f64, f64)) -> f64 {
    x.clamp(lo, hi.max(lo))
}

/// Bisection on a monotone scalar map over `[0, 1]`.
fn invert_monotone(f: impl Fn(f64) -> Option<f64>, goal: f64) -> Option<f64> {
    let (f0, f1) = (f(0.0)?, f(1.0)?);
    let increasing = f1 >= f0;
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        let v = f(mid)?;
        if (v < goal) == increasing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

fn spec_width(spec: &FamilySpec) -> Option<f64> {
    width(&construct(spec).ok()?).ok().map(|(w, _)| w)
}

/// Member of the ib₃ facet families with inradius `r` and width `w`.
fn ib3_chart(r: f64, w: f64) -> Option<FamilySpec> {
    let r = r.clamp(0.5, r_reuleaux());
    let blossom = |shift| FamilySpec::ShiftedBlossom { r, shift };
    if r <= r_flattened() || w >= spec_width(&blossom(1.0))? {
        let shift = invert_monotone(|t| spec_width(&blossom(t)), w)?;
        return Some(blossom(shift));
    }
    let r = r.max(r_flattened());
    let sliced = |rotation| FamilySpec::GeneralSliced { r, rotation };
    let rotation = invert_monotone(|t| spec_width(&sliced(t)), w)?;
    Some(sliced(rotation))
}

/// Family member on the facet of `ineq` through `p`, if the facet's chart covers it.
fn chart(ineq: Ineq, p: &DiagramPoint) -> Option<FamilySpec> {
    let (x, z) = (p.x, p.z);
    match ineq {
        Ineq::Ub3 => {
            let d = (2.0 * z).clamp(sqrt3(), 2.0);
            Some(FamilySpec::Triangle { r: clamp_range(x, triangle_r_range(d)), diameter: d })
        }
        Ineq::Ub2 => {
            let gamma = z.min(1.0).asin().clamp(FRAC_PI_3, FRAC_PI_2);
            Some(FamilySpec::Boat { r: clamp_range(x, boat_r_range(gamma)), gamma })
        }
        Ineq::Lb2 => {
            let gamma = (2.0 * z.min(1.0).acos()).clamp(0.0, FRAC_PI_3);
            Some(FamilySpec::IsoscelesBall { gamma, r: clamp_range(x, iso_ball_r_range(gamma)) })
        }
        Ineq::Lb3 => {
            let gamma = (2.0 * z.min(1.0).acos()).clamp(0.0, FRAC_PI_3);
            Some(FamilySpec::BentPentagon { r: x, gamma })
        }
        Ineq::Ib3 => ib3_chart(x, 2.0 * p.y),
        _ => None,
    }
}

/// Builds a body `K` with `|f(K) − target|∞ ≤ tol`.
///
/// Walks the ray from the ball through `target` to the boundary, realizes the exit point on a
/// facet family, then blends that body back towards the ball.
pub fn synthesize_witness(target: &DiagramPoint, tol: f64) -> Result<ArcPolygon, DiagramError> {
    let report = target.slacks();
    let violated = report.slacks.violated(MEMBER_TOL);
    if !violated.is_empty() || target.as_array().iter().any(|&c| !(0.0..=1.0).contains(&c)) {
        return Err(DiagramError::NonMember(*target, violated));
    }
    for row in vertex_table() {
        if row.point.dist_inf(target) <= 1e-12 {
            return Ok(construct(&FamilySpec::Vertex(row.vertex))?);
        }
    }

    let s = exit_parameter(target);
    let exit = point_on_ray(target, s);
    let lambda = lerp(1.0, 0.0, 1.0 / s).clamp(0.0, 1.0);
    let slacks = exit.slacks().slacks;
    let mut order: Vec<Ineq> = Ineq::CURVED.to_vec();
    order.sort_by(|a, b| slacks.get(*a).abs().total_cmp(&slacks.get(*b).abs()));

    let mut best: Option<(f64, String)> = None;
    for ineq in order {
        let Some(spec) = chart(ineq, &exit) else { continue };
        if spec.validate().is_err() {
            continue;
        }
        let candidate = if lambda > 0.0 {
            FamilySpec::Rounded { inner: Box::new(spec.clone()), lambda }
        } else {
            spec.clone()
        };
        let Ok(body) = construct(&candidate) else { continue };
        let Ok(p) = f_map(&body) else { continue };
        let err = p.dist_inf(target);
        if err <= tol {
            return Ok(body);
        }
        if best.as_ref().map_or(true, |(e, _)| err < *e) {
            best = Some((err, format!("{candidate} misses by {err:e}")));
        }
    }

    if slacks.get(Ineq::Ub1).abs() <= 1e-9 || slacks.get(Ineq::Ib2).abs() <= 1e-9 {
        return Err(DiagramError::Unsupported(
            *target,
            "the boundary point lies where only completion interpolants are known".into(),
        ));
    }
    let msg = best.map_or_else(|| "no facet chart applies at the exit point".to_string(), |(_, m)| m);
    Err(DiagramError::ChartFailure(*target, msg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(target: DiagramPoint) {
        let body = synthesize_witness(&target, 1e-6).unwrap_or_else(|e| panic!("{target:?}: {e}"));
        let p = f_map(&body).unwrap();
        assert!(p.dist_inf(&target) <= 1e-6, "{target:?} -> {p:?}");
    }

    #[test]
    fn ball_and_vertices() {
        check(DiagramPoint::BALL);
        for row in vertex_table() {
            check(row.point);
        }
    }

    #[test]
    fn midpoint_towards_bent_trapezoid() {
        let bt = vertex_table().into_iter().find(|r| r.vertex.symbol() == "BT").unwrap().point;
        check(DiagramPoint::BALL.lerp(&bt, 0.5));
    }

    #[test]
    fn interior_points() {
        check(DiagramPoint::new(0.6, 0.75, 0.95));
        check(DiagramPoint::new(0.55, 0.74, 0.9));
        for row in vertex_table() {
            for t in [0.2, 0.6, 0.95] {
                check(DiagramPoint::BALL.lerp(&row.point, t));
            }
        }
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(
            synthesize_witness(&DiagramPoint::new(0.9, 0.9, 0.9), 1e-6),
            Err(DiagramError::NonMember(..))
        ));
    }
}
