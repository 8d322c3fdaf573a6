use crate::geometry::{wrap_angle, ArcPolygon, GeometryError, Point, UnitDir};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug)]
struct Extreme {
    value: f64,
    theta: f64,
}

/// Minimum and maximum breadth by exact enumeration over the breadth pieces.
fn breadth_extremes(body: &ArcPolygon) -> Result<(Extreme, Extreme), GeometryError> {
    let ps = body.pieces()?;
    let mut breaks: Vec<f64> = ps.breakpoints().map(|a| a.rem_euclid(PI)).collect();
    breaks.sort_by(f64::total_cmp);
    breaks.dedup_by(|a, b| (*a - *b).abs() <= 1e-14);
    let n = breaks.len();
    let mut lo = Extreme { value: f64::INFINITY, theta: 0.0 };
    let mut hi = Extreme { value: f64::NEG_INFINITY, theta: 0.0 };
    for i in 0..n {
        let s = breaks[i];
        let e = if i + 1 < n { breaks[i + 1] } else { breaks[0] + PI };
        let m = 0.5 * (s + e);
        let p = ps.piece_at(m);
        let q = ps.piece_at(m + PI);
        let a = p.center - q.center;
        let k = p.radius + q.radius;
        let value = |t: f64| a.dot(Point::polar(t)) + k;
        let mut cands = vec![s, e];
        if a.norm() > 0.0 {
            let phi = a.angle();
            for c in [phi, phi + PI] {
                let off = wrap_angle(c - s);
                if off <= e - s {
                    cands.push(s + off);
                }
            }
        }
        for t in cands {
            let v = value(t);
            if v < lo.value {
                lo = Extreme { value: v, theta: t };
            }
            if v > hi.value {
                hi = Extreme { value: v, theta: t };
            }
        }
    }
    Ok((lo, hi))
}

/// Minimal breadth and a direction attaining it.
pub fn width(body: &ArcPolygon) -> Result<(f64, UnitDir), GeometryError> {
    let (lo, _) = breadth_extremes(body)?;
    Ok((lo.value.max(0.0), UnitDir::new(lo.theta)))
}

/// Maximal breadth and a pair of boundary points at that distance.
pub fn diameter(body: &ArcPolygon) -> Result<(f64, (Point, Point)), GeometryError> {
    let (_, hi) = breadth_extremes(body)?;
    let ps = body.pieces()?;
    let p = ps.piece_at(hi.theta).point(hi.theta);
    let q = ps.piece_at(hi.theta + PI).point(hi.theta + PI);
    Ok((hi.value, (p, q)))
}
