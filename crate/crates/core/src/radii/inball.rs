use super::InCertificate;
use crate::geometry::{wrap_angle, ArcPolygon, GeometryError, Point, UnitDir};
use crate::numeric::{best_hull_subset, nested_golden_min, quadratic_roots, solve2, solve3};

/// Inward constraint of the inscribed-ball problem.
#[derive(Clone, Copy, Debug)]
enum Con {
    /// Supporting line `normal·x ≤ h`.
    Line { normal: Point, h: f64 },
    /// Arc of a circle; the ball must fit inside it where its normals are.
    Arc { center: Point, radius: f64, start: f64, sweep: f64 },
}

impl Con {
    /// Largest radius of a ball at `x` allowed by this constraint.
    fn slack(&self, x: Point) -> f64 {
        match *self {
            Con::Line { normal, h } => h - normal.dot(x),
            Con::Arc { center, radius, start, sweep } => {
                let d = x - center;
                let reach = if d.norm() == 0.0 {
                    0.0
                } else if wrap_angle(d.angle() - start) <= sweep {
                    d.norm()
                } else {
                    d.dot(Point::polar(start)).max(d.dot(Point::polar(start + sweep)))
                };
                radius - reach
            }
        }
    }
}

fn constraints(body: &ArcPolygon) -> Result<Vec<Con>, GeometryError> {
    let ps = body.pieces()?;
    let mut out = Vec::new();
    for p in ps.pieces() {
        let n = Point::polar(p.start);
        out.push(Con::Line { normal: n, h: p.support(n) });
        if p.radius > 0.0 {
            out.push(Con::Arc { center: p.center, radius: p.radius, start: p.start, sweep: p.sweep });
        }
    }
    Ok(out)
}

fn depth_fn(cons: &[Con], x: Point) -> f64 {
    cons.iter().fold(f64::INFINITY, |m, c| m.min(c.slack(x)))
}

/// Exact solve of "ball tangent to three constraints".
fn tangent_solutions(set: [&Con; 3]) -> Vec<(Point, f64)> {
    // Linear rows a·x + b·r = d and at most one leftover circle.
    let mut rows: Vec<([f64; 2], f64, f64)> = Vec::new();
    let circles: Vec<(Point, f64)> = set
        .iter()
        .filter_map(|c| match **c {
            Con::Arc { center, radius, .. } => Some((center, radius)),
            _ => None,
        })
        .collect();
    for c in set {
        if let Con::Line { normal, h } = *c {
            rows.push(([normal.x, normal.y], 1.0, h));
        }
    }
    if circles.is_empty() {
        let m = [
            [rows[0].0[0], rows[0].0[1], 1.0],
            [rows[1].0[0], rows[1].0[1], 1.0],
            [rows[2].0[0], rows[2].0[1], 1.0],
        ];
        return solve3(m, [rows[0].2, rows[1].2, rows[2].2])
            .map(|s| vec![(Point::new(s[0], s[1]), s[2])])
            .unwrap_or_default();
    }
    // |x − c_i| = ρ_i − r; differences are linear in (x, r).
    let (c1, r1) = circles[0];
    for &(ci, ri) in &circles[1..] {
        let dc = ci - c1;
        rows.push((
            [2.0 * dc.x, 2.0 * dc.y],
            -2.0 * (ri - r1),
            ci.norm2() - c1.norm2() - ri * ri + r1 * r1,
        ));
    }
    let m = [rows[0].0, rows[1].0];
    let (Some(x0), Some(x1)) =
        (solve2(m, [rows[0].2, rows[1].2]), solve2(m, [-rows[0].1, -rows[1].1]))
    else {
        return vec![];
    };
    let x0 = Point::new(x0[0], x0[1]);
    let x1 = Point::new(x1[0], x1[1]);
    let e = x0 - c1;
    quadratic_roots(x1.norm2() - 1.0, 2.0 * (e.dot(x1) + r1), e.norm2() - r1 * r1)
        .into_iter()
        .filter(|&r| r >= 0.0 && circles.iter().all(|&(_, ri)| r <= ri + 1e-12))
        .map(|r| (x0 + x1 * r, r))
        .collect()
}

/// Exact solve of "ball pinched between two constraints with opposite normals".
///
/// Parallel lines leave the center free along the midline; `near` picks the point closest to it.
fn pinched_solution(a: &Con, b: &Con, near: Point) -> Option<(Point, f64)> {
    match (*a, *b) {
        (Con::Line { normal: n1, h: h1 }, Con::Line { normal: n2, h: h2 }) => {
            if n1.dot(n2) > -1.0 + 1e-12 {
                return None;
            }
            let r = 0.5 * (h1 + h2);
            Some((near + n1 * (h1 - r - n1.dot(near)), r))
        }
        (Con::Line { normal, h }, Con::Arc { center, radius, .. })
        | (Con::Arc { center, radius, .. }, Con::Line { normal, h }) => {
            let r = 0.5 * (h - normal.dot(center) + radius);
            Some((center - normal * (radius - r), r))
        }
        (Con::Arc { center: c1, radius: r1, .. }, Con::Arc { center: c2, radius: r2, .. }) => {
            let gap = c2 - c1;
            let len = gap.norm();
            if len == 0.0 {
                return None;
            }
            let u = gap * (1.0 / len);
            let r = 0.5 * (r1 + r2 - len);
            Some((c1 + u * (r1 - r), r))
        }
    }
}

/// Touching normals and points of the ball `(x, r)`.
fn touches(cons: &[Con], x: Point, r: f64, tol: f64) -> Vec<(Point, Point)> {
    let mut out: Vec<(Point, Point)> = Vec::new();
    for c in cons {
        if c.slack(x) > r + tol {
            continue;
        }
        match *c {
            Con::Line { normal, .. } => out.push((normal, x + normal * r)),
            Con::Arc { center, radius, start, sweep } => {
                let d = x - center;
                if d.norm() <= tol {
                    let k = if sweep >= std::f64::consts::PI * 2.0 - 1e-9 { 3 } else { 4 };
                    for j in 0..k {
                        let t = start + sweep * j as f64 / 3.0;
                        let n = Point::polar(t);
                        out.push((n, center + n * radius));
                    }
                } else if wrap_angle(d.angle() - start) <= sweep + 1e-9 {
                    let n = d.normalized();
                    out.push((n, center + n * radius));
                }
            }
        }
    }
    let mut uniq: Vec<(Point, Point)> = Vec::new();
    for t in out {
        if uniq.iter().all(|u| u.0.dist(t.0) > 1e-12) {
            uniq.push(t);
        }
    }
    uniq.truncate(40);
    uniq
}

fn certificate(cons: &[Con], x: Point, r: f64, tol: f64) -> InCertificate {
    let t = touches(cons, x, r, tol);
    let normals: Vec<Point> = t.iter().map(|p| p.0).collect();
    match best_hull_subset(&normals) {
        Some((idx, depth)) => InCertificate {
            touching_normals: idx.iter().map(|&i| UnitDir::from_vec(t[i].0)).collect(),
            touch_points: idx.iter().map(|&i| t[i].1).collect(),
            hull_margin: depth,
        },
        None => InCertificate {
            touching_normals: normals.iter().map(|&n| UnitDir::from_vec(n)).collect(),
            touch_points: t.iter().map(|p| p.1).collect(),
            hull_margin: f64::NEG_INFINITY,
        },
    }
}

pub(super) fn inball(
    body: &ArcPolygon,
) -> Result<(Point, f64, Option<InCertificate>), GeometryError> {
    let cons = constraints(body)?;
    let verts = body.polyline(0.2);
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in &verts {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let scale = (hi - lo).norm().max(1e-300);
    if body.is_degenerate() {
        return Ok((lo.lerp(hi, 0.5), 0.0, None));
    }
    let (mut x, neg) = nested_golden_min(|p| -depth_fn(&cons, p), lo, hi, 1e-13 * scale);
    let mut r = -neg;
    let active: Vec<&Con> = cons.iter().filter(|c| c.slack(x) <= r + 1e-6 * scale).collect();
    if active.len() <= 24 {
        let mut best: Option<(Point, f64, f64)> = None;
        for i in 0..active.len() {
            for j in i + 1..active.len() {
                for k in j + 1..active.len() {
                    for (c, rr) in tangent_solutions([active[i], active[j], active[k]]) {
                        if !c.is_finite() || depth_fn(&cons, c) < rr - 1e-12 * scale {
                            continue;
                        }
                        let cert = certificate(&cons, c, rr, 1e-10 * scale);
                        if cert.hull_margin < -1e-9 {
                            continue;
                        }
                        if best.map_or(true, |b| rr > b.1) {
                            best = Some((c, rr, cert.hull_margin));
                        }
                    }
                }
            }
        }
        for i in 0..active.len() {
            for j in i + 1..active.len() {
                let Some((c, rr)) = pinched_solution(active[i], active[j], x) else { continue };
                if !c.is_finite() || rr < 0.0 || depth_fn(&cons, c) < rr - 1e-12 * scale {
                    continue;
                }
                let cert = certificate(&cons, c, rr, 1e-10 * scale);
                if cert.hull_margin < -1e-9 {
                    continue;
                }
                if best.map_or(true, |b| rr > b.1) {
                    best = Some((c, rr, cert.hull_margin));
                }
            }
        }
        if let Some((c, rr, _)) = best {
            if rr >= r - 1e-9 * scale {
                x = c;
                r = depth_fn(&cons, c);
            }
        }
    }
    let cert = certificate(&cons, x, r, 1e-7 * scale);
    Ok((x, r, Some(cert)))
}
