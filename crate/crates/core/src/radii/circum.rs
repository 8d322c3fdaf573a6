use super::CircumCertificate;
use crate::geometry::{wrap_angle, ArcPolygon, GeometryError, Piece, Point};
use crate::numeric::{best_hull_subset, min_enclosing_circle, nested_golden_min, quadratic_roots, solve2};

/// Boundary site for the farthest-distance function: a point or an arc.
#[derive(Clone, Copy, Debug)]
struct Site {
    center: Point,
    radius: f64,
    start: f64,
    sweep: f64,
}

impl Site {
    /// Farthest distance from `x` to the site and the attaining point.
    fn far(&self, x: Point) -> Option<(f64, Point)> {
        if self.radius == 0.0 {
            return Some((x.dist(self.center), self.center));
        }
        let d = self.center - x;
        let theta = if d.norm() == 0.0 { self.start } else { d.angle() };
        if wrap_angle(theta - self.start) <= self.sweep + 1e-12 {
            Some((d.norm() + self.radius, self.center + Point::polar(theta) * self.radius))
        } else {
            None
        }
    }
}

fn sites(pieces: &[Piece]) -> Vec<Site> {
    let mut out = Vec::new();
    for p in pieces {
        if p.radius == 0.0 {
            out.push(Site { center: p.center, radius: 0.0, start: 0.0, sweep: 0.0 });
        } else {
            out.push(Site { center: p.start_point(), radius: 0.0, start: 0.0, sweep: 0.0 });
            out.push(Site { center: p.end_point(), radius: 0.0, start: 0.0, sweep: 0.0 });
            out.push(Site { center: p.center, radius: p.radius, start: p.start, sweep: p.sweep });
        }
    }
    out
}

fn farthest(sites: &[Site], x: Point) -> f64 {
    sites.iter().filter_map(|s| s.far(x)).fold(0.0, |m, (d, _)| m.max(d))
}

/// Ball through two sites treated as disks (internal tangency).
fn pair_ball(a: &Site, b: &Site) -> Option<(Point, f64)> {
    let d = b.center - a.center;
    let l = d.norm();
    if l <= (a.radius - b.radius).abs() {
        return None;
    }
    let r = 0.5 * (l + a.radius + b.radius);
    Some((a.center + d * ((r - a.radius) / l), r))
}

/// Balls internally tangent to three disks.
fn triple_balls(s: [&Site; 3]) -> Vec<(Point, f64)> {
    let (c1, r1) = (s[0].center, s[0].radius);
    let mut m = [[0.0; 2]; 2];
    let mut k = [0.0; 2];
    let mut b = [0.0; 2];
    for i in 0..2 {
        let (ci, ri) = (s[i + 1].center, s[i + 1].radius);
        let dc = ci - c1;
        m[i] = [2.0 * dc.x, 2.0 * dc.y];
        k[i] = ci.norm2() - c1.norm2() - ri * ri + r1 * r1;
        b[i] = 2.0 * (ri - r1);
    }
    // x = x0 + R·x1 with M x = k − b R.
    let (Some(x0), Some(x1)) = (solve2(m, k), solve2(m, [-b[0], -b[1]])) else {
        return vec![];
    };
    let x0 = Point::new(x0[0], x0[1]);
    let x1 = Point::new(x1[0], x1[1]);
    let e = x0 - c1;
    let qa = x1.norm2() - 1.0;
    let qb = 2.0 * (e.dot(x1) + r1);
    let qc = e.norm2() - r1 * r1;
    quadratic_roots(qa, qb, qc)
        .into_iter()
        .filter(|&r| s.iter().all(|si| r >= si.radius - 1e-12))
        .map(|r| (x0 + x1 * r, r))
        .collect()
}

pub(super) fn circumball(
    body: &ArcPolygon,
) -> Result<(Point, f64, CircumCertificate), GeometryError> {
    let ps = body.pieces()?;
    let sites = sites(ps.pieces());
    let mut seed_pts: Vec<Point> = Vec::new();
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for s in &sites {
        let k = if s.radius == 0.0 { 1 } else { 16 };
        for j in 0..k {
            let p = if s.radius == 0.0 {
                s.center
            } else {
                s.center + Point::polar(s.start + s.sweep * j as f64 / (k - 1) as f64) * s.radius
            };
            seed_pts.push(p);
        }
        let ext = s.radius;
        lo = Point::new(lo.x.min(s.center.x - ext), lo.y.min(s.center.y - ext));
        hi = Point::new(hi.x.max(s.center.x + ext), hi.y.max(s.center.y + ext));
    }
    let scale = (hi - lo).norm().max(1e-300);
    let (c0, r0) = min_enclosing_circle(&seed_pts);
    let (mut center, mut radius) = if farthest(&sites, c0) <= r0 * (1.0 + 1e-15) + 1e-15 {
        (c0, farthest(&sites, c0))
    } else {
        let (x, v) = nested_golden_min(|x| farthest(&sites, x), lo, hi, 1e-13 * scale);
        (x, v)
    };
    // Polish on the near-active sites with closed-form tangency solves.
    let active: Vec<&Site> = sites
        .iter()
        .filter(|s| s.far(center).is_some_and(|(d, _)| d >= radius - 1e-6 * scale))
        .collect();
    if active.len() <= 24 {
        let mut best: Option<(Point, f64)> = None;
        let mut try_cand = |c: Point, r: f64| {
            if !(r.is_finite() && c.is_finite()) || farthest(&sites, c) > r + 1e-12 * scale {
                return;
            }
            if certificate(&sites, c, r, scale).1 < -1e-9 * scale {
                return;
            }
            if best.map_or(true, |(_, br)| r < br) {
                best = Some((c, r));
            }
        };
        for i in 0..active.len() {
            if active[i].radius > 0.0 && active[i].sweep >= std::f64::consts::PI {
                try_cand(active[i].center, active[i].radius);
            }
            for j in i + 1..active.len() {
                if let Some((c, r)) = pair_ball(active[i], active[j]) {
                    try_cand(c, r);
                }
                for k in j + 1..active.len() {
                    for (c, r) in triple_balls([active[i], active[j], active[k]]) {
                        try_cand(c, r);
                    }
                }
            }
        }
        if let Some((c, r)) = best {
            if r <= radius + 1e-9 * scale {
                center = c;
                radius = farthest(&sites, c);
            }
        }
    }
    let (points, margin) = certificate(&sites, center, radius, scale);
    Ok((center, radius, CircumCertificate { touching_points: points, hull_margin: margin }))
}

/// Touching points (2–3) whose hull contains the center best, with the depth margin.
fn certificate(sites: &[Site], c: Point, r: f64, scale: f64) -> (Vec<Point>, f64) {
    let tol = 1e-7 * scale;
    let mut touch: Vec<Point> = Vec::new();
    for s in sites {
        if s.radius > 0.0 && s.center.dist(c) <= tol && (s.radius - r).abs() <= tol {
            let fracs: &[f64] = if s.sweep >= std::f64::consts::TAU - 1e-9 {
                &[0.0, 0.5]
            } else {
                &[0.0, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0]
            };
            for t in fracs {
                touch.push(s.center + Point::polar(s.start + s.sweep * t) * s.radius);
            }
        } else if let Some((d, p)) = s.far(c) {
            if d >= r - tol {
                touch.push(p);
            }
        }
    }
    touch.dedup_by(|a, b| a.dist(*b) <= 1e-12);
    if touch.len() > 40 {
        touch.truncate(40);
    }
    let dirs: Vec<Point> = touch.iter().map(|&p| p - c).collect();
    match best_hull_subset(&dirs) {
        Some((idx, depth)) => (idx.iter().map(|&i| touch[i]).collect(), depth),
        None => (touch, f64::NEG_INFINITY),
    }
}
