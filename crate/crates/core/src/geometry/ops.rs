use super::body::{merge_pieces, ArcPolygon, BoundaryElement, Piece, PieceSet};
use super::point::{wrap_angle, Disk, HalfPlane, Point, TWO_PI};
use super::GeometryError;

/// Sorted, deduplicated angles in `[0, 2π)`.
fn sorted_breaks(mut angles: Vec<f64>) -> Vec<f64> {
    for a in &mut angles {
        *a = wrap_angle(*a);
    }
    angles.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(angles.len());
    for a in angles {
        if out.last().map_or(true, |&l| a - l > 1e-13) {
            out.push(a);
        }
    }
    if out.len() > 1 && out[0] + TWO_PI - out[out.len() - 1] <= 1e-13 {
        out.pop();
    }
    if out.is_empty() {
        out.push(0.0);
    }
    out
}

/// Consecutive intervals `(start, sweep)` covering the circle.
fn intervals(breaks: &[f64]) -> impl Iterator<Item = (f64, f64)> + '_ {
    let n = breaks.len();
    (0..n).map(move |i| {
        let s = breaks[i];
        let e = if i + 1 < n { breaks[i + 1] } else { breaks[0] + TWO_PI };
        (s, if n == 1 { TWO_PI } else { e - s })
    })
}

/// Minkowski sum via a merge of the two normal-interval decompositions.
pub fn minkowski_sum(a: &ArcPolygon, b: &ArcPolygon) -> Result<ArcPolygon, GeometryError> {
    let pa = a.pieces()?;
    let pb = b.pieces()?;
    let breaks = sorted_breaks(pa.breakpoints().chain(pb.breakpoints()).collect());
    let pieces: Vec<Piece> = intervals(&breaks)
        .map(|(s, sw)| {
            let m = s + 0.5 * sw;
            let x = pa.piece_at(m);
            let y = pb.piece_at(m);
            Piece { center: x.center + y.center, radius: x.radius + y.radius, start: s, sweep: sw }
        })
        .collect();
    ArcPolygon::from_pieces(&pieces)
}

/// `λK + μL`, the building block of the rounded and mixed families.
pub fn combination(
    a: &ArcPolygon,
    lambda: f64,
    b: &ArcPolygon,
    mu: f64,
) -> Result<ArcPolygon, GeometryError> {
    if lambda <= 0.0 {
        return b.scale(mu, Point::ORIGIN);
    }
    if mu <= 0.0 {
        return a.scale(lambda, Point::ORIGIN);
    }
    minkowski_sum(&a.scale(lambda, Point::ORIGIN)?, &b.scale(mu, Point::ORIGIN)?)
}

/// Convex hull of several bodies, as the upper envelope of their support functions.
pub fn hull_piece_sets(sets: &[PieceSet]) -> Result<ArcPolygon, GeometryError> {
    if sets.is_empty() {
        return Err(GeometryError::Coincident);
    }
    let mut angles: Vec<f64> = sets.iter().flat_map(|s| s.breakpoints()).collect();
    let base = sorted_breaks(angles.clone());
    for (s, sw) in intervals(&base) {
        let m = s + 0.5 * sw;
        let local: Vec<&Piece> = sets.iter().map(|ps| ps.piece_at(m)).collect();
        for i in 0..local.len() {
            for j in i + 1..local.len() {
                let a = local[i].center - local[j].center;
                let k = local[i].radius - local[j].radius;
                let amp = a.norm();
                if amp < 1e-15 || k.abs() > amp {
                    continue;
                }
                let alpha = a.angle();
                let beta = (-k / amp).clamp(-1.0, 1.0).acos();
                for z in [alpha + beta, alpha - beta] {
                    let off = wrap_angle(z - s);
                    if off > 1e-13 && off < sw - 1e-13 {
                        angles.push(s + off);
                    }
                }
            }
        }
    }
    let breaks = sorted_breaks(angles);
    let pieces: Vec<Piece> = intervals(&breaks)
        .map(|(s, sw)| {
            let m = s + 0.5 * sw;
            let u = Point::polar(m);
            let best = sets
                .iter()
                .map(|ps| *ps.piece_at(m))
                .max_by(|x, y| x.support(u).total_cmp(&y.support(u)))
                .unwrap();
            Piece { start: s, sweep: sw, ..best }
        })
        .collect();
    ArcPolygon::from_pieces(&merge_pieces(&pieces))
}

pub fn hull_bodies(bodies: &[&ArcPolygon]) -> Result<ArcPolygon, GeometryError> {
    let sets = bodies.iter().map(|b| b.pieces().cloned()).collect::<Result<Vec<_>, _>>()?;
    hull_piece_sets(&sets)
}

/// Convex hull of points and disks.
pub fn hull_points_disks(points: &[Point], disks: &[Disk]) -> Result<ArcPolygon, GeometryError> {
    let mut sets: Vec<PieceSet> = points.iter().map(|&p| PieceSet::full(p, 0.0)).collect();
    sets.extend(disks.iter().map(|d| PieceSet::full(d.center, d.radius)));
    if sets.is_empty() {
        return Err(GeometryError::Coincident);
    }
    let first = sets[0].pieces()[0];
    if sets.iter().all(|s| {
        let p = s.pieces()[0];
        p.radius <= 1e-15 && p.center.dist(first.center) <= 1e-12
    }) {
        return Err(GeometryError::Coincident);
    }
    hull_piece_sets(&sets)
}

#[derive(Clone, Copy, Debug)]
enum Constraint {
    Disk(Disk),
    Half(HalfPlane),
}

impl Constraint {
    fn residual(&self, p: Point) -> f64 {
        match self {
            Constraint::Disk(d) => d.residual(p),
            Constraint::Half(h) => h.residual(p),
        }
    }
}

fn line_line(a: &HalfPlane, b: &HalfPlane) -> Vec<Point> {
    let det = a.normal.cross(b.normal);
    if det.abs() < 1e-14 {
        return vec![];
    }
    let x = (a.offset * b.normal.y - b.offset * a.normal.y) / det;
    let y = (a.normal.x * b.offset - b.normal.x * a.offset) / det;
    vec![Point::new(x, y)]
}

fn line_circle(h: &HalfPlane, d: &Disk) -> Vec<Point> {
    let dist = h.offset - h.normal.dot(d.center);
    if dist.abs() > d.radius + 1e-12 {
        return vec![];
    }
    let foot = d.center + h.normal * dist;
    let t = (d.radius * d.radius - dist * dist).max(0.0).sqrt();
    let along = h.normal.perp();
    vec![foot + along * t, foot - along * t]
}

fn circle_circle(a: &Disk, b: &Disk) -> Vec<Point> {
    let d = b.center - a.center;
    let l = d.norm();
    if l < 1e-14 || l > a.radius + b.radius + 1e-12 || l < (a.radius - b.radius).abs() - 1e-12 {
        return vec![];
    }
    let x = (l * l + a.radius * a.radius - b.radius * b.radius) / (2.0 * l);
    let y = (a.radius * a.radius - x * x).max(0.0).sqrt();
    let e = d * (1.0 / l);
    let foot = a.center + e * x;
    vec![foot + e.perp() * y, foot - e.perp() * y]
}

/// Intersection of disks and halfplanes as an arc-polygon.
pub fn intersect_disks_halfplanes(
    disks: &[Disk],
    halfplanes: &[HalfPlane],
) -> Result<ArcPolygon, GeometryError> {
    const TOL: f64 = 1e-9;
    let cons: Vec<Constraint> = disks
        .iter()
        .map(|&d| Constraint::Disk(d))
        .chain(halfplanes.iter().map(|&h| Constraint::Half(h)))
        .collect();
    let feasible = |p: Point| cons.iter().all(|c| c.residual(p) <= TOL);
    let mut verts: Vec<Point> = Vec::new();
    for i in 0..cons.len() {
        for j in i + 1..cons.len() {
            let cands = match (&cons[i], &cons[j]) {
                (Constraint::Half(a), Constraint::Half(b)) => line_line(a, b),
                (Constraint::Half(h), Constraint::Disk(d))
                | (Constraint::Disk(d), Constraint::Half(h)) => line_circle(h, d),
                (Constraint::Disk(a), Constraint::Disk(b)) => circle_circle(a, b),
            };
            for p in cands {
                if feasible(p) && verts.iter().all(|v| v.dist(p) > TOL) {
                    verts.push(p);
                }
            }
        }
    }
    if verts.len() <= 1 {
        // Either one disk lies inside every other constraint or the set is tiny.
        for d in disks {
            let inside = cons.iter().all(|c| match c {
                Constraint::Disk(o) => d.center.dist(o.center) + d.radius <= o.radius + 1e-12,
                Constraint::Half(h) => h.residual(d.center) + d.radius <= 1e-12,
            });
            if inside {
                return Ok(ArcPolygon::disk(d.center, d.radius));
            }
        }
        return Err(if disks.is_empty() {
            GeometryError::Unbounded
        } else {
            GeometryError::EmptyIntersection
        });
    }
    let mut centroid = Point::ORIGIN;
    for v in &verts {
        centroid += *v;
    }
    let centroid = centroid * (1.0 / verts.len() as f64);
    verts.sort_by(|a, b| (*a - centroid).angle().total_cmp(&(*b - centroid).angle()));
    let n = verts.len();
    let mut elements = Vec::with_capacity(n);
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let mut chosen = None;
        for (k, c) in cons.iter().enumerate() {
            if c.residual(a).abs() > TOL || c.residual(b).abs() > TOL {
                continue;
            }
            let others_ok = |p: Point| {
                cons.iter().enumerate().all(|(j, o)| j == k || o.residual(p) <= TOL)
            };
            match c {
                Constraint::Half(h) => {
                    let d = b - a;
                    if Point::new(d.y, -d.x).dot(h.normal) > 0.0 && others_ok(a.lerp(b, 0.5)) {
                        chosen = Some(BoundaryElement::Segment { a, b });
                        break;
                    }
                }
                Constraint::Disk(dk) => {
                    let s = (a - dk.center).angle();
                    let e = (b - dk.center).angle();
                    let sweep = (e - s).rem_euclid(TWO_PI);
                    let mid = dk.center + Point::polar(s + 0.5 * sweep) * dk.radius;
                    if sweep > 1e-15 && others_ok(mid) {
                        chosen = Some(BoundaryElement::arc(dk.center, dk.radius, s, e));
                        break;
                    }
                }
            }
        }
        elements.push(chosen.ok_or(GeometryError::Numerical("intersection boundary"))?);
    }
    ArcPolygon::try_from_elements(elements, false)?.canonical()
}

/// Portion of the normal interval `[0, sweep]` (relative) outside an open interval.
fn subtract_interval(sweep: f64, out_start: f64, out_len: f64) -> Vec<(f64, f64)> {
    // Outside set within [0, 2π): [os, os+len] possibly wrapping.
    let mut outs = vec![(out_start, (out_start + out_len).min(TWO_PI))];
    if out_start + out_len > TWO_PI {
        outs.push((0.0, out_start + out_len - TWO_PI));
    }
    outs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut keep = Vec::new();
    let mut cur = 0.0;
    for (s, e) in outs {
        if s > cur {
            keep.push((cur, s.min(sweep)));
        }
        cur = cur.max(e);
        if cur >= sweep {
            break;
        }
    }
    if cur < sweep {
        keep.push((cur, sweep));
    }
    keep.into_iter().filter(|(s, e)| e > s).collect()
}

/// Intersection of a body with the halfplane `{x : u(θ)·x ≤ offset}`.
pub fn clip_halfplane(
    body: &ArcPolygon,
    normal_theta: f64,
    offset: f64,
) -> Result<ArcPolygon, GeometryError> {
    body.pieces()?;
    if body.is_degenerate() {
        return Err(GeometryError::Degenerate("clip_halfplane"));
    }
    let h = HalfPlane::new(normal_theta, offset);
    let mut parts: Vec<BoundaryElement> = Vec::new();
    let mut removed = false;
    for e in body.elements() {
        match *e {
            BoundaryElement::Segment { a, b } => {
                let sa = h.residual(a);
                let sb = h.residual(b);
                if sa <= 0.0 && sb <= 0.0 {
                    parts.push(*e);
                } else if sa >= 0.0 && sb >= 0.0 {
                    removed = true;
                } else {
                    removed = true;
                    let p = a.lerp(b, sa / (sa - sb));
                    let seg = if sa < 0.0 {
                        BoundaryElement::Segment { a, b: p }
                    } else {
                        BoundaryElement::Segment { a: p, b }
                    };
                    if let BoundaryElement::Segment { a, b } = seg {
                        if a.dist(b) > 1e-12 {
                            parts.push(seg);
                        }
                    }
                }
            }
            BoundaryElement::Arc { center, radius, normal_start, .. } => {
                let sweep = e.sweep();
                let k = -h.residual(center) / radius;
                if k >= 1.0 {
                    parts.push(*e);
                    continue;
                }
                removed = true;
                if k <= -1.0 {
                    continue;
                }
                let beta = k.acos();
                let phi = h.normal.angle();
                let s0 = normal_start.theta();
                let os = wrap_angle(phi - beta - s0);
                for (lo, hi) in subtract_interval(sweep, os, 2.0 * beta) {
                    if radius * (hi - lo) > 1e-12 {
                        parts.push(BoundaryElement::arc(center, radius, s0 + lo, s0 + hi));
                    }
                }
            }
        }
    }
    if !removed || parts.is_empty() {
        return Err(GeometryError::EmptyOrFull);
    }
    let n = parts.len();
    let gaps: Vec<usize> = (0..n)
        .filter(|&i| parts[i].end_point().dist(parts[(i + 1) % n].start_point()) > 1e-9)
        .collect();
    if gaps.len() != 1 {
        if gaps.is_empty() {
            return Err(GeometryError::EmptyOrFull);
        }
        return Err(GeometryError::Numerical("clip produced several gaps"));
    }
    let g = gaps[0];
    let mut elements: Vec<BoundaryElement> = Vec::with_capacity(n + 1);
    for j in 0..n {
        elements.push(parts[(g + 1 + j) % n]);
    }
    let a = parts[g].end_point();
    let b = parts[(g + 1) % n].start_point();
    elements.push(BoundaryElement::Segment { a, b });
    let out = ArcPolygon::try_from_elements(elements, false)
        .map_err(|_| GeometryError::TangentialClip)?;
    if out.area() < 1e-12 {
        return Err(GeometryError::TangentialClip);
    }
    out.canonical()
}
