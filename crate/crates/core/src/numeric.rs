//! Small numerical helpers shared by the solvers and family constructors.

use crate::geometry::Point;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section minimization of a unimodal function on `[a, b]`.
pub fn golden_min(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Minimizes a convex function over a box by nested golden-section searches.
pub fn nested_golden_min(
    f: impl Fn(Point) -> f64,
    lo: Point,
    hi: Point,
    tol: f64,
) -> (Point, f64) {
    let inner = |x: f64| golden_min(|y| f(Point::new(x, y)), lo.y, hi.y, tol);
    let (x, _) = golden_min(|x| inner(x).1, lo.x, hi.x, tol);
    let (y, v) = inner(x);
    (Point::new(x, y), v)
}

/// Bisection for a sign change of `f` on `[a, b]`.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol || m == a || m == b {
            return Some(m);
        }
        let fm = f(m);
        if fm == 0.0 {
            return Some(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Some(0.5 * (a + b))
}

/// Real roots of `a t² + b t + c`.
pub fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return vec![];
    }
    if a.abs() <= 1e-14 * scale {
        if b.abs() <= 1e-300 {
            return vec![];
        }
        return vec![-c / b];
    }
    let disc = b * b - 4.0 * a * c;
    if disc < -1e-12 * b * b.max(1.0) {
        return vec![];
    }
    let sq = disc.max(0.0).sqrt();
    let q = -0.5 * (b + b.signum() * sq);
    if q == 0.0 {
        return vec![0.0];
    }
    vec![q / a, c / q]
}

/// Solves a 2×2 system; `None` when singular.
pub fn solve2(m: [[f64; 2]; 2], r: [f64; 2]) -> Option<[f64; 2]> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let scale = m.iter().flatten().fold(0.0f64, |s, v| s.max(v.abs()));
    if det.abs() <= 1e-13 * scale * scale {
        return None;
    }
    Some([(r[0] * m[1][1] - m[0][1] * r[1]) / det, (m[0][0] * r[1] - r[0] * m[1][0]) / det])
}

/// Solves a 3×3 system by Cramer's rule; `None` when singular.
pub fn solve3(m: [[f64; 3]; 3], r: [f64; 3]) -> Option<[f64; 3]> {
    let det3 = |a: [[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let det = det3(m);
    if det.abs() <= 1e-13 {
        return None;
    }
    let mut out = [0.0; 3];
    for (k, o) in out.iter_mut().enumerate() {
        let mut a = m;
        for i in 0..3 {
            a[i][k] = r[i];
        }
        *o = det3(a) / det;
    }
    Some(out)
}

/// Smallest enclosing circle of points (move-to-front with a fixed shuffle).
pub fn min_enclosing_circle(points: &[Point]) -> (Point, f64) {
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(0x5eed));
    let eps = 1e-14;
    let inside = |c: Point, r: f64, p: Point| p.dist(c) <= r * (1.0 + eps) + eps;
    let mut c = pts[0];
    let mut r = 0.0;
    for i in 1..pts.len() {
        if inside(c, r, pts[i]) {
            continue;
        }
        c = pts[i];
        r = 0.0;
        for j in 0..i {
            if inside(c, r, pts[j]) {
                continue;
            }
            c = pts[i].lerp(pts[j], 0.5);
            r = pts[i].dist(pts[j]) * 0.5;
            for k in 0..j {
                if inside(c, r, pts[k]) {
                    continue;
                }
                let (cc, rr) = circle_through(pts[i], pts[j], pts[k]);
                c = cc;
                r = rr;
            }
        }
    }
    (c, r)
}

/// Circumcircle of three points, falling back to the widest pair when collinear.
pub fn circle_through(a: Point, b: Point, c: Point) -> (Point, f64) {
    let bx = b - a;
    let cx = c - a;
    let d = 2.0 * bx.cross(cx);
    if d.abs() < 1e-300 {
        let pairs = [(a, b), (a, c), (b, c)];
        let (p, q) = pairs
            .iter()
            .copied()
            .max_by(|x, y| x.0.dist(x.1).total_cmp(&y.0.dist(y.1)))
            .unwrap();
        return (p.lerp(q, 0.5), p.dist(q) * 0.5);
    }
    let ux = (cx.y * bx.norm2() - bx.y * cx.norm2()) / d;
    let uy = (bx.x * cx.norm2() - cx.x * bx.norm2()) / d;
    let center = a + Point::new(ux, uy);
    (center, Point::new(ux, uy).norm())
}

/// Signed depth of the origin in the convex hull of 2 or 3 vectors
/// (positive inside, `-distance` outside or for segments).
pub fn origin_depth(v: &[Point]) -> f64 {
    match v.len() {
        2 => {
            let d = v[1] - v[0];
            let t = (-(v[0].dot(d)) / d.norm2()).clamp(0.0, 1.0);
            -(v[0] + d * t).norm()
        }
        3 => {
            let orient = (v[1] - v[0]).cross(v[2] - v[0]).signum();
            if orient == 0.0 {
                return origin_depth(&[v[0], v[1]]).max(origin_depth(&[v[1], v[2]]))
                    .max(origin_depth(&[v[0], v[2]]));
            }
            let mut depth = f64::INFINITY;
            for i in 0..3 {
                let a = v[i];
                let e = v[(i + 1) % 3] - a;
                depth = depth.min(orient * e.cross(-a) / e.norm());
            }
            if depth >= 0.0 {
                depth
            } else {
                (0..3).map(|i| origin_depth(&[v[i], v[(i + 1) % 3]])).fold(f64::NEG_INFINITY, f64::max)
            }
        }
        _ => f64::NEG_INFINITY,
    }
}

/// Best 2- or 3-subset of `v` by origin depth; returns indices and depth.
pub fn best_hull_subset(v: &[Point]) -> Option<(Vec<usize>, f64)> {
    let n = v.len();
    let mut best: Option<(Vec<usize>, f64)> = None;
    let mut consider = |idx: Vec<usize>| {
        let pts: Vec<Point> = idx.iter().map(|&i| v[i]).collect();
        let d = origin_depth(&pts);
        if best.as_ref().map_or(true, |b| d > b.1 + 1e-15) {
            best = Some((idx, d));
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            consider(vec![i, j]);
            for k in j + 1..n {
                consider(vec![i, j, k]);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, v) = golden_min(|x| (x - 0.3).powi(2) + 1.0, -2.0, 2.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6 && (v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bisect_sqrt2() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-15).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn quadratic_stable_roots() {
        let mut r = quadratic_roots(1.0, -1e8, 1.0);
        r.sort_by(f64::total_cmp);
        assert!((r[0] - 1e-8).abs() < 1e-20);
    }

    #[test]
    fn mec_of_triangle() {
        let pts: Vec<Point> = [90.0f64, 210.0, 330.0, 0.0]
            .iter()
            .enumerate()
            .map(|(i, d)| if i < 3 { Point::polar(d.to_radians()) } else { Point::new(0.1, 0.2) })
            .collect();
        let (c, r) = min_enclosing_circle(&pts);
        assert!(c.norm() < 1e-12 && (r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn depth_signs() {
        let tri = [Point::polar(0.0), Point::polar(2.1), Point::polar(4.2)];
        assert!(origin_depth(&tri) > 0.4);
        let pair = [Point::new(1.0, 0.0), Point::new(-1.0, 0.0)];
        assert!(origin_depth(&pair).abs() < 1e-15);
        let off = [Point::new(1.0, 1.0), Point::new(-1.0, 1.0)];
        assert!((origin_depth(&off) + 1.0).abs() < 1e-15);
    }
}
