//! Brute-force radii over boundary point clouds, used only to cross-check the exact kernel.
//!
//! Nothing here calls into `radii` or `numeric`; the only shared code is the body data model.

use crate::geometry::{ArcPolygon, BoundaryElement, Point, UnitDir, TWO_PI};
use crate::radii::RadiiTuple;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("at least 8 samples are required, got {0}")]
    TooFewSamples(usize),
    #[error("point cloud is degenerate: {0}")]
    Degenerate(&'static str),
}

#[derive(Clone, Debug, Serialize)]
pub struct PointCloudBody {
    /// Boundary samples in counter-clockwise order.
    pub points: Vec<Point>,
    pub source_resolution: usize,
    /// Largest distance between an arc and its chords; bounds the discretization error.
    pub sagitta: f64,
}

/// Samples the boundary at uniformly spaced outward normal angles, keeping every element endpoint.
pub fn sample_boundary_points(body: &ArcPolygon, n: usize) -> Result<PointCloudBody, OracleError> {
    if n < 8 {
        return Err(OracleError::TooFewSamples(n));
    }
    let step = TWO_PI / n as f64;
    let mut pts = Vec::new();
    let mut sagitta: f64 = 0.0;
    for e in body.elements() {
        match *e {
            BoundaryElement::Segment { a, b } => {
                pts.push(a);
                pts.push(b);
            }
            BoundaryElement::Arc { center, radius, normal_start, normal_end } => {
                let start = normal_start.theta();
                let mut sweep = (normal_end.theta() - start).rem_euclid(TWO_PI);
                if sweep < 1e-12 {
                    sweep = TWO_PI;
                }
                pts.push(center + Point::polar(start) * radius);
                let first = (start / step).ceil() as i64;
                let mut k = first;
                let mut last = start;
                loop {
                    let theta = k as f64 * step;
                    if theta >= start + sweep {
                        break;
                    }
                    sagitta = sagitta.max(radius * (1.0 - (0.5 * (theta - last)).cos()));
                    pts.push(center + Point::polar(theta) * radius);
                    last = theta;
                    k += 1;
                }
                sagitta = sagitta.max(radius * (1.0 - (0.5 * (start + sweep - last)).cos()));
                pts.push(center + Point::polar(start + sweep) * radius);
            }
        }
    }
    let points = convex_hull(&pts);
    Ok(PointCloudBody { points, source_resolution: n, sagitta })
}

/// Andrew's monotone chain; returns the strictly convex hull counter-clockwise.
fn convex_hull(pts: &[Point]) -> Vec<Point> {
    let mut p: Vec<Point> = pts.to_vec();
    p.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    p.dedup_by(|a, b| (a.x - b.x).abs() < 1e-13 && (a.y - b.y).abs() < 1e-13);
    if p.len() < 3 {
        return p;
    }
    let cross = |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let mut hull: Vec<Point> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let base = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> =
            if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= base + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 1e-15 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

fn dist(a: Point, b: Point) -> f64 {
    ((a.x - b.x).powi(2) + (a.y - b.y).powi(2)).sqrt()
}

fn circle2(a: Point, b: Point) -> (Point, f64) {
    let c = Point::new(0.5 * (a.x + b.x), 0.5 * (a.y + b.y));
    (c, dist(a, c))
}

fn circle3(a: Point, b: Point, c: Point) -> (Point, f64) {
    let (bx, by) = (b.x - a.x, b.y - a.y);
    let (cx, cy) = (c.x - a.x, c.y - a.y);
    let d = 2.0 * (bx * cy - by * cx);
    if d.abs() < 1e-300 {
        // Collinear: the farthest pair spans the circle.
        let pairs = [(a, b), (a, c), (b, c)];
        let (p, q) = pairs.into_iter().max_by(|x, y| dist(x.0, x.1).total_cmp(&dist(y.0, y.1))).unwrap();
        return circle2(p, q);
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    let center = Point::new(a.x + ux, a.y + uy);
    (center, (ux * ux + uy * uy).sqrt())
}

fn inside(c: (Point, f64), p: Point) -> bool {
    dist(c.0, p) <= c.1 * (1.0 + 1e-14) + 1e-14
}

/// Randomized incremental minimal enclosing circle.
fn enclosing_circle(points: &[Point], seed: u64) -> (Point, f64) {
    let mut p = points.to_vec();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut c = (p[0], 0.0);
    for i in 1..p.len() {
        if inside(c, p[i]) {
            continue;
        }
        c = (p[i], 0.0);
        for j in 0..i {
            if inside(c, p[j]) {
                continue;
            }
            c = circle2(p[i], p[j]);
            for k in 0..j {
                if !inside(c, p[k]) {
                    c = circle3(p[i], p[j], p[k]);
                }
            }
        }
    }
    c
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..90 {
        if b - a < 1e-13 {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Radii of the convex hull of the cloud, computed straight from the definitions.
pub fn brute_radii(cloud: &PointCloudBody) -> Result<RadiiTuple, OracleError> {
    let p = &cloud.points;
    if p.len() < 2 {
        return Err(OracleError::Degenerate("fewer than two distinct points"));
    }

    // Diameter: all pairs.
    let (diameter, i, j) = (0..p.len())
        .into_par_iter()
        .map(|i| {
            let mut best = (0.0, i, i);
            for j in i + 1..p.len() {
                let d = dist(p[i], p[j]);
                if d > best.0 {
                    best = (d, i, j);
                }
            }
            best
        })
        .reduce(|| (0.0, 0, 0), |a, b| if b.0 > a.0 { b } else { a });

    let (circumcenter, circumradius) = enclosing_circle(p, 0x5eed);

    if p.len() < 3 {
        let mid = Point::new(0.5 * (p[0].x + p[1].x), 0.5 * (p[0].y + p[1].y));
        let along = UnitDir::from_vec(p[1] - p[0]);
        return Ok(RadiiTuple {
            inradius: 0.0,
            width: 0.0,
            diameter,
            circumradius,
            incenter: mid,
            width_dir: UnitDir::new(along.theta() + 0.5 * std::f64::consts::PI),
            diam_pair: (p[i], p[j]),
            circumcenter,
        });
    }

    // Edge lines with outward unit normals.
    let edges: Vec<(Point, f64)> = (0..p.len())
        .map(|k| {
            let a = p[k];
            let b = p[(k + 1) % p.len()];
            let l = dist(a, b);
            let n = Point::new((b.y - a.y) / l, (a.x - b.x) / l);
            (n, n.x * a.x + n.y * a.y)
        })
        .collect();

    // Width: the minimal breadth of a polygon is attained at an edge normal.
    let (width, width_normal) = edges
        .par_iter()
        .map(|&(n, off)| {
            let depth = p.iter().map(|q| off - (n.x * q.x + n.y * q.y)).fold(0.0, f64::max);
            (depth, n)
        })
        .reduce(|| (f64::INFINITY, Point::new(1.0, 0.0)), |a, b| if b.0 < a.0 { b } else { a });

    // Inradius: maximize the smallest distance to the edge lines.
    let depth = |c: Point| edges.iter().map(|&(n, off)| off - (n.x * c.x + n.y * c.y)).fold(f64::INFINITY, f64::min);
    let (x0, x1) = p.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), q| (a.min(q.x), b.max(q.x)));
    let (y0, y1) = p.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), q| (a.min(q.y), b.max(q.y)));
    let column = |x: f64| golden_max(|y| depth(Point::new(x, y)), y0, y1);
    let (x, _) = golden_max(|x| column(x).1, x0, x1);
    let (y, inradius) = column(x);

    Ok(RadiiTuple {
        inradius: inradius.max(0.0),
        width,
        diameter,
        circumradius,
        incenter: Point::new(x, y),
        width_dir: UnitDir::from_vec(width_normal),
        diam_pair: (p[i], p[j]),
        circumcenter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec, Vertex};

    fn vertex(v: Vertex) -> ArcPolygon {
        construct(&FamilySpec::Vertex(v)).unwrap()
    }

    #[test]
    fn octagon_of_the_ball() {
        let ball = vertex(Vertex::Ball);
        assert_eq!(sample_boundary_points(&ball, 4).unwrap_err(), OracleError::TooFewSamples(4));
        let cloud = sample_boundary_points(&ball, 8).unwrap();
        assert_eq!(cloud.points.len(), 8);
        let r = brute_radii(&cloud).unwrap();
        assert!((r.circumradius - 1.0).abs() < 1e-15);
        assert!((r.diameter - 2.0).abs() < 1e-15);
    }

    #[test]
    fn triangle_is_exact() {
        let eqt = vertex(Vertex::EquilateralTriangle);
        let cloud = sample_boundary_points(&eqt, 100).unwrap();
        assert_eq!(cloud.points.len(), 3);
        let r = brute_radii(&cloud).unwrap();
        let want = [0.5, 1.5, 3f64.sqrt(), 1.0];
        for (g, w) in [r.inradius, r.width, r.diameter, r.circumradius].iter().zip(want) {
            assert!((g - w).abs() < 1e-10, "{g} vs {w}");
        }
    }

    #[test]
    fn reuleaux_within_sagitta() {
        let cloud = sample_boundary_points(&vertex(Vertex::ReuleauxTriangle), 10_000).unwrap();
        assert!(cloud.sagitta < 1e-6);
        let r = brute_radii(&cloud).unwrap();
        let s3 = 3f64.sqrt();
        let want = [s3 - 1.0, s3, s3, 1.0];
        for (g, w) in [r.inradius, r.width, r.diameter, r.circumradius].iter().zip(want) {
            assert!((g - w).abs() < 1e-4, "{g} vs {w}");
        }
    }
}
