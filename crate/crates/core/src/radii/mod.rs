//! The four radii with attainment data and optimality certificates.

mod circum;
mod extent;
mod inball;

pub use extent::{diameter, width};

use crate::geometry::{wrap_angle, ArcPolygon, GeometryError, Point, UnitDir};
use crate::numeric::origin_depth;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RadiiError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("radii chain violated: {0}")]
    Chain(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadiiTuple {
    pub inradius: f64,
    pub width: f64,
    pub diameter: f64,
    pub circumradius: f64,
    pub incenter: Point,
    pub width_dir: UnitDir,
    pub diam_pair: (Point, Point),
    pub circumcenter: Point,
}

impl RadiiTuple {
    /// `(r, w, D, R)`.
    pub fn values(&self) -> [f64; 4] {
        [self.inradius, self.width, self.diameter, self.circumradius]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircumCertificate {
    pub touching_points: Vec<Point>,
    pub hull_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InCertificate {
    pub touching_normals: Vec<UnitDir>,
    pub touch_points: Vec<Point>,
    pub hull_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiiReport {
    pub radii: RadiiTuple,
    pub in_cert: Option<InCertificate>,
    pub circ_cert: CircumCertificate,
}

pub fn circumball(body: &ArcPolygon) -> Result<(Point, f64, CircumCertificate), GeometryError> {
    circum::circumball(body)
}

/// Chebyshev center; the degenerate segment body yields radius zero and no certificate.
pub fn inball(body: &ArcPolygon) -> Result<(Point, f64, Option<InCertificate>), GeometryError> {
    inball::inball(body)
}

pub fn compute_radii(body: &ArcPolygon) -> Result<RadiiReport, RadiiError> {
    let (w, width_dir) = width(body)?;
    let (d, diam_pair) = diameter(body)?;
    let (circumcenter, big_r, circ_cert) = circumball(body)?;
    let (incenter, r, in_cert) = inball(body)?;
    let w = if body.is_degenerate() { 0.0 } else { w };
    let radii = RadiiTuple {
        inradius: r,
        width: w,
        diameter: d,
        circumradius: big_r,
        incenter,
        width_dir,
        diam_pair,
        circumcenter,
    };
    let tol = 1e-9 * big_r.max(1.0);
    let chain = [
        ("2r ≤ w", w - 2.0 * r),
        ("w ≤ D", d - w),
        ("D ≤ 2R", 2.0 * big_r - d),
        ("w ≤ r + R", r + big_r - w),
        ("r + R ≤ D", d - r - big_r),
        ("√3R ≤ D", d - 3f64.sqrt() * big_r),
    ];
    let broken: Vec<String> = chain
        .iter()
        .filter(|(_, s)| *s < -tol)
        .map(|(n, s)| format!("{n} (slack {s:e})"))
        .collect();
    if !broken.is_empty() {
        return Err(RadiiError::Chain(broken.join(", ")));
    }
    Ok(RadiiReport { radii, in_cert, circ_cert })
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CertificateReport {
    pub valid: bool,
    pub in_margin: Option<f64>,
    pub circ_margin: f64,
    pub issues: Vec<String>,
}

/// Farthest distance from `x` to the body, computed from the boundary pieces.
fn farthest_distance(body: &ArcPolygon, x: Point) -> Result<f64, GeometryError> {
    let mut best: f64 = 0.0;
    for p in body.pieces()?.pieces() {
        best = best.max(p.start_point().dist(x)).max(p.end_point().dist(x));
        if p.radius > 0.0 {
            let d = p.center - x;
            if wrap_angle(d.angle() - p.start) <= p.sweep {
                best = best.max(d.norm() + p.radius);
            }
        }
    }
    Ok(best)
}

/// Largest ball radius at `x` fitting inside the body.
fn inner_distance(body: &ArcPolygon, x: Point) -> Result<f64, GeometryError> {
    let mut best = f64::INFINITY;
    for p in body.pieces()?.pieces() {
        for t in [p.start, p.end()] {
            let n = Point::polar(t);
            best = best.min(p.support(n) - x.dot(n));
        }
        if p.radius > 0.0 {
            let d = x - p.center;
            if d.norm() > 0.0 && wrap_angle(d.angle() - p.start) <= p.sweep {
                best = best.min(p.radius - d.norm());
            }
        }
    }
    Ok(best)
}

/// Checks both certificates against the body, independently of the solvers.
pub fn verify_certificates(
    body: &ArcPolygon,
    tuple: &RadiiTuple,
    in_cert: Option<&InCertificate>,
    circ_cert: &CircumCertificate,
) -> CertificateReport {
    let tol = 1e-7 * tuple.circumradius.max(1.0);
    let mut issues = Vec::new();
    let c = tuple.circumcenter;
    let big_r = tuple.circumradius;
    if !(2..=3).contains(&circ_cert.touching_points.len()) {
        issues.push(format!("circumball: {} touching points", circ_cert.touching_points.len()));
    }
    for p in &circ_cert.touching_points {
        if (p.dist(c) - big_r).abs() > tol {
            issues.push(format!("circumball: touching point at distance {}", p.dist(c)));
        }
        let u = (*p - c).normalized();
        match body.support_value(u.angle()) {
            Ok(h) if (h - p.dot(u)).abs() <= tol => {}
            _ => issues.push("circumball: touching point is not a boundary support point".into()),
        }
    }
    match farthest_distance(body, c) {
        Ok(f) if f <= big_r + tol => {}
        Ok(f) => issues.push(format!("circumball: body reaches distance {f} > R")),
        Err(e) => issues.push(e.to_string()),
    }
    let dirs: Vec<Point> = circ_cert.touching_points.iter().map(|&p| (p - c) * (1.0 / big_r)).collect();
    let circ_margin = if dirs.len() >= 2 { origin_depth(&dirs) } else { f64::NEG_INFINITY };
    if circ_margin < -tol {
        issues.push(format!("circumball: center outside touching hull (margin {circ_margin:e})"));
    }
    let mut in_margin = None;
    if body.is_degenerate() {
        if in_cert.is_some() || tuple.inradius != 0.0 {
            issues.push("inball: degenerate body must have r = 0 and no certificate".into());
        }
    } else {
        match in_cert {
            None => issues.push("inball: certificate missing".into()),
            Some(cert) => {
                let x = tuple.incenter;
                let r = tuple.inradius;
                for (n, q) in cert.touching_normals.iter().zip(&cert.touch_points) {
                    let u = n.vec();
                    if (q.dist(x) - r).abs() > tol || (*q - x).dot(u) < r - tol {
                        issues.push("inball: touch point not at distance r along its normal".into());
                    }
                    match body.support_value(n.theta()) {
                        Ok(h) if (h - q.dot(u)).abs() <= tol => {}
                        _ => issues.push("inball: normal line does not support the body".into()),
                    }
                }
                match inner_distance(body, x) {
                    Ok(d) if d >= r - tol => {}
                    Ok(d) => issues.push(format!("inball: ball leaves the body (room {d})")),
                    Err(e) => issues.push(e.to_string()),
                }
                let normals: Vec<Point> = cert.touching_normals.iter().map(|n| n.vec()).collect();
                let m = if (2..=3).contains(&normals.len()) {
                    origin_depth(&normals)
                } else {
                    f64::NEG_INFINITY
                };
                if m < -tol {
                    issues.push(format!("inball: origin outside normal hull (margin {m:e})"));
                }
                in_margin = Some(m);
            }
        }
    }
    CertificateReport { valid: issues.is_empty(), in_margin, circ_margin, issues }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{intersect_disks_halfplanes, Disk};

    fn eqt() -> ArcPolygon {
        let v: Vec<Point> =
            [90.0f64, 210.0, 330.0].iter().map(|d| Point::polar(d.to_radians())).collect();
        ArcPolygon::polygon(&v).unwrap()
    }

    fn ret() -> ArcPolygon {
        let disks: Vec<Disk> = eqt().vertices().iter().map(|&p| Disk::new(p, 3f64.sqrt())).collect();
        intersect_disks_halfplanes(&disks, &[]).unwrap()
    }

    #[test]
    fn triangle_radii() {
        let rep = compute_radii(&eqt()).unwrap();
        let [r, w, d, big_r] = rep.radii.values();
        assert!((r - 0.5).abs() < 1e-12);
        assert!((w - 1.5).abs() < 1e-12);
        assert!((d - 3f64.sqrt()).abs() < 1e-12);
        assert!((big_r - 1.0).abs() < 1e-12);
        assert!(rep.radii.circumcenter.norm() < 1e-12);
    }

    #[test]
    fn right_triangle_inradius() {
        let t = ArcPolygon::polygon(&[
            Point::new(-1.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let (_, r, _) = inball(&t).unwrap();
        assert!((r - (2f64.sqrt() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn obtuse_triangle_two_point_certificate() {
        let t = ArcPolygon::polygon(&[Point::new(-1.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 0.1)])
            .unwrap();
        let (c, big_r, cert) = circumball(&t).unwrap();
        assert!(c.norm() < 1e-12 && (big_r - 1.0).abs() < 1e-12);
        assert_eq!(cert.touching_points.len(), 2);
    }

    #[test]
    fn reuleaux_certificates() {
        let b = ret();
        let rep = compute_radii(&b).unwrap();
        let [r, w, d, big_r] = rep.radii.values();
        assert!((r - (3f64.sqrt() - 1.0)).abs() < 1e-12, "r = {r}");
        assert!((w - 3f64.sqrt()).abs() < 1e-12 && (d - 3f64.sqrt()).abs() < 1e-12);
        assert!((big_r - 1.0).abs() < 1e-12);
        assert!(rep.radii.incenter.norm() < 1e-9);
        let cert = rep.in_cert.as_ref().unwrap();
        assert_eq!(cert.touching_normals.len(), 3);
        assert_eq!(rep.circ_cert.touching_points.len(), 3);
        let report = verify_certificates(&b, &rep.radii, rep.in_cert.as_ref(), &rep.circ_cert);
        assert!(report.valid, "{:?}", report.issues);
    }

    #[test]
    fn ball_certificates() {
        let b = ArcPolygon::disk(Point::ORIGIN, 1.0);
        let rep = compute_radii(&b).unwrap();
        assert_eq!(rep.radii.values().map(|v| (v * 1e9).round() / 1e9), [1.0, 2.0, 2.0, 1.0]);
        assert_eq!(rep.circ_cert.touching_points.len(), 2);
        let report = verify_certificates(&b, &rep.radii, rep.in_cert.as_ref(), &rep.circ_cert);
        assert!(report.valid, "{:?}", report.issues);
    }

    #[test]
    fn perturbed_incenter_is_rejected() {
        let b = eqt();
        let rep = compute_radii(&b).unwrap();
        let mut bad = rep.radii;
        bad.incenter = bad.incenter + Point::new(1e-3, 0.0);
        let report = verify_certificates(&b, &bad, rep.in_cert.as_ref(), &rep.circ_cert);
        assert!(!report.valid);
    }

    #[test]
    fn segment_radii() {
        let l = ArcPolygon::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        let rep = compute_radii(&l).unwrap();
        assert_eq!(rep.radii.inradius, 0.0);
        assert_eq!(rep.radii.width, 0.0);
        assert!((rep.radii.diameter - 2.0).abs() < 1e-15);
        assert!(rep.in_cert.is_none());
    }
}
