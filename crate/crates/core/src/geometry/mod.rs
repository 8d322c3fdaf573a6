//! Arc-polygon data model and the constructive operations built on support functions.

mod body;
mod ops;
mod point;

pub use body::{
    arc_sweep, chain_area, ArcPolygon, BoundaryElement, Piece, PieceSet, SupportValue,
    ValidationReport, Violation, TAU_GEOM,
};
pub use ops::{
    clip_halfplane, combination, hull_bodies, hull_piece_sets, hull_points_disks,
    intersect_disks_halfplanes, minkowski_sum,
};
pub use point::{wrap_angle, Disk, HalfPlane, Point, UnitDir, TWO_PI};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("invalid body: {0}")]
    InvalidBody(ValidationReport),
    #[error("{0} does not accept the degenerate segment body")]
    Degenerate(&'static str),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("halfplane clip is empty or full")]
    EmptyOrFull,
    #[error("tangential clip leaves a degenerate body")]
    TangentialClip,
    #[error("all inputs coincide")]
    Coincident,
    #[error("empty intersection")]
    EmptyIntersection,
    #[error("unbounded intersection")]
    Unbounded,
    #[error("numerical failure: {0}")]
    Numerical(&'static str),
    #[error("malformed body json: {0}")]
    Json(#[from] serde_json::Error),
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn eqt() -> ArcPolygon {
        let v: Vec<Point> =
            [90.0f64, 210.0, 330.0].iter().map(|d| Point::polar(d.to_radians())).collect();
        ArcPolygon::polygon(&v).unwrap()
    }

    fn ret() -> ArcPolygon {
        let disks: Vec<Disk> = eqt().vertices().iter().map(|&p| Disk::new(p, 3f64.sqrt())).collect();
        intersect_disks_halfplanes(&disks, &[]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn unit_disk_is_clean() {
        let b = ArcPolygon::disk(Point::ORIGIN, 1.0);
        assert!(b.validate().is_clean());
        let s = b.support(UnitDir::new(0.0)).unwrap();
        assert!(close(s.h, 1.0, 1e-15));
        assert!(s.point.dist(Point::new(1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn swapped_triangle_breaks_monotonicity() {
        let v = eqt().vertices();
        let bad = ArcPolygon::polygon(&[v[0], v[2], v[1]]);
        match bad {
            Err(GeometryError::InvalidBody(r)) => assert!(r.mentions("normal monotonicity")),
            other => panic!("expected invalid body, got {other:?}"),
        }
    }

    #[test]
    fn triangle_support_and_breadth() {
        let t = eqt();
        assert!(t.validate().is_clean());
        assert!(close(t.support(UnitDir::new(FRAC_PI_2)).unwrap().h, 1.0, 1e-15));
        assert!(close(t.breadth(-FRAC_PI_2).unwrap(), 1.5, 1e-12));
    }

    #[test]
    fn reuleaux_has_constant_breadth() {
        let r = ret();
        for k in 0..12 {
            assert!(close(r.breadth(0.37 * k as f64).unwrap(), 3f64.sqrt(), 1e-12));
        }
        // From a vertex through the origin the support equals √3 − 1.
        assert!(close(r.support_value(-FRAC_PI_2).unwrap(), 3f64.sqrt() - 1.0, 1e-12));
    }

    #[test]
    fn disk_sums() {
        let b = ArcPolygon::disk(Point::ORIGIN, 1.0);
        let s = minkowski_sum(&b, &b).unwrap();
        assert_eq!(s.elements().len(), 1);
        assert!(close(s.support_value(1.0).unwrap(), 2.0, 1e-14));
        let sq = ArcPolygon::polygon(&[
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(1.0, 1.0),
            Point::new(-1.0, 1.0),
        ])
        .unwrap();
        let rounded = minkowski_sum(&sq, &ArcPolygon::disk(Point::ORIGIN, 0.25)).unwrap();
        let t = PI / 4.0;
        assert!(close(
            rounded.support_value(t).unwrap(),
            sq.support_value(t).unwrap() + 0.25,
            1e-14
        ));
        assert_eq!(rounded.elements().len(), 8);
    }

    #[test]
    fn completion_mix_breadths() {
        let k = combination(&eqt(), 0.5, &ret(), 0.5).unwrap();
        let d = (0..3600)
            .map(|i| k.breadth(i as f64 * PI / 3600.0).unwrap())
            .fold(0.0f64, f64::max);
        assert!(close(d, 3f64.sqrt(), 1e-9));
        assert!(close(k.breadth(-FRAC_PI_2).unwrap(), 0.75 + 0.5 * 3f64.sqrt(), 1e-12));
    }

    #[test]
    fn scale_rejects_non_positive() {
        assert!(matches!(eqt().scale(0.0, Point::ORIGIN), Err(GeometryError::NonPositiveScale(_))));
        let half = eqt().scale(0.5, Point::ORIGIN).unwrap();
        assert!(close(half.breadth(-FRAC_PI_2).unwrap(), 0.75, 1e-14));
    }

    #[test]
    fn clip_disk_to_half() {
        let b = ArcPolygon::disk(Point::ORIGIN, 1.0);
        let h = clip_halfplane(&b, 0.0, 0.0).unwrap();
        assert_eq!(h.elements().len(), 2);
        assert!(close(h.area(), PI / 2.0, 1e-12));
        assert!(close(h.support_value(0.0).unwrap(), 0.0, 1e-12));
    }

    #[test]
    fn clip_missing_line_is_error() {
        assert!(matches!(clip_halfplane(&eqt(), 0.0, 5.0), Err(GeometryError::EmptyOrFull)));
        assert!(matches!(clip_halfplane(&eqt(), 0.0, -5.0), Err(GeometryError::EmptyOrFull)));
    }

    #[test]
    fn hull_of_one_disk() {
        let h = hull_points_disks(&[], &[Disk::new(Point::new(0.3, 0.1), 0.7)]).unwrap();
        assert_eq!(h.elements().len(), 1);
        assert!(close(h.support_value(2.0).unwrap(), Point::new(0.3, 0.1).dot(Point::polar(2.0)) + 0.7, 1e-14));
    }

    #[test]
    fn hull_of_triangle_and_inballs() {
        let t = eqt();
        let own = hull_points_disks(&t.vertices(), &[Disk::new(Point::ORIGIN, 0.5)]).unwrap();
        assert_eq!(own.elements().len(), 3);
        let r = 27f64.sqrt() / 8.0;
        let c = Point::new(0.0, r - 0.5);
        let h = hull_points_disks(&t.vertices(), &[Disk::new(c, r)]).unwrap();
        assert!(h.validate().is_clean());
        assert!(close(h.support_value(-FRAC_PI_2).unwrap(), 0.5, 1e-12));
        let u = PI / 6.0;
        assert!(close(h.support_value(u).unwrap(), c.dot(Point::polar(u)) + r, 1e-12));
        for p in t.vertices() {
            assert!(close(h.support_value(p.angle()).unwrap(), 1.0, 1e-12));
        }
    }

    #[test]
    fn segment_body() {
        let l = ArcPolygon::segment(Point::new(-1.0, 0.0), Point::new(1.0, 0.0));
        assert!(l.validate().is_clean());
        assert!(l.is_degenerate());
        assert!(close(l.breadth(FRAC_PI_2).unwrap(), 0.0, 1e-15));
        assert!(close(l.breadth(0.0).unwrap(), 2.0, 1e-15));
    }

    #[test]
    fn json_round_trip() {
        let r = ret();
        let back = ArcPolygon::from_json(&r.to_json()).unwrap();
        for k in 0..50 {
            let t = k as f64 * 0.127;
            assert!(close(r.support_value(t).unwrap(), back.support_value(t).unwrap(), 1e-12));
        }
    }
}
