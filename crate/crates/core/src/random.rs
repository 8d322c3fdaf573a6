//! Seeded random convex bodies for fuzzing and property tests.

use crate::geometry::{
    combination, hull_points_disks, intersect_disks_halfplanes, ArcPolygon, Disk, GeometryError, HalfPlane, Point,
};
use rand::Rng;
use std::f64::consts::TAU;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BodyKind {
    PointHull,
    ClippedDisk,
    Mixture,
    /// Hull of points and a few disks.
    RoundedHull,
}

impl BodyKind {
    pub const ALL: [BodyKind; 4] = [BodyKind::PointHull, BodyKind::ClippedDisk, BodyKind::Mixture, BodyKind::RoundedHull];
}

fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Point> {
    (0..n).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

pub fn point_hull(rng: &mut impl Rng) -> Result<ArcPolygon, GeometryError> {
    let n = rng.gen_range(3..=12);
    hull_points_disks(&random_points(rng, n), &[])
}

pub fn clipped_disk(rng: &mut impl Rng) -> Result<ArcPolygon, GeometryError> {
    let center = Point::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3));
    let radius = rng.gen_range(0.5..1.5);
    let mut disks = vec![Disk::new(center, radius)];
    if rng.gen_bool(0.3) {
        let shift = Point::polar(rng.gen_range(0.0..TAU)) * (radius * rng.gen_range(0.2..0.9));
        disks.push(Disk::new(center + shift, radius * rng.gen_range(0.9..1.4)));
    }
    let halves: Vec<HalfPlane> = (0..rng.gen_range(1..=5))
        .map(|_| {
            let theta = rng.gen_range(0.0..TAU);
            HalfPlane::new(theta, Point::polar(theta).dot(center) + radius * rng.gen_range(-0.5..0.95))
        })
        .collect();
    intersect_disks_halfplanes(&disks, &halves)
}

pub fn rounded_hull(rng: &mut impl Rng) -> Result<ArcPolygon, GeometryError> {
    let n = rng.gen_range(1..=6);
    let points = random_points(rng, n);
    let disks: Vec<Disk> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let c = random_points(rng, 1)[0];
            Disk::new(c, rng.gen_range(0.05..0.8))
        })
        .collect();
    hull_points_disks(&points, &disks)
}

pub fn mixture(rng: &mut impl Rng) -> Result<ArcPolygon, GeometryError> {
    let a = point_hull(rng)?;
    let b = clipped_disk(rng)?;
    let t = rng.gen_range(0.1..0.9);
    combination(&a, t, &b, 1.0 - t)
}

/// A random body of the given kind; retries degenerate or failed draws.
pub fn random_body(rng: &mut impl Rng, kind: BodyKind) -> ArcPolygon {
    loop {
        let body = match kind {
            BodyKind::PointHull => point_hull(rng),
            BodyKind::ClippedDisk => clipped_disk(rng),
            BodyKind::Mixture => mixture(rng),
            BodyKind::RoundedHull => rounded_hull(rng),
        };
        if let Ok(b) = body {
            if b.is_valid() && !b.is_degenerate() && b.area() > 1e-3 {
                return b;
            }
        }
    }
}

/// Cycles through all kinds.
pub fn random_bodies(rng: &mut impl Rng, n: usize) -> Vec<ArcPolygon> {
    (0..n).map(|i| random_body(rng, BodyKind::ALL[i % BodyKind::ALL.len()])).collect()
}

/// Whether the boundary has no arcs.
pub fn is_polygon(body: &ArcPolygon) -> bool {
    body.elements().iter().all(|e| matches!(e, crate::geometry::BoundaryElement::Segment { .. }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn draws_are_valid_and_reproducible() {
        let a = random_bodies(&mut ChaCha8Rng::seed_from_u64(7), 40);
        let b = random_bodies(&mut ChaCha8Rng::seed_from_u64(7), 40);
        assert_eq!(a, b);
        assert!(a.iter().all(|k| k.is_valid()));
        assert!(a.iter().any(is_polygon) && a.iter().any(|k| !is_polygon(k)));
    }
}
