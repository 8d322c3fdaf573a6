//! Shared fixtures for the kernel benchmarks.

use radii_atlas::families::{construct, vertex_table, FamilySpec};
use radii_atlas::geometry::ArcPolygon;

/// Family specs covering polygons, arc polygons and rounded bodies.
pub const SPECS: [&str; 5] = ["eqt", "ret", "bpen:r=0.7,gamma=1.0", "iso:gamma=0.9", "rounded:inner=ret,lambda=0.3"];

pub fn vertex_bodies() -> Vec<(String, ArcPolygon)> {
    vertex_table()
        .into_iter()
        .map(|row| (row.vertex.symbol().to_string(), construct(&FamilySpec::Vertex(row.vertex)).expect("vertex body")))
        .collect()
}

pub fn specs() -> Vec<FamilySpec> {
    SPECS.iter().map(|s| s.parse().expect("fixture spec")).collect()
}
