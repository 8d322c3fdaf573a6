//! The nine-inequality description of the (r, w, D) diagram, classification against its
//! skeleton, boundary sampling and witness synthesis.

mod ineq;
mod sample;
mod skeleton;
mod witness;

pub use ineq::{
    check_2d_projection, eval_slacks, lb2_bound, lb3_bound_algebraic, lb3_bound_trig, ub2_bound,
    ub2_coefficient, ub3_bound, w_envelopes, Ineq, SlackReport, SlackVector,
};
pub use sample::{facet_patches, fmt12, sample_boundary, FacetPatch, Mesh, MeshPoint};
pub use skeleton::{classify, edge_table, EdgeInfo, LabelKind, SkeletonLabel};
pub use witness::synthesize_witness;

use crate::families::FamilyError;
use crate::geometry::ArcPolygon;
use crate::radii::{compute_radii, RadiiError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default tightness tolerance for classification.
pub const CLASSIFY_TOL: f64 = 1e-6;
/// Default tolerance for membership.
pub const MEMBER_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("{0}")]
    Domain(String),
    #[error("target {0:?} violates {1:?}")]
    NonMember(DiagramPoint, Vec<Ineq>),
    #[error("no constructive chart covers {0:?}: {1}")]
    Unsupported(DiagramPoint, String),
    #[error("chart inversion failed at {0:?}: {1}")]
    ChartFailure(DiagramPoint, String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Radii(#[from] RadiiError),
}

/// `(r/R, w/2R, D/2R)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl DiagramPoint {
    pub const BALL: DiagramPoint = DiagramPoint { x: 1.0, y: 1.0, z: 1.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        DiagramPoint { x, y, z }
    }

    pub fn from_radii(r: f64, w: f64, d: f64, big_r: f64) -> Self {
        DiagramPoint::new(r / big_r, 0.5 * w / big_r, 0.5 * d / big_r)
    }

    /// `(r, w, D, R)` with `R = 1`.
    pub fn radii(&self) -> [f64; 4] {
        [self.x, 2.0 * self.y, 2.0 * self.z, 1.0]
    }

    pub fn slacks(&self) -> SlackReport {
        let [r, w, d, big_r] = self.radii();
        eval_slacks(r, w, d, big_r)
    }

    pub fn dist_inf(&self, o: &DiagramPoint) -> f64 {
        (self.x - o.x).abs().max((self.y - o.y).abs()).max((self.z - o.z).abs())
    }

    pub fn lerp(&self, o: &DiagramPoint, t: f64) -> DiagramPoint {
        DiagramPoint::new(
            self.x + (o.x - self.x) * t,
            self.y + (o.y - self.y) * t,
            self.z + (o.z - self.z) * t,
        )
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

pub fn f_map(body: &ArcPolygon) -> Result<DiagramPoint, DiagramError> {
    let [r, w, d, big_r] = compute_radii(body)?.radii.values();
    if !(big_r > 0.0) {
        return Err(DiagramError::Domain("body has zero circumradius".into()));
    }
    Ok(DiagramPoint::from_radii(r, w, d, big_r))
}

/// Steinhagen's planar bound `w ≤ 3r`, implied by ub₂; returns `3r − w` normalized by R.
pub fn steinhagen_slack(p: &DiagramPoint) -> f64 {
    3.0 * p.x - 2.0 * p.y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, vertex_table, FamilySpec};

    #[test]
    fn vertices_map_to_table() {
        for row in vertex_table() {
            let p = f_map(&construct(&FamilySpec::Vertex(row.vertex)).unwrap()).unwrap();
            assert!(p.dist_inf(&row.point) < 1e-9, "{}: {p:?} vs {:?}", row.vertex.name(), row.point);
        }
    }

    #[test]
    fn steinhagen_holds_at_vertices() {
        for row in vertex_table() {
            assert!(steinhagen_slack(&row.point) >= -1e-12);
        }
    }
}
