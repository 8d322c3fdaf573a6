//! Named extremal bodies and parametric families, all normalized to the unit circumball.

pub mod constants;
mod build;
mod expected;
mod spec;
mod table;

pub use build::{construct, iso_triangle, reuleaux_disks, triangle_vertices, unit_eqt};
pub use expected::{expected_radii, ExpectedRadii};
pub use spec::{FamilySpec, Vertex};
pub(crate) use spec::{boat_r_range, iso_ball_r_range, triangle_r_range};
pub use table::{min_max_companions, vertex_table, Companions, Sign, VertexRow};

use crate::geometry::GeometryError;
use crate::radii::RadiiError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("malformed family spec `{spec}`: {reason}")]
    Syntax { spec: String, reason: String },
    #[error("{family}: {param} = {value} outside [{lo}, {hi}]")]
    OutOfRange { family: &'static str, param: &'static str, value: f64, lo: f64, hi: f64 },
    #[error("{0}")]
    Predicate(String),
    #[error("tangency solve failed (residual {0:e})")]
    Tangency(f64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Radii(#[from] RadiiError),
}
