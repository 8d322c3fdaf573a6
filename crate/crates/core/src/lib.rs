//! Radii of planar convex bodies and the (r, w, D) shape diagram.

pub mod geometry;
pub mod numeric;
pub mod radii;
pub mod families;
pub mod diagram;
pub mod oracle;
pub mod random;
pub mod acceptance;
