//! Constant-width shapes in the plane.
//!
//! Reuleaux polygons and general disk-polygons (intersections of equal
//! disks), their inner parallel sets, Cheeger constants, and numerical
//! campaigns checking the extremality of the Reuleaux triangle.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cheeger;
pub mod disk_polygon;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod inner_parallel;
pub mod oracle;
pub mod reuleaux;
pub mod shape_spec;
pub mod svg;

pub use disk_polygon::{build_intersection, Arc, DiskPolygon, DiskPolygonJson, Vertex};
pub use error::{Error, Result};
pub use geometry::{circle_circle_intersection, min_enclosing_circle, Circle, Point2, EPS_GEO};
pub use reuleaux::{validate_constant_width, AngleSequence, ReuleauxPolygon};
pub use shape_spec::{Shape, ShapeSpec};
