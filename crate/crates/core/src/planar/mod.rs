//! Plane curves: signed curvature, constant-width bodies, spirals, the orb
//! web layout, the yin-yang figure and the rope-around-a-sphere computation.

mod convex;
mod curve;
mod web;
mod yin_yang;

use std::f64::consts::TAU;

use thiserror::Error;

pub use convex::{
    regular_polygon_of_diameter, reuleaux, BoundarySegment, ConvexBody, SUPPORT_SAMPLES,
};
pub use curve::{CircularArc, CurveShape, Jet, PlaneCurve, FD_STEP_FRACTION};
pub use web::{spider_web, spider_web_with_angle, Thread, WebLayout, SCAFFOLD_ANGLE_DEGREES};
pub use yin_yang::{yin_yang, YinYang};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PlanarError {
    #[error("speed vanishes at t = {t}")]
    DegenerateParameterization { t: f64 },
    #[error("constant-width polygons need an odd number of sides, got {0}")]
    EvenOrder(usize),
    #[error("polygon order must be at least 3, got {0}")]
    InvalidOrder(usize),
    #[error("polygon is not strictly convex and anticlockwise")]
    NotConvex,
    #[error("curve has no polar radius function")]
    NotPolar,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Height gained by lengthening a rope wrapped around a sphere by `extra`.
pub fn rope_gap(extra: f64) -> f64 {
    extra / TAU
}

/// Extra rope needed to lift it uniformly by `height`.
pub fn rope_extra(height: f64) -> f64 {
    TAU * height
}

/// `rope_extra` for a sphere of the given radius. The circumferences
/// `2π(R + h)` and `2πR` differ by `2πh`, so the radius only gets validated.
pub fn rope_extra_around(radius: f64, height: f64) -> Result<f64, PlanarError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(PlanarError::InvalidParameter(format!(
            "sphere radius must be positive, got {radius}"
        )));
    }
    Ok(rope_extra(height))
}
