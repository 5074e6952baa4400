//! Computations behind a collection of mathematical curiosities: series
//! rearrangement, constant-width curves, spirals and shells, hyperbolic
//! tilings, polyhedra, the belt trick and linking numbers.
//!
//! Every construction comes with the invariant that makes it checkable, and
//! all text output is deterministic.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod export;
pub mod hyperbolic;
pub mod mesh;
pub mod numerics;
pub mod planar;
pub mod polyhedra;
pub mod series;
pub mod space;
pub mod topology;

pub use export::{format_number, NumberFormat, RenderStyle};
pub use mesh::Mesh;
pub use numerics::{Angle, Tolerance, Vec2, Vec3};

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] numerics::NumericsError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Planar(#[from] planar::PlanarError),
    #[error(transparent)]
    Space(#[from] space::SpaceError),
    #[error(transparent)]
    Hyperbolic(#[from] hyperbolic::HyperbolicError),
    #[error(transparent)]
    Mesh(#[from] mesh::MeshError),
    #[error(transparent)]
    Polyhedron(#[from] polyhedra::PolyhedronError),
    #[error(transparent)]
    Topology(#[from] topology::TopologyError),
    #[error(transparent)]
    Export(#[from] export::ExportError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
