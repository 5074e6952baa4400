//! Helices seen from their axis, the shell swept by a growing circle along an
//! equiangular spiral, and the angle at which successive whorls just touch.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::mesh::{Mesh, MeshError};
use crate::numerics::{bisect, Angle, NumericsError, Tolerance, Vec2, Vec3};
use crate::planar::{PlanarError, PlaneCurve};

/// Lower and upper end of the touching-angle search, in degrees.
pub const SCAN_RANGE_DEGREES: (f64, f64) = (1.0, 89.0);
/// Step of the sign-change scan, in degrees.
pub const SCAN_STEP_DEGREES: f64 = 0.1;
/// Relative slack below zero before a whorl gap counts as an overlap, so
/// exactly touching whorls are not flagged through rounding.
pub const GAP_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum SpaceError {
    #[error("helix needs R > 0 and c ≠ 0, got R = {radius}, c = {pitch}")]
    InvalidHelix { radius: f64, pitch: f64 },
    #[error("parameter range reaches the eye (c·t ≤ 0 at t = {t})")]
    EyeOnCurve { t: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("whorl gap has no sign change on ({lo}°, {hi}°)")]
    NoRoot { lo: f64, hi: f64 },
    #[error("whorl gap changes sign {} times; brackets (degrees): {brackets:?}", brackets.len())]
    MultipleRoots { brackets: Vec<(f64, f64)> },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Right,
    Left,
}

impl Handedness {
    fn sign(self) -> f64 {
        match self {
            Handedness::Right => 1.0,
            Handedness::Left => -1.0,
        }
    }
}

/// `t ↦ (R cos t, ±R sin t, c·t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Helix {
    radius: f64,
    pitch: f64,
    handedness: Handedness,
}

impl Helix {
    pub fn new(radius: f64, pitch: f64, handedness: Handedness) -> Result<Self, SpaceError> {
        if !(radius > 0.0 && radius.is_finite() && pitch != 0.0 && pitch.is_finite()) {
            return Err(SpaceError::InvalidHelix { radius, pitch });
        }
        Ok(Self {
            radius,
            pitch,
            handedness,
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn pitch(&self) -> f64 {
        self.pitch
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    pub fn mirrored(&self) -> Self {
        let handedness = match self.handedness {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        };
        Self {
            handedness,
            ..*self
        }
    }

    pub fn point(&self, t: f64) -> Vec3 {
        let s = self.handedness.sign();
        Vec3::new(
            self.radius * t.cos(),
            s * self.radius * t.sin(),
            self.pitch * t,
        )
    }

    pub fn tangent(&self, t: f64) -> Vec3 {
        let s = self.handedness.sign();
        Vec3::new(
            -self.radius * t.sin(),
            s * self.radius * t.cos(),
            self.pitch,
        )
    }

    /// Closed form `arccos(c / √(R² + c²))`.
    pub fn generator_angle(&self) -> Angle {
        Angle::from_radians((self.pitch / self.radius.hypot(self.pitch)).acos())
    }

    /// Angle between the tangent at `t` and the z axis.
    pub fn tangent_generator_angle(&self, t: f64) -> Angle {
        let v = self.tangent(t);
        Angle::from_radians(FRAC_PI_2 - v.z.atan2(v.x.hypot(v.y)))
    }
}

/// Central projection from the origin onto the plane `z = d`.
pub fn project_point(p: Vec3, d: f64) -> Option<Vec2> {
    if p.z > 0.0 && d > 0.0 {
        Some(Vec2::new(d * p.x / p.z, d * p.y / p.z))
    } else {
        None
    }
}

/// Image of the helix over `[t_min, t_max]` for an eye at the origin looking
/// up the axis: the spiral `ρ = dR/(c·t)` at polar angle `±t`.
pub fn project_from_axis(
    helix: &Helix,
    d: f64,
    t_min: f64,
    t_max: f64,
) -> Result<PlaneCurve, SpaceError> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(SpaceError::InvalidParameter(format!(
            "image plane height must be positive, got {d}"
        )));
    }
    if !(t_min < t_max) {
        return Err(SpaceError::InvalidParameter(format!(
            "empty parameter range [{t_min}, {t_max}]"
        )));
    }
    for t in [t_min, t_max] {
        if helix.pitch * t <= 0.0 {
            return Err(SpaceError::EyeOnCurve { t });
        }
    }
    let k = d * helix.radius / helix.pitch;
    Ok(PlaneCurve::reciprocal(
        k,
        helix.handedness == Handedness::Left,
        t_min,
        t_max,
    )?)
}

/// Tube radius as a multiple of the spiral radius, as a function of α.
#[derive(Clone, Default)]
pub enum TubeRatio {
    /// `1/sin α`: the radius of curvature of the spiral over its radius.
    #[default]
    InverseSin,
    Sin,
    Constant(f64),
    Custom(Arc<dyn Fn(Angle) -> f64 + Send + Sync>),
}

impl TubeRatio {
    pub fn eval(&self, alpha: Angle) -> f64 {
        match self {
            TubeRatio::InverseSin => 1.0 / alpha.sin(),
            TubeRatio::Sin => alpha.sin(),
            TubeRatio::Constant(c) => *c,
            TubeRatio::Custom(f) => f(alpha),
        }
    }
}

impl fmt::Debug for TubeRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeRatio::InverseSin => f.write_str("InverseSin"),
            TubeRatio::Sin => f.write_str("Sin"),
            TubeRatio::Constant(c) => write!(f, "Constant({c})"),
            TubeRatio::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl fmt::Display for TubeRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeRatio::InverseSin => f.write_str("1/sin"),
            TubeRatio::Sin => f.write_str("sin"),
            TubeRatio::Constant(c) => write!(f, "{c}"),
            TubeRatio::Custom(_) => f.write_str("custom"),
        }
    }
}

/// Plane holding each cross-section circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SectionPlane {
    /// Spanned by the in-plane normal of the spiral and the z axis.
    #[default]
    Normal,
    /// Spanned by the radius vector and the z axis. The circle then reaches
    /// exactly `r(1 ± c)` from the centre, which is what the whorl gap measures.
    Radial,
}

#[derive(Debug, Clone)]
pub struct ShellParams {
    pub alpha: Angle,
    pub tube_ratio: TubeRatio,
    pub turns: u32,
    pub samples_per_turn: usize,
    /// Points on each cross-section circle; must be even.
    pub ring_samples: usize,
    pub start_angle: f64,
    pub section: SectionPlane,
}

impl ShellParams {
    pub fn new(alpha: Angle) -> Self {
        Self {
            alpha,
            tube_ratio: TubeRatio::default(),
            turns: 3,
            samples_per_turn: 64,
            ring_samples: 24,
            start_angle: 0.0,
            section: SectionPlane::default(),
        }
    }

    pub fn with_tube_ratio(mut self, tube_ratio: TubeRatio) -> Self {
        self.tube_ratio = tube_ratio;
        self
    }

    pub fn with_section(mut self, section: SectionPlane) -> Self {
        self.section = section;
        self
    }

    pub fn ratio(&self) -> f64 {
        self.tube_ratio.eval(self.alpha)
    }

    pub fn validate(&self) -> Result<(), SpaceError> {
        let a = self.alpha.radians();
        if !(a > 0.0 && a < FRAC_PI_2) {
            return Err(SpaceError::InvalidParameter(format!(
                "α must lie in (0°, 90°), got {}",
                self.alpha
            )));
        }
        let c = self.ratio();
        if !(c > 0.0 && c.is_finite()) {
            return Err(SpaceError::InvalidParameter(format!(
                "tube ratio must be positive, got {c}"
            )));
        }
        if self.turns < 1 {
            return Err(SpaceError::InvalidParameter(
                "turns must be at least 1".into(),
            ));
        }
        if self.samples_per_turn < 3 {
            return Err(SpaceError::InvalidParameter(
                "samples per turn must be at least 3".into(),
            ));
        }
        if self.ring_samples < 4 || self.ring_samples % 2 != 0 {
            return Err(SpaceError::InvalidParameter(format!(
                "ring samples must be even and at least 4, got {}",
                self.ring_samples
            )));
        }
        if !self.start_angle.is_finite() {
            return Err(SpaceError::InvalidParameter(
                "start angle must be finite".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ShellMesh {
    pub mesh: Mesh,
    pub whorl_gap: f64,
    /// Set when consecutive whorls overlap (gap below `−GAP_TOLERANCE·k`).
    pub self_intersecting: bool,
    samples_per_turn: usize,
    ring_samples: usize,
    spine_samples: usize,
}

impl ShellMesh {
    fn ring_vertex(&self, i: usize, j: usize) -> Vec3 {
        self.mesh.vertices()[i * self.ring_samples + j]
    }

    /// Largest relative mismatch, over every spine sample with a whorl
    /// outside it, between the outermost point of one whorl and the
    /// innermost point of the next, both measured from the axis.
    pub fn whorl_contact_residual(&self) -> Option<f64> {
        let half = self.ring_samples / 2;
        (0..self.spine_samples - self.samples_per_turn)
            .map(|i| {
                let outside = self.ring_vertex(i, 0).norm();
                let inside = self.ring_vertex(i + self.samples_per_turn, half).norm();
                (outside - inside).abs() / outside
            })
            .reduce(f64::max)
    }
}

fn spiral_point(theta: f64, cot: f64) -> (Vec3, Vec3) {
    let r = (theta * cot).exp();
    let (s, c) = theta.sin_cos();
    let p = Vec3::new(r * c, r * s, 0.0);
    let tangent = Vec3::new(r * (cot * c - s), r * (cot * s + c), 0.0);
    (p, tangent)
}

/// Tube around `r(θ) = e^{θ cot α}` with circles of radius `c·r`, capped at
/// both ends; outward-oriented triangles.
pub fn shell_surface(params: &ShellParams) -> Result<ShellMesh, SpaceError> {
    params.validate()?;
    let cot = 1.0 / params.alpha.tan();
    let c = params.ratio();
    let m = params.ring_samples;
    let n = params.turns as usize * params.samples_per_turn;

    let mut vertices = Vec::with_capacity((n + 1) * m + 2);
    let mut spine = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let theta = params.start_angle + TAU * i as f64 / params.samples_per_turn as f64;
        let (p, tangent) = spiral_point(theta, cot);
        let u = match params.section {
            SectionPlane::Normal => tangent.cross(Vec3::Z).normalized(),
            SectionPlane::Radial => p.normalized(),
        };
        let radius = c * p.norm();
        for j in 0..m {
            let phi = TAU * j as f64 / m as f64;
            vertices.push(p + (u * phi.cos() + Vec3::Z * phi.sin()) * radius);
        }
        spine.push(p);
    }
    let first_cap = vertices.len();
    vertices.push(spine[0]);
    vertices.push(spine[n]);

    let v = |i: usize, j: usize| i * m + j % m;
    let mut faces = Vec::with_capacity(2 * n * m + 2 * m);
    for i in 0..n {
        for j in 0..m {
            let (a, b, cc, d) = (v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1));
            faces.push(vec![a, b, cc]);
            faces.push(vec![a, cc, d]);
        }
    }
    for j in 0..m {
        faces.push(vec![first_cap, v(0, j), v(0, j + 1)]);
        faces.push(vec![first_cap + 1, v(n, j + 1), v(n, j)]);
    }

    let gap = whorl_gap(params.alpha, c);
    let k = growth_per_turn(params.alpha);
    Ok(ShellMesh {
        mesh: Mesh::new(vertices, faces)?,
        whorl_gap: gap,
        self_intersecting: gap < -GAP_TOLERANCE * k,
        samples_per_turn: params.samples_per_turn,
        ring_samples: m,
        spine_samples: n + 1,
    })
}

/// Growth factor per turn, `e^{2π cot α}`.
pub fn growth_per_turn(alpha: Angle) -> f64 {
    (TAU / alpha.tan()).exp()
}

/// `k(1 − c) − (1 + c)`: inner edge of the next whorl minus outer edge of
/// this one, in units of the spiral radius.
pub fn whorl_gap(alpha: Angle, c: f64) -> f64 {
    let k = growth_per_turn(alpha);
    k * (1.0 - c) - (1.0 + c)
}

/// Ratio that makes the whorls touch at a given α.
pub fn touching_ratio(alpha: Angle) -> f64 {
    let k = growth_per_turn(alpha);
    (k - 1.0) / (k + 1.0)
}

/// For a constant ratio `c ∈ (0, 1)`, the touching angle
/// `arctan(2π / ln((1 + c)/(1 − c)))`.
pub fn touching_angle_for_constant(c: f64) -> Option<Angle> {
    if !(c > 0.0 && c < 1.0) {
        return None;
    }
    let k = (1.0 + c) / (1.0 - c);
    Some(Angle::from_radians((TAU / k.ln()).atan()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TouchingReport {
    pub alpha: Angle,
    pub tube_ratio: f64,
    pub half_golden: Angle,
    /// `alpha − half_golden`.
    pub deviation: Angle,
}

/// Unique α in `(1°, 89°)` where the whorl gap vanishes for `tube_ratio`.
pub fn solve_touching_angle(tube_ratio: &TubeRatio) -> Result<TouchingReport, SpaceError> {
    let (lo, hi) = SCAN_RANGE_DEGREES;
    let steps = ((hi - lo) / SCAN_STEP_DEGREES).round() as usize;
    let deg = |i: usize| lo + (hi - lo) * i as f64 / steps as f64;
    let gap = |rad: f64| {
        let a = Angle::from_radians(rad);
        whorl_gap(a, tube_ratio.eval(a))
    };

    let mut values = Vec::with_capacity(steps + 1);
    for i in 0..=steps {
        let x = deg(i);
        let g = gap(x.to_radians());
        if !g.is_finite() {
            return Err(NumericsError::NonFinite { x: x.to_radians() }.into());
        }
        values.push(g);
    }
    let brackets: Vec<(f64, f64)> = (0..steps)
        .filter(|&i| (values[i] > 0.0) != (values[i + 1] > 0.0))
        .map(|i| (deg(i), deg(i + 1)))
        .collect();
    let (a, b) = match brackets.as_slice() {
        [] => return Err(SpaceError::NoRoot { lo, hi }),
        [one] => *one,
        _ => return Err(SpaceError::MultipleRoots { brackets }),
    };
    let root = bisect(
        gap,
        a.to_radians(),
        b.to_radians(),
        Tolerance::new(1e-14, 200)?,
    )?;
    let alpha = Angle::from_radians(root);
    let half_golden = half_golden_angle();
    Ok(TouchingReport {
        alpha,
        tube_ratio: tube_ratio.eval(alpha),
        half_golden,
        deviation: alpha - half_golden,
    })
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `2π/φ²`, the smaller part of the full turn cut in golden ratio.
pub fn golden_angle() -> Angle {
    let phi = golden_ratio();
    Angle::from_radians(TAU / (phi * phi))
}

pub fn golden_angle_complement() -> Angle {
    Angle::from_radians(TAU / golden_ratio())
}

pub fn half_golden_angle() -> Angle {
    golden_angle() * 0.5
}
