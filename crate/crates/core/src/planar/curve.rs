use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use super::PlanarError;
use crate::numerics::{Angle, Vec2, DEFAULT_TOLERANCE};

/// Finite-difference step as a fraction of the parameter range.
pub const FD_STEP_FRACTION: f64 = 1e-5;

/// A circular arc `center + radius·(cos φ, sin φ)` for φ from `start`
/// through `start + sweep`. Positive sweep runs anticlockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularArc {
    pub center: Vec2,
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl CircularArc {
    pub fn point_at_angle(&self, phi: f64) -> Vec2 {
        self.center + Vec2::polar(self.radius, phi)
    }

    pub fn start_point(&self) -> Vec2 {
        self.point_at_angle(self.start)
    }

    pub fn end_point(&self) -> Vec2 {
        self.point_at_angle(self.start + self.sweep)
    }

    pub fn length(&self) -> f64 {
        self.radius * self.sweep.abs()
    }

    /// Point at fraction `s ∈ [0, 1]` along the arc.
    pub fn point(&self, s: f64) -> Vec2 {
        self.point_at_angle(self.start + self.sweep * s)
    }

    /// Unit tangent in the direction of travel at fraction `s`.
    pub fn tangent(&self, s: f64) -> Vec2 {
        let u = Vec2::from_angle(self.start + self.sweep * s).perp();
        if self.sweep >= 0.0 {
            u
        } else {
            -u
        }
    }
}

type ParamFn = Arc<dyn Fn(f64) -> Vec2 + Send + Sync>;

/// Geometry behind a [`PlaneCurve`]. Every variant except `Parametric`
/// carries closed-form derivatives.
#[derive(Clone)]
pub enum CurveShape {
    Circle {
        center: Vec2,
        radius: f64,
        counterclockwise: bool,
    },
    Line {
        origin: Vec2,
        direction: Vec2,
    },
    /// `r(θ) = a + bθ`.
    Archimedean {
        a: f64,
        b: f64,
    },
    /// `r(θ) = a·e^(bθ)`.
    Logarithmic {
        a: f64,
        b: f64,
    },
    /// `r(t) = k/t` at polar angle `t`, or `−t` when mirrored.
    Reciprocal {
        k: f64,
        mirrored: bool,
    },
    /// Arc `i` covers parameters `[i, i+1]`.
    ArcChain(Vec<CircularArc>),
    Parametric(ParamFn),
}

impl fmt::Debug for CurveShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveShape::Circle {
                center,
                radius,
                counterclockwise,
            } => f
                .debug_struct("Circle")
                .field("center", center)
                .field("radius", radius)
                .field("counterclockwise", counterclockwise)
                .finish(),
            CurveShape::Line { origin, direction } => f
                .debug_struct("Line")
                .field("origin", origin)
                .field("direction", direction)
                .finish(),
            CurveShape::Archimedean { a, b } => f
                .debug_struct("Archimedean")
                .field("a", a)
                .field("b", b)
                .finish(),
            CurveShape::Logarithmic { a, b } => f
                .debug_struct("Logarithmic")
                .field("a", a)
                .field("b", b)
                .finish(),
            CurveShape::Reciprocal { k, mirrored } => f
                .debug_struct("Reciprocal")
                .field("k", k)
                .field("mirrored", mirrored)
                .finish(),
            CurveShape::ArcChain(arcs) => f.debug_tuple("ArcChain").field(arcs).finish(),
            CurveShape::Parametric(_) => f.write_str("Parametric(..)"),
        }
    }
}

/// Position, velocity and acceleration at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub point: Vec2,
    pub velocity: Vec2,
    pub acceleration: Vec2,
}

/// A parametric plane curve over `[t_min, t_max]`, sampled with
/// `resolution` segments when flattened.
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    shape: CurveShape,
    t_min: f64,
    t_max: f64,
    resolution: usize,
}

impl PlaneCurve {
    fn with_shape(shape: CurveShape, t_min: f64, t_max: f64, resolution: usize) -> Self {
        Self {
            shape,
            t_min,
            t_max,
            resolution,
        }
    }

    pub fn circle(center: Vec2, radius: f64) -> Result<Self, PlanarError> {
        Self::circle_oriented(center, radius, true)
    }

    pub fn circle_oriented(
        center: Vec2,
        radius: f64,
        counterclockwise: bool,
    ) -> Result<Self, PlanarError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(PlanarError::InvalidParameter(format!(
                "circle radius must be positive, got {radius}"
            )));
        }
        Ok(Self::with_shape(
            CurveShape::Circle {
                center,
                radius,
                counterclockwise,
            },
            0.0,
            TAU,
            360,
        ))
    }

    pub fn line(origin: Vec2, direction: Vec2) -> Result<Self, PlanarError> {
        if !(direction.norm() > 0.0) {
            return Err(PlanarError::InvalidParameter(
                "line direction must be nonzero".into(),
            ));
        }
        Ok(Self::with_shape(
            CurveShape::Line { origin, direction },
            0.0,
            1.0,
            1,
        ))
    }

    /// `r(θ) = a + bθ` over three turns.
    pub fn archimedean(a: f64, b: f64) -> Self {
        Self::with_shape(CurveShape::Archimedean { a, b }, 0.0, 3.0 * TAU, 1080)
    }

    /// `r(θ) = a·e^(bθ)` over three turns; `a` must be positive.
    pub fn logarithmic(a: f64, b: f64) -> Result<Self, PlanarError> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(PlanarError::InvalidParameter(format!(
                "logarithmic spiral needs a > 0, got {a}"
            )));
        }
        Ok(Self::with_shape(
            CurveShape::Logarithmic { a, b },
            0.0,
            3.0 * TAU,
            1080,
        ))
    }

    /// `r(t) = k/t` at polar angle `±t`, on a range that excludes `t = 0`.
    pub fn reciprocal(k: f64, mirrored: bool, t_min: f64, t_max: f64) -> Result<Self, PlanarError> {
        if t_min <= 0.0 && t_max >= 0.0 {
            return Err(PlanarError::InvalidParameter(
                "reciprocal spiral range must exclude t = 0".into(),
            ));
        }
        Self::with_shape(CurveShape::Reciprocal { k, mirrored }, 0.0, 1.0, 720)
            .with_range(t_min, t_max)
    }

    pub fn arc_chain(arcs: Vec<CircularArc>) -> Result<Self, PlanarError> {
        if arcs.is_empty() {
            return Err(PlanarError::InvalidParameter("empty arc chain".into()));
        }
        let n = arcs.len();
        Ok(Self::with_shape(
            CurveShape::ArcChain(arcs),
            0.0,
            n as f64,
            64 * n,
        ))
    }

    pub fn parametric<F>(f: F, t_min: f64, t_max: f64) -> Result<Self, PlanarError>
    where
        F: Fn(f64) -> Vec2 + Send + Sync + 'static,
    {
        Self::with_shape(CurveShape::Parametric(Arc::new(f)), 0.0, 1.0, 512)
            .with_range(t_min, t_max)
    }

    pub fn with_range(mut self, t_min: f64, t_max: f64) -> Result<Self, PlanarError> {
        if !(t_min < t_max) || !t_min.is_finite() || !t_max.is_finite() {
            return Err(PlanarError::InvalidParameter(format!(
                "empty parameter interval [{t_min}, {t_max}]"
            )));
        }
        self.t_min = t_min;
        self.t_max = t_max;
        Ok(self)
    }

    pub fn with_resolution(mut self, resolution: usize) -> Self {
        self.resolution = resolution.max(1);
        self
    }

    pub fn shape(&self) -> &CurveShape {
        &self.shape
    }

    pub fn range(&self) -> (f64, f64) {
        (self.t_min, self.t_max)
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn is_analytic(&self) -> bool {
        !matches!(self.shape, CurveShape::Parametric(_))
    }

    /// Polar radius function for spiral-type shapes.
    fn polar(&self, t: f64) -> Option<(f64, f64, f64)> {
        match self.shape {
            CurveShape::Archimedean { a, b } => Some((a + b * t, b, 0.0)),
            CurveShape::Logarithmic { a, b } => {
                let r = a * (b * t).exp();
                Some((r, b * r, b * b * r))
            }
            CurveShape::Reciprocal { k, .. } => Some((k / t, -k / (t * t), 2.0 * k / (t * t * t))),
            _ => None,
        }
    }

    fn is_mirrored(&self) -> bool {
        matches!(self.shape, CurveShape::Reciprocal { mirrored: true, .. })
    }

    fn arc_at(arcs: &[CircularArc], t: f64) -> (&CircularArc, f64) {
        let i = (t.floor().max(0.0) as usize).min(arcs.len() - 1);
        (&arcs[i], t - i as f64)
    }

    pub fn point(&self, t: f64) -> Vec2 {
        match &self.shape {
            CurveShape::Parametric(f) => f(t),
            _ => self.analytic_jet(t).point,
        }
    }

    fn analytic_jet(&self, t: f64) -> Jet {
        let mirror = |v: Vec2| {
            if self.is_mirrored() {
                Vec2::new(v.x, -v.y)
            } else {
                v
            }
        };
        if let Some((r, dr, ddr)) = self.polar(t) {
            let u = Vec2::from_angle(t);
            let w = u.perp();
            return Jet {
                point: mirror(u * r),
                velocity: mirror(u * dr + w * r),
                acceleration: mirror(u * (ddr - r) + w * (2.0 * dr)),
            };
        }
        match &self.shape {
            CurveShape::Circle {
                center,
                radius,
                counterclockwise,
            } => {
                let s = if *counterclockwise { 1.0 } else { -1.0 };
                let u = Vec2::from_angle(s * t);
                Jet {
                    point: *center + u * *radius,
                    velocity: u.perp() * (s * radius),
                    acceleration: -u * *radius,
                }
            }
            CurveShape::Line { origin, direction } => Jet {
                point: *origin + *direction * t,
                velocity: *direction,
                acceleration: Vec2::ZERO,
            },
            CurveShape::ArcChain(arcs) => {
                let (arc, s) = Self::arc_at(arcs, t);
                let u = Vec2::from_angle(arc.start + arc.sweep * s);
                Jet {
                    point: arc.center + u * arc.radius,
                    velocity: u.perp() * (arc.radius * arc.sweep),
                    acceleration: -u * (arc.radius * arc.sweep * arc.sweep),
                }
            }
            _ => unreachable!("polar and parametric shapes handled elsewhere"),
        }
    }

    fn fd_step(&self) -> f64 {
        FD_STEP_FRACTION * (self.t_max - self.t_min)
    }

    /// Derivatives by second-order central differences on `point`.
    pub fn numeric_jet(&self, t: f64) -> Jet {
        let h = self.fd_step();
        let p0 = self.point(t);
        let pp = self.point(t + h);
        let pm = self.point(t - h);
        Jet {
            point: p0,
            velocity: (pp - pm) / (2.0 * h),
            acceleration: (pp - p0 * 2.0 + pm) / (h * h),
        }
    }

    pub fn jet(&self, t: f64) -> Jet {
        if self.is_analytic() {
            self.analytic_jet(t)
        } else {
            self.numeric_jet(t)
        }
    }

    fn curvature_from(jet: Jet, t: f64) -> Result<f64, PlanarError> {
        let speed = jet.velocity.norm();
        if !(speed >= DEFAULT_TOLERANCE) {
            return Err(PlanarError::DegenerateParameterization { t });
        }
        Ok(jet.velocity.cross(jet.acceleration) / speed.powi(3))
    }

    /// Signed curvature: positive when the curve turns anticlockwise.
    pub fn curvature(&self, t: f64) -> Result<f64, PlanarError> {
        Self::curvature_from(self.jet(t), t)
    }

    /// Curvature from finite differences regardless of any analytic form.
    pub fn curvature_numeric(&self, t: f64) -> Result<f64, PlanarError> {
        Self::curvature_from(self.numeric_jet(t), t)
    }

    /// Angle ψ from the radius vector to the tangent, measured anticlockwise;
    /// for polar curves `tan ψ = r / (dr/dθ)`.
    pub fn tangent_radial_angle(&self, t: f64) -> Result<Angle, PlanarError> {
        if let Some((r, dr, _)) = self.polar(t) {
            if !(r.abs() >= DEFAULT_TOLERANCE) {
                return Err(PlanarError::DegenerateParameterization { t });
            }
            let psi = r.atan2(dr);
            return Ok(Angle::from_radians(if self.is_mirrored() {
                -psi
            } else {
                psi
            }));
        }
        let jet = self.jet(t);
        if !(jet.point.norm() >= DEFAULT_TOLERANCE && jet.velocity.norm() >= DEFAULT_TOLERANCE) {
            return Err(PlanarError::DegenerateParameterization { t });
        }
        Ok(Angle::from_radians(
            jet.point
                .cross(jet.velocity)
                .atan2(jet.point.dot(jet.velocity)),
        ))
    }

    /// Parameters in range at which a polar spiral meets the ray at
    /// `ray_angle`, with the corresponding radii.
    pub fn ray_crossings(&self, ray_angle: f64) -> Result<Vec<(f64, f64)>, PlanarError> {
        if self.polar(self.t_min).is_none() {
            return Err(PlanarError::NotPolar);
        }
        let angle = if self.is_mirrored() {
            -ray_angle
        } else {
            ray_angle
        };
        let first = angle + ((self.t_min - angle) / TAU).ceil() * TAU;
        let mut out = Vec::new();
        let mut k = 0;
        loop {
            let t = first + TAU * k as f64;
            if t > self.t_max {
                break;
            }
            let (r, _, _) = self.polar(t).unwrap();
            if r > 0.0 {
                out.push((t, r));
            }
            k += 1;
        }
        Ok(out)
    }

    /// `resolution + 1` points evenly spaced in parameter.
    pub fn sample(&self) -> Vec<Vec2> {
        let n = self.resolution;
        (0..=n)
            .map(|i| {
                let t = self.t_min + (self.t_max - self.t_min) * i as f64 / n as f64;
                self.point(t)
            })
            .collect()
    }

    /// Length of the sampled polyline.
    pub fn polyline_length(&self) -> f64 {
        self.sample().windows(2).map(|w| w[0].distance(w[1])).sum()
    }
}
