use std::f64::consts::{PI, TAU};

use super::curve::{CircularArc, PlaneCurve};
use super::PlanarError;
use crate::numerics::{Angle, CompensatedSum, Vec2};

/// Number of uniform directions at which the support function is tabulated.
pub const SUPPORT_SAMPLES: usize = 7200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundarySegment {
    /// Anticlockwise arc (positive sweep).
    Arc(CircularArc),
    Line {
        from: Vec2,
        to: Vec2,
    },
}

impl BoundarySegment {
    pub fn start(&self) -> Vec2 {
        match self {
            BoundarySegment::Arc(a) => a.start_point(),
            BoundarySegment::Line { from, .. } => *from,
        }
    }

    pub fn end(&self) -> Vec2 {
        match self {
            BoundarySegment::Arc(a) => a.end_point(),
            BoundarySegment::Line { to, .. } => *to,
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            BoundarySegment::Arc(a) => a.length(),
            BoundarySegment::Line { from, to } => from.distance(*to),
        }
    }

    /// Support of this piece alone in direction `theta`.
    fn support(&self, theta: f64) -> f64 {
        let u = Vec2::from_angle(theta);
        let ends = self.start().dot(u).max(self.end().dot(u));
        match self {
            BoundarySegment::Arc(a) => {
                let offset = (theta - a.start).rem_euclid(TAU);
                if offset <= a.sweep {
                    a.center.dot(u) + a.radius
                } else {
                    ends
                }
            }
            BoundarySegment::Line { .. } => ends,
        }
    }
}

/// A planar convex region given by its anticlockwise boundary, with the
/// support function `h(θ) = max ⟨x, (cos θ, sin θ)⟩` tabulated on a
/// uniform grid.
#[derive(Debug, Clone)]
pub struct ConvexBody {
    boundary: Vec<BoundarySegment>,
    support_samples: Vec<f64>,
}

impl ConvexBody {
    fn from_boundary(boundary: Vec<BoundarySegment>) -> Result<Self, PlanarError> {
        if boundary.is_empty() {
            return Err(PlanarError::InvalidParameter("empty boundary".into()));
        }
        let scale = boundary
            .iter()
            .map(|s| s.start().norm() + s.length())
            .fold(0.0, f64::max);
        for (i, seg) in boundary.iter().enumerate() {
            let next = &boundary[(i + 1) % boundary.len()];
            if seg.end().distance(next.start()) > 1e-9 * scale.max(1.0) {
                return Err(PlanarError::InvalidParameter(format!(
                    "boundary is not closed between pieces {i} and {}",
                    (i + 1) % boundary.len()
                )));
            }
        }
        let mut body = ConvexBody {
            boundary,
            support_samples: Vec::new(),
        };
        body.support_samples = (0..SUPPORT_SAMPLES)
            .map(|i| body.support(Angle::from_radians(TAU * i as f64 / SUPPORT_SAMPLES as f64)))
            .collect();
        Ok(body)
    }

    pub fn disc(center: Vec2, radius: f64) -> Result<Self, PlanarError> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(PlanarError::InvalidParameter(format!(
                "disc radius must be positive, got {radius}"
            )));
        }
        Self::from_boundary(vec![BoundarySegment::Arc(CircularArc {
            center,
            radius,
            start: 0.0,
            sweep: TAU,
        })])
    }

    /// Convex polygon from anticlockwise vertices.
    pub fn polygon(vertices: &[Vec2]) -> Result<Self, PlanarError> {
        let n = vertices.len();
        if n < 3 {
            return Err(PlanarError::InvalidParameter(
                "polygon needs at least 3 vertices".into(),
            ));
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if (b - a).cross(c - b) <= 0.0 {
                return Err(PlanarError::NotConvex);
            }
        }
        Self::from_boundary(
            (0..n)
                .map(|i| BoundarySegment::Line {
                    from: vertices[i],
                    to: vertices[(i + 1) % n],
                })
                .collect(),
        )
    }

    /// Axis-aligned rectangle centred at the origin.
    pub fn rectangle(width: f64, height: f64) -> Result<Self, PlanarError> {
        let (w, h) = (width / 2.0, height / 2.0);
        Self::polygon(&[
            Vec2::new(-w, -h),
            Vec2::new(w, -h),
            Vec2::new(w, h),
            Vec2::new(-w, h),
        ])
    }

    pub fn boundary(&self) -> &[BoundarySegment] {
        &self.boundary
    }

    pub fn support_samples(&self) -> &[f64] {
        &self.support_samples
    }

    /// Exact support function evaluated on the boundary pieces.
    pub fn support(&self, theta: Angle) -> f64 {
        self.boundary
            .iter()
            .map(|s| s.support(theta.radians()))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Width in direction θ: `h(θ) + h(θ + π)`.
    pub fn width(&self, theta: Angle) -> f64 {
        self.support(theta) + self.support(theta + Angle::from_radians(PI))
    }

    /// Smallest and largest width over `directions` evenly spaced directions
    /// in `[0, π)`.
    pub fn width_extremes(&self, directions: usize) -> (f64, f64) {
        (0..directions.max(1))
            .map(|i| self.width(Angle::from_radians(PI * i as f64 / directions as f64)))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), w| {
                (lo.min(w), hi.max(w))
            })
    }

    /// Exact boundary length.
    pub fn perimeter(&self) -> f64 {
        self.boundary
            .iter()
            .map(BoundarySegment::length)
            .collect::<CompensatedSum>()
            .value()
    }

    /// Perimeter as `∫ h(θ) dθ` over the tabulated support function.
    pub fn cauchy_perimeter(&self) -> f64 {
        let d = TAU / self.support_samples.len() as f64;
        self.support_samples
            .iter()
            .copied()
            .collect::<CompensatedSum>()
            .value()
            * d
    }

    /// Discrete `h + h'' ≥ 0` on the support table, plus anticlockwise
    /// turning at every boundary junction.
    pub fn is_convex(&self) -> bool {
        let h = &self.support_samples;
        let n = h.len();
        let d = TAU / n as f64;
        let scale = h.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        // rounding in the second difference grows like eps/d²
        let slack = 1e-12 * scale / (d * d);
        let support_ok = (0..n).all(|i| {
            let second = (h[(i + 1) % n] - 2.0 * h[i] + h[(i + n - 1) % n]) / (d * d);
            second + h[i] >= -slack
        });
        let turns_ok = (0..self.boundary.len()).all(|i| {
            let a = &self.boundary[i];
            let b = &self.boundary[(i + 1) % self.boundary.len()];
            let out = end_tangent(a);
            let inn = start_tangent(b);
            out.cross(inn) >= -1e-9 || out.dot(inn) > 1.0 - 1e-12
        });
        support_ok && turns_ok
    }

    /// Boundary as a curve: one parameter unit per piece.
    pub fn to_curve(&self) -> Result<PlaneCurve, PlanarError> {
        let arcs: Vec<CircularArc> = self
            .boundary
            .iter()
            .filter_map(|s| match s {
                BoundarySegment::Arc(a) => Some(*a),
                BoundarySegment::Line { .. } => None,
            })
            .collect();
        if arcs.len() == self.boundary.len() {
            return PlaneCurve::arc_chain(arcs);
        }
        let pieces = self.boundary.clone();
        let n = pieces.len();
        PlaneCurve::parametric(
            move |t| {
                let i = (t.floor().max(0.0) as usize).min(n - 1);
                let s = t - i as f64;
                match pieces[i] {
                    BoundarySegment::Arc(a) => a.point(s),
                    BoundarySegment::Line { from, to } => from + (to - from) * s,
                }
            },
            0.0,
            n as f64,
        )
    }
}

fn start_tangent(s: &BoundarySegment) -> Vec2 {
    match s {
        BoundarySegment::Arc(a) => a.tangent(0.0),
        BoundarySegment::Line { from, to } => (*to - *from).normalized(),
    }
}

fn end_tangent(s: &BoundarySegment) -> Vec2 {
    match s {
        BoundarySegment::Arc(a) => a.tangent(1.0),
        BoundarySegment::Line { from, to } => (*to - *from).normalized(),
    }
}

/// Vertices of the regular n-gon whose longest diagonal is `width`, first
/// vertex on the positive y-axis, anticlockwise.
pub fn regular_polygon_of_diameter(n: usize, width: f64) -> Vec<Vec2> {
    let circumradius = width / (2.0 * (PI / (2.0 * n as f64)).cos());
    (0..n)
        .map(|k| Vec2::polar(circumradius, PI / 2.0 + TAU * k as f64 / n as f64))
        .collect()
}

/// Reuleaux polygon: each edge of the regular n-gon of diameter `width` is
/// replaced by the arc of radius `width` centred at the opposite vertex.
pub fn reuleaux(n: usize, width: f64) -> Result<ConvexBody, PlanarError> {
    if n < 3 {
        return Err(PlanarError::InvalidOrder(n));
    }
    if n % 2 == 0 {
        return Err(PlanarError::EvenOrder(n));
    }
    if !(width > 0.0 && width.is_finite()) {
        return Err(PlanarError::InvalidParameter(format!(
            "width must be positive, got {width}"
        )));
    }
    let v = regular_polygon_of_diameter(n, width);
    let m = (n - 1) / 2;
    let sweep = PI / n as f64;
    let arcs = (0..n)
        .map(|j| {
            let center = v[(j + 1 + m) % n];
            BoundarySegment::Arc(CircularArc {
                center,
                radius: width,
                start: (v[j] - center).angle(),
                sweep,
            })
        })
        .collect();
    ConvexBody::from_boundary(arcs)
}
