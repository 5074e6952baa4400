use std::f64::consts::PI;

use super::curve::{CircularArc, PlaneCurve};
use super::PlanarError;
use crate::numerics::Vec2;

/// Outer circle of radius R and the S-shaped divider made of two
/// semicircles of radius R/2 centred at (∓R/2, 0).
#[derive(Debug, Clone)]
pub struct YinYang {
    pub radius: f64,
    pub outer: PlaneCurve,
    pub divider: PlaneCurve,
}

impl YinYang {
    pub fn divider_arcs(&self) -> [CircularArc; 2] {
        divider_arcs(self.radius)
    }

    pub fn divider_length(&self) -> f64 {
        self.divider_arcs().iter().map(CircularArc::length).sum()
    }

    /// Boundary polygons of the two regions, each with `4·samples` vertices:
    /// the region above the divider first.
    pub fn regions(&self, samples: usize) -> [Vec<Vec2>; 2] {
        let r = self.radius;
        let [left, right] = self.divider_arcs();
        let along = |arc: &CircularArc, rev: bool| -> Vec<Vec2> {
            (0..samples)
                .map(|i| {
                    let s = i as f64 / samples as f64;
                    arc.point(if rev { 1.0 - s } else { s })
                })
                .collect::<Vec<_>>()
        };
        let outer_arc = |from: f64| -> Vec<Vec2> {
            (0..2 * samples)
                .map(|i| Vec2::polar(r, from + PI * i as f64 / (2 * samples) as f64))
                .collect()
        };
        // upper: (−R,0) → divider → (R,0) → outer circle anticlockwise over the top
        let mut upper = along(&left, false);
        upper.extend(along(&right, false));
        upper.extend(outer_arc(0.0));
        // lower: (R,0) → divider reversed → (−R,0) → outer circle under the bottom
        let mut lower = along(&right, true);
        lower.extend(along(&left, true));
        lower.extend(outer_arc(PI));
        [upper, lower]
    }
}

fn divider_arcs(r: f64) -> [CircularArc; 2] {
    [
        CircularArc {
            center: Vec2::new(-r / 2.0, 0.0),
            radius: r / 2.0,
            start: PI,
            sweep: -PI,
        },
        CircularArc {
            center: Vec2::new(r / 2.0, 0.0),
            radius: r / 2.0,
            start: PI,
            sweep: PI,
        },
    ]
}

pub fn yin_yang(radius: f64) -> Result<YinYang, PlanarError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(PlanarError::InvalidParameter(format!(
            "radius must be positive, got {radius}"
        )));
    }
    Ok(YinYang {
        radius,
        outer: PlaneCurve::circle(Vec2::ZERO, radius)?,
        divider: PlaneCurve::arc_chain(divider_arcs(radius).to_vec())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shoelace(poly: &[Vec2]) -> f64 {
        (0..poly.len())
            .map(|i| poly[i].cross(poly[(i + 1) % poly.len()]))
            .sum::<f64>()
            / 2.0
    }

    #[test]
    fn divider_length_is_pi_r() {
        for r in [1.0, 2.5] {
            let yy = yin_yang(r).unwrap();
            assert!((yy.divider_length() - PI * r).abs() < 1e-14);
        }
    }

    #[test]
    fn regions_are_congruent_halves() {
        let r = 2.0;
        let yy = yin_yang(r).unwrap();
        let [upper, lower] = yy.regions(2000);
        let a_up = shoelace(&upper);
        let a_lo = shoelace(&lower);
        assert!((a_up - PI * r * r / 2.0).abs() < 1e-4);
        assert!((a_up - a_lo).abs() < 1e-9);
        // 180° rotation maps the upper boundary onto the lower one
        for p in &upper {
            let q = -*p;
            let nearest = lower
                .iter()
                .map(|l| l.distance(q))
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-12);
        }
    }

    #[test]
    fn divider_is_tangent_continuous() {
        let yy = yin_yang(1.0).unwrap();
        let [left, right] = yy.divider_arcs();
        // meets at the origin with matching tangent
        assert!(left.end_point().norm() < 1e-15);
        assert!(right.start_point().norm() < 1e-15);
        assert!((left.tangent(1.0) - right.tangent(0.0)).norm() < 1e-12);
        // tangent to the outer circle where it meets it
        let fd = |f: &dyn Fn(f64) -> Vec2, t: f64| (f(t + 1e-7) - f(t - 1e-7)) / 2e-7;
        let outer = |t: f64| Vec2::polar(1.0, t);
        let at_left = fd(&outer, PI).normalized();
        let at_right = fd(&outer, 0.0).normalized();
        assert!(left.tangent(0.0).cross(at_left).abs() < 1e-9);
        assert!(right.tangent(1.0).cross(at_right).abs() < 1e-9);
        assert!((left.start_point() - Vec2::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((right.end_point() - Vec2::new(1.0, 0.0)).norm() < 1e-15);
    }
}
