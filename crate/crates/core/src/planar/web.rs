use std::f64::consts::{PI, TAU};

use super::curve::PlaneCurve;
use super::PlanarError;
use crate::numerics::{Angle, Vec2};

/// Default angle between the scaffold spiral and the radial threads.
pub const SCAFFOLD_ANGLE_DEGREES: f64 = 80.0;
/// Anchors sit this far out relative to the frame radius.
pub const ANCHOR_FACTOR: f64 = 1.5;
/// Hub (free zone) radius relative to the frame inradius.
pub const HUB_FRACTION: f64 = 0.1;
/// Outermost spiral radius relative to the frame inradius.
pub const OUTER_FRACTION: f64 = 0.9;

/// A straight thread between two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thread {
    pub from: Vec2,
    pub to: Vec2,
}

/// Orb web in construction order: Y, frame, radials, scaffold spiral
/// (logarithmic, built hub to frame), capture spiral (Archimedean, laid frame
/// to hub).
#[derive(Debug, Clone)]
pub struct WebLayout {
    pub hub: Vec2,
    pub anchors: [Vec2; 3],
    pub y_threads: [Thread; 3],
    /// Anticlockwise frame polygon.
    pub frame: Vec<Vec2>,
    pub radials: Vec<Thread>,
    pub scaffold: PlaneCurve,
    pub capture: PlaneCurve,
    /// Radii bounding both spirals.
    pub hub_radius: f64,
    pub outer_radius: f64,
}

impl WebLayout {
    pub fn radial_angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.radials.len() as f64
    }

    /// Radii at which the capture spiral crosses radial `j`, innermost first.
    pub fn capture_crossings(&self, j: usize) -> Vec<f64> {
        self.capture
            .ray_crossings(self.radial_angle(j))
            .map(|v| v.into_iter().map(|(_, r)| r).collect())
            .unwrap_or_default()
    }

    /// Angle between the scaffold spiral and radial `j` at each crossing.
    pub fn scaffold_crossing_angles(&self, j: usize) -> Vec<Angle> {
        self.scaffold
            .ray_crossings(self.radial_angle(j))
            .map(|v| {
                v.into_iter()
                    .filter_map(|(t, _)| self.scaffold.tangent_radial_angle(t).ok())
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Inradius of the frame polygon.
    pub fn frame_inradius(&self) -> f64 {
        let n = self.frame.len();
        (0..n)
            .map(|i| {
                let a = self.frame[i];
                let b = self.frame[(i + 1) % n];
                (b - a).cross(self.hub - a).abs() / a.distance(b)
            })
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn spider_web(
    radials: usize,
    rings: usize,
    frame_radius: f64,
) -> Result<WebLayout, PlanarError> {
    spider_web_with_angle(
        radials,
        rings,
        frame_radius,
        Angle::from_degrees(SCAFFOLD_ANGLE_DEGREES),
    )
}

pub fn spider_web_with_angle(
    radials: usize,
    rings: usize,
    frame_radius: f64,
    scaffold_angle: Angle,
) -> Result<WebLayout, PlanarError> {
    if radials < 3 {
        return Err(PlanarError::InvalidParameter(format!(
            "a web needs at least 3 radials, got {radials}"
        )));
    }
    if rings == 0 {
        return Err(PlanarError::InvalidParameter(
            "rings must be at least 1".into(),
        ));
    }
    if !(frame_radius > 0.0 && frame_radius.is_finite()) {
        return Err(PlanarError::InvalidParameter(format!(
            "frame radius must be positive, got {frame_radius}"
        )));
    }
    let psi = scaffold_angle.radians();
    if !(psi > 0.0 && psi < PI / 2.0) {
        return Err(PlanarError::InvalidParameter(format!(
            "scaffold angle must lie in (0°, 90°), got {scaffold_angle}"
        )));
    }

    let hub = Vec2::ZERO;
    let frame: Vec<Vec2> = (0..radials)
        .map(|j| Vec2::polar(frame_radius, TAU * j as f64 / radials as f64))
        .collect();
    let radial_threads: Vec<Thread> = frame.iter().map(|&to| Thread { from: hub, to }).collect();

    // Y uses three radials spread as evenly as the count allows.
    let y_index = [0, radials / 3, (2 * radials) / 3];
    let anchors = y_index.map(|j| frame[j] * ANCHOR_FACTOR);
    let y_threads = anchors.map(|to| Thread { from: hub, to });

    let inradius = frame_radius * (PI / radials as f64).cos();
    let hub_radius = HUB_FRACTION * inradius;
    let outer_radius = OUTER_FRACTION * inradius;

    let b = 1.0 / psi.tan();
    let scaffold = PlaneCurve::logarithmic(hub_radius, b)?
        .with_range(0.0, (outer_radius / hub_radius).ln() / b)?
        .with_resolution(64 * rings.max(4));

    let pitch = (outer_radius - hub_radius) / (TAU * rings as f64);
    let capture = PlaneCurve::archimedean(hub_radius, pitch)
        .with_range(0.0, TAU * rings as f64)?
        .with_resolution(180 * rings);

    Ok(WebLayout {
        hub,
        anchors,
        y_threads,
        frame,
        radials: radial_threads,
        scaffold,
        capture,
        hub_radius,
        outer_radius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capture_crossings_equally_spaced() {
        let web = spider_web(12, 8, 10.0).unwrap();
        for j in 0..12 {
            let radii = web.capture_crossings(j);
            assert!(radii.len() >= 7);
            let gap = radii[1] - radii[0];
            for w in radii.windows(2) {
                assert!((w[1] - w[0] - gap).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn scaffold_crossing_angle_is_uniform() {
        let web = spider_web(9, 5, 3.0).unwrap();
        let reference = web.scaffold_crossing_angles(0)[0];
        assert!((reference.degrees() - 80.0).abs() < 1e-9);
        for j in 0..9 {
            let angles = web.scaffold_crossing_angles(j);
            assert!(!angles.is_empty());
            for a in angles {
                assert!((a.radians() - reference.radians()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn three_radials_form_the_y() {
        let web = spider_web(3, 2, 1.0).unwrap();
        assert_eq!(web.frame.len(), 3);
        for (y, r) in web.y_threads.iter().zip(&web.radials) {
            let dir_y = (y.to - y.from).normalized();
            let dir_r = (r.to - r.from).normalized();
            assert!((dir_y - dir_r).norm() < 1e-15);
        }
    }

    #[test]
    fn spirals_stay_inside_frame() {
        for m in [3, 4, 7, 16] {
            let web = spider_web(m, 6, 2.0).unwrap();
            let limit = web.frame_inradius();
            for p in web
                .capture
                .sample()
                .into_iter()
                .chain(web.scaffold.sample())
            {
                assert!(p.norm() < limit);
            }
            for r in &web.radials {
                assert_eq!(r.from, web.hub);
            }
        }
    }

    #[test]
    fn invalid_webs() {
        assert!(spider_web(2, 3, 1.0).is_err());
        assert!(spider_web(5, 0, 1.0).is_err());
        assert!(spider_web(5, 3, -1.0).is_err());
        assert!(spider_web_with_angle(5, 3, 1.0, Angle::from_degrees(90.0)).is_err());
    }
}
