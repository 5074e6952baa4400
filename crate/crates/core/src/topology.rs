//! Rotation loops lifted to unit quaternions (the belt trick) and linking
//! numbers of closed polylines (Borromean rings, Hopf link).

use std::f64::consts::{FRAC_PI_2, TAU};
use std::ops::{Mul, Neg};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::numerics::Vec3;

/// Seed for the projection directions tried by the crossing count.
pub const PROJECTION_SEED: u64 = 0x00B0_7707_3A11;
pub const MAX_PROJECTION_ATTEMPTS: usize = 20;
/// Largest allowed distance of the pre-rounding Gauss sum from an integer.
pub const GAUSS_RESIDUAL_LIMIT: f64 = 0.1;
/// Curves closer than this are treated as touching.
pub const TOUCH_TOLERANCE: f64 = 1e-9;
pub const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TopologyError {
    #[error("quaternion norm {0} is not 1")]
    NotUnit(f64),
    #[error("step {step} turns by {angle} rad, which is not below π/2")]
    SamplingTooCoarse { step: usize, angle: f64 },
    #[error("path does not start and end at the identity (start {start} rad, end {end} rad)")]
    NotALoop { start: f64, end: f64 },
    #[error("a rotation path needs at least two samples")]
    EmptyPath,
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curves come within {distance} of each other")]
    CurvesTouch { distance: f64 },
    #[error("no generic projection direction found in {attempts} attempts")]
    DegenerateProjection { attempts: usize },
    #[error("Gauss sum {raw} is {residual} away from an integer")]
    GaussInconsistent { raw: f64, residual: f64 },
    #[error("crossing count gives {crossings} but the Gauss sum gives {gauss}")]
    MethodsDisagree { crossings: i64, gauss: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self, TopologyError> {
        let q = Self { w, x, y, z };
        let n = q.norm();
        if (n - 1.0).abs() > UNIT_TOLERANCE || !n.is_finite() {
            return Err(TopologyError::NotUnit(n));
        }
        Ok(q)
    }

    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let a = axis.normalized();
        let (s, c) = (angle / 2.0).sin_cos();
        Self {
            w: c,
            x: a.x * s,
            y: a.y * s,
            z: a.z * s,
        }
    }

    /// The representative with `w ≥ 0` of the two quaternions covering `m`.
    pub fn from_rotation(m: &Rotation) -> Self {
        let r = &m.0;
        let tr = r[0][0] + r[1][1] + r[2][2];
        let q = if tr > 0.0 {
            let s = (tr + 1.0).sqrt() * 2.0;
            Self {
                w: s / 4.0,
                x: (r[2][1] - r[1][2]) / s,
                y: (r[0][2] - r[2][0]) / s,
                z: (r[1][0] - r[0][1]) / s,
            }
        } else if r[0][0] > r[1][1] && r[0][0] > r[2][2] {
            let s = (1.0 + r[0][0] - r[1][1] - r[2][2]).sqrt() * 2.0;
            Self {
                w: (r[2][1] - r[1][2]) / s,
                x: s / 4.0,
                y: (r[0][1] + r[1][0]) / s,
                z: (r[0][2] + r[2][0]) / s,
            }
        } else if r[1][1] > r[2][2] {
            let s = (1.0 + r[1][1] - r[0][0] - r[2][2]).sqrt() * 2.0;
            Self {
                w: (r[0][2] - r[2][0]) / s,
                x: (r[0][1] + r[1][0]) / s,
                y: s / 4.0,
                z: (r[1][2] + r[2][1]) / s,
            }
        } else {
            let s = (1.0 + r[2][2] - r[0][0] - r[1][1]).sqrt() * 2.0;
            Self {
                w: (r[1][0] - r[0][1]) / s,
                x: (r[0][2] + r[2][0]) / s,
                y: (r[1][2] + r[2][1]) / s,
                z: s / 4.0,
            }
        };
        let q = q.scaled(1.0 / q.norm());
        if q.w < 0.0 {
            -q
        } else {
            q
        }
    }

    fn scaled(self, s: f64) -> Self {
        Self {
            w: self.w * s,
            x: self.x * s,
            y: self.y * s,
            z: self.z * s,
        }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, o: &Self) -> f64 {
        self.w * o.w + self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn conj(&self) -> Self {
        Self {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Angle of the rotation this quaternion represents, in `[0, 2π]`.
    pub fn rotation_angle(&self) -> f64 {
        2.0 * Vec3::new(self.x, self.y, self.z).norm().atan2(self.w.abs())
    }

    pub fn to_rotation(&self) -> Rotation {
        let Self { w, x, y, z } = *self;
        Rotation([
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ])
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl Neg for UnitQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(-1.0)
    }
}

impl Mul for UnitQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }
}

/// Rotation matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation(pub [[f64; 3]; 3]);

impl Rotation {
    pub const IDENTITY: Rotation = Rotation([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// Rodrigues' formula.
    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let k = axis.normalized();
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        Rotation([
            [
                c + k.x * k.x * t,
                k.x * k.y * t - k.z * s,
                k.x * k.z * t + k.y * s,
            ],
            [
                k.y * k.x * t + k.z * s,
                c + k.y * k.y * t,
                k.y * k.z * t - k.x * s,
            ],
            [
                k.z * k.x * t - k.y * s,
                k.z * k.y * t + k.x * s,
                c + k.z * k.z * t,
            ],
        ])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let r = &self.0;
        Vec3::new(
            r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
            r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
            r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Self {
        let r = &self.0;
        Rotation(std::array::from_fn(|i| std::array::from_fn(|j| r[j][i])))
    }

    pub fn angle(&self) -> f64 {
        UnitQuaternion::from_rotation(self).rotation_angle()
    }
}

impl Mul for Rotation {
    type Output = Rotation;
    fn mul(self, o: Rotation) -> Rotation {
        Rotation(std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| self.0[i][k] * o.0[k][j]).sum())
        }))
    }
}

/// Rotations sampled at `t = i/(len − 1)`, `i = 0..len`.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationPath {
    samples: Vec<Rotation>,
}

impl RotationPath {
    pub fn new(samples: Vec<Rotation>) -> Result<Self, TopologyError> {
        if samples.len() < 2 {
            return Err(TopologyError::EmptyPath);
        }
        Ok(Self { samples })
    }

    pub fn from_axis_angles(samples: &[(Vec3, f64)]) -> Result<Self, TopologyError> {
        Self::new(
            samples
                .iter()
                .map(|&(axis, angle)| Rotation::from_axis_angle(axis, angle))
                .collect(),
        )
    }

    pub fn samples(&self) -> &[Rotation] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Traverse `self`, then `other` carried along by `self`'s final rotation.
    pub fn then(&self, other: &RotationPath) -> RotationPath {
        let end = *self.samples.last().expect("nonempty path");
        let mut samples = self.samples.clone();
        samples.extend(other.samples.iter().skip(1).map(|&r| r * end));
        RotationPath { samples }
    }

    /// Each step subdivided in two along the connecting rotation.
    pub fn refined(&self) -> RotationPath {
        let mut samples = vec![self.samples[0]];
        for w in self.samples.windows(2) {
            let step = w[1] * w[0].transpose();
            let q = UnitQuaternion::from_rotation(&step);
            let v = Vec3::new(q.x, q.y, q.z);
            let half = if v.norm() == 0.0 {
                Rotation::IDENTITY
            } else {
                Rotation::from_axis_angle(v, q.rotation_angle() / 2.0)
            };
            samples.push(half * w[0]);
            samples.push(w[1]);
        }
        RotationPath { samples }
    }
}

/// Rotation by `2πn·t` about `axis`, with `16n + 16` steps.
pub fn full_twists(n: u32) -> RotationPath {
    full_twists_about(n, Vec3::Z, 16 * n as usize + 16)
}

pub fn full_twists_about(n: u32, axis: Vec3, steps: usize) -> RotationPath {
    let steps = steps.max(1);
    let samples = (0..=steps)
        .map(|i| Rotation::from_axis_angle(axis, TAU * n as f64 * i as f64 / steps as f64))
        .collect();
    RotationPath { samples }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftEndpoint {
    /// The loop contracts to a point.
    Plus,
    /// The loop is the nontrivial class.
    Minus,
}

impl LiftEndpoint {
    pub fn sign(self) -> i32 {
        match self {
            LiftEndpoint::Plus => 1,
            LiftEndpoint::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Lift {
    pub endpoint: LiftEndpoint,
    /// `(t, q)` per sample.
    pub trace: Vec<(f64, UnitQuaternion)>,
}

impl Lift {
    pub const CSV_HEADER: &'static str = "t,w,x,y,z";

    pub fn to_csv(&self, fmt_num: impl Fn(f64) -> String) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for (t, q) in &self.trace {
            let row: Vec<String> = std::iter::once(*t)
                .chain(q.to_array())
                .map(&fmt_num)
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Continuous lift to unit quaternions starting at `+1`: each sample's
/// matrix is converted to a quaternion and the sign closer to the previous
/// lift is kept.
pub fn lift_path(path: &RotationPath) -> Result<Lift, TopologyError> {
    let samples = path.samples();
    let (start, end) = (samples[0].angle(), samples[samples.len() - 1].angle());
    if start > UNIT_TOLERANCE || end > UNIT_TOLERANCE {
        return Err(TopologyError::NotALoop { start, end });
    }
    let last = (samples.len() - 1) as f64;
    let mut q = UnitQuaternion::from_rotation(&samples[0]);
    let mut trace = vec![(0.0, q)];
    for (i, w) in samples.windows(2).enumerate() {
        let angle = (w[1] * w[0].transpose()).angle();
        if angle >= FRAC_PI_2 {
            return Err(TopologyError::SamplingTooCoarse { step: i + 1, angle });
        }
        let next = UnitQuaternion::from_rotation(&w[1]);
        q = if next.dot(&q) < 0.0 { -next } else { next };
        trace.push(((i + 1) as f64 / last, q));
    }
    let endpoint = if q.w > 0.0 {
        LiftEndpoint::Plus
    } else {
        LiftEndpoint::Minus
    };
    Ok(Lift { endpoint, trace })
}

/// Closed polyline; the last point joins back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct PLCurve {
    points: Vec<Vec3>,
}

impl PLCurve {
    pub fn new(points: Vec<Vec3>) -> Result<Self, TopologyError> {
        if points.len() < 3 {
            return Err(TopologyError::InvalidCurve(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        if let Some(p) = points.iter().find(|p| !p.is_finite()) {
            return Err(TopologyError::InvalidCurve(format!(
                "non-finite point {p:?}"
            )));
        }
        let n = points.len();
        for i in 0..n {
            if points[i] == points[(i + 1) % n] {
                return Err(TopologyError::InvalidCurve(format!(
                    "points {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        Ok(Self { points })
    }

    /// `f(2πi/n)` for `i = 0..n`.
    pub fn sample(n: usize, f: impl Fn(f64) -> Vec3) -> Result<Self, TopologyError> {
        Self::new((0..n).map(|i| f(TAU * i as f64 / n as f64)).collect())
    }

    pub fn points(&self) -> &[Vec3] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn segments(&self) -> impl Iterator<Item = (Vec3, Vec3)> + '_ {
        let n = self.points.len();
        (0..n).map(move |i| (self.points[i], self.points[(i + 1) % n]))
    }

    pub fn transformed(&self, r: &Rotation, shift: Vec3) -> Self {
        Self {
            points: self.points.iter().map(|&p| r.apply(p) + shift).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        Self {
            points: self.points.iter().rev().copied().collect(),
        }
    }

    /// Largest distance of a point from the best plane through the first
    /// three non-collinear points.
    pub fn planarity_residual(&self) -> f64 {
        let p0 = self.points[0];
        let normal = self
            .points
            .iter()
            .skip(1)
            .flat_map(|&a| self.points.iter().map(move |&b| (a - p0).cross(b - p0)))
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or(Vec3::ZERO);
        if normal.norm() == 0.0 {
            return 0.0;
        }
        let n = normal.normalized();
        self.points
            .iter()
            .map(|&p| (p - p0).dot(n).abs())
            .fold(0.0, f64::max)
    }

    pub const CSV_HEADER: &'static str = "x,y,z";

    pub fn to_csv(&self, fmt_num: impl Fn(f64) -> String) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for p in &self.points {
            let row: Vec<String> = p.to_array().into_iter().map(&fmt_num).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Shortest distance between segments `[p, q]` and `[r, s]`.
pub fn segment_distance(p: Vec3, q: Vec3, r: Vec3, s: Vec3) -> f64 {
    let (d1, d2, w) = (q - p, s - r, p - r);
    let (a, b, c, d, e) = (d1.dot(d1), d1.dot(d2), d2.dot(d2), d1.dot(w), d2.dot(w));
    let denom = a * c - b * b;
    let mut sn = if denom > 1e-300 {
        (b * e - c * d) / denom
    } else {
        0.0
    };
    sn = sn.clamp(0.0, 1.0);
    let mut tn = (b * sn + e) / c;
    if tn < 0.0 {
        tn = 0.0;
        sn = (-d / a).clamp(0.0, 1.0);
    } else if tn > 1.0 {
        tn = 1.0;
        sn = ((b - d) / a).clamp(0.0, 1.0);
    }
    ((p + d1 * sn) - (r + d2 * tn)).norm()
}

pub fn min_distance(a: &PLCurve, b: &PLCurve) -> f64 {
    a.segments()
        .flat_map(|(p, q)| b.segments().map(move |(r, s)| segment_distance(p, q, r, s)))
        .fold(f64::INFINITY, f64::min)
}

fn check_disjoint(a: &PLCurve, b: &PLCurve) -> Result<(), TopologyError> {
    let distance = min_distance(a, b);
    if distance <= TOUCH_TOLERANCE {
        return Err(TopologyError::CurvesTouch { distance });
    }
    Ok(())
}

fn random_direction(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Twice the linking number: signed crossings seen along `d`, or `None` when
/// the projection is not generic.
fn signed_crossings(a: &PLCurve, b: &PLCurve, d: Vec3) -> Option<i64> {
    let e1 = if d.x.abs() < 0.9 { Vec3::X } else { Vec3::Y };
    let u = (e1 - d * e1.dot(d)).normalized();
    let v = d.cross(u);
    let flat = |p: Vec3| (p.dot(u), p.dot(v));
    const EPS: f64 = 1e-10;
    let mut total = 0;
    for (p, q) in a.segments() {
        let (p2, q2) = (flat(p), flat(q));
        for (r, s) in b.segments() {
            let (r2, s2) = (flat(r), flat(s));
            let da = (q2.0 - p2.0, q2.1 - p2.1);
            let db = (s2.0 - r2.0, s2.1 - r2.1);
            let denom = da.0 * db.1 - da.1 * db.0;
            let w = (r2.0 - p2.0, r2.1 - p2.1);
            let scale = (da.0.hypot(da.1) * db.0.hypot(db.1)).max(f64::MIN_POSITIVE);
            if denom.abs() <= EPS * scale {
                // parallel in projection: generic only if the lines are apart
                let offset =
                    (w.0 * da.1 - w.1 * da.0).abs() / da.0.hypot(da.1).max(f64::MIN_POSITIVE);
                if offset <= EPS {
                    return None;
                }
                continue;
            }
            let sa = (w.0 * db.1 - w.1 * db.0) / denom;
            let sb = (w.0 * da.1 - w.1 * da.0) / denom;
            let inside = |x: f64| x > -EPS && x < 1.0 + EPS;
            if !(inside(sa) && inside(sb)) {
                continue;
            }
            let strict = |x: f64| x > EPS && x < 1.0 - EPS;
            if !(strict(sa) && strict(sb)) {
                return None;
            }
            let (ha, hb) = ((p + (q - p) * sa).dot(d), (r + (s - r) * sb).dot(d));
            if (ha - hb).abs() <= EPS {
                return None;
            }
            let (over, under) = if ha > hb {
                (q - p, s - r)
            } else {
                (s - r, q - p)
            };
            total += if over.cross(under).dot(d) > 0.0 {
                1
            } else {
                -1
            };
        }
    }
    Some(total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingCount {
    pub linking_number: i64,
    pub direction: Vec3,
    pub attempts: usize,
}

/// Half the signed crossing count of a generic projection. Directions come
/// from a ChaCha generator seeded with `PROJECTION_SEED`.
pub fn linking_number(a: &PLCurve, b: &PLCurve) -> Result<CrossingCount, TopologyError> {
    check_disjoint(a, b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(PROJECTION_SEED);
    for attempt in 1..=MAX_PROJECTION_ATTEMPTS {
        let d = random_direction(&mut rng);
        if let Some(twice) = signed_crossings(a, b, d) {
            if twice % 2 == 0 {
                return Ok(CrossingCount {
                    linking_number: twice / 2,
                    direction: d,
                    attempts: attempt,
                });
            }
        }
    }
    Err(TopologyError::DegenerateProjection {
        attempts: MAX_PROJECTION_ATTEMPTS,
    })
}

/// Solid angle, over 4π, subtended by segment `[p1, p2]` as seen along
/// segment `[p3, p4]`; sums to the linking number over all pairs.
fn segment_pair_linking(p1: Vec3, p2: Vec3, p3: Vec3, p4: Vec3) -> f64 {
    let (r13, r14, r23, r24) = (p3 - p1, p4 - p1, p3 - p2, p4 - p2);
    let faces = [
        r13.cross(r14),
        r14.cross(r24),
        r24.cross(r23),
        r23.cross(r13),
    ];
    if faces.iter().any(|n| n.norm() < 1e-300) {
        return 0.0;
    }
    let n = faces.map(Vec3::normalized);
    let omega: f64 = (0..4)
        .map(|i| n[i].dot(n[(i + 1) % 4]).clamp(-1.0, 1.0).asin())
        .sum();
    let orientation = (p4 - p3).cross(p2 - p1).dot(r13);
    if orientation == 0.0 {
        return 0.0;
    }
    omega * orientation.signum() / (2.0 * TAU)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussLink {
    pub linking_number: i64,
    pub raw: f64,
}

/// Discrete Gauss double integral, summed in a fixed order.
pub fn linking_number_gauss(a: &PLCurve, b: &PLCurve) -> Result<GaussLink, TopologyError> {
    check_disjoint(a, b)?;
    let raw: f64 = a
        .segments()
        .map(|(p1, p2)| {
            b.segments()
                .map(|(p3, p4)| segment_pair_linking(p1, p2, p3, p4))
                .sum::<f64>()
        })
        .sum();
    let rounded = raw.round();
    let residual = (raw - rounded).abs();
    if residual > GAUSS_RESIDUAL_LIMIT {
        return Err(TopologyError::GaussInconsistent { raw, residual });
    }
    Ok(GaussLink {
        linking_number: rounded as i64,
        raw,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkReport {
    pub crossings: CrossingCount,
    pub gauss: GaussLink,
}

impl LinkReport {
    pub fn linking_number(&self) -> i64 {
        self.crossings.linking_number
    }
}

/// Both methods, required to agree.
pub fn link_report(a: &PLCurve, b: &PLCurve) -> Result<LinkReport, TopologyError> {
    let crossings = linking_number(a, b)?;
    let gauss = linking_number_gauss(a, b)?;
    if crossings.linking_number != gauss.linking_number {
        return Err(TopologyError::MethodsDisagree {
            crossings: crossings.linking_number,
            gauss: gauss.linking_number,
        });
    }
    Ok(LinkReport { crossings, gauss })
}

pub const DEFAULT_RING_SAMPLES: usize = 128;

/// Ellipses with semi-axes 2 and 1 in the xy-, yz- and zx-planes.
pub fn borromean_rings(samples: usize) -> Result<[PLCurve; 3], TopologyError> {
    let samples = samples.max(64);
    Ok([
        PLCurve::sample(samples, |t| Vec3::new(2.0 * t.cos(), t.sin(), 0.0))?,
        PLCurve::sample(samples, |t| Vec3::new(0.0, 2.0 * t.cos(), t.sin()))?,
        PLCurve::sample(samples, |t| Vec3::new(t.sin(), 0.0, 2.0 * t.cos()))?,
    ])
}

/// Unit circle in the xy-plane and unit circle in the xz-plane centred at
/// `(1, 0, 0)`.
pub fn hopf_link(samples: usize) -> Result<[PLCurve; 2], TopologyError> {
    Ok([
        PLCurve::sample(samples, |t| Vec3::new(t.cos(), t.sin(), 0.0))?,
        PLCurve::sample(samples, |s| Vec3::new(1.0 + s.cos(), 0.0, s.sin()))?,
    ])
}
