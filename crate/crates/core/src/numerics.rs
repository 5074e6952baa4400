//! Scalar and vector primitives shared by every other module: small vector
//! types, an angle newtype, the tolerance policy, compensated summation,
//! bisection and finite differences.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use thiserror::Error;

/// Default absolute tolerance used throughout the crate.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Default iteration cap for iterative solvers.
pub const DEFAULT_MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoRoot {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("function produced a non-finite value at x = {x}")]
    NonFinite { x: f64 },
    #[error("invalid bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("invalid step size {0}")]
    InvalidStep(f64),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
}

/// Absolute tolerance plus an iteration budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs: f64,
    max_iterations: usize,
}

impl Tolerance {
    pub fn new(abs: f64, max_iterations: usize) -> Result<Self, NumericsError> {
        if !(abs > 0.0 && abs.is_finite()) {
            return Err(NumericsError::InvalidTolerance(format!(
                "absolute tolerance must be positive, got {abs}"
            )));
        }
        if max_iterations == 0 {
            return Err(NumericsError::InvalidTolerance(
                "iteration cap must be positive".into(),
            ));
        }
        Ok(Self {
            abs,
            max_iterations,
        })
    }

    pub fn abs(&self) -> f64 {
        self.abs
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

/// An angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Angle(f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);
    pub const RIGHT: Angle = Angle(PI / 2.0);

    pub fn from_radians(rad: f64) -> Self {
        Angle(rad)
    }

    pub fn from_degrees(deg: f64) -> Self {
        Angle(deg.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Representative in (−π, π].
    pub fn normalized(self) -> Self {
        let mut a = self.0.rem_euclid(TAU);
        if a > PI {
            a -= TAU;
        }
        Angle(a)
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn tan(self) -> f64 {
        self.0.tan()
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl Mul<f64> for Angle {
    type Output = Angle;
    fn mul(self, rhs: f64) -> Angle {
        Angle(self.0 * rhs)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Unit vector at polar angle `theta`.
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { x: c, y: s }
    }

    pub fn polar(r: f64, theta: f64) -> Self {
        Self::from_angle(theta) * r
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Vec2 {
        self / self.norm()
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    /// Rotation by +90°.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn rotated(self, theta: f64) -> Vec2 {
        let (s, c) = theta.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn distance(self, o: Vec2) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };
    pub const X: Vec3 = Vec3 {
        x: 1.0,
        y: 0.0,
        z: 0.0,
    };
    pub const Y: Vec3 = Vec3 {
        x: 0.0,
        y: 1.0,
        z: 0.0,
    };
    pub const Z: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn normalized(self) -> Vec3 {
        self / self.norm()
    }

    pub fn distance(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

macro_rules! impl_vec_ops {
    ($t:ident { $($f:ident),+ }) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t { $t { $($f: self.$f + o.$f),+ } }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t { $t { $($f: self.$f - o.$f),+ } }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { $t { $($f: -self.$f),+ } }
        }
        impl Mul<f64> for $t {
            type Output = $t;
            fn mul(self, s: f64) -> $t { $t { $($f: self.$f * s),+ } }
        }
        impl Mul<$t> for f64 {
            type Output = $t;
            fn mul(self, v: $t) -> $t { v * self }
        }
        impl Div<f64> for $t {
            type Output = $t;
            fn div(self, s: f64) -> $t { $t { $($f: self.$f / s),+ } }
        }
        impl AddAssign for $t {
            fn add_assign(&mut self, o: $t) { $(self.$f += o.$f;)+ }
        }
        impl SubAssign for $t {
            fn sub_assign(&mut self, o: $t) { $(self.$f -= o.$f;)+ }
        }
    };
}

impl_vec_ops!(Vec2 { x, y });
impl_vec_ops!(Vec3 { x, y, z });

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Final state of a bisection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub root: f64,
    /// Final bracket; always contains a sign change (or an exact zero).
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

fn eval_finite<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64, NumericsError> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(NumericsError::NonFinite { x })
    }
}

/// Bisection on a sign-changing bracket. Returns the midpoint of the final
/// bracket, whose width is at most `tol.abs()` unless the iteration budget
/// runs out first.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: Tolerance,
) -> Result<f64, NumericsError> {
    bisect_bracket(f, lo, hi, tol).map(|b| b.root)
}

pub fn bisect_bracket<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    tol: Tolerance,
) -> Result<Bisection, NumericsError> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(NumericsError::InvalidBracket { lo, hi });
    }
    let mut f_lo = eval_finite(&f, lo)?;
    let f_hi = eval_finite(&f, hi)?;
    if f_lo == 0.0 {
        return Ok(Bisection {
            root: lo,
            lo,
            hi: lo,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(Bisection {
            root: hi,
            lo: hi,
            hi,
            iterations: 0,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(NumericsError::NoRoot { lo, hi, f_lo, f_hi });
    }

    let mut iterations = 0;
    while hi - lo > tol.abs() && iterations < tol.max_iterations() {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            // bracket is down to adjacent floats
            break;
        }
        let f_mid = eval_finite(&f, mid)?;
        iterations += 1;
        if f_mid == 0.0 {
            return Ok(Bisection {
                root: mid,
                lo: mid,
                hi: mid,
                iterations,
            });
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(Bisection {
        root: lo + 0.5 * (hi - lo),
        lo,
        hi,
        iterations,
    })
}

/// Symmetric difference quotient `(f(x+h) − f(x−h)) / 2h`.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64, NumericsError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(NumericsError::InvalidStep(h));
    }
    let fp = eval_finite(&f, x + h)?;
    let fm = eval_finite(&f, x - h)?;
    Ok((fp - fm) / (2.0 * h))
}

/// Second-order central estimate of the second derivative.
pub fn central_second_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64, NumericsError> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(NumericsError::InvalidStep(h));
    }
    let fp = eval_finite(&f, x + h)?;
    let f0 = eval_finite(&f, x)?;
    let fm = eval_finite(&f, x - h)?;
    Ok((fp - 2.0 * f0 + fm) / (h * h))
}
