//! The Poincaré disc: distance, geodesics, isometries, regular {n,k}
//! tilings grown by reflection, and the regular 4p-gon whose side pairing
//! yields a closed surface of genus p.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

/// Points must stay this far inside the unit circle.
pub const BOUNDARY_MARGIN: f64 = 1e-12;
/// Tiles whose centres are closer than this (hyperbolic distance) are one tile.
pub const DEDUP_DISTANCE: f64 = 1e-6;
pub const DEFAULT_TILE_CAP: usize = 100_000;
/// Orthogonality tolerance `| |c|² − r² − 1 |` for arc geodesics.
pub const GEODESIC_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperbolicError {
    #[error("point {re} + {im}i is not strictly inside the unit disc")]
    BoundaryPoint { re: f64, im: f64 },
    #[error("{{{n},{k}}} needs n ≥ 3 and k ≥ 3")]
    InvalidPair { n: u32, k: u32 },
    #[error("{{{n},{k}}} is {geometry}, not hyperbolic")]
    NotHyperbolic {
        n: u32,
        k: u32,
        geometry: TilingGeometry,
    },
    #[error("depth {depth} would exceed the cap of {cap} tiles")]
    DepthTooLarge { depth: usize, cap: usize },
    #[error("genus {0} has no hyperbolic polygon (genus must be at least 2)")]
    GenusTooSmall(u32),
    #[error("geodesic through coincident points")]
    CoincidentPoints,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub const ORIGIN: DiscPoint = DiscPoint(Complex64::new(0.0, 0.0));

    pub fn new(z: Complex64) -> Result<Self, HyperbolicError> {
        if z.re.is_finite() && z.im.is_finite() && z.norm() < 1.0 - BOUNDARY_MARGIN {
            Ok(Self(z))
        } else {
            Err(HyperbolicError::BoundaryPoint { re: z.re, im: z.im })
        }
    }

    pub fn from_xy(x: f64, y: f64) -> Result<Self, HyperbolicError> {
        Self::new(Complex64::new(x, y))
    }

    /// Point at hyperbolic distance `r` from the origin in direction `theta`.
    pub fn from_polar_hyperbolic(r: f64, theta: f64) -> Result<Self, HyperbolicError> {
        Self::new(Complex64::from_polar((r / 2.0).tanh(), theta))
    }

    pub fn z(self) -> Complex64 {
        self.0
    }

    pub fn x(self) -> f64 {
        self.0.re
    }

    pub fn y(self) -> f64 {
        self.0.im
    }
}

/// `2 artanh |(p − q)/(1 − p̄q)|`.
pub fn hyp_distance(p: DiscPoint, q: DiscPoint) -> f64 {
    let (p, q) = (p.0, q.0);
    // ratio of norms keeps the result exactly symmetric in p and q
    let t = (p - q).norm() / (Complex64::new(1.0, 0.0) - p.conj() * q).norm();
    2.0 * t.min(1.0).atanh()
}

/// Orientation-preserving isometry `z ↦ (a z + b)/(b̄ z + ā)` with `|a| > |b|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    a: Complex64,
    b: Complex64,
}

impl Mobius {
    pub const IDENTITY: Mobius = Mobius {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
    };

    pub fn new(a: Complex64, b: Complex64) -> Option<Self> {
        (a.norm() > b.norm()).then_some(Self { a, b })
    }

    pub fn rotation(theta: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, theta / 2.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// `z ↦ (z − v)/(1 − v̄ z)`, sending `v` to the origin.
    pub fn to_origin(v: DiscPoint) -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: -v.0,
        }
    }

    pub fn apply_z(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.b.conj() * z + self.a.conj())
    }

    pub fn apply(&self, p: DiscPoint) -> DiscPoint {
        DiscPoint(self.apply_z(p.0))
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: -self.b,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Mobius) -> Self {
        Self {
            a: self.a * other.a + self.b * other.b.conj(),
            b: self.a * other.b + self.b * other.a.conj(),
        }
    }
}

/// A hyperbolic line: a diameter or an arc of a circle orthogonal to the
/// unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geodesic {
    Diameter { angle: f64 },
    Arc { center: Complex64, radius: f64 },
}

impl Geodesic {
    pub fn through(p: DiscPoint, q: DiscPoint) -> Result<Self, HyperbolicError> {
        let (p, q) = (p.0, q.0);
        if (p - q).norm() < f64::EPSILON {
            return Err(HyperbolicError::CoincidentPoints);
        }
        let cross = p.re * q.im - p.im * q.re;
        if cross.abs() <= 1e-12 * (p.norm() * q.norm()).max(f64::MIN_POSITIVE)
            || p.norm() < 1e-15
            || q.norm() < 1e-15
        {
            let dir = if p.norm() >= q.norm() { p } else { q };
            return Ok(Geodesic::Diameter { angle: dir.arg() });
        }
        // c·p = (1 + |p|²)/2 and c·q = (1 + |q|²)/2
        let (sp, sq) = ((1.0 + p.norm_sqr()) / 2.0, (1.0 + q.norm_sqr()) / 2.0);
        let center = Complex64::new(
            (sp * q.im - sq * p.im) / cross,
            (p.re * sq - q.re * sp) / cross,
        );
        Ok(Geodesic::Arc {
            center,
            radius: (center.norm_sqr() - 1.0).sqrt(),
        })
    }

    pub fn reflect_z(&self, z: Complex64) -> Complex64 {
        match *self {
            Geodesic::Diameter { angle } => Complex64::from_polar(1.0, 2.0 * angle) * z.conj(),
            Geodesic::Arc { center, radius } => center + radius * radius / (z - center).conj(),
        }
    }

    pub fn reflect(&self, p: DiscPoint) -> DiscPoint {
        DiscPoint(self.reflect_z(p.0))
    }

    /// `|c|² − r² − 1`, zero for a true geodesic arc.
    pub fn orthogonality_residual(&self) -> f64 {
        match *self {
            Geodesic::Diameter { .. } => 0.0,
            Geodesic::Arc { center, radius } => center.norm_sqr() - radius * radius - 1.0,
        }
    }
}

/// Interior angle at `v` between the geodesics to `a` and `b`, read off after
/// moving `v` to the origin where both become diameters.
pub fn vertex_angle(v: DiscPoint, a: DiscPoint, b: DiscPoint) -> f64 {
    let m = Mobius::to_origin(v);
    let (ta, tb) = (m.apply_z(a.0), m.apply_z(b.0));
    (tb / ta).arg().abs()
}

/// Geodesic polygon with anticlockwise vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct HypPolygon {
    vertices: Vec<DiscPoint>,
}

impl HypPolygon {
    pub fn new(vertices: Vec<DiscPoint>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[DiscPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn vertex(&self, i: usize) -> DiscPoint {
        self.vertices[i % self.vertices.len()]
    }

    /// Geodesic carrying side `i`, from vertex `i` to vertex `i + 1`.
    pub fn side(&self, i: usize) -> Geodesic {
        Geodesic::through(self.vertex(i), self.vertex(i + 1)).expect("distinct polygon vertices")
    }

    pub fn sides(&self) -> Vec<Geodesic> {
        (0..self.len()).map(|i| self.side(i)).collect()
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        (0..self.len())
            .map(|i| hyp_distance(self.vertex(i), self.vertex(i + 1)))
            .collect()
    }

    pub fn interior_angles(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| vertex_angle(self.vertex(i), self.vertex(i + n - 1), self.vertex(i + 1)))
            .collect()
    }

    pub fn angle_sum(&self) -> f64 {
        self.interior_angles().iter().sum()
    }

    /// Gauss–Bonnet: `(n − 2)π − Σ angles`.
    pub fn area(&self) -> f64 {
        (self.len() as f64 - 2.0) * PI - self.angle_sum()
    }

    pub fn reflected(&self, g: &Geodesic) -> Self {
        // reflection reverses orientation
        Self {
            vertices: self.vertices.iter().rev().map(|&p| g.reflect(p)).collect(),
        }
    }

    pub fn transformed(&self, m: &Mobius) -> Self {
        Self {
            vertices: self.vertices.iter().map(|&p| m.apply(p)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingGeometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for TilingGeometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TilingGeometry::Spherical => "spherical",
            TilingGeometry::Euclidean => "euclidean",
            TilingGeometry::Hyperbolic => "hyperbolic",
        })
    }
}

/// Sign of `1/n + 1/k − 1/2`, in integers as `2(n + k) − nk`.
pub fn classify_tiling(n: u32, k: u32) -> Result<TilingGeometry, HyperbolicError> {
    if n < 3 || k < 3 {
        return Err(HyperbolicError::InvalidPair { n, k });
    }
    let s = 2 * (n as i64 + k as i64) - n as i64 * k as i64;
    Ok(match s.cmp(&0) {
        std::cmp::Ordering::Greater => TilingGeometry::Spherical,
        std::cmp::Ordering::Equal => TilingGeometry::Euclidean,
        std::cmp::Ordering::Less => TilingGeometry::Hyperbolic,
    })
}

/// Regular n-gon with interior angles `2π/k`, centred at the origin, vertex 0
/// on the positive real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularPolygon {
    pub n: u32,
    pub k: u32,
    /// Hyperbolic circumradius, `cosh R = cot(π/n) cot(π/k)`.
    pub circumradius: f64,
    pub polygon: HypPolygon,
}

impl RegularPolygon {
    pub fn expected_area(&self) -> f64 {
        let n = self.n as f64;
        (n - 2.0) * PI - TAU * n / self.k as f64
    }

    pub fn expected_angle(&self) -> f64 {
        TAU / self.k as f64
    }
}

pub fn regular_polygon(n: u32, k: u32) -> Result<RegularPolygon, HyperbolicError> {
    let geometry = classify_tiling(n, k)?;
    if geometry != TilingGeometry::Hyperbolic {
        return Err(HyperbolicError::NotHyperbolic { n, k, geometry });
    }
    let cot = |x: f64| 1.0 / x.tan();
    let cosh_r = cot(PI / n as f64) * cot(PI / k as f64);
    let circumradius = cosh_r.acosh();
    let vertices = (0..n)
        .map(|j| DiscPoint::from_polar_hyperbolic(circumradius, TAU * j as f64 / n as f64))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RegularPolygon {
        n,
        k,
        circumradius,
        polygon: HypPolygon::new(vertices),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tile {
    pub polygon: HypPolygon,
    pub center: DiscPoint,
    pub generation: usize,
}

#[derive(Debug, Clone)]
pub struct Tiling {
    pub fundamental: RegularPolygon,
    pub depth: usize,
    pub tiles: Vec<Tile>,
}

impl Tiling {
    pub fn n(&self) -> u32 {
        self.fundamental.n
    }

    pub fn k(&self) -> u32 {
        self.fundamental.k
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn side_length(&self) -> f64 {
        self.fundamental.polygon.side_lengths()[0]
    }
}

/// Spatial hash over Euclidean positions; any two centres within
/// `DEDUP_DISTANCE` hyperbolically are much closer than one cell.
struct CentreIndex {
    cells: HashMap<(i64, i64), Vec<DiscPoint>>,
}

impl CentreIndex {
    const CELL: f64 = 1e-4;

    fn key(p: DiscPoint) -> (i64, i64) {
        (
            (p.x() / Self::CELL).floor() as i64,
            (p.y() / Self::CELL).floor() as i64,
        )
    }

    fn contains(&self, p: DiscPoint) -> bool {
        let (kx, ky) = Self::key(p);
        (kx - 1..=kx + 1).any(|x| {
            (ky - 1..=ky + 1).any(|y| {
                self.cells
                    .get(&(x, y))
                    .is_some_and(|v| v.iter().any(|&q| hyp_distance(p, q) < DEDUP_DISTANCE))
            })
        })
    }

    fn insert(&mut self, p: DiscPoint) {
        self.cells.entry(Self::key(p)).or_default().push(p);
    }
}

fn centre_angle(p: DiscPoint) -> f64 {
    if p.z().norm() == 0.0 {
        0.0
    } else {
        p.y().atan2(p.x()).rem_euclid(TAU)
    }
}

pub fn generate_tiling(n: u32, k: u32, depth: usize) -> Result<Tiling, HyperbolicError> {
    generate_tiling_with_cap(n, k, depth, DEFAULT_TILE_CAP)
}

/// Breadth-first reflection of the fundamental polygon across its sides,
/// `depth` generations deep.
pub fn generate_tiling_with_cap(
    n: u32,
    k: u32,
    depth: usize,
    cap: usize,
) -> Result<Tiling, HyperbolicError> {
    let fundamental = regular_polygon(n, k)?;
    let mut index = CentreIndex {
        cells: HashMap::new(),
    };
    index.insert(DiscPoint::ORIGIN);
    let mut tiles = vec![Tile {
        polygon: fundamental.polygon.clone(),
        center: DiscPoint::ORIGIN,
        generation: 0,
    }];
    let mut frontier = 0..1;
    for generation in 1..=depth {
        let mut next = Vec::new();
        for tile in &tiles[frontier.clone()] {
            for side in tile.polygon.sides() {
                let center = side.reflect(tile.center);
                if index.contains(center) {
                    continue;
                }
                index.insert(center);
                next.push(Tile {
                    polygon: tile.polygon.reflected(&side),
                    center,
                    generation,
                });
                if tiles.len() + next.len() > cap {
                    return Err(HyperbolicError::DepthTooLarge { depth, cap });
                }
            }
        }
        next.sort_by(|a, b| {
            centre_angle(a.center)
                .total_cmp(&centre_angle(b.center))
                .then(a.center.z().norm().total_cmp(&b.center.z().norm()))
        });
        let start = tiles.len();
        tiles.extend(next);
        frontier = start..tiles.len();
    }
    Ok(Tiling {
        fundamental,
        depth,
        tiles,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideLabel {
    /// `'a'` or `'b'`.
    pub generator: char,
    /// 1-based handle index.
    pub index: u32,
    pub inverse: bool,
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.generator, self.index)?;
        if self.inverse {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// Regular 4p-gon with corner angle `π/(2p)` and the side word
/// `a₁ b₁ a₁⁻¹ b₁⁻¹ … a_p b_p a_p⁻¹ b_p⁻¹`.
#[derive(Debug, Clone)]
pub struct GenusPolygon {
    pub genus: u32,
    pub polygon: RegularPolygon,
    pub word: Vec<SideLabel>,
}

impl GenusPolygon {
    /// Pairs of side indices glued together.
    pub fn side_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.genus as usize)
            .flat_map(|j| [(4 * j, 4 * j + 2), (4 * j + 1, 4 * j + 3)])
            .collect()
    }

    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(SideLabel::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn genus_polygon(p: u32) -> Result<GenusPolygon, HyperbolicError> {
    if p < 2 {
        return Err(HyperbolicError::GenusTooSmall(p));
    }
    let polygon = regular_polygon(4 * p, 4 * p)?;
    let word = (1..=p)
        .flat_map(|index| {
            [('a', false), ('b', false), ('a', true), ('b', true)].map(|(generator, inverse)| {
                SideLabel {
                    generator,
                    index,
                    inverse,
                }
            })
        })
        .collect();
    Ok(GenusPolygon {
        genus: p,
        polygon,
        word,
    })
}
