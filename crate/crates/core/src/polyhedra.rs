//! Regular polyhedra from the Euler relation, unit-edge platonic meshes and
//! the cuboctahedron obtained by truncating a cube or an octahedron at its
//! edge midpoints.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::mesh::{Mesh, MeshError};
use crate::numerics::Vec3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyhedronError {
    #[error("{{{p},{q}}} is not a Schläfli pair (both entries must be at least 3)")]
    InvalidPair { p: u32, q: u32 },
    #[error("{0} is not one of the five regular polyhedra")]
    NotPlatonic(SchlafliPair),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

/// `{p, q}`: p-gonal faces, q of them around every vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchlafliPair {
    p: u32,
    q: u32,
}

impl SchlafliPair {
    pub fn new(p: u32, q: u32) -> Result<Self, PolyhedronError> {
        if p < 3 || q < 3 {
            return Err(PolyhedronError::InvalidPair { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// `1/p + 1/q > 1/2`, in integers.
    pub fn is_spherical(self) -> bool {
        (self.p - 2) * (self.q - 2) < 4
    }

    pub fn dual(self) -> Self {
        Self {
            p: self.q,
            q: self.p,
        }
    }
}

impl fmt::Display for SchlafliPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularPolyhedron {
    pub pair: SchlafliPair,
    pub name: &'static str,
    pub vertices: u32,
    pub edges: u32,
    pub faces: u32,
}

fn platonic_name(pair: SchlafliPair) -> &'static str {
    match (pair.p, pair.q) {
        (3, 3) => "tetrahedron",
        (4, 3) => "cube",
        (3, 4) => "octahedron",
        (5, 3) => "dodecahedron",
        (3, 5) => "icosahedron",
        _ => "unknown",
    }
}

/// Counts forced by `V − E + F = 2`, `pF = 2E` and `qV = 2E`.
pub fn euler_counts(pair: SchlafliPair) -> Option<(u32, u32, u32)> {
    let (p, q) = (pair.p, pair.q);
    let denom = 2 * p + 2 * q;
    if denom <= p * q {
        return None;
    }
    let e = 2 * p * q / (denom - p * q);
    Some((2 * e / q, e, 2 * e / p))
}

/// Every `{p, q}` admitted by the Euler relation, ordered by face count.
///
/// From `(p − 2)(q − 2) < 4` with `p, q ≥ 3`, neither entry can exceed 5.
pub fn enumerate_regular() -> Vec<RegularPolyhedron> {
    let mut out: Vec<RegularPolyhedron> = (3..=5)
        .flat_map(|p| (3..=5).map(move |q| SchlafliPair { p, q }))
        .filter(|s| s.is_spherical())
        .filter_map(|pair| {
            euler_counts(pair).map(|(vertices, edges, faces)| RegularPolyhedron {
                pair,
                name: platonic_name(pair),
                vertices,
                edges,
                faces,
            })
        })
        .collect();
    out.sort_by_key(|r| r.faces);
    out
}

fn platonic_vertices(pair: SchlafliPair) -> Option<Vec<Vec3>> {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let signs = [-1.0, 1.0];
    let pts = match (pair.p, pair.q) {
        (3, 3) => vec![
            Vec3::new(1.0, 1.0, 1.0),
            Vec3::new(1.0, -1.0, -1.0),
            Vec3::new(-1.0, 1.0, -1.0),
            Vec3::new(-1.0, -1.0, 1.0),
        ],
        (4, 3) => {
            let mut v = Vec::new();
            for x in signs {
                for y in signs {
                    for z in signs {
                        v.push(Vec3::new(x, y, z));
                    }
                }
            }
            v
        }
        (3, 4) => vec![Vec3::X, -Vec3::X, Vec3::Y, -Vec3::Y, Vec3::Z, -Vec3::Z],
        (3, 5) => cyclic_perms(&[(0.0, 1.0, phi)]),
        (5, 3) => {
            let mut v = platonic_vertices(SchlafliPair { p: 4, q: 3 }).unwrap();
            v.extend(cyclic_perms(&[(0.0, 1.0 / phi, phi)]));
            v
        }
        _ => return None,
    };
    Some(pts)
}

/// All sign choices of the nonzero entries of `(a, b, c)`, in the three
/// cyclic orders.
fn cyclic_perms(seeds: &[(f64, f64, f64)]) -> Vec<Vec3> {
    let mut out = Vec::new();
    for &(a, b, c) in seeds {
        let mut signed = Vec::new();
        for sa in [1.0, -1.0] {
            for sb in [1.0, -1.0] {
                for sc in [1.0, -1.0] {
                    let v = (a * sa, b * sb, c * sc);
                    if !signed.contains(&v) {
                        signed.push(v);
                    }
                }
            }
        }
        for (x, y, z) in signed {
            out.push(Vec3::new(x, y, z));
            out.push(Vec3::new(z, x, y));
            out.push(Vec3::new(y, z, x));
        }
    }
    out
}

/// Faces of the convex hull of a point set in convex position: every plane
/// through three points with all others on one side, with coplanar points
/// merged into one face, ordered anticlockwise from outside.
pub fn hull_faces(points: &[Vec3]) -> Vec<Vec<usize>> {
    let n = points.len();
    let centroid = points.iter().fold(Vec3::ZERO, |a, &p| a + p) / n as f64;
    let scale = points
        .iter()
        .map(|p| p.distance(centroid))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let eps = 1e-9 * scale;
    let mut seen = BTreeSet::new();
    let mut faces = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut normal = (points[j] - points[i]).cross(points[k] - points[i]);
                if normal.norm() < eps * scale {
                    continue;
                }
                normal = normal.normalized();
                if (points[i] - centroid).dot(normal) < 0.0 {
                    normal = -normal;
                }
                let offsets: Vec<f64> = points
                    .iter()
                    .map(|&p| (p - points[i]).dot(normal))
                    .collect();
                if offsets.iter().any(|&d| d > eps) {
                    continue;
                }
                let members: BTreeSet<usize> =
                    (0..n).filter(|&m| offsets[m].abs() <= eps).collect();
                if seen.insert(members.clone()) {
                    faces.push(order_around(points, members.into_iter().collect(), normal));
                }
            }
        }
    }
    faces
}

/// Sort indices anticlockwise about `axis` around their centroid.
fn order_around(points: &[Vec3], mut idx: Vec<usize>, axis: Vec3) -> Vec<usize> {
    let c = idx.iter().fold(Vec3::ZERO, |a, &i| a + points[i]) / idx.len() as f64;
    let e1 = (points[idx[0]] - c).normalized();
    let e2 = axis.cross(e1);
    let angle = |i: usize| {
        let d = points[i] - c;
        d.dot(e2).atan2(d.dot(e1)).rem_euclid(std::f64::consts::TAU)
    };
    idx.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
    idx
}

/// Unit-edge regular polyhedron centred at the origin.
pub fn build_platonic(pair: SchlafliPair) -> Result<Mesh, PolyhedronError> {
    let pts = platonic_vertices(pair).ok_or(PolyhedronError::NotPlatonic(pair))?;
    let faces = hull_faces(&pts);
    let edge = pts[faces[0][0]].distance(pts[faces[0][1]]);
    let pts = pts.into_iter().map(|p| p / edge).collect();
    Ok(Mesh::new(pts, faces)?)
}

/// Truncation at the edge midpoints: one vertex per edge, one face per
/// original face and one per original vertex.
pub fn rectify(mesh: &Mesh) -> Result<Mesh, PolyhedronError> {
    let edges: Vec<(usize, usize)> = mesh.edges().into_iter().collect();
    let index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let verts = mesh.vertices();
    let midpoints: Vec<Vec3> = edges
        .iter()
        .map(|&(a, b)| (verts[a] + verts[b]) / 2.0)
        .collect();
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };

    let mut faces: Vec<Vec<usize>> = mesh
        .faces()
        .iter()
        .map(|f| {
            Mesh::face_edges(f)
                .map(|(a, b)| index[&key(a, b)])
                .collect()
        })
        .collect();

    let centroid = verts.iter().fold(Vec3::ZERO, |a, &p| a + p) / verts.len() as f64;
    for (v, &pos) in verts.iter().enumerate() {
        let around: Vec<usize> = edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == v || b == v)
            .map(|(i, _)| i)
            .collect();
        faces.push(order_around(
            &midpoints,
            around,
            (pos - centroid).normalized(),
        ));
    }
    Ok(Mesh::new(midpoints, faces)?)
}

pub fn cuboctahedron_from_cube() -> Mesh {
    rectify(&build_platonic(SchlafliPair { p: 4, q: 3 }).expect("cube")).expect("rectified cube")
}

pub fn cuboctahedron_from_octahedron() -> Mesh {
    rectify(&build_platonic(SchlafliPair { p: 3, q: 4 }).expect("octahedron"))
        .expect("rectified octahedron")
}

fn normalize_cloud(points: &[Vec3]) -> Vec<Vec3> {
    let c = points.iter().fold(Vec3::ZERO, |a, &p| a + p) / points.len() as f64;
    let rms =
        (points.iter().map(|p| (*p - c).norm_squared()).sum::<f64>() / points.len() as f64).sqrt();
    points.iter().map(|&p| (p - c) / rms).collect()
}

/// Symmetric Hausdorff distance between two point sets after each is
/// centred on its centroid and scaled to unit RMS radius.
pub fn similarity_residual(a: &[Vec3], b: &[Vec3]) -> f64 {
    if a.len() != b.len() || a.is_empty() {
        return f64::INFINITY;
    }
    let (a, b) = (normalize_cloud(a), normalize_cloud(b));
    let one_way = |x: &[Vec3], y: &[Vec3]| {
        x.iter()
            .map(|p| {
                y.iter()
                    .map(|q| p.distance(*q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    one_way(&a, &b).max(one_way(&b, &a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedronReport {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub face_histogram: BTreeMap<usize, usize>,
}

impl PolyhedronReport {
    pub fn of(name: impl Into<String>, mesh: &Mesh) -> Result<Self, PolyhedronError> {
        let histogram = mesh.face_histogram();
        Ok(Self {
            name: name.into(),
            vertices: mesh.vertex_count(),
            edges: mesh.edge_count(),
            faces: mesh.face_count(),
            euler_characteristic: mesh.euler_characteristic()?,
            face_histogram: histogram,
        })
    }

    pub const CSV_HEADER: &'static str = "name,V,E,F,chi";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.name, self.vertices, self.edges, self.faces, self.euler_characteristic
        )
    }

    /// Σ face sizes = 2E.
    pub fn is_consistent(&self) -> bool {
        self.face_histogram
            .iter()
            .map(|(k, n)| k * n)
            .sum::<usize>()
            == 2 * self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(p: u32, q: u32) -> SchlafliPair {
        SchlafliPair::new(p, q).unwrap()
    }

    #[test]
    fn exactly_five_regular_polyhedra() {
        let all = enumerate_regular();
        assert_eq!(all.len(), 5);
        let faces: Vec<u32> = all.iter().map(|r| r.faces).collect();
        assert_eq!(faces, vec![4, 6, 8, 12, 20]);
        let pairs: BTreeSet<_> = all.iter().map(|r| (r.pair.p(), r.pair.q())).collect();
        let expected: BTreeSet<_> = [(3, 3), (4, 3), (3, 4), (5, 3), (3, 5)].into();
        assert_eq!(pairs, expected);
        for r in &all {
            assert_eq!(r.vertices as i64 - r.edges as i64 + r.faces as i64, 2);
        }
    }

    #[test]
    fn brute_force_scan_finds_no_sixth() {
        let mut found = BTreeSet::new();
        for p in 3u32..=100 {
            for q in 3u32..=100 {
                // 1/p + 1/q > 1/2  ⇔  2q + 2p > pq
                if 2 * (p + q) > p * q {
                    found.insert((p, q));
                }
            }
        }
        let listed: BTreeSet<_> = enumerate_regular()
            .iter()
            .map(|r| (r.pair.p(), r.pair.q()))
            .collect();
        assert_eq!(found, listed);
        assert_eq!(euler_counts(pair(6, 3)), None);
        assert_eq!(euler_counts(pair(4, 5)), None);
    }

    #[test]
    fn built_meshes_match_counts() {
        for r in enumerate_regular() {
            let mesh = build_platonic(r.pair).unwrap();
            assert_eq!(mesh.vertex_count() as u32, r.vertices, "{}", r.name);
            assert_eq!(mesh.edge_count() as u32, r.edges, "{}", r.name);
            assert_eq!(mesh.face_count() as u32, r.faces, "{}", r.name);
            assert_eq!(mesh.euler_characteristic().unwrap(), 2);
            for len in mesh.edge_lengths() {
                assert!((len - 1.0).abs() < 1e-12);
            }
            for f in 0..mesh.face_count() {
                assert_eq!(mesh.faces()[f].len() as u32, r.pair.p());
                assert!(mesh.face_planarity_residual(f) < 1e-9);
                let c = mesh.face_centroid(f);
                let d: Vec<f64> = mesh.face_points(f).iter().map(|p| p.distance(c)).collect();
                assert!(d.iter().all(|x| (x - d[0]).abs() < 1e-9));
                // outward orientation
                assert!(mesh.face_normal(f).dot(c) > 0.0);
            }
            let report = PolyhedronReport::of(r.name, &mesh).unwrap();
            assert!(report.is_consistent());
        }
    }

    #[test]
    fn cube_edges_are_unit() {
        let cube = build_platonic(pair(4, 3)).unwrap();
        assert_eq!(cube.edge_lengths().len(), 12);
        assert_eq!(
            (cube.vertex_count(), cube.edge_count(), cube.face_count()),
            (8, 12, 6)
        );
        assert!(matches!(
            build_platonic(pair(6, 3)),
            Err(PolyhedronError::NotPlatonic(_))
        ));
        assert!(SchlafliPair::new(2, 5).is_err());
    }

    #[test]
    fn cuboctahedron_counts() {
        for mesh in [cuboctahedron_from_cube(), cuboctahedron_from_octahedron()] {
            assert_eq!(mesh.vertex_count(), 12);
            assert_eq!(mesh.edge_count(), 24);
            assert_eq!(mesh.face_count(), 14);
            assert_eq!(mesh.euler_characteristic().unwrap(), 2);
            let hist = mesh.face_histogram();
            assert_eq!(hist.get(&3), Some(&8));
            assert_eq!(hist.get(&4), Some(&6));
            for f in 0..mesh.face_count() {
                assert!(mesh.face_planarity_residual(f) < 1e-12);
                assert!(mesh.face_normal(f).dot(mesh.face_centroid(f)) > 0.0);
            }
            let lens = mesh.edge_lengths();
            assert!(lens.iter().all(|l| (l - lens[0]).abs() < 1e-12));
        }
    }

    #[test]
    fn constructions_agree_up_to_similarity() {
        let a = cuboctahedron_from_cube();
        let b = cuboctahedron_from_octahedron();
        assert!(similarity_residual(a.vertices(), b.vertices()) < 1e-9);
        let tetra = build_platonic(pair(3, 3)).unwrap();
        assert!(similarity_residual(a.vertices(), tetra.vertices()).is_infinite());
    }

    #[test]
    fn report_csv() {
        let cube = build_platonic(pair(4, 3)).unwrap();
        let r = PolyhedronReport::of("cube", &cube).unwrap();
        assert_eq!(r.csv_row(), "cube,8,12,6,2");
    }
}
