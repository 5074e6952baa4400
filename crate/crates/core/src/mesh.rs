//! Polygon meshes shared by the polyhedron builders and the shell surface.
//!
//! Faces are cyclic vertex-index lists, anticlockwise when viewed from
//! outside. Edges are derived from the faces on demand.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::numerics::Vec3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MeshError {
    #[error("face {face} refers to vertex {index}, but there are only {vertices} vertices")]
    IndexOutOfRange {
        face: usize,
        index: usize,
        vertices: usize,
    },
    #[error("face {face} is degenerate (fewer than 3 distinct vertices)")]
    DegenerateFace { face: usize },
    #[error("vertex {0} has a non-finite coordinate")]
    NonFiniteVertex(usize),
    #[error("surface is not closed: edge ({}, {}) borders {faces} face(s)", .edge.0, .edge.1)]
    NotClosed { edge: (usize, usize), faces: usize },
    #[error("surface is not connected: {components} components")]
    NotConnected { components: usize },
    #[error("OFF parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mesh {
    vertices: Vec<Vec3>,
    faces: Vec<Vec<usize>>,
}

fn edge_key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Mesh {
    pub fn new(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Result<Self, MeshError> {
        if let Some(i) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(MeshError::NonFiniteVertex(i));
        }
        for (f, face) in faces.iter().enumerate() {
            if let Some(&index) = face.iter().find(|&&i| i >= vertices.len()) {
                return Err(MeshError::IndexOutOfRange {
                    face: f,
                    index,
                    vertices: vertices.len(),
                });
            }
            let distinct: BTreeSet<_> = face.iter().collect();
            if face.len() < 3 || distinct.len() != face.len() {
                return Err(MeshError::DegenerateFace { face: f });
            }
        }
        Ok(Self { vertices, faces })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_edges(face: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..face.len()).map(move |i| (face[i], face[(i + 1) % face.len()]))
    }

    /// Number of faces bordering each undirected edge.
    pub fn edge_incidence(&self) -> BTreeMap<(usize, usize), usize> {
        let mut map = BTreeMap::new();
        for face in &self.faces {
            for (a, b) in Self::face_edges(face) {
                *map.entry(edge_key(a, b)).or_insert(0) += 1;
            }
        }
        map
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.edge_incidence().into_keys().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_incidence().len()
    }

    /// Face count by number of sides.
    pub fn face_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in &self.faces {
            *h.entry(f.len()).or_insert(0) += 1;
        }
        h
    }

    /// `V − E + F` with no validation.
    pub fn raw_euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn check_closed(&self) -> Result<(), MeshError> {
        match self.edge_incidence().into_iter().find(|&(_, n)| n != 2) {
            Some((edge, faces)) => Err(MeshError::NotClosed { edge, faces }),
            None => Ok(()),
        }
    }

    /// Connected components over vertices, counting unused vertices as
    /// components of their own.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..self.vertices.len())
            .filter(|&v| find(&mut parent, v) == v)
            .count()
    }

    /// `V − E + F` of a closed connected surface.
    pub fn euler_characteristic(&self) -> Result<i64, MeshError> {
        self.check_closed()?;
        let components = self.component_count();
        if components != 1 {
            return Err(MeshError::NotConnected { components });
        }
        Ok(self.raw_euler_characteristic())
    }

    pub fn face_points(&self, f: usize) -> Vec<Vec3> {
        self.faces[f].iter().map(|&i| self.vertices[i]).collect()
    }

    pub fn face_centroid(&self, f: usize) -> Vec3 {
        let pts = self.face_points(f);
        pts.iter().fold(Vec3::ZERO, |acc, &p| acc + p) / pts.len() as f64
    }

    /// Newell normal, unnormalized; its length is twice the face area.
    pub fn face_normal(&self, f: usize) -> Vec3 {
        let pts = self.face_points(f);
        (0..pts.len()).fold(Vec3::ZERO, |acc, i| {
            acc + pts[i].cross(pts[(i + 1) % pts.len()])
        })
    }

    /// Largest distance of a face vertex from the face's best plane.
    pub fn face_planarity_residual(&self, f: usize) -> f64 {
        let n = self.face_normal(f).normalized();
        let c = self.face_centroid(f);
        self.face_points(f)
            .iter()
            .map(|p| (*p - c).dot(n).abs())
            .fold(0.0, f64::max)
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        self.edges()
            .into_iter()
            .map(|(a, b)| self.vertices[a].distance(self.vertices[b]))
            .collect()
    }

    pub fn scaled(&self, factor: f64) -> Mesh {
        Mesh {
            vertices: self.vertices.iter().map(|&v| v * factor).collect(),
            faces: self.faces.clone(),
        }
    }

    /// ASCII OFF: header line, `V F E` counts, vertex lines, face lines.
    pub fn to_off(&self, fmt_num: impl Fn(f64) -> String) -> String {
        let mut out = String::from("OFF\n");
        let _ = writeln!(
            out,
            "{} {} {}",
            self.vertex_count(),
            self.face_count(),
            self.edge_count()
        );
        for v in &self.vertices {
            let _ = writeln!(out, "{} {} {}", fmt_num(v.x), fmt_num(v.y), fmt_num(v.z));
        }
        for f in &self.faces {
            out.push_str(&f.len().to_string());
            for i in f {
                let _ = write!(out, " {i}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_off(text: &str) -> Result<Mesh, MeshError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, message: &str| MeshError::Parse {
            line,
            message: message.to_string(),
        };
        let (n, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        if header != "OFF" {
            return Err(err(n, "missing OFF header"));
        }
        let (n, counts) = lines.next().ok_or_else(|| err(n + 1, "missing counts"))?;
        let counts: Vec<usize> = counts
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(n, "bad count")))
            .collect::<Result<_, _>>()?;
        if counts.len() < 2 {
            return Err(err(n, "expected vertex and face counts"));
        }
        let (nv, nf) = (counts[0], counts[1]);
        let mut vertices = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (n, l) = lines
                .next()
                .ok_or_else(|| err(0, "truncated vertex list"))?;
            let c: Vec<f64> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(n, "bad coordinate")))
                .collect::<Result<_, _>>()?;
            if c.len() != 3 {
                return Err(err(n, "expected 3 coordinates"));
            }
            vertices.push(Vec3::new(c[0], c[1], c[2]));
        }
        let mut faces = Vec::with_capacity(nf);
        for _ in 0..nf {
            let (n, l) = lines.next().ok_or_else(|| err(0, "truncated face list"))?;
            let idx: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(n, "bad index")))
                .collect::<Result<_, _>>()?;
            match idx.split_first() {
                Some((&k, rest)) if rest.len() == k => faces.push(rest.to_vec()),
                _ => return Err(err(n, "face size does not match index count")),
            }
        }
        Mesh::new(vertices, faces)
    }
}

/// Quad grid on a torus with `major × minor` cells.
pub fn torus_grid(major: usize, minor: usize, major_radius: f64, minor_radius: f64) -> Mesh {
    use std::f64::consts::TAU;
    let mut vertices = Vec::with_capacity(major * minor);
    for i in 0..major {
        let u = TAU * i as f64 / major as f64;
        for j in 0..minor {
            let v = TAU * j as f64 / minor as f64;
            let r = major_radius + minor_radius * v.cos();
            vertices.push(Vec3::new(r * u.cos(), r * u.sin(), minor_radius * v.sin()));
        }
    }
    let idx = |i: usize, j: usize| (i % major) * minor + (j % minor);
    let faces = (0..major)
        .flat_map(|i| {
            (0..minor)
                .map(move |j| vec![idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)])
        })
        .collect();
    Mesh::new(vertices, faces).expect("torus grid indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra() -> Mesh {
        Mesh::new(
            vec![
                Vec3::new(1.0, 1.0, 1.0),
                Vec3::new(1.0, -1.0, -1.0),
                Vec3::new(-1.0, 1.0, -1.0),
                Vec3::new(-1.0, -1.0, 1.0),
            ],
            vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]],
        )
        .unwrap()
    }

    #[test]
    fn tetrahedron_counts() {
        let t = tetra();
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn torus_has_zero_characteristic() {
        let t = torus_grid(4, 4, 2.0, 0.5);
        assert_eq!(t.vertex_count(), 16);
        assert_eq!(t.edge_count(), 32);
        assert_eq!(t.face_count(), 16);
        assert_eq!(t.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn open_surface_is_rejected() {
        let t = tetra();
        let open = Mesh::new(t.vertices().to_vec(), t.faces()[..3].to_vec()).unwrap();
        assert!(matches!(
            open.euler_characteristic(),
            Err(MeshError::NotClosed { faces: 1, .. })
        ));
    }

    #[test]
    fn disconnected_surface_is_rejected() {
        let t = tetra();
        let mut vertices = t.vertices().to_vec();
        vertices.extend(t.vertices().iter().map(|&v| v + Vec3::new(5.0, 0.0, 0.0)));
        let mut faces = t.faces().to_vec();
        faces.extend(t.faces().iter().map(|f| f.iter().map(|i| i + 4).collect()));
        let two = Mesh::new(vertices, faces).unwrap();
        assert_eq!(
            two.euler_characteristic(),
            Err(MeshError::NotConnected { components: 2 })
        );
        assert_eq!(two.raw_euler_characteristic(), 4);
    }

    #[test]
    fn invalid_faces() {
        let v = vec![Vec3::ZERO, Vec3::X, Vec3::Y];
        assert!(matches!(
            Mesh::new(v.clone(), vec![vec![0, 1, 3]]),
            Err(MeshError::IndexOutOfRange { index: 3, .. })
        ));
        assert!(matches!(
            Mesh::new(v.clone(), vec![vec![0, 1, 1]]),
            Err(MeshError::DegenerateFace { face: 0 })
        ));
        assert!(Mesh::new(v, vec![vec![0, 1]]).is_err());
        assert!(Mesh::new(vec![Vec3::new(f64::NAN, 0.0, 0.0)], vec![]).is_err());
    }

    #[test]
    fn off_round_trip_preserves_counts() {
        let t = torus_grid(5, 3, 2.0, 0.7);
        let text = t.to_off(|x| format!("{x:.17e}"));
        assert!(text.starts_with("OFF\n15 15 30\n"));
        let back = Mesh::parse_off(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.euler_characteristic().unwrap(), 0);
    }

    #[test]
    fn off_parse_errors() {
        assert!(matches!(Mesh::parse_off(""), Err(MeshError::Parse { .. })));
        assert!(Mesh::parse_off("PLY\n").is_err());
        assert!(Mesh::parse_off("OFF\n1 1 0\n0 0 0\n3 0 0 0\n").is_err());
        assert!(Mesh::parse_off("OFF\n3 1 3\n0 0 0\n1 0 0\n0 1\n3 0 1 2\n").is_err());
        let ok = "OFF # comment\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n";
        assert_eq!(Mesh::parse_off(ok).unwrap().face_count(), 1);
    }
}
