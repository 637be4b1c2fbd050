//! Geometric domains (2D and 3D), exact measures, measure normalization,
//! and uniform-cell mesh generation.
//!
//! The shape menu is deliberately small: disc, simple polygon (triangles
//! included), ball, axis-aligned box (2D or 3D), ellipsoid. Every shape
//! knows its analytic measure; meshes are uniform Cartesian grids keeping
//! the cells whose centroid lies inside the open domain.

use crate::error::{Error, Result};
use serde::Deserialize;

/// A point; 2D shapes ignore the third coordinate.
pub type Point = [f64; 3];

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    /// Disc of the given radius centered at the origin.
    Disc { radius: f64 },
    /// Simple polygon, counter-clockwise vertices.
    Polygon { vertices: Vec<[f64; 2]> },
    /// Ball of the given radius centered at the origin.
    Ball { radius: f64 },
    /// Axis-aligned box centered at the origin; `extents.len()` is the
    /// dimension (2 or 3).
    Box { extents: Vec<f64> },
    /// Axis-aligned ellipsoid centered at the origin.
    Ellipsoid { semi_axes: [f64; 3] },
}

/// A bounded open domain with cached analytic measure.
#[derive(Debug, Clone)]
pub struct Domain {
    shape: Shape,
    measure: f64,
    name: String,
}

fn polygon_signed_area(vertices: &[[f64; 2]]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let [x0, y0] = vertices[i];
        let [x1, y1] = vertices[(i + 1) % n];
        acc += x0 * y1 - x1 * y0;
    }
    0.5 * acc
}

fn segments_properly_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let cross = |o: [f64; 2], p: [f64; 2], q: [f64; 2]| -> f64 {
        (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])
    };
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn polygon_is_simple(vertices: &[[f64; 2]]) -> bool {
    let n = vertices.len();
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        for j in (i + 1)..n {
            // skip edges sharing a vertex
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (c, d) = (vertices[j], vertices[(j + 1) % n]);
            if segments_properly_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

/// Winding number of `p` with respect to the polygon boundary.
fn winding_number(vertices: &[[f64; 2]], p: [f64; 2]) -> i32 {
    let n = vertices.len();
    let mut winding = 0i32;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let is_left =
            (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1]);
        if a[1] <= p[1] {
            if b[1] > p[1] && is_left > 0.0 {
                winding += 1;
            }
        } else if b[1] <= p[1] && is_left < 0.0 {
            winding -= 1;
        }
    }
    winding
}

fn distance_to_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let abx = b[0] - a[0];
    let aby = b[1] - a[1];
    let apx = p[0] - a[0];
    let apy = p[1] - a[1];
    let t = ((apx * abx + apy * aby) / (abx * abx + aby * aby)).clamp(0.0, 1.0);
    let dx = apx - t * abx;
    let dy = apy - t * aby;
    (dx * dx + dy * dy).sqrt()
}

impl Domain {
    pub fn disc(radius: f64) -> Result<Domain> {
        if radius <= 0.0 {
            return Err(Error::InvalidGeometry(format!("disc radius {radius} not positive")));
        }
        Ok(Domain {
            shape: Shape::Disc { radius },
            measure: std::f64::consts::PI * radius * radius,
            name: "disc".into(),
        })
    }

    pub fn ball(radius: f64) -> Result<Domain> {
        if radius <= 0.0 {
            return Err(Error::InvalidGeometry(format!("ball radius {radius} not positive")));
        }
        Ok(Domain {
            shape: Shape::Ball { radius },
            measure: 4.0 / 3.0 * std::f64::consts::PI * radius.powi(3),
            name: "ball".into(),
        })
    }

    /// Axis-aligned box centered at the origin; dimension = `extents.len()`.
    pub fn box_nd(extents: &[f64]) -> Result<Domain> {
        if extents.len() != 2 && extents.len() != 3 {
            return Err(Error::InvalidGeometry(format!(
                "box wants 2 or 3 extents, got {}",
                extents.len()
            )));
        }
        if extents.iter().any(|&e| e <= 0.0) {
            return Err(Error::InvalidGeometry("box extents must be positive".into()));
        }
        Ok(Domain {
            shape: Shape::Box { extents: extents.to_vec() },
            measure: extents.iter().product(),
            name: "box".into(),
        })
    }

    pub fn ellipsoid(semi_axes: [f64; 3]) -> Result<Domain> {
        if semi_axes.iter().any(|&a| a <= 0.0) {
            return Err(Error::InvalidGeometry("ellipsoid semi-axes must be positive".into()));
        }
        Ok(Domain {
            shape: Shape::Ellipsoid { semi_axes },
            measure: 4.0 / 3.0 * std::f64::consts::PI * semi_axes[0] * semi_axes[1] * semi_axes[2],
            name: "ellipsoid".into(),
        })
    }

    /// Simple polygon; clockwise input is reversed to counter-clockwise.
    pub fn polygon(vertices: Vec<[f64; 2]>) -> Result<Domain> {
        if vertices.len() < 3 {
            return Err(Error::InvalidGeometry(format!(
                "polygon wants at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut vertices = vertices;
        let signed = polygon_signed_area(&vertices);
        if signed.abs() < 1e-14 {
            return Err(Error::InvalidGeometry("polygon area is zero".into()));
        }
        if signed < 0.0 {
            vertices.reverse();
        }
        if !polygon_is_simple(&vertices) {
            return Err(Error::SelfIntersecting);
        }
        let measure = polygon_signed_area(&vertices);
        Ok(Domain { shape: Shape::Polygon { vertices }, measure, name: "polygon".into() })
    }

    pub fn triangle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Result<Domain> {
        let mut d = Domain::polygon(vec![a, b, c])?;
        d.name = "triangle".into();
        Ok(d)
    }

    /// Equilateral triangle centered at the origin with the given area.
    pub fn equilateral_triangle(area: f64) -> Result<Domain> {
        if area <= 0.0 {
            return Err(Error::InvalidGeometry(format!("triangle area {area} not positive")));
        }
        let side = (4.0 * area / 3f64.sqrt()).sqrt();
        let circum = side / 3f64.sqrt();
        let mut d = Domain::triangle(
            [0.0, circum],
            [-0.5 * side, -0.5 * circum],
            [0.5 * side, -0.5 * circum],
        )?;
        d.name = "equilateral".into();
        Ok(d)
    }

    pub fn with_name(mut self, name: &str) -> Domain {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        match &self.shape {
            Shape::Disc { .. } | Shape::Polygon { .. } => 2,
            Shape::Ball { .. } | Shape::Ellipsoid { .. } => 3,
            Shape::Box { extents } => extents.len(),
        }
    }

    pub fn measure(&self) -> f64 {
        self.measure
    }

    pub fn centroid(&self) -> Point {
        match &self.shape {
            Shape::Polygon { vertices } => {
                let a = polygon_signed_area(vertices);
                let n = vertices.len();
                let (mut cx, mut cy) = (0.0, 0.0);
                for i in 0..n {
                    let [x0, y0] = vertices[i];
                    let [x1, y1] = vertices[(i + 1) % n];
                    let w = x0 * y1 - x1 * y0;
                    cx += (x0 + x1) * w;
                    cy += (y0 + y1) * w;
                }
                [cx / (6.0 * a), cy / (6.0 * a), 0.0]
            }
            _ => [0.0, 0.0, 0.0],
        }
    }

    /// Membership in the open domain. Points within a relative 1e-14 band
    /// of a polygon boundary count as outside, keeping meshes deterministic.
    pub fn contains(&self, p: &Point) -> bool {
        match &self.shape {
            Shape::Disc { radius } => p[0] * p[0] + p[1] * p[1] < radius * radius,
            Shape::Ball { radius } => {
                p[0] * p[0] + p[1] * p[1] + p[2] * p[2] < radius * radius
            }
            Shape::Box { extents } => extents
                .iter()
                .enumerate()
                .all(|(i, &e)| p[i].abs() < 0.5 * e),
            Shape::Ellipsoid { semi_axes } => {
                let mut acc = 0.0;
                for i in 0..3 {
                    let t = p[i] / semi_axes[i];
                    acc += t * t;
                }
                acc < 1.0
            }
            Shape::Polygon { vertices } => {
                let q = [p[0], p[1]];
                if winding_number(vertices, q) == 0 {
                    return false;
                }
                let scale = self.bounding_box().1.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                let band = 1e-14 * scale.max(1.0);
                let n = vertices.len();
                for i in 0..n {
                    if distance_to_segment(q, vertices[i], vertices[(i + 1) % n]) < band {
                        return false;
                    }
                }
                true
            }
        }
    }

    /// Axis-aligned bounding box `(min, max)`; third component is zero in 2D.
    pub fn bounding_box(&self) -> (Point, Point) {
        match &self.shape {
            Shape::Disc { radius } => ([-radius, -radius, 0.0], [*radius, *radius, 0.0]),
            Shape::Ball { radius } => {
                ([-radius, -radius, -radius], [*radius, *radius, *radius])
            }
            Shape::Box { extents } => {
                let mut lo = [0.0; 3];
                let mut hi = [0.0; 3];
                for (i, &e) in extents.iter().enumerate() {
                    lo[i] = -0.5 * e;
                    hi[i] = 0.5 * e;
                }
                (lo, hi)
            }
            Shape::Ellipsoid { semi_axes } => {
                let mut lo = [0.0; 3];
                let mut hi = [0.0; 3];
                for i in 0..3 {
                    lo[i] = -semi_axes[i];
                    hi[i] = semi_axes[i];
                }
                (lo, hi)
            }
            Shape::Polygon { vertices } => {
                let mut lo = [f64::INFINITY, f64::INFINITY, 0.0];
                let mut hi = [f64::NEG_INFINITY, f64::NEG_INFINITY, 0.0];
                for v in vertices {
                    lo[0] = lo[0].min(v[0]);
                    lo[1] = lo[1].min(v[1]);
                    hi[0] = hi[0].max(v[0]);
                    hi[1] = hi[1].max(v[1]);
                }
                (lo, hi)
            }
        }
    }

    /// Scale about the centroid so the measure matches `target` exactly.
    pub fn normalize_measure(&self, target: f64) -> Result<Domain> {
        if target <= 0.0 {
            return Err(Error::InvalidGeometry(format!("target measure {target} not positive")));
        }
        let s = (target / self.measure).powf(1.0 / self.dimension() as f64);
        let shape = match &self.shape {
            Shape::Disc { radius } => Shape::Disc { radius: radius * s },
            Shape::Ball { radius } => Shape::Ball { radius: radius * s },
            Shape::Box { extents } => {
                Shape::Box { extents: extents.iter().map(|e| e * s).collect() }
            }
            Shape::Ellipsoid { semi_axes } => Shape::Ellipsoid {
                semi_axes: [semi_axes[0] * s, semi_axes[1] * s, semi_axes[2] * s],
            },
            Shape::Polygon { vertices } => {
                let c = self.centroid();
                Shape::Polygon {
                    vertices: vertices
                        .iter()
                        .map(|v| [c[0] + s * (v[0] - c[0]), c[1] + s * (v[1] - c[1])])
                        .collect(),
                }
            }
        };
        let measure = match &shape {
            Shape::Disc { radius } => std::f64::consts::PI * radius * radius,
            Shape::Ball { radius } => 4.0 / 3.0 * std::f64::consts::PI * radius.powi(3),
            Shape::Box { extents } => extents.iter().product(),
            Shape::Ellipsoid { semi_axes } => {
                4.0 / 3.0 * std::f64::consts::PI * semi_axes[0] * semi_axes[1] * semi_axes[2]
            }
            Shape::Polygon { vertices } => polygon_signed_area(vertices),
        };
        Ok(Domain { shape, measure, name: self.name.clone() })
    }
}

// ---------------------------------------------------------------------------
// mesh
// ---------------------------------------------------------------------------

/// Uniform-cell volumetric mesh: the cells of a Cartesian grid whose
/// centroids lie inside the open domain.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub domain: Domain,
    pub h: f64,
    pub centroids: Vec<Point>,
    pub cell_measure: f64,
}

impl Mesh {
    /// Grid the bounding box with spacing `h` and keep inside centroids.
    /// Deterministic for identical inputs; fails below 16 cells.
    pub fn build(domain: &Domain, h: f64) -> Result<Mesh> {
        if h <= 0.0 {
            return Err(Error::InvalidGeometry(format!("mesh spacing {h} not positive")));
        }
        let dim = domain.dimension();
        let (lo, hi) = domain.bounding_box();
        let mut counts = [1usize; 3];
        for i in 0..dim {
            counts[i] = ((hi[i] - lo[i]) / h - 1e-9).ceil().max(1.0) as usize;
        }
        let mut centroids = Vec::new();
        for iz in 0..counts[2] {
            for iy in 0..counts[1] {
                for ix in 0..counts[0] {
                    let p = [
                        lo[0] + (ix as f64 + 0.5) * h,
                        lo[1] + (iy as f64 + 0.5) * h,
                        if dim == 3 { lo[2] + (iz as f64 + 0.5) * h } else { 0.0 },
                    ];
                    if domain.contains(&p) {
                        centroids.push(p);
                    }
                }
            }
        }
        if centroids.len() < 16 {
            return Err(Error::MeshTooCoarse { cells: centroids.len(), h, min: 16 });
        }
        Ok(Mesh {
            domain: domain.clone(),
            h,
            cell_measure: h.powi(dim as i32),
            centroids,
        })
    }

    pub fn len(&self) -> usize {
        self.centroids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centroids.is_empty()
    }

    /// Total measure covered by the included cells.
    pub fn covered_measure(&self) -> f64 {
        self.cell_measure * self.len() as f64
    }
}

// ---------------------------------------------------------------------------
// domain spec files (JSON)
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "shape", content = "params", rename_all = "lowercase", deny_unknown_fields)]
enum ShapeSpec {
    Disc { radius: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
    Triangle { vertices: [[f64; 2]; 3] },
    Ball { radius: f64 },
    Box { extents: Vec<f64> },
    Ellipsoid { semi_axes: [f64; 3] },
}

#[derive(Deserialize)]
struct SpecFile {
    #[serde(flatten)]
    shape: ShapeSpec,
    normalize_measure_to: Option<f64>,
    name: Option<String>,
}

/// Parse a domain spec like
/// `{"shape": "disc", "params": {"radius": 1.0}, "normalize_measure_to": 3.14}`.
pub fn domain_from_spec_str(text: &str) -> Result<Domain> {
    let spec: SpecFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig(format!("domain spec: {e}")))?;
    let mut domain = match spec.shape {
        ShapeSpec::Disc { radius } => Domain::disc(radius)?,
        ShapeSpec::Polygon { vertices } => Domain::polygon(vertices)?,
        ShapeSpec::Triangle { vertices } => {
            Domain::triangle(vertices[0], vertices[1], vertices[2])?
        }
        ShapeSpec::Ball { radius } => Domain::ball(radius)?,
        ShapeSpec::Box { extents } => Domain::box_nd(&extents)?,
        ShapeSpec::Ellipsoid { semi_axes } => Domain::ellipsoid(semi_axes)?,
    };
    if let Some(target) = spec.normalize_measure_to {
        domain = domain.normalize_measure(target)?;
    }
    if let Some(name) = spec.name {
        domain = domain.with_name(&name);
    }
    Ok(domain)
}

pub fn domain_from_spec_file(path: &std::path::Path) -> Result<Domain> {
    domain_from_spec_str(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    #[test]
    fn exact_measures() {
        assert_relative_eq!(Domain::disc(1.0).unwrap().measure(), PI, max_relative = 1e-12);
        let t = Domain::triangle([0.0, 0.0], [1.0, 0.0], [0.0, 1.0]).unwrap();
        assert_relative_eq!(t.measure(), 0.5, max_relative = 1e-12);
        let b = Domain::box_nd(&[1.0, 2.0, 3.0]).unwrap();
        assert_relative_eq!(b.measure(), 6.0, max_relative = 1e-12);
    }

    #[test]
    fn degenerate_shapes_rejected() {
        assert!(Domain::disc(0.0).is_err());
        assert!(Domain::triangle([0.0, 0.0], [1.0, 1.0], [2.0, 2.0]).is_err());
        // bow-tie quadrilateral
        assert!(matches!(
            Domain::polygon(vec![[0.0, 0.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]]),
            Err(Error::SelfIntersecting)
        ));
    }

    #[test]
    fn clockwise_polygon_normalized() {
        let d = Domain::polygon(vec![[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]]).unwrap();
        assert!(d.measure() > 0.0);
        assert_relative_eq!(d.measure(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn normalize_measure_examples() {
        let d = Domain::disc(2.0).unwrap().normalize_measure(PI).unwrap();
        match d.shape() {
            Shape::Disc { radius } => assert_relative_eq!(*radius, 1.0, max_relative = 1e-12),
            _ => unreachable!(),
        }
        let sq = Domain::box_nd(&[1.0, 1.0]).unwrap().normalize_measure(PI).unwrap();
        match sq.shape() {
            Shape::Box { extents } => {
                assert_relative_eq!(extents[0], PI.sqrt(), max_relative = 1e-12)
            }
            _ => unreachable!(),
        }
        let ball = Domain::ball(1.0)
            .unwrap()
            .normalize_measure(8.0 * (4.0 * PI / 3.0))
            .unwrap();
        match ball.shape() {
            Shape::Ball { radius } => assert_relative_eq!(*radius, 2.0, max_relative = 1e-12),
            _ => unreachable!(),
        }
    }

    #[test]
    fn normalize_measure_idempotent_and_composable() {
        let poly = Domain::polygon(vec![[0.0, 0.0], [2.0, 0.0], [2.5, 1.0], [0.5, 1.5]]).unwrap();
        let once = poly.normalize_measure(PI).unwrap();
        assert_relative_eq!(once.measure(), PI, max_relative = 1e-12);
        let twice = once.normalize_measure(PI).unwrap();
        assert_relative_eq!(twice.measure(), PI, max_relative = 1e-12);
        let via_intermediate =
            poly.normalize_measure(7.0).unwrap().normalize_measure(PI).unwrap();
        assert_relative_eq!(via_intermediate.measure(), PI, max_relative = 1e-12);
    }

    #[test]
    fn equilateral_triangle_construction() {
        let t = Domain::equilateral_triangle(3f64.sqrt() / 4.0).unwrap();
        if let Shape::Polygon { vertices } = t.shape() {
            let side = ((vertices[0][0] - vertices[1][0]).powi(2)
                + (vertices[0][1] - vertices[1][1]).powi(2))
            .sqrt();
            assert_relative_eq!(side, 1.0, max_relative = 1e-12);
        }
        let t = Domain::equilateral_triangle(PI).unwrap();
        assert_relative_eq!(t.measure(), PI, max_relative = 1e-12);
        let c = t.centroid();
        assert_abs_diff_eq!(c[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c[1], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn aligned_box_mesh_is_exact() {
        let sq = Domain::box_nd(&[1.0, 1.0]).unwrap();
        let mesh = Mesh::build(&sq, 0.25).unwrap();
        assert_eq!(mesh.len(), 16);
        assert_relative_eq!(mesh.covered_measure(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn disc_mesh_measure_and_frozen_count() {
        let disc = Domain::disc(1.0).unwrap();
        let mesh = Mesh::build(&disc, 0.05).unwrap();
        // counting oracle at this resolution, frozen once computed
        assert_eq!(mesh.len(), 1264);
        assert!((mesh.covered_measure() - PI).abs() / PI < 0.03);
    }

    #[test]
    fn mesh_refinement_improves_measure() {
        let shapes = [
            Domain::disc(1.0).unwrap(),
            Domain::ball(1.0).unwrap(),
            Domain::equilateral_triangle(PI).unwrap(),
        ];
        for domain in shapes {
            let coarse = if domain.dimension() == 2 { 0.1 } else { 0.25 };
            let e1 = (Mesh::build(&domain, coarse).unwrap().covered_measure()
                - domain.measure())
            .abs();
            let e2 = (Mesh::build(&domain, 0.5 * coarse).unwrap().covered_measure()
                - domain.measure())
            .abs();
            assert!(
                e2 < e1 / 1.5,
                "{}: refinement error {e1} -> {e2} improved less than 1.5x",
                domain.name()
            );
        }
    }

    #[test]
    fn too_coarse_mesh_rejected() {
        let disc = Domain::disc(1.0).unwrap();
        assert!(matches!(Mesh::build(&disc, 0.9), Err(Error::MeshTooCoarse { .. })));
    }

    #[test]
    fn membership_agrees_with_analytic_predicates() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let disc = Domain::disc(0.8).unwrap();
        let ball = Domain::ball(0.8).unwrap();
        let bx = Domain::box_nd(&[1.2, 0.7, 0.9]).unwrap();
        // square expressed two ways must agree everywhere off the boundary
        let square_box = Domain::box_nd(&[1.0, 1.0]).unwrap();
        let square_poly =
            Domain::polygon(vec![[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]]).unwrap();
        for _ in 0..1_000_000 {
            let p = [
                rng.gen_range(-1.0f64..1.0),
                rng.gen_range(-1.0f64..1.0),
                rng.gen_range(-1.0f64..1.0),
            ];
            assert_eq!(disc.contains(&p), p[0] * p[0] + p[1] * p[1] < 0.64);
            assert_eq!(ball.contains(&p), p[0] * p[0] + p[1] * p[1] + p[2] * p[2] < 0.64);
            assert_eq!(
                bx.contains(&p),
                p[0].abs() < 0.6 && p[1].abs() < 0.35 && p[2].abs() < 0.45
            );
            assert_eq!(square_box.contains(&p), square_poly.contains(&p));
        }
    }

    #[test]
    fn nonconvex_polygon_membership() {
        // L-shape: (0,0) (2,0) (2,1) (1,1) (1,2) (0,2)
        let l = Domain::polygon(vec![
            [0.0, 0.0],
            [2.0, 0.0],
            [2.0, 1.0],
            [1.0, 1.0],
            [1.0, 2.0],
            [0.0, 2.0],
        ])
        .unwrap();
        assert_relative_eq!(l.measure(), 3.0, max_relative = 1e-12);
        assert!(l.contains(&[0.5, 0.5, 0.0]));
        assert!(l.contains(&[1.5, 0.5, 0.0]));
        assert!(l.contains(&[0.5, 1.5, 0.0]));
        assert!(!l.contains(&[1.5, 1.5, 0.0]));
    }

    #[test]
    fn spec_files_parse() {
        let d = domain_from_spec_str(
            r#"{"shape": "disc", "params": {"radius": 2.0}, "normalize_measure_to": 3.141592653589793}"#,
        )
        .unwrap();
        assert_relative_eq!(d.measure(), PI, max_relative = 1e-12);
        let t = domain_from_spec_str(
            r#"{"shape": "triangle", "params": {"vertices": [[0,0],[1,0],[0,1]]}}"#,
        )
        .unwrap();
        assert_relative_eq!(t.measure(), 0.5, max_relative = 1e-12);
        let e = domain_from_spec_str(
            r#"{"shape": "ellipsoid", "params": {"semi_axes": [1.0, 2.0, 0.5]}, "name": "squashed"}"#,
        )
        .unwrap();
        assert_eq!(e.name(), "squashed");
        assert!(domain_from_spec_str(r#"{"shape": "pentagon", "params": {}}"#).is_err());
        assert!(domain_from_spec_str("not json").is_err());
    }
}
