use super::ineq::Ineq;
use super::skeleton::{classify, lb1_edge_gamma, SkeletonLabel};
use super::{f_map, DiagramError, DiagramPoint, CLASSIFY_TOL};
use crate::families::constants::*;
use crate::families::{construct, FamilySpec};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};
use std::fmt::Write as _;

/// A two-parameter chart of (part of) a facet.
#[derive(Clone, Copy, Debug)]
pub struct FacetPatch {
    pub facet: Ineq,
    pub name: &'static str,
    chart: fn(f64, f64) -> FamilySpec,
}

impl FacetPatch {
    /// Member at `(u, v) ∈ [0, 1]²`.
    pub fn family(&self, u: f64, v: f64) -> FamilySpec {
        (self.chart)(u.clamp(0.0, 1.0), v.clamp(0.0, 1.0))
    }
}

fn lerp(a: f64, b: f64, t: f64) -> f64 {
    a + (b - a) * t
}

/// Largest blend towards the ball used on the linear facets.
const MAX_ROUNDING: f64 = 0.9;

fn rounded(inner: FamilySpec, v: f64) -> FamilySpec {
    FamilySpec::Rounded { inner: Box::new(inner), lambda: MAX_ROUNDING * v }
}

/// Apex-angle interval of the bent pentagons on the lb₃ facet at inradius `r`.
pub(crate) fn lb3_gamma_range(r: f64) -> (f64, f64) {
    let mut lo = 2.0 * (4.0 * r / 3.0).min(1.0).acos();
    if r >= r_bent_trapezoid() {
        lo = lo.max(lb1_edge_gamma(r));
    }
    let hi = if r <= r_reuleaux() { FRAC_PI_3 } else { 2.0 * (0.5 * (r + 1.0)).min(1.0).acos() };
    (lo, hi.max(lo))
}

pub fn facet_patches() -> Vec<FacetPatch> {
    use Ineq::*;
    let p = |facet, name, chart| FacetPatch { facet, name, chart };
    vec![
        p(Lb1, "rounded bent trapezoids", |u, v| {
            rounded(FamilySpec::BentTrapezoid { gamma: u * gamma_bent_trapezoid() }, v)
        }),
        p(Lb1, "rounded bent pentagons", |u, v| {
            let r = lerp(r_bent_trapezoid(), r_hood(), u);
            rounded(FamilySpec::BentPentagon { r, gamma: lb1_edge_gamma(r) }, v)
        }),
        p(Lb2, "isosceles triangles with a ball", |u, v| {
            let gamma = u * FRAC_PI_3;
            let (lo, hi) = crate::families::iso_ball_r_range(gamma);
            FamilySpec::IsoscelesBall { gamma, r: lerp(lo, hi, v) }
        }),
        p(Lb3, "bent pentagons", |u, v| {
            let r = lerp(r_flattened(), r_hood(), u);
            let (lo, hi) = lb3_gamma_range(r);
            FamilySpec::BentPentagon { r, gamma: lerp(lo, hi, v) }
        }),
        p(Ib1, "rounded right triangles", |u, v| {
            rounded(FamilySpec::RightTriangle { r: u * (2f64.sqrt() - 1.0) }, v)
        }),
        p(Ib1, "rounded right boats", |u, v| {
            rounded(FamilySpec::RightBoat { r: lerp(2f64.sqrt() - 1.0, FRAC_1_SQRT_2, u) }, v)
        }),
        p(Ib2, "rounded hoods", |u, v| rounded(FamilySpec::Hood { gamma: lerp(gamma_hood(), FRAC_PI_3, u) }, v)),
        p(Ib2, "rounded concentric sliced", |u, v| {
            rounded(FamilySpec::ConcentricSliced { gamma: lerp(gamma_csrt_min(), FRAC_PI_6, u) }, v)
        }),
        p(Ib3, "shifted blossoms", |u, v| FamilySpec::ShiftedBlossom { r: lerp(0.5, r_reuleaux(), u), shift: v }),
        p(Ib3, "rotated slices", |u, v| FamilySpec::GeneralSliced {
            r: lerp(r_flattened(), r_reuleaux(), u),
            rotation: v,
        }),
        p(Ub1, "rounded blossoms", |u, v| rounded(FamilySpec::Blossom { r: lerp(0.5, r_reuleaux(), u) }, v)),
        p(Ub1, "rounded concentric boats", |u, v| {
            rounded(FamilySpec::ConcentricBoat { gamma: lerp(FRAC_PI_3, FRAC_PI_2, u) }, v)
        }),
        p(Ub2, "sailing boats", |u, v| {
            let gamma = lerp(FRAC_PI_3, FRAC_PI_2, u);
            let (lo, hi) = crate::families::boat_r_range(gamma);
            FamilySpec::Boat { r: lerp(lo, hi, v), gamma }
        }),
        p(Ub3, "triangles", |u, v| {
            let d = lerp(sqrt3(), 2.0, u);
            let (lo, hi) = crate::families::triangle_r_range(d);
            FamilySpec::Triangle { r: lerp(lo, hi, v), diameter: d }
        }),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct MeshPoint {
    pub point: DiagramPoint,
    pub label: SkeletonLabel,
    pub spec: FamilySpec,
    pub facet: Ineq,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Mesh {
    pub points: Vec<MeshPoint>,
    /// Vertex indices of triangles within one patch.
    pub triangles: Vec<[usize; 3]>,
    /// Number of patches that produced at least one point.
    pub patches: usize,
}

impl Mesh {
    /// `x,y,z,label,family,params`; params are `name=value` pairs joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,z,label,family,params\n");
        for m in &self.points {
            let params: Vec<String> = m.spec.params().iter().map(|(k, v)| format!("{k}={}", fmt12(*v))).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt12(m.point.x),
                fmt12(m.point.y),
                fmt12(m.point.z),
                m.label,
                m.spec.family_name(),
                params.join(";")
            );
        }
        out
    }

    /// Wavefront-style vertex and face lists.
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for m in &self.points {
            let _ = writeln!(out, "v {} {} {}", fmt12(m.point.x), fmt12(m.point.y), fmt12(m.point.z));
        }
        for t in &self.triangles {
            let _ = writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1);
        }
        out
    }
}

/// Twelve significant digits.
pub fn fmt12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = 11 - x.abs().log10().floor() as i32;
    if (0..=20).contains(&digits) {
        let s = format!("{:.*}", digits as usize, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.11e}")
    }
}

fn sample_patch(patch: &FacetPatch, n: usize) -> Vec<Option<(DiagramPoint, FamilySpec)>> {
    let nodes: Vec<(usize, usize)> = (0..=n).flat_map(|i| (0..=n).map(move |j| (i, j))).collect();
    nodes
        .par_iter()
        .map(|&(i, j)| {
            let spec = patch.family(i as f64 / n as f64, j as f64 / n as f64);
            let body = construct(&spec).ok()?;
            let p = f_map(&body).ok()?;
            Some((p, spec))
        })
        .collect()
}

/// Samples every facet chart on a `(resolution + 1)²` grid.
pub fn sample_boundary(resolution: usize) -> Result<Mesh, DiagramError> {
    let n = resolution.max(1);
    let mut mesh = Mesh::default();
    for patch in facet_patches() {
        let grid = sample_patch(&patch, n);
        let mut index = vec![None; grid.len()];
        for (k, node) in grid.into_iter().enumerate() {
            if let Some((point, spec)) = node {
                index[k] = Some(mesh.points.len());
                mesh.points.push(MeshPoint { point, label: classify(&point, CLASSIFY_TOL), spec, facet: patch.facet });
            }
        }
        if index.iter().any(Option::is_some) {
            mesh.patches += 1;
        }
        let at = |i: usize, j: usize| index[i * (n + 1) + j];
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b), Some(c), Some(d)) = (at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)) {
                    mesh.triangles.push([a, b, c]);
                    mesh.triangles.push([a, c, d]);
                }
            }
        }
    }
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt12_digits() {
        assert_eq!(fmt12(1.0), "1");
        assert_eq!(fmt12(3f64.sqrt()), "1.73205080757");
        assert_eq!(fmt12(0.000123456789012345), "0.000123456789012");
    }

    #[test]
    fn patches_attain_their_facet() {
        for patch in facet_patches() {
            for (u, v) in [(0.25, 0.5), (0.5, 0.3), (0.8, 0.9)] {
                let spec = patch.family(u, v);
                let p = f_map(&construct(&spec).unwrap()).unwrap();
                let s = p.slacks().slacks;
                assert!(s.get(patch.facet).abs() < 1e-7, "{spec}: {:?}", s);
                assert!(s.min() > -1e-9, "{spec}: {:?}", s);
            }
        }
    }

    #[test]
    fn linear_facets_are_planes() {
        let mesh = sample_boundary(4).unwrap();
        assert!(mesh.patches >= 9);
        for m in &mesh.points {
            match m.facet {
                Ineq::Lb1 => assert!((m.point.x - m.point.y).abs() < 1e-9),
                Ineq::Ib3 => assert!((m.point.z - 0.5 * sqrt3()).abs() < 1e-9),
                _ => {}
            }
        }
    }
}
