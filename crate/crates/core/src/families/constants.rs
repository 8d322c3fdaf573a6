//! Closed-form landmark values, all for circumradius 1.

use crate::numeric::bisect;
use std::f64::consts::FRAC_PI_3;

pub fn sqrt3() -> f64 {
    3f64.sqrt()
}

/// Inradius of the Reuleaux triangle (and of every ib₂-tight body with D = √3).
pub fn r_reuleaux() -> f64 {
    sqrt3() - 1.0
}

/// Inradius of the flattened Reuleaux triangle, `√27/8`.
pub fn r_flattened() -> f64 {
    27f64.sqrt() / 8.0
}

/// Apex angle of the isosceles triangle inside the bent trapezoid.
pub fn gamma_bent_trapezoid() -> f64 {
    0.75f64.asin()
}

/// Diameter `2cos(γ/2)` of the acute isosceles triangle with apex angle γ.
pub fn iso_diameter(gamma: f64) -> f64 {
    2.0 * (0.5 * gamma).cos()
}

pub fn d_bent_trapezoid() -> f64 {
    iso_diameter(gamma_bent_trapezoid())
}

pub fn r_bent_trapezoid() -> f64 {
    0.375 * d_bent_trapezoid()
}

/// Inradius of the hood: root of `r² + 2r − 1 = 2√(1 − r²)`.
pub fn r_hood() -> f64 {
    bisect(|r| r * r + 2.0 * r - 1.0 - 2.0 * (1.0 - r * r).sqrt(), 0.5, 1.0, 1e-16)
        .expect("hood equation has a root in [1/2, 1]")
}

/// Radical closed form of the hood inradius, as a cross-check of [`r_hood`].
pub fn r_hood_radicals() -> f64 {
    let s69 = 69f64.sqrt();
    let varsigma = (864.0 - 96.0 * s69).cbrt() / 3.0;
    let xi = 2.0 * (2.0f64 / 3.0).powf(2.0 / 3.0) * (9.0 + s69).cbrt();
    let a = (varsigma + xi).sqrt();
    0.5 * (a + (-varsigma - xi + 16.0 / a).sqrt()) - 1.0
}

/// Apex angle of the hood's isosceles triangle: `D = 1 + r` with `D = 2cos(γ/2)`.
pub fn gamma_hood() -> f64 {
    2.0 * (0.5 * (1.0 + r_hood())).acos()
}

/// Width of the sliced Reuleaux triangle, `√3·cos(π/3 − asin(√3 − 1))`.
pub fn w_sliced() -> f64 {
    sqrt3() * (FRAC_PI_3 - r_reuleaux().asin()).cos()
}

/// Lower end of the concentric sliced family's angle parameter.
pub fn gamma_csrt_min() -> f64 {
    r_reuleaux().asin() - std::f64::consts::FRAC_PI_6
}

/// Inradius of the acute/right isosceles triangle with apex angle γ inscribed in 𝔹.
pub fn iso_inradius(gamma: f64) -> f64 {
    let (_, r) = iso_width_inradius(gamma);
    r
}

/// `(w, r)` of the isosceles triangle with apex angle γ ∈ [0, π/2].
pub fn iso_width_inradius(gamma: f64) -> (f64, f64) {
    if gamma <= FRAC_PI_3 {
        let d = iso_diameter(gamma);
        let s = (4.0 - d * d).max(0.0).sqrt();
        let w = d * d * s / 2.0;
        (w, w / (2.0 + s))
    } else {
        let d = 2.0 * gamma.sin();
        let h = 0.5 * gamma;
        let r = 0.5 * d * (1.0 / h.cos() - h.tan());
        (r * (1.0 + 1.0 / h.sin()), r)
    }
}

/// Diameter of the isosceles triangle with apex angle γ ∈ [0, π/2].
pub fn iso_diameter_any(gamma: f64) -> f64 {
    if gamma <= FRAC_PI_3 {
        iso_diameter(gamma)
    } else {
        2.0 * gamma.sin()
    }
}

/// Inradius of the bent trapezoid with apex angle γ ∈ [0, π/3].
pub fn r_bent_trapezoid_at(gamma: f64) -> f64 {
    let d = iso_diameter(gamma);
    if gamma <= gamma_bent_trapezoid() {
        0.5 * d * gamma.sin()
    } else {
        0.375 * d
    }
}

/// Width of the bent pentagon with inradius `r` and diameter `d` (circumradius 1).
pub fn bent_pentagon_width(r: f64, d: f64) -> f64 {
    let c = |x: f64| x.clamp(-1.0, 1.0);
    let angle = c(d / (2.0 * (d - r))).acos() + c(0.5 * d).acos() - c(r / (d - r)).asin();
    2.0 * d * (1.0 - 0.25 * d * d).max(0.0).sqrt() * angle.cos()
}

/// Apex angle at which the bent pentagon of inradius `r` has width exactly `2r`.
pub fn gamma_lb1_edge(r: f64) -> Option<f64> {
    let lo = 2.0 * (4.0 * r / 3.0).min(1.0).acos();
    let hi = 2.0 * (0.5 * (1.0 + r)).min(1.0).acos();
    bisect(|g| bent_pentagon_width(r, iso_diameter(g)) - 2.0 * r, lo, hi, 1e-14)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hood_forms_agree() {
        assert!((r_hood() - 0.793_580_425_528_854_9).abs() < 1e-15);
        assert!((r_hood_radicals() - r_hood()).abs() < 1e-9);
        // γ_H also equals 2·asin(r/D).
        let d = 1.0 + r_hood();
        assert!((gamma_hood() - 2.0 * (r_hood() / d).asin()).abs() < 1e-12);
    }

    #[test]
    fn landmarks() {
        assert!((w_sliced() / 2.0 - 0.8440).abs() < 5e-5);
        assert!((r_bent_trapezoid() - 0.6836).abs() < 5e-5);
        assert!((d_bent_trapezoid() / 2.0 - 0.9114).abs() < 5e-5);
        let (w, r) = iso_width_inradius(FRAC_PI_3);
        assert!((w - 1.5).abs() < 1e-15 && (r - 0.5).abs() < 1e-15);
        let (w, r) = iso_width_inradius(std::f64::consts::FRAC_PI_2);
        assert!((w - 1.0).abs() < 1e-15 && (r - (2f64.sqrt() - 1.0)).abs() < 1e-15);
    }
}
