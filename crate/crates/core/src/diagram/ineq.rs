use super::DiagramError;
use crate::families::constants::bent_pentagon_width;
use serde::Serialize;
use std::fmt;

/// The nine inequalities, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Ineq {
    Lb1,
    Lb2,
    Lb3,
    Ib1,
    Ib2,
    Ib3,
    Ub1,
    Ub2,
    Ub3,
}

impl Ineq {
    pub const ALL: [Ineq; 9] =
        [Ineq::Lb1, Ineq::Lb2, Ineq::Lb3, Ineq::Ib1, Ineq::Ib2, Ineq::Ib3, Ineq::Ub1, Ineq::Ub2, Ineq::Ub3];

    /// Inequalities whose equality set is a plane through the ball's point.
    pub const LINEAR: [Ineq; 4] = [Ineq::Lb1, Ineq::Ib1, Ineq::Ub1, Ineq::Ib2];

    pub const CURVED: [Ineq; 5] = [Ineq::Lb2, Ineq::Lb3, Ineq::Ib3, Ineq::Ub2, Ineq::Ub3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["lb1", "lb2", "lb3", "ib1", "ib2", "ib3", "ub1", "ub2", "ub3"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Ineq> {
        Ineq::ALL.into_iter().find(|i| i.name() == s)
    }
}

impl fmt::Display for Ineq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Normalized residuals; nonnegative means satisfied, NaN means undefined.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlackVector(pub [f64; 9]);

impl SlackVector {
    pub fn get(&self, i: Ineq) -> f64 {
        self.0[i.index()]
    }

    pub fn tight(&self, tol: f64) -> Vec<Ineq> {
        Ineq::ALL.into_iter().filter(|&i| self.get(i).abs() <= tol).collect()
    }

    /// Inequalities violated by more than `tol` (undefined residuals count as violated).
    pub fn violated(&self, tol: f64) -> Vec<Ineq> {
        Ineq::ALL.into_iter().filter(|&i| !(self.get(i) >= -tol)).collect()
    }

    pub fn min(&self) -> f64 {
        self.0.iter().fold(f64::INFINITY, |m, &s| if s.is_nan() { f64::NEG_INFINITY } else { m.min(s) })
    }

    pub fn min_over(&self, set: &[Ineq]) -> f64 {
        set.iter().fold(f64::INFINITY, |m, &i| {
            let s = self.get(i);
            if s.is_nan() {
                f64::NEG_INFINITY
            } else {
                m.min(s)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlackReport {
    pub slacks: SlackVector,
    /// Whether the inputs satisfy `0 ≤ 2r ≤ w ≤ D ≤ 2R`.
    pub chain_ok: bool,
    /// |trigonometric − algebraic| right-hand side of lb₃.
    pub lb3_form_gap: f64,
}

fn sqrt0(x: f64) -> f64 {
    x.max(0.0).sqrt()
}

/// Right-hand side of lb₂ in its `w ≥ …` form.
pub fn lb2_bound(d: f64, big_r: f64) -> f64 {
    d * d * sqrt0(4.0 * big_r * big_r - d * d) / (2.0 * big_r * big_r)
}

/// Right-hand side of lb₃ in trigonometric form.
pub fn lb3_bound_trig(r: f64, d: f64, big_r: f64) -> f64 {
    big_r * bent_pentagon_width(r / big_r, d / big_r)
}

/// Right-hand side of lb₃ in algebraic form (cosine addition theorem expanded).
pub fn lb3_bound_algebraic(r: f64, d: f64, big_r: f64) -> f64 {
    let dr = d - r;
    let q = sqrt0(1.0 - d * d / (4.0 * big_r * big_r));
    let p = sqrt0(1.0 - d * d / (4.0 * dr * dr));
    let first = sqrt0(1.0 - r * r / (dr * dr)) * (d * d / (4.0 * big_r * dr) - p * q);
    let second = r / dr * (d / (2.0 * big_r) * p + d / (2.0 * dr) * q);
    2.0 * d * q * (first + second)
}

/// Coefficient of `r` in ub₂; at most 3 on `[√3R, 2R]`.
pub fn ub2_coefficient(d: f64, big_r: f64) -> f64 {
    1.0 + 2.0 * 2f64.sqrt() * big_r / d * (1.0 + sqrt0(1.0 - (d / (2.0 * big_r)).powi(2))).sqrt()
}

pub fn ub2_bound(r: f64, d: f64, big_r: f64) -> f64 {
    r * ub2_coefficient(d, big_r)
}

pub fn ub3_bound(r: f64, d: f64, big_r: f64) -> f64 {
    2.0 * r * (1.0 + 2.0 * r * big_r / (d * d) * (1.0 + sqrt0(1.0 - (d / (2.0 * big_r)).powi(2))))
}

/// The nine normalized residuals of `(r, w, D, R)`.
pub fn eval_slacks(r: f64, w: f64, d: f64, big_r: f64) -> SlackReport {
    let chain_ok = r >= 0.0 && 2.0 * r <= w + 1e-12 && w <= d + 1e-12 && d <= 2.0 * big_r + 1e-12;
    let lb3_trig = if d > 0.0 && 2.0 * r <= d { lb3_bound_trig(r, d, big_r) } else { f64::NAN };
    let lb3_alg = if d > 0.0 && 2.0 * r <= d { lb3_bound_algebraic(r, d, big_r) } else { f64::NAN };
    let s = [
        w - 2.0 * r,
        w - lb2_bound(d, big_r),
        w - lb3_trig,
        2.0 * big_r - d,
        d - big_r - r,
        d - 3f64.sqrt() * big_r,
        big_r + r - w,
        ub2_bound(r, d, big_r) - w,
        ub3_bound(r, d, big_r) - w,
    ];
    SlackReport {
        slacks: SlackVector(s.map(|x| x / big_r)),
        chain_ok,
        lb3_form_gap: (lb3_trig - lb3_alg).abs(),
    }
}

/// The four residuals of the `(r, D, R)` diagram: `D ≤ 2R`, `D ≥ r + R`, `D ≥ √3R`, and the
/// inradius lower bound of isosceles triangles, each normalized by R.
pub fn check_2d_projection(r: f64, d: f64, big_r: f64) -> [f64; 4] {
    let s = sqrt0(4.0 * big_r * big_r - d * d);
    let r_min = d * d * s / (2.0 * big_r * (2.0 * big_r + s));
    [(2.0 * big_r - d) / big_r, (d - r - big_r) / big_r, (d - 3f64.sqrt() * big_r) / big_r, (r - r_min) / big_r]
}

/// Lower and upper width envelopes at fixed `(r, D, R)`.
pub fn w_envelopes(r: f64, d: f64, big_r: f64) -> Result<(f64, f64), DiagramError> {
    let proj = check_2d_projection(r, d, big_r);
    if proj.iter().any(|&s| !(s >= -1e-9)) {
        return Err(DiagramError::Domain(format!("(r, D) = ({r}, {d}) lies outside the (r, D) diagram")));
    }
    let lower = (2.0 * r).max(lb2_bound(d, big_r)).max(lb3_bound_trig(r, d, big_r));
    let upper = (big_r + r).min(ub2_bound(r, d, big_r)).min(ub3_bound(r, d, big_r)).min(d);
    if lower > upper + 1e-9 {
        return Err(DiagramError::Domain(format!("empty width range at (r, D) = ({r}, {d})")));
    }
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_and_eqt_patterns() {
        let b = eval_slacks(1.0, 2.0, 2.0, 1.0).slacks;
        assert_eq!(b.tight(1e-12), vec![Ineq::Lb1, Ineq::Ib1, Ineq::Ib2, Ineq::Ub1]);
        let s3 = 3f64.sqrt();
        let e = eval_slacks(0.5, 1.5, s3, 1.0).slacks;
        assert_eq!(e.tight(1e-12), vec![Ineq::Lb2, Ineq::Ib3, Ineq::Ub1, Ineq::Ub2, Ineq::Ub3]);
    }

    #[test]
    fn envelopes_at_landmarks() {
        let (lo, hi) = w_envelopes(1.0, 2.0, 1.0).unwrap();
        assert!((lo - 2.0).abs() < 1e-12 && (hi - 2.0).abs() < 1e-12);
        let s3 = 3f64.sqrt();
        let (lo, hi) = w_envelopes(0.5, s3, 1.0).unwrap();
        assert!((lo - 1.5).abs() < 1e-12 && (hi - 1.5).abs() < 1e-12);
        let (lo, hi) = w_envelopes(s3 - 1.0, s3, 1.0).unwrap();
        let w_srt = s3 * (std::f64::consts::FRAC_PI_3 - (s3 - 1.0).asin()).cos();
        assert!((lo - w_srt).abs() < 1e-12 && (hi - s3).abs() < 1e-12);
        assert!(w_envelopes(0.1, s3, 1.0).is_err());
    }

    #[test]
    fn projection_is_tight_for_eqt() {
        let p = check_2d_projection(0.5, 3f64.sqrt(), 1.0);
        assert!(p[3].abs() < 1e-15 && p[2].abs() < 1e-15);
    }
}
