//! Closed-form eigenfunctions, analytic gradients and symmetry pullbacks.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CourantError, Result};
use crate::geometry::{self, to_alcove, AlcovePoint, CartesianPoint, DomainKind, Symmetry};
use crate::spectrum::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub grad_s: f64,
    pub grad_t: f64,
}

/// One real eigenfunction: a domain, a mode and a mixing angle.
///
/// On the equilateral triangle the function is `cos θ C + sin θ S`. The
/// hemiequilateral triangle uses `C` alone and the right-isosceles triangle
/// the antisymmetrized product of sines, so `theta` is ignored there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenfunctionHandle {
    pub domain: DomainKind,
    pub mode: Mode,
    pub theta: f64,
}

impl EigenfunctionHandle {
    pub fn new(domain: DomainKind, m: i64, n: i64, theta: f64) -> Self {
        Self { domain, mode: Mode::new(m, n), theta }
    }

    pub fn equilateral(m: i64, n: i64, theta: f64) -> Self {
        Self::new(DomainKind::Equilateral, m, n, theta)
    }

    pub fn hemiequilateral(m: i64, n: i64) -> Self {
        Self::new(DomainKind::Hemiequilateral, m, n, 0.0)
    }

    pub fn right_isosceles(m: i64, n: i64) -> Self {
        Self::new(DomainKind::RightIsosceles, m, n, 0.0)
    }

    /// Value at `(a, b)`, read as `(s, t)` or as `(x, y)` for the
    /// right-isosceles triangle. The torus gives the real part of its mode.
    pub fn value(&self, a: f64, b: f64) -> f64 {
        let Mode { m, n } = self.mode;
        match self.domain {
            DomainKind::Torus => eval_torus_mode(m, n, a, b).re,
            DomainKind::Equilateral => {
                let (c, s) = cs_values(m, n, a, b);
                self.theta.cos() * c + self.theta.sin() * s
            }
            DomainKind::Hemiequilateral => eval_c(m, n, a, b),
            DomainKind::RightIsosceles => eval_isosceles(m, n, a, b),
        }
    }
}

pub fn eval_torus_mode(m: i64, n: i64, s: f64, t: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (m as f64 * s + n as f64 * t))
}

fn cs_values(m: i64, n: i64, s: f64, t: f64) -> (f64, f64) {
    let mut c = 0.0;
    let mut si = 0.0;
    for w in geometry::weyl_images(m, n, s, t) {
        let (sn, cs) = (TAU * w.phase).sin_cos();
        c += w.sign as f64 * cs;
        si += w.sign as f64 * sn;
    }
    (c, si)
}

pub fn eval_c(m: i64, n: i64, s: f64, t: f64) -> f64 {
    cs_values(m, n, s, t).0
}

pub fn eval_s(m: i64, n: i64, s: f64, t: f64) -> f64 {
    cs_values(m, n, s, t).1
}

/// Coefficients `(a, b)` of each phase `a s + b t`, in table order.
fn phase_coefficients(m: i64, n: i64) -> [(f64, f64); 6] {
    let (m, n) = (m as f64, n as f64);
    let k = m + n;
    [(m, n), (-m, k), (k, -n), (-n, -m), (n, -k), (-k, m)]
}

/// `C` and `S` with their analytic gradients.
pub fn eval_cs_full(m: i64, n: i64, s: f64, t: f64) -> (EvalResult, EvalResult) {
    let mut c = EvalResult { value: 0.0, grad_s: 0.0, grad_t: 0.0 };
    let mut si = c;
    let imgs = geometry::weyl_images(m, n, s, t);
    for (w, (a, b)) in imgs.iter().zip(phase_coefficients(m, n)) {
        let sign = w.sign as f64;
        let (sn, cs) = (TAU * w.phase).sin_cos();
        c.value += sign * cs;
        c.grad_s -= sign * TAU * a * sn;
        c.grad_t -= sign * TAU * b * sn;
        si.value += sign * sn;
        si.grad_s += sign * TAU * a * cs;
        si.grad_t += sign * TAU * b * cs;
    }
    (c, si)
}

/// Second derivatives `[∂ss, ∂st, ∂tt]` of `C` and of `S`.
pub fn eval_cs_second(m: i64, n: i64, s: f64, t: f64) -> ([f64; 3], [f64; 3]) {
    let mut c = [0.0; 3];
    let mut si = [0.0; 3];
    let imgs = geometry::weyl_images(m, n, s, t);
    for (w, (a, b)) in imgs.iter().zip(phase_coefficients(m, n)) {
        let sign = w.sign as f64;
        let (sn, cs) = (TAU * w.phase).sin_cos();
        let k = TAU * TAU;
        for (slot, q) in [a * a, a * b, b * b].into_iter().enumerate() {
            c[slot] -= sign * k * q * cs;
            si[slot] -= sign * k * q * sn;
        }
    }
    (c, si)
}

/// `Ψ^θ` and its gradient in alcove coordinates.
pub fn eval_psi(h: &EigenfunctionHandle, s: f64, t: f64) -> Result<EvalResult> {
    let Mode { m, n } = h.mode;
    let (c, si) = eval_cs_full(m, n, s, t);
    match h.domain {
        DomainKind::Equilateral => {
            let (sn, cs) = h.theta.sin_cos();
            Ok(EvalResult {
                value: cs * c.value + sn * si.value,
                grad_s: cs * c.grad_s + sn * si.grad_s,
                grad_t: cs * c.grad_t + sn * si.grad_t,
            })
        }
        DomainKind::Hemiequilateral => Ok(c),
        d => Err(CourantError::Unsupported { operation: "eval_psi", domain: d }),
    }
}

pub fn eval_isosceles(m: i64, n: i64, x: f64, y: f64) -> f64 {
    let (m, n) = (m as f64, n as f64);
    (m * x).sin() * (n * y).sin() - (n * x).sin() * (m * y).sin()
}

/// `α_{m,n} = 2π(2m+n)/3`, the phase shift carried by σ2, σ3 and the rotations.
pub fn alpha(mode: Mode) -> f64 {
    TAU * (2 * mode.m + mode.n) as f64 / 3.0
}

pub fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// `(θ', sign)` with `Ψ^θ ∘ g = sign · Ψ^{θ'}` for the symmetry `g`.
pub fn pullback_theta(sym: Symmetry, mode: Mode, theta: f64) -> (f64, i32) {
    let a = alpha(mode);
    let t = match sym {
        Symmetry::Sigma1 => PI - theta,
        Symmetry::Sigma2 => PI + a - theta,
        Symmetry::Sigma3 => PI - a - theta,
        Symmetry::RotPlus => theta - a,
        Symmetry::RotMinus => theta + a,
    };
    (reduce_angle(t), 1)
}

/// Angles `[0, θmax]` whose eigenfunctions represent every nodal pattern of
/// the two-dimensional eigenspace up to symmetry and sign.
pub fn fundamental_theta_range(mode: Mode) -> (f64, f64) {
    if (2 * mode.m + mode.n).rem_euclid(3) == 0 {
        (0.0, PI / 2.0)
    } else {
        (0.0, PI / 6.0)
    }
}

/// Log-log slope of `|Ψ|` along rays from `p` into the domain, over radii
/// `[1e-3, 1e-2]`; the minimum over ray directions estimates the vanishing order.
pub fn vanishing_slope(h: &EigenfunctionHandle, p: AlcovePoint) -> Option<f64> {
    const RAYS: usize = 72;
    const LADDER: usize = 8;
    let radii: Vec<f64> = (0..LADDER)
        .map(|i| 1e-3 * 10f64.powf(i as f64 / (LADDER - 1) as f64))
        .collect();
    let mut best: Option<f64> = None;
    for k in 0..RAYS {
        let ang = TAU * (k as f64 + 0.5) / RAYS as f64;
        let dir = to_alcove(CartesianPoint::new(ang.cos(), ang.sin()));
        let point = |r: f64| (p.s + r * dir.s, p.t + r * dir.t);
        let inside = |r: f64| {
            let (a, b) = point(r);
            h.domain == DomainKind::Torus || geometry::in_domain_strict(h.domain, a, b)
        };
        if !inside(radii[0]) || !inside(radii[LADDER - 1]) {
            continue;
        }
        let mut xs = Vec::with_capacity(LADDER);
        let mut ys = Vec::with_capacity(LADDER);
        for &r in &radii {
            let (a, b) = point(r);
            let v = h.value(a, b).abs();
            if v > 0.0 {
                xs.push(r.ln());
                ys.push(v.ln());
            }
        }
        if xs.len() < LADDER {
            continue;
        }
        let slope = least_squares_slope(&xs, &ys);
        best = Some(best.map_or(slope, |b: f64| b.min(slope)));
    }
    best
}

pub fn vanishing_order(h: &EigenfunctionHandle, p: AlcovePoint) -> Option<u32> {
    vanishing_slope(h, p).map(|s| s.round().max(0.0) as u32)
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}
