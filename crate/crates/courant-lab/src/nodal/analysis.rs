//! Fixed points, barrier-line restrictions, critical zeros and the Wronskians
//! of the two double eigenspaces spanned by `(C, S)` for the pairs (1,3) and (2,3).
//!
//! Edges are parametrized as
//! OA: `u ↦ (u, u/2)`, OB: `u ↦ (u/2, u)` for `u ∈ [0, 2/3]`,
//! BA: `u ↦ (u/2, 1 − u/2)` for `u ∈ [2/3, 4/3]`;
//! the median from O as `u ↦ (u/2, u/2)` for `u ∈ [0, 1]`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eigen::{self, EigenfunctionHandle};
use crate::error::{invalid, CourantError, Result};
use crate::geometry::{apply_symmetry, AlcovePoint, Symmetry, CENTROID};
use crate::roots::{self, find_roots, Polynomial, RootOptions};
use crate::spectrum::Mode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    P13,
    P23,
}

fn family(pair: Mode) -> Result<Family> {
    match (pair.m, pair.n) {
        (1, 3) => Ok(Family::P13),
        (2, 3) => Ok(Family::P23),
        (m, n) => Err(invalid(format!("pair ({m},{n}) has no closed-form edge analysis; use (1,3) or (2,3)"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FixedPointLabel {
    #[serde(rename = "F_C")]
    Centroid,
    #[serde(rename = "F_O")]
    O,
    #[serde(rename = "F_A")]
    A,
    #[serde(rename = "F_B")]
    B,
    #[serde(rename = "F_{1,O}")]
    O1,
    #[serde(rename = "F_{2,O}")]
    O2,
    #[serde(rename = "F_{1,A}")]
    A1,
    #[serde(rename = "F_{2,A}")]
    A2,
    #[serde(rename = "F_{1,B}")]
    B1,
    #[serde(rename = "F_{2,B}")]
    B2,
}

impl fmt::Display for FixedPointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FixedPointLabel::Centroid => "F_C",
            FixedPointLabel::O => "F_O",
            FixedPointLabel::A => "F_A",
            FixedPointLabel::B => "F_B",
            FixedPointLabel::O1 => "F_{1,O}",
            FixedPointLabel::O2 => "F_{2,O}",
            FixedPointLabel::A1 => "F_{1,A}",
            FixedPointLabel::A2 => "F_{2,A}",
            FixedPointLabel::B1 => "F_{1,B}",
            FixedPointLabel::B2 => "F_{2,B}",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub location: AlcovePoint,
    pub label: FixedPointLabel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Locus {
    OA,
    OB,
    BA,
    Median,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Locus::OA => "OA",
            Locus::OB => "OB",
            Locus::BA => "BA",
            Locus::Median => "median",
        };
        f.write_str(s)
    }
}

impl Locus {
    pub fn point(self, u: f64) -> AlcovePoint {
        match self {
            Locus::OA => AlcovePoint::new(u, u / 2.0),
            Locus::OB => AlcovePoint::new(u / 2.0, u),
            Locus::BA => AlcovePoint::new(u / 2.0, 1.0 - u / 2.0),
            Locus::Median => AlcovePoint::new(u / 2.0, u / 2.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalZero {
    pub location: AlcovePoint,
    pub edge_or_median: Locus,
    pub parameter_u: f64,
    pub order: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    C,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolyKind {
    #[serde(rename = "P_C")]
    PC,
    #[serde(rename = "P_S")]
    PS,
    #[serde(rename = "P_W")]
    PW,
}

/// The polynomials in `x = cos(πu)` (or `cos(3πu)` for the (2,3) Wronskian)
/// that carry the edge critical zeros. For (1,3) the `P_W` slot holds the
/// cubic factor of the Wronskian.
pub fn polynomial(pair: Mode, which: PolyKind) -> Result<Polynomial> {
    let c = match (family(pair)?, which) {
        (Family::P13, PolyKind::PC) => vec![-1.0, 4.0, 4.0],
        (Family::P13, PolyKind::PS) => vec![-1.0, 1.0, -1.0, 0.0, 4.0],
        (Family::P13, PolyKind::PW) => vec![4.0, -9.0, 0.0, 12.0],
        (Family::P23, PolyKind::PC) => vec![1.0, -4.0, 2.0, 8.0],
        (Family::P23, PolyKind::PS) => vec![-0.25, 4.0, -4.0, -10.0, 6.0, 8.0],
        (Family::P23, PolyKind::PW) => vec![11.0, -15.0, -15.0, 25.0, 0.0, -6.0],
    };
    Ok(Polynomial::new(c))
}

pub fn polynomial_roots_unit_interval(pair: Mode, which: PolyKind) -> Result<Vec<f64>> {
    Ok(polynomial(pair, which)?.roots_in_unit_interval())
}

/// Value and derivative of a scalar function of `u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub deriv: f64,
}

/// `(FC, FS)` with derivatives: `∂s C(u, u/2) = 2π FC(u)`, same for `S`.
pub fn edge_fc_fs(pair: Mode, u: f64) -> Result<(Jet, Jet)> {
    let (a, b, c, ka, kb, kc) = match family(pair)? {
        Family::P13 => (-1.0, 3.0, -4.0, 7.0, 5.0, 2.0),
        Family::P23 => (-2.0, 3.0, -5.0, 8.0, 7.0, 1.0),
    };
    let sin = |k: f64| (k * PI * u).sin();
    let cos = |k: f64| (k * PI * u).cos();
    let fc = Jet {
        value: a * sin(ka) + b * sin(kb) + c * sin(kc),
        deriv: PI * (a * ka * cos(ka) + b * kb * cos(kb) + c * kc * cos(kc)),
    };
    let fs = Jet {
        value: a * cos(ka) - b * cos(kb) - c * cos(kc),
        deriv: PI * (-a * ka * sin(ka) + b * kb * sin(kb) + c * kc * sin(kc)),
    };
    Ok((fc, fs))
}

/// `(GC, GS)` of the (1,3) family: `FC` and `FS` with the common factor
/// `−4(c−1)(2c+1)²`, `c = cos πu`, removed. Only the vertices are lost.
pub fn edge_gc_gs_13(u: f64) -> (Jet, Jet) {
    let (s, c) = (PI * u).sin_cos();
    let q = 4.0 * c * c + 4.0 * c - 1.0;
    let dq = 8.0 * c + 4.0;
    let gc = Jet {
        value: s * (c - 1.0) * q,
        deriv: PI * (c * (c - 1.0) * q - s * s * (q + (c - 1.0) * dq)),
    };
    let gs = Jet {
        value: 4.0 * c.powi(4) - c * c + c - 1.0,
        deriv: -PI * s * (16.0 * c.powi(3) - 2.0 * c + 1.0),
    };
    (gc, gs)
}

/// The pair of functions whose combinations locate edge critical zeros:
/// `(GC, GS)` for (1,3), `(FC, FS)` for (2,3).
fn edge_basis(fam: Family, u: f64) -> (Jet, Jet) {
    match fam {
        Family::P13 => edge_gc_gs_13(u),
        Family::P23 => edge_fc_fs(Mode::new(2, 3), u).expect("pair (2,3)"),
    }
}

/// `cos θ X(u) ± sin θ Y(u)` where `(X, Y)` is the edge basis of the pair;
/// `H±` for (1,3), `K±` for (2,3).
pub fn edge_combination(pair: Mode, theta: f64, plus: bool, u: f64) -> Result<Jet> {
    let fam = family(pair)?;
    Ok(combine(fam, theta, plus, u))
}

fn combine(fam: Family, theta: f64, plus: bool, u: f64) -> Jet {
    let (x, y) = edge_basis(fam, u);
    let (sn, cs) = theta.sin_cos();
    let sg = if plus { 1.0 } else { -1.0 };
    Jet {
        value: cs * x.value + sg * sn * y.value,
        deriv: cs * x.deriv + sg * sn * y.deriv,
    }
}

/// Direct Wronskian `X Y' − Y X'` of the edge basis.
pub fn wronskian(pair: Mode, u: f64) -> Result<f64> {
    let (x, y) = edge_basis(family(pair)?, u);
    Ok(x.value * y.deriv - y.value * x.deriv)
}

/// The factorized Wronskian:
/// (1,3): `π(1 − c)(2c + 1)²(12c³ − 9c + 4)`, `c = cos πu`;
/// (2,3): `16π P_W(cos 3πu)`.
pub fn wronskian_factorized(pair: Mode, u: f64) -> Result<f64> {
    match family(pair)? {
        Family::P13 => {
            let c = (PI * u).cos();
            let cubic = polynomial(pair, PolyKind::PW)?.eval(c);
            Ok(PI * (1.0 - c) * (2.0 * c + 1.0).powi(2) * cubic)
        }
        Family::P23 => {
            let p = polynomial(pair, PolyKind::PW)?;
            Ok(2.0 * PI * 8.0 * p.eval((3.0 * PI * u).cos()))
        }
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta <= PI / 6.0 + 1e-12 {
        Ok(())
    } else {
        Err(invalid(format!("theta must lie in (0, pi/6], got {theta}")))
    }
}

/// Critical zeros of `Ψ^θ` on the three open edges.
pub fn edge_critical_zeros(pair: Mode, theta: f64) -> Result<Vec<CriticalZero>> {
    let fam = family(pair)?;
    check_theta(theta)?;
    let opts = RootOptions::default();
    let mut out = Vec::new();
    let edges = [
        (Locus::OA, true, 0.0, 2.0 / 3.0),
        (Locus::OB, false, 0.0, 2.0 / 3.0),
        (Locus::BA, false, 2.0 / 3.0, 4.0 / 3.0),
    ];
    for (locus, plus, lo, hi) in edges {
        let f = |u: f64| combine(fam, theta, plus, u).value;
        let df = |u: f64| combine(fam, theta, plus, u).deriv;
        for u in find_roots(f, df, lo, hi, &opts) {
            let (x, y) = edge_basis(fam, u);
            let size = x.deriv.abs() + y.deriv.abs() + 1e-12;
            let order = if df(u).abs() <= 1e-6 * size { 3 } else { 2 };
            out.push(CriticalZero {
                location: locus.point(u),
                edge_or_median: locus,
                parameter_u: u,
                order,
            });
        }
    }
    Ok(out)
}

/// Order of vanishing of `C` or `S` at `p`, from the log-log slope along rays.
fn measured_order(pair: Mode, which: Basis, p: AlcovePoint) -> u32 {
    let theta = match which {
        Basis::C => 0.0,
        Basis::S => PI / 2.0,
    };
    let h = EigenfunctionHandle::equilateral(pair.m, pair.n, theta);
    eigen::vanishing_order(&h, p).unwrap_or(2).max(2)
}

/// Critical zeros of `C` or `S` on the closed median from O to `M_O`.
pub fn median_critical_zeros(pair: Mode, which: Basis) -> Result<Vec<CriticalZero>> {
    family(pair)?;
    let (m, n) = (pair.m, pair.n);
    let eval = |u: f64| {
        let (c, s) = eigen::eval_cs_full(m, n, u / 2.0, u / 2.0);
        match which {
            Basis::C => c,
            Basis::S => s,
        }
    };
    let grad_norm = |u: f64| {
        let e = eval(u);
        e.grad_s.hypot(e.grad_t)
    };
    let opts = RootOptions::default();
    let mut params = match which {
        // C vanishes on the median, so its gradient is normal there and
        // `∂s C` alone decides criticality.
        Basis::C => {
            let g = |u: f64| eval(u).grad_s;
            let dg = |u: f64| {
                let (c2, _) = eigen::eval_cs_second(m, n, u / 2.0, u / 2.0);
                0.5 * (c2[0] + c2[1])
            };
            find_roots(g, dg, 0.0, 1.0, &opts)
        }
        Basis::S => {
            let f = |u: f64| eval(u).value;
            // d/du of S(u/2, u/2)
            let df = |u: f64| {
                let e = eval(u);
                0.5 * (e.grad_s + e.grad_t)
            };
            find_roots(f, df, 0.0, 1.0, &opts)
                .into_iter()
                .filter(|&u| grad_norm(u) < 1e-7)
                .collect()
        }
    };
    for end in [0.0, 1.0] {
        if eval(end).value.abs() < 1e-9 && grad_norm(end) < 1e-9 {
            params.push(end);
        }
    }
    params.sort_by(f64::total_cmp);
    Ok(params
        .into_iter()
        .map(|u| {
            let location = Locus::Median.point(u);
            CriticalZero {
                location,
                edge_or_median: Locus::Median,
                parameter_u: u,
                order: measured_order(pair, which, location),
            }
        })
        .collect())
}

/// Common zeros of `C` and `S` on the open median, plus their images under
/// the two rotations.
pub fn median_fixed_points(pair: Mode) -> Result<Vec<FixedPoint>> {
    let fam = family(pair)?;
    let (m, n) = (pair.m, pair.n);
    // C vanishes identically on the median; the fixed points there are the zeros of S(v, v).
    let f = |v: f64| eigen::eval_s(m, n, v, v);
    let df = |v: f64| {
        let (_, s) = eigen::eval_cs_full(m, n, v, v);
        s.grad_s + s.grad_t
    };
    let vs = find_roots(f, df, 0.0, 0.5, &RootOptions::default());
    let (centroid, others): (Vec<f64>, Vec<f64>) =
        vs.into_iter().partition(|v| (v - CENTROID.s).abs() < 1e-9);
    if centroid.is_empty() {
        return Err(CourantError::NotConverged("centroid fixed point"));
    }
    let labels: &[(FixedPointLabel, FixedPointLabel, FixedPointLabel)] = match fam {
        Family::P13 => &[(FixedPointLabel::O, FixedPointLabel::A, FixedPointLabel::B)],
        Family::P23 => &[
            (FixedPointLabel::O1, FixedPointLabel::A1, FixedPointLabel::B1),
            (FixedPointLabel::O2, FixedPointLabel::A2, FixedPointLabel::B2),
        ],
    };
    if others.len() != labels.len() {
        return Err(CourantError::NotConverged("median fixed points"));
    }
    let mut out = vec![FixedPoint {
        location: AlcovePoint::new(centroid[0], centroid[0]),
        label: FixedPointLabel::Centroid,
    }];
    for (&v, &(lo, la, lb)) in others.iter().zip(labels) {
        let p = AlcovePoint::new(v, v);
        out.push(FixedPoint { location: p, label: lo });
        out.push(FixedPoint { location: apply_symmetry(Symmetry::RotPlus, p), label: la });
        out.push(FixedPoint { location: apply_symmetry(Symmetry::RotMinus, p), label: lb });
    }
    Ok(out)
}

/// Zeros of `u ↦ Ψ^θ(u, a − u)` on the open segment `u ∈ (a/3, 2a/3)` of
/// the line `s + t = a` inside the triangle.
pub fn edge_restriction_roots(pair: Mode, a: f64, theta: f64) -> Result<Vec<f64>> {
    if !(a > 0.0 && a < 1.0) {
        return Err(invalid(format!("line offset a must lie in (0, 1), got {a}")));
    }
    if pair.m < 1 || pair.n < 1 {
        return Err(invalid("pair must have m, n >= 1"));
    }
    let h = EigenfunctionHandle::equilateral(pair.m, pair.n, eigen::reduce_angle(theta));
    let f = |u: f64| h.value(u, a - u);
    let df = |u: f64| {
        let e = eigen::eval_psi(&h, u, a - u).expect("equilateral handle");
        e.grad_s - e.grad_t
    };
    Ok(find_roots(f, df, a / 3.0, 2.0 * a / 3.0, &RootOptions::default()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bifurcation {
    pub u_b: f64,
    pub theta_c: f64,
}

/// The double zero `u_b` of `K₊^θ` on OA and the angle `θ_c` at which it
/// occurs, for the (2,3) family.
pub fn bifurcation_angle() -> Result<Bifurcation> {
    let pair = Mode::new(2, 3);
    let pw = polynomial(pair, PolyKind::PW)?;
    let dpw = pw.derivative();
    let g = |u: f64| pw.eval((3.0 * PI * u).cos());
    let dg = |u: f64| -3.0 * PI * (3.0 * PI * u).sin() * dpw.eval((3.0 * PI * u).cos());
    let (lo, hi) = (1.0 / 3.0, 0.5);
    if g(lo).signum() == g(hi).signum() {
        return Err(CourantError::NoBracket("P_W(cos 3πu) on (1/3, 1/2)"));
    }
    let mut u_b = roots::bisect(&g, lo, hi, 1e-15);
    let step = g(u_b) / dg(u_b);
    if (u_b - step) > lo && (u_b - step) < hi && g(u_b - step).abs() <= g(u_b).abs() {
        u_b -= step;
    }
    let (fc, fs) = edge_fc_fs(pair, u_b)?;
    let theta_c = (-fc.value).atan2(fs.value).rem_euclid(PI);
    let k = combine(Family::P23, theta_c, true, u_b);
    let size = fc.deriv.abs() + fs.deriv.abs();
    if !(theta_c > 0.0 && theta_c < PI / 6.0) || k.value.abs() >= 1e-12 || k.deriv.abs() >= 1e-9 * size.max(1.0) {
        return Err(CourantError::NotConverged("bifurcation angle"));
    }
    Ok(Bifurcation { u_b, theta_c })
}

/// `arccos(x)/π`, the parameter whose `cos πu` equals `x`.
pub fn arccos_over_pi(x: f64) -> f64 {
    x.acos() / PI
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p13() -> Mode {
        Mode::new(1, 3)
    }

    fn p23() -> Mode {
        Mode::new(2, 3)
    }

    #[test]
    fn p13_polynomial_roots() {
        let pc = polynomial_roots_unit_interval(p13(), PolyKind::PC).unwrap();
        assert_eq!(pc.len(), 1);
        assert!((pc[0] - (2f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
        let ps = polynomial_roots_unit_interval(p13(), PolyKind::PS).unwrap();
        assert_eq!(ps.len(), 2);
        assert!((ps[0] + 0.9094691258).abs() < 1e-9);
        assert!((ps[1] - 0.6638481772).abs() < 1e-9);
        assert!(polynomial_roots_unit_interval(p13(), PolyKind::PW).unwrap().is_empty());
    }

    #[test]
    fn p23_polynomial_roots() {
        let pc = polynomial_roots_unit_interval(p23(), PolyKind::PC).unwrap();
        assert_eq!(pc.len(), 1);
        assert!((pc[0] + 0.9311441818).abs() < 1e-9);
        let mut ps = polynomial_roots_unit_interval(p23(), PolyKind::PS).unwrap();
        ps.reverse();
        for (g, w) in ps.iter().zip([0.7261887036, 0.5658979255, 0.06784981490]) {
            assert!((g - w).abs() < 1e-9);
        }
        let pw = polynomial_roots_unit_interval(p23(), PolyKind::PW).unwrap();
        let xi = (9.0 - 15f64.sqrt()) / 6.0;
        assert_eq!(pw.len(), 2);
        assert!((pw[0] + xi).abs() < 1e-12);
        assert_eq!(pw[1], 1.0);
    }

    #[test]
    fn other_pairs_rejected() {
        assert!(median_fixed_points(Mode::new(1, 2)).is_err());
        assert!(edge_critical_zeros(Mode::new(2, 2), 0.1).is_err());
        assert!(edge_critical_zeros(p13(), 0.0).is_err());
    }

    #[test]
    fn bifurcation_values() {
        let b = bifurcation_angle().unwrap();
        assert!((b.u_b - 0.3912873205).abs() < 1e-8);
        assert!((b.theta_c - 0.3005211736).abs() < 1e-8);
    }

    #[test]
    fn fixed_points_13() {
        let fp = median_fixed_points(p13()).unwrap();
        assert_eq!(fp.len(), 4);
        let fo = fp.iter().find(|p| p.label == FixedPointLabel::O).unwrap();
        assert!((fo.location.s - 0.25).abs() < 1e-12 && (fo.location.t - 0.25).abs() < 1e-12);
    }
}
