//! Lattice bases, alcove coordinates, the Weyl-group table and domain predicates.
//!
//! Points of the equilateral triangle are written `s α1∨ + t α2∨`. In these
//! coordinates the triangle has vertices `O = (0,0)`, `A = (2/3,1/3)` and
//! `B = (1/3,2/3)`; its edges are `t = s/2` (OA), `s = t/2` (OB) and
//! `s + t = 1` (BA).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, CourantError};

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Half-plane slack for the closed and strict membership tests.
pub const EDGE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlcovePoint {
    pub s: f64,
    pub t: f64,
}

impl CartesianPoint {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

impl AlcovePoint {
    pub const fn new(s: f64, t: f64) -> Self {
        Self { s, t }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeBasis {
    pub alpha1_check: CartesianPoint,
    pub alpha2_check: CartesianPoint,
    pub alpha3_check: CartesianPoint,
    pub omega1: CartesianPoint,
    pub omega2: CartesianPoint,
}

pub const BASIS: LatticeBasis = LatticeBasis {
    alpha1_check: CartesianPoint::new(1.5, -SQRT3 / 2.0),
    alpha2_check: CartesianPoint::new(0.0, SQRT3),
    alpha3_check: CartesianPoint::new(1.5, SQRT3 / 2.0),
    omega1: CartesianPoint::new(2.0 / 3.0, 0.0),
    omega2: CartesianPoint::new(1.0 / 3.0, 1.0 / SQRT3),
};

pub const VERTEX_O: AlcovePoint = AlcovePoint::new(0.0, 0.0);
pub const VERTEX_A: AlcovePoint = AlcovePoint::new(2.0 / 3.0, 1.0 / 3.0);
pub const VERTEX_B: AlcovePoint = AlcovePoint::new(1.0 / 3.0, 2.0 / 3.0);
pub const CENTROID: AlcovePoint = AlcovePoint::new(1.0 / 3.0, 1.0 / 3.0);
/// Midpoint of the edge BA, the far end of the median from O.
pub const MIDPOINT_O: AlcovePoint = AlcovePoint::new(0.5, 0.5);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DomainKind {
    Torus,
    Equilateral,
    RightIsosceles,
    Hemiequilateral,
}

impl DomainKind {
    pub const ALL: [DomainKind; 4] = [
        DomainKind::Torus,
        DomainKind::Equilateral,
        DomainKind::RightIsosceles,
        DomainKind::Hemiequilateral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DomainKind::Torus => "torus",
            DomainKind::Equilateral => "equilateral",
            DomainKind::RightIsosceles => "right-isosceles",
            DomainKind::Hemiequilateral => "hemiequilateral",
        }
    }

    /// Whether points of this domain are given in Cartesian `(x, y)` rather
    /// than alcove `(s, t)` coordinates.
    pub fn uses_cartesian(self) -> bool {
        self == DomainKind::RightIsosceles
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DomainKind {
    type Err = CourantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "torus" => Ok(DomainKind::Torus),
            "equilateral" => Ok(DomainKind::Equilateral),
            "right-isosceles" | "right_isosceles" | "isosceles" => Ok(DomainKind::RightIsosceles),
            "hemiequilateral" | "hemi" => Ok(DomainKind::Hemiequilateral),
            other => Err(invalid(format!("unknown domain `{other}`"))),
        }
    }
}

pub fn to_cartesian(p: AlcovePoint) -> CartesianPoint {
    let a = BASIS.alpha1_check;
    let b = BASIS.alpha2_check;
    CartesianPoint::new(p.s * a.x + p.t * b.x, p.s * a.y + p.t * b.y)
}

/// Inverse of [`to_cartesian`]: `s = ⟨q, ω1⟩`, `t = ⟨q, ω2⟩`.
pub fn to_alcove(q: CartesianPoint) -> AlcovePoint {
    let w1 = BASIS.omega1;
    let w2 = BASIS.omega2;
    AlcovePoint::new(q.x * w1.x + q.y * w1.y, q.x * w2.x + q.y * w2.y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylImage {
    pub sign: i32,
    pub phase: f64,
}

/// The six pairs `(det w, ⟨w(x), p⟩)` for `p = m ϖ1 + n ϖ2` and `x = (s,t)`.
pub fn weyl_images(m: i64, n: i64, s: f64, t: f64) -> [WeylImage; 6] {
    let (m, n) = (m as f64, n as f64);
    let k = m + n;
    [
        WeylImage { sign: 1, phase: m * s + n * t },
        WeylImage { sign: -1, phase: -m * s + k * t },
        WeylImage { sign: -1, phase: k * s - n * t },
        WeylImage { sign: -1, phase: -n * s - m * t },
        WeylImage { sign: 1, phase: n * s - k * t },
        WeylImage { sign: 1, phase: -k * s + m * t },
    ]
}

/// Signed distances (up to positive factors) to the three sides, all
/// positive inside. For the right-isosceles triangle `(a, b) = (x, y)`.
fn side_margins(d: DomainKind, a: f64, b: f64) -> [f64; 3] {
    match d {
        DomainKind::Torus => [1.0; 3],
        DomainKind::Equilateral => [b - a / 2.0, a - b / 2.0, 1.0 - a - b],
        DomainKind::Hemiequilateral => [b - a / 2.0, a - b, 1.0 - a - b],
        DomainKind::RightIsosceles => [b, a - b, std::f64::consts::PI - a],
    }
}

/// Closed-domain membership. The torus has no boundary, so every point is in it.
pub fn in_domain(d: DomainKind, a: f64, b: f64) -> bool {
    side_margins(d, a, b).iter().all(|&m| m >= -EDGE_TOL)
}

/// Open-domain membership, with the boundary excluded.
pub fn in_domain_strict(d: DomainKind, a: f64, b: f64) -> bool {
    side_margins(d, a, b).iter().all(|&m| m > EDGE_TOL)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symmetry {
    Sigma1,
    Sigma2,
    Sigma3,
    RotPlus,
    RotMinus,
}

impl Symmetry {
    pub const ALL: [Symmetry; 5] = [
        Symmetry::Sigma1,
        Symmetry::Sigma2,
        Symmetry::Sigma3,
        Symmetry::RotPlus,
        Symmetry::RotMinus,
    ];

    pub fn inverse(self) -> Symmetry {
        match self {
            Symmetry::RotPlus => Symmetry::RotMinus,
            Symmetry::RotMinus => Symmetry::RotPlus,
            reflection => reflection,
        }
    }
}

pub fn apply_symmetry(k: Symmetry, p: AlcovePoint) -> AlcovePoint {
    let AlcovePoint { s, t } = p;
    match k {
        Symmetry::Sigma1 => AlcovePoint::new(t, s),
        Symmetry::Sigma2 => AlcovePoint::new(-s + 2.0 / 3.0, t - s + 1.0 / 3.0),
        Symmetry::Sigma3 => AlcovePoint::new(s - t + 1.0 / 3.0, -t + 2.0 / 3.0),
        Symmetry::RotPlus => AlcovePoint::new(-t + 2.0 / 3.0, s - t + 1.0 / 3.0),
        Symmetry::RotMinus => AlcovePoint::new(t - s + 1.0 / 3.0, -s + 2.0 / 3.0),
    }
}
