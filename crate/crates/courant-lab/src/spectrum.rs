//! Closed-form Dirichlet spectra, multiplicities and counting functions.
//!
//! Eigenvalues are handled as exact integers in normalized units:
//! `m² + mn + n²` for the torus, equilateral and hemiequilateral domains
//! (physical value `16π²/9` times that), `m² + n²` for the right-isosceles
//! triangle of side π (scale 1).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geometry::{DomainKind, SQRT3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mode {
    pub m: i64,
    pub n: i64,
}

impl Mode {
    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub normalized: i64,
    pub multiplicity: usize,
    pub min_index: usize,
    pub max_index: usize,
    pub representative_modes: Vec<Mode>,
}

const MAX_COUNT: usize = 1_000_000;

/// Factor turning a normalized eigenvalue into a physical one.
pub fn scale(d: DomainKind) -> f64 {
    match d {
        DomainKind::RightIsosceles => 1.0,
        _ => 16.0 * PI * PI / 9.0,
    }
}

pub fn normalized_value(d: DomainKind, mode: Mode) -> i64 {
    let Mode { m, n } = mode;
    match d {
        DomainKind::RightIsosceles => m * m + n * n,
        _ => m * m + m * n + n * n,
    }
}

pub fn is_admissible(d: DomainKind, mode: Mode) -> bool {
    let Mode { m, n } = mode;
    match d {
        DomainKind::Torus => true,
        DomainKind::Equilateral => m >= 1 && n >= 1,
        DomainKind::RightIsosceles | DomainKind::Hemiequilateral => m > n && n >= 1,
    }
}

/// Half-width `B` of a box `|m|, |n| ≤ B` holding every admissible mode with
/// normalized value at most `limit`. For the A2 form,
/// `m² + mn + n² ≥ (3/4) max(m², n²)`.
pub fn enumeration_box(d: DomainKind, limit: i64) -> i64 {
    let limit = limit.max(0) as f64;
    let b = match d {
        DomainKind::RightIsosceles => limit.sqrt(),
        _ => 2.0 * (limit / 3.0).sqrt(),
    };
    b.ceil() as i64
}

/// Admissible modes in the box of half-width `half_width` whose value is at
/// most `limit`, sorted by `(value, m, n)`.
pub fn modes_in_box(d: DomainKind, half_width: i64, limit: i64) -> Vec<(i64, Mode)> {
    let lo = if d == DomainKind::Torus { -half_width } else { 1 };
    let mut out = Vec::new();
    for m in lo..=half_width {
        for n in lo..=half_width {
            let mode = Mode::new(m, n);
            if !is_admissible(d, mode) {
                continue;
            }
            let v = normalized_value(d, mode);
            if v <= limit {
                out.push((v, mode));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn modes_up_to(d: DomainKind, limit: i64) -> Vec<(i64, Mode)> {
    modes_in_box(d, enumeration_box(d, limit), limit)
}

/// Leading Weyl density: eigenvalues per unit of normalized value.
fn weyl_density(d: DomainKind) -> f64 {
    match d {
        DomainKind::Torus => 2.0 * PI / SQRT3,
        DomainKind::Equilateral => SQRT3 * PI / 9.0,
        DomainKind::Hemiequilateral => SQRT3 * PI / 18.0,
        DomainKind::RightIsosceles => PI / 8.0,
    }
}

fn group(modes: &[(i64, Mode)]) -> Vec<SpectrumEntry> {
    let mut entries: Vec<SpectrumEntry> = Vec::new();
    let mut index = 1;
    for &(v, mode) in modes {
        match entries.last_mut() {
            Some(e) if e.normalized == v => {
                e.multiplicity += 1;
                e.max_index += 1;
                e.representative_modes.push(mode);
            }
            _ => entries.push(SpectrumEntry {
                normalized: v,
                multiplicity: 1,
                min_index: index,
                max_index: index,
                representative_modes: vec![mode],
            }),
        }
        index += 1;
    }
    entries
}

/// Distinct eigenvalues covering the first `count` eigenvalues counted with
/// multiplicity. The last entry is complete even if it runs past `count`.
pub fn enumerate_spectrum(d: DomainKind, count: usize) -> Result<Vec<SpectrumEntry>> {
    if count == 0 {
        return Err(invalid("count must be positive"));
    }
    if count > MAX_COUNT {
        return Err(invalid(format!("count must be at most {MAX_COUNT}")));
    }
    let mut limit = ((count as f64) / weyl_density(d)).ceil().max(4.0);
    loop {
        let modes = modes_up_to(d, limit as i64);
        if modes.len() >= count {
            let mut entries = group(&modes);
            entries.retain(|e| e.min_index <= count);
            return Ok(entries);
        }
        limit *= 1.5;
    }
}

pub fn multiplicity(d: DomainKind, normalized: i64) -> usize {
    if normalized < 0 {
        return 0;
    }
    modes_up_to(d, normalized)
        .iter()
        .filter(|(v, _)| *v == normalized)
        .count()
}

/// Normalized value of a physical `lambda`, snapped to an integer when within
/// 1e-9 so that `λ = scale · k` is treated as exactly `k`.
pub fn normalize(d: DomainKind, lambda: f64) -> f64 {
    let x = lambda / scale(d);
    let r = x.round();
    if (x - r).abs() <= 1e-9 {
        r
    } else {
        x
    }
}

/// `N(λ)`: number of eigenvalues strictly below the physical value `lambda`.
pub fn counting_function(d: DomainKind, lambda: f64) -> usize {
    let x = normalize(d, lambda);
    if x <= 0.0 {
        return 0;
    }
    let limit = x.ceil() as i64;
    modes_up_to(d, limit)
        .iter()
        .filter(|(v, _)| (*v as f64) < x)
        .count()
}

/// Closed-form lower bound for `N(λ)`, physical `lambda > 0`.
pub fn counting_lower_bound(d: DomainKind, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(invalid("counting lower bound needs a finite lambda > 0"));
    }
    let r = lambda.sqrt();
    Ok(match d {
        DomainKind::Torus => 1.5 * SQRT3 * lambda / (4.0 * PI) - 4.5 / PI * r + 1.0,
        DomainKind::Equilateral => SQRT3 / 4.0 * lambda / (4.0 * PI) - 1.5 / PI * r + 1.0,
        DomainKind::RightIsosceles => PI * lambda / 8.0 - (4.0 + 2f64.sqrt()) * r / 4.0 + 0.5,
        DomainKind::Hemiequilateral => {
            SQRT3 / (32.0 * PI) * lambda - (6.0 + SQRT3) / (8.0 * PI) * r + 0.5
        }
    })
}
