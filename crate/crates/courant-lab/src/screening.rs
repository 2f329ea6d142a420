//! Pleijel-style screening: a counting lower bound plus Faber-Krahn leaves a
//! finite list of indices that may be Courant-sharp.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::geometry::{DomainKind, SQRT3};
use crate::spectrum::{self, SpectrumEntry};

/// First positive zero of the Bessel function J0.
pub const J01: f64 = 2.404_825_557_695_77;

/// Largest index searched when scanning for the cutoff.
const SCAN_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScreeningRow {
    pub normalized: i64,
    pub min_index: usize,
    pub max_index: usize,
    pub multiplicity: usize,
    /// `normalized / min_index`, absent where the domain's rule exempts the row.
    pub ratio: Option<f64>,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScreeningSummary {
    pub domain: DomainKind,
    pub threshold: f64,
    pub index_cutoff: usize,
    pub candidates: Vec<usize>,
}

/// Faber-Krahn slope of `λ_n / n` for a Courant-sharp `λ_n`, physical units.
pub fn faber_krahn_slope(d: DomainKind) -> f64 {
    let j2 = J01 * J01;
    match d {
        DomainKind::Torus => 2.0 * PI * j2 / (3.0 * SQRT3),
        DomainKind::Equilateral => 4.0 * PI * j2 / SQRT3,
        DomainKind::RightIsosceles => 2.0 / PI * j2,
        DomainKind::Hemiequilateral => 8.0 * PI / SQRT3 * j2,
    }
}

/// The ratio threshold in table units (normalized eigenvalue over index).
pub fn faber_krahn_threshold(d: DomainKind) -> f64 {
    faber_krahn_slope(d) / spectrum::scale(d)
}

/// Upper bound on `λ_n` forced by Courant-sharpness and the counting bound.
pub fn courant_upper_bound(d: DomainKind, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(invalid("courant upper bound needs n >= 2"));
    }
    let n = n as f64;
    let r2 = 2f64.sqrt();
    Ok(match d {
        DomainKind::Torus => {
            let q = 1.0 + (1.0 + 2.0 * PI * (n - 2.0) / (9.0 * SQRT3)).sqrt();
            12.0 * q * q
        }
        DomainKind::Equilateral => {
            let q = 1.0 + (1.0 + PI * (n - 2.0) / (3.0 * SQRT3)).sqrt();
            48.0 * q * q
        }
        DomainKind::RightIsosceles => {
            let c = 4.0 + r2;
            let pre = c / PI;
            let q = 1.0 + (1.0 + 8.0 * PI * (n - 1.5) / (c * c)).sqrt();
            pre * pre * q * q
        }
        DomainKind::Hemiequilateral => {
            let a = SQRT3 / (32.0 * PI);
            let b = (6.0 + SQRT3) / (8.0 * PI);
            let r = (b + (b * b + 4.0 * a * (n - 1.5)).sqrt()) / (2.0 * a);
            r * r
        }
    })
}

/// Largest `n` whose Faber-Krahn lower line stays below the upper bound,
/// found by scanning upward from `n = 2`.
pub fn index_cutoff(d: DomainKind) -> usize {
    let slope = faber_krahn_slope(d);
    let mut last = 1;
    for n in 2..=SCAN_LIMIT {
        let upper = courant_upper_bound(d, n).expect("n >= 2");
        if slope * n as f64 <= upper {
            last = n;
        } else if n > 4 {
            break;
        }
    }
    last
}

/// The torus ratio test only applies from index 4 on.
fn ratio_applies(d: DomainKind, min_index: usize) -> bool {
    d != DomainKind::Torus || min_index >= 4
}

/// Attach ratios and pass flags to spectrum entries.
pub fn rows_for(d: DomainKind, entries: &[SpectrumEntry]) -> Vec<ScreeningRow> {
    let threshold = faber_krahn_threshold(d);
    entries
        .iter()
        .map(|e| {
            let ratio = ratio_applies(d, e.min_index).then(|| e.normalized as f64 / e.min_index as f64);
            ScreeningRow {
                normalized: e.normalized,
                min_index: e.min_index,
                max_index: e.max_index,
                multiplicity: e.multiplicity,
                ratio,
                passes: ratio.is_none_or(|r| r >= threshold),
            }
        })
        .collect()
}

/// Rows for every distinct eigenvalue whose least index is within the cutoff.
pub fn screening_table(d: DomainKind) -> Vec<ScreeningRow> {
    let cutoff = index_cutoff(d);
    let entries = spectrum::enumerate_spectrum(d, cutoff).expect("cutoff is positive");
    rows_for(d, &entries)
}

fn candidates_from(rows: &[ScreeningRow], cutoff: usize) -> Vec<usize> {
    let mut out: Vec<usize> = rows
        .iter()
        .filter(|r| r.passes && r.min_index <= cutoff)
        .map(|r| r.min_index)
        .collect();
    for k in [1, 2] {
        if !out.contains(&k) {
            out.push(k);
        }
    }
    out.sort_unstable();
    out
}

pub fn candidate_indices(d: DomainKind) -> Vec<usize> {
    candidates_from(&screening_table(d), index_cutoff(d))
}

/// Candidates under an arbitrary threshold; used to check monotonicity.
pub fn candidate_indices_with_threshold(d: DomainKind, threshold: f64) -> Vec<usize> {
    let cutoff = index_cutoff(d);
    let mut rows = screening_table(d);
    for r in &mut rows {
        r.passes = r.ratio.is_none_or(|x| x >= threshold);
    }
    candidates_from(&rows, cutoff)
}

pub fn summary(d: DomainKind) -> ScreeningSummary {
    ScreeningSummary {
        domain: d,
        threshold: faber_krahn_threshold(d),
        index_cutoff: index_cutoff(d),
        candidates: candidate_indices(d),
    }
}
