//! Courant-sharp verdicts for the screening candidates.
//!
//! For each candidate index the eigenspace is searched for an eigenfunction
//! with as many nodal domains as the index. On the equilateral triangle each
//! pair `(m, n)`, `m < n`, spans `cos θ C + sin θ S` and `θ` is swept over its
//! fundamental range; `m = n` has the single function `S`. The other
//! triangles have one basis function per pair.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::{fundamental_theta_range, EigenfunctionHandle};
use crate::error::{CourantError, Result};
use crate::geometry::DomainKind;
use crate::nodal::analysis::bifurcation_angle;
use crate::nodal::count::{count_nodal_domains, NodalReport};
use crate::screening;
use crate::spectrum::{self, Mode};

pub const DEFAULT_RESOLUTION: usize = 256;

/// Unstable counts are retried at doubled resolution up to this multiple.
pub const MAX_REFINEMENT: usize = 4;

/// Uniform samples of `[0, θmax)`; `θmax` itself is added separately.
pub const THETA_SAMPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub index: usize,
    pub normalized: i64,
    pub modes: Vec<Mode>,
    /// Largest nodal count found in the eigenspace.
    pub max_domains: Option<usize>,
    pub stable: bool,
    pub sharp: bool,
}

fn canonical_pairs(d: DomainKind, modes: &[Mode]) -> Vec<Mode> {
    let mut out: Vec<Mode> = modes
        .iter()
        .map(|&Mode { m, n }| if d == DomainKind::Equilateral && m > n { Mode::new(n, m) } else { Mode::new(m, n) })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn thetas(mode: Mode) -> Vec<f64> {
    if mode.m == mode.n {
        return vec![PI / 2.0];
    }
    let (lo, hi) = fundamental_theta_range(mode);
    let mut out: Vec<f64> = (0..THETA_SAMPLES).map(|k| lo + (hi - lo) * k as f64 / THETA_SAMPLES as f64).collect();
    out.push(hi);
    if mode == Mode::new(2, 3) {
        if let Ok(b) = bifurcation_angle() {
            out.push(b.theta_c);
        }
    }
    out
}

fn handles(d: DomainKind, pairs: &[Mode]) -> Vec<EigenfunctionHandle> {
    pairs
        .iter()
        .flat_map(|&p| match d {
            DomainKind::Equilateral => thetas(p).into_iter().map(|th| EigenfunctionHandle::equilateral(p.m, p.n, th)).collect(),
            _ => vec![EigenfunctionHandle::new(d, p.m, p.n, 0.0)],
        })
        .collect()
}

fn settled_count(h: &EigenfunctionHandle, resolution: usize) -> Result<NodalReport> {
    let mut report = count_nodal_domains(h, resolution)?;
    while !report.stable && report.resolution < MAX_REFINEMENT * resolution {
        report = count_nodal_domains(h, 2 * report.resolution)?;
    }
    Ok(report)
}

/// Eigenfunctions of the first two eigenvalues of the torus: the constant,
/// and functions orthogonal to it, which change sign and so have exactly
/// two domains by Courant's bound.
fn torus_row(index: usize, normalized: i64, modes: Vec<Mode>, min_index: usize) -> Result<VerdictRow> {
    let max_domains = match min_index {
        1 => 1,
        2 => 2,
        _ => return Err(CourantError::Unsupported { operation: "torus verdict beyond the second eigenvalue", domain: DomainKind::Torus }),
    };
    Ok(VerdictRow { index, normalized, modes, max_domains: Some(max_domains), stable: true, sharp: index == min_index })
}

/// Verdicts for every screening candidate at the given grid resolution.
pub fn courant_sharp_verdict_at(d: DomainKind, resolution: usize) -> Result<Vec<VerdictRow>> {
    let candidates = screening::candidate_indices(d);
    let last = candidates.iter().copied().max().unwrap_or(1);
    let entries = spectrum::enumerate_spectrum(d, last)?;
    candidates
        .iter()
        .map(|&index| {
            let e = entries
                .iter()
                .find(|e| e.min_index <= index && index <= e.max_index)
                .expect("spectrum covers the candidates");
            let modes = canonical_pairs(d, &e.representative_modes);
            if d == DomainKind::Torus {
                return torus_row(index, e.normalized, modes, e.min_index);
            }
            let reports: Vec<_> = handles(d, &modes)
                .par_iter()
                .map(|h| settled_count(h, resolution))
                .collect::<Result<_>>()?;
            let max_domains = reports.iter().map(|r| r.domain_count).max();
            let stable = reports.iter().filter(|r| Some(r.domain_count) == max_domains).all(|r| r.stable);
            Ok(VerdictRow {
                index,
                normalized: e.normalized,
                modes,
                max_domains,
                stable,
                sharp: index == e.min_index && max_domains == Some(index),
            })
        })
        .collect()
}

pub fn courant_sharp_verdict(d: DomainKind) -> Result<Vec<VerdictRow>> {
    courant_sharp_verdict_at(d, DEFAULT_RESOLUTION)
}

/// Indices whose eigenvalue is Courant-sharp.
pub fn sharp_indices(d: DomainKind) -> Result<Vec<usize>> {
    Ok(courant_sharp_verdict(d)?.into_iter().filter(|r| r.sharp).map(|r| r.index).collect())
}
