//! Nodal-domain counting on sign grids.
//!
//! Grid points sit at `(i/N, j/N)` in alcove coordinates (`(iπ/N, jπ/N)` for
//! the right-isosceles triangle). In alcove coordinates the grid is a
//! triangular lattice: the steps `(1,0)`, `(0,1)` and `(1,1)` all have the same
//! Euclidean length, so a point has six nearest neighbours. Two neighbouring
//! points are joined when they and the midpoint between them carry the same
//! sign outside the zero band. The right-isosceles grid is square and uses
//! the four axis neighbours with the same midpoint rule.

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::eigen::EigenfunctionHandle;
use crate::error::{invalid, CourantError, Result};
use crate::geometry::{self, DomainKind};
use crate::spectrum::{self, Mode};

/// Relative width of the band of values treated as zero.
pub const ZERO_BAND: f64 = 1e-9;

/// Below this maximum modulus the function is rounding noise.
const VANISHING: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignGrid {
    pub resolution: usize,
    /// Points per side, `resolution + 1`.
    pub side: usize,
    pub step: f64,
    /// Row-major in the first coordinate: index `i * side + j`.
    pub values: Vec<i8>,
    pub domain_mask: Vec<bool>,
    pub zero_band: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NodalReport {
    pub domain: DomainKind,
    pub m: i64,
    pub n: i64,
    pub theta: f64,
    pub resolution: usize,
    pub domain_count: usize,
    pub positive_components: usize,
    pub negative_components: usize,
    pub stable: bool,
    /// Domain count at twice the resolution.
    #[serde(skip)]
    pub fine_count: usize,
}

impl NodalReport {
    pub fn handle(&self) -> EigenfunctionHandle {
        EigenfunctionHandle::new(self.domain, self.m, self.n, self.theta)
    }

    /// The report itself, or an error when the doubled grid disagreed.
    pub fn require_stable(self) -> Result<Self> {
        if self.stable {
            Ok(self)
        } else {
            Err(CourantError::Unstable {
                resolution: self.resolution,
                coarse: self.domain_count,
                fine: self.fine_count,
            })
        }
    }
}

fn grid_step(d: DomainKind, resolution: usize) -> f64 {
    let side = if d == DomainKind::RightIsosceles { std::f64::consts::PI } else { 1.0 };
    side / resolution as f64
}

fn validate(h: &EigenfunctionHandle, resolution: usize) -> Result<()> {
    if h.domain == DomainKind::Torus {
        return Err(CourantError::Unsupported { operation: "nodal counting", domain: h.domain });
    }
    if resolution < 64 {
        return Err(invalid(format!("resolution must be at least 64, got {resolution}")));
    }
    if !spectrum::is_admissible(h.domain, h.mode) {
        let Mode { m, n } = h.mode;
        return Err(invalid(format!("pair ({m},{n}) is not a mode of the {} domain", h.domain)));
    }
    Ok(())
}

fn sign_of(v: f64, band: f64) -> i8 {
    if v > band {
        1
    } else if v < -band {
        -1
    } else {
        0
    }
}

/// Signs of `h` at grid points strictly inside the domain.
pub fn sign_grid(h: &EigenfunctionHandle, resolution: usize) -> Result<SignGrid> {
    validate(h, resolution)?;
    let side = resolution + 1;
    let step = grid_step(h.domain, resolution);
    let d = h.domain;
    let raw: Vec<(bool, f64)> = (0..side * side)
        .into_par_iter()
        .map(|k| {
            let (a, b) = ((k / side) as f64 * step, (k % side) as f64 * step);
            if geometry::in_domain_strict(d, a, b) {
                (true, h.value(a, b))
            } else {
                (false, 0.0)
            }
        })
        .collect();
    let max = raw.iter().fold(0.0f64, |m, &(inside, v)| if inside { m.max(v.abs()) } else { m });
    let band = if max < VANISHING { f64::INFINITY } else { ZERO_BAND * max };
    Ok(SignGrid {
        resolution,
        side,
        step,
        values: raw.iter().map(|&(inside, v)| if inside { sign_of(v, band) } else { 0 }).collect(),
        domain_mask: raw.iter().map(|&(inside, _)| inside).collect(),
        zero_band: band,
    })
}

fn neighbour_steps(d: DomainKind) -> &'static [(usize, usize)] {
    if d == DomainKind::RightIsosceles {
        &[(1, 0), (0, 1)]
    } else {
        &[(1, 0), (0, 1), (1, 1)]
    }
}

/// Numbers of positive and negative components of a sign grid.
pub fn count_signs(h: &EigenfunctionHandle, grid: &SignGrid) -> (usize, usize) {
    let side = grid.side;
    let step = grid.step;
    let steps = neighbour_steps(h.domain);
    let links: Vec<(u32, u32)> = (0..side * side)
        .into_par_iter()
        .flat_map_iter(|k| {
            let (i, j) = (k / side, k % side);
            let sg = grid.values[k];
            steps.iter().filter_map(move |&(di, dj)| {
                if sg == 0 || i + di >= side || j + dj >= side {
                    return None;
                }
                let q = (i + di) * side + j + dj;
                if grid.values[q] != sg {
                    return None;
                }
                let a = (i as f64 + 0.5 * di as f64) * step;
                let b = (j as f64 + 0.5 * dj as f64) * step;
                (sign_of(h.value(a, b), grid.zero_band) == sg).then_some((k as u32, q as u32))
            })
        })
        .collect();

    let mut uf = UnionFind::<u32>::new(side * side);
    for (p, q) in links {
        uf.union(p, q);
    }
    let mut seen = vec![false; side * side];
    let (mut pos, mut neg) = (0, 0);
    for (k, &sg) in grid.values.iter().enumerate() {
        if sg == 0 {
            continue;
        }
        let root = uf.find_mut(k as u32) as usize;
        if !seen[root] {
            seen[root] = true;
            if sg > 0 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
    }
    (pos, neg)
}

fn count_once(h: &EigenfunctionHandle, resolution: usize) -> Result<(usize, usize)> {
    let grid = sign_grid(h, resolution)?;
    let (p, n) = count_signs(h, &grid);
    if p + n == 0 {
        return Err(invalid("eigenfunction vanishes identically on the domain"));
    }
    Ok((p, n))
}

/// Nodal domains of `h` at `resolution`, with `stable` recording whether
/// the count is unchanged at twice the resolution.
pub fn count_nodal_domains(h: &EigenfunctionHandle, resolution: usize) -> Result<NodalReport> {
    validate(h, resolution)?;
    let (coarse, fine) = rayon::join(|| count_once(h, resolution), || count_once(h, 2 * resolution));
    let (pos, neg) = coarse?;
    let (fp, fneg) = fine?;
    Ok(NodalReport {
        domain: h.domain,
        m: h.mode.m,
        n: h.mode.n,
        theta: h.theta,
        resolution,
        domain_count: pos + neg,
        positive_components: pos,
        negative_components: neg,
        stable: pos + neg == fp + fneg,
        fine_count: fp + fneg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_eigenfunctions_have_one_domain() {
        let r = count_nodal_domains(&EigenfunctionHandle::equilateral(1, 1, std::f64::consts::FRAC_PI_2), 64).unwrap();
        assert_eq!(r.domain_count, 1);
        assert!(r.stable);
        let r = count_nodal_domains(&EigenfunctionHandle::right_isosceles(2, 1), 64).unwrap();
        assert_eq!(r.domain_count, 1);
        let r = count_nodal_domains(&EigenfunctionHandle::hemiequilateral(2, 1), 64).unwrap();
        assert_eq!(r.domain_count, 1);
    }

    #[test]
    fn rejects_bad_inputs() {
        let torus = EigenfunctionHandle::new(DomainKind::Torus, 1, 0, 0.0);
        assert!(count_nodal_domains(&torus, 128).is_err());
        assert!(count_nodal_domains(&EigenfunctionHandle::equilateral(1, 2, 0.0), 32).is_err());
        assert!(count_nodal_domains(&EigenfunctionHandle::equilateral(2, 2, 0.0), 64).is_err());
        assert!(count_nodal_domains(&EigenfunctionHandle::right_isosceles(1, 2), 64).is_err());
    }
}
