//! Nodal structure of eigenfunctions: fixed points, barrier lines, critical
//! zeros, sign-grid domain counts, contour export and Courant-sharp verdicts.

pub mod analysis;
pub mod count;
pub mod svg;
pub mod verdict;

pub use analysis::{
    bifurcation_angle, edge_critical_zeros, edge_restriction_roots, median_critical_zeros,
    median_fixed_points, polynomial_roots_unit_interval, wronskian, wronskian_factorized,
    Basis, Bifurcation, CriticalZero, FixedPoint, FixedPointLabel, Locus, PolyKind,
};
pub use count::{count_nodal_domains, count_signs, sign_grid, NodalReport, SignGrid};
pub use verdict::{courant_sharp_verdict, courant_sharp_verdict_at, sharp_indices, VerdictRow};
