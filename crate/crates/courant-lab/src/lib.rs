//! Courant-sharp eigenvalues of the equilateral torus and of three triangles
//! (equilateral, right-isosceles, hemiequilateral).
//!
//! The crate enumerates the closed-form Dirichlet spectra, runs the
//! Pleijel/Faber-Krahn screening, evaluates the trigonometric eigenfunctions
//! with their symmetry actions, locates critical zeros on the edges and the
//! median, and counts nodal domains on sign grids.
//!
//! ```
//! use courant_lab::{screening, DomainKind};
//!
//! let candidates = screening::candidate_indices(DomainKind::Equilateral);
//! assert_eq!(candidates, vec![1, 2, 4, 5, 7, 11]);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod eigen;
pub mod error;
pub mod geometry;
pub mod nodal;
pub mod report;
pub mod roots;
pub mod screening;
pub mod spectrum;

pub use eigen::{EigenfunctionHandle, EvalResult};
pub use error::{CourantError, Result};
pub use geometry::{AlcovePoint, CartesianPoint, DomainKind, Symmetry};
pub use nodal::{CriticalZero, FixedPoint, NodalReport};
pub use spectrum::{Mode, SpectrumEntry};
