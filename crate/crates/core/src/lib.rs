//! Decomposition of the affine solution set of a binomial system into
//! monomial maps.
//!
//! The pipeline enumerates which variables to set to zero by row expansion
//! over the monomial/variable incidence matrix, then solves the binomials that
//! survive each selection on the torus with exact integer lattice algebra.
//!
//! ```
//! use binomap::{decompose, parse_system, DecomposeOptions};
//!
//! let sys = parse_system("x11*x22 - x21*x12; x12*x23 - x22*x13;").unwrap();
//! let d = decompose(&sys, &DecomposeOptions::default()).unwrap();
//! assert_eq!(d.len(), 2);
//! assert!(d.maps.iter().all(|m| m.dim() == 4));
//! ```

pub mod bitset;
pub mod decomp;
pub mod enumerate;
pub mod error;
pub mod incidence;
pub mod lattice;
pub mod poly;
pub mod toric;

pub use decomp::{contains, decompose, lattice_relations, Decomposition, DecomposeOptions};
pub use enumerate::{
    classify, enumerate_consistent, enumerate_covers, EnumerationOptions, EquationStatus,
    Selection,
};
pub use error::{Error, Result};
pub use incidence::{build_incidence, row_covered, vanishes, IncidenceMatrix};
pub use lattice::{hnf, kernel_lattice, HnfResult, IntegerMatrix};
pub use poly::{adjacent_minors, parse_system, serialize_system, PolynomialSystem, Term, VariableTable};
pub use toric::{build_map, residual, solve_coefficients, verify_map, MonomialMap, ResidualSystem, ToricSolution};
