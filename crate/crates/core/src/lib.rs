//! Exact symbolic verification of the truncated reflection algebras
//! `B^(N)(2,1)` attached to the Yangian of sl2.
//!
//! The tower `B^(N)(x)` is built inside `U(sl2)^{⊗N}` by dressing with the
//! L-matrix, its generators are read off in the Euler-polynomial basis, and
//! the known identities and presentations are checked by exact normal-form
//! arithmetic over the rationals. Every check produces a residual; zero means
//! the identity holds.
//!
//! ```
//! use truncated_reflection::euler::EulerTable;
//! use truncated_reflection::matrix::check_reflection;
//! use truncated_reflection::tower::{build_tower, Mu0};
//!
//! let levels = build_tower(1, &Mu0::Symbolic, &EulerTable::build(4)).unwrap();
//! assert!(check_reflection(&levels[1].matrix).unwrap().is_zero());
//! assert_eq!(levels[1].gen("h0").to_string(), "mu0 + h1");
//! ```

pub mod error;
pub mod euler;
pub mod matrix;
pub mod nc;
pub mod presentations;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod tower;
pub mod xpoly;
