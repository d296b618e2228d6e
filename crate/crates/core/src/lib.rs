//! Involutive bases of polynomial ideals with syzygy tracking.
//!
//! The crate is `no_std` (it needs `alloc`). Polynomials have exact rational
//! coefficients; all algorithms are deterministic given their inputs.

#![no_std]

extern crate alloc;

pub mod division;
pub mod error;
pub mod groebner;
pub mod invbasis;
pub mod module;
pub mod monomial;
pub mod poly;
pub mod quasistable;
pub mod sample;
pub mod siginv;

pub use division::{DivisionKind, VarSet, VariablePartition};
pub use error::Error;
pub use module::{ModuleElement, ModuleMonomial, ModuleOrder};
pub use monomial::{Monomial, MonomialOrder, Ring};
pub use poly::{Coeff, Polynomial, Term};
