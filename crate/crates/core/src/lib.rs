//! Exact construction and verification of Hom-associative algebras,
//! Hom-bialgebras and module Hom-algebras.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalars`]: Laurent polynomials in a formal `q` over exact rationals.
//! - [`linear`]: sparse linear combinations, tensors and linear maps.
//! - [`polyalg`]: the affine plane `k[x, y]`.
//! - [`uea_sl2`]: U(sl(2)) in the PBW basis, as a bialgebra.
//! - [`homcore`]: generic carriers, Yau twists and axiom checkers.
//! - [`actions`]: the sl(2)-action on the plane and its q-deformation.
//! - [`finalg`]: finite-dimensional algebras and group bialgebras.

pub mod actions;
pub mod finalg;
pub mod homcore;
pub mod linear;
pub mod parse;
pub mod polyalg;
pub mod report;
pub mod scalars;
pub mod uea_sl2;

pub use homcore::CheckError;
pub use linear::{LinComb, LinearMap, Tensor};
pub use polyalg::{Monomial, Poly, PolyEndo};
pub use report::{AxiomId, CheckReport, Counterexample};
pub use scalars::{QLaurent, Rational};
pub use uea_sl2::{Pbw, UElem, UEndo};
