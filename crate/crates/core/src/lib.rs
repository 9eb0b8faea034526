//! Exact-arithmetic computer algebra for compatible Hom-Leibniz algebras.
//!
//! A Hom-Leibniz algebra is a space `L` with a bilinear bracket and a
//! linear twist `α` satisfying `[αx, [y,z]] = [[x,y], αz] + [αy, [x,z]]`;
//! a compatible structure carries two such brackets whose every linear
//! combination is again Hom-Leibniz. This crate represents these objects
//! by structure constants over exact rationals and provides:
//!
//! * axiom verification with violating-tuple witnesses ([`structures`]);
//! * the graded Lie (Balavoine) bracket on twist-equivariant cochains and
//!   its Maurer-Cartan characterizations ([`balavoine`]);
//! * bimodules, semidirect products and the lift/bidegree calculus
//!   ([`representation`]);
//! * cochain complexes and cohomology dimensions, adjoint and with
//!   arbitrary coefficients ([`cohomology`]);
//! * infinitesimal deformations, Nijenhuis operators and triviality
//!   certificates ([`deformation`]).
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point and no tolerance anywhere.

pub mod balavoine;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod representation;
pub mod scalar;
pub mod shuffle;
pub mod space;
pub mod structures;

pub use balavoine::{bracket, circ, circ_k, self_bracket};
pub use cochain::{coords_in_basis, equivariant_basis, Cochain};
pub use cohomology::{ComplexReport, DegreeReport};
pub use deformation::InfinitesimalDeformation;
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use representation::{Bidegree, Bimodule, Block, CompatibleBimodule};
pub use scalar::{frac, rat, Scalar};
pub use shuffle::{shuffles, SignedShuffle};
pub use space::HomVectorSpace;
pub use structures::{
    BracketChoice, CompatibleHomLeibnizAlgebra, HomLeibnizAlgebra, LinearOperator, Witness,
};
