//! Finite-dimensional vector spaces carrying a distinguished endomorphism
//! (the twist), the ambient setting for every structure in this crate.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// A space `K^d` together with the matrix of its twist in the chosen basis.
///
/// The twist is `α` for an algebra and `β` for a coefficient space; nothing
/// in this type distinguishes the two roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomVectorSpace {
    dim: usize,
    twist: DenseMatrix,
}

impl HomVectorSpace {
    pub fn new(dim: usize, twist: DenseMatrix) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dimension must be at least 1".into()));
        }
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        Ok(HomVectorSpace { dim, twist })
    }

    /// Space with the identity twist (the untwisted case).
    pub fn with_identity_twist(dim: usize) -> Self {
        HomVectorSpace::new(dim, DenseMatrix::identity(dim)).expect("dim >= 1")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &DenseMatrix {
        &self.twist
    }

    /// `k`-th power of the twist matrix; `k = 0` yields the identity.
    pub fn twist_power(&self, k: usize) -> DenseMatrix {
        self.twist.pow(k).expect("twist is square")
    }

    /// Coordinate vector of the `i`-th basis element.
    pub fn basis_vector(&self, i: usize) -> Vec<crate::scalar::Scalar> {
        use num_traits::{One, Zero};
        let mut v = vec![crate::scalar::Scalar::zero(); self.dim];
        v[i] = crate::scalar::Scalar::one();
        v
    }

    /// Direct sum with block-diagonal twist, ordered self-block first.
    pub fn direct_sum(&self, other: &HomVectorSpace) -> HomVectorSpace {
        HomVectorSpace {
            dim: self.dim + other.dim,
            twist: self.twist.block_diag(&other.twist),
        }
    }
}
