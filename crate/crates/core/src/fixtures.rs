//! Small reference algebras used throughout the tests, the benchmarks and
//! the CLI examples.

use crate::cochain::Cochain;
use crate::matrix::DenseMatrix;
use crate::representation::{Bimodule, CompatibleBimodule};
use crate::scalar::rat;
use crate::space::HomVectorSpace;
use crate::structures::{CompatibleHomLeibnizAlgebra, HomLeibnizAlgebra};

fn diag(values: &[i64]) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(values.len(), values.len());
    for (i, &v) in values.iter().enumerate() {
        m.set(i, i, rat(v));
    }
    m
}

/// One-dimensional abelian algebra with identity twist, viewed as a
/// compatible pair of zero brackets.
pub fn abelian_dim1() -> CompatibleHomLeibnizAlgebra {
    let space = HomVectorSpace::with_identity_twist(1);
    let zero = Cochain::zero_endo(&space, 2);
    CompatibleHomLeibnizAlgebra::new(space, zero.clone(), zero).expect("abelian")
}

/// Two-dimensional nilpotent algebra: `[e2, e2] = e1`, identity twist.
pub fn nilpotent_dim2() -> HomLeibnizAlgebra {
    let space = HomVectorSpace::with_identity_twist(2);
    let pi = Cochain::from_entries(
        vec![space.clone(); 2],
        space.clone(),
        &[(vec![1, 1], 0, rat(1))],
    );
    HomLeibnizAlgebra::new(space, pi).expect("nilpotent bracket")
}

/// The same nilpotent bracket with the non-identity twist `diag(4, 2)`,
/// for which it is still multiplicative.
pub fn nilpotent_dim2_twisted() -> HomLeibnizAlgebra {
    let space = HomVectorSpace::new(2, diag(&[4, 2])).expect("square twist");
    let pi = Cochain::from_entries(
        vec![space.clone(); 2],
        space.clone(),
        &[(vec![1, 1], 0, rat(1))],
    );
    HomLeibnizAlgebra::new(space, pi).expect("twisted nilpotent bracket")
}

/// Genuinely compatible pair on dimension 2: `[e2, e2] = e1` and
/// `{e2, e1} = e1`, identity twist.
pub fn compatible_pair_dim2() -> CompatibleHomLeibnizAlgebra {
    let space = HomVectorSpace::with_identity_twist(2);
    let pi1 = Cochain::from_entries(
        vec![space.clone(); 2],
        space.clone(),
        &[(vec![1, 1], 0, rat(1))],
    );
    let pi2 = Cochain::from_entries(
        vec![space.clone(); 2],
        space.clone(),
        &[(vec![1, 0], 0, rat(1))],
    );
    CompatibleHomLeibnizAlgebra::new(space, pi1, pi2).expect("compatible pair")
}

/// Views a single algebra as the compatible pair with both brackets equal.
pub fn as_compatible(a: &HomLeibnizAlgebra) -> CompatibleHomLeibnizAlgebra {
    CompatibleHomLeibnizAlgebra::new(a.space().clone(), a.pi().clone(), a.pi().clone())
        .expect("a bracket is compatible with itself")
}

/// Adjoint bimodule of a single algebra: `M = L`, both actions the bracket.
pub fn adjoint_bimodule(a: &HomLeibnizAlgebra) -> Bimodule {
    Bimodule::new(a.clone(), a.space().clone(), a.pi().clone(), a.pi().clone())
        .expect("adjoint actions form a bimodule")
}

/// Adjoint compatible bimodule: `M = L`, actions `m¹ = π₁`, `m² = π₂`.
pub fn adjoint_compatible_bimodule(c: &CompatibleHomLeibnizAlgebra) -> CompatibleBimodule {
    CompatibleBimodule::new(
        c.clone(),
        c.space().clone(),
        c.pi1().clone(),
        c.pi1().clone(),
        c.pi2().clone(),
        c.pi2().clone(),
    )
    .expect("adjoint actions form a compatible bimodule")
}

/// Compatible bimodule with all actions zero on a coefficient space of the
/// given dimension with identity twist.
pub fn zero_action_bimodule(c: &CompatibleHomLeibnizAlgebra, coeff_dim: usize) -> CompatibleBimodule {
    let coeff = HomVectorSpace::with_identity_twist(coeff_dim);
    let left = Cochain::zero(vec![c.space().clone(), coeff.clone()], coeff.clone());
    let right = Cochain::zero(vec![coeff.clone(), c.space().clone()], coeff.clone());
    CompatibleBimodule::new(c.clone(), coeff, left.clone(), right.clone(), left, right)
        .expect("zero actions form a compatible bimodule")
}
