//! Cochain complexes attached to (compatible) Hom-Leibniz algebras and
//! their cohomology dimensions, all computed by exact rank.
//!
//! Two families of complexes live here:
//!
//! * the adjoint complex of a compatible pair, `LC^n = (C_α^n)^⊕n` with
//!   the interleaved coboundary built from `[π₁, ·]` and `[π₂, ·]`;
//! * the arbitrary-coefficient complex, whose coboundary is computed
//!   through lifts into `L ⊕ M` and extraction of the `L^⊗(n+1) → M`
//!   component, with the bidegree of the bracket checked along the way.
//!
//! Degrees start at `n = 1`; there is no degree-0 term, so the
//! coboundary space at degree 1 is zero and `H¹ = ker d¹`.

use num_traits::{One, Zero};

use crate::balavoine::bracket;
use crate::cochain::{coords_in_basis, equivariant_basis, Cochain};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::representation::{
    has_bidegree, lift, lifted_structure, restrict_to_coeff_output, Bimodule, Block,
    CompatibleBimodule,
};
use crate::scalar::Scalar;
use crate::space::HomVectorSpace;
use crate::structures::{BracketChoice, CompatibleHomLeibnizAlgebra, HomLeibnizAlgebra};

/// Dimensions at one degree of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// Dimension of the cochain space at this degree.
    pub dim_cochains: usize,
    /// Rank of the coboundary leaving this degree.
    pub rank_d: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub degrees: Vec<DegreeReport>,
}

fn report_from_ranks(dims: &[usize], ranks: &[usize]) -> ComplexReport {
    let degrees = dims
        .iter()
        .zip(ranks)
        .enumerate()
        .map(|(i, (&dim, &rank))| {
            let degree = i + 1;
            let dim_cocycles = dim - rank;
            let dim_coboundaries = if i == 0 { 0 } else { ranks[i - 1] };
            DegreeReport {
                degree,
                dim_cochains: dim,
                rank_d: rank,
                dim_cocycles,
                dim_coboundaries,
                dim_h: dim_cocycles - dim_coboundaries,
            }
        })
        .collect();
    ComplexReport { degrees }
}

/// Matrix of `f ↦ [pi, f]` between the given equivariant bases.
fn bracket_action_matrix(pi: &Cochain, from: &[Cochain], to: &[Cochain]) -> DenseMatrix {
    let columns: Vec<Vec<Scalar>> = from
        .iter()
        .map(|f| {
            let image = bracket(pi, f).expect("same space");
            coords_in_basis(to, &image)
                .expect("bracket with an equivariant cochain stays equivariant")
        })
        .collect();
    let rows = to.len();
    DenseMatrix::from_columns(rows, &columns).expect("consistent basis")
}

/// Matrix of the differential `f ↦ [π, f]` from the degree-`n` to the
/// degree-`n+1` equivariant cochain basis of a single algebra.
pub fn single_coboundary(a: &HomLeibnizAlgebra, n: usize) -> DenseMatrix {
    assert!(n >= 1);
    let from = equivariant_basis(a.space(), a.space(), n);
    let to = equivariant_basis(a.space(), a.space(), n + 1);
    bracket_action_matrix(a.pi(), &from, &to)
}

/// Interleaves two per-copy blocks into the full coboundary on `n` copies:
/// input copy `i` feeds `m1` into output copy `i` and `m2` into output
/// copy `i + 1`, all scaled by `sign`.
fn assemble_interleaved(m1: &DenseMatrix, m2: &DenseMatrix, copies: usize, sign: &Scalar) -> DenseMatrix {
    let r_in = m1.cols();
    let r_out = m1.rows();
    assert_eq!(m2.cols(), r_in);
    assert_eq!(m2.rows(), r_out);
    let mut out = DenseMatrix::zeros((copies + 1) * r_out, copies * r_in);
    for copy in 0..copies {
        for row in 0..r_out {
            for col in 0..r_in {
                let v1 = m1.get(row, col);
                if !v1.is_zero() {
                    out.set(copy * r_out + row, copy * r_in + col, v1 * sign);
                }
                let v2 = m2.get(row, col);
                if !v2.is_zero() {
                    out.set((copy + 1) * r_out + row, copy * r_in + col, v2 * sign);
                }
            }
        }
    }
    out
}

fn degree_sign(n: usize) -> Scalar {
    if (n - 1) % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Basis of the degree-`n` adjoint cochain space `LC^n`, the `n`-fold
/// direct sum of the equivariant space: each element is an `n`-tuple that
/// is a basis cochain in one copy and zero elsewhere (copy-major order).
pub fn adjoint_cochain_basis(c: &CompatibleHomLeibnizAlgebra, n: usize) -> Vec<Vec<Cochain>> {
    assert!(n >= 1);
    let single = equivariant_basis(c.space(), c.space(), n);
    let zero = Cochain::zero_endo(c.space(), n);
    let mut out = Vec::with_capacity(n * single.len());
    for copy in 0..n {
        for b in &single {
            let mut tuple = vec![zero.clone(); n];
            tuple[copy] = b.clone();
            out.push(tuple);
        }
    }
    out
}

/// Matrix of the degree-`n` adjoint coboundary
/// `d^n(f_1,…,f_n) = (-1)^{n-1} ([π₁,f_1], …, [π₂,f_{i-1}] + [π₁,f_i], …, [π₂,f_n])`
/// between the copy-major bases of `LC^n` and `LC^{n+1}`.
pub fn adjoint_coboundary_matrix(c: &CompatibleHomLeibnizAlgebra, n: usize) -> DenseMatrix {
    assert!(n >= 1);
    let from = equivariant_basis(c.space(), c.space(), n);
    let to = equivariant_basis(c.space(), c.space(), n + 1);
    let m1 = bracket_action_matrix(c.pi1(), &from, &to);
    let m2 = bracket_action_matrix(c.pi2(), &from, &to);
    assemble_interleaved(&m1, &m2, n, &degree_sign(n))
}

/// Full dimension report of the adjoint complex up to `max_degree`.
pub fn adjoint_cohomology(c: &CompatibleHomLeibnizAlgebra, max_degree: usize) -> ComplexReport {
    assert!(max_degree >= 1);
    let bases: Vec<Vec<Cochain>> = (1..=max_degree + 1)
        .map(|n| equivariant_basis(c.space(), c.space(), n))
        .collect();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for n in 1..=max_degree {
        let from = &bases[n - 1];
        let to = &bases[n];
        let m1 = bracket_action_matrix(c.pi1(), from, to);
        let m2 = bracket_action_matrix(c.pi2(), from, to);
        let d = assemble_interleaved(&m1, &m2, n, &degree_sign(n));
        dims.push(n * from.len());
        ranks.push(d.rank());
    }
    report_from_ranks(&dims, &ranks)
}

/// Dimension report of the one-bracket complex `(C_α^n, [π, ·])` of a
/// single Hom-Leibniz algebra.
pub fn single_cohomology(a: &HomLeibnizAlgebra, max_degree: usize) -> ComplexReport {
    assert!(max_degree >= 1);
    let bases: Vec<Vec<Cochain>> = (1..=max_degree + 1)
        .map(|n| equivariant_basis(a.space(), a.space(), n))
        .collect();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for n in 1..=max_degree {
        let d = bracket_action_matrix(a.pi(), &bases[n - 1], &bases[n]);
        dims.push(bases[n - 1].len());
        ranks.push(d.rank());
    }
    report_from_ranks(&dims, &ranks)
}

/// Coefficient coboundary through lifts: for each basis element `f` of the
/// equivariant space of maps `L^⊗n → M`, lift to bidegree `n|-1`, bracket
/// with the lifted structure `Π`, check the result is homogeneous of
/// bidegree `(n+1)|-1`, extract the `L^⊗(n+1) → M` component and scale by
/// `(-1)^{n-1}`.
fn coefficient_matrix_from_parts(
    base_space: &HomVectorSpace,
    pi: &Cochain,
    coeff: &HomVectorSpace,
    left: &Cochain,
    right: &Cochain,
    from: &[Cochain],
    to: &[Cochain],
    n: usize,
) -> Result<DenseMatrix> {
    let big = lifted_structure(base_space, pi, coeff, left, right);
    let split = (base_space.dim(), coeff.dim());
    let tags = vec![Block::Base; n];
    let sign = degree_sign(n);
    let mut columns = Vec::with_capacity(from.len());
    for f in from {
        let f_hat = lift(f, &tags, Block::Coeff, base_space, coeff);
        let image = bracket(&big, &f_hat)?;
        if !has_bidegree(&image, split, n as i64 + 1, -1) {
            return Err(Error::NotHomogeneous { l: n as i64 + 1, k: -1 });
        }
        let component = restrict_to_coeff_output(&image, base_space, coeff).scale(&sign);
        let col = coords_in_basis(to, &component)
            .expect("coefficient coboundary lands in the equivariant space");
        columns.push(col);
    }
    DenseMatrix::from_columns(to.len(), &columns)
}

/// Matrix of the degree-`n` coefficient coboundary of one bracket of a
/// compatible bimodule, between bases of the equivariant spaces of maps
/// `L^⊗n → M` and `L^⊗(n+1) → M`.
pub fn coefficient_coboundary_matrix(
    cb: &CompatibleBimodule,
    n: usize,
    which: BracketChoice,
) -> Result<DenseMatrix> {
    assert!(n >= 1);
    let base = cb.base();
    let from = equivariant_basis(base.space(), cb.coeff(), n);
    let to = equivariant_basis(base.space(), cb.coeff(), n + 1);
    let (pi, left, right) = match which {
        BracketChoice::First => (base.pi1(), cb.left1(), cb.right1()),
        BracketChoice::Second => (base.pi2(), cb.left2(), cb.right2()),
    };
    coefficient_matrix_from_parts(base.space(), pi, cb.coeff(), left, right, &from, &to, n)
}

/// Coefficient coboundary of a single bimodule.
pub fn single_coefficient_coboundary(b: &Bimodule, n: usize) -> Result<DenseMatrix> {
    assert!(n >= 1);
    let from = equivariant_basis(b.base().space(), b.coeff(), n);
    let to = equivariant_basis(b.base().space(), b.coeff(), n + 1);
    coefficient_matrix_from_parts(
        b.base().space(),
        b.base().pi(),
        b.coeff(),
        b.left(),
        b.right(),
        &from,
        &to,
        n,
    )
}

/// Dimension report of the coefficient complex of a compatible bimodule:
/// `n` copies of the equivariant space with the interleaved coboundary.
/// Verifies `∂ ∘ ∂ = 0` on every computable pair of degrees.
pub fn coefficient_cohomology(cb: &CompatibleBimodule, max_degree: usize) -> Result<ComplexReport> {
    assert!(max_degree >= 1);
    let base = cb.base();
    let bases: Vec<Vec<Cochain>> = (1..=max_degree + 1)
        .map(|n| equivariant_basis(base.space(), cb.coeff(), n))
        .collect();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    let mut boundaries = Vec::new();
    for n in 1..=max_degree {
        let d1 = coefficient_matrix_from_parts(
            base.space(),
            base.pi1(),
            cb.coeff(),
            cb.left1(),
            cb.right1(),
            &bases[n - 1],
            &bases[n],
            n,
        )?;
        let d2 = coefficient_matrix_from_parts(
            base.space(),
            base.pi2(),
            cb.coeff(),
            cb.left2(),
            cb.right2(),
            &bases[n - 1],
            &bases[n],
            n,
        )?;
        // the per-degree sign already lives inside d1 and d2
        let boundary = assemble_interleaved(&d1, &d2, n, &Scalar::one());
        dims.push(n * bases[n - 1].len());
        ranks.push(boundary.rank());
        boundaries.push(boundary);
    }
    for n in 1..max_degree {
        let square = boundaries[n].mul(&boundaries[n - 1]).expect("chained shapes");
        if !square.is_zero() {
            return Err(Error::NotAComplex { degree: n });
        }
    }
    Ok(report_from_ranks(&dims, &ranks))
}

/// Dimension report of the coefficient complex of a single bimodule.
pub fn single_coefficient_cohomology(b: &Bimodule, max_degree: usize) -> Result<ComplexReport> {
    assert!(max_degree >= 1);
    let bases: Vec<Vec<Cochain>> = (1..=max_degree + 1)
        .map(|n| equivariant_basis(b.base().space(), b.coeff(), n))
        .collect();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    let mut matrices = Vec::new();
    for n in 1..=max_degree {
        let d = coefficient_matrix_from_parts(
            b.base().space(),
            b.base().pi(),
            b.coeff(),
            b.left(),
            b.right(),
            &bases[n - 1],
            &bases[n],
            n,
        )?;
        dims.push(bases[n - 1].len());
        ranks.push(d.rank());
        matrices.push(d);
    }
    for n in 1..max_degree {
        let square = matrices[n].mul(&matrices[n - 1]).expect("chained shapes");
        if !square.is_zero() {
            return Err(Error::NotAComplex { degree: n });
        }
    }
    Ok(report_from_ranks(&dims, &ranks))
}
