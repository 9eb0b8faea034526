//! Multilinear maps stored as dense coefficient tensors.
//!
//! A `Cochain` of arity `n` is a map `V_1 ⊗ … ⊗ V_n → W` given by its
//! coefficients on basis tuples. Most cochains in this crate have all
//! slots equal to one space (`L^⊗n → L`), but bimodule actions such as
//! `L ⊗ M → M` use mixed slots, so each slot carries its own space.
//!
//! The degree of an arity-`n` cochain in the graded algebra is `n - 1`.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::space::HomVectorSpace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    sources: Vec<HomVectorSpace>,
    target: HomVectorSpace,
    coeffs: Vec<Scalar>,
}

/// Iterates over all multi-indices for the given slot dimensions.
pub(crate) fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    dims.iter().map(|&d| 0..d).multi_cartesian_product()
}

impl Cochain {
    pub fn zero(sources: Vec<HomVectorSpace>, target: HomVectorSpace) -> Self {
        assert!(!sources.is_empty(), "cochain arity must be at least 1");
        let size: usize = sources.iter().map(HomVectorSpace::dim).product::<usize>() * target.dim();
        Cochain {
            sources,
            target,
            coeffs: vec![Scalar::zero(); size],
        }
    }

    /// Zero endomorphism-valued cochain `space^⊗arity → space`.
    pub fn zero_endo(space: &HomVectorSpace, arity: usize) -> Self {
        Cochain::zero(vec![space.clone(); arity], space.clone())
    }

    /// Builds a cochain from sparse entries `(slot indices, output index, value)`,
    /// all 0-based. Later entries for the same position accumulate.
    pub fn from_entries(
        sources: Vec<HomVectorSpace>,
        target: HomVectorSpace,
        entries: &[(Vec<usize>, usize, Scalar)],
    ) -> Self {
        let mut c = Cochain::zero(sources, target);
        for (idx, j, v) in entries {
            let pos = c.flat_index(idx, *j);
            c.coeffs[pos] += v;
        }
        c
    }

    pub fn arity(&self) -> usize {
        self.sources.len()
    }

    /// Degree in the graded algebra: arity minus one.
    pub fn degree(&self) -> usize {
        self.arity() - 1
    }

    pub fn sources(&self) -> &[HomVectorSpace] {
        &self.sources
    }

    pub fn target(&self) -> &HomVectorSpace {
        &self.target
    }

    /// True when every slot and the target are the same space.
    pub fn is_endomorphism_valued(&self) -> bool {
        self.sources.iter().all(|s| s == &self.target)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn source_dims(&self) -> Vec<usize> {
        self.sources.iter().map(HomVectorSpace::dim).collect()
    }

    fn flat_index(&self, idx: &[usize], j: usize) -> usize {
        debug_assert_eq!(idx.len(), self.arity());
        let mut o = 0;
        for (t, &i) in idx.iter().enumerate() {
            debug_assert!(i < self.sources[t].dim());
            o = o * self.sources[t].dim() + i;
        }
        o * self.target.dim() + j
    }

    pub fn coeff(&self, idx: &[usize], j: usize) -> &Scalar {
        &self.coeffs[self.flat_index(idx, j)]
    }

    pub fn set_coeff(&mut self, idx: &[usize], j: usize, value: Scalar) {
        let pos = self.flat_index(idx, j);
        self.coeffs[pos] = value;
    }

    /// Value on a tuple of basis vectors, as a coordinate vector in the target.
    pub fn value_at_basis(&self, idx: &[usize]) -> &[Scalar] {
        let start = self.flat_index(idx, 0);
        &self.coeffs[start..start + self.target.dim()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.sources != other.sources || self.target != other.target {
            return Err(Error::SpaceMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cochain {
            sources: self.sources.clone(),
            target: self.target.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            sources: self.sources.clone(),
            target: self.target.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: args.len(),
            });
        }
        for (t, a) in args.iter().enumerate() {
            if a.len() != self.sources[t].dim() {
                return Err(Error::DimensionMismatch(format!(
                    "argument {} has length {}, slot dimension is {}",
                    t + 1,
                    a.len(),
                    self.sources[t].dim()
                )));
            }
        }
        let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
        Ok(self.evaluate_refs(&refs))
    }

    /// Same as [`evaluate`](Self::evaluate) but borrowing the arguments;
    /// shapes must already be correct.
    pub(crate) fn evaluate_refs(&self, args: &[&[Scalar]]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.target.dim()];
        let mut idx = vec![0usize; self.arity()];
        self.evaluate_rec(args, 0, &Scalar::one(), &mut idx, &mut out);
        out
    }

    fn evaluate_rec(
        &self,
        args: &[&[Scalar]],
        depth: usize,
        prod: &Scalar,
        idx: &mut Vec<usize>,
        out: &mut [Scalar],
    ) {
        if depth == self.arity() {
            let values = self.value_at_basis(idx);
            for (o, v) in out.iter_mut().zip(values) {
                if !v.is_zero() {
                    *o += prod * v;
                }
            }
            return;
        }
        for (i, c) in args[depth].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            idx[depth] = i;
            let p = prod * c;
            self.evaluate_rec(args, depth + 1, &p, idx, out);
        }
    }

    /// Tensor of `twist_target ∘ f − f ∘ (twist_1 ⊗ … ⊗ twist_n)`.
    ///
    /// `f` lies in the twist-equivariant cochain space exactly when this
    /// vanishes; for an algebra bracket that is multiplicativity.
    pub fn equivariance_defect(&self) -> Cochain {
        // twist_target ∘ f: apply the target twist to each output slice
        let mut first = self.clone();
        for idx in multi_indices(&self.source_dims()) {
            let transformed = self
                .target
                .twist()
                .mul_vec(self.value_at_basis(&idx))
                .expect("twist shape");
            for (j, v) in transformed.into_iter().enumerate() {
                first.set_coeff(&idx, j, v);
            }
        }
        // f ∘ ⊗twists: contract one slot at a time
        let mut second = self.clone();
        for t in 0..self.arity() {
            second = second.contract_slot(t, self.sources[t].twist());
        }
        first.sub(&second).expect("same shape")
    }

    /// Replaces slot `t` by precomposition with the given matrix.
    fn contract_slot(&self, t: usize, matrix: &DenseMatrix) -> Cochain {
        let dims = self.source_dims();
        let mut out = Cochain::zero(self.sources.clone(), self.target.clone());
        for idx in multi_indices(&dims) {
            for i_new in 0..dims[t] {
                let w = matrix.get(idx[t], i_new);
                if w.is_zero() {
                    continue;
                }
                let mut target_idx = idx.clone();
                target_idx[t] = i_new;
                let base = out.flat_index(&target_idx, 0);
                let src = self.flat_index(&idx, 0);
                for j in 0..self.target.dim() {
                    let add = &self.coeffs[src + j] * w;
                    if !add.is_zero() {
                        out.coeffs[base + j] += add;
                    }
                }
            }
        }
        out
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_defect().is_zero()
    }

    /// Flattens into the coefficient vector, in `(slots, output)` order.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.coeffs.clone()
    }
}

/// Basis of the equivariant cochain space
/// `{f : L^⊗n → M | twist_M ∘ f = f ∘ twist_L^⊗n}`,
/// computed as the kernel of the flattened defect map.
pub fn equivariant_basis(source: &HomVectorSpace, target: &HomVectorSpace, arity: usize) -> Vec<Cochain> {
    assert!(arity >= 1, "arity must be at least 1");
    let d = source.dim();
    let m = target.dim();
    let n_coeffs = d.pow(arity as u32) * m;
    let mut defect = DenseMatrix::zeros(n_coeffs, n_coeffs);

    let flat = |idx: &[usize], j: usize| -> usize {
        idx.iter().fold(0, |o, &i| o * d + i) * m + j
    };

    let dims = vec![d; arity];
    // twist_target ∘ f part
    for idx in multi_indices(&dims) {
        for j in 0..m {
            for jp in 0..m {
                let t = target.twist().get(j, jp);
                if !t.is_zero() {
                    let row = flat(&idx, j);
                    let col = flat(&idx, jp);
                    let cur = defect.get(row, col).clone();
                    defect.set(row, col, cur + t);
                }
            }
        }
    }
    // f ∘ twist^⊗n part
    for idx in multi_indices(&dims) {
        for idx_p in multi_indices(&dims) {
            let mut w = Scalar::one();
            let mut vanished = false;
            for t in 0..arity {
                let a = source.twist().get(idx_p[t], idx[t]);
                if a.is_zero() {
                    vanished = true;
                    break;
                }
                w *= a;
            }
            if vanished {
                continue;
            }
            for j in 0..m {
                let row = flat(&idx, j);
                let col = flat(&idx_p, j);
                let cur = defect.get(row, col).clone();
                defect.set(row, col, cur - &w);
            }
        }
    }

    defect
        .kernel_basis()
        .into_iter()
        .map(|coeffs| Cochain {
            sources: vec![source.clone(); arity],
            target: target.clone(),
            coeffs,
        })
        .collect()
}

/// Coordinates of `target` in the span of `basis`, or `None` if it does
/// not lie in the span. All cochains must share one shape.
pub fn coords_in_basis(basis: &[Cochain], target: &Cochain) -> Option<Vec<Scalar>> {
    if basis.is_empty() {
        return target.is_zero().then(Vec::new);
    }
    let rows = target.coeffs.len();
    let columns: Vec<Vec<Scalar>> = basis.iter().map(Cochain::to_vec).collect();
    let matrix = DenseMatrix::from_columns(rows, &columns).expect("basis shape");
    matrix.solve(&target.coeffs)
}
