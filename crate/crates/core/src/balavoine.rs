//! The graded Lie bracket on twist-equivariant multilinear maps.
//!
//! For endomorphism-valued cochains `P` (arity `p+1`, degree `p`) and `Q`
//! (arity `q+1`, degree `q`) on one space with twist `α`:
//!
//! ```text
//! (P ∘_k Q)(x_1, …, x_{p+q+1})
//!   = Σ_{σ ∈ S(k-1, q)} (-1)^σ P(α^q x_{σ(1)}, …, α^q x_{σ(k-1)},
//!                               Q(x_{σ(k)}, …, x_{σ(k+q-1)}, x_{k+q}),
//!                               α^q x_{k+q+1}, …, α^q x_{p+q+1})
//! P ∘ Q  = Σ_{k=1}^{p+1} (-1)^{(k-1) q} P ∘_k Q
//! [P, Q] = P ∘ Q − (-1)^{p q} Q ∘ P
//! ```
//!
//! The power on the outer arguments is `q`, the degree of the inserted
//! cochain. For degree-0 insertions this leaves the outer arguments
//! untouched, which is what makes `[π, N]` come out as
//! `π(Nx, y) + π(x, Ny) − N π(x, y)`; for `q = p` it agrees with the
//! symmetric reading, and it is the choice under which the graded Jacobi
//! identity holds (see the property tests).

use num_traits::Zero;

use crate::cochain::{multi_indices, Cochain};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::shuffle::shuffles;
use crate::space::HomVectorSpace;

fn common_space<'a>(p: &'a Cochain, q: &Cochain) -> Result<&'a HomVectorSpace> {
    if !p.is_endomorphism_valued() || !q.is_endomorphism_valued() || p.target() != q.target() {
        return Err(Error::SpaceMismatch);
    }
    Ok(p.target())
}

/// Partial composition `P ∘_k Q`, `1 ≤ k ≤ arity(P)`.
pub fn circ_k(p: &Cochain, q: &Cochain, k: usize) -> Result<Cochain> {
    let space = common_space(p, q)?;
    let p_arity = p.arity();
    let q_deg = q.degree();
    if k == 0 || k > p_arity {
        return Err(Error::PositionOutOfRange { position: k, max: p_arity });
    }

    let out_arity = p_arity + q_deg;
    let d = space.dim();
    let twist_q = space.twist_power(q_deg);
    let twist_cols: Vec<Vec<Scalar>> = (0..d).map(|c| twist_q.column(c)).collect();
    let sigma = shuffles(k - 1, q_deg);

    let mut out = Cochain::zero_endo(space, out_arity);
    for idx in multi_indices(&vec![d; out_arity]) {
        let mut acc = vec![Scalar::zero(); d];
        for sh in &sigma {
            // arguments of Q: the last q_deg shuffled positions, then the
            // fixed position k + q_deg (1-based)
            let mut q_idx: Vec<usize> = (k - 1..k - 1 + q_deg)
                .map(|t| idx[sh.permutation[t] - 1])
                .collect();
            q_idx.push(idx[k - 1 + q_deg]);
            let q_val = q.value_at_basis(&q_idx);

            let mut p_args: Vec<&[Scalar]> = Vec::with_capacity(p_arity);
            for t in 0..k - 1 {
                p_args.push(&twist_cols[idx[sh.permutation[t] - 1]]);
            }
            p_args.push(q_val);
            for t in k..p_arity {
                p_args.push(&twist_cols[idx[t + q_deg]]);
            }

            let val = p.evaluate_refs(&p_args);
            for (a, v) in acc.iter_mut().zip(val) {
                if sh.sign > 0 {
                    *a += v;
                } else {
                    *a -= v;
                }
            }
        }
        for (j, v) in acc.into_iter().enumerate() {
            out.set_coeff(&idx, j, v);
        }
    }
    Ok(out)
}

/// Full composition `P ∘ Q = Σ_k (-1)^{(k-1) q} P ∘_k Q`.
pub fn circ(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let space = common_space(p, q)?;
    let q_deg = q.degree();
    let mut total = Cochain::zero_endo(space, p.arity() + q_deg);
    for k in 1..=p.arity() {
        let term = circ_k(p, q, k)?;
        if ((k - 1) * q_deg) % 2 == 0 {
            total = total.add(&term)?;
        } else {
            total = total.sub(&term)?;
        }
    }
    Ok(total)
}

/// The Balavoine bracket `[P, Q] = P ∘ Q − (-1)^{pq} Q ∘ P`.
///
/// The result has degree `deg P + deg Q`, i.e. arity `p + q + 1`.
pub fn bracket(p: &Cochain, q: &Cochain) -> Result<Cochain> {
    let pq = circ(p, q)?;
    let qp = circ(q, p)?;
    if (p.degree() * q.degree()) % 2 == 0 {
        pq.sub(&qp)
    } else {
        pq.add(&qp)
    }
}

/// `[P, P]` for a degree-1 (bilinear) cochain; vanishes exactly when `P`
/// satisfies the Hom-Leibniz identity.
pub fn self_bracket(p: &Cochain) -> Result<Cochain> {
    bracket(p, p)
}
