//! Hom-Leibniz and compatible Hom-Leibniz algebras: axiom verification,
//! homomorphism checks, Nijenhuis operators and deformed brackets.

use num_traits::Zero;

use crate::balavoine::{bracket, self_bracket};
use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::space::HomVectorSpace;

/// Cap on recorded violations; checks still count all of them.
pub const MAX_WITNESSES: usize = 5;

/// A violating basis tuple together with the nonzero defect vector found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the arguments, 0-based.
    pub args: Vec<usize>,
    pub value: Vec<Scalar>,
}

/// Outcome of [`check_hom_leibniz`].
#[derive(Clone, Debug)]
pub struct HomLeibnizReport {
    /// Twist-equivariance of the bracket: `α[x,y] = [αx, αy]`.
    pub multiplicative: bool,
    /// The Hom-Leibniz identity on all basis triples.
    pub identity_holds: bool,
    pub witnesses: Vec<Witness>,
    pub violation_count: usize,
}

impl HomLeibnizReport {
    pub fn ok(&self) -> bool {
        self.multiplicative && self.identity_holds
    }
}

fn sub3(a: Vec<Scalar>, b: Vec<Scalar>, c: Vec<Scalar>) -> Vec<Scalar> {
    a.into_iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x - y - z)
        .collect()
}

/// Hom-Leibniz defect `[αx, [y,z]] - [[x,y], αz] - [αy, [x,z]]` at one
/// basis triple.
fn leibniz_defect(space: &HomVectorSpace, pi: &Cochain, x: usize, y: usize, z: usize) -> Vec<Scalar> {
    let ax = space.twist().column(x);
    let ay = space.twist().column(y);
    let az = space.twist().column(z);
    let t1 = pi.evaluate_refs(&[&ax, pi.value_at_basis(&[y, z])]);
    let t2 = pi.evaluate_refs(&[pi.value_at_basis(&[x, y]), &az]);
    let t3 = pi.evaluate_refs(&[&ay, pi.value_at_basis(&[x, z])]);
    sub3(t1, t2, t3)
}

fn expect_bilinear_on(space: &HomVectorSpace, pi: &Cochain, what: &str) {
    assert_eq!(pi.arity(), 2, "{what} must be bilinear");
    assert!(
        pi.sources().iter().all(|s| s == space) && pi.target() == space,
        "{what} must be an endomorphism-valued cochain on the given space"
    );
}

/// Verifies multiplicativity and the Hom-Leibniz identity of `pi` on all
/// basis triples. The identity is also recomputed as `[π, π] = 0`; the
/// two criteria must agree, which doubles as a self-test of the bracket.
pub fn check_hom_leibniz(space: &HomVectorSpace, pi: &Cochain) -> HomLeibnizReport {
    expect_bilinear_on(space, pi, "bracket");
    let d = space.dim();
    let mut witnesses = Vec::new();
    let mut violation_count = 0;
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let defect = leibniz_defect(space, pi, x, y, z);
                if defect.iter().any(|v| !v.is_zero()) {
                    violation_count += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(Witness { args: vec![x, y, z], value: defect });
                    }
                }
            }
        }
    }
    let identity_holds = violation_count == 0;
    let via_bracket = self_bracket(pi).expect("endomorphism-valued").is_zero();
    assert_eq!(
        identity_holds, via_bracket,
        "basis-triple identity and [pi,pi] = 0 disagree; bracket implementation is broken"
    );
    HomLeibnizReport {
        multiplicative: pi.is_equivariant(),
        identity_holds,
        witnesses,
        violation_count,
    }
}

/// Outcome of [`check_compatible`].
#[derive(Clone, Debug)]
pub struct CompatibilityReport {
    pub first: HomLeibnizReport,
    pub second: HomLeibnizReport,
    /// The mixed compatibility identity on all basis triples.
    pub mixed_identity_holds: bool,
    pub mixed_witnesses: Vec<Witness>,
    pub mixed_violation_count: usize,
}

impl CompatibilityReport {
    pub fn ok(&self) -> bool {
        self.first.ok() && self.second.ok() && self.mixed_identity_holds
    }
}

/// Mixed-compatibility defect at one basis triple: the difference of the
/// two sides of
/// `[αx,{y,z}] + {αx,[y,z]} = [{x,y},αz] + {[x,y],αz} + [αy,{x,z}] + {αy,[x,z]}`,
/// oriented so that it equals `[π₁, π₂](x, y, z)`.
fn mixed_defect(
    space: &HomVectorSpace,
    pi1: &Cochain,
    pi2: &Cochain,
    x: usize,
    y: usize,
    z: usize,
) -> Vec<Scalar> {
    let ax = space.twist().column(x);
    let ay = space.twist().column(y);
    let az = space.twist().column(z);
    let mut acc = vec![Scalar::zero(); space.dim()];
    let mut add = |v: Vec<Scalar>, sign: i8| {
        for (a, b) in acc.iter_mut().zip(v) {
            if sign > 0 {
                *a += b;
            } else {
                *a -= b;
            }
        }
    };
    add(pi1.evaluate_refs(&[pi2.value_at_basis(&[x, y]), &az]), 1);
    add(pi2.evaluate_refs(&[pi1.value_at_basis(&[x, y]), &az]), 1);
    add(pi1.evaluate_refs(&[&ay, pi2.value_at_basis(&[x, z])]), 1);
    add(pi2.evaluate_refs(&[&ay, pi1.value_at_basis(&[x, z])]), 1);
    add(pi1.evaluate_refs(&[&ax, pi2.value_at_basis(&[y, z])]), -1);
    add(pi2.evaluate_refs(&[&ax, pi1.value_at_basis(&[y, z])]), -1);
    acc
}

/// Verifies that `(pi1, pi2)` is a compatible pair: both brackets satisfy
/// the Hom-Leibniz axioms and the mixed identity holds. The mixed identity
/// is recomputed as `[π₁, π₂] = 0` and the two must agree.
pub fn check_compatible(space: &HomVectorSpace, pi1: &Cochain, pi2: &Cochain) -> CompatibilityReport {
    expect_bilinear_on(space, pi1, "first bracket");
    expect_bilinear_on(space, pi2, "second bracket");
    let first = check_hom_leibniz(space, pi1);
    let second = check_hom_leibniz(space, pi2);
    let d = space.dim();
    let mut mixed_witnesses = Vec::new();
    let mut mixed_violation_count = 0;
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let defect = mixed_defect(space, pi1, pi2, x, y, z);
                if defect.iter().any(|v| !v.is_zero()) {
                    mixed_violation_count += 1;
                    if mixed_witnesses.len() < MAX_WITNESSES {
                        mixed_witnesses.push(Witness { args: vec![x, y, z], value: defect });
                    }
                }
            }
        }
    }
    let mixed_identity_holds = mixed_violation_count == 0;
    let via_bracket = bracket(pi1, pi2).expect("same space").is_zero();
    assert_eq!(
        mixed_identity_holds, via_bracket,
        "mixed identity and [pi1,pi2] = 0 disagree; bracket implementation is broken"
    );
    CompatibilityReport {
        first,
        second,
        mixed_identity_holds,
        mixed_witnesses,
        mixed_violation_count,
    }
}

/// A multiplicative Hom-Leibniz algebra, valid by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLeibnizAlgebra {
    space: HomVectorSpace,
    pi: Cochain,
}

impl HomLeibnizAlgebra {
    pub fn new(space: HomVectorSpace, pi: Cochain) -> Result<Self> {
        let report = check_hom_leibniz(&space, &pi);
        if !report.ok() {
            return Err(Error::InvalidAlgebra(format!(
                "multiplicative: {}, identity violations: {}",
                report.multiplicative, report.violation_count
            )));
        }
        Ok(HomLeibnizAlgebra { space, pi })
    }

    pub fn space(&self) -> &HomVectorSpace {
        &self.space
    }

    pub fn pi(&self) -> &Cochain {
        &self.pi
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Two Hom-Leibniz brackets on one space whose mixed identity holds,
/// valid by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleHomLeibnizAlgebra {
    space: HomVectorSpace,
    pi1: Cochain,
    pi2: Cochain,
}

impl CompatibleHomLeibnizAlgebra {
    pub fn new(space: HomVectorSpace, pi1: Cochain, pi2: Cochain) -> Result<Self> {
        let report = check_compatible(&space, &pi1, &pi2);
        if !report.ok() {
            return Err(Error::InvalidAlgebra(format!(
                "bracket 1 ok: {}, bracket 2 ok: {}, mixed violations: {}",
                report.first.ok(),
                report.second.ok(),
                report.mixed_violation_count
            )));
        }
        Ok(CompatibleHomLeibnizAlgebra { space, pi1, pi2 })
    }

    pub fn space(&self) -> &HomVectorSpace {
        &self.space
    }

    pub fn pi1(&self) -> &Cochain {
        &self.pi1
    }

    pub fn pi2(&self) -> &Cochain {
        &self.pi2
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The constituent Hom-Leibniz algebra for one of the two brackets.
    pub fn algebra(&self, which: BracketChoice) -> HomLeibnizAlgebra {
        let pi = match which {
            BracketChoice::First => self.pi1.clone(),
            BracketChoice::Second => self.pi2.clone(),
        };
        HomLeibnizAlgebra { space: self.space.clone(), pi }
    }
}

/// Selects one of the two brackets of a compatible structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketChoice {
    First,
    Second,
}

/// A linear endomorphism of the underlying space (an `N` or a `φ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    space: HomVectorSpace,
    matrix: DenseMatrix,
}

impl LinearOperator {
    pub fn new(space: HomVectorSpace, matrix: DenseMatrix) -> Result<Self> {
        if matrix.rows() != space.dim() || matrix.cols() != space.dim() {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, space dimension is {}",
                matrix.rows(),
                matrix.cols(),
                space.dim()
            )));
        }
        Ok(LinearOperator { space, matrix })
    }

    pub fn identity(space: &HomVectorSpace) -> Self {
        LinearOperator {
            space: space.clone(),
            matrix: DenseMatrix::identity(space.dim()),
        }
    }

    pub fn zero(space: &HomVectorSpace) -> Self {
        LinearOperator {
            space: space.clone(),
            matrix: DenseMatrix::zeros(space.dim(), space.dim()),
        }
    }

    pub fn space(&self) -> &HomVectorSpace {
        &self.space
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v).expect("operator shape")
    }

    pub fn commutes_with_twist(&self) -> bool {
        let at = self.space.twist();
        at.mul(&self.matrix).expect("square") == self.matrix.mul(at).expect("square")
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.space.dim()
    }

    /// The operator viewed as an arity-1 cochain.
    pub fn as_cochain(&self) -> Cochain {
        let mut c = Cochain::zero_endo(&self.space, 1);
        for i in 0..self.space.dim() {
            for j in 0..self.space.dim() {
                c.set_coeff(&[i], j, self.matrix.get(j, i).clone());
            }
        }
        c
    }
}

/// `φ` is a homomorphism `A → B`: it intertwines the brackets on all basis
/// pairs and the twists as matrices.
pub fn check_homomorphism(phi: &LinearOperator, a: &HomLeibnizAlgebra, b: &HomLeibnizAlgebra) -> bool {
    assert_eq!(a.dim(), b.dim(), "homomorphism check requires equal dimensions");
    assert_eq!(phi.space().dim(), a.dim(), "operator dimension");
    let twists_commute = phi.matrix().mul(a.space().twist()).expect("square")
        == b.space().twist().mul(phi.matrix()).expect("square");
    if !twists_commute {
        return false;
    }
    intertwines(phi, a.pi(), b.pi())
}

/// `φ` is a homomorphism of compatible algebras: both brackets intertwine.
pub fn check_compatible_homomorphism(
    phi: &LinearOperator,
    a: &CompatibleHomLeibnizAlgebra,
    b: &CompatibleHomLeibnizAlgebra,
) -> bool {
    assert_eq!(a.dim(), b.dim(), "homomorphism check requires equal dimensions");
    let twists_commute = phi.matrix().mul(a.space().twist()).expect("square")
        == b.space().twist().mul(phi.matrix()).expect("square");
    twists_commute && intertwines(phi, a.pi1(), b.pi1()) && intertwines(phi, a.pi2(), b.pi2())
}

fn intertwines(phi: &LinearOperator, pi_a: &Cochain, pi_b: &Cochain) -> bool {
    let d = phi.space().dim();
    for x in 0..d {
        for y in 0..d {
            let lhs = phi.apply(pi_a.value_at_basis(&[x, y]));
            let px = phi.matrix().column(x);
            let py = phi.matrix().column(y);
            let rhs = pi_b.evaluate_refs(&[&px, &py]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The Hom-Leibniz algebra with bracket `k1·π₁ + k2·π₂`; valid for every
/// choice of coefficients when the input pair is compatible.
pub fn combined_bracket(
    c: &CompatibleHomLeibnizAlgebra,
    k1: &Scalar,
    k2: &Scalar,
) -> HomLeibnizAlgebra {
    let combined = c
        .pi1()
        .scale(k1)
        .add(&c.pi2().scale(k2))
        .expect("same shape");
    HomLeibnizAlgebra::new(c.space().clone(), combined)
        .expect("linear combination of a compatible pair is Hom-Leibniz")
}

/// Deformed bracket tensor without the twist-commutation gate; also
/// asserts the identity `[x,y]_N = [π, N̄](x,y)`.
fn deformed_tensor(space: &HomVectorSpace, pi: &Cochain, n: &LinearOperator) -> Cochain {
    let d = space.dim();
    let mut out = Cochain::zero_endo(space, 2);
    for i in 0..d {
        for j in 0..d {
            let ei = space.basis_vector(i);
            let ej = space.basis_vector(j);
            let ni = n.matrix().column(i);
            let nj = n.matrix().column(j);
            let t1 = pi.evaluate_refs(&[&ei, &nj]);
            let t2 = pi.evaluate_refs(&[&ni, &ej]);
            let t3 = n.apply(pi.value_at_basis(&[i, j]));
            for (k, ((a, b), c)) in t1.into_iter().zip(t2).zip(t3).enumerate() {
                out.set_coeff(&[i, j], k, a + b - c);
            }
        }
    }
    let via_bracket = bracket(pi, &n.as_cochain()).expect("same space");
    assert_eq!(
        out, via_bracket,
        "directly expanded deformed bracket disagrees with [pi, N]; bracket implementation is broken"
    );
    out
}

/// The bracket `[x,y]_N = [x, Ny] + [Nx, y] - N[x,y]`.
///
/// Requires `N` to commute with the twist, so that the result is again
/// multiplicative.
pub fn deformed_bracket(a: &HomLeibnizAlgebra, n: &LinearOperator) -> Result<Cochain> {
    if n.space() != a.space() {
        return Err(Error::SpaceMismatch);
    }
    if !n.commutes_with_twist() {
        return Err(Error::TwistMismatch);
    }
    Ok(deformed_tensor(a.space(), a.pi(), n))
}

/// The torsion `T(x,y) = N([x,y]_N) - [Nx, Ny]`; `N` is a Nijenhuis
/// operator for this bracket exactly when the torsion vanishes.
pub fn nijenhuis_torsion(a: &HomLeibnizAlgebra, n: &LinearOperator) -> Result<Cochain> {
    if n.space() != a.space() {
        return Err(Error::SpaceMismatch);
    }
    if !n.commutes_with_twist() {
        return Err(Error::TwistMismatch);
    }
    Ok(torsion_tensor(a.space(), a.pi(), n))
}

fn torsion_tensor(space: &HomVectorSpace, pi: &Cochain, n: &LinearOperator) -> Cochain {
    let deformed = deformed_tensor(space, pi, n);
    let d = space.dim();
    let mut out = Cochain::zero_endo(space, 2);
    for i in 0..d {
        for j in 0..d {
            let t1 = n.apply(deformed.value_at_basis(&[i, j]));
            let ni = n.matrix().column(i);
            let nj = n.matrix().column(j);
            let t2 = pi.evaluate_refs(&[&ni, &nj]);
            for (k, (a_v, b_v)) in t1.into_iter().zip(t2).enumerate() {
                out.set_coeff(&[i, j], k, a_v - b_v);
            }
        }
    }
    out
}

fn first_nonzero_witness(t: &Cochain, d: usize) -> Option<Witness> {
    for i in 0..d {
        for j in 0..d {
            let v = t.value_at_basis(&[i, j]);
            if v.iter().any(|x| !x.is_zero()) {
                return Some(Witness { args: vec![i, j], value: v.to_vec() });
            }
        }
    }
    None
}

/// Outcome of [`is_nijenhuis`].
#[derive(Clone, Debug)]
pub struct NijenhuisReport {
    pub commutes_with_twist: bool,
    pub torsion1_zero: bool,
    pub torsion2_zero: bool,
    /// `T_{k1 π1 + k2 π2} = k1 T_{π1} + k2 T_{π2}` for the spot-checked
    /// coefficient pairs; an identity, so always expected to hold.
    pub combination_consistent: bool,
    pub torsion1_witness: Option<Witness>,
    pub torsion2_witness: Option<Witness>,
}

impl NijenhuisReport {
    pub fn ok(&self) -> bool {
        self.commutes_with_twist && self.torsion1_zero && self.torsion2_zero
    }
}

/// `N` is a Nijenhuis operator on a compatible pair when it commutes with
/// the twist and its torsion vanishes for both brackets. The torsion of
/// `k1 π1 + k2 π2` is spot-checked against `k1 T1 + k2 T2` for
/// `(k1,k2) ∈ {(1,1), (2,-3)}`.
pub fn is_nijenhuis(c: &CompatibleHomLeibnizAlgebra, n: &LinearOperator) -> NijenhuisReport {
    assert_eq!(n.space(), c.space(), "operator must live on the algebra's space");
    let d = c.dim();
    let t1 = torsion_tensor(c.space(), c.pi1(), n);
    let t2 = torsion_tensor(c.space(), c.pi2(), n);

    let mut combination_consistent = true;
    for (k1, k2) in [(1i64, 1i64), (2, -3)] {
        let k1 = crate::scalar::rat(k1);
        let k2 = crate::scalar::rat(k2);
        let combined = c.pi1().scale(&k1).add(&c.pi2().scale(&k2)).expect("same shape");
        let t_combined = torsion_tensor(c.space(), &combined, n);
        let expected = t1.scale(&k1).add(&t2.scale(&k2)).expect("same shape");
        if t_combined != expected {
            combination_consistent = false;
        }
    }

    NijenhuisReport {
        commutes_with_twist: n.commutes_with_twist(),
        torsion1_zero: t1.is_zero(),
        torsion2_zero: t2.is_zero(),
        combination_consistent,
        torsion1_witness: first_nonzero_witness(&t1, d),
        torsion2_witness: first_nonzero_witness(&t2, d),
    }
}

/// Deforms both brackets along a Nijenhuis operator. The result is again
/// a compatible Hom-Leibniz algebra and `N` is a homomorphism from the
/// deformed algebra back to the original one; both facts are asserted.
pub fn nijenhuis_deform(
    c: &CompatibleHomLeibnizAlgebra,
    n: &LinearOperator,
) -> Result<CompatibleHomLeibnizAlgebra> {
    let report = is_nijenhuis(c, n);
    if !report.ok() {
        return Err(Error::NotNijenhuis(format!(
            "commutes with twist: {}, torsion 1 zero: {}, torsion 2 zero: {}",
            report.commutes_with_twist, report.torsion1_zero, report.torsion2_zero
        )));
    }
    let mu = deformed_tensor(c.space(), c.pi1(), n);
    let m = deformed_tensor(c.space(), c.pi2(), n);
    let deformed = CompatibleHomLeibnizAlgebra::new(c.space().clone(), mu, m)
        .expect("Nijenhuis deformation preserves compatibility");
    assert!(
        check_compatible_homomorphism(n, &deformed, c),
        "Nijenhuis operator must be a homomorphism from the deformed algebra"
    );
    Ok(deformed)
}
