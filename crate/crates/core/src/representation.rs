//! Bimodules over (compatible) Hom-Leibniz algebras, semidirect products,
//! lifts into the direct-sum space and the bidegree calculus, plus the
//! Maurer-Cartan characterization of representations.

use num_traits::Zero;

use crate::balavoine::{bracket, self_bracket};
use crate::cochain::{multi_indices, Cochain};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::HomVectorSpace;
use crate::structures::{
    CompatibleHomLeibnizAlgebra, HomLeibnizAlgebra, Witness, MAX_WITNESSES,
};

/// Which block of a direct sum `L ⊕ M` a tensor slot or output lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Base,
    Coeff,
}

/// The five bimodule laws, used to label witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimoduleAxiom {
    LeftEquivariance,
    RightEquivariance,
    /// `m_L(αx, m_L(y, m)) = m_L([x,y], βm) + m_L(αy, m_L(x, m))`
    LeftAction,
    /// `m_L(αx, m_R(m, y)) = m_R(m_L(x, m), αy) + m_R(βm, [x,y])`
    MixedAction,
    /// `m_R(βm, [x,y]) = m_R(m_R(m, x), αy) + m_L(αx, m_R(m, y))`
    RightAction,
}

/// The three extra compatibility laws of a compatible bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatibilityAxiom {
    Llm,
    Lml,
    Mll,
}

#[derive(Clone, Debug)]
pub struct BimoduleReport {
    pub left_equivariant: bool,
    pub right_equivariant: bool,
    pub left_action_holds: bool,
    pub mixed_action_holds: bool,
    pub right_action_holds: bool,
    pub witnesses: Vec<(BimoduleAxiom, Witness)>,
    pub violation_count: usize,
}

impl BimoduleReport {
    pub fn ok(&self) -> bool {
        self.left_equivariant
            && self.right_equivariant
            && self.left_action_holds
            && self.mixed_action_holds
            && self.right_action_holds
    }
}

fn expect_action_shapes(
    base: &HomVectorSpace,
    coeff: &HomVectorSpace,
    left: &Cochain,
    right: &Cochain,
) {
    assert_eq!(
        left.sources(),
        &[base.clone(), coeff.clone()],
        "left action must map L ⊗ M"
    );
    assert_eq!(left.target(), coeff, "left action must land in M");
    assert_eq!(
        right.sources(),
        &[coeff.clone(), base.clone()],
        "right action must map M ⊗ L"
    );
    assert_eq!(right.target(), coeff, "right action must land in M");
}

/// Verifies the five bimodule laws of `(coeff, left, right)` over `base`
/// on every basis triple.
pub fn check_bimodule(
    base: &HomLeibnizAlgebra,
    coeff: &HomVectorSpace,
    left: &Cochain,
    right: &Cochain,
) -> BimoduleReport {
    expect_action_shapes(base.space(), coeff, left, right);
    let d = base.dim();
    let m = coeff.dim();
    let alpha = base.space().twist();
    let beta = coeff.twist();
    let pi = base.pi();

    let mut witnesses = Vec::new();
    let mut violation_count = 0;
    let record = |axiom: BimoduleAxiom, args: Vec<usize>, defect: Vec<Scalar>,
                      witnesses: &mut Vec<(BimoduleAxiom, Witness)>,
                      violation_count: &mut usize|
     -> bool {
        if defect.iter().all(Zero::is_zero) {
            return true;
        }
        *violation_count += 1;
        if witnesses.len() < MAX_WITNESSES {
            witnesses.push((axiom, Witness { args, value: defect }));
        }
        false
    };

    let left_equivariant = left.is_equivariant();
    let right_equivariant = right.is_equivariant();

    let mut left_action_holds = true;
    let mut mixed_action_holds = true;
    let mut right_action_holds = true;

    for x in 0..d {
        for y in 0..d {
            for w in 0..m {
                // m_L(αx, m_L(y, w)) - m_L([x,y], βw) - m_L(αy, m_L(x, w))
                let t1 = left.evaluate_refs(&[&alpha.column(x), left.value_at_basis(&[y, w])]);
                let t2 = left.evaluate_refs(&[pi.value_at_basis(&[x, y]), &beta.column(w)]);
                let t3 = left.evaluate_refs(&[&alpha.column(y), left.value_at_basis(&[x, w])]);
                let defect: Vec<Scalar> =
                    t1.into_iter().zip(t2).zip(t3).map(|((a, b), c)| a - b - c).collect();
                left_action_holds &= record(
                    BimoduleAxiom::LeftAction,
                    vec![x, y, w],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }
    for x in 0..d {
        for w in 0..m {
            for y in 0..d {
                // m_L(αx, m_R(w, y)) - m_R(m_L(x, w), αy) - m_R(βw, [x,y])
                let t1 = left.evaluate_refs(&[&alpha.column(x), right.value_at_basis(&[w, y])]);
                let t2 = right.evaluate_refs(&[left.value_at_basis(&[x, w]), &alpha.column(y)]);
                let t3 = right.evaluate_refs(&[&beta.column(w), pi.value_at_basis(&[x, y])]);
                let defect: Vec<Scalar> =
                    t1.into_iter().zip(t2).zip(t3).map(|((a, b), c)| a - b - c).collect();
                mixed_action_holds &= record(
                    BimoduleAxiom::MixedAction,
                    vec![x, w, y],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }
    for w in 0..m {
        for x in 0..d {
            for y in 0..d {
                // m_R(βw, [x,y]) - m_R(m_R(w, x), αy) - m_L(αx, m_R(w, y))
                let t1 = right.evaluate_refs(&[&beta.column(w), pi.value_at_basis(&[x, y])]);
                let t2 = right.evaluate_refs(&[right.value_at_basis(&[w, x]), &alpha.column(y)]);
                let t3 = left.evaluate_refs(&[&alpha.column(x), right.value_at_basis(&[w, y])]);
                let defect: Vec<Scalar> =
                    t1.into_iter().zip(t2).zip(t3).map(|((a, b), c)| a - b - c).collect();
                right_action_holds &= record(
                    BimoduleAxiom::RightAction,
                    vec![w, x, y],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }
    if !left_equivariant {
        violation_count += 1;
    }
    if !right_equivariant {
        violation_count += 1;
    }

    BimoduleReport {
        left_equivariant,
        right_equivariant,
        left_action_holds,
        mixed_action_holds,
        right_action_holds,
        witnesses,
        violation_count,
    }
}

/// A bimodule over a Hom-Leibniz algebra, valid by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    base: HomLeibnizAlgebra,
    coeff: HomVectorSpace,
    left: Cochain,
    right: Cochain,
}

impl Bimodule {
    pub fn new(
        base: HomLeibnizAlgebra,
        coeff: HomVectorSpace,
        left: Cochain,
        right: Cochain,
    ) -> Result<Self> {
        let report = check_bimodule(&base, &coeff, &left, &right);
        if !report.ok() {
            return Err(Error::InvalidBimodule(format!(
                "{} violations",
                report.violation_count
            )));
        }
        Ok(Bimodule { base, coeff, left, right })
    }

    pub fn base(&self) -> &HomLeibnizAlgebra {
        &self.base
    }

    pub fn coeff(&self) -> &HomVectorSpace {
        &self.coeff
    }

    pub fn left(&self) -> &Cochain {
        &self.left
    }

    pub fn right(&self) -> &Cochain {
        &self.right
    }
}

#[derive(Clone, Debug)]
pub struct CompatibleBimoduleReport {
    pub first: BimoduleReport,
    pub second: BimoduleReport,
    pub llm_holds: bool,
    pub lml_holds: bool,
    pub mll_holds: bool,
    pub witnesses: Vec<(CompatibilityAxiom, Witness)>,
    pub violation_count: usize,
}

impl CompatibleBimoduleReport {
    pub fn ok(&self) -> bool {
        self.first.ok() && self.second.ok() && self.llm_holds && self.lml_holds && self.mll_holds
    }
}

/// Verifies both constituent bimodules plus the three compatibility laws
/// on every basis triple.
pub fn check_compatible_bimodule(
    base: &CompatibleHomLeibnizAlgebra,
    coeff: &HomVectorSpace,
    left1: &Cochain,
    right1: &Cochain,
    left2: &Cochain,
    right2: &Cochain,
) -> CompatibleBimoduleReport {
    use crate::structures::BracketChoice;
    let first = check_bimodule(&base.algebra(BracketChoice::First), coeff, left1, right1);
    let second = check_bimodule(&base.algebra(BracketChoice::Second), coeff, left2, right2);

    let d = base.dim();
    let m = coeff.dim();
    let alpha = base.space().twist();
    let beta = coeff.twist();
    let pi1 = base.pi1();
    let pi2 = base.pi2();

    let mut witnesses = Vec::new();
    let mut violation_count = 0;
    let record = |axiom: CompatibilityAxiom,
                      args: Vec<usize>,
                      defect: Vec<Scalar>,
                      witnesses: &mut Vec<(CompatibilityAxiom, Witness)>,
                      violation_count: &mut usize|
     -> bool {
        if defect.iter().all(Zero::is_zero) {
            return true;
        }
        *violation_count += 1;
        if witnesses.len() < MAX_WITNESSES {
            witnesses.push((axiom, Witness { args, value: defect }));
        }
        false
    };

    let combine = |plus: Vec<Vec<Scalar>>, minus: Vec<Vec<Scalar>>| -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); m];
        for v in plus {
            for (a, b) in acc.iter_mut().zip(v) {
                *a += b;
            }
        }
        for v in minus {
            for (a, b) in acc.iter_mut().zip(v) {
                *a -= b;
            }
        }
        acc
    };

    let mut llm_holds = true;
    let mut lml_holds = true;
    let mut mll_holds = true;

    for x in 0..d {
        for y in 0..d {
            for w in 0..m {
                let ax = alpha.column(x);
                let ay = alpha.column(y);
                let bw = beta.column(w);
                let defect = combine(
                    vec![
                        left1.evaluate_refs(&[&ax, left2.value_at_basis(&[y, w])]),
                        left2.evaluate_refs(&[&ax, left1.value_at_basis(&[y, w])]),
                    ],
                    vec![
                        left1.evaluate_refs(&[pi2.value_at_basis(&[x, y]), &bw]),
                        left2.evaluate_refs(&[pi1.value_at_basis(&[x, y]), &bw]),
                        left1.evaluate_refs(&[&ay, left2.value_at_basis(&[x, w])]),
                        left2.evaluate_refs(&[&ay, left1.value_at_basis(&[x, w])]),
                    ],
                );
                llm_holds &= record(
                    CompatibilityAxiom::Llm,
                    vec![x, y, w],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }
    for x in 0..d {
        for w in 0..m {
            for y in 0..d {
                let ax = alpha.column(x);
                let ay = alpha.column(y);
                let bw = beta.column(w);
                let defect = combine(
                    vec![
                        left1.evaluate_refs(&[&ax, right2.value_at_basis(&[w, y])]),
                        left2.evaluate_refs(&[&ax, right1.value_at_basis(&[w, y])]),
                    ],
                    vec![
                        right1.evaluate_refs(&[left2.value_at_basis(&[x, w]), &ay]),
                        right2.evaluate_refs(&[left1.value_at_basis(&[x, w]), &ay]),
                        right1.evaluate_refs(&[&bw, pi2.value_at_basis(&[x, y])]),
                        right2.evaluate_refs(&[&bw, pi1.value_at_basis(&[x, y])]),
                    ],
                );
                lml_holds &= record(
                    CompatibilityAxiom::Lml,
                    vec![x, w, y],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }
    for w in 0..m {
        for x in 0..d {
            for y in 0..d {
                let ax = alpha.column(x);
                let ay = alpha.column(y);
                let bw = beta.column(w);
                let defect = combine(
                    vec![
                        right1.evaluate_refs(&[&bw, pi2.value_at_basis(&[x, y])]),
                        right2.evaluate_refs(&[&bw, pi1.value_at_basis(&[x, y])]),
                    ],
                    vec![
                        right1.evaluate_refs(&[right2.value_at_basis(&[w, x]), &ay]),
                        right2.evaluate_refs(&[right1.value_at_basis(&[w, x]), &ay]),
                        left1.evaluate_refs(&[&ax, right2.value_at_basis(&[w, y])]),
                        left2.evaluate_refs(&[&ax, right1.value_at_basis(&[w, y])]),
                    ],
                );
                mll_holds &= record(
                    CompatibilityAxiom::Mll,
                    vec![w, x, y],
                    defect,
                    &mut witnesses,
                    &mut violation_count,
                );
            }
        }
    }

    CompatibleBimoduleReport {
        first,
        second,
        llm_holds,
        lml_holds,
        mll_holds,
        witnesses,
        violation_count,
    }
}

/// A compatible bimodule, valid by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibleBimodule {
    base: CompatibleHomLeibnizAlgebra,
    coeff: HomVectorSpace,
    left1: Cochain,
    right1: Cochain,
    left2: Cochain,
    right2: Cochain,
}

impl CompatibleBimodule {
    pub fn new(
        base: CompatibleHomLeibnizAlgebra,
        coeff: HomVectorSpace,
        left1: Cochain,
        right1: Cochain,
        left2: Cochain,
        right2: Cochain,
    ) -> Result<Self> {
        let report = check_compatible_bimodule(&base, &coeff, &left1, &right1, &left2, &right2);
        if !report.ok() {
            return Err(Error::InvalidBimodule(format!(
                "first ok: {}, second ok: {}, compatibility violations: {}",
                report.first.ok(),
                report.second.ok(),
                report.violation_count
            )));
        }
        Ok(CompatibleBimodule { base, coeff, left1, right1, left2, right2 })
    }

    pub fn base(&self) -> &CompatibleHomLeibnizAlgebra {
        &self.base
    }

    pub fn coeff(&self) -> &HomVectorSpace {
        &self.coeff
    }

    pub fn left1(&self) -> &Cochain {
        &self.left1
    }

    pub fn right1(&self) -> &Cochain {
        &self.right1
    }

    pub fn left2(&self) -> &Cochain {
        &self.left2
    }

    pub fn right2(&self) -> &Cochain {
        &self.right2
    }

    /// The constituent single bimodule for one bracket.
    pub fn bimodule(&self, which: crate::structures::BracketChoice) -> Bimodule {
        use crate::structures::BracketChoice;
        let (left, right) = match which {
            BracketChoice::First => (self.left1.clone(), self.right1.clone()),
            BracketChoice::Second => (self.left2.clone(), self.right2.clone()),
        };
        Bimodule {
            base: self.base.algebra(which),
            coeff: self.coeff.clone(),
            left,
            right,
        }
    }
}

/// Semidirect-product bracket on `L ⊕ M` from one bracket and one action
/// pair: `[(x,u),(y,v)] = ([x,y], m_L(x,v) + m_R(u,y))`.
fn semidirect_bracket(
    sum: &HomVectorSpace,
    d: usize,
    pi: &Cochain,
    left: &Cochain,
    right: &Cochain,
) -> Cochain {
    let total = sum.dim();
    let mut out = Cochain::zero_endo(sum, 2);
    for i in 0..total {
        for j in 0..total {
            match (i < d, j < d) {
                (true, true) => {
                    for (k, v) in pi.value_at_basis(&[i, j]).iter().enumerate() {
                        out.set_coeff(&[i, j], k, v.clone());
                    }
                }
                (true, false) => {
                    for (k, v) in left.value_at_basis(&[i, j - d]).iter().enumerate() {
                        out.set_coeff(&[i, j], d + k, v.clone());
                    }
                }
                (false, true) => {
                    for (k, v) in right.value_at_basis(&[i - d, j]).iter().enumerate() {
                        out.set_coeff(&[i, j], d + k, v.clone());
                    }
                }
                (false, false) => {}
            }
        }
    }
    out
}

/// Semidirect product of a bimodule: the Hom-Leibniz algebra on `L ⊕ M`
/// with twist `α ⊕ β`. Ordered base block first.
pub fn semidirect_single(b: &Bimodule) -> HomLeibnizAlgebra {
    let sum = b.base().space().direct_sum(b.coeff());
    let pi = semidirect_bracket(&sum, b.base().dim(), b.base().pi(), b.left(), b.right());
    HomLeibnizAlgebra::new(sum, pi).expect("semidirect product of a bimodule is Hom-Leibniz")
}

/// Semidirect product of a compatible bimodule: the compatible algebra on
/// `L ⊕ M` with both induced brackets.
pub fn semidirect(cb: &CompatibleBimodule) -> CompatibleHomLeibnizAlgebra {
    let sum = cb.base().space().direct_sum(cb.coeff());
    let d = cb.base().dim();
    let pi1 = semidirect_bracket(&sum, d, cb.base().pi1(), cb.left1(), cb.right1());
    let pi2 = semidirect_bracket(&sum, d, cb.base().pi2(), cb.left2(), cb.right2());
    CompatibleHomLeibnizAlgebra::new(sum, pi1, pi2)
        .expect("semidirect product of a compatible bimodule is compatible")
}

/// Extension by zero of a mixed-slot map into the direct-sum space.
///
/// `tags[t]` says which block slot `t` of `f` embeds into and `out` where
/// the output lands; the result is an endomorphism-valued cochain on
/// `L ⊕ M` supported on exactly that block pattern.
pub fn lift(
    f: &Cochain,
    tags: &[Block],
    out: Block,
    base: &HomVectorSpace,
    coeff: &HomVectorSpace,
) -> Cochain {
    assert_eq!(tags.len(), f.arity(), "one tag per slot");
    for (t, tag) in tags.iter().enumerate() {
        let expected = match tag {
            Block::Base => base,
            Block::Coeff => coeff,
        };
        assert_eq!(&f.sources()[t], expected, "slot {t} space mismatch");
    }
    let out_space = match out {
        Block::Base => base,
        Block::Coeff => coeff,
    };
    assert_eq!(f.target(), out_space, "output space mismatch");

    let d = base.dim();
    let sum = base.direct_sum(coeff);
    let mut lifted = Cochain::zero_endo(&sum, f.arity());
    let dims: Vec<usize> = f.sources().iter().map(HomVectorSpace::dim).collect();
    let out_offset = match out {
        Block::Base => 0,
        Block::Coeff => d,
    };
    for idx in multi_indices(&dims) {
        let mapped: Vec<usize> = idx
            .iter()
            .zip(tags)
            .map(|(&i, tag)| match tag {
                Block::Base => i,
                Block::Coeff => d + i,
            })
            .collect();
        for (j, v) in f.value_at_basis(&idx).iter().enumerate() {
            if !v.is_zero() {
                lifted.set_coeff(&mapped, out_offset + j, v.clone());
            }
        }
    }
    lifted
}

/// Restricts an endomorphism-valued cochain on `L ⊕ M` to base-block
/// inputs and the coefficient-block output, producing a map `L^⊗n → M`.
pub fn restrict_to_coeff_output(
    f: &Cochain,
    base: &HomVectorSpace,
    coeff: &HomVectorSpace,
) -> Cochain {
    let d = base.dim();
    let m = coeff.dim();
    assert_eq!(f.target().dim(), d + m, "cochain must live on the sum space");
    let n = f.arity();
    let mut out = Cochain::zero(vec![base.clone(); n], coeff.clone());
    for idx in multi_indices(&vec![d; n]) {
        for j in 0..m {
            let v = f.coeff(&idx, d + j);
            if !v.is_zero() {
                out.set_coeff(&idx, j, v.clone());
            }
        }
    }
    out
}

/// Bidegree `l|k` of a homogeneous map on a direct sum, with
/// `l + k + 1 = arity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bidegree {
    pub l: i64,
    pub k: i64,
}

/// Whether `f` (endomorphism-valued on a space split as `d + m`) is
/// homogeneous of bidegree `l|k`: inputs with `l+1` base slots map into
/// the base block, inputs with `l` base slots map into the coefficient
/// block, and everything else vanishes.
pub fn has_bidegree(f: &Cochain, split: (usize, usize), l: i64, k: i64) -> bool {
    let (d, m) = split;
    let n = f.arity();
    assert_eq!(f.target().dim(), d + m, "split must match the space");
    if l < -1 || k < -1 || l + k + 1 != n as i64 {
        return false;
    }
    for idx in multi_indices(&vec![d + m; n]) {
        let base_slots = idx.iter().filter(|&&i| i < d).count() as i64;
        let coeff_slots = n as i64 - base_slots;
        for j in 0..d + m {
            if f.coeff(&idx, j).is_zero() {
                continue;
            }
            let out_is_base = j < d;
            let allowed = if base_slots == l + 1 && coeff_slots == k {
                out_is_base
            } else if base_slots == l && coeff_slots == k + 1 {
                !out_is_base
            } else {
                false
            };
            if !allowed {
                return false;
            }
        }
    }
    true
}

/// The bidegree of `f` if it is homogeneous, scanning `l` upwards from
/// `-1`. The zero map is homogeneous of every bidegree and reports the
/// first candidate.
pub fn bidegree_of(f: &Cochain, split: (usize, usize)) -> Option<Bidegree> {
    let n = f.arity() as i64;
    (-1..=n)
        .map(|l| Bidegree { l, k: n - 1 - l })
        .find(|b| has_bidegree(f, split, b.l, b.k))
}

/// The lifted structure element `Π = π̂ + m̂_L + m̂_R` on `L ⊕ M`.
pub fn lifted_structure(
    base: &HomVectorSpace,
    pi: &Cochain,
    coeff: &HomVectorSpace,
    left: &Cochain,
    right: &Cochain,
) -> Cochain {
    let pi_hat = lift(pi, &[Block::Base, Block::Base], Block::Base, base, coeff);
    let left_hat = lift(left, &[Block::Base, Block::Coeff], Block::Coeff, base, coeff);
    let right_hat = lift(right, &[Block::Coeff, Block::Base], Block::Coeff, base, coeff);
    pi_hat
        .add(&left_hat)
        .and_then(|s| s.add(&right_hat))
        .expect("lifts share the sum space")
}

#[derive(Clone, Debug)]
pub struct McReport {
    /// Both lifted actions are `α ⊕ β`-equivariant (the two equivariance
    /// laws of a bimodule).
    pub actions_equivariant: bool,
    /// `[Π, Π] = 0` for `Π = π̂ + m̂_L + m̂_R` (the three action laws,
    /// given that the base satisfies the Hom-Leibniz identity).
    pub mc_equation_holds: bool,
}

impl McReport {
    pub fn ok(&self) -> bool {
        self.actions_equivariant && self.mc_equation_holds
    }
}

/// Maurer-Cartan characterization of a representation: agrees with
/// [`check_bimodule`] whenever the base is a Hom-Leibniz algebra.
pub fn check_representation_mc(
    base: &HomLeibnizAlgebra,
    coeff: &HomVectorSpace,
    left: &Cochain,
    right: &Cochain,
) -> McReport {
    expect_action_shapes(base.space(), coeff, left, right);
    let big = lifted_structure(base.space(), base.pi(), coeff, left, right);
    McReport {
        actions_equivariant: left.is_equivariant() && right.is_equivariant(),
        mc_equation_holds: self_bracket(&big).expect("endomorphism-valued").is_zero(),
    }
}

#[derive(Clone, Debug)]
pub struct CompatibleMcReport {
    pub actions_equivariant: bool,
    pub mc1_holds: bool,
    pub mc2_holds: bool,
    pub mixed_holds: bool,
}

impl CompatibleMcReport {
    pub fn ok(&self) -> bool {
        self.actions_equivariant && self.mc1_holds && self.mc2_holds && self.mixed_holds
    }
}

/// Maurer-Cartan characterization of a compatible representation: the pair
/// `(Π₁, Π₂)` must satisfy `[Π₁,Π₁] = [Π₂,Π₂] = [Π₁,Π₂] = 0`. Agrees with
/// [`check_compatible_bimodule`] whenever the base pair is compatible.
pub fn check_compatible_representation_mc(
    base: &CompatibleHomLeibnizAlgebra,
    coeff: &HomVectorSpace,
    left1: &Cochain,
    right1: &Cochain,
    left2: &Cochain,
    right2: &Cochain,
) -> CompatibleMcReport {
    let big1 = lifted_structure(base.space(), base.pi1(), coeff, left1, right1);
    let big2 = lifted_structure(base.space(), base.pi2(), coeff, left2, right2);
    CompatibleMcReport {
        actions_equivariant: left1.is_equivariant()
            && right1.is_equivariant()
            && left2.is_equivariant()
            && right2.is_equivariant(),
        mc1_holds: self_bracket(&big1).expect("endomorphism-valued").is_zero(),
        mc2_holds: self_bracket(&big2).expect("endomorphism-valued").is_zero(),
        mixed_holds: bracket(&big1, &big2).expect("same space").is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        adjoint_bimodule, adjoint_compatible_bimodule, compatible_pair_dim2, nilpotent_dim2,
        zero_action_bimodule,
    };
    use crate::scalar::rat;
    use crate::structures::{check_compatible, check_hom_leibniz};

    #[test]
    fn adjoint_actions_form_a_bimodule() {
        let e2 = nilpotent_dim2();
        let b = adjoint_bimodule(&e2);
        let report = check_bimodule(b.base(), b.coeff(), b.left(), b.right());
        assert!(report.ok());
        assert_eq!(report.violation_count, 0);
    }

    #[test]
    fn zero_actions_form_a_bimodule() {
        let e2 = nilpotent_dim2();
        let coeff = HomVectorSpace::with_identity_twist(2);
        let left = Cochain::zero(vec![e2.space().clone(), coeff.clone()], coeff.clone());
        let right = Cochain::zero(vec![coeff.clone(), e2.space().clone()], coeff.clone());
        assert!(check_bimodule(&e2, &coeff, &left, &right).ok());
    }

    #[test]
    fn scaled_right_action_stays_valid_on_nilpotent_fixture() {
        // With [e2,e2] = e1 every composed action vanishes, so doubling m_R
        // keeps all five laws; the MC route must agree with the direct one.
        let e2 = nilpotent_dim2();
        let b = adjoint_bimodule(&e2);
        let doubled = b.right().scale(&rat(2));
        let direct = check_bimodule(b.base(), b.coeff(), b.left(), &doubled);
        let mc = check_representation_mc(b.base(), b.coeff(), b.left(), &doubled);
        assert!(direct.ok());
        assert_eq!(direct.ok(), mc.ok());
    }

    #[test]
    fn broken_action_is_caught_and_agrees_with_mc() {
        // base {e2, e1} = e1 composes nontrivially; zeroing the left action
        // breaks the right-action law
        let e4 = compatible_pair_dim2();
        let base = e4.algebra(crate::structures::BracketChoice::Second);
        let zero_left = Cochain::zero(
            vec![base.space().clone(), base.space().clone()],
            base.space().clone(),
        );
        let report = check_bimodule(&base, base.space(), &zero_left, base.pi());
        assert!(!report.ok());
        assert!(!report.right_action_holds);
        let mc = check_representation_mc(&base, base.space(), &zero_left, base.pi());
        assert_eq!(report.ok(), mc.ok());
        assert!(!mc.mc_equation_holds);
    }

    #[test]
    fn compatible_adjoint_bimodule_verifies() {
        let e4 = compatible_pair_dim2();
        let cb = adjoint_compatible_bimodule(&e4);
        let report = check_compatible_bimodule(
            cb.base(),
            cb.coeff(),
            cb.left1(),
            cb.right1(),
            cb.left2(),
            cb.right2(),
        );
        assert!(report.ok());
        let mc = check_compatible_representation_mc(
            cb.base(),
            cb.coeff(),
            cb.left1(),
            cb.right1(),
            cb.left2(),
            cb.right2(),
        );
        assert!(mc.ok());
    }

    #[test]
    fn zeroed_second_left_action_fails_and_agrees_with_mc() {
        let e4 = compatible_pair_dim2();
        let cb = adjoint_compatible_bimodule(&e4);
        let zero_left2 = Cochain::zero(
            vec![e4.space().clone(), e4.space().clone()],
            e4.space().clone(),
        );
        let report = check_compatible_bimodule(
            cb.base(),
            cb.coeff(),
            cb.left1(),
            cb.right1(),
            &zero_left2,
            cb.right2(),
        );
        assert!(!report.ok());
        let mc = check_compatible_representation_mc(
            cb.base(),
            cb.coeff(),
            cb.left1(),
            cb.right1(),
            &zero_left2,
            cb.right2(),
        );
        assert_eq!(report.ok(), mc.ok());
    }

    #[test]
    fn semidirect_of_zero_actions_vanishes_on_coefficient_block() {
        let e4 = compatible_pair_dim2();
        let cb = zero_action_bimodule(&e4, 1);
        let s = semidirect(&cb);
        assert_eq!(s.dim(), 3);
        assert!(check_compatible(s.space(), s.pi1(), s.pi2()).ok());
        // brackets vanish whenever a coefficient-block vector is involved
        for i in 0..3 {
            assert!(s.pi1().value_at_basis(&[i, 2]).iter().all(num_traits::Zero::is_zero));
            assert!(s.pi1().value_at_basis(&[2, i]).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn semidirect_of_adjoint_bimodules() {
        let e4 = compatible_pair_dim2();
        let s = semidirect(&adjoint_compatible_bimodule(&e4));
        assert_eq!(s.dim(), 4);
        assert!(check_compatible(s.space(), s.pi1(), s.pi2()).ok());

        let e2 = nilpotent_dim2();
        let single = semidirect_single(&adjoint_bimodule(&e2));
        assert_eq!(single.dim(), 4);
        assert!(check_hom_leibniz(single.space(), single.pi()).ok());
    }

    #[test]
    fn lift_reproduces_displayed_formulas() {
        let e2 = nilpotent_dim2();
        let b = adjoint_bimodule(&e2);
        let base = e2.space();
        let coeff = b.coeff();
        let d = base.dim();

        let pi_hat = lift(e2.pi(), &[Block::Base, Block::Base], Block::Base, base, coeff);
        let left_hat = lift(b.left(), &[Block::Base, Block::Coeff], Block::Coeff, base, coeff);
        let right_hat = lift(b.right(), &[Block::Coeff, Block::Base], Block::Coeff, base, coeff);

        // pi_hat((x,v),(y,w)) = (pi(x,y), 0)
        assert_eq!(pi_hat.value_at_basis(&[1, 1]), &[rat(1), rat(0), rat(0), rat(0)]);
        assert!(pi_hat.value_at_basis(&[d + 1, 1]).iter().all(num_traits::Zero::is_zero));
        // left_hat((x,v),(y,w)) = (0, m_L(x, w))
        assert_eq!(left_hat.value_at_basis(&[1, d + 1]), &[rat(0), rat(0), rat(1), rat(0)]);
        assert!(left_hat.value_at_basis(&[1, 1]).iter().all(num_traits::Zero::is_zero));
        // right_hat((x,v),(y,w)) = (0, m_R(v, y))
        assert_eq!(right_hat.value_at_basis(&[d + 1, 1]), &[rat(0), rat(0), rat(1), rat(0)]);
        assert!(right_hat.value_at_basis(&[d + 1, d]).iter().all(num_traits::Zero::is_zero));

        // lift of the zero map is zero
        let zero = Cochain::zero(vec![base.clone(), coeff.clone()], coeff.clone());
        assert!(lift(&zero, &[Block::Base, Block::Coeff], Block::Coeff, base, coeff).is_zero());
    }

    #[test]
    fn bidegrees_of_lifts() {
        let e2 = nilpotent_dim2();
        let b = adjoint_bimodule(&e2);
        let base = e2.space();
        let coeff = b.coeff();
        let split = (base.dim(), coeff.dim());

        let pi_hat = lift(e2.pi(), &[Block::Base, Block::Base], Block::Base, base, coeff);
        let left_hat = lift(b.left(), &[Block::Base, Block::Coeff], Block::Coeff, base, coeff);
        let right_hat = lift(b.right(), &[Block::Coeff, Block::Base], Block::Coeff, base, coeff);
        for hat in [&pi_hat, &left_hat, &right_hat] {
            assert_eq!(bidegree_of(hat, split), Some(Bidegree { l: 1, k: 0 }));
        }

        // a lifted map L^⊗n -> M has bidegree n|-1
        for n in 1..=3 {
            let mut f = Cochain::zero(vec![base.clone(); n], coeff.clone());
            f.set_coeff(&vec![1; n], 0, rat(7));
            let f_hat = lift(&f, &vec![Block::Base; n], Block::Coeff, base, coeff);
            assert_eq!(bidegree_of(&f_hat, split), Some(Bidegree { l: n as i64, k: -1 }));
            assert!(has_bidegree(&f_hat, split, n as i64, -1));
        }

        // an inhomogeneous sum has no bidegree
        let mut f = Cochain::zero(vec![base.clone(); 2], coeff.clone());
        f.set_coeff(&[0, 0], 0, rat(1));
        let f_hat = lift(&f, &[Block::Base, Block::Base], Block::Coeff, base, coeff);
        let sum = pi_hat.add(&f_hat).unwrap();
        assert_eq!(bidegree_of(&sum, split), None);
    }

    #[test]
    fn restrict_inverts_lift() {
        let e2 = nilpotent_dim2();
        let base = e2.space();
        let coeff = HomVectorSpace::with_identity_twist(2);
        let mut f = Cochain::zero(vec![base.clone(); 2], coeff.clone());
        f.set_coeff(&[0, 1], 1, rat(3));
        f.set_coeff(&[1, 1], 0, rat(-2));
        let f_hat = lift(&f, &[Block::Base, Block::Base], Block::Coeff, base, &coeff);
        assert_eq!(restrict_to_coeff_output(&f_hat, base, &coeff), f);
    }
}
