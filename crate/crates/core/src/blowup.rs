//! Blowing up points of a foliation and reducing non-reduced singularities.

use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::local::{baum_bott, is_unit_or_integer, EigenvalueValue, SingularityKind, SingularityRecord};
use crate::scalar::{rat, ExactInt};

/// The point being blown up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowupCenter<I: ExactInt> {
    /// A point where the foliation is smooth.
    Regular,
    Singular(SingularityRecord<I>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupOutcome<I: ExactInt> {
    pub exceptional_invariant: bool,
    pub children: Vec<SingularityRecord<I>>,
    /// Multiple of `E` subtracted from the pulled-back canonical class.
    pub k_drop: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResolutionEnding {
    Dicritical,
    SaddleNodeEnding,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionResult<I: ExactInt> {
    pub resolved: Vec<SingularityRecord<I>>,
    pub steps: u32,
    pub k_corrections: i64,
    pub ending: ResolutionEnding,
    /// Self-intersections along the exceptional chain, when determined.
    pub chain_self_intersections: Option<Vec<i64>>,
}

/// `ℓ_p − 1` where `ℓ_p = a_p` if `E` is invariant and `a_p + 1` otherwise.
pub fn transform_canonical(a_p: u32, exceptional_invariant: bool) -> i64 {
    let ell = i64::from(a_p) + if exceptional_invariant { 0 } else { 1 };
    ell - 1
}

fn child<I: ExactInt>(parent: &str, k: usize, kind: SingularityKind<I>) -> SingularityRecord<I> {
    SingularityRecord {
        id: format!("{parent}.{k}"),
        kind,
        vanishing_order: 1,
        incident_curves: Vec::new(),
        epsilon: None,
    }
}

fn nondeg<I: ExactInt>(v: Ratio<I>) -> SingularityKind<I> {
    SingularityKind::NonDegenerate(EigenvalueValue::Rational(v))
}

/// One blow-up.
///
/// `epsilon` is required exactly when the eigenvalue is 1.
pub fn blow_up_singularity<I: ExactInt>(center: &BlowupCenter<I>, epsilon: Option<u8>) -> Result<BlowupOutcome<I>> {
    let s = match center {
        BlowupCenter::Regular => {
            return Ok(BlowupOutcome {
                exceptional_invariant: true,
                children: vec![child("regular", 1, nondeg(-Ratio::<I>::one()))],
                k_drop: transform_canonical(0, true),
            })
        }
        BlowupCenter::Singular(s) => s,
    };
    let a = s.vanishing_order;
    match &s.kind {
        SingularityKind::NonDegenerate(EigenvalueValue::Rational(l)) if l.is_one() => match epsilon {
            None => Err(Error::domain(format!("{}: eigenvalue 1 needs epsilon", s.id))),
            Some(0) => Ok(BlowupOutcome {
                exceptional_invariant: false,
                children: Vec::new(),
                k_drop: transform_canonical(a, false),
            }),
            Some(1) => {
                let bb = baum_bott(s).map(|b| b - Ratio::one());
                Ok(BlowupOutcome {
                    exceptional_invariant: true,
                    children: vec![child(
                        &s.id,
                        1,
                        SingularityKind::SaddleNode {
                            multiplicity: 2,
                            bb_index: bb,
                        },
                    )],
                    k_drop: transform_canonical(a, true),
                })
            }
            Some(e) => Err(Error::domain(format!("epsilon must be 0 or 1, got {e}"))),
        },
        SingularityKind::NonDegenerate(EigenvalueValue::Rational(l)) => Ok(BlowupOutcome {
            exceptional_invariant: true,
            children: vec![
                child(&s.id, 1, nondeg(l.clone() - Ratio::one())),
                child(&s.id, 2, nondeg(l.recip() - Ratio::one())),
            ],
            k_drop: transform_canonical(a, true),
        }),
        SingularityKind::NonDegenerate(EigenvalueValue::NonRational) => Ok(BlowupOutcome {
            exceptional_invariant: true,
            children: vec![
                child(&s.id, 1, SingularityKind::NonDegenerate(EigenvalueValue::NonRational)),
                child(&s.id, 2, SingularityKind::NonDegenerate(EigenvalueValue::NonRational)),
            ],
            k_drop: transform_canonical(a, true),
        }),
        SingularityKind::SaddleNode { multiplicity, bb_index } => Ok(BlowupOutcome {
            exceptional_invariant: true,
            children: vec![
                child(
                    &s.id,
                    1,
                    SingularityKind::SaddleNode {
                        multiplicity: *multiplicity,
                        bb_index: bb_index.as_ref().map(|b| b.clone() - Ratio::one()),
                    },
                ),
                child(&s.id, 2, nondeg(-Ratio::<I>::one())),
            ],
            k_drop: transform_canonical(a, true),
        }),
    }
}

/// Sum of the partial quotients of the continued fraction of `λ`.
pub fn reduction_step_bound<I: ExactInt>(lambda: &Ratio<I>) -> Result<i64> {
    if !lambda.is_positive() {
        return Err(Error::domain("reduction needs a positive eigenvalue"));
    }
    let (mut a, mut b) = (lambda.numer().clone(), lambda.denom().clone());
    let mut total = I::zero();
    while !b.is_zero() {
        let (q, r) = a.div_rem(&b);
        total = total + q;
        a = b;
        b = r;
    }
    total
        .to_i64()
        .ok_or_else(|| Error::domain("step bound does not fit in i64"))
}

/// Blow up repeatedly until no non-reduced point remains.
///
/// `epsilon` only matters when `λ ∈ ℕ⁺ ∪ 1/ℕ⁺`; other eigenvalues are
/// linearizable and always end dicritically.
pub fn seidenberg_reduce<I: ExactInt>(lambda: &Ratio<I>, epsilon: u8) -> Result<ResolutionResult<I>> {
    if !lambda.is_positive() {
        return Err(Error::domain("reduction needs a positive eigenvalue"));
    }
    if epsilon > 1 {
        return Err(Error::domain(format!("epsilon must be 0 or 1, got {epsilon}")));
    }
    let resonant = is_unit_or_integer(lambda);
    let eps = if resonant { epsilon } else { 0 };

    // Chain slots: 0 and 1 are the two separatrices, the rest exceptional.
    // `order` is the left-to-right arrangement; `sq` the self-intersections.
    let mut order: Vec<usize> = vec![0, 1];
    let mut sq: Vec<i64> = vec![0, 0];
    // the point is x dy − μ y dx with {x=0} = cx and {y=0} = cy
    let (mut cx, mut cy) = (0usize, 1usize);

    let mut current = SingularityRecord::nondegenerate("p", lambda.clone());
    let mut resolved = Vec::new();
    let mut steps = 0u32;
    let mut k_corrections = 0i64;
    loop {
        steps += 1;
        let mu = current.lambda().expect("non-degenerate").clone();
        let e = sq.len();
        sq.push(-1);
        for c in [cx, cy] {
            if c >= 2 {
                sq[c] -= 1;
            }
        }
        let pos = order.iter().position(|&c| c == cx).expect("slot");
        let other = order.iter().position(|&c| c == cy).expect("slot");
        order.insert(pos.max(other), e);

        let eps_here = if mu.is_one() { Some(eps) } else { None };
        let out = blow_up_singularity(&BlowupCenter::Singular(current.clone()), eps_here)?;
        k_corrections += out.k_drop;
        if mu.is_one() {
            let ending = if eps == 0 {
                ResolutionEnding::Dicritical
            } else {
                resolved.extend(out.children);
                ResolutionEnding::SaddleNodeEnding
            };
            let chain = if resonant {
                None
            } else {
                Some(order[1..order.len() - 1].iter().map(|&c| sq[c]).collect())
            };
            return Ok(ResolutionResult {
                resolved: relabel(resolved),
                steps,
                k_corrections,
                ending,
                chain_self_intersections: chain,
            });
        }
        // children[0] = μ − 1 sits on cy, children[1] = 1/μ − 1 on cx
        let mut kids = out.children.into_iter();
        let on_cy = kids.next().expect("two children");
        let on_cx = kids.next().expect("two children");
        if on_cy.is_reduced() {
            resolved.push(on_cy);
            current = on_cx;
            cy = cx;
        } else {
            resolved.push(on_cx);
            current = on_cy;
        }
        cx = e;
    }
}

fn relabel<I: ExactInt>(v: Vec<SingularityRecord<I>>) -> Vec<SingularityRecord<I>> {
    v.into_iter()
        .enumerate()
        .map(|(k, mut s)| {
            s.id = format!("q{}", k + 1);
            s
        })
        .collect()
}

/// Sum of `β_p` over the resolved points.
pub fn resolved_beta_sum<I: ExactInt>(r: &ResolutionResult<I>) -> Ratio<I> {
    crate::foliation::beta_sum(&r.resolved)
}

/// `β(−λ) + 1`, the value a dicritical resolution must reach.
pub fn dicritical_target<I: ExactInt>(lambda: &Ratio<I>) -> Ratio<I> {
    crate::local::beta(&-lambda.clone()) + rat::<I>(1)
}
