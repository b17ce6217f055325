//! Local invariants of foliation singularities.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_ratio, rat, ExactInt};

/// An eigenvalue up to inversion: `λ` and `1/λ` are the same class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EigenvalueClass<I: ExactInt> {
    Rational(Ratio<I>),
    NonRational,
}

impl<I: ExactInt> EigenvalueClass<I> {
    /// Canonical class of a nonzero rational eigenvalue.
    pub fn rational(lambda: Ratio<I>) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::domain("eigenvalue class of 0"));
        }
        let num_abs = lambda.numer().abs();
        let den = lambda.denom().clone();
        let canonical = if num_abs > den {
            lambda
        } else if num_abs < den {
            lambda.recip()
        } else {
            // |λ| = 1, already its own inverse
            lambda
        };
        Ok(EigenvalueClass::Rational(canonical))
    }

    pub fn value(&self) -> Option<&Ratio<I>> {
        match self {
            EigenvalueClass::Rational(v) => Some(v),
            EigenvalueClass::NonRational => None,
        }
    }
}

impl<I: ExactInt> fmt::Display for EigenvalueClass<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueClass::Rational(v) => write!(f, "{}", fmt_ratio(v)),
            EigenvalueClass::NonRational => write!(f, "nonrational"),
        }
    }
}

/// Kind of a singular point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SingularityKind<I: ExactInt> {
    /// Non-degenerate, with eigenvalue quotient `λ`.
    ///
    /// The stored value is the one declared; orientation matters for
    /// Camacho–Sad bookkeeping even though β and χ do not see it.
    NonDegenerate(EigenvalueValue<I>),
    /// Saddle-node of Milnor number `multiplicity`, optionally with its
    /// Baum–Bott index.
    SaddleNode {
        multiplicity: u32,
        bb_index: Option<Ratio<I>>,
    },
}

/// A declared eigenvalue: an oriented rational, or not rational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EigenvalueValue<I: ExactInt> {
    Rational(Ratio<I>),
    NonRational,
}

impl<I: ExactInt> EigenvalueValue<I> {
    pub fn class(&self) -> EigenvalueClass<I> {
        match self {
            EigenvalueValue::Rational(v) => EigenvalueClass::rational(v.clone()).expect("nonzero eigenvalue"),
            EigenvalueValue::NonRational => EigenvalueClass::NonRational,
        }
    }

    pub fn rational(&self) -> Option<&Ratio<I>> {
        match self {
            EigenvalueValue::Rational(v) => Some(v),
            EigenvalueValue::NonRational => None,
        }
    }
}

/// One singular point of a foliation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SingularityRecord<I: ExactInt> {
    pub id: String,
    pub kind: SingularityKind<I>,
    pub vanishing_order: u32,
    pub incident_curves: Vec<String>,
    /// Formal normal-form flag, only meaningful for λ ∈ ℕ⁺ ∪ 1/ℕ⁺.
    pub epsilon: Option<u8>,
}

impl<I: ExactInt> SingularityRecord<I> {
    pub fn nondegenerate(id: impl Into<String>, lambda: Ratio<I>) -> Self {
        assert!(!lambda.is_zero(), "eigenvalue 0 is a saddle-node");
        SingularityRecord {
            id: id.into(),
            kind: SingularityKind::NonDegenerate(EigenvalueValue::Rational(lambda)),
            vanishing_order: 1,
            incident_curves: Vec::new(),
            epsilon: None,
        }
    }

    pub fn nonrational(id: impl Into<String>) -> Self {
        SingularityRecord {
            id: id.into(),
            kind: SingularityKind::NonDegenerate(EigenvalueValue::NonRational),
            vanishing_order: 1,
            incident_curves: Vec::new(),
            epsilon: None,
        }
    }

    pub fn saddle_node(id: impl Into<String>, multiplicity: u32, bb: Option<Ratio<I>>) -> Self {
        SingularityRecord {
            id: id.into(),
            kind: SingularityKind::SaddleNode {
                multiplicity,
                bb_index: bb,
            },
            vanishing_order: 1,
            incident_curves: Vec::new(),
            epsilon: None,
        }
    }

    pub fn on(mut self, curves: &[&str]) -> Self {
        self.incident_curves = curves.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn with_epsilon(mut self, eps: u8) -> Self {
        self.epsilon = Some(eps);
        self
    }

    /// Declared oriented eigenvalue, when rational and non-degenerate.
    pub fn lambda(&self) -> Option<&Ratio<I>> {
        match &self.kind {
            SingularityKind::NonDegenerate(v) => v.rational(),
            SingularityKind::SaddleNode { .. } => None,
        }
    }

    pub fn is_saddle_node(&self) -> bool {
        matches!(self.kind, SingularityKind::SaddleNode { .. })
    }

    /// Milnor number: 1 when non-degenerate.
    pub fn multiplicity(&self) -> u32 {
        match self.kind {
            SingularityKind::NonDegenerate(_) => 1,
            SingularityKind::SaddleNode { multiplicity, .. } => multiplicity,
        }
    }

    /// Non-reduced means a positive rational eigenvalue.
    pub fn is_reduced(&self) -> bool {
        self.lambda().is_none_or(|l| !l.is_positive())
    }
}

/// `β(u) = gcd(a,b)²/(ab)` for `u = a/b ≠ 0`, and `0` for `u = 0`.
pub fn beta<I: ExactInt>(u: &Ratio<I>) -> Ratio<I> {
    if u.is_zero() {
        return Ratio::zero();
    }
    // lowest terms, so the gcd is 1
    Ratio::new(I::one(), u.numer().clone() * u.denom().clone())
}

/// β on an eigenvalue class: zero when not rational.
pub fn beta_class<I: ExactInt>(u: &EigenvalueClass<I>) -> Ratio<I> {
    match u {
        EigenvalueClass::Rational(v) => beta(v),
        EigenvalueClass::NonRational => Ratio::zero(),
    }
}

/// `χ(u) = (u + 1/u + β(u) − 3)/12`.
pub fn chi_local<I: ExactInt>(u: &Ratio<I>) -> Result<Ratio<I>> {
    if u.is_zero() {
        return Err(Error::domain("chi_local(0) is undefined"));
    }
    Ok((u.clone() + u.recip() + beta(u) - rat::<I>(3)) / rat::<I>(12))
}

/// `β_p = β(−λ_p)`, zero on saddle-nodes and non-rational eigenvalues.
pub fn beta_p<I: ExactInt>(s: &SingularityRecord<I>) -> Ratio<I> {
    match s.lambda() {
        Some(l) => beta(&-l.clone()),
        None => Ratio::zero(),
    }
}

/// Baum–Bott index, when it has a rational value.
pub fn baum_bott<I: ExactInt>(s: &SingularityRecord<I>) -> Option<Ratio<I>> {
    match &s.kind {
        SingularityKind::NonDegenerate(EigenvalueValue::Rational(l)) => Some(l.clone() + l.recip() + rat::<I>(2)),
        SingularityKind::NonDegenerate(EigenvalueValue::NonRational) => None,
        SingularityKind::SaddleNode { bb_index, .. } => bb_index.clone(),
    }
}

/// `χ_p = −(BB_p + m_p − β_p)/12`, when BB_p is available.
pub fn chi_p<I: ExactInt>(s: &SingularityRecord<I>) -> Option<Ratio<I>> {
    let bb = baum_bott(s)?;
    let m = rat::<I>(i64::from(s.multiplicity()));
    Some(-(bb + m - beta_p(s)) / rat::<I>(12))
}

/// Is `λ` a positive integer or the inverse of one.
pub fn is_unit_or_integer<I: ExactInt>(lambda: &Ratio<I>) -> bool {
    lambda.is_positive() && (lambda.denom().is_one() || lambda.numer().is_one())
}
