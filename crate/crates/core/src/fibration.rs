//! Local Chern numbers of normal-crossing fibers and the modular
//! invariants of a fibration.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::chern::ChernNumbers;
use crate::error::{Error, Result};
use crate::foliation::CheckResult;
use crate::local::beta;
use crate::scalar::{fmt_ratio, frac, rat, ExactInt};

/// A node `x^a y^b = 0` of a fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiberNode {
    pub a: i64,
    pub b: i64,
    pub in_negative_part: bool,
}

impl FiberNode {
    pub fn new(a: i64, b: i64, in_negative_part: bool) -> Self {
        FiberNode { a, b, in_negative_part }
    }
}

/// A singular fiber with normal crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiberModel {
    pub genus_of_fibration: i64,
    pub pa_reduced: i64,
    pub f_red_sq: i64,
    pub nodes: Vec<FiberNode>,
    /// Zero for normal crossings, the only supported case.
    pub alpha: i64,
}

/// Numerical data of a fibration `f: S → B` and its singular fibers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FibrationModel<I: ExactInt> {
    pub genus: i64,
    pub k_f_sq: Ratio<I>,
    pub e_f: Ratio<I>,
    pub chi_f: Ratio<I>,
    pub singular_fibers: Vec<FiberModel>,
}

/// Local `(c₁², c₂, χ)` of one fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalChern<I: ExactInt> {
    pub c1_sq: Ratio<I>,
    pub c2: Ratio<I>,
    pub chi: Ratio<I>,
}

/// Modular invariants `κ, δ, χ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularInvariants<I: ExactInt> {
    pub kappa: Ratio<I>,
    pub delta: Ratio<I>,
    pub chi: Ratio<I>,
}

fn node_beta<I: ExactInt>(n: &FiberNode) -> Ratio<I> {
    beta(&frac::<I>(n.a, n.b))
}

fn check_fiber(fm: &FiberModel) -> Result<()> {
    if fm.alpha != 0 {
        return Err(Error::domain(
            "only normal-crossing fibers are supported (alpha must be 0)",
        ));
    }
    if fm.genus_of_fibration < 1 {
        return Err(Error::domain("fibration genus must be at least 1"));
    }
    if let Some(n) = fm.nodes.iter().find(|n| n.a < 1 || n.b < 1) {
        return Err(Error::domain(format!(
            "node multiplicities ({}, {}) must be positive",
            n.a, n.b
        )));
    }
    Ok(())
}

/// `c₁²(F) = 4(g − p_a) + F_red² + α − c₋₁`, `c₂(F) = 2(g − p_a) + μ − β_F + c₋₁`.
pub fn fiber_local_chern<I: ExactInt>(fm: &FiberModel) -> Result<LocalChern<I>> {
    check_fiber(fm)?;
    let gp = rat::<I>(fm.genus_of_fibration - fm.pa_reduced);
    let beta_f = fm.nodes.iter().map(node_beta::<I>).fold(Ratio::zero(), |a, b| a + b);
    let c_minus = fm
        .nodes
        .iter()
        .filter(|n| n.in_negative_part)
        .map(node_beta::<I>)
        .fold(Ratio::zero(), |a, b| a + b);
    let mu = rat::<I>(fm.nodes.len() as i64);
    let c1_sq = gp.clone() * rat::<I>(4) + rat::<I>(fm.f_red_sq) + rat::<I>(fm.alpha) - c_minus.clone();
    let c2 = gp * rat::<I>(2) + mu - beta_f + c_minus;
    let chi = (c1_sq.clone() + c2.clone()) / rat::<I>(12);
    Ok(LocalChern { c1_sq, c2, chi })
}

/// `e_F = 2(g − p_a) + μ`.
pub fn fiber_euler(fm: &FiberModel) -> i64 {
    2 * (fm.genus_of_fibration - fm.pa_reduced) + fm.nodes.len() as i64
}

impl<I: ExactInt> FibrationModel<I> {
    /// Validated fibration data.
    pub fn new(
        genus: i64,
        k_f_sq: Ratio<I>,
        e_f: Ratio<I>,
        chi_f: Ratio<I>,
        singular_fibers: Vec<FiberModel>,
    ) -> Result<Self> {
        let fb = FibrationModel {
            genus,
            k_f_sq,
            e_f,
            chi_f,
            singular_fibers,
        };
        fb.check()?;
        Ok(fb)
    }

    pub fn check(&self) -> Result<()> {
        if self.genus < 1 {
            return Err(Error::domain("fibration genus must be at least 1"));
        }
        for fm in &self.singular_fibers {
            if fm.genus_of_fibration != self.genus {
                return Err(Error::shape("fiber genus differs from the fibration genus"));
            }
            check_fiber(fm)?;
        }
        let lhs = self.k_f_sq.clone() + self.e_f.clone();
        let rhs = self.chi_f.clone() * rat::<I>(12);
        if lhs != rhs {
            return Err(Error::inconsistent(
                "fibration_noether",
                format!("K_f² + e_f = {} but 12χ_f = {}", fmt_ratio(&lhs), fmt_ratio(&rhs)),
            ));
        }
        let sum: i64 = self.singular_fibers.iter().map(fiber_euler).sum();
        if self.e_f != rat::<I>(sum) {
            return Err(Error::inconsistent(
                "fiber_euler_sum",
                format!("e_f = {} but the fibers contribute {sum}", fmt_ratio(&self.e_f)),
            ));
        }
        Ok(())
    }
}

/// `κ = K_f² − Σ c₁²(F)`, `δ = e_f − Σ c₂(F)`, `χ = χ_f − Σ χ_F`.
pub fn modular_invariants<I: ExactInt>(fb: &FibrationModel<I>) -> Result<ModularInvariants<I>> {
    fb.check()?;
    let mut m = ModularInvariants {
        kappa: fb.k_f_sq.clone(),
        delta: fb.e_f.clone(),
        chi: fb.chi_f.clone(),
    };
    for fm in &fb.singular_fibers {
        let l = fiber_local_chern::<I>(fm)?;
        m.kappa = m.kappa - l.c1_sq;
        m.delta = m.delta - l.c2;
        m.chi = m.chi - l.chi;
    }
    if m.kappa.clone() + m.delta.clone() != m.chi.clone() * rat::<I>(12) {
        return Err(Error::inconsistent("modular_noether", "κ + δ ≠ 12χ"));
    }
    for (name, v) in [("κ", &m.kappa), ("δ", &m.delta), ("χ", &m.chi)] {
        if v.is_negative() {
            return Err(Error::inconsistent(
                "modular_nonnegative",
                format!("{name} = {} < 0", fmt_ratio(v)),
            ));
        }
    }
    Ok(m)
}

/// The Chern numbers of the induced foliation must equal the modular
/// invariants.
pub fn crosscheck_with_chern<I: ExactInt>(fb: &FibrationModel<I>, c: &ChernNumbers<I>) -> CheckResult<I> {
    match modular_invariants(fb) {
        Err(e) => CheckResult::fail("modular_crosscheck", e.to_string()),
        Ok(m) => {
            let ok = m.kappa == c.c1_sq && m.delta == c.c2 && m.chi == c.chi;
            let detail = format!(
                "(κ, δ, χ) = ({}, {}, {}) vs (c1², c2, χ) = ({}, {}, {})",
                fmt_ratio(&m.kappa),
                fmt_ratio(&m.delta),
                fmt_ratio(&m.chi),
                fmt_ratio(&c.c1_sq),
                fmt_ratio(&c.c2),
                fmt_ratio(&c.chi)
            );
            if ok {
                CheckResult::pass("modular_crosscheck", detail)
            } else {
                CheckResult::fail("modular_crosscheck", detail)
            }
        }
    }
}

/// `κ/χ ≥ 4(g−1)/g`.
pub fn slope_inequality_check<I: ExactInt>(g: i64, kappa: &Ratio<I>, chi: &Ratio<I>) -> CheckResult<I> {
    if g < 2 {
        return CheckResult::fail("slope_inequality", format!("needs g ≥ 2, got {g}"));
    }
    if !chi.is_positive() {
        return CheckResult::fail("slope_inequality", "needs χ > 0");
    }
    let lambda = kappa.clone() / chi.clone();
    let bound = frac::<I>(4 * (g - 1), g);
    let mut r = CheckResult::equality("slope_inequality", "κ/χ vs 4(g−1)/g", lambda.clone(), bound.clone());
    r.passed = lambda >= bound;
    r
}
