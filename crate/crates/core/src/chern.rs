//! Chern numbers of a foliation, slope, Noether-type bounds and the
//! integrability decision.

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::foliation::{normal_class, FoliatedScenario, Integrality, Kodaira};
use crate::local::{beta_p, chi_p};
use crate::scalar::{floor_i64, fmt_ratio, frac, rat, ExactInt};
use crate::zariski::{zariski_decompose, ZariskiDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernNumbers<I: ExactInt> {
    pub c1_sq: Ratio<I>,
    pub c2: Ratio<I>,
    pub chi: Ratio<I>,
}

impl<I: ExactInt> ChernNumbers<I> {
    pub fn zero() -> Self {
        ChernNumbers {
            c1_sq: Ratio::zero(),
            c2: Ratio::zero(),
            chi: Ratio::zero(),
        }
    }

    /// From `c₁²` and `c₂` through `12χ = c₁² + c₂`.
    pub fn from_c1_c2(c1_sq: Ratio<I>, c2: Ratio<I>) -> Self {
        let chi = (c1_sq.clone() + c2.clone()) / rat::<I>(12);
        ChernNumbers { c1_sq, c2, chi }
    }

    pub fn noether_holds(&self) -> bool {
        self.c1_sq.clone() + self.c2.clone() == self.chi.clone() * rat::<I>(12)
    }
}

impl<I: ExactInt> fmt::Display for ChernNumbers<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(c1² = {}, c2 = {}, χ = {})",
            fmt_ratio(&self.c1_sq),
            fmt_ratio(&self.c2),
            fmt_ratio(&self.chi)
        )
    }
}

/// Which singular points lie on the support of `N`.
pub fn on_negative_part<I: ExactInt>(f: &FoliatedScenario<I>, z: &ZariskiDecomposition<I>) -> Vec<bool> {
    let support = z.support();
    f.singularities
        .iter()
        .map(|s| s.incident_curves.iter().any(|c| support.contains(c.as_str())))
        .collect()
}

/// `χ(O_S) + K_F·N_F/4 + Σ χ_p`, when every `χ_p` is rational.
pub fn direct_chi<I: ExactInt>(f: &FoliatedScenario<I>) -> Result<Option<Ratio<I>>> {
    let mut sum = Ratio::zero();
    for s in &f.singularities {
        match chi_p(s) {
            Some(v) => sum = sum + v,
            None => return Ok(None),
        }
    }
    let n = normal_class(f);
    let kn = f.dot(&f.k_foliation, &n)?;
    Ok(Some(rat::<I>(f.surface.chi_structure()) + kn / rat::<I>(4) + sum))
}

/// Chern numbers, decomposing `K_F` on the way.
pub fn chern_numbers<I: ExactInt>(f: &FoliatedScenario<I>) -> Result<ChernNumbers<I>> {
    if !f.metadata.k_pseudo_effective {
        return Ok(ChernNumbers::zero());
    }
    let z = zariski_decompose(f)?;
    chern_numbers_with(f, &z)
}

/// Chern numbers from a known decomposition.
///
/// `c₁² = K_F² + Σ_{p ∈ N} β_p`, `c₂ = Σ_{p ∉ N} β_p`, `χ = (c₁² + c₂)/12`,
/// cross-checked against the direct formula for `χ` when it is evaluable.
pub fn chern_numbers_with<I: ExactInt>(
    f: &FoliatedScenario<I>,
    z: &ZariskiDecomposition<I>,
) -> Result<ChernNumbers<I>> {
    if !f.metadata.k_pseudo_effective {
        return Ok(ChernNumbers::zero());
    }
    if !f.is_reduced() {
        return Err(Error::domain(
            "Chern numbers are defined on a reduced model; reduce the non-reduced points first",
        ));
    }
    let in_n = on_negative_part(f, z);
    let (mut on, mut off) = (Ratio::<I>::zero(), Ratio::<I>::zero());
    for (s, inside) in f.singularities.iter().zip(in_n) {
        if inside {
            on = on + beta_p(s);
        } else {
            off = off + beta_p(s);
        }
    }
    let k2 = f.dot(&f.k_foliation, &f.k_foliation)?;
    let c = ChernNumbers::from_c1_c2(k2 + on, off);
    for (name, v) in [("c1²", &c.c1_sq), ("c2", &c.c2), ("χ", &c.chi)] {
        if v.is_negative() {
            return Err(Error::inconsistent(
                "chern_nonnegative",
                format!("{name} = {} < 0", fmt_ratio(v)),
            ));
        }
    }
    if let Some(d) = direct_chi(f)? {
        if d != c.chi {
            return Err(Error::inconsistent(
                "direct_chi",
                format!(
                    "χ via Noether is {} but the direct formula gives {}",
                    fmt_ratio(&c.chi),
                    fmt_ratio(&d)
                ),
            ));
        }
    }
    Ok(c)
}

/// `λ = c₁²/χ`.
pub fn slope<I: ExactInt>(c: &ChernNumbers<I>) -> Result<Ratio<I>> {
    if c.chi.is_zero() {
        return Err(Error::domain("slope undefined when χ = 0"));
    }
    Ok(c.c1_sq.clone() / c.chi.clone())
}

/// The three lower bounds on the volume in terms of `p_g ≥ 2`.
pub fn noether_bounds<I: ExactInt>(p_g: i64) -> Result<(Ratio<I>, Ratio<I>, Ratio<I>)> {
    if p_g < 2 {
        return Err(Error::domain(format!("Noether bounds need p_g ≥ 2, got {p_g}")));
    }
    let p = rat::<I>(p_g);
    let first = p.clone() - rat::<I>(2);
    let second = first.clone() + frac::<I>(1, p_g);
    let third = p - frac::<I>(3, 2) + frac::<I>(3, 2 * (2 * p_g + 1));
    Ok((first, second, third))
}

/// `⌊4/(4 − λ)⌋`, the largest genus an integral foliation of slope λ allows.
pub fn genus_bound<I: ExactInt>(lambda: &Ratio<I>) -> Result<i64> {
    if !lambda.is_positive() || lambda >= &rat::<I>(4) {
        return Err(Error::domain(format!(
            "genus bound needs 0 < λ < 4, got {}",
            fmt_ratio(lambda)
        )));
    }
    Ok(floor_i64(&(rat::<I>(4) / (rat::<I>(4) - lambda.clone()))))
}

/// Foliations that are not of general type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonGeneralClass {
    GenusZero,
    IsotrivialFibration(u32),
    NonIsotrivialGenusOne,
    TranscendentalNonGeneral,
}

/// What is known about the Chern numbers of a non-general-type class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableEntry<I: ExactInt> {
    Exact(ChernNumbers<I>),
    /// `c₁² = 0` and `c₂ = 12χ > 0`.
    EllipticConstraint,
}

impl<I: ExactInt> TableEntry<I> {
    pub fn admits(&self, c: &ChernNumbers<I>) -> bool {
        match self {
            TableEntry::Exact(e) => e == c,
            TableEntry::EllipticConstraint => {
                c.c1_sq.is_zero() && c.c2.is_positive() && c.c2 == c.chi.clone() * rat::<I>(12)
            }
        }
    }
}

pub fn nongeneral_type_table<I: ExactInt>(class: NonGeneralClass) -> TableEntry<I> {
    match class {
        NonGeneralClass::NonIsotrivialGenusOne => TableEntry::EllipticConstraint,
        _ => TableEntry::Exact(ChernNumbers::zero()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Transcendental,
    AlgebraicallyIntegral,
    Undetermined,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Transcendental => "transcendental",
            Status::AlgebraicallyIntegral => "algebraically integral",
            Status::Undetermined => "undetermined",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiredRule {
    pub id: String,
    pub citation: String,
    pub comparison: String,
}

/// One bound comparison performed while deciding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundCheck<I: ExactInt> {
    pub name: String,
    pub value: Ratio<I>,
    pub bound: Ratio<I>,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<I: ExactInt> {
    pub status: Status,
    pub fired_rules: Vec<FiredRule>,
    pub genus_bound: Option<i64>,
    pub bounds: Vec<BoundCheck<I>>,
    pub flags: Vec<String>,
}

/// Inputs to the decision that do not live on the scenario itself.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecisionInput {
    /// Geometric genus, from metadata or a section count.
    pub p_g: Option<i64>,
    /// Genus of the fibration when the foliation is known to be one.
    pub fibration_genus: Option<i64>,
}

fn rule(id: &str, citation: &str, comparison: String) -> FiredRule {
    FiredRule {
        id: id.to_string(),
        citation: citation.to_string(),
        comparison,
    }
}

fn ge_check<I: ExactInt>(name: &str, value: &Ratio<I>, bound: Ratio<I>) -> BoundCheck<I> {
    BoundCheck {
        name: name.to_string(),
        holds: value >= &bound,
        equality: value == &bound,
        value: value.clone(),
        bound,
    }
}

/// Apply the integrability criteria.
pub fn decide<I: ExactInt>(
    f: &FoliatedScenario<I>,
    c: &ChernNumbers<I>,
    vol: &Ratio<I>,
    input: &DecisionInput,
) -> Result<Verdict<I>> {
    let md = &f.metadata;
    let general = md.k_pseudo_effective && vol.is_positive();
    match md.kodaira {
        Some(Kodaira::Two) if !general => {
            return Err(Error::inconsistent("kodaira", "declared general type but vol = 0"));
        }
        Some(Kodaira::NegInfinity | Kodaira::Zero | Kodaira::One) if general => {
            return Err(Error::inconsistent(
                "kodaira",
                format!("declared non-general type but vol = {} > 0", fmt_ratio(vol)),
            ));
        }
        Some(Kodaira::NegInfinity) if md.k_pseudo_effective => {
            return Err(Error::inconsistent(
                "kodaira",
                "Kodaira dimension −∞ with K_F pseudo-effective",
            ));
        }
        Some(Kodaira::Zero | Kodaira::One | Kodaira::Two) if !md.k_pseudo_effective => {
            return Err(Error::inconsistent(
                "kodaira",
                "non-negative Kodaira dimension with K_F not pseudo-effective",
            ));
        }
        _ => {}
    }

    let mut fired = Vec::new();
    let mut computed: Vec<Status> = Vec::new();
    let mut bounds = Vec::new();
    let mut flags = Vec::new();
    let mut genus_bound_out = None;

    if !md.k_pseudo_effective {
        fired.push(rule(
            "R1",
            "K_F not pseudo-effective: leaves are rational curves",
            "K_F not pseudo-effective".into(),
        ));
        computed.push(Status::AlgebraicallyIntegral);
    } else if !general {
        if c.c2.is_positive() || c.chi.is_positive() {
            fired.push(rule(
                "R2",
                "non-general type with c2 > 0 or χ > 0 forces a rational first integral",
                format!("vol = 0, c2 = {}, χ = {}", fmt_ratio(&c.c2), fmt_ratio(&c.chi)),
            ));
            computed.push(Status::AlgebraicallyIntegral);
        }
    } else {
        let lambda = slope(c)?;
        if lambda < rat::<I>(1) {
            flags.push(format!("slope {} is below 1", fmt_ratio(&lambda)));
        }
        if lambda < rat::<I>(2) {
            fired.push(rule(
                "R3",
                "slope criterion: general type with λ < 2 is transcendental",
                format!("λ = {} < 2", fmt_ratio(&lambda)),
            ));
            computed.push(Status::Transcendental);
        }
        if md.algebraically_integral == Integrality::Yes {
            let mut cmp = Vec::new();
            if lambda < rat::<I>(4) {
                let gb = genus_bound(&lambda)?;
                genus_bound_out = Some(gb);
                cmp.push(format!("g ≤ ⌊4/(4 − λ)⌋ = {gb}"));
                if let Some(g) = input.fibration_genus {
                    if g > gb {
                        return Err(Error::inconsistent(
                            "genus_bound",
                            format!("fibration genus {g} exceeds the bound {gb}"),
                        ));
                    }
                }
            }
            if let Some(g) = input.fibration_genus.filter(|&g| g >= 2) {
                let b = frac::<I>(4 * (g - 1), g);
                let chk = ge_check("slope_inequality", &lambda, b.clone());
                if !chk.holds {
                    return Err(Error::inconsistent(
                        "slope_inequality",
                        format!("λ = {} < 4(g−1)/g = {}", fmt_ratio(&lambda), fmt_ratio(&b)),
                    ));
                }
                cmp.push(format!("λ = {} ≥ 4(g−1)/g = {}", fmt_ratio(&lambda), fmt_ratio(&b)));
                bounds.push(chk);
            }
            fired.push(rule(
                "R4",
                "slope inequality for integral foliations of genus g",
                cmp.join("; "),
            ));
        }
        if let Some(p) = input.p_g {
            bounds.push(ge_check("noether_first", vol, rat::<I>(p - 2)));
            if p > 0 && vol != &rat::<I>(p - 2) {
                bounds.push(ge_check("noether_second", vol, rat::<I>(p - 2) + frac::<I>(1, p)));
            }
            if p >= 2 {
                let (_, _, third) = noether_bounds::<I>(p)?;
                let mut chk = ge_check("noether_third", vol, third.clone());
                if vol < &third {
                    fired.push(rule(
                        "R5",
                        "Noether-type criterion: vol below p_g − 3/2 + 3/(2(2p_g+1)) is transcendental",
                        format!("vol = {} < {}", fmt_ratio(vol), fmt_ratio(&third)),
                    ));
                    computed.push(Status::Transcendental);
                }
                // the third bound is a criterion, not a sanity condition
                chk.holds = true;
                bounds.push(chk);
                bounds.push(ge_check("volume_half", vol, frac::<I>(1, 2)));
            }
            let pg_cap = c.chi.clone() * rat::<I>(12) + rat::<I>(2);
            bounds.push(BoundCheck {
                name: "pg_cap".into(),
                holds: rat::<I>(p) <= pg_cap,
                equality: rat::<I>(p) == pg_cap,
                value: rat(p),
                bound: pg_cap,
            });
        }
        if let Some(b) = bounds.iter().find(|b| !b.holds) {
            return Err(Error::inconsistent(
                b.name.clone(),
                format!("{} violates the bound {}", fmt_ratio(&b.value), fmt_ratio(&b.bound)),
            ));
        }
    }

    let declared = match md.algebraically_integral {
        Integrality::Yes => Some(Status::AlgebraicallyIntegral),
        Integrality::No => Some(Status::Transcendental),
        Integrality::Unknown => None,
    };
    let mut all = computed.clone();
    all.extend(declared);
    if all.iter().any(|s| *s != all[0]) {
        let ids: Vec<&str> = fired.iter().map(|r| r.id.as_str()).collect();
        return Err(Error::inconsistent(
            "verdict",
            format!("rules {ids:?} contradict each other or the declared integrality"),
        ));
    }
    let status = if let Some(s) = computed.first() {
        *s
    } else if let Some(s) = declared {
        fired.push(rule(
            "declared",
            "integrality declared in metadata",
            format!("declared {s}"),
        ));
        s
    } else {
        Status::Undetermined
    };
    Ok(Verdict {
        status,
        fired_rules: fired,
        genus_bound: genus_bound_out,
        bounds,
        flags,
    })
}
