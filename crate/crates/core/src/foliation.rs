//! Foliated surfaces as declared data, and the curvewise identities they
//! must satisfy.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, SurfaceModel};
use crate::local::{baum_bott, is_unit_or_integer, SingularityKind, SingularityRecord};
use crate::scalar::{fmt_ratio, rat, ExactInt};

/// A named curve on the surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveRecord<I: ExactInt> {
    pub name: String,
    pub cls: DivisorClass<I>,
    pub f_invariant: bool,
    pub arithmetic_genus_hint: Option<i64>,
}

impl<I: ExactInt> CurveRecord<I> {
    pub fn invariant(name: impl Into<String>, cls: DivisorClass<I>) -> Self {
        CurveRecord {
            name: name.into(),
            cls,
            f_invariant: true,
            arithmetic_genus_hint: None,
        }
    }

    pub fn transverse(name: impl Into<String>, cls: DivisorClass<I>) -> Self {
        CurveRecord {
            name: name.into(),
            cls,
            f_invariant: false,
            arithmetic_genus_hint: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kodaira {
    NegInfinity,
    Zero,
    One,
    Two,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Integrality {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Metadata {
    pub p_g: Option<i64>,
    pub kodaira: Option<Kodaira>,
    pub algebraically_integral: Integrality,
    pub k_pseudo_effective: bool,
    pub relatively_minimal: bool,
}

impl Default for Metadata {
    fn default() -> Self {
        Metadata {
            p_g: None,
            kodaira: None,
            algebraically_integral: Integrality::Unknown,
            k_pseudo_effective: true,
            relatively_minimal: false,
        }
    }
}

/// A foliation on a modeled surface, given by its canonical class and the
/// declared curves and singular points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoliatedScenario<I: ExactInt> {
    pub surface: SurfaceModel,
    pub k_foliation: DivisorClass<I>,
    pub curves: Vec<CurveRecord<I>>,
    pub singularities: Vec<SingularityRecord<I>>,
    pub metadata: Metadata,
}

/// One named pass/fail check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult<I: ExactInt> {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub residual: Option<Ratio<I>>,
}

impl<I: ExactInt> CheckResult<I> {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: detail.into(),
            residual: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            detail: detail.into(),
            residual: None,
        }
    }

    /// Pass iff `lhs == rhs`; the residual is `lhs − rhs`.
    pub fn equality(name: impl Into<String>, what: &str, lhs: Ratio<I>, rhs: Ratio<I>) -> Self {
        let residual = lhs.clone() - rhs.clone();
        CheckResult {
            name: name.into(),
            passed: residual.is_zero(),
            detail: format!("{what}: {} vs {}", fmt_ratio(&lhs), fmt_ratio(&rhs)),
            residual: Some(residual),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport<I: ExactInt> {
    pub checks: Vec<CheckResult<I>>,
    pub warnings: Vec<String>,
}

impl<I: ExactInt> ValidationReport<I> {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult<I>> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult<I>> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl<I: ExactInt> FoliatedScenario<I> {
    pub fn new(surface: SurfaceModel, k_foliation: DivisorClass<I>) -> Self {
        FoliatedScenario {
            surface,
            k_foliation,
            curves: Vec::new(),
            singularities: Vec::new(),
            metadata: Metadata::default(),
        }
    }

    pub fn curve(&self, name: &str) -> Option<&CurveRecord<I>> {
        self.curves.iter().find(|c| c.name == name)
    }

    pub fn canonical_surface(&self) -> DivisorClass<I> {
        self.surface.canonical_class()
    }

    pub fn dot(&self, a: &DivisorClass<I>, b: &DivisorClass<I>) -> Result<Ratio<I>> {
        self.surface.intersect(a, b)
    }

    /// Singularities lying on `curve`.
    pub fn singularities_on<'a>(&'a self, curve: &'a str) -> impl Iterator<Item = &'a SingularityRecord<I>> + 'a {
        self.singularities
            .iter()
            .filter(move |s| s.incident_curves.iter().any(|c| c == curve))
    }

    /// Is every singularity reduced.
    pub fn is_reduced(&self) -> bool {
        self.singularities.iter().all(SingularityRecord::is_reduced)
    }

    /// Arithmetic genus from adjunction, or the declared hint.
    pub fn arithmetic_genus(&self, c: &CurveRecord<I>) -> Result<Ratio<I>> {
        if let Some(h) = c.arithmetic_genus_hint {
            return Ok(rat(h));
        }
        let k = self.canonical_surface();
        let v = self.dot(&c.cls, &(&c.cls + &k))?;
        Ok(rat::<I>(1) + v / rat::<I>(2))
    }
}

/// `N_F = K_F − K_S`.
pub fn normal_class<I: ExactInt>(f: &FoliatedScenario<I>) -> DivisorClass<I> {
    &f.k_foliation - &f.canonical_surface()
}

/// `tang(F, C) = K_F·C + C²` for a curve not invariant under the foliation.
pub fn tangency<I: ExactInt>(f: &FoliatedScenario<I>, c: &CurveRecord<I>) -> Result<Ratio<I>> {
    if c.f_invariant {
        return Err(Error::domain(format!("tangency of invariant curve {}", c.name)));
    }
    let t = f.dot(&f.k_foliation, &c.cls)? + f.dot(&c.cls, &c.cls)?;
    if t.is_negative() {
        return Err(Error::inconsistent(
            "tangency",
            format!("tang(F, {}) = {} < 0", c.name, fmt_ratio(&t)),
        ));
    }
    Ok(t)
}

/// `Z(F, C) = K_F·C − K_S·C − C²` for an invariant curve.
pub fn z_total<I: ExactInt>(f: &FoliatedScenario<I>, c: &CurveRecord<I>) -> Result<Ratio<I>> {
    if !c.f_invariant {
        return Err(Error::domain(format!("Z-index of non-invariant curve {}", c.name)));
    }
    let k = f.canonical_surface();
    Ok(f.dot(&f.k_foliation, &c.cls)? - f.dot(&k, &c.cls)? - f.dot(&c.cls, &c.cls)?)
}

/// Camacho–Sad: the declared indices along `c` must sum to `C²`.
pub fn camacho_sad_check<I: ExactInt>(
    f: &FoliatedScenario<I>,
    c: &CurveRecord<I>,
    cs_assignments: &BTreeMap<String, Ratio<I>>,
) -> CheckResult<I> {
    let name = format!("camacho_sad:{}", c.name);
    if !c.f_invariant {
        return CheckResult::fail(name, "curve is not invariant");
    }
    let on: BTreeSet<&str> = f.singularities_on(&c.name).map(|s| s.id.as_str()).collect();
    let given: BTreeSet<&str> = cs_assignments.keys().map(String::as_str).collect();
    if on != given {
        return CheckResult::fail(
            name,
            format!("assignments cover {given:?} but the curve carries {on:?}"),
        );
    }
    let sum = cs_assignments.values().fold(Ratio::zero(), |a, b| a + b);
    let sq = match f.dot(&c.cls, &c.cls) {
        Ok(v) => v,
        Err(e) => return CheckResult::fail(name, e.to_string()),
    };
    CheckResult::equality(name, "Σ cs vs C²", sum, sq)
}

/// `Σ m_p = c₂(S) + N_F·K_F`.
pub fn singularity_count_check<I: ExactInt>(f: &FoliatedScenario<I>) -> CheckResult<I> {
    let count: i64 = f.singularities.iter().map(|s| i64::from(s.multiplicity())).sum();
    let n = normal_class(f);
    let expected = match f.dot(&n, &f.k_foliation) {
        Ok(v) => v + rat::<I>(f.surface.chi_top()),
        Err(e) => return CheckResult::fail("singularity_count", e.to_string()),
    };
    CheckResult::equality("singularity_count", "Σ m_p vs c₂(S) + N_F·K_F", rat(count), expected)
}

/// `Σ BB_p = N_F²`, when every Baum–Bott index is known.
pub fn baum_bott_check<I: ExactInt>(f: &FoliatedScenario<I>) -> Option<CheckResult<I>> {
    let mut sum = Ratio::zero();
    for s in &f.singularities {
        sum = sum + baum_bott(s)?;
    }
    let n = normal_class(f);
    let sq = f.dot(&n, &n).ok()?;
    Some(CheckResult::equality("baum_bott_sum", "Σ BB_p vs N_F²", sum, sq))
}

/// Camacho–Sad branch choice for one singularity on one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsAssignment<I: ExactInt> {
    pub curve: String,
    pub singularity: String,
    pub index: Ratio<I>,
}

/// Outcome of resolving Camacho–Sad branches over the checkable curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsResolution<I: ExactInt> {
    pub checks: Vec<CheckResult<I>>,
    pub assignments: Vec<CsAssignment<I>>,
    pub skipped: Vec<String>,
}

fn cs_checkable<I: ExactInt>(f: &FoliatedScenario<I>, c: &CurveRecord<I>) -> bool {
    c.f_invariant && f.singularities_on(&c.name).all(|s| s.lambda().is_some())
}

/// Choose, for every non-degenerate rational singularity on a checkable
/// curve, which of `λ`, `1/λ` is the index along each curve through it,
/// so that every checkable curve balances.
///
/// A point on two invariant curves gets `1/λ` on one and `λ` on the other.
pub fn resolve_camacho_sad<I: ExactInt>(f: &FoliatedScenario<I>) -> CsResolution<I> {
    let mut skipped = Vec::new();
    let checkable: Vec<&CurveRecord<I>> = f
        .curves
        .iter()
        .filter(|c| {
            let ok = cs_checkable(f, c);
            if c.f_invariant && !ok {
                skipped.push(c.name.clone());
            }
            ok
        })
        .collect();
    let names: BTreeSet<&str> = checkable.iter().map(|c| c.name.as_str()).collect();

    // variables: singularities on at least one checkable curve
    let mut vars: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, s) in f.singularities.iter().enumerate() {
        let on: Vec<&str> = s
            .incident_curves
            .iter()
            .map(String::as_str)
            .filter(|c| names.contains(c))
            .collect();
        if !on.is_empty() {
            vars.push((i, on));
        }
    }

    let mut checks = Vec::new();
    let mut too_many = false;
    for (i, _) in &vars {
        let s = &f.singularities[*i];
        if invariant_curves_of(f, s).len() > 2 {
            checks.push(CheckResult::fail(
                "camacho_sad",
                format!("{} lies on more than two invariant curves", s.id),
            ));
            too_many = true;
        }
    }
    if too_many {
        return CsResolution {
            checks,
            assignments: Vec::new(),
            skipped,
        };
    }

    // branch b for singularity s: index along curve c
    let index = |s: &SingularityRecord<I>, branch: bool, curve: &str| -> Ratio<I> {
        let l = s.lambda().expect("checkable").clone();
        let inv = invariant_curves_of(f, s);
        let first = inv.first().copied() == Some(curve);
        // branch false: λ on the first invariant curve, 1/λ on the second
        if first != branch {
            l
        } else {
            l.recip()
        }
    };
    let squares: BTreeMap<&str, Ratio<I>> = checkable
        .iter()
        .map(|c| (c.name.as_str(), f.dot(&c.cls, &c.cls).unwrap_or_else(|_| Ratio::zero())))
        .collect();
    let curve_vars: BTreeMap<&str, Vec<usize>> = checkable
        .iter()
        .map(|c| {
            let vs = vars
                .iter()
                .enumerate()
                .filter(|(_, (_, on))| on.contains(&c.name.as_str()))
                .map(|(k, _)| k)
                .collect();
            (c.name.as_str(), vs)
        })
        .collect();

    let mut branch: Vec<Option<bool>> = vec![None; vars.len()];
    let ok = search(&mut branch, &vars, &curve_vars, &squares, f, &index);

    let mut assignments = Vec::new();
    if ok {
        for c in &checkable {
            let mut map = BTreeMap::new();
            for &k in &curve_vars[c.name.as_str()] {
                let s = &f.singularities[vars[k].0];
                let v = index(s, branch[k].unwrap_or(false), &c.name);
                assignments.push(CsAssignment {
                    curve: c.name.clone(),
                    singularity: s.id.clone(),
                    index: v.clone(),
                });
                map.insert(s.id.clone(), v);
            }
            checks.push(camacho_sad_check(f, c, &map));
        }
    } else {
        let list: Vec<&str> = checkable.iter().map(|c| c.name.as_str()).collect();
        checks.push(CheckResult::fail(
            "camacho_sad",
            format!("no choice of λ or 1/λ balances all of {list:?}"),
        ));
    }
    CsResolution {
        checks,
        assignments,
        skipped,
    }
}

fn invariant_curves_of<'a, I: ExactInt>(f: &FoliatedScenario<I>, s: &'a SingularityRecord<I>) -> Vec<&'a str> {
    s.incident_curves
        .iter()
        .map(String::as_str)
        .filter(|c| f.curve(c).is_some_and(|r| r.f_invariant))
        .collect()
}

type IndexFn<'a, I> = dyn Fn(&SingularityRecord<I>, bool, &str) -> Ratio<I> + 'a;

fn search<I: ExactInt>(
    branch: &mut Vec<Option<bool>>,
    vars: &[(usize, Vec<&str>)],
    curve_vars: &BTreeMap<&str, Vec<usize>>,
    squares: &BTreeMap<&str, Ratio<I>>,
    f: &FoliatedScenario<I>,
    index: &IndexFn<'_, I>,
) -> bool {
    // propagate: a curve with one open variable forces it
    let mut trail = Vec::new();
    loop {
        let mut progressed = false;
        for (curve, vs) in curve_vars {
            let open: Vec<usize> = vs.iter().copied().filter(|&k| branch[k].is_none()).collect();
            let partial = vs
                .iter()
                .filter_map(|&k| branch[k].map(|b| index(&f.singularities[vars[k].0], b, curve)))
                .fold(Ratio::zero(), |a, b| a + b);
            match open.len() {
                0 => {
                    if partial != squares[curve] {
                        undo(branch, &trail);
                        return false;
                    }
                }
                1 => {
                    let k = open[0];
                    let s = &f.singularities[vars[k].0];
                    let need = squares[curve].clone() - partial;
                    let choice = [false, true].into_iter().find(|&b| index(s, b, curve) == need);
                    match choice {
                        Some(b) => {
                            branch[k] = Some(b);
                            trail.push(k);
                            progressed = true;
                        }
                        None => {
                            undo(branch, &trail);
                            return false;
                        }
                    }
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }
    let Some(k) = branch.iter().position(Option::is_none) else {
        return true;
    };
    for b in [false, true] {
        branch[k] = Some(b);
        if search(branch, vars, curve_vars, squares, f, index) {
            return true;
        }
    }
    branch[k] = None;
    undo(branch, &trail);
    false
}

fn undo(branch: &mut [Option<bool>], trail: &[usize]) {
    for &k in trail {
        branch[k] = None;
    }
}

/// Structural and identity checks; downstream computations refuse a
/// scenario with any failure.
pub fn validate<I: ExactInt>(f: &FoliatedScenario<I>) -> ValidationReport<I> {
    let mut checks = Vec::new();
    let mut warnings = vec!["negative curves that are not declared are invisible to the Zariski solver".to_string()];

    checks.push(structure_check(f));
    if !checks[0].passed {
        return ValidationReport { checks, warnings };
    }

    checks.push(singularity_count_check(f));
    if let Some(c) = baum_bott_check(f) {
        checks.push(c);
    }

    let reduced = f.is_reduced();
    for c in &f.curves {
        if c.f_invariant {
            let z = match z_total(f, c) {
                Ok(z) => z,
                Err(e) => {
                    checks.push(CheckResult::fail(format!("z_index:{}", c.name), e.to_string()));
                    continue;
                }
            };
            if reduced && z.is_negative() {
                checks.push(CheckResult::fail(
                    format!("z_nonnegative:{}", c.name),
                    format!("Z(F, {}) = {} on a reduced foliation", c.name, fmt_ratio(&z)),
                ));
            }
            let smooth_rational = f.arithmetic_genus(c).map(|g| g.is_zero()).unwrap_or(false);
            let all_nondegenerate = f.singularities_on(&c.name).all(|s| !s.is_saddle_node());
            if smooth_rational && all_nondegenerate {
                let count = f.singularities_on(&c.name).count() as i64;
                checks.push(CheckResult::equality(
                    format!("z_index:{}", c.name),
                    "Z(F, C) vs points on C",
                    z,
                    rat(count),
                ));
            }
        } else {
            match tangency(f, c) {
                Ok(_) => {}
                Err(e) => checks.push(CheckResult::fail(format!("tangency:{}", c.name), e.to_string())),
            }
        }
    }

    let cs = resolve_camacho_sad(f);
    checks.extend(cs.checks);
    if !cs.skipped.is_empty() {
        warnings.push(format!(
            "Camacho–Sad not checked on {} (saddle-node or non-rational points)",
            cs.skipped.join(", ")
        ));
    }

    checks.extend(epsilon_checks(f));
    ValidationReport { checks, warnings }
}

fn structure_check<I: ExactInt>(f: &FoliatedScenario<I>) -> CheckResult<I> {
    let rank = f.surface.rank();
    let mut problems = Vec::new();
    if f.k_foliation.rank() != rank {
        problems.push(format!(
            "K_F has length {} but the Picard rank is {rank}",
            f.k_foliation.rank()
        ));
    }
    let mut names = BTreeSet::new();
    for c in &f.curves {
        if !names.insert(c.name.as_str()) {
            problems.push(format!("duplicate curve {}", c.name));
        }
        if c.cls.rank() != rank {
            problems.push(format!("class of {} has length {}", c.name, c.cls.rank()));
        }
    }
    let mut ids = BTreeSet::new();
    for s in &f.singularities {
        if !ids.insert(s.id.as_str()) {
            problems.push(format!("duplicate singularity {}", s.id));
        }
        for c in &s.incident_curves {
            if !names.contains(c.as_str()) {
                problems.push(format!("{} references undeclared curve {c}", s.id));
            }
        }
        if s.vanishing_order == 0 {
            problems.push(format!("{} has vanishing order 0", s.id));
        }
        let a = u64::from(s.vanishing_order);
        if u64::from(s.multiplicity()) < a * a {
            problems.push(format!("{} has multiplicity below the squared vanishing order", s.id));
        }
        match &s.kind {
            SingularityKind::SaddleNode { multiplicity, .. } if *multiplicity < 2 => {
                problems.push(format!("saddle-node {} needs multiplicity ≥ 2", s.id));
            }
            SingularityKind::NonDegenerate(v) if v.rational().is_some_and(Zero::is_zero) => {
                problems.push(format!("{} has eigenvalue 0; declare it as a saddle-node", s.id));
            }
            _ => {}
        }
    }
    if problems.is_empty() {
        CheckResult::pass("structure", "names, references and multiplicities are consistent")
    } else {
        CheckResult::fail("structure", problems.join("; "))
    }
}

fn epsilon_checks<I: ExactInt>(f: &FoliatedScenario<I>) -> Vec<CheckResult<I>> {
    let mut out = Vec::new();
    for s in &f.singularities {
        let needs = s.lambda().is_some_and(is_unit_or_integer);
        match (needs, s.epsilon) {
            (true, None) => out.push(CheckResult::fail(
                format!("epsilon:{}", s.id),
                "eigenvalue in ℕ⁺ ∪ 1/ℕ⁺ needs a declared epsilon",
            )),
            (false, Some(_)) => out.push(CheckResult::fail(
                format!("epsilon:{}", s.id),
                "epsilon only applies to eigenvalues in ℕ⁺ ∪ 1/ℕ⁺",
            )),
            (true, Some(e)) if e > 1 => {
                out.push(CheckResult::fail(format!("epsilon:{}", s.id), "epsilon must be 0 or 1"))
            }
            (true, Some(1)) if f.metadata.algebraically_integral == Integrality::Yes => out.push(CheckResult::fail(
                format!("epsilon:{}", s.id),
                "an algebraically integral foliation forces epsilon = 0",
            )),
            _ => {}
        }
    }
    out
}

/// Sum of `β_p` over a set of singularities.
pub fn beta_sum<'a, I: ExactInt + 'a>(it: impl IntoIterator<Item = &'a SingularityRecord<I>>) -> Ratio<I> {
    it.into_iter()
        .map(crate::local::beta_p)
        .fold(Ratio::zero(), |a, b| a + b)
}
