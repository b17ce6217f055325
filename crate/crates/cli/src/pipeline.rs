//! validate → zariski → chern → decide, plus the fibration cross-checks
//! and the comparison with a document's expectations.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use folia_core::blowup::{reduction_step_bound, seidenberg_reduce, ResolutionEnding};
use folia_core::chern::{chern_numbers_with, decide, slope, ChernNumbers, DecisionInput};
use folia_core::fibration::{
    crosscheck_with_chern, fiber_euler, fiber_local_chern, modular_invariants, slope_inequality_check, FiberModel,
    FiberNode, FibrationModel,
};
use folia_core::foliation::{normal_class, validate};
use folia_core::local::{EigenvalueValue, SingularityKind};
use folia_core::scalar::{fmt_ratio, rat};
use folia_core::zariski::{
    chain_coefficients, chain_structure_check, coefficient_bounds_check, decomposition_contract, detect_chains, volume,
    zariski_decompose,
};
use folia_core::{Check, Chern, Fibration, Rational, Scenario};

use crate::document::{Expectations, FibrationDoc, ScenarioDocument, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
    pub warnings: Vec<String>,
    pub errors: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reductions: Vec<ReductionLine>,
    pub singularity_count: Option<Q>,
    pub zariski: Option<ZariskiSection>,
    pub vol: Option<Q>,
    pub chern: Option<ChernSection>,
    pub slope: Option<Q>,
    pub p_g: Option<i64>,
    pub bounds: Vec<BoundLine>,
    pub verdict: Option<VerdictSection>,
    pub fibration: Option<FibrationSection>,
    pub expectations: Vec<ExpectLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Q>,
}

/// Seidenberg reduction of one non-reduced point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionLine {
    pub id: String,
    pub lambda: Q,
    pub steps: u32,
    pub step_bound: i64,
    pub ending: String,
    pub resolved: Vec<String>,
    pub k_corrections: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZariskiSection {
    pub nef_part: Vec<Q>,
    pub negative_part: Vec<Coefficient>,
    pub chains: Vec<ChainLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ambiguous_chains: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    pub curve: String,
    pub coefficient: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLine {
    pub curves: Vec<String>,
    pub self_intersections: Vec<i64>,
    pub n: String,
    pub q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernSection {
    pub c1_sq: Q,
    pub c2: Q,
    pub chi: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundLine {
    pub name: String,
    /// `≥` for lower bounds, `≤` for the p_g cap.
    pub relation: String,
    pub value: Q,
    pub bound: Q,
    pub holds: bool,
    pub equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictSection {
    pub status: String,
    pub rules: Vec<RuleLine>,
    pub genus_bound: Option<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleLine {
    pub id: String,
    pub citation: String,
    pub comparison: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationSection {
    pub genus: i64,
    pub fibers: Vec<FiberLine>,
    pub modular: Option<ChernSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberLine {
    pub index: usize,
    pub euler: i64,
    pub c1_sq: Q,
    pub c2: Q,
    pub chi: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectLine {
    pub key: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

fn line(c: &Check) -> CheckLine {
    CheckLine {
        name: c.name.clone(),
        passed: c.passed,
        detail: c.detail.clone(),
        residual: c.residual.clone().map(Q),
    }
}

fn chern_section(c: &Chern) -> ChernSection {
    ChernSection {
        c1_sq: Q(c.c1_sq.clone()),
        c2: Q(c.c2.clone()),
        chi: Q(c.chi.clone()),
    }
}

fn singularity_label(s: &folia_core::Singularity) -> String {
    match &s.kind {
        SingularityKind::NonDegenerate(EigenvalueValue::Rational(l)) => format!("{}: λ = {}", s.id, fmt_ratio(l)),
        SingularityKind::NonDegenerate(EigenvalueValue::NonRational) => format!("{}: λ ∉ ℚ", s.id),
        SingularityKind::SaddleNode { multiplicity, .. } => {
            format!("{}: saddle-node of multiplicity {multiplicity}", s.id)
        }
    }
}

fn fibration_model(doc: &FibrationDoc) -> folia_core::Result<Fibration> {
    let fibers = doc
        .singular_fibers
        .iter()
        .map(|f| FiberModel {
            genus_of_fibration: doc.genus,
            pa_reduced: f.pa_reduced,
            f_red_sq: f.f_red_sq,
            nodes: f
                .nodes
                .iter()
                .map(|n| FiberNode::new(n.a, n.b, n.in_negative_part))
                .collect(),
            alpha: f.alpha,
        })
        .collect();
    FibrationModel::new(
        doc.genus,
        doc.k_f_sq.0.clone(),
        doc.e_f.0.clone(),
        doc.chi_f.0.clone(),
        fibers,
    )
}

impl InvariantReport {
    fn new(name: &str) -> Self {
        InvariantReport {
            name: name.to_string(),
            passed: false,
            checks: Vec::new(),
            warnings: Vec::new(),
            errors: Vec::new(),
            reductions: Vec::new(),
            singularity_count: None,
            zariski: None,
            vol: None,
            chern: None,
            slope: None,
            p_g: None,
            bounds: Vec::new(),
            verdict: None,
            fibration: None,
            expectations: Vec::new(),
        }
    }

    fn push(&mut self, c: &Check) {
        self.checks.push(line(c));
    }
}

/// Run every stage that applies to the document.
pub fn run_pipeline(doc: &ScenarioDocument) -> InvariantReport {
    let mut r = InvariantReport::new(&doc.name);
    let fib_genus = doc.fibration.as_ref().map(|f| f.genus);
    let mut chern: Option<Chern> = None;

    match doc.to_scenario() {
        Err(e) => r.errors.push(e.to_string()),
        Ok(Some(f)) => chern = scenario_stages(&f, fib_genus, &mut r),
        Ok(None) => {}
    }

    if let Some(fd) = &doc.fibration {
        fibration_stages(fd, chern.as_ref(), &mut r);
    }

    if let Some(ex) = &doc.expect {
        compare(ex, &mut r);
    }
    r.passed = r.errors.is_empty() && r.checks.iter().all(|c| c.passed) && r.expectations.iter().all(|e| e.passed);
    r
}

fn scenario_stages(f: &Scenario, fib_genus: Option<i64>, r: &mut InvariantReport) -> Option<Chern> {
    let v = validate(f);
    for c in &v.checks {
        r.push(c);
    }
    r.warnings.extend(v.warnings.iter().cloned());
    if v.get("structure").is_some_and(|c| !c.passed) {
        return None;
    }

    let n = normal_class(f);
    match f.dot(&n, &f.k_foliation) {
        Ok(nk) => r.singularity_count = Some(Q(nk + rat(f.surface.chi_top()))),
        Err(e) => r.errors.push(e.to_string()),
    }

    for s in f.singularities.iter().filter(|s| !s.is_reduced()) {
        let l = s.lambda().expect("non-reduced points have a rational eigenvalue");
        // ε is only needed on the resonant branch; 0 otherwise
        match seidenberg_reduce(l, s.epsilon.unwrap_or(0)) {
            Ok(res) => r.reductions.push(ReductionLine {
                id: s.id.clone(),
                lambda: Q(l.clone()),
                steps: res.steps,
                step_bound: reduction_step_bound(l).unwrap_or(0),
                ending: match res.ending {
                    ResolutionEnding::Dicritical => "dicritical".into(),
                    ResolutionEnding::SaddleNodeEnding => "saddle-node".into(),
                },
                resolved: res.resolved.iter().map(singularity_label).collect(),
                k_corrections: res.k_corrections,
            }),
            Err(e) => r.errors.push(format!("reduction of {}: {e}", s.id)),
        }
    }

    let md = &f.metadata;
    let c;
    let vol: Rational;
    if !md.k_pseudo_effective {
        c = ChernNumbers::zero();
        vol = Rational::zero();
    } else {
        let z = match zariski_decompose(f) {
            Ok(z) => z,
            Err(e) => {
                r.errors.push(e.to_string());
                return None;
            }
        };
        match decomposition_contract(f, &z) {
            Ok(chk) => r.push(&chk),
            Err(e) => r.errors.push(e.to_string()),
        }
        let chains = match detect_chains(f) {
            Ok(d) => d,
            Err(e) => {
                r.errors.push(e.to_string());
                return None;
            }
        };
        if md.relatively_minimal {
            r.push(&chain_structure_check(&z, &chains));
            for ch in &chains.chains {
                if ch.curves.iter().any(|c| z.coefficient(c).is_some()) {
                    r.push(&coefficient_bounds_check(ch));
                }
            }
        }
        if !chains.ambiguous.is_empty() {
            r.warnings
                .push("some chains have two possible orientations and were not used".into());
        }
        vol = match volume(f, &z) {
            Ok(v) => v,
            Err(e) => {
                r.errors.push(e.to_string());
                return None;
            }
        };
        r.zariski = Some(ZariskiSection {
            nef_part: z.nef_part.coeffs.iter().cloned().map(Q).collect(),
            negative_part: z
                .negative_part
                .iter()
                .map(|(c, x)| Coefficient {
                    curve: c.clone(),
                    coefficient: Q(x.clone()),
                })
                .collect(),
            chains: chains
                .chains
                .iter()
                .map(|ch| {
                    let cc = chain_coefficients::<num_bigint::BigInt>(&ch.self_intersections)
                        .expect("detected chains have e ≥ 2");
                    ChainLine {
                        curves: ch.curves.clone(),
                        self_intersections: ch.self_intersections.clone(),
                        n: cc.n.to_string(),
                        q: cc.q.to_string(),
                    }
                })
                .collect(),
            ambiguous_chains: chains.ambiguous.clone(),
        });
        if !f.is_reduced() {
            r.warnings
                .push("Chern numbers need a reduced model; reduce the listed points first".into());
            r.vol = Some(Q(vol));
            return None;
        }
        c = match chern_numbers_with(f, &z) {
            Ok(c) => c,
            Err(e) => {
                r.errors.push(e.to_string());
                return None;
            }
        };
        if md.relatively_minimal || z.negative_part.is_empty() {
            r.push(&Check::equality(
                "c1_sq_equals_vol",
                "c1² vs P²",
                c.c1_sq.clone(),
                vol.clone(),
            ));
        }
    }
    r.vol = Some(Q(vol.clone()));
    r.chern = Some(chern_section(&c));
    r.push(&Check::equality(
        "noether_equality",
        "c1² + c2 vs 12χ",
        c.c1_sq.clone() + c.c2.clone(),
        c.chi.clone() * rat(12),
    ));
    if md.k_pseudo_effective && vol.is_positive() {
        r.slope = slope(&c).ok().map(Q);
    }

    let h0 = f.surface.h0_line_bundle(&f.k_foliation).ok().flatten();
    r.p_g = match (md.p_g, h0) {
        (Some(p), Some(h)) => {
            r.push(&Check::equality(
                "p_g_agreement",
                "declared p_g vs h0(K_F)",
                rat(p),
                rat(h),
            ));
            Some(p)
        }
        (p, h) => p.or(h),
    };

    let input = DecisionInput {
        p_g: r.p_g,
        fibration_genus: fib_genus,
    };
    match decide(f, &c, &vol, &input) {
        Ok(v) => {
            r.bounds = v
                .bounds
                .iter()
                .map(|b| BoundLine {
                    name: b.name.clone(),
                    relation: if b.name == "pg_cap" { "≤" } else { "≥" }.into(),
                    value: Q(b.value.clone()),
                    bound: Q(b.bound.clone()),
                    holds: b.holds,
                    equality: b.equality,
                })
                .collect();
            r.verdict = Some(VerdictSection {
                status: v.status.to_string(),
                rules: v
                    .fired_rules
                    .iter()
                    .map(|x| RuleLine {
                        id: x.id.clone(),
                        citation: x.citation.clone(),
                        comparison: x.comparison.clone(),
                    })
                    .collect(),
                genus_bound: v.genus_bound,
                flags: v.flags.clone(),
            });
        }
        Err(e) => r.errors.push(e.to_string()),
    }
    Some(c)
}

fn fibration_stages(fd: &FibrationDoc, chern: Option<&Chern>, r: &mut InvariantReport) {
    let fb = match fibration_model(fd) {
        Ok(fb) => fb,
        Err(e) => {
            r.errors.push(e.to_string());
            return;
        }
    };
    let mut sec = FibrationSection {
        genus: fb.genus,
        fibers: Vec::new(),
        modular: None,
    };
    for (i, fm) in fb.singular_fibers.iter().enumerate() {
        match fiber_local_chern::<num_bigint::BigInt>(fm) {
            Ok(l) => sec.fibers.push(FiberLine {
                index: i,
                euler: fiber_euler(fm),
                c1_sq: Q(l.c1_sq),
                c2: Q(l.c2),
                chi: Q(l.chi),
            }),
            Err(e) => r.errors.push(format!("fiber {i}: {e}")),
        }
    }
    match modular_invariants(&fb) {
        Ok(m) => {
            if fb.genus >= 2 && m.chi.is_positive() {
                r.push(&slope_inequality_check(fb.genus, &m.kappa, &m.chi));
            }
            sec.modular = Some(ChernSection {
                c1_sq: Q(m.kappa),
                c2: Q(m.delta),
                chi: Q(m.chi),
            });
            if let Some(c) = chern {
                r.push(&crosscheck_with_chern(&fb, c));
            }
        }
        Err(e) => r.errors.push(e.to_string()),
    }
    r.fibration = Some(sec);
}

fn show<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "absent".to_string(), T::to_string)
}

fn compare(ex: &Expectations, r: &mut InvariantReport) {
    let mut out = Vec::new();
    let mut eq = |key: &str, expected: String, actual: String| {
        out.push(ExpectLine {
            key: key.to_string(),
            passed: expected == actual,
            expected,
            actual,
        });
    };
    let chern = r.chern.as_ref();
    if let Some(v) = &ex.singularity_count {
        eq("singularity_count", v.to_string(), show(&r.singularity_count));
    }
    if let Some(v) = &ex.negative_part {
        let actual: BTreeMap<String, Q> = r
            .zariski
            .iter()
            .flat_map(|z| z.negative_part.iter().map(|c| (c.curve.clone(), c.coefficient.clone())))
            .collect();
        let fmt = |m: &BTreeMap<String, Q>| {
            m.iter()
                .map(|(c, x)| format!("{c}: {x}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        eq("negative_part", fmt(v), fmt(&actual));
    }
    if let Some(v) = &ex.nef_part {
        let fmt = |v: &[Q]| v.iter().map(Q::to_string).collect::<Vec<_>>().join(", ");
        let actual = r.zariski.as_ref().map(|z| fmt(&z.nef_part));
        eq("nef_part", fmt(v), show(&actual));
    }
    if let Some(v) = &ex.vol {
        eq("vol", v.to_string(), show(&r.vol));
    }
    if let Some(v) = &ex.c1_sq {
        eq("c1_sq", v.to_string(), show(&chern.map(|c| c.c1_sq.clone())));
    }
    if let Some(v) = &ex.c2 {
        eq("c2", v.to_string(), show(&chern.map(|c| c.c2.clone())));
    }
    if let Some(v) = &ex.chi {
        eq("chi", v.to_string(), show(&chern.map(|c| c.chi.clone())));
    }
    if let Some(v) = &ex.slope {
        eq("slope", v.to_string(), show(&r.slope));
    }
    if let Some(v) = &ex.p_g {
        eq("p_g", v.to_string(), show(&r.p_g));
    }
    let verdict = r.verdict.as_ref();
    if let Some(v) = &ex.genus_bound {
        eq("genus_bound", v.to_string(), show(&verdict.and_then(|v| v.genus_bound)));
    }
    if let Some(names) = &ex.equalities {
        for n in names {
            let actual = r
                .bounds
                .iter()
                .find(|b| &b.name == n)
                .map(|b| if b.equality { "equality" } else { "strict" });
            // the slope inequality of a fibration is reported as a check
            let actual = actual.map(str::to_string).or_else(|| {
                r.checks.iter().find(|c| &c.name == n).map(|c| match &c.residual {
                    Some(x) if c.passed && x.0.is_zero() => "equality".to_string(),
                    _ => "strict".to_string(),
                })
            });
            eq(&format!("equality:{n}"), "equality".into(), show(&actual));
        }
    }
    if let Some(v) = &ex.status {
        eq("status", v.clone(), show(&verdict.map(|v| v.status.clone())));
    }
    if let Some(v) = &ex.fired_rules {
        let actual = verdict.map(|v| v.rules.iter().map(|x| x.id.clone()).collect::<Vec<_>>().join(", "));
        eq("fired_rules", v.join(", "), show(&actual));
    }
    if let Some(m) = &ex.modular {
        let actual = r.fibration.as_ref().and_then(|f| f.modular.as_ref());
        eq(
            "modular.kappa",
            m.kappa.to_string(),
            show(&actual.map(|x| x.c1_sq.clone())),
        );
        eq(
            "modular.delta",
            m.delta.to_string(),
            show(&actual.map(|x| x.c2.clone())),
        );
        eq("modular.chi", m.chi.to_string(), show(&actual.map(|x| x.chi.clone())));
    }
    r.expectations = out;
}
