use folia_cli::document::Q;
use folia_cli::fixtures::{corpus, double_cover, hirzebruch_first, hirzebruch_second, pencil_of_lines, slope_12_7};
use folia_cli::pipeline::InvariantReport;
use folia_cli::{render, run_pipeline};
use folia_core::scalar::{frac, rat};

fn check<'a>(r: &'a InvariantReport, name: &str) -> &'a folia_cli::pipeline::CheckLine {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn slope_report() {
    let r = run_pipeline(&slope_12_7());
    assert!(r.passed, "{}", render::text(&r));
    let c = r.chern.as_ref().unwrap();
    assert_eq!(
        (c.c1_sq.0.clone(), c.c2.0.clone(), c.chi.0.clone()),
        (rat(2), rat(12), frac(7, 6))
    );
    assert_eq!(r.slope, Some(Q(frac(12, 7))));
    let v = r.verdict.as_ref().unwrap();
    assert_eq!(v.status, "transcendental");
    assert_eq!(v.rules.iter().map(|x| x.id.as_str()).collect::<Vec<_>>(), ["R3"]);
}

#[test]
fn first_family_n3() {
    let r = run_pipeline(&hirzebruch_first(3));
    assert!(r.passed, "{}", render::text(&r));
    assert_eq!(r.vol, Some(Q(rat(3))));
    assert_eq!(r.p_g, Some(5));
    let b = r.bounds.iter().find(|b| b.name == "noether_first").unwrap();
    assert!(b.equality && b.holds);
    assert!(r.zariski.as_ref().unwrap().negative_part.is_empty());
}

#[test]
fn corrupted_expectation_fails() {
    let n = 5;
    let mut d = hirzebruch_second(n);
    let ex = d.expect.as_mut().unwrap();
    let c0 = ex.negative_part.as_mut().unwrap().get_mut("C0").unwrap();
    c0.0 = c0.0.clone() + frac(1, n);
    let r = run_pipeline(&d);
    assert!(!r.passed);
    let bad: Vec<_> = r.expectations.iter().filter(|e| !e.passed).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].key, "negative_part");
    assert_eq!(bad[0].expected, "C0: 2/5");
    assert_eq!(bad[0].actual, "C0: 1/5");
    assert!(render::text(&r).contains("negative_part"));
}

#[test]
fn inconsistent_model_reports_the_check() {
    let mut d = hirzebruch_second(4);
    d.singularities.pop();
    let r = run_pipeline(&d);
    assert!(!r.passed);
    assert!(!check(&r, "singularity_count").passed);
}

#[test]
fn double_cover_sections() {
    let r = run_pipeline(&double_cover(3));
    assert!(r.passed, "{}", render::text(&r));
    let z = r.zariski.as_ref().unwrap();
    let e1 = z.negative_part.iter().find(|c| c.curve == "E1").unwrap();
    assert_eq!(e1.coefficient, Q(frac(13, 14)));
    assert!(check(&r, "modular_crosscheck").passed);
    let s = check(&r, "slope_inequality");
    assert_eq!(s.residual, Some(Q(rat(0))));
    let v = r.verdict.as_ref().unwrap();
    assert!(v.rules.iter().all(|x| x.id != "R5"));
    assert_eq!(v.genus_bound, Some(3));
}

#[test]
fn not_pseudo_effective() {
    let r = run_pipeline(&pencil_of_lines());
    assert!(r.passed, "{}", render::text(&r));
    assert!(r.zariski.is_none());
    assert_eq!(r.vol, Some(Q(rat(0))));
    assert_eq!(r.slope, None);
    assert_eq!(r.verdict.as_ref().unwrap().rules[0].id, "R1");
}

#[test]
fn non_reduced_points_are_reduced_in_the_report() {
    let mut d = hirzebruch_second(3);
    d.expect = None;
    d.singularities[0].kind.eigenvalue = Some("2/3".into());
    let r = run_pipeline(&d);
    assert_eq!(r.reductions.len(), 1);
    let red = &r.reductions[0];
    assert_eq!(red.ending, "dicritical");
    assert!(i64::from(red.steps) <= red.step_bound);
    assert!(r.chern.is_none());
    assert!(r.warnings.iter().any(|w| w.contains("reduced model")));
}

#[test]
fn reports_are_deterministic() {
    for d in corpus().iter().step_by(7) {
        let a = render::json(&run_pipeline(d));
        let b = render::json(&run_pipeline(d));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["name"], d.name.as_str());
    }
}

#[test]
fn whole_corpus_passes() {
    let failed: Vec<_> = corpus()
        .iter()
        .map(run_pipeline)
        .filter(|r| !r.passed)
        .map(|r| r.name)
        .collect();
    assert!(failed.is_empty(), "{failed:?}");
}
