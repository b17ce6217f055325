//! Plain text and JSON forms of a report.

use std::fmt::Write;

use crate::pipeline::{InvariantReport, ZariskiSection};

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok  "
    } else {
        "FAIL"
    }
}

pub fn json(r: &InvariantReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("reports always serialize");
    s.push('\n');
    s
}

pub fn header(r: &InvariantReport, out: &mut String) {
    let _ = writeln!(
        out,
        "scenario {}: {}",
        r.name,
        if r.passed { "passed" } else { "FAILED" }
    );
    for e in &r.errors {
        let _ = writeln!(out, "error: {e}");
    }
}

pub fn checks(r: &InvariantReport, out: &mut String) {
    let _ = writeln!(out, "checks");
    for c in &r.checks {
        let _ = writeln!(out, "  [{}] {}: {}", mark(c.passed), c.name, c.detail);
    }
    for w in &r.warnings {
        let _ = writeln!(out, "  note: {w}");
    }
}

fn zariski_section(z: &ZariskiSection, out: &mut String) {
    let p: Vec<String> = z.nef_part.iter().map(|q| q.to_string()).collect();
    let _ = writeln!(out, "  P = [{}]", p.join(", "));
    if z.negative_part.is_empty() {
        let _ = writeln!(out, "  N = 0");
    }
    for c in &z.negative_part {
        let _ = writeln!(out, "  N ∋ {} {}", c.coefficient, c.curve);
    }
    for ch in &z.chains {
        let e: Vec<String> = ch.self_intersections.iter().map(i64::to_string).collect();
        let _ = writeln!(
            out,
            "  chain {} (e = {}): n/q = {}/{}",
            ch.curves.join("-"),
            e.join(", "),
            ch.n,
            ch.q
        );
    }
    for a in &z.ambiguous_chains {
        let _ = writeln!(out, "  ambiguous chain {}", a.join("-"));
    }
}

pub fn zariski(r: &InvariantReport, out: &mut String) {
    let _ = writeln!(out, "zariski");
    match &r.zariski {
        Some(z) => zariski_section(z, out),
        None => {
            let _ = writeln!(out, "  not computed");
        }
    }
    if let Some(v) = &r.vol {
        let _ = writeln!(out, "  vol = {v}");
    }
}

pub fn verdict(r: &InvariantReport, out: &mut String) {
    if let Some(c) = &r.chern {
        let _ = writeln!(out, "chern numbers: c1² = {}, c2 = {}, χ = {}", c.c1_sq, c.c2, c.chi);
    }
    if let Some(s) = &r.slope {
        let _ = writeln!(out, "slope λ = {s}");
    }
    if let Some(p) = r.p_g {
        let _ = writeln!(out, "p_g = {p}");
    }
    if !r.bounds.is_empty() {
        let _ = writeln!(out, "bounds");
        for b in &r.bounds {
            let rel = match (b.equality, b.holds) {
                (true, _) => "=",
                (false, true) => b.relation.as_str(),
                (false, false) => "violates",
            };
            let _ = writeln!(out, "  {}: {} {rel} {}", b.name, b.value, b.bound);
        }
    }
    match &r.verdict {
        Some(v) => {
            let _ = writeln!(out, "verdict: {}", v.status);
            for x in &v.rules {
                let _ = writeln!(out, "  {} [{}]: {}", x.id, x.citation, x.comparison);
            }
            if let Some(g) = v.genus_bound {
                let _ = writeln!(out, "  genus bound: {g}");
            }
            for f in &v.flags {
                let _ = writeln!(out, "  flag: {f}");
            }
        }
        None => {
            let _ = writeln!(out, "verdict: none");
        }
    }
}

pub fn fibration(r: &InvariantReport, out: &mut String) {
    let Some(fb) = &r.fibration else {
        let _ = writeln!(out, "fibration: none");
        return;
    };
    let _ = writeln!(out, "fibration of genus {}", fb.genus);
    for f in &fb.fibers {
        let _ = writeln!(
            out,
            "  fiber {}: e = {}, c1² = {}, c2 = {}, χ = {}",
            f.index, f.euler, f.c1_sq, f.c2, f.chi
        );
    }
    if let Some(m) = &fb.modular {
        let _ = writeln!(out, "  κ = {}, δ = {}, χ = {}", m.c1_sq, m.c2, m.chi);
    }
}

pub fn expectations(r: &InvariantReport, out: &mut String) {
    if r.expectations.is_empty() {
        return;
    }
    let _ = writeln!(out, "expectations");
    for e in &r.expectations {
        if e.passed {
            let _ = writeln!(out, "  [ok  ] {} = {}", e.key, e.expected);
        } else {
            let _ = writeln!(out, "  [FAIL] {}: expected {}, got {}", e.key, e.expected, e.actual);
        }
    }
}

/// The full report.
pub fn text(r: &InvariantReport) -> String {
    let mut out = String::new();
    header(r, &mut out);
    checks(r, &mut out);
    if let Some(n) = &r.singularity_count {
        let _ = writeln!(out, "singular points by the global count: {n}");
    }
    for red in &r.reductions {
        let _ = writeln!(
            out,
            "reduction of {} (λ = {}): {} steps of at most {}, {} ending, K corrections {}",
            red.id, red.lambda, red.steps, red.step_bound, red.ending, red.k_corrections
        );
        for s in &red.resolved {
            let _ = writeln!(out, "  {s}");
        }
    }
    zariski(r, &mut out);
    verdict(r, &mut out);
    fibration(r, &mut out);
    expectations(r, &mut out);
    out
}
