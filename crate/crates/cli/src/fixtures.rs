//! The bundled fixture corpus. Expected values are closed forms, not
//! pipeline output.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use folia_core::foliation::{CurveRecord, FoliatedScenario, Integrality, Kodaira, Metadata};
use folia_core::lattice::{DivisorClass, LatticeBase, SurfaceModel};
use folia_core::local::SingularityRecord;
use folia_core::scalar::{frac, rat};
use folia_core::Scenario;

use crate::document::{Expectations, FiberDoc, FibrationDoc, ModularDoc, NodeDoc, ScenarioDocument, Q};

fn cls(v: &[i64]) -> DivisorClass<BigInt> {
    DivisorClass::from_ints(v)
}

fn q(p: i64, d: i64) -> Q {
    Q(frac(p, d))
}

fn qi(n: i64) -> Q {
    Q(rat(n))
}

fn strings(v: &[&str]) -> Option<Vec<String>> {
    Some(v.iter().map(|s| s.to_string()).collect())
}

fn doc(name: &str, f: &Scenario, ex: Expectations) -> ScenarioDocument {
    let mut d = ScenarioDocument::from_scenario(name, f);
    d.expect = Some(ex);
    d
}

fn nodal_fibers(count: usize, g: i64) -> Vec<FiberDoc> {
    vec![
        FiberDoc {
            pa_reduced: g,
            f_red_sq: 0,
            nodes: vec![NodeDoc {
                a: 1,
                b: 1,
                in_negative_part: false,
            }],
            alpha: 0,
        };
        count
    ]
}

fn i0star() -> FiberDoc {
    FiberDoc {
        pa_reduced: 0,
        f_red_sq: -2,
        nodes: vec![
            NodeDoc {
                a: 2,
                b: 1,
                in_negative_part: true,
            };
            4
        ],
        alpha: 0,
    }
}

fn modular(k: Q, d: Q, c: Q) -> Option<ModularDoc> {
    Some(ModularDoc {
        kappa: k,
        delta: d,
        chi: c,
    })
}

/// P² blown up nine times; twelve nodes and two saddle-nodes, slope 12/7.
pub fn slope_12_7() -> ScenarioDocument {
    let s = SurfaceModel::p2().blown_up(9);
    let k = [3, -1, -1, -1, -1, -1, -1, -1, 0, 0];
    let mut f = FoliatedScenario::new(s, cls(&k));
    f.curves.push(CurveRecord::transverse("R", cls(&k)));
    for i in 1..=12 {
        f.singularities
            .push(SingularityRecord::nondegenerate(format!("n{i}"), rat(-1)));
    }
    for i in 1..=2 {
        f.singularities
            .push(SingularityRecord::saddle_node(format!("s{i}"), 2, Some(rat(3))));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        relatively_minimal: true,
        ..Metadata::default()
    };
    doc(
        "slope_12_7",
        &f,
        Expectations {
            singularity_count: Some(qi(16)),
            negative_part: Some(BTreeMap::new()),
            vol: Some(qi(2)),
            c1_sq: Some(qi(2)),
            c2: Some(qi(12)),
            chi: Some(q(7, 6)),
            slope: Some(q(12, 7)),
            status: Some("transcendental".into()),
            fired_rules: strings(&["R3"]),
            ..Expectations::default()
        },
    )
}

/// Hirzebruch(n), K_F = C₀ + nF, nef with vol = n and p_g = n + 2.
pub fn hirzebruch_first(n: i64) -> ScenarioDocument {
    let mut f = FoliatedScenario::new(SurfaceModel::hirzebruch(n as u32), cls(&[1, n]));
    f.curves.push(CurveRecord::invariant("C0", cls(&[1, 0])));
    f.curves.push(CurveRecord::invariant("F0", cls(&[0, 1])));
    f.curves.push(CurveRecord::invariant("Finf", cls(&[0, 1])));
    f.singularities
        .push(SingularityRecord::nonrational("a0").on(&["C0", "F0"]));
    f.singularities
        .push(SingularityRecord::nonrational("a1").on(&["C0", "Finf"]));
    for i in 1..=2 {
        f.singularities
            .push(SingularityRecord::nonrational(format!("b{i}")).on(&["F0"]));
        f.singularities
            .push(SingularityRecord::nonrational(format!("c{i}")).on(&["Finf"]));
    }
    for i in 1..=2 * n {
        f.singularities.push(SingularityRecord::nonrational(format!("q{i}")));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        relatively_minimal: n >= 2,
        ..Metadata::default()
    };
    doc(
        &format!("hirzebruch_first_n{n}"),
        &f,
        Expectations {
            singularity_count: Some(qi(2 * n + 6)),
            negative_part: Some(BTreeMap::new()),
            nef_part: Some(vec![qi(1), qi(n)]),
            vol: Some(qi(n)),
            c1_sq: Some(qi(n)),
            c2: Some(qi(0)),
            chi: Some(q(n, 12)),
            slope: Some(qi(12)),
            p_g: Some(n + 2),
            equalities: strings(&["noether_first"]),
            status: Some("transcendental".into()),
            fired_rules: strings(&["R5"]),
            ..Expectations::default()
        },
    )
}

/// Hirzebruch(n), K_F = C₀ + (n−1)F with N = C₀/n.
pub fn hirzebruch_second(n: i64) -> ScenarioDocument {
    let mut f = FoliatedScenario::new(SurfaceModel::hirzebruch(n as u32), cls(&[1, n - 1]));
    f.curves.push(CurveRecord::invariant("C0", cls(&[1, 0])));
    f.curves.push(CurveRecord::invariant("Finf", cls(&[0, 1])));
    f.singularities
        .push(SingularityRecord::nondegenerate("p0", rat(-n)).on(&["C0", "Finf"]));
    for i in 1..=2 {
        f.singularities
            .push(SingularityRecord::nonrational(format!("f{i}")).on(&["Finf"]));
    }
    for i in 1..=2 * n - 1 {
        f.singularities.push(SingularityRecord::nonrational(format!("q{i}")));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        relatively_minimal: true,
        ..Metadata::default()
    };
    let vol = q((n - 1) * (n - 1), n);
    doc(
        &format!("hirzebruch_second_n{n}"),
        &f,
        Expectations {
            singularity_count: Some(qi(2 * n + 2)),
            negative_part: Some(BTreeMap::from([("C0".to_string(), q(1, n))])),
            nef_part: Some(vec![q(n - 1, n), qi(n - 1)]),
            vol: Some(vol.clone()),
            c1_sq: Some(vol),
            c2: Some(qi(0)),
            chi: Some(q((n - 1) * (n - 1), 12 * n)),
            slope: Some(qi(12)),
            p_g: Some(n),
            equalities: strings(&["noether_second"]),
            status: Some("transcendental".into()),
            fired_rules: strings(&["R5"]),
            ..Expectations::default()
        },
    )
}

/// Relatively minimal model of a genus-g fibration by hyperelliptic curves,
/// with one non-reduced fiber of type `2Γ̄₀ + Σ m_i E_i` and 2g nodal fibers.
///
/// Basis `H, Γ̄₀, E₁ … E_{4g+4}`.
pub fn double_cover(g: i64) -> ScenarioDocument {
    let ne = (4 * g + 4) as usize;
    let r = ne + 2;
    let e = |i: usize| i + 1; // basis slot of E_i
    let mut mult = vec![0i64; r];
    mult[1] = 2;
    for i in 1..=ne - 3 {
        mult[e(i)] = i as i64;
    }
    mult[e(ne - 2)] = 4 * g + 2;
    mult[e(ne - 1)] = 2 * g + 2;
    mult[e(ne)] = 2 * g + 1;
    let mut edges: Vec<(usize, usize)> = vec![(1, e(ne - 1)), (e(ne - 1), e(ne - 2)), (e(ne - 2), e(ne - 3))];
    edges.extend((1..ne - 3).map(|i| (e(i), e(i + 1))));
    edges.push((e(ne - 2), e(ne)));

    let mut gram = vec![vec![0i64; r]; r];
    gram[0][1] = 1;
    gram[1][0] = 1;
    gram[1][1] = -(g + 1);
    for i in 1..=ne {
        gram[e(i)][e(i)] = -2;
    }
    for &(a, b) in &edges {
        gram[a][b] = 1;
        gram[b][a] = 1;
    }
    let mut canonical: Vec<i64> = mult.iter().map(|m| -m).collect();
    canonical[0] = g - 1;
    let s = SurfaceModel::lattice(LatticeBase {
        gram,
        canonical,
        chi_top: 4 * g + 8,
        chi_structure: 1,
    })
    .expect("double cover lattice is valid");

    let mut kf = vec![1i64; r];
    kf[0] = g - 1;
    let mut f = FoliatedScenario::new(s, cls(&kf));
    let name = |slot: usize| {
        if slot == 1 {
            "Gamma0".to_string()
        } else {
            format!("E{}", slot - 1)
        }
    };
    f.curves
        .push(CurveRecord::invariant(name(1), DivisorClass::basis(r, 1)));
    for i in 1..=ne {
        f.curves
            .push(CurveRecord::invariant(name(e(i)), DivisorClass::basis(r, e(i))));
    }
    let mut sorted = edges.clone();
    sorted.sort();
    for (k, &(a, b)) in sorted.iter().enumerate() {
        let (na, nb) = (name(a), name(b));
        f.singularities
            .push(SingularityRecord::nondegenerate(format!("x{}", k + 1), frac(-mult[b], mult[a])).on(&[&na, &nb]));
    }
    for i in 1..=2 * g {
        f.singularities
            .push(SingularityRecord::nondegenerate(format!("t{i}"), rat(-1)));
    }
    f.metadata = Metadata {
        p_g: Some(g),
        kodaira: Some(Kodaira::Two),
        algebraically_integral: Integrality::Yes,
        k_pseudo_effective: true,
        relatively_minimal: true,
    };

    // N: the long arm as one chain, Γ̄₀-E_{4g+3} as a second, E_{4g+4} alone
    let big = 4 * g + 2;
    let mut negative = BTreeMap::new();
    for i in 1..=ne - 3 {
        negative.insert(format!("E{i}"), q(big - i as i64, big));
    }
    negative.insert("Gamma0".to_string(), q(2, 2 * g + 1));
    negative.insert(format!("E{}", ne - 1), q(1, 2 * g + 1));
    negative.insert(format!("E{ne}"), q(1, 2));
    let mut nef: Vec<Q> = kf.iter().map(|&k| qi(k)).collect();
    for slot in 1..r {
        if let Some(x) = negative.get(&name(slot)) {
            nef[slot] = Q(nef[slot].0.clone() - x.0.clone());
        }
    }
    let vol = q(2 * g * (g - 1), 2 * g + 1);
    let chi = q(6 * g * g, 12 * (2 * g + 1));

    let mut fiber_nodes: Vec<NodeDoc> = sorted
        .iter()
        .map(|&(a, b)| NodeDoc {
            a: mult[a],
            b: mult[b],
            in_negative_part: true,
        })
        .collect();
    fiber_nodes.sort_by_key(|n| (n.a, n.b));
    let mut fibers = vec![FiberDoc {
        pa_reduced: 0,
        f_red_sq: -(g + 1),
        nodes: fiber_nodes,
        alpha: 0,
    }];
    fibers.extend(nodal_fibers(2 * g as usize, g));

    let mut d = doc(
        &format!("double_cover_g{g}"),
        &f,
        Expectations {
            singularity_count: Some(qi(6 * g + 4)),
            negative_part: Some(negative),
            nef_part: Some(nef),
            vol: Some(vol.clone()),
            c1_sq: Some(vol.clone()),
            c2: Some(qi(2 * g)),
            chi: Some(chi.clone()),
            slope: Some(q(4 * (g - 1), g)),
            p_g: Some(g),
            genus_bound: Some(g),
            equalities: strings(&["noether_third", "slope_inequality"]),
            status: Some("algebraically integral".into()),
            fired_rules: strings(&["R4", "declared"]),
            modular: modular(vol, qi(2 * g), chi),
        },
    );
    d.fibration = Some(FibrationDoc {
        genus: g,
        k_f_sq: qi(4 * g - 4),
        e_f: qi(8 * g + 4),
        chi_f: qi(g),
        singular_fibers: fibers,
    });
    d
}

/// A degree-two foliation on P² with two invariant lines.
pub fn degree2_plane() -> ScenarioDocument {
    let mut f = FoliatedScenario::new(SurfaceModel::p2(), cls(&[1]));
    f.curves.push(CurveRecord::invariant("L0", cls(&[1])));
    f.curves.push(CurveRecord::invariant("Linf", cls(&[1])));
    f.singularities
        .push(SingularityRecord::nonrational("s1").on(&["L0", "Linf"]));
    for i in 2..=3 {
        f.singularities
            .push(SingularityRecord::nonrational(format!("s{i}")).on(&["L0"]));
    }
    for i in 4..=5 {
        f.singularities
            .push(SingularityRecord::nonrational(format!("s{i}")).on(&["Linf"]));
    }
    for i in 6..=7 {
        f.singularities.push(SingularityRecord::nonrational(format!("s{i}")));
    }
    f.metadata.kodaira = Some(Kodaira::Two);
    doc(
        "degree2_plane",
        &f,
        Expectations {
            singularity_count: Some(qi(7)),
            negative_part: Some(BTreeMap::new()),
            vol: Some(qi(1)),
            c1_sq: Some(qi(1)),
            c2: Some(qi(0)),
            chi: Some(q(1, 12)),
            p_g: Some(3),
            equalities: strings(&["noether_first", "pg_cap"]),
            status: Some("transcendental".into()),
            fired_rules: strings(&["R5"]),
            ..Expectations::default()
        },
    )
}

/// Lines through a point: K_F = −L and one radial point.
pub fn pencil_of_lines() -> ScenarioDocument {
    let mut f = FoliatedScenario::new(SurfaceModel::p2(), cls(&[-1]));
    f.singularities
        .push(SingularityRecord::nondegenerate("o", rat(1)).with_epsilon(0));
    f.metadata = Metadata {
        kodaira: Some(Kodaira::NegInfinity),
        algebraically_integral: Integrality::Yes,
        k_pseudo_effective: false,
        ..Metadata::default()
    };
    doc(
        "pencil_of_lines",
        &f,
        Expectations {
            singularity_count: Some(qi(1)),
            vol: Some(qi(0)),
            c1_sq: Some(qi(0)),
            c2: Some(qi(0)),
            chi: Some(qi(0)),
            status: Some("algebraically integral".into()),
            fired_rules: strings(&["R1"]),
            ..Expectations::default()
        },
    )
}

/// Semistable genus-2 fibration with ten nodal fibers, on the lattice
/// spanned by a fiber and the canonical class of the foliation.
pub fn semistable_genus2() -> ScenarioDocument {
    let s = SurfaceModel::lattice(LatticeBase {
        gram: vec![vec![0, 2], vec![2, 2]],
        canonical: vec![-2, 1],
        chi_top: 6,
        chi_structure: 0,
    })
    .expect("valid lattice");
    let mut f = FoliatedScenario::new(s, cls(&[0, 1]));
    for i in 1..=10 {
        f.singularities
            .push(SingularityRecord::nondegenerate(format!("n{i}"), rat(-1)));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        algebraically_integral: Integrality::Yes,
        relatively_minimal: true,
        ..Metadata::default()
    };
    let mut d = doc(
        "semistable_genus2",
        &f,
        Expectations {
            singularity_count: Some(qi(10)),
            vol: Some(qi(2)),
            c1_sq: Some(qi(2)),
            c2: Some(qi(10)),
            chi: Some(qi(1)),
            slope: Some(qi(2)),
            genus_bound: Some(2),
            equalities: strings(&["slope_inequality"]),
            status: Some("algebraically integral".into()),
            fired_rules: strings(&["R4", "declared"]),
            modular: modular(qi(2), qi(10), qi(1)),
            ..Expectations::default()
        },
    );
    d.fibration = Some(FibrationDoc {
        genus: 2,
        k_f_sq: qi(2),
        e_f: qi(10),
        chi_f: qi(1),
        singular_fibers: nodal_fibers(10, 2),
    });
    d
}

/// Rational elliptic surface with twelve nodal fibers.
pub fn elliptic_nonisotrivial() -> ScenarioDocument {
    let mut k = vec![-1i64; 10];
    k[0] = 3;
    let mut f = FoliatedScenario::new(SurfaceModel::p2().blown_up(9), cls(&k));
    for i in 1..=12 {
        f.singularities
            .push(SingularityRecord::nondegenerate(format!("n{i}"), rat(-1)));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::One),
        algebraically_integral: Integrality::Yes,
        relatively_minimal: true,
        ..Metadata::default()
    };
    let mut d = doc(
        "elliptic_nonisotrivial",
        &f,
        Expectations {
            singularity_count: Some(qi(12)),
            vol: Some(qi(0)),
            c1_sq: Some(qi(0)),
            c2: Some(qi(12)),
            chi: Some(qi(1)),
            status: Some("algebraically integral".into()),
            fired_rules: strings(&["R2"]),
            modular: modular(qi(0), qi(12), qi(1)),
            ..Expectations::default()
        },
    );
    d.fibration = Some(FibrationDoc {
        genus: 1,
        k_f_sq: qi(0),
        e_f: qi(12),
        chi_f: qi(1),
        singular_fibers: nodal_fibers(12, 1),
    });
    d
}

/// Rational elliptic surface with two I₀* fibers, basis
/// `σ, F, C₁, B₁₂..B₁₄, C₂, B₂₂..B₂₄`.
pub fn isotrivial_two_i0star() -> ScenarioDocument {
    let r = 10;
    let mut g = vec![vec![0i64; r]; r];
    g[0][0] = -1;
    g[0][1] = 1;
    g[1][0] = 1;
    for c in [2usize, 6] {
        g[c][c] = -2;
        for b in c + 1..c + 4 {
            g[b][b] = -2;
            g[c][b] = 1;
            g[b][c] = 1;
        }
    }
    let mut k = vec![0i64; r];
    k[1] = -1;
    let s = SurfaceModel::lattice(LatticeBase {
        gram: g,
        canonical: k,
        chi_top: 12,
        chi_structure: 1,
    })
    .expect("valid lattice");
    let mut kf = vec![0i64; r];
    kf[1] = 1;
    kf[2] = -1;
    kf[6] = -1;
    let mut f = FoliatedScenario::new(s, cls(&kf));
    let mut negative = BTreeMap::new();
    for (t, c) in [(1, 2usize), (2, 6)] {
        let cname = format!("C{t}");
        f.curves
            .push(CurveRecord::invariant(cname.clone(), DivisorClass::basis(r, c)));
        // the tail meeting the section: F − 2C − the other three
        let mut first = vec![0i64; r];
        first[1] = 1;
        first[c] = -2;
        for b in c + 1..c + 4 {
            first[b] = -1;
        }
        let mut tails = vec![cls(&first)];
        tails.extend((c + 1..c + 4).map(|b| DivisorClass::basis(r, b)));
        for (j, tc) in tails.into_iter().enumerate() {
            let bname = format!("B{t}{}", j + 1);
            f.curves.push(CurveRecord::invariant(bname.clone(), tc));
            f.singularities
                .push(SingularityRecord::nondegenerate(format!("x{t}{}", j + 1), rat(-2)).on(&[&bname, &cname]));
            negative.insert(bname, q(1, 2));
        }
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Zero),
        relatively_minimal: true,
        ..Metadata::default()
    };
    let mut d = doc(
        "isotrivial_elliptic_two_i0star",
        &f,
        Expectations {
            singularity_count: Some(qi(8)),
            negative_part: Some(negative),
            vol: Some(qi(0)),
            c1_sq: Some(qi(0)),
            c2: Some(qi(0)),
            chi: Some(qi(0)),
            status: Some("undetermined".into()),
            fired_rules: Some(vec![]),
            modular: modular(qi(0), qi(0), qi(0)),
            ..Expectations::default()
        },
    );
    d.fibration = Some(FibrationDoc {
        genus: 1,
        k_f_sq: qi(0),
        e_f: qi(12),
        chi_f: qi(1),
        singular_fibers: vec![i0star(), i0star()],
    });
    d
}

/// Elliptic fibration whose only singular fiber is of type I₀*.
pub fn i0star_fibration() -> ScenarioDocument {
    ScenarioDocument {
        name: "i0star_fibration".into(),
        surface: None,
        curves: vec![],
        k_foliation: None,
        singularities: vec![],
        metadata: None,
        fibration: Some(FibrationDoc {
            genus: 1,
            k_f_sq: qi(0),
            e_f: qi(6),
            chi_f: q(1, 2),
            singular_fibers: vec![i0star()],
        }),
        expect: Some(Expectations {
            modular: modular(qi(0), qi(0), qi(0)),
            ..Expectations::default()
        }),
    }
}

/// Every bundled fixture, in a fixed order.
pub fn corpus() -> Vec<ScenarioDocument> {
    let mut out = vec![slope_12_7()];
    out.extend((1..=50).map(hirzebruch_first));
    out.extend((2..=50).map(hirzebruch_second));
    out.extend((2..=6).map(double_cover));
    out.push(degree2_plane());
    out.push(pencil_of_lines());
    out.push(semistable_genus2());
    out.push(elliptic_nonisotrivial());
    out.push(isotrivial_two_i0star());
    out.push(i0star_fibration());
    out
}

/// The fixtures written to disk: every singleton plus one member of each
/// family.
pub const ON_DISK: &[&str] = &[
    "slope_12_7",
    "hirzebruch_first_n3",
    "hirzebruch_second_n4",
    "double_cover_g2",
    "degree2_plane",
    "pencil_of_lines",
    "semistable_genus2",
    "elliptic_nonisotrivial",
    "isotrivial_elliptic_two_i0star",
    "i0star_fibration",
];
