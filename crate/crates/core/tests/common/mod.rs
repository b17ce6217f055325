#![allow(dead_code)]

use folia_core::foliation::{CurveRecord, FoliatedScenario, Integrality, Kodaira, Metadata};
use folia_core::lattice::{DivisorClass, LatticeBase, SurfaceModel};
use folia_core::local::SingularityRecord;
use folia_core::scalar::rat;
use folia_core::zariski::chain_eigenvalues;
use folia_core::{ExactInt, Scenario};

pub fn cls<I: ExactInt>(v: &[i64]) -> DivisorClass<I> {
    DivisorClass::from_ints(v)
}

/// P² blown up nine times, K_F = 3L − E₁ − … − E₇, twelve λ = −1 points
/// and two saddle-nodes.
pub fn slope_fixture() -> Scenario {
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
    f
}

/// Hirzebruch(n) with K_F = C₀ + (n−1)F: one λ = −n point on C₀, an
/// invariant fiber through it and 2n + 1 further non-rational points.
pub fn hirzebruch_second(n: i64) -> Scenario {
    let s = SurfaceModel::hirzebruch(n as u32);
    let mut f = FoliatedScenario::new(s, cls(&[1, n - 1]));
    f.curves.push(CurveRecord::invariant("C0", cls(&[1, 0])));
    f.curves.push(CurveRecord::invariant("Finf", cls(&[0, 1])));
    f.singularities
        .push(SingularityRecord::nondegenerate("p0", rat(-n)).on(&["C0", "Finf"]));
    for i in 1..=2 {
        f.singularities
            .push(SingularityRecord::nonrational(format!("f{i}")).on(&["Finf"]));
    }
    for i in 1..=(2 * n - 1) {
        f.singularities.push(SingularityRecord::nonrational(format!("q{i}")));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        relatively_minimal: true,
        ..Metadata::default()
    };
    f
}

/// Hirzebruch(n) with K_F = C₀ + nF.
pub fn hirzebruch_first(n: i64) -> Scenario {
    let s = SurfaceModel::hirzebruch(n as u32);
    let mut f = FoliatedScenario::new(s, cls(&[1, n]));
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
    for i in 1..=(2 * n) {
        f.singularities.push(SingularityRecord::nonrational(format!("q{i}")));
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Two),
        relatively_minimal: n >= 2,
        ..Metadata::default()
    };
    f
}

/// A degree-two foliation on P², K_F = L.
pub fn degree2_plane() -> Scenario {
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
    f
}

/// Rational elliptic surface with two I₀* fibers; basis
/// σ, F, C₁, B₁₂..B₁₄, C₂, B₂₂..B₂₄.
pub fn isotrivial_two_i0star() -> Scenario {
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
    .unwrap();
    let mut kf = vec![0i64; r];
    kf[1] = 1;
    kf[2] = -1;
    kf[6] = -1;
    let mut f = FoliatedScenario::new(s, cls(&kf));
    for (t, c) in [(1, 2usize), (2, 6)] {
        let cname = format!("C{t}");
        f.curves
            .push(CurveRecord::invariant(cname.clone(), DivisorClass::basis(r, c)));
        // the branch meeting the section: F − 2C − the other three
        let mut first = vec![0i64; r];
        first[1] = 1;
        first[c] = -2;
        for b in c + 1..c + 4 {
            first[b] = -1;
        }
        let mut branches = vec![cls::<num_bigint::BigInt>(&first)];
        branches.extend((c + 1..c + 4).map(|b| DivisorClass::basis(r, b)));
        for (j, bc) in branches.into_iter().enumerate() {
            let bname = format!("B{t}{}", j + 1);
            f.curves.push(CurveRecord::invariant(bname.clone(), bc));
            f.singularities
                .push(SingularityRecord::nondegenerate(format!("x{t}{}", j + 1), rat(-2)).on(&[&bname, &cname]));
        }
    }
    f.metadata = Metadata {
        kodaira: Some(Kodaira::Zero),
        relatively_minimal: true,
        ..Metadata::default()
    };
    f
}

/// Lattice {X, C₁..C_r} with X² = 0, X·C₁ = −1 and a chain of curves with
/// C_j² = −e_j; K_F = X, K_S = 0, every C_j rational.
pub fn chain_lattice<I: ExactInt>(e: &[i64]) -> FoliatedScenario<I> {
    let r = e.len() + 1;
    let mut g = vec![vec![0i64; r]; r];
    g[0][1] = -1;
    g[1][0] = -1;
    for (j, &ej) in e.iter().enumerate() {
        g[j + 1][j + 1] = -ej;
        if j + 2 < r {
            g[j + 1][j + 2] = 1;
            g[j + 2][j + 1] = 1;
        }
    }
    let s = SurfaceModel::lattice(LatticeBase {
        gram: g,
        canonical: vec![0; r],
        chi_top: 0,
        chi_structure: 0,
    })
    .unwrap();
    let mut f = FoliatedScenario::new(s, DivisorClass::basis(r, 0));
    for j in 1..r {
        let mut c = CurveRecord::invariant(format!("C{j}"), DivisorClass::basis(r, j));
        // K_S = 0 does not see the genus of an odd curve
        c.arithmetic_genus_hint = Some(0);
        f.curves.push(c);
    }
    f
}

/// Chain lattice plus the singular points of the chain eigenvalue model:
/// p_k = C_k ∩ C_{k+1} for k < r and p_r on C_r alone.
pub fn chain_with_points<I: ExactInt>(e: &[i64]) -> FoliatedScenario<I> {
    let mut f = chain_lattice::<I>(e);
    let lams = chain_eigenvalues::<I>(e).unwrap();
    let r = e.len();
    for (k, l) in lams.into_iter().enumerate() {
        let lam = l.value().unwrap().clone();
        let here = format!("C{}", k + 1);
        let next = format!("C{}", k + 2);
        let s = SingularityRecord::nondegenerate(format!("p{}", k + 1), lam);
        let s = if k + 1 < r {
            s.on(&[&here, &next])
        } else {
            s.on(&[&here])
        };
        f.singularities.push(s);
    }
    f
}

pub fn integral(mut f: Scenario) -> Scenario {
    f.metadata.algebraically_integral = Integrality::Yes;
    f
}

/// The pencil of lines through a point: K_F = −L and one radial point.
pub fn pencil_of_lines() -> Scenario {
    let mut f = FoliatedScenario::new(SurfaceModel::p2(), cls(&[-1]));
    f.singularities
        .push(SingularityRecord::nondegenerate("o", rat(1)).with_epsilon(0));
    f.metadata = Metadata {
        kodaira: Some(Kodaira::NegInfinity),
        k_pseudo_effective: false,
        algebraically_integral: Integrality::Yes,
        ..Metadata::default()
    };
    f
}

/// A non-isotrivial elliptic fibration on P² blown up nine times, twelve
/// nodal fibers.
pub fn elliptic_nonisotrivial() -> Scenario {
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
    f
}

/// Degree-d foliation on P² with the given free points, truncated so the
/// Milnor numbers fit, padded with non-rational points.
pub fn plane_with_points(d: i64, points: Vec<SingularityRecord<num_bigint::BigInt>>) -> Scenario {
    let mut f = FoliatedScenario::new(SurfaceModel::p2(), cls(&[d - 1]));
    let want = d * d + d + 1;
    let mut used = 0i64;
    for s in points {
        let m = i64::from(s.multiplicity());
        // keep one slot for a non-rational point
        if used + m < want {
            used += m;
            f.singularities.push(s);
        }
    }
    for i in used..want {
        f.singularities.push(SingularityRecord::nonrational(format!("z{i}")));
    }
    f
}
