//! The ten acceptance criteria, one line each. Exact comparisons only.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use folia_cli::document::{ScenarioDocument, Q};
use folia_cli::fixtures::{
    corpus, degree2_plane, double_cover, hirzebruch_first, hirzebruch_second, i0star_fibration, semistable_genus2,
    slope_12_7,
};
use folia_cli::pipeline::InvariantReport;
use folia_cli::{render, run_pipeline};
use folia_core::blowup::{
    blow_up_singularity, reduction_step_bound, seidenberg_reduce, BlowupCenter, ResolutionEnding,
};
use folia_core::chern::direct_chi;
use folia_core::fibration::{
    fiber_local_chern, modular_invariants, slope_inequality_check, FiberModel, FiberNode, FibrationModel,
};
use folia_core::foliation::{CurveRecord, FoliatedScenario};
use folia_core::lattice::{DivisorClass, LatticeBase, SurfaceModel};
use folia_core::local::{beta, beta_p, chi_local, chi_p, SingularityRecord};
use folia_core::scalar::{frac, rat};
use folia_core::zariski::{
    chain_coefficients, chain_eigenvalues, chain_mu, coefficient_bounds_check, detect_chains, zariski_decompose,
};
use folia_core::{Rational, Scenario, Singularity};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(p: i64, d: i64) -> Q {
    Q(frac(p, d))
}

fn qi(n: i64) -> Q {
    Q(rat(n))
}

fn report(d: &ScenarioDocument) -> Result<InvariantReport, String> {
    let r = run_pipeline(d);
    if r.passed {
        Ok(r)
    } else {
        Err(format!("{} failed:\n{}", d.name, render::text(&r)))
    }
}

fn bound_equality(r: &InvariantReport, name: &str) -> bool {
    r.bounds.iter().any(|b| b.name == name && b.equality && b.holds)
}

fn chern_of(r: &InvariantReport) -> Result<(Q, Q, Q), String> {
    let c = r
        .chern
        .as_ref()
        .ok_or_else(|| format!("{}: no Chern numbers", r.name))?;
    Ok((c.c1_sq.clone(), c.c2.clone(), c.chi.clone()))
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    ensure!(e < limit, "took {e:?}, limit {limit:?}");
    Ok(())
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let r = report(&slope_12_7())?;
    ensure!(
        chern_of(&r)? == (qi(2), qi(12), q(7, 6)),
        "Chern numbers {:?}",
        chern_of(&r)?
    );
    ensure!(r.slope == Some(q(12, 7)), "slope {:?}", r.slope);
    let v = r.verdict.as_ref().ok_or("no verdict")?;
    ensure!(v.status == "transcendental", "status {}", v.status);
    ensure!(v.rules.len() == 1 && v.rules[0].id == "R3", "rules {:?}", v.rules);
    within(t, Duration::from_secs(1))?;
    Ok(format!("(2, 12, 7/6), slope 12/7, R3 in {:?}", t.elapsed()))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    for n in 2..=50 {
        let r = report(&hirzebruch_second(n))?;
        let z = r.zariski.as_ref().ok_or("no decomposition")?;
        ensure!(
            z.negative_part.len() == 1 && z.negative_part[0].curve == "C0" && z.negative_part[0].coefficient == q(1, n),
            "n = {n}: N = {:?}",
            z.negative_part
        );
        let vol = Q(rat::<BigInt>(n - 2) + frac(1, n));
        ensure!(r.vol.as_ref() == Some(&vol), "n = {n}: vol {:?}", r.vol);
        let (c1, c2, chi) = chern_of(&r)?;
        ensure!(c1 == vol && c2 == qi(0), "n = {n}: c1² {c1}, c2 {c2}");
        ensure!(chi.0 * rat(12) == vol.0, "n = {n}: χ {}", vol);
        ensure!(r.p_g == Some(n), "n = {n}: p_g {:?}", r.p_g);
        ensure!(
            bound_equality(&r, "noether_second"),
            "n = {n}: no second-bound equality"
        );
        ensure!(
            r.singularity_count == Some(qi(2 * n + 2)),
            "n = {n}: count {:?}",
            r.singularity_count
        );
        ensure!(r.slope == Some(qi(12)), "n = {n}: slope {:?}", r.slope);
    }
    within(t, Duration::from_secs(2))?;
    Ok(format!("n = 2..50 in {:?}", t.elapsed()))
}

fn criterion_3() -> Outcome {
    for n in 1..=50 {
        let d = hirzebruch_first(n);
        ensure!(
            d.metadata.as_ref().is_none_or(|m| m.p_g.is_none()),
            "p_g must come from h0"
        );
        let r = report(&d)?;
        ensure!(r.vol == Some(qi(n)), "n = {n}: vol {:?}", r.vol);
        ensure!(r.p_g == Some(n + 2), "n = {n}: p_g {:?}", r.p_g);
        ensure!(bound_equality(&r, "noether_first"), "n = {n}: no first-bound equality");
    }
    let r = report(&degree2_plane())?;
    ensure!(
        r.singularity_count == Some(qi(7)),
        "plane count {:?}",
        r.singularity_count
    );
    ensure!(
        r.checks.iter().any(|c| c.name == "singularity_count" && c.passed),
        "count check missing"
    );
    Ok("n = 1..50, plane count 7".into())
}

fn criterion_4() -> Outcome {
    for g in 2..=6 {
        let r = report(&double_cover(g))?;
        let z = r.zariski.as_ref().ok_or("no decomposition")?;
        let big = 4 * g + 2;
        let ne = 4 * g + 4;
        let mut want: Vec<(String, Q)> = (1..=ne - 3).map(|i| (format!("E{i}"), q(big - i, big))).collect();
        want.push(("Gamma0".into(), q(2, 2 * g + 1)));
        want.push((format!("E{}", ne - 1), q(1, 2 * g + 1)));
        want.push((format!("E{ne}"), q(1, 2)));
        want.sort();
        let mut got: Vec<(String, Q)> = z
            .negative_part
            .iter()
            .map(|c| (c.curve.clone(), c.coefficient.clone()))
            .collect();
        got.sort();
        ensure!(got == want, "g = {g}: N = {got:?}");
        // P = K_F − N, K_F = (g−1)H + every other basis curve
        let mut p = vec![qi(1); ne as usize + 2];
        p[0] = qi(g - 1);
        p[1] = Q(rat::<BigInt>(1) - frac(2, 2 * g + 1));
        for i in 1..=ne - 3 {
            p[i as usize + 1] = q(i, big);
        }
        p[ne as usize] = Q(rat::<BigInt>(1) - frac(1, 2 * g + 1));
        p[ne as usize + 1] = q(1, 2);
        ensure!(z.nef_part == p, "g = {g}: P = {:?}", z.nef_part);
        ensure!(r.vol == Some(q(2 * g * (g - 1), 2 * g + 1)), "g = {g}: vol {:?}", r.vol);
        ensure!(bound_equality(&r, "noether_third"), "g = {g}: no third-bound equality");
        let v = r.verdict.as_ref().ok_or("no verdict")?;
        ensure!(
            v.rules
                .iter()
                .all(|x| !["R1", "R2", "R3", "R5"].contains(&x.id.as_str())),
            "g = {g}: rules {:?}",
            v.rules
        );
    }
    Ok("g = 2..6".into())
}

/// Lattice {X, C₁..C_r}, X·C₁ = −1, chain C_j² = −e_j, K_F = X.
fn chain_lattice(e: &[i64]) -> FoliatedScenario<i128> {
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
    .expect("chain lattice");
    let mut f = FoliatedScenario::new(s, DivisorClass::basis(r, 0));
    for j in 1..r {
        let mut c = CurveRecord::invariant(format!("C{j}"), DivisorClass::basis(r, j));
        c.arithmetic_genus_hint = Some(0);
        f.curves.push(c);
    }
    f
}

/// `e₁ − 1/(e₂ − 1/(…))`.
fn continued_fraction(e: &[i64]) -> Ratio<i128> {
    let mut x = Ratio::from_integer(i128::from(*e.last().unwrap()));
    for &ej in e.iter().rev().skip(1) {
        x = Ratio::from_integer(i128::from(ej)) - x.recip();
    }
    x
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=8);
        let e: Vec<i64> = (0..len).map(|_| rng.gen_range(2..=7)).collect();
        let c = chain_coefficients::<i128>(&e).map_err(|x| format!("{e:?}: {x}"))?;
        ensure!(
            Ratio::new(c.n, c.q) == continued_fraction(&e),
            "{e:?}: n/q = {}/{}",
            c.n,
            c.q
        );

        let s = chain_eigenvalues::<i128>(&e)
            .map_err(|x| x.to_string())?
            .iter()
            .map(|l| beta(&-*l.value().expect("chain eigenvalues are rational")))
            .fold(Ratio::zero(), |a, b| a + b);
        ensure!(s == Ratio::new(c.q, c.n), "{e:?}: Σβ = {s}");

        let f = chain_lattice(&e);
        let z = zariski_decompose(&f).map_err(|x| format!("{e:?}: {x}"))?;
        let got: Vec<Ratio<i128>> = z.negative_part.iter().map(|(_, x)| *x).collect();
        ensure!(got == c.b, "{e:?}: solver {got:?} vs recursion {:?}", c.b);
        let n = z.negative_class(&f);
        let n_sq = f.dot(&n, &n).map_err(|x| x.to_string())?;
        ensure!(n_sq == -s, "{e:?}: N² = {n_sq}");

        for (j, (b, &ej)) in c.b.iter().zip(&e).enumerate() {
            let bound = if j == 0 {
                Ratio::new(1, i128::from(ej - 1))
            } else {
                Ratio::new(1, i128::from(2 * ej - 3))
            };
            ensure!(b < &bound, "{e:?}: b_{} = {b} ≥ {bound}", j + 1);
        }
        let chains = detect_chains(&f).map_err(|x| x.to_string())?;
        ensure!(chains.chains.len() == 1, "{e:?}: {} chains", chains.chains.len());
        ensure!(
            coefficient_bounds_check::<i128>(&chains.chains[0]).passed,
            "{e:?}: bounds check"
        );

        ensure!(c.xi.windows(2).all(|w| w[0] > w[1]), "{e:?}: ξ = {:?}", c.xi);
        let mu = chain_mu::<i128>(&e).map_err(|x| x.to_string())?;
        ensure!(mu.windows(2).all(|w| w[0].gcd(&w[1]) == 1), "{e:?}: μ = {mu:?}");
    }
    within(t, Duration::from_secs(10))?;
    Ok(format!("10000 chains in {:?}", t.elapsed()))
}

fn random_ratio(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let p: i64 = rng.gen_range(-200..=200);
        if p != 0 {
            return frac(p, rng.gen_range(1..=200));
        }
    }
}

fn center(l: &Rational) -> BlowupCenter<BigInt> {
    BlowupCenter::Singular(SingularityRecord::nondegenerate("p", l.clone()))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let one = Rational::one();
    let twelfth = frac::<BigInt>(1, 12);
    for _ in 0..10_000 {
        let u = random_ratio(&mut rng);
        let inv = u.recip();
        // oracle: gcd²/(ab) on the unreduced pair
        let (a, b) = (u.numer() * BigInt::from(3), u.denom() * BigInt::from(3));
        let g = a.gcd(&b);
        ensure!(beta(&u) == Ratio::new(&g * &g, a * b), "β({u})");
        ensure!(beta(&u) == beta(&inv), "β inversion at {u}");
        ensure!(chi_local(&u) == chi_local(&inv), "χ inversion at {u}");
        if u != one && u != -one.clone() {
            let (s, t) = (&u + &one, &inv + &one);
            ensure!(beta(&u) == beta(&s) + beta(&t), "β shift at {u}");
            let chi = |x: &Rational| chi_local(x).map_err(|e| e.to_string());
            ensure!(chi(&u)? == chi(&s)? + chi(&t)?, "χ shift at {u}");
        }

        // (ii)
        if u != one {
            let p: Singularity = SingularityRecord::nondegenerate("p", u.clone());
            let out = blow_up_singularity(&center(&u), None).map_err(|e| e.to_string())?;
            let (x, y) = (&out.children[0], &out.children[1]);
            ensure!(beta_p(&p) == beta_p(x) + beta_p(y), "case (ii) β at {u}");
            ensure!(
                chi_p(&p).unwrap() == chi_p(x).unwrap() + chi_p(y).unwrap(),
                "case (ii) χ at {u}"
            );
        }
        // (iv)
        let m = rng.gen_range(2..=12);
        let sn: Singularity = SingularityRecord::saddle_node("s", m, Some(u.clone()));
        let out = blow_up_singularity(&BlowupCenter::Singular(sn.clone()), None).map_err(|e| e.to_string())?;
        let (x, y) = (&out.children[0], &out.children[1]);
        ensure!(beta_p(&sn) == beta_p(x) + beta_p(y) - &one, "case (iv) β at bb = {u}");
        ensure!(
            chi_p(&sn).unwrap() == chi_p(x).unwrap() + chi_p(y).unwrap() - &twelfth,
            "case (iv) χ at bb = {u}"
        );
    }
    // (i): a smooth point acquires a λ = −1 point, β = 0 = 1 − 1, χ = 0
    let out = blow_up_singularity::<BigInt>(&BlowupCenter::Regular, None).map_err(|e| e.to_string())?;
    ensure!(
        out.children.len() == 1 && beta_p(&out.children[0]) - &one == Rational::zero(),
        "case (i) β"
    );
    ensure!(chi_p(&out.children[0]) == Some(Rational::zero()), "case (i) χ");
    // (iii)
    let p: Singularity = SingularityRecord::nondegenerate("p", one.clone());
    let out = blow_up_singularity(&center(&one), Some(1)).map_err(|e| e.to_string())?;
    ensure!(beta_p(&p) == beta_p(&out.children[0]) - &one, "case (iii) β, ε = 1");
    ensure!(
        chi_p(&p).unwrap() == chi_p(&out.children[0]).unwrap() - &twelfth,
        "case (iii) χ, ε = 1"
    );
    let out = blow_up_singularity(&center(&one), Some(0)).map_err(|e| e.to_string())?;
    ensure!(
        out.children.is_empty() && beta_p(&p) == -one.clone(),
        "case (iii) β, ε = 0"
    );
    Ok("10000 rationals, cases (i)-(iv)".into())
}

fn criterion_7() -> Outcome {
    let mut pairs = 0;
    for m1 in 1i64..=60 {
        for m2 in 1i64..=60 {
            if m1.gcd(&m2) != 1 {
                continue;
            }
            pairs += 1;
            let l: Rational = frac(m1, m2);
            let bound = reduction_step_bound(&l).map_err(|e| e.to_string())?;
            for eps in [0u8, 1] {
                let r = seidenberg_reduce(&l, eps).map_err(|e| format!("{l}: {e}"))?;
                ensure!(i64::from(r.steps) <= bound, "{l}: {} steps > {bound}", r.steps);
                ensure!(r.resolved.iter().all(|s| s.is_reduced()), "{l}: non-reduced output");
                match r.ending {
                    ResolutionEnding::Dicritical => {
                        let sum = r.resolved.iter().map(beta_p).fold(Rational::zero(), |a, b| a + b);
                        ensure!(sum == beta(&-l.clone()) + Rational::one(), "{l}, ε = {eps}: Σβ = {sum}");
                    }
                    ResolutionEnding::SaddleNodeEnding => {
                        let sn: Vec<_> = r.resolved.iter().filter(|s| s.is_saddle_node()).collect();
                        ensure!(
                            sn.len() == 1 && sn[0].multiplicity() == 2,
                            "{l}, ε = {eps}: saddle-nodes {sn:?}"
                        );
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} coprime pairs, ε ∈ {{0, 1}}"))
}

fn modular_of(d: &ScenarioDocument) -> Result<(Q, Q, Q), String> {
    let r = report(d)?;
    let m = r.fibration.and_then(|f| f.modular).ok_or("no modular invariants")?;
    Ok((m.c1_sq, m.c2, m.chi))
}

fn criterion_8() -> Outcome {
    let d = semistable_genus2();
    let fd = d.fibration.as_ref().ok_or("no fibration")?;
    ensure!(
        fd.singular_fibers
            .iter()
            .all(|f| f.nodes.iter().all(|n| n.a == 1 && n.b == 1)),
        "not semistable"
    );
    let global = (fd.k_f_sq.clone(), fd.e_f.clone(), fd.chi_f.clone());
    ensure!(modular_of(&d)? == global, "semistable: {:?}", modular_of(&d)?);

    let d = i0star_fibration();
    let fd = d.fibration.as_ref().ok_or("no fibration")?;
    ensure!(
        (fd.k_f_sq.clone(), fd.e_f.clone(), fd.chi_f.clone()) == (qi(0), qi(6), q(1, 2)),
        "I0* data"
    );
    ensure!(modular_of(&d)? == (qi(0), qi(0), qi(0)), "I0*: {:?}", modular_of(&d)?);

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut accepted = 0;
    for _ in 0..2_000 {
        let g = rng.gen_range(1..=5);
        let fibers: Vec<FiberModel> = (0..rng.gen_range(0..=6))
            .map(|_| FiberModel {
                genus_of_fibration: g,
                pa_reduced: rng.gen_range(0..=g),
                f_red_sq: rng.gen_range(-4..=0),
                nodes: (0..rng.gen_range(0..=5))
                    .map(|_| FiberNode::new(rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_bool(0.5)))
                    .collect(),
                alpha: 0,
            })
            .collect();
        let e: i64 = fibers
            .iter()
            .map(|f| 2 * (g - f.pa_reduced) + f.nodes.len() as i64)
            .sum();
        let chi_f: Rational = frac(rng.gen_range(0..=60), 2);
        let k = &chi_f * rat::<BigInt>(12) - rat::<BigInt>(e);
        let Ok(fb) = FibrationModel::new(g, k.clone(), rat(e), chi_f.clone(), fibers) else {
            continue;
        };
        let Ok(m) = modular_invariants(&fb) else {
            continue;
        };
        accepted += 1;
        let (mut kappa, mut delta, mut chi) = (k, rat::<BigInt>(e), chi_f);
        for fm in &fb.singular_fibers {
            let l = fiber_local_chern::<BigInt>(fm).map_err(|x| x.to_string())?;
            kappa -= l.c1_sq;
            delta -= l.c2;
            chi -= l.chi;
        }
        ensure!(
            (&m.kappa, &m.delta, &m.chi) == (&kappa, &delta, &chi),
            "modular invariants disagree"
        );
        ensure!(&kappa + &delta == &chi * rat::<BigInt>(12), "κ + δ ≠ 12χ");
    }
    ensure!(accepted >= 100, "only {accepted} random models accepted");

    for (g, lam) in [(2, frac::<BigInt>(2, 1)), (3, frac(8, 3))] {
        let chi = rat::<BigInt>(3);
        let kappa = &lam * &chi;
        let c = slope_inequality_check(g, &kappa, &chi);
        ensure!(
            c.passed && c.residual == Some(Rational::zero()),
            "g = {g}: {}",
            c.detail
        );
        let below = slope_inequality_check(g, &(&kappa - frac::<BigInt>(1, 100)), &chi);
        ensure!(!below.passed, "g = {g}: slope below the bound accepted");
    }
    Ok(format!("{accepted} random models accepted; equality at 2 and 8/3"))
}

fn random_plane(rng: &mut ChaCha8Rng) -> Scenario {
    let d: i64 = rng.gen_range(1..=6);
    let mut f = FoliatedScenario::new(SurfaceModel::p2(), DivisorClass::from_ints(&[d - 1]));
    let want = d * d + d + 1;
    let mut used = 0;
    for i in 0..rng.gen_range(0..=20) {
        let (p, q) = (rng.gen_range(1..=40), rng.gen_range(1..=40));
        let s: Singularity = match rng.gen_range(0..6) {
            0 => SingularityRecord::saddle_node(format!("s{i}"), rng.gen_range(2..=4), Some(frac(p, q))),
            1 => SingularityRecord::nonrational(format!("w{i}")),
            _ => SingularityRecord::nondegenerate(format!("p{i}"), frac(-p, q)),
        };
        let m = i64::from(s.multiplicity());
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

fn criterion_9() -> Outcome {
    let twelve = rat::<BigInt>(12);
    let mut direct = 0;
    let all = corpus();
    for d in &all {
        let r = report(d)?;
        if let Some((c1, c2, chi)) = r
            .chern
            .as_ref()
            .map(|c| (c.c1_sq.0.clone(), c.c2.0.clone(), c.chi.0.clone()))
        {
            ensure!(c1 + c2 == &chi * &twelve, "{}: Noether fails", d.name);
            if let Some(f) = d.to_scenario().map_err(|e| e.to_string())? {
                if let Some(x) = direct_chi(&f).map_err(|e| e.to_string())? {
                    ensure!(x == chi, "{}: direct χ {x} vs {chi}", d.name);
                    direct += 1;
                }
            }
        }
    }
    ensure!(direct >= 5, "only {direct} fixtures have a direct χ");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..1_000 {
        let f = random_plane(&mut rng);
        let d = ScenarioDocument::from_scenario(format!("random_plane_{i}"), &f);
        let r = report(&d)?;
        let (c1, c2, chi) = chern_of(&r)?;
        ensure!(c1.0 + c2.0 == chi.0 * &twelve, "{}: Noether fails", d.name);
    }
    Ok(format!(
        "{} fixtures ({direct} with direct χ), 1000 random planes",
        all.len()
    ))
}

fn criterion_10(start: Instant) -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_folia"))
            .args(["fixtures", "run"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure!(a.status.code() == Some(0), "fixtures run exited {:?}", a.status.code());
    ensure!(a.stdout == b.stdout, "fixtures run output differs between runs");

    let all = corpus();
    let sequential: Vec<String> = all.iter().map(|d| render::json(&run_pipeline(d))).collect();
    let parallel: Vec<String> = std::thread::scope(|s| {
        let hs: Vec<_> = all
            .iter()
            .map(|d| s.spawn(move || render::json(&run_pipeline(d))))
            .collect();
        hs.into_iter().map(|h| h.join().expect("pipeline thread")).collect()
    });
    ensure!(sequential == parallel, "parallel reports differ");
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} fixtures, byte-identical; suite {:?}",
        all.len(),
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let start = Instant::now();
    let criteria: Vec<Criterion> = vec![
        ("slope 12/7 fixture", Box::new(criterion_1)),
        ("second Hirzebruch family", Box::new(criterion_2)),
        ("first Hirzebruch family", Box::new(criterion_3)),
        ("double cover fixtures", Box::new(criterion_4)),
        ("chain oracle", Box::new(criterion_5)),
        ("local invariant identities", Box::new(criterion_6)),
        ("Seidenberg reduction", Box::new(criterion_7)),
        ("fibration suite", Box::new(criterion_8)),
        ("Noether equality", Box::new(criterion_9)),
        ("determinism and corpus", Box::new(move || criterion_10(start))),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match out {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
