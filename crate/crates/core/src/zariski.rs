//! Zariski decomposition of `K_F`, F-chains and their continued fractions.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::foliation::{CheckResult, FoliatedScenario};
use crate::lattice::DivisorClass;
use crate::linalg::{solve_negative_definite, SolveError};
use crate::local::EigenvalueClass;
use crate::scalar::{fmt_ratio, int, rat, ExactInt};

/// A Hirzebruch–Jung string of invariant curves, oriented from the end
/// with `K_F·C₁ = −1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FChain {
    pub curves: Vec<String>,
    /// `e_j = −C_j²`.
    pub self_intersections: Vec<i64>,
}

/// Closed-form data of a chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCoefficients<I: ExactInt> {
    pub n: I,
    pub q: I,
    pub b: Vec<Ratio<I>>,
    /// `ξ₀ … ξ_{r+1}`.
    pub xi: Vec<I>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiDecomposition<I: ExactInt> {
    pub nef_part: DivisorClass<I>,
    /// Support curves and coefficients, in declaration order.
    pub negative_part: Vec<(String, Ratio<I>)>,
}

impl<I: ExactInt> ZariskiDecomposition<I> {
    pub fn coefficient(&self, curve: &str) -> Option<&Ratio<I>> {
        self.negative_part.iter().find(|(c, _)| c == curve).map(|(_, v)| v)
    }

    pub fn support(&self) -> BTreeSet<&str> {
        self.negative_part.iter().map(|(c, _)| c.as_str()).collect()
    }

    /// `N` as a class.
    pub fn negative_class(&self, f: &FoliatedScenario<I>) -> DivisorClass<I> {
        let mut n = DivisorClass::zero(f.surface.rank());
        for (c, v) in &self.negative_part {
            let cls = &f.curve(c).expect("support curve is declared").cls;
            n = &n + &cls.scale(v);
        }
        n
    }
}

fn check_e(e: &[i64]) -> Result<()> {
    if e.is_empty() {
        return Err(Error::domain("empty chain"));
    }
    if let Some(bad) = e.iter().find(|&&x| x < 2) {
        return Err(Error::domain(format!("chain self-intersection −{bad} is not ≤ −2")));
    }
    Ok(())
}

/// Backward recursion `ξ_{j−1} = e_j ξ_j − ξ_{j+1}` from `ξ_{r+1} = 0, ξ_r = 1`.
pub fn chain_coefficients<I: ExactInt>(e: &[i64]) -> Result<ChainCoefficients<I>> {
    check_e(e)?;
    let r = e.len();
    let mut xi = vec![I::zero(); r + 2];
    xi[r] = I::one();
    for j in (1..=r).rev() {
        xi[j - 1] = int::<I>(e[j - 1]) * xi[j].clone() - xi[j + 1].clone();
    }
    let n = xi[0].clone();
    let q = xi[1].clone();
    let b = (1..=r).map(|j| Ratio::new(xi[j].clone(), n.clone())).collect();
    Ok(ChainCoefficients { n, q, b, xi })
}

/// `N_Q² = −q/n`.
pub fn chain_negative_square<I: ExactInt>(e: &[i64]) -> Result<Ratio<I>> {
    let c = chain_coefficients::<I>(e)?;
    Ok(-Ratio::new(c.q, c.n))
}

/// Forward recursion `μ_{k+1} = e_k μ_k − μ_{k−1}` from `μ₀ = 0, μ₁ = 1`.
pub fn chain_mu<I: ExactInt>(e: &[i64]) -> Result<Vec<I>> {
    check_e(e)?;
    let mut mu = vec![I::zero(), I::one()];
    for (k, &ek) in e.iter().enumerate() {
        let next = int::<I>(ek) * mu[k + 1].clone() - mu[k].clone();
        mu.push(next);
    }
    Ok(mu)
}

/// Eigenvalues `−μ_{k+1}/μ_k` at the chain's singular points, `k = 1..r`.
pub fn chain_eigenvalues<I: ExactInt>(e: &[i64]) -> Result<Vec<EigenvalueClass<I>>> {
    let mu = chain_mu::<I>(e)?;
    (1..=e.len())
        .map(|k| EigenvalueClass::rational(-Ratio::new(mu[k + 1].clone(), mu[k].clone())))
        .collect()
}

/// Strict bounds `b₁ < 1/(e₁−1)` and `b_j < 1/(2e_j−3)` for `j ≥ 2`.
pub fn coefficient_bounds_check<I: ExactInt>(chain: &FChain) -> CheckResult<I> {
    let name = format!("coefficient_bounds:{}", chain.curves.join("-"));
    let c = match chain_coefficients::<I>(&chain.self_intersections) {
        Ok(c) => c,
        Err(e) => return CheckResult::fail(name, e.to_string()),
    };
    for (j, (b, &e)) in c.b.iter().zip(&chain.self_intersections).enumerate() {
        let bound = if j == 0 {
            Ratio::new(I::one(), int(e - 1))
        } else {
            Ratio::new(I::one(), int(2 * e - 3))
        };
        if b >= &bound {
            return CheckResult::fail(
                name,
                format!("b_{} = {} is not below {}", j + 1, fmt_ratio(b), fmt_ratio(&bound)),
            );
        }
    }
    CheckResult::pass(name, "every coefficient is below its bound")
}

/// Chains found among the declared curves, plus components whose
/// orientation could not be decided.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainDetection {
    pub chains: Vec<FChain>,
    pub ambiguous: Vec<Vec<String>>,
}

/// Maximal F-chains among the declared invariant smooth rational curves.
pub fn detect_chains<I: ExactInt>(f: &FoliatedScenario<I>) -> Result<ChainDetection> {
    let mut cand: Vec<(usize, i64, bool)> = Vec::new();
    for (i, c) in f.curves.iter().enumerate() {
        if !c.f_invariant || !f.arithmetic_genus(c)?.is_zero() {
            continue;
        }
        let sq = f.dot(&c.cls, &c.cls)?;
        let kc = f.dot(&f.k_foliation, &c.cls)?;
        if !sq.is_integer() || sq > rat(-2) {
            continue;
        }
        let first = kc == rat(-1);
        if first || kc.is_zero() {
            let e = (-sq).to_integer().to_i64().expect("self-intersection fits in i64");
            cand.push((i, e, first));
        }
    }
    let k = cand.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut broken = vec![false; k];
    for a in 0..k {
        for b in a + 1..k {
            let d = f.dot(&f.curves[cand[a].0].cls, &f.curves[cand[b].0].cls)?;
            if d.is_one() {
                adj[a].push(b);
                adj[b].push(a);
            } else if !d.is_zero() {
                broken[a] = true;
                broken[b] = true;
            }
        }
    }

    let mut seen = vec![false; k];
    let mut out = ChainDetection::default();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        let edges: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        let is_path = edges + 1 == comp.len() && comp.iter().all(|&v| adj[v].len() <= 2);
        if !is_path || comp.iter().any(|&v| broken[v]) {
            continue;
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() <= 1).collect();
        let firsts: Vec<usize> = comp.iter().copied().filter(|&v| cand[v].2).collect();
        let names = |vs: &[usize]| vs.iter().map(|&v| f.curves[cand[v].0].name.clone()).collect::<Vec<_>>();
        match firsts.as_slice() {
            [s] if ends.contains(s) => {
                let mut order = vec![*s];
                let mut prev = usize::MAX;
                let mut cur = *s;
                while let Some(&nx) = adj[cur].iter().find(|&&w| w != prev) {
                    prev = cur;
                    cur = nx;
                    order.push(cur);
                }
                out.chains.push(FChain {
                    curves: names(&order),
                    self_intersections: order.iter().map(|&v| cand[v].1).collect(),
                });
            }
            [a, b] if ends.contains(a) && ends.contains(b) => {
                let mut n = names(&comp);
                n.sort();
                out.ambiguous.push(n);
            }
            _ => {}
        }
    }
    out.chains.sort_by(|a, b| a.curves.cmp(&b.curves));
    Ok(out)
}

/// Exact Zariski decomposition of `K_F` against the declared curves.
///
/// The support grows by every declared curve the current nef candidate
/// meets negatively; each round re-solves `N·C = K_F·C` on the support.
pub fn zariski_decompose<I: ExactInt>(f: &FoliatedScenario<I>) -> Result<ZariskiDecomposition<I>> {
    if !f.metadata.k_pseudo_effective {
        return Err(Error::domain("K_F is not pseudo-effective"));
    }
    let d = &f.k_foliation;
    let m = f.curves.len();
    let mut gram = vec![vec![Ratio::<I>::zero(); m]; m];
    let mut dc = Vec::with_capacity(m);
    for i in 0..m {
        for j in 0..=i {
            let v = f.dot(&f.curves[i].cls, &f.curves[j].cls)?;
            gram[i][j] = v.clone();
            gram[j][i] = v;
        }
        dc.push(f.dot(d, &f.curves[i].cls)?);
    }

    let mut support: Vec<usize> = Vec::new();
    let mut coeffs: Vec<Ratio<I>> = Vec::new();
    loop {
        // P·C_i = D·C_i − Σ x_j C_j·C_i
        let pc: Vec<Ratio<I>> = (0..m)
            .map(|i| {
                support
                    .iter()
                    .zip(&coeffs)
                    .fold(dc[i].clone(), |acc, (&j, x)| acc - x * &gram[j][i])
            })
            .collect();
        let fresh: Vec<usize> = (0..m)
            .filter(|i| !support.contains(i) && pc[*i].is_negative())
            .collect();
        if fresh.is_empty() {
            break;
        }
        support.extend(fresh);
        support.sort_unstable();
        let sub: Vec<Vec<Ratio<I>>> = support
            .iter()
            .map(|&i| support.iter().map(|&j| gram[i][j].clone()).collect())
            .collect();
        let rhs: Vec<Ratio<I>> = support.iter().map(|&i| dc[i].clone()).collect();
        coeffs = solve_negative_definite(&sub, &rhs).map_err(|SolveError::NotNegativeDefinite { index }| {
            let names: Vec<&str> = support.iter().map(|&i| f.curves[i].name.as_str()).collect();
            Error::inconsistent(
                "negative_definite",
                format!("support {names:?} fails at leading minor {index}"),
            )
        })?;
    }

    if let Some((i, x)) = support.iter().zip(&coeffs).find(|(_, x)| !x.is_positive()) {
        return Err(Error::inconsistent(
            "negative_part",
            format!(
                "coefficient of {} is {}; K_F cannot be pseudo-effective with these curves",
                f.curves[*i].name,
                fmt_ratio(x)
            ),
        ));
    }

    let mut nef = d.clone();
    let mut negative_part = Vec::new();
    for (&i, x) in support.iter().zip(&coeffs) {
        nef = &nef - &f.curves[i].cls.scale(x);
        negative_part.push((f.curves[i].name.clone(), x.clone()));
    }
    Ok(ZariskiDecomposition {
        nef_part: nef,
        negative_part,
    })
}

/// `vol = P²`.
pub fn volume<I: ExactInt>(f: &FoliatedScenario<I>, z: &ZariskiDecomposition<I>) -> Result<Ratio<I>> {
    f.dot(&z.nef_part, &z.nef_part)
}

/// Nefness, orthogonality and definiteness of a decomposition.
pub fn decomposition_contract<I: ExactInt>(
    f: &FoliatedScenario<I>,
    z: &ZariskiDecomposition<I>,
) -> Result<CheckResult<I>> {
    let support = z.support();
    for c in &f.curves {
        let pc = f.dot(&z.nef_part, &c.cls)?;
        if support.contains(c.name.as_str()) && !pc.is_zero() {
            return Ok(CheckResult::fail(
                "zariski_contract",
                format!("P·{} = {} on the support", c.name, fmt_ratio(&pc)),
            ));
        }
        if pc.is_negative() {
            return Ok(CheckResult::fail(
                "zariski_contract",
                format!("P·{} = {} < 0", c.name, fmt_ratio(&pc)),
            ));
        }
    }
    let recomposed = &z.nef_part + &z.negative_class(f);
    if recomposed != f.k_foliation {
        return Ok(CheckResult::fail("zariski_contract", "P + N differs from K_F"));
    }
    let classes: Vec<&DivisorClass<I>> = z
        .negative_part
        .iter()
        .map(|(c, _)| &f.curve(c).expect("declared").cls)
        .collect();
    let mut g = Vec::new();
    for a in &classes {
        let mut row = Vec::new();
        for b in &classes {
            row.push(f.dot(a, b)?);
        }
        g.push(row);
    }
    if !crate::linalg::is_negative_definite(&g) {
        return Ok(CheckResult::fail(
            "zariski_contract",
            "support Gram matrix is not negative definite",
        ));
    }
    Ok(CheckResult::pass(
        "zariski_contract",
        "P nef on declared curves, P·N_i = 0, N negative definite",
    ))
}

/// For relatively minimal scenarios: the support of `N` is a disjoint union
/// of maximal F-chains, each carrying its closed-form coefficients, and
/// every coefficient is below 1.
pub fn chain_structure_check<I: ExactInt>(z: &ZariskiDecomposition<I>, chains: &ChainDetection) -> CheckResult<I> {
    let mut covered: BTreeMap<&str, Ratio<I>> = BTreeMap::new();
    for ch in &chains.chains {
        let Ok(c) = chain_coefficients::<I>(&ch.self_intersections) else {
            return CheckResult::fail("chain_structure", "invalid chain");
        };
        for (name, b) in ch.curves.iter().zip(c.b) {
            covered.insert(name.as_str(), b);
        }
    }
    for (name, x) in &z.negative_part {
        if x >= &Ratio::one() {
            return CheckResult::fail(
                "chain_structure",
                format!("coefficient of {name} is {} ≥ 1", fmt_ratio(x)),
            );
        }
        match covered.get(name.as_str()) {
            Some(b) if b == x => {}
            Some(b) => {
                return CheckResult::fail(
                    "chain_structure",
                    format!("{name}: solver gives {}, chain formula {}", fmt_ratio(x), fmt_ratio(b)),
                )
            }
            None => {
                return CheckResult::fail(
                    "chain_structure",
                    format!("{name} is in the negative part but on no F-chain"),
                )
            }
        }
    }
    CheckResult::pass(
        "chain_structure",
        "negative part is a union of F-chains with closed-form coefficients",
    )
}

/// Continued fraction `n/q = e₁ − 1/(e₂ − …)` recovered from `(n, q)`.
pub fn hirzebruch_jung<I: ExactInt>(n: &I, q: &I) -> Vec<I> {
    let (mut a, mut b) = (n.clone(), q.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        // ceiling division
        let (d, r) = a.div_rem(&b);
        let e = if r.is_zero() { d } else { d + I::one() };
        out.push(e.clone());
        let next = e * b.clone() - a;
        a = b;
        b = next;
    }
    out
}
