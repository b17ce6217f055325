//! Picard lattices of the modeled surfaces.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{fmt_ratio, rat, ExactInt};

/// Minimal model the blow-up tower starts from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SurfaceBase {
    /// Basis `[L]`.
    P2,
    /// Basis `[C₀, F]` with `C₀² = −e`.
    Hirzebruch(u32),
    /// An explicitly given lattice, for surfaces whose Picard group is not a
    /// blow-up of a minimal rational one in a convenient basis.
    Lattice(LatticeBase),
}

/// Hand-specified lattice data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBase {
    pub gram: Vec<Vec<i64>>,
    pub canonical: Vec<i64>,
    pub chi_top: i64,
    pub chi_structure: i64,
}

/// One blow-up of a point; `exceptional_index` is the basis slot of `E_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlowupStep {
    pub exceptional_index: usize,
}

/// A surface as a base plus a tower of point blow-ups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    pub base: SurfaceBase,
    pub blowups: Vec<BlowupStep>,
}

/// Coefficient vector over the Picard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass<I: ExactInt> {
    pub coeffs: Vec<Ratio<I>>,
}

impl<I: ExactInt> DivisorClass<I> {
    pub fn new(coeffs: Vec<Ratio<I>>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        DivisorClass {
            coeffs: v.iter().map(|&x| rat(x)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass {
            coeffs: vec![Ratio::zero(); rank],
        }
    }

    /// The `i`-th basis vector.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut d = Self::zero(rank);
        d.coeffs[i] = rat(1);
        d
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Ratio<I>) -> Self {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Ratio<I>, &Ratio<I>) -> Ratio<I>) -> Self {
        assert_eq!(self.rank(), other.rank(), "class rank mismatch");
        DivisorClass {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_ratio).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl<I: ExactInt> Add for &DivisorClass<I> {
    type Output = DivisorClass<I>;
    fn add(self, rhs: Self) -> DivisorClass<I> {
        self.zip(rhs, |a, b| a + b)
    }
}

impl<I: ExactInt> Sub for &DivisorClass<I> {
    type Output = DivisorClass<I>;
    fn sub(self, rhs: Self) -> DivisorClass<I> {
        self.zip(rhs, |a, b| a - b)
    }
}

impl<I: ExactInt> Neg for &DivisorClass<I> {
    type Output = DivisorClass<I>;
    fn neg(self) -> DivisorClass<I> {
        DivisorClass {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<I: ExactInt> Mul<&DivisorClass<I>> for &Ratio<I> {
    type Output = DivisorClass<I>;
    fn mul(self, rhs: &DivisorClass<I>) -> DivisorClass<I> {
        rhs.scale(self)
    }
}

impl SurfaceModel {
    pub fn p2() -> Self {
        SurfaceModel {
            base: SurfaceBase::P2,
            blowups: Vec::new(),
        }
    }

    pub fn hirzebruch(e: u32) -> Self {
        SurfaceModel {
            base: SurfaceBase::Hirzebruch(e),
            blowups: Vec::new(),
        }
    }

    /// Validated explicit lattice.
    pub fn lattice(base: LatticeBase) -> Result<Self> {
        let s = SurfaceModel {
            base: SurfaceBase::Lattice(base),
            blowups: Vec::new(),
        };
        s.check_lattice()?;
        Ok(s)
    }

    /// Blow up `count` more points.
    pub fn blown_up(mut self, count: usize) -> Self {
        for _ in 0..count {
            let idx = self.rank();
            self.blowups.push(BlowupStep { exceptional_index: idx });
        }
        self
    }

    fn base_rank(&self) -> usize {
        match &self.base {
            SurfaceBase::P2 => 1,
            SurfaceBase::Hirzebruch(_) => 2,
            SurfaceBase::Lattice(l) => l.gram.len(),
        }
    }

    pub fn rank(&self) -> usize {
        self.base_rank() + self.blowups.len()
    }

    /// Integral Gram matrix of the basis.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let b = self.base_rank();
        let mut g = vec![vec![0i64; r]; r];
        match &self.base {
            SurfaceBase::P2 => g[0][0] = 1,
            SurfaceBase::Hirzebruch(e) => {
                g[0][0] = -i64::from(*e);
                g[0][1] = 1;
                g[1][0] = 1;
            }
            SurfaceBase::Lattice(l) => {
                for i in 0..b {
                    g[i][..b].copy_from_slice(&l.gram[i]);
                }
            }
        }
        for i in b..r {
            g[i][i] = -1;
        }
        g
    }

    fn check_rank<I: ExactInt>(&self, d: &DivisorClass<I>) -> Result<()> {
        if d.rank() != self.rank() {
            return Err(Error::shape(format!(
                "class of length {} on a surface of Picard rank {}",
                d.rank(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// Intersection pairing.
    pub fn intersect<I: ExactInt>(&self, a: &DivisorClass<I>, b: &DivisorClass<I>) -> Result<Ratio<I>> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let g = self.gram();
        let mut acc = Ratio::<I>::zero();
        for (i, row) in g.iter().enumerate() {
            if a.coeffs[i].is_zero() {
                continue;
            }
            let mut inner = Ratio::<I>::zero();
            for (j, &gij) in row.iter().enumerate() {
                if gij != 0 && !b.coeffs[j].is_zero() {
                    inner = inner + &b.coeffs[j] * rat::<I>(gij);
                }
            }
            acc = acc + &a.coeffs[i] * inner;
        }
        Ok(acc)
    }

    /// Self-intersection.
    pub fn square<I: ExactInt>(&self, a: &DivisorClass<I>) -> Result<Ratio<I>> {
        self.intersect(a, a)
    }

    /// Canonical class `K_S`.
    pub fn canonical_class<I: ExactInt>(&self) -> DivisorClass<I> {
        let mut k = match &self.base {
            SurfaceBase::P2 => vec![-3],
            SurfaceBase::Hirzebruch(e) => vec![-2, -(i64::from(*e) + 2)],
            SurfaceBase::Lattice(l) => l.canonical.clone(),
        };
        k.extend(std::iter::repeat_n(1, self.blowups.len()));
        DivisorClass::from_ints(&k)
    }

    /// Topological Euler number `c₂(S)`.
    pub fn chi_top(&self) -> i64 {
        let base = match &self.base {
            SurfaceBase::P2 => 3,
            SurfaceBase::Hirzebruch(_) => 4,
            SurfaceBase::Lattice(l) => l.chi_top,
        };
        base + self.blowups.len() as i64
    }

    /// Holomorphic Euler characteristic `χ(O_S)`.
    pub fn chi_structure(&self) -> i64 {
        match &self.base {
            SurfaceBase::Lattice(l) => l.chi_structure,
            _ => 1,
        }
    }

    /// Positive and negative inertia of the Gram matrix.
    pub fn signature(&self) -> (usize, usize) {
        crate::linalg::inertia(&self.gram())
    }

    /// `h⁰(O_S(d))` where a closed form is available.
    ///
    /// Returns `Ok(None)` on blown-up or explicit-lattice surfaces.
    pub fn h0_line_bundle<I: ExactInt>(&self, d: &DivisorClass<I>) -> Result<Option<i64>> {
        self.check_rank(d)?;
        if !d.is_integral() {
            return Err(Error::domain(format!("h0 of non-integral class {}", d.display())));
        }
        if !self.blowups.is_empty() {
            return Ok(None);
        }
        let c = |i: usize| {
            d.coeffs[i]
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::domain("coefficient does not fit in i64"))
        };
        match &self.base {
            SurfaceBase::P2 => {
                let a = c(0)?;
                Ok(Some(if a < 0 { 0 } else { (a + 1) * (a + 2) / 2 }))
            }
            SurfaceBase::Hirzebruch(e) => {
                let (a, b) = (c(0)?, c(1)?);
                if a < 0 {
                    return Ok(Some(0));
                }
                let e = i64::from(*e);
                Ok(Some((0..=a).map(|k| (b - k * e + 1).max(0)).sum()))
            }
            SurfaceBase::Lattice(_) => Ok(None),
        }
    }

    fn check_lattice(&self) -> Result<()> {
        let SurfaceBase::Lattice(l) = &self.base else {
            return Ok(());
        };
        let r = l.gram.len();
        if r == 0 || l.gram.iter().any(|row| row.len() != r) {
            return Err(Error::shape("lattice Gram matrix must be square and nonempty"));
        }
        if l.canonical.len() != r {
            return Err(Error::shape("lattice canonical class has the wrong length"));
        }
        for i in 0..r {
            for j in 0..i {
                if l.gram[i][j] != l.gram[j][i] {
                    return Err(Error::shape("lattice Gram matrix is not symmetric"));
                }
            }
        }
        let (pos, neg) = crate::linalg::inertia(&l.gram);
        if pos != 1 || neg != r - 1 {
            return Err(Error::inconsistent(
                "hodge_index",
                format!("lattice signature is ({pos}, {neg}), expected (1, {})", r - 1),
            ));
        }
        let k: DivisorClass<num_bigint::BigInt> = DivisorClass::from_ints(&l.canonical);
        let k2 = self.square(&k)?;
        let lhs = k2 + rat(l.chi_top);
        if lhs != rat(12 * l.chi_structure) {
            return Err(Error::inconsistent(
                "surface_noether",
                format!("K² + c₂ = {} but 12χ(O) = {}", fmt_ratio(&lhs), 12 * l.chi_structure),
            ));
        }
        Ok(())
    }
}
