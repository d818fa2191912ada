//! First homology of `Σ_g` in the basis `(α_1..α_g, β_1..β_g)` with the
//! pairing `⟨α_i, β_j⟩ = δ_ij`, `⟨α_i, α_j⟩ = ⟨β_i, β_j⟩ = 0`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::word::{GenKind, Generator, Symbol, Word};

/// Genus of the fiber; `q = (p + 1)/2` when built from a rotation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceGenus {
    g: u32,
    q: Option<u32>,
}

impl SurfaceGenus {
    pub fn new(g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        Ok(SurfaceGenus { g, q: None })
    }

    pub fn from_p(p: i64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || p > u32::MAX as i64 - 1 {
            return Err(Error::InvalidP(p));
        }
        let p = p as u32;
        Ok(SurfaceGenus { g: p + 1, q: Some((p + 1) / 2) })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn q(&self) -> Option<u32> {
        self.q
    }

    /// Rank of `H1`, i.e. `2g`.
    pub fn dim(&self) -> usize {
        2 * self.g as usize
    }

    /// The intersection matrix `J` with `⟨x, y⟩ = xᵀ J y`.
    pub fn intersection_form(&self) -> IntMatrix {
        let g = self.g as usize;
        let mut j = IntMatrix::zeros(2 * g, 2 * g);
        for i in 0..g {
            j.set(i, g + i, 1.into());
            j.set(g + i, i, (-1).into());
        }
        j
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coeffs: Vec<i64>,
}

impl HomologyClass {
    pub fn zero(genus: SurfaceGenus) -> Self {
        HomologyClass { coeffs: vec![0; genus.dim()] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() % 2 != 0 {
            return Err(Error::DimensionMismatch { expected: 2, found: coeffs.len() });
        }
        Ok(HomologyClass { coeffs })
    }

    /// Unit vector for a single generator.
    pub fn basis(genus: SurfaceGenus, gen: Generator) -> Result<Self> {
        let mut c = Self::zero(genus);
        c.add_generator(gen, 1, genus.g())?;
        Ok(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn genus(&self) -> u32 {
        (self.coeffs.len() / 2) as u32
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn add_generator(&mut self, gen: Generator, e: i64, g: u32) -> Result<()> {
        if gen.index == 0 || gen.index > g {
            let symbol = match gen.kind {
                GenKind::Alpha => 'a',
                GenKind::Beta => 'b',
            };
            return Err(Error::IndexOutOfRange { symbol, index: gen.index, max: g });
        }
        let slot = match gen.kind {
            GenKind::Alpha => gen.index as usize - 1,
            GenKind::Beta => g as usize + gen.index as usize - 1,
        };
        self.coeffs[slot] += e;
        Ok(())
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;

    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        assert_eq!(self.dim(), rhs.dim(), "adding classes of different genus");
        HomologyClass { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;

    fn neg(self) -> HomologyClass {
        HomologyClass { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// Symbols with a homology shadow: generators map to basis vectors and
/// `γ_i` to `α_i − α_{i+1}`.
pub trait Abelian: Copy + Eq {
    fn accumulate(self, into: &mut HomologyClass, e: i64) -> Result<()>;
}

impl Abelian for Generator {
    fn accumulate(self, into: &mut HomologyClass, e: i64) -> Result<()> {
        let g = into.genus();
        into.add_generator(self, e, g)
    }
}

impl Abelian for Symbol {
    fn accumulate(self, into: &mut HomologyClass, e: i64) -> Result<()> {
        match self {
            Symbol::Gen(g) => g.accumulate(into, e),
            Symbol::Gamma(i) => {
                let g = into.genus();
                if i == 0 || i + 1 > g {
                    return Err(Error::IndexOutOfRange { symbol: 'g', index: i, max: g - 1 });
                }
                into.add_generator(Generator::alpha(i), e, g)?;
                into.add_generator(Generator::alpha(i + 1), -e, g)
            }
        }
    }
}

/// Exponent-sum vector of a word (after `γ` expansion).
pub fn abelianize<S: Abelian>(w: &Word<S>, genus: SurfaceGenus) -> Result<HomologyClass> {
    let mut c = HomologyClass::zero(genus);
    for l in w.letters() {
        l.symbol.accumulate(&mut c, l.exponent())?;
    }
    Ok(c)
}

/// `xᵀ J y`.
pub fn pairing(x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
    }
    let g = x.dim() / 2;
    let (xa, xb) = x.coeffs.split_at(g);
    let (ya, yb) = y.coeffs.split_at(g);
    Ok((0..g).map(|i| xa[i] * yb[i] - xb[i] * ya[i]).sum())
}

pub fn is_null_homologous<S: Abelian>(w: &Word<S>, genus: SurfaceGenus) -> Result<bool> {
    Ok(abelianize(w, genus)?.is_zero())
}
