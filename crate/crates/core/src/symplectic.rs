//! Action of Dehn twists on `H1(Σ_g; Z)`.
//!
//! A positive twist about a curve of class `c` acts by the transvection
//! `T(x) = x + ⟨x, c⟩ c`. Matrices act on column vectors, so the matrix of a
//! twist word is `T_n ⋯ T_2 T_1` when `T_1` is applied first.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::catalog::{CycleCatalog, TwistWord};
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceGenus};
use crate::linalg::IntMatrix;

/// A `2g × 2g` integer matrix with `MᵀJM = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    m: IntMatrix,
}

impl SymplecticMatrix {
    pub fn identity(genus: SurfaceGenus) -> Self {
        SymplecticMatrix { m: IntMatrix::identity(genus.dim()) }
    }

    /// Checks `MᵀJM = J` before wrapping.
    pub fn new(m: IntMatrix) -> Result<Self> {
        if m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0 {
            return Err(Error::NotSymplectic);
        }
        let genus = SurfaceGenus::new((m.rows() / 2) as u32)?;
        let j = genus.intersection_form();
        if &(&m.transpose() * &j) * &m != j {
            return Err(Error::NotSymplectic);
        }
        Ok(SymplecticMatrix { m })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn genus(&self) -> SurfaceGenus {
        SurfaceGenus::new((self.dim() / 2) as u32).expect("nonzero dimension")
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: rhs.dim() });
        }
        Ok(SymplecticMatrix { m: &self.m * &rhs.m })
    }

    /// `J^{-1} Mᵀ J`; exact, no division.
    pub fn inverse(&self) -> Self {
        let j = self.genus().intersection_form();
        let j_inv = IntMatrix::from_fn(j.rows(), j.cols(), |r, c| -j.get(r, c));
        SymplecticMatrix { m: &(&j_inv * &self.m.transpose()) * &j }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = SymplecticMatrix::identity(self.genus());
        for _ in 0..n {
            out = out.mul(self).expect("same dimension");
        }
        out
    }

    /// Least `n ≤ max_n` with `Mⁿ = I`.
    pub fn order(&self, max_n: u32) -> Option<u32> {
        let mut acc = self.clone();
        for n in 1..=max_n {
            if acc.is_identity() {
                return Some(n);
            }
            acc = acc.mul(self).expect("same dimension");
        }
        None
    }

    /// Replaces `M` by `T_c M` in `O(g²)`: `T_c M = M + c · (Jc)ᵀ M`.
    pub fn twist_left(&mut self, c: &HomologyClass) -> Result<()> {
        let n = self.dim();
        if c.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.dim() });
        }
        let jc = j_times(c);
        // row vector w = (Jc)ᵀ M
        let w: Vec<BigInt> = (0..n)
            .map(|col| {
                jc.iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(r, x)| self.m.get(r, col) * BigInt::from(*x))
                    .sum()
            })
            .collect();
        for (r, &cr) in c.coeffs().iter().enumerate() {
            if cr == 0 {
                continue;
            }
            let cr = BigInt::from(cr);
            for (col, wc) in w.iter().enumerate() {
                if !wc.is_zero() {
                    let v = self.m.get(r, col) + &cr * wc;
                    self.m.set(r, col, v);
                }
            }
        }
        Ok(())
    }
}

// (Jc)_k with ⟨x, c⟩ = Σ x_k (Jc)_k
fn j_times(c: &HomologyClass) -> Vec<i64> {
    let g = c.dim() / 2;
    let (a, b) = c.coeffs().split_at(g);
    b.iter().copied().chain(a.iter().map(|x| -x)).collect()
}

/// Matrix of the positive twist about a curve of class `c`.
pub fn picard_lefschetz(c: &HomologyClass) -> SymplecticMatrix {
    let genus = SurfaceGenus::new(c.genus()).expect("class has positive genus");
    let mut t = SymplecticMatrix::identity(genus);
    t.twist_left(c).expect("matching dimension");
    t
}

/// `T_n ⋯ T_1` for twists listed in application order.
pub fn product_of_twists<'a, I>(genus: SurfaceGenus, classes: I) -> Result<SymplecticMatrix>
where
    I: IntoIterator<Item = &'a HomologyClass>,
{
    let mut m = SymplecticMatrix::identity(genus);
    for c in classes {
        m.twist_left(c)?;
    }
    Ok(m)
}

pub fn word_matrix(w: &TwistWord, cat: &CycleCatalog) -> Result<SymplecticMatrix> {
    let classes = cat.resolve(w)?;
    product_of_twists(cat.params().genus(), classes)
}

/// Alias with the contract name used elsewhere.
pub fn symplectic_inverse(m: &SymplecticMatrix) -> SymplecticMatrix {
    m.inverse()
}
