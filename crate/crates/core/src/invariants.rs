//! Homeomorphism invariants of the fibration `X → S²` defined by `φ_p^p`,
//! and the homological checks on the relator.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalog::{build_catalog, phi_relator, phi_word, theta_word, CycleCatalog, Family, FamilyParams};
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceGenus};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::pi1::check_pi1_derivations;
use crate::signature::per_cycle_contributions;
use crate::symplectic::{word_matrix, SymplecticMatrix};

/// `χ(X) = 4 − 4g + s` for `s` singular fibers.
pub fn euler_characteristic(g: u32, s: usize) -> i64 {
    4 - 4 * g as i64 + s as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChernNumbers {
    pub c1_squared: i64,
    pub chi_h: i64,
}

/// `c1² = 3σ + 2χ`, `χ_h = (σ + χ)/4`.
pub fn chern_invariants(euler: i64, signature: i64) -> Result<ChernNumbers> {
    let s = signature + euler;
    if s % 4 != 0 {
        return Err(Error::NonIntegralChiH { signature, euler });
    }
    Ok(ChernNumbers { c1_squared: 3 * signature + 2 * euler, chi_h: s / 4 })
}

/// `H1` of the total space, as the cokernel of the matrix of vanishing-cycle
/// classes: `Z^{free_rank} ⊕ ⊕ Z/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Summary {
    /// Nonzero Smith divisors, in divisibility order.
    pub divisors: Vec<BigInt>,
    pub free_rank: usize,
}

impl H1Summary {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.divisors.iter().all(One::is_one)
    }

    /// Divisors padded with zeros to length `2g`; all ones iff trivial.
    pub fn padded(&self) -> Vec<BigInt> {
        let mut v = self.divisors.clone();
        v.resize(self.divisors.len() + self.free_rank, BigInt::zero());
        v
    }
}

pub fn h1_from_classes<'a, I>(genus: SurfaceGenus, classes: I) -> H1Summary
where
    I: IntoIterator<Item = &'a HomologyClass>,
{
    let cols: Vec<&HomologyClass> = classes.into_iter().collect();
    let n = genus.dim();
    let m = IntMatrix::from_fn(n, cols.len(), |r, c| BigInt::from(cols[c].coeffs()[r]));
    let divisors: Vec<BigInt> = smith_normal_form(&m).into_iter().filter(|d| !d.is_zero()).collect();
    let free_rank = n - divisors.len();
    H1Summary { divisors, free_rank }
}

pub fn h1_of_catalog(cat: &CycleCatalog) -> Result<H1Summary> {
    let relator = phi_relator(cat.params().p() as i64)?;
    Ok(h1_from_classes(cat.params().genus(), cat.resolve(&relator)?))
}

pub fn h1_of_total_space(p: i64) -> Result<H1Summary> {
    h1_of_catalog(&build_catalog(p)?)
}

/// Whether `φ^p` acts trivially on `H1(Σ_g)`.
pub fn check_relator_identity(cat: &CycleCatalog) -> Result<bool> {
    let relator = phi_relator(cat.params().p() as i64)?;
    Ok(word_matrix(&relator, cat)?.is_identity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionCheck {
    pub theta1_squared_identity: bool,
    pub theta2_squared_identity: bool,
    pub phi_is_composite: bool,
    pub phi_order: Option<u32>,
    pub expected_order: u32,
}

impl InvolutionCheck {
    pub fn involutions_ok(&self) -> bool {
        self.theta1_squared_identity && self.theta2_squared_identity && self.phi_is_composite
    }

    pub fn order_ok(&self) -> bool {
        self.phi_order == Some(self.expected_order)
    }

    pub fn passed(&self) -> bool {
        self.involutions_ok() && self.order_ok()
    }
}

/// Involution and order checks on explicit matrices of `θ1`, `θ2`, `φ`.
pub fn involution_check_from_matrices(
    theta1: &SymplecticMatrix,
    theta2: &SymplecticMatrix,
    phi: &SymplecticMatrix,
    p: u32,
) -> Result<InvolutionCheck> {
    Ok(InvolutionCheck {
        theta1_squared_identity: theta1.mul(theta1)?.is_identity(),
        theta2_squared_identity: theta2.mul(theta2)?.is_identity(),
        phi_is_composite: &theta2.mul(theta1)? == phi,
        phi_order: phi.order(p),
        expected_order: p,
    })
}

pub fn check_involutions_and_order(cat: &CycleCatalog) -> Result<InvolutionCheck> {
    let p = cat.params().p() as i64;
    let t1 = word_matrix(&theta_word(p, Family::Theta1)?, cat)?;
    let t2 = word_matrix(&theta_word(p, Family::Theta2)?, cat)?;
    let phi = word_matrix(&phi_word(p)?, cat)?;
    involution_check_from_matrices(&t1, &t2, &phi, p as u32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub p: u32,
    pub genus: u32,
    pub cycle_count: usize,
    pub euler_characteristic: i64,
    pub signature: i64,
    pub c1_squared: i64,
    pub chi_h: i64,
    pub h1_trivial: bool,
    pub relator_identity: bool,
    pub involutions_ok: bool,
    /// Order of `ρ(φ)`; 0 when it exceeds `p`.
    pub phi_order: u32,
    pub pi1_chain_ok: bool,
    pub contributions: Vec<i64>,
}

impl InvariantReport {
    /// Everything the fibration must satisfy, apart from golden data.
    pub fn all_checks_pass(&self) -> bool {
        self.h1_trivial
            && self.relator_identity
            && self.involutions_ok
            && self.phi_order == self.p
            && self.pi1_chain_ok
            && self.c1_squared == 3 * self.signature + 2 * self.euler_characteristic
            && 4 * self.chi_h == self.signature + self.euler_characteristic
    }
}

/// Runs every check for `p` and computes `χ`, `σ`, `c1²`, `χ_h`. The
/// signature is the computed one, never the closed form.
pub fn compute_invariant_report(p: i64) -> Result<InvariantReport> {
    let params = FamilyParams::new(p)?;
    let cat = build_catalog(p)?;
    let relator = phi_relator(p)?;
    let euler = euler_characteristic(params.g(), relator.len());
    let contributions = per_cycle_contributions(&relator, &cat)?;
    let signature = contributions.total();
    let chern = chern_invariants(euler, signature)?;
    let inv = check_involutions_and_order(&cat)?;
    Ok(InvariantReport {
        p: params.p(),
        genus: params.g(),
        cycle_count: relator.len(),
        euler_characteristic: euler,
        signature,
        c1_squared: chern.c1_squared,
        chi_h: chern.chi_h,
        h1_trivial: h1_of_catalog(&cat)?.is_trivial(),
        relator_identity: check_relator_identity(&cat)?,
        involutions_ok: inv.involutions_ok(),
        phi_order: inv.phi_order.unwrap_or(0),
        pi1_chain_ok: check_pi1_derivations(&cat)?.ok(),
        contributions: contributions.values,
    })
}
