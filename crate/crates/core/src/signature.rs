//! Signature of a Lefschetz fibration over `S²` from its monodromy
//! factorization, as a sum of per-twist increments given by Meyer's
//! signature cocycle.
//!
//! For `A, B ∈ Sp(2g, Z)` let `V = ker [A^{-1} − I | B − I] ⊂ Q^{4g}` and
//! evaluate on `V` the bilinear form
//!
//! `f((x1, y1), (x2, y2)) = ⟨(I − B) y2, x1 + y1⟩`.
//!
//! `τ(A, B)` is the signature of its symmetrization. The pairing is taken in
//! the orientation for which the transvections of [`crate::symplectic`] are
//! right-handed twists; with that orientation the elliptic fibration
//! `(t_a t_b)^6` on the torus has total `−8`.
//!
//! Adding the `k`-th twist `M_k` to the partial product `P_{k−1}` changes the
//! signature by `−τ(P_{k−1}, M_k)`. All vanishing cycles must be
//! nonseparating.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::catalog::{CycleCatalog, FamilyParams, TwistWord};
use crate::error::{Error, Result};
use crate::homology::{HomologyClass, SurfaceGenus};
use crate::linalg::{kernel_basis, symmetric_signature, IntMatrix, RationalSymmetricMatrix};
use crate::symplectic::{picard_lefschetz, SymplecticMatrix};

/// Meyer's cocycle `τ(A, B)`.
pub fn meyer_cocycle(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.dim() });
    }
    let id = IntMatrix::identity(n);
    let b_minus_i = b.matrix().checked_sub(&id)?;
    if b_minus_i.is_zero() {
        return Ok(0);
    }
    let a_inv_minus_i = a.inverse().into_matrix().checked_sub(&id)?;
    let kernel = kernel_basis(&a_inv_minus_i.hconcat(&b_minus_i)?);
    if kernel.is_empty() {
        return Ok(0);
    }
    let genus = a.genus();
    let j = genus.intersection_form();
    let i_minus_b = id.checked_sub(b.matrix())?;
    // u_k = x_k + y_k and w_k = Jᵀ (I − B) y_k, so f(v_k, v_l) = w_l · u_k
    let (us, ws): (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) = kernel
        .iter()
        .map(|v| {
            let (x, y) = v.split_at(n);
            let u: Vec<BigInt> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            let z = i_minus_b.mul_vec(y);
            // ⟨z, u⟩ = zᵀ J u = (Jᵀ z)ᵀ u
            let jt_z: Vec<BigInt> = (0..n).map(|c| (0..n).map(|r| j.get(r, c) * &z[r]).sum()).collect();
            (u, jt_z)
        })
        .unzip();
    let d = kernel.len();
    let form = IntMatrix::from_fn(d, d, |k, l| {
        ws[l].iter().zip(&us[k]).filter(|(w, _)| !w.is_zero()).map(|(w, u)| w * u).sum()
    });
    let sym = RationalSymmetricMatrix::symmetrize(&form)?;
    Ok(symmetric_signature(&sym).signature())
}

/// Argument order of the cocycle at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArgOrder {
    /// `τ(P_{k−1}, M_k)`
    PrefixFirst,
    /// `τ(M_k, P_{k−1})`
    TwistFirst,
}

/// How the partial product grows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrefixSide {
    /// `P_k = M_k P_{k−1}`, the column-vector composition of [`crate::word_matrix`].
    Left,
    /// `P_k = P_{k−1} M_k`
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Convention {
    pub order: ArgOrder,
    pub prefix: PrefixSide,
}

impl Convention {
    pub const ALL: [Convention; 4] = [
        Convention { order: ArgOrder::PrefixFirst, prefix: PrefixSide::Left },
        Convention { order: ArgOrder::TwistFirst, prefix: PrefixSide::Left },
        Convention { order: ArgOrder::PrefixFirst, prefix: PrefixSide::Right },
        Convention { order: ArgOrder::TwistFirst, prefix: PrefixSide::Right },
    ];

    /// The convention frozen by calibrating against the golden `p = 3`
    /// sequence; see [`calibrate`].
    pub const FROZEN: Convention = Convention { order: ArgOrder::PrefixFirst, prefix: PrefixSide::Left };
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = match self.order {
            ArgOrder::PrefixFirst => "tau(prefix,twist)",
            ArgOrder::TwistFirst => "tau(twist,prefix)",
        };
        let side = match self.prefix {
            PrefixSide::Left => "prefix=twist*prefix",
            PrefixSide::Right => "prefix=prefix*twist",
        };
        write!(f, "-{order}; {side}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContributionSequence {
    pub p: Option<u32>,
    pub values: Vec<i64>,
    pub convention: Convention,
}

impl ContributionSequence {
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Per-twist increments for twists given by their classes in application order.
pub fn contributions_of_classes(
    genus: SurfaceGenus,
    classes: &[&HomologyClass],
    convention: Convention,
) -> Result<Vec<i64>> {
    if let Some(position) = classes.iter().position(|c| c.is_zero()) {
        return Err(Error::SeparatingCycle { position });
    }
    let mut prefix = SymplecticMatrix::identity(genus);
    let mut out = Vec::with_capacity(classes.len());
    for c in classes {
        let twist = picard_lefschetz(c);
        let tau = match convention.order {
            ArgOrder::PrefixFirst => meyer_cocycle(&prefix, &twist)?,
            ArgOrder::TwistFirst => meyer_cocycle(&twist, &prefix)?,
        };
        out.push(-tau);
        match convention.prefix {
            PrefixSide::Left => prefix.twist_left(c)?,
            PrefixSide::Right => prefix = prefix.mul(&twist)?,
        }
    }
    Ok(out)
}

pub fn per_cycle_contributions(w: &TwistWord, cat: &CycleCatalog) -> Result<ContributionSequence> {
    per_cycle_contributions_with(w, cat, Convention::FROZEN)
}

pub fn per_cycle_contributions_with(
    w: &TwistWord,
    cat: &CycleCatalog,
    convention: Convention,
) -> Result<ContributionSequence> {
    let classes = cat.resolve(w)?;
    let values = contributions_of_classes(cat.params().genus(), &classes, convention)?;
    Ok(ContributionSequence { p: Some(cat.params().p()), values, convention })
}

pub fn fibration_signature(w: &TwistWord, cat: &CycleCatalog) -> Result<i64> {
    Ok(per_cycle_contributions(w, cat)?.total())
}

/// `σ = −12p`, the value observed for the `φ_p^p` fibrations.
pub fn closed_form_signature(p: i64) -> Result<i64> {
    FamilyParams::new(p)?;
    Ok(-12 * p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub convention: Convention,
    pub values: Vec<i64>,
    pub total: i64,
    pub mismatches: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub candidates: Vec<CandidateOutcome>,
    /// First candidate matching entry-wise, else first matching in total.
    pub frozen: Option<Convention>,
    /// Whether the frozen candidate matched entry-wise.
    pub sequence_match: bool,
}

/// Runs all four conventions on a word and compares with a reference
/// sequence.
pub fn calibrate(w: &TwistWord, cat: &CycleCatalog, reference: &[i64]) -> Result<Calibration> {
    let reference_total: i64 = reference.iter().sum();
    let mut candidates = Vec::with_capacity(4);
    for convention in Convention::ALL {
        let values = per_cycle_contributions_with(w, cat, convention)?.values;
        let mismatches = mismatch_positions(&values, reference);
        candidates.push(CandidateOutcome { convention, total: values.iter().sum(), values, mismatches });
    }
    let exact = candidates.iter().find(|c| c.mismatches.is_empty()).map(|c| c.convention);
    let (frozen, sequence_match) = match exact {
        Some(c) => (Some(c), true),
        None => (candidates.iter().find(|c| c.total == reference_total).map(|c| c.convention), false),
    };
    Ok(Calibration { candidates, frozen, sequence_match })
}

/// Positions where two sequences differ; a length difference counts every
/// position past the shorter one.
pub fn mismatch_positions(a: &[i64], b: &[i64]) -> Vec<usize> {
    let n = a.len().max(b.len());
    (0..n).filter(|&k| a.get(k) != b.get(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, phi_relator};
    use crate::word::Generator;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn genus(g: u32) -> SurfaceGenus {
        SurfaceGenus::new(g).unwrap()
    }

    fn random_symplectic(rng: &mut ChaCha8Rng, g: u32, twists: usize) -> SymplecticMatrix {
        let classes: Vec<HomologyClass> = (0..twists)
            .map(|_| HomologyClass::from_coeffs((0..2 * g).map(|_| rng.gen_range(-1..=1)).collect()).unwrap())
            .collect();
        let mut m = SymplecticMatrix::identity(genus(g));
        for c in &classes {
            if rng.gen_bool(0.5) {
                m.twist_left(c).unwrap();
            } else {
                m = m.mul(&picard_lefschetz(c).inverse()).unwrap();
            }
        }
        m
    }

    #[test]
    fn cocycle_vanishes_on_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let b = random_symplectic(&mut rng, 2, 4);
            let id = SymplecticMatrix::identity(genus(2));
            assert_eq!(meyer_cocycle(&id, &b), Ok(0));
            assert_eq!(meyer_cocycle(&b, &id), Ok(0));
        }
    }

    #[test]
    fn cocycle_is_conjugation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let a = random_symplectic(&mut rng, 2, 3);
            let b = random_symplectic(&mut rng, 2, 3);
            let h = random_symplectic(&mut rng, 2, 3);
            let hi = h.inverse();
            let conj = |m: &SymplecticMatrix| h.mul(m).unwrap().mul(&hi).unwrap();
            assert_eq!(meyer_cocycle(&a, &b).unwrap(), meyer_cocycle(&conj(&a), &conj(&b)).unwrap());
        }
    }

    #[test]
    fn cocycle_dimension_mismatch() {
        let a = SymplecticMatrix::identity(genus(1));
        let b = SymplecticMatrix::identity(genus(2));
        assert!(meyer_cocycle(&a, &b).is_err());
    }

    #[test]
    fn elliptic_fibration() {
        let g1 = genus(1);
        let a = HomologyClass::basis(g1, Generator::alpha(1)).unwrap();
        let b = HomologyClass::basis(g1, Generator::beta(1)).unwrap();
        let classes: Vec<&HomologyClass> = [&a, &b].repeat(6);
        let vals = contributions_of_classes(g1, &classes, Convention::FROZEN).unwrap();
        assert_eq!(vals.len(), 12);
        assert_eq!(vals.iter().sum::<i64>(), -8);
        assert!(contributions_of_classes(g1, &[], Convention::FROZEN).unwrap().is_empty());
    }

    #[test]
    fn separating_rejected() {
        let g2 = genus(2);
        let z = HomologyClass::zero(g2);
        let a = HomologyClass::basis(g2, Generator::alpha(1)).unwrap();
        assert_eq!(
            contributions_of_classes(g2, &[&a, &z], Convention::FROZEN),
            Err(Error::SeparatingCycle { position: 1 })
        );
    }

    #[test]
    fn closed_form() {
        assert_eq!(closed_form_signature(3), Ok(-36));
        assert_eq!(closed_form_signature(7), Ok(-84));
        assert_eq!(closed_form_signature(9), Ok(-108));
        assert!(closed_form_signature(6).is_err());
    }

    #[test]
    fn relator_total_independent_of_starting_point() {
        // a relator's cyclic rotation is again a relator with the same total
        let cat = build_catalog(3).unwrap();
        let r = phi_relator(3).unwrap();
        let base = fibration_signature(&r, &cat).unwrap();
        let mut labels = r.labels().to_vec();
        labels.rotate_left(5);
        let rotated = TwistWord::new(labels);
        assert_eq!(fibration_signature(&rotated, &cat).unwrap(), base);
        assert_eq!(base, -36);
    }

    #[test]
    fn mismatch_positions_counts_length() {
        assert_eq!(mismatch_positions(&[0, -1, 0], &[0, 0, 0, 1]), vec![1, 3]);
    }
}
