//! Exact algebra for positive Dehn twist relators of the `2π/p` rotation on a
//! closed surface of genus `p + 1`, and the invariants of the Lefschetz
//! fibrations they define.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is exact: words in
//! the free group on the standard generators of `π1(Σ_g)`, integer homology
//! classes, big-integer symplectic matrices, and rational linear algebra.
//!
//! The pipeline runs bottom-up:
//!
//! * [`word`]: freely reduced words, inversion, conjugation, conjugacy search
//!   and the `γ_i = α_i α_{i+1}^{-1}` macro.
//! * [`homology`]: abelianization into `Z^{2g}` and the intersection pairing.
//! * [`catalog`]: the vanishing cycles of the two involutions `θ1`, `θ2` and
//!   the twist words `θ1`, `θ2`, `φ = θ2 θ1` and the relator `φ^p`.
//! * [`symplectic`]: Picard–Lefschetz transvections and products over words.
//! * [`linalg`]: Smith normal form, kernels and inertia of symmetric forms.
//! * [`signature`]: per-twist signature increments from the Meyer cocycle.
//! * [`invariants`] and [`pi1`]: Euler characteristic, `c1²`, `χ_h`, `H1` of
//!   the total space and the free-group certificate that `π1` is trivial.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod pi1;
pub mod signature;
pub mod symplectic;
pub mod word;

pub use catalog::{
    build_catalog, general_involution_word, phi_relator, phi_word, theta_word, AbstractLabel,
    CycleCatalog, CycleEntry, CycleKind, CycleLabel, Family, FamilyParams,
    GeneralInvolutionSpec, TwistWord,
};
pub use error::{Error, Result};
pub use homology::{abelianize, is_null_homologous, pairing, HomologyClass, SurfaceGenus};
pub use invariants::{
    check_involutions_and_order, check_relator_identity, chern_invariants,
    compute_invariant_report, euler_characteristic, h1_of_total_space, ChernNumbers, H1Summary,
    InvariantReport, InvolutionCheck,
};
pub use linalg::{kernel_basis, smith_normal_form, symmetric_signature, Inertia, IntMatrix};
pub use pi1::{check_pi1_derivations, DerivationReport};
pub use signature::{
    closed_form_signature, fibration_signature, meyer_cocycle, per_cycle_contributions,
    ContributionSequence, Convention,
};
pub use symplectic::{picard_lefschetz, word_matrix, SymplecticMatrix};
pub use word::{expand_gammas, FreeWord, GammaWord, GenKind, Generator, Letter, Symbol, Word};
