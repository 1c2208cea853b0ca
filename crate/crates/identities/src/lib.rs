//! Commutator identities for groups `1+J`: exact checks in free nilpotent
//! algebras over Z and Z[lambda], and brute-force checks over finite fields.

mod finite;
mod symbolic;

pub use finite::{finite_pairing_check, halasi_explore, halasi_explore_with_cap, normal_commutator_subgroup, HalasiReport, PairingReport, HALASI_CAP};
pub use symbolic::{
    additivity_defect, additivity_defect_check, lemma_auxiliary_check, scaling_defect, scaling_defect_check, specialize, DefectReport,
    LemmaReport, SymbolicUnit,
};
