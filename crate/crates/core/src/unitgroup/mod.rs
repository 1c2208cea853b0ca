//! The finite p-group `1+A` attached to a nilpotent algebra over F_q.

mod classes;
mod group;
mod subgroup;

pub use classes::{ConjugacyClass, ConjugacyClasses};
pub use group::{quotient_group, subalgebra_group, Embedding, UnitGroup, DEFAULT_GROUP_CAP};
pub use subgroup::{check_commutator_theorem, commutator_subgroup, CommutatorCheck, Subgroup};
