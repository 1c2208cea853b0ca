//! Nilpotent associative algebras over finite fields, the finite p-groups
//! `1+A` they define, and an exact character-table oracle for those groups.

pub mod chars;
pub mod error;
pub mod exactfield;
pub mod nilalg;
pub mod unitgroup;

pub use error::{Error, Result};
