//! Monomial decompositions of the irreducible characters of `1+A`, built
//! by repeatedly cutting `A` down to a codimension-one ideal, and
//! polarizations of linear functionals.

mod cache;
mod decompose;
mod error;
mod points;
mod polarize;
mod step;

pub use cache::Cache;
pub use decompose::{gutkin_decompose, gutkin_decompose_with, verify_gutkin_all, verify_gutkin_all_with, GutkinReport, MonomialDatum};
pub use error::{GutkinError, Result, Stage};
pub use polarize::{
    alternating_form, exhaustive_polarization, find_polarization, form_rank, is_isotropic, max_isotropic_dim, random_functionals,
    Method, Polarization,
};
pub use step::{
    build_ideals, choose_line, commutator_pairing, extension_set, minimal_scalar_level, phi_map, phi_map_with, CentralCharacter,
    ElementValue, Extensions, GutkinStep, Pairing,
};
