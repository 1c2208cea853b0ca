//! Exact scalars: finite fields GF(p^k) with their additive characters, and
//! cyclotomic numbers Q(zeta_N) used as character values.

mod cyclotomic;
mod gf;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyclotomic};
pub use gf::{is_irreducible, is_prime, FieldDescriptor, FiniteField, Gf, DEFAULT_FIELD_CAP};
pub(crate) use gf::{modpow, prime_factors};
