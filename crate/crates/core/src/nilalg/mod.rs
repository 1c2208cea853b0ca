//! Nilpotent associative algebras given by structure constants.

mod algebra;
mod free;
mod json;
mod ops;
mod ring;
mod subspace;

pub use algebra::{Algebra, Vector};
pub use free::{free_dim, FreeNilpotent, FREE_DIM_CAP};
pub use json::{AlgebraFile, AnyAlgebra};
pub use ops::{strictly_upper_triangular, FieldAlgebra, Inclusion};
pub use ring::{Integers, LambdaPoly, LambdaPolys, Ring, RingDescriptor};
pub use subspace::{Quotient, Subspace};
