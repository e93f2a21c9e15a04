//! Computable Hilbert spaces with orthonormal bases: vector names, inner
//! products, norms, bounded functionals and the Riesz correspondence.

mod combo;
mod expand;
mod functional;
mod space;
mod vector;

pub use combo::FiniteCombo;
pub use expand::{expand_certified, synthesize_certified};
pub use functional::{riesz_functional, riesz_representer, FunctionalName};
pub use space::{fresh_space_id, Dimension, Field, SpaceDescriptor};
pub use vector::{basis_vector, inner_product, vec_lincomb, vec_norm, VectorName};
