//! The Hilbert direct sum `(sum_i H_i)_l2` with orthonormal basis `E_ij`,
//! its componentwise and Fourier names, and the reductions between them.

mod fourier;
mod name;
mod space;

pub use fourier::{fourier_to_sum, sum_to_fourier, FourierName};
pub use name::{check_partial_norms, sum_embed, sum_inner_product, sum_lincomb, SumName};
pub use space::SumSpace;

#[cfg(test)]
mod tests;
