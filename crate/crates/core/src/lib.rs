//! Certified precision-query arithmetic for frames and g-frames.
//!
//! Every infinite object (a real number, a vector of a separable Hilbert
//! space, an element of an `l2` direct sum) is represented by an oracle that
//! answers the query "give me an approximation within `2^-n`" with an exact
//! rational answer. Operators map such names to names, so every result can be
//! asked for at any precision and the answer is guaranteed correct.
//!
//! Modules, bottom-up:
//!
//! * [`realcore`]: rationals, computable reals, effective limits, tail
//!   certification and Specker data.
//! * [`hilbert`]: spaces with orthonormal bases, vector names, functionals and
//!   the Riesz correspondence in both directions.
//! * [`directsum`]: the space `(sum H_i)_l2`, its componentwise and Fourier
//!   names and the reductions between them.
//! * [`gframes`]: operator names, g-frames, corresponding frames, synthesis,
//!   analysis, frame operator inversion and dual g-frames.
//! * [`gallery`]: Toeplitz-type counterexample operators over Specker data,
//!   with the non-computable norm supplied as an explicit gate.

pub mod directsum;
pub mod error;
pub mod gallery;
pub mod gframes;
pub mod hilbert;
pub mod realcore;

pub use error::{Error, Result};
