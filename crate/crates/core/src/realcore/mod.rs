//! Rationals, computable reals and the numeric plumbing shared by every
//! other module.

mod complex;
mod creal;
mod memo;
mod pairing;
mod rational;
mod seq;
mod specker;
mod tail;

pub use complex::ComplexCReal;
pub use creal::{CReal, Comparison};
pub use memo::Memo;
pub use pairing::{pairing, unpairing};
pub use rational::{
    bits, format_rational, int, parse_rational, pow2_neg, rat, round_dyadic, sqrt_upper, sqrt_upper_within, Rational,
};
pub use seq::CRealSeq;
pub use specker::SpeckerData;
pub use tail::{certify_tail, max_terms, set_max_terms, TailQuery};
