//! Operator names, g-frames, corresponding frames, the synthesis, analysis
//! and frame operators, certified inversion and dual g-frames.
//!
//! Data that cannot be computed from names in general (norms of adjoint
//! images, coefficient row norms, analysis norms) are explicit arguments.

mod catalog;
mod checks;
mod correspond;
mod duals;
mod operator;
mod ops;
mod richardson;
mod types;

pub use catalog::{block_gframe, AtomFrame, GFrameBundle};
pub use checks::{check_frame_bounds, check_gframe_bounds, BoundReport};
pub use correspond::{corresponding_frame, gframe_from_corresponding, gframe_to_frame, riesz_correspondence};
pub use duals::{
    canonical_dual, check_kernel, check_left_inverse, dual_from_kernel, dual_from_left_inverse, inverse_frame_operator,
    kernel_from_dual, pseudo_inverse, reconstruct, DualFrame,
};
pub use operator::{AnalysisOp, Operator, OperatorName, Point, SynthesisOp};
pub use ops::{analysis, frame_operator, frame_synthesis, synthesis};
pub use richardson::{invert_frame_operator, richardson_iterate};
pub use types::{AnalysisOracle, CoefficientOracle, FrameName, GFrameName, InnerFrame, InnerSystem, NormTable};

#[cfg(test)]
mod tests;
