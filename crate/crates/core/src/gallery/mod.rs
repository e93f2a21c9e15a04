//! Counterexample operators over Specker data. Each construction that would
//! need the non-computable value `sum a_k^2` takes it as a [`NormOracle`];
//! an understated oracle makes evaluation fail with precision exhaustion.

mod data;
mod dual;
mod operators;

pub use data::{ColumnLowerU, NormOracle, ToeplitzLowerU, ToeplitzUpperU};
pub use dual::{gated_dual_tau, l1_bound};
pub use operators::{
    column_lower_adjoint, gated_adjoint, remark_frame_bounds, remark_frame_operator, upper_u_operator, GatedAdjoint,
};
