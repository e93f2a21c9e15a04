//! Task execution and report formatting. A report never shows a value
//! without the bound it is guaranteed to.

use std::fmt::Write;

use cgframe::directsum::SumName;
use cgframe::gallery::{column_lower_adjoint, gated_adjoint, gated_dual_tau, remark_frame_operator, upper_u_operator};
use cgframe::gframes::{
    analysis, canonical_dual, frame_operator, inverse_frame_operator, pseudo_inverse, reconstruct, Operator,
};
use cgframe::hilbert::{inner_product, vec_norm, FiniteCombo, VectorName};
use cgframe::realcore::Rational;

use crate::resolve::{Arg, GalleryObject, Object, Task};
use crate::spec::{GalleryKind, OpKind};
use crate::CliError;

/// Components shown for a result in a direct sum unless `count=` says otherwise.
pub const DEFAULT_COUNT: usize = 4;

pub enum Value {
    Real(Rational),
    Vector(FiniteCombo),
    /// Leading components of a direct-sum element, each within the bound.
    Sum(Vec<FiniteCombo>),
}

pub fn format_combo(c: &FiniteCombo) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, q) in c.iter() {
        if !s.is_empty() {
            s.push_str(" + ");
        }
        write!(s, "({q})*e{k}").unwrap();
    }
    s
}

/// The report block for one task: a header, the value, the guarantee.
pub fn format_report(task: &Task, n: u32, outcome: &Result<Value, CliError>) -> String {
    let t = &task.decl;
    let mut out = format!(
        "task {} (line {}): {} {}\n",
        task.index,
        t.line,
        t.name,
        t.args.join(" ")
    );
    match outcome {
        Ok(Value::Real(q)) => writeln!(out, "  value: {q}").unwrap(),
        Ok(Value::Vector(c)) => writeln!(out, "  value: {}", format_combo(c)).unwrap(),
        Ok(Value::Sum(parts)) => {
            for (i, c) in parts.iter().enumerate() {
                writeln!(out, "  component {i}: {}", format_combo(c)).unwrap();
            }
        }
        Err(e) => {
            writeln!(out, "  failed: {} ({e})", e.label()).unwrap();
            return out;
        }
    }
    let each = if matches!(outcome, Ok(Value::Sum(_))) {
        " for each component"
    } else {
        ""
    };
    writeln!(out, "  error <= 2^-{n}{each}").unwrap();
    out
}

fn vector(a: &Arg) -> &VectorName {
    match a {
        Arg::Object(Object::Vector(v)) => v,
        _ => unreachable!("argument types are checked during resolution"),
    }
}

fn sum_prefix(x: &SumName, count: usize, n: u32) -> cgframe::Result<Value> {
    let count = x.space().len().map_or(count, |l| l.min(count));
    let parts = (0..count)
        .map(|i| x.component(i)?.approx(n))
        .collect::<cgframe::Result<_>>()?;
    Ok(Value::Sum(parts))
}

fn gallery_op(g: &GalleryObject, op: OpKind) -> cgframe::Result<Operator> {
    let gate = || g.gate.as_ref().expect("gated tasks are checked during resolution");
    Ok(match (op, g.kind) {
        (OpKind::Apply, GalleryKind::UpperToeplitz) => upper_u_operator(&g.upper()?),
        (OpKind::Apply, GalleryKind::ColumnLower) => column_lower_adjoint(&g.column()?),
        (OpKind::Apply, GalleryKind::LowerToeplitz) => g.lower()?.synthesis(),
        (OpKind::Gated, GalleryKind::UpperToeplitz) => gated_adjoint(&g.upper()?, gate()),
        (OpKind::Gated, GalleryKind::ColumnLower) => gated_adjoint(&g.column()?, gate()),
        (OpKind::Gated, GalleryKind::LowerToeplitz) => g.lower()?.operator(gate()),
        (OpKind::Tau, _) => gated_dual_tau(&g.upper()?, gate())?.op(0)?,
        (OpKind::Remark, _) => remark_frame_operator(&g.space, &g.data, gate())?,
        _ => unreachable!("not a gallery operation"),
    })
}

/// Runs a resolved task at precision `n`.
pub fn run(task: &Task, n: u32) -> Result<Value, CliError> {
    run_lib(task, n).map_err(CliError::from)
}

fn run_lib(task: &Task, n: u32) -> cgframe::Result<Value> {
    let args = &task.args;
    let count = task.decl.count.unwrap_or(DEFAULT_COUNT);
    match task.decl.op {
        OpKind::VecNorm => Ok(Value::Real(vec_norm(vector(&args[0])).approx(n)?)),
        OpKind::Inner => Ok(Value::Real(
            inner_product(vector(&args[0]), vector(&args[1]))?.approx(n)?,
        )),
        OpKind::Coefficient => {
            let Arg::Index(k) = args[1] else {
                unreachable!("checked during resolution")
            };
            let v = vector(&args[0]);
            v.space().check_index(k)?;
            Ok(Value::Real(v.coefficient(k).approx(n)?))
        }
        OpKind::Vector => Ok(Value::Vector(vector(&args[0]).approx(n)?)),
        op @ (OpKind::Analysis
        | OpKind::FrameOperator
        | OpKind::InverseFrameOperator
        | OpKind::Reconstruct
        | OpKind::PseudoInverse
        | OpKind::CanonicalDual) => {
            let Arg::Object(Object::GFrame(b)) = &args[0] else {
                unreachable!("checked during resolution")
            };
            let (g, f) = (&b.gframe, vector(&args[1]));
            match op {
                OpKind::Analysis => sum_prefix(&analysis(g, b.ao.clone()).apply(f)?, count, n),
                OpKind::PseudoInverse => {
                    sum_prefix(&pseudo_inverse(g, b.norms.clone(), b.ao.clone())?.apply(f)?, count, n)
                }
                OpKind::CanonicalDual => {
                    let dual = canonical_dual(g, b.norms.clone(), b.ao.clone())?;
                    let coefficients = analysis(&dual.gframe, dual.ao.clone()).apply(f)?;
                    sum_prefix(&coefficients, count, n)
                }
                OpKind::FrameOperator => Ok(Value::Vector(
                    frame_operator(g, b.norms.clone(), b.ao.clone()).apply(f)?.approx(n)?,
                )),
                OpKind::InverseFrameOperator => Ok(Value::Vector(
                    inverse_frame_operator(g, b.norms.clone(), b.ao.clone())?
                        .apply(f)?
                        .approx(n)?,
                )),
                _ => {
                    let dual = canonical_dual(g, b.norms.clone(), b.ao.clone())?;
                    Ok(Value::Vector(reconstruct(g, &dual, b.norms.clone(), f)?.approx(n)?))
                }
            }
        }
        op @ (OpKind::Apply | OpKind::Gated | OpKind::Tau | OpKind::Remark) => {
            let Arg::Object(Object::Gallery(g)) = &args[0] else {
                unreachable!("checked during resolution")
            };
            Ok(Value::Vector(gallery_op(g, op)?.apply(vector(&args[1]))?.approx(n)?))
        }
    }
}
