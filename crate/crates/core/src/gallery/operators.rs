use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::data::{coeff, gated_count, ColumnLowerU, NormOracle, ToeplitzLowerU, ToeplitzUpperU};
use crate::gframes::Operator;
use crate::hilbert::{FiniteCombo, SpaceDescriptor, VectorName};
use crate::realcore::{bits, sqrt_upper, Rational, SpeckerData};
use crate::Result;

fn three() -> Rational {
    Rational::from_integer(3.into())
}

/// `(Uf)_i = f_i + sum_{k>=1} a_k f_{i+k}`: exact on finite combinations,
/// `||U|| <= 1 + ||a||_1 < 3`. No norm datum is needed.
pub fn upper_u_operator(u: &ToeplitzUpperU) -> Operator {
    let s = u.specker.clone();
    Operator::from_combo_map(&u.space, &u.space, three(), move |c| {
        let mut out = c.clone();
        for (j, v) in c.iter() {
            for i in 0..j {
                out.add_term(i, &(coeff(&s, j - i) * v));
            }
        }
        Ok(out)
    })
}

/// How a gated operator acts on a finite combination `c`: `head(c, len)`
/// is the exact image on indices `< len`; with `len = reach(c) + N` the
/// remaining part has norm `<= scale(c) sqrt(sum_{k>N} a_k^2)`.
struct GatedAction {
    head: Box<dyn Fn(&FiniteCombo, usize) -> FiniteCombo + Send + Sync>,
    scale: Box<dyn Fn(&FiniteCombo) -> Rational + Send + Sync>,
    reach: Box<dyn Fn(&FiniteCombo) -> usize + Send + Sync>,
}

/// An operator with `||T|| <= bound` whose infinite tails are certified
/// against the gate.
fn gated_operator(
    space: &SpaceDescriptor,
    s: &SpeckerData,
    gate: &NormOracle,
    bound: Rational,
    action: GatedAction,
) -> Operator {
    let action = Arc::new(action);
    let (s, gate, sp) = (s.clone(), gate.clone(), space.clone());
    let shift = 2 + bits(&bound);
    Operator::new(space.clone(), space.clone(), bound, move |f: &VectorName| {
        let (s, gate, f, action) = (s.clone(), gate.clone(), f.clone(), action.clone());
        Ok(VectorName::new(sp.clone(), move |n| {
            let c = f.approx(n + shift)?;
            let t = 2 * (n + 2 + bits(&(action.scale)(&c)));
            let count = gated_count(&s, &gate, t)?;
            Ok((action.head)(&c, (action.reach)(&c) + count).rounded(n + 3))
        }))
    })
}

fn support_end(c: &FiniteCombo) -> usize {
    c.max_index().map_or(0, |m| m + 1)
}

/// Lower Toeplitz action `(Lc)_i = c_i + sum_{1<=k<=i} a_k c_{i-k}`; the
/// part beyond `L + N` has norm `<= ||c||_1 sqrt(sum_{k>N} a_k^2)`.
fn lower_toeplitz(space: &SpaceDescriptor, s: &SpeckerData, gate: &NormOracle) -> Operator {
    let s2 = s.clone();
    let head = move |c: &FiniteCombo, len: usize| {
        let mut out = c.clone();
        for (j, v) in c.iter() {
            for i in j + 1..len {
                out.add_term(i, &(coeff(&s2, i - j) * v));
            }
        }
        out
    };
    let action = GatedAction {
        head: Box::new(head),
        scale: Box::new(|c| c.l1()),
        reach: Box::new(support_end),
    };
    gated_operator(space, s, gate, three(), action)
}

/// The adjoint of a gallery operator whose adjoint columns are infinite.
pub trait GatedAdjoint {
    fn gated_adjoint(&self, gate: &NormOracle) -> Operator;
}

/// `U^*` for the upper Toeplitz operator: the lower Toeplitz matrix, with
/// `U^* e_0 = (1, a_1, a_2, ...)`.
impl GatedAdjoint for ToeplitzUpperU {
    fn gated_adjoint(&self, gate: &NormOracle) -> Operator {
        lower_toeplitz(&self.space, &self.specker, gate)
    }
}

/// For the column operator it is `U^*` that is computable unconditionally
/// (see [`column_lower_adjoint`]); its adjoint `U` is the gated map, with
/// `U e_0 = (1, a_1, a_2, ...)`.
impl GatedAdjoint for ColumnLowerU {
    fn gated_adjoint(&self, gate: &NormOracle) -> Operator {
        let s2 = self.specker.clone();
        let head = move |c: &FiniteCombo, len: usize| {
            let mut out = c.clone();
            let c0 = c.get(0);
            if !c0.is_zero() {
                for i in 1..len {
                    out.add_term(i, &(coeff(&s2, i) * &c0));
                }
            }
            out
        };
        let action = GatedAction {
            head: Box::new(head),
            scale: Box::new(|c| c.get(0).abs()),
            reach: Box::new(|_| 1),
        };
        gated_operator(&self.space, &self.specker, gate, three(), action)
    }
}

pub fn gated_adjoint(u: &impl GatedAdjoint, gate: &NormOracle) -> Operator {
    u.gated_adjoint(gate)
}

/// `U^*` of the column operator: `(U^*g)_0 = g_0 + sum_{i>=1} a_i g_i`,
/// `(U^*g)_i = g_i`. Exact on finite combinations.
pub fn column_lower_adjoint(u: &ColumnLowerU) -> Operator {
    let s = u.specker.clone();
    Operator::from_combo_map(&u.space, &u.space, three(), move |c| {
        let mut out = c.clone();
        for (i, v) in c.iter() {
            out.add_term(0, &(coeff(&s, i) * v));
        }
        Ok(out)
    })
}

impl ToeplitzLowerU {
    /// The synthesis operator `T = U^*`, the upper Toeplitz matrix.
    pub fn synthesis(&self) -> Operator {
        upper_u_operator(&ToeplitzUpperU {
            space: self.space.clone(),
            specker: self.specker.clone(),
        })
    }

    /// `U` itself, available only through the gate.
    pub fn operator(&self, gate: &NormOracle) -> Operator {
        lower_toeplitz(&self.space, &self.specker, gate)
    }
}

/// The frame operator of `g_0 = e_0`, `g_i = e_i - a_i e_0`:
/// `(Sf)_0 = (1 + sum a_i^2) f_0 - sum_{i>=1} a_i f_i`, `(Sf)_i = f_i - a_i f_0`.
/// The entry `1 + sum a_i^2` is read from the gate.
pub fn remark_frame_operator(space: &SpaceDescriptor, s: &SpeckerData, gate: &NormOracle) -> Result<Operator> {
    super::data::require_l2(space)?;
    let (_, b) = remark_frame_bounds(gate)?;
    let (s2, gate2, sp) = (s.clone(), gate.clone(), space.clone());
    let shift = 2 + bits(&b);
    Ok(Operator::new(space.clone(), space.clone(), b, move |f: &VectorName| {
        let (s, gate, f) = (s2.clone(), gate2.clone(), f.clone());
        Ok(VectorName::new(sp.clone(), move |n| {
            let c = f.approx(n + shift)?;
            let c0 = c.get(0);
            let count = gated_count(&s, &gate, 2 * (n + 2 + bits(&c0)))?;
            let diag = gate.value().approx(n + 3 + bits(&c0))? + Rational::one();
            let mut out = FiniteCombo::zero();
            out.add_term(0, &(&diag * &c0));
            for (i, v) in c.iter() {
                if i > 0 {
                    out.add_term(i, v);
                    out.add_term(0, &-(coeff(&s, i) * v));
                }
            }
            for i in 1..=count.max(support_end(&c)) {
                out.add_term(i, &-(coeff(&s, i) * &c0));
            }
            Ok(out.rounded(n + 3))
        }))
    }))
}

/// Rational `A <= lambda_min`, `B >= lambda_max` for the frame above: the
/// spectrum is `{1, (2 + r^2 +- r sqrt(r^2 + 4)) / 2}` with `r^2` the gate,
/// and the two nontrivial eigenvalues multiply to 1.
pub fn remark_frame_bounds(gate: &NormOracle) -> Result<(Rational, Rational)> {
    let g = gate.value().approx(20)? + crate::realcore::pow2_neg(20);
    let g = g.max(Rational::zero());
    let two = Rational::from_integer(2.into());
    let b = (&two + &g + sqrt_upper(&(&g * (&g + Rational::from_integer(4.into()))))) / &two;
    Ok((Rational::one() / &b, b))
}
