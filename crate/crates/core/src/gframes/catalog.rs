use num_traits::{One, Zero};

use super::correspond::riesz_correspondence;
use super::operator::Operator;
use super::types::{AnalysisOracle, GFrameName, NormTable};
use crate::directsum::SumSpace;
use crate::hilbert::{fresh_space_id, inner_product, FiniteCombo, SpaceDescriptor, VectorName};
use crate::realcore::{CReal, Rational};
use crate::{Error, Result};

/// A g-frame together with the data its conditional operations require.
#[derive(Clone)]
pub struct GFrameBundle {
    pub gframe: GFrameName,
    pub norms: NormTable,
    pub ao: AnalysisOracle,
}

/// The frame `phi_0, ..., phi_{k-1}` of explicit atoms followed, when
/// `tail_from = Some(t)`, by `e_t, e_{t+1}, ...`.
#[derive(Clone, Debug)]
pub struct AtomFrame {
    pub space: SpaceDescriptor,
    pub atoms: Vec<FiniteCombo>,
    pub tail_from: Option<usize>,
    pub a: Rational,
    pub b: Rational,
}

impl AtomFrame {
    /// The orthonormal basis, `A = B = 1`.
    pub fn parseval(space: &SpaceDescriptor) -> Self {
        AtomFrame {
            space: space.clone(),
            atoms: Vec::new(),
            tail_from: Some(0),
            a: Rational::one(),
            b: Rational::one(),
        }
    }

    /// `w_0 e_0, ..., w_{k-1} e_{k-1}, e_k, ...`; bounds are the extreme
    /// squared weights (and 1).
    pub fn weighted(space: &SpaceDescriptor, weights: Vec<Rational>) -> Self {
        let sq: Vec<Rational> = weights.iter().map(|w| w * w).collect();
        let one = Rational::one();
        let a = sq.iter().fold(one.clone(), |m, w| m.min(w.clone()));
        let b = sq.iter().fold(one, |m, w| m.max(w.clone()));
        AtomFrame {
            space: space.clone(),
            tail_from: Some(weights.len()),
            atoms: weights
                .into_iter()
                .enumerate()
                .map(|(k, w)| FiniteCombo::from_pairs([(k, w)]))
                .collect(),
            a,
            b,
        }
    }

    /// `e_0, e_0, e_1, e_2, ...`, `A = 1`, `B = 2`.
    pub fn redundant(space: &SpaceDescriptor) -> Self {
        AtomFrame {
            space: space.clone(),
            atoms: vec![FiniteCombo::basis(0), FiniteCombo::basis(0)],
            tail_from: Some(1),
            a: Rational::one(),
            b: Rational::from_integer(2.into()),
        }
    }

    pub fn len(&self) -> Option<usize> {
        match (self.tail_from, self.space.cap()) {
            (None, _) => Some(self.atoms.len()),
            (Some(t), Some(d)) => Some(self.atoms.len() + d.saturating_sub(t)),
            (Some(_), None) => None,
        }
    }

    pub fn atom(&self, i: usize) -> Result<FiniteCombo> {
        if let Some(c) = self.atoms.get(i) {
            return Ok(c.clone());
        }
        if let Some(l) = self.len() {
            if i >= l {
                return Err(Error::IndexOutOfRange { index: i, dim: l });
            }
        }
        match self.tail_from {
            Some(t) => Ok(FiniteCombo::basis(i - self.atoms.len() + t)),
            None => unreachable!("index checked against the atom count"),
        }
    }

    pub fn bundle(&self) -> Result<GFrameBundle> {
        for c in &self.atoms {
            if let Some(k) = c.max_index() {
                self.space.check_index(k)?;
            }
        }
        let me = self.clone();
        let atom_vec = move |i: usize| -> Result<VectorName> { VectorName::constant(&me.space, me.atom(i)?) };
        let av = atom_vec.clone();
        let gframe = riesz_correspondence(
            &self.space,
            self.len(),
            move |i| {
                let v = av(i)?;
                let norm = v.norm();
                Ok((v, norm))
            },
            self.a.clone(),
            self.b.clone(),
        )?;
        let norms = NormTable::from_fn(move |i, _| Ok(atom_vec(i)?.norm()));
        let me = self.clone();
        let ao = AnalysisOracle::new(move |f| {
            let mut parts = Vec::new();
            for c in &me.atoms {
                parts.push(inner_product(f, &VectorName::constant(&me.space, c.clone())?)?.square());
            }
            if let Some(t) = me.tail_from {
                parts.push(f.norm_sq());
                for j in 0..t {
                    parts.push(f.coefficient(j).square().neg());
                }
            }
            Ok(CReal::sum(parts))
        });
        Ok(GFrameBundle { gframe, norms, ao })
    }
}

/// `Lambda_i f = (f_{id}, ..., f_{id+d-1}) in F^d`, a Parseval g-frame.
pub fn block_gframe(space: &SpaceDescriptor, d: usize) -> Result<GFrameBundle> {
    if d == 0 {
        return Err(Error::Invalid("block size must be positive".into()));
    }
    let block = SpaceDescriptor::finite(fresh_space_id(), d);
    let len = space.cap().map(|dim| dim.div_ceil(d));
    let sum = SumSpace::uniform(fresh_space_id(), len, block.clone());
    let sp = space.clone();
    let gframe = GFrameName::new(
        space,
        &sum,
        move |i| {
            Ok(Operator::from_combo_map(&sp, &block, Rational::one(), move |c| {
                Ok(FiniteCombo::from_pairs(
                    c.iter()
                        .filter(|(k, _)| k / d == i)
                        .map(|(k, v)| (k - i * d, v.clone())),
                ))
            }))
        },
        Rational::one(),
        Rational::one(),
    )?;
    let dim = space.cap();
    let norms = NormTable::from_fn(move |i, j| {
        let inside = dim.is_none_or(|m| i * d + j < m);
        Ok(if inside {
            CReal::one()
        } else {
            CReal::from_rational(Rational::zero())
        })
    });
    let ao = AnalysisOracle::new(|f| Ok(f.norm_sq()));
    Ok(GFrameBundle { gframe, norms, ao })
}
