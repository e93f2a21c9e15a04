use std::sync::Arc;

use super::name::SumName;
use super::space::SumSpace;
use crate::hilbert::expand_certified;
use crate::realcore::{CReal, CRealSeq, Memo};
use crate::Result;

/// A Fourier name of an element of the sum: its coordinates
/// `<F, E_ij>` plus the squared norm.
#[derive(Clone)]
pub struct FourierName {
    space: SumSpace,
    coeffs: Arc<Memo<(usize, usize), CReal>>,
    normsq: CReal,
}

impl FourierName {
    pub fn new(
        space: &SumSpace,
        coeffs: impl Fn(usize, usize) -> Result<CReal> + Send + Sync + 'static,
        normsq: CReal,
    ) -> Self {
        let sp = space.clone();
        let coeffs = Memo::new(move |&(i, j): &(usize, usize)| {
            sp.component(i)?.check_index(j)?;
            coeffs(i, j)
        });
        FourierName {
            space: space.clone(),
            coeffs,
            normsq,
        }
    }

    pub fn space(&self) -> &SumSpace {
        &self.space
    }

    pub fn coeff(&self, i: usize, j: usize) -> Result<CReal> {
        self.coeffs.get(&(i, j))
    }

    pub fn normsq(&self) -> &CReal {
        &self.normsq
    }
}

/// Coordinates read off componentwise: `<F, E_ij> = <f_i, e_j>`.
pub fn sum_to_fourier(x: &SumName) -> FourierName {
    let x2 = x.clone();
    FourierName::new(
        x.space(),
        move |i, j| Ok(x2.component(i)?.coefficient(j)),
        x.normsq().clone(),
    )
}

/// Components rebuilt from coordinates. The component norms are extra
/// data: `compnorms(i) = ||f_i||`.
pub fn fourier_to_sum(x: &FourierName, compnorms: &CRealSeq) -> SumName {
    let (x2, norms) = (x.clone(), compnorms.clone());
    let space = x.space().clone();
    SumName::new(
        x.space(),
        move |i| {
            let h = space.component(i)?;
            let row = x2.clone();
            let coeffs = Memo::new(move |j: &usize| row.coeff(i, *j));
            Ok(expand_certified(&h, coeffs, norms.at(i)?.square(), 0))
        },
        x.normsq().clone(),
    )
}
