use std::sync::Arc;

use super::creal::CReal;
use super::memo::Memo;
use crate::Result;

/// A computable sequence of reals, memoized per index.
#[derive(Clone)]
pub struct CRealSeq {
    items: Arc<Memo<usize, CReal>>,
}

impl CRealSeq {
    pub fn from_fn(f: impl Fn(usize) -> Result<CReal> + Send + Sync + 'static) -> Self {
        CRealSeq {
            items: Memo::new(move |i: &usize| f(*i)),
        }
    }

    pub fn at(&self, i: usize) -> Result<CReal> {
        self.items.get(&i)
    }

    /// The sequence `v_0, ..., v_{k-1}, 0, 0, ...`.
    pub fn finite(values: Vec<CReal>) -> Self {
        CRealSeq::from_fn(move |i| Ok(values.get(i).cloned().unwrap_or_else(CReal::zero)))
    }
}
