use std::sync::Arc;

use crate::hilbert::SpaceDescriptor;
use crate::realcore::{pairing, unpairing};
use crate::{Error, Result};

type Components = dyn Fn(usize) -> SpaceDescriptor + Send + Sync;

/// `(sum_i H_i)_l2` for a computable sequence of component spaces, finite
/// (`len = Some(k)`) or infinite. The basis vector `E_ij` has flat index
/// `<i, j>` under Cantor pairing.
#[derive(Clone)]
pub struct SumSpace {
    id: u64,
    len: Option<usize>,
    component: Arc<Components>,
}

impl SumSpace {
    pub fn new(
        id: u64,
        len: Option<usize>,
        component: impl Fn(usize) -> SpaceDescriptor + Send + Sync + 'static,
    ) -> Self {
        SumSpace {
            id,
            len,
            component: Arc::new(component),
        }
    }

    /// Every component is `space`.
    pub fn uniform(id: u64, len: Option<usize>, space: SpaceDescriptor) -> Self {
        SumSpace::new(id, len, move |_| space.clone())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> Option<usize> {
        self.len
    }

    pub fn component(&self, i: usize) -> Result<SpaceDescriptor> {
        match self.len {
            Some(k) if i >= k => Err(Error::IndexOutOfRange { index: i, dim: k }),
            _ => Ok((self.component)(i)),
        }
    }

    pub fn ensure_same(&self, other: &SumSpace) -> Result<()> {
        if self.id == other.id {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                expected: self.id,
                found: other.id,
            })
        }
    }

    pub fn flat_index(i: usize, j: usize) -> u64 {
        pairing(i as u64, j as u64)
    }

    pub fn split_index(k: u64) -> (usize, usize) {
        let (i, j) = unpairing(k);
        (i as usize, j as usize)
    }
}

impl std::fmt::Debug for SumSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SumSpace")
            .field("id", &self.id)
            .field("len", &self.len)
            .finish()
    }
}
