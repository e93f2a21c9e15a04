use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Real,
    Complex,
}

/// A separable Hilbert space with a fixed orthonormal basis `e_0, e_1, ...`.
/// Two descriptors denote the same space iff their ids agree.
#[derive(Clone, Debug)]
pub struct SpaceDescriptor {
    pub id: u64,
    pub dim: Dimension,
    pub field: Field,
}

impl PartialEq for SpaceDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for SpaceDescriptor {}

impl SpaceDescriptor {
    pub fn new(id: u64, dim: Dimension, field: Field) -> Self {
        SpaceDescriptor { id, dim, field }
    }

    /// Real `l2(N)`.
    pub fn l2(id: u64) -> Self {
        SpaceDescriptor::new(id, Dimension::Infinite, Field::Real)
    }

    /// Real `F^d`.
    pub fn finite(id: u64, d: usize) -> Self {
        SpaceDescriptor::new(id, Dimension::Finite(d), Field::Real)
    }

    /// The scalar field as a one-dimensional space.
    pub fn scalars(id: u64) -> Self {
        SpaceDescriptor::finite(id, 1)
    }

    /// Number of basis vectors, if finite.
    pub fn cap(&self) -> Option<usize> {
        match self.dim {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }

    pub fn check_index(&self, k: usize) -> Result<()> {
        match self.dim {
            Dimension::Finite(d) if k >= d => Err(Error::IndexOutOfRange { index: k, dim: d }),
            _ => Ok(()),
        }
    }

    pub fn ensure_same(&self, other: &SpaceDescriptor) -> Result<()> {
        if self.id == other.id {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                expected: self.id,
                found: other.id,
            })
        }
    }

    /// Vector arithmetic is implemented over the reals only.
    pub fn ensure_real(&self) -> Result<()> {
        match self.field {
            Field::Real => Ok(()),
            Field::Complex => Err(Error::UnsupportedField(format!(
                "space {} is complex; vector names carry real coefficients",
                self.id
            ))),
        }
    }
}

static NEXT_ID: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(1 << 48);

/// An id not used by any caller-numbered space (those stay below `2^48`).
pub fn fresh_space_id() -> u64 {
    NEXT_ID.fetch_add(1, std::sync::atomic::Ordering::Relaxed)
}
