use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension. Keeps the spinor fibre dimension inside `u64`.
pub const MAX_DIMENSION: u32 = 63;

/// Dimension of an odd-dimensional spin manifold, `3 ≤ d ≤ 63`, `d` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddDimension(u32);

impl OddDimension {
    pub fn new(d: i64) -> Result<Self> {
        if d < 3 || d % 2 == 0 || d > MAX_DIMENSION as i64 {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Self(d as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Rank of the spinor bundle, `2^((d-1)/2)`.
    pub fn fiber_dim(self) -> u64 {
        1u64 << ((self.0 - 1) / 2)
    }
}

impl fmt::Display for OddDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for OddDimension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let d: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::param("dimension", format!("not an integer: {s:?}")))?;
        Self::new(d)
    }
}
