//! Edge subsets as bitmasks. Limited to 64 edges, which covers every
//! structure the exhaustive tooling is meant for.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSubset {
    mask: u64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SubsetError {
    #[error("edge {edge} out of range for {edge_count} edges")]
    OutOfRange { edge: usize, edge_count: usize },
    #[error("subsets support at most 64 edges, got {0}")]
    TooManyEdges(usize),
}

impl EdgeSubset {
    pub fn empty() -> Self {
        EdgeSubset { mask: 0 }
    }

    pub fn full(edge_count: usize) -> Result<Self, SubsetError> {
        if edge_count > 64 {
            return Err(SubsetError::TooManyEdges(edge_count));
        }
        if edge_count == 64 {
            Ok(EdgeSubset { mask: u64::MAX })
        } else {
            Ok(EdgeSubset {
                mask: (1u64 << edge_count) - 1,
            })
        }
    }

    pub fn from_mask(mask: u64, edge_count: usize) -> Result<Self, SubsetError> {
        let full = Self::full(edge_count)?;
        if mask & !full.mask != 0 {
            return Err(SubsetError::OutOfRange {
                edge: (63 - (mask & !full.mask).leading_zeros()) as usize,
                edge_count,
            });
        }
        Ok(EdgeSubset { mask })
    }

    pub fn from_edges(
        edges: impl IntoIterator<Item = usize>,
        edge_count: usize,
    ) -> Result<Self, SubsetError> {
        let mut mask = 0u64;
        for e in edges {
            if e >= edge_count {
                return Err(SubsetError::OutOfRange {
                    edge: e,
                    edge_count,
                });
            }
            if e >= 64 {
                return Err(SubsetError::TooManyEdges(edge_count));
            }
            mask |= 1 << e;
        }
        Self::from_mask(mask, edge_count)
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn contains(self, edge: usize) -> bool {
        edge < 64 && self.mask & (1 << edge) != 0
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_full(self, edge_count: usize) -> bool {
        Self::full(edge_count).map(|f| f == self).unwrap_or(false)
    }

    pub fn complement(self, edge_count: usize) -> Self {
        let full = Self::full(edge_count).expect("edge count checked at construction");
        EdgeSubset {
            mask: full.mask & !self.mask,
        }
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        EdgeSubset {
            mask: self.mask ^ other.mask,
        }
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSubset {
            mask: self.mask | other.mask,
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |e| self.mask & (1 << e) != 0)
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
