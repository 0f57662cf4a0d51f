//! Linear orders on apex sets.

use alloc::vec::Vec;

use crate::constellation::ConstellationError;
use crate::graph::VertexSet;

/// Largest apex set for which [`OrderMode::Search`] scans all permutations.
pub const SEARCH_LIMIT: usize = 8;

/// A linear order on an apex set, listed from least to greatest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApexOrder(Vec<usize>);

/// How a checker obtains its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderMode {
    Given(ApexOrder),
    /// Try every permutation in lexicographic order; only for small apex sets.
    Search,
}

impl ApexOrder {
    pub fn new(seq: Vec<usize>) -> ApexOrder {
        ApexOrder(seq)
    }

    /// Increasing vertex ids.
    pub fn natural(apex: &VertexSet) -> ApexOrder {
        ApexOrder(apex.iter().collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> ApexOrder {
        ApexOrder(self.0.iter().rev().copied().collect())
    }

    /// Keeps only the listed vertices, preserving their relative order.
    pub fn restricted(&self, keep: &VertexSet) -> ApexOrder {
        ApexOrder(self.0.iter().copied().filter(|&v| keep.contains(v)).collect())
    }

    /// Translates an order on a parent's ids to a relabeled child, given the
    /// child's `new -> old` map. Vertices missing from the child are dropped.
    pub fn relabel(&self, new_to_old: &[usize]) -> ApexOrder {
        ApexOrder(
            self.0
                .iter()
                .filter_map(|&old| new_to_old.iter().position(|&o| o == old))
                .collect(),
        )
    }

    /// Rank of each vertex of the sorted `apex` slice, or an error if this is
    /// not a permutation of it.
    pub fn ranks(&self, apex: &[usize]) -> Result<Vec<usize>, ConstellationError> {
        if self.0.len() != apex.len() {
            return Err(ConstellationError::InvalidOrder);
        }
        let mut rank = alloc::vec![usize::MAX; apex.len()];
        for (r, &v) in self.0.iter().enumerate() {
            match apex.binary_search(&v) {
                Ok(i) if rank[i] == usize::MAX => rank[i] = r,
                _ => return Err(ConstellationError::InvalidOrder),
            }
        }
        Ok(rank)
    }
}

/// Advances `perm` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
