//! Index sequences: smoothness, alignments and the zigzag sequence.

use alloc::vec::Vec;

use crate::search::{Budget, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("sequence must be non-empty")]
    Empty,
    #[error("entry {0} is not a positive integer")]
    NonPositive(usize),
    #[error("cannot truncate a sequence of length 1")]
    TruncateSingleton,
    #[error("zigzag sequence needs n >= 2, got {0}")]
    ZigzagTooSmall(usize),
    #[error("window ({i}, {j}) is not within 1..={len}")]
    WindowOutOfRange { i: usize, j: usize, len: usize },
}

/// Non-empty sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSequence(Vec<usize>);

/// A window `i..=j` (1-based) and value set `b` forming an alignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alignment {
    pub values: Vec<usize>,
    pub i: usize,
    pub j: usize,
}

impl IndexSequence {
    pub fn new(entries: Vec<usize>) -> Result<IndexSequence, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        if let Some(pos) = entries.iter().position(|&a| a == 0) {
            return Err(SequenceError::NonPositive(pos));
        }
        Ok(IndexSequence(entries))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Consecutive entries differ by at most one.
    pub fn is_smooth(&self) -> bool {
        self.0.windows(2).all(|w| w[0].abs_diff(w[1]) <= 1)
    }

    /// `A + 1`
    pub fn shifted(&self) -> IndexSequence {
        IndexSequence(self.0.iter().map(|a| a + 1).collect())
    }

    /// `A^{-1}`
    pub fn reversed(&self) -> IndexSequence {
        IndexSequence(self.0.iter().rev().copied().collect())
    }

    /// `A*`: drop the last entry.
    pub fn truncated(&self) -> Result<IndexSequence, SequenceError> {
        if self.0.len() < 2 {
            return Err(SequenceError::TruncateSingleton);
        }
        Ok(IndexSequence(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Distinct values, ascending.
    pub fn values(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn concat(parts: &[&IndexSequence]) -> IndexSequence {
        IndexSequence(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }
}

/// `Z_n`.
pub fn zigzag_sequence(n: usize) -> Result<IndexSequence, SequenceError> {
    if n < 2 {
        return Err(SequenceError::ZigzagTooSmall(n));
    }
    let mut prev = IndexSequence(alloc::vec![1, 2]);
    let mut cur = IndexSequence(alloc::vec![1, 2, 3]);
    if n == 2 {
        return Ok(prev);
    }
    for _ in 4..=n {
        let middle = prev.shifted().reversed().truncated()?;
        let next = IndexSequence::concat(&[&cur.truncated()?, &middle, &cur.shifted()]);
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `l_n`, from the recurrence `l_n = 2 l_{n-1} + l_{n-2} - 2`.
pub fn zigzag_length(n: usize) -> Option<u128> {
    if n < 2 {
        return None;
    }
    let (mut a, mut b) = (2u128, 3u128);
    if n == 2 {
        return Some(a);
    }
    for _ in 4..=n {
        let c = 2 * b + a - 2;
        a = b;
        b = c;
    }
    Some(b)
}

/// Replacing each entry `a` of `Z_n` by `n + 1 - a` gives `Z_n` reversed.
pub fn complement_symmetry_check(n: usize) -> Result<bool, SequenceError> {
    let z = zigzag_sequence(n)?;
    let complement: Vec<usize> = z.0.iter().map(|a| n + 1 - a).collect();
    Ok(complement == z.reversed().0)
}

/// Filters `a_i..=a_j` to `b` and collapses equal neighbors.
pub fn filtered_window(a: &IndexSequence, b: &[usize], i: usize, j: usize) -> Result<Vec<usize>, SequenceError> {
    let len = a.len();
    if i < 1 || i > j || j > len {
        return Err(SequenceError::WindowOutOfRange { i, j, len });
    }
    let mut out: Vec<usize> = Vec::new();
    for &v in &a.0[i - 1..j] {
        if b.contains(&v) && out.last() != Some(&v) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Whether `b` is an alignment in `a` over the 1-based window `i..=j`: the
/// filtered, collapsed window lists every element of `b` exactly once.
pub fn is_alignment(a: &IndexSequence, b: &[usize], i: usize, j: usize) -> Result<bool, SequenceError> {
    let f = filtered_window(a, b, i, j)?;
    let mut sorted = f.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let mut want = b.to_vec();
    want.sort_unstable();
    want.dedup();
    // exactly once each: no value repeated and nothing missing
    Ok(sorted.len() == f.len() && sorted == want)
}

/// Searches for an alignment of size `k`, scanning value subsets in
/// lexicographic order and, for each, windows by start then end.
///
/// For a fixed subset the filtered sequence of the whole of `a` is computed
/// once; an alignment exists iff it has `k` consecutive distinct entries
/// after collapsing equal neighbors, and the window is read off that run.
pub fn max_alignment(a: &IndexSequence, k: usize, budget: &mut Budget) -> SearchOutcome<Alignment> {
    let values = a.values();
    if k == 0 || k > values.len() {
        return SearchOutcome::NotFound;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !budget.tick() {
            return SearchOutcome::BudgetExceeded;
        }
        let b: Vec<usize> = idx.iter().map(|&i| values[i]).collect();
        if let Some(w) = window_for(a, &b, budget) {
            return SearchOutcome::Found(w);
        }
        if budget.exhausted() {
            return SearchOutcome::BudgetExceeded;
        }
        // next k-subset
        let mut p = k;
        loop {
            if p == 0 {
                return SearchOutcome::NotFound;
            }
            p -= 1;
            if idx[p] < values.len() - k + p {
                break;
            }
        }
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn window_for(a: &IndexSequence, b: &[usize], budget: &mut Budget) -> Option<Alignment> {
    let k = b.len();
    // runs of the filtered sequence: (value, first position, last position), 1-based
    let mut runs: Vec<(usize, usize, usize)> = Vec::new();
    for (pos, &v) in a.0.iter().enumerate() {
        if !b.contains(&v) {
            continue;
        }
        match runs.last_mut() {
            Some(r) if r.0 == v => r.2 = pos + 1,
            _ => runs.push((v, pos + 1, pos + 1)),
        }
    }
    budget.charge(runs.len() as u64);
    let mut seen: Vec<usize> = Vec::with_capacity(k);
    for start in 0..runs.len() {
        seen.clear();
        for r in &runs[start..] {
            if seen.contains(&r.0) {
                break;
            }
            seen.push(r.0);
            if seen.len() == k {
                return Some(Alignment {
                    values: b.to_vec(),
                    i: runs[start].1,
                    j: r.1,
                });
            }
        }
    }
    None
}

/// Exhaustive oracle for [`max_alignment`]: every subset, every window.
pub fn max_alignment_naive(a: &IndexSequence, k: usize) -> Option<Alignment> {
    let values = a.values();
    let n = values.len();
    if k == 0 || k > n || n > 24 {
        return None;
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let b: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| values[i]).collect();
        for i in 1..=a.len() {
            for j in i..=a.len() {
                if is_alignment(a, &b, i, j).unwrap() {
                    return Some(Alignment { values: b, i, j });
                }
            }
        }
    }
    None
}
