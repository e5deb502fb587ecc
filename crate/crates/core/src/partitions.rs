//! The partition calculus for shapes of divisors on the axis line.
//!
//! A shape is recorded as its multiplicity vector `[l_1, l_2, ...]`: `l_i`
//! blocks of size `i`, matching the bracket notation used throughout the
//! ledgers (so `[0,1]` is a single double point and `[3]` is three simple
//! points). Vectors are kept normalized — no trailing zeros — so equality
//! is structural and the empty partition is the unique weight-0 shape.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{factorial, Integer};

/// A divisor shape on the axis, encoded by block-size multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    mults: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("not a subpartition: {sub} blocks of size {block_size} exceed the {sup} available")]
    NotContained { block_size: u32, sub: u32, sup: u32 },
}

impl Partition {
    /// Builds a partition from a multiplicity vector, stripping trailing zeros.
    pub fn new(mut mults: Vec<u32>) -> Self {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        Partition { mults }
    }

    pub fn empty() -> Self {
        Partition { mults: Vec::new() }
    }

    /// The normalized multiplicity vector.
    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    /// Number of blocks of the given size (sizes are 1-based).
    pub fn multiplicity(&self, block_size: u32) -> u32 {
        if block_size == 0 {
            return 0;
        }
        self.mults.get(block_size as usize - 1).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// |pi| = sum of i * l_i, the total degree of the divisor.
    pub fn weight(&self) -> u32 {
        self.mults
            .iter()
            .enumerate()
            .map(|(i, &l)| (i as u32 + 1) * l)
            .sum()
    }

    /// s(pi) = sum of l_i, the number of blocks.
    pub fn size(&self) -> u32 {
        self.mults.iter().sum()
    }

    /// m(pi) = product of i^(l_i).
    pub fn mult_m(&self) -> Integer {
        let mut m = Integer::from(1);
        for (i, &l) in self.mults.iter().enumerate() {
            m *= Integer::from(i as u32 + 1).pow(l);
        }
        m
    }

    /// n(pi) = s(pi)! / (l_1! ... l_r!), the number of orderings of the blocks.
    pub fn perm_count_n(&self) -> Integer {
        let mut n = factorial(self.size() as u64);
        for &l in &self.mults {
            n /= factorial(l as u64);
        }
        n
    }

    /// Componentwise order: true iff every multiplicity of `self` is at most
    /// the corresponding multiplicity of `other`.
    pub fn leq(&self, other: &Partition) -> bool {
        self.mults
            .iter()
            .enumerate()
            .all(|(i, &l)| l <= other.mults.get(i).copied().unwrap_or(0))
    }

    /// The complementary partition `[l_i - l'_i]`; `sub` must satisfy
    /// `sub.leq(self)`.
    pub fn complement(&self, sub: &Partition) -> Result<Partition, PartitionError> {
        let mut mults = Vec::with_capacity(self.mults.len());
        for i in 0..self.mults.len().max(sub.mults.len()) {
            let sup = self.mults.get(i).copied().unwrap_or(0);
            let s = sub.mults.get(i).copied().unwrap_or(0);
            if s > sup {
                return Err(PartitionError::NotContained {
                    block_size: i as u32 + 1,
                    sub: s,
                    sup,
                });
            }
            mults.push(sup - s);
        }
        Ok(Partition::new(mults))
    }

    /// All partitions `q` with `q.leq(self)`, in a fixed order (the count of
    /// size-1 blocks cycling fastest). There are `prod (l_i + 1)` of them.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let n = self.mults.len();
        let mut current = vec![0u32; n];
        let mut out = Vec::new();
        loop {
            out.push(Partition::new(current.clone()));
            let mut i = 0;
            while i < n {
                current[i] += 1;
                if current[i] <= self.mults[i] {
                    break;
                }
                current[i] = 0;
                i += 1;
            }
            if i == n {
                return out;
            }
        }
    }
}

impl From<Vec<u32>> for Partition {
    fn from(mults: Vec<u32>) -> Self {
        Partition::new(mults)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.mults
    }
}

// Enumeration order: shorter multiplicity vectors first, then lexicographic.
// This is the order `partitions_of_weight` returns and ledgers print in; it
// is unrelated to the componentwise partial order `leq`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.mults
            .len()
            .cmp(&other.mults.len())
            .then_with(|| self.mults.cmp(&other.mults))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.mults.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of weight `w`, each exactly once, in the fixed enumeration
/// order (shorter multiplicity vectors first, then lexicographic).
pub fn partitions_of_weight(w: u32) -> Vec<Partition> {
    fn rec(block_size: u32, remaining: u32, mults: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if block_size == 0 {
            if remaining == 0 {
                out.push(Partition::new(mults.clone()));
            }
            return;
        }
        for count in 0..=remaining / block_size {
            mults[block_size as usize - 1] = count;
            rec(block_size - 1, remaining - block_size * count, mults, out);
        }
        mults[block_size as usize - 1] = 0;
    }

    let mut mults = vec![0u32; w as usize];
    let mut out = Vec::new();
    rec(w, w, &mut mults, &mut out);
    out.sort();
    out
}
