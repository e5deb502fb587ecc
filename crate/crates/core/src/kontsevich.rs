//! Rational-curve counts `n_d` by the splitting recursion, in closed form.
//!
//! `n_d` is the number of rational curves of degree `d` in the plane through
//! `3d - 1` general points. Degenerating the source line into two components
//! balances two distributions of four marked constraints (two points and two
//! lines) and yields, for every `d >= 2`,
//!
//! ```text
//!   n_d + f(n_1, ..., n_{d-1}) = g(n_1, ..., n_{d-1})
//! ```
//!
//! where `f` and `g` are the quadratic split sums implemented here. Each
//! summand over `d_1 + d_2 = d` carries the image counts `n_{d_1} n_{d_2}`,
//! line-incidence and node-choice degree factors, and a binomial choosing
//! which of the `3d - 4` free point constraints land on the second component.
//! Solving for `n_d` gives the table degree by degree: 1, 1, 12, 620, 87304,
//! and so on. The `quantum` module re-derives the same numbers through an
//! independent code path, and the two are tested against each other.

use thiserror::Error;

use crate::arith::{binomial, Integer};

/// Memoized table of rational-curve counts, grown in increasing degree.
/// Degree 1 is seeded with the single line through two points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NdTable {
    values: Vec<Integer>, // values[i] = n_{i+1}
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeError {
    #[error("degree must be at least {min}, got {got}")]
    TooSmall { min: u32, got: u32 },
}

impl NdTable {
    pub fn new() -> Self {
        NdTable { values: vec![Integer::from(1)] }
    }

    /// Largest degree with a stored entry.
    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, d: u32) -> Option<&Integer> {
        if d == 0 {
            return None;
        }
        self.values.get(d as usize - 1)
    }

    /// Panics when the entry is absent; callers are expected to have grown
    /// the table first.
    pub fn entry(&self, d: u32) -> &Integer {
        self.get(d).unwrap_or_else(|| {
            panic!(
                "table holds n_1..n_{}, asked for n_{d}",
                self.max_degree()
            )
        })
    }

    pub(crate) fn push_next(&mut self, value: Integer) {
        self.values.push(value);
    }

    /// Replaces an existing entry. Only sensible for sensitivity experiments
    /// that deliberately corrupt the table.
    pub fn set(&mut self, d: u32, value: Integer) {
        assert!(d >= 1 && d <= self.max_degree(), "no entry n_{d} to replace");
        self.values[d as usize - 1] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Integer)> {
        self.values.iter().enumerate().map(|(i, v)| (i as u32 + 1, v))
    }
}

impl Default for NdTable {
    fn default() -> Self {
        Self::new()
    }
}

fn check_split_degree(d: u32) -> Result<(), DegreeError> {
    if d < 2 {
        return Err(DegreeError::TooSmall { min: 2, got: d });
    }
    Ok(())
}

/// One summand of `f`: the split `(d_1, d_2)` contributes
/// `n_{d_1} n_{d_2} * d_1 * d_2^3 * C(3d-4, 3d_2 - 1)`.
fn f_term(d: u32, d1: u32, table: &NdTable) -> Integer {
    let d2 = d - d1;
    table.entry(d1)
        * table.entry(d2)
        * Integer::from(d1)
        * Integer::from(d2).pow(3)
        * binomial(3 * d as u64 - 4, 3 * d2 as i64 - 1)
}

/// One summand of `g`: the split `(d_1, d_2)` contributes
/// `n_{d_1} n_{d_2} * d_1^2 * d_2^2 * C(3d-4, 3d_2 - 2)`.
fn g_term(d: u32, d1: u32, table: &NdTable) -> Integer {
    let d2 = d - d1;
    table.entry(d1)
        * table.entry(d2)
        * Integer::from(d1).pow(2)
        * Integer::from(d2).pow(2)
        * binomial(3 * d as u64 - 4, 3 * d2 as i64 - 2)
}

// The split sums stay sequential: the outer recursion is a dependency chain
// anyway, and the d - 1 inner products are far too cheap to amortize
// scheduling even at degrees in the hundreds.

/// The `f` summands, listed by `d_1 = d-1` down to `1`.
pub fn f_summands(d: u32, table: &NdTable) -> Result<Vec<Integer>, DegreeError> {
    check_split_degree(d)?;
    Ok((1..d).rev().map(|d1| f_term(d, d1, table)).collect())
}

/// The `g` summands, listed by `d_1 = d-1` down to `1`.
pub fn g_summands(d: u32, table: &NdTable) -> Result<Vec<Integer>, DegreeError> {
    check_split_degree(d)?;
    Ok((1..d).rev().map(|d1| g_term(d, d1, table)).collect())
}

/// `f(n_1, ..., n_{d-1})`; the table must hold entries up to `d - 1`.
pub fn f_sum(d: u32, table: &NdTable) -> Result<Integer, DegreeError> {
    Ok(f_summands(d, table)?.into_iter().sum())
}

/// `g(n_1, ..., n_{d-1})`; the table must hold entries up to `d - 1`.
pub fn g_sum(d: u32, table: &NdTable) -> Result<Integer, DegreeError> {
    Ok(g_summands(d, table)?.into_iter().sum())
}

/// `n_d`, growing the table through degree `d` as needed.
pub fn n_d(d: u32, table: &mut NdTable) -> Result<Integer, DegreeError> {
    if d == 0 {
        return Err(DegreeError::TooSmall { min: 1, got: 0 });
    }
    while table.max_degree() < d {
        let next = table.max_degree() + 1;
        let f = f_sum(next, table)?;
        let g = g_sum(next, table)?;
        table.push_next(g - f);
    }
    Ok(table.entry(d).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_to(d: u32) -> NdTable {
        let mut t = NdTable::new();
        n_d(d, &mut t).unwrap();
        t
    }

    #[test]
    fn small_degrees() {
        let mut t = NdTable::new();
        assert_eq!(n_d(1, &mut t).unwrap(), Integer::from(1));
        assert_eq!(n_d(2, &mut t).unwrap(), Integer::from(1));
        assert_eq!(n_d(3, &mut t).unwrap(), Integer::from(12));
        assert_eq!(n_d(4, &mut t).unwrap(), Integer::from(620));
        assert_eq!(n_d(5, &mut t).unwrap(), Integer::from(87304));
    }

    #[test]
    fn quartic_split_sums() {
        let t = table_to(3);
        assert_eq!(f_sum(4, &t).unwrap(), Integer::from(2228));
        assert_eq!(g_sum(4, &t).unwrap(), Integer::from(2848));

        let f: Vec<Integer> = f_summands(4, &t).unwrap();
        assert_eq!(f, vec![Integer::from(1008), Integer::from(896), Integer::from(324)]);
        let g: Vec<Integer> = g_summands(4, &t).unwrap();
        assert_eq!(g, vec![Integer::from(864), Integer::from(1120), Integer::from(864)]);
    }

    #[test]
    fn conic_split_sums() {
        let t = table_to(1);
        assert_eq!(f_sum(2, &t).unwrap(), Integer::from(1));
        assert_eq!(g_sum(2, &t).unwrap(), Integer::from(2));
    }

    #[test]
    fn domain_errors() {
        let mut t = NdTable::new();
        assert_eq!(n_d(0, &mut t), Err(DegreeError::TooSmall { min: 1, got: 0 }));
        assert_eq!(f_sum(1, &t), Err(DegreeError::TooSmall { min: 2, got: 1 }));
        assert_eq!(g_sum(0, &t), Err(DegreeError::TooSmall { min: 2, got: 0 }));
    }

    #[test]
    fn table_invariants() {
        let t = table_to(20);
        assert_eq!(t.entry(1), &Integer::from(1));
        for (d, value) in t.iter() {
            assert!(value > &Integer::from(0), "n_{d} not positive");
        }
        assert_eq!(t.max_degree(), 20);
    }

    // Swapping the roles of the two split degrees and complementing the
    // binomial must leave the f-sum unchanged; guards transcription slips
    // in the term factors.
    #[test]
    fn relabeling_symmetry() {
        let t = table_to(12);
        for d in 2..=12u32 {
            let lhs: Integer = (1..d)
                .map(|d1| {
                    let d2 = d - d1;
                    t.entry(d1)
                        * t.entry(d2)
                        * Integer::from(d1)
                        * Integer::from(d2).pow(3)
                        * binomial(3 * d as u64 - 4, 3 * d2 as i64 - 1)
                })
                .sum();
            let rhs: Integer = (1..d)
                .map(|d1| {
                    let d2 = d - d1;
                    t.entry(d1)
                        * t.entry(d2)
                        * Integer::from(d1).pow(3)
                        * Integer::from(d2)
                        * binomial(3 * d as u64 - 4, 3 * d1 as i64 - 1)
                })
                .sum();
            assert_eq!(lhs, rhs, "d={d}");
        }
    }
}
