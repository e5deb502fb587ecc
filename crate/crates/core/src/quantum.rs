//! Quantum-cohomology reduction for the plane: reduced Gromov-Witten
//! invariants, the Künneth diagonal pairing, and the four-point relation
//! whose symmetry under regrouping encodes WDVV associativity.
//!
//! The cohomology basis is `T_0` (fundamental class), `T_1` (line class),
//! `T_2` (point class). A four-point divisor class, cut out by fixing four
//! marked constraints, splits over degree decompositions and over the
//! diagonal decomposition `[Delta] = sum g^{e,f} T_e (x) T_f`; each side of
//! the split reduces to a multiple of some `n_{d_i}` by the fundamental-class
//! and divisor axioms. Because the left side is symmetric in the four
//! insertions, the two ways of pairing them up — (point, point | line, line)
//! and (point, line | point, line) — must agree, and that equality is
//! exactly the recursion solved for `n_d` here. This code path shares no
//! term structure with [`crate::kontsevich`]; the two are cross-checked in
//! the test suites.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, Integer};
use crate::exec;
use crate::kontsevich::NdTable;

/// A cohomology basis class of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisClass {
    /// `T_0`, the fundamental class.
    Fundamental,
    /// `T_1`, the class of a line.
    Line,
    /// `T_2`, the class of a point.
    Point,
}

impl BasisClass {
    pub fn index(self) -> u32 {
        match self {
            BasisClass::Fundamental => 0,
            BasisClass::Line => 1,
            BasisClass::Point => 2,
        }
    }

    pub fn from_index(index: u32) -> Option<Self> {
        match index {
            0 => Some(BasisClass::Fundamental),
            1 => Some(BasisClass::Line),
            2 => Some(BasisClass::Point),
            _ => None,
        }
    }
}

/// How the four fixed insertions are paired across the two components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairGrouping {
    pub first: (BasisClass, BasisClass),
    pub second: (BasisClass, BasisClass),
}

impl PairGrouping {
    /// (point, point | line, line) — the grouping whose degenerate split
    /// isolates `n_d` itself.
    pub const fn points_lines() -> Self {
        PairGrouping {
            first: (BasisClass::Point, BasisClass::Point),
            second: (BasisClass::Line, BasisClass::Line),
        }
    }

    /// (point, line | point, line) — the regrouped side; its degenerate
    /// splits all vanish.
    pub const fn mixed() -> Self {
        PairGrouping {
            first: (BasisClass::Point, BasisClass::Line),
            second: (BasisClass::Point, BasisClass::Line),
        }
    }
}

impl fmt::Display for PairGrouping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn letter(c: BasisClass) -> char {
            match c {
                BasisClass::Fundamental => 'f',
                BasisClass::Line => 'l',
                BasisClass::Point => 'p',
            }
        }
        write!(
            f,
            "{}{}|{}{}",
            letter(self.first.0),
            letter(self.first.1),
            letter(self.second.0),
            letter(self.second.1)
        )
    }
}

impl FromStr for PairGrouping {
    type Err = String;

    /// Accepts the two groupings used by the relation, written `pp,ll` or
    /// `pl,pl` (a `|` separator is also recognized).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('|', ",").as_str() {
            "pp,ll" => Ok(PairGrouping::points_lines()),
            "pl,pl" => Ok(PairGrouping::mixed()),
            other => Err(format!(
                "unknown pair grouping {other:?}; expected \"pp,ll\" or \"pl,pl\""
            )),
        }
    }
}

/// The data of one reduced invariant: a degree and the multiset of
/// insertions, recorded as counts per basis class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InvariantKey {
    pub d: u32,
    /// `T_0` insertions. These only arise through the Künneth pair
    /// `(T_0, T_2)`; any positive-degree invariant carrying one vanishes.
    pub fundamentals: u32,
    pub lines: u32,
    pub points: u32,
}

impl InvariantKey {
    pub fn new(d: u32, points: u32, lines: u32) -> Self {
        InvariantKey { d, fundamentals: 0, lines, points }
    }

    /// Key for the given classes plus `extra_points` point-class insertions.
    pub fn from_insertions(d: u32, classes: &[BasisClass], extra_points: u32) -> Self {
        let mut key = InvariantKey { d, fundamentals: 0, lines: 0, points: extra_points };
        for &c in classes {
            match c {
                BasisClass::Fundamental => key.fundamentals += 1,
                BasisClass::Line => key.lines += 1,
                BasisClass::Point => key.points += 1,
            }
        }
        key
    }

    fn insertion_count(&self) -> u32 {
        self.fundamentals + self.lines + self.points
    }
}

/// Degree-0 three-point invariant: 1 exactly when the classes cup to the
/// point class, i.e. the indices sum to the dimension 2.
pub fn classical_triple(a: BasisClass, b: BasisClass, c: BasisClass) -> Integer {
    if a.index() + b.index() + c.index() == 2 {
        Integer::from(1)
    } else {
        Integer::from(0)
    }
}

/// The Künneth decomposition of the diagonal of the plane: coefficient 1 on
/// `(T_e, T_f)` exactly when `e + f = 2`.
pub fn kunneth_pairs() -> Vec<(BasisClass, BasisClass, Integer)> {
    vec![
        (BasisClass::Fundamental, BasisClass::Point, Integer::from(1)),
        (BasisClass::Line, BasisClass::Line, Integer::from(1)),
        (BasisClass::Point, BasisClass::Fundamental, Integer::from(1)),
    ]
}

/// Reduces an invariant to a multiple of `n_d`.
///
/// Degree 0 keeps only honest three-point triples. In positive degree a
/// fundamental-class insertion kills the invariant; otherwise each line
/// insertion contributes a divisor-axiom factor `d`, and the point
/// insertions must number exactly `3d - 1` or the dimensions do not match.
pub fn reduced_invariant(key: &InvariantKey, table: &NdTable) -> Integer {
    if key.d == 0 {
        if key.insertion_count() != 3 {
            return Integer::from(0);
        }
        let mut classes = Vec::with_capacity(3);
        classes.extend(std::iter::repeat_n(BasisClass::Fundamental, key.fundamentals as usize));
        classes.extend(std::iter::repeat_n(BasisClass::Line, key.lines as usize));
        classes.extend(std::iter::repeat_n(BasisClass::Point, key.points as usize));
        return classical_triple(classes[0], classes[1], classes[2]);
    }
    if key.fundamentals > 0 {
        return Integer::from(0);
    }
    if key.points != 3 * key.d - 1 {
        return Integer::from(0);
    }
    Integer::from(key.d).pow(key.lines) * table.entry(key.d)
}

/// The four-point divisor sum: over all degree splits `d_1 + d_2 = d`, all
/// distributions of the `n` interchangeable point insertions (weighted by
/// `C(n, n_1)`), and all Künneth pairs `(T_e, T_f)`, the product of the two
/// reduced invariants. Splits with `d_1 = 0` or `d_2 = 0` enter only when
/// `include_degenerate` is set.
pub fn four_point_sum(
    d: u32,
    n: u32,
    grouping: &PairGrouping,
    table: &NdTable,
    include_degenerate: bool,
) -> Integer {
    let pairs = kunneth_pairs();
    let mut total = Integer::from(0);
    for d1 in 0..=d {
        let d2 = d - d1;
        if !include_degenerate && (d1 == 0 || d2 == 0) {
            continue;
        }
        for n1 in 0..=n {
            let n2 = n - n1;
            let mut distribution = Integer::zero();
            for (e, f, coeff) in &pairs {
                let first = InvariantKey::from_insertions(
                    d1,
                    &[grouping.first.0, grouping.first.1, *e],
                    n1,
                );
                let left = reduced_invariant(&first, table);
                if left.is_zero() {
                    continue;
                }
                let second = InvariantKey::from_insertions(
                    d2,
                    &[grouping.second.0, grouping.second.1, *f],
                    n2,
                );
                let right = reduced_invariant(&second, table);
                if right.is_zero() {
                    continue;
                }
                distribution += coeff * left * right;
            }
            if !distribution.is_zero() {
                total += binomial(n as u64, n1 as i64) * distribution;
            }
        }
    }
    total
}

/// Difference of the two groupings' four-point sums at `n = 3d - 4`
/// insertions; zero exactly when the table entries satisfy the relation.
pub fn wdvv_residual(d: u32, table: &NdTable) -> Integer {
    assert!(d >= 2, "the four-point relation starts at degree 2, got {d}");
    let n = 3 * d - 4;
    four_point_sum(d, n, &PairGrouping::points_lines(), table, true)
        - four_point_sum(d, n, &PairGrouping::mixed(), table, true)
}

/// Residuals for every degree `2..=d_max` against a completed table.
/// Degrees are independent given the table, so the sweep parallelizes.
pub fn wdvv_residuals(d_max: u32, table: &NdTable) -> Vec<(u32, Integer)> {
    let degrees: Vec<u32> = (2..=d_max).collect();
    exec::map_collect(degrees, |d| (d, wdvv_residual(d, table)))
}

/// Builds the `n_d` table through `d_max` purely from the four-point
/// relation: with degenerate splits excluded, the only missing contribution
/// on the (point, point | line, line) side is the isolated `n_d` itself, so
/// `n_d = S_g - S_f` degree by degree.
pub fn n_d_via_wdvv(d_max: u32) -> NdTable {
    let mut table = NdTable::new();
    for d in 2..=d_max {
        let n = 3 * d - 4;
        let s_f = four_point_sum(d, n, &PairGrouping::points_lines(), &table, false);
        let s_g = four_point_sum(d, n, &PairGrouping::mixed(), &table, false);
        table.push_next(s_g - s_f);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kontsevich;

    fn b(i: u32) -> BasisClass {
        BasisClass::from_index(i).unwrap()
    }

    fn closed_form_table(d: u32) -> NdTable {
        let mut t = NdTable::new();
        kontsevich::n_d(d, &mut t).unwrap();
        t
    }

    #[test]
    fn classical_triples() {
        assert_eq!(classical_triple(b(0), b(1), b(1)), Integer::from(1));
        assert_eq!(classical_triple(b(0), b(0), b(2)), Integer::from(1));
        assert_eq!(classical_triple(b(2), b(2), b(2)), Integer::from(0));
        assert_eq!(classical_triple(b(0), b(0), b(1)), Integer::from(0));
    }

    #[test]
    fn kunneth_decomposition() {
        let pairs = kunneth_pairs();
        assert_eq!(pairs.len(), 3);
        assert!(pairs
            .iter()
            .any(|(e, f, c)| (*e, *f) == (b(0), b(2)) && *c == Integer::from(1)));
        assert!(pairs
            .iter()
            .any(|(e, f, c)| (*e, *f) == (b(1), b(1)) && *c == Integer::from(1)));
        assert!(!pairs.iter().any(|(e, f, _)| (*e, *f) == (b(2), b(2))));
        for (e, f, _) in &pairs {
            assert_eq!(e.index() + f.index(), 2);
        }
    }

    #[test]
    fn reduced_invariant_values() {
        let t = closed_form_table(3);
        assert_eq!(
            reduced_invariant(&InvariantKey::new(1, 2, 0), &t),
            Integer::from(1)
        );
        assert_eq!(
            reduced_invariant(&InvariantKey::new(3, 8, 0), &t),
            Integer::from(12)
        );
        assert_eq!(
            reduced_invariant(&InvariantKey::new(2, 5, 3), &t),
            Integer::from(8)
        );
        assert_eq!(
            reduced_invariant(&InvariantKey::new(2, 4, 0), &t),
            Integer::from(0)
        );
        let with_fundamental = InvariantKey { d: 2, fundamentals: 1, lines: 0, points: 5 };
        assert_eq!(reduced_invariant(&with_fundamental, &t), Integer::from(0));
    }

    #[test]
    fn dimension_filter_is_exhaustive() {
        let t = closed_form_table(6);
        for d in 1..=6u32 {
            for points in 0..=20u32 {
                for lines in 0..=5u32 {
                    if points == 3 * d - 1 {
                        continue;
                    }
                    let key = InvariantKey::new(d, points, lines);
                    assert!(
                        reduced_invariant(&key, &t).is_zero(),
                        "d={d} points={points} lines={lines}"
                    );
                }
            }
        }
    }

    #[test]
    fn quartic_four_point_sums() {
        let t = closed_form_table(4);
        assert_eq!(
            four_point_sum(4, 8, &PairGrouping::points_lines(), &t, true),
            Integer::from(2848)
        );
        assert_eq!(
            four_point_sum(4, 8, &PairGrouping::mixed(), &t, true),
            Integer::from(2848)
        );
    }

    #[test]
    fn conic_four_point_sums() {
        let t = closed_form_table(2);
        assert_eq!(
            four_point_sum(2, 2, &PairGrouping::points_lines(), &t, true),
            Integer::from(2)
        );
        assert_eq!(
            four_point_sum(2, 2, &PairGrouping::mixed(), &t, true),
            Integer::from(2)
        );
    }

    #[test]
    fn residuals_vanish_with_a_correct_table() {
        let t = closed_form_table(12);
        for (d, r) in wdvv_residuals(12, &t) {
            assert!(r.is_zero(), "nonzero residual {r} at d={d}");
        }
    }

    #[test]
    fn residual_detects_a_corrupted_entry() {
        let mut t = closed_form_table(4);
        t.set(3, Integer::from(13));
        assert!(!wdvv_residual(4, &t).is_zero());
    }

    // Toggling the degenerate splits moves the sum by exactly n_d on the
    // (pp|ll) side and not at all on the (pl|pl) side.
    #[test]
    fn degenerate_term_isolation() {
        let t = closed_form_table(12);
        for d in 2..=12u32 {
            let n = 3 * d - 4;
            let with = four_point_sum(d, n, &PairGrouping::points_lines(), &t, true);
            let without = four_point_sum(d, n, &PairGrouping::points_lines(), &t, false);
            assert_eq!(&with - &without, t.entry(d).clone(), "d={d}");

            let mixed_with = four_point_sum(d, n, &PairGrouping::mixed(), &t, true);
            let mixed_without = four_point_sum(d, n, &PairGrouping::mixed(), &t, false);
            assert_eq!(mixed_with, mixed_without, "d={d}");
        }
    }

    #[test]
    fn wdvv_table_small_degrees() {
        let t = n_d_via_wdvv(4);
        assert_eq!(t.entry(1), &Integer::from(1));
        assert_eq!(t.entry(2), &Integer::from(1));
        assert_eq!(t.entry(3), &Integer::from(12));
        assert_eq!(t.entry(4), &Integer::from(620));

        let seed = n_d_via_wdvv(1);
        assert_eq!(seed.max_degree(), 1);
        assert_eq!(seed.entry(1), &Integer::from(1));
    }

    #[test]
    fn grouping_parsing_and_display() {
        assert_eq!(
            "pp,ll".parse::<PairGrouping>().unwrap(),
            PairGrouping::points_lines()
        );
        assert_eq!("pl,pl".parse::<PairGrouping>().unwrap(), PairGrouping::mixed());
        assert_eq!(
            "pp|ll".parse::<PairGrouping>().unwrap(),
            PairGrouping::points_lines()
        );
        assert!("px,ll".parse::<PairGrouping>().is_err());
        assert_eq!(PairGrouping::points_lines().to_string(), "pp|ll");
        assert_eq!(PairGrouping::mixed().to_string(), "pl|pl");
    }
}
