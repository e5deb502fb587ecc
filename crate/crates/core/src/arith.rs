//! Arbitrary-precision integers and rationals plus the two combinatorial
//! primitives every counting routine leans on.
//!
//! Every public count in this crate is an [`Integer`]; rationals appear only
//! transiently inside closed-form polynomial evaluation and must reduce to
//! integers before being returned.

use std::sync::{LazyLock, RwLock};

use num_traits::One;

pub use num_bigint::BigInt as Integer;

/// Exact rational; always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

// Pascal-triangle rows, grown on demand. The recursions hit the same small
// binomials over and over, so reads vastly outnumber growth events.
static PASCAL: LazyLock<RwLock<Vec<Vec<Integer>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![Integer::one()]]));

static FACTORIALS: LazyLock<RwLock<Vec<Integer>>> =
    LazyLock::new(|| RwLock::new(vec![Integer::one()]));

/// Binomial coefficient C(n, k). Returns 0 when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::from(0);
    }
    let (n, k) = (n as usize, k as usize);
    {
        let rows = PASCAL.read().unwrap();
        if n < rows.len() {
            return rows[n][k].clone();
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(Integer::one());
        for pair in prev.windows(2) {
            row.push(&pair[0] + &pair[1]);
        }
        row.push(Integer::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// n!, memoized.
pub fn factorial(n: u64) -> Integer {
    let n = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * Integer::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Serde adapter rendering an [`Integer`] as a decimal string, so consumers
/// whose native integers are 64-bit never lose precision.
pub mod decimal {
    use super::Integer;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Integer, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Integer, D::Error> {
        let s = String::deserialize(de)?;
        s.parse::<Integer>().map_err(serde::de::Error::custom)
    }
}
