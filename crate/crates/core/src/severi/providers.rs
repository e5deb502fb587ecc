//! Auxiliary-degree providers for the fan-splitting formula.
//!
//! `N_{e,delta,fixed,free}` is the degree of the locus of degree-`e` curves
//! with `delta` nodes meeting the axis in a fixed divisor of shape `fixed`
//! plus a free divisor of shape `free`. The splitting formula consumes these
//! through the [`AuxProvider`] contract; the built-in [`paper_aux`] table
//! covers the worked two-node and three-node-quartic ledgers, and callers
//! can layer their own JSON tables on top for anything else.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, decimal, Integer};
use crate::partitions::Partition;

use super::roberts_closed;

/// Lookup key for an auxiliary degree: top-curve degree `e`, its node count
/// `delta`, the portion of the axis divisor fixed in place, and the portion
/// of prescribed shape but free location.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AuxKey {
    pub e: u32,
    pub delta: u32,
    pub fixed: Partition,
    pub free: Partition,
}

impl fmt::Display for AuxKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{{{},{},{},{}}}", self.e, self.delta, self.fixed, self.free)
    }
}

/// Deterministic lookup of auxiliary degrees; `None` is the missing signal,
/// which the formula surfaces together with the offending key. Lookups must
/// be safe for concurrent readers.
pub trait AuxProvider: Sync {
    fn lookup(&self, key: &AuxKey) -> Option<Integer>;
}

impl<P: AuxProvider + ?Sized> AuxProvider for &P {
    fn lookup(&self, key: &AuxKey) -> Option<Integer> {
        (**self).lookup(key)
    }
}

/// The built-in table: explicit values read off the worked ledgers plus the
/// closed families their general-degree components imply.
pub struct PaperTables {
    explicit: HashMap<AuxKey, Integer>,
}

fn key(e: u32, delta: u32, fixed: &[u32], free: &[u32]) -> AuxKey {
    AuxKey {
        e,
        delta,
        fixed: Partition::new(fixed.to_vec()),
        free: Partition::new(free.to_vec()),
    }
}

/// Auxiliary degrees for the two worked examples and their closed families.
pub fn paper_aux() -> PaperTables {
    let mut explicit = HashMap::new();
    let mut put = |k: AuxKey, v: i64| {
        explicit.insert(k, Integer::from(v));
    };
    // Cubic curves against the axis, as used by the three-node quartic ledger.
    put(key(3, 2, &[1], &[2]), 21);
    put(key(3, 1, &[2], &[1]), 12);
    put(key(3, 0, &[3], &[]), 1);
    put(key(3, 1, &[0, 1], &[1]), 10);
    put(key(3, 1, &[1], &[0, 1]), 16);
    put(key(3, 2, &[], &[1, 1]), 30);
    put(key(3, 1, &[], &[0, 0, 1]), 21);
    PaperTables { explicit }
}

impl AuxProvider for PaperTables {
    fn lookup(&self, key: &AuxKey) -> Option<Integer> {
        if let Some(v) = self.explicit.get(key) {
            return Some(v.clone());
        }
        family_value(key).or_else(|| plain_degree(key))
    }
}

fn simple(count: u32) -> Partition {
    Partition::new(vec![count])
}

/// Closed families in the top-curve degree `e`. Guards keep each family on
/// the range where its polynomial is the actual degree; smaller `e` falls
/// through to the missing signal rather than a wrong value.
fn family_value(k: &AuxKey) -> Option<Integer> {
    let e = k.e;
    match k.delta {
        1 => {
            // one node, one fixed simple point: the fixed point is a linear
            // condition, so this is the plain one-node degree 3(e-1)^2
            if k.fixed == simple(1) && e >= 1 && k.free == simple(e - 1) {
                return Some(Integer::from(3) * Integer::from(e - 1).pow(2));
            }
            // one node, free divisor carrying one tangency
            if k.fixed.is_empty() && e >= 3 && k.free == Partition::new(vec![e - 2, 1]) {
                return Some(Integer::from(6 * e as u64 * (e as u64 - 1) * (e as u64 - 2)));
            }
        }
        0 => {
            // smooth, two fixed simple points: linear conditions only
            if k.fixed == simple(2) && e >= 2 && k.free == simple(e - 2) {
                return Some(Integer::from(1));
            }
            // smooth, tangent to the axis at a fixed point: again linear
            if k.fixed == Partition::new(vec![0, 1]) && e >= 2 && k.free == simple(e - 2) {
                return Some(Integer::from(1));
            }
            // smooth, one fixed simple point plus a free tangency: the
            // residual binary form of degree e-1 must have a double root
            if k.fixed == simple(1) && e >= 3 && k.free == Partition::new(vec![e - 3, 1]) {
                return Some(Integer::from(2 * (e - 2)));
            }
            // smooth, free triple contact
            if k.fixed.is_empty() && e >= 3 && k.free == Partition::new(vec![e - 3, 0, 1]) {
                return Some(Integer::from(3 * (e - 2)));
            }
            // smooth, two free tangencies
            if k.fixed.is_empty() && e >= 4 && k.free == Partition::new(vec![e - 4, 2]) {
                return Some(Integer::from(4) * binomial(e as u64 - 2, 2));
            }
        }
        _ => {}
    }
    None
}

/// A key with no fixed portion and an all-simple free portion of full weight
/// imposes no condition at all, so it resolves to the plain nodal degree
/// N_{e,delta}. Provided for the degrees the worked ledgers pin down.
fn plain_degree(k: &AuxKey) -> Option<Integer> {
    if !k.fixed.is_empty() {
        return None;
    }
    let all_simple = k.free.multiplicities().iter().skip(1).all(|&l| l == 0);
    if !all_simple || k.free.weight() != k.e {
        return None;
    }
    match (k.e, k.delta) {
        // three-node cubics are triangles: 15 ways to pair six points
        (3, 3) => Some(Integer::from(15)),
        // two-node degrees follow Roberts' closed form
        (e, 2) if e >= 3 => {
            Some(roberts_closed(e).expect("closed form is integral for e >= 3"))
        }
        _ => None,
    }
}

/// One record of the JSON aux-table schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuxRecord {
    pub e: u32,
    pub delta: u32,
    pub fixed: Partition,
    pub free: Partition,
    #[serde(with = "decimal")]
    pub value: Integer,
}

#[derive(Debug, Error)]
pub enum AuxTableError {
    #[error("invalid aux table: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("duplicate aux key {0}")]
    Duplicate(AuxKey),
}

/// An explicit table of auxiliary degrees, typically loaded from JSON.
#[derive(Debug, Clone, Default)]
pub struct AuxTable {
    entries: HashMap<AuxKey, Integer>,
}

impl AuxTable {
    pub fn from_records(records: Vec<AuxRecord>) -> Result<Self, AuxTableError> {
        let mut entries = HashMap::new();
        for r in records {
            let k = AuxKey { e: r.e, delta: r.delta, fixed: r.fixed, free: r.free };
            if entries.insert(k.clone(), r.value).is_some() {
                return Err(AuxTableError::Duplicate(k));
            }
        }
        Ok(AuxTable { entries })
    }

    /// Parses a JSON array of records; duplicate keys are a load-time error.
    pub fn from_json_str(json: &str) -> Result<Self, AuxTableError> {
        let records: Vec<AuxRecord> = serde_json::from_str(json)?;
        Self::from_records(records)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl AuxProvider for AuxTable {
    fn lookup(&self, key: &AuxKey) -> Option<Integer> {
        self.entries.get(key).cloned()
    }
}

/// Consults `primary` first and falls back to `fallback`, so a user table
/// can supply exactly the entries a run reported missing (or override the
/// built-ins) without replacing them wholesale.
pub struct Layered<'a> {
    pub primary: &'a dyn AuxProvider,
    pub fallback: &'a dyn AuxProvider,
}

impl AuxProvider for Layered<'_> {
    fn lookup(&self, key: &AuxKey) -> Option<Integer> {
        self.primary.lookup(key).or_else(|| self.fallback.lookup(key))
    }
}
