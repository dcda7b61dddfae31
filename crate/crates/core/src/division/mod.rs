//! Janet-like and Janet monomial division.
//!
//! The leading monomials of one indeterminate are partitioned into groups
//! sharing the same exponent prefix (taken in the ranking's difference
//! order). Inside a group, a monomial whose degree in the next difference
//! is not maximal receives a difference power `θ_i^s_i`, with `s_i` the gap
//! to the next larger degree in that group. The shifts allowed for reduction
//! are those with `γ_i < s_i` for every such power. Classical Janet division
//! is the special case where every gap is replaced by 1, i.e. the
//! non-multiplicative differences must not occur in `γ` at all.

mod tree;

pub use tree::JanetTree;

use std::fmt;

use thiserror::Error;

use crate::ring::{DifferenceMonomial, ExponentVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisionError {
    #[error("monomial {0} is already in the tree")]
    DuplicateMonomial(DifferenceMonomial),
    #[error("monomial {0} is not in the tree")]
    MissingMonomial(DifferenceMonomial),
    #[error("monomials from different contexts: {0}")]
    MixedContexts(String),
    #[error("janet tree out of sync with division records: {0}")]
    Desynchronized(String),
}

/// Which division drives reducibility and prolongations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum DivisionKind {
    #[default]
    JanetLike,
    Janet,
}

impl DivisionKind {
    pub fn name(self) -> &'static str {
        match self {
            DivisionKind::JanetLike => "janet-like",
            DivisionKind::Janet => "janet",
        }
    }
}

impl fmt::Display for DivisionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Difference powers of one leading monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DivisionRecord {
    owner: DifferenceMonomial,
    // (difference index, s_i), sorted by index, every s_i >= 1
    powers: Vec<(usize, u32)>,
}

impl DivisionRecord {
    pub fn new(owner: DifferenceMonomial, mut powers: Vec<(usize, u32)>) -> Self {
        powers.sort_unstable();
        debug_assert!(powers.iter().all(|&(_, s)| s >= 1));
        Self { owner, powers }
    }

    pub fn owner(&self) -> &DifferenceMonomial {
        &self.owner
    }

    /// `(i, s_i)` pairs for the difference powers `θ_i^s_i`.
    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn power(&self, i: usize) -> Option<u32> {
        self.powers.iter().find(|&&(j, _)| j == i).map(|&(_, s)| s)
    }

    /// The difference powers as exponent vectors.
    pub fn difference_powers(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        let n = self.owner.exponent().len();
        self.powers
            .iter()
            .map(move |&(i, s)| ExponentVector::pure_power(n, i, s))
    }

    /// Whether `θ^γ` lies outside the monoid ideal generated by the
    /// difference powers.
    pub fn admits(&self, gamma: &ExponentVector) -> bool {
        self.powers.iter().all(|&(i, s)| gamma.get(i) < s)
    }
}

/// Computes the division record of every monomial in `monomials`; the
/// result is index-aligned with the input.
///
/// `difference_order` fixes the order in which exponent prefixes form the
/// groups; it is normally the ranking's difference order.
pub fn classify(
    monomials: &[DifferenceMonomial],
    difference_order: &[usize],
    kind: DivisionKind,
) -> Result<Vec<DivisionRecord>, DivisionError> {
    let n = difference_order.len();
    if let Some(u) = monomials.iter().find(|u| u.exponent().len() != n) {
        return Err(DivisionError::MixedContexts(format!(
            "{u} does not have {n} exponents"
        )));
    }
    let mut powers: Vec<Vec<(usize, u32)>> = vec![Vec::new(); monomials.len()];

    let mut by_prefix: Vec<usize> = (0..monomials.len()).collect();
    // indeterminate first, then exponents in difference order
    let sort_key = |&a: &usize| {
        let u = &monomials[a];
        (
            u.indeterminate(),
            difference_order
                .iter()
                .map(|&i| u.degree_in(i))
                .collect::<Vec<_>>(),
        )
    };
    by_prefix.sort_by_cached_key(sort_key);

    for group in by_prefix.chunk_by(|&a, &b| monomials[a].indeterminate() == monomials[b].indeterminate()) {
        sweep(monomials, group, 0, difference_order, kind, &mut powers);
    }

    Ok(monomials
        .iter()
        .zip(powers)
        .map(|(u, p)| DivisionRecord::new(u.clone(), p))
        .collect())
}

// `group` is sorted and shares the exponent prefix of length `level`.
fn sweep(
    monomials: &[DifferenceMonomial],
    group: &[usize],
    level: usize,
    order: &[usize],
    kind: DivisionKind,
    powers: &mut [Vec<(usize, u32)>],
) {
    if level == order.len() {
        return;
    }
    let i = order[level];
    let runs: Vec<&[usize]> = group
        .chunk_by(|&a, &b| monomials[a].degree_in(i) == monomials[b].degree_in(i))
        .collect();
    for (j, run) in runs.iter().enumerate() {
        if let Some(next) = runs.get(j + 1) {
            let gap = monomials[next[0]].degree_in(i) - monomials[run[0]].degree_in(i);
            let s = match kind {
                DivisionKind::JanetLike => gap,
                DivisionKind::Janet => 1,
            };
            for &a in *run {
                powers[a].push((i, s));
            }
        }
        sweep(monomials, run, level + 1, order, kind, powers);
    }
}

/// Multiplicative differences for classical Janet division: `θ_i` is
/// multiplicative for `u` when `deg_i(u)` is maximal in `u`'s group.
pub fn janet_multiplicative(
    monomials: &[DifferenceMonomial],
    difference_order: &[usize],
) -> Result<Vec<Vec<usize>>, DivisionError> {
    let n = difference_order.len();
    Ok(classify(monomials, difference_order, DivisionKind::Janet)?
        .into_iter()
        .map(|rec| (0..n).filter(|&i| rec.power(i).is_none()).collect())
        .collect())
}

/// Returns `γ` when `u = θ^γ ∘ g_lm` and `θ^γ` is an admissible shift for
/// `g_lm` under `rec`.
pub fn j_divides(
    g_lm: &DifferenceMonomial,
    rec: &DivisionRecord,
    u: &DifferenceMonomial,
) -> Option<ExponentVector> {
    let gamma = g_lm.divides(u)?;
    rec.admits(&gamma).then_some(gamma)
}

/// Every `(element, γ)` whose record J-divides `u`, in iteration order.
pub fn j_divisors<'a>(
    records: impl IntoIterator<Item = (usize, &'a DivisionRecord)>,
    u: &DifferenceMonomial,
) -> Vec<(usize, ExponentVector)> {
    records
        .into_iter()
        .filter_map(|(id, rec)| j_divides(rec.owner(), rec, u).map(|g| (id, g)))
        .collect()
}

/// First J-divisor of `u` found by scanning all records.
pub fn linear_scan<'a>(
    records: impl IntoIterator<Item = (usize, &'a DivisionRecord)>,
    u: &DifferenceMonomial,
) -> Option<(usize, ExponentVector)> {
    records
        .into_iter()
        .find_map(|(id, rec)| j_divides(rec.owner(), rec, u).map(|g| (id, g)))
}

/// Janet-tree lookup, cross-checked against the element's record.
pub fn find_reductor<'a>(
    tree: &JanetTree,
    records: impl Fn(usize) -> Option<&'a DivisionRecord>,
    u: &DifferenceMonomial,
) -> Result<Option<(usize, ExponentVector)>, DivisionError> {
    let Some((id, gamma)) = tree.find(u) else {
        return Ok(None);
    };
    let rec = records(id)
        .ok_or_else(|| DivisionError::Desynchronized(format!("no record for element {id}")))?;
    match j_divides(rec.owner(), rec, u) {
        Some(g) if g == gamma => Ok(Some((id, gamma))),
        _ => Err(DivisionError::Desynchronized(format!(
            "tree offers element {id} ({}) for {u}, its record disagrees",
            rec.owner()
        ))),
    }
}
