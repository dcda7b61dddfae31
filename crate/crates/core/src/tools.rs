//! Verification of completed bases, reduced Gröbner basis extraction and
//! ideal membership.

use std::cmp::Ordering;

use thiserror::Error;

use crate::division::{DivisionKind, DivisionRecord};
use crate::engine::{BasisResult, EngineError, ReductionBasis};
use crate::ring::{DifferenceField, DifferenceRing, ExponentVector, LinearDifferencePolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToolsError {
    #[error("basis does not satisfy the completeness condition: {0}")]
    NotComplete(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A prolongation of a basis element that does not J-reduce to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample<K> {
    /// Index into the verified basis.
    pub element: usize,
    /// The difference power `θ^ϑ` that was applied.
    pub power: ExponentVector,
    pub remainder: LinearDifferencePolynomial<K>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<K> {
    /// `NF_J(ϑ ∘ g, G) = 0` for every element and difference power.
    pub condition4_ok: bool,
    /// No two J-cones overlap.
    pub cone_disjointness_ok: bool,
    /// Every input leading monomial is a shift of some basis leading monomial.
    pub coverage_ok: bool,
    pub counterexample: Option<Counterexample<K>>,
}

impl<K> VerificationReport<K> {
    pub fn all_ok(&self) -> bool {
        self.condition4_ok && self.cone_disjointness_ok && self.coverage_ok
    }
}

/// Checks a completed basis against the inputs it was computed from.
pub fn verify<K: DifferenceField>(
    result: &BasisResult<K>,
    inputs: &[LinearDifferencePolynomial<K>],
) -> Result<VerificationReport<K>, EngineError> {
    verify_basis(&result.ring, &result.basis, result.division, inputs)
}

/// [`verify`] for an arbitrary candidate basis of nonzero polynomials.
/// Reductions use a plain scan of the division records, independent of the
/// Janet tree.
pub fn verify_basis<K: DifferenceField>(
    ring: &DifferenceRing,
    basis: &[LinearDifferencePolynomial<K>],
    kind: DivisionKind,
    inputs: &[LinearDifferencePolynomial<K>],
) -> Result<VerificationReport<K>, EngineError> {
    let reducer = ReductionBasis::from_polynomials(ring, kind, false, basis)?;
    let records: Vec<&DivisionRecord> = reducer.records().map(|(_, r)| r).collect();

    let mut counterexample = None;
    'outer: for (index, (g, rec)) in basis.iter().zip(&records).enumerate() {
        for power in rec.difference_powers() {
            let remainder = reducer.normal_form(&g.shifted(&power))?;
            if !remainder.is_zero() {
                counterexample = Some(Counterexample {
                    element: index,
                    power,
                    remainder,
                });
                break 'outer;
            }
        }
    }

    let cone_disjointness_ok = records.iter().enumerate().all(|(a, ra)| {
        records[a + 1..]
            .iter()
            .all(|rb| !cones_intersect(ra, rb))
    });

    let heads: Vec<_> = basis.iter().filter_map(|g| g.leading_monomial()).collect();
    let coverage_ok = inputs
        .iter()
        .filter_map(|f| f.leading_monomial())
        .all(|u| heads.iter().any(|h| h.divides(u).is_some()));

    Ok(VerificationReport {
        condition4_ok: counterexample.is_none(),
        cone_disjointness_ok,
        coverage_ok,
        counterexample,
    })
}

// Each cone is a product of intervals [u_i, u_i + s_i) (or [u_i, ∞)).
fn cones_intersect(a: &DivisionRecord, b: &DivisionRecord) -> bool {
    let (u, v) = (a.owner(), b.owner());
    if u.indeterminate() != v.indeterminate() {
        return false;
    }
    (0..u.exponent().len()).all(|i| {
        let lo = u.degree_in(i).max(v.degree_in(i));
        let hi_a = a.power(i).map(|s| u.degree_in(i) + s);
        let hi_b = b.power(i).map(|s| v.degree_in(i) + s);
        match (hi_a, hi_b) {
            (None, None) => true,
            (Some(h), None) | (None, Some(h)) => lo < h,
            (Some(x), Some(y)) => lo < x.min(y),
        }
    })
}

/// Reduced Gröbner basis of the ideal of a complete basis: drop elements
/// whose leading monomial is a proper shift of another's, tail-reduce the
/// rest by ordinary Θ-division and make them monic.
pub fn extract_reduced_gb<K: DifferenceField>(
    result: &BasisResult<K>,
) -> Result<Vec<LinearDifferencePolynomial<K>>, ToolsError> {
    let report = verify(result, &[])?;
    if let Some(c) = &report.counterexample {
        return Err(ToolsError::NotComplete(format!(
            "prolongation {} of element {} leaves a nonzero remainder",
            c.power, c.element
        )));
    }
    Ok(interreduce(&result.ring, &result.basis))
}

/// Minimal, fully Θ-interreduced, monic subset of a Gröbner basis.
pub fn interreduce<K: DifferenceField>(
    ring: &DifferenceRing,
    basis: &[LinearDifferencePolynomial<K>],
) -> Vec<LinearDifferencePolynomial<K>> {
    let mut kept: Vec<LinearDifferencePolynomial<K>> = Vec::new();
    for (a, g) in basis.iter().enumerate().filter(|(_, g)| !g.is_zero()) {
        let u = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(b, h)| {
            let Some(v) = h.leading_monomial() else { return false };
            match v.divides(u) {
                Some(mu) if !mu.is_zero() => true,
                // equal heads: keep the first occurrence only
                Some(_) => b < a,
                None => false,
            }
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    let mut reduced: Vec<_> = kept
        .iter()
        .map(|g| {
            let lead = &g.terms()[0];
            let head = ring
                .polynomial([(lead.coefficient.clone(), lead.monomial.clone())])
                .expect("monomial of a valid polynomial");
            ring.add(&head, &theta_reduce(ring, &g.tail(), &kept)).monic()
        })
        .collect();
    reduced.sort_by(|a, b| ring.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}

/// Full reduction by ordinary Θ-division: every monomial that is a shift of
/// some divisor's leading monomial is eliminated.
pub fn theta_reduce<K: DifferenceField>(
    ring: &DifferenceRing,
    p: &LinearDifferencePolynomial<K>,
    divisors: &[LinearDifferencePolynomial<K>],
) -> LinearDifferencePolynomial<K> {
    let mut h = p.clone();
    let mut i = 0;
    while i < h.len() {
        let term = &h.terms()[i];
        let hit = divisors.iter().find_map(|g| {
            g.leading_monomial()
                .and_then(|v| v.divides(&term.monomial))
                .map(|mu| (g, mu))
        });
        match hit {
            None => i += 1,
            Some((g, mu)) => {
                let shifted = g.shifted(&mu);
                let factor = term.coefficient.clone() / shifted.leading_coefficient().unwrap().clone();
                h = ring.add_scaled(&h, &-factor, &shifted);
            }
        }
    }
    h
}

/// Whether `f` lies in the ideal of a complete basis.
pub fn is_member<K: DifferenceField>(
    f: &LinearDifferencePolynomial<K>,
    result: &BasisResult<K>,
) -> Result<bool, EngineError> {
    if f.is_zero() {
        return Ok(true);
    }
    result.ring.check(f)?;
    Ok(result.reducer(true)?.normal_form(f)?.is_zero())
}

/// Subset test on monic polynomial sets.
pub fn is_subset<K: DifferenceField>(
    small: &[LinearDifferencePolynomial<K>],
    large: &[LinearDifferencePolynomial<K>],
) -> bool {
    small.iter().all(|f| large.contains(f))
}

/// Leading-monomial subset test.
pub fn heads_subset<K: DifferenceField>(
    small: &[LinearDifferencePolynomial<K>],
    large: &[LinearDifferencePolynomial<K>],
) -> bool {
    small.iter().all(|f| {
        large
            .iter()
            .any(|g| g.leading_monomial() == f.leading_monomial())
    })
}

/// Tail-normalized monic copies: each tail is fully Θ-reduced modulo the
/// whole set. Elements with equal heads collapse to one.
pub fn tail_normalize<K: DifferenceField>(
    ring: &DifferenceRing,
    basis: &[LinearDifferencePolynomial<K>],
) -> Vec<LinearDifferencePolynomial<K>> {
    let mut out: Vec<LinearDifferencePolynomial<K>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let lead = &g.terms()[0];
            let head = ring
                .polynomial([(lead.coefficient.clone(), lead.monomial.clone())])
                .expect("monomial of a valid polynomial");
            ring.add(&head, &theta_reduce(ring, &g.tail(), basis)).monic()
        })
        .collect();
    out.sort_by(|a, b| ring.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out.dedup_by(|a, b| a.leading_monomial() == b.leading_monomial() && a == b);
    debug_assert!(out
        .windows(2)
        .all(|w| ring.compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
            != Ordering::Less));
    out
}
