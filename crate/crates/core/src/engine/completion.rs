use std::cmp::Ordering;
use std::collections::HashSet;

use crate::division::{DivisionKind, DivisionRecord};
use crate::ring::{DifferenceField, DifferenceRing, ExponentVector, LinearDifferencePolynomial};

use super::{EngineError, ReductionBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionConfig {
    pub division: DivisionKind,
    /// Janet-tree reductor search; linear scan otherwise.
    pub use_tree: bool,
    /// Maximum number of normal forms computed before giving up.
    pub max_iterations: usize,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        Self {
            division: DivisionKind::JanetLike,
            use_tree: true,
            max_iterations: 200_000,
        }
    }
}

impl CompletionConfig {
    pub fn with_division(division: DivisionKind) -> Self {
        Self {
            division,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Elements popped from the queue and reduced.
    pub normal_forms: usize,
    /// Elementary J-reductions across all normal forms.
    pub reductions: usize,
    /// Prolongations enqueued.
    pub prolongations: usize,
    /// Prolongations not enqueued because an identical one was pending.
    pub prolongations_skipped: usize,
    /// Nonzero normal forms added to the basis.
    pub insertions: usize,
    /// Basis elements moved back to the queue.
    pub displacements: usize,
    pub queue_peak: usize,
}

/// Output of [`complete`]: a monic basis sorted descending by leading
/// monomial.
#[derive(Clone, Debug)]
pub struct BasisResult<K> {
    pub ring: DifferenceRing,
    pub basis: Vec<LinearDifferencePolynomial<K>>,
    pub division: DivisionKind,
    pub stats: CompletionStats,
}

impl<K: DifferenceField> BasisResult<K> {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// A reduction structure over the basis for normal forms and membership.
    pub fn reducer(&self, use_tree: bool) -> Result<ReductionBasis<K>, EngineError> {
        ReductionBasis::from_polynomials(&self.ring, self.division, use_tree, &self.basis)
    }

    /// Division records aligned with `basis`.
    pub fn records(&self) -> Result<Vec<DivisionRecord>, EngineError> {
        let heads: Vec<_> = self
            .basis
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect();
        Ok(crate::division::classify(
            &heads,
            self.ring.ranking().difference_order(),
            self.division,
        )?)
    }
}

struct Pending<K> {
    poly: LinearDifferencePolynomial<K>,
    seq: u64,
    // (source element id, difference index, power) for prolongations
    origin: Option<(usize, usize, u32)>,
}

struct Queue<K> {
    items: Vec<Pending<K>>,
    next_seq: u64,
    pending_prolongations: HashSet<(usize, usize, u32)>,
}

impl<K: DifferenceField> Queue<K> {
    fn new() -> Self {
        Self {
            items: Vec::new(),
            next_seq: 0,
            pending_prolongations: HashSet::new(),
        }
    }

    fn len(&self) -> usize {
        self.items.len()
    }

    fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn push(&mut self, poly: LinearDifferencePolynomial<K>, origin: Option<(usize, usize, u32)>) -> bool {
        if let Some(key) = origin {
            if !self.pending_prolongations.insert(key) {
                return false;
            }
        }
        self.items.push(Pending {
            poly,
            seq: self.next_seq,
            origin,
        });
        self.next_seq += 1;
        true
    }

    /// Removes the element with the lowest leading monomial; ties go to
    /// the earliest insertion.
    fn pop_lowest(&mut self, ring: &DifferenceRing) -> Option<LinearDifferencePolynomial<K>> {
        let idx = (0..self.items.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.items[a], &self.items[b]);
            ring.compare(
                pa.poly.leading_monomial().unwrap(),
                pb.poly.leading_monomial().unwrap(),
            )
            .then(pa.seq.cmp(&pb.seq))
        })?;
        let item = self.items.swap_remove(idx);
        if let Some(key) = item.origin {
            self.pending_prolongations.remove(&key);
        }
        Some(item.poly)
    }

    fn polynomials(&self) -> Vec<LinearDifferencePolynomial<K>> {
        self.items.iter().map(|p| p.poly.clone()).collect()
    }
}

/// Completes `generators` to a minimal basis of the difference ideal they
/// generate, for the division in `config`.
///
/// Zero generators are ignored. The returned basis is monic, its tails are
/// in J-normal form, and it is sorted descending by leading monomial; it
/// depends only on the generated ideal and the ranking.
pub fn complete<K: DifferenceField>(
    ring: &DifferenceRing,
    generators: &[LinearDifferencePolynomial<K>],
    config: &CompletionConfig,
) -> Result<BasisResult<K>, EngineError> {
    complete_observed(ring, generators, config, |_, _| {})
}

/// [`complete`], calling `observe(G, Q)` at the top of every outer round.
pub fn complete_observed<K: DifferenceField>(
    ring: &DifferenceRing,
    generators: &[LinearDifferencePolynomial<K>],
    config: &CompletionConfig,
    mut observe: impl FnMut(&[LinearDifferencePolynomial<K>], &[LinearDifferencePolynomial<K>]),
) -> Result<BasisResult<K>, EngineError> {
    let mut stats = CompletionStats::default();
    let mut queue = Queue::new();
    for f in generators.iter().filter(|f| !f.is_zero()) {
        ring.check(f)?;
        queue.push(f.monic(), None);
    }
    let first = queue.pop_lowest(ring).ok_or(EngineError::ZeroIdeal)?;
    let mut basis = ReductionBasis::new(ring, config.division, config.use_tree);
    basis.insert(first)?;
    stats.insertions += 1;
    stats.queue_peak = queue.len();

    while !queue.is_empty() {
        observe(
            &basis.elements().map(|(_, g)| g.clone()).collect::<Vec<_>>(),
            &queue.polynomials(),
        );

        let mut h = LinearDifferencePolynomial::zero();
        while h.is_zero() {
            let Some(p) = queue.pop_lowest(ring) else { break };
            if stats.normal_forms >= config.max_iterations {
                return Err(EngineError::ResourceCap {
                    limit: config.max_iterations,
                    basis_len: basis.len(),
                    queue_len: queue.len() + 1,
                });
            }
            let (nf, steps) = basis.normal_form_counted(&p)?;
            stats.normal_forms += 1;
            stats.reductions += steps;
            h = nf;
        }
        if h.is_zero() {
            break;
        }

        let h = h.monic();
        let lm_h = h.leading_monomial().unwrap().clone();
        // elements whose leading monomial is a proper shift of lm(h)
        let displaced: Vec<usize> = basis
            .elements()
            .filter(|(_, g)| {
                lm_h.divides(g.leading_monomial().unwrap())
                    .is_some_and(|mu| !mu.is_zero())
            })
            .map(|(id, _)| id)
            .collect();
        for id in displaced {
            let g = basis.remove(id)?;
            queue.push(g, None);
            stats.displacements += 1;
        }
        basis.insert(h)?;
        stats.insertions += 1;

        let n = ring.n();
        let prolongations: Vec<(usize, usize, u32)> = basis
            .records()
            .flat_map(|(id, rec)| rec.powers().iter().map(move |&(i, s)| (id, i, s)))
            .collect();
        for (id, i, s) in prolongations {
            let g = basis.get(id).unwrap();
            let prolonged = g.shifted(&ExponentVector::pure_power(n, i, s));
            if queue.push(prolonged, Some((id, i, s))) {
                stats.prolongations += 1;
            } else {
                stats.prolongations_skipped += 1;
            }
        }
        stats.queue_peak = stats.queue_peak.max(queue.len());
    }

    basis.normalize_tails()?;
    let mut out: Vec<_> = basis.elements().map(|(_, g)| g.clone()).collect();
    out.sort_by(|a, b| {
        ring.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    debug_assert!(out
        .windows(2)
        .all(|w| ring.compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
            == Ordering::Greater));
    Ok(BasisResult {
        ring: ring.clone(),
        basis: out,
        division: config.division,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rational, DifferenceMonomial, Ranking, Rational, RingContext};

    fn ring(n: usize) -> DifferenceRing {
        let ctx = RingContext::generic(n, 1).unwrap();
        let r = Ranking::degrevlex(&ctx);
        DifferenceRing::new(ctx, r).unwrap()
    }

    fn poly(ring: &DifferenceRing, terms: &[(i64, &[u32])]) -> LinearDifferencePolynomial<Rational> {
        ring.polynomial(
            terms
                .iter()
                .map(|&(c, e)| (rational(c, 1), DifferenceMonomial::new(0, e.to_vec()))),
        )
        .unwrap()
    }

    #[test]
    fn singleton_becomes_monic() {
        let r = ring(2);
        let f = poly(&r, &[(3, &[1, 1]), (2, &[0, 1])]);
        let out = complete(&r, std::slice::from_ref(&f), &CompletionConfig::default()).unwrap();
        assert_eq!(out.basis, vec![f.monic()]);
    }

    #[test]
    fn zero_input_rejected() {
        let r = ring(1);
        let z = LinearDifferencePolynomial::<Rational>::zero();
        assert_eq!(
            complete(&r, &[z.clone(), z], &CompletionConfig::default()).unwrap_err(),
            EngineError::ZeroIdeal
        );
        assert_eq!(
            complete::<Rational>(&r, &[], &CompletionConfig::default()).unwrap_err(),
            EngineError::ZeroIdeal
        );
    }

    #[test]
    fn zeros_are_dropped() {
        let r = ring(1);
        let f = poly(&r, &[(1, &[1]), (-1, &[0])]);
        let out = complete(
            &r,
            &[LinearDifferencePolynomial::zero(), f.clone()],
            &CompletionConfig::default(),
        )
        .unwrap();
        assert_eq!(out.basis, vec![f]);
    }

    #[test]
    fn redundant_generator_is_discarded() {
        let r = ring(1);
        let f = poly(&r, &[(1, &[1]), (-1, &[0])]);
        let g = poly(&r, &[(1, &[3]), (-1, &[0])]);
        let out = complete(&r, &[g, f.clone()], &CompletionConfig::default()).unwrap();
        assert_eq!(out.basis, vec![f]);
    }

    #[test]
    fn displacement_keeps_basis_minimal() {
        // θ_2^2∘y and θ_1θ_2∘y - y: the prolongation θ_1 ∘ θ_2^2∘y yields
        // θ_2∘y, which displaces both, and finally y itself.
        let r = ring(2);
        let a = poly(&r, &[(1, &[0, 2])]);
        let b = poly(&r, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let out = complete(&r, &[a, b], &CompletionConfig::default()).unwrap();
        assert_eq!(out.basis, vec![poly(&r, &[(1, &[0, 0])])]);
        assert!(out.stats.displacements >= 1);
    }

    #[test]
    fn iteration_cap() {
        let r = ring(2);
        let f = poly(&r, &[(1, &[3, 0]), (-1, &[0, 1])]);
        let g = poly(&r, &[(1, &[1, 2]), (-1, &[0, 0])]);
        let config = CompletionConfig {
            max_iterations: 1,
            ..CompletionConfig::default()
        };
        assert!(matches!(
            complete(&r, &[f, g], &config),
            Err(EngineError::ResourceCap { limit: 1, .. })
        ));
    }
}
