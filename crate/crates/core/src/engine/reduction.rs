use crate::division::{self, DivisionKind, DivisionRecord, JanetTree};
use crate::ring::{DifferenceField, DifferenceRing, ExponentVector, LinearDifferencePolynomial};

use super::EngineError;

/// A set of nonzero polynomials together with the division records of their
/// leading monomials and, optionally, a Janet tree over them.
///
/// Elements are addressed by ids that stay stable across removals. Records
/// are recomputed from scratch whenever the set changes.
#[derive(Clone, Debug)]
pub struct ReductionBasis<K> {
    ring: DifferenceRing,
    kind: DivisionKind,
    elements: Vec<Option<LinearDifferencePolynomial<K>>>,
    // each element times its content scale, used as the reductor
    primitive: Vec<Option<LinearDifferencePolynomial<K>>>,
    records: Vec<Option<DivisionRecord>>,
    tree: Option<JanetTree>,
}

impl<K: DifferenceField> ReductionBasis<K> {
    pub fn new(ring: &DifferenceRing, kind: DivisionKind, use_tree: bool) -> Self {
        Self {
            ring: ring.clone(),
            kind,
            elements: Vec::new(),
            primitive: Vec::new(),
            records: Vec::new(),
            tree: use_tree
                .then(|| JanetTree::new(ring.ranking().difference_order().to_vec(), kind)),
        }
    }

    pub fn from_polynomials<'a>(
        ring: &DifferenceRing,
        kind: DivisionKind,
        use_tree: bool,
        polys: impl IntoIterator<Item = &'a LinearDifferencePolynomial<K>>,
    ) -> Result<Self, EngineError>
    where
        K: 'a,
    {
        let mut basis = Self::new(ring, kind, use_tree);
        for p in polys {
            basis.push(p.clone())?;
        }
        basis.refresh()?;
        Ok(basis)
    }

    pub fn ring(&self) -> &DifferenceRing {
        &self.ring
    }

    pub fn kind(&self) -> DivisionKind {
        self.kind
    }

    pub fn uses_tree(&self) -> bool {
        self.tree.is_some()
    }

    pub fn len(&self) -> usize {
        self.elements.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, id: usize) -> Option<&LinearDifferencePolynomial<K>> {
        self.elements.get(id).and_then(Option::as_ref)
    }

    pub fn record(&self, id: usize) -> Option<&DivisionRecord> {
        self.records.get(id).and_then(Option::as_ref)
    }

    /// Live `(id, element)` pairs in id order.
    pub fn elements(&self) -> impl Iterator<Item = (usize, &LinearDifferencePolynomial<K>)> {
        self.elements
            .iter()
            .enumerate()
            .filter_map(|(id, e)| e.as_ref().map(|e| (id, e)))
    }

    /// Live `(id, record)` pairs in id order.
    pub fn records(&self) -> impl Iterator<Item = (usize, &DivisionRecord)> {
        self.records
            .iter()
            .enumerate()
            .filter_map(|(id, r)| r.as_ref().map(|r| (id, r)))
    }

    // adds without refreshing records
    fn push(&mut self, p: LinearDifferencePolynomial<K>) -> Result<usize, EngineError> {
        self.ring.check(&p)?;
        let lm = self.ring.leading_term(&p)?.1.clone();
        let id = self.elements.len();
        if let Some(tree) = &mut self.tree {
            tree.insert(lm, id)?;
        }
        self.primitive.push(Some(primitive(&p)));
        self.elements.push(Some(p));
        self.records.push(None);
        Ok(id)
    }

    /// Adds a nonzero polynomial and returns its id.
    pub fn insert(&mut self, p: LinearDifferencePolynomial<K>) -> Result<usize, EngineError> {
        let id = self.push(p)?;
        self.refresh()?;
        Ok(id)
    }

    pub fn remove(&mut self, id: usize) -> Result<LinearDifferencePolynomial<K>, EngineError> {
        let p = self
            .elements
            .get_mut(id)
            .and_then(Option::take)
            .ok_or_else(|| {
                division::DivisionError::Desynchronized(format!("no element with id {id}"))
            })?;
        self.records[id] = None;
        self.primitive[id] = None;
        if let Some(tree) = &mut self.tree {
            let lm = p.leading_monomial().expect("stored elements are nonzero");
            let removed = tree.remove(lm)?;
            debug_assert_eq!(removed, id);
        }
        self.refresh()?;
        Ok(p)
    }

    fn refresh(&mut self) -> Result<(), EngineError> {
        let ids: Vec<usize> = self.elements().map(|(id, _)| id).collect();
        let heads: Vec<_> = ids
            .iter()
            .map(|&id| self.elements[id].as_ref().unwrap().terms()[0].monomial.clone())
            .collect();
        let records = division::classify(&heads, self.ring.ranking().difference_order(), self.kind)?;
        for (id, rec) in ids.into_iter().zip(records) {
            self.records[id] = Some(rec);
        }
        Ok(())
    }

    /// The element whose J-cone contains `u`, with the shift reaching `u`.
    pub fn find_reductor(
        &self,
        u: &crate::ring::DifferenceMonomial,
    ) -> Result<Option<(usize, ExponentVector)>, EngineError> {
        Ok(match &self.tree {
            Some(tree) => division::find_reductor(tree, |id| self.record(id), u)?,
            None => division::linear_scan(self.records(), u),
        })
    }

    /// J-normal form of `p`; see [`normal_form_counted`](Self::normal_form_counted).
    pub fn normal_form(
        &self,
        p: &LinearDifferencePolynomial<K>,
    ) -> Result<LinearDifferencePolynomial<K>, EngineError> {
        self.normal_form_counted(p).map(|(h, _)| h)
    }

    /// J-normal form of `p` and the number of elementary reductions.
    ///
    /// Repeatedly eliminates the greatest J-reducible monomial `u` with
    /// coefficient `b` through `h - b / shift(γ)(lc(g)) · θ^γ ∘ g`, so the
    /// result differs from `p` by an element of the ideal.
    ///
    /// The work is done fraction-free on scalar multiples: `h` is replaced
    /// by `a · h - b · θ^γ ∘ g'` with `g'` a primitive multiple of `g` and
    /// `a` its shifted leading coefficient. The content of `h` is removed
    /// whenever its coefficients have doubled in size, and the accumulated
    /// scalar is divided out once at the end.
    pub fn normal_form_counted(
        &self,
        p: &LinearDifferencePolynomial<K>,
    ) -> Result<(LinearDifferencePolynomial<K>, usize), EngineError> {
        let mut scale = K::content_scale(p.terms().iter().map(|t| &t.coefficient));
        let mut h = p.scale(&scale);
        let mut reductions = 0;
        let mut cleaned = max_size(&h);
        // terms before `i` are J-irreducible; reductions never touch them
        let mut i = 0;
        while i < h.len() {
            let term = &h.terms()[i];
            match self.find_reductor(&term.monomial)? {
                None => i += 1,
                Some((id, gamma)) => {
                    let g = self.primitive[id].as_ref().expect("reductor ids are live");
                    let shifted = g.shifted(&gamma);
                    let a = shifted.leading_coefficient().expect("nonzero").clone();
                    let b = -term.coefficient.clone();
                    h = self.ring.combine(&a, &h, &b, &shifted);
                    scale = K::product(&scale, &a);
                    if max_size(&h) > 2 * cleaned + 64 {
                        let c = K::content_scale(h.terms().iter().map(|t| &t.coefficient));
                        if !c.is_one() {
                            h = h.scale_with(&c, K::product);
                            scale = K::product(&scale, &c);
                        }
                        cleaned = max_size(&h);
                    }
                    reductions += 1;
                }
            }
        }
        if !scale.is_one() {
            h = h.scale(&scale.inv());
        }
        Ok((h, reductions))
    }

    /// Replaces every tail by its J-normal form and normalizes to monic.
    /// When the basis is complete this is the canonical representative.
    pub fn normalize_tails(&mut self) -> Result<(), EngineError> {
        let ids: Vec<usize> = self.elements().map(|(id, _)| id).collect();
        let mut fresh = Vec::with_capacity(ids.len());
        for &id in &ids {
            let g = self.get(id).unwrap();
            let head = self.ring.polynomial([(
                g.terms()[0].coefficient.clone(),
                g.terms()[0].monomial.clone(),
            )])?;
            let tail = self.normal_form(&g.tail())?;
            fresh.push(self.ring.add(&head, &tail).monic());
        }
        for (id, g) in ids.into_iter().zip(fresh) {
            self.primitive[id] = Some(primitive(&g));
            self.elements[id] = Some(g);
        }
        Ok(())
    }
}

fn max_size<K: DifferenceField>(p: &LinearDifferencePolynomial<K>) -> u64 {
    p.terms().iter().map(|t| t.coefficient.size()).max().unwrap_or(0)
}

fn primitive<K: DifferenceField>(p: &LinearDifferencePolynomial<K>) -> LinearDifferencePolynomial<K> {
    p.scale(&K::content_scale(p.terms().iter().map(|t| &t.coefficient)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rational, DifferenceMonomial, Ranking, Rational, RingContext};

    fn ring1() -> DifferenceRing {
        let ctx = RingContext::generic(1, 1).unwrap();
        let r = Ranking::degrevlex(&ctx);
        DifferenceRing::new(ctx, r).unwrap()
    }

    fn poly(ring: &DifferenceRing, terms: &[(i64, u32)]) -> LinearDifferencePolynomial<Rational> {
        ring.polynomial(
            terms
                .iter()
                .map(|&(c, e)| (rational(c, 1), DifferenceMonomial::new(0, vec![e]))),
        )
        .unwrap()
    }

    #[test]
    fn empty_basis_leaves_input() {
        let ring = ring1();
        let b: ReductionBasis<Rational> = ReductionBasis::new(&ring, DivisionKind::JanetLike, true);
        let p = poly(&ring, &[(2, 3), (1, 0)]);
        assert_eq!(b.normal_form(&p).unwrap(), p);
    }

    #[test]
    fn element_reduces_to_zero() {
        let ring = ring1();
        let g = poly(&ring, &[(2, 1), (-1, 0)]);
        let b = ReductionBasis::from_polynomials(&ring, DivisionKind::JanetLike, true, [&g]).unwrap();
        assert!(b.normal_form(&g).unwrap().is_zero());
        assert!(b.normal_form(&LinearDifferencePolynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn telescoping_shift() {
        // θ∘y - y reduces θ^5∘y - y to zero in five steps
        let ring = ring1();
        let g = poly(&ring, &[(1, 1), (-1, 0)]);
        let b = ReductionBasis::from_polynomials(&ring, DivisionKind::JanetLike, false, [&g]).unwrap();
        let (h, steps) = b.normal_form_counted(&poly(&ring, &[(1, 5), (-1, 0)])).unwrap();
        assert!(h.is_zero());
        assert_eq!(steps, 5);
    }

    #[test]
    fn remove_keeps_tree_in_sync() {
        let ring = ring1();
        let mut b: ReductionBasis<Rational> =
            ReductionBasis::new(&ring, DivisionKind::JanetLike, true);
        let a = b.insert(poly(&ring, &[(1, 2)])).unwrap();
        let c = b.insert(poly(&ring, &[(1, 1)])).unwrap();
        assert_eq!(b.record(c).unwrap().powers(), &[(0, 1)]);
        b.remove(a).unwrap();
        assert!(b.record(c).unwrap().powers().is_empty());
        let (id, gamma) = b
            .find_reductor(&DifferenceMonomial::new(0, vec![4]))
            .unwrap()
            .unwrap();
        assert_eq!((id, gamma.get(0)), (c, 3));
        assert!(b.remove(a).is_err());
    }
}
