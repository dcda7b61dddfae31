use std::cmp::Ordering;

use super::{
    DifferenceField, DifferenceMonomial, ExponentVector, Ranking, Rational, RingContext, RingError,
};

/// One `coefficient · monomial` summand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term<K> {
    pub coefficient: K,
    pub monomial: DifferenceMonomial,
}

/// A linear difference polynomial `Σ a_μk θ^μ ∘ y^k`.
///
/// Terms are sorted strictly descending by the ranking of the
/// [`DifferenceRing`] that built the polynomial and carry no zero
/// coefficients, so two polynomials built under the same ranking are equal
/// exactly when their term lists are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearDifferencePolynomial<K = Rational> {
    terms: Vec<Term<K>>,
}

impl<K: DifferenceField> Default for LinearDifferencePolynomial<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: DifferenceField> LinearDifferencePolynomial<K> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending ranking order.
    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&DifferenceMonomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coefficient(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.coefficient)
    }

    /// Everything except the leading term.
    pub fn tail(&self) -> Self {
        Self {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &DifferenceMonomial> {
        self.terms.iter().map(|t| &t.monomial)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient.clone() * c.clone(),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-K::one())
    }

    /// Divides by the leading coefficient.
    /// Scales every coefficient through `mul(c, coefficient)`.
    pub fn scale_with(&self, c: &K, mul: impl Fn(&K, &K) -> K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: mul(c, &t.coefficient),
                    monomial: t.monomial.clone(),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// `θ^γ ∘ self`. Shifting preserves the term order for every ranking,
    /// so no re-sorting happens.
    pub fn shifted(&self, by: &ExponentVector) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient.shift(by),
                    monomial: t.monomial.shifted(by),
                })
                .collect(),
        }
    }
}

/// Context plus ranking; performs every polynomial operation whose result
/// depends on the term order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferenceRing {
    context: RingContext,
    ranking: Ranking,
}

impl DifferenceRing {
    pub fn new(context: RingContext, ranking: Ranking) -> Result<Self, RingError> {
        if ranking.n() != context.n() || ranking.m() != context.m() {
            return Err(RingError::ContextMismatch(format!(
                "ranking is for {} differences and {} indeterminates, ring has {} and {}",
                ranking.n(),
                ranking.m(),
                context.n(),
                context.m()
            )));
        }
        Ok(Self { context, ranking })
    }

    pub fn context(&self) -> &RingContext {
        &self.context
    }

    pub fn ranking(&self) -> &Ranking {
        &self.ranking
    }

    /// Same context, different ranking.
    pub fn with_ranking(&self, ranking: Ranking) -> Result<Self, RingError> {
        Self::new(self.context.clone(), ranking)
    }

    pub fn n(&self) -> usize {
        self.context.n()
    }

    pub fn m(&self) -> usize {
        self.context.m()
    }

    pub fn compare(&self, u: &DifferenceMonomial, v: &DifferenceMonomial) -> Ordering {
        self.ranking.compare(u, v)
    }

    pub fn monomial(
        &self,
        indeterminate: usize,
        exponent: Vec<u32>,
    ) -> Result<DifferenceMonomial, RingError> {
        let u = DifferenceMonomial::new(indeterminate, exponent);
        self.ranking.check_monomial(&u)?;
        Ok(u)
    }

    /// Builds a polynomial from arbitrary terms: validates them against the
    /// context, combines duplicates and drops zeros.
    pub fn polynomial<K: DifferenceField>(
        &self,
        terms: impl IntoIterator<Item = (K, DifferenceMonomial)>,
    ) -> Result<LinearDifferencePolynomial<K>, RingError> {
        let mut raw: Vec<Term<K>> = Vec::new();
        for (coefficient, monomial) in terms {
            self.ranking.check_monomial(&monomial)?;
            raw.push(Term {
                coefficient,
                monomial,
            });
        }
        raw.sort_by(|a, b| self.compare(&b.monomial, &a.monomial));
        let mut terms: Vec<Term<K>> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coefficient = last.coefficient.clone() + t.coefficient;
                }
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coefficient.is_zero());
        Ok(LinearDifferencePolynomial { terms })
    }

    /// `c · u`
    pub fn term<K: DifferenceField>(
        &self,
        c: K,
        u: DifferenceMonomial,
    ) -> Result<LinearDifferencePolynomial<K>, RingError> {
        self.polynomial([(c, u)])
    }

    /// Checks that every monomial belongs to this ring and that the terms
    /// are in this ring's order.
    pub fn check<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
    ) -> Result<(), RingError> {
        for t in &f.terms {
            self.ranking.check_monomial(&t.monomial)?;
            if t.coefficient.is_zero() {
                return Err(RingError::ContextMismatch("stored zero coefficient".into()));
            }
        }
        if f
            .terms
            .windows(2)
            .any(|w| self.compare(&w[0].monomial, &w[1].monomial) != Ordering::Greater)
        {
            return Err(RingError::ContextMismatch(
                "terms are not sorted by this ring's ranking".into(),
            ));
        }
        Ok(())
    }

    /// Re-sorts a polynomial built under a different ranking.
    pub fn reorder<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| self.compare(&b.monomial, &a.monomial));
        LinearDifferencePolynomial { terms }
    }

    /// `(lc, lm)`
    pub fn leading_term<'a, K: DifferenceField>(
        &self,
        f: &'a LinearDifferencePolynomial<K>,
    ) -> Result<(&'a K, &'a DifferenceMonomial), RingError> {
        f.leading_term()
            .map(|t| (&t.coefficient, &t.monomial))
            .ok_or(RingError::ZeroPolynomial)
    }

    pub fn add<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
        g: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        self.add_scaled(f, &K::one(), g)
    }

    pub fn sub<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
        g: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        self.add_scaled(f, &-K::one(), g)
    }

    pub fn scale<K: DifferenceField>(
        &self,
        c: &K,
        f: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        f.scale(c)
    }

    /// `θ^γ ∘ f`
    pub fn apply_shift<K: DifferenceField>(
        &self,
        by: &ExponentVector,
        f: &LinearDifferencePolynomial<K>,
    ) -> Result<LinearDifferencePolynomial<K>, RingError> {
        if by.len() != self.n() {
            return Err(RingError::ContextMismatch(format!(
                "shift {by} has {} components, ring has {} differences",
                by.len(),
                self.n()
            )));
        }
        Ok(f.shifted(by))
    }

    /// `a · f + b · g`, merged in one pass.
    pub fn combine<K: DifferenceField>(
        &self,
        a: &K,
        f: &LinearDifferencePolynomial<K>,
        b: &K,
        g: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        let mut terms = Vec::with_capacity(f.len() + g.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g.terms.iter().peekable();
        let mut push = |coefficient: K, monomial: &DifferenceMonomial| {
            if !coefficient.is_zero() {
                terms.push(Term {
                    coefficient,
                    monomial: monomial.clone(),
                });
            }
        };
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.compare(&x.monomial, &y.monomial),
            };
            match ord {
                Ordering::Greater => {
                    let x = fi.next().unwrap();
                    push(K::product(a, &x.coefficient), &x.monomial);
                }
                Ordering::Less => {
                    let y = gi.next().unwrap();
                    push(K::product(b, &y.coefficient), &y.monomial);
                }
                Ordering::Equal => {
                    let x = fi.next().unwrap();
                    let y = gi.next().unwrap();
                    push(
                        K::linear_combination(a, &x.coefficient, b, &y.coefficient),
                        &x.monomial,
                    );
                }
            }
        }
        LinearDifferencePolynomial { terms }
    }

    /// `f + c · g`, merging the two sorted term lists.
    pub fn add_scaled<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
        c: &K,
        g: &LinearDifferencePolynomial<K>,
    ) -> LinearDifferencePolynomial<K> {
        if c.is_zero() || g.is_zero() {
            return f.clone();
        }
        let mut terms = Vec::with_capacity(f.len() + g.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g.terms.iter().peekable();
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => self.compare(&a.monomial, &b.monomial),
            };
            match ord {
                Ordering::Greater => terms.push(fi.next().unwrap().clone()),
                Ordering::Less => {
                    let b = gi.next().unwrap();
                    terms.push(Term {
                        coefficient: c.clone() * b.coefficient.clone(),
                        monomial: b.monomial.clone(),
                    });
                }
                Ordering::Equal => {
                    let a = fi.next().unwrap();
                    let b = gi.next().unwrap();
                    let sum = a.coefficient.clone() + c.clone() * b.coefficient.clone();
                    if !sum.is_zero() {
                        terms.push(Term {
                            coefficient: sum,
                            monomial: a.monomial.clone(),
                        });
                    }
                }
            }
        }
        LinearDifferencePolynomial { terms }
    }

    /// Coefficient of `u` in `f` (zero when absent).
    pub fn coefficient<K: DifferenceField>(
        &self,
        f: &LinearDifferencePolynomial<K>,
        u: &DifferenceMonomial,
    ) -> K {
        f.terms
            .binary_search_by(|t| self.compare(u, &t.monomial))
            .map(|i| f.terms[i].coefficient.clone())
            .unwrap_or_else(|_| K::zero())
    }
}
