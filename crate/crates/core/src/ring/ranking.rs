use std::cmp::Ordering;
use std::fmt;

use super::{DifferenceMonomial, RingContext, RingError};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RankingScheme {
    /// Total degree first, then reverse lexicographic on exponents, then
    /// the indeterminate order (position over term on ties only).
    OrderlyDegRevLex,
    /// Indeterminate first, then pure lexicographic on exponents.
    EliminationLex,
}

impl RankingScheme {
    pub fn name(self) -> &'static str {
        match self {
            RankingScheme::OrderlyDegRevLex => "degrevlex",
            RankingScheme::EliminationLex => "lex",
        }
    }
}

impl fmt::Display for RankingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A ranking on difference monomials.
///
/// `difference_order` lists difference indices from most to least
/// significant (`θ_x ≻ θ_y ≻ …`); `indeterminate_order` does the same for
/// the indeterminates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ranking {
    scheme: RankingScheme,
    difference_order: Vec<usize>,
    indeterminate_order: Vec<usize>,
    // position of each indeterminate in `indeterminate_order`
    indeterminate_rank: Vec<usize>,
}

fn check_permutation(what: &str, perm: &[usize], len: usize) -> Result<(), RingError> {
    if perm.len() != len {
        return Err(RingError::InvalidRanking(format!(
            "{what} order has {} entries, expected {len}",
            perm.len()
        )));
    }
    let mut seen = vec![false; len];
    for &p in perm {
        if p >= len || std::mem::replace(&mut seen[p], true) {
            return Err(RingError::InvalidRanking(format!(
                "{what} order is not a permutation"
            )));
        }
    }
    Ok(())
}

impl Ranking {
    pub fn new(
        scheme: RankingScheme,
        difference_order: Vec<usize>,
        indeterminate_order: Vec<usize>,
        ctx: &RingContext,
    ) -> Result<Self, RingError> {
        check_permutation("difference", &difference_order, ctx.n())?;
        check_permutation("indeterminate", &indeterminate_order, ctx.m())?;
        let mut indeterminate_rank = vec![0; ctx.m()];
        for (pos, &k) in indeterminate_order.iter().enumerate() {
            indeterminate_rank[k] = pos;
        }
        Ok(Self {
            scheme,
            difference_order,
            indeterminate_order,
            indeterminate_rank,
        })
    }

    /// Declaration order for both differences and indeterminates.
    pub fn standard(scheme: RankingScheme, ctx: &RingContext) -> Self {
        Self::new(scheme, (0..ctx.n()).collect(), (0..ctx.m()).collect(), ctx)
            .expect("identity permutations are valid")
    }

    pub fn degrevlex(ctx: &RingContext) -> Self {
        Self::standard(RankingScheme::OrderlyDegRevLex, ctx)
    }

    pub fn lex(ctx: &RingContext) -> Self {
        Self::standard(RankingScheme::EliminationLex, ctx)
    }

    pub fn scheme(&self) -> RankingScheme {
        self.scheme
    }

    pub fn difference_order(&self) -> &[usize] {
        &self.difference_order
    }

    pub fn indeterminate_order(&self) -> &[usize] {
        &self.indeterminate_order
    }

    pub fn n(&self) -> usize {
        self.difference_order.len()
    }

    pub fn m(&self) -> usize {
        self.indeterminate_order.len()
    }

    /// Compares two monomials of the same context.
    pub fn compare(&self, u: &DifferenceMonomial, v: &DifferenceMonomial) -> Ordering {
        debug_assert_eq!(u.exponent().len(), self.n());
        debug_assert_eq!(v.exponent().len(), self.n());
        // an indeterminate earlier in the order ranks higher
        let by_indeterminate = || {
            self.indeterminate_rank[v.indeterminate()]
                .cmp(&self.indeterminate_rank[u.indeterminate()])
        };
        match self.scheme {
            RankingScheme::OrderlyDegRevLex => u
                .total_degree()
                .cmp(&v.total_degree())
                .then_with(|| {
                    for &i in self.difference_order.iter().rev() {
                        match v.degree_in(i).cmp(&u.degree_in(i)) {
                            Ordering::Equal => continue,
                            other => return other,
                        }
                    }
                    Ordering::Equal
                })
                .then_with(by_indeterminate),
            RankingScheme::EliminationLex => by_indeterminate().then_with(|| {
                for &i in &self.difference_order {
                    match u.degree_in(i).cmp(&v.degree_in(i)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// [`compare`](Self::compare) with the context checked first.
    pub fn try_compare(
        &self,
        u: &DifferenceMonomial,
        v: &DifferenceMonomial,
    ) -> Result<Ordering, RingError> {
        self.check_monomial(u)?;
        self.check_monomial(v)?;
        Ok(self.compare(u, v))
    }

    pub fn check_monomial(&self, u: &DifferenceMonomial) -> Result<(), RingError> {
        if u.exponent().len() != self.n() {
            return Err(RingError::ContextMismatch(format!(
                "monomial {u} has {} exponents, ring has {} differences",
                u.exponent().len(),
                self.n()
            )));
        }
        if u.indeterminate() >= self.m() {
            return Err(RingError::ContextMismatch(format!(
                "monomial {u} names indeterminate {}, ring has {}",
                u.indeterminate() + 1,
                self.m()
            )));
        }
        Ok(())
    }
}
