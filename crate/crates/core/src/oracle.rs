//! Reference Gröbner bases through the free-module translation.
//!
//! Over a field of constants, the linear part of a difference ideal is the
//! `Q[t_1, …, t_n]`-submodule of `Q[t]^m` spanned by its generators under
//! `θ^μ ∘ y^k ↦ t^μ e_k`. This module runs a deliberately naive Buchberger
//! algorithm on that submodule. It has its own term orders and storage and
//! shares nothing with the engine except rational arithmetic.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::ring::{
    DifferenceMonomial, DifferenceRing, LinearDifferencePolynomial, Ranking, RankingScheme,
    Rational, RingError,
};

/// `t^exponents e_component`
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ModuleMonomial {
    pub component: usize,
    pub exponents: Vec<u32>,
}

impl ModuleMonomial {
    fn divides(&self, other: &Self) -> bool {
        self.component == other.component
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    fn times(&self, t: &[u32]) -> Self {
        Self {
            component: self.component,
            exponents: self.exponents.iter().zip(t).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A vector of `m` polynomials in `t_1..t_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleElement {
    pub components: Vec<BTreeMap<Vec<u32>, Rational>>,
}

impl ModuleElement {
    pub fn zero(m: usize) -> Self {
        Self {
            components: vec![BTreeMap::new(); m],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(BTreeMap::is_empty)
    }

    fn terms(&self) -> impl Iterator<Item = (ModuleMonomial, &Rational)> {
        self.components.iter().enumerate().flat_map(|(k, c)| {
            c.iter().map(move |(e, a)| {
                (
                    ModuleMonomial {
                        component: k,
                        exponents: e.clone(),
                    },
                    a,
                )
            })
        })
    }

    fn add_term(&mut self, u: ModuleMonomial, c: Rational) {
        match self.components[u.component].entry(u.exponents) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    /// `self + c · t^shift · other`
    fn axpy(&mut self, c: &Rational, shift: &[u32], other: &ModuleElement) {
        for (u, a) in other.terms() {
            self.add_term(u.times(shift), c * a);
        }
    }

    fn scaled(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.components.len());
        out.axpy(c, &vec![0; self.nvars().unwrap_or(0)], self);
        out
    }

    fn nvars(&self) -> Option<usize> {
        self.terms().next().map(|(u, _)| u.exponents.len())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleOrderKind {
    /// Graded reverse lexicographic on `t`, ties by component.
    DegRevLexThenPosition,
    /// Component first, then lexicographic on `t`.
    PositionThenLex,
}

/// A term order on `Q[t]^m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleOrder {
    pub kind: ModuleOrderKind,
    /// Variables from most to least significant.
    pub variables: Vec<usize>,
    /// Components from most to least significant.
    pub components: Vec<usize>,
}

impl ModuleOrder {
    /// The module order corresponding to a ranking.
    pub fn from_ranking(r: &Ranking) -> Self {
        Self {
            kind: match r.scheme() {
                RankingScheme::OrderlyDegRevLex => ModuleOrderKind::DegRevLexThenPosition,
                RankingScheme::EliminationLex => ModuleOrderKind::PositionThenLex,
            },
            variables: r.difference_order().to_vec(),
            components: r.indeterminate_order().to_vec(),
        }
    }

    fn component_cmp(&self, a: usize, b: usize) -> Ordering {
        let pos = |k| self.components.iter().position(|&c| c == k).unwrap();
        pos(b).cmp(&pos(a))
    }

    pub fn cmp(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        // exponent differences listed in significance order
        let diff: Vec<i64> = self
            .variables
            .iter()
            .map(|&v| i64::from(a.exponents[v]) - i64::from(b.exponents[v]))
            .collect();
        match self.kind {
            ModuleOrderKind::DegRevLexThenPosition => {
                let total: i64 = diff.iter().sum();
                if total != 0 {
                    return total.cmp(&0);
                }
                // a ≻ b iff the last nonzero difference is negative
                if let Some(&last) = diff.iter().rev().find(|&&d| d != 0) {
                    return 0.cmp(&last);
                }
                self.component_cmp(a.component, b.component)
            }
            ModuleOrderKind::PositionThenLex => {
                if a.component != b.component {
                    return self.component_cmp(a.component, b.component);
                }
                diff.iter()
                    .find(|&&d| d != 0)
                    .map_or(Ordering::Equal, |d| d.cmp(&0))
            }
        }
    }

    pub fn leading(&self, f: &ModuleElement) -> Option<(ModuleMonomial, Rational)> {
        f.terms()
            .max_by(|(u, _), (v, _)| self.cmp(u, v))
            .map(|(u, c)| (u, c.clone()))
    }
}

pub fn to_module(f: &LinearDifferencePolynomial<Rational>, m: usize) -> ModuleElement {
    let mut out = ModuleElement::zero(m);
    for t in f.terms() {
        out.add_term(
            ModuleMonomial {
                component: t.monomial.indeterminate(),
                exponents: t.monomial.exponent().components().to_vec(),
            },
            t.coefficient.clone(),
        );
    }
    out
}

pub fn from_module(
    e: &ModuleElement,
    ring: &DifferenceRing,
) -> Result<LinearDifferencePolynomial<Rational>, RingError> {
    ring.polynomial(e.terms().map(|(u, c)| {
        (
            c.clone(),
            DifferenceMonomial::new(u.component, u.exponents),
        )
    }))
}

/// Fully reduces `f` modulo `basis`.
pub fn reduce(f: &ModuleElement, basis: &[ModuleElement], order: &ModuleOrder) -> ModuleElement {
    let heads: Vec<(ModuleMonomial, Rational)> =
        basis.iter().filter_map(|g| order.leading(g)).collect();
    let mut p = f.clone();
    let mut remainder = ModuleElement::zero(f.components.len());
    while let Some((u, c)) = order.leading(&p) {
        let hit = heads
            .iter()
            .zip(basis)
            .find(|((v, _), _)| v.divides(&u));
        match hit {
            Some(((v, lc), g)) => {
                let shift: Vec<u32> = u.exponents.iter().zip(&v.exponents).map(|(a, b)| a - b).collect();
                p.axpy(&(-(c / lc)), &shift, g);
            }
            None => {
                p.add_term(u.clone(), -c.clone());
                remainder.add_term(u, c);
            }
        }
    }
    remainder
}

fn s_vector(f: &ModuleElement, g: &ModuleElement, order: &ModuleOrder) -> Option<ModuleElement> {
    let (u, a) = order.leading(f)?;
    let (v, b) = order.leading(g)?;
    if u.component != v.component {
        return None;
    }
    let lcm: Vec<u32> = u.exponents.iter().zip(&v.exponents).map(|(x, y)| *x.max(y)).collect();
    let su: Vec<u32> = lcm.iter().zip(&u.exponents).map(|(l, x)| l - x).collect();
    let sv: Vec<u32> = lcm.iter().zip(&v.exponents).map(|(l, y)| l - y).collect();
    let mut s = ModuleElement::zero(f.components.len());
    s.axpy(&(Rational::one() / a), &su, f);
    s.axpy(&(-(Rational::one() / b)), &sv, g);
    Some(s)
}

/// The reduced Gröbner basis of the submodule generated by `generators`,
/// monic and sorted descending by leading term.
pub fn buchberger_reduced_gb(generators: &[ModuleElement], order: &ModuleOrder) -> Vec<ModuleElement> {
    let mut basis: Vec<ModuleElement> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut heads: Vec<ModuleMonomial> = basis.iter().map(|g| order.leading(g).unwrap().0).collect();
    let lcm = |a: &ModuleMonomial, b: &ModuleMonomial| -> Option<ModuleMonomial> {
        (a.component == b.component).then(|| ModuleMonomial {
            component: a.component,
            exponents: a.exponents.iter().zip(&b.exponents).map(|(x, y)| *x.max(y)).collect(),
        })
    };
    // pairs waiting, with their lcm; `done` marks pairs already treated
    let mut pairs: Vec<(usize, usize, ModuleMonomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            if let Some(l) = lcm(&heads[i], &heads[j]) {
                pairs.push((i, j, l));
            }
        }
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while !pairs.is_empty() {
        // normal strategy: the pair with the smallest lcm
        let pick = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].2, &pairs[b].2))
            .unwrap();
        let (i, j, l) = pairs.swap_remove(pick);
        done.insert((i, j));
        // chain criterion
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && heads[k].divides(&l)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let Some(s) = s_vector(&basis[i], &basis[j], order) else { continue };
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let h = order.leading(&r).unwrap().0;
            let k = basis.len();
            for (i, hi) in heads.iter().enumerate() {
                if let Some(l) = lcm(hi, &h) {
                    pairs.push((i, k, l));
                }
            }
            basis.push(r);
            heads.push(h);
        }
    }

    // minimize
    let mut minimal: Vec<ModuleElement> = Vec::new();
    for (a, g) in basis.iter().enumerate() {
        let redundant = heads.iter().enumerate().any(|(b, h)| {
            b != a && h.divides(&heads[a]) && (h != &heads[a] || b < a)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }

    // interreduce and normalize
    let mut reduced: Vec<ModuleElement> = Vec::with_capacity(minimal.len());
    for (a, g) in minimal.iter().enumerate() {
        let (u, c) = order.leading(g).unwrap();
        let others: Vec<ModuleElement> = minimal
            .iter()
            .enumerate()
            .filter(|&(b, _)| b != a)
            .map(|(_, h)| h.clone())
            .collect();
        let mut tail = g.clone();
        tail.add_term(u.clone(), -c.clone());
        let mut r = reduce(&tail, &others, order);
        r.add_term(u, c.clone());
        reduced.push(r.scaled(&(Rational::one() / c)));
    }
    reduced.sort_by(|f, g| {
        order
            .cmp(&order.leading(g).unwrap().0, &order.leading(f).unwrap().0)
    });
    reduced
}

/// Whether `f` reduces to zero modulo a Gröbner basis.
pub fn is_member(f: &ModuleElement, gb: &[ModuleElement], order: &ModuleOrder) -> bool {
    reduce(f, gb, order).is_zero()
}

/// Reduced Gröbner basis of the difference ideal generated by `generators`,
/// translated back into the ring.
pub fn reduced_gb(
    ring: &DifferenceRing,
    generators: &[LinearDifferencePolynomial<Rational>],
) -> Result<Vec<LinearDifferencePolynomial<Rational>>, RingError> {
    let order = ModuleOrder::from_ranking(ring.ranking());
    let elems: Vec<_> = generators.iter().map(|f| to_module(f, ring.m())).collect();
    buchberger_reduced_gb(&elems, &order)
        .iter()
        .map(|e| from_module(e, ring))
        .collect()
}
