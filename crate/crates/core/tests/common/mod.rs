#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dgb::ring::{
    DifferenceMonomial, DifferenceRing, LinearDifferencePolynomial, Rational, RankingScheme,
    RingContext,
};
use dgb::sample::{random_system, shuffled_ranking, SampleParams};

pub type Poly = LinearDifferencePolynomial<Rational>;

/// A ring with `n <= 3`, `m <= 2` and a ranking of either scheme.
pub fn ring() -> impl Strategy<Value = DifferenceRing> {
    (1usize..=3, 1usize..=2, any::<bool>(), any::<u64>()).prop_map(|(n, m, lex, seed)| {
        let ctx = RingContext::generic(n, m).unwrap();
        let scheme = if lex {
            RankingScheme::EliminationLex
        } else {
            RankingScheme::OrderlyDegRevLex
        };
        let ranking = shuffled_ranking(&mut ChaCha8Rng::seed_from_u64(seed), scheme, &ctx);
        DifferenceRing::new(ctx, ranking).unwrap()
    })
}

/// Raw monomial data, folded into a concrete ring by [`monomial_in`].
pub fn raw_monomial() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (0usize..2, prop::collection::vec(0u32..=4, 3))
}

pub fn monomial_in(ring: &DifferenceRing, (k, exps): &(usize, Vec<u32>)) -> DifferenceMonomial {
    DifferenceMonomial::new(k % ring.m(), exps[..ring.n()].to_vec())
}

pub fn raw_polynomial(max_terms: usize) -> impl Strategy<Value = Vec<(i64, (usize, Vec<u32>))>> {
    prop::collection::vec((-3i64..=3, raw_monomial()), 0..=max_terms)
}

pub fn polynomial_in(ring: &DifferenceRing, raw: &[(i64, (usize, Vec<u32>))]) -> Poly {
    ring.polynomial(
        raw.iter()
            .map(|(c, u)| (Rational::from_integer((*c).into()), monomial_in(ring, u))),
    )
    .unwrap()
}

pub fn shift() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, 3)
}

/// A random generator system of the size used throughout the suite.
pub fn system(seed: u64) -> (DifferenceRing, Vec<Poly>) {
    random_system(&mut ChaCha8Rng::seed_from_u64(seed), &SampleParams::default())
}
