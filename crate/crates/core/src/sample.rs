//! Fixed and random example systems.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::io::parse_system;
use crate::ring::{
    DifferenceMonomial, DifferenceRing, LinearDifferencePolynomial, Ranking, RankingScheme,
    Rational, RingContext,
};

/// The toric system `{θ_x^7 - θ_y^2θ_z, θ_x^4θ_w - θ_y^3, θ_x^3θ_y - θ_zθ_w}`
/// under degrevlex with `θ_x ≻ θ_y ≻ θ_z ≻ θ_w`.
pub const TORIC: &str = "\
# toric ideal, one indeterminate
ring: differences = [x, y, z, w] indeterminates = [u]
rank: scheme = degrevlex order = [x, y, z, w] indet_order = [u]
poly: u[7,0,0,0] - u[0,2,1,0]
poly: u[4,0,0,1] - u[0,3,0,0]
poly: u[3,1,0,0] - u[0,0,1,1]
";

pub fn toric() -> (DifferenceRing, Vec<LinearDifferencePolynomial<Rational>>) {
    let sys = parse_system(TORIC).expect("built-in system parses");
    (sys.ring, sys.polynomials)
}

/// Size limits for [`random_system`].
#[derive(Clone, Copy, Debug)]
pub struct SampleParams {
    pub max_differences: usize,
    pub max_indeterminates: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    pub max_terms: usize,
    /// Elimination rankings are only drawn up to this many differences;
    /// beyond it, elimination routinely needs degrees in the hundreds.
    pub max_elimination_differences: usize,
    /// Coefficients are drawn from `-c..=c` without zero.
    pub coefficient_bound: i64,
}

impl Default for SampleParams {
    fn default() -> Self {
        Self {
            max_differences: 3,
            max_indeterminates: 2,
            max_degree: 4,
            max_generators: 4,
            max_terms: 3,
            max_elimination_differences: 2,
            coefficient_bound: 3,
        }
    }
}

/// A random ranking of either scheme with shuffled permutations.
pub fn random_ranking<R: Rng>(rng: &mut R, ctx: &RingContext) -> Ranking {
    let scheme = if rng.gen_bool(0.5) {
        RankingScheme::OrderlyDegRevLex
    } else {
        RankingScheme::EliminationLex
    };
    shuffled_ranking(rng, scheme, ctx)
}

/// A ranking of the given scheme with shuffled permutations.
pub fn shuffled_ranking<R: Rng>(rng: &mut R, scheme: RankingScheme, ctx: &RingContext) -> Ranking {
    let mut diffs: Vec<usize> = (0..ctx.n()).collect();
    let mut indets: Vec<usize> = (0..ctx.m()).collect();
    diffs.shuffle(rng);
    indets.shuffle(rng);
    Ranking::new(scheme, diffs, indets, ctx).expect("shuffled permutations")
}

pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, m: usize, max_degree: u32) -> DifferenceMonomial {
    let total = rng.gen_range(0..=max_degree);
    random_monomial_of_degree(rng, n, m, total)
}

pub fn random_monomial_of_degree<R: Rng>(rng: &mut R, n: usize, m: usize, total: u32) -> DifferenceMonomial {
    let mut exps = vec![0u32; n];
    for _ in 0..total {
        exps[rng.gen_range(0..n)] += 1;
    }
    DifferenceMonomial::new(rng.gen_range(0..m), exps)
}

pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    ring: &DifferenceRing,
    params: &SampleParams,
) -> LinearDifferencePolynomial<Rational> {
    let terms = rng.gen_range(2.min(params.max_terms)..=params.max_terms);
    let b = params.coefficient_bound.max(1);
    ring.polynomial((0..terms).map(|_| {
        let c = rng.gen_range(1..=b) * if rng.gen_bool(0.5) { -1 } else { 1 };
        // constant shifts are rare, otherwise most ideals collapse
        let min_degree = if rng.gen_bool(0.1) { 0 } else { 1 };
        let degree = rng.gen_range(min_degree.min(params.max_degree)..=params.max_degree);
        (
            Rational::from_integer(c.into()),
            random_monomial_of_degree(rng, ring.n(), ring.m(), degree),
        )
    }))
    .expect("monomials fit the ring")
}

/// A random ring, ranking and generator list with at least one nonzero
/// generator.
pub fn random_system<R: Rng>(
    rng: &mut R,
    params: &SampleParams,
) -> (DifferenceRing, Vec<LinearDifferencePolynomial<Rational>>) {
    // one difference gives principal ideals, keep those uncommon
    let n = if params.max_differences >= 2 && rng.gen_bool(0.9) {
        rng.gen_range(2..=params.max_differences)
    } else {
        rng.gen_range(1..=params.max_differences)
    };
    let m = rng.gen_range(1..=params.max_indeterminates);
    let ctx = RingContext::generic(n, m).expect("n, m >= 1");
    let scheme = if n <= params.max_elimination_differences && rng.gen_bool(0.5) {
        RankingScheme::EliminationLex
    } else {
        RankingScheme::OrderlyDegRevLex
    };
    let ranking = shuffled_ranking(rng, scheme, &ctx);
    let ring = DifferenceRing::new(ctx, ranking).expect("matching sizes");
    loop {
        let count = rng.gen_range(2.min(params.max_generators)..=params.max_generators);
        let gens: Vec<_> = (0..count)
            .map(|_| random_polynomial(rng, &ring, params))
            .collect();
        if gens.iter().any(|g| !g.is_zero()) {
            return (ring, gens);
        }
    }
}
