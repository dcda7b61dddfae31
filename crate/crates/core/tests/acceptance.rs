//! Acceptance criteria. Runs every criterion, prints one line each and
//! exits nonzero if any fails.

use std::cmp::Ordering;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dgb::division::{j_divisors, DivisionKind, JanetTree};
use dgb::engine::{complete, BasisResult, CompletionConfig};
use dgb::io::{format_poly, format_system};
use dgb::oracle;
use dgb::ring::{
    DifferenceMonomial, DifferenceRing, ExponentVector, LinearDifferencePolynomial, Ranking,
    RankingScheme, Rational, RingContext,
};
use dgb::sample::{self, random_monomial, random_system, SampleParams};
use dgb::tools::{
    extract_reduced_gb, heads_subset, is_member, is_subset, tail_normalize, verify,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Poly = LinearDifferencePolynomial<Rational>;
type System = (DifferenceRing, Vec<Poly>);

const SEED: u64 = 0x5eed_d1ff;
const RANDOM_SYSTEMS: usize = 200;

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn systems() -> Vec<System> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let params = SampleParams::default();
    (0..RANDOM_SYSTEMS)
        .map(|_| random_system(&mut rng, &params))
        .collect()
}

fn jlb(ring: &DifferenceRing, gens: &[Poly]) -> BasisResult<Rational> {
    complete(ring, gens, &CompletionConfig::with_division(DivisionKind::JanetLike))
        .expect("completion succeeds")
}

fn janet(ring: &DifferenceRing, gens: &[Poly]) -> BasisResult<Rational> {
    complete(ring, gens, &CompletionConfig::with_division(DivisionKind::Janet))
        .expect("completion succeeds")
}

fn dgb_cli(args: &[&str], input: &str) -> (i32, String, Duration) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("input.dgb");
    std::fs::write(&path, input).unwrap();
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dgb"))
        .arg("compute")
        .arg("--input")
        .arg(&path)
        .args(args)
        .output()
        .expect("run dgb");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        elapsed,
    )
}

fn poly_lines(output: &str) -> Vec<&str> {
    output
        .lines()
        .filter_map(|l| l.strip_prefix("poly: "))
        .collect()
}

fn card_line(output: &str) -> Option<usize> {
    output
        .lines()
        .find_map(|l| l.strip_prefix("# card = "))
        .and_then(|s| s.trim().parse().ok())
}

fn ac1_toric_reduced_gb() -> Outcome {
    let expected = [
        "u[7,0,0,0] - u[0,2,1,0]",
        "u[4,0,0,1] - u[0,3,0,0]",
        "u[3,1,0,0] - u[0,0,1,1]",
        "u[0,4,0,0] - u[1,0,1,2]",
    ];
    let (code, out, elapsed) = dgb_cli(&["--basis", "gb", "--stats"], sample::TORIC);
    let mut got = poly_lines(&out);
    got.sort_unstable();
    let mut want = expected.to_vec();
    want.sort_unstable();
    let ok = code == 0
        && got == want
        && card_line(&out) == Some(4)
        && elapsed < Duration::from_secs(1);
    outcome(ok, format!("{} polynomials, card {:?}, {:?}", got.len(), card_line(&out), elapsed))
}

fn ac2_toric_cardinalities() -> Outcome {
    let start = Instant::now();
    let (ring, gens) = sample::toric();
    let jl = jlb(&ring, &gens);
    let jb = janet(&ring, &gens);
    let gb = extract_reduced_gb(&jl).unwrap();
    let (c_jl, out_jl, _) = dgb_cli(&["--basis", "jlb", "--stats"], sample::TORIC);
    let (c_jb, out_jb, _) = dgb_cli(&["--basis", "janet", "--stats"], sample::TORIC);
    let elapsed = start.elapsed();
    let fifth = dgb::io::parse_polynomial("u[4,1,0,0] - u[1,0,1,1]", &ring).unwrap();
    let ok = jl.len() == 5
        && jb.len() == 11
        && gb.len() == 4
        && gb.len() <= jl.len()
        && jl.len() <= jb.len()
        && jl.basis.contains(&fifth)
        && c_jl == 0
        && c_jb == 0
        && card_line(&out_jl) == Some(5)
        && card_line(&out_jb) == Some(11)
        && elapsed < Duration::from_secs(2);
    outcome(
        ok,
        format!("GB {} <= JLB {} <= JB {}, {:?}", gb.len(), jl.len(), jb.len(), elapsed),
    )
}

fn ac3_condition4(all: &[System]) -> Outcome {
    let start = Instant::now();
    let (ring, gens) = sample::toric();
    let mut cases: Vec<(&DifferenceRing, &[Poly])> = vec![(&ring, &gens)];
    cases.extend(all.iter().map(|(r, g)| (r, g.as_slice())));
    let mut failures = 0;
    let mut bases = 0;
    for (ring, gens) in cases {
        for basis in [jlb(ring, gens), janet(ring, gens)] {
            bases += 1;
            if !verify(&basis, gens).unwrap().all_ok() {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && elapsed < Duration::from_secs(60),
        format!("{bases} bases, {failures} failures, {elapsed:?}"),
    )
}

fn ac4_oracle_equivalence(all: &[System]) -> Outcome {
    let mut mismatches = 0;
    let (ring, gens) = sample::toric();
    let mut cases: Vec<(&DifferenceRing, &[Poly])> = vec![(&ring, &gens)];
    cases.extend(all.iter().map(|(r, g)| (r, g.as_slice())));
    for (ring, gens) in &cases {
        let ours = extract_reduced_gb(&jlb(ring, gens)).unwrap();
        let theirs = oracle::reduced_gb(ring, gens).unwrap();
        if ours != theirs {
            mismatches += 1;
        }
    }
    outcome(mismatches == 0, format!("{} systems, {mismatches} mismatches", cases.len()))
}

fn ac5_inclusion_chain(all: &[System]) -> Outcome {
    let (ring, gens) = sample::toric();
    let mut cases: Vec<(&DifferenceRing, &[Poly])> = vec![(&ring, &gens)];
    cases.extend(all.iter().take(50).map(|(r, g)| (r, g.as_slice())));
    let mut violations = 0;
    for (ring, gens) in &cases {
        let jl = jlb(ring, gens);
        let jb = janet(ring, gens);
        let gb = extract_reduced_gb(&jl).unwrap();
        let jl_n = tail_normalize(ring, &jl.basis);
        let jb_n = tail_normalize(ring, &jb.basis);
        let heads = heads_subset(&gb, &jl.basis) && heads_subset(&jl.basis, &jb.basis);
        let sets = is_subset(&gb, &jl_n) && is_subset(&jl_n, &jb_n);
        let cards = gb.len() <= jl.len() && jl.len() <= jb.len();
        if !(heads && sets && cards) {
            violations += 1;
        }
    }
    outcome(violations == 0, format!("{} systems, {violations} violations", cases.len()))
}

fn ac6_determinism(all: &[System]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let (ring, gens) = sample::toric();
    let mut cases: Vec<(&DifferenceRing, &[Poly])> = vec![(&ring, &gens)];
    cases.extend(all.iter().take(50).map(|(r, g)| (r, g.as_slice())));
    let mut differing = 0;
    for (ring, gens) in &cases {
        let reference = format_system(ring, &jlb(ring, gens).basis);
        for _ in 0..20 {
            let mut shuffled = gens.to_vec();
            shuffled.shuffle(&mut rng);
            if format_system(ring, &jlb(ring, &shuffled).basis) != reference {
                differing += 1;
            }
        }
    }
    // the CLI on permuted toric input files
    let (_, reference, _) = dgb_cli(&["--basis", "jlb"], sample::TORIC);
    let lines: Vec<&str> = sample::TORIC.lines().collect();
    let (head, polys) = lines.split_at(3);
    for _ in 0..20 {
        let mut p = polys.to_vec();
        p.shuffle(&mut rng);
        let text = format!("{}\n{}\n", head.join("\n"), p.join("\n"));
        let (code, out, _) = dgb_cli(&["--basis", "jlb"], &text);
        if code != 0 || out != reference {
            differing += 1;
        }
    }
    outcome(
        differing == 0,
        format!("{} inputs x 20 permutations + 20 CLI runs, {differing} differing", cases.len()),
    )
}

fn ac7_membership(all: &[System]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let params = SampleParams::default();
    let (mut members, mut member_ok) = (0, 0);
    let (mut below, mut below_ok) = (0, 0);
    let (mut general, mut general_ok) = (0, 0);
    for (ring, gens) in all.iter().cycle() {
        if members >= 100 && below >= 100 && general >= 100 {
            break;
        }
        let basis = jlb(ring, gens);
        let order = oracle::ModuleOrder::from_ranking(ring.ranking());
        let ogb: Vec<_> = oracle::reduced_gb(ring, gens)
            .unwrap()
            .iter()
            .map(|g| oracle::to_module(g, ring.m()))
            .collect();
        let oracle_member = |f: &Poly| oracle::is_member(&oracle::to_module(f, ring.m()), &ogb, &order);

        if members < 100 {
            // Σ c_i θ^{γ_i} ∘ f_i
            let mut f = Poly::zero();
            for g in gens {
                for _ in 0..rng.gen_range(1..=2) {
                    let shift = random_monomial(&mut rng, ring.n(), 1, 3).exponent().clone();
                    let c = Rational::from_integer(rng.gen_range(-3..=3).into());
                    f = ring.add_scaled(&f, &c, &g.shifted(&shift));
                }
            }
            members += 1;
            if is_member(&f, &basis).unwrap() && oracle_member(&f) {
                member_ok += 1;
            }
        }

        if below < 100 {
            let lowest = basis.basis.last().unwrap().leading_monomial().unwrap().clone();
            let candidate = sample::random_polynomial(&mut rng, ring, &params);
            let f = ring
                .polynomial(
                    candidate
                        .terms()
                        .iter()
                        .filter(|t| basis.basis.iter().all(|g| {
                            ring.compare(&t.monomial, g.leading_monomial().unwrap()) == Ordering::Less
                        }))
                        .map(|t| (t.coefficient.clone(), t.monomial.clone())),
                )
                .unwrap();
            if !f.is_zero() {
                below += 1;
                debug_assert_eq!(ring.compare(f.leading_monomial().unwrap(), &lowest), Ordering::Less);
                if is_member(&f, &basis).unwrap() == oracle_member(&f) && !oracle_member(&f) {
                    below_ok += 1;
                }
            }
        }

        if general < 100 {
            let f = sample::random_polynomial(&mut rng, ring, &params);
            general += 1;
            if is_member(&f, &basis).unwrap() == oracle_member(&f) {
                general_ok += 1;
            }
        }
    }
    outcome(
        member_ok == members && below_ok == below && general_ok == general,
        format!(
            "ideal elements {member_ok}/{members}, below-basis non-members {below_ok}/{below}, \
             random agreement {general_ok}/{general}"
        ),
    )
}

fn ac8_ranking_axioms() -> Outcome {
    let ctx = RingContext::generic(3, 2).unwrap();
    let mut monomials = Vec::new();
    for k in 0..2 {
        for a in 0..=4u32 {
            for b in 0..=4 - a {
                for c in 0..=4 - a - b {
                    monomials.push(DifferenceMonomial::new(k, vec![a, b, c]));
                }
            }
        }
    }
    let perms3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut violations = 0;
    let mut checks = 0u64;
    for scheme in [RankingScheme::OrderlyDegRevLex, RankingScheme::EliminationLex] {
        for perm in perms3 {
            for indets in [vec![0, 1], vec![1, 0]] {
                let r = Ranking::new(scheme, perm.to_vec(), indets, &ctx).unwrap();
                for u in &monomials {
                    for i in 0..3 {
                        let step = ExponentVector::pure_power(3, i, 1);
                        checks += 1;
                        if r.compare(&u.shifted(&step), u) != Ordering::Greater {
                            violations += 1;
                        }
                    }
                    for v in &monomials {
                        let ord = r.compare(u, v);
                        checks += 1;
                        if (ord == Ordering::Equal) != (u == v) || r.compare(v, u) != ord.reverse() {
                            violations += 1;
                        }
                        for i in 0..3 {
                            let step = ExponentVector::pure_power(3, i, 1);
                            checks += 1;
                            if r.compare(&u.shifted(&step), &v.shifted(&step)) != ord {
                                violations += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(violations == 0, format!("{checks} checks, {violations} violations"))
}

fn ac9_reductor_uniqueness(all: &[System]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let (ring, gens) = sample::toric();
    let mut cases: Vec<(&DifferenceRing, &[Poly])> = vec![(&ring, &gens)];
    cases.extend(all.iter().map(|(r, g)| (r, g.as_slice())));
    let (mut ambiguous, mut disagreements, mut lookups) = (0, 0, 0);
    for (ring, gens) in &cases {
        let basis = jlb(ring, gens);
        let records = basis.records().unwrap();
        let mut tree = JanetTree::new(ring.ranking().difference_order().to_vec(), DivisionKind::JanetLike);
        for (id, g) in basis.basis.iter().enumerate() {
            tree.insert(g.leading_monomial().unwrap().clone(), id).unwrap();
        }
        let max_degree = basis
            .basis
            .iter()
            .map(|g| g.leading_monomial().unwrap().total_degree() as u32)
            .max()
            .unwrap()
            + 3;
        for _ in 0..1000 {
            let u = random_monomial(&mut rng, ring.n(), ring.m(), max_degree);
            let divisors = j_divisors(records.iter().enumerate(), &u);
            lookups += 1;
            if divisors.len() > 1 {
                ambiguous += 1;
            }
            if tree.find(&u) != divisors.first().cloned() {
                disagreements += 1;
            }
        }
    }
    outcome(
        ambiguous == 0 && disagreements == 0,
        format!("{} bases, {lookups} lookups, {ambiguous} ambiguous, {disagreements} tree/scan disagreements", cases.len()),
    )
}

fn main() -> ExitCode {
    let all = systems();
    // sanity check that formatting is usable on random systems
    debug_assert!(all.iter().all(|(r, g)| g.iter().all(|f| !format_poly(f, r).is_empty())));

    let criteria: Vec<Criterion> = vec![
        ("AC1 toric reduced GB via `--basis gb`", Box::new(ac1_toric_reduced_gb)),
        ("AC2 toric cardinalities 4 <= 5 <= 11", Box::new(ac2_toric_cardinalities)),
        ("AC3 completeness condition on every basis", Box::new(|| ac3_condition4(&all))),
        ("AC4 oracle equivalence of reduced GBs", Box::new(|| ac4_oracle_equivalence(&all))),
        ("AC5 inclusion chain GB ⊆ JLB ⊆ JB", Box::new(|| ac5_inclusion_chain(&all))),
        ("AC6 determinism under input permutation", Box::new(|| ac6_determinism(&all))),
        ("AC7 membership agreement", Box::new(|| ac7_membership(&all))),
        ("AC8 ranking axioms, exhaustive", Box::new(ac8_ranking_axioms)),
        ("AC9 unique J-reductor, tree = scan", Box::new(|| ac9_reductor_uniqueness(&all))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let tag = if result.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.2?})", result.detail, start.elapsed());
        if !result.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
