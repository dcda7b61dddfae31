use num_traits::{One, Signed};

use crate::ring::{DifferenceMonomial, DifferenceRing, LinearDifferencePolynomial, Rational};

pub fn format_rational(c: &Rational) -> String {
    c.to_string()
}

/// `u[7,0,0,0]`
pub fn format_monomial(u: &DifferenceMonomial, ring: &DifferenceRing) -> String {
    let name = &ring.context().indeterminate_names()[u.indeterminate()];
    let exps: Vec<String> = u.exponent().components().iter().map(u32::to_string).collect();
    format!("{name}[{}]", exps.join(","))
}

/// Terms in descending ranking order; unit coefficients are left out except
/// for a leading `-1`, which is written `-1*`.
pub fn format_poly(f: &LinearDifferencePolynomial<Rational>, ring: &DifferenceRing) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        let mono = format_monomial(&t.monomial, ring);
        let c = &t.coefficient;
        if i == 0 {
            if c.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{mono}", format_rational(c)));
            }
            continue;
        }
        out.push_str(if c.is_negative() { " - " } else { " + " });
        let magnitude = c.abs();
        if magnitude.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", format_rational(&magnitude)));
        }
    }
    out
}

/// A complete system file: ring and rank declarations, then one `poly:`
/// line per polynomial.
pub fn format_system(ring: &DifferenceRing, polys: &[LinearDifferencePolynomial<Rational>]) -> String {
    let ctx = ring.context();
    let r = ring.ranking();
    let names = |all: &[String], perm: &[usize]| {
        perm.iter().map(|&i| all[i].as_str()).collect::<Vec<_>>().join(", ")
    };
    let mut out = format!(
        "ring: differences = [{}] indeterminates = [{}]\n",
        ctx.difference_names().join(", "),
        ctx.indeterminate_names().join(", ")
    );
    out.push_str(&format!(
        "rank: scheme = {} order = [{}] indet_order = [{}]\n",
        r.scheme(),
        names(ctx.difference_names(), r.difference_order()),
        names(ctx.indeterminate_names(), r.indeterminate_order())
    ));
    for f in polys {
        out.push_str("poly: ");
        out.push_str(&format_poly(f, ring));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::{parse_polynomial, parse_system};
    use crate::ring::{rational, Ranking, RingContext};

    fn ring() -> DifferenceRing {
        let ctx = RingContext::new(vec!["x", "y", "z", "w"], vec!["u"]).unwrap();
        let r = Ranking::degrevlex(&ctx);
        DifferenceRing::new(ctx, r).unwrap()
    }

    #[test]
    fn toric_generators_round_trip() {
        let ring = ring();
        for text in [
            "u[7,0,0,0] - u[0,2,1,0]",
            "u[4,0,0,1] - u[0,3,0,0]",
            "u[3,1,0,0] - u[0,0,1,1]",
            "u[0,4,0,0] - u[1,0,1,2]",
        ] {
            let f = parse_polynomial(text, &ring).unwrap();
            assert_eq!(format_poly(&f, &ring), text);
        }
    }

    #[test]
    fn coefficients() {
        let ring = ring();
        let f = ring
            .polynomial([
                (rational(-1, 1), DifferenceMonomial::new(0, vec![1, 0, 0, 0])),
                (rational(-3, 2), DifferenceMonomial::new(0, vec![0, 0, 0, 0])),
            ])
            .unwrap();
        assert_eq!(format_poly(&f, &ring), "-1*u[1,0,0,0] - 3/2*u[0,0,0,0]");
        assert_eq!(parse_polynomial(&format_poly(&f, &ring), &ring).unwrap(), f);
        assert_eq!(format_poly(&LinearDifferencePolynomial::zero(), &ring), "0");
        let single = ring.term(rational(5, 1), DifferenceMonomial::new(0, vec![0, 1, 0, 0])).unwrap();
        assert_eq!(format_poly(&single, &ring), "5*u[0,1,0,0]");
    }

    #[test]
    fn system_round_trip() {
        let text = "ring: differences = [a, b] indeterminates = [u, v]\n\
                    rank: scheme = lex order = [b, a] indet_order = [v, u]\n\
                    poly: u[1,0] - 2/3*v[0,2]\n";
        let sys = parse_system(text).unwrap();
        let again = format_system(&sys.ring, &sys.polynomials);
        let sys2 = parse_system(&again).unwrap();
        assert_eq!(sys2.ring, sys.ring);
        assert_eq!(sys2.polynomials, sys.polynomials);
        assert_eq!(format_system(&sys2.ring, &sys2.polynomials), again);
    }
}
