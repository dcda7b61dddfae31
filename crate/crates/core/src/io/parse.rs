use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::ring::{
    DifferenceMonomial, DifferenceRing, LinearDifferencePolynomial, Ranking, RankingScheme,
    Rational, RingContext,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed system: ring, ranking and generators.
#[derive(Clone, Debug)]
pub struct SystemFile {
    pub ring: DifferenceRing,
    pub polynomials: Vec<LinearDifferencePolynomial<Rational>>,
    /// Non-fatal diagnostics, e.g. polynomials that cancel to zero.
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    // column just past the end of the line, for end-of-input diagnostics
    end_column: usize,
}

impl Lexer {
    fn new(text: &str, line: usize, column_offset: usize) -> Result<Self, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = column_offset + i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(chars[start..i].iter().collect()), column));
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), column));
            } else if "=[],+-*/".contains(c) {
                toks.push((Tok::Sym(c), column));
                i += 1;
            } else {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        Ok(Self {
            toks,
            pos: 0,
            line,
            end_column: column_offset + chars.len() + 1,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column(),
            message: message.into(),
        }
    }

    fn error_at(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of line")),
        }
    }

    fn ident(&mut self) -> Result<(String, usize), ParseError> {
        match self.next() {
            Some((Tok::Ident(s), c)) => Ok((s, c)),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("a name"))
            }
        }
    }

    fn int(&mut self) -> Result<(String, usize), ParseError> {
        match self.next() {
            Some((Tok::Int(s), c)) => Ok((s, c)),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("an integer"))
            }
        }
    }

    /// `[a, b, c]`
    fn name_list(&mut self) -> Result<Vec<(String, usize)>, ParseError> {
        self.expect('[')?;
        let mut out = vec![self.ident()?];
        while self.eat(',') {
            out.push(self.ident()?);
        }
        self.expect(']')?;
        Ok(out)
    }
}

struct RawPoly {
    line: usize,
    terms: Vec<(Rational, DifferenceMonomial)>,
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut context: Option<RingContext> = None;
    let mut rank_line: Option<(usize, usize, String)> = None;
    let mut raw_polys: Vec<RawPoly> = Vec::new();
    let mut last_line = 0;

    for (idx, full) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = full.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let column = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Err(ParseError {
                line,
                column,
                message: "expected `ring:`, `rank:` or `poly:`".into(),
            });
        };
        let directive = content[..colon].trim();
        let body = &content[colon + 1..];
        let body_offset = content[..colon + 1].chars().count();
        let directive_column = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
        match directive {
            "ring" => {
                if context.is_some() {
                    return Err(ParseError {
                        line,
                        column: directive_column,
                        message: "duplicate `ring:` declaration".into(),
                    });
                }
                context = Some(parse_ring(body, line, body_offset)?);
            }
            "rank" => {
                if rank_line.is_some() {
                    return Err(ParseError {
                        line,
                        column: directive_column,
                        message: "duplicate `rank:` declaration".into(),
                    });
                }
                rank_line = Some((line, body_offset, body.to_string()));
            }
            "poly" => {
                let ctx = context.as_ref().ok_or_else(|| ParseError {
                    line,
                    column: directive_column,
                    message: "`poly:` before the `ring:` declaration".into(),
                })?;
                let mut lx = Lexer::new(body, line, body_offset)?;
                let terms = parse_terms(&mut lx, ctx)?;
                raw_polys.push(RawPoly { line, terms });
            }
            other => {
                return Err(ParseError {
                    line,
                    column: directive_column,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
    }

    let context = context.ok_or_else(|| ParseError {
        line: last_line.max(1),
        column: 1,
        message: "missing `ring:` declaration".into(),
    })?;
    let ranking = match rank_line {
        Some((line, offset, body)) => parse_rank(&body, line, offset, &context)?,
        None => Ranking::degrevlex(&context),
    };
    let ring = DifferenceRing::new(context, ranking).expect("ranking built for this context");

    let mut polynomials = Vec::new();
    let mut warnings = Vec::new();
    for raw in raw_polys {
        let f = ring
            .polynomial(raw.terms)
            .expect("monomials were validated while parsing");
        if f.is_zero() {
            warnings.push(format!("line {}: polynomial is zero, ignored", raw.line));
        } else {
            polynomials.push(f);
        }
    }
    if polynomials.is_empty() {
        return Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "no nonzero polynomials".into(),
        });
    }
    Ok(SystemFile {
        ring,
        polynomials,
        warnings,
    })
}

fn parse_ring(body: &str, line: usize, offset: usize) -> Result<RingContext, ParseError> {
    let mut lx = Lexer::new(body, line, offset)?;
    let mut differences = None;
    let mut indeterminates = None;
    while !lx.at_end() {
        let (key, column) = lx.ident()?;
        lx.expect('=')?;
        let names = lx.name_list()?;
        let slot = match key.as_str() {
            "differences" => &mut differences,
            "indeterminates" => &mut indeterminates,
            _ => return Err(lx.error_at(column, format!("unknown ring field `{key}`"))),
        };
        if slot.replace(names).is_some() {
            return Err(lx.error_at(column, format!("`{key}` given twice")));
        }
    }
    let differences = differences.ok_or_else(|| lx.error("missing `differences = [...]`"))?;
    let indeterminates =
        indeterminates.ok_or_else(|| lx.error("missing `indeterminates = [...]`"))?;
    RingContext::new(
        differences.into_iter().map(|(s, _)| s),
        indeterminates.into_iter().map(|(s, _)| s),
    )
    .map_err(|e| lx.error_at(offset + 1, e.to_string()))
}

fn parse_rank(
    body: &str,
    line: usize,
    offset: usize,
    ctx: &RingContext,
) -> Result<Ranking, ParseError> {
    let mut lx = Lexer::new(body, line, offset)?;
    let mut scheme = None;
    let mut order = None;
    let mut indet_order = None;
    while !lx.at_end() {
        let (key, column) = lx.ident()?;
        lx.expect('=')?;
        match key.as_str() {
            "scheme" => {
                let (name, c) = lx.ident()?;
                scheme = Some(match name.as_str() {
                    "degrevlex" => RankingScheme::OrderlyDegRevLex,
                    "lex" => RankingScheme::EliminationLex,
                    _ => return Err(lx.error_at(c, format!("unknown ranking scheme `{name}`"))),
                });
            }
            "order" => {
                let mut perm = Vec::new();
                for (name, c) in lx.name_list()? {
                    perm.push(ctx.difference_index(&name).ok_or_else(|| {
                        lx.error_at(c, format!("unknown difference `{name}`"))
                    })?);
                }
                order = Some((perm, column));
            }
            "indet_order" => {
                let mut perm = Vec::new();
                for (name, c) in lx.name_list()? {
                    perm.push(ctx.indeterminate_index(&name).ok_or_else(|| {
                        lx.error_at(c, format!("unknown indeterminate `{name}`"))
                    })?);
                }
                indet_order = Some((perm, column));
            }
            _ => return Err(lx.error_at(column, format!("unknown rank field `{key}`"))),
        }
    }
    let scheme = scheme.ok_or_else(|| lx.error("missing `scheme = degrevlex | lex`"))?;
    let column = order
        .as_ref()
        .or(indet_order.as_ref())
        .map_or(offset + 1, |(_, c)| *c);
    Ranking::new(
        scheme,
        order.map_or_else(|| (0..ctx.n()).collect(), |(p, _)| p),
        indet_order.map_or_else(|| (0..ctx.m()).collect(), |(p, _)| p),
        ctx,
    )
    .map_err(|e| lx.error_at(column, e.to_string()))
}

fn parse_terms(
    lx: &mut Lexer,
    ctx: &RingContext,
) -> Result<Vec<(Rational, DifferenceMonomial)>, ParseError> {
    // the zero polynomial prints as a bare `0`
    if lx.toks.len() == lx.pos + 1 && matches!(lx.peek(), Some(Tok::Int(d)) if d.bytes().all(|b| b == b'0')) {
        lx.pos += 1;
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut negate = lx.eat('-');
    if !negate {
        lx.eat('+');
    }
    loop {
        let (c, u) = parse_term(lx, ctx)?;
        terms.push((if negate { -c } else { c }, u));
        if lx.at_end() {
            break;
        }
        negate = if lx.eat('-') {
            true
        } else if lx.eat('+') {
            false
        } else {
            return Err(lx.unexpected("`+` or `-`"));
        };
    }
    Ok(terms)
}

fn parse_term(lx: &mut Lexer, ctx: &RingContext) -> Result<(Rational, DifferenceMonomial), ParseError> {
    let coefficient = if matches!(lx.peek(), Some(Tok::Int(_)) | Some(Tok::Sym('-'))) {
        let c = parse_rational(lx)?;
        lx.expect('*')?;
        c
    } else {
        Rational::from_integer(1.into())
    };
    let (name, column) = lx.ident()?;
    let k = ctx
        .indeterminate_index(&name)
        .ok_or_else(|| lx.error_at(column, format!("unknown indeterminate `{name}`")))?;
    let open = lx.column();
    lx.expect('[')?;
    let mut exps = Vec::new();
    loop {
        let (digits, c) = lx.int()?;
        exps.push(
            digits
                .parse::<u32>()
                .map_err(|_| lx.error_at(c, format!("exponent `{digits}` out of range")))?,
        );
        if !lx.eat(',') {
            break;
        }
    }
    lx.expect(']')?;
    if exps.len() != ctx.n() {
        return Err(lx.error_at(
            open,
            format!(
                "`{name}` has {} exponents, the ring declares {} differences",
                exps.len(),
                ctx.n()
            ),
        ));
    }
    Ok((coefficient, DifferenceMonomial::new(k, exps)))
}

fn parse_rational(lx: &mut Lexer) -> Result<Rational, ParseError> {
    let negative = lx.eat('-');
    let (num, _) = lx.int()?;
    let mut value = BigInt::parse_bytes(num.as_bytes(), 10).expect("digits");
    if negative {
        value = -value;
    }
    if lx.eat('/') {
        let (den, c) = lx.int()?;
        let den = BigInt::parse_bytes(den.as_bytes(), 10).expect("digits");
        if den.is_zero() {
            return Err(lx.error_at(c, "zero denominator"));
        }
        return Ok(Rational::new(value, den));
    }
    Ok(Rational::from_integer(value))
}

/// Parses the right-hand side of a single `poly:` line in an existing ring.
pub fn parse_polynomial(
    text: &str,
    ring: &DifferenceRing,
) -> Result<LinearDifferencePolynomial<Rational>, ParseError> {
    let mut lx = Lexer::new(text, 1, 0)?;
    let terms = parse_terms(&mut lx, ring.context())?;
    Ok(ring.polynomial(terms).expect("monomials were validated while parsing"))
}
