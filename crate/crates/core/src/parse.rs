//! The textual ideal-file format.
//!
//! ```text
//! file   := header decl+
//! header := "ring" NAME "over" ("QQ" | "Fp(" PRIME ")") "vars" NAME+
//! decl   := "ideal" NAME "=" poly ("," poly)*
//! poly   := ["-"] term (("+"|"-") term)*
//! term   := [INT ["/" INT]] ["*"] [mono]
//! mono   := NAME ["^" INT] ("*" NAME ["^" INT])*
//! ```
//!
//! `#` starts a line comment. Rational coefficients `p/q` are accepted so
//! that bases over `QQ` print and re-parse losslessly.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};

const KEYWORDS: [&str; 4] = ["ring", "over", "vars", "ideal"];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Name(chars[start..i].iter().collect()),
                    line: line_no,
                    col,
                });
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    line: line_no,
                    col,
                });
            } else if "=,+-*^/()".contains(c) {
                out.push(Token {
                    tok: Tok::Sym(c),
                    line: line_no,
                    col,
                });
                i += 1;
            } else {
                return Err(Error::Syntax {
                    line: line_no,
                    col,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(out)
}

/// A parsed term before it is mapped into a field.
#[derive(Clone, Debug, PartialEq)]
pub struct RawTerm {
    pub num: BigInt,
    pub den: BigInt,
    pub exponents: Vec<u32>,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RawPoly {
    pub terms: Vec<RawTerm>,
}

/// Syntax tree of an ideal file, independent of the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct RingFile {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub ideals: Vec<(String, Vec<RawPoly>)>,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end);
        Error::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn is_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn is_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Name(s), .. }) if s == kw)
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.is_keyword(kw) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_here(format!("expected `{kw}`")))
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_here(format!("expected `{c}`")))
        }
    }

    fn name(&mut self, what: &str) -> Result<(String, usize, usize)> {
        match self.peek() {
            Some(Token {
                tok: Tok::Name(s),
                line,
                col,
            }) if !KEYWORDS.contains(&s.as_str()) => {
                let r = (s.clone(), *line, *col);
                self.pos += 1;
                Ok(r)
            }
            _ => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        match self.peek() {
            Some(Token { tok: Tok::Int(n), .. }) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err_here(format!("expected {what}"))),
        }
    }

    fn starts_term(&self) -> bool {
        match self.peek() {
            Some(Token { tok: Tok::Int(_), .. }) => true,
            Some(Token { tok: Tok::Name(s), .. }) => !KEYWORDS.contains(&s.as_str()),
            _ => false,
        }
    }

    fn header(&mut self) -> Result<(String, FieldSpec, Vec<String>)> {
        self.expect_keyword("ring")?;
        let (name, _, _) = self.name("ring name")?;
        self.expect_keyword("over")?;
        let field = match self.peek() {
            Some(Token { tok: Tok::Name(s), .. }) if s == "QQ" => {
                self.pos += 1;
                FieldSpec::Rationals
            }
            Some(Token { tok: Tok::Name(s), line, col }) if s == "Fp" => {
                let (line, col) = (*line, *col);
                self.pos += 1;
                self.expect_sym('(')?;
                let p = self.int("a prime")?;
                self.expect_sym(')')?;
                let p = p.to_u64().unwrap_or(0);
                FieldSpec::prime(p).map_err(|e| Error::Syntax {
                    line,
                    col,
                    msg: e.to_string(),
                })?
            }
            _ => return Err(self.err_here("expected `QQ` or `Fp(p)`")),
        };
        self.expect_keyword("vars")?;
        let mut vars = Vec::new();
        while let Some(Token { tok: Tok::Name(s), line, col }) = self.peek() {
            if s == "ideal" {
                break;
            }
            if KEYWORDS.contains(&s.as_str()) || s == "QQ" || s == "Fp" {
                return Err(self.err_here(format!("`{s}` cannot be a variable name")));
            }
            if vars.contains(s) {
                return Err(Error::Syntax {
                    line: *line,
                    col: *col,
                    msg: format!("variable `{s}` declared twice"),
                });
            }
            vars.push(s.clone());
            self.pos += 1;
        }
        if vars.is_empty() {
            return Err(self.err_here("expected at least one variable"));
        }
        Ok((name, field, vars))
    }

    fn mono(&mut self, vars: &[String], exps: &mut [u32]) -> Result<()> {
        loop {
            let (v, line, col) = self.name("a variable")?;
            let idx = vars
                .iter()
                .position(|x| *x == v)
                .ok_or(Error::UnknownVariable { name: v, line, col })?;
            let mut e = 1u32;
            if self.is_sym('^') {
                self.pos += 1;
                e = self
                    .int("an exponent")?
                    .to_u32()
                    .ok_or_else(|| self.err_here("exponent too large"))?;
            }
            exps[idx] = exps[idx]
                .checked_add(e)
                .ok_or_else(|| self.err_here("exponent too large"))?;
            if self.is_sym('*') {
                self.pos += 1;
            } else {
                return Ok(());
            }
        }
    }

    fn term(&mut self, vars: &[String], negate: bool) -> Result<RawTerm> {
        let (line, col) = self.peek().map(|t| (t.line, t.col)).unwrap_or(self.end);
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut exps = vec![0u32; vars.len()];
        let mut have_coeff = false;
        if let Some(Token { tok: Tok::Int(n), .. }) = self.peek() {
            num = n.clone();
            have_coeff = true;
            self.pos += 1;
            if self.is_sym('/') {
                self.pos += 1;
                den = self.int("a denominator")?;
                if den.is_zero() {
                    return Err(Error::Syntax {
                        line,
                        col,
                        msg: "zero denominator".into(),
                    });
                }
            }
            if self.is_sym('*') {
                self.pos += 1;
                self.mono(vars, &mut exps)?;
            } else if self.starts_term() {
                self.mono(vars, &mut exps)?;
            }
        } else if self.starts_term() {
            self.mono(vars, &mut exps)?;
        }
        if !have_coeff && exps.iter().all(|&e| e == 0) {
            return Err(self.err_here("expected a term"));
        }
        if negate {
            num = -num;
        }
        Ok(RawTerm {
            num,
            den,
            exponents: exps,
            line,
            col,
        })
    }

    fn poly(&mut self, vars: &[String]) -> Result<RawPoly> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.is_sym('-') {
            self.pos += 1;
            negate = true;
        }
        terms.push(self.term(vars, negate)?);
        loop {
            if self.is_sym('+') || self.is_sym('-') {
                let negate = self.is_sym('-');
                self.pos += 1;
                terms.push(self.term(vars, negate)?);
            } else {
                return Ok(RawPoly { terms });
            }
        }
    }

    fn decl(&mut self, vars: &[String]) -> Result<(String, Vec<RawPoly>)> {
        self.expect_keyword("ideal")?;
        let (name, _, _) = self.name("ideal name")?;
        self.expect_sym('=')?;
        let mut polys = vec![self.poly(vars)?];
        while self.is_sym(',') {
            let comma = self.next().expect("peeked");
            if !(self.starts_term() || self.is_sym('-')) {
                return Err(Error::Syntax {
                    line: comma.line,
                    col: comma.col,
                    msg: "expected a polynomial after `,`".into(),
                });
            }
            polys.push(self.poly(vars)?);
        }
        Ok((name, polys))
    }
}

/// Parse an ideal file into its field-independent syntax tree.
pub fn parse_ring_file(text: &str) -> Result<RingFile> {
    let toks = lex(text)?;
    let end = text
        .lines()
        .enumerate()
        .last()
        .map(|(i, l)| (i + 1, l.chars().count() + 1))
        .unwrap_or((1, 1));
    let mut p = Parser { toks, pos: 0, end };
    let (name, field, vars) = p.header()?;
    let mut ideals: Vec<(String, Vec<RawPoly>)> = Vec::new();
    loop {
        if p.peek().is_none() {
            break;
        }
        let (iname, polys) = p.decl(&vars)?;
        if ideals.iter().any(|(n, _)| *n == iname) {
            return Err(Error::DuplicateIdeal(iname));
        }
        ideals.push((iname, polys));
    }
    if ideals.is_empty() {
        return Err(p.err_here("expected at least one `ideal` declaration"));
    }
    Ok(RingFile {
        name,
        field,
        vars,
        ideals,
    })
}

/// A ring file with every ideal mapped into a concrete field.
#[derive(Clone, Debug)]
pub struct ParsedFile<F: Field> {
    pub name: String,
    pub ring: Arc<Ring<F>>,
    pub ideals: Vec<(String, Vec<Polynomial<F>>)>,
}

impl<F: Field> ParsedFile<F> {
    pub fn ideal(&self, name: &str) -> Result<&[Polynomial<F>]> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p.as_slice())
            .ok_or_else(|| Error::MissingIdeal(name.to_string()))
    }

    pub fn first(&self) -> (&str, &[Polynomial<F>]) {
        let (n, p) = &self.ideals[0];
        (n, p)
    }

    /// Render in the file grammar; `parse(print(f))` reproduces `f`.
    pub fn print(&self) -> String {
        print_ring_file(&self.name, &self.ring, &self.ideals)
    }
}

impl RingFile {
    /// Map coefficients into `field` (which need not be the declared one).
    pub fn build<F: Field>(&self, field: F) -> Result<ParsedFile<F>> {
        let ring = Ring::new(field, self.vars.clone(), crate::MonomialOrder::Grevlex);
        let mut ideals = Vec::with_capacity(self.ideals.len());
        for (name, polys) in &self.ideals {
            let mut out = Vec::with_capacity(polys.len());
            for p in polys {
                let mut raw = Vec::with_capacity(p.terms.len());
                for t in &p.terms {
                    let c = ring.field().from_ratio(&t.num, &t.den).ok_or_else(|| {
                        Error::NonInvertibleCoefficient {
                            coeff: format!("{}/{}", t.num, t.den),
                            field: ring.spec().to_string(),
                            line: t.line,
                            col: t.col,
                        }
                    })?;
                    raw.push((c, Monomial::from_exponents(&t.exponents)));
                }
                out.push(Polynomial::normalize(&ring, raw));
            }
            ideals.push((name.clone(), out));
        }
        Ok(ParsedFile {
            name: self.name.clone(),
            ring,
            ideals,
        })
    }
}

pub fn print_ring_file<F: Field>(
    name: &str,
    ring: &Ring<F>,
    ideals: &[(String, Vec<Polynomial<F>>)],
) -> String {
    let mut s = format!("ring {name} over {} vars {}\n", ring.spec(), ring.vars().join(" "));
    for (iname, polys) in ideals {
        let body: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
        s.push_str(&format!("ideal {iname} = {}\n", body.join(", ")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn parses_minimal_file() {
        let f = parse_ring_file("ring R over Fp(32003) vars x y\nideal I = x^2 - y").unwrap();
        assert_eq!(f.vars, vec!["x", "y"]);
        assert_eq!(f.field, FieldSpec::Prime(32003));
        let p = f.build(PrimeField::default()).unwrap();
        let gens = p.ideal("I").unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].to_string(), "x^2 - y");
    }

    #[test]
    fn trailing_comma_reports_the_comma() {
        let err = parse_ring_file("ring R over QQ vars x y\nideal I = x*y,").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                col: 14,
                msg: "expected a polynomial after `,`".into()
            }
        );
    }

    #[test]
    fn twisted_cubic_is_homogeneous() {
        let text = "# twisted cubic\nring R over QQ vars x0 x1 x2 x3\n\
                    ideal I = x0*x2-x1^2, x0*x3-x1*x2, x1*x3-x2^2\n";
        let p = parse_ring_file(text).unwrap().build(Rationals).unwrap();
        let gens = p.ideal("I").unwrap();
        assert_eq!(gens.len(), 3);
        for g in gens {
            assert!(g.is_homogeneous());
            assert!(g.terms().iter().all(|(_, m)| m.degree() == 2));
        }
    }

    #[test]
    fn error_cases() {
        assert!(matches!(
            parse_ring_file("ring R over QQ vars x\nideal I = x + z"),
            Err(Error::UnknownVariable { ref name, line: 2, col: 15 }) if name == "z"
        ));
        assert!(matches!(
            parse_ring_file("ring R over QQ vars x\nideal I = x\nideal I = x^2"),
            Err(Error::DuplicateIdeal(ref n)) if n == "I"
        ));
        let f = parse_ring_file("ring R over Fp(7) vars x\nideal I = 1/14*x").unwrap();
        assert!(matches!(
            f.build(PrimeField::new(7).unwrap()),
            Err(Error::NonInvertibleCoefficient { line: 2, col: 11, .. })
        ));
        assert!(parse_ring_file("ring R over Fp(9) vars x\nideal I = x").is_err());
        assert!(parse_ring_file("ring R over QQ vars x\nideal I = x x").is_err());
        assert!(parse_ring_file("ring R over QQ vars x").is_err());
    }

    #[test]
    fn coefficients_and_signs() {
        let p = parse_ring_file("ring R over QQ vars x y\nideal I = -2x^2*y + 3/4 y - 5, 0")
            .unwrap()
            .build(Rationals)
            .unwrap();
        let g = p.ideal("I").unwrap();
        assert_eq!(g[0].to_string(), "-2*x^2*y + 3/4*y - 5");
        assert!(g[1].is_zero());
    }

    #[test]
    fn print_parse_print_is_stable() {
        let text = "ring S over Fp(101) vars a b c\nideal J = a*b - 3*c^2 + 50, b^3\nideal K = a\n";
        let p1 = parse_ring_file(text).unwrap().build(PrimeField::new(101).unwrap()).unwrap();
        let s1 = p1.print();
        let p2 = parse_ring_file(&s1).unwrap().build(PrimeField::new(101).unwrap()).unwrap();
        assert_eq!(p2.print(), s1);
    }
}
