//! Expression parsers for the two calculators.
//!
//! Cohomology grammar (tightest first): `^` exponent, `.` cup, `o` transfer,
//! `+` sum.  Atoms are `g[l,n]`, `u[m]`, `1`, and parenthesised sums.
//!
//! Homology grammar: `^` exponent, `*` Pontryagin product, `+` sum.  Atoms are
//! `q[a,b,...]` (applied to the fundamental class, normalising on the way),
//! `i`, `1`, and parenthesised sums.

use std::fmt;

use symhopf::cohomology::{self, GatheredMonomial};
use symhopf::f2::F2Sum;
use symhopf::homology::{self, NakaokaMonomial};

/// Error produced when an expression fails to parse.
#[derive(Debug, Clone, thiserror::Error)]
#[error("parse error at byte {pos}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset of the offending token in the input.
    pub pos: usize,
    /// What the parser was prepared to accept.
    pub expected: String,
    /// What it saw instead.
    pub found: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Gen,
    Unit,
    Iota,
    QSeq,
    Transfer,
    Num(u32),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Dot,
    Star,
    Caret,
    Plus,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Gen => write!(f, "`g`"),
            Tok::Unit => write!(f, "`u`"),
            Tok::Iota => write!(f, "`i`"),
            Tok::QSeq => write!(f, "`q`"),
            Tok::Transfer => write!(f, "`o`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Dot => write!(f, "`.`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'g' => Tok::Gen,
            b'u' => Tok::Unit,
            b'i' => Tok::Iota,
            b'q' => Tok::QSeq,
            b'o' => Tok::Transfer,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'.' => Tok::Dot,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'+' => Tok::Plus,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n: u32 = text.parse().map_err(|_| ParseError {
                    pos: start,
                    expected: "a number below 2^32".into(),
                    found: format!("`{text}`"),
                })?;
                toks.push((Tok::Num(n), start));
                continue;
            }
            _ => {
                return Err(ParseError {
                    pos: i,
                    expected: "a token".into(),
                    found: format!("`{}`", &input[i..i + 1]),
                })
            }
        };
        toks.push((tok, i));
        i += 1;
    }
    toks.push((Tok::End, bytes.len()));
    Ok(toks)
}

struct Cursor {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Cursor {
    fn peek(&self) -> Tok {
        self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.fail(expected))
        }
    }

    fn fail(&self, expected: &str) -> ParseError {
        ParseError {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn number(&mut self, expected: &str) -> Result<u32, ParseError> {
        match self.peek() {
            Tok::Num(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.fail(expected)),
        }
    }

    /// Bracketed comma-separated numbers, the opening `[` not yet consumed.
    fn number_list(&mut self) -> Result<Vec<u32>, ParseError> {
        self.expect(Tok::LBracket, "`[`")?;
        let mut out = vec![self.number("a number")?];
        while self.peek() == Tok::Comma {
            self.bump();
            out.push(self.number("a number")?);
        }
        self.expect(Tok::RBracket, "`]` or `,`")?;
        Ok(out)
    }
}

/// Parse a cohomology expression into a sum of gathered monomials.
pub fn cohomology_expr(input: &str) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    let mut cur = Cursor { toks: lex(input)?, at: 0 };
    let sum = coh_sum(&mut cur)?;
    cur.expect(Tok::End, "end of input")?;
    Ok(sum)
}

fn coh_sum(cur: &mut Cursor) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    let mut acc = coh_transfer(cur)?;
    while cur.peek() == Tok::Plus {
        cur.bump();
        acc += coh_transfer(cur)?;
    }
    Ok(acc)
}

fn coh_transfer(cur: &mut Cursor) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    let mut acc = coh_cup(cur)?;
    while cur.peek() == Tok::Transfer {
        cur.bump();
        let rhs = coh_cup(cur)?;
        acc = cohomology::transfer_sum(&acc, &rhs);
    }
    Ok(acc)
}

fn coh_cup(cur: &mut Cursor) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    let mut acc = coh_power(cur)?;
    while cur.peek() == Tok::Dot {
        cur.bump();
        let rhs = coh_power(cur)?;
        acc = cohomology::cup_sum(&acc, &rhs);
    }
    Ok(acc)
}

fn coh_power(cur: &mut Cursor) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    let mut acc = coh_atom(cur)?;
    while cur.peek() == Tok::Caret {
        let caret_pos = cur.pos();
        cur.bump();
        let e = cur.number("an exponent")?;
        acc = coh_cup_power(&acc, e, caret_pos)?;
    }
    Ok(acc)
}

/// Iterated cup power.  Exponent zero is the unit class of the common
/// component, which only exists when every term sits on one component.
fn coh_cup_power(
    base: &F2Sum<GatheredMonomial>,
    e: u32,
    caret_pos: usize,
) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    if e == 0 {
        let mut comps = base.iter().map(GatheredMonomial::component);
        let Some(c) = comps.next() else {
            return Err(ParseError {
                pos: caret_pos,
                expected: "a nonzero base for exponent 0".into(),
                found: "the zero class".into(),
            });
        };
        if comps.any(|other| other != c) {
            return Err(ParseError {
                pos: caret_pos,
                expected: "a single-component base for exponent 0".into(),
                found: "a mixed-component sum".into(),
            });
        }
        return Ok(F2Sum::singleton(GatheredMonomial::unit(c)));
    }
    let mut acc = base.clone();
    for _ in 1..e {
        acc = cohomology::cup_sum(&acc, base);
    }
    Ok(acc)
}

fn coh_atom(cur: &mut Cursor) -> Result<F2Sum<GatheredMonomial>, ParseError> {
    match cur.peek() {
        Tok::Gen => {
            cur.bump();
            let pos = cur.pos();
            let args = cur.number_list()?;
            if args.len() != 2 {
                return Err(ParseError {
                    pos,
                    expected: "`g[level,count]` with two arguments".into(),
                    found: format!("{} arguments", args.len()),
                });
            }
            if args[0] == 0 {
                return Err(ParseError {
                    pos,
                    expected: "a generator level of at least 1 (use `u[m]` for units)".into(),
                    found: "level 0".into(),
                });
            }
            Ok(F2Sum::singleton(GatheredMonomial::generator(args[0], args[1])))
        }
        Tok::Unit => {
            cur.bump();
            let pos = cur.pos();
            let args = cur.number_list()?;
            if args.len() != 1 {
                return Err(ParseError {
                    pos,
                    expected: "`u[m]` with one argument".into(),
                    found: format!("{} arguments", args.len()),
                });
            }
            Ok(F2Sum::singleton(GatheredMonomial::unit(args[0])))
        }
        Tok::Num(1) => {
            cur.bump();
            Ok(F2Sum::singleton(GatheredMonomial::one()))
        }
        Tok::LParen => {
            cur.bump();
            let inner = coh_sum(cur)?;
            cur.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        }
        _ => Err(cur.fail("`g[l,n]`, `u[m]`, `1`, or `(`")),
    }
}

/// Parse a homology expression into a sum of Nakaoka monomials.
pub fn homology_expr(input: &str) -> Result<F2Sum<NakaokaMonomial>, ParseError> {
    let mut cur = Cursor { toks: lex(input)?, at: 0 };
    let sum = hom_sum(&mut cur)?;
    cur.expect(Tok::End, "end of input")?;
    Ok(sum)
}

fn hom_sum(cur: &mut Cursor) -> Result<F2Sum<NakaokaMonomial>, ParseError> {
    let mut acc = hom_product(cur)?;
    while cur.peek() == Tok::Plus {
        cur.bump();
        acc += hom_product(cur)?;
    }
    Ok(acc)
}

fn hom_product(cur: &mut Cursor) -> Result<F2Sum<NakaokaMonomial>, ParseError> {
    let mut acc = hom_power(cur)?;
    while cur.peek() == Tok::Star {
        cur.bump();
        let rhs = hom_power(cur)?;
        acc = hom_mul(&acc, &rhs);
    }
    Ok(acc)
}

fn hom_mul(
    a: &F2Sum<NakaokaMonomial>,
    b: &F2Sum<NakaokaMonomial>,
) -> F2Sum<NakaokaMonomial> {
    let mut out = F2Sum::zero();
    for x in a.iter() {
        for y in b.iter() {
            out.toggle(x.pontryagin(y));
        }
    }
    out
}

fn hom_power(cur: &mut Cursor) -> Result<F2Sum<NakaokaMonomial>, ParseError> {
    let mut acc = hom_atom(cur)?;
    while cur.peek() == Tok::Caret {
        cur.bump();
        let e = cur.number("an exponent")?;
        acc = if e == 0 {
            F2Sum::singleton(NakaokaMonomial::one())
        } else {
            let base = acc.clone();
            let mut powered = acc;
            for _ in 1..e {
                powered = hom_mul(&powered, &base);
            }
            powered
        };
    }
    Ok(acc)
}

fn hom_atom(cur: &mut Cursor) -> Result<F2Sum<NakaokaMonomial>, ParseError> {
    match cur.peek() {
        Tok::QSeq => {
            cur.bump();
            let entries = cur.number_list()?;
            Ok(homology::apply_qseq(&entries))
        }
        Tok::Iota => {
            cur.bump();
            Ok(F2Sum::singleton(NakaokaMonomial::iota_power(1)))
        }
        Tok::Num(1) => {
            cur.bump();
            Ok(F2Sum::singleton(NakaokaMonomial::one()))
        }
        Tok::LParen => {
            cur.bump();
            let inner = hom_sum(cur)?;
            cur.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        }
        _ => Err(cur.fail("`q[a,b,...]`, `i`, `1`, or `(`")),
    }
}

/// Parse a bare operation sequence `q[a,b,...]`, used by `normalize`.
pub fn qseq_only(input: &str) -> Result<Vec<u32>, ParseError> {
    let mut cur = Cursor { toks: lex(input)?, at: 0 };
    cur.expect(Tok::QSeq, "`q`")?;
    let entries = cur.number_list()?;
    cur.expect(Tok::End, "end of input")?;
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use symhopf::cohomology::Profile;

    #[test]
    fn cohomology_atoms_and_precedence() {
        let x = cohomology_expr("g[1,1]^2 o g[1,1]^3").unwrap();
        assert_eq!(x.len(), 1);
        let m = x.iter().next().unwrap();
        assert_eq!(m.component(), 4);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.blocks().len(), 2);

        let direct = cohomology_expr("g[1,2] . (g[1,1] o g[1,1]^2)").unwrap();
        let spelled = cohomology::cup_sum(
            &cohomology_expr("g[1,2]").unwrap(),
            &cohomology_expr("g[1,1] o g[1,1]^2").unwrap(),
        );
        assert_eq!(direct, spelled);
    }

    #[test]
    fn units_and_one() {
        assert_eq!(
            cohomology_expr("1").unwrap(),
            F2Sum::singleton(GatheredMonomial::one())
        );
        assert_eq!(
            cohomology_expr("u[0]").unwrap(),
            F2Sum::singleton(GatheredMonomial::one())
        );
        let u3 = cohomology_expr("u[3]").unwrap();
        assert_eq!(u3, F2Sum::singleton(GatheredMonomial::unit(3)));
        let gathered = cohomology_expr("u[1] o u[2]").unwrap();
        assert_eq!(gathered, F2Sum::singleton(GatheredMonomial::unit(3)));
        assert!(cohomology_expr("u[2] o u[2]").unwrap().is_zero());
    }

    #[test]
    fn exponent_zero_needs_one_component() {
        let e = cohomology_expr("g[1,1]^0").unwrap();
        assert_eq!(e, F2Sum::singleton(GatheredMonomial::unit(2)));
        assert!(cohomology_expr("(g[1,1] + g[1,2])^0").is_err());
        let h = homology_expr("q[1]^0").unwrap();
        assert_eq!(h, F2Sum::singleton(NakaokaMonomial::one()));
    }

    #[test]
    fn homology_grammar() {
        let x = homology_expr("q[3]^2 * i^2").unwrap();
        assert_eq!(x.len(), 1);
        let m = x.iter().next().unwrap();
        assert_eq!(m.component(), 6);
        assert_eq!(m.degree(), 6);
        assert_eq!(m.iota_exp(), 2);
        assert_eq!(m.factors().len(), 2);

        let inadmissible = homology_expr("q[2,0]").unwrap();
        let rewritten = homology_expr("q[0,1]").unwrap();
        assert_eq!(inadmissible, rewritten);
        assert!(homology_expr("q[3,0]").unwrap().is_zero());
    }

    #[test]
    fn level_zero_generator_is_rejected() {
        let err = cohomology_expr("g[0,2]").unwrap_err();
        assert!(err.expected.contains("u[m]"));
    }

    #[test]
    fn errors_carry_positions() {
        let err = cohomology_expr("g[1,1] . ").unwrap_err();
        assert_eq!(err.pos, 9);
        let err = cohomology_expr("g[1 1]").unwrap_err();
        assert_eq!(err.pos, 4);
        let err = homology_expr("q[1] * g[1,1]").unwrap_err();
        assert_eq!(err.pos, 7);
        assert!(cohomology_expr("").is_err());
    }

    #[test]
    fn generator_count_zero_is_the_empty_monomial() {
        assert_eq!(
            cohomology_expr("g[2,0]").unwrap(),
            F2Sum::singleton(GatheredMonomial::one())
        );
        let p = Profile::single(2, 1);
        assert_eq!(p.top_level(), 2);
    }
}
