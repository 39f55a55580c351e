//! Text syntax for polynomials, matrices, words, tuples and group elements.
//!
//! ```text
//! poly   := ["+"|"-"] prod (("+"|"-") prod)*
//! prod   := pow (("*"|"/") pow | pow)*        juxtaposition only before h, i, (
//! pow    := atom ["^" nat]
//! atom   := nat | "h" | "i" | "(" poly ")" | "-" pow
//! matrix := "[[" poly "," poly "],[" poly "," poly "]]"
//! word   := ["diag(" poly "," poly ")"] ("E(" poly ")")*
//! tuple  := "(" poly "," poly ("," poly)+ ")"
//! group  := "(" ["eta="] poly "," ["m="] int ")"
//! ```
//!
//! Whitespace is ignored everywhere. `i` is only accepted over a field
//! that contains it. Division is by nonzero constants only.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::orbits::{GroupElement, ParamTuple};
use crate::poly::Poly;
use crate::polymat::{DiagPair, EWord, PolyMat2};
use crate::scalar::Field;
use crate::sl2::TripleA;

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let offset = self.chars.get(self.pos).map_or(self.src.len(), |c| c.0);
        let before = &self.src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let msg = match self.peek() {
                Some(got) => format!("expected '{c}', found '{got}'"),
                None => format!("expected '{c}', found end of input"),
            };
            Err(self.error(msg))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        let n = w.chars().count();
        let here: String = self.chars[self.pos..].iter().take(n).map(|c| c.1).collect();
        if here == w {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn small_nat(&mut self) -> Result<u32> {
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| self.error("exponent too large"))
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let n = self.digits()?;
        let n = i64::try_from(n).map_err(|_| self.error("integer too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn poly<F: Field>(&mut self) -> Result<Poly<F>> {
        let mut acc = if self.eat('-') {
            -&self.product::<F>()?
        } else {
            self.eat('+');
            self.product::<F>()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product::<F>()?;
            } else if self.eat('-') {
                acc = &acc - &self.product::<F>()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product<F: Field>(&mut self) -> Result<Poly<F>> {
        let mut acc = self.power::<F>()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power::<F>()?;
            } else if self.peek() == Some('/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.power::<F>()?;
                let Some(c) = d.as_constant().and_then(|c| c.inv()) else {
                    self.pos = at;
                    return Err(self.error("division by a nonconstant or zero polynomial"));
                };
                acc = acc.scale(&c);
            } else if matches!(self.peek(), Some('h' | 'i' | '(')) {
                acc = &acc * &self.power::<F>()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power<F: Field>(&mut self) -> Result<Poly<F>> {
        let base = self.atom::<F>()?;
        if self.eat('^') {
            let n = self.small_nat()?;
            Ok(base.pow(n))
        } else {
            Ok(base)
        }
    }

    fn atom<F: Field>(&mut self) -> Result<Poly<F>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(Poly::constant(F::from_rational(BigRational::from_integer(n))))
            }
            Some('h') => {
                self.pos += 1;
                Ok(Poly::h())
            }
            Some('i') => match F::imaginary_unit() {
                Some(i) => {
                    self.pos += 1;
                    Ok(Poly::constant(i))
                }
                None => Err(self.error(format!("'i' is not available over the {} field", F::NAME))),
            },
            Some('(') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(')')?;
                Ok(p)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-&self.power::<F>()?)
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn scalar<F: Field>(&mut self) -> Result<F> {
        self.skip_ws();
        let at = self.pos;
        let p = self.poly::<F>()?;
        p.as_constant().ok_or_else(|| {
            self.pos = at;
            self.error("expected a constant")
        })
    }

    fn matrix<F: Field>(&mut self) -> Result<PolyMat2<F>> {
        let mut rows = Vec::new();
        self.expect('[')?;
        for r in 0..2 {
            if r == 1 {
                self.expect(',')?;
            }
            self.expect('[')?;
            let a = self.poly()?;
            self.expect(',')?;
            let b = self.poly()?;
            self.expect(']')?;
            rows.push([a, b]);
        }
        self.expect(']')?;
        let [r0, r1]: [[Poly<F>; 2]; 2] = rows.try_into().expect("two rows");
        Ok(PolyMat2 { m: [r0, r1] })
    }

    fn word<F: Field>(&mut self) -> Result<EWord<F>> {
        let mut front = DiagPair::identity();
        let mut seen = false;
        if self.eat_word("diag") {
            self.expect('(')?;
            let d1 = self.scalar::<F>()?;
            self.expect(',')?;
            let at = self.pos;
            let d2 = self.scalar::<F>()?;
            self.expect(')')?;
            front = DiagPair::new(d1, d2).map_err(|_| {
                self.pos = at;
                self.error("diagonal entries must be nonzero")
            })?;
            seen = true;
        }
        let mut factors = Vec::new();
        loop {
            self.eat('*');
            if !self.eat('E') {
                break;
            }
            self.expect('(')?;
            factors.push(self.poly()?);
            self.expect(')')?;
            seen = true;
        }
        if !seen {
            return Err(self.error("expected diag(...) or E(...)"));
        }
        Ok(EWord::new(front, factors))
    }

    fn tuple<F: Field>(&mut self) -> Result<(F, F, Vec<Poly<F>>)> {
        self.expect('(')?;
        let b1 = self.scalar()?;
        self.expect(',')?;
        let b2 = self.scalar()?;
        let mut u = Vec::new();
        while self.eat(',') {
            u.push(self.poly()?);
        }
        self.expect(')')?;
        Ok((b1, b2, u))
    }
}

fn whole<T>(text: &str, f: impl FnOnce(&mut Parser) -> Result<T>) -> Result<T> {
    let mut p = Parser::new(text);
    let v = f(&mut p)?;
    p.finish()?;
    Ok(v)
}

pub fn parse_poly<F: Field>(text: &str) -> Result<Poly<F>> {
    whole(text, |p| p.poly())
}

pub fn parse_scalar<F: Field>(text: &str) -> Result<F> {
    whole(text, |p| p.scalar())
}

pub fn parse_mat<F: Field>(text: &str) -> Result<PolyMat2<F>> {
    whole(text, |p| p.matrix())
}

pub fn parse_eword<F: Field>(text: &str) -> Result<EWord<F>> {
    whole(text, |p| p.word())
}

/// A matrix literal or a word, expanded. Not checked for invertibility.
pub fn parse_matrix_or_word<F: Field>(text: &str) -> Result<PolyMat2<F>> {
    if text.trim_start().starts_with('[') {
        parse_mat(text)
    } else {
        Ok(parse_eword(text)?.expand())
    }
}

/// Like [`parse_matrix_or_word`], but requires a unit.
pub fn parse_unit<F: Field>(text: &str) -> Result<PolyMat2<F>> {
    let m = parse_matrix_or_word(text)?;
    m.require_unit()?;
    Ok(m)
}

/// A list of polynomials separated by `;`.
pub fn parse_poly_list<F: Field>(text: &str) -> Result<Vec<Poly<F>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    whole(text, |p| {
        let mut v = vec![p.poly()?];
        while p.eat(';') {
            v.push(p.poly()?);
        }
        Ok(v)
    })
}

pub fn parse_tuple<F: Field>(text: &str) -> Result<ParamTuple<F>> {
    let (b1, b2, u) = whole(text, |p| p.tuple())?;
    ParamTuple::new(b1, b2, u)
}

pub fn parse_group_element<F: Field>(text: &str) -> Result<GroupElement<F>> {
    let (eta, m) = whole(text, |p| {
        p.expect('(')?;
        if p.eat_word("eta") {
            p.expect('=')?;
        }
        let eta = p.scalar::<F>()?;
        p.expect(',')?;
        if p.eat('m') {
            p.expect('=')?;
        }
        let m = p.int()?;
        p.expect(')')?;
        Ok((eta, m))
    })?;
    GroupElement::new(eta, m)
}

/// `a_-,a_0,a_+`, optionally parenthesised.
pub fn parse_triple(text: &str) -> Result<TripleA> {
    let (a, b, c) = whole(text, |p| {
        let paren = p.eat('(');
        let a = p.int()?;
        p.expect(',')?;
        let b = p.int()?;
        p.expect(',')?;
        let c = p.int()?;
        if paren {
            p.expect(')')?;
        }
        Ok((a, b, c))
    })?;
    let nat = |x: i64| u32::try_from(x).map_err(|_| Error::domain(format!("triple entry {x} must be >= 0")));
    let zero = i32::try_from(b).map_err(|_| Error::domain("triple entry out of range"))?;
    TripleA::new(nat(a)?, zero, nat(c)?)
}
