//! Words over named generators and finite presentations.
//!
//! Syntax accepted by [`parse_presentation`]:
//!
//! ```text
//! <a,b | (a*b)^2 = a^3 = b^3>
//! <x,y | x^8 = 1, y^3 = 1, x*y^-1 = y*x>
//! ```
//!
//! Generators are single ASCII letters. `*` between factors is optional,
//! exponents may be negative and may be wrapped in braces (`y^{-1}`), and `1`
//! denotes the empty word. A chain `u = v = w` contributes the relators
//! `u v^-1` and `v w^-1`.

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

pub type Word = Vec<Letter>;

/// Freely reduce a word.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

/// Cyclically reduce a freely reduced word.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inverse() {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Build from generator names and relation strings like `"(ab)^2=a^3"`.
    pub fn new(generators: &[char], relations: &[&str]) -> Result<Presentation> {
        let mut relators = Vec::new();
        for r in relations {
            let mut p = Parser::new(r, generators);
            relators.extend(p.relation()?);
            p.skip_ws();
            if !p.at_end() {
                return Err(Error::parse(p.pos, "trailing input in relation"));
            }
        }
        Presentation::checked(generators.to_vec(), relators)
    }

    fn checked(generators: Vec<char>, relators: Vec<Word>) -> Result<Presentation> {
        if generators.is_empty() {
            return Err(Error::Presentation("no generators".into()));
        }
        let relators: Vec<Word> = relators
            .into_iter()
            .map(|r| cyclic_reduce(&r))
            .filter(|r| !r.is_empty())
            .collect();
        if relators.is_empty() {
            return Err(Error::Presentation(
                "empty relator set (free groups are infinite)".into(),
            ));
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }
}

/// Parse `<gens | relations>`.
pub fn parse_presentation(s: &str) -> Result<Presentation> {
    let mut p = Parser::new(s, &[]);
    p.expect('<')?;
    let mut gens = Vec::new();
    loop {
        p.skip_ws();
        match p.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                if gens.contains(&c) {
                    return Err(Error::parse(p.pos, format!("duplicate generator '{c}'")));
                }
                gens.push(c);
                p.bump();
            }
            _ => return Err(Error::parse(p.pos, "expected generator letter")),
        }
        p.skip_ws();
        match p.peek() {
            Some(',') => p.bump(),
            Some('|') => {
                p.bump();
                break;
            }
            _ => return Err(Error::parse(p.pos, "expected ',' or '|'")),
        }
    }
    p.gens = gens.clone();
    let mut relators = Vec::new();
    p.skip_ws();
    if p.peek() != Some('>') {
        loop {
            relators.extend(p.relation()?);
            p.skip_ws();
            match p.peek() {
                Some(',') => p.bump(),
                Some('>') => break,
                _ => return Err(Error::parse(p.pos, "expected ',' or '>'")),
            }
        }
    }
    p.expect('>')?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::parse(p.pos, "trailing input after '>'"));
    }
    Presentation::checked(gens, relators)
}

/// Parse a single word over the given generator names.
pub fn parse_word(s: &str, generators: &[char]) -> Result<Word> {
    let mut p = Parser::new(s, generators);
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(Error::parse(p.pos, "trailing input in word"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: Vec<char>,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, gens: &[char]) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            gens: gens.to_vec(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{c}'")))
        }
    }

    fn relation(&mut self) -> Result<Vec<Word>> {
        let mut sides = vec![self.word()?];
        loop {
            self.skip_ws();
            if self.peek() == Some('=') {
                self.bump();
                sides.push(self.word()?);
            } else {
                break;
            }
        }
        if sides.len() == 1 {
            return Ok(sides);
        }
        Ok(sides
            .windows(2)
            .map(|uv| {
                let mut r = uv[0].clone();
                r.extend(invert(&uv[1]));
                free_reduce(&r)
            })
            .collect())
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        if self.peek() == Some('1') {
            self.bump();
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') if !first => {
                    self.bump();
                    self.skip_ws();
                    w.extend(self.factor()?);
                }
                Some(c) if c == '(' || c.is_ascii_alphabetic() => w.extend(self.factor()?),
                _ if first => return Err(Error::parse(self.pos, "expected a word")),
                _ => break,
            }
            first = false;
        }
        Ok(free_reduce(&w))
    }

    fn factor(&mut self) -> Result<Word> {
        self.skip_ws();
        let base = match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.word()?;
                self.expect(')')?;
                w
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let Some(gen) = self.gens.iter().position(|&g| g == c) else {
                    return Err(Error::parse(self.pos, format!("unknown generator '{c}'")));
                };
                self.bump();
                vec![Letter { gen, inv: false }]
            }
            _ => return Err(Error::parse(self.pos, "expected generator or '('")),
        };
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let e = self.exponent()?;
        let unit = if e < 0 { invert(&base) } else { base };
        let mut out = Vec::with_capacity(unit.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            out.extend_from_slice(&unit);
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let braced = self.peek() == Some('{');
        if braced {
            self.bump();
            self.skip_ws();
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.bump();
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(Error::parse(self.pos, "expected exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = digits
            .parse()
            .ok()
            .filter(|&v: &i64| v <= 1_000_000)
            .ok_or_else(|| Error::parse(start, "exponent too large"))?;
        if braced {
            self.expect('}')?;
        }
        Ok(if neg { -v } else { v })
    }
}
