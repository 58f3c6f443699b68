//! Group expressions: products of family atoms such as `Z(5) x Dstar(3)`.
//!
//! ```text
//! Expr := Atom ('x' Atom)*
//! Atom := Z(n) | Dstar(p) | Dprime(k,p) | Tstar | Tprime(k) | Ostar | Istar
//! ```
//!
//! Atom names are case-insensitive and whitespace is ignored. Errors carry
//! the byte offset of the offending input.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{self, Family, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    pub atoms: Vec<Family>,
}

impl GroupExpr {
    pub fn atom(f: Family) -> GroupExpr {
        GroupExpr { atoms: vec![f] }
    }

    /// Group order, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        self.atoms
            .iter()
            .try_fold(1u64, |acc, f| acc.checked_mul(f.order()))
    }

    /// Check atom parameters without building anything.
    pub fn validate(&self) -> Result<()> {
        self.atoms.iter().try_for_each(Family::validate)
    }

    /// Build the concrete group as a left-nested direct product.
    pub fn build(&self, family_cap: u64, product_cap: u64) -> Result<FiniteGroup> {
        self.validate()?;
        if let Some(n) = self.order() {
            let entries = n.saturating_mul(n);
            let cap = if self.atoms.len() > 1 {
                product_cap
            } else {
                family_cap
            };
            if entries > cap {
                return Err(Error::resource(
                    format!("{self} multiplication table entries"),
                    entries,
                    cap,
                ));
            }
        }
        let mut g = group::construct_family_with_cap(self.atoms[0], family_cap)?;
        for f in &self.atoms[1..] {
            let h = group::construct_family_with_cap(*f, family_cap)?;
            g = group::direct_product_with_cap(&g, &h, product_cap)?;
        }
        Ok(g.renamed(self.to_string()))
    }

    pub fn build_default(&self) -> Result<FiniteGroup> {
        self.build(
            group::DEFAULT_FAMILY_MAX_ENTRIES,
            group::DEFAULT_PRODUCT_MAX_ENTRIES,
        )
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupExpr> {
        parse_group_expr(s)
    }
}

pub fn parse_group_expr(s: &str) -> Result<GroupExpr> {
    let mut p = ExprParser {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut atoms = vec![p.atom()?];
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'x') | Some(b'X') => {
                p.pos += 1;
                atoms.push(p.atom()?);
            }
            Some(_) => return Err(Error::parse(p.pos, "expected 'x' or end of input")),
        }
    }
    Ok(GroupExpr { atoms })
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a non-negative integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn args(&mut self, name: &str, arity: usize) -> Result<Vec<u64>> {
        self.skip_ws();
        if self.peek() != Some(b'(') {
            if arity == 0 {
                return Ok(Vec::new());
            }
            return Err(Error::parse(self.pos, format!("expected '(' after {name}")));
        }
        let open = self.pos;
        self.pos += 1;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b')') {
            loop {
                out.push(self.number()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    _ => break,
                }
            }
        }
        self.expect(b')')?;
        if out.len() != arity {
            return Err(Error::parse(
                open,
                format!("{name} takes {arity} argument(s), got {}", out.len()),
            ));
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Family> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        if !matches!(rest.first(), Some(c) if c.is_ascii_alphabetic()) {
            return Err(Error::parse(start, "expected a group atom"));
        }
        // longest known name that prefixes the input, so `tstarxz(3)` splits
        const NAMES: [&str; 7] = ["dprime", "tprime", "dstar", "tstar", "ostar", "istar", "z"];
        let Some(name) = NAMES
            .iter()
            .find(|n| rest.len() >= n.len() && rest[..n.len()].eq_ignore_ascii_case(n.as_bytes()))
        else {
            return Err(Error::parse(start, "unknown group atom"));
        };
        self.pos += name.len();
        let small = |v: u64, what: &str| -> Result<u32> {
            u32::try_from(v).map_err(|_| Error::parse(start, format!("{what} too large")))
        };
        let f = match *name {
            "z" => Family::Cyclic {
                n: self.args("Z", 1)?[0],
            },
            "dstar" => Family::BinaryDihedral {
                p: self.args("Dstar", 1)?[0],
            },
            "dprime" => {
                let a = self.args("Dprime", 2)?;
                Family::DPrime {
                    k: small(a[0], "k")?,
                    p: a[1],
                }
            }
            "tstar" => {
                self.args("Tstar", 0)?;
                Family::TStar
            }
            "tprime" => Family::TPrime {
                k: small(self.args("Tprime", 1)?[0], "k")?,
            },
            "ostar" => {
                self.args("Ostar", 0)?;
                Family::OStar
            }
            "istar" => {
                self.args("Istar", 0)?;
                Family::IStar
            }
            _ => unreachable!(),
        };
        Ok(f)
    }
}
