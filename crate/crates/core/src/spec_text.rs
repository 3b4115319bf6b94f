//! Text form of algebra descriptors.
//!
//! ```text
//! Spec   := Factor (("(+)" | "⊕") Factor)*
//! Factor := "R" | "spin(" INT ")" | "H(" INT "," ("R"|"C"|"H"|"O") ")"
//! ```
//!
//! Whitespace is allowed between tokens. `H(1,K)` and `H(2,K)` are
//! canonicalized to `R` and `spin(n)`; [`parse_spec_raw`] keeps the factors as
//! written for callers that need the literal matrix size.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::jordan::{AlgebraDescriptor, SimpleFactor};
use crate::scalar::ScalarKind;

/// A factor exactly as written in the spec string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RawFactor {
    Real,
    Spin(usize),
    Hermitian { k: usize, scalar: ScalarKind },
}

impl RawFactor {
    pub fn canonical(&self) -> Result<SimpleFactor> {
        match *self {
            RawFactor::Real => Ok(SimpleFactor::RealLine),
            RawFactor::Spin(n) => SimpleFactor::spin(n),
            RawFactor::Hermitian { k, scalar } => SimpleFactor::hermitian(k, scalar),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedSpec {
    pub raw: Vec<RawFactor>,
    pub descriptor: AlgebraDescriptor,
}

pub fn parse_spec(text: &str) -> Result<AlgebraDescriptor> {
    parse_spec_raw(text).map(|p| p.descriptor)
}

pub fn parse_spec_raw(text: &str) -> Result<ParsedSpec> {
    let mut p = Parser { text, pos: 0 };
    let mut raw = vec![p.factor()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !(p.eat("(+)") || p.eat("⊕")) {
            return Err(p.error("expected \"(+)\" or \"⊕\" between factors"));
        }
        raw.push(p.factor()?);
    }
    let factors = raw.iter().map(RawFactor::canonical).collect::<Result<Vec<_>>>()?;
    Ok(ParsedSpec {
        raw,
        descriptor: AlgebraDescriptor::new(factors)?,
    })
}

impl FromStr for AlgebraDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {token:?}")))
        }
    }

    fn error(&self, message: &str) -> Error {
        let found = match self.rest().chars().next() {
            Some(c) => format!("found {c:?}"),
            None => "found end of input".to_string(),
        };
        Error::Parse {
            position: self.pos,
            message: format!("{message}, {found}"),
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn factor(&mut self) -> Result<RawFactor> {
        self.skip_ws();
        if self.eat("spin(") {
            let n = self.int()?;
            self.expect(")")?;
            return Ok(RawFactor::Spin(n));
        }
        if self.eat("H(") {
            let k = self.int()?;
            self.expect(",")?;
            self.skip_ws();
            let scalar = self
                .rest()
                .chars()
                .next()
                .and_then(ScalarKind::from_symbol)
                .ok_or_else(|| self.error("expected one of R, C, H, O"))?;
            self.pos += 1;
            self.expect(")")?;
            return Ok(RawFactor::Hermitian { k, scalar });
        }
        if self.eat("R") {
            return Ok(RawFactor::Real);
        }
        Err(self.error("expected \"R\", \"spin(\" or \"H(\""))
    }
}
