//! The textual element syntax shared by the command line and the cache
//! files: a sum of bracketed comma-separated index lists, e.g.
//! `[1,2]+[2,1]`; the unit is `[]` and zero is `0`. Whitespace is ignored
//! everywhere. [`Element`]'s `Display` writes the same grammar back in
//! canonical term order, so `parse(display(e)) == e`.

use crate::algebra::{Element, Monomial};
use crate::{Error, Result};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(self.error(format!(
                "expected '{}', found '{}'",
                byte as char, b as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", byte as char))),
        }
    }

    fn parse_index(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a generator index"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: u32 = digits.parse().map_err(|_| Error::Parse {
            position: start,
            message: format!("index '{digits}' does not fit in 32 bits"),
        })?;
        if value == 0 {
            return Err(Error::Parse {
                position: start,
                message: "generator indices start at 1".into(),
            });
        }
        Ok(value)
    }

    fn parse_monomial(&mut self) -> Result<Monomial> {
        self.expect(b'[')?;
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Monomial::unit());
        }
        let mut indices = vec![self.parse_index()?];
        loop {
            match self.bump() {
                Some(b',') => indices.push(self.parse_index()?),
                Some(b']') => return Ok(Monomial::new(indices)),
                Some(b) => {
                    self.pos -= 1;
                    return Err(self.error(format!("expected ',' or ']', found '{}'", b as char)));
                }
                None => return Err(self.error("unterminated monomial, expected ']'")),
            }
        }
    }
}

/// Parses the shared element grammar. Errors carry the byte position of the
/// offending character in the original input.
pub fn parse_element(input: &str) -> Result<Element> {
    let mut cur = Cursor::new(input);
    match cur.peek() {
        None => return Err(cur.error("empty input, expected an element")),
        Some(b'0') => {
            cur.pos += 1;
            if let Some(b) = cur.peek() {
                return Err(cur.error(format!("unexpected '{}' after '0'", b as char)));
            }
            return Ok(Element::zero());
        }
        _ => {}
    }
    let mut out = Element::zero();
    out.toggle(cur.parse_monomial()?);
    loop {
        match cur.bump() {
            Some(b'+') => out.toggle(cur.parse_monomial()?),
            Some(b) => {
                cur.pos -= 1;
                return Err(cur.error(format!("expected '+' or end of input, found '{}'", b as char)));
            }
            None => return Ok(out),
        }
    }
}
