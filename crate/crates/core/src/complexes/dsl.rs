//! Text form of subcomplex expressions.
//!
//! ```text
//! expr    := term ( '|' term )*
//! term    := factor ( '&' factor )*
//! factor  := 'full'
//!          | 'rainbow'
//!          | 'skeleton' '(' INT ')'
//!          | 'induced' '(' items ')'
//!          | 'atmost' '(' INT ';' items ')'
//!          | '(' expr ')'
//! items   := item ( ',' item )*
//! item    := INT | INT '..' INT          (ranges are inclusive)
//! ```
//!
//! `&` binds tighter than `|`. Whitespace is insignificant. Errors carry the
//! byte offset where parsing failed.

use super::Subcomplex;
use crate::error::{Error, Result};

/// Parses a subcomplex expression. `rainbow` is left unbound; see
/// [`Subcomplex::bind_coloring`].
pub fn parse_subcomplex(text: &str) -> Result<Subcomplex> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Subcomplex> {
        let mut e = self.term()?;
        while self.eat(b'|') {
            e = e.union(self.term()?);
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Subcomplex> {
        let mut e = self.factor()?;
        while self.eat(b'&') {
            e = e.intersect(self.factor()?);
        }
        Ok(e)
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().map_err(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn items(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            let lo = self.int()?;
            self.skip_ws();
            if self.src[self.pos..].starts_with(b"..") {
                self.pos += 2;
                let at = self.pos;
                let hi = self.int()?;
                if hi < lo {
                    self.pos = at;
                    return Err(self.error(format!("empty range {lo}..{hi}")));
                }
                out.extend(lo..=hi);
            } else {
                out.push(lo);
            }
            if !self.eat(b',') {
                return Ok(out);
            }
        }
    }

    fn factor(&mut self) -> Result<Subcomplex> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(e);
        }
        let start = self.pos;
        match self.ident() {
            "full" => Ok(Subcomplex::Full),
            "rainbow" => Ok(Subcomplex::Rainbow(None)),
            "skeleton" => {
                self.expect(b'(')?;
                let k = self.int()?;
                self.expect(b')')?;
                Ok(Subcomplex::Skeleton(k))
            }
            "induced" => {
                self.expect(b'(')?;
                let v = self.items()?;
                self.expect(b')')?;
                Ok(Subcomplex::induced(v))
            }
            "atmost" => {
                self.expect(b'(')?;
                let s = self.int()?;
                self.expect(b';')?;
                let v = self.items()?;
                self.expect(b')')?;
                Ok(Subcomplex::at_most(s, v))
            }
            "" => Err(self.error("expected a subcomplex")),
            other => {
                let msg = format!("unknown constructor '{other}'");
                self.pos = start;
                self.skip_ws();
                Err(self.error(msg))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_constructors() {
        assert_eq!(parse_subcomplex("skeleton(1)").unwrap(), Subcomplex::Skeleton(1));
        assert_eq!(parse_subcomplex(" induced( 0..2 , 5 ) ").unwrap(), Subcomplex::induced([0, 1, 2, 5]));
        assert_eq!(parse_subcomplex("atmost(1; 3,1,2)").unwrap(), Subcomplex::at_most(1, [1, 2, 3]));
        assert_eq!(parse_subcomplex("rainbow").unwrap(), Subcomplex::Rainbow(None));
        assert_eq!(parse_subcomplex("full").unwrap(), Subcomplex::Full);
    }

    #[test]
    fn precedence_and_parentheses() {
        let e = parse_subcomplex("skeleton(0) | induced(0,1) & skeleton(1)").unwrap();
        assert_eq!(
            e,
            Subcomplex::Skeleton(0).union(Subcomplex::induced([0, 1]).intersect(Subcomplex::Skeleton(1)))
        );
        let g = parse_subcomplex("(skeleton(0) | induced(0,1)) & skeleton(1)").unwrap();
        assert_eq!(
            g,
            Subcomplex::Skeleton(0).union(Subcomplex::induced([0, 1])).intersect(Subcomplex::Skeleton(1))
        );
    }

    #[test]
    fn display_round_trips() {
        for text in ["skeleton(0) | induced(0,1) & atmost(2; 0..3)", "rainbow & (full | skeleton(3))"] {
            let e = parse_subcomplex(text).unwrap();
            assert_eq!(parse_subcomplex(&e.to_string()).unwrap(), e);
        }
    }

    fn position_of(text: &str) -> usize {
        match parse_subcomplex(text) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn errors_report_positions() {
        assert_eq!(position_of("skeleton("), 9);
        assert_eq!(position_of("skeleton(1"), 10);
        assert_eq!(position_of("skeleton(1) &"), 13);
        assert_eq!(position_of("  bogus(1)"), 2);
        assert_eq!(position_of("induced(3..1)"), 11);
        assert_eq!(position_of("atmost(1, 2)"), 8);
        assert_eq!(position_of("full full"), 5);
        assert_eq!(position_of(""), 0);
    }
}
