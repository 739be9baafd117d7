//! Parser for the small poset description language.
//!
//! Grammar (whitespace-insensitive):
//!   `P<k>` chain, `V<r>`, `A<r>`, `N`, `B`, `B+`, `B++`, `D<k>`,
//!   `K(<r1>,...,<rs>)`, `AC<r>` antichain,
//!   `otimes(<expr>,<r>,<expr>)`, `oplus(<expr>,<r>)`,
//!   `0` for the empty poset, accepted in operand position only.

use crate::poset::Poset;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("syntax error at offset {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

pub fn parse_poset(input: &str) -> Result<Poset, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let poset = p.expr(false)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("expected end of input"));
    }
    Ok(poset)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), ParseError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{lit}'")))
        }
    }

    fn uint(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<usize>()
            .map_err(|_| ParseError {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn positive(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let v = self.uint()?;
        if v == 0 {
            return Err(ParseError {
                pos: start,
                msg: "nonpositive parameter".into(),
            });
        }
        Ok(v)
    }

    fn expr(&mut self, operand: bool) -> Result<Poset, ParseError> {
        self.skip_ws();
        let at = self.pos;
        let lift = |r: Result<Poset, crate::poset::PosetError>| {
            r.map_err(|e| ParseError {
                pos: at,
                msg: e.to_string(),
            })
        };
        if self.eat("otimes") {
            self.expect("(")?;
            let a = self.expr(true)?;
            self.expect(",")?;
            let r = self.positive()?;
            self.expect(",")?;
            let b = self.expr(true)?;
            self.expect(")")?;
            return lift(a.otimes(r, &b));
        }
        if self.eat("oplus") {
            self.expect("(")?;
            let a = self.expr(true)?;
            self.expect(",")?;
            let r = self.positive()?;
            self.expect(")")?;
            return lift(a.oplus(r));
        }
        if self.eat("0") {
            if !operand {
                return Err(ParseError {
                    pos: at,
                    msg: "the empty poset is only allowed as an otimes/oplus operand".into(),
                });
            }
            return Ok(Poset::empty());
        }
        if self.eat("AC") {
            let r = self.positive()?;
            return lift(Poset::antichain(r));
        }
        if self.eat("B++") {
            return Ok(Poset::butterfly_plus_plus());
        }
        if self.eat("B+") {
            return Ok(Poset::butterfly_plus());
        }
        if self.eat("B") {
            return Ok(Poset::butterfly());
        }
        if self.eat("N") {
            return Ok(Poset::n_poset());
        }
        if self.eat("P") {
            let k = self.positive()?;
            return lift(Poset::chain(k));
        }
        if self.eat("V") {
            let r = self.positive()?;
            return lift(Poset::vee(r));
        }
        if self.eat("A") {
            let r = self.positive()?;
            return lift(Poset::wedge(r));
        }
        if self.eat("D") {
            let k = self.positive()?;
            return lift(Poset::diamond(k));
        }
        if self.eat("K") {
            self.expect("(")?;
            let mut parts = vec![self.positive()?];
            while self.eat(",") {
                parts.push(self.positive()?);
            }
            self.expect(")")?;
            return lift(Poset::complete_multilevel(&parts));
        }
        Err(self.err("unknown name"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_named() {
        let p3 = parse_poset("P3").unwrap();
        assert_eq!(p3.relation_count(), 3);
        assert_eq!(parse_poset("B").unwrap().len(), 4);
        assert_eq!(parse_poset("B+").unwrap().len(), 5);
        assert_eq!(parse_poset("B++").unwrap().relation_count(), 7);
        assert_eq!(parse_poset("N").unwrap().relation_count(), 3);
    }

    #[test]
    fn isomorphic_spellings() {
        let v2 = parse_poset("V2").unwrap();
        assert!(v2.is_isomorphic(&parse_poset("K(1,2)").unwrap()).unwrap());
        let d2 = parse_poset("D2").unwrap();
        assert!(d2.is_isomorphic(&parse_poset("K(1,2,1)").unwrap()).unwrap());
    }

    #[test]
    fn composites_and_whitespace() {
        let q = parse_poset(" otimes ( P1 , 2 , 0 ) ").unwrap();
        assert!(q.is_isomorphic(&parse_poset("V2").unwrap()).unwrap());
        let q = parse_poset("oplus(K(1,2),1)").unwrap();
        assert!(q.is_isomorphic(&parse_poset("D2").unwrap()).unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_poset("P0").is_err());
        assert!(parse_poset("Q3").is_err());
        assert!(parse_poset("K()").is_err());
        assert!(parse_poset("K(0,1)").is_err());
        assert!(parse_poset("0").is_err());
        assert!(parse_poset("otimes(P1,0,P1)").is_err());
        let e = parse_poset("P3x").unwrap_err();
        assert_eq!(e.pos, 2);
        assert!(parse_poset("").is_err());
    }

    #[test]
    fn render_round_trip() {
        let named = [
            "P1",
            "P4",
            "V2",
            "V3",
            "A2",
            "N",
            "B",
            "B+",
            "B++",
            "D2",
            "D3",
            "K(1,2,1)",
            "K(2,3)",
            "AC4",
            "otimes(P2,2,V2)",
            "oplus(B,2)",
        ];
        for s in named {
            let p = parse_poset(s).unwrap();
            let rendered = p.expr().expect("named posets render");
            let q = parse_poset(rendered).unwrap();
            assert!(p.is_isomorphic(&q).unwrap(), "round trip failed for {s}");
        }
    }
}
