//! Graph shorthand: `K5`, `I3`, `P4`, `C6`, `T(3,10)`, `G2(3,5,40)`,
//! `g6:<graph6>`, `join(a,b,...)`, `union(a,b,...)`. In forbidden lists `M<k>`
//! stands for the matching bound `s = k - 1`.

use turan_core::constructions::{NamedConstruction, NamedId};
use turan_core::{decode_graph6, ConstructionExpr};

use crate::error::CliError;

/// One entry of a `--forbid` list.
#[derive(Debug, PartialEq)]
pub enum Forbidden {
    Graph(ConstructionExpr),
    Matching(usize),
}

pub fn parse_expr(text: &str) -> Result<ConstructionExpr, CliError> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_forbidden(text: &str) -> Result<Forbidden, CliError> {
    let t = text.trim();
    if let Some(k) = t.strip_prefix('M') {
        if !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()) {
            let k: usize = k.parse().map_err(|_| bad(text, "matching size out of range"))?;
            if k == 0 {
                return Err(bad(text, "M0 is forbidden in every graph"));
            }
            return Ok(Forbidden::Matching(k - 1));
        }
    }
    parse_expr(t).map(Forbidden::Graph)
}

fn bad(text: &str, why: &str) -> CliError {
    CliError::Parse(format!("cannot parse graph {text:?}: {why}"))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, why: &str) -> CliError {
        CliError::Parse(format!("cannot parse graph {:?} at offset {}: {why}", self.text, self.pos))
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn finish(&mut self) -> Result<(), CliError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len = self.rest().find(|c| !f(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<usize, CliError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        digits.parse().map_err(|_| self.err("number out of range"))
    }

    fn numbers(&mut self, count: usize) -> Result<Vec<usize>, CliError> {
        self.expect('(')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(',')?;
            }
            out.push(self.number()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<ConstructionExpr, CliError> {
        self.skip_ws();
        if self.rest().starts_with("g6:") {
            self.pos += 3;
            // graph6 bytes lie in 63..=126, so ',' and ')' end the code
            let code = self.take_while(|c| ('?'..='~').contains(&c)).to_string();
            return decode_graph6(&code)
                .map(ConstructionExpr::Explicit)
                .map_err(|e| CliError::Parse(format!("g6:{code}: {e}")));
        }
        let name = self.take_while(|c| c.is_ascii_alphabetic()).to_string();
        match name.as_str() {
            "join" | "union" => {
                self.expect('(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(',') {
                    parts.push(self.expr()?);
                }
                self.expect(')')?;
                Ok(if name == "join" {
                    ConstructionExpr::Join(parts)
                } else {
                    ConstructionExpr::Union(parts)
                })
            }
            "T" => {
                let v = self.numbers(2)?;
                Ok(ConstructionExpr::Turan { parts: v[0], order: v[1] })
            }
            "G" => {
                let digit = self.take_while(|c| c.is_ascii_digit()).to_string();
                let id: NamedId = format!("G{digit}").parse().map_err(|_| self.err("expected G1..G6"))?;
                let v = self.numbers(3)?;
                Ok(ConstructionExpr::Named(NamedConstruction {
                    id,
                    p: v[0],
                    s: v[1],
                    n: v[2],
                }))
            }
            "K" => Ok(ConstructionExpr::Clique(self.number()?)),
            "I" => Ok(ConstructionExpr::Independent(self.number()?)),
            "P" => Ok(ConstructionExpr::Path(self.number()?)),
            "C" => Ok(ConstructionExpr::Cycle(self.number()?)),
            "" => Err(self.err("expected a graph")),
            other => Err(self.err(&format!("unknown graph name {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConstructionExpr::*;

    #[test]
    fn shorthand() {
        assert_eq!(parse_expr("K3").unwrap(), Clique(3));
        assert_eq!(
            parse_expr("join(P4, I2)").unwrap(),
            Join(vec![Path(4), Independent(2)])
        );
        assert_eq!(
            parse_expr("union(K3,T(2,5),g6:C~)").unwrap(),
            Union(vec![Clique(3), Turan { parts: 2, order: 5 }, Explicit(turan_core::Graph::complete(4))])
        );
        assert!(matches!(parse_expr("G4(2,3,8)").unwrap(), Named(NamedConstruction { id: NamedId::G4, .. })));
        assert_eq!(parse_forbidden("M3").unwrap(), Forbidden::Matching(2));
        assert_eq!(parse_forbidden("C4").unwrap(), Forbidden::Graph(Cycle(4)));
    }

    #[test]
    fn rejects() {
        for bad in ["", "K", "Q3", "join(K3", "K3 K4", "G7(1,2,3)", "g6:C", "M0"] {
            assert!(parse_forbidden(bad).is_err(), "{bad}");
        }
    }
}
