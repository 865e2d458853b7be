//! Text grammar for signatures.
//!
//! ```text
//! sig    := orient (';' field)*
//! orient := 'O' | 'N'
//! field  := 'g=' INT | 'pun=' INT | 'cones=' INT (',' INT)* | 'bdry=' bc (',' bc)*
//! bc     := 'm' | 'r(' [INT (',' INT)*] ')'
//! ```
//!
//! Whitespace is ignored anywhere. Fields may appear in any order, each at
//! most once, and `g` is mandatory. Positions in errors are byte offsets into
//! the original text.

use crate::signature::{BoundaryCircle, Signature, SignatureError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid signature: {0}")]
    Semantic(#[from] SignatureError),
}

/// Parses and canonicalizes a signature.
pub fn parse_signature(text: &str) -> Result<Signature, ParseError> {
    Parser::new(text).signature()
}

struct Parser {
    // Non-whitespace characters with their byte offsets.
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

#[derive(Default)]
struct Fields {
    genus: Option<u32>,
    punctures: Option<u32>,
    cones: Option<Vec<u32>>,
    boundary: Option<Vec<BoundaryCircle>>,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Parser {
            chars,
            pos: 0,
            end: text.len(),
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d)) {
                Some(v) => v,
                None => {
                    self.pos = start;
                    return self.error("integer too large");
                }
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected an integer");
        }
        Ok(value)
    }

    fn int_list(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn boundary_circle(&mut self) -> Result<BoundaryCircle, ParseError> {
        if self.eat('m') {
            return Ok(BoundaryCircle::Manifold);
        }
        if self.eat('r') {
            self.expect('(')?;
            let corners = if self.peek() == Some(')') {
                Vec::new()
            } else {
                self.int_list()?
            };
            self.expect(')')?;
            return Ok(BoundaryCircle::Mirror { corners });
        }
        self.error("expected boundary circle 'm' or 'r(...)'")
    }

    fn keyword(&mut self) -> Result<String, ParseError> {
        let mut name = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphabetic()) {
            name.push(c);
            self.pos += 1;
        }
        Ok(name)
    }

    fn field(&mut self, fields: &mut Fields) -> Result<(), ParseError> {
        let start = self.pos;
        let name = self.keyword()?;
        let duplicate = match name.as_str() {
            "g" => fields.genus.is_some(),
            "pun" => fields.punctures.is_some(),
            "cones" => fields.cones.is_some(),
            "bdry" => fields.boundary.is_some(),
            _ => {
                self.pos = start;
                return self.error(format!("unknown field {name:?}"));
            }
        };
        if duplicate {
            self.pos = start;
            return self.error(format!("field {name:?} given more than once"));
        }
        self.expect('=')?;
        match name.as_str() {
            "g" => fields.genus = Some(self.int()?),
            "pun" => fields.punctures = Some(self.int()?),
            "cones" => fields.cones = Some(self.int_list()?),
            _ => {
                let mut circles = vec![self.boundary_circle()?];
                while self.eat(',') {
                    circles.push(self.boundary_circle()?);
                }
                fields.boundary = Some(circles);
            }
        }
        Ok(())
    }

    fn signature(&mut self) -> Result<Signature, ParseError> {
        let orientable = match self.peek() {
            Some('O') => true,
            Some('N') => false,
            _ => return self.error("expected orientation 'O' or 'N'"),
        };
        self.pos += 1;
        let mut fields = Fields::default();
        while self.peek().is_some() {
            self.expect(';')?;
            self.field(&mut fields)?;
        }
        let Some(genus) = fields.genus else {
            return self.error("missing mandatory field g");
        };
        Ok(Signature::new(
            orientable,
            genus,
            fields.punctures.unwrap_or(0),
            fields.boundary.unwrap_or_default(),
            fields.cones.unwrap_or_default(),
        )?)
    }
}
