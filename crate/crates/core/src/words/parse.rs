use crate::error::{Error, Result};

use super::{Kind, Label, Letter, Sign, StrandSet, Word};

/// Parses the text word format.
///
/// ```text
/// strands: 1,2,3,4          (optional header line)
/// a(1,2) a(1,2,3) a(1,2:0) a(1,2,3:1) b(1,2) b(1,2)^-1
/// ```
///
/// A lone `1` token stands for the identity. Without a header the support
/// is the union of the letters' indices. `expected` fixes the alphabet, which
/// is required when the word has no letters.
pub fn parse_word(text: &str, expected: Option<Kind>) -> Result<Word> {
    let mut body = text;
    let mut offset = 0;
    let mut header: Option<StrandSet> = None;

    let leading = text.len() - text.trim_start().len();
    if text[leading..].starts_with("strands:") {
        let line_end = text[leading..].find('\n').map_or(text.len(), |n| leading + n);
        let list = &text[leading + "strands:".len()..line_end];
        let labels = list
            .split(',')
            .map(|t| {
                t.trim().parse::<Label>().map_err(|_| Error::Parse {
                    offset: leading,
                    message: format!("bad strand label `{}`", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        header = Some(StrandSet::new(labels)?);
        body = &text[line_end..];
        offset = line_end;
    }

    let mut cursor = Cursor { src: body, pos: 0, base: offset };
    let mut letters = Vec::new();
    loop {
        cursor.skip_ws();
        if cursor.at_end() {
            break;
        }
        if cursor.eat('1') {
            continue;
        }
        letters.push(cursor.letter()?);
    }

    let kind = match (expected, letters.first()) {
        (Some(k), _) => k,
        (None, Some(l)) => l.kind(),
        (None, None) => {
            return Err(Error::Parse {
                offset: 0,
                message: "cannot infer the alphabet of an empty word".into(),
            })
        }
    };
    match header {
        Some(support) => Word::new(kind, support, letters),
        None => {
            let support = StrandSet::new(letters.iter().flat_map(|l| l.indices().iter().copied()))?;
            Word::new(kind, support, letters)
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl Cursor<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.base + self.pos, message: message.into() }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse { offset: self.base + start, message: "expected a number".into() })
    }

    fn letter(&mut self) -> Result<Letter> {
        let start = self.pos;
        let braid = if self.eat('a') {
            false
        } else if self.eat('b') {
            true
        } else {
            return Err(self.error("expected a letter `a(…)` or `b(…)`"));
        };
        self.expect('(')?;
        let mut indices = vec![self.number()?];
        while self.eat(',') {
            indices.push(self.number()?);
        }
        let parity = if self.eat(':') { Some(self.number()? as u8) } else { None };
        self.expect(')')?;
        let inverse = self.eat_str("^-1");

        let kind = match (braid, indices.len(), parity.is_some()) {
            (true, 2, false) => Kind::PB,
            (false, 2, false) => Kind::G2,
            (false, 3, false) => Kind::G3,
            (false, 2, true) => Kind::PG2,
            (false, 3, true) => Kind::PG3,
            _ => {
                return Err(Error::Parse {
                    offset: self.base + start,
                    message: format!("malformed letter `{}`", &self.src[start..self.pos]),
                })
            }
        };
        if inverse && kind != Kind::PB {
            return Err(self.error("only braid letters take `^-1`"));
        }
        let sign = (kind == Kind::PB).then_some(if inverse { Sign::Neg } else { Sign::Pos });
        Letter::new(kind, &indices, parity, sign).map_err(|e| Error::Parse {
            offset: self.base + start,
            message: e.to_string(),
        })
    }
}
