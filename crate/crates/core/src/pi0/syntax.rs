//! Text syntax for monoid elements.
//!
//! ```text
//! knot    := '{' [ label { ',' label } ] '}'
//! link    := '[' qword '|' { slot } '|' braid ']'
//! qword   := [ label { '.' label } ]
//! slot    := ( 'up' | 'down' | 'both' ) ':' knot
//! braid   := [ 'b:' ] integer
//! label   := ( letter | digit | '_' )+
//! ```
//!
//! Whitespace is allowed between tokens. A slot may appear at most once.
//! The printer omits empty slots and the `b:` prefix, so `[q1.q2||0]` is the
//! canonical form of a two-letter word with trivial center and braid.

use super::words::{KnotWord, LinkNormalForm};
use crate::error::ParseError;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Word {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn label(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.err("expected a label"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::Word {
                pos: start,
                msg: "expected an integer".into(),
            })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }

    fn knot(&mut self) -> Result<KnotWord, ParseError> {
        self.expect('{')?;
        let mut labels = Vec::new();
        if !self.eat('}') {
            loop {
                labels.push(self.label()?);
                if self.eat('}') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(KnotWord::from_labels(labels))
    }

    fn link(&mut self) -> Result<LinkNormalForm, ParseError> {
        self.expect('[')?;
        let mut out = LinkNormalForm::unit();
        self.skip_ws();
        if self.peek() != Some('|') {
            loop {
                out.qword.push(self.label()?);
                if !self.eat('.') {
                    break;
                }
            }
        }
        self.expect('|')?;
        let mut seen = [false; 3];
        loop {
            self.skip_ws();
            if self.peek() == Some('|') {
                break;
            }
            let name_pos = self.pos;
            let name = self.label()?;
            let slot = match name.as_str() {
                "up" => 0,
                "down" => 1,
                "both" => 2,
                _ => {
                    return Err(ParseError::Word {
                        pos: name_pos,
                        msg: format!("unknown slot `{name}`"),
                    })
                }
            };
            if seen[slot] {
                return Err(ParseError::Word {
                    pos: name_pos,
                    msg: format!("slot `{name}` given twice"),
                });
            }
            seen[slot] = true;
            self.expect(':')?;
            out.central[slot] = self.knot()?;
        }
        self.expect('|')?;
        self.skip_ws();
        if self.src[self.pos..].starts_with("b:") {
            self.pos += 2;
        }
        out.braid = self.integer()?;
        self.expect(']')?;
        Ok(out)
    }
}

pub fn parse_knot_word(text: &str) -> Result<KnotWord, ParseError> {
    let mut c = Cursor::new(text);
    let k = c.knot()?;
    c.finish()?;
    Ok(k)
}

pub fn parse_link_word(text: &str) -> Result<LinkNormalForm, ParseError> {
    let mut c = Cursor::new(text);
    let l = c.link()?;
    c.finish()?;
    Ok(l)
}

pub fn format_knot_word(k: &KnotWord) -> String {
    format!("{{{}}}", k.labels().join(","))
}

pub fn format_link_word(l: &LinkNormalForm) -> String {
    let slots: Vec<String> = ["up", "down", "both"]
        .iter()
        .zip(&l.central)
        .filter(|(_, w)| !w.is_unit())
        .map(|(name, w)| format!("{name}:{}", format_knot_word(w)))
        .collect();
    format!("[{}|{}|{}]", l.qword.join("."), slots.join(" "), l.braid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn knot_words() {
        let k = parse_knot_word("{3_1, 3_1,4_1}").unwrap();
        assert_eq!(k.labels(), &["3_1", "3_1", "4_1"]);
        assert_eq!(format_knot_word(&k), "{3_1,3_1,4_1}");
        assert!(parse_knot_word("{}").unwrap().is_unit());
        assert!(parse_knot_word("{3_1,}").is_err());
        assert!(parse_knot_word("3_1").is_err());
        assert!(parse_knot_word("{a} x").is_err());
    }

    #[test]
    fn full_link_syntax() {
        let l = parse_link_word("[q1.q2 | up:{3_1} down:{} both:{4_1} | b:-2]").unwrap();
        assert_eq!(l.qword, vec!["q1", "q2"]);
        assert_eq!(l.central[0].labels(), &["3_1"]);
        assert!(l.central[1].is_unit());
        assert_eq!(l.central[2].labels(), &["4_1"]);
        assert_eq!(l.braid, -2);
        assert_eq!(format_link_word(&l), "[q1.q2|up:{3_1} both:{4_1}|-2]");
    }

    #[test]
    fn abbreviated_link_syntax() {
        let l = parse_link_word("[q1||0]").unwrap();
        assert_eq!(l, super::super::words::LinkNormalForm::letter("q1"));
        assert_eq!(format_link_word(&l), "[q1||0]");
        assert!(parse_link_word("[||0]").unwrap().is_unit());
    }

    #[test]
    fn link_syntax_errors() {
        for bad in ["[q1|0]", "[q1||]", "[q1||0", "[|side:{}|0]", "[|up:{} up:{}|0]", "[q1..q2||0]", "[||b:x]"] {
            assert!(parse_link_word(bad).is_err(), "{bad}");
        }
        match parse_link_word("[|up:{}|x]") {
            Err(ParseError::Word { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("{other:?}"),
        }
    }

    fn label() -> impl Strategy<Value = String> {
        "[a-z0-9_]{1,4}"
    }

    fn knot() -> impl Strategy<Value = KnotWord> {
        proptest::collection::vec(label(), 0..4).prop_map(KnotWord::from_labels)
    }

    proptest! {
        #[test]
        fn link_words_round_trip(
            qword in proptest::collection::vec(label(), 0..4),
            a in knot(), b in knot(), c in knot(),
            braid in -100i64..100,
        ) {
            let l = LinkNormalForm { qword, central: [a, b, c], braid };
            let text = format_link_word(&l);
            prop_assert_eq!(parse_link_word(&text).unwrap(), l);
        }

        #[test]
        fn parser_never_panics(s in "\\PC{0,40}") {
            let _ = parse_link_word(&s);
            let _ = parse_knot_word(&s);
        }
    }
}
