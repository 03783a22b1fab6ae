//! `monoid`: knot words and string-link normal forms.

use std::str::FromStr;

use clap::Subcommand;

use scl_core::cubes::Color;
use scl_core::pi0::{
    braid_unit, format_knot_word, format_link_word, parse_knot_word, parse_link_word, phi, Alphabet, KnotWord,
    LinkNormalForm,
};

use crate::error::CliError;

#[derive(Subcommand)]
pub enum MonoidOp {
    /// Multiply words left to right.
    Mul {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        alphabet: Option<AlphabetArg>,
    },
    /// The central link word of a knot word on the slot `up`, `down` or `updown`.
    Phi {
        color: String,
        word: String,
        #[arg(long)]
        alphabet: Option<AlphabetArg>,
    },
    /// The pure braid with the given linking number.
    Braid {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Reprint a word in normal form.
    Normalize {
        word: String,
        #[arg(long)]
        alphabet: Option<AlphabetArg>,
    },
}

/// `knots=3_1,4_1;links=q1,q2`. A missing part leaves that alphabet open.
#[derive(Clone, Debug)]
pub struct AlphabetArg(Alphabet);

impl FromStr for AlphabetArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut alphabet = Alphabet::open();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, labels) = part.split_once('=').ok_or_else(|| format!("expected key=labels in {part:?}"))?;
            let labels = labels
                .split(',')
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| {
                    if l.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        Ok(l.to_string())
                    } else {
                        Err(format!("bad label {l:?}"))
                    }
                })
                .collect::<Result<_, _>>()?;
            match key.trim() {
                "knots" => alphabet.knots = Some(labels),
                "links" => alphabet.links = Some(labels),
                other => return Err(format!("unknown alphabet {other:?}")),
            }
        }
        Ok(AlphabetArg(alphabet))
    }
}

enum Word {
    Knot(KnotWord),
    Link(LinkNormalForm),
}

fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, CliError> {
    if text.trim_start().starts_with('{') {
        let k = parse_knot_word(text)?;
        alphabet.check_knot(&k)?;
        Ok(Word::Knot(k))
    } else {
        let l = parse_link_word(text)?;
        alphabet.check_link(&l)?;
        Ok(Word::Link(l))
    }
}

fn format_word(w: &Word) -> String {
    match w {
        Word::Knot(k) => format_knot_word(k),
        Word::Link(l) => format_link_word(l),
    }
}

fn alphabet(a: Option<AlphabetArg>) -> Alphabet {
    a.map(|a| a.0).unwrap_or_default()
}

pub fn run_monoid(op: MonoidOp) -> Result<u8, CliError> {
    let out = match op {
        MonoidOp::Mul { words, alphabet: a } => {
            let a = alphabet(a);
            let mut words = words.iter().map(|w| parse_word(w, &a));
            let mut acc = words.next().expect("clap requires one word")?;
            for w in words {
                acc = match (acc, w?) {
                    (Word::Knot(x), Word::Knot(y)) => Word::Knot(x.mul(&y)),
                    (Word::Link(x), Word::Link(y)) => Word::Link(x.mul(&y)),
                    _ => return Err(CliError::invalid("cannot multiply a knot word with a link word")),
                };
            }
            format_word(&acc)
        }
        MonoidOp::Phi { color, word, alphabet: a } => {
            let s = Color::from_str(&color)?;
            let k = parse_knot_word(&word)?;
            alphabet(a).check_knot(&k)?;
            format_link_word(&phi(s, &k)?)
        }
        MonoidOp::Braid { n } => format_link_word(&braid_unit(n)),
        MonoidOp::Normalize { word, alphabet: a } => format_word(&parse_word(&word, &alphabet(a))?),
    };
    println!("{out}");
    Ok(0)
}
