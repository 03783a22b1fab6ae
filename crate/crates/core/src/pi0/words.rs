//! Knot words and the string-link normal form.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cubes::Color;
use crate::error::AlgebraError;

/// Declared prime labels. `None` leaves an alphabet open.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    pub knots: Option<BTreeSet<String>>,
    pub links: Option<BTreeSet<String>>,
}

impl Alphabet {
    pub fn open() -> Self {
        Alphabet::default()
    }

    pub fn new<K, L>(knots: K, links: L) -> Self
    where
        K: IntoIterator,
        K::Item: Into<String>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        Alphabet {
            knots: Some(knots.into_iter().map(Into::into).collect()),
            links: Some(links.into_iter().map(Into::into).collect()),
        }
    }

    pub fn check_knot(&self, word: &KnotWord) -> Result<(), AlgebraError> {
        check(&self.knots, word.labels(), "knot")
    }

    pub fn check_link(&self, link: &LinkNormalForm) -> Result<(), AlgebraError> {
        check(&self.links, &link.qword, "link")?;
        for w in &link.central {
            self.check_knot(w)?;
        }
        Ok(())
    }

    pub fn knot_mul(&self, a: &KnotWord, b: &KnotWord) -> Result<KnotWord, AlgebraError> {
        self.check_knot(a)?;
        self.check_knot(b)?;
        Ok(a.mul(b))
    }

    pub fn link_mul(&self, a: &LinkNormalForm, b: &LinkNormalForm) -> Result<LinkNormalForm, AlgebraError> {
        self.check_link(a)?;
        self.check_link(b)?;
        Ok(a.mul(b))
    }
}

fn check(set: &Option<BTreeSet<String>>, labels: &[String], alphabet: &'static str) -> Result<(), AlgebraError> {
    if let Some(set) = set {
        if let Some(bad) = labels.iter().find(|l| !set.contains(*l)) {
            return Err(AlgebraError::UnknownLabel {
                label: bad.clone(),
                alphabet,
            });
        }
    }
    Ok(())
}

/// An element of the free commutative monoid on prime knot labels, kept as
/// a sorted list so equality is multiset equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<String>", into = "Vec<String>")]
pub struct KnotWord(Vec<String>);

impl KnotWord {
    pub fn unit() -> Self {
        KnotWord(Vec::new())
    }

    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut v: Vec<String> = labels.into_iter().map(Into::into).collect();
        v.sort();
        KnotWord(v)
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union.
    pub fn mul(&self, other: &KnotWord) -> KnotWord {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        v.sort();
        KnotWord(v)
    }
}

impl From<Vec<String>> for KnotWord {
    fn from(v: Vec<String>) -> Self {
        KnotWord::from_labels(v)
    }
}

impl From<KnotWord> for Vec<String> {
    fn from(k: KnotWord) -> Self {
        k.0
    }
}

/// Unchecked multiset union; see [`Alphabet::knot_mul`] for the checked form.
pub fn knot_mul(a: &KnotWord, b: &KnotWord) -> KnotWord {
    a.mul(b)
}

/// A string 2-link class: a word in the non-central primes, three central
/// knot words for the slots `up`, `down` and `updown`, and the braid
/// (linking number) factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinkNormalForm {
    pub qword: Vec<String>,
    /// Indexed by `Color::Up`, `Color::Down`, `Color::UpDown` in that order.
    pub central: [KnotWord; 3],
    pub braid: i64,
}

fn central_slot(s: Color) -> Result<usize, AlgebraError> {
    match s {
        Color::Up => Ok(0),
        Color::Down => Ok(1),
        Color::UpDown => Ok(2),
        Color::O => Err(AlgebraError::OpenColor),
    }
}

impl LinkNormalForm {
    pub fn unit() -> Self {
        LinkNormalForm::default()
    }

    /// A single non-central prime.
    pub fn letter(label: impl Into<String>) -> Self {
        LinkNormalForm {
            qword: vec![label.into()],
            ..Default::default()
        }
    }

    pub fn central(&self, s: Color) -> Result<&KnotWord, AlgebraError> {
        Ok(&self.central[central_slot(s)?])
    }

    pub fn is_unit(&self) -> bool {
        *self == LinkNormalForm::unit()
    }

    /// Whether the class lies in the center of the monoid.
    pub fn is_central(&self) -> bool {
        self.qword.is_empty()
    }

    pub fn mul(&self, other: &LinkNormalForm) -> LinkNormalForm {
        let mut qword = self.qword.clone();
        qword.extend_from_slice(&other.qword);
        LinkNormalForm {
            qword,
            central: [
                self.central[0].mul(&other.central[0]),
                self.central[1].mul(&other.central[1]),
                self.central[2].mul(&other.central[2]),
            ],
            braid: self.braid + other.braid,
        }
    }

    /// Units are exactly the pure braids; this is the inverse of one.
    pub fn inverse(&self) -> Option<LinkNormalForm> {
        (self.qword.is_empty() && self.central.iter().all(KnotWord::is_unit)).then(|| braid_unit(-self.braid))
    }
}

pub fn link_mul(a: &LinkNormalForm, b: &LinkNormalForm) -> LinkNormalForm {
    a.mul(b)
}

/// The embedding of knot classes into string-link classes on the slot `s`.
pub fn phi(s: Color, k: &KnotWord) -> Result<LinkNormalForm, AlgebraError> {
    let mut out = LinkNormalForm::unit();
    out.central[central_slot(s)?] = k.clone();
    Ok(out)
}

pub fn braid_unit(n: i64) -> LinkNormalForm {
    LinkNormalForm {
        braid: n,
        ..Default::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(labels: &[&str]) -> KnotWord {
        KnotWord::from_labels(labels.iter().copied())
    }

    #[test]
    fn knot_monoid() {
        assert_eq!(knot_mul(&k(&[]), &k(&["3_1"])), k(&["3_1"]));
        assert_eq!(knot_mul(&k(&["3_1"]), &k(&["4_1"])), knot_mul(&k(&["4_1"]), &k(&["3_1"])));
        let left = knot_mul(&knot_mul(&k(&["3_1"]), &k(&["3_1"])), &k(&["4_1"]));
        assert_eq!(left, k(&["3_1", "3_1", "4_1"]));
    }

    #[test]
    fn alphabet_rejects_unknown_labels() {
        let a = Alphabet::new(["3_1"], ["q1"]);
        assert!(a.knot_mul(&k(&["3_1"]), &k(&["5_2"])).is_err());
        assert!(a.link_mul(&LinkNormalForm::letter("q1"), &LinkNormalForm::letter("q9")).is_err());
        assert!(Alphabet::open().knot_mul(&k(&["anything"]), &k(&[])).is_ok());
    }

    #[test]
    fn link_monoid_basics() {
        let u = LinkNormalForm::unit();
        let q1 = LinkNormalForm::letter("q1");
        let q2 = LinkNormalForm::letter("q2");
        assert_eq!(u.mul(&q1), q1);
        assert_eq!(q1.mul(&u), q1);
        assert_ne!(q1.mul(&q2), q2.mul(&q1));
        let c = phi(Color::Up, &k(&["3_1"])).unwrap();
        assert_eq!(c.mul(&q1), q1.mul(&c));
    }

    #[test]
    fn phi_slots() {
        assert!(phi(Color::Up, &KnotWord::unit()).unwrap().is_unit());
        let both = phi(Color::Up, &k(&["3_1"])).unwrap().mul(&phi(Color::Down, &k(&["3_1"])).unwrap());
        assert_eq!(both.central[0], k(&["3_1"]));
        assert_eq!(both.central[1], k(&["3_1"]));
        assert!(both.qword.is_empty());
        assert!(phi(Color::O, &k(&[])).is_err());
        // images of distinct slots meet only in the unit
        let a = phi(Color::Up, &k(&["3_1"])).unwrap();
        let b = phi(Color::UpDown, &k(&["3_1"])).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn braids() {
        assert!(braid_unit(0).is_unit());
        assert!(braid_unit(2).mul(&braid_unit(-2)).is_unit());
        let l = LinkNormalForm::letter("q1").mul(&phi(Color::Down, &k(&["4_1"])).unwrap());
        assert_eq!(braid_unit(1).mul(&l), l.mul(&braid_unit(1)));
        assert_eq!(braid_unit(3).inverse(), Some(braid_unit(-3)));
        assert_eq!(l.inverse(), None);
    }
}
