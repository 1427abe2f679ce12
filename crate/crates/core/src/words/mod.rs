//! Alphabets and words for `G_n^2`, `G_n^3`, their parity-decorated
//! variants, and the pure braid group.
//!
//! Every generator of the `G` alphabets is an involution, so the inverse of
//! a word is its reversal. Pure-braid letters carry a sign instead and
//! reduce by ordinary free cancellation.

mod moves;
mod parse;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub use moves::MoveSpec;

/// Strand name. Labels are positive; zero is rejected everywhere.
pub type Label = u32;

/// Ordered set of strand labels a word lives on.
///
/// Labels need not be contiguous: deletion maps run in label-preserving
/// mode leave gaps behind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StrandSet(Vec<Label>);

impl StrandSet {
    pub fn new<I: IntoIterator<Item = Label>>(labels: I) -> Result<Self> {
        let set: BTreeSet<Label> = labels.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::InvalidArgument("strand labels must be positive".into()));
        }
        Ok(StrandSet(set.into_iter().collect()))
    }

    /// `{1, …, n}`.
    pub fn range(n: Label) -> Self {
        StrandSet((1..=n).collect())
    }

    pub fn contains(&self, label: Label) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.0.iter().copied()
    }

    /// True iff this is exactly `{1, …, n}`.
    pub fn is_range(&self, n: Label) -> bool {
        self.0.len() == n as usize && self.0.iter().copied().eq(1..=n)
    }

    pub fn max(&self) -> Option<Label> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &StrandSet) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    /// Labels of `self` not in `removed`, ascending.
    pub fn without(&self, removed: &[Label]) -> StrandSet {
        StrandSet(self.iter().filter(|l| !removed.contains(l)).collect())
    }

    pub(crate) fn from_sorted_unchecked(labels: Vec<Label>) -> Self {
        StrandSet(labels)
    }
}

impl fmt::Display for StrandSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Which group a letter (and hence a word) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `a_{ij}` in `G_n^2`.
    G2,
    /// `a_{ijk}` in `G_n^3`.
    G3,
    /// `a_{ij}^ε` in `G_{n,p}^2`.
    PG2,
    /// `a_{ijk}^ε` in `G_{n,p}^3`.
    PG3,
    /// `b_{ij}^{±1}` in the pure braid group.
    PB,
}

impl Kind {
    /// Number of labels in a letter of this kind.
    pub fn arity(self) -> usize {
        match self {
            Kind::G2 | Kind::PG2 | Kind::PB => 2,
            Kind::G3 | Kind::PG3 => 3,
        }
    }

    pub fn has_parity(self) -> bool {
        matches!(self, Kind::PG2 | Kind::PG3)
    }

    pub fn is_involutive(self) -> bool {
        self != Kind::PB
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::G2 => "g2",
            Kind::G3 => "g3",
            Kind::PG2 => "pg2",
            Kind::PG3 => "pg3",
            Kind::PB => "pb",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g2" => Ok(Kind::G2),
            "g3" => Ok(Kind::G3),
            "pg2" => Ok(Kind::PG2),
            "pg3" => Ok(Kind::PG3),
            "pb" => Ok(Kind::PB),
            other => Err(Error::InvalidArgument(format!("unknown group `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One generator occurrence.
///
/// Indices are stored sorted; pair letters leave the third slot at zero.
/// Parity is zero for non-parity kinds and the sign is `Pos` for
/// non-braid kinds, so derived equality is equality of generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    kind: Kind,
    idx: [Label; 3],
    parity: u8,
    sign: Sign,
}

impl Letter {
    /// Builds a letter, sorting the indices and checking that the optional
    /// decorations match the kind.
    pub fn new(kind: Kind, indices: &[Label], parity: Option<u8>, sign: Option<Sign>) -> Result<Self> {
        if indices.len() != kind.arity() {
            return Err(Error::InvalidLetter(format!(
                "{kind} letters take {} indices, got {}",
                kind.arity(),
                indices.len()
            )));
        }
        let mut idx = [0; 3];
        idx[..indices.len()].copy_from_slice(indices);
        idx[..indices.len()].sort_unstable();
        let sorted = &idx[..indices.len()];
        if sorted[0] == 0 {
            return Err(Error::InvalidLetter("indices must be positive".into()));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLetter(format!("repeated index in {indices:?}")));
        }
        let parity = match (kind.has_parity(), parity) {
            (true, Some(e @ (0 | 1))) => e,
            (true, Some(e)) => return Err(Error::InvalidLetter(format!("parity must be 0 or 1, got {e}"))),
            (true, None) => return Err(Error::InvalidLetter(format!("{kind} letters need a parity"))),
            (false, Some(_)) => return Err(Error::InvalidLetter(format!("{kind} letters carry no parity"))),
            (false, None) => 0,
        };
        let sign = match (kind, sign) {
            (Kind::PB, s) => s.unwrap_or(Sign::Pos),
            (_, Some(_)) => return Err(Error::InvalidLetter(format!("{kind} letters carry no sign"))),
            (_, None) => Sign::Pos,
        };
        Ok(Letter { kind, idx, parity, sign })
    }

    /// Internal constructor for indices already known to be distinct and positive.
    pub(crate) fn raw(kind: Kind, indices: &[Label], parity: u8, sign: Sign) -> Self {
        let mut idx = [0; 3];
        idx[..indices.len()].copy_from_slice(indices);
        idx[..indices.len()].sort_unstable();
        Letter { kind, idx, parity, sign }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The sorted index set.
    pub fn indices(&self) -> &[Label] {
        &self.idx[..self.kind.arity()]
    }

    pub fn contains(&self, label: Label) -> bool {
        self.indices().contains(&label)
    }

    pub fn parity(&self) -> Option<u8> {
        self.kind.has_parity().then_some(self.parity)
    }

    pub fn sign(&self) -> Option<Sign> {
        (self.kind == Kind::PB).then_some(self.sign)
    }

    /// Group inverse of this single letter.
    pub fn inverse(&self) -> Letter {
        match self.kind {
            Kind::PB => Letter { sign: self.sign.flip(), ..*self },
            _ => *self,
        }
    }

    /// Same generator with the sign forgotten; identity on involutive kinds.
    pub(crate) fn unsigned(&self) -> Letter {
        Letter { sign: Sign::Pos, ..*self }
    }

    /// True if `self · other` cancels.
    pub fn cancels_with(&self, other: &Letter) -> bool {
        self.inverse() == *other
    }

    /// Number of shared indices.
    pub fn overlap(&self, other: &Letter) -> usize {
        self.indices().iter().filter(|l| other.contains(**l)).count()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = if self.kind == Kind::PB { 'b' } else { 'a' };
        write!(f, "{head}(")?;
        for (n, l) in self.indices().iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        if let Some(e) = self.parity() {
            write!(f, ":{e}")?;
        }
        f.write_str(")")?;
        if self.sign() == Some(Sign::Neg) {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A finite word over one alphabet on an explicit strand set.
///
/// The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    kind: Kind,
    support: StrandSet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(kind: Kind, support: StrandSet, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            if l.kind != kind {
                return Err(Error::AlphabetMismatch { expected: kind, found: l.kind });
            }
            if let Some(&bad) = l.indices().iter().find(|&&i| !support.contains(i)) {
                return Err(Error::LabelNotInSupport(bad));
            }
        }
        Ok(Word { kind, support, letters })
    }

    /// Word whose support is the union of its letters' indices.
    pub fn from_letters(kind: Kind, letters: Vec<Letter>) -> Result<Self> {
        let support = StrandSet::new(letters.iter().flat_map(|l| l.indices().iter().copied()))?;
        Word::new(kind, support, letters)
    }

    pub fn identity(kind: Kind, support: StrandSet) -> Self {
        Word { kind, support, letters: Vec::new() }
    }

    pub(crate) fn from_parts_unchecked(kind: Kind, support: StrandSet, letters: Vec<Letter>) -> Self {
        Word { kind, support, letters }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn support(&self) -> &StrandSet {
        &self.support
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters on a different strand set.
    pub fn with_support(&self, support: StrandSet) -> Result<Self> {
        Word::new(self.kind, support, self.letters.clone())
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::AlphabetMismatch { expected: self.kind, found: other.kind });
        }
        if self.support != other.support {
            return Err(Error::SupportMismatch);
        }
        Ok(())
    }

    /// Unreduced concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { letters, ..self.clone() })
    }

    /// Reversal, with signs flipped for braid words.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(Letter::inverse).collect();
        Word { letters, ..self.clone() }
    }

    /// Iteratively cancels adjacent `x x` (involutive kinds) or `x x⁻¹`
    /// (braid words) until none remain.
    pub fn reduce_involutive(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last().is_some_and(|top| top.cancels_with(l)) {
                out.pop();
            } else {
                out.push(*l);
            }
        }
        Word { letters: out, ..self.clone() }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels_with(&w[1]))
    }

    /// Occurrence count of every generator, signs ignored.
    pub fn letter_counts(&self) -> HashMap<Letter, usize> {
        let mut counts = HashMap::new();
        for l in &self.letters {
            *counts.entry(l.unsigned()).or_insert(0) += 1;
        }
        counts
    }

    /// First generator (in word order) occurring an odd number of times.
    pub fn odd_letter(&self) -> Option<Letter> {
        let counts = self.letter_counts();
        self.letters.iter().map(Letter::unsigned).find(|l| counts[l] % 2 == 1)
    }

    /// Every generator occurs an even number of times. Parity-decorated
    /// letters with different ε count as different generators.
    pub fn is_good_condition(&self) -> bool {
        self.odd_letter().is_none()
    }

    pub(crate) fn require_good_condition(&self) -> Result<()> {
        match self.odd_letter() {
            None => Ok(()),
            Some(l) => Err(Error::NotGoodCondition(l.to_string())),
        }
    }

    pub(crate) fn require_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::AlphabetMismatch { expected: kind, found: self.kind });
        }
        Ok(())
    }

    pub(crate) fn require_label(&self, label: Label) -> Result<()> {
        if !self.support.contains(label) {
            return Err(Error::LabelNotInSupport(label));
        }
        Ok(())
    }

    /// Number of letters on exactly this index set (any parity or sign).
    pub fn count_type(&self, indices: &[Label]) -> usize {
        let mut want = indices.to_vec();
        want.sort_unstable();
        self.letters.iter().filter(|l| l.indices() == want.as_slice()).count()
    }

    /// The support implied by the letters alone.
    fn implied_support(&self) -> BTreeSet<Label> {
        self.letters.iter().flat_map(|l| l.indices().iter().copied()).collect()
    }
}

/// `x · y · x⁻¹ · y⁻¹`, unreduced.
pub fn commutator(x: &Word, y: &Word) -> Result<Word> {
    x.concat(y)?.concat(&x.inverse())?.concat(&y.inverse())
}

/// The letters of a word without any `strands:` header.
pub struct Letters<'a>(&'a [Letter]);

impl fmt::Display for Letters<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Word {
    /// Space-separated letters only, `1` for the empty word.
    pub fn display_letters(&self) -> Letters<'_> {
        Letters(&self.letters)
    }
}

impl fmt::Display for Word {
    /// Space-separated letters; `1` for the empty word. A `strands:` header
    /// line is emitted only when the support is not implied by the letters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.implied_support().into_iter().ne(self.support.iter()) {
            writeln!(f, "strands: {}", self.support)?;
        }
        write!(f, "{}", self.display_letters())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_word(s, None)
    }
}

pub use parse::parse_word;

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(w("a(1,2) a(1,2)").reduce_involutive().is_empty());
        assert!(w("a(1,2) a(3,4) a(3,4) a(1,2)").reduce_involutive().is_empty());
        let u = w("a(1,2,3) a(1,2,4) a(1,2,3)");
        assert_eq!(u.reduce_involutive(), u);
        assert!(w("b(1,2) b(1,3) b(1,3)^-1 b(1,2)^-1").reduce_involutive().is_empty());
        // b b is not a cancellation in the braid group
        assert_eq!(w("b(1,2) b(1,2)").reduce_involutive().len(), 2);
    }

    #[test]
    fn good_condition_examples() {
        assert!(Word::identity(Kind::G2, StrandSet::range(3)).is_good_condition());
        assert!(w("a(1,2) a(3,4) a(1,3) a(3,4) a(1,3) a(1,2)").is_good_condition());
        let bad = w("a(1,2) a(1,3) a(1,2)");
        assert!(!bad.is_good_condition());
        assert_eq!(bad.odd_letter().unwrap().to_string(), "a(1,3)");
        // distinct parities are distinct generators
        assert!(!w("a(1,2:0) a(1,2:1)").is_good_condition());
        // signs are ignored for braid words
        assert!(w("b(1,2) b(1,2)^-1").is_good_condition());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("a(1,2) a(1,3)").inverse(), w("a(1,3) a(1,2)"));
        assert_eq!(w("b(1,2) b(1,3)^-1").inverse(), w("b(1,3) b(1,2)^-1"));
        let e = Word::identity(Kind::PB, StrandSet::range(2));
        assert_eq!(e.inverse(), e);
    }

    #[test]
    fn commutator_examples() {
        let s = StrandSet::range(3);
        let b12 = w("b(1,2)").with_support(s.clone()).unwrap();
        let b13 = w("b(1,3)").with_support(s.clone()).unwrap();
        let c = commutator(&b12, &b13).unwrap();
        assert_eq!(c.to_string(), "b(1,2) b(1,3) b(1,2)^-1 b(1,3)^-1");

        let x = w("a(1,2) a(1,3) a(2,3)");
        let e = Word::identity(Kind::G2, x.support().clone());
        let c = commutator(&x, &e).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.reduce_involutive().is_empty());
    }

    #[test]
    fn commutator_rejects_mismatch() {
        let x = w("a(1,2)");
        let y = w("b(1,2)");
        assert!(matches!(commutator(&x, &y), Err(Error::AlphabetMismatch { .. })));
        let z = w("a(1,3)");
        assert_eq!(commutator(&x, &z), Err(Error::SupportMismatch));
    }

    #[test]
    fn letter_validation() {
        assert!(Letter::new(Kind::G2, &[1, 1], None, None).is_err());
        assert!(Letter::new(Kind::G3, &[1, 2], None, None).is_err());
        assert!(Letter::new(Kind::PG2, &[1, 2], None, None).is_err());
        assert!(Letter::new(Kind::PG2, &[1, 2], Some(2), None).is_err());
        assert!(Letter::new(Kind::G2, &[0, 2], None, None).is_err());
        assert!(Letter::new(Kind::G2, &[1, 2], None, Some(Sign::Neg)).is_err());
        let l = Letter::new(Kind::G3, &[5, 1, 3], None, None).unwrap();
        assert_eq!(l.indices(), &[1, 3, 5]);
    }

    #[test]
    fn word_rejects_foreign_labels() {
        let l = Letter::new(Kind::G2, &[1, 7], None, None).unwrap();
        assert_eq!(
            Word::new(Kind::G2, StrandSet::range(3), vec![l]),
            Err(Error::LabelNotInSupport(7))
        );
    }
}
