//! Free products of copies of ℤ₂ indexed by functions from a complement
//! label set to ℤ₂ (rank 2) or ℤ₂ × ℤ₂ (rank 3).
//!
//! Each generator squares to one and there are no other relations, so
//! cancelling adjacent equal letters is confluent and the reduced word is a
//! normal form: two words are equal in the group iff their reductions are.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Label, StrandSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rank {
    Two,
    Three,
}

/// One generator: a value for every complement label, in ascending label order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FLetter {
    Bits(Vec<u8>),
    Pairs(Vec<(u8, u8)>),
}

impl FLetter {
    pub fn rank(&self) -> Rank {
        match self {
            FLetter::Bits(_) => Rank::Two,
            FLetter::Pairs(_) => Rank::Three,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            FLetter::Bits(b) => b.len(),
            FLetter::Pairs(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn well_formed(&self) -> bool {
        match self {
            FLetter::Bits(b) => b.iter().all(|&x| x <= 1),
            FLetter::Pairs(p) => p.iter().all(|&(x, y)| x <= 1 && y <= 1),
        }
    }
}

impl fmt::Display for FLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("z(")?;
        match self {
            FLetter::Bits(bits) => {
                for b in bits {
                    write!(f, "{b}")?;
                }
            }
            FLetter::Pairs(pairs) => {
                for (n, (a, b)) in pairs.iter().enumerate() {
                    if n > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}{b}")?;
                }
            }
        }
        f.write_str(")")
    }
}

/// A word in `F_n^2` or `F_n^3` over a fixed complement set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FWord {
    rank: Rank,
    complement: StrandSet,
    letters: Vec<FLetter>,
}

impl FWord {
    pub fn new(rank: Rank, complement: StrandSet, letters: Vec<FLetter>) -> Result<Self> {
        let mut w = FWord::identity(rank, complement);
        for l in letters {
            w.push(l)?;
        }
        Ok(w)
    }

    pub fn identity(rank: Rank, complement: StrandSet) -> Self {
        FWord { rank, complement, letters: Vec::new() }
    }

    /// Appends a letter without reducing.
    pub fn push(&mut self, letter: FLetter) -> Result<()> {
        if letter.rank() != self.rank || letter.len() != self.complement.len() {
            return Err(Error::ComplementMismatch);
        }
        if !letter.well_formed() {
            return Err(Error::InvalidArgument(format!("{letter} has a non-binary entry")));
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn complement(&self) -> &StrandSet {
        &self.complement
    }

    pub fn letters(&self) -> &[FLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent equal letters until none remain.
    pub fn reduced(&self) -> FWord {
        let mut out: Vec<FLetter> = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if out.last() == Some(l) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        FWord { letters: out, ..self.clone() }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1])
    }

    /// True iff the word is the identity of the free product.
    pub fn is_trivial(&self) -> bool {
        self.reduced().is_empty()
    }

    pub fn concat(&self, other: &FWord) -> Result<FWord> {
        if self.rank != other.rank || self.complement != other.complement {
            return Err(Error::ComplementMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(FWord { letters, ..self.clone() })
    }

    pub fn inverse(&self) -> FWord {
        FWord { letters: self.letters.iter().rev().cloned().collect(), ..self.clone() }
    }

    /// Rank-2 values at one complement label, letter by letter.
    pub fn bits_at(&self, label: Label) -> Option<Vec<u8>> {
        let pos = self.complement.labels().iter().position(|&l| l == label)?;
        self.letters
            .iter()
            .map(|l| match l {
                FLetter::Bits(b) => Some(b[pos]),
                FLetter::Pairs(_) => None,
            })
            .collect()
    }

    /// Rank-3 values at one complement label, letter by letter.
    pub fn pairs_at(&self, label: Label) -> Option<Vec<(u8, u8)>> {
        let pos = self.complement.labels().iter().position(|&l| l == label)?;
        self.letters
            .iter()
            .map(|l| match l {
                FLetter::Pairs(p) => Some(p[pos]),
                FLetter::Bits(_) => None,
            })
            .collect()
    }

    /// Parses the `z(…)` serialization (`1` is the identity).
    pub fn parse(rank: Rank, complement: StrandSet, text: &str) -> Result<FWord> {
        let mut w = FWord::identity(rank, complement);
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let inner = token
                .strip_prefix("z(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::InvalidArgument(format!("bad free-product letter `{token}`")))?;
            let digit = |c: char| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                _ => Err(Error::InvalidArgument(format!("bad digit in `{token}`"))),
            };
            let letter = match rank {
                Rank::Two => FLetter::Bits(inner.chars().map(digit).collect::<Result<_>>()?),
                Rank::Three if inner.is_empty() => FLetter::Pairs(Vec::new()),
                Rank::Three => FLetter::Pairs(
                    inner
                        .split(',')
                        .map(|p| {
                            let d: Vec<u8> = p.chars().map(digit).collect::<Result<_>>()?;
                            match d[..] {
                                [a, b] => Ok((a, b)),
                                _ => Err(Error::InvalidArgument(format!("bad pair `{p}`"))),
                            }
                        })
                        .collect::<Result<_>>()?,
                ),
            };
            w.push(letter)?;
        }
        Ok(w)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
