//! Exact triviality of pure-braid words through the Artin action on the
//! free group `F_n = ⟨x_1, …, x_n⟩`, and Brunnian detection on top of it.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, fixing the other
//! generators. The action is faithful, so a braid is trivial iff its
//! automorphism fixes every generator. Automorphisms compose along the
//! word: the first letter acts first.

use std::fmt;

use crate::error::{Error, Result};
use crate::homomorphisms::{delete_strand_pb, RelabelMode};
use crate::words::{Kind, Label, Sign, Word};

/// Freely reduced word in `F_n`; `±g` stands for `x_g^{±1}` (g ≥ 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: i32) -> Self {
        FreeGroupWord(vec![g])
    }

    /// Reduces an arbitrary symbol sequence.
    pub fn from_symbols<I: IntoIterator<Item = i32>>(symbols: I) -> Self {
        let mut w = FreeGroupWord::identity();
        for s in symbols {
            w.push(s);
        }
        w
    }

    fn push(&mut self, s: i32) {
        debug_assert!(s != 0);
        if self.0.last() == Some(&-s) {
            self.0.pop();
        } else {
            self.0.push(s);
        }
    }

    pub fn symbols(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord(self.0.iter().rev().map(|s| -s).collect())
    }

    pub fn concat(&self, other: &FreeGroupWord) -> Self {
        let mut out = self.clone();
        for &s in &other.0 {
            out.push(s);
        }
        out
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, s) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if *s > 0 {
                write!(f, "x{s}")?;
            } else {
                write!(f, "x{}^-1", -s)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of `F_n` given by the images of its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidAutomorphism {
    images: Vec<FreeGroupWord>,
}

impl BraidAutomorphism {
    pub fn identity(n: usize) -> Self {
        BraidAutomorphism { images: (1..=n as i32).map(FreeGroupWord::generator).collect() }
    }

    /// The action of `σ_i^{±1}` on `F_n`.
    pub fn sigma(n: usize, i: usize, sign: Sign) -> Self {
        assert!(i >= 1 && i < n, "σ_{i} needs 1 ≤ i < {n}");
        let mut a = BraidAutomorphism::identity(n);
        let (x, y) = (i as i32, i as i32 + 1);
        match sign {
            Sign::Pos => {
                a.images[i - 1] = FreeGroupWord::from_symbols([x, y, -x]);
                a.images[i] = FreeGroupWord::generator(x);
            }
            Sign::Neg => {
                a.images[i - 1] = FreeGroupWord::generator(y);
                a.images[i] = FreeGroupWord::from_symbols([-y, x, y]);
            }
        }
        a
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeGroupWord] {
        &self.images
    }

    /// Image of an arbitrary free-group word.
    pub fn apply(&self, w: &FreeGroupWord) -> FreeGroupWord {
        let mut out = FreeGroupWord::identity();
        for &s in w.symbols() {
            let image = &self.images[(s.unsigned_abs() - 1) as usize];
            if s > 0 {
                image.0.iter().for_each(|&t| out.push(t));
            } else {
                image.0.iter().rev().for_each(|&t| out.push(-t));
            }
        }
        out
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &BraidAutomorphism) -> BraidAutomorphism {
        BraidAutomorphism { images: inner.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, w)| w.symbols() == [g as i32 + 1])
    }
}

/// Signed Artin generators: `±i` is `σ_i^{±1}`.
pub type ArtinWord = Vec<i32>;

fn check_braid(w: &Word, n: Label) -> Result<()> {
    w.require_kind(Kind::PB)?;
    if let Some(&bad) = w.support().labels().iter().find(|&&l| l > n) {
        return Err(Error::LabelNotInSupport(bad));
    }
    Ok(())
}

/// Expands each `b_ij^{±1}` as `(σ_{j-1} ⋯ σ_{i+1}) σ_i^{±2} (σ_{i+1}⁻¹ ⋯ σ_{j-1}⁻¹)`.
pub fn expand_to_artin(w: &Word, n: Label) -> Result<ArtinWord> {
    check_braid(w, n)?;
    let mut out = Vec::new();
    for letter in w.letters() {
        let (i, j) = (letter.indices()[0] as i32, letter.indices()[1] as i32);
        let s = if letter.sign() == Some(Sign::Neg) { -1 } else { 1 };
        out.extend(((i + 1)..j).rev());
        out.extend([s * i, s * i]);
        out.extend(((i + 1)..j).map(|g| -g));
    }
    Ok(out)
}

/// The automorphism of `F_n` induced by a sequence of Artin generators.
pub fn artin_action(sigmas: &[i32], n: usize) -> BraidAutomorphism {
    sigmas.iter().fold(BraidAutomorphism::identity(n), |acc, &s| {
        let sign = if s > 0 { Sign::Pos } else { Sign::Neg };
        BraidAutomorphism::sigma(n, s.unsigned_abs() as usize, sign).compose(&acc)
    })
}

/// Decides whether a pure-braid word on strands `1..=n` is the trivial braid.
///
/// Image lengths grow exponentially along the word, so the word and its
/// Artin expansion are freely reduced first, then split as `u·v` and the
/// actions of `u` and `v⁻¹` are compared.
pub fn is_trivial_braid(w: &Word, n: Label) -> Result<bool> {
    let sigmas = FreeGroupWord::from_symbols(expand_to_artin(&w.reduce_involutive(), n)?).0;
    let (u, v) = sigmas.split_at(sigmas.len() / 2);
    let v_inv: Vec<i32> = v.iter().rev().map(|s| -s).collect();
    Ok(artin_action(u, n as usize) == artin_action(&v_inv, n as usize))
}

/// Per-strand result of a Brunnian check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrunnianReport {
    /// `(m, p_m(β) is trivial)` for every strand `m`.
    pub strands: Vec<(Label, bool)>,
}

impl BrunnianReport {
    pub fn is_brunnian(&self) -> bool {
        self.strands.iter().all(|&(_, trivial)| trivial)
    }
}

impl fmt::Display for BrunnianReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, trivial) in &self.strands {
            writeln!(f, "p{m}: {}", if *trivial { "trivial" } else { "nontrivial" })?;
        }
        f.write_str(if self.is_brunnian() { "BRUNNIAN" } else { "NOT BRUNNIAN" })
    }
}

/// Deletes each strand in turn and decides triviality of what remains.
pub fn is_brunnian(w: &Word, n: Label) -> Result<BrunnianReport> {
    check_braid(w, n)?;
    if n < 2 {
        return Err(Error::InvalidArgument("a Brunnian check needs at least two strands".into()));
    }
    let full = w.with_support(crate::words::StrandSet::range(n))?;
    let strands = (1..=n)
        .map(|m| {
            let reduced = delete_strand_pb(&full, m, RelabelMode::Compact)?;
            Ok((m, is_trivial_braid(&reduced, n - 1)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BrunnianReport { strands })
}
