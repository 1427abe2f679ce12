use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::{Kind, Letter, Word};

/// A single application of one defining relation at a position.
///
/// Triangle and tetrahedron moves replace a segment by its reversal. They
/// accept any ordering of the three pairs of a 3-set (resp. the four
/// triples of a 4-set); parity alphabets additionally require the
/// ε-constraint of their presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveSpec {
    /// Delete `x x` (or `x x⁻¹`) at `position, position + 1`.
    Cancel { position: usize },
    /// Insert `x x` (or `x x⁻¹`) before `position`.
    Insert { position: usize, letter: Letter },
    /// Swap two adjacent letters whose index sets overlap little enough.
    FarCommute { position: usize },
    /// `a_ij a_ik a_jk = a_jk a_ik a_ij` in `G_n^2` / `G_{n,p}^2`.
    Triangle { position: usize },
    /// `a_ijk a_ijl a_ikl a_jkl = a_jkl a_ikl a_ijl a_ijk` in `G_n^3` / `G_{n,p}^3`.
    Tetrahedron { position: usize },
}

impl MoveSpec {
    pub fn position(&self) -> usize {
        match *self {
            MoveSpec::Cancel { position }
            | MoveSpec::Insert { position, .. }
            | MoveSpec::FarCommute { position }
            | MoveSpec::Triangle { position }
            | MoveSpec::Tetrahedron { position } => position,
        }
    }

    pub fn relation(&self) -> &'static str {
        match self {
            MoveSpec::Cancel { .. } | MoveSpec::Insert { .. } => "involution",
            MoveSpec::FarCommute { .. } => "far_commute",
            MoveSpec::Triangle { .. } => "triangle",
            MoveSpec::Tetrahedron { .. } => "tetrahedron",
        }
    }
}

impl Word {
    /// Applies one relation move, returning the rewritten word.
    pub fn apply_move(&self, mv: &MoveSpec) -> Result<Word> {
        let fail = |reason: &str| Error::MoveNotApplicable {
            relation: mv.relation(),
            position: mv.position(),
            reason: reason.to_string(),
        };
        let letters = self.letters();
        let mut out = letters.to_vec();
        match *mv {
            MoveSpec::Cancel { position: p } => {
                let pair = letters.get(p..p + 2).ok_or_else(|| fail("out of range"))?;
                if !pair[0].cancels_with(&pair[1]) {
                    return Err(fail("letters do not cancel"));
                }
                out.drain(p..p + 2);
            }
            MoveSpec::Insert { position: p, letter } => {
                if p > letters.len() {
                    return Err(fail("out of range"));
                }
                if letter.kind() != self.kind() {
                    return Err(Error::AlphabetMismatch { expected: self.kind(), found: letter.kind() });
                }
                if let Some(&bad) = letter.indices().iter().find(|&&l| !self.support().contains(l)) {
                    return Err(Error::LabelNotInSupport(bad));
                }
                out.splice(p..p, [letter, letter.inverse()]);
            }
            MoveSpec::FarCommute { position: p } => {
                let limit = match self.kind() {
                    Kind::G2 | Kind::PG2 => 1,
                    Kind::G3 | Kind::PG3 => 2,
                    Kind::PB => return Err(fail("braid words only support involution moves")),
                };
                let pair = letters.get(p..p + 2).ok_or_else(|| fail("out of range"))?;
                if pair[0].overlap(&pair[1]) >= limit {
                    return Err(fail("index sets overlap"));
                }
                out.swap(p, p + 1);
            }
            MoveSpec::Triangle { position: p } => {
                if !matches!(self.kind(), Kind::G2 | Kind::PG2) {
                    return Err(fail("triangle moves need a pair alphabet"));
                }
                let seg = letters.get(p..p + 3).ok_or_else(|| fail("out of range"))?;
                if !spans_simplex(seg, 3) {
                    return Err(fail("letters are not the three pairs of a 3-set"));
                }
                if self.kind() == Kind::PG2 && parity_sum(seg.iter()) % 2 != 0 {
                    return Err(fail("parity sum is odd"));
                }
                out[p..p + 3].reverse();
            }
            MoveSpec::Tetrahedron { position: p } => {
                if !matches!(self.kind(), Kind::G3 | Kind::PG3) {
                    return Err(fail("tetrahedron moves need a triple alphabet"));
                }
                let seg = letters.get(p..p + 4).ok_or_else(|| fail("out of range"))?;
                if !spans_simplex(seg, 4) {
                    return Err(fail("letters are not the four triples of a 4-set"));
                }
                if self.kind() == Kind::PG3 {
                    // The ε attached to the omitted maximal label is free.
                    let top = seg.iter().flat_map(|l| l.indices()).copied().max().unwrap_or(0);
                    if parity_sum(seg.iter().filter(|l| l.contains(top))) % 2 != 0 {
                        return Err(fail("parity sum is odd"));
                    }
                }
                out[p..p + 4].reverse();
            }
        }
        Ok(Word::from_parts_unchecked(self.kind(), self.support().clone(), out))
    }

    /// Every non-insertion move that applies somewhere in this word.
    pub fn applicable_moves(&self) -> Vec<MoveSpec> {
        let n = self.len();
        let candidates = (0..n).flat_map(|position| {
            [
                MoveSpec::Cancel { position },
                MoveSpec::FarCommute { position },
                MoveSpec::Triangle { position },
                MoveSpec::Tetrahedron { position },
            ]
        });
        candidates.filter(|m| self.apply_move(m).is_ok()).collect()
    }
}

/// `seg` consists of the `size` distinct faces of codimension one of a
/// `size`-element label set.
fn spans_simplex(seg: &[Letter], size: usize) -> bool {
    let faces: BTreeSet<&[u32]> = seg.iter().map(Letter::indices).collect();
    let union: BTreeSet<u32> = seg.iter().flat_map(|l| l.indices().iter().copied()).collect();
    faces.len() == size && union.len() == size
}

fn parity_sum<'a>(letters: impl Iterator<Item = &'a Letter>) -> u32 {
    letters.map(|l| u32::from(l.parity().unwrap_or(0))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn triangle_reverses() {
        let out = w("a(1,2) a(1,3) a(2,3)").apply_move(&MoveSpec::Triangle { position: 0 }).unwrap();
        assert_eq!(out.to_string(), "a(2,3) a(1,3) a(1,2)");
    }

    #[test]
    fn far_commute_in_g3() {
        let out = w("a(1,2,3) a(1,4,5)").apply_move(&MoveSpec::FarCommute { position: 0 }).unwrap();
        assert_eq!(out.to_string(), "a(1,4,5) a(1,2,3)");
        let stuck = w("a(1,2,3) a(1,2,4)").apply_move(&MoveSpec::FarCommute { position: 0 });
        assert!(matches!(stuck, Err(Error::MoveNotApplicable { .. })));
        // in G2 any shared index blocks commutation
        assert!(w("a(1,2) a(1,3)").apply_move(&MoveSpec::FarCommute { position: 0 }).is_err());
    }

    #[test]
    fn parity_triangle_needs_even_sum() {
        let r = w("a(1,2:0) a(1,3:0) a(2,3:1)").apply_move(&MoveSpec::Triangle { position: 0 });
        assert!(matches!(r, Err(Error::MoveNotApplicable { relation: "triangle", .. })));
        assert!(w("a(1,2:1) a(1,3:0) a(2,3:1)").apply_move(&MoveSpec::Triangle { position: 0 }).is_ok());
    }

    #[test]
    fn parity_tetrahedron_ignores_the_top_face() {
        // a(1,2,3) omits the top label 4, so its ε is unconstrained
        let ok = w("a(1,2,3:1) a(1,2,4:0) a(1,3,4:1) a(2,3,4:1)");
        assert!(ok.apply_move(&MoveSpec::Tetrahedron { position: 0 }).is_ok());
        let bad = w("a(1,2,3:0) a(1,2,4:1) a(1,3,4:0) a(2,3,4:0)");
        assert!(bad.apply_move(&MoveSpec::Tetrahedron { position: 0 }).is_err());
    }

    #[test]
    fn insert_then_cancel_round_trips() {
        let base = w("a(1,2) a(2,3)");
        let letter = Letter::new(Kind::G2, &[1, 3], None, None).unwrap();
        let grown = base.apply_move(&MoveSpec::Insert { position: 1, letter }).unwrap();
        assert_eq!(grown.to_string(), "a(1,2) a(1,3) a(1,3) a(2,3)");
        assert_eq!(grown.apply_move(&MoveSpec::Cancel { position: 1 }).unwrap(), base);

        let braid = w("b(1,2)");
        let letter = Letter::new(Kind::PB, &[1, 2], None, None).unwrap();
        let grown = braid.apply_move(&MoveSpec::Insert { position: 0, letter }).unwrap();
        assert_eq!(grown.to_string(), "b(1,2) b(1,2)^-1 b(1,2)");
    }

    #[test]
    fn symmetric_moves_are_involutions() {
        let u = w("a(1,3) a(2,3) a(1,2) a(4,5)");
        for mv in u.applicable_moves() {
            if matches!(mv, MoveSpec::Cancel { .. }) {
                continue;
            }
            let once = u.apply_move(&mv).unwrap();
            assert_eq!(once.apply_move(&mv).unwrap(), u, "{mv:?}");
        }
    }

    #[test]
    fn braid_words_only_cancel() {
        let u = w("b(1,2) b(3,4)");
        assert!(u.apply_move(&MoveSpec::FarCommute { position: 0 }).is_err());
        assert!(u.applicable_moves().is_empty());
    }
}
