//! Free-product valued invariants.
//!
//! Every invariant scans the word once, and at each crossing of the chosen
//! type emits a letter built from prefix counts mod 2. Prefix counts are
//! strict: the crossing being evaluated is not counted. The `*_trace`
//! variants return the unreduced per-crossing letters; the plain variants
//! return the reduced normal form.

use crate::error::{Error, Result};
use crate::freeprod::{FLetter, FWord, Rank};
use crate::homomorphisms::{psi, CrossingCounts, RelabelMode};
use crate::words::{Kind, Label, Word};

fn sorted_distinct<const N: usize>(w: &Word, mut labels: [Label; N]) -> Result<[Label; N]> {
    labels.sort_unstable();
    if labels.windows(2).any(|p| p[0] == p[1]) {
        return Err(Error::InvalidArgument(format!("indices {labels:?} must be distinct")));
    }
    for &l in &labels {
        w.require_label(l)?;
    }
    Ok(labels)
}

/// Runs `emit` at every letter on exactly `target`, with counts over the strict prefix.
fn scan<F>(w: &Word, target: &[Label], rank: Rank, mut emit: F) -> FWord
where
    F: FnMut(&CrossingCounts, Option<u8>, &[Label]) -> FLetter,
{
    let complement = w.support().without(target);
    let mut counts = CrossingCounts::new();
    let mut out = FWord::identity(rank, complement.clone());
    for letter in w.letters() {
        if letter.indices() == target {
            out.push(emit(&counts, letter.parity(), complement.labels()))
                .expect("emitted letter matches complement");
        }
        counts.record(letter);
    }
    out
}

/// Per-crossing letters of `w_(i,j)`: at each `a_ij`, `k ↦ N_ik + N_jk`.
pub fn mn_w2_trace(w: &Word, i: Label, j: Label) -> Result<FWord> {
    w.require_kind(Kind::G2)?;
    let [i, j] = sorted_distinct(w, [i, j])?;
    w.require_good_condition()?;
    Ok(scan(w, &[i, j], Rank::Two, |n, _, comp| {
        FLetter::Bits(
            comp.iter()
                .map(|&k| n.parity_of(Kind::G2, &[i, k], 0) ^ n.parity_of(Kind::G2, &[j, k], 0))
                .collect(),
        )
    }))
}

/// The MN-invariant `w_(i,j)` of a good-condition `G^2` word.
pub fn mn_w2(w: &Word, i: Label, j: Label) -> Result<FWord> {
    Ok(mn_w2_trace(w, i, j)?.reduced())
}

/// Per-crossing letters of `w_(i,j,k)`: at each `a_ijk`,
/// `l ↦ (N_jkl + N_ijl, N_ikl + N_ijl)`.
pub fn mn_w3_trace(w: &Word, i: Label, j: Label, k: Label) -> Result<FWord> {
    w.require_kind(Kind::G3)?;
    let [i, j, k] = sorted_distinct(w, [i, j, k])?;
    w.require_good_condition()?;
    Ok(scan(w, &[i, j, k], Rank::Three, |n, _, comp| {
        let c = |a, b, l| n.parity_of(Kind::G3, &[a, b, l], 0);
        FLetter::Pairs(
            comp.iter()
                .map(|&l| (c(j, k, l) ^ c(i, j, l), c(i, k, l) ^ c(i, j, l)))
                .collect(),
        )
    }))
}

/// The MN-invariant `w_(i,j,k)` of a good-condition `G^3` word.
pub fn mn_w3(w: &Word, i: Label, j: Label, k: Label) -> Result<FWord> {
    Ok(mn_w3_trace(w, i, j, k)?.reduced())
}

/// Per-crossing letters of `w^p_ij` (i < j): at `a_ij^ε`, `k ↦ N⁰_ik + N^ε_jk`.
pub fn parity_w2_trace(w: &Word, i: Label, j: Label) -> Result<FWord> {
    w.require_kind(Kind::PG2)?;
    let [i, j] = sorted_distinct(w, [i, j])?;
    Ok(scan(w, &[i, j], Rank::Two, |n, eps, comp| {
        let eps = eps.unwrap_or(0);
        FLetter::Bits(
            comp.iter()
                .map(|&k| n.parity_of(Kind::PG2, &[i, k], 0) ^ n.parity_of(Kind::PG2, &[j, k], eps))
                .collect(),
        )
    }))
}

/// The parity invariant `w^p_ij` on `G_{n,p}^2`. Accepts any word.
pub fn parity_w2(w: &Word, i: Label, j: Label) -> Result<FWord> {
    Ok(parity_w2_trace(w, i, j)?.reduced())
}

/// Per-crossing letters of `w^p_ijk` (i < j < k): at `a_ijk^ε`,
/// `l ↦ N⁰_ikl + N^ε_jkl`, plus `N^{1-ε}_ijl` when `l > k`.
pub fn parity_w3_trace(w: &Word, i: Label, j: Label, k: Label) -> Result<FWord> {
    w.require_kind(Kind::PG3)?;
    let [i, j, k] = sorted_distinct(w, [i, j, k])?;
    Ok(scan(w, &[i, j, k], Rank::Two, |n, eps, comp| {
        let eps = eps.unwrap_or(0);
        let c = |a, b, l, e| n.parity_of(Kind::PG3, &[a, b, l], e);
        FLetter::Bits(
            comp.iter()
                .map(|&l| {
                    let base = c(i, k, l, 0) ^ c(j, k, l, eps);
                    if l > k {
                        base ^ c(i, j, l, 1 - eps)
                    } else {
                        base
                    }
                })
                .collect(),
        )
    }))
}

/// The parity invariant `w^p_ijk` on `G_{n,p}^3`. Accepts any word.
pub fn parity_w3(w: &Word, i: Label, j: Label, k: Label) -> Result<FWord> {
    Ok(parity_w3_trace(w, i, j, k)?.reduced())
}

/// Per-crossing letters of `w^l_ij = w^p_ij ∘ ψ_l`.
pub fn w2_with_deleted_strand_trace(w: &Word, i: Label, j: Label, l: Label) -> Result<FWord> {
    if l == i || l == j {
        return Err(Error::InvalidArgument(format!("deleted strand {l} is one of the pair ({i},{j})")));
    }
    parity_w2_trace(&psi(w, l, RelabelMode::Preserve)?, i, j)
}

/// `w^l_ij = w^p_ij ∘ ψ_l` on good-condition `G^2` words.
pub fn w2_with_deleted_strand(w: &Word, i: Label, j: Label, l: Label) -> Result<FWord> {
    Ok(w2_with_deleted_strand_trace(w, i, j, l)?.reduced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::StrandSet;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn mn_w2_examples() {
        let e = Word::identity(Kind::G2, StrandSet::range(3));
        assert!(mn_w2(&e, 1, 2).unwrap().is_empty());

        let beta = w("a(1,3) a(1,2) a(2,3) a(1,2) a(2,3) a(1,3)");
        assert_eq!(mn_w2(&beta, 1, 2).unwrap().to_string(), "z(1) z(0)");
        assert_eq!(mn_w2(&beta, 2, 1).unwrap(), mn_w2(&beta, 1, 2).unwrap());
    }

    #[test]
    fn mn_w2_errors() {
        let odd = w("a(1,2) a(1,3) a(1,2)");
        assert!(matches!(mn_w2(&odd, 1, 2), Err(Error::NotGoodCondition(_))));
        let even = w("a(1,2) a(1,2)");
        assert!(matches!(mn_w2(&even, 1, 1), Err(Error::InvalidArgument(_))));
        assert_eq!(mn_w2(&even, 1, 4), Err(Error::LabelNotInSupport(4)));
    }

    #[test]
    fn mn_w3_examples() {
        let beta = w("a(1,2,3) a(1,2,4) a(1,2,3) a(1,2,4)");
        assert_eq!(mn_w3(&beta, 1, 2, 3).unwrap().to_string(), "z(00) z(11)");
        let e = Word::identity(Kind::G3, StrandSet::range(4));
        assert!(mn_w3(&e, 1, 2, 3).unwrap().is_trivial());
    }

    #[test]
    fn parity_w2_example() {
        let beta = w("a(1,2:0) a(1,3:1) a(1,3:0) a(1,2:0)");
        assert_eq!(parity_w2(&beta, 1, 2).unwrap().to_string(), "z(0) z(1)");
    }

    #[test]
    fn parity_w3_examples() {
        let beta = w("a(1,2,4:0) a(1,3,4:0) a(1,2,4:0)");
        assert_eq!(parity_w3(&beta, 1, 2, 4).unwrap().to_string(), "z(0) z(1)");
        let e = Word::identity(Kind::PG3, StrandSet::range(4));
        assert!(parity_w3(&e, 1, 2, 3).unwrap().is_trivial());
    }

    #[test]
    fn parity_w3_upper_branch_uses_opposite_parity() {
        // l = 4 > k = 3: ε = 0 crossings count a(1,2,4:1)
        let beta = w("a(1,2,3:0) a(1,2,4:1) a(1,2,3:0)");
        assert_eq!(parity_w3(&beta, 1, 2, 3).unwrap().to_string(), "z(0) z(1)");
        let beta = w("a(1,2,3:0) a(1,2,4:0) a(1,2,3:0)");
        assert!(parity_w3(&beta, 1, 2, 3).unwrap().is_trivial());
    }

    #[test]
    fn w2del_examples() {
        let beta = w("a(1,2) a(3,4) a(1,3) a(3,4) a(1,3) a(1,2)");
        assert_eq!(w2_with_deleted_strand(&beta, 1, 2, 4).unwrap().to_string(), "z(0) z(1)");
        let e = Word::identity(Kind::G2, StrandSet::range(4));
        assert!(w2_with_deleted_strand(&e, 1, 2, 4).unwrap().is_trivial());
        assert!(w2_with_deleted_strand(&beta, 1, 2, 2).is_err());
    }

    #[test]
    fn trace_keeps_one_letter_per_crossing() {
        let beta = w("a(1,3) a(1,2) a(2,3) a(1,2) a(2,3) a(1,3) a(1,2) a(1,2)");
        assert_eq!(mn_w2_trace(&beta, 1, 2).unwrap().len(), 4);
        assert_eq!(mn_w2(&beta, 1, 2).unwrap().len(), 2);
    }
}
