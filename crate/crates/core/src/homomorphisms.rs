//! Maps between the groups: strand deletions `p_m` (pure braids) and `q_m`
//! (`G^3`), the projection `r_m : G^3 → G^2`, the braid embedding
//! `φ_n : PB_n → G_n^3`, and the parity-producing deletions `ψ_k` and `f`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{Kind, Label, Letter, Sign, StrandSet, Word};

/// How surviving labels are named after a strand is deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RelabelMode {
    /// Labels above the deleted one shift down by one.
    #[default]
    Compact,
    /// Labels are kept; the support simply loses the deleted label.
    Preserve,
}

impl std::str::FromStr for RelabelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(RelabelMode::Compact),
            "preserve" => Ok(RelabelMode::Preserve),
            other => Err(Error::InvalidArgument(format!("unknown relabel mode `{other}`"))),
        }
    }
}

/// Running occurrence counts of generators over a word prefix.
#[derive(Debug, Clone, Default)]
pub struct CrossingCounts {
    counts: HashMap<Letter, u32>,
}

impl CrossingCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, letter: &Letter) {
        *self.counts.entry(letter.unsigned()).or_insert(0) += 1;
    }

    pub fn count(&self, letter: &Letter) -> u32 {
        self.counts.get(&letter.unsigned()).copied().unwrap_or(0)
    }

    /// Count of the generator on `indices` (any order) with parity `parity`, mod 2.
    pub fn parity_of(&self, kind: Kind, indices: &[Label], parity: u8) -> u8 {
        (self.count(&Letter::raw(kind, indices, parity, Sign::Pos)) % 2) as u8
    }
}

fn relabel(label: Label, deleted: Label, mode: RelabelMode) -> Label {
    match mode {
        RelabelMode::Compact if label > deleted => label - 1,
        _ => label,
    }
}

fn reduced_support(support: &StrandSet, deleted: Label, mode: RelabelMode) -> StrandSet {
    StrandSet::from_sorted_unchecked(
        support
            .iter()
            .filter(|&l| l != deleted)
            .map(|l| relabel(l, deleted, mode))
            .collect(),
    )
}

/// Shared driver: erase every letter touching `m`, relabel the rest, and
/// rebuild with `target` letters produced by `map`.
fn delete_with<F>(w: &Word, m: Label, mode: RelabelMode, target: Kind, mut map: F) -> Result<Word>
where
    F: FnMut(&Letter, &CrossingCounts) -> Option<Letter>,
{
    w.require_label(m)?;
    let mut counts = CrossingCounts::new();
    let mut out = Vec::with_capacity(w.len());
    for letter in w.letters() {
        if let Some(image) = map(letter, &counts) {
            let idx: Vec<Label> = image.indices().iter().map(|&l| relabel(l, m, mode)).collect();
            out.push(Letter::raw(target, &idx, image.parity().unwrap_or(0), image.sign().unwrap_or(Sign::Pos)));
        }
        counts.record(letter);
    }
    Ok(Word::from_parts_unchecked(target, reduced_support(w.support(), m, mode), out))
}

/// `p_m : PB_n → PB_{n-1}`: erase every `b_ij` with `m ∈ {i, j}`.
pub fn delete_strand_pb(w: &Word, m: Label, mode: RelabelMode) -> Result<Word> {
    w.require_kind(Kind::PB)?;
    delete_with(w, m, mode, Kind::PB, |l, _| (!l.contains(m)).then_some(*l))
}

/// `q_m : G_n^3 → G_{n-1}^3`: erase every `a_ijk` with `m ∈ {i, j, k}`.
pub fn delete_strand_g3(w: &Word, m: Label, mode: RelabelMode) -> Result<Word> {
    w.require_kind(Kind::G3)?;
    delete_with(w, m, mode, Kind::G3, |l, _| (!l.contains(m)).then_some(*l))
}

/// `r_m : G_n^3 → G_{n-1}^2`: `a_ijk` containing `m` becomes the pair
/// letter on its other two indices; everything else vanishes.
pub fn project_g3_to_g2(w: &Word, m: Label, mode: RelabelMode) -> Result<Word> {
    w.require_kind(Kind::G3)?;
    delete_with(w, m, mode, Kind::G2, |l, _| {
        l.contains(m).then(|| {
            let rest: Vec<Label> = l.indices().iter().copied().filter(|&x| x != m).collect();
            Letter::raw(Kind::G2, &rest, 0, Sign::Pos)
        })
    })
}

/// `ψ_k : H^2 → G_p^2`. Letters touching `k` vanish; a surviving `a_ij`
/// gets ε = (# `a_ik` + # `a_jk` strictly before it) mod 2.
///
/// Defined on the good-condition subgroup only.
pub fn psi(w: &Word, k: Label, mode: RelabelMode) -> Result<Word> {
    w.require_kind(Kind::G2)?;
    w.require_label(k)?;
    w.require_good_condition()?;
    delete_with(w, k, mode, Kind::PG2, |l, counts| {
        if l.contains(k) {
            return None;
        }
        let [i, j] = [l.indices()[0], l.indices()[1]];
        let eps = counts.parity_of(Kind::G2, &[i, k], 0) ^ counts.parity_of(Kind::G2, &[j, k], 0);
        Some(Letter::raw(Kind::PG2, &[i, j], eps, Sign::Pos))
    })
}

/// `f : G^3 → G_p^3` deleting strand `d`. A surviving `a_ijk` (i<j<k) gets
/// ε = (# `a_{jkd}` + # `a_{ikd}` strictly before it) mod 2.
pub fn f_parity(w: &Word, d: Label, mode: RelabelMode) -> Result<Word> {
    w.require_kind(Kind::G3)?;
    delete_with(w, d, mode, Kind::PG3, |l, counts| {
        if l.contains(d) {
            return None;
        }
        let [i, j, k] = [l.indices()[0], l.indices()[1], l.indices()[2]];
        let eps = counts.parity_of(Kind::G3, &[j, k, d], 0) ^ counts.parity_of(Kind::G3, &[i, k, d], 0);
        Some(Letter::raw(Kind::PG3, &[i, j, k], eps, Sign::Pos))
    })
}

fn c_letters(n: Label, i: Label, j: Label) -> Vec<Letter> {
    ((j + 1)..=n)
        .chain(1..j)
        .filter(|&k| k != i && k != j)
        .map(|k| Letter::raw(Kind::G3, &[i, j, k], 0, Sign::Pos))
        .collect()
}

/// `c^n_{i,j} = ∏_{k=j+1}^{n} a_ijk · ∏_{k=1}^{j-1} a_ijk`, skipping `k = i`.
pub fn c_word(n: Label, i: Label, j: Label) -> Result<Word> {
    if i == 0 || i >= j || j > n {
        return Err(Error::InvalidArgument(format!("c^{n}_{{{i},{j}}} needs 1 ≤ i < j ≤ n")));
    }
    Ok(Word::from_parts_unchecked(Kind::G3, StrandSet::range(n), c_letters(n, i, j)))
}

/// Image of `b_ij` under `φ_n`:
/// `c_{i,i+1}⁻¹ ⋯ c_{i,j-1}⁻¹ · c_{i,j}² · c_{i,j-1} ⋯ c_{i,i+1}`.
fn phi_block(n: Label, i: Label, j: Label) -> Vec<Letter> {
    let mut out = Vec::new();
    for m in (i + 1)..j {
        out.extend(c_letters(n, i, m).into_iter().rev());
    }
    let c = c_letters(n, i, j);
    out.extend_from_slice(&c);
    out.extend_from_slice(&c);
    for m in ((i + 1)..j).rev() {
        out.extend(c_letters(n, i, m));
    }
    out
}

/// `φ_n : PB_n → G_n^3` without reducing the result.
pub fn phi_unreduced(w: &Word, n: Label) -> Result<Word> {
    w.require_kind(Kind::PB)?;
    if let Some(&bad) = w.support().labels().iter().find(|&&l| l > n) {
        return Err(Error::LabelNotInSupport(bad));
    }
    let mut out = Vec::new();
    for letter in w.letters() {
        let (i, j) = (letter.indices()[0], letter.indices()[1]);
        let block = phi_block(n, i, j);
        match letter.sign() {
            Some(Sign::Neg) => out.extend(block.into_iter().rev()),
            _ => out.extend(block),
        }
    }
    Ok(Word::from_parts_unchecked(Kind::G3, StrandSet::range(n), out))
}

/// `φ_n : PB_n → G_n^3`, freely reduced.
pub fn phi(w: &Word, n: Label) -> Result<Word> {
    Ok(phi_unreduced(w, n)?.reduce_involutive())
}
