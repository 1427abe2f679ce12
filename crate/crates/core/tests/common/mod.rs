#![allow(dead_code)]

use gnk::words::commutator;
use gnk::{Kind, Label, Letter, Sign, StrandSet, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn word(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn on(n: Label, s: &str) -> Word {
    word(s).with_support(StrandSet::range(n)).unwrap()
}

pub fn letter(kind: Kind, idx: &[Label], parity: u8) -> Letter {
    let parity = kind.has_parity().then_some(parity);
    Letter::new(kind, idx, parity, None).unwrap()
}

fn distinct<R: Rng>(rng: &mut R, n: Label, k: usize) -> Vec<Label> {
    let mut all: Vec<Label> = (1..=n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}

pub fn random_letter<R: Rng>(rng: &mut R, kind: Kind, n: Label) -> Letter {
    let idx = distinct(rng, n, kind.arity());
    match kind {
        Kind::PB => {
            let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
            Letter::new(kind, &idx, None, Some(sign)).unwrap()
        }
        _ => letter(kind, &idx, rng.gen_range(0..2)),
    }
}

/// The faces of a random simplex in an order a triangle/tetrahedron move
/// accepts, with parities satisfying the relation's constraint.
pub fn random_simplex<R: Rng>(rng: &mut R, kind: Kind, n: Label) -> Vec<Letter> {
    let size = kind.arity() + 1;
    let mut verts = distinct(rng, n, size);
    verts.sort_unstable();
    let top = verts[size - 1];
    let mut faces: Vec<Vec<Label>> = (0..size)
        .map(|skip| verts.iter().enumerate().filter(|&(p, _)| p != skip).map(|(_, &v)| v).collect())
        .collect();
    faces.shuffle(rng);
    let constrained = |f: &Vec<Label>| kind == Kind::PG2 || f.contains(&top);
    let mut eps: Vec<u8> = faces.iter().map(|_| rng.gen_range(0..2)).collect();
    if kind.has_parity() {
        let sum: u8 = faces.iter().zip(&eps).filter(|(f, _)| constrained(f)).map(|(_, e)| e).sum();
        if sum % 2 == 1 {
            let fix = faces.iter().position(constrained).unwrap();
            eps[fix] ^= 1;
        }
    }
    faces.iter().zip(eps).map(|(f, e)| letter(kind, f, e)).collect()
}

/// A random good-condition word on `1..=n`: blocks of single letters and
/// simplex segments, each block used twice, in shuffled order.
pub fn random_good_word<R: Rng>(rng: &mut R, kind: Kind, n: Label, blocks: usize) -> Word {
    let mut chunks: Vec<Vec<Letter>> = Vec::new();
    for _ in 0..blocks {
        let chunk = if kind != Kind::PB && rng.gen_bool(0.3) {
            random_simplex(rng, kind, n)
        } else {
            vec![random_letter(rng, kind, n)]
        };
        let mut twin = chunk.clone();
        if rng.gen_bool(0.5) {
            twin.reverse();
        }
        chunks.push(chunk);
        chunks.push(twin);
    }
    chunks.shuffle(rng);
    let letters = chunks.into_iter().flatten().collect();
    Word::new(kind, StrandSet::range(n), letters).unwrap()
}

/// A random word on `1..=n` with no good-condition guarantee.
pub fn random_word<R: Rng>(rng: &mut R, kind: Kind, n: Label, len: usize) -> Word {
    let letters = (0..len).map(|_| random_letter(rng, kind, n)).collect();
    Word::new(kind, StrandSet::range(n), letters).unwrap()
}

/// A nonempty freely reduced braid word.
pub fn random_reduced_braid<R: Rng>(rng: &mut R, n: Label, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::new();
    while letters.len() < len.max(1) {
        let l = random_letter(rng, Kind::PB, n);
        if letters.last().is_some_and(|p| p.cancels_with(&l)) {
            continue;
        }
        letters.push(l);
    }
    Word::new(Kind::PB, StrandSet::range(n), letters).unwrap()
}

pub fn generator(n: Label, i: Label, j: Label) -> Word {
    let l = Letter::new(Kind::PB, &[i, j], None, None).unwrap();
    Word::new(Kind::PB, StrandSet::range(n), vec![l]).unwrap()
}

enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

fn random_tree<R: Rng>(rng: &mut R, depth: usize, next: &mut usize) -> Tree {
    if depth == 0 || (*next > 0 && rng.gen_bool(0.3)) {
        *next += 1;
        return Tree::Leaf(*next - 1);
    }
    let left = random_tree(rng, depth - 1, next);
    let right = random_tree(rng, depth - 1, next);
    Tree::Node(Box::new(left), Box::new(right))
}

fn leaf_count(t: &Tree) -> usize {
    match t {
        Tree::Leaf(_) => 1,
        Tree::Node(a, b) => leaf_count(a) + leaf_count(b),
    }
}

fn eval(t: &Tree, leaves: &[Word]) -> Word {
    match t {
        Tree::Leaf(i) => leaves[*i].clone(),
        Tree::Node(a, b) => commutator(&eval(a, leaves), &eval(b, leaves)).unwrap(),
    }
}

/// An iterated commutator of generators, nesting depth at most `depth`,
/// whose leaves together touch every strand of `1..=n`.
pub fn random_brunnian<R: Rng>(rng: &mut R, n: Label, depth: usize) -> Word {
    let tree = loop {
        let mut next = 0;
        let t = random_tree(rng, depth, &mut next);
        if 2 * leaf_count(&t) >= n as usize && leaf_count(&t) >= 2 {
            break t;
        }
    };
    let k = leaf_count(&tree);
    let mut order: Vec<Label> = (1..=n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(Label, Label)> = order
        .chunks(2)
        .map(|c| match *c {
            [a, b] => (a, b),
            [a] => (a, if a == 1 { 2 } else { 1 }),
            _ => unreachable!(),
        })
        .collect();
    while pairs.len() < k {
        let d = distinct(rng, n, 2);
        pairs.push((d[0], d[1]));
    }
    pairs.shuffle(rng);
    let leaves: Vec<Word> = pairs
        .into_iter()
        .map(|(a, b)| {
            let g = generator(n, a.min(b), a.max(b));
            if rng.gen_bool(0.5) {
                g.inverse()
            } else {
                g
            }
        })
        .collect();
    eval(&tree, &leaves)
}

/// `[[[b12, b14], b16], [b13, b15]]` on six strands.
pub fn brunnian_six() -> Word {
    let g = |i, j| generator(6, i, j);
    let left = commutator(&commutator(&g(1, 2), &g(1, 4)).unwrap(), &g(1, 6)).unwrap();
    commutator(&left, &commutator(&g(1, 3), &g(1, 5)).unwrap()).unwrap()
}

/// Every sorted `k`-subset of `1..=n`.
pub fn subsets(n: Label, k: usize) -> Vec<Vec<Label>> {
    fn go(start: Label, n: Label, k: usize, cur: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every invariant the alphabet of `w` supports, at every index choice.
pub fn invariant_profile(w: &Word) -> Vec<(String, gnk::FWord)> {
    use gnk::homomorphisms::{f_parity, RelabelMode};
    use gnk::invariants::*;
    let n = w.support().max().unwrap_or(0);
    let mut out = Vec::new();
    match w.kind() {
        Kind::G2 => {
            for p in subsets(n, 2) {
                out.push((format!("mn2 {p:?}"), mn_w2(w, p[0], p[1]).unwrap()));
                for l in (1..=n).filter(|l| !p.contains(l)) {
                    out.push((format!("w2del {p:?} -{l}"), w2_with_deleted_strand(w, p[0], p[1], l).unwrap()));
                }
            }
        }
        Kind::G3 => {
            let fw = f_parity(w, n, RelabelMode::Preserve).unwrap();
            for t in subsets(n, 3) {
                out.push((format!("mn3 {t:?}"), mn_w3(w, t[0], t[1], t[2]).unwrap()));
                if !t.contains(&n) {
                    out.push((format!("p3∘f {t:?}"), parity_w3(&fw, t[0], t[1], t[2]).unwrap()));
                }
            }
        }
        Kind::PG2 => {
            for p in subsets(n, 2) {
                out.push((format!("p2 {p:?}"), parity_w2(w, p[0], p[1]).unwrap()));
            }
        }
        Kind::PG3 => {
            for t in subsets(n, 3) {
                out.push((format!("p3 {t:?}"), parity_w3(w, t[0], t[1], t[2]).unwrap()));
            }
        }
        Kind::PB => {}
    }
    out
}

/// Applies every applicable move plus one random insertion and reports the
/// first move that changes some invariant.
pub fn check_move_invariance<R: Rng>(rng: &mut R, w: &Word) -> Result<usize, String> {
    use gnk::MoveSpec;
    let before = invariant_profile(w);
    let mut moves = w.applicable_moves();
    let n = w.support().max().unwrap_or(0);
    moves.push(MoveSpec::Insert { position: rng.gen_range(0..=w.len()), letter: random_letter(rng, w.kind(), n) });
    for mv in &moves {
        let moved = w.apply_move(mv).map_err(|e| format!("{mv:?}: {e}"))?;
        if !moved.is_good_condition() {
            return Err(format!("{mv:?} broke the good condition of {w}"));
        }
        let after = invariant_profile(&moved);
        for ((name, a), (_, b)) in before.iter().zip(&after) {
            if a != b {
                return Err(format!("{name} changed under {mv:?} on {w}: {a} vs {b}"));
            }
        }
    }
    Ok(moves.len())
}
