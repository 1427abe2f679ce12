//! Worked examples replayed from raw input through the full pipeline.

use std::fmt;

use gnk::homomorphisms::{f_parity, phi, project_g3_to_g2, psi, RelabelMode};
use gnk::invariants::{mn_w2, mn_w3, parity_w2_trace, parity_w3_trace, w2_with_deleted_strand};
use gnk::oracle::is_brunnian;
use gnk::words::commutator;
use gnk::{parse_word, FWord, Kind, Label, Result, StrandSet, Word};

pub const IDS: [&str; 6] = ["psi4", "xy-w125", "g53-w245", "brunnian-pb6", "brunnian-w246", "f-example"];

/// `[[[b12, b14], b16], [b13, b15]]` written out letter by letter.
pub const BRUNNIAN_SIX: &str = "b(1,2) b(1,4) b(1,2)^-1 b(1,4)^-1 b(1,6) b(1,4) b(1,2) b(1,4)^-1 \
     b(1,2)^-1 b(1,6)^-1 b(1,3) b(1,5) b(1,3)^-1 b(1,5)^-1 b(1,6) b(1,2) b(1,4) b(1,2)^-1 b(1,4)^-1 \
     b(1,6)^-1 b(1,4) b(1,2) b(1,4)^-1 b(1,2)^-1 b(1,5) b(1,3) b(1,5)^-1 b(1,3)^-1";

struct Check {
    label: &'static str,
    expected: String,
    got: String,
}

pub struct Report {
    id: String,
    checks: Vec<Check>,
}

impl Report {
    fn new(id: &str) -> Self {
        Report { id: id.to_string(), checks: Vec::new() }
    }

    fn check(&mut self, label: &'static str, expected: impl ToString, got: impl ToString) {
        self.checks.push(Check { label, expected: expected.to_string(), got: got.to_string() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.expected == c.got)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.expected == c.got {
                writeln!(f, "{}: ok {}", c.label, c.got)?;
            } else {
                writeln!(f, "{}: MISMATCH", c.label)?;
                writeln!(f, "  expected: {}", c.expected)?;
                writeln!(f, "  got:      {}", c.got)?;
            }
        }
        writeln!(f, "demo {}: {}", self.id, if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn word(text: &str, kind: Kind) -> Result<Word> {
    parse_word(text, Some(kind))
}

fn on(n: Label, text: &str, kind: Kind) -> Result<Word> {
    word(text, kind)?.with_support(StrandSet::range(n))
}

fn bits(w: &FWord, label: Label) -> String {
    let b = w.bits_at(label).unwrap_or_default();
    b.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
}

fn braid_generator(n: Label, i: Label, j: Label) -> Result<Word> {
    on(n, &format!("b({i},{j})"), Kind::PB)
}

fn brunnian_six() -> Result<Word> {
    let g = |i, j| braid_generator(6, i, j);
    let left = commutator(&commutator(&g(1, 2)?, &g(1, 4)?)?, &g(1, 6)?)?;
    commutator(&left, &commutator(&g(1, 3)?, &g(1, 5)?)?)
}

pub fn run(id: &str) -> Result<Report> {
    let mut r = Report::new(id);
    let preserve = RelabelMode::Preserve;
    match id {
        "psi4" => {
            let beta = word("a(1,2) a(3,4) a(1,3) a(3,4) a(1,3) a(1,2)", Kind::G2)?;
            r.check("psi4", "a(1,2:0) a(1,3:1) a(1,3:0) a(1,2:0)", psi(&beta, 4, preserve)?);
            r.check("w12^4", "z(0) z(1)", w2_with_deleted_strand(&beta, 1, 2, 4)?);
        }
        "xy-w125" => {
            let x = on(5, "a(1,2) a(1,3) a(1,2) a(1,3)", Kind::G2)?;
            let y = on(5, "a(2,3) a(3,5) a(2,3) a(3,5)", Kind::G2)?;
            let beta = commutator(&x, &y)?;
            r.check("mn_w2(1,2)", "1", mn_w2(&beta, 1, 2)?);
            r.check("w12^5", "z(00) z(10) z(00) z(10)", w2_with_deleted_strand(&beta, 1, 2, 5)?);
        }
        "g53-w245" => {
            let beta = word(
                "a(1,2,4) a(1,2,3) a(1,3,5) a(1,3,4) a(1,2,4) a(1,3,4) a(1,3,5) a(1,2,3) a(1,3,4) \
                 a(1,3,5) a(1,3,4) a(1,2,3) a(1,3,5) a(1,3,4) a(1,2,4) a(1,3,4) a(1,3,5) a(1,2,3) \
                 a(1,2,4) a(1,3,4) a(1,3,5) a(1,3,4)",
                Kind::G3,
            )?;
            let beta1 = project_g3_to_g2(&beta, 1, preserve)?;
            r.check(
                "r1",
                "a(2,4) a(2,3) a(3,5) a(3,4) a(2,4) a(3,4) a(3,5) a(2,3) a(3,4) a(3,5) a(3,4) a(2,3) \
                 a(3,5) a(3,4) a(2,4) a(3,4) a(3,5) a(2,3) a(2,4) a(3,4) a(3,5) a(3,4)",
                &beta1,
            );
            let image = psi(&beta1, 5, preserve)?;
            r.check(
                "psi5",
                "a(2,4:0) a(2,3:0) a(3,4:1) a(2,4:0) a(3,4:1) a(2,3:0) a(3,4:0) a(3,4:1) \
                 a(2,3:1) a(3,4:0) a(2,4:0) a(3,4:0) a(2,3:1) a(2,4:0) a(3,4:1) a(3,4:0)",
                &image,
            );
            let trace = parity_w2_trace(&image, 2, 4)?;
            r.check("i(3)", "0,1,0,1", bits(&trace, 3));
            r.check("w24^5", "z(0) z(1) z(0) z(1)", trace.reduced());
        }
        "brunnian-pb6" => {
            let beta = word(BRUNNIAN_SIX, Kind::PB)?.with_support(StrandSet::range(6))?;
            r.check("commutator expansion", brunnian_six()?, &beta);
            r.check("verdict", true, is_brunnian(&beta, 6)?.is_brunnian());
        }
        "brunnian-w246" => {
            let beta = word(BRUNNIAN_SIX, Kind::PB)?.with_support(StrandSet::range(6))?;
            let image = phi(&beta, 6)?;
            let mut all_trivial = true;
            for i in 1..=6 {
                for j in (i + 1)..=6 {
                    for k in (j + 1)..=6 {
                        all_trivial &= mn_w3(&image, i, j, k)?.is_trivial();
                    }
                }
            }
            r.check("mn_w3 trivial on every triple", true, all_trivial);
            let r1 = project_g3_to_g2(&image, 1, preserve)?;
            r.check("letters of type (2,4)", 40, psi(&r1, 6, preserve)?.count_type(&[2, 4]));
            r.check(
                "w24^6",
                "z(00) z(01) z(11) z(00) z(01) z(11) z(00) z(01) z(00) z(01) z(11) z(01)",
                w2_with_deleted_strand(&r1, 2, 4, 6)?,
            );
        }
        "f-example" => {
            let beta = word(
                "a(1,2,4) a(2,4,5) a(1,2,4) a(2,4,5) a(2,3,4) a(2,4,5) a(2,3,4) a(2,4,5) \
                 a(2,4,5) a(1,2,4) a(2,4,5) a(1,2,4) a(2,4,5) a(2,3,4) a(2,4,5) a(2,3,4)",
                Kind::G3,
            )?;
            let image = f_parity(&beta, 5, preserve)?;
            r.check(
                "f",
                "a(1,2,4:0) a(1,2,4:1) a(2,3,4:0) a(2,3,4:1) a(1,2,4:1) a(1,2,4:0) a(2,3,4:1) a(2,3,4:0)",
                &image,
            );
            let trace = parity_w3_trace(&image, 1, 2, 4)?;
            r.check("i(3)", "0,0,1,0", bits(&trace, 3));
            r.check("nontrivial", true, !trace.is_trivial());
        }
        other => return Err(gnk::Error::InvalidArgument(format!("unknown demo `{other}`"))),
    }
    Ok(r)
}
