//! The Chekanov–Eliashberg differential graded algebra over Z₂ of a resolved
//! front, built by counting admissible disks.

mod disks;
mod identities;

pub use disks::{build_dga, build_dga_with, DiskSearchOptions, DEFAULT_MAX_PARTIAL_PATHS};
pub use identities::{check_identities, IdentityReport};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::diagram::CrossingKind;

/// A word in the generators; the empty word is the unit.
pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: usize,
    pub degree: i64,
    pub kind: CrossingKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DgaError {
    #[error("front is not in plat position; redraw it with all left cusps first and all right cusps last")]
    NotPlat,
    #[error("disk search exceeded {limit} partial paths at event {event}")]
    SearchExplosion { limit: usize, event: usize },
    #[error("generator ids must be 0..{0} in order")]
    BadGenerators(usize),
    #[error("word in ∂{generator} mentions unknown generator {letter}")]
    UnknownLetter { generator: usize, letter: usize },
}

/// A semi-free DGA over Z₂: the differential of each generator is a set of
/// words, each with coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Dga {
    generators: Vec<Generator>,
    differential: Vec<BTreeSet<Word>>,
    grading_modulus: Option<i64>,
}

impl Dga {
    pub fn new(
        generators: Vec<Generator>,
        differential: Vec<BTreeSet<Word>>,
        grading_modulus: Option<i64>,
    ) -> Result<Self, DgaError> {
        let n = generators.len();
        if differential.len() != n || generators.iter().enumerate().any(|(i, g)| g.id != i) {
            return Err(DgaError::BadGenerators(n));
        }
        for (a, words) in differential.iter().enumerate() {
            if let Some(&letter) = words.iter().flatten().find(|&&x| x >= n) {
                return Err(DgaError::UnknownLetter { generator: a, letter });
            }
        }
        Ok(Dga { generators, differential, grading_modulus })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn differential(&self, generator: usize) -> &BTreeSet<Word> {
        &self.differential[generator]
    }

    pub fn grading_modulus(&self) -> Option<i64> {
        self.grading_modulus
    }

    pub fn is_integer_graded(&self) -> bool {
        self.grading_modulus.is_none()
    }

    pub fn degree(&self, generator: usize) -> i64 {
        self.generators[generator].degree
    }

    /// Sum of letter degrees.
    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&x| self.degree(x)).sum()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[usize]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "1");
    }
    for (i, x) in w.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "a{x}")?;
    }
    Ok(())
}

/// One line per generator: `a3 [deg 1] ∂ = 1 + a0 a2`.
impl fmt::Display for Dga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            let kind = match g.kind {
                CrossingKind::Front => "crossing",
                CrossingKind::RightCusp => "right cusp",
            };
            write!(f, "a{} [deg {}, {kind}] d = ", g.id, g.degree)?;
            let words = &self.differential[g.id];
            if words.is_empty() {
                write!(f, "0")?;
            }
            for (i, w) in words.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write_word(f, w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Dga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
