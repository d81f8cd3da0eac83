use rayon::prelude::*;

use super::InvariantsError;
use crate::dga::Dga;

/// Refuse sweeps over more than this many degree-0 generators.
pub const MAX_AUGMENTATION_GENERATORS: usize = 24;

/// A graded augmentation `ε: A → Z₂`, stored as the set of generators sent
/// to 1. Only degree-0 generators can be in the set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Augmentation {
    ones: Vec<usize>,
}

impl Augmentation {
    pub fn from_ones(mut ones: Vec<usize>) -> Self {
        ones.sort_unstable();
        ones.dedup();
        Augmentation { ones }
    }

    pub fn value(&self, generator: usize) -> bool {
        self.ones.binary_search(&generator).is_ok()
    }

    /// Generators sent to 1, ascending.
    pub fn ones(&self) -> &[usize] {
        &self.ones
    }

    /// `ε(w)` for a word, with `ε(1) = 1`.
    pub fn eval_word(&self, w: &[usize]) -> bool {
        w.iter().all(|&x| self.value(x))
    }

    /// Whether `ε ∘ ∂ = 0` and ε vanishes off degree 0.
    pub fn is_valid_for(&self, g: &Dga) -> bool {
        self.ones.iter().all(|&x| x < g.len() && g.degree(x) == 0)
            && (0..g.len()).all(|a| !g.differential(a).iter().fold(false, |acc, w| acc ^ self.eval_word(w)))
    }
}

/// One constraint `Σ_{w ∈ ∂a} ε(w) = 0`, with each surviving word encoded
/// as a bitmask over the degree-0 generators.
struct Constraint {
    words: Vec<u32>,
}

/// All graded augmentations of a Z-graded DGA, in ascending order of the
/// sorted list of generators sent to 1.
pub fn enumerate_augmentations(g: &Dga) -> Result<Vec<Augmentation>, InvariantsError> {
    enumerate_augmentations_with_limit(g, MAX_AUGMENTATION_GENERATORS)
}

pub fn enumerate_augmentations_with_limit(g: &Dga, limit: usize) -> Result<Vec<Augmentation>, InvariantsError> {
    if !g.is_integer_graded() {
        return Err(InvariantsError::NotIntegerGraded);
    }
    let zeros: Vec<usize> = (0..g.len()).filter(|&x| g.degree(x) == 0).collect();
    let limit = limit.min(MAX_AUGMENTATION_GENERATORS);
    if zeros.len() > limit {
        return Err(InvariantsError::TooManyAugmentationGenerators { count: zeros.len(), limit });
    }
    let bit = |x: usize| zeros.iter().position(|&z| z == x);
    let constraints: Vec<Constraint> = (0..g.len())
        .filter_map(|a| {
            // words containing a letter of nonzero degree evaluate to 0
            let words: Vec<u32> = g
                .differential(a)
                .iter()
                .filter_map(|w| w.iter().try_fold(0u32, |m, &x| bit(x).map(|b| m | (1 << b))))
                .collect();
            (!words.is_empty()).then_some(Constraint { words })
        })
        .collect();

    let total: u64 = 1 << zeros.len();
    let mut masks: Vec<u32> = (0..total)
        .into_par_iter()
        .map(|m| m as u32)
        .filter(|&m| constraints.iter().all(|c| c.words.iter().filter(|&&w| w & m == w).count() % 2 == 0))
        .collect();
    let to_aug = |m: u32| Augmentation::from_ones((0..zeros.len()).filter(|&b| m & (1 << b) != 0).map(|b| zeros[b]).collect());
    let mut augs: Vec<Augmentation> = masks.drain(..).map(to_aug).collect();
    augs.sort();
    Ok(augs)
}
