use std::collections::BTreeMap;

use super::{Augmentation, InvariantsError};
use crate::dga::Dga;
use crate::linalg::{ChainComplex, LaurentDims, Z2Matrix};

/// Degree dictionary applied to linearized homology to obtain generating
/// family cohomology degrees: `k ↦ sign·k + shift`. Fixed by requiring the
/// m(5₂) fixtures to reproduce.
pub const GF_DEGREE_SIGN: i32 = 1;
pub const GF_DEGREE_SHIFT: i32 = 0;

/// The linearized complex of `g` at `e`: the word-length-one part of the
/// differential conjugated by `a ↦ a + ε(a)`.
pub fn linearized_complex(g: &Dga, e: &Augmentation) -> Result<ChainComplex, InvariantsError> {
    if !g.is_integer_graded() {
        return Err(InvariantsError::NotIntegerGraded);
    }
    // generators of each degree and their index within that degree
    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for x in g.generators() {
        by_degree.entry(x.degree).or_default().push(x.id);
    }
    let index: BTreeMap<usize, usize> =
        by_degree.values().flat_map(|ids| ids.iter().enumerate().map(|(i, &x)| (x, i))).collect();

    let mut complex = ChainComplex::new();
    for (&k, ids) in &by_degree {
        complex.set_dim(to_i32(k)?, ids.len());
    }
    for (&k, ids) in &by_degree {
        let target = by_degree.get(&(k - 1)).map_or(0, Vec::len);
        let mut m = Z2Matrix::zeros(target, ids.len());
        for (col, &a) in ids.iter().enumerate() {
            for w in g.differential(a) {
                // linear part of Π (x_i + ε(x_i)): one letter kept, the rest augmented
                for (i, &x) in w.iter().enumerate() {
                    let rest = w[..i].iter().chain(&w[i + 1..]).all(|&y| e.value(y));
                    if rest {
                        m.flip(index[&x], col);
                    }
                }
            }
        }
        if target > 0 {
            complex.set_boundary(to_i32(k)?, m)?;
        }
    }
    Ok(complex)
}

fn to_i32(k: i64) -> Result<i32, InvariantsError> {
    i32::try_from(k).map_err(|_| InvariantsError::DegreeOverflow(k))
}

/// Poincaré polynomial of linearized homology, before regrading.
pub fn linearized_homology(g: &Dga, e: &Augmentation) -> Result<LaurentDims, InvariantsError> {
    Ok(linearized_complex(g, e)?.homology()?)
}

/// Linearized homology regraded into generating family cohomology degrees.
pub fn linearized_poincare(g: &Dga, e: &Augmentation) -> Result<LaurentDims, InvariantsError> {
    Ok(linearized_homology(g, e)?.regrade(GF_DEGREE_SIGN, GF_DEGREE_SHIFT))
}
