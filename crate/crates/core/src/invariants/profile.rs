use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate_augmentations_with_limit, linearized_poincare, InvariantsError, MAX_AUGMENTATION_GENERATORS};
use crate::dga::{build_dga, Dga};
use crate::diagram::{lagrangian_resolution, maslov_potential, rotation_number, thurston_bennequin, FrontDiagram};
use crate::linalg::LaurentDims;

/// Everything the obstruction checks need to know about a Legendrian.
///
/// `polys` is the set of generating family cohomology Poincaré polynomials,
/// sorted and without duplicates; it is empty when no generating family is
/// known. `chords` counts Reeb chords by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianProfile {
    pub n: u32,
    pub tb: i64,
    pub rot: i64,
    pub polys: Vec<LaurentDims>,
    pub chords: LaurentDims,
}

impl LegendrianProfile {
    /// A hand-entered profile, for Legendrians without a front in this crate.
    pub fn manual(n: u32, tb: i64, rot: i64, polys: Vec<LaurentDims>, chords: LaurentDims) -> Result<Self, InvariantsError> {
        if n == 0 {
            return Err(InvariantsError::InvalidProfile("dimension n must be at least 1".into()));
        }
        let polys: BTreeSet<LaurentDims> = polys.into_iter().collect();
        Ok(LegendrianProfile { n, tb, rot, polys: polys.into_iter().collect(), chords })
    }

    pub fn from_json(text: &str) -> Result<Self, InvariantsError> {
        let raw: LegendrianProfile =
            serde_json::from_str(text).map_err(|e| InvariantsError::InvalidProfile(e.to_string()))?;
        Self::manual(raw.n, raw.tb, raw.rot, raw.polys, raw.chords)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }

    /// Whether some generating family is known to exist.
    pub fn has_generating_family(&self) -> bool {
        !self.polys.is_empty()
    }
}

/// The Chekanov–Eliashberg DGA of a front, graded by its Maslov potential.
pub fn front_dga(d: &FrontDiagram) -> Result<Dga, InvariantsError> {
    let r = lagrangian_resolution(d, &maslov_potential(d));
    Ok(build_dga(&r)?)
}

/// Poincaré polynomials of linearized homology over all graded
/// augmentations, regraded as generating family cohomology.
pub fn gf_polynomial_set(d: &FrontDiagram) -> Result<Vec<LaurentDims>, InvariantsError> {
    gf_polynomial_set_with_limit(d, MAX_AUGMENTATION_GENERATORS)
}

pub fn gf_polynomial_set_with_limit(d: &FrontDiagram, max_aug_gens: usize) -> Result<Vec<LaurentDims>, InvariantsError> {
    if rotation_number(d) != 0 {
        return Err(InvariantsError::NotIntegerGraded);
    }
    let g = front_dga(d)?;
    polynomial_set(&g, max_aug_gens)
}

fn polynomial_set(g: &Dga, max_aug_gens: usize) -> Result<Vec<LaurentDims>, InvariantsError> {
    let augs = enumerate_augmentations_with_limit(g, max_aug_gens)?;
    let polys = augs.par_iter().map(|e| linearized_poincare(g, e)).collect::<Result<BTreeSet<_>, _>>()?;
    Ok(polys.into_iter().collect())
}

/// Reeb chord degree histogram of the resolved front.
pub fn chord_degrees(d: &FrontDiagram) -> Result<LaurentDims, InvariantsError> {
    let r = lagrangian_resolution(d, &maslov_potential(d));
    r.degrees()
        .map(|k| i32::try_from(k).map(|k| (k, 1)).map_err(|_| InvariantsError::DegreeOverflow(k)))
        .collect()
}

pub fn profile(d: &FrontDiagram) -> Result<LegendrianProfile, InvariantsError> {
    profile_with_limit(d, MAX_AUGMENTATION_GENERATORS)
}

pub fn profile_with_limit(d: &FrontDiagram, max_aug_gens: usize) -> Result<LegendrianProfile, InvariantsError> {
    Ok(LegendrianProfile {
        n: 1,
        tb: thurston_bennequin(d),
        rot: rotation_number(d),
        polys: gf_polynomial_set_with_limit(d, max_aug_gens)?,
        chords: chord_degrees(d)?,
    })
}

/// Poincaré polynomial of a disjoint union: degreewise sum.
pub fn disjoint_union_polys(p: &LaurentDims, q: &LaurentDims) -> LaurentDims {
    p.sum(q)
}

/// The standard Legendrian 2-sphere with the flying saucer front: one Reeb
/// chord, of degree 2.
pub fn flying_saucer() -> LegendrianProfile {
    LegendrianProfile {
        n: 2,
        tb: 1,
        rot: 0,
        polys: vec![LaurentDims::monomial(2, 1)],
        chords: LaurentDims::monomial(2, 1),
    }
}

/// The flying saucer squeezed into a dumbbell whose ends are rotated until
/// they overlap. It has seven Reeb chords. The polynomial assumes the
/// linearized differential cancels one degree 0 chord against a degree -1
/// chord and the degree 1 chord against a degree 2 chord; a degree -1 class
/// survives whatever the differential is.
pub fn twisted_dumbbell() -> LegendrianProfile {
    LegendrianProfile {
        n: 2,
        tb: 1,
        rot: 0,
        polys: vec![LaurentDims::from_pairs([(-1, 1), (2, 2)])],
        chords: LaurentDims::from_pairs([(-1, 2), (0, 1), (1, 1), (2, 3)]),
    }
}

/// Manual profiles available by name alongside the built-in fronts.
pub const MANUAL_PROFILE_NAMES: &[&str] = &["flying_saucer", "twisted_dumbbell"];

pub fn manual_profile(name: &str) -> Option<LegendrianProfile> {
    match name {
        "flying_saucer" => Some(flying_saucer()),
        "twisted_dumbbell" => Some(twisted_dumbbell()),
        _ => None,
    }
}
