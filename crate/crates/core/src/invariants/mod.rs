//! Augmentations, linearized Poincaré polynomials, graded normal rulings, and
//! the profile summary consumed by the obstruction checks.

mod augment;
mod linearized;
mod profile;
mod rulings;

pub use augment::{enumerate_augmentations, enumerate_augmentations_with_limit, Augmentation, MAX_AUGMENTATION_GENERATORS};
pub use linearized::{linearized_complex, linearized_homology, linearized_poincare, GF_DEGREE_SHIFT, GF_DEGREE_SIGN};
pub use profile::{
    chord_degrees, disjoint_union_polys, flying_saucer, front_dga, gf_polynomial_set, gf_polynomial_set_with_limit, manual_profile,
    profile, profile_with_limit, twisted_dumbbell, LegendrianProfile, MANUAL_PROFILE_NAMES,
};
pub use rulings::{enumerate_graded_rulings, Ruling};

use thiserror::Error;

use crate::dga::DgaError;
use crate::diagram::DiagramError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("rotation number is nonzero; integer gradings are required")]
    NotIntegerGraded,
    #[error("{count} degree-0 generators exceeds the augmentation sweep limit of {limit}")]
    TooManyAugmentationGenerators { count: usize, limit: usize },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("degree {0} does not fit in 32 bits")]
    DegreeOverflow(i64),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Dga(#[from] DgaError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
