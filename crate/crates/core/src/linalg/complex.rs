use std::collections::BTreeMap;

use super::{LaurentDims, LinalgError, Z2Matrix};

/// A bounded chain complex of finite-dimensional GF(2) vector spaces.
///
/// `boundary(k)` maps degree `k` to degree `k - 1` and is stored as a
/// `dim(k-1) x dim(k)` matrix. Missing maps are zero.
#[derive(Clone, Debug, Default)]
pub struct ChainComplex {
    dims: BTreeMap<i32, usize>,
    boundaries: BTreeMap<i32, Z2Matrix>,
}

impl ChainComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_dim(&mut self, degree: i32, dim: usize) {
        self.dims.insert(degree, dim);
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    /// Installs the boundary out of `degree`.
    pub fn set_boundary(&mut self, degree: i32, m: Z2Matrix) -> Result<(), LinalgError> {
        let (rows, cols) = (self.dim(degree - 1), self.dim(degree));
        if m.rows() != rows || m.cols() != cols {
            return Err(LinalgError::ShapeMismatch { degree, expected: (rows, cols), found: (m.rows(), m.cols()) });
        }
        self.boundaries.insert(degree, m);
        Ok(())
    }

    pub fn boundary(&self, degree: i32) -> Option<&Z2Matrix> {
        self.boundaries.get(&degree)
    }

    fn boundary_rank(&self, degree: i32) -> usize {
        self.boundaries.get(&degree).map_or(0, Z2Matrix::rank)
    }

    /// Chain dimensions as a polynomial.
    pub fn chain_dims(&self) -> LaurentDims {
        self.dims.iter().map(|(&k, &d)| (k, d)).collect()
    }

    /// Checks `∂_{k} ∘ ∂_{k+1} = 0` in every degree.
    pub fn validate(&self) -> Result<(), LinalgError> {
        for (&k, upper) in &self.boundaries {
            if let Some(lower) = self.boundaries.get(&(k - 1)) {
                if !lower.mul(upper).is_zero() {
                    return Err(LinalgError::NonzeroComposition { degree: k });
                }
            }
        }
        Ok(())
    }

    /// Homology dimensions `dim ker ∂_k - rank ∂_{k+1}` in every degree.
    pub fn homology(&self) -> Result<LaurentDims, LinalgError> {
        self.validate()?;
        let mut out = LaurentDims::zero();
        for (&k, &d) in &self.dims {
            let kernel = d - self.boundary_rank(k);
            out.add(k, kernel - self.boundary_rank(k + 1));
        }
        Ok(out)
    }
}

/// Homology of a graded family of boundary maps; see [`ChainComplex::homology`].
pub fn complex_homology(complex: &ChainComplex) -> Result<LaurentDims, LinalgError> {
    complex.homology()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_differentials_give_chain_dims() {
        let mut c = ChainComplex::new();
        c.set_dim(0, 2);
        c.set_dim(1, 3);
        c.set_boundary(1, Z2Matrix::zeros(2, 3)).unwrap();
        assert_eq!(c.homology().unwrap(), LaurentDims::from_pairs([(0, 2), (1, 3)]));
    }

    #[test]
    fn isomorphism_kills_everything() {
        let mut c = ChainComplex::new();
        c.set_dim(0, 1);
        c.set_dim(1, 1);
        c.set_boundary(1, Z2Matrix::identity(1)).unwrap();
        assert!(c.homology().unwrap().is_zero());
    }

    #[test]
    fn nonzero_composition_is_rejected() {
        let mut c = ChainComplex::new();
        for k in 0..3 {
            c.set_dim(k, 1);
        }
        c.set_boundary(1, Z2Matrix::identity(1)).unwrap();
        c.set_boundary(2, Z2Matrix::identity(1)).unwrap();
        assert!(matches!(c.homology(), Err(LinalgError::NonzeroComposition { degree: 2 })));
    }

    #[test]
    fn shape_is_checked() {
        let mut c = ChainComplex::new();
        c.set_dim(0, 1);
        c.set_dim(1, 2);
        assert!(c.set_boundary(1, Z2Matrix::zeros(2, 1)).is_err());
    }
}
