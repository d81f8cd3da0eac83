use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely supported map from integer degree to a nonnegative dimension,
/// read as a Laurent polynomial `Σ dims(k) t^k` with nonnegative coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Serializes as `[[deg, dim], ...]` sorted by degree.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentDims {
    dims: BTreeMap<i32, usize>,
}

impl LaurentDims {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff · t^degree`.
    pub fn monomial(degree: i32, coeff: usize) -> Self {
        let mut p = Self::zero();
        p.add(degree, coeff);
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (i32, usize)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (k, d) in pairs {
            p.add(k, d);
        }
        p
    }

    pub fn get(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn add(&mut self, degree: i32, coeff: usize) {
        if coeff > 0 {
            *self.dims.entry(degree).or_insert(0) += coeff;
        }
    }

    pub fn set(&mut self, degree: i32, coeff: usize) {
        if coeff == 0 {
            self.dims.remove(&degree);
        } else {
            self.dims.insert(degree, coeff);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Nonzero `(degree, dim)` pairs in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.dims.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.dims.keys().next_back().copied()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// Evaluation at `t = -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(k, d)| if k.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }

    /// Degreewise sum.
    pub fn sum(&self, other: &LaurentDims) -> LaurentDims {
        let mut out = self.clone();
        for (k, d) in other.iter() {
            out.add(k, d);
        }
        out
    }

    /// Applies the affine degree map `k ↦ sign·k + shift`.
    pub fn regrade(&self, sign: i32, shift: i32) -> LaurentDims {
        LaurentDims::from_pairs(self.iter().map(|(k, d)| (sign * k + shift, d)))
    }

    pub fn to_pairs(&self) -> Vec<(i32, usize)> {
        self.iter().collect()
    }
}

impl FromIterator<(i32, usize)> for LaurentDims {
    fn from_iter<I: IntoIterator<Item = (i32, usize)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl fmt::Display for LaurentDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, d)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (k, d) {
                (0, d) => write!(f, "{d}")?,
                (1, 1) => write!(f, "t")?,
                (1, d) => write!(f, "{d}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, d) => write!(f, "{d}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentDims({self})")
    }
}

impl Serialize for LaurentDims {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentDims {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, usize)> = Vec::deserialize(deserializer)?;
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(D::Error::custom("degrees must be strictly ascending"));
        }
        Ok(LaurentDims::from_pairs(pairs))
    }
}
