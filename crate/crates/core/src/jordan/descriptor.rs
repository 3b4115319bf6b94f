use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::ScalarKind;

/// A simple formally real Jordan algebra, up to isomorphism.
///
/// `Matrix` only ever holds `k >= 3`; smaller Hermitian matrix algebras are
/// canonicalized by [`SimpleFactor::hermitian`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SimpleFactor {
    RealLine,
    /// Spin factor on `R ⊕ R^n`, dimension `n + 1`, rank 2.
    Spin { n: usize },
    Matrix { k: usize, scalar: ScalarKind },
}

impl SimpleFactor {
    pub fn spin(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!(
                "spin({n}): spin factors need n >= 2 (dimension at least 3)"
            )));
        }
        Ok(SimpleFactor::Spin { n })
    }

    /// `H_k(K)`, canonicalized: `H_1(K)` is the real line and `H_2(K)` is the
    /// spin factor of dimension `dim H_2(K)`.
    pub fn hermitian(k: usize, scalar: ScalarKind) -> Result<Self> {
        match k {
            0 => Err(Error::Domain("H(0, _): matrix size must be at least 1".into())),
            1 => Ok(SimpleFactor::RealLine),
            2 => Ok(SimpleFactor::Spin {
                n: scalar.arity() + 1,
            }),
            3 => Ok(SimpleFactor::Matrix { k, scalar }),
            _ if scalar == ScalarKind::Octonion => Err(Error::Domain(format!(
                "H({k},O): octonionic Hermitian matrices form a Jordan algebra only for k <= 3"
            ))),
            _ => Ok(SimpleFactor::Matrix { k, scalar }),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            SimpleFactor::RealLine => 1,
            SimpleFactor::Spin { n } => n + 1,
            SimpleFactor::Matrix { k, scalar } => hermitian_dim(k, scalar),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            SimpleFactor::RealLine => 1,
            SimpleFactor::Spin { .. } => 2,
            SimpleFactor::Matrix { k, .. } => k,
        }
    }

    /// Identify a simple factor from its dimension and rank.
    pub fn from_dim_rank(dim: usize, rank: usize) -> Option<Self> {
        match rank {
            0 => None,
            1 => (dim == 1).then_some(SimpleFactor::RealLine),
            2 => (dim >= 3).then(|| SimpleFactor::Spin { n: dim - 1 }),
            k => ScalarKind::ALL
                .into_iter()
                .filter(|s| *s != ScalarKind::Octonion || k == 3)
                .find(|s| hermitian_dim(k, *s) == dim)
                .map(|scalar| SimpleFactor::Matrix { k, scalar }),
        }
    }
}

/// `dim H_k(K) = k + arity(K) * k(k-1)/2`.
pub fn hermitian_dim(k: usize, scalar: ScalarKind) -> usize {
    k + scalar.arity() * k * (k - 1) / 2
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleFactor::RealLine => write!(f, "R"),
            SimpleFactor::Spin { n } => write!(f, "spin({n})"),
            SimpleFactor::Matrix { k, scalar } => write!(f, "H({k},{scalar})"),
        }
    }
}

/// Direct sum of simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    factors: Vec<SimpleFactor>,
}

impl AlgebraDescriptor {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Domain("an algebra needs at least one factor".into()));
        }
        Ok(AlgebraDescriptor { factors })
    }

    pub fn simple(factor: SimpleFactor) -> Self {
        AlgebraDescriptor {
            factors: vec![factor],
        }
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(SimpleFactor::dim).sum()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(SimpleFactor::rank).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn direct_sum(&self, other: &AlgebraDescriptor) -> AlgebraDescriptor {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        AlgebraDescriptor { factors }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " (+) ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ScalarKind::*;

    #[test]
    fn dimensions_of_the_matrix_families() {
        for k in 3..8 {
            assert_eq!(hermitian_dim(k, Real), k * (k + 1) / 2);
            assert_eq!(hermitian_dim(k, Complex), k * k);
            assert_eq!(hermitian_dim(k, Quaternion), k * (2 * k - 1));
        }
        assert_eq!(hermitian_dim(3, Octonion), 27);
    }

    #[test]
    fn small_matrices_canonicalize() {
        for s in ScalarKind::ALL {
            assert_eq!(SimpleFactor::hermitian(1, s).unwrap(), SimpleFactor::RealLine);
        }
        let spins: Vec<_> = ScalarKind::ALL
            .iter()
            .map(|s| SimpleFactor::hermitian(2, *s).unwrap())
            .collect();
        assert_eq!(
            spins,
            [2, 3, 5, 9].map(|n| SimpleFactor::Spin { n }).to_vec()
        );
        for s in ScalarKind::ALL {
            assert_eq!(SimpleFactor::hermitian(2, s).unwrap().dim(), hermitian_dim(2, s));
        }
    }

    #[test]
    fn octonion_size_constraint() {
        assert!(SimpleFactor::hermitian(3, Octonion).is_ok());
        assert!(matches!(
            SimpleFactor::hermitian(4, Octonion),
            Err(Error::Domain(_))
        ));
        assert!(SimpleFactor::spin(1).is_err());
    }

    #[test]
    fn sum_dimension_and_rank() {
        let d = AlgebraDescriptor::new(vec![
            SimpleFactor::Matrix { k: 3, scalar: Complex },
            SimpleFactor::Spin { n: 4 },
            SimpleFactor::RealLine,
        ])
        .unwrap();
        assert_eq!(d.dim(), 15);
        assert_eq!(d.rank(), 6);
        assert_eq!(d.to_string(), "H(3,C) (+) spin(4) (+) R");
    }

    #[test]
    fn identify_from_dim_rank() {
        for f in [
            SimpleFactor::RealLine,
            SimpleFactor::Spin { n: 7 },
            SimpleFactor::Matrix { k: 4, scalar: Quaternion },
            SimpleFactor::Matrix { k: 3, scalar: Octonion },
            SimpleFactor::Matrix { k: 5, scalar: Real },
        ] {
            assert_eq!(SimpleFactor::from_dim_rank(f.dim(), f.rank()), Some(f));
        }
        assert_eq!(SimpleFactor::from_dim_rank(7, 3), None);
    }
}
