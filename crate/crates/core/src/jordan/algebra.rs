use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

use super::descriptor::{hermitian_dim, AlgebraDescriptor, SimpleFactor};
use super::element::{Block, Element, HermitianMatrix};

/// Concrete realization of one simple factor.
///
/// Unlike [`SimpleFactor`], a `Hermitian` model may have `k = 1` or `k = 2`;
/// the 2×2 complex model is what the tensor constructions run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorModel {
    RealLine,
    Spin { n: usize },
    Hermitian { k: usize, scalar: ScalarKind },
}

impl FactorModel {
    pub fn dim(&self) -> usize {
        match *self {
            FactorModel::RealLine => 1,
            FactorModel::Spin { n } => n + 1,
            FactorModel::Hermitian { k, scalar } => hermitian_dim(k, scalar),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            FactorModel::RealLine => 1,
            FactorModel::Spin { .. } => 2,
            FactorModel::Hermitian { k, .. } => k,
        }
    }

    /// The isomorphism class of this factor.
    pub fn canonical(&self) -> SimpleFactor {
        match *self {
            FactorModel::RealLine => SimpleFactor::RealLine,
            FactorModel::Spin { n } => SimpleFactor::Spin { n },
            FactorModel::Hermitian { k, scalar } => {
                SimpleFactor::hermitian(k, scalar).expect("validated at construction")
            }
        }
    }

    fn zero_block(&self) -> Block {
        match *self {
            FactorModel::RealLine => Block::Real(0.0),
            FactorModel::Spin { n } => Block::Spin {
                s: 0.0,
                x: vec![0.0; n],
            },
            FactorModel::Hermitian { k, scalar } => Block::Matrix(HermitianMatrix::zeros(k, scalar)),
        }
    }

    fn identity_block(&self) -> Block {
        match *self {
            FactorModel::RealLine => Block::Real(1.0),
            FactorModel::Spin { n } => Block::Spin {
                s: 1.0,
                x: vec![0.0; n],
            },
            FactorModel::Hermitian { k, scalar } => {
                Block::Matrix(HermitianMatrix::identity(k, scalar))
            }
        }
    }

    /// Block with coordinates `coords` (length `dim`) in the standard basis.
    fn block_from_coords(&self, coords: &[f64]) -> Block {
        debug_assert_eq!(coords.len(), self.dim());
        match *self {
            FactorModel::RealLine => Block::Real(coords[0]),
            FactorModel::Spin { .. } => Block::Spin {
                s: coords[0],
                x: coords[1..].to_vec(),
            },
            FactorModel::Hermitian { k, scalar } => {
                let d = scalar.arity();
                let mut m = HermitianMatrix::zeros(k, scalar);
                for i in 0..k {
                    m.set_hermitian(i, i, Scalar::real(scalar, coords[i]));
                }
                let mut pos = k;
                for i in 0..k {
                    for j in i + 1..k {
                        let entry = Scalar::new(scalar, &coords[pos..pos + d]).expect("finite");
                        m.set_hermitian(i, j, entry);
                        pos += d;
                    }
                }
                Block::Matrix(m)
            }
        }
    }

    fn coords_of(&self, block: &Block, out: &mut Vec<f64>) {
        match block {
            Block::Real(a) => out.push(*a),
            Block::Spin { s, x } => {
                out.push(*s);
                out.extend_from_slice(x);
            }
            Block::Matrix(m) => {
                let k = m.size();
                for i in 0..k {
                    out.push(m.get(i, i).re());
                }
                for i in 0..k {
                    for j in i + 1..k {
                        out.extend_from_slice(m.get(i, j).coords());
                    }
                }
            }
        }
    }

    /// Idempotents spanning the factor.
    fn proposition_basis(&self) -> Vec<Block> {
        match *self {
            FactorModel::RealLine => vec![Block::Real(1.0)],
            FactorModel::Spin { n } => {
                let mut out = Vec::with_capacity(n + 1);
                for i in 0..n {
                    let mut x = vec![0.0; n];
                    x[i] = 0.5;
                    out.push(Block::Spin { s: 0.5, x });
                }
                let mut x = vec![0.0; n];
                x[0] = -0.5;
                out.push(Block::Spin { s: 0.5, x });
                out
            }
            FactorModel::Hermitian { k, scalar } => {
                let mut out = Vec::with_capacity(self.dim());
                for i in 0..k {
                    let mut m = HermitianMatrix::zeros(k, scalar);
                    m.set_hermitian(i, i, Scalar::one(scalar));
                    out.push(Block::Matrix(m));
                }
                // Projector onto (e_i + u e_j)/√2 for each unit u.
                for i in 0..k {
                    for j in i + 1..k {
                        for unit in 0..scalar.arity() {
                            let mut m = HermitianMatrix::zeros(k, scalar);
                            m.set_hermitian(i, i, Scalar::real(scalar, 0.5));
                            m.set_hermitian(j, j, Scalar::real(scalar, 0.5));
                            m.set_hermitian(i, j, Scalar::unit(scalar, unit).conj().scale(0.5));
                            out.push(Block::Matrix(m));
                        }
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for FactorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorModel::RealLine => write!(f, "R"),
            FactorModel::Spin { n } => write!(f, "spin({n})"),
            FactorModel::Hermitian { k, scalar } => write!(f, "H({k},{scalar})"),
        }
    }
}

impl From<SimpleFactor> for FactorModel {
    fn from(f: SimpleFactor) -> Self {
        match f {
            SimpleFactor::RealLine => FactorModel::RealLine,
            SimpleFactor::Spin { n } => FactorModel::Spin { n },
            SimpleFactor::Matrix { k, scalar } => FactorModel::Hermitian { k, scalar },
        }
    }
}

/// A concrete formally real Jordan algebra: a direct sum of factor models.
#[derive(Clone, Debug)]
pub struct JordanAlgebra {
    factors: Vec<FactorModel>,
    basis: OnceLock<Vec<Element>>,
}

impl PartialEq for JordanAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl JordanAlgebra {
    pub(crate) fn from_models(factors: Vec<FactorModel>) -> Self {
        JordanAlgebra {
            factors,
            basis: OnceLock::new(),
        }
    }

    pub fn new(factors: Vec<FactorModel>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Domain("an algebra needs at least one factor".into()));
        }
        for f in &factors {
            match *f {
                FactorModel::Spin { n } if n < 2 => {
                    return Err(Error::Domain(format!("spin({n}) needs n >= 2")))
                }
                FactorModel::Hermitian { k: 0, .. } => {
                    return Err(Error::Domain("H(0, _) is empty".into()))
                }
                FactorModel::Hermitian { k, scalar: ScalarKind::Octonion } if k > 3 => {
                    return Err(Error::Domain(format!("H({k},O) is not a Jordan algebra")))
                }
                _ => {}
            }
        }
        Ok(Self::from_models(factors))
    }

    pub fn from_descriptor(desc: &AlgebraDescriptor) -> Self {
        Self::from_models(desc.factors().iter().map(|f| FactorModel::from(*f)).collect())
    }

    /// The Hermitian `k × k` matrix model, including the small sizes that the
    /// descriptor canonicalizes away.
    pub fn hermitian_model(k: usize, scalar: ScalarKind) -> Result<Self> {
        Self::new(vec![FactorModel::Hermitian { k, scalar }])
    }

    /// The concrete 2×2 Hermitian matrix realization of a rank-2 factor.
    pub fn hermitian_2x2_model(scalar: ScalarKind) -> Self {
        Self::from_models(vec![FactorModel::Hermitian { k: 2, scalar }])
    }

    pub fn spin(n: usize) -> Result<Self> {
        Self::new(vec![FactorModel::Spin { n }])
    }

    pub fn factors(&self) -> &[FactorModel] {
        &self.factors
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        AlgebraDescriptor::new(self.factors.iter().map(FactorModel::canonical).collect())
            .expect("non-empty")
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(FactorModel::dim).sum()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(FactorModel::rank).sum()
    }

    pub fn zero(&self) -> Element {
        Element::from_blocks_unchecked(self.factors.iter().map(FactorModel::zero_block).collect())
    }

    pub fn identity(&self) -> Element {
        Element::from_blocks_unchecked(
            self.factors.iter().map(FactorModel::identity_block).collect(),
        )
    }

    /// Identity of factor `index`, embedded in the whole algebra.
    pub fn factor_identity(&self, index: usize) -> Element {
        self.identity().restrict(index)
    }

    pub fn contains(&self, a: &Element) -> bool {
        a.blocks().len() == self.factors.len()
            && a.blocks().iter().zip(&self.factors).all(|(b, f)| b.model() == *f)
    }

    pub(crate) fn check_contains(&self, a: &Element) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "element of {} does not belong to {}",
                a.algebra(),
                self
            )))
        }
    }

    /// Coordinates of `a` in the standard basis returned by [`Self::basis`].
    pub fn coords(&self, a: &Element) -> Vec<f64> {
        assert!(self.contains(a), "element not in algebra");
        let mut out = Vec::with_capacity(self.dim());
        for (f, b) in self.factors.iter().zip(a.blocks()) {
            f.coords_of(b, &mut out);
        }
        out
    }

    pub fn from_coords(&self, coords: &[f64]) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::usage(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::usage("non-finite coordinate"));
        }
        let mut pos = 0;
        let blocks = self
            .factors
            .iter()
            .map(|f| {
                let d = f.dim();
                let b = f.block_from_coords(&coords[pos..pos + d]);
                pos += d;
                b
            })
            .collect();
        Ok(Element::from_blocks_unchecked(blocks))
    }

    /// Standard basis: per factor the diagonal units `E_ii` followed by
    /// `u E_ij + conj(u) E_ji` for `i < j` and each scalar unit `u`; for spin
    /// factors `(1, 0)` then `(0, e_i)`.
    pub fn basis(&self) -> &[Element] {
        self.basis.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|i| {
                    let mut c = vec![0.0; n];
                    c[i] = 1.0;
                    self.from_coords(&c).expect("valid coordinates")
                })
                .collect()
        })
    }

    /// A basis of the algebra consisting of idempotents.
    pub fn proposition_basis(&self) -> Vec<Element> {
        let zero = self.zero();
        let mut out = Vec::with_capacity(self.dim());
        for (i, f) in self.factors.iter().enumerate() {
            for b in f.proposition_basis() {
                let mut blocks = zero.blocks().to_vec();
                blocks[i] = b;
                out.push(Element::from_blocks_unchecked(blocks));
            }
        }
        out
    }

    /// Element with independent standard normal coordinates.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let coords: Vec<f64> = (0..self.dim()).map(|_| rng.sample(StandardNormal)).collect();
        self.from_coords(&coords).expect("finite coordinates")
    }

    /// Direct sum with another algebra.
    pub fn direct_sum(&self, other: &JordanAlgebra) -> JordanAlgebra {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Self::from_models(factors)
    }

    /// Embed one block per factor.
    pub fn element(&self, blocks: Vec<Block>) -> Result<Element> {
        let e = Element::from_blocks(blocks)?;
        self.check_contains(&e)?;
        Ok(e)
    }
}

impl fmt::Display for JordanAlgebra {
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

    #[test]
    fn basis_size_matches_dimension() {
        for s in ScalarKind::ALL {
            for k in 1..=3 {
                let a = JordanAlgebra::hermitian_model(k, s).unwrap();
                assert_eq!(a.basis().len(), hermitian_dim(k, s));
                assert_eq!(a.proposition_basis().len(), a.dim());
            }
        }
        assert_eq!(JordanAlgebra::spin(4).unwrap().basis().len(), 5);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = JordanAlgebra::hermitian_model(3, ScalarKind::Octonion)
            .unwrap()
            .direct_sum(&JordanAlgebra::spin(3).unwrap());
        let c: Vec<f64> = (0..a.dim()).map(|i| (i as f64).sin()).collect();
        let e = a.from_coords(&c).unwrap();
        assert_eq!(a.coords(&e), c);
        assert!(e.hermitian_defect() == 0.0);
    }

    #[test]
    fn proposition_basis_is_idempotent() {
        for s in ScalarKind::ALL {
            let a = JordanAlgebra::hermitian_model(3, s).unwrap();
            for p in a.proposition_basis() {
                assert!(p.square().dist(&p) < 1e-14, "{p}");
            }
        }
    }

    #[test]
    fn octonion_matrices_larger_than_three_are_rejected() {
        assert!(JordanAlgebra::hermitian_model(4, ScalarKind::Octonion).is_err());
        assert!(JordanAlgebra::spin(1).is_err());
    }
}
