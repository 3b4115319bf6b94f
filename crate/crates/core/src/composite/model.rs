use serde::Serialize;

use crate::error::{Error, Result};
use crate::jordan::{AlgebraDescriptor, Block, Element, FactorModel, JordanAlgebra, SimpleFactor};
use crate::logic::Proposition;
use crate::scalar::ScalarKind;

/// How `⊗` is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TensorKind {
    /// Kronecker products of complex Hermitian matrices.
    ComplexKron,
    /// Kronecker products of real symmetric matrices into `H_{k²}(R)`.
    RealKron,
}

impl std::fmt::Display for TensorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TensorKind::ComplexKron => "complex-kron",
            TensorKind::RealKron => "real-kron",
        })
    }
}

/// A bipartite model `⊗: L_A × L_A → L_{A²}` given by blockwise Kronecker
/// products.
///
/// Every factor of the base is realized as a Hermitian matrix algebra: the
/// real line as `H_1(C)`, `H_k(C)` as itself, and spin factors through the
/// `H_2(C)` model. Target block `t` is the Kronecker product of base blocks
/// `pairs[t]`.
#[derive(Clone, Debug)]
pub struct TensorModel {
    kind: TensorKind,
    base: AlgebraDescriptor,
    realized: JordanAlgebra,
    target: JordanAlgebra,
    pairs: Vec<(usize, usize)>,
    notes: Vec<String>,
}

const SPIN_NOTE: &str = "spin factors are routed through the H(2,C) model; for n != 3 this uses a \
non-constructive logic isomorphism, and discontinuous swap automorphisms of the spin logic yield \
many other tensor maps";

/// Build the complex Kronecker model of `desc`.
pub fn tensor_construct(desc: &AlgebraDescriptor) -> Result<TensorModel> {
    let mut sizes = Vec::with_capacity(desc.factors().len());
    let mut notes = Vec::new();
    for f in desc.factors() {
        match *f {
            SimpleFactor::RealLine => sizes.push(1),
            SimpleFactor::Spin { n } => {
                sizes.push(2);
                if n != 3 && notes.is_empty() {
                    notes.push(SPIN_NOTE.to_string());
                }
            }
            SimpleFactor::Matrix {
                k,
                scalar: ScalarKind::Complex,
            } => sizes.push(k),
            SimpleFactor::Matrix { .. } => {
                return Err(Error::Infeasible(format!(
                    "{f} admits no tensor product satisfying C1-C5: its square would need \
                     dimension {} but no simple factor of rank {} has it",
                    f.dim() * f.dim(),
                    f.rank() * f.rank()
                )))
            }
        }
    }
    if desc.factors().contains(&SimpleFactor::Spin { n: 3 }) && notes.is_empty() {
        notes.push("spin(3) is realized as H(2,C)".to_string());
    }
    Ok(TensorModel::from_sizes(
        TensorKind::ComplexKron,
        desc.clone(),
        ScalarKind::Complex,
        &sizes,
        notes,
    ))
}

/// Symmetric Kronecker model `H_k(R) × H_k(R) → H_{k²}(R)`.
pub fn real_counterexample_model(k: usize) -> Result<TensorModel> {
    if k < 2 {
        return Err(Error::usage(format!("real Kronecker demo needs k >= 2, got {k}")));
    }
    let base = AlgebraDescriptor::simple(SimpleFactor::hermitian(k, ScalarKind::Real)?);
    Ok(TensorModel::from_sizes(
        TensorKind::RealKron,
        base,
        ScalarKind::Real,
        &[k],
        vec![format!("base realized as H({k},R), target H({},R)", k * k)],
    ))
}

impl TensorModel {
    fn from_sizes(
        kind: TensorKind,
        base: AlgebraDescriptor,
        scalar: ScalarKind,
        sizes: &[usize],
        notes: Vec<String>,
    ) -> Self {
        let realized = JordanAlgebra::new(
            sizes
                .iter()
                .map(|&k| FactorModel::Hermitian { k, scalar })
                .collect(),
        )
        .expect("sizes are positive and scalars commutative");
        let mut pairs = Vec::with_capacity(sizes.len() * sizes.len());
        let mut target_models = Vec::with_capacity(sizes.len() * sizes.len());
        for (i, a) in sizes.iter().enumerate() {
            for (j, b) in sizes.iter().enumerate() {
                pairs.push((i, j));
                target_models.push(FactorModel::Hermitian { k: a * b, scalar });
            }
        }
        let target = JordanAlgebra::new(target_models).expect("valid target");
        TensorModel {
            kind,
            base,
            realized,
            target,
            pairs,
            notes,
        }
    }

    pub fn kind(&self) -> TensorKind {
        self.kind
    }

    /// The descriptor the model was built for.
    pub fn base(&self) -> &AlgebraDescriptor {
        &self.base
    }

    /// Concrete algebra the map acts on.
    pub fn base_algebra(&self) -> &JordanAlgebra {
        &self.realized
    }

    pub fn target_algebra(&self) -> &JordanAlgebra {
        &self.target
    }

    /// Canonical descriptor of the target.
    pub fn target(&self) -> AlgebraDescriptor {
        self.target.descriptor()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Whether some base factor is routed through a model of different
    /// dimension.
    pub fn is_routed(&self) -> bool {
        self.realized.dim() != self.base.dim()
    }

    /// `a ⊗ b` on elements of the realized base.
    pub fn tensor(&self, a: &Element, b: &Element) -> Result<Element> {
        if !self.realized.contains(a) || !self.realized.contains(b) {
            return Err(Error::usage(format!(
                "tensor factors must be elements of {}",
                self.realized
            )));
        }
        let blocks = self
            .pairs
            .iter()
            .map(|&(i, j)| match (a.block(i), b.block(j)) {
                (Block::Matrix(x), Block::Matrix(y)) => Block::Matrix(x.kron(y)),
                _ => unreachable!("realized base has matrix blocks only"),
            })
            .collect();
        self.target.element(blocks)
    }

    /// `p ⊗ q` on propositions, certified in the target.
    pub fn tensor_prop(&self, p: &Proposition, q: &Proposition) -> Result<Proposition> {
        let e = self.tensor(p.element(), q.element())?;
        Proposition::certify(e, 4.0 * p.tol().max(q.tol()).max(1e-12))
    }
}

/// Serializable summary of a model.
#[derive(Clone, Debug, Serialize)]
pub struct ModelSummary {
    pub kind: TensorKind,
    pub base: String,
    pub realized_base: String,
    pub target: String,
    pub target_dim: usize,
    pub target_rank: usize,
    pub notes: Vec<String>,
}

impl From<&TensorModel> for ModelSummary {
    fn from(m: &TensorModel) -> Self {
        ModelSummary {
            kind: m.kind,
            base: m.base.to_string(),
            realized_base: m.realized.to_string(),
            target: m.target.to_string(),
            target_dim: m.target.dim(),
            target_rank: m.target.rank(),
            notes: m.notes.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_spec;

    #[test]
    fn two_by_two_complex_target() {
        let m = tensor_construct(&parse_spec("H(2,C)").unwrap()).unwrap();
        assert_eq!(m.target_algebra().dim(), 16);
        assert_eq!(m.target_algebra().rank(), 4);
        assert_eq!(m.target(), parse_spec("H(4,C)").unwrap());
        assert!(!m.is_routed());
    }

    #[test]
    fn classical_bit_target_has_four_points() {
        let m = tensor_construct(&parse_spec("R (+) R").unwrap()).unwrap();
        assert_eq!(m.target(), parse_spec("R (+) R (+) R (+) R").unwrap());
    }

    #[test]
    fn three_by_three_complex_target() {
        let m = tensor_construct(&parse_spec("H(3,C)").unwrap()).unwrap();
        assert_eq!(m.target_algebra().dim(), 81);
        assert_eq!(m.target(), parse_spec("H(9,C)").unwrap());
    }

    #[test]
    fn non_complex_matrix_factors_are_infeasible() {
        for spec in ["H(3,R)", "H(3,H)", "H(3,O)", "H(3,C) (+) H(4,R)"] {
            let err = tensor_construct(&parse_spec(spec).unwrap()).unwrap_err();
            assert!(matches!(err, Error::Infeasible(_)), "{spec}");
        }
    }

    #[test]
    fn spin_factors_are_routed_and_flagged() {
        let m = tensor_construct(&parse_spec("spin(5)").unwrap()).unwrap();
        assert!(m.is_routed());
        assert!(!m.notes().is_empty());
        assert_eq!(m.target_algebra().dim(), 16);
    }

    #[test]
    fn real_demo_shapes() {
        let m = real_counterexample_model(3).unwrap();
        assert_eq!(m.base_algebra().dim(), 6);
        assert_eq!(m.target_algebra().dim(), 45);
        assert!(real_counterexample_model(1).is_err());
    }
}
