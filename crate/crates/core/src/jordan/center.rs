use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{numeric_rank, symmetric_eigen};

use super::algebra::JordanAlgebra;
use super::descriptor::SimpleFactor;
use super::element::Element;
use super::spectral::spectral_decompose_seeded;

/// Center of an algebra and its splitting into simple summands.
#[derive(Clone, Debug)]
pub struct CenterDecomposition {
    pub center_basis: Vec<Element>,
    /// Minimal central idempotents, ordered by the factor they occupy.
    pub central_idempotents: Vec<Element>,
    /// Isomorphism class of each summand `{e, A, e}`, same order.
    pub summands: Vec<SimpleFactor>,
}

impl CenterDecomposition {
    pub fn center_dim(&self) -> usize {
        self.center_basis.len()
    }

    pub fn is_simple(&self) -> bool {
        self.center_basis.len() == 1
    }
}

/// Matrix of `L_b` in the standard basis.
fn multiplication_operator(algebra: &JordanAlgebra, b: &Element) -> DMatrix<f64> {
    let basis = algebra.basis();
    let n = basis.len();
    let mut m = DMatrix::zeros(n, n);
    for (j, e) in basis.iter().enumerate() {
        let col = algebra.coords(&b.circ(e));
        for i in 0..n {
            m[(i, j)] = col[i];
        }
    }
    m
}

/// Solve `L_z L_b = L_b L_z` for every basis element `b`, then split the
/// identity along a generic central element.
pub fn center_and_summands(algebra: &JordanAlgebra, tol: f64, seed: u64) -> Result<CenterDecomposition> {
    let basis = algebra.basis();
    let n = basis.len();
    let ops: Vec<DMatrix<f64>> = basis
        .iter()
        .map(|b| multiplication_operator(algebra, b))
        .collect();

    // Normal matrix of the stacked system Σ_i z_i [L_i, L_b] = 0.
    let mut gram = DMatrix::<f64>::zeros(n, n);
    for lb in &ops {
        let comms: Vec<DMatrix<f64>> = ops.iter().map(|li| li * lb - lb * li).collect();
        for i in 0..n {
            for j in i..n {
                let v = comms[i].dot(&comms[j]);
                gram[(i, j)] += v;
                if i != j {
                    gram[(j, i)] += v;
                }
            }
        }
    }

    let eig = symmetric_eigen(gram);
    let top = eig.first().map(|p| p.0).unwrap_or(0.0).max(f64::MIN_POSITIVE);
    let null_cut = tol.max(1e-13) * top;
    let clear_cut = tol.sqrt() * top;
    let mut center_basis = Vec::new();
    for (value, vector) in &eig {
        if *value <= null_cut {
            center_basis.push(algebra.from_coords(vector.as_slice())?);
        } else if *value < clear_cut {
            return Err(Error::numeric(
                "commutation system has an ambiguous numerical rank",
                *value / top,
            ));
        }
    }
    if center_basis.is_empty() {
        return Err(Error::numeric("center came out trivial", 0.0));
    }

    // A generic central element separates the summands by eigenvalue.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut z = algebra.zero();
    for c in &center_basis {
        z = z.axpy(rng.sample::<f64, _>(StandardNormal), c);
    }
    let spectral = spectral_decompose_seeded(&z, tol, seed)?;
    let mut idempotents: Vec<Element> = spectral.grouped(1e-6).into_iter().map(|(_, e)| e).collect();
    if idempotents.len() != center_basis.len() {
        return Err(Error::numeric(
            format!(
                "found {} central idempotents for a {}-dimensional center",
                idempotents.len(),
                center_basis.len()
            ),
            (idempotents.len() as f64 - center_basis.len() as f64).abs(),
        ));
    }
    idempotents.sort_by_key(leading_block);

    let mut summands = Vec::with_capacity(idempotents.len());
    for e in &idempotents {
        let images: Vec<Vec<f64>> = basis.iter().map(|b| algebra.coords(&e.circ(b))).collect();
        let (dim, _) = numeric_rank(&images, 1e-8);
        let rank = e.trace().round() as usize;
        let factor = SimpleFactor::from_dim_rank(dim, rank).ok_or_else(|| {
            Error::numeric(format!("no simple factor has dimension {dim} and rank {rank}"), 0.0)
        })?;
        summands.push(factor);
    }

    Ok(CenterDecomposition {
        center_basis,
        central_idempotents: idempotents,
        summands,
    })
}

fn leading_block(e: &Element) -> usize {
    e.blocks()
        .iter()
        .enumerate()
        .map(|(i, _)| (i, e.restrict(i).norm()))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(i, _)| i)
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::descriptor::AlgebraDescriptor;
    use crate::scalar::ScalarKind;
    use crate::DEFAULT_SEED;

    #[test]
    fn simple_complex_factor() {
        let a = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        let c = center_and_summands(&a, 1e-9, DEFAULT_SEED).unwrap();
        assert!(c.is_simple());
        assert_eq!(c.summands, vec![SimpleFactor::Matrix { k: 3, scalar: ScalarKind::Complex }]);
        assert!(c.central_idempotents[0].dist(&a.identity()) < 1e-8);
    }

    #[test]
    fn real_matrix_plus_spin() {
        let d: AlgebraDescriptor = "H(3,R) (+) spin(4)".parse().unwrap();
        let a = JordanAlgebra::from_descriptor(&d);
        let c = center_and_summands(&a, 1e-9, DEFAULT_SEED).unwrap();
        assert_eq!(c.center_dim(), 2);
        assert!(c.central_idempotents[0].dist(&a.factor_identity(0)) < 1e-8);
        assert!(c.central_idempotents[1].dist(&a.factor_identity(1)) < 1e-8);
        assert_eq!(c.summands, d.factors().to_vec());
    }

    #[test]
    fn center_dimension_counts_factors() {
        let d: AlgebraDescriptor = "R (+) H(3,H) (+) spin(2) (+) R".parse().unwrap();
        let a = JordanAlgebra::from_descriptor(&d);
        let c = center_and_summands(&a, 1e-9, DEFAULT_SEED).unwrap();
        assert_eq!(c.center_dim(), 4);
        assert_eq!(c.summands, d.factors().to_vec());
        let mut sum = a.zero();
        for e in &c.central_idempotents {
            sum = &sum + e;
        }
        assert!(sum.dist(&a.identity()) < 1e-8);
    }

    #[test]
    fn albert_algebra_is_simple() {
        let a = JordanAlgebra::hermitian_model(3, ScalarKind::Octonion).unwrap();
        let c = center_and_summands(&a, 1e-9, DEFAULT_SEED).unwrap();
        assert!(c.is_simple());
        assert_eq!(c.summands[0].dim(), 27);
    }
}
