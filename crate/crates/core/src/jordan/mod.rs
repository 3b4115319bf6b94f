//! Finite-dimensional formally real Jordan algebras.
//!
//! Matrix factors use `x ∘ y = (xy + yx)/2`. Spin factors are realized as
//! `R ⊕ R^n` with `(s, x) ∘ (t, y) = (st + ⟨x, y⟩, s y + t x)` and identity
//! `(1, 0)`. The trace form `⟨a, b⟩ = tr(a ∘ b)` is normalized so that every
//! minimal idempotent has trace one; in a spin factor `tr(s, x) = 2s`.

mod algebra;
mod center;
mod descriptor;
mod element;
mod spectral;

pub use algebra::{FactorModel, JordanAlgebra};
pub use center::{center_and_summands, CenterDecomposition};
pub use descriptor::{hermitian_dim, AlgebraDescriptor, SimpleFactor};
pub use element::{Block, Element, HermitianMatrix};
pub use spectral::{spectral_decompose, spectral_decompose_seeded, SpectralDecomposition, DEFAULT_TOL};

use crate::error::Result;

pub fn jordan_product(a: &Element, b: &Element) -> Result<Element> {
    a.check_same(b)?;
    Ok(a.circ(b))
}

/// `{x, y, z} = x∘(y∘z) − y∘(z∘x) + z∘(x∘y)`.
pub fn triple_product(x: &Element, y: &Element, z: &Element) -> Result<Element> {
    x.check_same(y)?;
    x.check_same(z)?;
    Ok(x.triple(y, z))
}

pub fn trace_form(a: &Element, b: &Element) -> Result<f64> {
    a.check_same(b)?;
    Ok(a.inner(b))
}

/// Whether every eigenvalue of `a` is at least `-tol`.
pub fn is_positive(a: &Element, tol: f64) -> Result<bool> {
    let d = spectral_decompose(a, DEFAULT_TOL.min(tol.max(1e-12)))?;
    Ok(d.eigenvalues().iter().all(|r| *r >= -tol))
}

/// Largest `‖x∘(y∘z) − y∘(x∘z)‖` over the standard basis `z`.
pub fn operator_commutator_residual(x: &Element, y: &Element) -> Result<f64> {
    x.check_same(y)?;
    let algebra = x.algebra();
    Ok(algebra
        .basis()
        .iter()
        .map(|z| x.circ(&y.circ(z)).dist(&y.circ(&x.circ(z))))
        .fold(0.0, f64::max))
}

/// `x` and `y` operator-commute when `L_x L_y = L_y L_x`; checked on the full
/// basis, with `tol` scaled by `max(1, ‖x‖‖y‖)`.
pub fn operator_commute(x: &Element, y: &Element, tol: f64) -> Result<bool> {
    let residual = operator_commutator_residual(x, y)?;
    Ok(residual <= tol * (x.norm() * y.norm()).max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Scalar, ScalarKind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn real_matrix(rows: &[&[f64]]) -> Element {
        let k = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|v| Scalar::real(ScalarKind::Real, *v)))
            .collect();
        let m = HermitianMatrix::from_entries(k, ScalarKind::Real, entries, 1e-12).unwrap();
        Element::from_blocks(vec![Block::Matrix(m)]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = alg.random_element(&mut rng);
        assert!(jordan_product(&alg.identity(), &a).unwrap().dist(&a) < 1e-14);
    }

    #[test]
    fn spin_product_rule() {
        let a = Element::from_blocks(vec![Block::Spin { s: 2.0, x: vec![1.0, 0.0, 3.0] }]).unwrap();
        let b = Element::from_blocks(vec![Block::Spin { s: -1.0, x: vec![0.5, 2.0, 1.0] }]).unwrap();
        let c = jordan_product(&a, &b).unwrap();
        // (st + <x,y>, s y + t x)
        let expect = Element::from_blocks(vec![Block::Spin {
            s: -2.0 + 0.5 + 3.0,
            x: vec![2.0 * 0.5 - 1.0, 4.0, 2.0 - 3.0],
        }])
        .unwrap();
        assert!(c.dist(&expect) < 1e-14);
        let one = a.algebra().identity();
        assert_eq!(jordan_product(&one, &b).unwrap(), b);
    }

    #[test]
    fn diagonal_unit_against_symmetric_offdiagonal() {
        let e11 = real_matrix(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let sym = real_matrix(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let got = jordan_product(&e11, &sym).unwrap();
        assert!(got.dist(&sym.scale(0.5)) < 1e-15);
    }

    #[test]
    fn triple_product_examples() {
        let alg = JordanAlgebra::hermitian_model(2, ScalarKind::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = alg.random_element(&mut rng);
        let one = alg.identity();
        assert!(triple_product(&one, &a, &one).unwrap().dist(&a) < 1e-13);

        let p = alg.from_coords(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let a00 = alg.coords(&a)[0];
        assert!(triple_product(&p, &a, &p).unwrap().dist(&p.scale(a00)) < 1e-13);

        let q = alg.from_coords(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(triple_product(&p, &q, &p).unwrap().norm() < 1e-15);
    }

    #[test]
    fn trace_form_examples() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        let one = alg.identity();
        assert!((trace_form(&one, &one).unwrap() - 3.0).abs() < 1e-15);
        let p = alg.basis()[0].clone();
        let q = alg.basis()[1].clone();
        assert_eq!(trace_form(&p, &q).unwrap(), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = alg.random_element(&mut rng);
        assert!(trace_form(&a, &a).unwrap() > 0.0);
    }

    #[test]
    fn mismatched_algebras_are_usage_errors() {
        let a = JordanAlgebra::hermitian_model(3, ScalarKind::Real).unwrap().identity();
        let b = JordanAlgebra::spin(3).unwrap().identity();
        assert!(matches!(jordan_product(&a, &b), Err(crate::Error::Usage(_))));
        assert!(triple_product(&a, &a, &b).is_err());
        assert!(trace_form(&a, &b).is_err());
        assert!(operator_commute(&a, &b, 1e-9).is_err());
    }

    #[test]
    fn positivity_examples() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Quaternion).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = alg.random_element(&mut rng);
        assert!(is_positive(&a.square(), 1e-9).unwrap());
        assert!(!is_positive(&alg.identity().scale(-1.0), 1e-9).unwrap());
        let p = alg.proposition_basis()[4].clone();
        let b = alg.random_element(&mut rng).square();
        assert!(is_positive(&p.triple(&b, &p), 1e-9).unwrap());
    }

    #[test]
    fn operator_commutation_examples() {
        let e11 = real_matrix(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let e22 = real_matrix(&[&[0.0, 0.0], &[0.0, 1.0]]);
        let diag_proj = real_matrix(&[&[0.5, 0.5], &[0.5, 0.5]]);
        assert!(operator_commute(&e11, &e22, 1e-9).unwrap());
        assert!(!operator_commute(&e11, &diag_proj, 1e-9).unwrap());
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Octonion).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = alg.random_element(&mut rng);
        assert!(operator_commute(&x, &x.square(), 1e-9).unwrap());
    }
}
