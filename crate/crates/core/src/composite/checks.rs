use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::numeric_rank;
use crate::logic::{complement, minimality_residual, random_minimal, random_proposition, Proposition};

use super::axioms::SPAN_RANK_CUT;
use super::model::{ModelSummary, TensorModel};

/// Dimension and rank of the target against the squares of the base, and the
/// rank of the products of a proposition basis.
#[derive(Clone, Debug, Serialize)]
pub struct SquareDimensionReport {
    pub model: ModelSummary,
    pub base_dim: usize,
    pub base_rank: usize,
    pub target_dim: usize,
    pub target_rank: usize,
    pub dim_holds: bool,
    pub rank_holds: bool,
    /// Rank of `{q_i ⊗ q_j}` for a proposition basis `q_i` of the base.
    pub basis_image_rank: usize,
    pub basis_image_count: usize,
    pub basis_image_independent: bool,
    pub passed: bool,
}

/// `n_target = n_base²`, `k_target = k_base²`, and linear independence of the
/// products of a proposition basis. Dimensions refer to the realized base.
pub fn check_square_dimensions(model: &TensorModel) -> Result<SquareDimensionReport> {
    let base = model.base_algebra();
    let target = model.target_algebra();
    let props = base.proposition_basis();
    let images: Vec<Vec<f64>> = props
        .par_iter()
        .flat_map_iter(|p| props.iter().map(move |q| (p, q)))
        .map(|(p, q)| model.tensor(p, q).map(|e| target.coords(&e)))
        .collect::<Result<_>>()?;
    let (rank, _) = numeric_rank(&images, SPAN_RANK_CUT);
    let (n, k) = (base.dim(), base.rank());
    let dim_holds = target.dim() == n * n;
    let rank_holds = target.rank() == k * k;
    let independent = rank == images.len();
    Ok(SquareDimensionReport {
        model: model.into(),
        base_dim: n,
        base_rank: k,
        target_dim: target.dim(),
        target_rank: target.rank(),
        dim_holds,
        rank_holds,
        basis_image_rank: rank,
        basis_image_count: images.len(),
        basis_image_independent: independent,
        passed: dim_holds && rank_holds && independent,
    })
}

/// Pure states of product propositions.
#[derive(Clone, Debug, Serialize)]
pub struct ProductStateReport {
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    /// Products `p1 ⊗ p2` of minimal propositions checked for minimality.
    pub minimality_checked: usize,
    pub minimality_max_residual: f64,
    pub minimality_holds: bool,
    /// `max |ℙ_{p1⊗p2}(q1⊗q2) − ℙ_{p1}(q1) ℙ_{p2}(q2)|`.
    pub product_rule_max_error: f64,
    pub product_rule_holds: bool,
    /// Draws whose images were orthogonal, all of which must have an
    /// orthogonal input pair.
    pub orthogonal_images: usize,
    pub orthogonality_holds: bool,
    pub passed: bool,
}

struct StateDraw {
    p1: Proposition,
    p2: Proposition,
    q1: Proposition,
    q2: Proposition,
}

fn pick<R: Rng>(model: &TensorModel, p: &Proposition, rng: &mut R) -> Result<Proposition> {
    let base = model.base_algebra();
    Ok(match rng.random_range(0..8) {
        0 => p.clone(),
        1 => complement(p),
        2 => random_minimal(base, rng)?,
        _ => random_proposition(base, rng)?,
    })
}

/// `ℙ_p(a)` by the sandwich, without re-checking minimality.
fn sandwich_value(p: &Proposition, a: &crate::jordan::Element) -> f64 {
    let pe = p.element();
    pe.triple(a, pe).inner(pe) / pe.inner(pe)
}

/// Minimality of `p1 ⊗ p2` (on at most 100 draws), the factorization
/// `ℙ_{p1⊗p2}(q1⊗q2) = ℙ_{p1}(q1) ℙ_{p2}(q2)`, and that orthogonal images come
/// from an orthogonal input pair.
pub fn check_product_states(model: &TensorModel, samples: usize, seed: u64, tol: f64) -> Result<ProductStateReport> {
    let base = model.base_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::with_capacity(samples);
    for _ in 0..samples {
        let p1 = random_minimal(base, &mut rng)?;
        let p2 = random_minimal(base, &mut rng)?;
        let q1 = pick(model, &p1, &mut rng)?;
        let q2 = pick(model, &p2, &mut rng)?;
        draws.push(StateDraw { p1, p2, q1, q2 });
    }
    let minimality_checked = samples.min(100);

    struct Row {
        minimality: Option<f64>,
        product_error: f64,
        images_orthogonal: bool,
        inputs_orthogonal: bool,
    }
    let rows = draws
        .par_iter()
        .enumerate()
        .map(|(i, d)| {
            let big_p = model.tensor_prop(&d.p1, &d.p2)?;
            let big_q = model.tensor(d.q1.element(), d.q2.element())?;
            let minimality = if i < minimality_checked {
                Some(minimality_residual(&big_p).unwrap_or(f64::INFINITY))
            } else {
                None
            };
            let joint = sandwich_value(&big_p, &big_q);
            let split = sandwich_value(&d.p1, d.q1.element()) * sandwich_value(&d.p2, d.q2.element());
            let images_orthogonal = big_p.element().circ(&big_q).norm() <= tol;
            let ortho = |a: &Proposition, b: &Proposition| a.element().circ(b.element()).norm() <= tol;
            Ok(Row {
                minimality,
                product_error: (joint - split).abs(),
                images_orthogonal,
                inputs_orthogonal: ortho(&d.p1, &d.q1) || ortho(&d.p2, &d.q2),
            })
        })
        .collect::<Result<Vec<Row>>>()?;

    let minimality_max_residual = rows.iter().filter_map(|r| r.minimality).fold(0.0, f64::max);
    let product_rule_max_error = rows.iter().map(|r| r.product_error).fold(0.0, f64::max);
    let orthogonal_images = rows.iter().filter(|r| r.images_orthogonal).count();
    let orthogonality_holds = rows.iter().all(|r| !r.images_orthogonal || r.inputs_orthogonal);
    let minimality_holds = minimality_max_residual <= tol;
    let product_rule_holds = product_rule_max_error <= tol;
    Ok(ProductStateReport {
        seed,
        tolerance: tol,
        samples,
        minimality_checked,
        minimality_max_residual,
        minimality_holds,
        product_rule_max_error,
        product_rule_holds,
        orthogonal_images,
        orthogonality_holds,
        passed: minimality_holds && product_rule_holds && orthogonality_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::tensor_construct;
    use crate::parse_spec;

    #[test]
    fn square_dimensions_for_small_models() {
        for (spec, n, k) in [("H(2,C)", 16, 4), ("R", 1, 1), ("R (+) R", 4, 4)] {
            let m = tensor_construct(&parse_spec(spec).unwrap()).unwrap();
            let r = check_square_dimensions(&m).unwrap();
            assert_eq!((r.target_dim, r.target_rank), (n, k), "{spec}");
            assert!(r.passed, "{spec}");
        }
    }

    #[test]
    fn product_rule_on_identical_and_orthogonal_inputs() {
        let m = tensor_construct(&parse_spec("H(2,C)").unwrap()).unwrap();
        let base = m.base_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let p = random_minimal(base, &mut rng).unwrap();
        let pp = m.tensor_prop(&p, &p).unwrap();
        assert!((sandwich_value(&pp, pp.element()) - 1.0).abs() < 1e-12);
        let q = m.tensor(complement(&p).element(), p.element()).unwrap();
        assert!(sandwich_value(&pp, &q).abs() < 1e-12);
    }

    #[test]
    fn product_states_small_sweep() {
        let m = tensor_construct(&parse_spec("H(2,C)").unwrap()).unwrap();
        let r = check_product_states(&m, 60, 5, 1e-9).unwrap();
        assert!(r.passed, "{r:#?}");
        assert!(r.orthogonal_images > 0);
    }
}
