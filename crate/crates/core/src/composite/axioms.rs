use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::jordan::{operator_commutator_residual, Element, JordanAlgebra};
use crate::linalg::numeric_rank;
use crate::logic::{random_frame, Proposition};

use super::model::{ModelSummary, TensorModel};

/// Relative singular-value cut for span ranks.
pub const SPAN_RANK_CUT: f64 = 1e-8;

#[derive(Clone, Debug, Serialize)]
pub struct AxiomVerdict {
    pub name: String,
    pub statement: String,
    pub passed: bool,
    pub checked: usize,
    pub max_residual: f64,
    pub counterexample: Option<String>,
}

/// Rank of the span of product propositions against the target dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpanRank {
    pub rank: usize,
    pub target_dim: usize,
    pub vectors: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub model: ModelSummary,
    pub seed: u64,
    pub tolerance: f64,
    pub samples: usize,
    pub verdicts: Vec<AxiomVerdict>,
    pub span_rank: SpanRank,
    pub passed: bool,
}

impl AxiomReport {
    pub fn verdict(&self, name: &str) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }
}

/// One draw of test data: three pairwise orthogonal propositions from each of
/// two independent frames, plus two unrelated propositions.
struct Draw {
    left: [Element; 3],
    right: [Element; 3],
    free_left: Element,
    free_right: Element,
}

fn split_frame<R: Rng>(algebra: &JordanAlgebra, frame: &[Proposition], rng: &mut R) -> [Element; 3] {
    let mut parts = [algebra.zero(), algebra.zero(), algebra.zero()];
    // The first member always lands in part 0 so that part is nonzero.
    for (i, q) in frame.iter().enumerate() {
        let slot = if i == 0 { 0 } else { rng.random_range(0..4) };
        if slot < 3 {
            parts[slot] = &parts[slot] + q.element();
        }
    }
    parts
}

fn random_subset<R: Rng>(algebra: &JordanAlgebra, frame: &[Proposition], rng: &mut R) -> Element {
    let mut acc = algebra.zero();
    for q in frame {
        if rng.random_bool(0.5) {
            acc = &acc + q.element();
        }
    }
    acc
}

fn draw<R: Rng>(algebra: &JordanAlgebra, rng: &mut R) -> Result<Draw> {
    let f1 = random_frame(algebra, rng)?;
    let f2 = random_frame(algebra, rng)?;
    let g1 = random_frame(algebra, rng)?;
    let g2 = random_frame(algebra, rng)?;
    Ok(Draw {
        left: split_frame(algebra, &f1, rng),
        right: split_frame(algebra, &f2, rng),
        free_left: random_subset(algebra, &g1, rng),
        free_right: random_subset(algebra, &g2, rng),
    })
}

/// Per-draw residuals, one slot per sampled check.
struct Residuals {
    nonzero: f64,
    orthogonal: f64,
    additive: f64,
    compatible: f64,
    ordered: f64,
    embedded: f64,
}

fn residuals(model: &TensorModel, d: &Draw) -> Result<Residuals> {
    let t = |a: &Element, b: &Element| model.tensor(a, b);
    let [a1, b1, c1] = &d.left;
    let [a2, b2, c2] = &d.right;
    let base = model.base_algebra();
    let one = base.identity();

    // Nonzero inputs give a nonzero product: report how far the product norm
    // falls below one (every nonzero proposition has trace at least one).
    let p1 = a1 + b1;
    let p2 = a2 + c2;
    let nonzero = (1.0 - t(&p1, &p2)?.norm()).max(0.0);

    // a1 ⊥ b1 forces (a1 ⊗ x) ⊥ (b1 ⊗ y), and symmetrically on the right.
    let orthogonal = t(a1, &d.free_right)?
        .circ(&t(b1, &p2)?)
        .norm()
        .max(t(&d.free_left, a2)?.circ(&t(&p1, b2)?).norm());

    // (a1 + b1) ⊗ x = a1 ⊗ x + b1 ⊗ x, and the same in the second slot.
    let x = &d.free_right;
    let left_sum = t(&p1, x)?.dist(&(&t(a1, x)? + &t(b1, x)?));
    let y = &d.free_left;
    let right_sum = t(y, &(a2 + b2))?.dist(&(&t(y, a2)? + &t(y, b2)?));
    let additive = left_sum.max(right_sum);

    // a+b and b+c are compatible in each slot; their products must commute.
    let compatible = operator_commutator_residual(&t(&p1, &(a2 + b2))?, &t(&(b1 + c1), &(b2 + c2))?)?;

    // a ≤ a + b in each slot.
    let small = t(a1, a2)?;
    let big = t(&p1, &(a2 + b2))?;
    let ordered = small.circ(&big).dist(&small);

    let embedded = operator_commutator_residual(&t(&d.free_left, &one)?, &t(&one, &d.free_right)?)?;

    Ok(Residuals {
        nonzero,
        orthogonal,
        additive,
        compatible,
        ordered,
        embedded,
    })
}

fn verdict(name: &str, statement: &str, values: &[f64], limit: f64) -> AxiomVerdict {
    let max_residual = values.iter().copied().fold(0.0, f64::max);
    let counterexample = values
        .iter()
        .position(|v| v.is_nan() || *v > limit)
        .map(|i| format!("sample {i}: residual {:e} exceeds {limit:e}", values[i]));
    AxiomVerdict {
        name: name.to_string(),
        statement: statement.to_string(),
        passed: counterexample.is_none(),
        checked: values.len(),
        max_residual,
        counterexample,
    }
}

/// Check the five tensor-product conditions on `samples` seeded draws, plus
/// the compatibility and order transfers and the commuting local embeddings.
///
/// Draws are generated sequentially from `seed`, then evaluated in parallel,
/// so the report does not depend on the thread count.
pub fn verify_axioms(model: &TensorModel, samples: usize, seed: u64, tol: f64) -> Result<AxiomReport> {
    let base = model.base_algebra();
    let target = model.target_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws = (0..samples).map(|_| draw(base, &mut rng)).collect::<Result<Vec<_>>>()?;
    let rows = draws
        .par_iter()
        .map(|d| residuals(model, d))
        .collect::<Result<Vec<_>>>()?;
    let col = |f: fn(&Residuals) -> f64| rows.iter().map(f).collect::<Vec<f64>>();

    let one = base.identity();
    let c1 = model.tensor(&one, &one)?.dist(&target.identity());
    let zero = base.zero();
    let mut zero_cases = vec![model.tensor(&zero, &zero)?.norm()];
    for d in &draws {
        zero_cases.push(model.tensor(&zero, &d.left[0])?.norm());
        zero_cases.push(model.tensor(&d.right[0], &zero)?.norm());
    }
    let mut c2 = col(|r| r.nonzero);
    c2.extend(zero_cases);

    let span_rank = span_rank(model, &draws)?;

    let verdicts = vec![
        verdict("C1", "I ⊗ I is the identity of the target", &[c1], tol),
        verdict("C2", "p ⊗ q = 0 iff p = 0 or q = 0", &c2, tol),
        verdict("C3", "orthogonality in either slot carries over to products", &col(|r| r.orthogonal), tol),
        verdict("C4", "⊗ is additive on orthogonal sums in each slot", &col(|r| r.additive), tol),
        AxiomVerdict {
            name: "C5".into(),
            statement: "product propositions span the target, so they separate states".into(),
            passed: span_rank.rank == span_rank.target_dim,
            checked: span_rank.vectors,
            max_residual: (span_rank.target_dim - span_rank.rank) as f64,
            counterexample: (span_rank.rank != span_rank.target_dim).then(|| {
                format!("span rank {}/{}", span_rank.rank, span_rank.target_dim)
            }),
        },
        verdict(
            "compatible-products",
            "compatible pairs in each slot give compatible products",
            &col(|r| r.compatible),
            tol * 10.0,
        ),
        verdict("ordered-products", "q1 ≤ p1 and q2 ≤ p2 give q1 ⊗ q2 ≤ p1 ⊗ p2", &col(|r| r.ordered), tol),
        verdict(
            "local-embeddings",
            "p ⊗ I and I ⊗ q operator-commute",
            &col(|r| r.embedded),
            tol * 10.0,
        ),
    ];
    let passed = verdicts.iter().all(|v| v.passed);
    Ok(AxiomReport {
        model: model.into(),
        seed,
        tolerance: tol,
        samples,
        verdicts,
        span_rank,
        passed,
    })
}

/// Span of `q_i ⊗ q_j` over a proposition basis, together with the sampled
/// products.
fn span_rank(model: &TensorModel, draws: &[Draw]) -> Result<SpanRank> {
    let base = model.base_algebra();
    let target = model.target_algebra();
    let props = base.proposition_basis();
    let mut vectors = Vec::with_capacity(props.len() * props.len() + draws.len());
    for p in &props {
        for q in &props {
            vectors.push(target.coords(&model.tensor(p, q)?));
        }
    }
    for d in draws {
        vectors.push(target.coords(&model.tensor(&d.free_left, &d.free_right)?));
    }
    let (rank, _) = numeric_rank(&vectors, SPAN_RANK_CUT);
    Ok(SpanRank {
        rank,
        target_dim: target.dim(),
        vectors: vectors.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composite::{real_counterexample_model, tensor_construct};
    use crate::parse_spec;

    #[test]
    fn complex_two_by_two_passes_everything() {
        let m = tensor_construct(&parse_spec("H(2,C)").unwrap()).unwrap();
        let r = verify_axioms(&m, 40, 1, 1e-9).unwrap();
        assert!(r.passed, "{r:#?}");
        assert_eq!(r.span_rank.rank, 16);
    }

    #[test]
    fn real_demo_fails_only_span() {
        let m = real_counterexample_model(2).unwrap();
        let r = verify_axioms(&m, 40, 1, 1e-9).unwrap();
        assert!(!r.passed);
        for name in ["C1", "C2", "C3", "C4"] {
            assert!(r.verdict(name).unwrap().passed, "{name}");
        }
        assert!(!r.verdict("C5").unwrap().passed);
        assert_eq!((r.span_rank.rank, r.span_rank.target_dim), (9, 10));
    }

    #[test]
    fn orthogonal_diagonal_units_stay_orthogonal() {
        let m = tensor_construct(&parse_spec("H(3,C)").unwrap()).unwrap();
        let base = m.base_algebra();
        let (e11, e22) = (base.basis()[0].clone(), base.basis()[1].clone());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = crate::logic::random_proposition(base, &mut rng).unwrap();
        let q = crate::logic::random_proposition(base, &mut rng).unwrap();
        let a = m.tensor(&e11, p.element()).unwrap();
        let b = m.tensor(&e22, q.element()).unwrap();
        assert!(a.circ(&b).norm() < 1e-15);
    }

    #[test]
    fn reports_are_reproducible() {
        let m = tensor_construct(&parse_spec("R (+) H(3,C)").unwrap()).unwrap();
        let a = serde_json::to_string(&verify_axioms(&m, 10, 7, 1e-9).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_axioms(&m, 10, 7, 1e-9).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
