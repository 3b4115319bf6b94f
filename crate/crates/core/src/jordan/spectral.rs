//! Spectral decomposition in a power-associative setting.
//!
//! Each simple component is handled on its own. Inside the subalgebra generated
//! by the (centred, rescaled) element we orthonormalize the powers
//! `1, x, x², …` against the trace form until one becomes dependent; that
//! degree is the degree of the minimal polynomial. Its roots are the
//! eigenvalues of the compression of `L_x` to the span of the powers. The
//! eigen-idempotents come from Lagrange interpolation, are purified with
//! `p ↦ 3p² − 2p³`, and any idempotent of trace greater than one is split by
//! recursing into its Peirce subalgebra `{e, A, e}`: first on the compression
//! of the element itself, and, when that is scalar, on a seeded random element
//! of the subalgebra.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::symmetric_eigen;
use crate::DEFAULT_SEED;

use super::algebra::JordanAlgebra;
use super::element::Element;

/// Default tolerance for spectral work and eigenvalue clustering.
pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_DEPTH: usize = 32;

#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pairs: Vec<(f64, Element)>,
    seed: u64,
}

impl SpectralDecomposition {
    /// `(eigenvalue, minimal idempotent)` pairs, eigenvalues descending.
    pub fn pairs(&self) -> &[(f64, Element)] {
        &self.pairs
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn idempotents(&self) -> impl Iterator<Item = &Element> {
        self.pairs.iter().map(|p| &p.1)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Seed used for any random Peirce refinement.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// `Σ r_j q_j`.
    pub fn reconstruct(&self) -> Element {
        let mut acc = self.pairs[0].1.scale(0.0);
        for (r, q) in &self.pairs {
            acc = acc.axpy(*r, q);
        }
        acc
    }

    /// `‖Σ q_j − I‖`.
    pub fn completeness_residual(&self) -> f64 {
        let mut acc = self.pairs[0].1.scale(0.0);
        for (_, q) in &self.pairs {
            acc = &acc + q;
        }
        acc.dist(&self.pairs[0].1.algebra().identity())
    }

    /// Largest `‖q_i ∘ q_j‖` over `i ≠ j`.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.pairs.len() {
            for j in i + 1..self.pairs.len() {
                worst = worst.max(self.pairs[i].1.circ(&self.pairs[j].1).norm());
            }
        }
        worst
    }

    /// Largest `‖q² − q‖`.
    pub fn idempotency_residual(&self) -> f64 {
        self.pairs
            .iter()
            .map(|(_, q)| q.square().dist(q))
            .fold(0.0, f64::max)
    }

    /// Eigen-idempotents: the minimal idempotents summed over eigenvalue
    /// clusters closer than `tol * (1 + |λ|)`.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, Element)> {
        let mut out: Vec<(f64, Element, usize)> = Vec::new();
        for (r, q) in &self.pairs {
            match out.last_mut() {
                Some((mean, e, count)) if (*mean - r).abs() <= tol * (1.0 + r.abs()) => {
                    *mean = (*mean * *count as f64 + r) / (*count + 1) as f64;
                    *e = &*e + q;
                    *count += 1;
                }
                _ => out.push((*r, q.clone(), 1)),
            }
        }
        out.into_iter().map(|(r, e, _)| (r, e)).collect()
    }
}

/// Spectral decomposition with the default seed.
pub fn spectral_decompose(a: &Element, tol: f64) -> Result<SpectralDecomposition> {
    spectral_decompose_seeded(a, tol, DEFAULT_SEED)
}

pub fn spectral_decompose_seeded(a: &Element, tol: f64, seed: u64) -> Result<SpectralDecomposition> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::usage(format!("tolerance must be positive, got {tol}")));
    }
    let defect = a.hermitian_defect();
    if defect > 1e-12_f64.max(tol) {
        return Err(Error::usage(format!(
            "element is not Hermitian (defect {defect:e})"
        )));
    }
    let algebra = a.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut frame = Vec::with_capacity(algebra.rank());
    for (index, model) in algebra.factors().iter().enumerate() {
        let unit = algebra.factor_identity(index);
        let part = a.restrict(index);
        let mut ctx = Context {
            algebra: &algebra,
            tol,
            rng: &mut rng,
        };
        ctx.split(&part, &unit, model.rank(), 0, &mut frame)?;
    }
    if frame.len() != algebra.rank() {
        return Err(Error::numeric(
            format!("frame has {} members, expected rank {}", frame.len(), algebra.rank()),
            (frame.len() as f64 - algebra.rank() as f64).abs(),
        ));
    }

    let mut pairs: Vec<(f64, Element)> = frame
        .into_iter()
        .map(|q| (a.inner(&q) / q.inner(&q), q))
        .collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let decomposition = SpectralDecomposition { pairs, seed };

    let residual = decomposition.reconstruct().dist(a);
    let limit = 1e3 * tol * (1.0 + a.norm());
    if residual > limit {
        return Err(Error::numeric("spectral reconstruction did not converge", residual));
    }
    Ok(decomposition)
}

struct Context<'a, R> {
    algebra: &'a JordanAlgebra,
    tol: f64,
    rng: &'a mut R,
}

impl<R: rand::Rng> Context<'_, R> {
    /// Push minimal idempotents summing to `unit` (an idempotent of trace
    /// `rank`) onto `out`, using `a ∈ {unit, A, unit}` to drive the split.
    fn split(&mut self, a: &Element, unit: &Element, rank: usize, depth: usize, out: &mut Vec<Element>) -> Result<()> {
        if rank == 1 {
            out.push(unit.clone());
            return Ok(());
        }
        if depth > MAX_DEPTH {
            return Err(Error::numeric("Peirce refinement did not terminate", depth as f64));
        }
        let mean = a.inner(unit) / rank as f64;
        let centred = a.axpy(-mean, unit);
        let spread = centred.norm();
        if spread <= self.tol * (1.0 + mean.abs()) {
            // `a` is scalar on this block; refine with a random Peirce element.
            let b = self.algebra.random_element(self.rng);
            let c = unit.triple(&b, unit);
            return self.split(&c, unit, rank, depth + 1, out);
        }
        let x = centred.scale(1.0 / spread);

        let basis = power_basis(&x, unit, rank, self.tol);
        let roots = cluster_roots(ritz_values(&x, &basis), self.tol);
        if roots.len() < 2 {
            let b = self.algebra.random_element(self.rng);
            let c = unit.triple(&b, unit);
            return self.split(&c, unit, rank, depth + 1, out);
        }

        let mut assigned = 0;
        for j in 0..roots.len() {
            let e = purify(lagrange_idempotent(&x, unit, &roots, j));
            let trace = e.trace();
            let mult = trace.round();
            if (trace - mult).abs() > 1e-6 || mult < 1.0 {
                return Err(Error::numeric(
                    format!("eigen-idempotent has non-integral trace {trace}"),
                    (trace - mult).abs(),
                ));
            }
            let mult = mult as usize;
            assigned += mult;
            if mult == 1 {
                out.push(e);
            } else {
                let compressed = e.triple(a, &e);
                self.split(&compressed, &e, mult, depth + 1, out)?;
            }
        }
        if assigned != rank {
            return Err(Error::numeric(
                format!("eigen-idempotent traces sum to {assigned}, expected {rank}"),
                (assigned as f64 - rank as f64).abs(),
            ));
        }
        Ok(())
    }
}

/// Trace-orthonormal basis of `span{unit, x, x², …}`, stopping at the first
/// power that is dependent on its predecessors (or at `rank` members).
fn power_basis(x: &Element, unit: &Element, rank: usize, tol: f64) -> Vec<Element> {
    let mut basis: Vec<Element> = Vec::with_capacity(rank);
    let mut power = unit.clone();
    for _ in 0..rank {
        let size = power.norm();
        let mut r = power.clone();
        // Two passes of modified Gram–Schmidt.
        for _ in 0..2 {
            for q in &basis {
                let c = r.inner(q);
                r = r.axpy(-c, q);
            }
        }
        let rn = r.norm();
        if rn <= tol * size.max(1.0) {
            break;
        }
        basis.push(r.scale(1.0 / rn));
        power = x.circ(&power);
    }
    basis
}

/// Eigenvalues of `L_x` compressed to the span of `basis`.
fn ritz_values(x: &Element, basis: &[Element]) -> Vec<f64> {
    let m = basis.len();
    let images: Vec<Element> = basis.iter().map(|q| x.circ(q)).collect();
    let t = DMatrix::from_fn(m, m, |i, j| 0.5 * (basis[i].inner(&images[j]) + basis[j].inner(&images[i])));
    symmetric_eigen(t).into_iter().map(|(v, _)| v).collect()
}

/// Merge roots closer than `tol * (1 + |λ|)`; input and output descending.
fn cluster_roots(mut roots: Vec<f64>, tol: f64) -> Vec<f64> {
    roots.sort_by(|a, b| b.total_cmp(a));
    let mut out: Vec<(f64, usize)> = Vec::new();
    for r in roots {
        match out.last_mut() {
            Some((mean, n)) if (*mean - r).abs() <= tol * (1.0 + r.abs()) => {
                *mean = (*mean * *n as f64 + r) / (*n + 1) as f64;
                *n += 1;
            }
            _ => out.push((r, 1)),
        }
    }
    out.into_iter().map(|(r, _)| r).collect()
}

/// `Π_{i≠j} (x − λ_i) / (λ_j − λ_i)` evaluated in the subalgebra with unit
/// `unit`.
fn lagrange_idempotent(x: &Element, unit: &Element, roots: &[f64], j: usize) -> Element {
    let mut e = unit.clone();
    for (i, &li) in roots.iter().enumerate() {
        if i == j {
            continue;
        }
        let factor = x.axpy(-li, unit).scale(1.0 / (roots[j] - li));
        e = e.circ(&factor);
    }
    e
}

/// Newton-type idempotent refinement `p ↦ 3p² − 2p³`.
fn purify(mut p: Element) -> Element {
    let mut defect = p.square().dist(&p);
    for _ in 0..60 {
        let p2 = p.square();
        let p3 = p.circ(&p2);
        let next = p2.scale(3.0).axpy(-2.0, &p3);
        let next_defect = next.square().dist(&next);
        if next_defect >= defect {
            break;
        }
        p = next;
        defect = next_defect;
        if defect < 1e-15 {
            break;
        }
    }
    p
}
