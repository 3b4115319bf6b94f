//! Linear states as density elements, and the pure states `ℙ_p` of minimal
//! propositions.
//!
//! A state is `μ(a) = ⟨ρ, a⟩` for a positive density `ρ` with `⟨ρ, I⟩ = 1`.
//! For minimal `p` the sandwich `{p, a, p}` is a multiple `r_a p`, and
//! `ℙ_p(a) = r_a`.

use crate::error::{Error, Result};
use crate::jordan::{is_positive, spectral_decompose, Element, JordanAlgebra, DEFAULT_TOL};
use crate::logic::{is_minimal, minimality_residual, Proposition};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearState {
    density: Element,
}

impl LinearState {
    /// Accept `density` if it is positive and has unit trace, both to `tol`.
    pub fn new(density: Element, tol: f64) -> Result<Self> {
        let one = density.algebra().identity();
        let total = density.inner(&one);
        if (total - 1.0).abs() > tol {
            return Err(Error::usage(format!("density has trace {total}, expected 1")));
        }
        if !is_positive(&density, tol)? {
            return Err(Error::usage("density is not positive"));
        }
        Ok(LinearState { density })
    }

    /// `I / rank`.
    pub fn maximally_mixed(algebra: &JordanAlgebra) -> Self {
        LinearState {
            density: algebra.identity().scale(1.0 / algebra.rank() as f64),
        }
    }

    pub fn density(&self) -> &Element {
        &self.density
    }

    /// `μ(a) = ⟨ρ, a⟩`.
    pub fn eval(&self, a: &Element) -> Result<f64> {
        crate::jordan::trace_form(&self.density, a)
    }

    /// `ν(x) = μ({p, x, p}) / μ(p)`, with density `{p, ρ, p} / μ(p)`.
    pub fn conditioned(&self, p: &Proposition, tol: f64) -> Result<LinearState> {
        let mass = self.eval(p.element())?;
        if mass <= tol {
            return Err(Error::Conditioning { probability: mass });
        }
        let pe = p.element();
        let density = pe.triple(&self.density, pe).scale(1.0 / mass);
        LinearState::new(density, tol.max(1e-9))
    }
}

pub fn state_eval(mu: &LinearState, a: &Element) -> Result<f64> {
    mu.eval(a)
}

pub fn conditioned_state(mu: &LinearState, p: &Proposition, tol: f64) -> Result<LinearState> {
    mu.conditioned(p, tol)
}

/// The pure state `ℙ_p` of a minimal proposition.
#[derive(Clone, Debug)]
pub struct PureStateAtom {
    p: Proposition,
    normalizer: f64,
}

/// `ℙ_p(a)` together with `‖{p, a, p} − ℙ_p(a) p‖`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureValue {
    pub value: f64,
    pub residual: f64,
}

impl PureStateAtom {
    pub fn new(p: &Proposition, tol: f64) -> Result<Self> {
        if !is_minimal(p, tol) {
            let r = minimality_residual(p).unwrap_or(f64::INFINITY);
            return Err(Error::usage(format!("proposition is not minimal (residual {r:e})")));
        }
        Ok(PureStateAtom {
            p: p.clone(),
            normalizer: p.element().inner(p.element()),
        })
    }

    pub fn proposition(&self) -> &Proposition {
        &self.p
    }

    /// `⟨p, p⟩`.
    pub fn normalizer(&self) -> f64 {
        self.normalizer
    }

    pub fn eval(&self, a: &Element) -> Result<PureValue> {
        let pe = self.p.element();
        let sandwich = crate::jordan::triple_product(pe, a, pe)?;
        let value = sandwich.inner(pe) / self.normalizer;
        Ok(PureValue {
            value,
            residual: sandwich.axpy(-value, pe).norm(),
        })
    }

    /// The same state as a density element, `p / ⟨p, p⟩`.
    pub fn as_linear(&self) -> LinearState {
        LinearState {
            density: self.p.element().scale(1.0 / self.normalizer),
        }
    }
}

/// `ℙ_p(a)` for minimal `p`.
pub fn pure_state(p: &Proposition, a: &Element, tol: f64) -> Result<PureValue> {
    PureStateAtom::new(p, tol)?.eval(a)
}

/// Whether `ℙ_q(a) = 0` within `tol` for every minimal `q` in `sample`
/// together with the spectral frame of `a`; the frame alone decides, since
/// there `ℙ_q(a)` is an eigenvalue.
pub fn zero_separation_check(a: &Element, sample: &[Proposition], tol: f64) -> Result<bool> {
    let spectral = spectral_decompose(a, DEFAULT_TOL)?;
    for (_, q) in spectral.pairs() {
        let p = Proposition::certify(q.clone(), 1e-8)?;
        if PureStateAtom::new(&p, 1e-8)?.eval(a)?.value.abs() > tol {
            return Ok(false);
        }
    }
    for p in sample {
        if PureStateAtom::new(p, 1e-8)?.eval(a)?.value.abs() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}
