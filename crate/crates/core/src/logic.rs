//! The quantum logic of idempotents.
//!
//! A [`Proposition`] is an element `p` with `p ∘ p = p`, certified to a
//! tolerance when it is constructed. Order, orthocomplement, orthogonality
//! and compatibility are read off Jordan products; joins and meets are only
//! offered for compatible pairs.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::jordan::{operator_commute, spectral_decompose_seeded, Element, JordanAlgebra};
use crate::linalg::least_squares;

/// Default certification tolerance.
pub const DEFAULT_CERT_TOL: f64 = 1e-9;

const GN_ITERATIONS: usize = 200;
const GN_RESTARTS: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Proposition {
    element: Element,
    tol: f64,
}

impl Proposition {
    /// Accept `element` if `‖p∘p − p‖ ≤ tol`.
    pub fn certify(element: Element, tol: f64) -> Result<Self> {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(Error::usage(format!("tolerance must be non-negative, got {tol}")));
        }
        let defect = element.square().dist(&element);
        if defect > tol || element.hermitian_defect() > tol {
            return Err(Error::usage(format!("not an idempotent: ‖p² − p‖ = {defect:e}")));
        }
        Ok(Proposition { element, tol })
    }

    pub fn zero(algebra: &JordanAlgebra) -> Self {
        Proposition {
            element: algebra.zero(),
            tol: DEFAULT_CERT_TOL,
        }
    }

    pub fn one(algebra: &JordanAlgebra) -> Self {
        Proposition {
            element: algebra.identity(),
            tol: DEFAULT_CERT_TOL,
        }
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn into_element(self) -> Element {
        self.element
    }

    /// Tolerance the proposition was certified with.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn algebra(&self) -> JordanAlgebra {
        self.element.algebra()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.element.norm() <= tol
    }

    /// Number of minimal propositions in a frame below `p`.
    pub fn rank(&self) -> usize {
        self.element.trace().round().max(0.0) as usize
    }

    pub fn dist(&self, other: &Proposition) -> f64 {
        self.element.dist(&other.element)
    }

    fn check_same(&self, other: &Proposition) -> Result<()> {
        if self.element.same_algebra(&other.element) {
            Ok(())
        } else {
            Err(Error::usage("propositions live in different algebras"))
        }
    }
}

/// `p' = I − p`.
pub fn complement(p: &Proposition) -> Proposition {
    let one = p.element.algebra().identity();
    Proposition {
        element: &one - &p.element,
        tol: p.tol,
    }
}

/// `p ⊥ q` iff `‖p ∘ q‖ ≤ tol`.
pub fn orthogonal(p: &Proposition, q: &Proposition, tol: f64) -> Result<bool> {
    p.check_same(q)?;
    Ok(p.element.circ(&q.element).norm() <= tol)
}

/// `p ≤ q` iff `‖p ∘ q − p‖ ≤ tol`.
pub fn leq(p: &Proposition, q: &Proposition, tol: f64) -> Result<bool> {
    p.check_same(q)?;
    Ok(p.element.circ(&q.element).dist(&p.element) <= tol)
}

/// Residuals `(‖p∘q‖, ‖{p,q,p}‖, ‖{q,p,q} − p‖)` behind the order and
/// orthogonality predicates.
pub fn order_residuals(p: &Proposition, q: &Proposition) -> Result<(f64, f64, f64)> {
    p.check_same(q)?;
    let (a, b) = (&p.element, &q.element);
    Ok((a.circ(b).norm(), a.triple(b, a).norm(), b.triple(a, b).dist(a)))
}

/// `p` is minimal iff `p ≠ 0` and `{p, b, p} ∈ ℝp` for every basis element `b`.
pub fn is_minimal(p: &Proposition, tol: f64) -> bool {
    minimality_residual(p).is_some_and(|r| r <= tol)
}

/// Largest distance from `{p, b, p}` to the line `ℝp` over the standard
/// basis, or `None` for `p = 0`.
pub fn minimality_residual(p: &Proposition) -> Option<f64> {
    let pe = &p.element;
    let pp = pe.inner(pe);
    if pp <= p.tol.max(f64::EPSILON) {
        return None;
    }
    let algebra = pe.algebra();
    Some(
        algebra
            .basis()
            .iter()
            .map(|b| {
                let t = pe.triple(b, pe);
                t.axpy(-t.inner(pe) / pp, pe).norm()
            })
            .fold(0.0, f64::max),
    )
}

/// Pairwise orthogonal `q1, q2, q3` with `p = q1 + q2` and `q = q2 + q3`.
#[derive(Clone, Debug)]
pub struct CompatibilityWitness {
    pub q1: Proposition,
    pub q2: Proposition,
    pub q3: Proposition,
}

impl CompatibilityWitness {
    /// Largest of the orthogonality and sum residuals.
    pub fn residual(&self, p: &Proposition, q: &Proposition) -> f64 {
        let (a, b, c) = (&self.q1.element, &self.q2.element, &self.q3.element);
        [
            a.circ(b).norm(),
            b.circ(c).norm(),
            a.circ(c).norm(),
            (a + b).dist(&p.element),
            (b + c).dist(&q.element),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Compatibility is decided by operator commutation; for compatible pairs the
/// witness is `q2 = p∘q`, `q1 = p − q2`, `q3 = q − q2`.
pub fn compatible(
    p: &Proposition,
    q: &Proposition,
    tol: f64,
) -> Result<(bool, Option<CompatibilityWitness>)> {
    p.check_same(q)?;
    if !operator_commute(&p.element, &q.element, tol)? {
        return Ok((false, None));
    }
    let meet = p.element.circ(&q.element);
    let cert = (100.0 * tol).max(p.tol).max(q.tol);
    let witness = (|| {
        Some(CompatibilityWitness {
            q1: Proposition::certify(&p.element - &meet, cert).ok()?,
            q3: Proposition::certify(&q.element - &meet, cert).ok()?,
            q2: Proposition::certify(meet, cert).ok()?,
        })
    })();
    Ok((true, witness))
}

/// `p ∨ q = p + q − p∘q` for compatible pairs, `None` otherwise.
pub fn join_compatible(p: &Proposition, q: &Proposition, tol: f64) -> Result<Option<Proposition>> {
    Ok(compatible(p, q, tol)?.1.map(|w| Proposition {
        element: &(&w.q1.element + &w.q2.element) + &w.q3.element,
        tol: w.q2.tol,
    }))
}

/// `p ∧ q = p∘q` for compatible pairs, `None` otherwise.
pub fn meet_compatible(p: &Proposition, q: &Proposition, tol: f64) -> Result<Option<Proposition>> {
    Ok(compatible(p, q, tol)?.1.map(|w| w.q2))
}

/// Outcome of the search for `x ∈ {p, A, q}` with `x² = p + q`.
#[derive(Clone, Debug)]
pub struct StrongConnection {
    pub connected: bool,
    pub witness: Option<Element>,
    /// `‖x² − (p + q)‖` for the best candidate found.
    pub residual: f64,
    pub peirce_dim: usize,
    pub restarts_used: usize,
}

/// Gauss–Newton search for a strong-connectedness witness in the Peirce space
/// `{p, A, q}`, with seeded restarts.
pub fn strongly_connected(p: &Proposition, q: &Proposition, tol: f64, seed: u64) -> Result<StrongConnection> {
    p.check_same(q)?;
    let ortho = tol.max(p.tol).max(q.tol);
    if !orthogonal(p, q, ortho)? {
        return Err(Error::usage("strong connectedness needs orthogonal propositions"));
    }
    let algebra = p.algebra();
    let target = &p.element + &q.element;
    let peirce = peirce_basis(&algebra, &p.element, &q.element);
    let d = peirce.len();
    let target_norm = target.norm();
    if d == 0 {
        return Ok(StrongConnection {
            connected: false,
            witness: None,
            residual: target_norm,
            peirce_dim: 0,
            restarts_used: 0,
        });
    }

    let goal = tol * (1.0 + target_norm);
    let radius = target.trace().max(0.0).sqrt();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Element)> = None;
    for restart in 0..GN_RESTARTS {
        let mut y: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
        y.iter_mut().for_each(|v| *v *= radius / norm);

        let (x, residual) = gauss_newton(&algebra, &peirce, &target, y, goal);
        if best.as_ref().is_none_or(|(r, _)| residual < *r) {
            best = Some((residual, x));
        }
        if residual <= goal {
            let (residual, x) = best.expect("just set");
            return Ok(StrongConnection {
                connected: true,
                witness: Some(x),
                residual,
                peirce_dim: d,
                restarts_used: restart + 1,
            });
        }
    }
    let (residual, _) = best.expect("at least one restart");
    Ok(StrongConnection {
        connected: false,
        witness: None,
        residual,
        peirce_dim: d,
        restarts_used: GN_RESTARTS,
    })
}

/// Trace-orthonormal basis of the image of `b ↦ {p, b, q}`.
fn peirce_basis(algebra: &JordanAlgebra, p: &Element, q: &Element) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::new();
    for b in algebra.basis() {
        let mut v = p.triple(b, q);
        let scale = v.norm();
        if scale <= 1e-12 {
            continue;
        }
        for _ in 0..2 {
            for w in &out {
                v = v.axpy(-v.inner(w), w);
            }
        }
        let n = v.norm();
        if n > 1e-8 * scale.max(1.0) {
            out.push(v.scale(1.0 / n));
        }
    }
    out
}

fn combine(peirce: &[Element], y: &[f64]) -> Element {
    let mut x = peirce[0].scale(0.0);
    for (w, c) in peirce.iter().zip(y) {
        x = x.axpy(*c, w);
    }
    x
}

fn gauss_newton(
    algebra: &JordanAlgebra,
    peirce: &[Element],
    target: &Element,
    mut y: Vec<f64>,
    goal: f64,
) -> (Element, f64) {
    let n = algebra.dim();
    let d = peirce.len();
    let mut x = combine(peirce, &y);
    let mut residual = x.square().dist(target);
    for _ in 0..GN_ITERATIONS {
        if residual <= goal {
            break;
        }
        let f = algebra.coords(&(&x.square() - target));
        let mut jac = DMatrix::zeros(n, d);
        for (j, w) in peirce.iter().enumerate() {
            let col = algebra.coords(&w.circ(&x).scale(2.0));
            for i in 0..n {
                jac[(i, j)] = col[i];
            }
        }
        let step = least_squares(&jac, &(-DVector::from_vec(f)));

        // Backtrack until the residual does not grow.
        let mut t = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial: Vec<f64> = y.iter().zip(step.iter()).map(|(a, s)| a + t * s).collect();
            let tx = combine(peirce, &trial);
            let tr = tx.square().dist(target);
            if tr < residual {
                y = trial;
                x = tx;
                residual = tr;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (x, residual)
}

/// A minimal proposition orthogonal to neither `p1` nor `p2`.
///
/// If `p1` and `p2` are not orthogonal, `p1` itself qualifies. Otherwise a
/// strong-connectedness witness `x` is computed and its spectral idempotents
/// are tried; a seeded sweep over random frames is the fallback.
pub fn find_nonorthogonal_bridge(p1: &Proposition, p2: &Proposition, tol: f64, seed: u64) -> Result<Proposition> {
    p1.check_same(p2)?;
    if !orthogonal(p1, p2, tol)? {
        return Ok(p1.clone());
    }
    // Overlaps below this are treated as orthogonality.
    let floor = tol.sqrt().max(1e-6);
    let bridges = |q: &Element| q.circ(&p1.element).norm() > floor && q.circ(&p2.element).norm() > floor;
    let cert = (1e3 * tol).max(1e-8);

    let link = strongly_connected(p1, p2, tol, seed)?;
    if let Some(x) = &link.witness {
        let spectral = spectral_decompose_seeded(x, tol, seed)?;
        let found = spectral.idempotents().find(|q| bridges(q)).cloned();
        if let Some(q) = found {
            return Proposition::certify(q, cert);
        }
    }

    let algebra = p1.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..64 {
        let a = algebra.random_element(&mut rng);
        let spectral = spectral_decompose_seeded(&a, tol, rng.random())?;
        let found = spectral.idempotents().find(|q| bridges(q)).cloned();
        if let Some(q) = found {
            return Proposition::certify(q, cert);
        }
    }
    Err(Error::numeric(
        "no minimal proposition overlapping both inputs was found",
        link.residual,
    ))
}

/// The swap `π_q` on the logic of a rank-two simple factor: exchanges `q` and
/// `q'`, fixes every other proposition.
#[derive(Clone, Debug)]
pub struct SpinSwap {
    q: Proposition,
    q_prime: Proposition,
    tol: f64,
}

pub fn spin_swap_automorphism(q: &Proposition, tol: f64) -> Result<SpinSwap> {
    let algebra = q.algebra();
    if algebra.factors().len() != 1 || algebra.rank() != 2 {
        return Err(Error::usage(format!(
            "swap automorphisms are defined on spin-factor logics, got {algebra}"
        )));
    }
    if q.is_zero(tol) || complement(q).is_zero(tol) {
        return Err(Error::usage("the swapped proposition must differ from 0 and I"));
    }
    Ok(SpinSwap {
        q: q.clone(),
        q_prime: complement(q),
        tol,
    })
}

impl SpinSwap {
    pub fn q(&self) -> &Proposition {
        &self.q
    }

    pub fn apply(&self, p: &Proposition) -> Proposition {
        if p.dist(&self.q) <= self.tol {
            self.q_prime.clone()
        } else if p.dist(&self.q_prime) <= self.tol {
            self.q.clone()
        } else {
            p.clone()
        }
    }

    /// Root-sum-square residual of the best linear map `M` (least squares on
    /// coordinates) with `M p ≈ π_q(p)` over `sample`.
    ///
    /// If this exceeds `√N · ε` then no linear map reproduces `π_q` on the
    /// sample to within `ε` per point.
    pub fn linear_extension_residual(&self, sample: &[Proposition]) -> f64 {
        let algebra = self.q.algebra();
        let d = algebra.dim();
        let rows = sample.len();
        let x = DMatrix::from_fn(rows, d, |i, j| algebra.coords(sample[i].element())[j]);
        let images: Vec<Vec<f64>> = sample.iter().map(|p| algebra.coords(self.apply(p).element())).collect();
        let y = DMatrix::from_fn(rows, d, |i, j| images[i][j]);
        let mut total = 0.0;
        for j in 0..d {
            let col = y.column(j).into_owned();
            let m = least_squares(&x, &col);
            total += (&x * m - col).norm_squared();
        }
        total.sqrt()
    }
}

/// Certified minimal propositions forming the spectral frame of a random
/// element.
pub fn random_frame<R: Rng + ?Sized>(algebra: &JordanAlgebra, rng: &mut R) -> Result<Vec<Proposition>> {
    let a = algebra.random_element(rng);
    let spectral = spectral_decompose_seeded(&a, DEFAULT_CERT_TOL, rng.random())?;
    spectral
        .idempotents()
        .map(|q| Proposition::certify(q.clone(), DEFAULT_CERT_TOL))
        .collect()
}

/// A random minimal proposition.
pub fn random_minimal<R: Rng + ?Sized>(algebra: &JordanAlgebra, rng: &mut R) -> Result<Proposition> {
    let frame = random_frame(algebra, rng)?;
    let i = rng.random_range(0..frame.len());
    Ok(frame[i].clone())
}

/// Sum of a random subset of a random frame.
pub fn random_proposition<R: Rng + ?Sized>(algebra: &JordanAlgebra, rng: &mut R) -> Result<Proposition> {
    let frame = random_frame(algebra, rng)?;
    let mut acc = algebra.zero();
    for q in &frame {
        if rng.random_bool(0.5) {
            acc = &acc + q.element();
        }
    }
    Proposition::certify(acc, DEFAULT_CERT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{Block, HermitianMatrix};
    use crate::scalar::{Scalar, ScalarKind};

    fn diag(kind: ScalarKind, d: &[f64]) -> Proposition {
        let k = d.len();
        let mut m = HermitianMatrix::zeros(k, kind);
        for (i, v) in d.iter().enumerate() {
            m.set_hermitian(i, i, Scalar::real(kind, *v));
        }
        Proposition::certify(Element::from_blocks(vec![Block::Matrix(m)]).unwrap(), 1e-12).unwrap()
    }

    fn spin_prop(x: &[f64]) -> Proposition {
        let e = Element::from_blocks(vec![Block::Spin { s: 0.5, x: x.to_vec() }]).unwrap();
        Proposition::certify(e, 1e-12).unwrap()
    }

    /// Projector onto `(e_i + e_j)/√2` in a real or complex model.
    fn half_projector(kind: ScalarKind, k: usize, i: usize, j: usize) -> Proposition {
        let mut m = HermitianMatrix::zeros(k, kind);
        m.set_hermitian(i, i, Scalar::real(kind, 0.5));
        m.set_hermitian(j, j, Scalar::real(kind, 0.5));
        m.set_hermitian(i, j, Scalar::real(kind, 0.5));
        Proposition::certify(Element::from_blocks(vec![Block::Matrix(m)]).unwrap(), 1e-12).unwrap()
    }

    #[test]
    fn certification_rejects_non_idempotents() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        assert!(Proposition::certify(alg.identity().scale(2.0), 1e-9).is_err());
        assert!(Proposition::certify(alg.identity(), 1e-9).is_ok());
        assert!(Proposition::certify(alg.zero(), 1e-9).is_ok());
    }

    #[test]
    fn complement_examples() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        assert_eq!(complement(&Proposition::one(&alg)).element(), &alg.zero());
        assert_eq!(complement(&Proposition::zero(&alg)).element(), &alg.identity());
        let p = diag(ScalarKind::Complex, &[1.0, 0.0, 0.0]);
        assert_eq!(complement(&p), diag(ScalarKind::Complex, &[0.0, 1.0, 1.0]));
        assert_eq!(complement(&complement(&p)), p);

        let q = spin_prop(&[0.3, 0.4, 0.0]);
        let expect = spin_prop(&[-0.3, -0.4, 0.0]);
        assert!(complement(&q).dist(&expect) < 1e-15);
    }

    #[test]
    fn order_and_orthogonality_examples() {
        let k = ScalarKind::Complex;
        let e1 = diag(k, &[1.0, 0.0, 0.0]);
        let e2 = diag(k, &[0.0, 1.0, 0.0]);
        let e12 = diag(k, &[1.0, 1.0, 0.0]);
        assert!(orthogonal(&e1, &e2, 1e-9).unwrap());
        assert!(orthogonal(&e1, &complement(&e1), 1e-9).unwrap());
        assert!(leq(&e1, &e1, 1e-9).unwrap());
        assert!(leq(&e1, &e12, 1e-9).unwrap());
        assert!(!leq(&e12, &e1, 1e-9).unwrap());
        let (prod, sandwich, _) = order_residuals(&e1, &e2).unwrap();
        assert!(prod < 1e-15 && sandwich < 1e-15);
        let (_, _, up) = order_residuals(&e1, &e12).unwrap();
        assert!(up < 1e-15);
    }

    #[test]
    fn minimality_examples() {
        let alg = JordanAlgebra::hermitian_model(3, ScalarKind::Complex).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let p = random_minimal(&alg, &mut rng).unwrap();
        assert!(is_minimal(&p, 1e-9));
        assert!(!is_minimal(&diag(ScalarKind::Complex, &[1.0, 1.0, 0.0]), 1e-9));
        assert!(!is_minimal(&Proposition::zero(&alg), 1e-9));

        for x in [[0.5, 0.0, 0.0], [0.3, 0.0, -0.4], [0.1, 0.7f64.sqrt() / 2.0, 0.2f64.sqrt() / 2.0 - 0.0]] {
            let r: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let scaled: Vec<f64> = x.iter().map(|v| v * 0.5 / r).collect();
            assert!(is_minimal(&spin_prop(&scaled), 1e-9));
        }
    }

    #[test]
    fn compatibility_examples() {
        let k = ScalarKind::Real;
        let p = diag(k, &[1.0, 0.0]);
        let (yes, w) = compatible(&p, &complement(&p), 1e-9).unwrap();
        assert!(yes);
        let w = w.unwrap();
        assert!(w.q1.dist(&p) < 1e-15);
        assert!(w.q2.is_zero(1e-15));
        assert!(w.q3.dist(&complement(&p)) < 1e-15);

        let d = half_projector(k, 2, 0, 1);
        assert!(!compatible(&p, &d, 1e-9).unwrap().0);

        let boolean = JordanAlgebra::new(vec![
            crate::jordan::FactorModel::RealLine,
            crate::jordan::FactorModel::RealLine,
        ])
        .unwrap();
        let props: Vec<Proposition> = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]
            .iter()
            .map(|c| Proposition::certify(boolean.from_coords(c).unwrap(), 0.0).unwrap())
            .collect();
        for a in &props {
            for b in &props {
                let (yes, w) = compatible(a, b, 1e-9).unwrap();
                assert!(yes);
                assert!(w.unwrap().residual(a, b) < 1e-15);
            }
        }
    }

    #[test]
    fn joins_and_meets_of_compatible_pairs() {
        let k = ScalarKind::Complex;
        let a = diag(k, &[1.0, 1.0, 0.0]);
        let b = diag(k, &[0.0, 1.0, 1.0]);
        let join = join_compatible(&a, &b, 1e-9).unwrap().unwrap();
        let meet = meet_compatible(&a, &b, 1e-9).unwrap().unwrap();
        assert!(join.dist(&diag(k, &[1.0, 1.0, 1.0])) < 1e-15);
        assert!(meet.dist(&diag(k, &[0.0, 1.0, 0.0])) < 1e-15);
        let d = half_projector(k, 3, 0, 1);
        assert!(join_compatible(&diag(k, &[1.0, 0.0, 0.0]), &d, 1e-9).unwrap().is_none());
    }

    #[test]
    fn strong_connection_in_two_by_two_complex_model() {
        let alg = JordanAlgebra::hermitian_2x2_model(ScalarKind::Complex);
        let p = Proposition::certify(alg.from_coords(&[1.0, 0.0, 0.0, 0.0]).unwrap(), 0.0).unwrap();
        let q = complement(&p);
        let sc = strongly_connected(&p, &q, 1e-10, 1).unwrap();
        assert!(sc.connected, "{sc:?}");
        assert_eq!(sc.peirce_dim, 2);
        let x = sc.witness.unwrap();
        assert!(x.square().dist(&alg.identity()) <= 1e-10 * 3.0);
        // Diagonal of x vanishes: x lies in the off-diagonal Peirce space.
        let c = alg.coords(&x);
        assert!(c[0].abs() < 1e-12 && c[1].abs() < 1e-12);
    }

    #[test]
    fn strong_connection_in_spin() {
        let p = spin_prop(&[0.0, 0.5, 0.0, 0.0]);
        let q = complement(&p);
        let sc = strongly_connected(&p, &q, 1e-10, 9).unwrap();
        let x = sc.witness.unwrap();
        let Block::Spin { s, x: v } = x.block(0) else { unreachable!() };
        assert!(s.abs() < 1e-10);
        assert!(v[1].abs() < 1e-10);
        let len: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!((len - 1.0).abs() < 1e-10);
    }

    #[test]
    fn strong_connection_rejects_overlapping_pairs() {
        let p = diag(ScalarKind::Real, &[1.0, 0.0, 0.0]);
        assert!(matches!(strongly_connected(&p, &p, 1e-9, 0), Err(Error::Usage(_))));
    }

    #[test]
    fn different_summands_are_not_connected() {
        let alg = JordanAlgebra::hermitian_model(2, ScalarKind::Real)
            .unwrap()
            .direct_sum(&JordanAlgebra::spin(3).unwrap());
        let p = Proposition::certify(alg.proposition_basis()[0].clone(), 0.0).unwrap();
        let q = Proposition::certify(alg.proposition_basis()[4].clone(), 0.0).unwrap();
        let sc = strongly_connected(&p, &q, 1e-9, 0).unwrap();
        assert!(!sc.connected);
        assert_eq!(sc.peirce_dim, 0);
    }

    #[test]
    fn bridge_examples() {
        let k = ScalarKind::Real;
        let e1 = diag(k, &[1.0, 0.0, 0.0]);
        let e2 = diag(k, &[0.0, 1.0, 0.0]);
        assert_eq!(find_nonorthogonal_bridge(&e1, &e1, 1e-9, 0).unwrap(), e1);

        let b = find_nonorthogonal_bridge(&e1, &e2, 1e-9, 0).unwrap();
        assert!(is_minimal(&b, 1e-8));
        assert!(!orthogonal(&b, &e1, 1e-6).unwrap());
        assert!(!orthogonal(&b, &e2, 1e-6).unwrap());
        // The witness lives in span{E12 + E21}, so the bridge is one of the
        // projectors onto (e1 ± e2)/√2.
        let plus = half_projector(k, 3, 0, 1);
        let minus = complement(&plus).element() - &diag(k, &[0.0, 0.0, 1.0]).element().clone();
        assert!(b.dist(&plus) < 1e-8 || b.element().dist(&minus) < 1e-8);

        let p = spin_prop(&[0.5, 0.0, 0.0]);
        let b = find_nonorthogonal_bridge(&p, &complement(&p), 1e-9, 3).unwrap();
        let Block::Spin { s, x } = b.element().block(0) else { unreachable!() };
        assert!((s - 0.5).abs() < 1e-9);
        assert!(x[1].abs() + x[2].abs() > 1e-3, "axis must not be collinear: {x:?}");
    }

    #[test]
    fn swap_examples() {
        let q = spin_prop(&[0.0, 0.0, 0.5]);
        let swap = spin_swap_automorphism(&q, 1e-9).unwrap();
        let alg = q.algebra();
        assert!(swap.apply(&q).dist(&complement(&q)) < 1e-15);
        assert!(swap.apply(&complement(&q)).dist(&q) < 1e-15);
        assert_eq!(swap.apply(&Proposition::zero(&alg)), Proposition::zero(&alg));
        assert_eq!(swap.apply(&Proposition::one(&alg)), Proposition::one(&alg));
        let third = spin_prop(&[0.5, 0.0, 0.0]);
        assert_eq!(swap.apply(&third), third);

        assert!(spin_swap_automorphism(&Proposition::zero(&alg), 1e-9).is_err());
        assert!(spin_swap_automorphism(&Proposition::one(&alg), 1e-9).is_err());
        let h3 = diag(ScalarKind::Real, &[1.0, 0.0, 0.0]);
        assert!(spin_swap_automorphism(&h3, 1e-9).is_err());
    }
}
