use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarKind};

use super::algebra::{FactorModel, JordanAlgebra};

/// A `k × k` matrix over one of the division algebras, stored densely in row
/// major order. Hermitian-ness is checked at construction and preserved by the
/// Jordan operations.
#[derive(Clone, PartialEq)]
pub struct HermitianMatrix {
    k: usize,
    kind: ScalarKind,
    entries: Vec<Scalar>,
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.k).map(|i| &self.entries[i * self.k..(i + 1) * self.k]))
            .finish()
    }
}

impl HermitianMatrix {
    pub fn zeros(k: usize, kind: ScalarKind) -> Self {
        HermitianMatrix {
            k,
            kind,
            entries: vec![Scalar::zero(kind); k * k],
        }
    }

    pub fn identity(k: usize, kind: ScalarKind) -> Self {
        let mut m = Self::zeros(k, kind);
        for i in 0..k {
            m.entries[i * k + i] = Scalar::one(kind);
        }
        m
    }

    /// Build from a full entry array, rejecting non-Hermitian input.
    pub fn from_entries(k: usize, kind: ScalarKind, entries: Vec<Scalar>, tol: f64) -> Result<Self> {
        if entries.len() != k * k {
            return Err(Error::usage(format!(
                "expected {} entries for a {k}x{k} matrix, got {}",
                k * k,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.kind() != kind) {
            return Err(Error::usage(format!("matrix entries must all be {kind}")));
        }
        let m = HermitianMatrix { k, kind, entries };
        let skew = m.hermitian_defect();
        if skew > tol {
            return Err(Error::usage(format!(
                "matrix is not Hermitian (defect {skew:e})"
            )));
        }
        Ok(m)
    }

    /// `max |m[j][i] - conj(m[i][j])|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.k {
            for j in i..self.k {
                worst = worst.max(self.get(j, i).dist(&self.get(i, j).conj()));
            }
        }
        worst
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries[i * self.k + j]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Set entry `(i, j)` and its mirror `(j, i)` to the conjugate.
    pub fn set_hermitian(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.kind(), self.kind);
        if i == j {
            self.entries[i * self.k + i] = Scalar::real(self.kind, value.re());
        } else {
            self.entries[i * self.k + j] = value;
            self.entries[j * self.k + i] = value.conj();
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(Scalar, Scalar) -> Scalar) -> Self {
        HermitianMatrix {
            k: self.k,
            kind: self.kind,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    fn scale(&self, r: f64) -> Self {
        HermitianMatrix {
            k: self.k,
            kind: self.kind,
            entries: self.entries.iter().map(|e| e.scale(r)).collect(),
        }
    }

    /// Ordinary matrix product (entries multiplied in the division algebra).
    pub fn matmul(&self, other: &Self) -> Vec<Scalar> {
        let k = self.k;
        let mut out = vec![Scalar::zero(self.kind); k * k];
        for i in 0..k {
            for l in 0..k {
                let a = &self.entries[i * k + l];
                for j in 0..k {
                    a.mul_acc(&other.entries[l * k + j], 1.0, &mut out[i * k + j]);
                }
            }
        }
        out
    }

    /// `(xy + yx) / 2`.
    fn jordan(&self, other: &Self) -> Self {
        let k = self.k;
        let mut entries = vec![Scalar::zero(self.kind); k * k];
        for i in 0..k {
            for j in i..k {
                let mut acc = Scalar::zero(self.kind);
                for l in 0..k {
                    self.entries[i * k + l].mul_acc(&other.entries[l * k + j], 0.5, &mut acc);
                    other.entries[i * k + l].mul_acc(&self.entries[l * k + j], 0.5, &mut acc);
                }
                if i == j {
                    entries[i * k + i] = Scalar::real(self.kind, acc.re());
                } else {
                    entries[i * k + j] = acc;
                    entries[j * k + i] = acc.conj();
                }
            }
        }
        HermitianMatrix {
            k,
            kind: self.kind,
            entries,
        }
    }

    /// `Re tr(xy) = Σ_ij Re(x_ij y_ji)`.
    fn trace_form(&self, other: &Self) -> f64 {
        let k = self.k;
        let n = self.kind.arity();
        let mut acc = 0.0;
        for i in 0..k {
            for j in 0..k {
                let a = &self.entries[i * k + j];
                let b = &other.entries[j * k + i];
                // Re(ab) = a0 b0 - Σ a_m b_m over imaginary units.
                acc += a.coord(0) * b.coord(0);
                for m in 1..n {
                    acc -= a.coord(m) * b.coord(m);
                }
            }
        }
        acc
    }

    /// Kronecker product over a commutative scalar field.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.kind, other.kind);
        assert!(
            self.kind == ScalarKind::Real || self.kind == ScalarKind::Complex,
            "Kronecker products need commutative entries"
        );
        let (a, b) = (self.k, other.k);
        let k = a * b;
        let mut entries = vec![Scalar::zero(self.kind); k * k];
        for i1 in 0..a {
            for j1 in 0..a {
                let x = self.get(i1, j1);
                for i2 in 0..b {
                    for j2 in 0..b {
                        entries[(i1 * b + i2) * k + (j1 * b + j2)] = x * other.get(i2, j2);
                    }
                }
            }
        }
        HermitianMatrix {
            k,
            kind: self.kind,
            entries,
        }
    }

    fn shape_matches(&self, other: &Self) -> bool {
        self.k == other.k && self.kind == other.kind
    }
}

/// One simple-factor component of an [`Element`].
#[derive(Clone, Debug, PartialEq)]
pub enum Block {
    Real(f64),
    /// `(s, x)` in the spin factor `R ⊕ R^n`.
    Spin { s: f64, x: Vec<f64> },
    Matrix(HermitianMatrix),
}

impl Block {
    pub(crate) fn model(&self) -> FactorModel {
        match self {
            Block::Real(_) => FactorModel::RealLine,
            Block::Spin { x, .. } => FactorModel::Spin { n: x.len() },
            Block::Matrix(m) => FactorModel::Hermitian {
                k: m.k,
                scalar: m.kind,
            },
        }
    }

    fn shape_matches(&self, other: &Block) -> bool {
        match (self, other) {
            (Block::Real(_), Block::Real(_)) => true,
            (Block::Spin { x, .. }, Block::Spin { x: y, .. }) => x.len() == y.len(),
            (Block::Matrix(a), Block::Matrix(b)) => a.shape_matches(b),
            _ => false,
        }
    }

    fn zip(&self, other: &Block, f: impl Fn(f64, f64) -> f64, g: impl Fn(Scalar, Scalar) -> Scalar) -> Block {
        match (self, other) {
            (Block::Real(a), Block::Real(b)) => Block::Real(f(*a, *b)),
            (Block::Spin { s, x }, Block::Spin { s: t, x: y }) => Block::Spin {
                s: f(*s, *t),
                x: x.iter().zip(y).map(|(a, b)| f(*a, *b)).collect(),
            },
            (Block::Matrix(a), Block::Matrix(b)) => Block::Matrix(a.zip(b, g)),
            _ => unreachable!("shapes checked by caller"),
        }
    }

    fn scale(&self, r: f64) -> Block {
        match self {
            Block::Real(a) => Block::Real(a * r),
            Block::Spin { s, x } => Block::Spin {
                s: s * r,
                x: x.iter().map(|v| v * r).collect(),
            },
            Block::Matrix(m) => Block::Matrix(m.scale(r)),
        }
    }

    fn jordan(&self, other: &Block) -> Block {
        match (self, other) {
            (Block::Real(a), Block::Real(b)) => Block::Real(a * b),
            (Block::Spin { s, x }, Block::Spin { s: t, x: y }) => Block::Spin {
                s: s * t + dot(x, y),
                x: x.iter().zip(y).map(|(xi, yi)| s * yi + t * xi).collect(),
            },
            (Block::Matrix(a), Block::Matrix(b)) => Block::Matrix(a.jordan(b)),
            _ => unreachable!("shapes checked by caller"),
        }
    }

    fn trace_form(&self, other: &Block) -> f64 {
        match (self, other) {
            (Block::Real(a), Block::Real(b)) => a * b,
            (Block::Spin { s, x }, Block::Spin { s: t, x: y }) => 2.0 * (s * t + dot(x, y)),
            (Block::Matrix(a), Block::Matrix(b)) => a.trace_form(b),
            _ => unreachable!("shapes checked by caller"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Block::Real(a) => *a == 0.0,
            Block::Spin { s, x } => *s == 0.0 && x.iter().all(|v| *v == 0.0),
            Block::Matrix(m) => m.entries.iter().all(|e| e.coords().iter().all(|c| *c == 0.0)),
        }
    }
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// An element of a direct sum of simple formally real Jordan algebras.
///
/// The algebra an element belongs to is implied by the shape of its blocks;
/// see [`Element::algebra`].
#[derive(Clone, Debug, PartialEq)]
pub struct Element {
    blocks: Vec<Block>,
}

impl Element {
    /// Assemble an element from blocks. Matrix blocks must already be
    /// Hermitian (guaranteed by [`HermitianMatrix`]).
    pub fn from_blocks(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::usage("an element needs at least one block"));
        }
        for b in &blocks {
            if let Block::Spin { x, .. } = b {
                if x.len() < 2 {
                    return Err(Error::usage("spin blocks need a vector part of length >= 2"));
                }
            }
        }
        Ok(Element { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Block>) -> Self {
        Element { blocks }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Block {
        &self.blocks[i]
    }

    /// The runtime algebra this element lives in.
    pub fn algebra(&self) -> JordanAlgebra {
        JordanAlgebra::from_models(self.blocks.iter().map(Block::model).collect())
    }

    pub fn same_algebra(&self, other: &Element) -> bool {
        self.blocks.len() == other.blocks.len()
            && self
                .blocks
                .iter()
                .zip(&other.blocks)
                .all(|(a, b)| a.shape_matches(b))
    }

    pub(crate) fn check_same(&self, other: &Element) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "elements belong to different algebras ({} vs {})",
                self.algebra(),
                other.algebra()
            )))
        }
    }

    fn zip(&self, other: &Element, f: impl Fn(f64, f64) -> f64 + Copy, g: impl Fn(Scalar, Scalar) -> Scalar + Copy) -> Element {
        assert!(self.same_algebra(other), "element algebra mismatch");
        Element {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.zip(b, f, g))
                .collect(),
        }
    }

    pub fn scale(&self, r: f64) -> Element {
        Element {
            blocks: self.blocks.iter().map(|b| b.scale(r)).collect(),
        }
    }

    /// `self + r * other`.
    pub fn axpy(&self, r: f64, other: &Element) -> Element {
        self.zip(other, move |a, b| a + r * b, move |a, b| a + b.scale(r))
    }

    /// Jordan product. Panics if the operands live in different algebras;
    /// [`jordan_product`](super::jordan_product) is the fallible form.
    pub fn circ(&self, other: &Element) -> Element {
        assert!(self.same_algebra(other), "element algebra mismatch");
        Element {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.jordan(b))
                .collect(),
        }
    }

    pub fn square(&self) -> Element {
        self.circ(self)
    }

    /// `{self, y, z} = x∘(y∘z) − y∘(z∘x) + z∘(x∘y)`.
    pub fn triple(&self, y: &Element, z: &Element) -> Element {
        let x = self;
        x.circ(&y.circ(z)) - y.circ(&z.circ(x)) + z.circ(&x.circ(y))
    }

    /// Canonical trace form `tr(a∘b)`; every minimal idempotent has trace 1.
    pub fn inner(&self, other: &Element) -> f64 {
        assert!(self.same_algebra(other), "element algebra mismatch");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.trace_form(b))
            .sum()
    }

    /// Norm induced by the trace form.
    pub fn norm(&self) -> f64 {
        self.inner(self).max(0.0).sqrt()
    }

    pub fn dist(&self, other: &Element) -> f64 {
        (self - other).norm()
    }

    /// Trace, i.e. `tr(a∘I)`.
    pub fn trace(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| match b {
                Block::Real(a) => *a,
                Block::Spin { s, .. } => 2.0 * s,
                Block::Matrix(m) => (0..m.k).map(|i| m.get(i, i).re()).sum(),
            })
            .sum()
    }

    /// Largest Hermitian defect over matrix blocks.
    pub fn hermitian_defect(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| match b {
                Block::Matrix(m) => m.hermitian_defect(),
                _ => 0.0,
            })
            .fold(0.0, f64::max)
    }

    /// Keep block `index`, zero the others.
    pub fn restrict(&self, index: usize) -> Element {
        Element {
            blocks: self
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| if i == index { b.clone() } else { b.scale(0.0) })
                .collect(),
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.blocks.iter().all(Block::is_zero)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.zip(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

impl Mul<&Element> for f64 {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            match b {
                Block::Real(a) => write!(f, "{a}")?,
                Block::Spin { s, x } => write!(f, "({s}, {x:?})")?,
                Block::Matrix(m) => write!(f, "{m:?}")?,
            }
        }
        Ok(())
    }
}
