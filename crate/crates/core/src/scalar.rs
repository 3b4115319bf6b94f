//! The four real division algebras used as matrix entries.
//!
//! Every kind is stored in a fixed eight-slot coordinate array; only the first
//! `arity` slots are meaningful. Multiplication follows the Cayley–Dickson
//! doubling
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))
//! ```
//!
//! applied recursively from the reals. Each stage places the previous algebra
//! in the first half of the coordinates, so one 8×8 table of signed basis
//! products serves all four kinds. With this convention the basis of the
//! quaternions is `1, i, j, k` (slots 0..4) with `i j = k`, and the octonion
//! units `e1..e7` satisfy `e1 e2 = e3`, `e1 e4 = e5`, `e2 e4 = e6`,
//! `e3 e4 = e7`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ScalarKind {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl ScalarKind {
    pub const ALL: [ScalarKind; 4] = [
        ScalarKind::Real,
        ScalarKind::Complex,
        ScalarKind::Quaternion,
        ScalarKind::Octonion,
    ];

    /// Number of real coordinates.
    pub const fn arity(self) -> usize {
        match self {
            ScalarKind::Real => 1,
            ScalarKind::Complex => 2,
            ScalarKind::Quaternion => 4,
            ScalarKind::Octonion => 8,
        }
    }

    /// Letter used in algebra spec strings.
    pub const fn symbol(self) -> char {
        match self {
            ScalarKind::Real => 'R',
            ScalarKind::Complex => 'C',
            ScalarKind::Quaternion => 'H',
            ScalarKind::Octonion => 'O',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'R' => Some(ScalarKind::Real),
            'C' => Some(ScalarKind::Complex),
            'H' => Some(ScalarKind::Quaternion),
            'O' => Some(ScalarKind::Octonion),
            _ => None,
        }
    }

    pub const fn is_associative(self) -> bool {
        !matches!(self, ScalarKind::Octonion)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Product of two basis units `e_i e_j = sign * e_index`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitProduct {
    pub sign: f64,
    pub index: usize,
}

/// Recursive Cayley–Dickson product on coordinate slices of equal power-of-two
/// length. Used to derive [`unit_table`]; kept public so the table can be
/// checked against it.
pub fn cayley_dickson_mul(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    debug_assert!(n.is_power_of_two() && y.len() == n && out.len() == n);
    if n == 1 {
        out[0] = x[0] * y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut d_bar = [0.0; 4];
    let mut c_bar = [0.0; 4];
    conj_into(d, &mut d_bar[..h]);
    conj_into(c, &mut c_bar[..h]);
    let mut t1 = [0.0; 4];
    let mut t2 = [0.0; 4];
    cayley_dickson_mul(a, c, &mut t1[..h]);
    cayley_dickson_mul(&d_bar[..h], b, &mut t2[..h]);
    for i in 0..h {
        out[i] = t1[i] - t2[i];
    }
    cayley_dickson_mul(d, a, &mut t1[..h]);
    cayley_dickson_mul(b, &c_bar[..h], &mut t2[..h]);
    for i in 0..h {
        out[h + i] = t1[i] + t2[i];
    }
}

fn conj_into(x: &[f64], out: &mut [f64]) {
    out[0] = x[0];
    for i in 1..x.len() {
        out[i] = -x[i];
    }
}

/// Signed products of the eight octonion basis units.
pub fn unit_table() -> &'static [[UnitProduct; 8]; 8] {
    static TABLE: OnceLock<[[UnitProduct; 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [[UnitProduct { sign: 0.0, index: 0 }; 8]; 8];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut x = [0.0; 8];
                let mut y = [0.0; 8];
                x[i] = 1.0;
                y[j] = 1.0;
                let mut out = [0.0; 8];
                cayley_dickson_mul(&x, &y, &mut out);
                let index = out.iter().position(|v| *v != 0.0).expect("unit product is a unit");
                *cell = UnitProduct {
                    sign: out[index],
                    index,
                };
            }
        }
        table
    })
}

#[derive(Clone, Copy, PartialEq)]
pub struct Scalar {
    kind: ScalarKind,
    coords: [f64; 8],
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind, self.coords())
    }
}

impl Scalar {
    pub fn new(kind: ScalarKind, coords: &[f64]) -> Result<Self> {
        if coords.len() != kind.arity() {
            return Err(Error::usage(format!(
                "{kind} scalar needs {} coordinates, got {}",
                kind.arity(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::usage("non-finite scalar coordinate"));
        }
        let mut c = [0.0; 8];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Scalar { kind, coords: c })
    }

    pub const fn zero(kind: ScalarKind) -> Self {
        Scalar {
            kind,
            coords: [0.0; 8],
        }
    }

    pub const fn real(kind: ScalarKind, value: f64) -> Self {
        let mut coords = [0.0; 8];
        coords[0] = value;
        Scalar { kind, coords }
    }

    pub const fn one(kind: ScalarKind) -> Self {
        Self::real(kind, 1.0)
    }

    /// The basis unit `e_index` (`e_0 = 1`).
    pub fn unit(kind: ScalarKind, index: usize) -> Self {
        assert!(index < kind.arity(), "unit index {index} out of range for {kind}");
        let mut coords = [0.0; 8];
        coords[index] = 1.0;
        Scalar { kind, coords }
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.kind.arity()]
    }

    pub(crate) fn coord(&self, i: usize) -> f64 {
        self.coords[i]
    }

    pub fn re(&self) -> f64 {
        self.coords[0]
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coords()[1..].iter().all(|c| c.abs() <= tol)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords().iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for c in &mut out.coords[1..] {
            *c = -*c;
        }
        out
    }

    pub fn scale(&self, r: f64) -> Self {
        let mut out = *self;
        for c in &mut out.coords {
            *c *= r;
        }
        out
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        if self.kind != other.kind {
            return Err(Error::usage(format!(
                "cannot multiply {} by {}",
                self.kind, other.kind
            )));
        }
        Ok(self.mul_same(other))
    }

    /// Accumulate `self * other` into `acc` (same kind assumed).
    #[inline]
    pub(crate) fn mul_acc(&self, other: &Scalar, weight: f64, acc: &mut Scalar) {
        let n = self.kind.arity();
        if n == 1 {
            acc.coords[0] += weight * self.coords[0] * other.coords[0];
            return;
        }
        let table = unit_table();
        for i in 0..n {
            let xi = self.coords[i];
            if xi == 0.0 {
                continue;
            }
            let row = &table[i];
            for j in 0..n {
                let p = row[j];
                acc.coords[p.index] += weight * p.sign * xi * other.coords[j];
            }
        }
    }

    fn mul_same(&self, other: &Scalar) -> Scalar {
        let mut out = Scalar::zero(self.kind);
        self.mul_acc(other, 1.0, &mut out);
        out
    }

    pub fn dist(&self, other: &Scalar) -> f64 {
        (*self - *other).norm()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += rhs;
        self
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        assert_eq!(self.kind, rhs.kind, "scalar kind mismatch");
        for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
            *a += b;
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= rhs;
        self
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        assert_eq!(self.kind, rhs.kind, "scalar kind mismatch");
        for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
            *a -= b;
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(-1.0)
    }
}

/// Panics on a kind mismatch; use [`Scalar::checked_mul`] for fallible code.
impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.kind, rhs.kind, "scalar kind mismatch");
        self.mul_same(&rhs)
    }
}
