//! Affine and elementary (shear) maps of the plane, words over them, and
//! the polynomial maps they evaluate to.
//!
//! Words are stored in application order: the first factor is applied
//! first, so `[f, g]` evaluates to `g ∘ f`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::grading::{WDeg, Weight};
use crate::poly::{DegreeOverflow, Polynomial, DEFAULT_MAX_DEGREE};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorError {
    SingularAffine,
    /// The shear polynomial is constant or involves the moving variable.
    InvalidShear,
}

impl fmt::Display for FactorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorError::SingularAffine => f.write_str("affine map has a singular linear part"),
            FactorError::InvalidShear => {
                f.write_str("shear polynomial must be nonconstant in the fixed variable only")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for FactorError {}

/// `(x, y) ↦ (m00 x + m01 y + t0, m10 x + m11 y + t1)` with `det m ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    matrix: [[Rational; 2]; 2],
    translation: [Rational; 2],
}

impl AffineMap {
    pub fn new(
        matrix: [[Rational; 2]; 2],
        translation: [Rational; 2],
    ) -> Result<Self, FactorError> {
        let det = &matrix[0][0] * &matrix[1][1] - &matrix[0][1] * &matrix[1][0];
        if det.is_zero() {
            return Err(FactorError::SingularAffine);
        }
        Ok(AffineMap {
            matrix,
            translation,
        })
    }

    pub fn linear(matrix: [[Rational; 2]; 2]) -> Result<Self, FactorError> {
        AffineMap::new(matrix, [Rational::zero(), Rational::zero()])
    }

    /// Integer-entry constructor for fixtures and pools.
    pub fn from_ints(matrix: [[i64; 2]; 2], translation: [i64; 2]) -> Result<Self, FactorError> {
        let r = |v: i64| Rational::from_integer(v.into());
        AffineMap::new(
            [
                [r(matrix[0][0]), r(matrix[0][1])],
                [r(matrix[1][0]), r(matrix[1][1])],
            ],
            [r(translation[0]), r(translation[1])],
        )
    }

    pub fn identity() -> Self {
        AffineMap::from_ints([[1, 0], [0, 1]], [0, 0]).expect("nonsingular")
    }

    /// `(x, y) ↦ (y, x)`.
    pub fn swap() -> Self {
        AffineMap::from_ints([[0, 1], [1, 0]], [0, 0]).expect("nonsingular")
    }

    pub fn matrix(&self) -> &[[Rational; 2]; 2] {
        &self.matrix
    }

    pub fn translation(&self) -> &[Rational; 2] {
        &self.translation
    }

    pub fn det(&self) -> Rational {
        &self.matrix[0][0] * &self.matrix[1][1] - &self.matrix[0][1] * &self.matrix[1][0]
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineMap::identity()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &AffineMap) -> AffineMap {
        let (m, n) = (&self.matrix, &inner.matrix);
        let entry = |i: usize, j: usize| &m[i][0] * &n[0][j] + &m[i][1] * &n[1][j];
        let shift = |i: usize| {
            &m[i][0] * &inner.translation[0]
                + &m[i][1] * &inner.translation[1]
                + &self.translation[i]
        };
        AffineMap {
            matrix: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
            translation: [shift(0), shift(1)],
        }
    }

    pub fn inverse(&self) -> AffineMap {
        let det = self.det();
        let m = &self.matrix;
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        let t = &self.translation;
        let shift = |i: usize| -(&inv[i][0] * &t[0] + &inv[i][1] * &t[1]);
        let translation = [shift(0), shift(1)];
        AffineMap {
            matrix: inv,
            translation,
        }
    }

    /// `self ∘ (p, q)`; never raises degree.
    pub fn apply(&self, m: &PolyMap) -> PolyMap {
        let row = |i: usize| {
            let mut out = &m.f1.scale(&self.matrix[i][0]) + &m.f2.scale(&self.matrix[i][1]);
            out = &out + &Polynomial::constant(self.translation[i].clone());
            out
        };
        PolyMap {
            f1: row(0),
            f2: row(1),
        }
    }

    pub fn to_map(&self) -> PolyMap {
        self.apply(&PolyMap::identity())
    }

    /// Reads an affine map off a pair of polynomials of total degree ≤ 1.
    pub fn from_map(m: &PolyMap) -> Result<AffineMap, FactorError> {
        let row = |p: &Polynomial| [p.coeff(1, 0), p.coeff(0, 1)];
        AffineMap::new(
            [row(&m.f1), row(&m.f2)],
            [m.f1.coeff(0, 0), m.f2.coeff(0, 0)],
        )
    }
}

/// The coordinate a shear moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// `(x, y) ↦ (x + f(y), y)`
    X,
    /// `(x, y) ↦ (x, y + f(x))`
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

/// An elementary triangular map. `f` is univariate in the fixed coordinate
/// and nonconstant; constant and linear terms are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryMap {
    axis: Axis,
    f: Polynomial,
}

impl ElementaryMap {
    pub fn new(axis: Axis, f: Polynomial) -> Result<Self, FactorError> {
        let moving_var_used = match axis {
            Axis::Y => f.degree_in(true) > 0,
            Axis::X => f.degree_in(false) > 0,
        };
        if moving_var_used || f.is_constant() {
            return Err(FactorError::InvalidShear);
        }
        Ok(ElementaryMap { axis, f })
    }

    /// `c * v^k` with `v` the fixed coordinate.
    pub fn power(axis: Axis, c: Rational, k: u32) -> Result<Self, FactorError> {
        let f = match axis {
            Axis::Y => Polynomial::monomial(c, k, 0),
            Axis::X => Polynomial::monomial(c, 0, k),
        };
        ElementaryMap::new(axis, f)
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// Degree of `f`.
    pub fn degree(&self) -> u64 {
        self.f.total_deg().finite().unwrap_or(0)
    }

    pub fn inverse(&self) -> ElementaryMap {
        ElementaryMap {
            axis: self.axis,
            f: -&self.f,
        }
    }

    /// `self ∘ (p, q)`.
    pub fn apply(&self, m: &PolyMap, limit: u32) -> Result<PolyMap, DegreeOverflow> {
        Ok(match self.axis {
            Axis::Y => {
                let shift = self
                    .f
                    .substitute_bounded((&m.f1, &Polynomial::y()), limit)?;
                PolyMap::new(m.f1.clone(), &m.f2 + &shift)
            }
            Axis::X => {
                let shift = self
                    .f
                    .substitute_bounded((&Polynomial::x(), &m.f2), limit)?;
                PolyMap::new(&m.f1 + &shift, m.f2.clone())
            }
        })
    }

    pub fn to_map(&self) -> PolyMap {
        self.apply(&PolyMap::identity(), u32::MAX)
            .expect("a single shear never overflows")
    }
}

// Words are short; boxing the affine variant buys nothing.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Affine(AffineMap),
    Elementary(ElementaryMap),
}

impl Factor {
    pub fn inverse(&self) -> Factor {
        match self {
            Factor::Affine(a) => Factor::Affine(a.inverse()),
            Factor::Elementary(e) => Factor::Elementary(e.inverse()),
        }
    }

    /// `self ∘ m`.
    pub fn apply(&self, m: &PolyMap, limit: u32) -> Result<PolyMap, DegreeOverflow> {
        match self {
            Factor::Affine(a) => Ok(a.apply(m)),
            Factor::Elementary(e) => e.apply(m, limit),
        }
    }
}

impl From<AffineMap> for Factor {
    fn from(a: AffineMap) -> Self {
        Factor::Affine(a)
    }
}

impl From<ElementaryMap> for Factor {
    fn from(e: ElementaryMap) -> Self {
        Factor::Elementary(e)
    }
}

/// A sequence of factors in application order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    factors: Vec<Factor>,
}

impl GeneratorWord {
    pub fn new(factors: Vec<Factor>) -> Self {
        GeneratorWord { factors }
    }

    pub fn empty() -> Self {
        GeneratorWord::default()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn push(&mut self, f: impl Into<Factor>) {
        self.factors.push(f.into());
    }

    /// The word applying `self` first, then `next`.
    pub fn then(&self, next: &GeneratorWord) -> GeneratorWord {
        let mut factors = self.factors.clone();
        factors.extend(next.factors.iter().cloned());
        GeneratorWord { factors }
    }

    pub fn evaluate(&self) -> Result<PolyMap, DegreeOverflow> {
        self.evaluate_bounded(DEFAULT_MAX_DEGREE)
    }

    pub fn evaluate_bounded(&self, limit: u32) -> Result<PolyMap, DegreeOverflow> {
        let mut map = PolyMap::identity();
        for f in &self.factors {
            map = f.apply(&map, limit)?;
        }
        Ok(map)
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            factors: self.factors.iter().rev().map(Factor::inverse).collect(),
        }
    }
}

impl FromIterator<Factor> for GeneratorWord {
    fn from_iter<I: IntoIterator<Item = Factor>>(iter: I) -> Self {
        GeneratorWord::new(iter.into_iter().collect())
    }
}

pub fn evaluate_word(word: &GeneratorWord) -> Result<PolyMap, DegreeOverflow> {
    word.evaluate()
}

pub fn invert_word(word: &GeneratorWord) -> GeneratorWord {
    word.inverse()
}

/// A polynomial self-map `(f1, f2)` of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMap {
    pub f1: Polynomial,
    pub f2: Polynomial,
}

impl PolyMap {
    pub fn new(f1: Polynomial, f2: Polynomial) -> Self {
        PolyMap { f1, f2 }
    }

    pub fn identity() -> Self {
        PolyMap::new(Polynomial::x(), Polynomial::y())
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap, DegreeOverflow> {
        self.compose_bounded(inner, DEFAULT_MAX_DEGREE)
    }

    pub fn compose_bounded(&self, inner: &PolyMap, limit: u32) -> Result<PolyMap, DegreeOverflow> {
        let images = (&inner.f1, &inner.f2);
        Ok(PolyMap::new(
            self.f1.substitute_bounded(images, limit)?,
            self.f2.substitute_bounded(images, limit)?,
        ))
    }

    pub fn wmdeg(&self, w: Weight) -> Bidegree {
        Bidegree {
            d1: self.f1.wdeg(w),
            d2: self.f2.wdeg(w),
        }
    }

    pub fn mdeg(&self) -> Bidegree {
        Bidegree {
            d1: self.f1.total_deg(),
            d2: self.f2.total_deg(),
        }
    }

    pub fn total_deg(&self) -> WDeg {
        self.f1.total_deg().max(self.f2.total_deg())
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

/// `g ∘ f`.
pub fn compose(g: &PolyMap, f: &PolyMap) -> Result<PolyMap, DegreeOverflow> {
    g.compose(f)
}

pub fn wmdeg_map(m: &PolyMap, w: Weight) -> Bidegree {
    m.wmdeg(w)
}

pub fn mdeg_map(m: &PolyMap) -> Bidegree {
    m.mdeg()
}

pub fn map_equal(a: &PolyMap, b: &PolyMap) -> bool {
    a == b
}

/// A pair of (weighted) degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub d1: WDeg,
    pub d2: WDeg,
}

impl Bidegree {
    pub fn new(d1: u64, d2: u64) -> Self {
        Bidegree {
            d1: WDeg::Finite(d1),
            d2: WDeg::Finite(d2),
        }
    }

    /// Both components as positive integers, if they are.
    pub fn positive(self) -> Option<(u64, u64)> {
        match (self.d1, self.d2) {
            (WDeg::Finite(a), WDeg::Finite(b)) if a > 0 && b > 0 => Some((a, b)),
            _ => None,
        }
    }

    pub fn swapped(self) -> Self {
        Bidegree {
            d1: self.d2,
            d2: self.d1,
        }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

impl Default for AffineMap {
    fn default() -> Self {
        AffineMap::identity()
    }
}

impl AffineMap {
    /// True when the first output depends on `x` alone, i.e. the map is
    /// also triangular.
    pub fn is_lower_triangular(&self) -> bool {
        self.matrix[0][1].is_zero()
    }
}
