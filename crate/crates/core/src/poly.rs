//! Sparse bivariate polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::grading::{WDeg, Weight};
use crate::rational::{self, Rational};
use dense::Dense;

mod dense;

/// Largest total degree a composition may produce before it is abandoned.
pub const DEFAULT_MAX_DEGREE: u32 = 4096;

/// The exponent pair of the monomial `x^a y^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    pub a: u32,
    pub b: u32,
}

impl Exponent {
    pub const fn new(a: u32, b: u32) -> Self {
        Exponent { a, b }
    }

    pub fn total(self) -> u64 {
        u64::from(self.a) + u64::from(self.b)
    }

    pub fn weighted(self, w: Weight) -> u64 {
        u64::from(self.a) * w.w1() + u64::from(self.b) * w.w2()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => f.write_str("the zero polynomial has no leading form"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PolyError {}

/// A composition whose degree would exceed the configured limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeOverflow {
    pub limit: u32,
    pub degree: u64,
}

impl fmt::Display for DegreeOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {} exceeds the maximum total degree {}",
            self.degree, self.limit
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DegreeOverflow {}

/// Which degree a leading form is taken with respect to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    Total,
    Weighted(Weight),
}

/// A polynomial in `x` and `y`. No stored coefficient is ever zero, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponent, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Polynomial::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponent::new(a, b), c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from terms, summing repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Polynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                rational::add_assign(o.get_mut(), c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.a == 0 && e.b == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .get(&Exponent::new(a, b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Weighted degree: the largest `a*w1 + b*w2` over the support.
    pub fn wdeg(&self, w: Weight) -> WDeg {
        self.terms
            .keys()
            .map(|e| e.weighted(w))
            .max()
            .map_or(WDeg::MinusInfinity, WDeg::Finite)
    }

    pub fn total_deg(&self) -> WDeg {
        self.terms
            .keys()
            .map(|e| e.total())
            .max()
            .map_or(WDeg::MinusInfinity, WDeg::Finite)
    }

    /// Largest power of `x` (or `y` when `in_y`) occurring; 0 for constants.
    pub fn degree_in(&self, in_y: bool) -> u32 {
        self.terms
            .keys()
            .map(|e| if in_y { e.b } else { e.a })
            .max()
            .unwrap_or(0)
    }

    /// The sum of the terms of top degree under `grading`.
    pub fn leading_form(&self, grading: Grading) -> Result<Polynomial, PolyError> {
        let degree_of = |e: &Exponent| match grading {
            Grading::Total => e.total(),
            Grading::Weighted(w) => e.weighted(w),
        };
        let top = self
            .terms
            .keys()
            .map(degree_of)
            .max()
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| degree_of(e) == top)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        })
    }

    /// The part of total degree at most 1.
    pub fn affine_part(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() <= 1)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, rational::mul(v, c)))
                .collect(),
        }
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.b, e.a), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// If `self = c * other` for a rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (e, c_other) = other.terms.iter().next_back()?;
        let c = self.terms.get(e)? / c_other;
        (*self == other.scale(&c)).then_some(c)
    }

    /// Simultaneous substitution `h(P, Q)` for `images = (P, Q)`.
    pub fn substitute(&self, images: (&Polynomial, &Polynomial)) -> Polynomial {
        self.substitute_unchecked(images)
    }

    /// Like [`substitute`](Self::substitute), but refuses to expand when the
    /// result could exceed total degree `limit`.
    pub fn substitute_bounded(
        &self,
        images: (&Polynomial, &Polynomial),
        limit: u32,
    ) -> Result<Polynomial, DegreeOverflow> {
        let dp = images.0.total_deg().finite().unwrap_or(0);
        let dq = images.1.total_deg().finite().unwrap_or(0);
        let bound = self
            .terms
            .keys()
            .map(|e| u64::from(e.a) * dp + u64::from(e.b) * dq)
            .max()
            .unwrap_or(0);
        if bound > u64::from(limit) {
            return Err(DegreeOverflow {
                limit,
                degree: bound,
            });
        }
        Ok(self.substitute_unchecked(images))
    }

    fn substitute_unchecked(&self, (p, q): (&Polynomial, &Polynomial)) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let box_side = |in_y: bool| {
            let (dp, dq) = (u64::from(p.degree_in(in_y)), u64::from(q.degree_in(in_y)));
            self.terms
                .keys()
                .map(|e| u64::from(e.a) * dp + u64::from(e.b) * dq + 1)
                .max()
                .unwrap_or(1)
        };
        if dense::fits(box_side(false), box_side(true)) {
            let (p, q) = (Dense::from_poly(p), Dense::from_poly(q));
            return Dense::substitute(self, &p, &q).to_poly();
        }
        let max_a = self.degree_in(false) as usize;
        let max_b = self.degree_in(true) as usize;
        let mut p_powers = Vec::with_capacity(max_a + 1);
        p_powers.push(Polynomial::one());
        for i in 1..=max_a {
            let next = &p_powers[i - 1] * p;
            p_powers.push(next);
        }
        // Group by the power of y: self = sum_b (sum_a c_ab x^a) y^b, then
        // Horner in Q.
        let mut rows: Vec<Polynomial> = (0..=max_b).map(|_| Polynomial::zero()).collect();
        for (e, c) in &self.terms {
            let row = &mut rows[e.b as usize];
            for (pe, pc) in &p_powers[e.a as usize].terms {
                row.add_term(*pe, pc * c);
            }
        }
        let mut acc = Polynomial::zero();
        for row in rows.into_iter().rev() {
            acc = &(&acc * q) + &row;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let rows = u64::from(self.degree_in(false)) + u64::from(rhs.degree_in(false)) + 1;
        let cols = u64::from(self.degree_in(true)) + u64::from(rhs.degree_in(true)) + 1;
        if dense::fits(rows, cols) {
            return Dense::from_poly(self).mul(&Dense::from_poly(rhs)).to_poly();
        }
        let mut out = Polynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(
                    Exponent::new(e1.a + e2.a, e1.b + e2.b),
                    rational::mul(c1, c2),
                );
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

/// `sum c x^a y^b` for small integer-coefficient test fixtures.
#[doc(hidden)]
pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|&(c, a, b)| (Exponent::new(a, b), rational::int(c))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(terms: &[(i64, u32, u32)]) -> Polynomial {
        from_int_terms(terms)
    }

    fn w(a: u64, b: u64) -> Weight {
        Weight::new(a, b).unwrap()
    }

    #[test]
    fn add_examples() {
        // (x+y) + (x-y) = 2x
        assert_eq!(
            &p(&[(1, 1, 0), (1, 0, 1)]) + &p(&[(1, 1, 0), (-1, 0, 1)]),
            p(&[(2, 1, 0)])
        );
        let h = p(&[(3, 2, 1)]);
        assert_eq!(&h + &Polynomial::zero(), h);
        // (x^2 + y/2) + y/2 = x^2 + y
        let half_y = Polynomial::monomial(frac(1, 2), 0, 1);
        let lhs = &p(&[(1, 2, 0)]) + &half_y;
        assert_eq!(&lhs + &half_y, p(&[(1, 2, 0), (1, 0, 1)]));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let h = p(&[(1, 1, 0), (1, 0, 1)]);
        let d = &h - &h;
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
        assert_eq!(d, Polynomial::zero());
    }

    #[test]
    fn mul_examples() {
        let x_plus_y = p(&[(1, 1, 0), (1, 0, 1)]);
        let x_minus_y = p(&[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(&x_plus_y * &x_minus_y, p(&[(1, 2, 0), (-1, 0, 2)]));
        assert!((&Polynomial::zero() * &x_plus_y).is_zero());
        assert_eq!(&x_plus_y * &p(&[(1, 2, 0)]), p(&[(1, 3, 0), (1, 2, 1)]));
    }

    #[test]
    fn pow_examples() {
        let x_plus_y = p(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(x_plus_y.pow(2), p(&[(1, 2, 0), (2, 1, 1), (1, 0, 2)]));
        assert_eq!(p(&[(1, 3, 0)]).pow(0), Polynomial::one());
        // (y + x^2)^3 by the binomial theorem
        assert_eq!(
            p(&[(1, 0, 1), (1, 2, 0)]).pow(3),
            p(&[(1, 0, 3), (3, 2, 2), (3, 4, 1), (1, 6, 0)])
        );
    }

    #[test]
    fn substitute_examples() {
        let h = p(&[(1, 0, 1), (1, 2, 0)]);
        assert_eq!(h.substitute((&Polynomial::x(), &Polynomial::y())), h);
        let x_plus_y2 = p(&[(1, 1, 0), (1, 0, 2)]);
        assert_eq!(
            Polynomial::y().substitute((&x_plus_y2, &Polynomial::y())),
            Polynomial::y()
        );
        // y + x^3 at (x+y, y)
        let h = p(&[(1, 0, 1), (1, 3, 0)]);
        let x_plus_y = p(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(
            h.substitute((&x_plus_y, &Polynomial::y())),
            p(&[(1, 0, 1), (1, 3, 0), (3, 2, 1), (3, 1, 2), (1, 0, 3)])
        );
    }

    #[test]
    fn substitute_bounded_guards_degree() {
        let h = p(&[(1, 3, 0)]);
        let img = p(&[(1, 0, 5)]);
        assert_eq!(
            h.substitute_bounded((&img, &Polynomial::y()), 14),
            Err(DegreeOverflow {
                limit: 14,
                degree: 15
            })
        );
        assert_eq!(
            h.substitute_bounded((&img, &Polynomial::y()), 15).unwrap(),
            p(&[(1, 0, 15)])
        );
    }

    #[test]
    fn wdeg_examples() {
        assert_eq!(Polynomial::x().wdeg(w(2, 3)), WDeg::Finite(2));
        let h = p(&[(1, 3, 0), (1, 1, 1), (1, 0, 2)]);
        assert_eq!(h.wdeg(w(2, 3)), WDeg::Finite(6));
        assert_eq!(Polynomial::zero().wdeg(w(2, 3)), WDeg::MinusInfinity);
        assert_eq!(Polynomial::constant(int(5)).wdeg(w(2, 3)), WDeg::Finite(0));
    }

    #[test]
    fn total_deg_examples() {
        assert_eq!(p(&[(1, 2, 1), (1, 0, 2)]).total_deg(), WDeg::Finite(3));
        assert_eq!(Polynomial::constant(int(7)).total_deg(), WDeg::Finite(0));
        let h = p(&[(1, 3, 0), (1, 1, 1)]);
        assert_eq!(h.total_deg(), h.wdeg(Weight::STANDARD));
        assert_eq!(h.total_deg(), WDeg::Finite(3));
    }

    #[test]
    fn leading_form_examples() {
        assert_eq!(
            p(&[(1, 0, 1), (1, 2, 0)]).leading_form(Grading::Total),
            Ok(p(&[(1, 2, 0)]))
        );
        assert_eq!(
            p(&[(1, 3, 0), (1, 1, 1), (1, 0, 2)]).leading_form(Grading::Weighted(w(2, 3))),
            Ok(p(&[(1, 3, 0), (1, 0, 2)]))
        );
        let h = p(&[(1, 1, 0), (1, 0, 1)]);
        assert_eq!(h.leading_form(Grading::Total), Ok(h));
        assert_eq!(
            Polynomial::zero().leading_form(Grading::Total),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn ratio_to_detects_proportionality() {
        let a = p(&[(2, 2, 0), (4, 1, 1)]);
        let b = p(&[(1, 2, 0), (2, 1, 1)]);
        assert_eq!(a.ratio_to(&b), Some(int(2)));
        assert_eq!(b.ratio_to(&a), Some(frac(1, 2)));
        assert_eq!(a.ratio_to(&p(&[(1, 2, 0), (1, 1, 1)])), None);
        assert_eq!(a.ratio_to(&Polynomial::zero()), None);
    }
}
