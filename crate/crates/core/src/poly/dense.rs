//! Dense integer kernels for products and substitutions.
//!
//! A polynomial is held as integer numerators over one shared denominator,
//! so the inner loops never normalize a fraction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Exponent, Polynomial};
use crate::rational::{self, Rational};

/// Largest coefficient array the dense path will allocate.
const MAX_CELLS: usize = 1 << 22;

#[derive(Clone, Debug)]
pub(super) struct Dense {
    /// Row `a`, column `b` holds the numerator of `x^a y^b`.
    num: Vec<BigInt>,
    rows: usize,
    cols: usize,
    den: BigInt,
}

/// Whether a `rows × cols` array is small enough to allocate.
pub(super) fn fits(rows: u64, cols: u64) -> bool {
    rows.checked_mul(cols)
        .is_some_and(|cells| cells <= MAX_CELLS as u64)
}

impl Dense {
    fn zeros(rows: usize, cols: usize, den: BigInt) -> Dense {
        Dense {
            num: vec![BigInt::zero(); rows * cols],
            rows,
            cols,
            den,
        }
    }

    pub(super) fn from_poly(p: &Polynomial) -> Dense {
        let rows = p.degree_in(false) as usize + 1;
        let cols = p.degree_in(true) as usize + 1;
        let den = p
            .terms
            .values()
            .filter(|c| !c.is_integer())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let mut out = Dense::zeros(rows, cols, den);
        for (e, c) in &p.terms {
            let scaled = if out.den.is_one() {
                c.numer().clone()
            } else {
                c.numer() * (&out.den / c.denom())
            };
            out.num[e.a as usize * cols + e.b as usize] = scaled;
        }
        out
    }

    pub(super) fn to_poly(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for a in 0..self.rows {
            for b in 0..self.cols {
                let n = &self.num[a * self.cols + b];
                if !n.is_zero() {
                    p.terms.insert(
                        Exponent::new(a as u32, b as u32),
                        rational::over(n.clone(), &self.den),
                    );
                }
            }
        }
        p
    }

    fn nonzero(&self) -> Vec<(usize, usize, &BigInt)> {
        let mut out = Vec::new();
        for a in 0..self.rows {
            for b in 0..self.cols {
                let n = &self.num[a * self.cols + b];
                if !n.is_zero() {
                    out.push((a, b, n));
                }
            }
        }
        out
    }

    pub(super) fn mul(&self, other: &Dense) -> Dense {
        let rows = self.rows + other.rows - 1;
        let cols = self.cols + other.cols - 1;
        let den = &self.den * &other.den;
        if let Some(num) = self.mul_small(other, rows, cols) {
            let num = num.into_iter().map(BigInt::from).collect();
            return Dense {
                num,
                rows,
                cols,
                den,
            };
        }
        let mut out = Dense::zeros(rows, cols, den);
        let rhs = other.nonzero();
        for (a1, b1, c1) in self.nonzero() {
            for &(a2, b2, c2) in &rhs {
                out.num[(a1 + a2) * cols + b1 + b2] += c1 * c2;
            }
        }
        out
    }

    /// The product's numerators in machine integers, or `None` if any
    /// input or partial sum does not fit.
    fn mul_small(&self, other: &Dense, rows: usize, cols: usize) -> Option<Vec<i128>> {
        let small = |d: &Dense| -> Option<Vec<(usize, usize, i128)>> {
            d.nonzero()
                .into_iter()
                .map(|(a, b, n)| i64::try_from(n).ok().map(|n| (a, b, i128::from(n))))
                .collect()
        };
        let (lhs, rhs) = (small(self)?, small(other)?);
        let mut out = vec![0i128; rows * cols];
        for &(a1, b1, c1) in &lhs {
            for &(a2, b2, c2) in &rhs {
                let cell = &mut out[(a1 + a2) * cols + b1 + b2];
                *cell = cell.checked_add(c1 * c2)?;
            }
        }
        Some(out)
    }

    /// `self + c * other`.
    pub(super) fn add_scaled(&self, other: &Dense, c: &Rational) -> Dense {
        let other_den = &other.den * c.denom();
        let den = self.den.lcm(&other_den);
        let rows = self.rows.max(other.rows);
        let cols = self.cols.max(other.cols);
        let mut out = Dense::zeros(rows, cols, den);
        let left = &out.den / &self.den;
        let right = c.numer() * (&out.den / &other_den);
        for (a, b, n) in self.nonzero() {
            out.num[a * cols + b] = n * &left;
        }
        for (a, b, n) in other.nonzero() {
            out.num[a * cols + b] += n * &right;
        }
        out
    }

    fn constant(c: &Rational) -> Dense {
        Dense {
            num: vec![c.numer().clone()],
            rows: 1,
            cols: 1,
            den: c.denom().clone(),
        }
    }

    /// `h(P, Q)` by powers of `P` and Horner's rule in `Q`.
    pub(super) fn substitute(h: &Polynomial, p: &Dense, q: &Dense) -> Dense {
        let max_a = h.degree_in(false) as usize;
        let max_b = h.degree_in(true) as usize;
        let mut p_powers = Vec::with_capacity(max_a + 1);
        p_powers.push(Dense::constant(&Rational::one()));
        for i in 1..=max_a {
            let next = p_powers[i - 1].mul(p);
            p_powers.push(next);
        }
        let zero = Dense::constant(&Rational::zero());
        let mut rows: Vec<Dense> = vec![zero.clone(); max_b + 1];
        for (e, c) in &h.terms {
            let row = &mut rows[e.b as usize];
            *row = row.add_scaled(&p_powers[e.a as usize], c);
        }
        let one = Rational::one();
        let mut acc = zero;
        for row in rows.iter().rev() {
            acc = row.add_scaled(&acc.mul(q), &one);
        }
        acc
    }
}
