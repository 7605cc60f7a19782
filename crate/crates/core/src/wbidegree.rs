//! The set `Z(w)` of weighted bidegrees of plane automorphisms, its two
//! strata by length, and degree propagation along normal forms.
//!
//! With `w̃ = max(w1, w2)` and `ŵ = min(w1, w2)`, a pair `(d1, d2)` of
//! positive integers lies in `Z(w)` iff it is one of `(w1, w2)`, `(w2, w1)`,
//! `(w̃, w̃)`, or both entries are multiples of the same `wi` and
//!
//! * `d1 | d2` or `d2 | d1`,
//! * `max(d1, d2) ≥ w̃`,
//! * `min(d1, d2) < w̃` implies `min(d1, d2) = ŵ`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::automorphism::{Axis, Bidegree};
use crate::decomposition::NormalForm;
use crate::grading::{WDeg, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Member,
    NonMember,
}

/// Which part of `Z(w)` a member was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Exceptional,
    /// Both entries in `w1 ℕ₊`.
    W1,
    /// Both entries in `w2 ℕ₊`.
    W2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Divisibility,
    MaxGeWtilde,
    MinRule,
    Lattice,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Divisibility => "divisibility",
            Condition::MaxGeWtilde => "max_ge_wtilde",
            Condition::MinRule => "min_rule",
            Condition::Lattice => "lattice",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub verdict: Verdict,
    /// `Some` exactly for members. Overlaps resolve as exceptional, then
    /// `W1`, then `W2`.
    pub branch: Option<Branch>,
    /// Conditions violated by a non-member; empty for members.
    pub failed: Vec<Condition>,
}

impl MembershipWitness {
    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }
}

/// A bidegree with a zero or `-inf` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvalidBidegree(pub Bidegree);

impl fmt::Display for InvalidBidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bidegree {} must have positive integer entries", self.0)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for InvalidBidegree {}

fn positive(d: Bidegree) -> Result<(u64, u64), InvalidBidegree> {
    d.positive().ok_or(InvalidBidegree(d))
}

fn divides_either(d1: u64, d2: u64) -> bool {
    d2.is_multiple_of(d1) || d1.is_multiple_of(d2)
}

fn is_exceptional(w: Weight, d1: u64, d2: u64) -> bool {
    let wt = w.max();
    (d1, d2) == (w.w1(), w.w2()) || (d1, d2) == (w.w2(), w.w1()) || (d1, d2) == (wt, wt)
}

pub fn member(w: Weight, d: Bidegree) -> Result<MembershipWitness, InvalidBidegree> {
    let (d1, d2) = positive(d)?;
    let (wt, wmin) = (w.max(), w.min());
    let (lo, hi) = (d1.min(d2), d1.max(d2));

    let on_lattice = |v: u64| d1 % v == 0 && d2 % v == 0;
    let checks = [
        (Condition::Divisibility, divides_either(d1, d2)),
        (Condition::MaxGeWtilde, hi >= wt),
        (Condition::MinRule, lo >= wt || lo == wmin),
        (Condition::Lattice, on_lattice(w.w1()) || on_lattice(w.w2())),
    ];
    let failed: Vec<Condition> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(c, _)| *c)
        .collect();

    let branch = if is_exceptional(w, d1, d2) {
        Some(Branch::Exceptional)
    } else if !failed.is_empty() {
        None
    } else if on_lattice(w.w1()) {
        Some(Branch::W1)
    } else {
        Some(Branch::W2)
    };
    Ok(match branch {
        Some(b) => MembershipWitness {
            verdict: Verdict::Member,
            branch: Some(b),
            failed: Vec::new(),
        },
        None => MembershipWitness {
            verdict: Verdict::NonMember,
            branch: None,
            failed,
        },
    })
}

/// Members with both entries at most `bound`, in ascending order.
pub fn enumerate_z(w: Weight, bound: u64) -> BTreeSet<Bidegree> {
    let mut out = BTreeSet::new();
    for d1 in 1..=bound {
        for d2 in 1..=bound {
            let d = Bidegree::new(d1, d2);
            if member(w, d).expect("positive").is_member() {
                out.insert(d);
            }
        }
    }
    out
}

/// Weighted bidegrees of automorphisms of length at most 1.
pub fn in_le1_set(w: Weight, d: Bidegree) -> Result<bool, InvalidBidegree> {
    let (d1, d2) = positive(d)?;
    if is_exceptional(w, d1, d2) {
        return Ok(true);
    }
    // (v, kv), (kv, v), (kv, kv) with kv ≥ u, for {v, u} = {w1, w2}
    let family = |v: u64, u: u64| {
        let multiple = |e: u64| e.is_multiple_of(v) && e >= u;
        (d1 == v && multiple(d2)) || (d2 == v && multiple(d1)) || (d1 == d2 && multiple(d1))
    };
    Ok(family(w.w1(), w.w2()) || family(w.w2(), w.w1()))
}

/// Weighted bidegrees of automorphisms of length at least 2.
pub fn in_ge2_set(w: Weight, d: Bidegree) -> Result<bool, InvalidBidegree> {
    let (d1, d2) = positive(d)?;
    let on_lattice = |v: u64| d1 % v == 0 && d2 % v == 0;
    Ok((on_lattice(w.w1()) || on_lattice(w.w2()))
        && d1.min(d2) >= w.max()
        && divides_either(d1, d2))
}

/// The weighted bidegree of the map `nf` represents, computed from the
/// degrees of its shears alone.
pub fn propagate_wmdeg(nf: &NormalForm, w: Weight) -> Bidegree {
    if nf.length() == 0 {
        return nf.evaluate().expect("affine maps never overflow").wmdeg(w);
    }
    let start = nf.l1().to_map().wmdeg(w);
    let finite = |d: WDeg| d.finite().expect("invertible affine rows are nonzero");
    let (mut k1, mut k2) = (finite(start.d1), finite(start.d2));
    for t in nf.triangulars() {
        match t.axis() {
            Axis::Y => k2 = k2.max(t.degree() * k1),
            Axis::X => k1 = k1.max(t.degree() * k2),
        }
    }
    // k1 ≠ k2 from here on, so no affine combination can cancel top terms.
    let m = nf.l2().matrix();
    let row = |i: usize| {
        let mut d = 0;
        if !m[i][0].is_zero() {
            d = d.max(k1);
        }
        if !m[i][1].is_zero() {
            d = d.max(k2);
        }
        d
    };
    Bidegree::new(row(0), row(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{ElementaryMap, GeneratorWord};
    use crate::decomposition::{decompose, normalize_word};
    use crate::parse::parse_poly;
    use crate::AffineMap;

    fn w(a: u64, b: u64) -> Weight {
        Weight::new(a, b).unwrap()
    }

    fn d(a: u64, b: u64) -> Bidegree {
        Bidegree::new(a, b)
    }

    #[test]
    fn member_examples() {
        assert!(member(w(1, 1), d(3, 6)).unwrap().is_member());
        let wit = member(w(2, 3), d(2, 3)).unwrap();
        assert_eq!(wit.branch, Some(Branch::Exceptional));
        assert_eq!(member(w(2, 3), d(2, 4)).unwrap().branch, Some(Branch::W1));
        let wit = member(w(2, 3), d(4, 6)).unwrap();
        assert_eq!(wit.verdict, Verdict::NonMember);
        assert_eq!(wit.failed, vec![Condition::Divisibility]);
        let wit = member(w(2, 3), d(2, 2)).unwrap();
        assert_eq!(wit.verdict, Verdict::NonMember);
        assert_eq!(wit.failed, vec![Condition::MaxGeWtilde]);
    }

    #[test]
    fn member_failure_lists() {
        // 5 and 7 share no lattice with (2,3), and min 5 ≥ 3
        let wit = member(w(2, 3), d(5, 7)).unwrap();
        assert_eq!(
            wit.failed,
            vec![Condition::Divisibility, Condition::Lattice]
        );
        // (4, 8) under (2,5): min 4 < 5 but 4 ≠ 2
        let wit = member(w(2, 5), d(4, 8)).unwrap();
        assert_eq!(wit.failed, vec![Condition::MinRule]);
        // W2 branch when only the w2 lattice fits
        assert_eq!(member(w(2, 3), d(3, 9)).unwrap().branch, Some(Branch::W2));
        // W1 wins overlaps
        assert_eq!(member(w(1, 2), d(2, 4)).unwrap().branch, Some(Branch::W1));
    }

    #[test]
    fn member_rejects_degenerate_bidegrees() {
        assert!(member(w(1, 1), d(0, 3)).is_err());
        let minus = Bidegree {
            d1: WDeg::MinusInfinity,
            d2: WDeg::Finite(1),
        };
        assert_eq!(member(w(1, 1), minus), Err(InvalidBidegree(minus)));
        assert!(in_le1_set(w(1, 1), minus).is_err());
        assert!(in_ge2_set(w(1, 1), d(2, 0)).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let expected: BTreeSet<Bidegree> = [
            (1, 1),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 1),
            (3, 1),
            (4, 1),
            (2, 2),
            (2, 4),
            (4, 2),
            (3, 3),
            (4, 4),
        ]
        .into_iter()
        .map(|(a, b)| d(a, b))
        .collect();
        assert_eq!(enumerate_z(w(1, 1), 4), expected);
        let expected: BTreeSet<Bidegree> = [d(2, 3), d(3, 2), d(3, 3)].into_iter().collect();
        assert_eq!(enumerate_z(w(2, 3), 3), expected);
        assert!(enumerate_z(w(2, 3), 1).is_empty());
    }

    #[test]
    fn le1_examples() {
        assert!(in_le1_set(w(2, 3), d(8, 2)).unwrap());
        assert!(in_le1_set(w(2, 3), d(2, 3)).unwrap());
        assert!(!in_le1_set(w(2, 3), d(12, 4)).unwrap());
        // (k w1, k w1) needs k w1 ≥ w2
        assert!(!in_le1_set(w(2, 5), d(4, 4)).unwrap());
        assert!(in_le1_set(w(2, 5), d(6, 6)).unwrap());
    }

    #[test]
    fn ge2_examples() {
        assert!(in_ge2_set(w(2, 3), d(12, 4)).unwrap());
        assert!(!in_ge2_set(w(2, 3), d(2, 4)).unwrap());
        assert!(in_ge2_set(w(1, 1), d(2, 6)).unwrap());
    }

    fn poly_word(shears: &[(Axis, &str)]) -> GeneratorWord {
        shears
            .iter()
            .map(|(a, f)| {
                ElementaryMap::new(*a, parse_poly(f).unwrap())
                    .unwrap()
                    .into()
            })
            .collect()
    }

    #[test]
    fn propagate_examples() {
        let nf = decompose(&poly_word(&[(Axis::Y, "x^2")]).evaluate().unwrap()).unwrap();
        assert_eq!(propagate_wmdeg(&nf, w(2, 3)), d(2, 4));

        let swap: GeneratorWord = [AffineMap::swap().into()].into_iter().collect();
        let nf = normalize_word(&swap).unwrap();
        assert_eq!(propagate_wmdeg(&nf, w(2, 3)), d(3, 2));

        let word = poly_word(&[(Axis::Y, "x^2"), (Axis::X, "y^3")]);
        let nf = decompose(&word.evaluate().unwrap()).unwrap();
        assert_eq!(propagate_wmdeg(&nf, w(2, 3)), d(12, 4));
        assert_eq!(word.evaluate().unwrap().wmdeg(w(2, 3)), d(12, 4));
    }

    #[test]
    fn propagate_through_mixing_affines() {
        let word: GeneratorWord = [
            AffineMap::from_ints([[1, 1], [0, 1]], [0, 0])
                .unwrap()
                .into(),
            ElementaryMap::new(Axis::Y, parse_poly("x^2 - x").unwrap())
                .unwrap()
                .into(),
            AffineMap::from_ints([[3, 1], [1, 0]], [1, 1])
                .unwrap()
                .into(),
            ElementaryMap::new(Axis::Y, parse_poly("x^3").unwrap())
                .unwrap()
                .into(),
            AffineMap::from_ints([[1, 0], [1, 1]], [0, 0])
                .unwrap()
                .into(),
        ]
        .into_iter()
        .collect();
        let m = word.evaluate().unwrap();
        let nf = normalize_word(&word).unwrap();
        for weight in [w(1, 1), w(2, 3), w(3, 5), w(5, 2)] {
            assert_eq!(propagate_wmdeg(&nf, weight), m.wmdeg(weight));
        }
    }
}
