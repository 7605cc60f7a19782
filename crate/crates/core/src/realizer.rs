//! Explicit automorphisms with a prescribed weighted bidegree.
//!
//! Constructions assume `w1 ≤ w2`; the other case is handled by conjugating
//! with the swap, which exchanges both the weights and the two degrees.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::automorphism::{AffineMap, Axis, Bidegree, ElementaryMap, Factor, GeneratorWord};
use crate::grading::Weight;
use crate::rational::Rational;
use crate::wbidegree::{member, Branch};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotRealizable;

impl fmt::Display for NotRealizable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("no automorphism has this weighted bidegree")
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NotRealizable {}

/// Which part of the set the construction draws from, with weights sorted
/// so that the small weight comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    Exceptional,
    SmallLattice,
    LargeLattice,
}

/// Returns a word whose map has weighted bidegree exactly `d` under `w`.
pub fn realize(w: Weight, d: Bidegree) -> Result<GeneratorWord, NotRealizable> {
    let witness = member(w, d).map_err(|_| NotRealizable)?;
    let branch = witness.branch.ok_or(NotRealizable)?;
    let (d1, d2) = d.positive().ok_or(NotRealizable)?;
    let ordered = w.w1() <= w.w2();
    let part = match (branch, ordered) {
        (Branch::Exceptional, _) => Part::Exceptional,
        (Branch::W1, true) | (Branch::W2, false) => Part::SmallLattice,
        (Branch::W1, false) | (Branch::W2, true) => Part::LargeLattice,
    };
    if ordered {
        return Ok(build(w.w1(), w.w2(), d1, d2, part));
    }
    let inner = build(w.w2(), w.w1(), d2, d1, part);
    let swap: GeneratorWord = vec![Factor::from(AffineMap::swap())].into_iter().collect();
    Ok(swap.then(&inner).then(&swap))
}

/// `(x + y^k, y)` or `(x, y + x^k)`; affine when `k = 1`.
fn shear(axis: Axis, k: u64) -> Factor {
    let k = u32::try_from(k).expect("exponent fits in u32");
    if k == 1 {
        let m = match axis {
            Axis::X => [[1, 1], [0, 1]],
            Axis::Y => [[1, 0], [1, 1]],
        };
        return AffineMap::from_ints(m, [0, 0]).expect("unipotent").into();
    }
    ElementaryMap::power(axis, Rational::from_integer(1.into()), k)
        .expect("k >= 2")
        .into()
}

fn swap() -> Factor {
    AffineMap::swap().into()
}

/// Weights `small ≤ large`.
fn build(small: u64, large: u64, d1: u64, d2: u64, part: Part) -> GeneratorWord {
    use core::cmp::Ordering::*;
    let factors = match part {
        Part::Exceptional => {
            if (d1, d2) == (small, large) {
                vec![]
            } else if (d1, d2) == (large, small) {
                vec![swap()]
            } else {
                // (x + y, y) has bidegree (large, large)
                vec![shear(Axis::X, 1)]
            }
        }
        Part::LargeLattice => large_lattice(small, large, d1, d2),
        // With equal weights the two lattices coincide.
        Part::SmallLattice if small == large => large_lattice(small, large, d1, d2),
        Part::SmallLattice if d1.min(d2) >= large => match d1.cmp(&d2) {
            Less => vec![shear(Axis::Y, d1 / small), shear(Axis::X, d2 / d1), swap()],
            Greater => vec![shear(Axis::Y, d2 / small), shear(Axis::X, d1 / d2)],
            Equal => vec![shear(Axis::Y, d1 / small), shear(Axis::X, 1)],
        },
        // min(d1, d2) = small
        Part::SmallLattice if d1 < d2 => vec![shear(Axis::Y, d2 / small)],
        Part::SmallLattice => vec![shear(Axis::Y, d1 / small), swap()],
    };
    factors.into_iter().collect()
}

fn large_lattice(small: u64, large: u64, d1: u64, d2: u64) -> Vec<Factor> {
    use core::cmp::Ordering::*;
    match d1.cmp(&d2) {
        Less => vec![shear(Axis::X, d1 / large), shear(Axis::Y, d2 / d1)],
        Greater => {
            let mut f = vec![shear(Axis::Y, d2 / large), shear(Axis::X, d1 / d2)];
            if small < large {
                f.insert(0, swap());
            }
            f
        }
        Equal => vec![shear(Axis::X, d1 / large), shear(Axis::Y, 1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::normalize_word;
    use crate::parse::parse_poly;
    use crate::wbidegree::enumerate_z;
    use crate::PolyMap;

    fn w(a: u64, b: u64) -> Weight {
        Weight::new(a, b).unwrap()
    }

    fn el(axis: Axis, f: &str) -> Factor {
        ElementaryMap::new(axis, parse_poly(f).unwrap())
            .unwrap()
            .into()
    }

    #[test]
    fn realize_examples() {
        let word = realize(w(1, 1), Bidegree::new(2, 6)).unwrap();
        assert_eq!(
            word,
            vec![el(Axis::X, "y^2"), el(Axis::Y, "x^3")]
                .into_iter()
                .collect()
        );
        let m = word.evaluate().unwrap();
        let first = parse_poly("x + y^2").unwrap();
        assert_eq!(
            m,
            PolyMap::new(first.clone(), &parse_poly("y").unwrap() + &first.pow(3))
        );
        assert_eq!(m.mdeg(), Bidegree::new(2, 6));

        let word = realize(w(2, 3), Bidegree::new(3, 3)).unwrap();
        assert_eq!(
            word.evaluate().unwrap(),
            PolyMap::new(parse_poly("x + y").unwrap(), parse_poly("y").unwrap())
        );

        let word = realize(w(2, 3), Bidegree::new(8, 2)).unwrap();
        assert_eq!(word, vec![el(Axis::Y, "x^4"), swap()].into_iter().collect());
        let m = word.evaluate().unwrap();
        assert_eq!(
            m,
            PolyMap::new(parse_poly("y + x^4").unwrap(), parse_poly("x").unwrap())
        );
        assert_eq!(m.wmdeg(w(2, 3)), Bidegree::new(8, 2));

        assert_eq!(realize(w(2, 3), Bidegree::new(6, 4)), Err(NotRealizable));
        assert_eq!(realize(w(2, 3), Bidegree::new(0, 4)), Err(NotRealizable));
    }

    #[test]
    fn realizes_every_member_exactly() {
        for weight in [
            w(1, 1),
            w(1, 3),
            w(2, 3),
            w(3, 2),
            w(4, 6),
            w(5, 5),
            w(6, 4),
            w(3, 7),
        ] {
            for d in enumerate_z(weight, 30) {
                let word = realize(weight, d).unwrap();
                let m = word.evaluate().unwrap();
                assert_eq!(m.wmdeg(weight), d, "w={weight} d={d}");
            }
        }
    }

    #[test]
    fn realized_lengths_follow_strata() {
        let weight = w(2, 3);
        for d in enumerate_z(weight, 24) {
            let (d1, d2) = d.positive().unwrap();
            let len = normalize_word(&realize(weight, d).unwrap())
                .unwrap()
                .length();
            if d1.min(d2) > weight.max() && d1 != d2 {
                assert_eq!(len, 2, "{d}");
            } else if [(2, 3), (3, 2), (3, 3)].contains(&(d1, d2)) {
                assert_eq!(len, 0, "{d}");
            } else {
                assert_eq!(len, 1, "{d}");
            }
        }
    }
}
