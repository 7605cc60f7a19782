//! Normal form `L2 ∘ T_l ∘ ⋯ ∘ T_1 ∘ L1` of plane automorphisms.
//!
//! Two independent routes lead to a [`NormalForm`]:
//!
//! * [`decompose`] works on an expanded map. It repeatedly cancels the top
//!   total-degree form of one component against a power of the other,
//!   recording the linear or elementary shear that did it. When no such
//!   cancellation exists the map is certified not to be an automorphism.
//! * [`normalize_word`] works symbolically on a generator word, viewing it
//!   as an alternating product in the amalgam of the affine group and the
//!   triangular group `{(a x + b, c y + f(x))}` over their intersection.
//!   Factors lying in the intersection are merged away until the word is
//!   reduced; the number of triangular pieces left is the length.
//!
//! `decompose` feeds the factors it collects through `normalize_word`, so
//! both produce the same shape of output.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::automorphism::{AffineMap, Axis, ElementaryMap, Factor, GeneratorWord, PolyMap};
use crate::grading::WDeg;
use crate::poly::{DegreeOverflow, Grading, Polynomial, DEFAULT_MAX_DEGREE};
use crate::rational::Rational;

/// `L2 ∘ T_l ∘ ⋯ ∘ T_1 ∘ L1` with every `T_i` a shear of degree at least 2
/// and consecutive shears moving different coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    l1: AffineMap,
    triangulars: Vec<ElementaryMap>,
    l2: AffineMap,
}

impl NormalForm {
    /// Checks the alternation and degree invariants.
    pub fn new(
        l1: AffineMap,
        triangulars: Vec<ElementaryMap>,
        l2: AffineMap,
    ) -> Option<NormalForm> {
        let degrees_ok = triangulars.iter().all(|t| t.degree() >= 2);
        let alternating = triangulars.windows(2).all(|p| p[0].axis() != p[1].axis());
        (degrees_ok && alternating).then_some(NormalForm {
            l1,
            triangulars,
            l2,
        })
    }

    pub fn l1(&self) -> &AffineMap {
        &self.l1
    }

    pub fn l2(&self) -> &AffineMap {
        &self.l2
    }

    /// Shears in application order.
    pub fn triangulars(&self) -> &[ElementaryMap] {
        &self.triangulars
    }

    pub fn length(&self) -> usize {
        self.triangulars.len()
    }

    /// `[L1, T_1, …, T_l, L2]`.
    pub fn to_word(&self) -> GeneratorWord {
        let mut word = GeneratorWord::empty();
        word.push(self.l1.clone());
        for t in &self.triangulars {
            word.push(t.clone());
        }
        word.push(self.l2.clone());
        word
    }

    pub fn evaluate(&self) -> Result<PolyMap, DegreeOverflow> {
        self.to_word().evaluate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotAutomorphismReason {
    DegreeNotDivisible,
    LeadingFormsNotProportional,
    SingularAffine,
}

impl NotAutomorphismReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NotAutomorphismReason::DegreeNotDivisible => "degree-not-divisible",
            NotAutomorphismReason::LeadingFormsNotProportional => "leading-forms-not-proportional",
            NotAutomorphismReason::SingularAffine => "singular-affine",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    NotAutomorphism(NotAutomorphismReason),
    DegreeOverflow(DegreeOverflow),
}

impl From<DegreeOverflow> for DecomposeError {
    fn from(e: DegreeOverflow) -> Self {
        DecomposeError::DegreeOverflow(e)
    }
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::NotAutomorphism(r) => write!(f, "not an automorphism ({})", r.as_str()),
            DecomposeError::DegreeOverflow(e) => e.fmt(f),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DecomposeError {}

pub fn decompose(m: &PolyMap) -> Result<NormalForm, DecomposeError> {
    decompose_bounded(m, DEFAULT_MAX_DEGREE)
}

/// Like [`decompose`], but maps whose total degree exceeds `limit` are
/// rejected before any work is done.
pub fn decompose_bounded(m: &PolyMap, limit: u32) -> Result<NormalForm, DecomposeError> {
    use NotAutomorphismReason::*;

    if let WDeg::Finite(degree) = m.total_deg() {
        if degree > u64::from(limit) {
            return Err(DegreeOverflow { limit, degree }.into());
        }
    }

    let (mut p, mut q) = (m.f1.clone(), m.f2.clone());
    // Factors g_1, g_2, … with g_k ∘ ⋯ ∘ g_1 ∘ m reduced.
    let mut reducers: Vec<Factor> = Vec::new();
    // Powers of the lower-degree component, which stays fixed while the
    // other one is being reduced along `axis`.
    let mut powers: Option<(Axis, Vec<Polynomial>)> = None;
    let base = loop {
        let (d1, d2) = (p.total_deg(), q.total_deg());
        if d1 <= WDeg::Finite(1) && d2 <= WDeg::Finite(1) {
            let base = AffineMap::from_map(&PolyMap::new(p, q))
                .map_err(|_| DecomposeError::NotAutomorphism(SingularAffine))?;
            break base;
        }
        let (WDeg::Finite(d1), WDeg::Finite(d2)) = (d1, d2) else {
            return Err(DecomposeError::NotAutomorphism(DegreeNotDivisible));
        };
        let lf = |h: &Polynomial| h.leading_form(Grading::Total).expect("nonzero");
        if d1 == d2 {
            let (lp, lq) = (lf(&p), lf(&q));
            powers = None;
            if let Some(c) = lq.ratio_to(&lp) {
                q = &q - &p.scale(&c);
                reducers.push(linear_shear(Axis::Y, -c).into());
            } else if let Some(c) = lp.ratio_to(&lq) {
                p = &p - &q.scale(&c);
                reducers.push(linear_shear(Axis::X, -c).into());
            } else {
                return Err(DecomposeError::NotAutomorphism(LeadingFormsNotProportional));
            }
            continue;
        }
        // Cancel the top form of the higher-degree component against a power
        // of the other one.
        let (small, small_deg, large, large_deg, axis) = if d1 < d2 {
            (&p, d1, &q, d2, Axis::Y)
        } else {
            (&q, d2, &p, d1, Axis::X)
        };
        if small_deg == 0 || large_deg % small_deg != 0 {
            return Err(DecomposeError::NotAutomorphism(DegreeNotDivisible));
        }
        let k = u32::try_from(large_deg / small_deg).expect("degree fits in u32");
        let cached = match &mut powers {
            Some((a, cached)) if *a == axis => cached,
            slot => &mut slot.insert((axis, vec![Polynomial::one()])).1,
        };
        while cached.len() <= k as usize {
            let next = &cached[cached.len() - 1] * small;
            cached.push(next);
        }
        let power = &cached[k as usize];
        let Some(c) = lf(large).ratio_to(&lf(power)) else {
            return Err(DecomposeError::NotAutomorphism(LeadingFormsNotProportional));
        };
        let reduced = large - &power.scale(&c);
        reducers.push(ElementaryMap::power(axis, -c, k).expect("k >= 2").into());
        match axis {
            Axis::Y => q = reduced,
            Axis::X => p = reduced,
        }
    };
    // m = g_1⁻¹ ∘ ⋯ ∘ g_k⁻¹ ∘ base
    let mut word = GeneratorWord::empty();
    word.push(base);
    for g in reducers.iter().rev() {
        word.push(g.inverse());
    }
    Ok(normalize_word_bounded(&word, limit)?)
}

/// `(x, y + c x)` for `Axis::Y`, `(x + c y, y)` for `Axis::X`.
fn linear_shear(axis: Axis, c: Rational) -> AffineMap {
    let (one, zero) = (Rational::from_integer(1.into()), Rational::zero());
    let m = match axis {
        Axis::Y => [[one.clone(), zero.clone()], [c, one]],
        Axis::X => [[one.clone(), c], [zero, one]],
    };
    AffineMap::linear(m).expect("unipotent")
}

pub fn length(m: &PolyMap) -> Result<usize, DecomposeError> {
    decompose(m).map(|nf| nf.length())
}

pub fn invert_map(m: &PolyMap) -> Result<PolyMap, DecomposeError> {
    invert_map_bounded(m, DEFAULT_MAX_DEGREE)
}

pub fn invert_map_bounded(m: &PolyMap, limit: u32) -> Result<PolyMap, DecomposeError> {
    let nf = decompose_bounded(m, limit)?;
    Ok(nf.to_word().inverse().evaluate_bounded(limit)?)
}

pub fn normalize_word(word: &GeneratorWord) -> Result<NormalForm, DegreeOverflow> {
    normalize_word_bounded(word, DEFAULT_MAX_DEGREE)
}

/// `(a x + b, c y + f(x))` with `a, c ≠ 0`.
#[derive(Clone, Debug)]
struct Triangular {
    a: Rational,
    b: Rational,
    c: Rational,
    f: Polynomial,
}

impl Triangular {
    fn from_lower(m: &AffineMap) -> Triangular {
        let (mat, t) = (m.matrix(), m.translation());
        debug_assert!(m.is_lower_triangular());
        Triangular {
            a: mat[0][0].clone(),
            b: t[0].clone(),
            c: mat[1][1].clone(),
            f: &Polynomial::monomial(mat[1][0].clone(), 1, 0) + &Polynomial::constant(t[1].clone()),
        }
    }

    fn shear(f: Polynomial) -> Triangular {
        let one = Rational::from_integer(1.into());
        Triangular {
            a: one.clone(),
            b: Rational::zero(),
            c: one,
            f,
        }
    }

    fn is_affine(&self) -> bool {
        self.f.total_deg() <= WDeg::Finite(1)
    }

    fn to_affine(&self) -> AffineMap {
        AffineMap::new(
            [
                [self.a.clone(), Rational::zero()],
                [self.f.coeff(1, 0), self.c.clone()],
            ],
            [self.b.clone(), self.f.coeff(0, 0)],
        )
        .expect("a and c are nonzero")
    }

    /// `self ∘ inner`.
    fn after(&self, inner: &Triangular, limit: u32) -> Result<Triangular, DegreeOverflow> {
        // x' = a1 x + b1, y' = c1 y + f1(x)
        let x_image =
            &Polynomial::monomial(inner.a.clone(), 1, 0) + &Polynomial::constant(inner.b.clone());
        let shifted = self
            .f
            .substitute_bounded((&x_image, &Polynomial::y()), limit)?;
        Ok(Triangular {
            a: &self.a * &inner.a,
            b: &self.a * &inner.b + &self.b,
            c: &self.c * &inner.c,
            f: &inner.f.scale(&self.c) + &shifted,
        })
    }
}

enum Piece {
    Affine(AffineMap),
    Triangular(Triangular),
}

pub fn normalize_word_bounded(
    word: &GeneratorWord,
    limit: u32,
) -> Result<NormalForm, DegreeOverflow> {
    // An X-shear is the swap-conjugate of a Y-shear.
    let mut pieces: Vec<Piece> = Vec::new();
    for factor in word.factors() {
        match factor {
            Factor::Affine(a) => pieces.push(Piece::Affine(a.clone())),
            Factor::Elementary(e) => match e.axis() {
                Axis::Y => pieces.push(Piece::Triangular(Triangular::shear(e.f().clone()))),
                Axis::X => {
                    pieces.push(Piece::Affine(AffineMap::swap()));
                    pieces.push(Piece::Triangular(Triangular::shear(e.f().swap_vars())));
                    pieces.push(Piece::Affine(AffineMap::swap()));
                }
            },
        }
    }
    let pieces = reduce(pieces, limit)?;

    let mut affines: Vec<AffineMap> = Vec::new();
    let mut tris: Vec<Triangular> = Vec::new();
    for piece in pieces {
        match piece {
            Piece::Affine(a) => affines.push(a),
            Piece::Triangular(t) => {
                if affines.len() == tris.len() {
                    affines.push(AffineMap::identity());
                }
                tris.push(t);
            }
        }
    }
    if affines.len() == tris.len() {
        affines.push(AffineMap::identity());
    }
    let l = tris.len();
    if l == 0 {
        return Ok(NormalForm {
            l1: affines.pop().expect("one affine piece"),
            triangulars: Vec::new(),
            l2: AffineMap::identity(),
        });
    }

    // Every interior affine piece is outside the triangular group, so it
    // factors as b1 ∘ swap ∘ b2 with b1, b2 lower triangular. Fold the b's
    // into the neighbouring triangular pieces.
    for i in 1..l {
        let (b1, b2) = bruhat_split(&affines[i]);
        tris[i - 1] = Triangular::from_lower(&b2).after(&tris[i - 1], limit)?;
        tris[i] = tris[i].after(&Triangular::from_lower(&b1), limit)?;
    }

    // Peel each triangular piece into (a x + b, c y) ∘ (x, y + f/c) and push
    // the diagonal part through the following swap.
    let mut shears: Vec<Polynomial> = Vec::with_capacity(l);
    for i in 0..l {
        let t = tris[i].clone();
        shears.push(t.f.scale(&(Rational::from_integer(1.into()) / &t.c)));
        let diagonal = AffineMap::new(
            [
                [t.a.clone(), Rational::zero()],
                [Rational::zero(), t.c.clone()],
            ],
            [t.b.clone(), Rational::zero()],
        )
        .expect("nonzero diagonal");
        if i + 1 < l {
            // swap ∘ (a x + b, c y) = (c x, a y + b) ∘ swap
            let carried = AffineMap::new(
                [
                    [t.c.clone(), Rational::zero()],
                    [Rational::zero(), t.a.clone()],
                ],
                [Rational::zero(), t.b.clone()],
            )
            .expect("nonzero diagonal");
            tris[i + 1] = tris[i + 1].after(&Triangular::from_lower(&carried), limit)?;
        } else {
            affines[l] = affines[l].after(&diagonal);
        }
    }

    // Now m = A_l ∘ S_l ∘ τ ∘ S_{l-1} ∘ ⋯ ∘ τ ∘ S_1 ∘ A_0 with S_i Y-shears
    // and τ the swap. Spread the swaps over the shears in one of the two
    // possible parities and keep whichever leaves fewer nontrivial ends.
    let swap = AffineMap::swap();
    let first = affines[0].clone();
    let last = affines[l].clone();
    let build = |starts_with_y: bool| {
        let offset = usize::from(!starts_with_y);
        let triangulars: Vec<ElementaryMap> = shears
            .iter()
            .enumerate()
            .map(|(i, f)| {
                if (i + offset) % 2 == 0 {
                    ElementaryMap::new(Axis::Y, f.clone())
                } else {
                    ElementaryMap::new(Axis::X, f.swap_vars())
                }
                .expect("reduced shear has degree at least 2")
            })
            .collect();
        let l1 = if starts_with_y {
            first.clone()
        } else {
            swap.after(&first)
        };
        let l2 = if (l - 1 + offset) % 2 == 1 {
            last.after(&swap)
        } else {
            last.clone()
        };
        NormalForm {
            l1,
            triangulars,
            l2,
        }
    };
    let y_first = build(true);
    let x_first = build(false);
    let nontrivial =
        |nf: &NormalForm| usize::from(!nf.l1.is_identity()) + usize::from(!nf.l2.is_identity());
    Ok(if nontrivial(&x_first) < nontrivial(&y_first) {
        x_first
    } else {
        y_first
    })
}

/// Merges pieces until the sequence alternates between affine pieces that
/// are not triangular and triangular pieces that are not affine (the ends
/// may be arbitrary affine pieces).
fn reduce(mut pieces: Vec<Piece>, limit: u32) -> Result<Vec<Piece>, DegreeOverflow> {
    loop {
        let mut changed = false;
        for piece in pieces.iter_mut() {
            if let Piece::Triangular(t) = piece {
                if t.is_affine() {
                    *piece = Piece::Affine(t.to_affine());
                    changed = true;
                }
            }
        }

        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match (merged.last_mut(), piece) {
                (Some(Piece::Affine(prev)), Piece::Affine(a)) => {
                    *prev = a.after(prev);
                    changed = true;
                }
                (Some(Piece::Triangular(prev)), Piece::Triangular(t)) => {
                    *prev = t.after(prev, limit)?;
                    changed = true;
                }
                (_, piece) => merged.push(piece),
            }
        }
        pieces = merged;

        // A lower-triangular affine piece between two triangular pieces is
        // absorbed into the left one; the next pass merges it rightwards.
        let mut absorbed: Vec<Piece> = Vec::with_capacity(pieces.len());
        let mut rest = pieces.into_iter().peekable();
        while let Some(piece) = rest.next() {
            let right_is_tri = matches!(rest.peek(), Some(Piece::Triangular(_)));
            match (absorbed.last_mut(), piece) {
                (Some(Piece::Triangular(prev)), Piece::Affine(a))
                    if right_is_tri && a.is_lower_triangular() =>
                {
                    *prev = Triangular::from_lower(&a).after(prev, limit)?;
                    changed = true;
                }
                (_, piece) => absorbed.push(piece),
            }
        }
        pieces = absorbed;

        if !changed {
            return Ok(pieces);
        }
    }
}

/// Splits an affine map with `m01 ≠ 0` as `b1 ∘ swap ∘ b2` with `b1`, `b2`
/// lower triangular; the translation goes to `b1`.
fn bruhat_split(a: &AffineMap) -> (AffineMap, AffineMap) {
    let m = a.matrix();
    let (p, q, s) = (&m[0][0], &m[0][1], &m[1][1]);
    debug_assert!(!q.is_zero());
    let det = a.det();
    let b1 = AffineMap::new(
        [[q.clone(), Rational::zero()], [s.clone(), -(&det / q)]],
        a.translation().clone(),
    )
    .expect("q and det are nonzero");
    let one = Rational::from_integer(1.into());
    let b2 = AffineMap::linear([[one.clone(), Rational::zero()], [p / q, one]]).expect("unipotent");
    debug_assert!(b1.after(&AffineMap::swap()).after(&b2) == *a);
    (b1, b2)
}
