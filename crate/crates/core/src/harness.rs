//! Brute-force checks of the characterization of `Z(w)`, its length
//! strata, and the normal-form machinery, over words drawn from a finite
//! pool of generators.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automorphism::{
    AffineMap, Axis, Bidegree, ElementaryMap, Factor, GeneratorWord, PolyMap,
};
use crate::decomposition::{decompose, invert_map, normalize_word, NormalForm};
use crate::grading::Weight;
use crate::poly::{Exponent, Polynomial};
use crate::rational::{self, Rational};
use crate::realizer::realize;
use crate::wbidegree::{enumerate_z, in_ge2_set, in_le1_set, member, propagate_wmdeg};

/// Label recorded in reports for the sampling generator.
pub const RNG_NAME: &str = "ChaCha8Rng::seed_from_u64";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPool {
    pub affines: Vec<AffineMap>,
    pub shear_axes: Vec<Axis>,
    pub shear_exponents: Vec<u32>,
    pub shear_coefficients: Vec<Rational>,
    pub max_word_length: usize,
    pub max_total_degree: u32,
}

impl GeneratorPool {
    /// Identity, swap, `(x+y, y)`, `(x, y+x)` and `(2x, y)`; shears
    /// `±v^2`, `±v^3` on both axes; words up to length 3 and degree 64.
    pub fn desk() -> Self {
        let affine = |m, t| AffineMap::from_ints(m, t).expect("nonsingular");
        GeneratorPool {
            affines: vec![
                AffineMap::identity(),
                AffineMap::swap(),
                affine([[1, 1], [0, 1]], [0, 0]),
                affine([[1, 0], [1, 1]], [0, 0]),
                affine([[2, 0], [0, 1]], [0, 0]),
            ],
            shear_axes: vec![Axis::Y, Axis::X],
            shear_exponents: vec![2, 3],
            shear_coefficients: vec![rational::int(1), rational::int(-1)],
            max_word_length: 3,
            max_total_degree: 64,
        }
    }

    /// Every generator: the affines first, then shears by axis, exponent
    /// and coefficient.
    pub fn alphabet(&self) -> Vec<Factor> {
        let mut out: Vec<Factor> = self.affines.iter().cloned().map(Factor::from).collect();
        for &axis in &self.shear_axes {
            for &k in &self.shear_exponents {
                for c in &self.shear_coefficients {
                    if let Ok(e) = ElementaryMap::power(axis, c.clone(), k) {
                        out.push(e.into());
                    }
                }
            }
        }
        out
    }

    fn evaluate(&self, word: &GeneratorWord) -> Option<PolyMap> {
        word.evaluate_bounded(self.max_total_degree).ok()
    }
}

/// All words over a pool's alphabet, shortest first, skipping those whose
/// evaluation exceeds the pool's degree cap.
#[derive(Debug)]
pub struct WordStream {
    pool: GeneratorPool,
    alphabet: Vec<Factor>,
    indices: Vec<usize>,
    done: bool,
    skipped: usize,
}

impl WordStream {
    /// Words dropped so far for exceeding the degree cap.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    fn advance(&mut self) {
        for i in (0..self.indices.len()).rev() {
            self.indices[i] += 1;
            if self.indices[i] < self.alphabet.len() {
                return;
            }
            self.indices[i] = 0;
        }
        let len = self.indices.len() + 1;
        if len > self.pool.max_word_length || self.alphabet.is_empty() {
            self.done = true;
        }
        self.indices = vec![0; len];
    }
}

impl Iterator for WordStream {
    type Item = (GeneratorWord, PolyMap);

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let word: GeneratorWord = self
                .indices
                .iter()
                .map(|&i| self.alphabet[i].clone())
                .collect();
            self.advance();
            match self.pool.evaluate(&word) {
                Some(map) => return Some((word, map)),
                None => self.skipped += 1,
            }
        }
        None
    }
}

pub fn enumerate_words(pool: &GeneratorPool) -> WordStream {
    WordStream {
        alphabet: pool.alphabet(),
        pool: pool.clone(),
        indices: Vec::new(),
        done: false,
        skipped: 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// An achieved bidegree outside `Z(w)`.
    Soundness,
    /// Length ≤ 1 or ≥ 2 map outside its stratum.
    Stratification,
    /// Length ≥ 2 map with `d1 + d2 ≤ w1 + w2`.
    NormBound,
    /// A member the realizer failed to hit.
    Completeness,
    NormalFormInvariant,
    Decomposition,
    Recomposition,
    LengthMismatch,
    Inversion,
    Propagation,
}

impl Check {
    pub fn as_str(self) -> &'static str {
        match self {
            Check::Soundness => "soundness",
            Check::Stratification => "stratification",
            Check::NormBound => "norm-bound",
            Check::Completeness => "completeness",
            Check::NormalFormInvariant => "normal-form-invariant",
            Check::Decomposition => "decomposition",
            Check::Recomposition => "recomposition",
            Check::LengthMismatch => "length-mismatch",
            Check::Inversion => "inversion",
            Check::Propagation => "propagation",
        }
    }
}

/// A failed check, with the word that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailureRecord {
    pub check: Check,
    pub word: GeneratorWord,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub weight: Option<Weight>,
    pub bound: Option<u64>,
    pub seed: Option<u64>,
    pub rng: Option<&'static str>,
    pub achieved: BTreeSet<Bidegree>,
    pub predicted: BTreeSet<Bidegree>,
    pub missing: BTreeSet<Bidegree>,
    pub extraneous: BTreeSet<Bidegree>,
    pub words_checked: usize,
    pub words_skipped: usize,
    pub failures: Vec<FailureRecord>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.extraneous.is_empty() && self.failures.is_empty()
    }

    fn fail(&mut self, check: Check, word: &GeneratorWord, detail: String) {
        self.failures.push(FailureRecord {
            check,
            word: word.clone(),
            detail,
        });
    }
}

/// Compares the bidegrees reached by every pool word against `Z(w)`, checks
/// each word's length stratum, and realizes every member up to `bound`.
pub fn verify_theorem_main(w: Weight, pool: &GeneratorPool, bound: u64) -> VerificationReport {
    let mut report = VerificationReport {
        weight: Some(w),
        bound: Some(bound),
        ..VerificationReport::default()
    };
    let mut words = enumerate_words(pool);
    for (word, map) in words.by_ref() {
        report.words_checked += 1;
        check_word(&mut report, w, &word, &map, bound);
    }
    report.words_skipped = words.skipped();

    report.predicted = enumerate_z(w, bound);
    report.extraneous = report
        .achieved
        .difference(&report.predicted)
        .copied()
        .collect();
    for d in report.predicted.clone() {
        match realize(w, d) {
            Ok(word) => {
                let got = pool_free_wmdeg(&word, w);
                if got != Some(d) {
                    report.missing.insert(d);
                    let detail = match got {
                        Some(got) => format!("realized {d} evaluates to {got}"),
                        None => format!("realized {d} overflows"),
                    };
                    report.fail(Check::Completeness, &word, detail);
                }
            }
            Err(_) => {
                report.missing.insert(d);
                report.fail(
                    Check::Completeness,
                    &GeneratorWord::empty(),
                    format!("{d} was not realized"),
                );
            }
        }
    }
    report
}

fn pool_free_wmdeg(word: &GeneratorWord, w: Weight) -> Option<Bidegree> {
    word.evaluate().ok().map(|m| m.wmdeg(w))
}

fn check_word(
    report: &mut VerificationReport,
    w: Weight,
    word: &GeneratorWord,
    map: &PolyMap,
    bound: u64,
) {
    let d = map.wmdeg(w);
    match member(w, d) {
        Ok(wit) if wit.is_member() => {}
        _ => report.fail(Check::Soundness, word, format!("{d} is not in Z{w}")),
    }
    if let Some((d1, d2)) = d.positive() {
        if d1 <= bound && d2 <= bound {
            report.achieved.insert(d);
        }
    }
    let length = match normalize_word(word) {
        Ok(nf) => nf.length(),
        Err(e) => {
            report.fail(Check::NormalFormInvariant, word, format!("{e}"));
            return;
        }
    };
    let in_stratum = if length <= 1 {
        in_le1_set(w, d)
    } else {
        in_ge2_set(w, d)
    };
    if in_stratum != Ok(true) {
        report.fail(
            Check::Stratification,
            word,
            format!("length {length} map has weighted bidegree {d}"),
        );
    }
    if length >= 2 {
        let total = d.positive().map(|(a, b)| a + b);
        if !total.is_some_and(|t| t > w.w1() + w.w2()) {
            report.fail(
                Check::NormBound,
                word,
                format!("length {length} map has weighted bidegree {d}"),
            );
        }
    }
}

/// Weights every round-trip sample is checked under.
pub fn roundtrip_weights() -> [Weight; 3] {
    let w = |a, b| Weight::new(a, b).expect("positive");
    [w(1, 1), w(2, 3), w(3, 5)]
}

/// Draws a random word over the pool: a uniform length up to the pool's
/// maximum, then uniform factors. Words over the degree cap are redrawn.
pub fn sample_word(
    pool: &GeneratorPool,
    rng: &mut ChaCha8Rng,
    redraws: &mut usize,
) -> Option<(GeneratorWord, PolyMap)> {
    let alphabet = pool.alphabet();
    for _ in 0..1000 {
        let len = if alphabet.is_empty() {
            0
        } else {
            rng.gen_range(0..=pool.max_word_length)
        };
        let word: GeneratorWord = (0..len)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone())
            .collect();
        if let Some(map) = pool.evaluate(&word) {
            return Some((word, map));
        }
        *redraws += 1;
    }
    None
}

/// Shape of randomly drawn normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalFormSampler {
    pub max_length: usize,
    pub max_shear_degree: u32,
}

impl NormalFormSampler {
    /// Draws `L1`, then `l ≤ max_length` shears alternating between the
    /// axes with degrees in `2..=max_shear_degree`, then `L2`. Coefficients
    /// are small integers and the affine parts are unimodular.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> NormalForm {
        let l = rng.gen_range(0..=self.max_length);
        let mut axis = if rng.gen() { Axis::X } else { Axis::Y };
        let mut triangulars = Vec::with_capacity(l);
        for _ in 0..l {
            triangulars.push(self.shear(rng, axis));
            axis = axis.other();
        }
        NormalForm::new(random_affine(rng), triangulars, random_affine(rng))
            .expect("alternating shears of degree at least 2")
    }

    fn shear(&self, rng: &mut ChaCha8Rng, axis: Axis) -> ElementaryMap {
        let k = rng.gen_range(2..=self.max_shear_degree.max(2));
        let lead = [-2, -1, 1, 2][rng.gen_range(0..4)];
        let mut terms = vec![(lead, k)];
        for j in 0..k {
            terms.push((rng.gen_range(-1..=1), j));
        }
        let f = Polynomial::from_terms(terms.into_iter().map(|(c, j)| {
            let e = match axis {
                Axis::X => Exponent::new(0, j),
                Axis::Y => Exponent::new(j, 0),
            };
            (e, rational::int(c))
        }));
        ElementaryMap::new(axis, f).expect("degree at least 2")
    }
}

/// An integer affine map with determinant ±1, so inverses stay integral.
fn random_affine(rng: &mut ChaCha8Rng) -> AffineMap {
    loop {
        let mut entry = || rng.gen_range(-2i64..=2);
        let m = [[entry(), entry()], [entry(), entry()]];
        let t = [entry(), entry()];
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1 {
            return AffineMap::from_ints(m, t).expect("unimodular");
        }
    }
}

/// Runs the round-trip checks on `samples` seeded random normal forms.
pub fn roundtrip_normal_forms(
    sampler: NormalFormSampler,
    samples: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport {
        seed: Some(seed),
        rng: Some(RNG_NAME),
        ..VerificationReport::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let word = sampler.sample(&mut rng).to_word();
        report.words_checked += 1;
        match word.evaluate() {
            Ok(map) => check_roundtrip(&mut report, &word, &map),
            Err(e) => report.fail(Check::Recomposition, &word, format!("{e}")),
        }
    }
    report
}

/// Decomposes `samples` seeded random words and checks recomposition,
/// length agreement with the symbolic normalization, inversion, and
/// degree propagation.
pub fn roundtrip_suite(pool: &GeneratorPool, samples: usize, seed: u64) -> VerificationReport {
    let mut report = VerificationReport {
        seed: Some(seed),
        rng: Some(RNG_NAME),
        ..VerificationReport::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut redraws = 0;
    for _ in 0..samples {
        let Some((word, map)) = sample_word(pool, &mut rng, &mut redraws) else {
            break;
        };
        report.words_checked += 1;
        check_roundtrip(&mut report, &word, &map);
    }
    report.words_skipped = redraws;
    report
}

/// Runs the round-trip checks on one word and its evaluation.
pub fn check_roundtrip(report: &mut VerificationReport, word: &GeneratorWord, map: &PolyMap) {
    let normalized = match normalize_word(word) {
        Ok(nf) => nf,
        Err(e) => return report.fail(Check::NormalFormInvariant, word, format!("{e}")),
    };
    let nf = match decompose(map) {
        Ok(nf) => nf,
        Err(e) => return report.fail(Check::Decomposition, word, format!("{e}")),
    };
    for candidate in [&normalized, &nf] {
        let valid = NormalForm::new(
            candidate.l1().clone(),
            candidate.triangulars().to_vec(),
            candidate.l2().clone(),
        )
        .is_some();
        if !valid {
            report.fail(
                Check::NormalFormInvariant,
                word,
                String::from("bad normal form"),
            );
        }
        if candidate.evaluate().as_ref() != Ok(map) {
            report.fail(
                Check::Recomposition,
                word,
                String::from("normal form does not evaluate to the map"),
            );
        }
    }
    if nf.length() != normalized.length() {
        report.fail(
            Check::LengthMismatch,
            word,
            format!(
                "decomposed length {} but normalized length {}",
                nf.length(),
                normalized.length()
            ),
        );
    }
    match invert_map(map) {
        Ok(inv) => {
            // inv ∘ map is checked symbolically: expanding the composition
            // squares the degree.
            let (cancels, twice) = match decompose(&inv) {
                Ok(inv_nf) => {
                    let composite = nf.to_word().then(&inv_nf.to_word());
                    let cancels = normalize_word(&composite).is_ok_and(|c| {
                        c.length() == 0 && c.l1().is_identity() && c.l2().is_identity()
                    });
                    (cancels, inv_nf.to_word().inverse().evaluate().ok())
                }
                Err(_) => (false, None),
            };
            if !cancels || twice.as_ref() != Some(map) {
                report.fail(
                    Check::Inversion,
                    word,
                    String::from("inverse does not round-trip"),
                );
            }
        }
        Err(e) => report.fail(Check::Inversion, word, format!("{e}")),
    }
    for w in roundtrip_weights() {
        let expected = map.wmdeg(w);
        for candidate in [&normalized, &nf] {
            let got = propagate_wmdeg(candidate, w);
            if got != expected {
                report.fail(
                    Check::Propagation,
                    word,
                    format!("under {w} propagated {got} but expanded {expected}"),
                );
            }
        }
    }
}
