//! Exact computations with polynomial automorphisms of the complex plane
//! restricted to rational coefficients: weighted degrees, the
//! affine/triangular normal form and its length, the set of achievable
//! weighted bidegrees, and explicit automorphisms realizing each of them.
//!
//! The crate is `no_std` (it only needs `alloc`); IO, JSON and the command
//! line live in the companion `wbideg` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod automorphism;
pub mod decomposition;
pub mod grading;
pub mod harness;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod realizer;
pub mod wbidegree;

pub use automorphism::{
    AffineMap, Axis, Bidegree, ElementaryMap, Factor, FactorError, GeneratorWord, PolyMap,
};
pub use decomposition::{
    decompose, decompose_bounded, invert_map, invert_map_bounded, length, normalize_word,
    normalize_word_bounded, DecomposeError, NormalForm, NotAutomorphismReason,
};
pub use grading::{WDeg, Weight, WeightError};
pub use harness::{
    check_roundtrip, enumerate_words, roundtrip_normal_forms, roundtrip_suite, verify_theorem_main,
    Check, FailureRecord, GeneratorPool, NormalFormSampler, VerificationReport, WordStream,
};
pub use parse::{format_poly, parse_poly, ParseError, ParseErrorKind};
pub use poly::{DegreeOverflow, Exponent, Grading, PolyError, Polynomial, DEFAULT_MAX_DEGREE};
pub use rational::Rational;
pub use realizer::{realize, NotRealizable};
pub use wbidegree::{
    enumerate_z, in_ge2_set, in_le1_set, member, propagate_wmdeg, Branch, Condition,
    InvalidBidegree, MembershipWitness, Verdict,
};
