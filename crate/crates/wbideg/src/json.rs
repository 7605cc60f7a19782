//! JSON encodings of words, normal forms, membership witnesses and
//! verification reports.
//!
//! Words are arrays in application order: the first factor is applied
//! first. Rationals are strings such as `"3"` or `"-1/2"`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use wbideg_core::rational::{self, Rational};
use wbideg_core::{
    parse_poly, AffineMap, Axis, Bidegree, Branch, ElementaryMap, Factor, GeneratorWord,
    MembershipWitness, NormalForm, Verdict, VerificationReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FactorJson {
    Affine {
        matrix: [[String; 2]; 2],
        translation: [String; 2],
    },
    Elementary {
        axis: AxisJson,
        f: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisJson {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormJson {
    pub l1: FactorJson,
    pub triangulars: Vec<FactorJson>,
    pub l2: FactorJson,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub verdict: &'static str,
    pub branch: Option<&'static str>,
    pub failed: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureJson {
    pub check: &'static str,
    pub word: Vec<FactorJson>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub pass: bool,
    pub weight: Option<[u64; 2]>,
    pub bound: Option<u64>,
    pub seed: Option<u64>,
    pub rng: Option<&'static str>,
    pub words_checked: usize,
    pub words_skipped: usize,
    pub achieved: Vec<[Option<u64>; 2]>,
    pub predicted: Vec<[Option<u64>; 2]>,
    pub missing: Vec<[Option<u64>; 2]>,
    pub extraneous: Vec<[Option<u64>; 2]>,
    pub failures: Vec<FailureJson>,
}

/// Why a JSON factor could not be turned back into a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeError(pub String);

impl fmt::Display for DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DecodeError {}

fn text(r: &Rational) -> String {
    rational::to_text(r)
}

fn number(s: &str) -> Result<Rational, DecodeError> {
    rational::from_text(s).ok_or_else(|| DecodeError(format!("invalid rational {s:?}")))
}

pub fn affine(a: &AffineMap) -> FactorJson {
    let (m, t) = (a.matrix(), a.translation());
    FactorJson::Affine {
        matrix: [
            [text(&m[0][0]), text(&m[0][1])],
            [text(&m[1][0]), text(&m[1][1])],
        ],
        translation: [text(&t[0]), text(&t[1])],
    }
}

pub fn elementary(e: &ElementaryMap) -> FactorJson {
    FactorJson::Elementary {
        axis: match e.axis() {
            Axis::X => AxisJson::X,
            Axis::Y => AxisJson::Y,
        },
        f: e.f().to_string(),
    }
}

pub fn factor(f: &Factor) -> FactorJson {
    match f {
        Factor::Affine(a) => affine(a),
        Factor::Elementary(e) => elementary(e),
    }
}

pub fn word(w: &GeneratorWord) -> Vec<FactorJson> {
    w.factors().iter().map(factor).collect()
}

pub fn decode_factor(f: &FactorJson) -> Result<Factor, DecodeError> {
    match f {
        FactorJson::Affine {
            matrix,
            translation,
        } => {
            let m = [
                [number(&matrix[0][0])?, number(&matrix[0][1])?],
                [number(&matrix[1][0])?, number(&matrix[1][1])?],
            ];
            let t = [number(&translation[0])?, number(&translation[1])?];
            AffineMap::new(m, t)
                .map(Factor::from)
                .map_err(|e| DecodeError(e.to_string()))
        }
        FactorJson::Elementary { axis, f } => {
            let axis = match axis {
                AxisJson::X => Axis::X,
                AxisJson::Y => Axis::Y,
            };
            let f = parse_poly(f).map_err(|e| DecodeError(e.to_string()))?;
            ElementaryMap::new(axis, f)
                .map(Factor::from)
                .map_err(|e| DecodeError(e.to_string()))
        }
    }
}

pub fn decode_word(factors: &[FactorJson]) -> Result<GeneratorWord, DecodeError> {
    factors.iter().map(decode_factor).collect()
}

pub fn normal_form(nf: &NormalForm) -> NormalFormJson {
    NormalFormJson {
        l1: affine(nf.l1()),
        triangulars: nf.triangulars().iter().map(elementary).collect(),
        l2: affine(nf.l2()),
        length: nf.length(),
    }
}

pub fn witness(w: &MembershipWitness) -> WitnessJson {
    WitnessJson {
        verdict: match w.verdict {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
        },
        branch: w.branch.map(branch),
        failed: w.failed.iter().map(|c| c.as_str()).collect(),
    }
}

pub fn branch(b: Branch) -> &'static str {
    match b {
        Branch::Exceptional => "exceptional",
        Branch::W1 => "w1",
        Branch::W2 => "w2",
    }
}

/// `[d1, d2]`, with `null` for a zero polynomial's `-inf`.
pub fn bidegree(d: Bidegree) -> [Option<u64>; 2] {
    [d.d1.finite(), d.d2.finite()]
}

fn bidegrees(set: &BTreeSet<Bidegree>) -> Vec<[Option<u64>; 2]> {
    set.iter().copied().map(bidegree).collect()
}

pub fn report(r: &VerificationReport) -> ReportJson {
    ReportJson {
        pass: r.pass(),
        weight: r.weight.map(|w| [w.w1(), w.w2()]),
        bound: r.bound,
        seed: r.seed,
        rng: r.rng,
        words_checked: r.words_checked,
        words_skipped: r.words_skipped,
        achieved: bidegrees(&r.achieved),
        predicted: bidegrees(&r.predicted),
        missing: bidegrees(&r.missing),
        extraneous: bidegrees(&r.extraneous),
        failures: r
            .failures
            .iter()
            .map(|f| FailureJson {
                check: f.check.as_str(),
                word: word(&f.word),
                detail: f.detail.clone(),
            })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use wbideg_core::rational::{frac, int};
    use wbideg_core::WDeg;

    #[test]
    fn affine_encoding() {
        let a =
            AffineMap::new([[int(1), frac(-1, 2)], [int(0), int(3)]], [int(0), int(7)]).unwrap();
        let v = serde_json::to_value(affine(&a)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "type": "affine",
                "matrix": [["1", "-1/2"], ["0", "3"]],
                "translation": ["0", "7"]
            })
        );
    }

    #[test]
    fn elementary_encoding() {
        let e = ElementaryMap::new(Axis::Y, parse_poly("x^4").unwrap()).unwrap();
        let v = serde_json::to_value(elementary(&e)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"type": "elementary", "axis": "y", "f": "x^4"})
        );
    }

    #[test]
    fn witness_encoding() {
        let w = MembershipWitness {
            verdict: Verdict::NonMember,
            branch: None,
            failed: vec![wbideg_core::Condition::Divisibility],
        };
        assert_eq!(
            serde_json::to_string(&witness(&w)).unwrap(),
            r#"{"verdict":"non-member","branch":null,"failed":["divisibility"]}"#
        );
    }

    #[test]
    fn minus_infinity_is_null() {
        let d = Bidegree {
            d1: WDeg::MinusInfinity,
            d2: WDeg::Finite(3),
        };
        assert_eq!(bidegree(d), [None, Some(3)]);
    }

    #[test]
    fn decode_rejects_bad_factors() {
        let singular = FactorJson::Affine {
            matrix: [["1".into(), "1".into()], ["2".into(), "2".into()]],
            translation: ["0".into(), "0".into()],
        };
        assert!(decode_factor(&singular).is_err());
        let constant = FactorJson::Elementary {
            axis: AxisJson::X,
            f: "5".into(),
        };
        assert!(decode_factor(&constant).is_err());
        let bad = FactorJson::Affine {
            matrix: [["1".into(), "0".into()], ["0".into(), "1/0".into()]],
            translation: ["0".into(), "0".into()],
        };
        assert!(decode_factor(&bad).is_err());
    }
}
