use wbideg::json::{self, FactorJson, NormalFormJson};
use wbideg_core::harness::GeneratorPool;
use wbideg_core::{decompose, enumerate_words, parse_poly, realize, Bidegree, PolyMap, Weight};

#[test]
fn pool_words_survive_a_json_round_trip() {
    for (word, _) in enumerate_words(&GeneratorPool::desk()).take(400) {
        let text = serde_json::to_string(&json::word(&word)).unwrap();
        let back: Vec<FactorJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(json::decode_word(&back).unwrap(), word);
    }
}

#[test]
fn realized_words_survive_a_json_round_trip() {
    let w = Weight::new(3, 5).unwrap();
    for d in [
        Bidegree::new(3, 5),
        Bidegree::new(15, 5),
        Bidegree::new(12, 24),
    ] {
        let word = realize(w, d).unwrap();
        let back = json::decode_word(&json::word(&word)).unwrap();
        assert_eq!(back.evaluate().unwrap().wmdeg(w), d);
    }
}

#[test]
fn normal_form_shape() {
    let m = PolyMap::new(parse_poly("x + y^3").unwrap(), parse_poly("y").unwrap());
    let nf = decompose(&m).unwrap();
    let v = serde_json::to_value(json::normal_form(&nf)).unwrap();
    assert_eq!(v["length"], 1);
    assert_eq!(v["triangulars"][0]["type"], "elementary");
    assert_eq!(v["l1"]["type"], "affine");
    let back: NormalFormJson = serde_json::from_value(v).unwrap();
    assert_eq!(back, json::normal_form(&nf));
}

#[test]
fn word_encoding_is_in_application_order() {
    let text = r#"[
        {"type": "elementary", "axis": "y", "f": "x^2"},
        {"type": "affine", "matrix": [["0", "1"], ["1", "0"]], "translation": ["0", "0"]}
    ]"#;
    let factors: Vec<FactorJson> = serde_json::from_str(text).unwrap();
    let m = json::decode_word(&factors).unwrap().evaluate().unwrap();
    // Shear first, then swap.
    assert_eq!(m.f1, parse_poly("y + x^2").unwrap());
    assert_eq!(m.f2, parse_poly("x").unwrap());
}

#[test]
fn rendering_is_stable() {
    let v = serde_json::json!({"b": [1, 2], "a": null});
    assert_eq!(json::render(&v), json::render(&v));
    assert!(json::render(&v).ends_with("}\n"));
}
