//! Browser bindings. Every export takes and returns strings: TRN text in,
//! TRN or JSON text out. The plain functions in [`ops`] do the work so they
//! can be tested natively.

use wasm_bindgen::prelude::*;

pub mod ops {
    use serde_json::json;
    use tournament_core::census::Predicate;
    use tournament_core::classifier::classifier;
    use tournament_core::construct::{double, reduced_double};
    use tournament_core::format::{classifier_to_json, parse_trn, to_json, to_trn};
    use tournament_core::profinite::{catalog, parse_tower, TOWER_CAP};
    use tournament_core::Tournament;

    /// Largest tournament the page will draw.
    pub const DEMO_CAP: usize = 200;

    fn read(trn: &str) -> Result<Tournament, String> {
        parse_trn(trn).map_err(|e| e.to_string())
    }

    fn checked(t: Tournament) -> Result<String, String> {
        if t.order() > DEMO_CAP {
            return Err(format!("{} vertices is more than the demo draws ({DEMO_CAP})", t.order()));
        }
        Ok(to_trn(&t))
    }

    /// A catalog name (`C3`, `Y2`, `Z7[1,2,4]`, …) or a tower description.
    pub fn generate(text: &str) -> Result<String, String> {
        let t = if text.contains('=') {
            parse_tower(text)
                .and_then(|s| s.build(None, TOWER_CAP))
                .map_err(|e| e.to_string())?
                .top()
                .clone()
        } else {
            catalog(text).map_err(|e| e.to_string())?
        };
        checked(t)
    }

    /// `double` or `rdouble` applied to a TRN tournament.
    pub fn transform(trn: &str, op: &str) -> Result<String, String> {
        let t = read(trn)?;
        match op {
            "double" => checked(double(&t)),
            "rdouble" => checked(reduced_double(&t)),
            _ => Err(format!("unknown operation {op:?}")),
        }
    }

    /// Predicate values, score sequence and the arc list as JSON.
    pub fn analyze(trn: &str) -> Result<String, String> {
        let t = read(trn)?;
        let mut props = serde_json::Map::new();
        for p in Predicate::ALL {
            props.insert(p.name().into(), json!(p.eval(&t)));
        }
        let graph = to_json(&t);
        Ok(json!({
            "n": t.order(),
            "arcs": graph["arcs"],
            "scores": t.scores(),
            "components": t.strong_components().iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            "props": props,
        })
        .to_string())
    }

    pub fn classify(trn: &str) -> Result<String, String> {
        let t = read(trn)?;
        Ok(classifier_to_json(&classifier(&t)).to_string())
    }
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn generate(text: &str) -> Result<String, JsValue> {
    js(ops::generate(text))
}

#[wasm_bindgen]
pub fn transform(trn: &str, op: &str) -> Result<String, JsValue> {
    js(ops::transform(trn, op))
}

#[wasm_bindgen]
pub fn analyze(trn: &str) -> Result<String, JsValue> {
    js(ops::analyze(trn))
}

#[wasm_bindgen]
pub fn classify(trn: &str) -> Result<String, JsValue> {
    js(ops::classify(trn))
}
