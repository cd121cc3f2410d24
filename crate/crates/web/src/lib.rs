//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each operation is a plain function returning `Result<String, String>`
//! so it can be tested natively; the `#[wasm_bindgen]` wrappers only
//! convert errors into JS exceptions.

use homalg::actions::{act as plain_act, DeformedAction, Sl2Suite};
use homalg::finalg::{builtin_scenario, Scenario};
use homalg::polyalg::parse_poly;
use homalg::scalars::parse_rational;
use homalg::uea_sl2::parse_uelem;
use homalg::{CheckReport, QLaurent, Rational};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest bounds the page offers; the sweep runs on the UI thread.
pub const MAX_BOUND_H: u32 = 3;
pub const MAX_BOUND_A: u32 = 4;

fn parse_q(q: &str) -> Result<Option<Rational>, String> {
    let q = q.trim();
    if q.is_empty() {
        return Ok(None);
    }
    let q0 = parse_rational(q).map_err(|e| format!("q: {e}"))?;
    if q0 == Rational::from_integer(0.into()) {
        return Err("q must be nonzero".into());
    }
    Ok(Some(q0))
}

/// `z ▹ p`, or `α_A(z ▹ p)` when `deformed`; `q` is blank or a nonzero rational.
pub fn act(z: &str, p: &str, deformed: bool, q: &str) -> Result<String, String> {
    let z = parse_uelem(z).map_err(|e| format!("element of U(sl2): {e}"))?;
    let p = parse_poly(p).map_err(|e| format!("polynomial: {e}"))?;
    let result = if deformed {
        DeformedAction::q_example().deformed_act(&z, &p)
    } else {
        plain_act(&z, &p)
    };
    Ok(match parse_q(q)? {
        None => result.to_string(),
        Some(q0) => result
            .map_coeffs(|c| QLaurent::from_rational(c.specialize(&q0).expect("q is nonzero")))
            .to_string(),
    })
}

fn document(scenario: serde_json::Value, reports: Vec<CheckReport>) -> String {
    let passed = reports.iter().all(CheckReport::passed);
    let doc = json!({ "scenario": scenario, "passed": passed, "reports": reports });
    serde_json::to_string(&doc).expect("reports serialize")
}

/// Runs the q-twisted sl2 suite and returns the JSON report document.
pub fn verify_sl2(bound_h: u32, bound_a: u32, negative_control: bool) -> Result<String, String> {
    if !(1..=MAX_BOUND_H).contains(&bound_h) || !(1..=MAX_BOUND_A).contains(&bound_a) {
        return Err(format!("bounds must lie in 1..={MAX_BOUND_H} and 1..={MAX_BOUND_A}"));
    }
    let suite = Sl2Suite {
        bound_h,
        bound_a,
        deformation: DeformedAction::q_example(),
        negative_control,
    };
    let reports = suite.run().map_err(|e| e.to_string())?;
    let scenario = json!({
        "kind": "sl2-q",
        "bound_h": bound_h,
        "bound_a": bound_a,
        "negative_control": negative_control,
    });
    Ok(document(scenario, reports))
}

/// Parses and verifies a finite scenario given as text.
pub fn verify_finalg(text: &str) -> Result<String, String> {
    let s = Scenario::parse(text).map_err(|e| e.to_string())?;
    let reports = s.build().and_then(|d| d.run()).map_err(|e| e.to_string())?;
    let scenario = json!({
        "kind": "finalg",
        "dimension": s.algebra.dimension(),
        "group": s.group,
        "alpha": s.alpha.to_string(),
    });
    Ok(document(scenario, reports))
}

/// Text of the builtin 2×2 matrix scenario, used to prefill the editor.
pub fn example_scenario() -> String {
    builtin_scenario("m2-example").expect("builtin exists").to_string()
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = act)]
pub fn act_js(z: &str, p: &str, deformed: bool, q: &str) -> Result<String, JsError> {
    js(act(z, p, deformed, q))
}

#[wasm_bindgen(js_name = verifySl2)]
pub fn verify_sl2_js(bound_h: u32, bound_a: u32, negative_control: bool) -> Result<String, JsError> {
    js(verify_sl2(bound_h, bound_a, negative_control))
}

#[wasm_bindgen(js_name = verifyFinalg)]
pub fn verify_finalg_js(text: &str) -> Result<String, JsError> {
    js(verify_finalg(text))
}

#[wasm_bindgen(js_name = exampleScenario)]
pub fn example_scenario_js() -> String {
    example_scenario()
}
