//! Browser bindings: build a highest weight vector, expand a hook Schur
//! polynomial, and check a character decomposition. Every function returns
//! a JSON string.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use superhowe::algebra::format_poly;
use superhowe::hwv::{Budget, S2Model, TensorModel};
use superhowe::operators::{is_highest, WeightVector};
use superhowe::verify::{
    verify_lambda_s2_decomposition, verify_s2_decomposition, verify_skew_duality, verify_tensor_duality,
};
use superhowe::{Error, Partition, VerificationReport};

/// Anything bigger is refused so the page stays responsive.
const TERM_LIMIT: usize = 20_000;
const MAX_DIM: usize = 4;
const MAX_SIZE: usize = 8;

#[derive(Serialize)]
struct VectorOut {
    vector: String,
    terms: usize,
    weight: WeightVector,
    expected_weight: WeightVector,
    highest: bool,
}

#[derive(Serialize)]
struct SchurOut {
    polynomial: String,
    terms: usize,
}

fn parse_lambda(s: &str) -> Result<Partition, Error> {
    let l: Partition = s.parse()?;
    if l.size() > MAX_SIZE {
        return Err(Error::Invalid(format!("|lambda| is limited to {MAX_SIZE} here")));
    }
    Ok(l)
}

fn check_dims(dims: &[usize]) -> Result<(), Error> {
    if dims.iter().any(|&d| d > MAX_DIM) {
        return Err(Error::Invalid(format!("dimensions are limited to {MAX_DIM} here")));
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// `model` is `"tensor"` (uses `p, q, m, n`) or `"s2"` (uses `m, n`).
pub fn highest_weight_vector(model: &str, p: usize, q: usize, m: usize, n: usize, lambda: &str) -> Result<String, Error> {
    check_dims(&[p, q, m, n])?;
    let lambda = parse_lambda(lambda)?;
    let budget = Budget::limit(TERM_LIMIT);
    let out = match model {
        "tensor" => {
            let model = TensorModel::new(p, q, m, n).with_budget(budget);
            let v = model.hwv_general(&lambda)?;
            VectorOut {
                vector: format_poly(&v),
                terms: v.len(),
                weight: model.joint_weight(&v)?,
                expected_weight: model.expected_weight(&lambda)?,
                highest: is_highest(&v, &model.realizations())?,
            }
        }
        "s2" => {
            let model = S2Model::new(m, n).with_budget(budget);
            let v = model.hwv_s2(&lambda)?;
            VectorOut {
                vector: format_poly(&v),
                terms: v.len(),
                weight: model.weight(&v)?,
                expected_weight: model.expected_weight(&lambda)?,
                highest: is_highest(&v, &[model.glmn()])?,
            }
        }
        other => return Err(Error::Invalid(format!("unknown model {other:?}"))),
    };
    Ok(to_json(&out))
}

pub fn hook_schur_polynomial(lambda: &str, m: usize, n: usize) -> Result<String, Error> {
    check_dims(&[m, n])?;
    let lambda = parse_lambda(lambda)?;
    let f = superhowe::symfunc::hook_schur(&lambda, m, n);
    Ok(to_json(&SchurOut {
        polynomial: format_poly(&f),
        terms: f.len(),
    }))
}

/// `which` is one of `tensor-duality`, `skew-duality`, `s2-decomposition`,
/// `lambda-s2-decomposition`.
pub fn decomposition_report(which: &str, p: usize, q: usize, m: usize, n: usize, max_degree: usize) -> Result<String, Error> {
    check_dims(&[p, q, m, n])?;
    if max_degree > 5 {
        return Err(Error::Invalid("degree is limited to 5 here".into()));
    }
    let report: VerificationReport = match which {
        "tensor-duality" => verify_tensor_duality(p, q, m, n, max_degree),
        "skew-duality" => verify_skew_duality(p, q, m, n, max_degree),
        "s2-decomposition" => verify_s2_decomposition(m, n, max_degree),
        "lambda-s2-decomposition" => verify_lambda_s2_decomposition(m, n, max_degree),
        other => return Err(Error::Invalid(format!("unknown decomposition {other:?}"))),
    };
    Ok(to_json(&report))
}

fn js(r: Result<String, Error>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = highestWeightVector)]
pub fn highest_weight_vector_js(model: &str, p: usize, q: usize, m: usize, n: usize, lambda: &str) -> Result<String, JsError> {
    js(highest_weight_vector(model, p, q, m, n, lambda))
}

#[wasm_bindgen(js_name = hookSchur)]
pub fn hook_schur_js(lambda: &str, m: usize, n: usize) -> Result<String, JsError> {
    js(hook_schur_polynomial(lambda, m, n))
}

#[wasm_bindgen(js_name = decompositionReport)]
pub fn decomposition_report_js(which: &str, p: usize, q: usize, m: usize, n: usize, max_degree: usize) -> Result<String, JsError> {
    js(decomposition_report(which, p, q, m, n, max_degree))
}
