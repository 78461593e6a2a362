//! Browser bindings: every export takes a group spec and returns JSON.

use groupscope::aut;
use groupscope::catalog::Limits;
use groupscope::group;
use groupscope::theorems::{self, Subject, TheoremId};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest group the page will build.
pub const WEB_MAX_ORDER: usize = 64;

#[derive(Serialize)]
struct GroupInfo {
    spec: String,
    order: usize,
    abelian: bool,
    exponent: usize,
    class: Option<usize>,
    center_order: usize,
    lower_central_series: Vec<usize>,
    purely_nonabelian: bool,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct AutCounts {
    spec: String,
    full: usize,
    central: usize,
    /// `|Aut_c^k(G)|` for `k = 1, …, class`.
    class_preserving: Vec<usize>,
    /// `|Aut_{Z}^{γ_2}(G)|`.
    center_fixing: usize,
}

fn subject(spec: &str) -> Result<Subject, String> {
    let limits = Limits {
        max_order: WEB_MAX_ORDER,
    };
    Subject::parse(spec, &limits).map_err(|e| e.to_string())
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn group_info_json(spec: &str) -> Result<String, String> {
    let s = subject(spec)?;
    let g = &s.group;
    let class = group::nilpotency_class(g).ok();
    let depth = class.map_or(4, |c| c + 1).max(2);
    let purely = aut::purely_nonabelian_test(g).map_err(|e| e.to_string())?;
    Ok(to_json(&GroupInfo {
        spec: s.label.clone(),
        order: g.order(),
        abelian: g.is_abelian(),
        exponent: g.exponent(),
        class,
        center_order: group::center(g).order(),
        lower_central_series: group::lower_central_series(g, depth)
            .iter()
            .map(|t| t.order())
            .collect(),
        purely_nonabelian: purely.purely && !g.is_abelian(),
        labels: g.elements().map(|x| g.label(x)).collect(),
        table: g.rows(),
    }))
}

pub fn aut_counts_json(spec: &str) -> Result<String, String> {
    let s = subject(spec)?;
    let g = &s.group;
    let count = |r: groupscope::Result<Vec<aut::Automorphism>>| {
        r.map(|v| v.len()).map_err(|e| e.to_string())
    };
    let class = group::nilpotency_class(g).unwrap_or(1).max(1);
    let class_preserving = (1..=class)
        .map(|k| count(aut::aut_class_preserving(g, k)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(to_json(&AutCounts {
        spec: s.label.clone(),
        full: count(aut::automorphism_group(g))?,
        central: count(aut::autcent(g))?,
        class_preserving,
        center_fixing: count(aut::aut_box(g, &group::gamma(g, 2), &group::center(g)))?,
    }))
}

pub fn check_theorem_json(id: &str, spec: &str) -> Result<String, String> {
    let id: TheoremId = id
        .parse()
        .map_err(|e: groupscope::GroupError| e.to_string())?;
    let s = subject(spec)?;
    Ok(to_json(&theorems::run_check(id, &s, None)))
}

/// Theorem ids accepted by [`check_theorem`].
#[wasm_bindgen]
pub fn theorem_ids() -> String {
    to_json(&TheoremId::ALL.map(|t| t.as_str()))
}

#[wasm_bindgen]
pub fn group_info(spec: &str) -> Result<String, JsError> {
    group_info_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn aut_counts(spec: &str) -> Result<String, JsError> {
    aut_counts_json(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check_theorem(id: &str, spec: &str) -> Result<String, JsError> {
    check_theorem_json(id, spec).map_err(|e| JsError::new(&e))
}
