//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns strings; failures come back as
//! `{"error": "..."}`.

use serde_json::{json, Value};
use vlink::{
    apply_move, enumerate_moves, search_equivalent, LinkDiagram, MoveKind, Report, SearchBounds,
    SearchOutcome,
};
use wasm_bindgen::prelude::*;

/// Node budget for searches started from the page.
const PAGE_BUDGET: usize = 200_000;

fn parse(code: &str) -> Result<LinkDiagram, Value> {
    LinkDiagram::parse(code.trim()).map_err(|e| json!({ "error": e.to_string() }))
}

fn flatten(r: Result<Value, Value>) -> String {
    r.unwrap_or_else(|e| e).to_string()
}

pub fn report_value(code: &str) -> Result<Value, Value> {
    let d = parse(code)?;
    let mut v = serde_json::to_value(Report::new(&d)).expect("report serializes");
    v["passes"] = json!(d
        .components()
        .iter()
        .map(|c| c.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>());
    Ok(v)
}

/// Every diagram one move away, as `[{kind, site, result}]`, where `result`
/// is the code after the move. Moves that add crossings are listed only if
/// `with_additions`.
pub fn moves_value(code: &str, with_additions: bool) -> Result<Value, Value> {
    let d = parse(code)?;
    let kinds: &[MoveKind] = if with_additions { &MoveKind::ALL } else { &MoveKind::NON_INCREASING };
    let list: Vec<Value> = enumerate_moves(&d, kinds)
        .into_iter()
        .map(|m| {
            let mut v = serde_json::to_value(m).expect("move serializes");
            v["result"] = json!(apply_move(&d, &m).expect("enumerated moves apply").serialize());
            v
        })
        .collect();
    Ok(Value::Array(list))
}

pub fn search_value(a: &str, b: &str, max_crossings: u32, max_steps: u32) -> Result<Value, Value> {
    let (a, b) = (parse(a)?, parse(b)?);
    let bounds = SearchBounds::new(max_crossings as usize, max_steps as usize).with_max_nodes(PAGE_BUDGET);
    Ok(match search_equivalent(&a, &b, &bounds) {
        SearchOutcome::Found(seq) => {
            let steps: Vec<Value> =
                seq.steps.iter().map(|s| serde_json::to_value(s).expect("step serializes")).collect();
            json!({ "status": "found", "start": seq.start.serialize(), "steps": steps })
        }
        SearchOutcome::NotFound { exhaustion, explored } => {
            json!({ "status": "not-found", "exhaustion": exhaustion, "explored": explored })
        }
    })
}

#[wasm_bindgen]
pub fn report(code: &str) -> String {
    flatten(report_value(code))
}

#[wasm_bindgen]
pub fn moves(code: &str, with_additions: bool) -> String {
    flatten(moves_value(code, with_additions))
}

#[wasm_bindgen]
pub fn search(a: &str, b: &str, max_crossings: u32, max_steps: u32) -> String {
    flatten(search_value(a, b, max_crossings, max_steps))
}
