//! The demo's operations as plain Rust, returning JSON text. The wasm
//! exports in the crate root are thin wrappers over these.

use serde::Serialize;

use qslab::census::canonical_mpm_perm;
use qslab::count::{catalan_decomposition, mpm_simple, omega_poly};
use qslab::perm::parse_word;
use qslab::preimage::preimages;
use qslab::queuesort::{move_steps, run_queue_word};

/// Longest word the page will enumerate preimages for.
pub const MAX_LIST_LEN: usize = 12;
/// Members shown before the list is cut off.
pub const MAX_LISTED: usize = 500;
/// Block lengths accepted by the shape explorer.
pub const MAX_BLOCK: usize = 12;

#[derive(Serialize)]
struct Sorted {
    input: Vec<u32>,
    output: Vec<u32>,
    trace: String,
    steps: Vec<Vec<u32>>,
}

#[derive(Serialize)]
struct Listed {
    target: Vec<u32>,
    count: String,
    members: Vec<Vec<u32>>,
    truncated: bool,
}

#[derive(Serialize)]
struct Shape {
    witness: Vec<u32>,
    count: String,
    coefficients: Vec<String>,
    polynomials: Vec<String>,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// `q` applied to `text`, with the operation trace and the words passed
/// through while the LTR maxima move.
pub fn sort_word(text: &str) -> Result<String, String> {
    let w = parse_word(text).map_err(|e| e.to_string())?;
    let (out, trace) = run_queue_word(&w);
    Ok(json(&Sorted {
        input: w.values().to_vec(),
        output: out.values().to_vec(),
        trace: trace.to_string(),
        steps: move_steps(&w).into_iter().map(|s| s.into_vec()).collect(),
    }))
}

pub fn list_preimages(text: &str) -> Result<String, String> {
    let w = parse_word(text).map_err(|e| e.to_string())?;
    if w.len() > MAX_LIST_LEN {
        return Err(format!("words up to length {MAX_LIST_LEN} only"));
    }
    let set = preimages(&w);
    Ok(json(&Listed {
        target: w.values().to_vec(),
        count: set.len().to_string(),
        members: set.iter().take(MAX_LISTED).map(|m| m.values().to_vec()).collect(),
        truncated: set.len() > MAX_LISTED,
    }))
}

/// Count for the shape `M_1 P_1 M_2`, with its expansion over
/// `C_{m1}, ..., C_{m1+m2-1}`.
pub fn explore_shape(m1: usize, p1: usize, m2: usize) -> Result<String, String> {
    if [m1, p1, m2].iter().any(|&x| x > MAX_BLOCK) {
        return Err(format!("block lengths up to {MAX_BLOCK} only"));
    }
    let witness = canonical_mpm_perm(m1, p1, m2).map_err(|e| e.to_string())?;
    let count = mpm_simple(m1, p1, m2).map_err(|e| e.to_string())?;
    let coefficients = catalan_decomposition(m2, p1).map_err(|e| e.to_string())?;
    let polynomials = (0..m2)
        .map(|t| omega_poly(m2, t).map(|p| p.to_string()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    Ok(json(&Shape {
        witness: witness.values().to_vec(),
        count: count.to_string(),
        coefficients: coefficients.iter().map(|c| c.to_string()).collect(),
        polynomials,
    }))
}
