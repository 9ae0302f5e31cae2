//! Browser bindings for the qslab demo page. Each export returns a JSON
//! document or throws the error message.

pub mod demo;

use wasm_bindgen::prelude::*;

#[wasm_bindgen(js_name = sortWord)]
pub fn sort_word(text: &str) -> Result<String, JsError> {
    demo::sort_word(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = listPreimages)]
pub fn list_preimages(text: &str) -> Result<String, JsError> {
    demo::list_preimages(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = exploreShape)]
pub fn explore_shape(m1: usize, p1: usize, m2: usize) -> Result<String, JsError> {
    demo::explore_shape(m1, p1, m2).map_err(|e| JsError::new(&e))
}
