//! The tour result document.
//!
//! Written as pretty JSON with a fixed field order so identical inputs and
//! flags produce byte-identical files; timings are deliberately not part of
//! the document.

use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct ResultDoc {
    pub n: usize,
    pub scale_k: u32,
    pub case_taken: String,
    pub transforms_applied: Vec<String>,
    pub acute: bool,
    pub max_angle_rad: f64,
    pub order: Vec<usize>,
}

impl ResultDoc {
    pub fn to_canonical_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

/// Lenient reader for verification: only the order is needed.
#[derive(Debug, Deserialize)]
pub struct TourOrderDoc {
    pub order: Vec<usize>,
}
