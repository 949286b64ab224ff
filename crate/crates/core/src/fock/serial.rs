use serde::{Deserialize, Serialize};

use super::operator::Operator;

/// One stored matrix entry with its row and column basis labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CooEntry {
    pub row: Vec<String>,
    pub col: Vec<String>,
    pub re: f64,
    pub im: f64,
}

impl Operator {
    /// Coordinate list in canonical column-major order. Fock factors are
    /// labelled by words, auxiliary factors by their index.
    pub fn to_coo(&self) -> Vec<CooEntry> {
        self.entries()
            .map(|(r, c, v)| CooEntry {
                row: self.codomain().labels(r),
                col: self.domain().labels(c),
                re: v.re,
                im: v.im,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_coo()).expect("coordinate list serializes")
    }
}
