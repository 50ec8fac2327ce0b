use serde_json::{json, Value};

use crate::coeffs::Rational;

/// Outcome of a grid check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    pub counterexamples: Vec<Vec<Rational>>,
    pub cells_checked: usize,
    pub grid_size: usize,
    pub seed: u64,
}

impl CheckReport {
    pub fn new(check: &str, seed: u64) -> Self {
        CheckReport {
            check: check.to_string(),
            passed: true,
            counterexamples: vec![],
            cells_checked: 0,
            grid_size: 0,
            seed,
        }
    }

    pub fn fail(&mut self, w: Vec<Rational>) {
        self.passed = false;
        self.counterexamples.push(w);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "status": if self.passed { "pass" } else { "fail" },
            "counterexamples": self
                .counterexamples
                .iter()
                .map(|w| w.iter().map(|q| q.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "cells_checked": self.cells_checked,
            "grid_size": self.grid_size,
            "seed": self.seed,
        })
    }
}
