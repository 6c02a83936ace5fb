use serde::Serialize;
use serde_json::{Map, Value};

use crate::poly::GradedPoly;
use crate::scalar::Scalar;

/// First coefficient where the two sides disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub monomial: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    /// Largest grade compared; its meaning (diagonal degree, series order,
    /// partition weight) depends on the check.
    pub grade: i64,
    pub failure: Option<Failure>,
    pub params: Map<String, Value>,
}

impl CheckReport {
    pub fn new(name: &str, grade: i64) -> Self {
        CheckReport { name: name.to_string(), pass: true, grade, failure: None, params: Map::new() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), Value::String(value.to_string()));
        self
    }

    /// Records the first mismatch; later ones are ignored.
    pub fn fail(&mut self, monomial: impl ToString, lhs: Scalar, rhs: Scalar) {
        if self.failure.is_none() {
            self.failure = Some(Failure { monomial: monomial.to_string(), lhs, rhs });
        }
        self.pass = false;
    }

    /// Compares all coefficients of weighted degree ≤ `cap`.
    pub fn compare_polys(&mut self, lhs: &GradedPoly, rhs: &GradedPoly, cap: i64) {
        if let Some((m, a, b)) = lhs.first_difference(rhs, cap) {
            self.fail(m, a, b);
        }
    }

    pub fn compare_values(&mut self, label: impl ToString, lhs: &Scalar, rhs: &Scalar) {
        if lhs != rhs {
            self.fail(label, lhs.clone(), rhs.clone());
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
