//! Pass/fail records for identity checks, serialisable as JSON.

use serde::{Deserialize, Serialize};

use crate::exactalg::{Coefficient, MultiSeries};

/// First monomial where two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub monomial: Vec<u32>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        IdentityCheck { name: name.into(), passed, witness: None, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn failed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, false).with_detail(detail)
    }

    /// Coefficientwise comparison of two series up to the smaller bound.
    pub fn compare_series<C: Coefficient>(
        name: impl Into<String>,
        left: &MultiSeries<C>,
        right: &MultiSeries<C>,
    ) -> Self {
        match left.first_difference(right) {
            None => Self::new(name, true),
            Some((monomial, l, r)) => IdentityCheck {
                name: name.into(),
                passed: false,
                witness: Some(Witness { monomial, left: l.to_string(), right: r.to_string() }),
                detail: None,
            },
        }
    }
}
