//! Two-sided comparisons produced by the identity checks.

use crate::algebra::XPoly;

/// Both sides of an identity, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: XPoly,
    pub rhs: XPoly,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: XPoly, rhs: XPoly) -> Self {
        Comparison {
            label: label.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> XPoly {
        &self.lhs - &self.rhs
    }
}

/// Result of a family of comparisons: how many ran and the first failure.
#[derive(Clone, Debug, Default)]
pub struct CheckSummary {
    pub checked: usize,
    pub failures: Vec<Comparison>,
}

impl CheckSummary {
    pub fn record(&mut self, c: Comparison) {
        self.checked += 1;
        if !c.holds() {
            self.failures.push(c);
        }
    }

    pub fn merge(&mut self, other: CheckSummary) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl FromIterator<Comparison> for CheckSummary {
    fn from_iter<I: IntoIterator<Item = Comparison>>(iter: I) -> Self {
        let mut s = CheckSummary::default();
        for c in iter {
            s.record(c);
        }
        s
    }
}
