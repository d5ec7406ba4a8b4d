//! Verification reports shared by every checker.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The hypothesis of the identity does not hold for this input, so the
    /// identity itself was not evaluated.
    Precondition,
}

/// What a report is indexed by: a size `n`, a truncation order `N`, or nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    N(usize),
    Order(usize),
    Global,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<String>,
}

impl Report {
    fn base(identity: impl Into<String>, scope: Scope, status: Status) -> Self {
        let (n, order) = match scope {
            Scope::N(n) => (Some(n), None),
            Scope::Order(o) => (None, Some(o)),
            Scope::Global => (None, None),
        };
        Report {
            identity: identity.into(),
            n,
            order,
            status,
            lhs: String::new(),
            rhs: String::new(),
            first_mismatch: None,
        }
    }

    /// Compares two values; the mismatch coordinate is `None` on success.
    pub fn compare<T: PartialEq + fmt::Display>(identity: impl Into<String>, scope: Scope, lhs: &T, rhs: &T) -> Self {
        let ok = lhs == rhs;
        let mut r = Self::base(identity, scope, if ok { Status::Pass } else { Status::Fail });
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        r
    }

    /// A report whose outcome and mismatch location were decided by the caller.
    pub fn outcome(
        identity: impl Into<String>,
        scope: Scope,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
        mismatch: Option<String>,
    ) -> Self {
        let status = if mismatch.is_none() { Status::Pass } else { Status::Fail };
        let mut r = Self::base(identity, scope, status);
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        r.first_mismatch = mismatch;
        r
    }

    pub fn precondition(identity: impl Into<String>, scope: Scope, reason: impl Into<String>) -> Self {
        let mut r = Self::base(identity, scope, Status::Precondition);
        r.first_mismatch = Some(reason.into());
        r
    }

    pub fn with_mismatch(mut self, at: impl Into<String>) -> Self {
        if self.status == Status::Fail {
            self.first_mismatch = Some(at.into());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Precondition => "SKIP",
        };
        write!(f, "[{tag}] {}", self.identity)?;
        if let Some(n) = self.n {
            write!(f, " n={n}")?;
        }
        if let Some(o) = self.order {
            write!(f, " N={o}")?;
        }
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            write!(f, ": {} vs {}", self.lhs, self.rhs)?;
        }
        if let Some(m) = &self.first_mismatch {
            write!(f, " ({m})")?;
        }
        Ok(())
    }
}

/// An ordered collection of reports.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Suite {
    pub reports: Vec<Report>,
}

impl Suite {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, r: Report) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: Suite) {
        self.reports.extend(other.reports);
    }

    /// No report failed. Precondition reports do not count as failures.
    pub fn ok(&self) -> bool {
        self.reports.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.reports.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Report> {
        self.reports.iter().filter(|r| r.status == Status::Fail)
    }
}

impl From<Report> for Suite {
    fn from(r: Report) -> Self {
        Suite { reports: vec![r] }
    }
}

impl FromIterator<Report> for Suite {
    fn from_iter<I: IntoIterator<Item = Report>>(iter: I) -> Self {
        Suite { reports: iter.into_iter().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = Report::compare("pf-count", Scope::N(3), &16, &16);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["n"], 3);
        assert!(v.get("N").is_none());
        assert!(v.get("first_mismatch").is_none());
        let bad = Report::compare("x", Scope::Order(4), &1, &2).with_mismatch("z^3");
        assert_eq!(serde_json::to_value(&bad).unwrap()["first_mismatch"], "z^3");
        assert!(!Suite::from(bad).ok());
    }
}
