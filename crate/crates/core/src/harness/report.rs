use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Agree,
    Disagree,
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Agree => "AGREE",
            Status::Disagree => "DISAGREE",
            Status::ReportOnly => "REPORT_ONLY",
        })
    }
}

/// One tested case: usually one `n`, for suites one property family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub n: String,
    pub expected: String,
    pub observed: String,
    pub status: Status,
}

impl CheckRow {
    pub fn new(n: impl ToString, expected: impl ToString, observed: impl ToString, status: Status) -> Self {
        CheckRow {
            n: n.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            status,
        }
    }
}

/// Outcome of one check. Every number is an exact decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub expected: String,
    pub observed: String,
    pub rows: Vec<CheckRow>,
    /// First tested `n` from which every later row agrees.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agree_from: Option<String>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

impl CheckReport {
    pub fn new(check_id: &str) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            params: BTreeMap::new(),
            status: Status::ReportOnly,
            expected: String::new(),
            observed: String::new(),
            rows: Vec::new(),
            agree_from: None,
            witnesses: Vec::new(),
            notes: Vec::new(),
            millis: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn row(&self, n: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    /// Overall status from the rows: any disagreement wins, then agreement;
    /// reports whose rows are all informational stay `REPORT_ONLY`. Also
    /// fills the summary strings and the onset of agreement.
    pub(crate) fn settle(&mut self) {
        let decided: Vec<&CheckRow> = self.rows.iter().filter(|r| r.status != Status::ReportOnly).collect();
        self.status = if decided.is_empty() {
            Status::ReportOnly
        } else if decided.iter().any(|r| r.status == Status::Disagree) {
            Status::Disagree
        } else {
            Status::Agree
        };
        let tail = self
            .rows
            .iter()
            .rposition(|r| r.status == Status::Disagree)
            .map_or(0, |i| i + 1);
        self.agree_from = self.rows[tail..]
            .iter()
            .find(|r| r.status == Status::Agree)
            .map(|r| r.n.clone());
        if self.expected.is_empty() {
            self.expected = self.rows.iter().map(|r| r.expected.as_str()).collect::<Vec<_>>().join(";");
        }
        if self.observed.is_empty() {
            self.observed = self.rows.iter().map(|r| r.observed.as_str()).collect::<Vec<_>>().join(";");
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// JSON without the timing, identical across runs with the same inputs.
    pub fn comparable_json(&self) -> String {
        let mut copy = self.clone();
        copy.millis = None;
        copy.to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidRecord(e.to_string()))
    }

    /// `n,expected,observed,status` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,expected,observed,status\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&r.n),
                csv_field(&r.expected),
                csv_field(&r.observed),
                r.status
            ));
        }
        out
    }
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Several reports gathered into one document.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub reports: Vec<CheckReport>,
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// `check_id,n,expected,observed,status`, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_id,n,expected,observed,status\n");
        for rep in &self.reports {
            for r in &rep.rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    csv_field(&rep.check_id),
                    csv_field(&r.n),
                    csv_field(&r.expected),
                    csv_field(&r.observed),
                    r.status
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn settle_and_onset() {
        let mut rep = CheckReport::new("x");
        rep.rows = vec![
            CheckRow::new(5, 1, 2, Status::Disagree),
            CheckRow::new(6, 2, 2, Status::Agree),
            CheckRow::new(7, 3, 3, Status::Agree),
        ];
        rep.settle();
        assert_eq!(rep.status, Status::Disagree);
        assert_eq!(rep.agree_from.as_deref(), Some("6"));
        assert_eq!(rep.expected, "1;2;3");
        let back = CheckReport::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        assert!(rep.to_json().contains("\"DISAGREE\""));
        assert_eq!(rep.to_csv().lines().count(), 4);
        assert_eq!(csv_field("[1, 2]"), "\"[1, 2]\"");
    }
}
