//! Structured (`--format json`) output documents. Counts are decimal strings
//! since they outgrow 64 bits quickly.

use num_bigint::BigUint;
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use qslab::census::{CensusTable, VerificationReport};

#[derive(Serialize)]
pub struct ApplyDoc {
    pub input: Vec<u32>,
    pub output: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PreimagesDoc {
    pub target: Vec<u32>,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
pub struct CensusDoc {
    pub n: usize,
    #[serde(serialize_with = "ordered_tally")]
    pub tally: Vec<(String, String)>,
}

/// Writes the tally as a JSON object whose keys keep numeric order.
fn ordered_tally<S: Serializer>(tally: &[(String, String)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(tally.len()))?;
    for (k, v) in tally {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl CensusDoc {
    pub fn new(table: &CensusTable) -> Self {
        CensusDoc {
            n: table.n(),
            tally: table
                .tally()
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }

    pub fn plain(&self) -> String {
        self.tally.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum SequenceDoc {
    Terms(Vec<String>),
    Rows(Vec<Vec<String>>),
}

impl SequenceDoc {
    pub fn terms(values: Vec<BigUint>) -> Self {
        SequenceDoc::Terms(values.iter().map(BigUint::to_string).collect())
    }

    pub fn rows(rows: Vec<Vec<BigUint>>) -> Self {
        SequenceDoc::Rows(
            rows.iter()
                .map(|r| r.iter().map(BigUint::to_string).collect())
                .collect(),
        )
    }

    pub fn plain(&self) -> String {
        match self {
            SequenceDoc::Terms(t) => t.join(" ") + "\n",
            SequenceDoc::Rows(rows) => rows.iter().map(|r| r.join(" ") + "\n").collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ReportDoc<'a> {
    pub suite: String,
    pub exploratory: bool,
    pub passed: bool,
    pub parameters: &'a std::collections::BTreeMap<String, String>,
    pub cases: u64,
    pub failures: Vec<FailureDoc<'a>>,
}

#[derive(Serialize)]
pub struct FailureDoc<'a> {
    pub input: &'a str,
    pub expected: &'a str,
    pub actual: &'a str,
}

impl<'a> From<&'a VerificationReport> for ReportDoc<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        ReportDoc {
            suite: r.suite.to_string(),
            exploratory: r.is_exploratory(),
            passed: r.passed(),
            parameters: &r.parameters,
            cases: r.cases,
            failures: r
                .failures
                .iter()
                .map(|f| FailureDoc {
                    input: &f.input,
                    expected: &f.expected,
                    actual: &f.actual,
                })
                .collect(),
        }
    }
}
