//! The machine-readable report printed by `--json`. The schema lives in
//! `docs/report.schema.json`.

use serde::Serialize;

use ktreg_core::graph::{Edge, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Found,
    NotFound,
    Inapplicable,
    ResourceLimit,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Found => 0,
            Status::NotFound => 1,
            Status::InputError => 2,
            Status::ResourceLimit => 3,
            Status::Inapplicable => 4,
        }
    }

    pub fn from_found(found: bool) -> Self {
        if found {
            Status::Found
        } else {
            Status::NotFound
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Query {
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<Vertex>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub via_subdivision: bool,
    pub max_t: usize,
    pub threads: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Certificate {
    /// Sorted vertex labels.
    pub vertices: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Edge>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<Vertex>>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximum: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: String,
    pub upper: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Graph the search ran on, when it is derived from the input.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// `eᵀx̄` as `"p/q"`; absent when the system is inconsistent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_cardinality: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shortcut: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_is_main: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
    pub exact_integer: Option<i64>,
    pub main: bool,
    pub main_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SrgReport {
    pub n: usize,
    pub p: usize,
    pub a: usize,
    pub c: usize,
    pub primitive: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphOut {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<Edge>,
}

/// `((κ₁+κ₂) ± √radicand)/2`, with rationals when the root is exact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinOut {
    pub kappa1: usize,
    pub kappa2: usize,
    pub s: usize,
    pub tau: usize,
    pub trace: u64,
    pub radicand: u64,
    pub plus: f64,
    pub minus: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<[String; 2]>,
    pub first_side_regular: bool,
    pub second_side_regular: bool,
    /// Main eigenvalues of the constructed graph found numerically.
    pub main_eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub query: Query,
    pub status: Status,
    pub certificates: Vec<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub srg: Option<SrgReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join: Option<JoinOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Wall-clock time; only present with `--timing` so that plain
    /// `--json` output stays byte-stable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(query: Query, status: Status) -> Self {
        Report {
            query,
            status,
            certificates: Vec::new(),
            diagnostics: None,
            spectrum: None,
            srg: None,
            graph: None,
            join: None,
            message: None,
            timing_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Rounds a float for reports so tiny solver noise never reaches the output.
pub fn tidy(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}
