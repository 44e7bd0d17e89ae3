//! Machine-readable reports for bound and verification runs.
//!
//! Counts are serialized as decimal strings so arbitrary-precision values
//! survive JSON and CSV untouched. Reports carry no timestamps; the measured
//! wall time sits in its own field so the rest of a report is byte-stable
//! across runs.

use crate::bounds::BigCount;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// One row of results for a single size profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub sizes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, with = "count_string", skip_serializing_if = "Option::is_none")]
    pub bound_bruteforce: Option<BigCount>,
    #[serde(default, with = "count_string", skip_serializing_if = "Option::is_none")]
    pub bound_recurrence: Option<BigCount>,
    #[serde(default, with = "count_string", skip_serializing_if = "Option::is_none")]
    pub bound_formula: Option<BigCount>,
    #[serde(default, with = "count_string", skip_serializing_if = "Option::is_none")]
    pub measured_sc: Option<BigCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attained: Option<bool>,
    pub wall_time_ms: u64,
}

impl CountReport {
    pub fn new(sizes: Vec<usize>) -> CountReport {
        CountReport {
            sizes,
            family: None,
            bound_bruteforce: None,
            bound_recurrence: None,
            bound_formula: None,
            measured_sc: None,
            attained: None,
            wall_time_ms: 0,
        }
    }

    /// Sets `attained` from `measured_sc` and `bound_recurrence` when both
    /// are present.
    pub fn resolve_attained(&mut self) {
        self.attained = match (&self.measured_sc, &self.bound_recurrence) {
            (Some(measured), Some(bound)) => Some(measured == bound),
            _ => None,
        };
    }

    /// True when all bound values that are present agree.
    pub fn is_consistent(&self) -> bool {
        let bounds: Vec<&BigCount> = [
            &self.bound_bruteforce,
            &self.bound_recurrence,
            &self.bound_formula,
        ]
        .into_iter()
        .flatten()
        .collect();
        bounds.windows(2).all(|pair| pair[0] == pair[1])
    }

    pub fn sizes_string(&self) -> String {
        self.sizes
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub const CSV_HEADER: &'static str =
        "family,sizes,bound_bruteforce,bound_recurrence,bound_formula,measured_sc,attained,wall_time_ms";

    pub fn csv_row(&self) -> String {
        let opt = |v: &Option<BigCount>| v.as_ref().map(BigCount::to_string).unwrap_or_default();
        format!(
            "{},\"{}\",{},{},{},{},{},{}",
            self.family.as_deref().unwrap_or(""),
            self.sizes_string(),
            opt(&self.bound_bruteforce),
            opt(&self.bound_recurrence),
            opt(&self.bound_formula),
            opt(&self.measured_sc),
            self.attained.map(|b| b.to_string()).unwrap_or_default(),
            self.wall_time_ms
        )
    }

    pub const HUMAN_HEADER: &'static str =
        "FAMILY        SIZES        BRUTE        RECURRENCE   FORMULA      MEASURED     ATTAINED  MS";

    pub fn human_row(&self) -> String {
        let opt = |v: &Option<BigCount>| {
            v.as_ref()
                .map(BigCount::to_string)
                .unwrap_or_else(|| "-".to_string())
        };
        let attained = match self.attained {
            Some(true) => "yes",
            Some(false) => "NO",
            None => "-",
        };
        let mut row = String::new();
        write!(
            row,
            "{:<13} {:<12} {:<12} {:<12} {:<12} {:<12} {:<9} {}",
            self.family.as_deref().unwrap_or("-"),
            self.sizes_string(),
            opt(&self.bound_bruteforce),
            opt(&self.bound_recurrence),
            opt(&self.bound_formula),
            opt(&self.measured_sc),
            attained,
            self.wall_time_ms
        )
        .unwrap();
        row
    }
}

mod count_string {
    use super::BigCount;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(
        value: &Option<BigCount>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(count) => serializer.serialize_some(&count.to_string()),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<BigCount>, D::Error> {
        let text: Option<String> = Option::deserialize(deserializer)?;
        text.map(|s| BigCount::from_str(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Grid totals; `misses` keeps the offending profiles for counterexample
/// reporting.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSummary {
    pub attained: usize,
    pub missed: usize,
    pub skipped: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub misses: Vec<Vec<usize>>,
}

impl GridSummary {
    pub fn human_line(&self) -> String {
        let mut line = format!(
            "grid summary: {} attained, {} missed, {} skipped",
            self.attained, self.missed, self.skipped
        );
        for miss in &self.misses {
            let sizes = miss
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(line, "\ncounterexample: sizes={sizes}").unwrap();
        }
        line
    }
}
