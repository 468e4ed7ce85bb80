//! The analysis report: classification, content distributions, summary,
//! per-class and per-level breakdowns, in that order.
//!
//! The serialized form is the contract shared by the CLI (`--report`) and the
//! HTTP service:
//!
//! ```text
//! {
//!   "schemaVersion": 1,
//!   "classification": { "qualifiers": [..], "acronym": "STRF" | null },
//!   "contentDistribution": {
//!     "byCount": { "textual", "numeric", "boolean", "structural" },
//!     "byBytes": { "textual", "numeric", "boolean", "structural" }
//!   },
//!   "summary": { "minifiedSize", "totalValues", "height", "duplicatedValues" },
//!   "byClass": [ { "class", "count", "byteSize", "duplicates", "duplicatePercent" } ],
//!   "byLevel": [ { "level", "valueCount", "scalarByteSize" } ]
//! }
//! ```
//!
//! `duplicatePercent` is the class's duplicates as a share of all values in
//! the document, rounded half-up to two decimals, so the rows add up to the
//! document's overall duplicate percentage (up to rounding).

use serde::{Deserialize, Serialize};

use crate::document::Value;
use crate::stats::{compute_stats, DocumentStats, PerClass, ValueClass};
use crate::taxonomy::{classify_stats, TaxonomyLabel};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub classification: Classification,
    pub content_distribution: ContentDistribution,
    pub summary: Summary,
    pub by_class: Vec<ClassRow>,
    pub by_level: Vec<LevelRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classification {
    pub qualifiers: Vec<String>,
    pub acronym: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ContentDistribution {
    pub by_count: ClassBreakdown,
    pub by_bytes: ClassBreakdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassBreakdown {
    pub textual: usize,
    pub numeric: usize,
    pub boolean: usize,
    pub structural: usize,
}

impl ClassBreakdown {
    fn from_classes(per_class: PerClass<usize>) -> Self {
        ClassBreakdown {
            textual: per_class[ValueClass::Textual],
            numeric: per_class[ValueClass::Numeric],
            boolean: per_class[ValueClass::Booleanish],
            structural: per_class[ValueClass::Structural],
        }
    }

    pub fn total(&self) -> usize {
        self.textual + self.numeric + self.boolean + self.structural
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Summary {
    pub minified_size: usize,
    pub total_values: usize,
    pub height: usize,
    pub duplicated_values: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ClassRow {
    pub class: ValueClass,
    pub count: usize,
    pub byte_size: usize,
    pub duplicates: usize,
    pub duplicate_percent: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LevelRow {
    pub level: usize,
    pub value_count: usize,
    pub scalar_byte_size: usize,
}

/// `part / whole` as a percentage rounded half-up to two decimals.
/// Display only; classification never looks at it.
pub fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        return 0.0;
    }
    let (part, whole) = (part as u128, whole as u128);
    let hundredths = (part * 20_000 + whole) / (2 * whole);
    hundredths as f64 / 100.0
}

pub fn build_report(root: Value<'_>) -> AnalysisReport {
    let stats = compute_stats(root);
    let label = classify_stats(&stats);
    report_from(&stats, &label)
}

pub fn report_from(stats: &DocumentStats, label: &TaxonomyLabel) -> AnalysisReport {
    let per_class = &stats.per_class;
    AnalysisReport {
        schema_version: SCHEMA_VERSION,
        classification: Classification {
            qualifiers: label.qualifiers(),
            acronym: label.acronym(),
        },
        content_distribution: ContentDistribution {
            by_count: ClassBreakdown::from_classes(PerClass::from_fn(|c| per_class[c].count)),
            by_bytes: ClassBreakdown::from_classes(PerClass::from_fn(|c| per_class[c].byte_size)),
        },
        summary: Summary {
            minified_size: stats.minified_size,
            total_values: stats.total_values,
            height: stats.height,
            duplicated_values: stats.total_duplicates,
        },
        by_class: per_class
            .iter()
            .map(|(class, aggregate)| ClassRow {
                class,
                count: aggregate.count,
                byte_size: aggregate.byte_size,
                duplicates: aggregate.duplicates,
                duplicate_percent: percent(aggregate.duplicates, stats.total_values),
            })
            .collect(),
        by_level: stats
            .per_level
            .iter()
            .map(|row| LevelRow {
                level: row.level,
                value_count: row.value_count,
                scalar_byte_size: row.scalar_byte_size,
            })
            .collect(),
    }
}

/// Pretty-printed JSON, two-space indent, no trailing newline.
pub fn serialize_report(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

pub fn parse_report(text: &str) -> Result<AnalysisReport, serde_json::Error> {
    serde_json::from_str(text)
}
