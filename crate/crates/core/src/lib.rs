//! Statistics and taxonomy classification for JSON documents.
//!
//! Each document is placed in one of 36 categories along four axes:
//!
//! - **size**: tier 1 (< 100 bytes), tier 2 (100–999) or tier 3 (≥ 1000),
//!   measured on the UTF-8 minified form;
//! - **content type**: textual, numeric or boolean, whichever class has the
//!   largest `count × cumulative byte-size` (ties qualify every tied class),
//!   or structural when there are no scalar values at all;
//! - **redundancy**: redundant when at least 25% of all values duplicate an
//!   earlier value;
//! - **nesting**: nested when `height × largest level ≥ 10`, or when a
//!   structural document is at least 5 levels deep.
//!
//! ```
//! let analysis = json_taxonomy::analyze(r#"{"src":["tmp","tmp"],"dst":"tmp"}"#).unwrap();
//! assert_eq!(
//!     analysis.label.qualifiers(),
//!     ["tier 1 minified < 100 bytes", "textual", "redundant", "flat"]
//! );
//! assert_eq!(analysis.label.acronym().as_deref(), Some("TTRF"));
//! assert_eq!(analysis.stats.total_duplicates, 2);
//! ```
//!
//! The pieces are also usable on their own: [`parse`] builds an annotated
//! [`Document`], [`stats::compute_stats`] aggregates it, [`taxonomy`]
//! classifies the aggregates and [`report`] assembles the serializable
//! report shared by the CLI and the HTTP [`service`].

pub mod cli;
pub mod document;
mod duplicates;
pub mod number;
mod parse;
pub mod report;
pub mod service;
pub mod stats;
pub mod taxonomy;

pub use document::{minify, scalar_size, Document, Kind, Value};
pub use parse::{parse, ParseFailure};
pub use report::{build_report, serialize_report, AnalysisReport};
pub use stats::{compute_stats, count_duplicates, height, value_equals, DocumentStats, ValueClass};
pub use taxonomy::{classify, TaxonomyLabel};

/// Everything computed for one document.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub document: Document,
    pub stats: DocumentStats,
    pub label: TaxonomyLabel,
}

impl Analysis {
    pub fn report(&self) -> AnalysisReport {
        report::report_from(&self.stats, &self.label)
    }
}

/// Parses, measures and classifies a document in one go.
pub fn analyze(input: impl AsRef<[u8]>) -> Result<Analysis, ParseFailure> {
    let document = parse(input)?;
    let stats = compute_stats(document.root());
    let label = taxonomy::classify_stats(&stats);
    Ok(Analysis {
        document,
        stats,
        label,
    })
}

/// The qualifier strings for a document, e.g.
/// `["tier 2 minified >= 100 < 1000 bytes", "textual", "redundant", "flat"]`.
pub fn qualifiers(input: impl AsRef<[u8]>) -> Result<Vec<String>, ParseFailure> {
    Ok(analyze(input)?.label.qualifiers())
}
