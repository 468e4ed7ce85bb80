//! Size, content, redundancy and nesting classification.
//!
//! A document lands in one of 36 categories (3 tiers × 3 content types ×
//! 2 redundancy × 2 nesting) named by four-letter acronyms such as `TTRF`
//! (tier 1, textual, redundant, flat). Documents without any scalar values
//! are classified as structural and have no acronym.

use std::fmt;

use crate::document::Value;
use crate::stats::{compute_stats, ClassAggregate, DocumentStats, PerClass, ValueClass};

/// Printed in place of an acronym for structural documents.
pub const NO_ACRONYM_STRUCTURAL: &str = "no acronym: structural";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SizeTier {
    /// Minified size below 100 bytes.
    Tier1,
    /// At least 100 and below 1000 bytes.
    Tier2,
    /// 1000 bytes or more.
    Tier3,
}

impl SizeTier {
    pub const ALL: [SizeTier; 3] = [SizeTier::Tier1, SizeTier::Tier2, SizeTier::Tier3];

    pub fn qualifier(self) -> &'static str {
        match self {
            SizeTier::Tier1 => "tier 1 minified < 100 bytes",
            SizeTier::Tier2 => "tier 2 minified >= 100 < 1000 bytes",
            SizeTier::Tier3 => "tier 3 minified >= 1000 bytes",
        }
    }

    fn letter(self) -> char {
        match self {
            SizeTier::Tier1 => 'T',
            SizeTier::Tier2 => 'S',
            SizeTier::Tier3 => 'L',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Redundancy {
    Redundant,
    NonRedundant,
}

impl Redundancy {
    pub const ALL: [Redundancy; 2] = [Redundancy::Redundant, Redundancy::NonRedundant];

    pub fn qualifier(self) -> &'static str {
        match self {
            Redundancy::Redundant => "redundant",
            Redundancy::NonRedundant => "non-redundant",
        }
    }

    fn letter(self) -> char {
        match self {
            Redundancy::Redundant => 'R',
            Redundancy::NonRedundant => 'N',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nesting {
    Flat,
    Nested,
}

impl Nesting {
    pub const ALL: [Nesting; 2] = [Nesting::Flat, Nesting::Nested];

    pub fn qualifier(self) -> &'static str {
        match self {
            Nesting::Flat => "flat",
            Nesting::Nested => "nested",
        }
    }

    fn letter(self) -> char {
        match self {
            Nesting::Flat => 'F',
            Nesting::Nested => 'N',
        }
    }
}

/// Which content classes a document belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentProfile {
    /// Either a non-empty subset of the scalar classes in
    /// textual/numeric/boolean order, or exactly `[Structural]`.
    qualifying: Vec<ValueClass>,
    /// `count × byte_size` for each scalar class; 0 for structural.
    scores: PerClass<u128>,
}

impl ContentProfile {
    pub fn qualifying(&self) -> &[ValueClass] {
        &self.qualifying
    }

    pub fn score(&self, class: ValueClass) -> u128 {
        self.scores[class]
    }

    pub fn is_structural(&self) -> bool {
        self.qualifying == [ValueClass::Structural]
    }

    /// The class the acronym is built from: the first qualifying scalar class.
    pub fn primary(&self) -> Option<ValueClass> {
        self.qualifying
            .first()
            .copied()
            .filter(|c| *c != ValueClass::Structural)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaxonomyLabel {
    pub tier: SizeTier,
    pub content: ContentProfile,
    pub redundancy: Redundancy,
    pub nesting: Nesting,
}

impl TaxonomyLabel {
    /// Qualifier strings: size, every qualifying content class, redundancy,
    /// nesting.
    pub fn qualifiers(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(6);
        out.push(self.tier.qualifier().to_string());
        out.extend(
            self.content
                .qualifying()
                .iter()
                .map(|c| c.name().to_string()),
        );
        out.push(self.redundancy.qualifier().to_string());
        out.push(self.nesting.qualifier().to_string());
        out
    }

    /// Four-letter category code, or `None` for structural documents.
    pub fn acronym(&self) -> Option<String> {
        acronym(
            self.tier,
            self.content.primary()?,
            self.redundancy,
            self.nesting,
        )
    }
}

impl fmt::Display for TaxonomyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.qualifiers().join(", "))?;
        match self.acronym() {
            Some(code) => write!(f, " ({code})"),
            None => Ok(()),
        }
    }
}

/// Acronym for one category. `None` when `class` is structural.
pub fn acronym(
    tier: SizeTier,
    class: ValueClass,
    redundancy: Redundancy,
    nesting: Nesting,
) -> Option<String> {
    let content = match class {
        ValueClass::Textual => 'T',
        ValueClass::Numeric => 'N',
        ValueClass::Booleanish => 'B',
        ValueClass::Structural => return None,
    };
    Some(
        [
            tier.letter(),
            content,
            redundancy.letter(),
            nesting.letter(),
        ]
        .iter()
        .collect(),
    )
}

pub fn classify_size(minified_size: usize) -> SizeTier {
    match minified_size {
        0..100 => SizeTier::Tier1,
        100..1000 => SizeTier::Tier2,
        _ => SizeTier::Tier3,
    }
}

pub fn classify_content(per_class: &PerClass<ClassAggregate>) -> ContentProfile {
    let scores = PerClass::from_fn(|class| match class {
        ValueClass::Structural => 0,
        class => per_class[class].count as u128 * per_class[class].byte_size as u128,
    });
    let best = ValueClass::SCALAR
        .iter()
        .map(|&c| scores[c])
        .max()
        .unwrap_or(0);
    let qualifying: Vec<ValueClass> = ValueClass::SCALAR
        .into_iter()
        .filter(|&c| per_class[c].count > 0 && scores[c] >= best)
        .collect();
    if qualifying.is_empty() {
        ContentProfile {
            qualifying: vec![ValueClass::Structural],
            scores,
        }
    } else {
        ContentProfile { qualifying, scores }
    }
}

/// Redundant when duplicates are at least a quarter of all values.
pub fn classify_redundancy(total_duplicates: usize, total_values: usize) -> Redundancy {
    debug_assert!(total_values >= 1);
    if 4 * total_duplicates as u128 >= total_values as u128 {
        Redundancy::Redundant
    } else {
        Redundancy::NonRedundant
    }
}

pub fn classify_nesting(stats: &DocumentStats, content: &ContentProfile) -> Nesting {
    let structural_deep = content.is_structural() && stats.height >= 5;
    let product = stats.height as u128 * stats.largest_level as u128;
    if structural_deep || product >= 10 {
        Nesting::Nested
    } else {
        Nesting::Flat
    }
}

/// Classifies already-computed statistics.
pub fn classify_stats(stats: &DocumentStats) -> TaxonomyLabel {
    let content = classify_content(&stats.per_class);
    TaxonomyLabel {
        tier: classify_size(stats.minified_size),
        redundancy: classify_redundancy(stats.total_duplicates, stats.total_values),
        nesting: classify_nesting(stats, &content),
        content,
    }
}

pub fn classify(root: Value<'_>) -> TaxonomyLabel {
    classify_stats(&compute_stats(root))
}
