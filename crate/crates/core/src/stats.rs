//! Aggregate statistics over a parsed document.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::document::{Kind, Value};
use crate::duplicates;

/// Content class of a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueClass {
    /// Strings.
    Textual,
    /// Numbers.
    Numeric,
    /// Booleans and nulls.
    #[serde(rename = "boolean")]
    Booleanish,
    /// Objects and arrays.
    Structural,
}

impl ValueClass {
    pub const ALL: [ValueClass; 4] = [
        ValueClass::Textual,
        ValueClass::Numeric,
        ValueClass::Booleanish,
        ValueClass::Structural,
    ];

    /// The scalar classes, in the order used to break content-type ties.
    pub const SCALAR: [ValueClass; 3] = [
        ValueClass::Textual,
        ValueClass::Numeric,
        ValueClass::Booleanish,
    ];

    pub fn of(kind: Kind) -> Self {
        match kind {
            Kind::String => ValueClass::Textual,
            Kind::Number => ValueClass::Numeric,
            Kind::Boolean | Kind::Null => ValueClass::Booleanish,
            Kind::Object | Kind::Array => ValueClass::Structural,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ValueClass::Textual => "textual",
            ValueClass::Numeric => "numeric",
            ValueClass::Booleanish => "boolean",
            ValueClass::Structural => "structural",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ValueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One `T` per [`ValueClass`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PerClass<T>([T; 4]);

impl<T> PerClass<T> {
    pub fn from_fn(mut f: impl FnMut(ValueClass) -> T) -> Self {
        PerClass(ValueClass::ALL.map(&mut f))
    }

    pub fn iter(&self) -> impl Iterator<Item = (ValueClass, &T)> {
        ValueClass::ALL.into_iter().zip(self.0.iter())
    }
}

impl<T> Index<ValueClass> for PerClass<T> {
    type Output = T;

    fn index(&self, class: ValueClass) -> &T {
        &self.0[class.slot()]
    }
}

impl<T> IndexMut<ValueClass> for PerClass<T> {
    fn index_mut(&mut self, class: ValueClass) -> &mut T {
        &mut self.0[class.slot()]
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassAggregate {
    pub count: usize,
    /// Scalar bytes for scalar classes; delimiter, comma, colon and key bytes
    /// for the structural class.
    pub byte_size: usize,
    pub duplicates: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelAggregate {
    /// Non-root level, `1..=height`.
    pub level: usize,
    pub value_count: usize,
    /// Bytes of textual, numeric and boolean/null values at this level.
    pub scalar_byte_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentStats {
    pub minified_size: usize,
    pub total_values: usize,
    pub height: usize,
    pub total_duplicates: usize,
    pub per_class: PerClass<ClassAggregate>,
    pub per_level: Vec<LevelAggregate>,
    /// Level with the most scalar bytes, deepest on ties; 0 if no non-root
    /// level holds a scalar.
    pub largest_level: usize,
}

impl DocumentStats {
    /// Number of textual, numeric and boolean/null values.
    pub fn scalar_values(&self) -> usize {
        ValueClass::SCALAR
            .iter()
            .map(|&c| self.per_class[c].count)
            .sum()
    }
}

/// Computes every statistic for the subtree rooted at `root`. Levels are
/// measured from `root`.
pub fn compute_stats(root: Value<'_>) -> DocumentStats {
    let base = root.level();
    let mut per_class = PerClass::<ClassAggregate>::default();
    let mut per_level: Vec<LevelAggregate> = Vec::new();
    let mut height = 0;

    for value in root.descendants() {
        let class = ValueClass::of(value.kind());
        let level = value.level() - base;
        height = height.max(level);

        let bytes = match value.scalar_size() {
            Some(size) => size,
            None => {
                let children: usize = value.children().map(|c| c.serialized_size()).sum();
                value.serialized_size() - children
            }
        };
        let aggregate = &mut per_class[class];
        aggregate.count += 1;
        aggregate.byte_size += bytes;

        if level > 0 {
            if per_level.len() < level {
                per_level.extend((per_level.len() + 1..=level).map(|level| LevelAggregate {
                    level,
                    value_count: 0,
                    scalar_byte_size: 0,
                }));
            }
            let row = &mut per_level[level - 1];
            row.value_count += 1;
            if class != ValueClass::Structural {
                row.scalar_byte_size += bytes;
            }
        }
    }

    let duplicates = count_duplicates(root);
    for class in ValueClass::ALL {
        per_class[class].duplicates = duplicates[class];
    }

    DocumentStats {
        minified_size: root.serialized_size(),
        total_values: root.descendants().len(),
        height,
        total_duplicates: ValueClass::ALL.iter().map(|&c| duplicates[c]).sum(),
        per_class,
        largest_level: largest_level(&per_level),
        per_level,
    }
}

/// The level with the largest scalar byte-size; ties go to the deeper level.
pub fn largest_level(levels: &[LevelAggregate]) -> usize {
    levels
        .iter()
        .filter(|row| row.scalar_byte_size > 0)
        .max_by_key(|row| (row.scalar_byte_size, row.level))
        .map_or(0, |row| row.level)
}

/// Counts duplicates per class: each group of `n` values with identical
/// minified serialization contributes `n - 1`.
pub fn count_duplicates(root: Value<'_>) -> PerClass<usize> {
    let ids = duplicates::intern_subtree(root);
    let mut seen = vec![false; ids.distinct];
    let mut out = PerClass::default();
    for (value, id) in root.descendants().zip(&ids.ids) {
        if std::mem::replace(&mut seen[*id as usize], true) {
            out[ValueClass::of(value.kind())] += 1;
        }
    }
    out
}

/// True iff both values minify to the same bytes.
pub fn value_equals(a: Value<'_>, b: Value<'_>) -> bool {
    a.serialized_size() == b.serialized_size() && a.kind() == b.kind() && a.minify() == b.minify()
}

/// Maximum depth below `root`; 0 for scalars and empty composites.
pub fn height(root: Value<'_>) -> usize {
    let base = root.level();
    root.descendants()
        .map(|v| v.level() - base)
        .max()
        .unwrap_or(0)
}
