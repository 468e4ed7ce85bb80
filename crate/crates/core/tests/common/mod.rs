//! Shared helpers for integration tests: a random document generator and
//! oracles that do not go through the serializer.

#![allow(dead_code)]

use std::path::PathBuf;

use json_taxonomy::{Document, Kind, Value};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

/// A generated document, kept as text fragments so the same logical value
/// can be spelled many ways (number forms, escapes, whitespace).
#[derive(Debug, Clone)]
pub enum Tree {
    Leaf(String),
    Array(Vec<Tree>, &'static str),
    Object(Vec<(String, Tree)>, &'static str),
}

impl Tree {
    pub fn node_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Array(items, _) => 1 + items.iter().map(Tree::node_count).sum::<usize>(),
            Tree::Object(members, _) => {
                1 + members.iter().map(|(_, v)| v.node_count()).sum::<usize>()
            }
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            Tree::Leaf(text) => out.push_str(text),
            Tree::Array(items, ws) => {
                out.push('[');
                out.push_str(ws);
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                        out.push_str(ws);
                    }
                    item.render_into(out);
                }
                out.push_str(ws);
                out.push(']');
            }
            Tree::Object(members, ws) => {
                out.push('{');
                out.push_str(ws);
                for (i, (key, value)) in members.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                        out.push_str(ws);
                    }
                    out.push_str(key);
                    out.push_str(ws);
                    out.push(':');
                    out.push_str(ws);
                    value.render_into(out);
                }
                out.push_str(ws);
                out.push('}');
            }
        }
    }
}

const NUMBERS: &[&str] = &[
    "0",
    "-0",
    "1",
    "1.0",
    "1e0",
    "10e-1",
    "2.5",
    "2.50",
    "-3",
    "1e21",
    "1E-7",
    "100",
    "1e2",
    "123456789012345678901234567890",
    "0.1",
    "3.14159",
    "-0.0e+0",
];

const STRINGS: &[&str] = &[
    "",
    "a",
    "b",
    "ab",
    "é",
    "😀",
    "x\"y",
    "line\nbreak",
    "\u{1}",
    "tab\t",
    "\\",
    "/",
];

const KEYS: &[&str] = &["a", "b", "c", "é", "k\"q"];

const WHITESPACE: &[&str] = &["", " ", "\n  ", "\t", "\r\n"];

/// Renders `s` as a JSON string literal, either with raw characters or with
/// every character as a `\u` escape.
fn string_literal(s: &str, escape_all: bool) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        if escape_all {
            let mut units = [0u16; 2];
            for unit in c.encode_utf16(&mut units) {
                out.push_str(&format!("\\u{unit:04X}"));
            }
        } else {
            match c {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                '\t' => out.push_str("\\t"),
                '/' => out.push_str("\\/"),
                c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                c => out.push(c),
            }
        }
    }
    out.push('"');
    out
}

fn leaf() -> impl Strategy<Value = Tree> {
    prop_oneof![
        Just(Tree::Leaf("null".into())),
        Just(Tree::Leaf("true".into())),
        Just(Tree::Leaf("false".into())),
        prop::sample::select(NUMBERS).prop_map(|n| Tree::Leaf(n.into())),
        (prop::sample::select(STRINGS), any::<bool>())
            .prop_map(|(s, escape)| Tree::Leaf(string_literal(s, escape))),
    ]
}

fn key() -> impl Strategy<Value = String> {
    (prop::sample::select(KEYS), any::<bool>()).prop_map(|(k, escape)| string_literal(k, escape))
}

fn composite(inner: BoxedStrategy<Tree>) -> impl Strategy<Value = Tree> {
    prop_oneof![
        (
            prop::collection::vec(inner.clone(), 0..8),
            prop::sample::select(WHITESPACE)
        )
            .prop_map(|(items, ws)| Tree::Array(items, ws)),
        (
            prop::collection::vec((key(), inner), 0..8),
            prop::sample::select(WHITESPACE)
        )
            .prop_map(|(members, ws)| Tree::Object(members, ws)),
    ]
}

/// Documents of at most `max_nodes` values as written (repeated object keys
/// can only shrink the parsed tree). Mostly composite at the root.
pub fn document(max_nodes: usize) -> impl Strategy<Value = Tree> {
    let value = leaf().prop_recursive(8, max_nodes as u32, 6, composite);
    prop_oneof![1 => leaf(), 9 => composite(value.boxed())]
        .prop_filter("node budget", move |tree| tree.node_count() <= max_nodes)
}

/// `count` deterministic documents from a fixed-seed runner.
pub fn corpus(count: usize, max_nodes: usize) -> Vec<Tree> {
    let mut runner = TestRunner::deterministic();
    let strategy = document(max_nodes);
    (0..count)
        .map(|_| {
            strategy
                .new_tree(&mut runner)
                .expect("generate document")
                .current()
        })
        .collect()
}

/// Structural equality read through the value accessors only.
pub fn deep_equal(a: Value<'_>, b: Value<'_>) -> bool {
    match (a.kind(), b.kind()) {
        (Kind::Null, Kind::Null) => true,
        (Kind::Boolean, Kind::Boolean) => a.as_bool() == b.as_bool(),
        // == treats -0 and 0 as equal, matching their shared rendering
        (Kind::Number, Kind::Number) => a.as_f64() == b.as_f64(),
        (Kind::String, Kind::String) => a.as_str() == b.as_str(),
        (Kind::Array, Kind::Array) => {
            let (xs, ys): (Vec<_>, Vec<_>) = (a.children().collect(), b.children().collect());
            xs.len() == ys.len() && xs.iter().zip(&ys).all(|(x, y)| deep_equal(*x, *y))
        }
        (Kind::Object, Kind::Object) => {
            let (xs, ys): (Vec<_>, Vec<_>) = (a.entries().collect(), b.entries().collect());
            xs.len() == ys.len()
                && xs
                    .iter()
                    .zip(&ys)
                    .all(|((kx, x), (ky, y))| kx == ky && deep_equal(*x, *y))
        }
        _ => false,
    }
}

/// Index 0 textual, 1 numeric, 2 boolean/null, 3 structural.
pub fn class_slot(kind: Kind) -> usize {
    match kind {
        Kind::String => 0,
        Kind::Number => 1,
        Kind::Boolean | Kind::Null => 2,
        Kind::Object | Kind::Array => 3,
    }
}

/// O(n²) duplicate count: a value is a duplicate when an earlier value of
/// the same class is deeply equal to it.
pub fn brute_force_duplicates(doc: &Document) -> [usize; 4] {
    let values: Vec<Value<'_>> = doc.values().collect();
    let mut out = [0; 4];
    for (i, value) in values.iter().enumerate() {
        let slot = class_slot(value.kind());
        if values[..i]
            .iter()
            .any(|earlier| class_slot(earlier.kind()) == slot && deep_equal(*earlier, *value))
        {
            out[slot] += 1;
        }
    }
    out
}

/// True when every whitespace byte of `json` sits inside a string literal.
pub fn whitespace_only_in_strings(json: &str) -> bool {
    let mut in_string = false;
    let mut escaped = false;
    for c in json.chars() {
        if in_string {
            match (escaped, c) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => in_string = false,
                _ => {}
            }
        } else if c == '"' {
            in_string = true;
        } else if matches!(c, ' ' | '\t' | '\n' | '\r') {
            return false;
        }
    }
    true
}

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
}

/// Every fixture document, sorted by file name.
pub fn fixtures() -> Vec<(String, PathBuf)> {
    let mut out: Vec<_> = std::fs::read_dir(fixtures_dir())
        .expect("fixtures directory")
        .map(|entry| entry.expect("dir entry").path())
        .filter(|path| path.extension().is_some_and(|ext| ext == "json"))
        .map(|path| {
            (
                path.file_name().unwrap().to_string_lossy().into_owned(),
                path,
            )
        })
        .collect();
    out.sort();
    out
}

pub fn class_slot_of(class: json_taxonomy::ValueClass) -> usize {
    use json_taxonomy::ValueClass;
    match class {
        ValueClass::Textual => 0,
        ValueClass::Numeric => 1,
        ValueClass::Booleanish => 2,
        ValueClass::Structural => 3,
    }
}
