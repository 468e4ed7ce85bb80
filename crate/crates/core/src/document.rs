//! Annotated JSON value tree.
//!
//! A [`Document`] stores its nodes in preorder in a single vector. Every node
//! knows its depth from the root and the UTF-8 byte length of its minified
//! serialization, so statistics never have to re-serialize anything.
//! Traversals are iterative, so arbitrarily deep documents are fine.

use std::fmt;

use crate::number;

/// The six JSON value kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    String,
    Number,
    Boolean,
    Null,
    Object,
    Array,
}

impl Kind {
    pub fn is_composite(self) -> bool {
        matches!(self, Kind::Object | Kind::Array)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::String => "string",
            Kind::Number => "number",
            Kind::Boolean => "boolean",
            Kind::Null => "null",
            Kind::Object => "object",
            Kind::Array => "array",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Payload {
    Null,
    Bool(bool),
    Number(f64),
    String(Box<str>),
    Object,
    Array,
}

impl Payload {
    pub(crate) fn kind(&self) -> Kind {
        match self {
            Payload::Null => Kind::Null,
            Payload::Bool(_) => Kind::Boolean,
            Payload::Number(_) => Kind::Number,
            Payload::String(_) => Kind::String,
            Payload::Object => Kind::Object,
            Payload::Array => Kind::Array,
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Node {
    pub(crate) payload: Payload,
    /// Member name when the parent is an object.
    pub(crate) key: Option<Box<str>>,
    pub(crate) parent: Option<usize>,
    /// One past the last descendant.
    pub(crate) end: usize,
    pub(crate) level: usize,
    pub(crate) size: usize,
}

/// A parsed JSON document.
#[derive(Debug, Clone)]
pub struct Document {
    nodes: Vec<Node>,
}

impl Document {
    /// Builds a document from preorder nodes whose `payload`, `key`, `parent`
    /// and `level` are set; fills in `end` and `size`.
    pub(crate) fn from_preorder(mut nodes: Vec<Node>) -> Self {
        assert!(!nodes.is_empty(), "a document has at least one node");
        let mut child_count = vec![0usize; nodes.len()];
        for node in &mut nodes {
            node.size = match &node.payload {
                Payload::Object | Payload::Array => 2,
                payload => scalar_len(payload),
            };
        }
        for i in (0..nodes.len()).rev() {
            let Some(parent) = nodes[i].parent else {
                nodes[i].end = nodes[i].end.max(i + 1);
                continue;
            };
            let end = nodes[i].end.max(i + 1);
            nodes[i].end = end;
            let mut added = nodes[i].size;
            if let Some(key) = &nodes[i].key {
                added += string_len(key) + 1;
            }
            if child_count[parent] > 0 {
                added += 1;
            }
            child_count[parent] += 1;
            let p = &mut nodes[parent];
            p.size += added;
            p.end = p.end.max(end);
        }
        Document { nodes }
    }

    pub fn root(&self) -> Value<'_> {
        Value {
            doc: self,
            index: 0,
        }
    }

    /// Number of values in the document, root included.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All values in document order (preorder).
    pub fn values(&self) -> impl ExactSizeIterator<Item = Value<'_>> + '_ {
        (0..self.nodes.len()).map(move |index| Value { doc: self, index })
    }

    pub fn minify(&self) -> String {
        self.root().minify()
    }
}

/// A borrowed view of one value inside a [`Document`].
#[derive(Clone, Copy)]
pub struct Value<'a> {
    doc: &'a Document,
    index: usize,
}

impl<'a> Value<'a> {
    fn node(&self) -> &'a Node {
        &self.doc.nodes[self.index]
    }

    pub fn document(&self) -> &'a Document {
        self.doc
    }

    /// Preorder position within the document.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn kind(&self) -> Kind {
        self.node().payload.kind()
    }

    pub fn is_scalar(&self) -> bool {
        !self.kind().is_composite()
    }

    /// Depth from the document root (root = 0).
    pub fn level(&self) -> usize {
        self.node().level
    }

    /// Byte length of this value's minified serialization.
    pub fn serialized_size(&self) -> usize {
        self.node().size
    }

    /// The member name under which this value sits, if its parent is an object.
    pub fn key(&self) -> Option<&'a str> {
        self.node().key.as_deref()
    }

    pub fn parent(&self) -> Option<Value<'a>> {
        self.node().parent.map(|index| Value {
            doc: self.doc,
            index,
        })
    }

    pub fn as_str(&self) -> Option<&'a str> {
        match &self.node().payload {
            Payload::String(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self.node().payload {
            Payload::Number(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self.node().payload {
            Payload::Bool(b) => Some(b),
            _ => None,
        }
    }

    pub fn is_null(&self) -> bool {
        matches!(self.node().payload, Payload::Null)
    }

    /// Direct children in order. Empty for scalars.
    pub fn children(&self) -> Children<'a> {
        Children {
            doc: self.doc,
            next: self.index + 1,
            end: self.node().end,
        }
    }

    /// Object members as `(key, value)` pairs. Empty for anything but objects.
    pub fn entries(&self) -> impl Iterator<Item = (&'a str, Value<'a>)> {
        self.children()
            .filter_map(|child| child.key().map(|k| (k, child)))
    }

    /// This value and all of its descendants, in preorder.
    pub fn descendants(&self) -> impl ExactSizeIterator<Item = Value<'a>> + 'a {
        let doc = self.doc;
        (self.index..self.node().end).map(move |index| Value { doc, index })
    }

    /// Minified byte length of a scalar; `None` for objects and arrays.
    pub fn scalar_size(&self) -> Option<usize> {
        self.is_scalar().then(|| self.node().size)
    }

    /// Minified serialization of this value and its subtree.
    pub fn minify(&self) -> String {
        let mut out = String::with_capacity(self.serialized_size());
        self.write_minified(&mut out);
        out
    }

    pub fn write_minified(&self, out: &mut String) {
        let nodes = &self.doc.nodes;
        let start = self.index;
        // (end of subtree, closing delimiter) for every open composite
        let mut open: Vec<(usize, char)> = Vec::new();
        for (i, node) in nodes.iter().enumerate().take(nodes[start].end).skip(start) {
            while let Some(&(end, closer)) = open.last() {
                if end > i {
                    break;
                }
                out.push(closer);
                open.pop();
            }
            if i != start {
                let parent = node.parent.expect("non-root node has a parent");
                if parent + 1 != i {
                    out.push(',');
                }
                if let Some(key) = &node.key {
                    write_string(out, key);
                    out.push(':');
                }
            }
            match &node.payload {
                Payload::Object => {
                    out.push('{');
                    open.push((node.end, '}'));
                }
                Payload::Array => {
                    out.push('[');
                    open.push((node.end, ']'));
                }
                scalar => write_scalar(out, scalar),
            }
        }
        while let Some((_, closer)) = open.pop() {
            out.push(closer);
        }
    }
}

impl fmt::Debug for Value<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Value")
            .field("index", &self.index)
            .field("kind", &self.kind())
            .field("level", &self.level())
            .field("json", &self.minify())
            .finish()
    }
}

/// Iterator over the direct children of a composite value.
pub struct Children<'a> {
    doc: &'a Document,
    next: usize,
    end: usize,
}

impl<'a> Iterator for Children<'a> {
    type Item = Value<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let value = Value {
            doc: self.doc,
            index: self.next,
        };
        self.next = self.doc.nodes[self.next].end;
        Some(value)
    }
}

/// Minified serialization of a value's subtree.
pub fn minify(value: Value<'_>) -> String {
    value.minify()
}

/// Minified byte length of a scalar value. Returns `None` for objects and arrays.
pub fn scalar_size(value: Value<'_>) -> Option<usize> {
    value.scalar_size()
}

fn scalar_len(payload: &Payload) -> usize {
    match payload {
        Payload::Null => 4,
        Payload::Bool(true) => 4,
        Payload::Bool(false) => 5,
        Payload::Number(n) => number::canonical(*n).len(),
        Payload::String(s) => string_len(s),
        Payload::Object | Payload::Array => unreachable!("not a scalar"),
    }
}

fn write_scalar(out: &mut String, payload: &Payload) {
    match payload {
        Payload::Null => out.push_str("null"),
        Payload::Bool(true) => out.push_str("true"),
        Payload::Bool(false) => out.push_str("false"),
        Payload::Number(n) => number::write_canonical(out, *n),
        Payload::String(s) => write_string(out, s),
        Payload::Object | Payload::Array => unreachable!("not a scalar"),
    }
}

/// Serialized length of a string including quotes and escapes.
pub(crate) fn string_len(s: &str) -> usize {
    2 + s
        .chars()
        .map(|c| match c {
            '"' | '\\' | '\u{08}' | '\u{0C}' | '\n' | '\r' | '\t' => 2,
            c if (c as u32) < 0x20 => 6,
            c => c.len_utf8(),
        })
        .sum::<usize>()
}

/// Writes `s` as a JSON string literal, escaping only quote, backslash and
/// control characters.
pub(crate) fn write_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\u{08}' => out.push_str("\\b"),
            '\u{0C}' => out.push_str("\\f"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                use std::fmt::Write;
                write!(out, "\\u{:04x}", c as u32).expect("writing to a String cannot fail");
            }
            c => out.push(c),
        }
    }
    out.push('"');
}
