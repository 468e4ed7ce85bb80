//! Hash-consing of subtrees.
//!
//! Every value gets an integer id such that two values share an id exactly
//! when their minified serializations are equal. Ids are assigned bottom-up:
//! a composite's signature is its kind plus the ids of its member names and
//! children, so each node is hashed once and nothing is re-serialized.

use std::collections::HashMap;

use crate::document::{Kind, Value};

#[derive(Hash, PartialEq, Eq)]
enum Signature<'a> {
    Null,
    Bool(bool),
    /// Canonical rendering is injective on finite binary64 values apart from
    /// the two zeros, which both render as `0`, so normalized bits suffice.
    Number(u64),
    String(&'a str),
    Array(Vec<u32>),
    /// `(member name id, child id)` pairs in document order.
    Object(Vec<(u32, u32)>),
}

pub(crate) struct Interned {
    /// Id of every value in the subtree, in preorder.
    pub(crate) ids: Vec<u32>,
    pub(crate) distinct: usize,
}

pub(crate) fn intern_subtree(root: Value<'_>) -> Interned {
    let start = root.index();
    let values: Vec<Value<'_>> = root.descendants().collect();
    let mut ids = vec![0u32; values.len()];
    let mut table: HashMap<Signature<'_>, u32> = HashMap::new();
    let mut names: HashMap<&str, u32> = HashMap::new();

    for (offset, value) in values.iter().enumerate().rev() {
        let signature = match value.kind() {
            Kind::Null => Signature::Null,
            Kind::Boolean => Signature::Bool(value.as_bool().expect("boolean")),
            Kind::Number => {
                let n = value.as_f64().expect("number");
                Signature::Number(if n == 0.0 { 0 } else { n.to_bits() })
            }
            Kind::String => Signature::String(value.as_str().expect("string")),
            Kind::Array => {
                Signature::Array(value.children().map(|c| ids[c.index() - start]).collect())
            }
            Kind::Object => Signature::Object(
                value
                    .children()
                    .map(|c| {
                        let name = c.key().expect("object member has a key");
                        let next = names.len() as u32;
                        (*names.entry(name).or_insert(next), ids[c.index() - start])
                    })
                    .collect(),
            ),
        };
        let next = table.len() as u32;
        ids[offset] = *table.entry(signature).or_insert(next);
    }

    Interned {
        ids,
        distinct: table.len(),
    }
}
