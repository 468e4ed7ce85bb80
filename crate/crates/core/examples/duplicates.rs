//! List the values that repeat inside a document.
//!
//! Two values are duplicates when their minified forms are byte-identical,
//! so `1.0` and `1` match while `{"a":1,"b":2}` and `{"b":2,"a":1}` do not.
//!
//! ```text
//! cargo run -p json-taxonomy --example duplicates -- path/to/document.json
//! ```

use std::collections::BTreeMap;

use json_taxonomy::{count_duplicates, ValueClass};

const SAMPLE: &str = r#"{
  "slack": { "rooms": ["team:token"], "on_success": "change", "on_failure": "always" },
  "email": { "recipients": ["team:token"], "on_success": "change", "on_failure": "always" },
  "retries": [1.0, 1, 2]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = match std::env::args_os().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let document = json_taxonomy::parse(&input)?;

    let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for value in document.values() {
        groups
            .entry(value.minify())
            .or_default()
            .push(value.index());
    }

    println!("{:>5}  value", "times");
    for (json, positions) in groups.iter().filter(|(_, p)| p.len() > 1) {
        println!("{:>5}  {json}", positions.len());
    }

    let counts = count_duplicates(document.root());
    println!();
    for class in ValueClass::ALL {
        println!("{:<11} {} duplicates", class.name(), counts[class]);
    }
    Ok(())
}
