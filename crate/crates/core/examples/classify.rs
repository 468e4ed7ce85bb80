//! Classify a JSON document and print its qualifiers and acronym.
//!
//! ```text
//! cargo run -p json-taxonomy --example classify -- path/to/document.json
//! ```
//!
//! Without an argument a small built-in document is classified.

use json_taxonomy::taxonomy::NO_ACRONYM_STRUCTURAL;

const SAMPLE: &str = r#"{
  "clean": {
    "build": ["dist/", "tmp/"],
    "release": ["dist/"],
    "options": { "force": true, "no-write": false }
  }
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = match std::env::args_os().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };

    let analysis = json_taxonomy::analyze(&input)?;
    for qualifier in analysis.label.qualifiers() {
        println!("{qualifier}");
    }
    let acronym = analysis.label.acronym();
    println!("{}", acronym.as_deref().unwrap_or(NO_ACRONYM_STRUCTURAL));

    let content = &analysis.label.content;
    println!();
    println!("content scores (count x bytes):");
    for class in json_taxonomy::ValueClass::SCALAR {
        println!("  {:<8} {}", class.name(), content.score(class));
    }
    println!(
        "nesting product: height {} x largest level {} = {}",
        analysis.stats.height,
        analysis.stats.largest_level,
        analysis.stats.height * analysis.stats.largest_level
    );
    Ok(())
}
