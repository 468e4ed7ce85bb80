//! Minify a document and show where its bytes go.
//!
//! ```text
//! cargo run -p json-taxonomy --example minify -- path/to/document.json
//! ```

use json_taxonomy::Kind;

const SAMPLE: &str = r#"{
    "version" : 2.10,
    "price"   : 1e3,
    "label"   : "café",
    "tags"    : [ "a" , "b" ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = match std::env::args_os().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let document = json_taxonomy::parse(&input)?;
    let minified = document.minify();

    println!("{minified}");
    println!();
    println!(
        "original: {} bytes, minified: {} bytes",
        input.len(),
        minified.len()
    );
    println!();
    println!("{:>6} {:>5}  {:<8} value", "bytes", "level", "kind");
    for value in document.values().take(40) {
        let shown = match value.kind() {
            Kind::Object | Kind::Array => format!("({} children)", value.children().count()),
            _ => value.minify(),
        };
        let indent = "  ".repeat(value.level());
        let key = value.key().map(|k| format!("{k}: ")).unwrap_or_default();
        println!(
            "{:>6} {:>5}  {:<8} {indent}{key}{shown}",
            value.serialized_size(),
            value.level(),
            value.kind().to_string()
        );
    }
    if document.len() > 40 {
        println!("... {} more values", document.len() - 40);
    }
    Ok(())
}
