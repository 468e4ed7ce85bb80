//! Build the full analysis report and print it as JSON.
//!
//! This is the same document `json-taxonomy --report` prints and
//! `POST /api/analyze` returns.
//!
//! ```text
//! cargo run -p json-taxonomy --example report -- path/to/document.json
//! ```

const SAMPLE: &str = r#"{"name":"demo","private":true,"scripts":{"test":"cargo test"}}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = match std::env::args_os().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let document = json_taxonomy::parse(&input)?;
    let report = json_taxonomy::build_report(document.root());
    println!("{}", json_taxonomy::serialize_report(&report));
    Ok(())
}
