//! Show how malformed input is reported.
//!
//! ```text
//! cargo run -p json-taxonomy --example parse_errors
//! ```

const BROKEN: &[&str] = &[
    r#"{"a":"#,
    "[1, 2,]",
    "{\n  \"name\": \"x\",\n  \"list\": [tru]\n}",
    r#"{"value": 1e400}"#,
    r#""\ud800""#,
];

fn main() {
    for text in BROKEN {
        match json_taxonomy::parse(text) {
            Ok(_) => println!("{text:?} parsed"),
            Err(failure) => println!(
                "{:<40} line {} column {}: {}",
                format!("{text:?}"),
                failure.line,
                failure.column,
                failure.message
            ),
        }
    }

    let invalid_utf8 = b"[\"caf\xe9\"]";
    if let Err(failure) = json_taxonomy::parse(invalid_utf8) {
        println!(
            "{:<40} line {} column {}: {}",
            "latin-1 bytes", failure.line, failure.column, failure.message
        );
    }
}
