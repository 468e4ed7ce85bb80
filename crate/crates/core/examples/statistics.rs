//! Print every statistic the classifier works from.
//!
//! ```text
//! cargo run -p json-taxonomy --example statistics -- path/to/document.json
//! ```

use json_taxonomy::report::percent;
use json_taxonomy::{compute_stats, ValueClass};

const SAMPLE: &str = r#"{
  "type": "Feature",
  "geometry": {
    "type": "Polygon",
    "coordinates": [[[100.0, 0.0], [101.0, 0.0], [101.0, 1.0], [100.0, 1.0], [100.0, 0.0]]]
  },
  "properties": { "prop0": "value0", "visible": true }
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let input = match std::env::args_os().nth(1) {
        Some(path) => std::fs::read(path)?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    let document = json_taxonomy::parse(&input)?;
    let stats = compute_stats(document.root());

    println!("minified size     {} bytes", stats.minified_size);
    println!("values            {}", stats.total_values);
    println!("height            {}", stats.height);
    println!(
        "duplicated values {} ({}%)",
        stats.total_duplicates,
        percent(stats.total_duplicates, stats.total_values)
    );
    println!("largest level     {}", stats.largest_level);

    println!();
    println!(
        "{:<11} {:>6} {:>7} {:>11}",
        "class", "count", "bytes", "duplicates"
    );
    for class in ValueClass::ALL {
        let a = stats.per_class[class];
        println!(
            "{:<11} {:>6} {:>7} {:>11}",
            class.name(),
            a.count,
            a.byte_size,
            a.duplicates
        );
    }

    println!();
    println!("{:<6} {:>6} {:>13}", "level", "values", "scalar bytes");
    for row in &stats.per_level {
        let marker = if row.level == stats.largest_level {
            "  <- largest"
        } else {
            ""
        };
        println!(
            "{:<6} {:>6} {:>13}{marker}",
            row.level, row.value_count, row.scalar_byte_size
        );
    }
    Ok(())
}
