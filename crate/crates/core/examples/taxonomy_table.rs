//! Print all 36 categories of the taxonomy with their acronyms.
//!
//! ```text
//! cargo run -p json-taxonomy --example taxonomy_table
//! ```

use json_taxonomy::taxonomy::{acronym, Nesting, Redundancy, SizeTier};
use json_taxonomy::ValueClass;

fn main() {
    for tier in SizeTier::ALL {
        println!("{}", tier.qualifier());
        for class in [
            ValueClass::Numeric,
            ValueClass::Textual,
            ValueClass::Booleanish,
        ] {
            for redundancy in Redundancy::ALL {
                for nesting in Nesting::ALL {
                    let code = acronym(tier, class, redundancy, nesting).expect("scalar class");
                    println!(
                        "  {code}  {:<8} {:<14} {}",
                        class.name(),
                        redundancy.qualifier(),
                        nesting.qualifier()
                    );
                }
            }
        }
    }
}
