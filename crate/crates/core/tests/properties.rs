mod common;

use json_taxonomy::report::parse_report;
use json_taxonomy::taxonomy::{classify_redundancy, classify_size, Redundancy};
use json_taxonomy::{
    analyze, build_report, compute_stats, parse, serialize_report, value_equals, Kind,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn value_equals_agrees_with_deep_equality(tree in common::document(40)) {
        let doc = parse(tree.render()).unwrap();
        let values: Vec<_> = doc.values().collect();
        for a in &values {
            for b in &values {
                prop_assert_eq!(value_equals(*a, *b), common::deep_equal(*a, *b));
            }
        }
    }

    #[test]
    fn minified_output_is_standard_json(tree in common::document(50)) {
        let doc = parse(tree.render()).unwrap();
        let out = doc.minify();
        prop_assert!(serde_json::from_str::<serde_json::Value>(&out).is_ok(), "{}", out);
    }

    #[test]
    fn whitespace_does_not_change_the_analysis(tree in common::document(50)) {
        let text = tree.render();
        let original = analyze(&text).unwrap();
        let minified = analyze(original.document.minify()).unwrap();
        prop_assert_eq!(original.report(), minified.report());
    }

    #[test]
    fn composite_sizes_add_up(tree in common::document(50)) {
        let doc = parse(tree.render()).unwrap();
        for value in doc.values() {
            let expected = match value.kind() {
                Kind::Array => {
                    let n = value.children().count();
                    2 + n.saturating_sub(1) + value.children().map(|c| c.serialized_size()).sum::<usize>()
                }
                Kind::Object => {
                    let n = value.children().count();
                    let members: usize = value
                        .entries()
                        .map(|(key, child)| parse(serde_json::to_string(key).unwrap()).unwrap().root().serialized_size() + 1 + child.serialized_size())
                        .sum();
                    2 + n.saturating_sub(1) + members
                }
                _ => value.minify().len(),
            };
            prop_assert_eq!(value.serialized_size(), expected);
        }
    }

    #[test]
    fn levels_follow_parents(tree in common::document(50)) {
        let doc = parse(tree.render()).unwrap();
        let stats = compute_stats(doc.root());
        for value in doc.values() {
            match value.parent() {
                Some(parent) => prop_assert_eq!(value.level(), parent.level() + 1),
                None => prop_assert_eq!(value.level(), 0),
            }
            prop_assert!(value.level() <= stats.height);
        }
        prop_assert!(stats.largest_level <= stats.height);
        let levels: Vec<usize> = stats.per_level.iter().map(|row| row.level).collect();
        prop_assert_eq!(levels, (1..=stats.height).collect::<Vec<_>>());
        if let Some(row) = stats.per_level.iter().find(|row| row.level == stats.largest_level) {
            prop_assert!(stats.per_level.iter().all(|other| other.scalar_byte_size <= row.scalar_byte_size));
        }
    }

    #[test]
    fn subtree_statistics_are_self_consistent(tree in common::document(50)) {
        let doc = parse(tree.render()).unwrap();
        for value in doc.values() {
            let stats = compute_stats(value);
            prop_assert_eq!(stats.minified_size, value.serialized_size());
            prop_assert_eq!(stats.total_values, value.descendants().len());
            let bytes: usize = stats.per_class.iter().map(|(_, a)| a.byte_size).sum();
            prop_assert_eq!(bytes, stats.minified_size);
        }
    }

    #[test]
    fn report_survives_a_json_round_trip(tree in common::document(50)) {
        let doc = parse(tree.render()).unwrap();
        let report = build_report(doc.root());
        let text = serialize_report(&report);
        prop_assert_eq!(parse_report(&text).unwrap(), report);
    }

    #[test]
    fn tiers_are_monotone(a in 0usize..5000, b in 0usize..5000) {
        let (small, large) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(classify_size(small) <= classify_size(large));
    }

    #[test]
    fn redundancy_is_monotone_in_duplicates(total in 1usize..10_000, dups in 0usize..10_000) {
        let dups = dups % total;
        if classify_redundancy(dups, total) == Redundancy::Redundant {
            prop_assert_eq!(classify_redundancy(dups + 1, total), Redundancy::Redundant);
        }
        prop_assert_eq!(classify_redundancy(dups, total) == Redundancy::Redundant, dups * 4 >= total);
    }
}
