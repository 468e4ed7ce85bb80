mod common;

use json_taxonomy::analyze;

const EXPECTED: [(&str, Option<&str>); 20] = [
    ("circleci-matrix.json", Some("TNNN")),
    ("deep-structural.json", None),
    ("duplicate-keys.json", Some("TTNF")),
    ("empty-array.json", None),
    ("empty-object.json", None),
    ("entry-point-regulation.json", Some("STRN")),
    ("eslintrc.json", Some("LNRF")),
    ("geojson-polygon.json", Some("SNRN")),
    ("github-funding-empty.json", Some("SBRF")),
    ("grunt-clean.json", Some("TTRF")),
    ("json-resume.json", Some("LTNN")),
    ("mixed-tie.json", Some("TTNF")),
    ("nightwatch.json", Some("LBRF")),
    ("npm-package.json", Some("LTNF")),
    ("numeric-series.json", Some("TNRF")),
    ("scalar-number.json", Some("TNNF")),
    ("sensor-readings.json", Some("LNRN")),
    ("travis-notifications.json", Some("STRF")),
    ("tslint-basic.json", Some("TBNN")),
    ("unicode-strings.json", Some("STNF")),
];

fn load(name: &str) -> json_taxonomy::Analysis {
    let bytes = std::fs::read(common::fixtures_dir().join(name)).unwrap();
    analyze(bytes).unwrap()
}

#[test]
fn every_fixture_has_its_category() {
    let names: Vec<String> = common::fixtures()
        .into_iter()
        .map(|(name, _)| name)
        .collect();
    assert_eq!(names, EXPECTED.map(|(name, _)| name.to_string()));
    for (name, acronym) in EXPECTED {
        assert_eq!(load(name).label.acronym().as_deref(), acronym, "{name}");
    }
}

#[test]
fn three_way_tie_lists_every_scalar_class() {
    let qualifiers = load("mixed-tie.json").label.qualifiers();
    assert_eq!(qualifiers[1..4], ["textual", "numeric", "boolean"]);
}

#[test]
fn deep_structural_document_is_nested() {
    let analysis = load("deep-structural.json");
    assert!(analysis.stats.height >= 5);
    assert_eq!(analysis.label.qualifiers().last().unwrap(), "nested");
}

#[test]
fn grunt_statistics() {
    let s = load("grunt-clean.json").stats;
    assert_eq!(
        (
            s.total_values,
            s.height,
            s.total_duplicates,
            s.largest_level
        ),
        (10, 3, 3, 2)
    );
}

#[test]
fn entry_point_statistics() {
    let report = load("entry-point-regulation.json").report();
    assert_eq!(report.summary.total_values, 32);
    assert_eq!(report.summary.duplicated_values, 10);
    let percents: Vec<f64> = report
        .by_class
        .iter()
        .map(|row| row.duplicate_percent)
        .collect();
    // 4 of 32 textual, 3 of 32 boolean, 3 of 32 structural; each rounded on its own
    assert_eq!(percents, [12.5, 0.0, 9.38, 9.38]);
}

#[test]
fn repeated_keys_keep_the_last_value() {
    let analysis = load("duplicate-keys.json");
    let minified = analysis.document.minify();
    let reparsed = analyze(&minified).unwrap();
    assert_eq!(reparsed.document.minify(), minified);
    let root = analysis.document.root();
    let keys: Vec<&str> = root.entries().map(|(key, _)| key).collect();
    let mut unique = keys.clone();
    unique.sort();
    unique.dedup();
    assert_eq!(keys.len(), unique.len());
}
