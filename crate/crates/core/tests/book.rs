//! The guide's chapters must all be compiled as doctests.

use std::fs;

#[test]
fn every_chapter_is_doctested() {
    let summary = fs::read_to_string("../../book/src/SUMMARY.md").unwrap();
    let lib = fs::read_to_string("src/lib.rs").unwrap();
    let chapters: Vec<&str> = summary
        .lines()
        .filter_map(|l| l.split_once("](").map(|(_, rest)| rest.trim_end_matches(')')))
        .collect();
    assert!(chapters.len() >= 8);
    for ch in chapters {
        let include = format!("include_str!(\"../../../book/src/{ch}\")");
        assert!(lib.contains(&include), "{ch} is not included as a doctest");
        assert!(fs::metadata(format!("../../book/src/{ch}")).is_ok(), "{ch} is missing");
    }
}
