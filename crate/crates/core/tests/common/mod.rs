#![allow(dead_code)]

pub mod oracle;

use std::sync::OnceLock;

use chiefblock::group::{direct_product, named_group, wreath_with_c2, FiniteGroup, DEFAULT_ELEMENT_CAP};

pub const CORPUS: [&str; 12] = [
    "V4", "S4", "S5", "A5", "SL23", "SL25", "Q8", "D8", "ES32", "A5xA5", "A5wrC2", "S5wrC2",
];

fn build(name: &str) -> FiniteGroup {
    let cap = DEFAULT_ELEMENT_CAP;
    match name {
        "A5xA5" => {
            let a5 = named_group("A5", cap).unwrap();
            direct_product(&a5, &a5, cap).unwrap()
        }
        "S5wrC2" => wreath_with_c2(&named_group("S5", cap).unwrap(), cap).unwrap(),
        other => named_group(other, cap).unwrap(),
    }
}

/// Corpus groups, built once per test binary.
pub fn corpus_group(name: &str) -> FiniteGroup {
    static CELLS: [OnceLock<FiniteGroup>; 12] = [const { OnceLock::new() }; 12];
    let i = CORPUS.iter().position(|&n| n == name).expect("corpus name");
    CELLS[i].get_or_init(|| build(name)).clone()
}

pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
    CORPUS.iter().map(|&n| (n, corpus_group(n))).collect()
}
