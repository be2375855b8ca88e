//! Builds every group and resolves every maximal subgroup of a catalog
//! file, printing orders and timings.
//!
//! Usage: `cargo run --example check_catalog -- [CATALOG]`

use std::time::Instant;

use probgen::catalog::Catalog;

fn main() {
    let catalog = match std::env::args().nth(1) {
        Some(path) => Catalog::parse(&std::fs::read_to_string(path).expect("catalog file")).expect("catalog parses"),
        None => Catalog::bundled(),
    };
    for entry in catalog.entries() {
        let start = Instant::now();
        let group = entry.group().expect("group builds");
        let maxes = entry.maxes().expect("maxes resolve");
        let orders: Vec<String> = maxes.iter().map(|m| m.order().to_string()).collect();
        println!(
            "{}: degree {}, order {}, maxes [{}] ({:.2?})",
            entry.name,
            group.degree(),
            group.order(),
            orders.join(", "),
            start.elapsed()
        );
    }
}
