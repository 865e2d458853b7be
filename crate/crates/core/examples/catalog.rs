// Enumerate and classify every signature within small bounds.

use std::error::Error;

use orbifold::{build_catalog, CatalogBounds};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let bounds = CatalogBounds {
        max_genus: 1,
        max_cones: 2,
        max_order: 3,
        max_boundary: 1,
        max_corners_per_circle: 2,
        max_corner_order: 3,
        ..Default::default()
    };
    let catalog = build_catalog(&bounds);
    for r in catalog.records().filter(|r| !r.good) {
        println!("bad: {} (euler {})", r.sig, r.euler);
    }
    let s = catalog.summary;
    println!(
        "total {} good {} bad {} finite {} infinite {}",
        s.total, s.good, s.bad, s.finite, s.infinite
    );
    assert!(catalog.violations.is_empty());
    let mut jsonl = Vec::new();
    catalog.write_jsonl(&mut jsonl)?;
    assert_eq!(String::from_utf8(jsonl)?.lines().count(), s.total);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("catalog example");
}
