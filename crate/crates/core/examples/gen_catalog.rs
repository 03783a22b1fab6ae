//! Rewrites `data/catalog` from the catalog constructions.

use std::path::Path;

use scl_core::pl::catalog::{generate, NAMES};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog");
    for name in NAMES {
        let p = generate(name).unwrap_or_else(|e| panic!("{e}"));
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, p.to_json()).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        println!("{}", path.display());
    }
}
