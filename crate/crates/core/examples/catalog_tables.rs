//! Prints the `s` and `d` tables for the built-in catalogue of algebras.

use freecofree::cli::catalog::{catalog, table_csv, TableKind, CATALOG_ORDER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in catalog() {
        let tag = if entry.reconstructed {
            " (reconstructed)"
        } else {
            ""
        };
        println!("{}{}: {}", entry.name, tag, entry.source);
    }
    println!();
    print!("{}", table_csv(TableKind::S, CATALOG_ORDER)?);
    println!();
    print!("{}", table_csv(TableKind::D, CATALOG_ORDER)?);
    Ok(())
}
