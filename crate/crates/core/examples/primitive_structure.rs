//! Computes primitives, decomposables and brackets of the Catalan algebra and
//! compares their dimensions with the series predictions.

use freecofree::hopfstruct::structure_report;
use freecofree::nck::NckAlgebra;

fn main() {
    let h = NckAlgebra::catalan();
    println!(" n    r    p    s  dec core   m    w  bracket  ok");
    for d in structure_report(&h, 5, true) {
        let bracket = d.bracket.map_or("-".to_string(), |b| b.to_string());
        println!(
            "{:>2} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4} {:>4} {:>8}  {}",
            d.degree,
            d.r,
            d.p,
            d.s,
            d.dec,
            d.core,
            d.m,
            d.w,
            bracket,
            d.pass()
        );
    }
}
