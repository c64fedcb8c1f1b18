//! Replaces the chosen complement in each degree so that the Gram matrix
//! takes its block form, and prints the block sizes.

use freecofree::nck::NckAlgebra;
use freecofree::pairing::{adapt_complement, build_pairing, BaseForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = NckAlgebra::catalan();
    let max = 4;
    let st = build_pairing(&h, max, &BaseForm::Identity)?;
    println!(" n  core    m    h    w  complement  block form");
    for n in 1..=max {
        let s = adapt_complement(&st, n)?.summary;
        println!(
            "{:>2} {:>5} {:>4} {:>4} {:>4}  {:>10}  {:>10}",
            s.degree, s.core, s.m, s.h, s.w, s.complement, s.block_form
        );
    }
    Ok(())
}
