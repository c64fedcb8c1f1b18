//! Parses a few planar forests and prints their admissible-cut coproducts.

use freecofree::nck::{coproduct, DecorationSet, NckAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let decorations =
        DecorationSet::from_json(r#"[{"label":"a","degree":1},{"label":"b","degree":2}]"#)?;
    let h = NckAlgebra::new(decorations);
    for n in 1..=4 {
        println!("dim H_{n} = {}", h.dim(n));
    }
    for text in ["a[a]", "a[a b]", "a[b[a]] a"] {
        let f = h.parse_forest(text)?;
        println!("\nΔ({f})   (degree {})", h.degree(&f)?);
        for ((left, right), mult) in coproduct(&f) {
            let m = if mult == 1 {
                String::new()
            } else {
                format!("{mult} ")
            };
            println!("  + {m}{left} ⊗ {right}");
        }
    }
    Ok(())
}
