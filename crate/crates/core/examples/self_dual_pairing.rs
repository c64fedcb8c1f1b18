//! Builds a nondegenerate symmetric Hopf pairing on the Catalan algebra and
//! verifies every axiom on basis forests.

use freecofree::nck::NckAlgebra;
use freecofree::pairing::{build_pairing, check_lemma2, verify_hopf_pairing, BaseForm};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = NckAlgebra::catalan();
    let max = 4;
    let st = build_pairing(&h, max, &BaseForm::Identity)?;

    let basis2 = h.basis(2);
    let g2 = st.gram(2)?;
    println!("Gram matrix in degree 2:");
    for (i, f) in basis2.forests.iter().enumerate() {
        let row: Vec<String> = (0..g2.cols()).map(|j| g2.get(i, j).to_string()).collect();
        println!("  {f:<6} [{}]", row.join(", "));
    }

    let report = verify_hopf_pairing(&h, &st);
    println!("\naxioms hold through degree {max}: {}", report.pass);
    for n in 1..=max {
        let l2 = check_lemma2(&h, &st, n)?;
        println!(
            "degree {n}: orthogonal of decomposables has dim {}, primitives dim {}",
            l2.dim_orthogonal, l2.dim_primitives
        );
    }
    Ok(())
}
