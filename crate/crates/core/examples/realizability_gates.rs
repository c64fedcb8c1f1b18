//! Runs both realizability gates on a few dimension sequences.

use freecofree::ratseries::{
    format_rational, gate_free_cofree, gate_nck, GateVerdict, SeriesKind, SeriesProfile,
};

fn describe(v: &GateVerdict) -> String {
    match (&v.first_failure, &v.witness) {
        (Some(n), Some(w)) => format!("fails at n = {n} (value {})", format_rational(w)),
        _ => "passes".to_string(),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(&str, &[i64]); 4] = [
        ("catalan", &[1, 2, 5, 14, 42, 132]),
        ("factorial", &[1, 2, 6, 24, 120, 720]),
        ("1, 2, 4", &[1, 2, 4]),
        ("powers of 2", &[1, 2, 4, 8, 16, 32]),
    ];
    for (name, r) in cases {
        let r = SeriesProfile::from_integers(SeriesKind::R, r)?;
        let (fc, _) = gate_free_cofree(&r)?;
        let (nck, _) = gate_nck(&r)?;
        println!(
            "{name:<12} free-cofree: {:<28} tree-realizable: {}",
            describe(&fc),
            describe(&nck)
        );
    }
    Ok(())
}
