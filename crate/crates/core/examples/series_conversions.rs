//! Converts the Catalan dimension series of the planar rooted forest algebra
//! into its primitive, indecomposable and decoration series, and back.

use freecofree::ratseries::{
    d_from_r, format_rational, p_from_r, r_from_d, r_from_s, s_from_r, SeriesKind, SeriesProfile,
};

fn show(name: &str, p: &SeriesProfile) {
    let text: Vec<String> = p.coeffs().iter().map(format_rational).collect();
    println!("{name:>2} = {}", text.join(", "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let catalan = [1, 2, 5, 14, 42, 132, 429, 1430];
    let r = SeriesProfile::from_integers(SeriesKind::R, &catalan)?;
    show("r", &r);
    show("p", &p_from_r(&r)?);
    let s = s_from_r(&r)?;
    show("s", &s);
    let d = d_from_r(&r)?;
    show("d", &d);

    let back = r_from_s(&s)?;
    assert!(back.is_integral());
    assert_eq!(back.series, r);
    assert_eq!(r_from_d(&d)?, r);
    println!("round trips through s and d recover r");
    Ok(())
}
