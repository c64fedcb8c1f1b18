//! Exact rational linear algebra: determinants, inverses and subspace
//! arithmetic on canonical echelon bases.

use freecofree::exactla::{kernel_basis, span_ops, RationalMatrix, Subspace};
use freecofree::ratseries::Rational;

fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = RationalMatrix::from_integer_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
    println!("det = {}", m.determinant()?);
    let inv = m.inverse()?;
    println!(
        "inverse row 0 = {:?}",
        inv.row(0).iter().map(|q| q.to_string()).collect::<Vec<_>>()
    );

    let a = Subspace::span(4, ints(&[&[1, 1, 0, 0], &[0, 1, 1, 0]]));
    let b = Subspace::span(4, ints(&[&[1, 2, 1, 0], &[0, 0, 0, 1]]));
    let ops = span_ops(&a, &b)?;
    println!("dim A = {}, dim B = {}", a.dim(), b.dim());
    println!(
        "dim A+B = {}, dim A∩B = {}, complement of A in A+B has dim {}",
        ops.sum.dim(),
        ops.intersection.dim(),
        ops.complement_of_a_in_sum.dim()
    );

    let k = kernel_basis(&RationalMatrix::from_integer_rows(&[
        &[1, 2, 3],
        &[2, 4, 6],
    ]));
    println!("kernel of a rank-one 2x3 matrix has dim {}", k.dim());
    Ok(())
}
