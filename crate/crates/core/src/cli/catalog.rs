//! Bundled dimension sequences of well-known combinatorial Hopf algebras.

use serde::Serialize;

use crate::ratseries::{d_from_r, s_from_r, SeriesError, SeriesKind, SeriesProfile};

/// Number of tabulated degrees.
pub const CATALOG_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgebraCatalogEntry {
    pub name: &'static str,
    /// `r_1..r_8`.
    pub r_coeffs: Vec<i64>,
    pub source: &'static str,
    pub reconstructed: bool,
}

impl AlgebraCatalogEntry {
    pub fn r_profile(&self) -> SeriesProfile {
        SeriesProfile::from_integers(SeriesKind::R, &self.r_coeffs)
            .expect("catalog rows are nonempty")
    }
}

fn catalan(n: usize) -> i64 {
    let mut c = 1i64;
    for k in 0..n as i64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Ordered Bell numbers by `a(n) = Σ_{k=1..n} C(n, k) a(n − k)`.
fn ordered_bell(count: usize) -> Vec<i64> {
    let mut a = vec![1i64];
    for n in 1..=count {
        let mut binom = 1i64;
        let mut total = 0;
        for k in 1..=n {
            binom = binom * (n - k + 1) as i64 / k as i64;
            total += binom * a[n - k];
        }
        a.push(total);
    }
    a[1..].to_vec()
}

fn seq(f: impl Fn(usize) -> i64) -> Vec<i64> {
    (1..=CATALOG_ORDER).map(f).collect()
}

/// Catalog rows in table order.
pub fn catalog() -> Vec<AlgebraCatalogEntry> {
    vec![
        AlgebraCatalogEntry {
            name: "H_NCK",
            r_coeffs: seq(catalan),
            source: "Catalan numbers (also H_LR and YSym); s_1..s_3 = 1,1,1 matches",
            reconstructed: false,
        },
        AlgebraCatalogEntry {
            name: "2-As(1)",
            r_coeffs: vec![1, 2, 6, 22, 90, 394, 1806, 8558],
            source: "reconstructed by r_from_s from the tabulated s-row 1,1,2,8,31,141,642,3070",
            reconstructed: true,
        },
        AlgebraCatalogEntry {
            name: "FQSym",
            r_coeffs: seq(factorial),
            source: "n! (also H_ho); s_1..s_3 = 1,1,2 matches",
            reconstructed: false,
        },
        AlgebraCatalogEntry {
            name: "NCQSym",
            r_coeffs: ordered_bell(CATALOG_ORDER),
            source: "ordered Bell numbers (set compositions, also PPi); s_1..s_3 = 1,2,6 matches",
            reconstructed: false,
        },
        AlgebraCatalogEntry {
            name: "PQSym",
            r_coeffs: seq(|n| (n as i64 + 1).pow(n as u32 - 1)),
            source: "(n+1)^(n-1) parking functions (also H_o); s_1..s_3 = 1,2,9 matches",
            reconstructed: false,
        },
        AlgebraCatalogEntry {
            name: "H_UBP",
            r_coeffs: vec![1, 3, 16, 131, 1496, 22482, 426833, 9934563],
            source: "reconstructed by r_from_s from the tabulated s-row 1,2,9,86,1083,17621,353420,8553300",
            reconstructed: true,
        },
        AlgebraCatalogEntry {
            name: "H_DP",
            r_coeffs: vec![1, 3, 19, 219, 4231, 130023, 6129859, 431723379],
            source: "reconstructed by r_from_s from the tabulated s-row 1,2,12,165,3545,116621,5722481,412795614",
            reconstructed: true,
        },
        AlgebraCatalogEntry {
            name: "RPi",
            r_coeffs: seq(|n| factorial(n).pow(2)),
            source: "(n!)^2 (also SPi); s_1..s_3 = 1,3,26 matches",
            reconstructed: false,
        },
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    S,
    D,
}

/// One row per catalog entry: `(name, values n = 1..=max)`.
pub fn table(which: TableKind, max: usize) -> Result<Vec<(String, Vec<String>)>, SeriesError> {
    if max == 0 {
        return Err(SeriesError::EmptyProfile);
    }
    let mut rows = Vec::new();
    for e in catalog() {
        let r = e.r_profile().truncate(max)?;
        let values = match which {
            TableKind::S => s_from_r(&r)?,
            TableKind::D => d_from_r(&r)?,
        };
        rows.push((
            e.name.to_string(),
            values.coeffs().iter().map(ToString::to_string).collect(),
        ));
    }
    Ok(rows)
}

/// CSV with header `name,n1,...,nmax`.
pub fn table_csv(which: TableKind, max: usize) -> Result<String, SeriesError> {
    let rows = table(which, max)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["name".to_string()];
    header.extend((1..=max).map(|n| format!("n{n}")));
    w.write_record(&header).expect("writing to memory");
    for (name, values) in rows {
        let mut rec = vec![name];
        rec.extend(values);
        w.write_record(&rec).expect("writing to memory");
    }
    Ok(String::from_utf8(w.into_inner().expect("writing to memory")).expect("ASCII output"))
}
