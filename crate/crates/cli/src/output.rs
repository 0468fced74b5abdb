//! JSON row types and text rendering for each subcommand.

use kacpoly::closedform::RhoPolynomial;
use kacpoly::hua::RefinedTable;
use kacpoly::{BigRat, Partition, QPoly, QRational, Result};
use serde::Serialize;

fn strings(coeffs: &[BigRat]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

fn poly_strings(p: &QPoly) -> Vec<String> {
    if p.is_zero() {
        vec!["0".into()]
    } else {
        strings(p.coeffs())
    }
}

#[derive(Serialize)]
pub struct TableRow {
    pub lambda: String,
    /// Numerator coefficients, ascending in `q`.
    #[serde(rename = "A_coeffs")]
    pub a_coeffs: Vec<String>,
    /// Denominator coefficients; `["1"]` for polynomials.
    pub denominator: Vec<String>,
    pub polynomial: bool,
    pub nonnegative: bool,
    pub at_one_series: String,
    /// `null` at `g = 1`, where the closed formula does not apply.
    pub at_one_closed: Option<String>,
}

#[derive(Serialize)]
pub struct TotalRow {
    pub n: u32,
    #[serde(rename = "A_coeffs")]
    pub a_coeffs: Vec<String>,
    pub denominator: Vec<String>,
}

#[derive(Serialize)]
pub struct TableOutput {
    pub g: u32,
    pub nmax: u32,
    pub rows: Vec<TableRow>,
    pub totals: Vec<TotalRow>,
}

impl TableOutput {
    pub fn build(table: &RefinedTable) -> Result<Self> {
        let g = table.g;
        let mut rows = Vec::new();
        for entry in table.entries() {
            let closed =
                if g >= 2 { Some(kacpoly::closedform::a_one(2 * g - 2, &entry.partition)?.to_string()) } else { None };
            rows.push(TableRow {
                lambda: entry.partition.to_string(),
                a_coeffs: poly_strings(entry.value.num()),
                denominator: poly_strings(entry.value.den()),
                polynomial: entry.is_polynomial(),
                nonnegative: entry.is_nonnegative(),
                at_one_series: entry.at_one()?.to_string(),
                at_one_closed: closed,
            });
        }
        let totals = (1..=table.bound)
            .map(|n| {
                let v = table.total(n).cloned().unwrap_or_else(QRational::zero);
                TotalRow { n, a_coeffs: poly_strings(v.num()), denominator: poly_strings(v.den()) }
            })
            .collect();
        Ok(TableOutput { g, nmax: table.bound, rows, totals })
    }

    pub fn render_text(&self, table: &RefinedTable) -> String {
        let mut out = format!("# g = {}, |λ| <= {}\n", self.g, self.nmax);
        for entry in table.entries() {
            out += &format!("A_({})(q) = {}\n", entry.partition, entry.value.render("q"));
        }
        for n in 1..=table.bound {
            if let Some(v) = table.total(n) {
                out += &format!("A_{n}(q) = {}\n", v.render("q"));
            }
        }
        out += "\n";
        let header = ["λ", "polynomial", "nonnegative", "A(1) series", "A(1) closed form"];
        let mut lines = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
        let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
        for row in &self.rows {
            lines.push(vec![
                format!("({})", row.lambda),
                yes_no(row.polynomial),
                yes_no(row.nonnegative),
                row.at_one_series.clone(),
                row.at_one_closed.clone().unwrap_or_else(|| "n/a".into()),
            ]);
        }
        let widths: Vec<usize> =
            (0..header.len()).map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0)).collect();
        for line in lines {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            out += cells.join("  ").trim_end();
            out += "\n";
        }
        out
    }
}

#[derive(Serialize)]
pub struct ClosedFormValue {
    pub lambda: String,
    pub rho: u32,
    pub value: String,
}

#[derive(Serialize)]
pub struct ClosedFormSymbolic {
    pub lambda: String,
    /// Coefficients in `ρ`, ascending.
    pub rho_poly: Vec<String>,
}

impl ClosedFormSymbolic {
    pub fn new(lambda: &Partition, poly: &RhoPolynomial) -> Self {
        let coeffs = if poly.coeffs().is_empty() { vec!["0".into()] } else { strings(poly.coeffs()) };
        ClosedFormSymbolic { lambda: lambda.to_string(), rho_poly: coeffs }
    }
}
