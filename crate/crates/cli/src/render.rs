//! Text-mode formatting: polynomials in descending powers of λ, cells in
//! brace notation, and column-aligned matrices.

use morseforest::{Cell, IntegerMatrix};

/// Renders ascending decimal coefficients as a polynomial in descending
/// powers of λ. The zero polynomial renders as "0".
pub fn poly_text(coeffs: &[String]) -> String {
    let terms: Vec<(usize, &str)> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(i, c)| (i, c.as_str()))
        .collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, &(power, coeff)) in terms.iter().enumerate() {
        let negative = coeff.starts_with('-');
        let magnitude = if negative { &coeff[1..] } else { coeff };
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if power == 0 {
            out.push_str(magnitude);
        } else {
            if magnitude != "1" {
                out.push_str(magnitude);
            }
            out.push('λ');
            if power > 1 {
                out.push('^');
                out.push_str(&power.to_string());
            }
        }
    }
    out
}

/// A cell list as "{0,1} {1,2}", or "(none)" when empty.
pub fn cells_text(cells: &[Cell]) -> String {
    if cells.is_empty() {
        return "(none)".to_string();
    }
    cells
        .iter()
        .map(Cell::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Column-aligned matrix rows, each prefixed by its row label.
pub fn matrix_lines(m: &IntegerMatrix, labels: &[Cell]) -> Vec<String> {
    let entries = m.entry_strings();
    let mut widths = vec![0usize; m.cols()];
    for row in &entries {
        for (j, s) in row.iter().enumerate() {
            widths[j] = widths[j].max(s.len());
        }
    }
    let label_width = labels.iter().map(|c| c.to_string().len()).max().unwrap_or(0);
    entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let label = labels
                .get(i)
                .map(Cell::to_string)
                .unwrap_or_else(|| i.to_string());
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, s)| format!("{s:>width$}", width = widths[j]))
                .collect();
            format!("{label:>label_width$} | {}", cells.join(" "))
        })
        .collect()
}
