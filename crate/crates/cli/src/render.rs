//! Plain-text rendering of tables, systems and matrices.

use std::fmt::Display;

use centraliser::{CoeffMatrix, EntrySelector, IntMatrix, MultiIndex, Permutation, Subsystem};

pub fn paren(x: impl Display) -> String {
    format!("({x})")
}

/// A multi-index as a subscript: bare for `r = 1`, parenthesised otherwise.
pub fn subscript(j: &MultiIndex) -> String {
    if j.r() == 1 {
        j.to_string()
    } else {
        paren(j)
    }
}

pub fn entry_name(sel: &EntrySelector) -> String {
    format!("X_{{{},{}}}", subscript(&sel.row), subscript(&sel.col))
}

pub fn coeff_name(p: &Permutation) -> String {
    format!("c{}", paren(p))
}

/// Labelled rows; cells padded to their column width, columns separated by
/// two spaces, trailing blanks trimmed.
pub fn table(rows: &[(&str, Vec<String>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let columns = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|k| rows.iter().filter_map(|(_, c)| c.get(k)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (label, cells) in rows {
        let mut line = format!("{label:label_width$} |");
        for (cell, width) in cells.iter().zip(&widths) {
            line.push(' ');
            line.push_str(&format!("{cell:width$} "));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// One equation per selector: the basis elements it picks out on the left.
pub fn system(sys: &Subsystem) -> String {
    let mut out = String::new();
    for (row, sel) in sys.selectors.iter().enumerate() {
        let lhs: Vec<String> = sys.matrix.row_support(row).iter().map(|&k| coeff_name(&sys.basis[k])).collect();
        out.push_str(&format!("{} = {}\n", lhs.join(" + "), entry_name(sel)));
    }
    out
}

/// Upper triangular 0/1 matrix: blanks below the diagonal, `.` for zeros above.
pub fn unitriangular(a: &CoeffMatrix) -> String {
    let size = a.size();
    let mut out = String::new();
    for row in 0..size {
        let cells: Vec<&str> = (0..size)
            .map(|col| match (col < row, a.get(row, col)) {
                (true, _) => " ",
                (false, 0) => ".",
                (false, _) => "1",
            })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Integer matrix with right-aligned columns.
pub fn int_matrix(m: &IntMatrix) -> String {
    let cells: Vec<Vec<String>> = m.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// `c(p) = ± X_{..} ± ...` read off the rows of `A⁻¹`.
pub fn solution(sys: &Subsystem, inverse: &IntMatrix) -> String {
    let mut out = String::new();
    for (k, p) in sys.basis.iter().enumerate() {
        let mut rhs = String::new();
        for (v, sel) in inverse.rows[k].iter().zip(&sys.selectors) {
            let v = v.to_string();
            if v == "0" {
                continue;
            }
            let (negative, magnitude) = match v.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, v),
            };
            let term = if magnitude == "1" {
                entry_name(sel)
            } else {
                format!("{magnitude} {}", entry_name(sel))
            };
            match (rhs.is_empty(), negative) {
                (true, false) => rhs.push_str(&term),
                (true, true) => rhs.push_str(&format!("-{term}")),
                (false, false) => rhs.push_str(&format!(" + {term}")),
                (false, true) => rhs.push_str(&format!(" - {term}")),
            }
        }
        if rhs.is_empty() {
            rhs.push('0');
        }
        out.push_str(&format!("{} = {rhs}\n", coeff_name(p)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_trims_and_aligns() {
        let t = table(&[("ab", vec!["x".into(), "yyy".into()]), ("c", vec!["zz".into(), "w".into()])]);
        assert_eq!(t, "ab | x   yyy\nc  | zz  w\n");
    }

    #[test]
    fn subscripts() {
        assert_eq!(subscript(&MultiIndex::parse("3", 3).unwrap()), "3");
        assert_eq!(subscript(&MultiIndex::parse("1,2", 3).unwrap()), "(1,2)");
    }

    #[test]
    fn matrix_layout() {
        let a = CoeffMatrix::from_dense(&[vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(unitriangular(&a), "1 1\n  1\n");
    }
}
