//! Matrix output formats.
//!
//! JSON is `{base, levels, entries: [[j, k, "text"], ...]}` over the stored
//! pattern, sorted by `(j, k)`. CSV is dense, one line per row, with empty
//! cells for structural zeros. Text is dense with `0` in those positions.

use std::io::{self, Write};

use digibinom::{Polynomial, SierpinskiMatrix};
use serde::{Deserialize, Serialize};

/// Largest dimension written in a dense format.
pub const DENSE_LIMIT: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub base: u32,
    pub levels: u32,
    pub entries: Vec<(usize, usize, String)>,
}

impl From<&SierpinskiMatrix<Polynomial>> for MatrixJson {
    fn from(m: &SierpinskiMatrix<Polynomial>) -> Self {
        MatrixJson {
            base: m.base(),
            levels: m.levels(),
            entries: m.iter().map(|(j, k, v)| (j, k, v.to_string())).collect(),
        }
    }
}

pub fn write_json(m: &SierpinskiMatrix<Polynomial>, out: &mut impl Write) -> io::Result<()> {
    serde_json::to_writer(&mut *out, &MatrixJson::from(m))?;
    writeln!(out)
}

fn write_dense(
    m: &SierpinskiMatrix<Polynomial>,
    out: &mut impl Write,
    open: &str,
    sep: &str,
    close: &str,
    zero: &str,
) -> io::Result<()> {
    let dim = m.dimension();
    for j in 0..dim {
        out.write_all(open.as_bytes())?;
        let mut row = m.row(j).peekable();
        for k in 0..dim {
            if k > 0 {
                out.write_all(sep.as_bytes())?;
            }
            match row.next_if(|&(c, _)| c == k) {
                Some((_, v)) => write!(out, "{v}")?,
                None => out.write_all(zero.as_bytes())?,
            }
        }
        writeln!(out, "{close}")?;
    }
    Ok(())
}

pub fn write_csv(m: &SierpinskiMatrix<Polynomial>, out: &mut impl Write) -> io::Result<()> {
    write_dense(m, out, "", ",", "", "")
}

pub fn write_text(m: &SierpinskiMatrix<Polynomial>, out: &mut impl Write) -> io::Result<()> {
    write_dense(m, out, "[", ", ", "]", "0")
}
