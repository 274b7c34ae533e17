//! Mirror-sequence constructions for column weights 7 and 8.
//!
//! A construction is selected by the column weight `J` and the residue of the
//! row weight `L` modulo 10. Each construction is given by a strictly
//! increasing integer sequence `M = [m_0, ..., m_{J-1}]` (a *mirror sequence*)
//! whose entries are affine in `L`; the exponent matrix is the outer product
//! `E = M^T * [0, 1, ..., L-1]`, kept as unreduced integers so that a single
//! matrix serves every circulant size.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest accepted row weight. Keeps every downstream product
/// (`m_{J-1} * (L-1)`, cycle sums of four such terms, and the bound formulas)
/// comfortably inside `i64`.
pub const MAX_ROW_WEIGHT: u64 = 1 << 28;

/// Whether a construction is one of the two basic ones per column weight or
/// derived from a basic one by the row-weight shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Basic,
    Derived,
}

/// The twelve construction families, named by column weight and the residues
/// of `L` modulo 10 they cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "J7-135")]
    J7_135,
    #[serde(rename = "J7-024")]
    J7_024,
    #[serde(rename = "J7-9")]
    J7_9,
    #[serde(rename = "J7-8")]
    J7_8,
    #[serde(rename = "J7-7")]
    J7_7,
    #[serde(rename = "J7-6")]
    J7_6,
    #[serde(rename = "J8-135")]
    J8_135,
    #[serde(rename = "J8-024")]
    J8_024,
    #[serde(rename = "J8-9")]
    J8_9,
    #[serde(rename = "J8-8")]
    J8_8,
    #[serde(rename = "J8-7")]
    J8_7,
    #[serde(rename = "J8-6")]
    J8_6,
}

pub const ALL_FAMILIES: [Family; 12] = [
    Family::J7_135,
    Family::J7_024,
    Family::J7_9,
    Family::J7_8,
    Family::J7_7,
    Family::J7_6,
    Family::J8_135,
    Family::J8_024,
    Family::J8_9,
    Family::J8_8,
    Family::J8_7,
    Family::J8_6,
];

impl Family {
    /// Column weight `J` of the family.
    pub fn column_weight(self) -> u32 {
        match self {
            Family::J7_135
            | Family::J7_024
            | Family::J7_9
            | Family::J7_8
            | Family::J7_7
            | Family::J7_6 => 7,
            _ => 8,
        }
    }

    /// Basic for the `*-135` and `*-7` families, derived otherwise.
    pub fn kind(self) -> Kind {
        match self {
            Family::J7_135 | Family::J7_7 | Family::J8_135 | Family::J8_7 => Kind::Basic,
            _ => Kind::Derived,
        }
    }

    /// Residues of `L` modulo 10 covered by this family.
    pub fn residues(self) -> &'static [u64] {
        match self {
            Family::J7_135 | Family::J8_135 => &[1, 3, 5],
            Family::J7_024 | Family::J8_024 => &[0, 2, 4],
            Family::J7_9 | Family::J8_9 => &[9],
            Family::J7_8 | Family::J8_8 => &[8],
            Family::J7_7 | Family::J8_7 => &[7],
            Family::J7_6 | Family::J8_6 => &[6],
        }
    }

    /// The family covering `(J, mod(L, 10))`.
    pub fn for_params(j: u32, l: u64) -> Result<Family> {
        if j != 7 && j != 8 {
            return Err(Error::UnsupportedColumnWeight(j));
        }
        if l <= u64::from(j) {
            return Err(Error::RowWeightTooSmall { j, l });
        }
        let r = l % 10;
        let family = match (j, r) {
            (7, 1) | (7, 3) | (7, 5) => Family::J7_135,
            (7, 0) | (7, 2) | (7, 4) => Family::J7_024,
            (7, 9) => Family::J7_9,
            (7, 8) => Family::J7_8,
            (7, 7) => Family::J7_7,
            (7, 6) => Family::J7_6,
            (8, 1) | (8, 3) | (8, 5) => Family::J8_135,
            (8, 0) | (8, 2) | (8, 4) => Family::J8_024,
            (8, 9) => Family::J8_9,
            (8, 8) => Family::J8_8,
            (8, 7) => Family::J8_7,
            (8, 6) => Family::J8_6,
            _ => unreachable!("residue classes 0..=9 are exhaustive"),
        };
        Ok(family)
    }

    /// Mirror-sequence entries of this family evaluated at row weight `l`,
    /// without checking that `l` falls in the family's residue classes.
    /// Useful for evaluating a family's closed form at an arbitrary `L`
    /// (e.g. when maximizing bounds over all families).
    pub fn entries_at(self, l: u64) -> Result<Vec<i64>> {
        if l > MAX_ROW_WEIGHT {
            return Err(Error::RowWeightTooLarge(l));
        }
        let l = l as i64;
        let m: Vec<i64> = match self {
            Family::J7_135 => vec![0, 4, l, l + 8, 3 * l + 4, 3 * l + 12, 4 * l + 8],
            Family::J7_024 => vec![0, 4, l + 1, l + 9, 3 * l + 7, 3 * l + 15, 4 * l + 12],
            Family::J7_9 => vec![0, 4, l + 2, l + 10, 3 * l + 10, 3 * l + 18, 4 * l + 16],
            Family::J7_8 => vec![0, 4, l + 3, l + 11, 3 * l + 13, 3 * l + 21, 4 * l + 20],
            Family::J7_7 => vec![0, 8, l, l + 16, 3 * l + 8, 3 * l + 24, 4 * l + 16],
            Family::J7_6 => vec![0, 8, l + 1, l + 17, 3 * l + 11, 3 * l + 27, 4 * l + 20],
            Family::J8_135 => vec![0, 4, l, l + 8, 3 * l + 4, 3 * l + 12, 4 * l + 8, 4 * l + 12],
            Family::J8_024 => vec![
                0,
                4,
                l + 1,
                l + 9,
                3 * l + 7,
                3 * l + 15,
                4 * l + 12,
                4 * l + 16,
            ],
            Family::J8_9 => vec![
                0,
                4,
                l + 2,
                l + 10,
                3 * l + 10,
                3 * l + 18,
                4 * l + 16,
                4 * l + 20,
            ],
            Family::J8_8 => vec![
                0,
                4,
                l + 3,
                l + 11,
                3 * l + 13,
                3 * l + 21,
                4 * l + 20,
                4 * l + 24,
            ],
            Family::J8_7 => vec![
                0,
                8,
                l,
                l + 16,
                3 * l + 8,
                3 * l + 24,
                4 * l + 16,
                4 * l + 24,
            ],
            Family::J8_6 => vec![
                0,
                8,
                l + 1,
                l + 17,
                3 * l + 11,
                3 * l + 27,
                4 * l + 20,
                4 * l + 28,
            ],
        };
        Ok(m)
    }

    /// Largest mirror-sequence entry `m_{J-1}` at row weight `l`.
    pub fn max_entry(self, l: u64) -> Result<i64> {
        Ok(*self
            .entries_at(l)?
            .last()
            .expect("mirror sequences are non-empty"))
    }

    /// Parent family in the derivation chains `135 -> 024 -> 9 -> 8` and
    /// `7 -> 6`; `None` for the basic families.
    pub fn parent(self) -> Option<Family> {
        match self {
            Family::J7_024 => Some(Family::J7_135),
            Family::J7_9 => Some(Family::J7_024),
            Family::J7_8 => Some(Family::J7_9),
            Family::J7_6 => Some(Family::J7_7),
            Family::J8_024 => Some(Family::J8_135),
            Family::J8_9 => Some(Family::J8_024),
            Family::J8_8 => Some(Family::J8_9),
            Family::J8_6 => Some(Family::J8_7),
            _ => None,
        }
    }

    /// Display label, e.g. `"J7-135"`.
    pub fn label(self) -> &'static str {
        match self {
            Family::J7_135 => "J7-135",
            Family::J7_024 => "J7-024",
            Family::J7_9 => "J7-9",
            Family::J7_8 => "J7-8",
            Family::J7_7 => "J7-7",
            Family::J7_6 => "J7-6",
            Family::J8_135 => "J8-135",
            Family::J8_024 => "J8-024",
            Family::J8_9 => "J8-9",
            Family::J8_8 => "J8-8",
            Family::J8_7 => "J8-7",
            Family::J8_6 => "J8-6",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A mirror sequence instantiated at a concrete row weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorSequence {
    family: Family,
    row_weight: u64,
    entries: Vec<i64>,
}

impl MirrorSequence {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn column_weight(&self) -> u32 {
        self.family.column_weight()
    }

    pub fn row_weight(&self) -> u64 {
        self.row_weight
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn max_entry(&self) -> i64 {
        *self.entries.last().expect("non-empty")
    }
}

/// Selects the unique construction for `(J, L)` and instantiates its mirror
/// sequence.
///
/// ```
/// let ms = qcg8::select_construction(7, 11).unwrap();
/// assert_eq!(ms.family().label(), "J7-135");
/// assert_eq!(ms.entries(), &[0, 4, 11, 19, 37, 45, 52]);
/// ```
pub fn select_construction(j: u32, l: u64) -> Result<MirrorSequence> {
    let family = Family::for_params(j, l)?;
    let entries = family.entries_at(l)?;
    debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
    Ok(MirrorSequence {
        family,
        row_weight: l,
        entries,
    })
}

/// A `J x L` integer exponent matrix. Entries are kept unreduced; they are
/// taken modulo the circulant size only inside cycle checks and expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    /// Row-major entries.
    data: Vec<i64>,
    /// Present when the matrix came from a mirror-sequence construction.
    family: Option<Family>,
}

impl ExponentMatrix {
    /// Builds a matrix from explicit rows. All rows must have equal, non-zero
    /// length.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::MalformedExponentMatrix);
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            data.extend(row);
        }
        Ok(ExponentMatrix {
            rows: nrows,
            cols: ncols,
            data,
            family: None,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    /// Maximum entry; zero for the degenerate all-zero matrix.
    pub fn max_entry(&self) -> i64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Drops the last column (the truncation step of the derived
    /// constructions).
    pub fn truncate_last_column(&self) -> Result<Self> {
        if self.cols < 2 {
            return Err(Error::MalformedExponentMatrix);
        }
        let cols = self.cols - 1;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row(r)[..cols]);
        }
        Ok(ExponentMatrix {
            rows: self.rows,
            cols,
            data,
            family: self.family,
        })
    }

    /// Serializes as CSV: one line per row, comma-separated decimal entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(i64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the CSV form produced by [`ExponentMatrix::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for field in line.split(',') {
                let field = field.trim();
                let value = field.parse::<i64>().map_err(|_| Error::MatrixParse {
                    line: idx + 1,
                    message: format!("invalid integer {field:?}"),
                })?;
                row.push(value);
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::MatrixParse {
                line: 1,
                message: "no rows".into(),
            });
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::MatrixParse {
                line: 1,
                message: "rows have differing lengths".into(),
            });
        }
        Self::from_rows(rows)
    }
}

/// Forms `E = M^T * [0, 1, ..., L-1]` with unreduced 64-bit entries.
pub fn exponent_matrix(ms: &MirrorSequence) -> Result<ExponentMatrix> {
    let cols =
        usize::try_from(ms.row_weight).map_err(|_| Error::RowWeightTooLarge(ms.row_weight))?;
    let rows = ms.entries.len();
    let mut data = Vec::with_capacity(rows * cols);
    for &m in &ms.entries {
        for l in 0..cols {
            let v = m.checked_mul(l as i64).ok_or(Error::IntegerOverflow)?;
            data.push(v);
        }
    }
    Ok(ExponentMatrix {
        rows,
        cols,
        data,
        family: Some(ms.family),
    })
}

/// Checks the derivation identity: the derived sequence at `L` must equal its
/// parent construction evaluated at `L + 1`, entrywise. The exponent matrix
/// of the derived construction is then exactly the parent's with the last
/// column removed.
pub fn truncation_consistency(
    parent_at_l_plus_1: &MirrorSequence,
    derived_at_l: &MirrorSequence,
) -> Result<bool> {
    let chain_ok = derived_at_l.family.parent() == Some(parent_at_l_plus_1.family)
        && parent_at_l_plus_1.row_weight == derived_at_l.row_weight + 1;
    if !chain_ok {
        return Err(Error::ChainMismatch {
            parent: parent_at_l_plus_1.family.label().to_string(),
            child: derived_at_l.family.label().to_string(),
        });
    }
    Ok(parent_at_l_plus_1.entries == derived_at_l.entries)
}
