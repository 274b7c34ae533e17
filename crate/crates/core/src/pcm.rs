//! Binary quasi-cyclic parity-check matrices: expansion, alist interchange,
//! and an exact breadth-first girth oracle on the expanded Tanner graph.
//!
//! Shift convention: block `(j, l)` of the expanded matrix has a one at
//! in-block position `(r, c)` iff `c = r + E[j][l] (mod P)`. The transposed
//! convention yields an isomorphic graph; this one is fixed so that exports
//! are bit-exact.

use crate::construction::ExponentMatrix;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A sparse binary matrix held as per-column and per-row neighbor lists
/// (sorted ascending). `rows` are parity checks, `cols` are variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseBinMatrix {
    rows: usize,
    cols: usize,
    col_nbrs: Vec<Vec<u32>>,
    row_nbrs: Vec<Vec<u32>>,
}

impl SparseBinMatrix {
    /// Builds from per-column row-index lists.
    pub fn from_columns(rows: usize, col_nbrs: Vec<Vec<u32>>) -> Result<Self> {
        let cols = col_nbrs.len();
        let mut row_nbrs = vec![Vec::new(); rows];
        for (c, nbrs) in col_nbrs.iter().enumerate() {
            for &r in nbrs {
                if r as usize >= rows {
                    return Err(Error::AlistWeightInconsistency(format!(
                        "row index {r} out of range in column {c}"
                    )));
                }
                row_nbrs[r as usize].push(c as u32);
            }
        }
        let mut col_nbrs = col_nbrs;
        for nbrs in col_nbrs.iter_mut() {
            nbrs.sort_unstable();
        }
        for nbrs in row_nbrs.iter_mut() {
            nbrs.sort_unstable();
        }
        Ok(SparseBinMatrix {
            rows,
            cols,
            col_nbrs,
            row_nbrs,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Check-node neighbors (rows) of variable `col`.
    pub fn col(&self, col: usize) -> &[u32] {
        &self.col_nbrs[col]
    }

    /// Variable-node neighbors (columns) of check `row`.
    pub fn row(&self, row: usize) -> &[u32] {
        &self.row_nbrs[row]
    }

    pub fn num_edges(&self) -> usize {
        self.col_nbrs.iter().map(Vec::len).sum()
    }

    /// `H x` over GF(2): true iff the syndrome is zero.
    pub fn syndrome_is_zero(&self, bits: &[u8]) -> bool {
        self.row_nbrs
            .iter()
            .all(|nbrs| nbrs.iter().fold(0u8, |acc, &c| acc ^ bits[c as usize]) == 0)
    }
}

/// An expanded quasi-cyclic parity-check matrix: the exponent matrix, the
/// circulant size, and the binary matrix itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QcParityCheckMatrix {
    exponent: ExponentMatrix,
    p: u64,
    matrix: SparseBinMatrix,
}

impl QcParityCheckMatrix {
    pub fn exponent(&self) -> &ExponentMatrix {
        &self.exponent
    }

    pub fn circulant_size(&self) -> u64 {
        self.p
    }

    pub fn matrix(&self) -> &SparseBinMatrix {
        &self.matrix
    }

    /// Code length `L * P`.
    pub fn code_length(&self) -> usize {
        self.matrix.cols()
    }
}

/// Expands `E` with circulant size `P`; entries are reduced modulo `P` during
/// placement.
///
/// ```
/// let e = qcg8::ExponentMatrix::from_rows(vec![vec![1]]).unwrap();
/// let h = qcg8::expand(&e, 3).unwrap();
/// assert_eq!(h.matrix().col(0), &[2]); // shift 1: row 2 has a one in column 0
/// ```
pub fn expand(e: &ExponentMatrix, p: u64) -> Result<QcParityCheckMatrix> {
    if p < 2 {
        return Err(Error::CirculantTooSmall(p));
    }
    if p > i64::MAX as u64 || (p as usize).checked_mul(e.cols().max(e.rows())).is_none() {
        return Err(Error::CirculantTooLarge(p));
    }
    let pu = p as usize;
    let rows = e.rows() * pu;
    let cols = e.cols() * pu;
    let mut col_nbrs: Vec<Vec<u32>> = vec![Vec::with_capacity(e.rows()); cols];
    for j in 0..e.rows() {
        for l in 0..e.cols() {
            let shift = e.entry(j, l).rem_euclid(p as i64) as usize;
            for c in 0..pu {
                // (r, c) set iff c = r + shift, i.e. r = c - shift (mod P).
                let r = (c + pu - shift) % pu;
                col_nbrs[l * pu + c].push((j * pu + r) as u32);
            }
        }
    }
    let matrix = SparseBinMatrix::from_columns(rows, col_nbrs)?;
    Ok(QcParityCheckMatrix {
        exponent: e.clone(),
        p,
        matrix,
    })
}

// ---------------------------------------------------------------------------
// alist interchange
// ---------------------------------------------------------------------------

/// Serializes to the alist layout: `n m`, the maximum column/row weights,
/// per-column and per-row weights, then 1-based neighbor lists (column-major
/// first), zero-padded to the maximum weight.
pub fn export_alist(m: &SparseBinMatrix) -> String {
    let max_col_w = (0..m.cols()).map(|c| m.col(c).len()).max().unwrap_or(0);
    let max_row_w = (0..m.rows()).map(|r| m.row(r).len()).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.cols(), m.rows()));
    out.push_str(&format!("{max_col_w} {max_row_w}\n"));
    let col_weights: Vec<String> = (0..m.cols()).map(|c| m.col(c).len().to_string()).collect();
    out.push_str(&col_weights.join(" "));
    out.push('\n');
    let row_weights: Vec<String> = (0..m.rows()).map(|r| m.row(r).len().to_string()).collect();
    out.push_str(&row_weights.join(" "));
    out.push('\n');
    let mut write_list = |nbrs: &[u32], max_w: usize| {
        let mut fields: Vec<String> = nbrs.iter().map(|&i| (i + 1).to_string()).collect();
        fields.resize(max_w, "0".to_string());
        out.push_str(&fields.join(" "));
        out.push('\n');
    };
    for c in 0..m.cols() {
        write_list(m.col(c), max_col_w);
    }
    for r in 0..m.rows() {
        write_list(m.row(r), max_row_w);
    }
    out
}

struct AlistLines<'a> {
    lines: std::str::Lines<'a>,
    line_no: usize,
}

impl<'a> AlistLines<'a> {
    fn next_fields(&mut self) -> Result<(usize, Vec<usize>)> {
        for line in self.lines.by_ref() {
            self.line_no += 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let mut fields = Vec::new();
            for tok in trimmed.split_whitespace() {
                let v = tok.parse::<usize>().map_err(|_| Error::AlistParse {
                    line: self.line_no,
                    message: format!("invalid integer {tok:?}"),
                })?;
                fields.push(v);
            }
            return Ok((self.line_no, fields));
        }
        Err(Error::AlistParse {
            line: self.line_no,
            message: "unexpected end of file".into(),
        })
    }
}

/// Parses the alist layout produced by [`export_alist`] (zero padding
/// optional). The column-major and row-major sections are cross-checked
/// against each other.
pub fn import_alist(text: &str) -> Result<SparseBinMatrix> {
    let mut reader = AlistLines {
        lines: text.lines(),
        line_no: 0,
    };

    let (line, header) = reader.next_fields()?;
    if header.len() != 2 {
        return Err(Error::AlistParse {
            line,
            message: format!("expected `n m`, got {} fields", header.len()),
        });
    }
    let (n, m) = (header[0], header[1]);
    if n == 0 || m == 0 {
        return Err(Error::AlistParse {
            line,
            message: "matrix dimensions must be positive".into(),
        });
    }

    let (line, maxw) = reader.next_fields()?;
    if maxw.len() != 2 {
        return Err(Error::AlistParse {
            line,
            message: "expected maximum column and row weights".into(),
        });
    }
    let (max_col_w, max_row_w) = (maxw[0], maxw[1]);

    let (line, col_weights) = reader.next_fields()?;
    if col_weights.len() != n {
        return Err(Error::AlistParse {
            line,
            message: format!("expected {n} column weights, got {}", col_weights.len()),
        });
    }
    let (line, row_weights) = reader.next_fields()?;
    if row_weights.len() != m {
        return Err(Error::AlistParse {
            line,
            message: format!("expected {m} row weights, got {}", row_weights.len()),
        });
    }
    if let Some(w) = col_weights.iter().find(|&&w| w > max_col_w) {
        return Err(Error::AlistWeightInconsistency(format!(
            "column weight {w} exceeds declared maximum {max_col_w}"
        )));
    }
    if let Some(w) = row_weights.iter().find(|&&w| w > max_row_w) {
        return Err(Error::AlistWeightInconsistency(format!(
            "row weight {w} exceeds declared maximum {max_row_w}"
        )));
    }

    let mut read_section = |count: usize,
                            weights: &[usize],
                            index_bound: usize,
                            what: &str|
     -> Result<Vec<Vec<u32>>> {
        let mut lists = Vec::with_capacity(count);
        for (idx, &w) in weights.iter().enumerate().take(count) {
            let (line, mut fields) = reader.next_fields()?;
            // Zero padding (if present) is only legal at the tail.
            while fields.last() == Some(&0) {
                fields.pop();
            }
            if fields.len() != w {
                return Err(Error::AlistParse {
                    line,
                    message: format!("{what} {idx}: expected {w} neighbors, got {}", fields.len()),
                });
            }
            let mut nbrs = Vec::with_capacity(w);
            for f in fields {
                if f == 0 || f > index_bound {
                    return Err(Error::AlistParse {
                        line,
                        message: format!("{what} {idx}: neighbor index {f} out of range"),
                    });
                }
                nbrs.push((f - 1) as u32);
            }
            nbrs.sort_unstable();
            nbrs.dedup();
            if nbrs.len() != w {
                return Err(Error::AlistParse {
                    line,
                    message: format!("{what} {idx}: duplicate neighbor indices"),
                });
            }
            lists.push(nbrs);
        }
        Ok(lists)
    };

    let col_lists = read_section(n, &col_weights, m, "column")?;
    let row_lists = read_section(m, &row_weights, n, "row")?;

    let matrix = SparseBinMatrix::from_columns(m, col_lists)?;
    // The row-major section must describe the same matrix.
    for (r, declared) in row_lists.iter().enumerate() {
        if matrix.row(r) != declared.as_slice() {
            return Err(Error::AlistWeightInconsistency(format!(
                "row {r}: row-major section disagrees with column-major section"
            )));
        }
    }
    Ok(matrix)
}

// ---------------------------------------------------------------------------
// Breadth-first girth oracle
// ---------------------------------------------------------------------------

/// Exact Tanner-graph girth of the expanded matrix, truncated at `cap`
/// (allowed caps: 4, 6, 8, 10). Returns the girth when it is below `cap`,
/// otherwise `cap` itself, so with `cap = 10` the result classifies into
/// `{4, 6, 8, >=10}`.
///
/// This is a structure-independent oracle: it works on the bipartite graph
/// alone and never consults the exponent matrix.
pub fn graph_girth_bfs(m: &SparseBinMatrix, cap: u32) -> Result<u32> {
    if !matches!(cap, 4 | 6 | 8 | 10) {
        return Err(Error::InvalidGirthCap(cap));
    }
    // Nodes: variables 0..n, checks n..n+m.
    let n = m.cols();
    let node_count = n + m.rows();
    let mut adj_off = Vec::with_capacity(node_count + 1);
    let mut adj = Vec::with_capacity(2 * m.num_edges());
    adj_off.push(0u32);
    for c in 0..n {
        adj.extend(m.col(c).iter().map(|&r| (n + r as usize) as u32));
        adj_off.push(adj.len() as u32);
    }
    for r in 0..m.rows() {
        adj.extend(m.row(r).iter().copied());
        adj_off.push(adj.len() as u32);
    }

    let mut dist = vec![0u32; node_count];
    let mut parent = vec![0u32; node_count];
    let mut stamp = vec![0u32; node_count];
    let mut queue: Vec<u32> = Vec::with_capacity(node_count);
    let mut generation = 0u32;

    let mut best = u32::MAX;
    for root in 0..n as u32 {
        // Only cycles shorter than both the cap and the best so far matter.
        let limit = best.saturating_sub(2).min(cap - 2);
        if limit < 4 {
            break;
        }
        generation += 1;
        queue.clear();
        queue.push(root);
        stamp[root as usize] = generation;
        dist[root as usize] = 0;
        parent[root as usize] = u32::MAX;
        let mut head = 0;
        'bfs: while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            // A conflict while expanding depth d yields a cycle of length
            // 2(d + 1); stop before that exceeds the limit.
            if 2 * (du + 1) > limit {
                break;
            }
            let start = adj_off[u as usize] as usize;
            let end = adj_off[u as usize + 1] as usize;
            for &w in &adj[start..end] {
                if stamp[w as usize] != generation {
                    stamp[w as usize] = generation;
                    dist[w as usize] = du + 1;
                    parent[w as usize] = u;
                    queue.push(w);
                } else if w != parent[u as usize] {
                    let len = du + dist[w as usize] + 1;
                    if len < best {
                        best = len;
                    }
                    break 'bfs;
                }
            }
        }
    }
    Ok(if best <= cap - 2 { best } else { cap })
}
