//! Exhaustive cycle-condition enumeration on exponent matrices.
//!
//! A cycle of length `2k` in the lifted Tanner graph corresponds to a
//! sequence of block positions `(j_0, l_0), ..., (j_{k-1}, l_{k-1})` with
//! adjacent rows distinct, adjacent columns distinct (indices mod `k`), and
//!
//! ```text
//! sum_i  E[j_i][l_i] - E[j_i][l_{i+1 mod k}]  ==  0   (mod P)
//! ```
//!
//! The searches below enumerate candidate sequences in lexicographic order of
//! the flattened tuple `(j_0, l_0, j_1, l_1, ...)` and return the first
//! solution, which makes every witness deterministic.

use crate::construction::ExponentMatrix;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// One block position of a witness cycle: `(row index, column index)`.
pub type BlockPos = (usize, usize);

/// Girth classification produced by [`girth_upper8`]. Cycle lengths above
/// eight are not distinguished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Girth {
    Four,
    Six,
    Eight,
    AtLeastTen,
}

impl Girth {
    /// Numeric value, using 10 for the capped `AtLeastTen` case.
    pub fn as_u32(self) -> u32 {
        match self {
            Girth::Four => 4,
            Girth::Six => 6,
            Girth::Eight => 8,
            Girth::AtLeastTen => 10,
        }
    }

    /// True unless the value is the `>= 10` cap.
    pub fn is_exact(self) -> bool {
        self != Girth::AtLeastTen
    }
}

/// Outcome of a girth decision: the classification plus the first witness
/// cycle when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthReport {
    pub girth: Girth,
    /// Block positions of the witness; present iff `girth != AtLeastTen`.
    pub witness: Option<Vec<BlockPos>>,
}

/// Searches for the lexicographically first cycle witness of half-length
/// `k` in `{2, 3, 4}`.
///
/// For `k = 2` the two rows and two columns must each be distinct; for
/// `k = 3` rows and columns are pairwise distinct; for `k = 4` only adjacent
/// positions are constrained, so row patterns like `a, b, a, b` are allowed.
pub fn find_cycle(e: &ExponentMatrix, p: u64, k: u32) -> Result<Option<Vec<BlockPos>>> {
    if p < 2 {
        return Err(Error::CirculantTooSmall(p));
    }
    if p > i64::MAX as u64 {
        return Err(Error::CirculantTooLarge(p));
    }
    let witness = match k {
        2 => find_4cycle(e, p as i64),
        3 => find_6cycle(e, p as i64),
        4 => find_8cycle(e, p as i64),
        _ => return Err(Error::InvalidHalfLength(k)),
    };
    Ok(witness)
}

/// Classifies the Tanner-graph girth of `(E, P)` by running the 4-, 6-, and
/// 8-cycle searches in order.
///
/// ```
/// let ms = qcg8::select_construction(7, 11).unwrap();
/// let e = qcg8::exponent_matrix(&ms).unwrap();
/// let report = qcg8::girth_upper8(&e, 521).unwrap();
/// assert_eq!(report.girth, qcg8::Girth::Eight);
/// ```
pub fn girth_upper8(e: &ExponentMatrix, p: u64) -> Result<GirthReport> {
    if let Some(w) = find_cycle(e, p, 2)? {
        return Ok(GirthReport {
            girth: Girth::Four,
            witness: Some(w),
        });
    }
    if let Some(w) = find_cycle(e, p, 3)? {
        return Ok(GirthReport {
            girth: Girth::Six,
            witness: Some(w),
        });
    }
    if let Some(w) = find_cycle(e, p, 4)? {
        return Ok(GirthReport {
            girth: Girth::Eight,
            witness: Some(w),
        });
    }
    Ok(GirthReport {
        girth: Girth::AtLeastTen,
        witness: None,
    })
}

/// Re-evaluates a witness returned by [`find_cycle`]: checks the adjacency
/// constraints and that the alternating sum vanishes modulo `p`.
pub fn witness_is_valid(e: &ExponentMatrix, p: u64, witness: &[BlockPos]) -> bool {
    let k = witness.len();
    if !(2..=4).contains(&k) || p < 2 {
        return false;
    }
    let mut sum: i64 = 0;
    for i in 0..k {
        let (j0, l0) = witness[i];
        let (j1, l1) = witness[(i + 1) % k];
        if j0 == j1 || l0 == l1 {
            return false;
        }
        if j0 >= e.rows() || l0 >= e.cols() {
            return false;
        }
        sum += e.entry(j0, l0) - e.entry(j0, l1);
    }
    if k == 3 {
        // Pairwise distinctness for six-cycles.
        let (r, c): (Vec<_>, Vec<_>) = witness.iter().copied().unzip();
        if r[0] == r[2] || c[0] == c[2] {
            return false;
        }
    }
    sum % (p as i64) == 0
}

fn find_4cycle(e: &ExponentMatrix, p: i64) -> Option<Vec<BlockPos>> {
    let (rows, cols) = (e.rows(), e.cols());
    for j0 in 0..rows {
        let r0 = e.row(j0);
        for l0 in 0..cols {
            for j1 in 0..rows {
                if j1 == j0 {
                    continue;
                }
                let r1 = e.row(j1);
                let base = r0[l0] - r1[l0];
                for l1 in 0..cols {
                    if l1 == l0 {
                        continue;
                    }
                    let sum = base - r0[l1] + r1[l1];
                    if sum % p == 0 {
                        return Some(vec![(j0, l0), (j1, l1)]);
                    }
                }
            }
        }
    }
    None
}

fn find_6cycle(e: &ExponentMatrix, p: i64) -> Option<Vec<BlockPos>> {
    let (rows, cols) = (e.rows(), e.cols());
    for j0 in 0..rows {
        let r0 = e.row(j0);
        for l0 in 0..cols {
            for j1 in 0..rows {
                if j1 == j0 {
                    continue;
                }
                let r1 = e.row(j1);
                for l1 in 0..cols {
                    if l1 == l0 {
                        continue;
                    }
                    // Terms not involving (j2, l2).
                    let partial = r0[l0] - r0[l1] + r1[l1];
                    for j2 in 0..rows {
                        if j2 == j0 || j2 == j1 {
                            continue;
                        }
                        let r2 = e.row(j2);
                        let base = partial - r2[l0];
                        for l2 in 0..cols {
                            if l2 == l0 || l2 == l1 {
                                continue;
                            }
                            let sum = base - r1[l2] + r2[l2];
                            if sum % p == 0 {
                                return Some(vec![(j0, l0), (j1, l1), (j2, l2)]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn find_8cycle(e: &ExponentMatrix, p: i64) -> Option<Vec<BlockPos>> {
    let (rows, cols) = (e.rows(), e.cols());
    for j0 in 0..rows {
        let r0 = e.row(j0);
        for l0 in 0..cols {
            for j1 in 0..rows {
                if j1 == j0 {
                    continue;
                }
                let r1 = e.row(j1);
                for l1 in 0..cols {
                    if l1 == l0 {
                        continue;
                    }
                    let partial01 = r0[l0] - r0[l1] + r1[l1];
                    for j2 in 0..rows {
                        if j2 == j1 {
                            continue;
                        }
                        let r2 = e.row(j2);
                        for l2 in 0..cols {
                            if l2 == l1 {
                                continue;
                            }
                            let partial012 = partial01 - r1[l2] + r2[l2];
                            for j3 in 0..rows {
                                if j3 == j2 || j3 == j0 {
                                    continue;
                                }
                                let r3 = e.row(j3);
                                let base = partial012 - r3[l0];
                                for l3 in 0..cols {
                                    if l3 == l2 || l3 == l0 {
                                        continue;
                                    }
                                    let sum = base - r2[l3] + r3[l3];
                                    if sum % p == 0 {
                                        return Some(vec![(j0, l0), (j1, l1), (j2, l2), (j3, l3)]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
