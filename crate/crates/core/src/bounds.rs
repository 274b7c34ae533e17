//! Circulant-size landmarks and feasibility scans.
//!
//! For a selected construction at `(J, L)` the toolkit evaluates:
//!
//! - the *search floor* `(J-1)(L-1)+1`, below which girth 8 is impossible,
//! - the per-class *consecutive-circulant-size* (CCS) bound
//!   `m_{J-1}(L-1)+1`, at and above which every size yields girth 8,
//! - the *global lower bound* on consecutive sizes over all residue classes,
//! - a *special small size* far below the CCS bound, given by a per-class
//!   closed form together with the recipe that realizes it,
//! - the upper bound on the minimum feasible size (the maximum of the special
//!   sizes over the residue classes).
//!
//! `scan_feasible` and `search_min_p` check concrete ranges against the
//! girth oracle.

use crate::construction::{
    exponent_matrix, select_construction, ExponentMatrix, Family, MirrorSequence,
};
use crate::error::{Error, Result};
use crate::girth::{girth_upper8, Girth};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// `(J-1)(L-1)+1`: any smaller circulant size forces a 4- or 6-cycle for a
/// fully populated `J x L` exponent matrix.
pub fn search_floor(j: u32, l: u64) -> Result<u64> {
    validate_params(j, l)?;
    Ok(u64::from(j - 1) * (l - 1) + 1)
}

fn validate_params(j: u32, l: u64) -> Result<()> {
    if j != 7 && j != 8 {
        return Err(Error::UnsupportedColumnWeight(j));
    }
    if l <= u64::from(j) {
        return Err(Error::RowWeightTooSmall { j, l });
    }
    Ok(())
}

/// Per-class CCS bound `m_{J-1} * (L-1) + 1` for a mirror sequence.
pub fn ccs_class_bound(ms: &MirrorSequence) -> u64 {
    ms.max_entry() as u64 * (ms.row_weight() - 1) + 1
}

/// Global lower bound on consecutive circulant sizes:
/// `4(L-1)(L+5)+1` for `J = 7` and `4(L-1)(L+7)+1` for `J = 8`. Equals the
/// maximum of [`ccs_class_bound`] over every family at this `L`.
pub fn global_lower_bound(j: u32, l: u64) -> Result<u64> {
    validate_params(j, l)?;
    let offset = if j == 7 { 5 } else { 7 };
    Ok(4 * (l - 1) * (l + offset) + 1)
}

/// Upper bound on the minimum feasible circulant size:
/// `(L+1)(3L+13)` for `J = 7` and `(3L+4)(L+6)+7` for `J = 8`. Equals the
/// maximum of the per-class special sizes expressed at a common `L`.
pub fn min_p_upper_bound(j: u32, l: u64) -> Result<u64> {
    validate_params(j, l)?;
    Ok(if j == 7 {
        (l + 1) * (3 * l + 13)
    } else {
        (3 * l + 4) * (l + 6) + 7
    })
}

/// A special small circulant size together with the recipe that realizes it:
/// which construction to instantiate, and whether it is built at `L + 1` and
/// truncated by one column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialP {
    pub p: u64,
    pub family: Family,
    pub truncate_from_next: bool,
    /// Closed form of `p` in the row weight.
    pub formula: &'static str,
}

/// Closed form of the special small size for residue class `residue`,
/// evaluated at an arbitrary row weight (used for the bound identities).
pub fn special_p_formula(j: u32, residue: u64, l: u64) -> Result<u64> {
    if j != 7 && j != 8 {
        return Err(Error::UnsupportedColumnWeight(j));
    }
    let v = match (j, residue) {
        (7, 0) | (7, 2) => (l + 1) * (3 * l + 7),
        (7, 1) | (7, 3) => l * (3 * l + 4),
        (7, 4) => 3 * l * l + 10 * l + 15,
        (7, 5) => l * (3 * l + 6),
        (7, 6) => (l + 1) * (3 * l + 11),
        (7, 7) => l * (3 * l + 8),
        (7, 8) => (l + 1) * (3 * l + 13),
        (7, 9) => l * (3 * l + 10),
        (8, 0) | (8, 2) => (l + 1) * (3 * l + 11),
        (8, 1) | (8, 3) => l * (3 * l + 8),
        (8, 4) => (l + 1) * (3 * l + 13),
        (8, 5) => l * (3 * l + 10),
        (8, 6) => (l + 1) * (3 * l + 19),
        (8, 7) => l * (3 * l + 16),
        (8, 8) => 3 * l * l + 22 * l + 31,
        (8, 9) => 3 * l * l + 16 * l + 12,
        _ => unreachable!("residues are 0..=9"),
    };
    Ok(v)
}

/// Special small circulant size for `(J, L)` with its realizing recipe. Every
/// residue class of `L` modulo 10 is covered.
pub fn special_small_p(j: u32, l: u64) -> Result<SpecialP> {
    validate_params(j, l)?;
    let r = l % 10;
    let p = special_p_formula(j, r, l)?;
    let (family, truncate_from_next, formula): (Family, bool, &'static str) = match (j, r) {
        (7, 0) | (7, 2) => (Family::J7_135, true, "(L+1)(3L+7)"),
        (7, 1) | (7, 3) => (Family::J7_135, false, "L(3L+4)"),
        (7, 4) => (Family::J7_024, false, "3L^2+10L+15"),
        (7, 5) => (Family::J7_135, false, "L(3L+6)"),
        (7, 6) => (Family::J7_7, true, "(L+1)(3L+11)"),
        (7, 7) => (Family::J7_7, false, "L(3L+8)"),
        (7, 8) => (Family::J7_9, true, "(L+1)(3L+13)"),
        (7, 9) => (Family::J7_9, false, "L(3L+10)"),
        (8, 0) | (8, 2) => (Family::J8_135, true, "(L+1)(3L+11)"),
        (8, 1) | (8, 3) => (Family::J8_135, false, "L(3L+8)"),
        (8, 4) => (Family::J8_135, true, "(L+1)(3L+13)"),
        (8, 5) => (Family::J8_135, false, "L(3L+10)"),
        (8, 6) => (Family::J8_7, true, "(L+1)(3L+19)"),
        (8, 7) => (Family::J8_7, false, "L(3L+16)"),
        (8, 8) => (Family::J8_9, true, "3L^2+22L+31"),
        (8, 9) => (Family::J8_9, false, "3L^2+16L+12"),
        _ => unreachable!("residues are 0..=9"),
    };
    Ok(SpecialP {
        p,
        family,
        truncate_from_next,
        formula,
    })
}

/// Materializes the exponent matrix of a special-size recipe: the named
/// construction either directly at `L` or at `L + 1` with the last column
/// dropped.
pub fn special_exponent_matrix(j: u32, l: u64) -> Result<ExponentMatrix> {
    let recipe = special_small_p(j, l)?;
    if recipe.truncate_from_next {
        let parent = select_construction(j, l + 1)?;
        debug_assert_eq!(parent.family(), recipe.family);
        exponent_matrix(&parent)?.truncate_last_column()
    } else {
        let ms = select_construction(j, l)?;
        debug_assert_eq!(ms.family(), recipe.family);
        exponent_matrix(&ms)
    }
}

/// All circulant-size landmarks for `(J, L)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub j: u32,
    pub l: u64,
    pub family: Family,
    pub search_floor: u64,
    pub special_p: SpecialP,
    pub ccs_class_bound: u64,
    pub global_lower_bound: u64,
    pub min_p_upper_bound: u64,
}

/// Evaluates every landmark for `(J, L)`.
pub fn bound_set(j: u32, l: u64) -> Result<BoundSet> {
    let ms = select_construction(j, l)?;
    Ok(BoundSet {
        j,
        l,
        family: ms.family(),
        search_floor: search_floor(j, l)?,
        special_p: special_small_p(j, l)?,
        ccs_class_bound: ccs_class_bound(&ms),
        global_lower_bound: global_lower_bound(j, l)?,
        min_p_upper_bound: min_p_upper_bound(j, l)?,
    })
}

/// Feasible circulant sizes found by scanning a range against the girth
/// oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub j: u32,
    pub l: u64,
    pub family: Family,
    pub from: u64,
    pub to: u64,
    /// Sizes in `[from, to]` with girth exactly eight, ascending.
    pub feasible: Vec<u64>,
}

impl ScanResult {
    /// CSV export, one line per feasible size.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,girth\n");
        for p in &self.feasible {
            out.push_str(&format!("{p},8\n"));
        }
        out
    }

    /// Gnuplot-ready points `L P`, preceded by a comment header carrying the
    /// landmarks of this `(J, L)`.
    pub fn to_gnuplot(&self, bounds: &BoundSet) -> String {
        let mut out = format!(
            "# J={} L={} family={}\n# search_floor={} special_p={} ccs_class_bound={} \
             global_lower_bound={} min_p_upper_bound={}\n# columns: L P\n",
            self.j,
            self.l,
            self.family.label(),
            bounds.search_floor,
            bounds.special_p.p,
            bounds.ccs_class_bound,
            bounds.global_lower_bound,
            bounds.min_p_upper_bound,
        );
        for p in &self.feasible {
            out.push_str(&format!("{} {}\n", self.l, p));
        }
        out
    }
}

/// Scans `[from, to]` for circulant sizes where the selected `(J, L)`
/// construction has girth exactly eight. Sizes are checked concurrently; the
/// result is identical to a sequential scan.
pub fn scan_feasible(j: u32, l: u64, from: u64, to: u64) -> Result<ScanResult> {
    let ms = select_construction(j, l)?;
    let e = exponent_matrix(&ms)?;
    if from < 2 {
        return Err(Error::CirculantTooSmall(from));
    }
    if from > to {
        return Err(Error::EmptyRange { from, to });
    }
    let feasible: Vec<u64> = (from..=to)
        .into_par_iter()
        .filter_map(|p| match girth_upper8(&e, p) {
            Ok(report) if report.girth == Girth::Eight => Some(p),
            _ => None,
        })
        .collect();
    Ok(ScanResult {
        j,
        l,
        family: ms.family(),
        from,
        to,
        feasible,
    })
}

/// Smallest circulant size in `[search_floor, min_p_upper_bound]` with girth
/// exactly eight for the selected construction. Non-empty by construction:
/// the special small size lies in the range and verifies.
pub fn search_min_p(j: u32, l: u64) -> Result<u64> {
    let ms = select_construction(j, l)?;
    let e = exponent_matrix(&ms)?;
    let lo = search_floor(j, l)?;
    let hi = min_p_upper_bound(j, l)?;
    for p in lo..=hi {
        if girth_upper8(&e, p)?.girth == Girth::Eight {
            return Ok(p);
        }
    }
    unreachable!("the special small size lies in [floor, upper bound] and has girth eight")
}

/// One row of the feasibility figure: the landmarks at `L` plus every
/// feasible size strictly below the per-class CCS bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureRow {
    pub l: u64,
    pub special_p: u64,
    pub ccs_class_bound: u64,
    pub feasible_below_bound: Vec<u64>,
}

/// Scans `[search_floor, ccs_class_bound - 1]` for every `L` in the range.
pub fn figure_data(j: u32, l_from: u64, l_to: u64) -> Result<Vec<FigureRow>> {
    let mut rows = Vec::new();
    for l in l_from..=l_to {
        let bounds = bound_set(j, l)?;
        let scan = scan_feasible(j, l, bounds.search_floor, bounds.ccs_class_bound - 1)?;
        rows.push(FigureRow {
            l,
            special_p: bounds.special_p.p,
            ccs_class_bound: bounds.ccs_class_bound,
            feasible_below_bound: scan.feasible,
        });
    }
    Ok(rows)
}

/// Gnuplot data file with three index blocks: feasible points, the CCS bound
/// curve, and the special-size curve.
pub fn figure_to_gnuplot(j: u32, rows: &[FigureRow]) -> String {
    let mut out = format!(
        "# feasible circulant sizes below the per-class CCS bound, J={j}\n\
         # block 0: L P (feasible)   block 1: L ccs_class_bound   block 2: L special_p\n"
    );
    for row in rows {
        for p in &row.feasible_below_bound {
            out.push_str(&format!("{} {}\n", row.l, p));
        }
    }
    out.push_str("\n\n");
    for row in rows {
        out.push_str(&format!("{} {}\n", row.l, row.ccs_class_bound));
    }
    out.push_str("\n\n");
    for row in rows {
        out.push_str(&format!("{} {}\n", row.l, row.special_p));
    }
    out
}
