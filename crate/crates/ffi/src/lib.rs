//! C ABI for the qcg8 toolkit.
//!
//! Handles are opaque pointers owned by the library; every constructor has a
//! matching `_free` function. All functions return a status code; outputs go
//! through pointer arguments. The header `include/qcg8.h` is generated at
//! build time.

use std::ffi::{c_char, CStr};
use std::ptr;

use qcg8::{bounds, construction, girth, pcm, Error};

/// Status codes returned by every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcgStatus {
    Ok = 0,
    NullArgument = 1,
    UnsupportedColumnWeight = 2,
    RowWeightTooSmall = 3,
    RowWeightTooLarge = 4,
    CirculantTooSmall = 5,
    IndexOutOfRange = 6,
    InvalidArgument = 7,
    IoError = 8,
    InternalError = 9,
}

fn status_of(err: &Error) -> QcgStatus {
    match err {
        Error::UnsupportedColumnWeight(_) => QcgStatus::UnsupportedColumnWeight,
        Error::RowWeightTooSmall { .. } => QcgStatus::RowWeightTooSmall,
        Error::RowWeightTooLarge(_) => QcgStatus::RowWeightTooLarge,
        Error::CirculantTooSmall(_) => QcgStatus::CirculantTooSmall,
        _ => QcgStatus::InvalidArgument,
    }
}

/// A selected construction: the mirror sequence and its exponent matrix.
pub struct QcgConstruction {
    sequence: construction::MirrorSequence,
    matrix: construction::ExponentMatrix,
}

/// An expanded binary parity-check matrix.
pub struct QcgPcm {
    inner: pcm::QcParityCheckMatrix,
}

/// Circulant-size landmarks for one `(J, L)` pair.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct QcgBounds {
    pub search_floor: u64,
    pub special_p: u64,
    pub ccs_class_bound: u64,
    pub global_lower_bound: u64,
    pub min_p_upper_bound: u64,
}

/// Selects the construction for `(j, l)` and materializes its exponent
/// matrix. On success `*out` owns the new handle.
///
/// # Safety
/// `out` must be a valid pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn qcg_construct(
    j: u32,
    l: u64,
    out: *mut *mut QcgConstruction,
) -> QcgStatus {
    if out.is_null() {
        return QcgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let sequence = match construction::select_construction(j, l) {
        Ok(ms) => ms,
        Err(e) => return status_of(&e),
    };
    let matrix = match construction::exponent_matrix(&sequence) {
        Ok(e) => e,
        Err(e) => return status_of(&e),
    };
    *out = Box::into_raw(Box::new(QcgConstruction { sequence, matrix }));
    QcgStatus::Ok
}

/// Releases a construction handle. Null is ignored.
///
/// # Safety
/// `handle` must have come from [`qcg_construct`] and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn qcg_construction_free(handle: *mut QcgConstruction) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Writes the column and row weights of the construction.
///
/// # Safety
/// All pointers must be valid; `handle` must be a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_construction_dims(
    handle: *const QcgConstruction,
    j: *mut u32,
    l: *mut u64,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if j.is_null() || l.is_null() {
        return QcgStatus::NullArgument;
    }
    *j = c.sequence.column_weight();
    *l = c.sequence.row_weight();
    QcgStatus::Ok
}

/// Writes one exponent-matrix entry.
///
/// # Safety
/// All pointers must be valid; `handle` must be a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_construction_entry(
    handle: *const QcgConstruction,
    row: u32,
    col: u64,
    out: *mut i64,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if out.is_null() {
        return QcgStatus::NullArgument;
    }
    if row as usize >= c.matrix.rows() || col as usize >= c.matrix.cols() {
        return QcgStatus::IndexOutOfRange;
    }
    *out = c.matrix.entry(row as usize, col as usize);
    QcgStatus::Ok
}

/// Copies the NUL-terminated family label (e.g. `"J7-135"`) into `buf`.
///
/// # Safety
/// `buf` must point to at least `buf_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn qcg_construction_family(
    handle: *const QcgConstruction,
    buf: *mut c_char,
    buf_len: usize,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if buf.is_null() {
        return QcgStatus::NullArgument;
    }
    let label = c.sequence.family().label().as_bytes();
    if buf_len < label.len() + 1 {
        return QcgStatus::InvalidArgument;
    }
    ptr::copy_nonoverlapping(label.as_ptr(), buf as *mut u8, label.len());
    *buf.add(label.len()) = 0;
    QcgStatus::Ok
}

/// Decides the girth (4, 6, 8, or 10 meaning "at least 10") of the
/// construction at circulant size `p`.
///
/// # Safety
/// All pointers must be valid; `handle` must be a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_girth(
    handle: *const QcgConstruction,
    p: u64,
    out_girth: *mut u32,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if out_girth.is_null() {
        return QcgStatus::NullArgument;
    }
    match girth::girth_upper8(&c.matrix, p) {
        Ok(report) => {
            *out_girth = report.girth.as_u32();
            QcgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// True (1) iff every row-triple of the construction meets the GCD
/// constraint; also reports the minimum indicator.
///
/// # Safety
/// All pointers must be valid; `handle` must be a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_gcd_constraint(
    handle: *const QcgConstruction,
    out_pass: *mut u8,
    out_min_indicator: *mut i64,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if out_pass.is_null() || out_min_indicator.is_null() {
        return QcgStatus::NullArgument;
    }
    let check = qcg8::check_gcd_constraint(&c.sequence);
    *out_pass = u8::from(check.pass);
    *out_min_indicator = check.min_indicator;
    QcgStatus::Ok
}

/// Evaluates every circulant-size landmark for `(j, l)`.
///
/// # Safety
/// `out` must be a valid pointer to a `QcgBounds`.
#[no_mangle]
pub unsafe extern "C" fn qcg_bounds(j: u32, l: u64, out: *mut QcgBounds) -> QcgStatus {
    if out.is_null() {
        return QcgStatus::NullArgument;
    }
    match bounds::bound_set(j, l) {
        Ok(b) => {
            *out = QcgBounds {
                search_floor: b.search_floor,
                special_p: b.special_p.p,
                ccs_class_bound: b.ccs_class_bound,
                global_lower_bound: b.global_lower_bound,
                min_p_upper_bound: b.min_p_upper_bound,
            };
            QcgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Finds the smallest circulant size with girth exactly eight for `(j, l)`.
///
/// # Safety
/// `out_p` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qcg_search_min_p(j: u32, l: u64, out_p: *mut u64) -> QcgStatus {
    if out_p.is_null() {
        return QcgStatus::NullArgument;
    }
    match bounds::search_min_p(j, l) {
        Ok(p) => {
            *out_p = p;
            QcgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Expands the construction into a binary parity-check matrix at circulant
/// size `p`. On success `*out` owns the new handle.
///
/// # Safety
/// All pointers must be valid; `handle` must be a live construction handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_expand(
    handle: *const QcgConstruction,
    p: u64,
    out: *mut *mut QcgPcm,
) -> QcgStatus {
    let Some(c) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if out.is_null() {
        return QcgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    match pcm::expand(&c.matrix, p) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(QcgPcm { inner }));
            QcgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a parity-check-matrix handle. Null is ignored.
///
/// # Safety
/// `handle` must have come from [`qcg_expand`] and not been freed before.
#[no_mangle]
pub unsafe extern "C" fn qcg_pcm_free(handle: *mut QcgPcm) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Writes the expanded dimensions (`rows = J*P`, `cols = L*P`).
///
/// # Safety
/// All pointers must be valid; `handle` must be a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_pcm_dims(
    handle: *const QcgPcm,
    rows: *mut u64,
    cols: *mut u64,
) -> QcgStatus {
    let Some(h) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if rows.is_null() || cols.is_null() {
        return QcgStatus::NullArgument;
    }
    *rows = h.inner.matrix().rows() as u64;
    *cols = h.inner.matrix().cols() as u64;
    QcgStatus::Ok
}

/// Exact Tanner-graph girth of the expanded matrix by breadth-first search,
/// truncated at `cap` (4, 6, 8, or 10).
///
/// # Safety
/// All pointers must be valid; `handle` must be a live matrix handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_pcm_graph_girth(
    handle: *const QcgPcm,
    cap: u32,
    out_girth: *mut u32,
) -> QcgStatus {
    let Some(h) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if out_girth.is_null() {
        return QcgStatus::NullArgument;
    }
    match pcm::graph_girth_bfs(h.inner.matrix(), cap) {
        Ok(g) => {
            *out_girth = g;
            QcgStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Writes the matrix to `path` in the alist format.
///
/// # Safety
/// `path` must be a valid NUL-terminated string; `handle` a live matrix
/// handle.
#[no_mangle]
pub unsafe extern "C" fn qcg_pcm_write_alist(
    handle: *const QcgPcm,
    path: *const c_char,
) -> QcgStatus {
    let Some(h) = handle.as_ref() else {
        return QcgStatus::NullArgument;
    };
    if path.is_null() {
        return QcgStatus::NullArgument;
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return QcgStatus::InvalidArgument;
    };
    let text = pcm::export_alist(h.inner.matrix());
    match std::fs::write(path, text) {
        Ok(()) => QcgStatus::Ok,
        Err(_) => QcgStatus::IoError,
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qcg_status_message(status: QcgStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        QcgStatus::Ok => b"ok\0",
        QcgStatus::NullArgument => b"null argument\0",
        QcgStatus::UnsupportedColumnWeight => b"unsupported column weight (need 7 or 8)\0",
        QcgStatus::RowWeightTooSmall => b"row weight too small (need L > J)\0",
        QcgStatus::RowWeightTooLarge => b"row weight outside the overflow-safe range\0",
        QcgStatus::CirculantTooSmall => b"circulant size too small (need P >= 2)\0",
        QcgStatus::IndexOutOfRange => b"index out of range\0",
        QcgStatus::InvalidArgument => b"invalid argument\0",
        QcgStatus::IoError => b"i/o error\0",
        QcgStatus::InternalError => b"internal error\0",
    };
    msg.as_ptr() as *const c_char
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qcg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_inspect_and_free() {
        unsafe {
            let mut handle: *mut QcgConstruction = ptr::null_mut();
            assert_eq!(qcg_construct(7, 11, &mut handle), QcgStatus::Ok);
            assert!(!handle.is_null());

            let (mut j, mut l) = (0u32, 0u64);
            assert_eq!(qcg_construction_dims(handle, &mut j, &mut l), QcgStatus::Ok);
            assert_eq!((j, l), (7, 11));

            let mut entry = 0i64;
            assert_eq!(
                qcg_construction_entry(handle, 6, 10, &mut entry),
                QcgStatus::Ok
            );
            assert_eq!(entry, 520);
            assert_eq!(
                qcg_construction_entry(handle, 7, 0, &mut entry),
                QcgStatus::IndexOutOfRange
            );

            let mut buf = [0 as c_char; 16];
            assert_eq!(
                qcg_construction_family(handle, buf.as_mut_ptr(), buf.len()),
                QcgStatus::Ok
            );
            let label = CStr::from_ptr(buf.as_ptr()).to_str().unwrap();
            assert_eq!(label, "J7-135");
            assert_eq!(
                qcg_construction_family(handle, buf.as_mut_ptr(), 3),
                QcgStatus::InvalidArgument
            );

            let mut g = 0u32;
            assert_eq!(qcg_girth(handle, 521, &mut g), QcgStatus::Ok);
            assert_eq!(g, 8);
            assert_eq!(qcg_girth(handle, 1, &mut g), QcgStatus::CirculantTooSmall);

            qcg_construction_free(handle);
        }
    }

    #[test]
    fn error_codes_for_bad_parameters() {
        unsafe {
            let mut handle: *mut QcgConstruction = ptr::null_mut();
            assert_eq!(
                qcg_construct(6, 12, &mut handle),
                QcgStatus::UnsupportedColumnWeight
            );
            assert!(handle.is_null());
            assert_eq!(
                qcg_construct(7, 7, &mut handle),
                QcgStatus::RowWeightTooSmall
            );
            assert_eq!(
                qcg_construct(7, 11, ptr::null_mut()),
                QcgStatus::NullArgument
            );
        }
    }

    #[test]
    fn bounds_and_search() {
        unsafe {
            let mut b = QcgBounds {
                search_floor: 0,
                special_p: 0,
                ccs_class_bound: 0,
                global_lower_bound: 0,
                min_p_upper_bound: 0,
            };
            assert_eq!(qcg_bounds(7, 12, &mut b), QcgStatus::Ok);
            assert_eq!(b.search_floor, 67);
            assert_eq!(b.special_p, 559);
            assert_eq!(b.global_lower_bound, 749);
            assert_eq!(b.min_p_upper_bound, 637);
        }
    }

    #[test]
    fn expand_and_bfs_girth() {
        unsafe {
            let mut c: *mut QcgConstruction = ptr::null_mut();
            assert_eq!(qcg_construct(7, 11, &mut c), QcgStatus::Ok);
            let mut h: *mut QcgPcm = ptr::null_mut();
            assert_eq!(qcg_expand(c, 407, &mut h), QcgStatus::Ok);

            let (mut rows, mut cols) = (0u64, 0u64);
            assert_eq!(qcg_pcm_dims(h, &mut rows, &mut cols), QcgStatus::Ok);
            assert_eq!((rows, cols), (7 * 407, 11 * 407));

            let mut g = 0u32;
            assert_eq!(qcg_pcm_graph_girth(h, 10, &mut g), QcgStatus::Ok);
            assert_eq!(g, 8);

            qcg_pcm_free(h);
            qcg_construction_free(c);
        }
    }

    #[test]
    fn status_messages_are_nul_terminated() {
        unsafe {
            let msg = CStr::from_ptr(qcg_status_message(QcgStatus::RowWeightTooSmall));
            assert!(msg.to_str().unwrap().contains("row weight"));
            let version = CStr::from_ptr(qcg_version());
            assert!(!version.to_str().unwrap().is_empty());
        }
    }
}
