//! Construction and verification toolkit for girth-8 quasi-cyclic LDPC codes
//! with column weights 7 and 8.
//!
//! The crate covers five areas:
//!
//! - [`construction`]: the twelve mirror-sequence constructions, selected by
//!   column weight and `mod(L, 10)`, and their exponent matrices.
//! - [`girth`]: exhaustive 4-/6-/8-cycle condition checks deciding the girth
//!   of `(E, P)` up to the cap of eight.
//! - [`triples`]: row-triple analysis under the GCD framework — indicator
//!   computation, equivalence operations, and per-triple certification.
//! - [`bounds`]: circulant-size landmarks (search floor, per-class
//!   consecutive-size bound, global bounds, special small sizes) along with
//!   feasibility scans and minimum-size search.
//! - [`pcm`] / [`sim`]: expansion to binary parity-check matrices, alist
//!   interchange, an independent breadth-first girth oracle, and a seeded
//!   Monte-Carlo min-sum decoding harness.

pub mod bounds;
pub mod construction;
pub mod error;
pub mod girth;
pub mod pcm;
pub mod sim;
pub mod triples;

pub use bounds::{
    bound_set, ccs_class_bound, figure_data, figure_to_gnuplot, global_lower_bound,
    min_p_upper_bound, scan_feasible, search_floor, search_min_p, special_exponent_matrix,
    special_p_formula, special_small_p, BoundSet, FigureRow, ScanResult, SpecialP,
};
pub use construction::{
    exponent_matrix, select_construction, truncation_consistency, ExponentMatrix, Family, Kind,
    MirrorSequence,
};
pub use error::{Error, Result};
pub use girth::{find_cycle, girth_upper8, witness_is_valid, Girth, GirthReport};
pub use pcm::{
    expand, export_alist, graph_girth_bfs, import_alist, QcParityCheckMatrix, SparseBinMatrix,
};
pub use sim::{minsum_decode, run_ber, SimConfig, SimPoint, SimResult, StopRule};
pub use triples::{
    certify_triple, check_gcd_constraint, check_gcd_entries, gcd_indicator, normalize_triple,
    table_report, table_to_csv, GcdCheck, Triple, TripleAnalysis, TripleOp, Verdict,
};

/// JSON schema version stamped into every machine-readable output.
pub const SCHEMA_VERSION: u32 = 1;
