//! Fixtures shared by the integration suites: independent restatements of
//! the construction sequences and of the two 35-row indicator tables.

use qcg8::{select_construction, table_report, Family, Verdict};

/// Independent restatement of the twelve construction sequences.
#[allow(dead_code)] // each test binary uses its own slice of this module
pub fn expected_sequence(j: u32, l: i64) -> (&'static str, Vec<i64>) {
    match (j, l % 10) {
        (7, 1) | (7, 3) | (7, 5) => (
            "J7-135",
            vec![0, 4, l, l + 8, 3 * l + 4, 3 * l + 12, 4 * l + 8],
        ),
        (7, 0) | (7, 2) | (7, 4) => (
            "J7-024",
            vec![0, 4, l + 1, l + 9, 3 * l + 7, 3 * l + 15, 4 * l + 12],
        ),
        (7, 9) => (
            "J7-9",
            vec![0, 4, l + 2, l + 10, 3 * l + 10, 3 * l + 18, 4 * l + 16],
        ),
        (7, 8) => (
            "J7-8",
            vec![0, 4, l + 3, l + 11, 3 * l + 13, 3 * l + 21, 4 * l + 20],
        ),
        (7, 7) => (
            "J7-7",
            vec![0, 8, l, l + 16, 3 * l + 8, 3 * l + 24, 4 * l + 16],
        ),
        (7, 6) => (
            "J7-6",
            vec![0, 8, l + 1, l + 17, 3 * l + 11, 3 * l + 27, 4 * l + 20],
        ),
        (8, 1) | (8, 3) | (8, 5) => (
            "J8-135",
            vec![0, 4, l, l + 8, 3 * l + 4, 3 * l + 12, 4 * l + 8, 4 * l + 12],
        ),
        (8, 0) | (8, 2) | (8, 4) => (
            "J8-024",
            vec![
                0,
                4,
                l + 1,
                l + 9,
                3 * l + 7,
                3 * l + 15,
                4 * l + 12,
                4 * l + 16,
            ],
        ),
        (8, 9) => (
            "J8-9",
            vec![
                0,
                4,
                l + 2,
                l + 10,
                3 * l + 10,
                3 * l + 18,
                4 * l + 16,
                4 * l + 20,
            ],
        ),
        (8, 8) => (
            "J8-8",
            vec![
                0,
                4,
                l + 3,
                l + 11,
                3 * l + 13,
                3 * l + 21,
                4 * l + 20,
                4 * l + 24,
            ],
        ),
        (8, 7) => (
            "J8-7",
            vec![
                0,
                8,
                l,
                l + 16,
                3 * l + 8,
                3 * l + 24,
                4 * l + 16,
                4 * l + 24,
            ],
        ),
        (8, 6) => (
            "J8-6",
            vec![
                0,
                8,
                l + 1,
                l + 17,
                3 * l + 11,
                3 * l + 27,
                4 * l + 20,
                4 * l + 28,
            ],
        ),
        _ => unreachable!(),
    }
}

pub enum Ind {
    Exact(i64),
    AtLeast(i64),
    /// `3 * indicator >= bound`, covering the fractional `(4L+c)/3` rows.
    AtLeastThird(i64),
    SameAs(usize),
}

/// The 35-row indicator table of the first basic `J = 7` construction,
/// instantiated at `l`.
pub fn first_table(l: i64) -> Vec<Ind> {
    use Ind::*;
    vec![
        Exact(l),
        Exact(l + 8),
        Exact(3 * l + 4),
        Exact(3 * l + 12),
        Exact(l + 2),
        Exact(l + 8),
        Exact(3 * l + 4),
        AtLeast(l + 4),
        Exact(4 * l + 8),
        Exact(3 * l + 4),
        AtLeast(l + 4),
        AtLeastThird(4 * l + 8),
        Exact(3 * l + 12),
        Exact(4 * l + 8),
        AtLeastThird(4 * l + 8),
        Exact(l + 4),
        AtLeast(l),
        Exact(3 * l + 8),
        Exact(4 * l + 4),
        AtLeast(l),
        Exact(3 * l + 8),
        AtLeastThird(4 * l + 4),
        Exact(3 * l + 8),
        SameAs(22),
        SameAs(19),
        Exact(l + 2),
        Exact(l + 6),
        SameAs(23),
        SameAs(27),
        SameAs(21),
        SameAs(18),
        SameAs(26),
        SameAs(20),
        SameAs(17),
        SameAs(16),
    ]
}

/// The 35-row indicator table of the second basic `J = 7` construction.
pub fn second_table(l: i64) -> Vec<Ind> {
    use Ind::*;
    vec![
        Exact(l),
        Exact(l + 16),
        Exact(3 * l + 8),
        Exact(3 * l + 24),
        Exact(l + 4),
        Exact(l + 16),
        Exact(3 * l + 8),
        AtLeast(l + 8),
        Exact(4 * l + 16),
        Exact(3 * l + 8),
        AtLeast(l + 8),
        AtLeastThird(4 * l + 16),
        Exact(3 * l + 24),
        Exact(4 * l + 16),
        AtLeastThird(4 * l + 16),
        Exact(l + 8),
        AtLeast(l),
        Exact(3 * l + 16),
        Exact(4 * l + 8),
        AtLeast(l),
        Exact(3 * l + 16),
        AtLeastThird(4 * l + 8),
        Exact(3 * l + 16),
        SameAs(22),
        SameAs(19),
        Exact(l + 4),
        Exact(l + 12),
        SameAs(23),
        SameAs(27),
        SameAs(21),
        SameAs(18),
        SameAs(26),
        SameAs(20),
        SameAs(17),
        SameAs(16),
    ]
}

/// Compares a computed analysis table against one of the fixtures above.
pub fn check_table(j: u32, l: u64, fixture: &[Ind]) {
    let ms = select_construction(j, l).unwrap();
    let rows = table_report(&ms, None).unwrap();
    assert_eq!(rows.len(), fixture.len());
    for (idx, (row, expected)) in rows.iter().zip(fixture).enumerate() {
        let row_no = idx + 1;
        match *expected {
            Ind::Exact(v) => assert_eq!(row.indicator, v, "row {row_no} at L={l}"),
            Ind::AtLeast(v) => assert!(
                row.indicator >= v,
                "row {row_no} at L={l}: {} < {v}",
                row.indicator
            ),
            Ind::AtLeastThird(v) => assert!(
                3 * row.indicator >= v,
                "row {row_no} at L={l}: 3*{} < {v}",
                row.indicator
            ),
            Ind::SameAs(referent) => {
                assert_eq!(
                    row.verdict,
                    Verdict::EquivalentTo { row: referent },
                    "row {row_no} at L={l}"
                );
                assert_eq!(
                    row.normalized,
                    rows[referent - 1].normalized,
                    "row {row_no} at L={l} does not share #{referent}'s normalized form"
                );
            }
        }
    }
}

/// Smallest valid row weight of a family.
pub fn smallest_l(family: Family) -> u64 {
    let j = u64::from(family.column_weight());
    let mut l = j + 1;
    loop {
        if family.residues().contains(&(l % 10)) {
            return l;
        }
        l += 1;
    }
}
