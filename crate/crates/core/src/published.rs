//! Tables and relations as they appear in print, kept as comparison
//! fixtures. Nothing in the crate computes from these; they are only ever
//! compared against generated values.
//!
//! Where a printed line has no operator between terms, it is read as `+`.

use serde::Serialize;

/// Printed `U_k(x)` for `k = 1..=6`.
pub const U: [&str; 6] = [
    "2x",
    "-2x-4x^2",
    "8x^3+20x^2+2x",
    "-16x^4-144x^3-60x^2-2x",
    "800x^5+352x^4+1176x^3+136x^2+2x",
    "-4032x^6-3616x^5-32992x^4-2244x^3-332x^2-2x",
];

/// Printed `A_j(n, x)` for `j = 0..=5`.
pub const A: [&str; 6] = [
    "n",
    "(4n^2-4n)x-n^2",
    "(16n^3-40n^2+72n)x^2-(8n^3-10n^2+8n)x+n^3",
    "(64n^4-224n^3+272n^2-880n)x^3-(48n^4-112n^3-4n^2-120n)x^2+(12n^4-14n^3-18n^2-10n)x-n^4",
    "(256n^5-1152n^4+1984n^3-1568n^2+7648n)x^4-(256n^5-864n^4+480n^3+1216n^2-3008n)x^3\
     +(96n^5-216n^4-132n^3+308n^2-108n)x^2-(16n^5-18n^4-32n^3-28n^2-12n)x+n^5",
    "(1024n^6-5632n^5+12544n^4-384n^3-2630n^2-147686n)x^5\
     -(128n^6-5632n^5+6208n^4-15684n^3+8688n^2+28304n)x^4\
     +(640n^6-2112n^5-19552n^4+6408n^3-384n^2-2792n)x^3\
     -(160n^6-352n^5-404n^4+444n^3+2436n^2-280n)x^2\
     +(20n^6-22n^5-50n^4-60n^3-40n^2-14n)x-n^6",
];

/// Printed Bernoulli-number relations for `k = 1..=6`, as
/// `(offset j, coefficient of B_{n+j})`.
pub const NUMBER_RELATIONS: [&[(usize, &str)]; 6] = [
    &[(1, "4n+2"), (0, "-n")],
    &[(2, "16n^2+12"), (1, "-(8n^2-2)"), (0, "-n^2")],
    &[(3, "64n^3+8"), (2, "-(48n^3-20)"), (1, "12n^3+2"), (0, "-n^3")],
    &[
        (4, "256n^4-16"),
        (3, "-(256n^4+144)"),
        (2, "96n^4-60"),
        (1, "-(16n^4+2)"),
        (0, "n^4"),
    ],
    &[
        (5, "1024n^5+800"),
        (4, "-(1280n^5-352)"),
        (3, "640n^5-1176"),
        (2, "-(160n^5+136)"),
        (1, "20n^5+2"),
        (0, "-n^5"),
    ],
    &[
        (6, "4096n^6-4032"),
        (5, "-(6144n^6+3616)"),
        (4, "3840n^6-32992"),
        (3, "-(1280n^6+2244)"),
        (2, "240n^6-332"),
        (1, "-(24n^6+2)"),
        (0, "n^6"),
    ],
];

/// Printed Bernoulli-polynomial relations for `k = 1..=3`, as
/// `(offset j, numerator, denominator)` of the factor multiplying
/// `B_{n+j+1}(x+1) - B_{n+j+1}(x)`.
pub const POLY_RELATIONS: [&[(usize, &str, &str)]; 3] = [
    &[(1, "4n+2", "n+2"), (0, "-n", "n+1")],
    &[(2, "16n^2-4", "n+3"), (1, "-(8n^2+2)", "n+2"), (0, "n^2", "n+1")],
    &[
        (3, "64n^3+8", "n+4"),
        (2, "-(48n^3-20)", "n+3"),
        (1, "12n^3+2", "n+2"),
        (0, "-n^3", "n+1"),
    ],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn of(equal: bool) -> Self {
        if equal {
            Status::Match
        } else {
            Status::Mismatch
        }
    }
}

/// One row of a printed-versus-generated comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonEntry {
    pub k: usize,
    pub quantity: String,
    pub status: Status,
    pub paper_value: String,
    pub generated_value: String,
}
