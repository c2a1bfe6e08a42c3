//! Shared inputs for the benchmarks.

use hit_core::census::CensusOptions;

/// Polynomials over Q paired with the census box used for them.
pub const Q_CENSUS: &[(&str, u64)] = &[
    ("Y^2 - T", 2500),
    ("Y^3 - T*Y - 1", 1000),
    ("Y^2 - T^3 - T", 2500),
];

/// Polynomials over F_3(u) with the box exponent n in `B = 3^n`.
pub const FQU_CENSUS: &[(&str, u32)] = &[("Y^2 - T", 5), ("Y^3 - T*Y - u", 4)];

pub const QUARTICS: &[&str] = &["Y^4 - 10*Y^2 + 1", "Y^4 + Y + 1", "Y^4 - 2", "Y^4 + 4"];

pub fn single_thread() -> CensusOptions {
    CensusOptions {
        threads: Some(1),
        ..Default::default()
    }
}
