//! Inputs shared by the benchmarks.

use ratseries::{grid, Mode, RationalSeries, Scalar, Word};

/// `1/(1−αz)^m` for a fixed non-real `α`.
pub fn pole(m: u32) -> RationalSeries {
    let alpha = Scalar::ratio(1, 2) + Scalar::i();
    RationalSeries::pole(Mode::Laurent, alpha, m).unwrap()
}

/// A mixed series with `n` simple poles, one repeated pole and two monomials.
pub fn mixed(n: u32) -> RationalSeries {
    let mut f = RationalSeries::monomial(Mode::Laurent, -2)
        .unwrap()
        .add(&RationalSeries::monomial(Mode::Laurent, 3).unwrap())
        .unwrap();
    for k in 1..=n {
        let p = RationalSeries::pole(Mode::Laurent, Scalar::from(k as i64 + 1), 1).unwrap();
        f = f.add(&p.scale(&Scalar::ratio(1, k as i64))).unwrap();
    }
    f.add(&pole(3)).unwrap()
}

/// The Laurent-mode sample grid.
pub fn grid_series() -> Vec<RationalSeries> {
    grid::sample_series(Mode::Laurent)
}

/// Alternating word `aAaA…` of the given length.
pub fn alternating(len: usize) -> Word {
    "aA".repeat(len).chars().take(len).collect::<String>().parse().unwrap()
}
