//! Standard parameter grids for property checks and benchmarks.

use crate::scalar::Scalar;
use crate::series::{BasisTerm, Mode, RationalSeries};

/// Pole values `{1, −1, 2, 1/2, 3, i}`.
pub fn alphas() -> Vec<Scalar> {
    vec![
        Scalar::one(),
        Scalar::from(-1),
        Scalar::from(2),
        Scalar::ratio(1, 2),
        Scalar::from(3),
        Scalar::i(),
    ]
}

/// Monomial exponents exercised in each mode: `0..=8`, or `−4..=8` in
/// Laurent mode.
pub fn exponents(mode: Mode) -> std::ops::RangeInclusive<i64> {
    match mode {
        Mode::Power => 0..=8,
        Mode::Laurent => -4..=8,
    }
}

/// Every monomial from [`exponents`] and every pole `1/(1−αz)^m` with `α`
/// from [`alphas`] and `1 ≤ m ≤ max_mult`.
pub fn basis_terms(mode: Mode, max_mult: u32) -> Vec<BasisTerm> {
    let mut out: Vec<BasisTerm> = exponents(mode).map(BasisTerm::Monomial).collect();
    for a in alphas() {
        for m in 1..=max_mult {
            out.push(BasisTerm::pole(a.clone(), m));
        }
    }
    out
}

/// A fixed family of mixed series: zero, single terms, and sums mixing
/// monomials with simple and repeated poles and non-real coefficients.
/// Laurent mode adds negative-exponent members.
pub fn sample_series(mode: Mode) -> Vec<RationalSeries> {
    let s = |t: &str| t.parse::<Scalar>().expect("grid literal");
    let m = |n: i64| BasisTerm::Monomial(n);
    let p = |a: &str, k: u32| BasisTerm::pole(s(a), k);
    let mut specs: Vec<Vec<(BasisTerm, &str)>> = vec![
        vec![],
        vec![(m(0), "1")],
        vec![(m(3), "1")],
        vec![(p("1", 1), "1")],
        vec![(p("2", 2), "1")],
        vec![(p("i", 1), "3"), (m(2), "-1")],
        vec![(p("1", 3), "1"), (p("-1", 1), "1/2")],
        vec![(m(5), "1+i"), (p("3", 2), "-2"), (p("1/2", 1), "1")],
        vec![(m(0), "2"), (m(1), "-1"), (p("2", 1), "1/3"), (p("2", 3), "-1")],
        vec![(p("-1", 2), "i"), (p("1/2", 3), "1"), (p("3", 1), "-1/4")],
        vec![(m(4), "2/3"), (p("1", 2), "1"), (p("i", 2), "-1-i")],
    ];
    if mode == Mode::Laurent {
        specs.extend([
            vec![(m(-2), "1")],
            vec![(m(-1), "1"), (p("3", 1), "1")],
            vec![(m(-4), "-3"), (m(1), "1"), (p("-1", 2), "1")],
            vec![(m(-3), "1/2"), (m(-1), "i"), (p("2", 1), "2"), (p("1/2", 2), "-1")],
        ]);
    }
    specs
        .into_iter()
        .map(|terms| {
            RationalSeries::from_terms(mode, terms.into_iter().map(|(t, c)| (t, s(c))))
                .expect("grid series are valid")
        })
        .collect()
}
