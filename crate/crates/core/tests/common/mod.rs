#![allow(dead_code)]

use proptest::prelude::*;
use ratseries::{grid, BasisTerm, Mode, RationalSeries, Scalar, TruncatedSeries};

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, prop::bool::weighted(0.3), -3i64..=3).prop_map(|(a, b, cx, c)| {
        let re = Scalar::ratio(a, b);
        if cx {
            re + Scalar::from(c) * Scalar::i()
        } else {
            re
        }
    })
}

pub fn arb_term(mode: Mode, max_mult: u32) -> impl Strategy<Value = BasisTerm> {
    let terms = grid::basis_terms(mode, max_mult);
    prop::sample::select(terms)
}

pub fn arb_series(mode: Mode, max_terms: usize, max_mult: u32) -> impl Strategy<Value = RationalSeries> {
    prop::collection::vec((arb_term(mode, max_mult), arb_scalar()), 0..=max_terms)
        .prop_map(move |terms| RationalSeries::from_terms(mode, terms).unwrap())
}

pub fn arb_mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Power), Just(Mode::Laurent)]
}

/// Window start low enough for every grid series and a few derivatives.
pub fn window_start(mode: Mode) -> i64 {
    match mode {
        Mode::Power => 0,
        Mode::Laurent => -16,
    }
}

pub fn window(f: &RationalSeries, len: usize) -> TruncatedSeries {
    ratseries::truncate_at(f, window_start(f.mode()), len).unwrap()
}
