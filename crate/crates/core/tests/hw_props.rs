mod common;

use common::*;
use proptest::prelude::*;
use ratseries::hw::{lower, raise};
use ratseries::{bf_apply, bf_apply_word, diag_element, grid, normal_order, Degree, Letter, Mode, NormalForm, Scalar, Word};

/// Stirling numbers of the second kind from `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`.
fn stirling2(n: usize) -> Vec<Vec<i64>> {
    let mut t = vec![vec![0i64; n + 1]; n + 1];
    t[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            t[i][k] = k as i64 * t[i - 1][k] + t[i - 1][k - 1];
        }
    }
    t
}

#[test]
fn number_operator_powers() {
    let table = stirling2(8);
    let number: Word = "Aa".parse().unwrap();
    for (n, row) in table.iter().enumerate().skip(1) {
        let word = Word::new(number.letters().repeat(n));
        let want = NormalForm::from_terms((1..=n).map(|k| ((k as u32, k as u32), Scalar::from(row[k]))));
        assert_eq!(normal_order(&word), want, "n={n}");
        assert_eq!(NormalForm::monomial(1, 1).pow(n as u32), want);
    }
}

#[test]
fn closed_product_matches_rewriting() {
    for l1 in 0..=3 {
        for l2 in 0..=3 {
            for w1 in Word::all_of_length(l1) {
                for w2 in Word::all_of_length(l2) {
                    let closed = normal_order(&w1).mul(&normal_order(&w2));
                    assert_eq!(closed, normal_order(&w1.concat(&w2)), "{w1} · {w2}");
                }
            }
        }
    }
}

#[test]
fn diagonal_elements_have_degree_zero() {
    for k in 0..=10 {
        assert_eq!(diag_element(k).degree(), Degree::Homogeneous(0));
    }
}

#[test]
fn faithfulness_probe() {
    let elements = [
        NormalForm::monomial(0, 0),
        NormalForm::monomial(3, 0),
        NormalForm::monomial(0, 3),
        NormalForm::monomial(2, 2).add(&NormalForm::monomial(1, 1).scale(&Scalar::from(-1))),
        diag_element(4),
        normal_order(&"aaAAa".parse().unwrap()),
        NormalForm::monomial(1, 2).add(&NormalForm::monomial(0, 1).scale(&Scalar::i())),
    ];
    for x in elements {
        let bound = x.terms().map(|((k, _), _)| k).max().unwrap() + x.terms().map(|((_, l), _)| l).max().unwrap() + 1;
        let hit = (0..=bound as i64).any(|n| !bf_apply(&x, &ratseries::RationalSeries::monomial(Mode::Power, n).unwrap()).is_zero());
        assert!(hit, "{x} annihilates every z^n up to {bound}");
    }
}

#[test]
fn word_action_matches_window_oracle() {
    for mode in [Mode::Power, Mode::Laurent] {
        for f in grid::sample_series(mode) {
            for len in 0..=4 {
                for w in Word::all_of_length(len) {
                    let got = window(&bf_apply_word(&w, &f), 32);
                    let mut want = window(&f, 32 + len);
                    for l in w.letters().iter().rev() {
                        want = match l {
                            Letter::Lower => want.diff().unwrap(),
                            Letter::Raise => want.shift(),
                        };
                    }
                    assert_eq!(got, want.prefix(32).unwrap(), "{w} on {f:?}");
                }
            }
        }
    }
}

fn arb_normal_form() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec(((0u32..4, 0u32..4), arb_scalar()), 0..4).prop_map(NormalForm::from_terms)
}

fn arb_homogeneous() -> impl Strategy<Value = NormalForm> {
    (-3i64..=3).prop_flat_map(|e| {
        prop::collection::vec((0u32..4, arb_scalar()), 1..4).prop_map(move |terms| {
            NormalForm::from_terms(terms.into_iter().map(|(l, c)| {
                let k = (l as i64 + e).max(0) as u32;
                ((k, (k as i64 - e) as u32), c)
            }))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_law(x in arb_homogeneous(), y in arb_homogeneous()) {
        let prod = x.mul(&y);
        match (x.degree(), y.degree(), prod.degree()) {
            (_, _, Degree::Any) => {}
            (Degree::Homogeneous(a), Degree::Homogeneous(b), d) => prop_assert_eq!(d, Degree::Homogeneous(a + b)),
            (Degree::Any, _, _) | (_, Degree::Any, _) => prop_assert!(prod.is_zero()),
            other => prop_assert!(false, "unexpected degrees {:?}", other),
        }
    }

    #[test]
    fn action_is_an_algebra_morphism(
        x in arb_normal_form(),
        y in arb_normal_form(),
        f in arb_series(Mode::Laurent, 4, 3),
    ) {
        prop_assert_eq!(bf_apply(&x.mul(&y), &f), bf_apply(&x, &bf_apply(&y, &f)));
    }

    #[test]
    fn product_is_associative(x in arb_normal_form(), y in arb_normal_form(), z in arb_normal_form()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn commutator_on_series(f in arb_series(Mode::Laurent, 5, 4)) {
        prop_assert_eq!(lower(&raise(&f)).sub(&raise(&lower(&f))).unwrap(), f);
    }

    #[test]
    fn longer_words_normal_order(bits in prop::collection::vec(any::<bool>(), 0..10)) {
        let w = Word::new(bits.iter().map(|&b| if b { Letter::Raise } else { Letter::Lower }).collect());
        let folded = w.letters().iter().fold(NormalForm::identity(), |acc, l| {
            acc.mul(&match l { Letter::Lower => NormalForm::lower(), Letter::Raise => NormalForm::raise() })
        });
        prop_assert_eq!(normal_order(&w), folded);
    }
}
