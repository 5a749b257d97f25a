//! Hadamard (coefficientwise) product of rational series via the closed
//! multiplication table on basis terms.
//!
//! Table, for `n, m ≥ 0` and nonzero `α, β`:
//!
//! ```text
//! z^n ⊙ z^m                      = δ_{n,m} z^n
//! z^n ⊙ 1/(1−αz)^{m+1}           = C(n+m, n) α^n z^n      (0 when n < 0)
//! 1/(1−αz)^{k+1} ⊙ 1/(1−βz)^{l+1}
//!     = D_{αβ,0} Σ_{j≤k} C(k,j)/j! (l+1)^{(j)} Σ_{s≤j} C(j,s) (−1)^{j−s} / (1−z)^{l+s+1}
//! ```
//!
//! where `D_{γ,0}` is the dilation `z ↦ γz` and `(x)^{(j)}` the rising
//! factorial. Multiplying by `1/(1−z)^{k+1}` is the diagonal operator
//! `Σ_j C(k,j)/j! (a†)^j a^j` in the Bargmann–Fock action.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hw::{bf_apply, NormalForm};
use crate::scalar::{binomial, factorial, rising_factorial, Scalar};
use crate::series::{BasisTerm, Mode, RationalSeries};

/// `f(αz)`: `z^n ↦ α^n z^n`, `1/(1−βz)^m ↦ 1/(1−αβz)^m`.
pub fn dilate(alpha: &Scalar, f: &RationalSeries) -> Result<RationalSeries> {
    if alpha.is_zero() {
        return Err(Error::ZeroDilation);
    }
    let mut out = RationalSeries::zero(f.mode());
    for (t, c) in f.terms() {
        match t {
            BasisTerm::Monomial(n) => out.push(t.clone(), c * alpha.pow(*n)?),
            BasisTerm::Pole { alpha: beta, mult } => {
                out.push(BasisTerm::pole(alpha * beta, *mult), c.clone())
            }
        }
    }
    Ok(out)
}

/// `Σ_{j=0}^{k} C(k,j)/j! · (a†)^j a^j`, the normally ordered element whose
/// action is Hadamard multiplication by `1/(1−z)^{k+1}`.
pub fn diag_element(k: u32) -> NormalForm {
    NormalForm::from_terms((0..=k).map(|j| {
        let c = binomial(k as i64, j)
            .checked_div(&factorial(j))
            .expect("factorial is nonzero");
        ((j, j), c)
    }))
}

/// Hadamard multiplication by `1/(1−z)^{k+1}`.
///
/// Nonnegative exponents and poles go through the Bargmann–Fock action of
/// [`diag_element`]. Monomials with negative exponent are annihilated: the
/// multiplier has no coefficients there, while the differential operator
/// would act on them by `C(n+k, k) ≠ 0`.
pub fn diag_apply(k: u32, f: &RationalSeries) -> RationalSeries {
    let regular = RationalSeries::from_terms(
        f.mode(),
        f.terms()
            .filter(|(t, _)| !matches!(t, BasisTerm::Monomial(n) if *n < 0))
            .map(|(t, c)| (t.clone(), c.clone())),
    )
    .expect("subset of a valid series");
    bf_apply(&diag_element(k), &regular)
}

/// One entry of the multiplication table.
pub fn hadamard_basis(mode: Mode, t1: &BasisTerm, t2: &BasisTerm) -> Result<RationalSeries> {
    t1.check(mode)?;
    t2.check(mode)?;
    let mut out = RationalSeries::zero(mode);
    match (t1, t2) {
        (BasisTerm::Monomial(n), BasisTerm::Monomial(m)) => {
            if n == m {
                out.push(t1.clone(), Scalar::one());
            }
        }
        (BasisTerm::Monomial(n), BasisTerm::Pole { alpha, mult })
        | (BasisTerm::Pole { alpha, mult }, BasisTerm::Monomial(n)) => {
            if *n >= 0 {
                let m = *mult as i64 - 1;
                let c = binomial(n + m, *n as u32) * alpha.powu(*n as u32);
                out.push(BasisTerm::Monomial(*n), c);
            }
        }
        (BasisTerm::Pole { alpha, mult: ka }, BasisTerm::Pole { alpha: beta, mult: lb }) => {
            let k = ka - 1;
            let l = lb - 1;
            let gamma = alpha * beta;
            let lp1 = Scalar::from(l as i64 + 1);
            let mut by_mult: BTreeMap<u32, Scalar> = BTreeMap::new();
            for j in 0..=k {
                let outer = binomial(k as i64, j)
                    .checked_div(&factorial(j))
                    .expect("factorial is nonzero")
                    * rising_factorial(&lp1, j);
                for s in 0..=j {
                    let sign = if (j - s) % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
                    let c = &outer * &(binomial(j as i64, s) * sign);
                    *by_mult.entry(l + s + 1).or_default() += &c;
                }
            }
            for (m, c) in by_mult {
                out.push(BasisTerm::pole(gamma.clone(), m), c);
            }
        }
    }
    Ok(out)
}

/// Bilinear extension of [`hadamard_basis`].
pub fn hadamard(f: &RationalSeries, g: &RationalSeries) -> Result<RationalSeries> {
    f.same_mode(g)?;
    let mode = f.mode();
    let mut out = RationalSeries::zero(mode);
    if f.is_zero() || g.is_zero() {
        return Ok(out);
    }
    for (t1, c1) in f.terms() {
        for (t2, c2) in g.terms() {
            let c = c1 * c2;
            for (t, x) in hadamard_basis(mode, t1, t2)?.terms() {
                out.push(t.clone(), &c * x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::truncate_at;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn pole(mode: Mode, a: &str, m: u32) -> RationalSeries {
        RationalSeries::pole(mode, s(a), m).unwrap()
    }

    fn mono(mode: Mode, n: i64) -> RationalSeries {
        RationalSeries::monomial(mode, n).unwrap()
    }

    #[test]
    fn dilation() {
        let p = Mode::Power;
        let f = pole(p, "3", 1).add(&mono(p, 2)).unwrap();
        assert_eq!(dilate(&Scalar::one(), &f).unwrap(), f);
        assert_eq!(dilate(&s("2"), &pole(p, "3", 1)).unwrap(), pole(p, "6", 1));
        let zm2 = mono(Mode::Laurent, -2);
        assert_eq!(dilate(&s("i"), &zm2).unwrap(), zm2.scale(&s("-1")));
        assert_eq!(dilate(&Scalar::zero(), &f), Err(Error::ZeroDilation));
        // f(αz) = 1/(1−αz) ⊙ f
        assert_eq!(dilate(&s("1/2"), &f).unwrap(), hadamard(&pole(p, "1/2", 1), &f).unwrap());
    }

    #[test]
    fn diagonal_elements() {
        assert_eq!(diag_element(0), NormalForm::identity());
        assert_eq!(diag_element(1), NormalForm::identity().add(&NormalForm::monomial(1, 1)));
        let want = NormalForm::from_terms([((0, 0), s("1")), ((1, 1), s("2")), ((2, 2), s("1/2"))]);
        assert_eq!(diag_element(2), want);
    }

    #[test]
    fn diagonal_action() {
        let p = Mode::Power;
        for k in 0..6u32 {
            for n in 0..6i64 {
                let got = diag_apply(k, &mono(p, n));
                assert_eq!(got, mono(p, n).scale(&binomial(n + k as i64, n as u32)));
            }
        }
        assert_eq!(diag_apply(1, &pole(p, "1", 1)), pole(p, "1", 2));
        for k in 0..4 {
            for n in -3..0 {
                assert!(diag_apply(k, &mono(Mode::Laurent, n)).is_zero());
            }
        }
    }

    #[test]
    fn table_examples() {
        let p = Mode::Power;
        assert!(hadamard(&mono(p, 2), &mono(p, 3)).unwrap().is_zero());
        assert_eq!(hadamard(&pole(p, "2", 1), &pole(p, "3", 1)).unwrap(), pole(p, "6", 1));
        let sq = pole(p, "1", 2);
        let want = pole(p, "1", 3).scale(&s("2")).sub(&sq).unwrap();
        assert_eq!(hadamard(&sq, &sq).unwrap(), want);
        let l = Mode::Laurent;
        assert!(hadamard(&mono(l, -1), &pole(l, "5", 1)).unwrap().is_zero());
        assert_eq!(hadamard(&pole(p, "2", 2), &pole(p, "3", 1)).unwrap(), pole(p, "6", 2));
        assert_eq!(
            hadamard(&mono(p, 3), &pole(p, "2", 2)).unwrap(),
            mono(p, 3).scale(&s("32"))
        );
    }

    #[test]
    fn unit_and_zero() {
        let p = Mode::Power;
        let unit = pole(p, "1", 1);
        let f = pole(p, "i", 3).add(&mono(p, 4).scale(&s("-2/3"))).unwrap();
        assert_eq!(hadamard(&f, &unit).unwrap(), f);
        assert_eq!(hadamard(&unit, &f).unwrap(), f);
        assert!(hadamard(&RationalSeries::zero(p), &f).unwrap().is_zero());
        let l = Mode::Laurent;
        assert!(hadamard(&mono(l, -1), &pole(l, "1", 1)).unwrap().is_zero());
        assert_eq!(
            hadamard(&f, &mono(l, 0)),
            Err(Error::ModeMismatch(Mode::Power, Mode::Laurent))
        );
    }

    #[test]
    fn pole_pair_against_window() {
        let p = Mode::Power;
        for (a, b) in [("2", "-1"), ("i", "1/2"), ("3", "3")] {
            for k in 1..4 {
                for l in 1..4 {
                    let f = pole(p, a, k);
                    let g = pole(p, b, l);
                    let h = hadamard(&f, &g).unwrap();
                    let lhs = truncate_at(&h, 0, 24).unwrap();
                    let rhs = truncate_at(&f, 0, 24)
                        .unwrap()
                        .pointwise_mul(&truncate_at(&g, 0, 24).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{a}^{k} ⊙ {b}^{l}");
                }
            }
        }
    }
}
