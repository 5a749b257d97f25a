//! Numerator / factored-denominator representation and partial fractions.
//!
//! A [`FactoredFraction`] is `N(z) / Π (1−α_i z)^{m_i}` with `N` a Laurent
//! polynomial. Denominators are never factored here; they arrive as lists of
//! linear factors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{binomial, Scalar};
use crate::series::{BasisTerm, Mode, RationalSeries};

/// Finite sum `Σ c_e z^e`, `e ∈ ℤ`, with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Scalar::one())
    }

    pub fn monomial(e: i64, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `(1 − αz)^m`.
    pub fn linear_power(alpha: &Scalar, m: u32) -> Self {
        let mut p = Self::zero();
        let neg_alpha = -alpha;
        for i in 0..=m {
            p.add_term(i as i64, binomial(m as i64, i) * neg_alpha.powu(i));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Scalar::from(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.coeffs {
            out.add_term(*e, x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Exact quotient by a polynomial with nonzero constant term. Returns
    /// `None` when the division leaves a remainder.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (Some(low), Some(_)) = (self.min_exp(), self.max_exp()) else {
            return Some(Self::zero());
        };
        let dlow = divisor.min_exp()?;
        let dhigh = divisor.max_exp()?;
        debug_assert_eq!(dlow, 0);
        let lead_inv = divisor.coeff(dhigh).inv().ok()?;
        let mut rem = self.shift(-low);
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < dhigh {
                return None;
            }
            let q = rem.coeff(top) * &lead_inv;
            let step = divisor.scale(&q).shift(top - dhigh);
            rem = rem.sub(&step);
            quot.add_term(top - dhigh, q);
        }
        Some(quot.shift(low))
    }
}

/// `numerator / Π (1 − alpha·z)^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFraction {
    pub numerator: LaurentPoly,
    pub factors: Vec<(Scalar, u32)>,
}

/// Truncated power series in an auxiliary variable, used for local
/// expansions around a pole.
type Jet = Vec<Scalar>;

fn jet_mul(a: &[Scalar], b: &[Scalar], len: usize) -> Jet {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// `a / b` truncated to `len`; `b[0]` must be nonzero.
fn jet_div(a: &[Scalar], b: &[Scalar], len: usize) -> Jet {
    let b0_inv = b[0].inv().expect("jet divisor has nonzero constant term");
    let mut out: Jet = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = a.get(n).cloned().unwrap_or_default();
        for k in 1..=n.min(b.len().saturating_sub(1)) {
            acc -= &(&b[k] * &out[n - k]);
        }
        out.push(acc * &b0_inv);
    }
    out
}

impl FactoredFraction {
    pub fn new(numerator: LaurentPoly, factors: Vec<(Scalar, u32)>) -> Result<Self> {
        for (alpha, m) in &factors {
            if alpha.is_zero() {
                return Err(Error::ZeroPole);
            }
            if *m == 0 {
                return Err(Error::NonPositiveMultiplicity(0));
            }
        }
        Ok(FactoredFraction { numerator, factors })
    }

    pub(crate) fn from_series(f: &RationalSeries) -> Self {
        let mut top: BTreeMap<Scalar, u32> = BTreeMap::new();
        for (t, _) in f.terms() {
            if let BasisTerm::Pole { alpha, mult } = t {
                let e = top.entry(alpha.clone()).or_insert(0);
                *e = (*e).max(*mult);
            }
        }
        let factor_poly = |skip: Option<&Scalar>| {
            top.iter()
                .filter(|(a, _)| Some(*a) != skip)
                .fold(LaurentPoly::one(), |acc, (a, m)| acc.mul(&LaurentPoly::linear_power(a, *m)))
        };
        let denominator = factor_poly(None);
        let mut numerator = LaurentPoly::zero();
        let mut cofactors: BTreeMap<Scalar, LaurentPoly> = BTreeMap::new();
        for (t, c) in f.terms() {
            match t {
                BasisTerm::Monomial(n) => {
                    numerator = numerator.add(&denominator.shift(*n).scale(c));
                }
                BasisTerm::Pole { alpha, mult } => {
                    let rest = cofactors
                        .entry(alpha.clone())
                        .or_insert_with(|| factor_poly(Some(alpha)));
                    let local = LaurentPoly::linear_power(alpha, top[alpha] - mult);
                    numerator = numerator.add(&rest.mul(&local).scale(c));
                }
            }
        }
        FactoredFraction {
            numerator,
            factors: top.into_iter().collect(),
        }
    }

    /// Product of two fractions; factors with the same pole merge by adding
    /// multiplicities.
    pub fn mul(&self, other: &Self) -> Self {
        let mut merged: BTreeMap<Scalar, u32> = BTreeMap::new();
        for (a, m) in self.factors.iter().chain(&other.factors) {
            *merged.entry(a.clone()).or_insert(0) += m;
        }
        FactoredFraction {
            numerator: self.numerator.mul(&other.numerator),
            factors: merged.into_iter().collect(),
        }
    }

    fn denominator_without(&self, skip: Option<usize>) -> LaurentPoly {
        self.factors
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .fold(LaurentPoly::one(), |acc, (_, (a, m))| acc.mul(&LaurentPoly::linear_power(a, *m)))
    }

    /// Principal part at the pole `α` of multiplicity `m`: coefficients of
    /// `1/(1−αz)^j` for `j = 1..=m`.
    ///
    /// With `w = 1 − αz` the fraction is `G(w)/w^m`, where `G` collects the
    /// numerator and the remaining factors; the principal part is read off
    /// the first `m` Taylor coefficients of `G` in `w`.
    fn principal_part(&self, idx: usize) -> Vec<Scalar> {
        let (alpha, m) = &self.factors[idx];
        let len = *m as usize;
        let alpha_inv = alpha.inv().expect("pole values are nonzero");

        // z^e = α^{−e} (1 − w)^e, expanded with the generalized binomial.
        let mut num: Jet = vec![Scalar::zero(); len];
        for (e, c) in self.numerator.terms() {
            let scale = c * alpha_inv.pow(e).expect("nonzero base");
            for (i, slot) in num.iter_mut().enumerate() {
                let sign = if i % 2 == 0 { Scalar::one() } else { Scalar::from(-1) };
                *slot += &(&scale * &(sign * binomial(e, i as u32)));
            }
        }

        // 1 − βz = (1 − β/α) + (β/α) w.
        let mut den: Jet = vec![Scalar::one()];
        for (k, (beta, mb)) in self.factors.iter().enumerate() {
            if k == idx {
                continue;
            }
            let ratio = beta * &alpha_inv;
            let lin = vec![Scalar::one() - &ratio, ratio];
            for _ in 0..*mb {
                den = jet_mul(&den, &lin, len);
            }
        }
        let local = jet_div(&num, &den, len);
        // coefficient of w^{m−j} belongs to 1/(1−αz)^j
        (1..=len).map(|j| local[len - j].clone()).collect()
    }

    /// Decomposes into the canonical basis form.
    pub fn partial_fractions(&self, mode: Mode) -> Result<RationalSeries> {
        for (k, (a, m)) in self.factors.iter().enumerate() {
            if a.is_zero() {
                return Err(Error::ZeroPole);
            }
            if *m == 0 {
                return Err(Error::NonPositiveMultiplicity(0));
            }
            if self.factors[..k].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicatePole(Box::new(a.clone())));
            }
        }

        let mut terms: Vec<(BasisTerm, Scalar)> = Vec::new();
        let mut principal = LaurentPoly::zero();
        for idx in 0..self.factors.len() {
            let (alpha, m) = &self.factors[idx];
            let rest = self.denominator_without(Some(idx));
            for (j, c) in self.principal_part(idx).into_iter().enumerate() {
                let j = j as u32 + 1;
                if c.is_zero() {
                    continue;
                }
                let lifted = rest.mul(&LaurentPoly::linear_power(alpha, m - j)).scale(&c);
                principal = principal.add(&lifted);
                terms.push((BasisTerm::pole(alpha.clone(), j), c));
            }
        }

        let remainder = self.numerator.sub(&principal);
        let quotient = remainder
            .exact_div(&self.denominator_without(None))
            .expect("numerator minus principal parts is divisible by the denominator");
        for (e, c) in quotient.terms() {
            terms.push((BasisTerm::Monomial(e), c.clone()));
        }
        RationalSeries::from_terms(mode, terms)
    }
}
