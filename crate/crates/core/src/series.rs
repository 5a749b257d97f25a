//! Rational series in partial-fraction form.
//!
//! Every rational power series has a unique expansion over the basis
//! `z^n (n ≥ 0)` and `1/(1−αz)^m (α ≠ 0, m ≥ 1)`; Laurent mode extends the
//! monomials to all `n ∈ ℤ`. A [`RationalSeries`] stores that expansion as a
//! sorted map with no zero coefficients, so `==` is series equality.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factored::FactoredFraction;
use crate::scalar::{binomial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Formal power series: monomial exponents are nonnegative.
    Power,
    /// Laurent extension: any integer exponent.
    Laurent,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Power => "power",
            Mode::Laurent => "laurent",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "power" => Ok(Mode::Power),
            "laurent" => Ok(Mode::Laurent),
            other => Err(format!("unknown mode {other:?} (expected power or laurent)")),
        }
    }
}

/// `z^n` or `1/(1−αz)^mult`.
///
/// The derived order puts monomials first (ascending exponent), then poles
/// by `(alpha, mult)`; that is the canonical printing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTerm {
    Monomial(i64),
    Pole { alpha: Scalar, mult: u32 },
}

impl BasisTerm {
    pub fn pole(alpha: Scalar, mult: u32) -> Self {
        BasisTerm::Pole { alpha, mult }
    }

    pub fn check(&self, mode: Mode) -> Result<()> {
        match self {
            BasisTerm::Monomial(n) if *n < 0 && mode == Mode::Power => Err(Error::NegativeExponent(*n)),
            BasisTerm::Pole { alpha, .. } if alpha.is_zero() => Err(Error::ZeroPole),
            BasisTerm::Pole { mult: 0, .. } => Err(Error::NonPositiveMultiplicity(0)),
            _ => Ok(()),
        }
    }

    /// `[z^n]` of this basis element.
    pub fn coefficient(&self, n: i64) -> Scalar {
        match self {
            BasisTerm::Monomial(k) => {
                if *k == n {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }
            BasisTerm::Pole { alpha, mult } => {
                if n < 0 {
                    Scalar::zero()
                } else {
                    binomial(n + *mult as i64 - 1, n as u32) * alpha.powu(n as u32)
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    mode: Mode,
    terms: BTreeMap<BasisTerm, Scalar>,
}

impl RationalSeries {
    pub fn zero(mode: Mode) -> Self {
        RationalSeries {
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(mode: Mode) -> Self {
        Self::zero(mode).with_term(BasisTerm::Monomial(0), Scalar::one())
    }

    /// Builds a canonical series, merging like terms and dropping zeros.
    pub fn from_terms<I>(mode: Mode, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisTerm, Scalar)>,
    {
        let mut out = Self::zero(mode);
        for (term, c) in terms {
            term.check(mode)?;
            out.push(term, c);
        }
        Ok(out)
    }

    pub fn monomial(mode: Mode, n: i64) -> Result<Self> {
        Self::from_terms(mode, [(BasisTerm::Monomial(n), Scalar::one())])
    }

    pub fn pole(mode: Mode, alpha: Scalar, mult: u32) -> Result<Self> {
        Self::from_terms(mode, [(BasisTerm::pole(alpha, mult), Scalar::one())])
    }

    /// `1/(1−αz)^m` for any `m ≥ 0`, reading `m = 0` as the constant 1.
    pub fn pole_power(mode: Mode, alpha: Scalar, m: i64) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroPole);
        }
        match m {
            0 => Ok(Self::one(mode)),
            m if m < 0 => Err(Error::NonPositiveMultiplicity(m)),
            m => Self::pole(mode, alpha, m as u32),
        }
    }

    pub fn constant(mode: Mode, c: Scalar) -> Self {
        Self::zero(mode).with_term(BasisTerm::Monomial(0), c)
    }

    pub(crate) fn with_term(mut self, term: BasisTerm, c: Scalar) -> Self {
        self.push(term, c);
        self
    }

    /// Adds `c·term` in place. Callers guarantee `term` is valid for the mode.
    pub(crate) fn push(&mut self, term: BasisTerm, c: Scalar) {
        debug_assert!(term.check(self.mode).is_ok(), "{term:?} invalid in {} mode", self.mode);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisTerm, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_coefficient(&self, term: &BasisTerm) -> Scalar {
        self.terms.get(term).cloned().unwrap_or_default()
    }

    /// Smallest monomial exponent present, if any.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().find_map(|t| match t {
            BasisTerm::Monomial(n) => Some(*n),
            _ => None,
        })
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().rev().find_map(|t| match t {
            BasisTerm::Monomial(n) => Some(*n),
            _ => None,
        })
    }

    /// Reinterprets the series in another mode.
    pub fn into_mode(self, mode: Mode) -> Result<Self> {
        Self::from_terms(mode, self.terms)
    }

    pub(crate) fn same_mode(&self, other: &Self) -> Result<()> {
        if self.mode == other.mode {
            Ok(())
        } else {
            Err(Error::ModeMismatch(self.mode, other.mode))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_mode(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.push(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.mode);
        }
        RationalSeries {
            mode: self.mode,
            terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect(),
        }
    }

    /// `[z^n] f`.
    pub fn coefficient(&self, n: i64) -> Scalar {
        self.terms.iter().map(|(t, c)| c * t.coefficient(n)).sum()
    }

    /// Ordinary (Cauchy) product, via a common factored denominator and a
    /// fresh partial-fraction decomposition.
    pub fn cauchy_mul(&self, other: &Self) -> Result<Self> {
        self.same_mode(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.mode));
        }
        self.to_factored().mul(&other.to_factored()).partial_fractions(self.mode)
    }

    pub fn to_factored(&self) -> FactoredFraction {
        FactoredFraction::from_series(self)
    }

    /// The text form with every term in `c*z^n` / `c/(1-a*z)^m` shape.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (term, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c);
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let coeff = if !mag.is_compound() {
                mag.to_latex()
            } else {
                format!("({})", mag.to_latex())
            };
            match term {
                BasisTerm::Monomial(0) => out.push_str(&coeff),
                BasisTerm::Monomial(n) => {
                    if !mag.is_one() {
                        out.push_str(&coeff);
                        out.push(' ');
                    }
                    out.push_str(&format!("z^{{{n}}}"));
                }
                BasisTerm::Pole { alpha, mult } => {
                    let (aneg, amag) = split_sign(alpha);
                    let sign = if aneg { '+' } else { '-' };
                    let a = if amag.is_one() {
                        String::new()
                    } else if !amag.is_compound() {
                        amag.to_latex()
                    } else {
                        format!("({})", amag.to_latex())
                    };
                    out.push_str(&format!("\\frac{{{coeff}}}{{(1{sign}{a}z)^{{{mult}}}}}"));
                }
            }
        }
        out
    }

    pub fn to_json_value(&self) -> SeriesJson {
        let mut js = SeriesJson {
            mode: self.mode,
            monomials: Vec::new(),
            poles: Vec::new(),
        };
        for (t, c) in &self.terms {
            match t {
                BasisTerm::Monomial(n) => js.monomials.push(MonomialJson { n: *n, c: c.to_string() }),
                BasisTerm::Pole { alpha, mult } => js.poles.push(PoleJson {
                    alpha: alpha.to_string(),
                    m: *mult as i64,
                    c: c.to_string(),
                }),
            }
        }
        js
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("series json is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let js: SeriesJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        js.into_series()
    }
}

/// JSON shape: `{ "mode", "monomials": [{n, c}], "poles": [{alpha, m, c}] }`
/// with scalars in their text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub mode: Mode,
    pub monomials: Vec<MonomialJson>,
    pub poles: Vec<PoleJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub n: i64,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleJson {
    pub alpha: String,
    pub m: i64,
    pub c: String,
}

impl SeriesJson {
    pub fn into_series(self) -> Result<RationalSeries> {
        let mut terms = Vec::with_capacity(self.monomials.len() + self.poles.len());
        for mono in self.monomials {
            terms.push((BasisTerm::Monomial(mono.n), mono.c.parse()?));
        }
        for pole in self.poles {
            let mult = u32::try_from(pole.m)
                .ok()
                .filter(|&m| m > 0)
                .ok_or(Error::NonPositiveMultiplicity(pole.m))?;
            terms.push((BasisTerm::pole(pole.alpha.parse()?, mult), pole.c.parse()?));
        }
        RationalSeries::from_terms(self.mode, terms)
    }
}

/// `(is_negative, |c|)` under the printers' sign convention.
fn split_sign(c: &Scalar) -> (bool, Scalar) {
    if c.is_negative() {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn wrap_scalar(c: &Scalar) -> String {
    if !c.is_compound() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

/// Canonical text: monomials by ascending exponent, then poles by
/// `(alpha, mult)`, separated by ` + ` / ` - `. Parses back to the same
/// series.
impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (term, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = split_sign(c);
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match term {
                BasisTerm::Monomial(0) => write!(f, "{}", wrap_scalar(&mag))?,
                BasisTerm::Monomial(n) => {
                    if !mag.is_one() {
                        write!(f, "{}*", wrap_scalar(&mag))?;
                    }
                    write!(f, "z^{n}")?;
                }
                BasisTerm::Pole { alpha, mult } => {
                    let (aneg, amag) = split_sign(alpha);
                    write!(f, "{}/(1{}", wrap_scalar(&mag), if aneg { '+' } else { '-' })?;
                    if !amag.is_one() {
                        write!(f, "{}*", wrap_scalar(&amag))?;
                    }
                    f.write_str("z)")?;
                    if *mult > 1 {
                        write!(f, "^{mult}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.mode, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn pole(a: &str, m: u32) -> RationalSeries {
        RationalSeries::pole(Mode::Power, s(a), m).unwrap()
    }

    #[test]
    fn construction() {
        let z2 = BasisTerm::Monomial(2);
        let zero = RationalSeries::from_terms(Mode::Power, [(z2.clone(), s("1")), (z2, s("-1"))]).unwrap();
        assert!(zero.is_zero());

        let p = RationalSeries::from_terms(Mode::Power, [(BasisTerm::pole(s("2"), 1), s("3"))]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.term_coefficient(&BasisTerm::pole(s("2"), 1)), s("3"));

        assert_eq!(
            RationalSeries::from_terms(Mode::Power, [(BasisTerm::pole(s("0"), 1), s("1"))]),
            Err(Error::ZeroPole)
        );
        assert_eq!(
            RationalSeries::from_terms(Mode::Power, [(BasisTerm::pole(s("2"), 0), s("1"))]),
            Err(Error::NonPositiveMultiplicity(0))
        );
        assert_eq!(RationalSeries::monomial(Mode::Power, -1), Err(Error::NegativeExponent(-1)));
        assert!(RationalSeries::monomial(Mode::Laurent, -1).is_ok());
        assert_eq!(RationalSeries::pole_power(Mode::Power, s("5"), 0).unwrap(), RationalSeries::one(Mode::Power));
        assert_eq!(
            RationalSeries::pole_power(Mode::Power, s("5"), -2),
            Err(Error::NonPositiveMultiplicity(-2))
        );
    }

    #[test]
    fn linear_structure() {
        let f = pole("2", 1);
        let zero = RationalSeries::zero(Mode::Power);
        assert_eq!(f.add(&zero).unwrap(), f);
        assert!(f.scale(&Scalar::zero()).is_zero());
        assert_eq!(f.add(&f).unwrap(), f.scale(&s("2")));
        assert!(f.sub(&f).unwrap().is_zero());
        let g = RationalSeries::one(Mode::Laurent);
        assert_eq!(f.add(&g), Err(Error::ModeMismatch(Mode::Power, Mode::Laurent)));
    }

    #[test]
    fn coefficients() {
        let z3 = RationalSeries::monomial(Mode::Power, 3).unwrap();
        assert_eq!(z3.coefficient(3), s("1"));
        assert_eq!(z3.coefficient(2), s("0"));
        assert_eq!(pole("2", 2).coefficient(3), s("32"));
        assert_eq!(pole("2", 2).coefficient(-1), s("0"));
        assert_eq!(pole("i", 1).coefficient(2), s("-1"));
    }

    #[test]
    fn text_form() {
        let f = RationalSeries::from_terms(
            Mode::Laurent,
            [
                (BasisTerm::Monomial(-2), s("-3/2")),
                (BasisTerm::Monomial(0), s("1+i")),
                (BasisTerm::Monomial(4), s("1")),
                (BasisTerm::pole(s("-1"), 1), s("2")),
                (BasisTerm::pole(s("1"), 3), s("-1")),
                (BasisTerm::pole(s("1/2+i"), 2), s("i")),
            ],
        )
        .unwrap();
        assert_eq!(
            f.to_string(),
            "-3/2*z^-2 + (1+i) + z^4 + 2/(1+z) + i/(1-(1/2+i)*z)^2 - 1/(1-z)^3"
        );
        assert_eq!(RationalSeries::zero(Mode::Power).to_string(), "0");
        assert_eq!(pole("6", 1).to_latex(), "\\frac{1}{(1-6z)^{1}}");
    }

    #[test]
    fn json_round_trip() {
        let f = RationalSeries::from_terms(
            Mode::Power,
            [(BasisTerm::Monomial(1), s("2/3")), (BasisTerm::pole(s("i"), 2), s("-1"))],
        )
        .unwrap();
        let text = f.to_json();
        assert_eq!(
            text,
            r#"{"mode":"power","monomials":[{"n":1,"c":"2/3"}],"poles":[{"alpha":"i","m":2,"c":"-1"}]}"#
        );
        assert_eq!(RationalSeries::from_json(&text).unwrap(), f);
        assert!(RationalSeries::from_json(r#"{"mode":"power","monomials":[],"poles":[{"alpha":"0","m":1,"c":"1"}]}"#).is_err());
        assert!(RationalSeries::from_json(r#"{"mode":"power","monomials":[{"n":-1,"c":"1"}],"poles":[]}"#).is_err());
    }
}
