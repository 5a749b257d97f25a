//! The Heisenberg–Weyl algebra `⟨a, a† | a a† − a† a = 1⟩` in its normally
//! ordered basis `(a†)^k a^l`, and its Bargmann–Fock action on rational
//! series: `a ↦ d/dz`, `a† ↦ multiplication by z`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::scalar::{binomial, factorial, Scalar};
use crate::series::{BasisTerm, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `a`, written `a`.
    Lower,
    /// `a†`, written `A`.
    Raise,
}

/// A product of generators, read left to right as operators (the rightmost
/// letter acts first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    /// All `2^len` words of the given length.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        (0u32..1 << len).map(move |bits| {
            Word((0..len)
                .map(|k| if bits >> k & 1 == 1 { Letter::Raise } else { Letter::Lower })
                .collect())
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid letter {0:?} in word (expected 'a' or 'A')")]
pub struct BadLetter(pub char);

impl FromStr for Word {
    type Err = BadLetter;
    fn from_str(s: &str) -> Result<Self, BadLetter> {
        s.chars()
            .map(|c| match c {
                'a' => Ok(Letter::Lower),
                'A' => Ok(Letter::Raise),
                other => Err(BadLetter(other)),
            })
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::Lower => "a",
                Letter::Raise => "A",
            })?;
        }
        Ok(())
    }
}

/// `Σ c_{k,l} (a†)^k a^l`, no zero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), Scalar>,
}

/// Grading by `k − l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Any,
    Homogeneous(i64),
    Inhomogeneous,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::monomial(0, 0)
    }

    /// `(a†)^k a^l`.
    pub fn monomial(raises: u32, lowers: u32) -> Self {
        Self::zero().with_term(raises, lowers, Scalar::one())
    }

    pub fn lower() -> Self {
        Self::monomial(0, 1)
    }

    pub fn raise() -> Self {
        Self::monomial(1, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for ((k, l), c) in terms {
            out.add_term(k, l, c);
        }
        out
    }

    fn with_term(mut self, k: u32, l: u32, c: Scalar) -> Self {
        self.add_term(k, l, c);
        self
    }

    pub fn add_term(&mut self, k: u32, l: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((k, l)).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(k, l));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: u32, l: u32) -> Scalar {
        self.terms.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Scalar)> {
        self.terms.iter().map(|(kl, c)| (*kl, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((k, l), c) in other.terms() {
            out.add_term(k, l, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms().map(|(kl, x)| (kl, x * c)))
    }

    /// Normally ordered product, using
    /// `a^l (a†)^k = Σ_i i!·C(l,i)·C(k,i)·(a†)^{k−i} a^{l−i}`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((k1, l1), c1) in self.terms() {
            for ((k2, l2), c2) in other.terms() {
                let c = c1 * c2;
                for i in 0..=l1.min(k2) {
                    let w = factorial(i) * binomial(l1 as i64, i) * binomial(k2 as i64, i);
                    out.add_term(k1 + k2 - i, l1 + l2 - i, &c * &w);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mul(self))
    }

    pub fn degree(&self) -> Degree {
        let mut degrees = self.terms.keys().map(|&(k, l)| k as i64 - l as i64);
        match degrees.next() {
            None => Degree::Any,
            Some(e) if degrees.all(|d| d == e) => Degree::Homogeneous(e),
            Some(_) => Degree::Inhomogeneous,
        }
    }

    fn ordered_terms(&self) -> Vec<((u32, u32), &Scalar)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|((k1, l1), _), ((k2, l2), _)| (k2 + l2, k2).cmp(&(k1 + l1, k1)));
        v
    }

    pub fn to_latex(&self) -> String {
        self.render(|k, l| {
            let mut parts = Vec::new();
            if k > 0 {
                parts.push(format!("(a^\\dagger)^{{{k}}}"));
            }
            if l > 0 {
                parts.push(format!("a^{{{l}}}"));
            }
            parts.join(" ")
        }, |c| c.to_latex(), " ")
    }

    fn render(
        &self,
        word: impl Fn(u32, u32) -> String,
        scalar: impl Fn(&Scalar) -> String,
        times: &str,
    ) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (pos, ((k, l), c)) in self.ordered_terms().into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            out.push_str(match (pos, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mag_text = if !mag.is_compound() {
                scalar(&mag)
            } else {
                format!("({})", scalar(&mag))
            };
            if k == 0 && l == 0 {
                out.push_str(&mag_text);
            } else {
                if !mag.is_one() {
                    out.push_str(&mag_text);
                    out.push_str(times);
                }
                out.push_str(&word(k, l));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let terms: Vec<_> = self
            .ordered_terms()
            .into_iter()
            .map(|((k, l), c)| serde_json::json!({ "k": k, "l": l, "c": c.to_string() }))
            .collect();
        serde_json::json!({ "terms": terms }).to_string()
    }
}

/// Terms `c*A^k a^l` ordered by `(k+l, k)` descending.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.render(
            |k, l| {
                let mut parts = Vec::new();
                if k > 0 {
                    parts.push(format!("A^{k}"));
                }
                if l > 0 {
                    parts.push(format!("a^{l}"));
                }
                parts.join(" ")
            },
            |c| c.to_string(),
            "*",
        );
        f.write_str(&text)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Normal form of a word by repeated rewriting `a a† → a† a + 1`.
///
/// Words are processed in decreasing `(length, inversions)` order, so each
/// intermediate word is expanded once with its merged coefficient.
pub fn normal_order(word: &Word) -> NormalForm {
    fn inversions(w: &[Letter]) -> usize {
        let mut lowers = 0;
        let mut inv = 0;
        for l in w {
            match l {
                Letter::Lower => lowers += 1,
                Letter::Raise => inv += lowers,
            }
        }
        inv
    }

    let mut pending: BTreeMap<(usize, usize, Vec<Letter>), Scalar> = BTreeMap::new();
    let mut out = NormalForm::zero();
    let w = word.0.clone();
    pending.insert((w.len(), inversions(&w), w), Scalar::one());
    while let Some(((_, _, w), c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let Some(pos) = w.windows(2).position(|p| p == [Letter::Lower, Letter::Raise]) else {
            let k = w.iter().filter(|&&l| l == Letter::Raise).count() as u32;
            out.add_term(k, w.len() as u32 - k, c);
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(pos, pos + 1);
        let mut dropped = w;
        dropped.drain(pos..pos + 2);
        for next in [swapped, dropped] {
            let key = (next.len(), inversions(&next), next);
            *pending.entry(key).or_default() += &c;
        }
    }
    out
}

/// `β(a) = d/dz` on a series.
pub fn lower(f: &RationalSeries) -> RationalSeries {
    let mut out = RationalSeries::zero(f.mode());
    for (t, c) in f.terms() {
        match t {
            BasisTerm::Monomial(n) => {
                if *n != 0 {
                    out.push(BasisTerm::Monomial(n - 1), c * Scalar::from(*n));
                }
            }
            BasisTerm::Pole { alpha, mult } => {
                let w = Scalar::from(*mult as i64) * alpha;
                out.push(BasisTerm::pole(alpha.clone(), mult + 1), c * w);
            }
        }
    }
    out
}

/// `β(a†)`: multiplication by `z`, using
/// `z/(1−αz)^m = α^{−1}·(1/(1−αz)^m − 1/(1−αz)^{m−1})`.
pub fn raise(f: &RationalSeries) -> RationalSeries {
    let mut out = RationalSeries::zero(f.mode());
    for (t, c) in f.terms() {
        match t {
            BasisTerm::Monomial(n) => out.push(BasisTerm::Monomial(n + 1), c.clone()),
            BasisTerm::Pole { alpha, mult } => {
                let w = c * alpha.inv().expect("pole values are nonzero");
                let below = if *mult == 1 {
                    BasisTerm::Monomial(0)
                } else {
                    BasisTerm::pole(alpha.clone(), mult - 1)
                };
                out.push(t.clone(), w.clone());
                out.push(below, -w);
            }
        }
    }
    out
}

fn apply_letter(l: Letter, f: &RationalSeries) -> RationalSeries {
    match l {
        Letter::Lower => lower(f),
        Letter::Raise => raise(f),
    }
}

/// Bargmann–Fock action of a word; the rightmost letter acts first.
pub fn bf_apply_word(w: &Word, f: &RationalSeries) -> RationalSeries {
    w.0.iter().rev().fold(f.clone(), |acc, &l| apply_letter(l, &acc))
}

/// Bargmann–Fock action of a normally ordered element.
pub fn bf_apply(x: &NormalForm, f: &RationalSeries) -> RationalSeries {
    let mut out = RationalSeries::zero(f.mode());
    // group by number of lowers so each a^l f is computed once
    let mut lowered = f.clone();
    let mut done = 0u32;
    let mut by_lowers: BTreeMap<u32, Vec<(u32, &Scalar)>> = BTreeMap::new();
    for ((k, l), c) in x.terms() {
        by_lowers.entry(l).or_default().push((k, c));
    }
    for (l, group) in by_lowers {
        while done < l {
            lowered = lower(&lowered);
            done += 1;
        }
        for (k, c) in group {
            let raised = (0..k).fold(lowered.clone(), |acc, _| raise(&acc));
            out = out.add(&raised.scale(c)).expect("same mode");
        }
    }
    out
}
