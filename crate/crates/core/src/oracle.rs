//! Fixed-window coefficient expansions.
//!
//! This is the ground truth every closed formula is checked against. It only
//! touches [`Scalar`] arithmetic and the raw term list of a series; pole
//! coefficients come from the ratio recurrence
//! `c_{n+1} = α·c_n·(n+m)/(n+1)`, never from the binomial helpers the
//! closed-form code uses.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{BasisTerm, Mode, RationalSeries};

/// Default window length for oracle comparisons.
pub const DEFAULT_DEPTH: usize = 64;

/// Coefficients of `z^offset .. z^(offset+len-1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    offset: i64,
    coeffs: Vec<Scalar>,
}

impl TruncatedSeries {
    pub fn new(offset: i64, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyWindow);
        }
        Ok(TruncatedSeries { offset, coeffs })
    }

    pub fn zeros(offset: i64, len: usize) -> Result<Self> {
        Self::new(offset, vec![Scalar::zero(); len])
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; zero outside the window.
    pub fn get(&self, n: i64) -> Scalar {
        usize::try_from(n - self.offset)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in window order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        (self.offset..).zip(self.coeffs.iter())
    }

    /// The first `len` entries.
    pub fn prefix(&self, len: usize) -> Result<Self> {
        Self::new(self.offset, self.coeffs[..len.min(self.coeffs.len())].to_vec())
    }

    fn same_window(&self, other: &Self) -> Result<()> {
        if self.offset == other.offset && self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::WindowMismatch(self.offset, self.len(), other.offset, other.len()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self::new(self.offset, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Entrywise product: the Hadamard product on the window.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).collect();
        Self::new(self.offset, coeffs)
    }

    /// Cauchy convolution. Two windows starting at `o` produce a window
    /// starting at `2o` of the same length, which is exact whenever neither
    /// operand has support below `o`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        let n = self.len();
        let mut coeffs = vec![Scalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Self::new(2 * self.offset, coeffs)
    }

    /// Termwise derivative, same offset, one entry shorter:
    /// entry at `z^e` becomes `(e+1)·c_{e+1}`.
    pub fn diff(&self) -> Result<Self> {
        let coeffs = self
            .iter()
            .skip(1)
            .map(|(e, c)| c * Scalar::from(e))
            .collect();
        Self::new(self.offset, coeffs)
    }

    /// Multiplication by `z`: same window, top coefficient dropped.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.len());
        coeffs.push(Scalar::zero());
        coeffs.extend(self.coeffs[..self.len() - 1].iter().cloned());
        TruncatedSeries {
            offset: self.offset,
            coeffs,
        }
    }

    /// `n<TAB>coefficient` per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (e, c) in self.iter() {
            out.push_str(&format!("{e}\t{c}\n"));
        }
        out
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{} {:?}", self.offset, self.coeffs)
    }
}

/// Natural window start: 0 in power mode, `min(0, lowest exponent)` in
/// Laurent mode.
pub fn natural_offset(f: &RationalSeries) -> i64 {
    match f.mode() {
        Mode::Power => 0,
        Mode::Laurent => f.min_exponent().map_or(0, |n| n.min(0)),
    }
}

pub fn truncate(f: &RationalSeries, len: usize) -> Result<TruncatedSeries> {
    truncate_at(f, natural_offset(f), len)
}

/// Expansion of `f` on the window `[offset, offset+len)`.
pub fn truncate_at(f: &RationalSeries, offset: i64, len: usize) -> Result<TruncatedSeries> {
    let mut out = TruncatedSeries::zeros(offset, len)?;
    let top = offset + len as i64;
    for (term, c) in f.terms() {
        match term {
            BasisTerm::Monomial(n) => {
                if (offset..top).contains(n) {
                    out.coeffs[(n - offset) as usize] += c;
                }
            }
            BasisTerm::Pole { alpha, mult } => {
                let m = Scalar::from(*mult as i64);
                let mut cur = c.clone();
                for n in 0..top {
                    if n >= offset {
                        out.coeffs[(n - offset) as usize] += &cur;
                    }
                    // c_{n+1} = α·c_n·(n+m)/(n+1)
                    let n_s = Scalar::from(n);
                    cur = &cur * alpha * (&n_s + &m) * Scalar::ratio(1, n + 1);
                }
            }
        }
    }
    Ok(out)
}
