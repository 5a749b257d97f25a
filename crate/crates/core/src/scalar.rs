//! Exact Gaussian rationals, the coefficient field of every series and
//! operator in the crate.
//!
//! A [`Scalar`] is `re + im·i` with `re, im ∈ ℚ` stored as reduced
//! [`BigRational`]s, so structural equality is value equality. Real-only
//! inputs stay in ℚ automatically: no operation introduces an imaginary part
//! unless an operand already carries one.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(num.into(), den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Scalar::new(re, BigRational::zero())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Both real and imaginary parts nonzero; printers parenthesize these.
    pub fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// The value as an `i64`, if it is a real integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.re.to_integer().to_i64()
        } else {
            None
        }
    }

    /// Sign convention used by printers: negative when the first nonzero
    /// component (real, then imaginary) is negative.
    pub fn is_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `|x|² = re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut e = exp as u64;
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Nonnegative power; never fails.
    pub fn powu(&self, exp: u32) -> Self {
        self.pow(exp as i64).expect("nonnegative power is total")
    }

    pub fn to_latex(&self) -> String {
        fn frac(q: &BigRational) -> String {
            let n = q.numer().abs();
            if q.is_integer() {
                n.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", n, q.denom())
            }
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            if self.re.is_negative() {
                out.push('-');
            }
            out.push_str(&frac(&self.re));
        }
        if !self.im.is_zero() {
            if self.im.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if !self.im.abs().is_one() {
                out.push_str(&frac(&self.im));
            }
            out.push('i');
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::real(BigRational::from_integer(v.into()))
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::real(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::real(v)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(re, im)`. Not a field order; it only fixes printing
/// and map iteration order.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Canonical text: real part first, reduced fractions, `*i` suffix on the
/// imaginary part, zero parts omitted. Examples: `0`, `-3/2`, `i`,
/// `-1/2*i`, `3/2+1/2*i`, `1-i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut wrote = false;
        if !self.re.is_zero() {
            write!(f, "{}", self.re)?;
            wrote = true;
        }
        if !self.im.is_zero() {
            let mag = self.im.abs();
            if self.im.is_negative() {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            if mag.is_one() {
                f.write_str("i")?;
            } else {
                write!(f, "{}*i", mag)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return None;
    }
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num.parse().ok()?, den))
}

/// Accepts the printed form, e.g. `3/2+1/2*i`, `-i`, `2*i`, `1-i`, `7`.
/// Whitespace is ignored.
impl FromStr for Scalar {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::BadScalar(input.to_string());
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        // Split into at most two signed pieces at a '+' or '-' past position 0.
        let split = s
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k);
        let pieces: Vec<&str> = match split {
            Some(k) => vec![&s[..k], &s[k..]],
            None => vec![&s[..]],
        };
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for piece in pieces {
            let (neg, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            let (value, imaginary) = if body == "i" {
                (BigRational::one(), true)
            } else if let Some(mag) = body.strip_suffix("*i") {
                (parse_rational(mag).ok_or_else(bad)?, true)
            } else {
                (parse_rational(body).ok_or_else(bad)?, false)
            };
            let value = if neg { -value } else { value };
            if imaginary {
                if seen_im {
                    return Err(bad());
                }
                seen_im = true;
                im = value;
            } else {
                if seen_re || seen_im {
                    return Err(bad());
                }
                seen_re = true;
                re = value;
            }
        }
        Ok(Scalar::new(re, im))
    }
}

/// Generalized binomial `n(n−1)…(n−k+1)/k!` for any integer `n`.
pub fn binomial(n: i64, k: u32) -> Scalar {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k as i64 {
        num *= BigInt::from(n - t);
        den *= BigInt::from(t + 1);
    }
    Scalar::real(BigRational::new(num, den))
}

/// `x(x+1)…(x+j−1)`, equal to 1 when `j = 0`.
pub fn rising_factorial(x: &Scalar, j: u32) -> Scalar {
    (0..j as i64).map(|t| x + &Scalar::from(t)).product()
}

/// `x(x−1)…(x−j+1)`, equal to 1 when `j = 0`.
pub fn falling_factorial(x: &Scalar, j: u32) -> Scalar {
    (0..j as i64).map(|t| x - &Scalar::from(t)).product()
}

pub fn factorial(n: u32) -> Scalar {
    rising_factorial(&Scalar::one(), n)
}
