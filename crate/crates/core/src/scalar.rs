//! Exact elements of the Gaussian rationals Q(i).
//!
//! Both parts are [`BigRational`], which keeps every value in lowest terms
//! with a positive denominator, so structural equality and hashing agree with
//! numeric equality.
//!
//! Text form: `3/2`, `-1+2i`, `1/2-3/4i`, `i`, `-i`, `0`.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_i128(n: i128) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `a/b + (c/d) i`. Panics if a denominator is zero.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
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

    /// Real integer value, if the element is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        GaussianRational::zero()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        // skip the bigint work for the very common real * real case
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl core::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = GaussianRational>>(iter: I) -> Self {
        iter.fold(GaussianRational::zero(), |acc, x| acc + x)
    }
}

fn write_imag(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im).is_one() {
        f.write_str("-i")
    } else {
        write!(f, "{}i", im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.is_positive() {
                    f.write_str("+")?;
                }
                write_imag(f, &self.im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(alloc::format!("invalid scalar `{}`", whole));
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits_ok = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(num) {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        Some(d) => {
            if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(alloc::format!("zero denominator in `{}`", whole)));
    }
    Ok(BigRational::new(num, den))
}

fn parse_imag_coefficient(s: &str, whole: &str) -> Result<BigRational, Error> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => parse_rational(s.strip_suffix('*').unwrap_or(s), whole),
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".to_string()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from(parse_rational(&s, input)?));
        };
        // split point between real and imaginary parts: last sign not at the start
        let split = body.char_indices().rfind(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k);
        match split {
            Some(k) => {
                let re = parse_rational(&body[..k], input)?;
                let im = parse_imag_coefficient(&body[k..], input)?;
                Ok(GaussianRational::new(re, im))
            }
            None => Ok(GaussianRational::new(BigRational::zero(), parse_imag_coefficient(body, input)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from_parts(3, 2, 0, 1).to_string(), "3/2");
        assert_eq!(GaussianRational::from_parts(-1, 1, 2, 1).to_string(), "-1+2i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        assert_eq!(GaussianRational::from_parts(1, 2, -3, 4).to_string(), "1/2-3/4i");
        assert_eq!(GaussianRational::from_parts(0, 1, 5, 3).to_string(), "5/3i");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(gr("3/2"), GaussianRational::from_parts(3, 2, 0, 1));
        assert_eq!(gr("-1+2i"), GaussianRational::from_parts(-1, 1, 2, 1));
        assert_eq!(gr("0"), GaussianRational::zero());
        assert_eq!(gr("i"), GaussianRational::i());
        assert_eq!(gr("-i"), -GaussianRational::i());
        assert_eq!(gr("1 - 3/4 i"), GaussianRational::from_parts(1, 1, -3, 4));
        assert_eq!(gr("6/4"), GaussianRational::from_parts(3, 2, 0, 1));
        assert_eq!(gr("2*i"), GaussianRational::from_parts(0, 1, 2, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "abc", "1//2", "--1", "1+", "/2", "2j"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }

    #[test]
    fn normalizes_eagerly() {
        let a = GaussianRational::from_parts(2, 4, -6, -8);
        let b = GaussianRational::from_parts(1, 2, 3, 4);
        assert_eq!(a, b);
        assert_eq!(a.re().denom(), &BigInt::from(2));
    }

    #[test]
    fn field_arithmetic() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        let z = gr("3-4i");
        assert_eq!(&z * &z.inv().unwrap(), GaussianRational::one());
        assert_eq!(z.norm_sqr(), BigRational::from_integer(BigInt::from(25)));
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(&gr("1+i") / &gr("1-i"), i);
    }
}
