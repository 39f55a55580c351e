//! Exact coefficient fields.
//!
//! Two fields are provided: [`Rational`] (the rationals) and [`Gaussian`]
//! (the rationals adjoined `i`). Every algorithm in the crate is written
//! against the [`Field`] trait and works over either one.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// How a coefficient should be rendered inside a polynomial.
///
/// `magnitude` never carries a leading sign; `compound` is set when the
/// magnitude is a sum (e.g. `1+2*i`) and has to be parenthesised before it
/// multiplies a power of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRepr {
    pub negative: bool,
    pub magnitude: String,
    pub compound: bool,
}

/// An exact, computable field.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Name used by the command line `--field` switch.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_rational(r: BigRational) -> Self;

    /// `Some(i)` when the field contains a square root of `-1`.
    fn imaginary_unit() -> Option<Self>;

    /// The value as a rational number, when it is one.
    fn to_rational(&self) -> Option<BigRational>;

    /// Exact square root inside the field, if there is one.
    fn sqrt(&self) -> Option<Self>;

    fn coeff_repr(&self) -> CoeffRepr;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `n/d` as a field element. Panics when `d == 0`.
    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Integer power; negative exponents invert. Panics on `0^e` with `e < 0`.
    fn powi(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * sq.clone();
            }
            sq = sq.clone() * sq;
            n >>= 1;
        }
        acc
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

fn rational_repr(r: &BigRational) -> CoeffRepr {
    CoeffRepr {
        negative: r.is_negative(),
        magnitude: r.abs().to_string(),
        compound: false,
    }
}

/// Exact rational numbers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(n: i64, d: i64) -> Self {
        Self::from_ratio(n, d)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Rational(self.0 * rhs.0)
    }
}

impl Div for Rational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.0.is_zero(), "division by zero scalar");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Field for Rational {
    const NAME: &'static str = "rational";

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }

    fn from_rational(r: BigRational) -> Self {
        Rational(r)
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.0.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(&self.0).map(Rational)
    }

    fn coeff_repr(&self) -> CoeffRepr {
        rational_repr(&self.0)
    }
}

/// Gaussian rationals `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    /// `(re_n/re_d) + (im_n/im_d) i`.
    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        Gaussian {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        }
    }

    fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.coeff_repr();
        if !r.compound {
            let sign = if r.negative { "-" } else { "" };
            return write!(f, "{sign}{}", r.magnitude);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        let imag = self.im.abs();
        if imag.is_one() {
            write!(f, "{}{sign}i", self.re)
        } else {
            write!(f, "{}{sign}{imag}*i", self.re)
        }
    }
}

impl From<i64> for Gaussian {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl Add for Gaussian {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gaussian {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for Gaussian {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gaussian {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for Gaussian {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for Gaussian {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for Gaussian {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Field for Gaussian {
    const NAME: &'static str = "gaussian";

    fn zero() -> Self {
        Gaussian {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn one() -> Self {
        Gaussian {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn from_rational(r: BigRational) -> Self {
        Gaussian {
            re: r,
            im: BigRational::zero(),
        }
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Gaussian {
            re: BigRational::zero(),
            im: BigRational::one(),
        })
    }

    fn to_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn sqrt(&self) -> Option<Self> {
        // (x + yi)^2 = re + im*i  with  x^2 = (|z| + re)/2,  y^2 = (|z| - re)/2
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&modulus + &self.re) / &two))?;
        let mut y = rational_sqrt(&((&modulus - &self.re) / &two))?;
        if self.im.is_negative() {
            y = -y;
        }
        let root = Gaussian { re: x, im: y };
        (root.clone() * root.clone() == *self).then_some(root)
    }

    fn coeff_repr(&self) -> CoeffRepr {
        if self.im.is_zero() {
            return rational_repr(&self.re);
        }
        let imag = if self.im.abs().is_one() {
            "i".to_string()
        } else {
            format!("{}*i", self.im.abs())
        };
        if self.re.is_zero() {
            return CoeffRepr {
                negative: self.im.is_negative(),
                magnitude: imag,
                compound: false,
            };
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        CoeffRepr {
            negative: self.re.is_negative(),
            magnitude: format!("{}{}{}", self.re.abs(), if self.re.is_negative() { flip(sign) } else { sign }, imag),
            compound: true,
        }
    }
}

fn flip(c: char) -> char {
    if c == '+' {
        '-'
    } else {
        '+'
    }
}
