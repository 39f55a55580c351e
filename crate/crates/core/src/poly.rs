//! Univariate polynomials in `h` over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Degree of a polynomial. The zero polynomial has degree `NegInf`,
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial `c_0 + c_1 h + ... + c_n h^n`, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// The indeterminate `h`.
    pub fn h() -> Self {
        Poly {
            coeffs: vec![F::zero(), F::one()],
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }

    /// Builds a polynomial from ascending coefficients.
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `c * h^n`
    pub fn monomial(c: F, n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `h + c`
    pub fn linear(c: F) -> Self {
        Self::from_coeffs(vec![c, F::one()])
    }

    /// Ascending coefficients; empty for zero.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `h^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an integer, treating zero as degree 0.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for every element of the field, zero included.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<F> {
        match self.coeffs.len() {
            0 => Some(F::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(l) => self.scale(&l),
            None => Self::zero(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self)> {
        let lead_inv = b.leading().inv().ok_or(Error::DivisionByZero)?;
        let db = b.deg0();
        let mut r = self.coeffs.clone();
        if r.len() < b.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = r[i + db].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * bc.clone();
            }
            q[i] = c;
        }
        r.truncate(db);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// `p(h + m)`.
    pub fn shift(&self, m: i64) -> Self {
        if m == 0 || self.is_constant() {
            return self.clone();
        }
        let lin = Self::linear(F::from_i64(m));
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `σ(p)(h) = p(h - 1)`.
    pub fn sigma(&self) -> Self {
        self.shift(-1)
    }

    /// `σ⁻¹(p)(h) = p(h + 1)`.
    pub fn sigma_inv(&self) -> Self {
        self.shift(1)
    }

    /// Coefficients in the basis `e_k(h) = binomial(h, k)`.
    pub fn to_binomial(&self) -> Vec<F> {
        if self.is_zero() {
            return Vec::new();
        }
        // c_k = (Δ^k p)(0), read off a difference table of p(0), ..., p(d)
        let mut row: Vec<F> = (0..=self.deg0())
            .map(|j| self.eval(&F::from_i64(j as i64)))
            .collect();
        let mut out = Vec::with_capacity(row.len());
        while !row.is_empty() {
            out.push(row[0].clone());
            row = row.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
        }
        out
    }

    /// Inverse of [`Poly::to_binomial`].
    pub fn from_binomial(coeffs: &[F]) -> Self {
        let mut acc = Self::zero();
        let mut basis = Self::one();
        for (k, c) in coeffs.iter().enumerate() {
            acc = &acc + &basis.scale(c);
            // e_{k+1} = e_k * (h - k) / (k + 1)
            let next = &basis * &Self::linear(F::from_i64(-(k as i64)));
            basis = next.scale(&F::from_ratio(1, k as i64 + 1));
        }
        acc
    }

    /// `T_{a,b}(w) = a w(h+1) - b w(h)`.
    pub fn apply_t(a: &F, b: &F, w: &Self) -> Self {
        &w.sigma_inv().scale(a) - &w.scale(b)
    }

    /// Solves `a w(h+1) - b w(h) = target` for `w`.
    ///
    /// When `a == b` the solution is unique up to a constant; the one with
    /// vanishing `e_0` coefficient is returned.
    pub fn solve_t(a: &F, b: &F, target: &Self) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::domain("solve_T needs nonzero a and b"));
        }
        // With e_k(h+1) = e_k + e_{k-1}:
        //   T(sum w_k e_k) = sum ((a - b) w_k + a w_{k+1}) e_k
        let t = target.to_binomial();
        let diff = a.clone() - b.clone();
        let w: Vec<F> = if diff.is_zero() {
            let a_inv = a.inv().expect("a is nonzero");
            std::iter::once(F::zero())
                .chain(t.iter().map(|tk| tk.clone() * a_inv.clone()))
                .collect()
        } else {
            let d_inv = diff.inv().expect("a != b");
            let mut w = vec![F::zero(); t.len()];
            for k in (0..t.len()).rev() {
                let next = w.get(k + 1).cloned().unwrap_or_else(F::zero);
                w[k] = (t[k].clone() - a.clone() * next) * d_inv.clone();
            }
            w
        };
        Ok(Self::from_binomial(&w))
    }
}

/// Outcome of [`classify_t_image`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TImage<F: Field> {
    Nonconstant(Poly<F>),
    Constant(F),
}

/// Classifies `u(h+1) - c u(h)` for nonconstant `u` and nonzero `c`.
///
/// The image is never zero; it is a nonzero constant exactly when `c = 1`
/// and `u` is linear, in which case the constant is the slope of `u`.
pub fn classify_t_image<F: Field>(c: &F, u: &Poly<F>) -> Result<TImage<F>> {
    if c.is_zero() {
        return Err(Error::domain("c must be nonzero"));
    }
    if u.is_constant() {
        return Err(Error::domain("u must be nonconstant"));
    }
    let img = Poly::apply_t(&F::one(), c, u);
    match img.as_constant() {
        Some(k) if k.is_zero() => Err(Error::internal("T_{1,c}(u) vanished")),
        Some(k) => Ok(TImage::Constant(k)),
        None => Ok(TImage::Nonconstant(img)),
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> From<F> for Poly<F> {
    fn from(c: F) -> Self {
        Self::constant(c)
    }
}

fn zip_with<F: Field>(a: &Poly<F>, b: &Poly<F>, op: impl Fn(F, F) -> F) -> Poly<F> {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::from_coeffs((0..n).map(|i| op(a.coeff(i), b.coeff(i))).collect())
}

impl<F: Field> Add<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<F: Field> Sub<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl<F: Field> Mul<&Poly<F>> for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> { (&self).$m(&rhs) }
        }
        impl<F: Field> $tr<&Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: &Poly<F>) -> Poly<F> { (&self).$m(rhs) }
        }
        impl<F: Field> $tr<Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let r = c.coeff_repr();
            if n == 0 && r.compound {
                let s = c.to_string();
                if !first && !s.starts_with('-') {
                    write!(f, "+")?;
                }
                write!(f, "{s}")?;
                continue;
            }
            if r.negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if n == 0 {
                write!(f, "{}", r.magnitude)?;
                continue;
            }
            if r.compound {
                write!(f, "({})*", r.magnitude)?;
            } else if r.magnitude != "1" {
                write!(f, "{}*", r.magnitude)?;
            }
            match n {
                1 => write!(f, "h")?,
                _ => write!(f, "h^{n}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gaussian, Rational};

    type P = Poly<Rational>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn arithmetic_basics() {
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(P::zero().degree(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(&p(&[0, -2, 0, 0, -1]) + &p(&[0, 0, 0, 0, 1]), p(&[0, -2]));
        assert_eq!(p(&[1, 2, 3]).eval(&q(2, 1)), q(17, 1));
    }

    #[test]
    fn euclid_examples() {
        let (qq, r) = p(&[0, -2, 0, 0, -1]).div_rem(&p(&[-1, 0, 0, -1])).unwrap();
        assert_eq!((qq, r), (P::h(), p(&[0, -1])));
        let (qq, r) = p(&[0, -2]).div_rem(&p(&[-2, -2, 0, -2])).unwrap();
        assert_eq!((qq, r), (P::zero(), p(&[0, -2])));
        let x = p(&[3, 0, 5]);
        assert_eq!(x.div_rem(&P::one()).unwrap(), (x.clone(), P::zero()));
        assert_eq!(x.div_rem(&P::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).shift(1), p(&[1, 2, 1]));
        assert_eq!(P::h().shift(-1), p(&[-1, 1]));
        assert_eq!(p(&[7]).shift(5), p(&[7]));
        assert_eq!(p(&[1, -3, 0, 2]).shift(4).shift(-4), p(&[1, -3, 0, 2]));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(P::h().to_binomial(), vec![q(0, 1), q(1, 1)]);
        let e2 = P::from_coeffs(vec![q(0, 1), q(-1, 2), q(1, 2)]);
        assert_eq!(e2.to_binomial(), vec![q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(P::one().to_binomial(), vec![q(1, 1)]);
        assert_eq!(P::from_binomial(&e2.to_binomial()), e2);
    }

    #[test]
    fn solve_t_examples() {
        let one = q(1, 1);
        let w = P::solve_t(&one, &one, &P::h()).unwrap();
        assert_eq!(w, P::from_coeffs(vec![q(0, 1), q(-1, 2), q(1, 2)]));
        assert_eq!(P::solve_t(&q(2, 1), &one, &P::zero()).unwrap(), P::zero());
        assert_eq!(P::solve_t(&one, &q(2, 1), &P::one()).unwrap(), p(&[-1]));
        assert!(P::solve_t(&q(0, 1), &one, &P::one()).is_err());
    }

    #[test]
    fn classify_examples() {
        let one = q(1, 1);
        assert_eq!(classify_t_image(&one, &p(&[5, 3])).unwrap(), TImage::Constant(q(3, 1)));
        assert_eq!(
            classify_t_image(&q(2, 1), &P::h()).unwrap(),
            TImage::Nonconstant(p(&[1, -1]))
        );
        assert_eq!(
            classify_t_image(&one, &p(&[0, 0, 1])).unwrap(),
            TImage::Nonconstant(p(&[1, 2]))
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -2, 0, 0, -1]).to_string(), "-h^4-2*h");
        assert_eq!(p(&[1, 2, 1]).to_string(), "h^2+2*h+1");
        assert_eq!(P::from_coeffs(vec![q(-2, 3), q(2, 3)]).to_string(), "2/3*h-2/3");
        assert_eq!(P::zero().to_string(), "0");
        let g = Poly::from_coeffs(vec![
            Gaussian::from_parts((-1, 1), (-2, 1)),
            Gaussian::from_parts((0, 1), (-1, 1)),
            Gaussian::from_parts((1, 1), (2, 1)),
        ]);
        assert_eq!(g.to_string(), "(1+2*i)*h^2-i*h-1-2*i");
    }
}
