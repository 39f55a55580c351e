//! 2x2 polynomial matrices, the generators `E(u)`, words in them, twisted
//! conjugation and the cocycle of a unit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Field;

/// A 2x2 matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMat2<F: Field> {
    pub m: [[Poly<F>; 2]; 2],
}

impl<F: Field> PolyMat2<F> {
    pub fn new(a: Poly<F>, b: Poly<F>, c: Poly<F>, d: Poly<F>) -> Self {
        PolyMat2 { m: [[a, b], [c, d]] }
    }

    pub fn identity() -> Self {
        Self::diag(F::one(), F::one())
    }

    pub fn zero() -> Self {
        Self::new(Poly::zero(), Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn diag(a: F, b: F) -> Self {
        Self::new(Poly::constant(a), Poly::zero(), Poly::zero(), Poly::constant(b))
    }

    /// `E(u) = [[u, 1], [-1, 0]]`
    pub fn e(u: Poly<F>) -> Self {
        Self::new(u, Poly::one(), Poly::from_i64(-1), Poly::zero())
    }

    /// `E(u)^{-1} = [[0, -1], [1, u]]`
    pub fn e_inv(u: Poly<F>) -> Self {
        Self::new(Poly::zero(), Poly::from_i64(-1), Poly::one(), u)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<F> {
        &self.m[i][j]
    }

    pub fn det(&self) -> Poly<F> {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    /// True when the determinant is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.unit_det().is_some()
    }

    /// The determinant when it is a nonzero constant.
    pub fn unit_det(&self) -> Option<F> {
        self.det().as_constant().filter(|d| !d.is_zero())
    }

    pub fn require_unit(&self) -> Result<F> {
        self.unit_det()
            .ok_or_else(|| Error::NotInvertible(self.det().to_string()))
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(a, c, b, d)
    }

    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self.require_unit()?.inv().expect("unit determinant");
        let [[a, b], [c, d]] = &self.m;
        Ok(Self::new(d.scale(&det_inv), (-b).scale(&det_inv), (-c).scale(&det_inv), a.scale(&det_inv)))
    }

    pub fn map(&self, f: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(f(a), f(b), f(c), f(d))
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|p| p.scale(c))
    }

    /// `A(h + m)`.
    pub fn shift(&self, m: i64) -> Self {
        self.map(|p| p.shift(m))
    }

    /// `A(h - 1)`.
    pub fn sigma(&self) -> Self {
        self.shift(-1)
    }

    /// `A(h + 1)`.
    pub fn sigma_inv(&self) -> Self {
        self.shift(1)
    }

    pub fn is_constant(&self) -> bool {
        self.m.iter().flatten().all(Poly::is_constant)
    }

    /// Entry `(i, j)` as a scalar, if constant.
    pub fn constant_entry(&self, i: usize, j: usize) -> Option<F> {
        self.m[i][j].as_constant()
    }

    /// `(a, b)` when the matrix is `diag(a, b)` with constant entries.
    pub fn as_constant_diag(&self) -> Option<(F, F)> {
        if !self.m[0][1].is_zero() || !self.m[1][0].is_zero() {
            return None;
        }
        Some((self.constant_entry(0, 0)?, self.constant_entry(1, 1)?))
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Poly<F>; 2]) -> [Poly<F>; 2] {
        [
            &(&self.m[0][0] * &v[0]) + &(&self.m[0][1] * &v[1]),
            &(&self.m[1][0] * &v[0]) + &(&self.m[1][1] * &v[1]),
        ]
    }

    /// Largest entry degree (0 for the zero matrix).
    pub fn max_degree(&self) -> usize {
        self.m.iter().flatten().map(Poly::deg0).max().unwrap_or(0)
    }
}

/// `P(h)^{-1} A(h) P(h+1)`.
pub fn twisted_conjugate<F: Field>(a: &PolyMat2<F>, p: &PolyMat2<F>) -> Result<PolyMat2<F>> {
    Ok(&(&p.inverse()? * a) * &p.sigma_inv())
}

/// Checks `P(h)^{-1} A(h) P(h+1) = B(h)` in the division-free form
/// `A(h) P(h+1) = P(h) B(h)`.
pub fn is_twisted_conjugate<F: Field>(a: &PolyMat2<F>, p: &PolyMat2<F>, b: &PolyMat2<F>) -> bool {
    p.is_unit() && &(a * &p.sigma_inv()) == &(p * b)
}

/// The 1-cocycle of a unit `K`:
/// `c(m) = K(h) K(h+1) ... K(h+m-1)` for `m >= 0` and
/// `c(-m) = K(h-1)^{-1} ... K(h-m)^{-1}`.
pub fn cocycle<F: Field>(k: &PolyMat2<F>, m: i64) -> Result<PolyMat2<F>> {
    k.require_unit()?;
    let mut acc = PolyMat2::identity();
    if m >= 0 {
        for j in 0..m {
            acc = &acc * &k.shift(j);
        }
    } else {
        let kinv = k.inverse()?;
        for j in 1..=-m {
            acc = &acc * &kinv.shift(-j);
        }
    }
    Ok(acc)
}

/// An ordered pair of nonzero scalars standing for `diag(d1, d2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagPair<F: Field> {
    pub d1: F,
    pub d2: F,
}

impl<F: Field> DiagPair<F> {
    pub fn new(d1: F, d2: F) -> Result<Self> {
        if d1.is_zero() || d2.is_zero() {
            return Err(Error::domain("diagonal entries must be nonzero"));
        }
        Ok(DiagPair { d1, d2 })
    }

    pub fn identity() -> Self {
        DiagPair {
            d1: F::one(),
            d2: F::one(),
        }
    }

    pub fn swap(&self) -> Self {
        DiagPair {
            d1: self.d2.clone(),
            d2: self.d1.clone(),
        }
    }

    /// `diag(a, b)` for even `k`, `diag(b, a)` for odd `k`.
    pub fn bracket(&self, k: usize) -> Self {
        if k % 2 == 0 {
            self.clone()
        } else {
            self.swap()
        }
    }

    pub fn neg(&self) -> Self {
        DiagPair {
            d1: -self.d1.clone(),
            d2: -self.d2.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        DiagPair {
            d1: self.d1.clone() * o.d1.clone(),
            d2: self.d2.clone() * o.d2.clone(),
        }
    }

    pub fn inv(&self) -> Self {
        DiagPair {
            d1: self.d1.inv().expect("nonzero"),
            d2: self.d2.inv().expect("nonzero"),
        }
    }

    pub fn matrix(&self) -> PolyMat2<F> {
        PolyMat2::diag(self.d1.clone(), self.d2.clone())
    }

    /// True when `{d1, d2} = {a, b}` as multisets.
    pub fn same_multiset(&self, a: &F, b: &F) -> bool {
        (self.d1 == *a && self.d2 == *b) || (self.d1 == *b && self.d2 == *a)
    }
}

impl<F: Field> fmt::Display for DiagPair<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag({},{})", self.d1, self.d2)
    }
}

/// The word `diag(d1, d2) E(u_1) ... E(u_k)`, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EWord<F: Field> {
    pub front: DiagPair<F>,
    pub factors: Vec<Poly<F>>,
}

impl<F: Field> EWord<F> {
    pub fn new(front: DiagPair<F>, factors: Vec<Poly<F>>) -> Self {
        EWord { front, factors }
    }

    /// `E(u_1) ... E(u_k)` with identity front.
    pub fn plain(factors: Vec<Poly<F>>) -> Self {
        EWord {
            front: DiagPair::identity(),
            factors,
        }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn expand(&self) -> PolyMat2<F> {
        self.factors
            .iter()
            .fold(self.front.matrix(), |acc, u| &acc * &PolyMat2::e(u.clone()))
    }
}

impl<F: Field> fmt::Display for EWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.front)?;
        for u in &self.factors {
            write!(f, " E({u})")?;
        }
        Ok(())
    }
}

impl<F: Field> Mul<&PolyMat2<F>> for &PolyMat2<F> {
    type Output = PolyMat2<F>;
    fn mul(self, r: &PolyMat2<F>) -> PolyMat2<F> {
        let a = &self.m;
        let b = &r.m;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        PolyMat2::new(cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1))
    }
}

impl<F: Field> Add<&PolyMat2<F>> for &PolyMat2<F> {
    type Output = PolyMat2<F>;
    fn add(self, r: &PolyMat2<F>) -> PolyMat2<F> {
        let (a, b) = (&self.m, &r.m);
        PolyMat2::new(&a[0][0] + &b[0][0], &a[0][1] + &b[0][1], &a[1][0] + &b[1][0], &a[1][1] + &b[1][1])
    }
}

impl<F: Field> Sub<&PolyMat2<F>> for &PolyMat2<F> {
    type Output = PolyMat2<F>;
    fn sub(self, r: &PolyMat2<F>) -> PolyMat2<F> {
        self + &(-r)
    }
}

impl<F: Field> Neg for &PolyMat2<F> {
    type Output = PolyMat2<F>;
    fn neg(self) -> PolyMat2<F> {
        self.map(|p| -p)
    }
}

impl<F: Field> Mul for PolyMat2<F> {
    type Output = PolyMat2<F>;
    fn mul(self, r: PolyMat2<F>) -> PolyMat2<F> {
        &self * &r
    }
}

impl<F: Field> fmt::Debug for PolyMat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for PolyMat2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type P = Poly<Rational>;
    type M = PolyMat2<Rational>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| Rational::from(x)).collect())
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn k1() -> M {
        M::new(p(&[0, -2, 0, 0, -1]), p(&[-1, 0, 0, -1]), p(&[1, 0, 0, -1, 0, 0, -1]), p(&[0, 0, 0, 0, 0, -1]))
    }

    #[test]
    fn e_zero_squares_to_minus_identity() {
        assert_eq!(&M::e(P::zero()) * &M::e(P::zero()), -&M::identity());
        assert_eq!(M::e(p(&[1, 2, 3])).det(), P::one());
        assert_eq!(M::diag(r(2), r(5)).det(), p(&[10]));
    }

    #[test]
    fn inverses() {
        let v = p(&[0, 0, 1]);
        let e0 = M::e(P::zero());
        assert_eq!(M::e(v.clone()).inverse().unwrap(), &(&e0 * &M::e(-&v)) * &e0);
        assert_eq!(M::e_inv(v.clone()), M::e(v).inverse().unwrap());
        assert_eq!(
            M::diag(r(2), r(3)).inverse().unwrap(),
            M::diag(Rational::new(1, 2), Rational::new(1, 3))
        );
        let u = M::new(P::one(), P::zero(), p(&[0, 0, 1]), P::one());
        assert_eq!(u.inverse().unwrap(), M::new(P::one(), P::zero(), p(&[0, 0, -1]), P::one()));
        assert!(matches!(M::diag(r(1), r(0)).inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(EWord::<Rational>::plain(vec![]).expand(), M::identity());
        let w = EWord::new(
            DiagPair::new(r(-1), r(-1)).unwrap(),
            vec![P::zero(), p(&[0, 0, 1]), P::h(), p(&[0, 0, -1]), P::h()],
        );
        assert_eq!(w.expand(), k1());
        let w2 = EWord::new(
            DiagPair::new(r(-6), r(-1)).unwrap(),
            vec![P::constant(Rational::new(-1, 3)), p(&[-3, 1]), p(&[-1, 0, -1]), P::zero()],
        );
        let k2 = M::new(p(&[0, -2]), p(&[-2, -2, 0, -2]), p(&[3, -1]), p(&[2, -1, 3, -1]));
        assert_eq!(w2.expand(), k2);
    }

    #[test]
    fn twisted_conjugation_examples() {
        let a = k1();
        assert_eq!(twisted_conjugate(&a, &M::identity()).unwrap(), a);
        let v = p(&[1, 0, 2]);
        let upper = M::new(P::one(), v.clone(), P::zero(), P::one());
        let got = twisted_conjugate(&M::diag(r(2), r(3)), &upper).unwrap();
        let expect = &v.sigma_inv().scale(&r(2)) - &v.scale(&r(3));
        assert_eq!(got, M::new(p(&[2]), expect, P::zero(), p(&[3])));
        assert!(is_twisted_conjugate(&M::diag(r(2), r(3)), &upper, &got));
        // B = P^{-1} A P(h+1) gives back A through the conjugator P^{-1}
        let pm = M::e(p(&[0, 1, 1]));
        let b = twisted_conjugate(&a, &pm).unwrap();
        assert_eq!(twisted_conjugate(&b, &pm.inverse().unwrap()).unwrap(), a);
    }

    #[test]
    fn cocycle_examples() {
        let k = M::e(P::h());
        assert_eq!(cocycle(&k, 0).unwrap(), M::identity());
        assert_eq!(cocycle(&M::diag(r(2), r(3)), 3).unwrap(), M::diag(r(8), r(27)));
        assert_eq!(
            cocycle(&k, 2).unwrap(),
            M::new(p(&[-1, 1, 1]), P::h(), p(&[-1, -1]), p(&[-1]))
        );
        assert_eq!(&cocycle(&k, 2).unwrap() * &cocycle(&k, -2).unwrap().shift(2), M::identity());
    }

    #[test]
    fn display() {
        assert_eq!(M::e(P::h()).to_string(), "[[h,1],[-1,0]]");
        let w = EWord::new(DiagPair::new(r(-1), r(-1)).unwrap(), vec![P::zero(), p(&[0, 0, 1])]);
        assert_eq!(w.to_string(), "diag(-1,-1) E(0) E(h^2)");
    }
}
