#![allow(dead_code)]

pub mod golden;
pub mod length;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sl2free::{DiagPair, EWord, Field, Poly, PolyMat2, Rational};

pub type Q = Rational;
pub type P = Poly<Rational>;
pub type M = PolyMat2<Rational>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// A small scalar, possibly zero; over a field containing `i` it has a
/// random imaginary part half of the time.
pub fn scalar<F: Field>(r: &mut StdRng) -> F {
    let n = r.gen_range(-6..=6);
    let d = r.gen_range(1..=4);
    let re = F::from_ratio(n, d);
    match F::imaginary_unit() {
        Some(i) if r.gen_bool(0.5) => re + i * F::from_ratio(r.gen_range(-3..=3), r.gen_range(1..=3)),
        _ => re,
    }
}

pub fn nonzero<F: Field>(r: &mut StdRng) -> F {
    loop {
        let x: F = scalar(r);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random polynomial of degree at most `max_deg`.
pub fn poly<F: Field>(r: &mut StdRng, max_deg: usize) -> Poly<F> {
    let d = r.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=d).map(|_| scalar(r)).collect())
}

/// Random polynomial of exact degree in `1..=max_deg`.
pub fn nonconstant<F: Field>(r: &mut StdRng, max_deg: usize) -> Poly<F> {
    let d = r.gen_range(1..=max_deg.max(1));
    let mut c: Vec<F> = (0..d).map(|_| scalar(r)).collect();
    c.push(nonzero(r));
    Poly::from_coeffs(c)
}

pub fn nonconstants<F: Field>(r: &mut StdRng, k: usize, max_deg: usize) -> Vec<Poly<F>> {
    (0..k).map(|_| nonconstant(r, max_deg)).collect()
}

pub fn diag_pair<F: Field>(r: &mut StdRng) -> DiagPair<F> {
    DiagPair::new(nonzero(r), nonzero(r)).unwrap()
}

/// A random word that is already a standard form.
pub fn standard_word<F: Field>(r: &mut StdRng, max_len: usize, max_deg: usize) -> EWord<F> {
    loop {
        let n = r.gen_range(0..=max_len);
        let fs: Vec<Poly<F>> = (0..n)
            .map(|i| {
                let boundary = i == 0 || i + 1 == n;
                if boundary && r.gen_bool(0.4) {
                    Poly::constant(scalar(r))
                } else {
                    nonconstant(r, max_deg)
                }
            })
            .collect();
        if n == 2 && fs.iter().all(Poly::is_zero) {
            continue;
        }
        return EWord::new(diag_pair(r), fs);
    }
}

/// A random word with no shape restrictions.
pub fn any_word<F: Field>(r: &mut StdRng, max_len: usize, max_deg: usize) -> EWord<F> {
    let n = r.gen_range(0..=max_len);
    let fs = (0..n)
        .map(|_| if r.gen_bool(0.4) { Poly::constant(scalar(r)) } else { poly(r, max_deg) })
        .collect();
    EWord::new(diag_pair(r), fs)
}

/// A random unit of word length at most `max_len`.
pub fn unit<F: Field>(r: &mut StdRng, max_len: usize, max_deg: usize) -> PolyMat2<F> {
    any_word(r, max_len, max_deg).expand()
}
