//! Random instances for the conjugated-length rules.

use rand::rngs::StdRng;
use rand::Rng;

use sl2free::conjugacy::{FirstFactor, LastFactor};
use sl2free::factorization::length;
use sl2free::polymat::twisted_conjugate;
use sl2free::{EWord, Field, Poly, Rational};

use super::{nonconstant, nonconstants, nonzero, scalar};

/// Draws `u` (k nonconstant factors) and a conjugator `P = E(v_1)...E(v_p)`
/// of the requested shape; returns `(k, length of P^-1 E(u) P(h+1))`.
pub fn conjugated_length(r: &mut StdRng, first: FirstFactor, p: usize, last: LastFactor) -> (usize, usize) {
    use FirstFactor::*;
    use LastFactor::*;
    let k = r.gen_range(1..=3);
    let u: Vec<Poly<Rational>> = nonconstants(r, k, 3);
    let gamma: Rational = nonzero(r);
    let v1 = match first {
        Constant => Poly::constant(nonzero(r)),
        Generic => loop {
            let x = nonconstant(r, 3);
            if !(&u[0] - &x).is_constant() {
                break x;
            }
        },
        Shifted => &u[0] - &Poly::constant(gamma.clone()),
    };
    let mut v = vec![v1];
    for _ in 1..p.saturating_sub(1) {
        v.push(nonconstant(r, 3));
    }
    let inv_diff = (-gamma).inv().unwrap();
    if p > 1 {
        v.push(match last {
            Nonconstant => nonconstant(r, 3),
            NonzeroConstant => Poly::constant(nonzero(r)),
            Zero => Poly::zero(),
            InverseDifference => Poly::constant(inv_diff),
            OtherConstant => loop {
                let x: Rational = scalar(r);
                if x != inv_diff {
                    break Poly::constant(x);
                }
            },
        });
    }
    let e = EWord::plain(u).expand();
    let pm = EWord::plain(v).expand();
    (k, length(&twisted_conjugate(&e, &pm).unwrap()).unwrap())
}

pub fn length_cases() -> Vec<(FirstFactor, usize, LastFactor)> {
    use FirstFactor::*;
    use LastFactor::*;
    vec![
        (Constant, 1, Nonconstant),
        (Constant, 2, Nonconstant),
        (Constant, 3, Nonconstant),
        (Constant, 2, NonzeroConstant),
        (Constant, 3, NonzeroConstant),
        (Constant, 2, Zero),
        (Constant, 3, Zero),
        (Generic, 1, Nonconstant),
        (Generic, 2, Nonconstant),
        (Generic, 3, Nonconstant),
        (Generic, 2, NonzeroConstant),
        (Generic, 3, NonzeroConstant),
        (Generic, 2, Zero),
        (Generic, 3, Zero),
        (Shifted, 1, Nonconstant),
        (Shifted, 2, Nonconstant),
        (Shifted, 3, Nonconstant),
        (Shifted, 2, InverseDifference),
        (Shifted, 2, OtherConstant),
        (Shifted, 3, NonzeroConstant),
        (Shifted, 4, NonzeroConstant),
        (Shifted, 3, Zero),
        (Shifted, 4, Zero),
    ]
}
