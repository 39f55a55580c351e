//! Canonical factorizations of units of `Mat_2(F[h])`.
//!
//! Every unit has a unique standard form `diag(b1, b2) E(v_1) ... E(v_l)`
//! whose interior factors are nonconstant and which is not `E(0)E(0)`.
//! It is reached two ways: by rewriting an arbitrary word
//! ([`reduce_word`]), or from the first-row Euclidean algorithm
//! ([`lq_form`] followed by [`standard_form`]).

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polymat::{DiagPair, EWord, PolyMat2};
use crate::scalar::Field;

/// The standard form is an [`EWord`] satisfying [`is_standard`].
pub type StandardForm<F> = EWord<F>;

/// `[[a, 0], [u, b]] E(q_T) ... E(q_1)`; `quotients` holds `q_1, ..., q_T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LqForm<F: Field> {
    pub a: F,
    pub b: F,
    pub u: Poly<F>,
    pub quotients: Vec<Poly<F>>,
}

impl<F: Field> LqForm<F> {
    pub fn front(&self) -> PolyMat2<F> {
        PolyMat2::new(
            Poly::constant(self.a.clone()),
            Poly::zero(),
            self.u.clone(),
            Poly::constant(self.b.clone()),
        )
    }

    pub fn reassemble(&self) -> PolyMat2<F> {
        self.quotients
            .iter()
            .rev()
            .fold(self.front(), |acc, q| &acc * &PolyMat2::e(q.clone()))
    }

    /// Quotients in product order `q_T, ..., q_1`.
    pub fn word_order(&self) -> Vec<Poly<F>> {
        self.quotients.iter().rev().cloned().collect()
    }
}

/// Runs the Euclidean algorithm on the first row of a unit.
pub fn lq_form<F: Field>(k: &PolyMat2<F>) -> Result<LqForm<F>> {
    k.require_unit()?;
    let [[mut k11, mut k12], [mut k21, mut k22]] = k.m.clone();
    let mut quotients = Vec::new();
    while !k12.is_zero() {
        // K = K' E(q) with K' = K E(q)^{-1}
        let (q, _) = k11.div_rem(&k12)?;
        let n12 = &(&q * &k12) - &k11;
        let n22 = &(&q * &k22) - &k21;
        k11 = std::mem::replace(&mut k12, n12);
        k21 = std::mem::replace(&mut k22, n22);
        quotients.push(q);
    }
    let (a, b) = match (k11.as_constant(), k22.as_constant()) {
        (Some(a), Some(b)) if !a.is_zero() && !b.is_zero() => (a, b),
        _ => return Err(Error::internal("LQ front is not a unit triangle")),
    };
    let lq = LqForm {
        a,
        b,
        u: k21,
        quotients,
    };
    if lq.reassemble() != *k {
        return Err(Error::internal("LQ form does not reassemble"));
    }
    Ok(lq)
}

/// True when interior factors are nonconstant and the word is not `E(0)E(0)`.
pub fn is_standard<F: Field>(w: &EWord<F>) -> bool {
    let n = w.factors.len();
    if n == 2 && w.factors.iter().all(Poly::is_zero) {
        return false;
    }
    n < 3 || w.factors[1..n - 1].iter().all(|u| !u.is_constant())
}

/// Moves `diag(x, y)` standing right after `factors[..j]` to the front,
/// using `E(w) diag(x, y) = diag(y, x) E((x/y) w)`.
fn migrate_left<F: Field>(front: &mut DiagPair<F>, factors: &mut [Poly<F>], j: usize, mut d: DiagPair<F>) {
    for u in factors[..j].iter_mut().rev() {
        *u = u.scale(&(d.d1.clone() / d.d2.clone()));
        d = d.swap();
    }
    *front = front.mul(&d);
}

/// Rewrites a word into standard form.
///
/// Rules, applied to the leftmost interior constant: `E(u)E(0)E(v) =
/// -E(u+v)`; `E(x)E(1/x)E(x) = -diag(x, 1/x)`; otherwise
/// `E(u)E(b)E(v) = E(u-1/b) diag(b, 1/b) E(v-1/b)`. Diagonals produced in the
/// middle are moved to the front. Each rule shortens the word by one.
pub fn reduce_word<F: Field>(w: &EWord<F>) -> StandardForm<F> {
    let mut front = w.front.clone();
    let mut fs = w.factors.clone();
    loop {
        let n = fs.len();
        let hit = (1..n.saturating_sub(1)).find_map(|i| fs[i].as_constant().map(|c| (i, c)));
        let Some((i, beta)) = hit else {
            if n == 2 && fs.iter().all(Poly::is_zero) {
                front = front.neg();
                fs.clear();
            }
            break;
        };
        let (u, v) = (fs[i - 1].clone(), fs[i + 1].clone());
        let Some(beta_inv) = beta.inv() else {
            fs.splice(i - 1..=i + 1, [&u + &v]);
            front = front.neg();
            continue;
        };
        let neighbour = Poly::constant(beta_inv.clone());
        if u == neighbour && v == neighbour {
            fs.drain(i - 1..=i + 1);
            let d = DiagPair {
                d1: -beta_inv,
                d2: -beta,
            };
            migrate_left(&mut front, &mut fs, i - 1, d);
            continue;
        }
        let shift = Poly::constant(beta_inv.clone());
        fs.splice(i - 1..=i + 1, [&u - &shift, &v - &shift]);
        let d = DiagPair { d1: beta, d2: beta_inv };
        migrate_left(&mut front, &mut fs, i, d);
    }
    EWord::new(front, fs)
}

/// Standard form of a unit via its LQ form.
pub fn standard_form<F: Field>(k: &PolyMat2<F>) -> Result<StandardForm<F>> {
    let lq = lq_form(k)?;
    let sf = lq_to_standard(&lq);
    if !is_standard(&sf) || sf.expand() != *k {
        return Err(Error::internal("LQ transition did not produce the standard form"));
    }
    Ok(sf)
}

/// The four-case passage from an LQ form to the standard form.
pub fn lq_to_standard<F: Field>(lq: &LqForm<F>) -> StandardForm<F> {
    let (a, b) = (lq.a.clone(), lq.b.clone());
    let qs = lq.word_order();
    let neg_front = DiagPair {
        d1: -a.clone(),
        d2: -b.clone(),
    };
    if lq.u.is_zero() {
        return EWord::new(DiagPair { d1: a, d2: b }, qs);
    }
    let ub = lq.u.scale(&b.inv().expect("b is a unit"));
    match (qs.is_empty(), ub.as_constant()) {
        (false, Some(beta)) => {
            // [[a,0],[u,b]] E(q_T) = diag(-a/beta, -b beta) E(-beta) E(q_T - 1/beta)
            let beta_inv = beta.inv().expect("u nonzero");
            let mut fs = vec![Poly::constant(-beta.clone())];
            fs.push(&qs[0] - &Poly::constant(beta_inv.clone()));
            fs.extend(qs[1..].iter().cloned());
            EWord::new(
                DiagPair {
                    d1: -a * beta_inv,
                    d2: -b * beta,
                },
                fs,
            )
        }
        _ => {
            let mut fs = vec![Poly::zero(), ub];
            fs.extend(qs);
            EWord::new(neg_front, fs)
        }
    }
}

/// Number of `E` factors in the standard form.
pub fn length<F: Field>(k: &PolyMat2<F>) -> Result<usize> {
    Ok(standard_form(k)?.len())
}
