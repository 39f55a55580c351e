//! Twisted conjugacy `B = P(h)^{-1} A(h) P(h+1)` and the set of units that
//! are not twisted-conjugate to any constant diagonal matrix.
//!
//! [`s_membership`] decides membership and always returns a conjugator that
//! has been checked by exact matrix arithmetic.

mod families;
mod length;

pub use families::{make_similar_to_diag, FamilyKind, FamilySpec};
pub use length::{predict_conjugation_length, FirstFactor, LastFactor, LengthCase};

use crate::error::{Error, Result};
use crate::factorization::{standard_form, StandardForm};
use crate::poly::Poly;
use crate::polymat::{is_twisted_conjugate, twisted_conjugate, DiagPair, EWord, PolyMat2};
use crate::scalar::Field;

/// Verdict of [`s_membership`], with its conjugator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SMembership<F: Field> {
    /// `P^{-1} K P(h+1)` equals `canonical`, a word whose factors are all
    /// nonconstant.
    InS {
        canonical: StandardForm<F>,
        witness: PolyMat2<F>,
    },
    /// `P^{-1} K P(h+1) = diag(d1, d2)`.
    NotInS {
        diag: DiagPair<F>,
        witness: PolyMat2<F>,
    },
}

impl<F: Field> SMembership<F> {
    pub fn in_s(&self) -> bool {
        matches!(self, SMembership::InS { .. })
    }

    pub fn witness(&self) -> &PolyMat2<F> {
        match self {
            SMembership::InS { witness, .. } | SMembership::NotInS { witness, .. } => witness,
        }
    }

    /// The matrix the witness conjugates `K` into.
    pub fn target(&self) -> PolyMat2<F> {
        match self {
            SMembership::InS { canonical, .. } => canonical.expand(),
            SMembership::NotInS { diag, .. } => diag.matrix(),
        }
    }

    /// Re-checks the certificate against `k`.
    pub fn verify(&self, k: &PolyMat2<F>) -> bool {
        let shape_ok = match self {
            SMembership::InS { canonical, .. } => {
                !canonical.is_empty() && canonical.factors.iter().all(|u| !u.is_constant())
            }
            SMembership::NotInS { .. } => true,
        };
        shape_ok && is_twisted_conjugate(k, self.witness(), &self.target())
    }
}

enum Step<F: Field> {
    Done(SMembership<F>),
    Conjugate(PolyMat2<F>),
}

/// Decides whether `k` is twisted-conjugate to a constant diagonal matrix.
///
/// Errors with [`Error::FieldExtensionRequired`] when `k` reduces to a
/// constant matrix whose eigenvalues lie outside the configured field.
pub fn s_membership<F: Field>(k: &PolyMat2<F>) -> Result<SMembership<F>> {
    k.require_unit()?;
    let mut witness = PolyMat2::identity();
    let mut current = k.clone();
    let budget = 4 * standard_form(k)?.len() + 16;
    for _ in 0..budget {
        let sf = standard_form(&current)?;
        match step(&current, &sf, &witness)? {
            Step::Done(verdict) => {
                if !verdict.verify(k) {
                    return Err(Error::internal("membership certificate failed to verify"));
                }
                return Ok(verdict);
            }
            Step::Conjugate(q) => {
                current = twisted_conjugate(&current, &q)?;
                witness = &witness * &q;
            }
        }
    }
    Err(Error::internal("membership reduction did not terminate"))
}

fn step<F: Field>(m: &PolyMat2<F>, sf: &StandardForm<F>, witness: &PolyMat2<F>) -> Result<Step<F>> {
    let done = |v| Ok(Step::Done(v));
    let fs = &sf.factors;
    let (a, b) = (sf.front.d1.clone(), sf.front.d2.clone());
    if fs.is_empty() {
        return done(SMembership::NotInS {
            diag: sf.front.clone(),
            witness: witness.clone(),
        });
    }
    if let Some(q) = upper_triangular_collapse(m) {
        return Ok(Step::Conjugate(q));
    }
    if m.is_constant() {
        return Ok(Step::Conjugate(triangularize_constant(m)?));
    }
    if fs.iter().all(|u| !u.is_constant()) {
        return done(SMembership::InS {
            canonical: sf.clone(),
            witness: witness.clone(),
        });
    }
    let last = fs.last().expect("nonempty");
    if let Some(beta) = last.as_constant() {
        // rotate the trailing constant to the front
        return Ok(Step::Conjugate(PolyMat2::e_inv(Poly::constant(beta))));
    }
    let omega = fs[0].as_constant().expect("a boundary factor is constant");
    let tail = &fs[1..];
    if tail.len() == 1 {
        let u = &tail[0];
        let q = match omega.inv() {
            None => {
                // u = w(h+1) - (a/b) w(h)
                let w = Poly::solve_t(&F::one(), &(a / b), u)?;
                PolyMat2::e_inv(w)
            }
            Some(omega_inv) => {
                let e0 = PolyMat2::e(Poly::zero());
                let mid = PolyMat2::e(&(-&u.sigma()) + &Poly::constant(omega_inv));
                &(&e0 * &mid) * &e0
            }
        };
        return Ok(Step::Conjugate(q));
    }
    Ok(Step::Conjugate(PolyMat2::e_inv(tail.last().expect("k >= 2").sigma())))
}

/// `[[a, u], [0, b]]` with constant `a, b` is conjugated to `diag(a, b)` by
/// `[[1, v], [0, 1]]` where `a v(h+1) - b v(h) = -u`.
fn upper_triangular_collapse<F: Field>(m: &PolyMat2<F>) -> Option<PolyMat2<F>> {
    if !m.get(1, 0).is_zero() || m.get(0, 1).is_zero() {
        return None;
    }
    let a = m.constant_entry(0, 0)?;
    let b = m.constant_entry(1, 1)?;
    let v = Poly::solve_t(&a, &b, &(-m.get(0, 1))).ok()?;
    Some(PolyMat2::new(Poly::one(), v, Poly::zero(), Poly::one()))
}

/// A constant conjugator making a constant matrix upper triangular.
fn triangularize_constant<F: Field>(m: &PolyMat2<F>) -> Result<PolyMat2<F>> {
    let c = |i, j| m.constant_entry(i, j).expect("constant matrix");
    let (c11, c12, c21, c22) = (c(0, 0), c(0, 1), c(1, 0), c(1, 1));
    if c21.is_zero() {
        return Err(Error::internal("constant triangular matrix was not collapsed"));
    }
    let trace = c11.clone() + c22.clone();
    let det = c11 * c22.clone() - c12 * c21.clone();
    let disc = trace.clone() * trace.clone() - F::from_i64(4) * det;
    let root = disc.sqrt().ok_or_else(|| {
        Error::FieldExtensionRequired(format!(
            "the constant matrix {m} has eigenvalues outside the {} field (discriminant {disc})",
            F::NAME
        ))
    })?;
    let lambda = (trace + root) / F::from_i64(2);
    // eigenvector (lambda - c22, c21); second column e1 keeps the matrix invertible
    Ok(PolyMat2::new(
        Poly::constant(lambda - c22),
        Poly::one(),
        Poly::constant(c21),
        Poly::zero(),
    ))
}

/// Rank-one data of a unit: `(a, b, u)` with `K` twisted-conjugate to
/// `[[a, u], [0, b]]` via `witness`; `None` when `K` lies in the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangular<F: Field> {
    pub a: F,
    pub b: F,
    pub u: Poly<F>,
    pub witness: PolyMat2<F>,
}

/// Triangular form reached from `k`, if `k` is outside the set.
///
/// An upper triangular `k` with constant diagonal is reported as is, with the
/// identity witness; otherwise the diagonal of the membership certificate is
/// used.
pub fn triangular_form<F: Field>(k: &PolyMat2<F>) -> Result<Option<Triangular<F>>> {
    k.require_unit()?;
    if k.get(1, 0).is_zero() {
        if let (Some(a), Some(b)) = (k.constant_entry(0, 0), k.constant_entry(1, 1)) {
            return Ok(Some(Triangular {
                a,
                b,
                u: k.get(0, 1).clone(),
                witness: PolyMat2::identity(),
            }));
        }
    }
    Ok(match s_membership(k)? {
        SMembership::InS { .. } => None,
        SMembership::NotInS { diag, witness } => Some(Triangular {
            a: diag.d1,
            b: diag.d2,
            u: Poly::zero(),
            witness,
        }),
    })
}

/// Convenience: `diag(d1, d2) E(u_1) ... E(u_k)` expanded.
pub fn e_matrix<F: Field>(d1: F, d2: F, us: &[Poly<F>]) -> Result<PolyMat2<F>> {
    Ok(EWord::new(DiagPair::new(d1, d2)?, us.to_vec()).expand())
}
