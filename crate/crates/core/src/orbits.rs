//! The group `G = F^* x| Z` acting on parameter tuples
//! `(b1, b2, u_1, ..., u_k)`, and the isomorphism test for scalar-type
//! modules built on it.
//!
//! `T` rotates the word with a shift, `S_eta` rescales it. Both are
//! realized by twisted conjugation of `diag(b1, b2) E(u_1) ... E(u_k)`.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::conjugacy::{s_membership, SMembership};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polymat::{twisted_conjugate, DiagPair, EWord, PolyMat2};
use crate::scalar::Field;
use crate::sl2::{normalize, verify_iso_certificate, ModuleSpec};

/// `(b1, b2, u_1, ..., u_k)` with nonzero `b_i` and nonconstant `u_i`, `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamTuple<F: Field> {
    pub beta1: F,
    pub beta2: F,
    pub u: Vec<Poly<F>>,
}

impl<F: Field> ParamTuple<F> {
    pub fn new(beta1: F, beta2: F, u: Vec<Poly<F>>) -> Result<Self> {
        if beta1.is_zero() || beta2.is_zero() {
            return Err(Error::domain("tuple scalars must be nonzero"));
        }
        if u.is_empty() {
            return Err(Error::domain("tuple needs at least one polynomial"));
        }
        if let Some(c) = u.iter().find(|p| p.is_constant()) {
            return Err(Error::domain(format!("tuple entry {c} is constant")));
        }
        Ok(ParamTuple { beta1, beta2, u })
    }

    /// Reads a word with all factors nonconstant.
    pub fn from_word(w: &EWord<F>) -> Result<Self> {
        Self::new(w.front.d1.clone(), w.front.d2.clone(), w.factors.clone())
    }

    pub fn k(&self) -> usize {
        self.u.len()
    }

    pub fn word(&self) -> EWord<F> {
        EWord::new(
            DiagPair {
                d1: self.beta1.clone(),
                d2: self.beta2.clone(),
            },
            self.u.clone(),
        )
    }

    /// `diag(b1, b2) E(u_1) ... E(u_k)`.
    pub fn matrix(&self) -> PolyMat2<F> {
        self.word().expand()
    }

    fn ratio(&self) -> F {
        self.beta1.clone() / self.beta2.clone()
    }

    /// Degrees of the entries.
    pub fn degrees(&self) -> Vec<usize> {
        self.u.iter().map(Poly::deg0).collect()
    }
}

impl<F: Field> fmt::Display for ParamTuple<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.beta1, self.beta2)?;
        for u in &self.u {
            write!(f, ", {u}")?;
        }
        write!(f, ")")
    }
}

/// `(eta, m)` in `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement<F: Field> {
    pub eta: F,
    pub m: i64,
}

impl<F: Field> GroupElement<F> {
    pub fn new(eta: F, m: i64) -> Result<Self> {
        if eta.is_zero() {
            return Err(Error::domain("eta must be nonzero"));
        }
        Ok(GroupElement { eta, m })
    }

    pub fn identity() -> Self {
        GroupElement { eta: F::one(), m: 0 }
    }
}

impl<F: Field> fmt::Display for GroupElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(eta={}, m={})", self.eta, self.m)
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `phi_m(eta) = eta^((-1)^m)`.
pub fn phi<F: Field>(m: i64, eta: &F) -> F {
    eta.powi(sign(m))
}

/// `(eta1 phi_{m1}(eta2), m1 + m2)`.
pub fn group_mul<F: Field>(g1: &GroupElement<F>, g2: &GroupElement<F>) -> GroupElement<F> {
    GroupElement {
        eta: g1.eta.clone() * phi(g1.m, &g2.eta),
        m: g1.m + g2.m,
    }
}

pub fn group_inv<F: Field>(g: &GroupElement<F>) -> GroupElement<F> {
    GroupElement {
        eta: phi(-g.m, &g.eta).powi(-1),
        m: -g.m,
    }
}

/// `T(b1, b2, u) = (b2, b1, (b1/b2) sigma(u_k), u_1, ..., u_{k-1})`.
pub fn act_t<F: Field>(x: &ParamTuple<F>) -> ParamTuple<F> {
    let k = x.k();
    let mut u = Vec::with_capacity(k);
    u.push(x.u[k - 1].sigma().scale(&x.ratio()));
    u.extend(x.u[..k - 1].iter().cloned());
    ParamTuple {
        beta1: x.beta2.clone(),
        beta2: x.beta1.clone(),
        u,
    }
}

/// `T^{-1}(b1, b2, u) = (b2, b1, u_2, ..., u_k, (b1/b2) sigma^{-1}(u_1))`.
pub fn act_t_inv<F: Field>(x: &ParamTuple<F>) -> ParamTuple<F> {
    let mut u: Vec<Poly<F>> = x.u[1..].to_vec();
    u.push(x.u[0].sigma_inv().scale(&x.ratio()));
    ParamTuple {
        beta1: x.beta2.clone(),
        beta2: x.beta1.clone(),
        u,
    }
}

/// `S_eta`: `b1 eta^(k mod 2)`, `b2 eta^-(k mod 2)`, `eta^(e_i) u_i` with
/// `e_i = (-1)^(i-1+k)`.
pub fn act_s<F: Field>(eta: &F, x: &ParamTuple<F>) -> ParamTuple<F> {
    let k = x.k() as i64;
    let odd = k % 2;
    let u = x
        .u
        .iter()
        .enumerate()
        .map(|(i, p)| p.scale(&eta.powi(sign(i as i64 + k))))
        .collect();
    ParamTuple {
        beta1: x.beta1.clone() * eta.powi(odd),
        beta2: x.beta2.clone() * eta.powi(-odd),
        u,
    }
}

/// `T^(q k)` in closed form: every entry is shifted by `sigma^q` and
/// rescaled by a power of `b1/b2`.
fn act_t_full_turns<F: Field>(q: i64, x: &ParamTuple<F>) -> ParamTuple<F> {
    let k = x.k() as i64;
    let rho = x.ratio();
    let u = x
        .u
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let s = sign(k - 1 - i as i64);
            let e = if k % 2 == 0 { q * s } else { q.rem_euclid(2) * s };
            p.shift(-q).scale(&rho.powi(e))
        })
        .collect();
    let (beta1, beta2) = if k % 2 == 1 && q.rem_euclid(2) == 1 {
        (x.beta2.clone(), x.beta1.clone())
    } else {
        (x.beta1.clone(), x.beta2.clone())
    };
    ParamTuple { beta1, beta2, u }
}

/// `T^m`.
pub fn act_t_pow<F: Field>(m: i64, x: &ParamTuple<F>) -> ParamTuple<F> {
    let k = x.k() as i64;
    let (q, r) = m.div_mod_floor(&k);
    (0..r).fold(act_t_full_turns(q, x), |acc, _| act_t(&acc))
}

/// `(eta, m) * X = S_eta(T^m(X))`.
pub fn act_group<F: Field>(g: &GroupElement<F>, x: &ParamTuple<F>) -> ParamTuple<F> {
    act_s(&g.eta, &act_t_pow(g.m, x))
}

/// Decides whether `y` lies in the orbit of `x`; the witness is checked
/// exactly.
pub fn orbit_membership<F: Field>(x: &ParamTuple<F>, y: &ParamTuple<F>) -> Option<GroupElement<F>> {
    let k = x.k();
    if k != y.k() || !rotation_invariant_matches(x, y) {
        return None;
    }
    let mut z = x.clone();
    for r in 0..k as i64 {
        if let Some(g) = candidate(x, &z, y, r) {
            return Some(g);
        }
        z = act_t(&z);
    }
    None
}

/// Degree sequences agree up to rotation.
fn rotation_invariant_matches<F: Field>(x: &ParamTuple<F>, y: &ParamTuple<F>) -> bool {
    let (dx, dy) = (x.degrees(), y.degrees());
    (0..dx.len()).any(|r| dx.iter().cycle().skip(r).take(dx.len()).eq(dy.iter()))
}

fn subleading_over_leading<F: Field>(p: &Poly<F>) -> F {
    let d = p.deg0();
    p.coeff(d - 1) / p.leading()
}

/// For `z = T^r(x)`, the unique `(eta, q k + r)` that could send `x` to `y`.
fn candidate<F: Field>(x: &ParamTuple<F>, z: &ParamTuple<F>, y: &ParamTuple<F>, r: i64) -> Option<GroupElement<F>> {
    let (z1, y1) = (&z.u[0], &y.u[0]);
    let d = z1.deg0();
    if d != y1.deg0() {
        return None;
    }
    // monic(y1)(h) = monic(z1)(h - q) pins the subleading coefficient
    let diff = (subleading_over_leading(z1) - subleading_over_leading(y1)) / F::from_i64(d as i64);
    let q = diff.to_rational()?;
    if !q.is_integer() {
        return None;
    }
    let q = q.to_integer().to_i64()?;
    let k = x.k() as i64;
    let w = act_t_pow(r, &act_t_full_turns(q, x));
    let ratio = y1.leading() / w.u[0].leading();
    let eta = ratio.powi(sign(k));
    let g = GroupElement { eta, m: q.checked_mul(k)?.checked_add(r)? };
    (act_group(&g, x) == *y).then_some(g)
}

/// `P` with `P^{-1} E_X P(h+1) = E_{T X}`.
pub fn t_conjugator<F: Field>(x: &ParamTuple<F>) -> PolyMat2<F> {
    PolyMat2::e_inv(x.u[x.k() - 1].sigma())
}

/// `P` with `P^{-1} E_X P(h+1) = E_{S_eta X}`.
pub fn s_conjugator<F: Field>(eta: &F) -> PolyMat2<F> {
    PolyMat2::diag(F::one(), eta.clone())
}

/// `P` with `P^{-1} E_X P(h+1) = E_{g X}`, built one `T` step at a time.
pub fn orbit_conjugator<F: Field>(g: &GroupElement<F>, x: &ParamTuple<F>) -> PolyMat2<F> {
    let mut p = PolyMat2::identity();
    let mut z = x.clone();
    for _ in 0..g.m.max(0) {
        p = &p * &t_conjugator(&z);
        z = act_t(&z);
    }
    for _ in 0..(-g.m).max(0) {
        // inverse of the T-step from T^{-1} z
        p = &p * &PolyMat2::e(z.u[0].scale(&z.ratio()));
        z = act_t_inv(&z);
    }
    &p * &s_conjugator(&g.eta)
}

/// Result of a successful isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism<F: Field> {
    pub element: GroupElement<F>,
    pub x: ParamTuple<F>,
    pub y: ParamTuple<F>,
    /// `P` with `P^{-1} K_A P(h+1) = K_B`.
    pub conjugator: PolyMat2<F>,
}

fn canonical<F: Field>(spec: &ModuleSpec<F>) -> Result<(ParamTuple<F>, PolyMat2<F>)> {
    match s_membership(&spec.k)? {
        SMembership::InS { canonical, witness } => Ok((ParamTuple::from_word(&canonical)?, witness)),
        SMembership::NotInS { .. } => Err(Error::domain(format!(
            "K = {} is twisted-conjugate to a constant diagonal matrix",
            spec.k
        ))),
    }
}

/// Decides `M_A ~ M_B` for scalar-type modules whose `K` admit no rank-1
/// submodule. `Ok(None)` means not isomorphic.
pub fn isomorphism_test<F: Field>(a: &ModuleSpec<F>, b: &ModuleSpec<F>) -> Result<Option<Isomorphism<F>>> {
    for s in [a, b] {
        if !s.triple.is_scalar_type() {
            return Err(Error::domain(format!("triple {} is not of scalar type", s.triple)));
        }
    }
    let (na, nb) = (normalize(a), normalize(b));
    let (x, wa) = canonical(&na)?;
    let (y, wb) = canonical(&nb)?;
    if na.alpha != nb.alpha || na.triple != nb.triple {
        return Ok(None);
    }
    let Some(g) = orbit_membership(&x, &y) else {
        return Ok(None);
    };
    let conjugator = &(&wa * &orbit_conjugator(&g, &x)) * &wb.inverse()?;
    if twisted_conjugate(&a.k, &conjugator)? != b.k || !verify_iso_certificate(&na, &nb, &conjugator)? {
        return Err(Error::internal("isomorphism certificate failed"));
    }
    Ok(Some(Isomorphism {
        element: g,
        x,
        y,
        conjugator,
    }))
}

/// `T_gamma(A) = diag(gamma, 1) A diag(gamma, 1)^{-1}`.
pub fn t_gamma<F: Field>(a: &PolyMat2<F>, gamma: &F) -> Result<PolyMat2<F>> {
    a.require_unit()?;
    let inv = gamma.inv().ok_or_else(|| Error::domain("gamma must be nonzero"))?;
    Ok(&(&PolyMat2::diag(gamma.clone(), F::one()) * a) * &PolyMat2::diag(inv, F::one()))
}

/// `theta(A) = E(0) A E(0)^{-1}`.
pub fn theta<F: Field>(a: &PolyMat2<F>) -> Result<PolyMat2<F>> {
    a.require_unit()?;
    Ok(&(&PolyMat2::e(Poly::zero()) * a) * &PolyMat2::e_inv(Poly::zero()))
}

fn theta_inv<F: Field>(a: &PolyMat2<F>) -> PolyMat2<F> {
    &(&PolyMat2::e_inv(Poly::zero()) * a) * &PolyMat2::e(Poly::zero())
}

/// `sigma(A)(h) = A(h - 1)`.
pub fn sigma_map<F: Field>(a: &PolyMat2<F>) -> Result<PolyMat2<F>> {
    a.require_unit()?;
    Ok(a.sigma())
}

/// `Psi(gamma, m)(A) = T_gamma(S^m(A))` with `S = theta sigma`.
pub fn psi<F: Field>(a: &PolyMat2<F>, gamma: &F, m: i64) -> Result<PolyMat2<F>> {
    a.require_unit()?;
    let s = if m >= 0 {
        (0..m).fold(a.clone(), |acc, _| theta(&acc.sigma()).expect("unit"))
    } else {
        (0..-m).fold(a.clone(), |acc, _| theta_inv(&acc).sigma_inv())
    };
    t_gamma(&s, gamma)
}
