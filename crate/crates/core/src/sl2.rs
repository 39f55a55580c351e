//! The modules `M(alpha, a, K)`: `F[h]^2` with `h` acting by multiplication
//! and
//!
//! ```text
//! e.v = sigma(K^{-1} Pbar v),    f.v = P K sigma^{-1}(v)
//! ```
//!
//! where `P = P_(a, alpha)` is diagonal and `Pbar P = -(h - alpha + 1)(h + alpha) I`.

use std::fmt;

use crate::conjugacy::{s_membership, triangular_form, SMembership, Triangular};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polymat::PolyMat2;
use crate::scalar::Field;

/// A column vector in `F[h]^2`.
pub type Vector2<F> = [Poly<F>; 2];

/// A rank-2 triple `(a_-, a_0, a_+)` with `a_- + |a_0| + a_+ = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleA {
    pub minus: u32,
    pub zero: i32,
    pub plus: u32,
}

impl TripleA {
    pub fn new(minus: u32, zero: i32, plus: u32) -> Result<Self> {
        if minus + zero.unsigned_abs() + plus != 2 {
            return Err(Error::domain(format!(
                "triple ({minus},{zero},{plus}) must satisfy a_- + |a_0| + a_+ = 2"
            )));
        }
        Ok(TripleA { minus, zero, plus })
    }

    /// All nine rank-2 triples.
    pub fn all() -> Vec<TripleA> {
        let mut out = Vec::new();
        for minus in 0..=2u32 {
            for zero in -2..=2i32 {
                let rest = 2i64 - minus as i64 - zero.unsigned_abs() as i64;
                if rest >= 0 {
                    out.push(TripleA::new(minus, zero, rest as u32).expect("valid"));
                }
            }
        }
        out
    }

    /// `P_(a, alpha)` is a scalar matrix.
    pub fn is_scalar_type(&self) -> bool {
        matches!((self.minus, self.zero, self.plus), (2, 0, 0) | (0, 2, 0) | (0, -2, 0) | (0, 0, 2))
    }

    /// `(a_-, -a_0, a_+)`.
    pub fn flip(&self) -> Self {
        TripleA {
            zero: -self.zero,
            ..*self
        }
    }
}

impl fmt::Display for TripleA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.minus, self.zero, self.plus)
    }
}

/// `h - alpha + 1`
fn left_root<F: Field>(alpha: &F) -> Poly<F> {
    Poly::linear(F::one() - alpha.clone())
}

/// `h + alpha`
fn right_root<F: Field>(alpha: &F) -> Poly<F> {
    Poly::linear(alpha.clone())
}

fn diagonal_entries<F: Field>(t: &TripleA, alpha: &F) -> Vec<Poly<F>> {
    let mut d = Vec::new();
    d.extend((0..t.minus).map(|_| Poly::one()));
    let middle = if t.zero >= 0 { left_root(alpha) } else { right_root(alpha) };
    d.extend((0..t.zero.unsigned_abs()).map(|_| middle.clone()));
    d.extend((0..t.plus).map(|_| &left_root(alpha) * &right_root(alpha)));
    d
}

/// The diagonal matrix `P_(a, alpha)(h)`.
pub fn p_matrix<F: Field>(t: &TripleA, alpha: &F) -> PolyMat2<F> {
    let d = diagonal_entries(t, alpha);
    PolyMat2::new(d[0].clone(), Poly::zero(), Poly::zero(), d[1].clone())
}

/// The diagonal matrix `Pbar` with `Pbar P = -(h - alpha + 1)(h + alpha) I`.
pub fn pbar_matrix<F: Field>(t: &TripleA, alpha: &F) -> PolyMat2<F> {
    let full = -&(&left_root(alpha) * &right_root(alpha));
    let d: Vec<Poly<F>> = diagonal_entries(t, alpha)
        .iter()
        .map(|p| full.div_rem(p).expect("nonzero diagonal").0)
        .collect();
    PolyMat2::new(d[0].clone(), Poly::zero(), Poly::zero(), d[1].clone())
}

/// Parameters `(alpha, a, K)` of a rank-2 module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSpec<F: Field> {
    pub alpha: F,
    pub triple: TripleA,
    pub k: PolyMat2<F>,
}

impl<F: Field> ModuleSpec<F> {
    pub fn new(alpha: F, triple: TripleA, k: PolyMat2<F>) -> Result<Self> {
        k.require_unit()?;
        Ok(ModuleSpec { alpha, triple, k })
    }

    /// The central character `(2 alpha - 1)^2`.
    pub fn central_character(&self) -> F {
        let t = F::from_i64(2) * self.alpha.clone() - F::one();
        t.clone() * t
    }

    pub fn action(&self) -> Sl2Action<F> {
        Sl2Action::new(self)
    }
}

/// The three generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    H,
}

/// The action of `e`, `f`, `h` as
/// `e.v = sigma(e_left v)` and `f.v = f_left sigma^{-1}(v)`.
///
/// The two matrices are public so that tests can build deliberately
/// broken actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Action<F: Field> {
    pub e_left: PolyMat2<F>,
    pub f_left: PolyMat2<F>,
}

impl<F: Field> Sl2Action<F> {
    pub fn new(spec: &ModuleSpec<F>) -> Self {
        let p = p_matrix(&spec.triple, &spec.alpha);
        let pbar = pbar_matrix(&spec.triple, &spec.alpha);
        let kinv = spec.k.inverse().expect("ModuleSpec holds a unit");
        Sl2Action {
            e_left: &kinv * &pbar,
            f_left: &p * &spec.k,
        }
    }

    pub fn e(&self, v: &Vector2<F>) -> Vector2<F> {
        let w = self.e_left.apply(v);
        [w[0].sigma(), w[1].sigma()]
    }

    pub fn f(&self, v: &Vector2<F>) -> Vector2<F> {
        self.f_left.apply(&[v[0].sigma_inv(), v[1].sigma_inv()])
    }

    pub fn h(&self, v: &Vector2<F>) -> Vector2<F> {
        let h = Poly::h();
        [&h * &v[0], &h * &v[1]]
    }

    pub fn act(&self, g: Generator, v: &Vector2<F>) -> Vector2<F> {
        match g {
            Generator::E => self.e(v),
            Generator::F => self.f(v),
            Generator::H => self.h(v),
        }
    }

    /// `c = (2h + 1)^2 + 4 f e`.
    pub fn casimir(&self, v: &Vector2<F>) -> Vector2<F> {
        let t = &Poly::h().scale(&F::from_i64(2)) + &Poly::one();
        let t2 = &t * &t;
        let fe = self.f(&self.e(v));
        let four = F::from_i64(4);
        [&(&t2 * &v[0]) + &fe[0].scale(&four), &(&t2 * &v[1]) + &fe[1].scale(&four)]
    }
}

pub fn act<F: Field>(spec: &ModuleSpec<F>, g: Generator, v: &Vector2<F>) -> Vector2<F> {
    spec.action().act(g, v)
}

fn vsub<F: Field>(a: &Vector2<F>, b: &Vector2<F>) -> Vector2<F> {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn vscale<F: Field>(a: &Vector2<F>, c: &F) -> Vector2<F> {
    [a[0].scale(c), a[1].scale(c)]
}

/// The basis vectors `h^j e_i` for `j <= bound`.
fn basis<F: Field>(bound: usize) -> impl Iterator<Item = (usize, usize, Vector2<F>)> {
    (0..2).flat_map(move |i| {
        (0..=bound).map(move |j| {
            let m = Poly::monomial(F::one(), j);
            let v = if i == 0 { [m, Poly::zero()] } else { [Poly::zero(), m] };
            (i, j, v)
        })
    })
}

/// Outcome of a relation suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    /// First failing identity, if any.
    pub failure: Option<String>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `[h,e] = e`, `[e,f] = 2h`, `[h,f] = -f` on `h^j e_i`, `j <= bound`.
pub fn verify_relations_with<F: Field>(act: &Sl2Action<F>, bound: usize) -> RelationReport {
    let two = F::from_i64(2);
    let mut checked = 0;
    for (i, j, v) in basis::<F>(bound) {
        let ev = act.e(&v);
        let fv = act.f(&v);
        let checks: [(&str, Vector2<F>, Vector2<F>); 3] = [
            ("[h,e] = e", vsub(&act.h(&ev), &act.e(&act.h(&v))), ev.clone()),
            ("[e,f] = 2h", vsub(&act.e(&fv), &act.f(&ev)), vscale(&act.h(&v), &two)),
            ("[h,f] = -f", vsub(&act.h(&fv), &act.f(&act.h(&v))), vscale(&fv, &-F::one())),
        ];
        for (name, lhs, rhs) in checks {
            checked += 1;
            if lhs != rhs {
                return RelationReport {
                    checked,
                    failure: Some(format!("{name} fails on h^{j} e_{}", i + 1)),
                };
            }
        }
    }
    RelationReport { checked, failure: None }
}

pub fn verify_relations<F: Field>(spec: &ModuleSpec<F>, bound: usize) -> RelationReport {
    verify_relations_with(&spec.action(), bound)
}

/// Checks that the Casimir element acts by `(2 alpha - 1)^2` on `h^j e_i`.
pub fn casimir_check_with<F: Field>(act: &Sl2Action<F>, scalar: &F, bound: usize) -> RelationReport {
    let mut checked = 0;
    for (i, j, v) in basis::<F>(bound) {
        checked += 1;
        if act.casimir(&v) != vscale(&v, scalar) {
            return RelationReport {
                checked,
                failure: Some(format!("c does not act by {scalar} on h^{j} e_{}", i + 1)),
            };
        }
    }
    RelationReport { checked, failure: None }
}

pub fn casimir_check<F: Field>(spec: &ModuleSpec<F>, bound: usize) -> RelationReport {
    casimir_check_with(&spec.action(), &spec.central_character(), bound)
}

/// True when the triple is of scalar type.
pub fn is_scalar_type(t: &TripleA) -> bool {
    t.is_scalar_type()
}

/// A rank-1 submodule `F[h] g` of a scalar-type module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank1<F: Field> {
    /// `K` is twisted-conjugate to `[[a, u], [0, b]]` via `witness`.
    pub triangular: Triangular<F>,
    /// Generator `witness * e_1`, checked to be `e`- and `f`-stable.
    pub generator: Vector2<F>,
}

/// `x` lies in `F[h] v` for primitive `v`.
fn in_span<F: Field>(x: &Vector2<F>, v: &Vector2<F>) -> bool {
    (&(&x[0] * &v[1]) - &(&x[1] * &v[0])).is_zero()
}

/// Whether `F[h] v` is stable under the action.
pub fn is_stable_line<F: Field>(act: &Sl2Action<F>, v: &Vector2<F>) -> bool {
    in_span(&act.e(v), v) && in_span(&act.f(v), v)
}

/// A rank-1 submodule, or `None` when `K` lies in the set (no such submodule).
pub fn rank1_submodules<F: Field>(spec: &ModuleSpec<F>) -> Result<Option<Rank1<F>>> {
    if !spec.triple.is_scalar_type() {
        return Err(Error::OutOfScope(format!(
            "rank-1 submodules are decided for scalar-type triples only, got {}",
            spec.triple
        )));
    }
    let Some(t) = triangular_form(&spec.k)? else {
        return Ok(None);
    };
    let w = &t.witness;
    let generator = [w.get(0, 0).clone(), w.get(1, 0).clone()];
    if !is_stable_line(&spec.action(), &generator) {
        return Err(Error::internal("rank-1 generator is not stable"));
    }
    Ok(Some(Rank1 {
        triangular: t,
        generator,
    }))
}

/// Whether `alpha` lies in `1 + (1/2) Z_{>=0}`.
pub fn alpha_excluded<F: Field>(alpha: &F) -> bool {
    two_alpha_minus_two(alpha).is_some()
}

fn two_alpha_minus_two<F: Field>(alpha: &F) -> Option<usize> {
    let q = alpha.to_rational()?;
    let n = q * num_rational::BigRational::from_integer(2.into()) - num_rational::BigRational::from_integer(2.into());
    if !n.is_integer() {
        return None;
    }
    usize::try_from(n.to_integer()).ok()
}

/// `u_alpha(h) = prod_{j=0}^{2 alpha - 2} (h + alpha - 1 - j)`.
pub fn u_alpha<F: Field>(alpha: &F) -> Result<Poly<F>> {
    let n = two_alpha_minus_two(alpha)
        .ok_or_else(|| Error::domain(format!("alpha = {alpha} is not in 1 + (1/2) Z>=0")))?;
    Ok(falling_product(alpha, n + 1))
}

/// The linear factors `h + alpha - 1 - j` of `u_alpha`, `j = 0, ..., 2 alpha - 2`.
pub fn u_alpha_factors<F: Field>(alpha: &F) -> Result<Vec<Poly<F>>> {
    let n = two_alpha_minus_two(alpha)
        .ok_or_else(|| Error::domain(format!("alpha = {alpha} is not in 1 + (1/2) Z>=0")))?;
    Ok((0..=n)
        .map(|j| Poly::linear(alpha.clone() - F::one() - F::from_i64(j as i64)))
        .collect())
}

/// `prod_{j=0}^{count-1} (h + alpha - 1 - j)`.
fn falling_product<F: Field>(alpha: &F, count: usize) -> Poly<F> {
    (0..count).fold(Poly::one(), |acc, j| {
        &acc * &Poly::linear(alpha.clone() - F::one() - F::from_i64(j as i64))
    })
}

/// `(h + alpha - 1) q(h - 1) = (h - alpha) q(h)`.
pub fn shift_equation_holds<F: Field>(alpha: &F, q: &Poly<F>) -> bool {
    let lhs = &Poly::linear(alpha.clone() - F::one()) * &q.sigma();
    let rhs = &Poly::linear(-alpha.clone()) * q;
    lhs == rhs
}

/// Reason attached to a simplicity verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityReason<F: Field> {
    /// `K` is outside the set: there is a rank-1 submodule.
    KNotInS(Rank1<F>),
    /// `alpha` is excluded: `(u_alpha F[h])^2` is a proper submodule.
    AlphaExcluded { u_alpha: Poly<F> },
    /// `K` lies in the set; the certificate conjugates it to a word of
    /// nonconstant factors.
    Simple(SMembership<F>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityVerdict<F: Field> {
    pub simple: bool,
    /// The spec the verdict was computed for, after normalizing `(0,-2,0)`.
    pub normalized: ModuleSpec<F>,
    pub reason: SimplicityReason<F>,
}

/// Replaces `(alpha, (0,-2,0), K)` by the equal module `(1 - alpha, (0,2,0), K)`.
pub fn normalize<F: Field>(spec: &ModuleSpec<F>) -> ModuleSpec<F> {
    if (spec.triple.minus, spec.triple.zero, spec.triple.plus) == (0, -2, 0) {
        ModuleSpec {
            alpha: F::one() - spec.alpha.clone(),
            triple: spec.triple.flip(),
            k: spec.k.clone(),
        }
    } else {
        spec.clone()
    }
}

/// Decides simplicity of a scalar-type module.
pub fn is_simple<F: Field>(spec: &ModuleSpec<F>) -> Result<SimplicityVerdict<F>> {
    if !spec.triple.is_scalar_type() {
        return Err(Error::OutOfScope(format!(
            "simplicity is classified for scalar-type triples only, got {}",
            spec.triple
        )));
    }
    let spec = normalize(spec);
    if let Some(r) = rank1_submodules(&spec)? {
        return Ok(SimplicityVerdict {
            simple: false,
            normalized: spec,
            reason: SimplicityReason::KNotInS(r),
        });
    }
    if spec.triple.zero == 2 && alpha_excluded(&spec.alpha) {
        let u = u_alpha(&spec.alpha)?;
        if !shift_equation_holds(&spec.alpha, &u) || !submodule_is_stable(&spec, &u, 6) {
            return Err(Error::internal("u_alpha submodule certificate failed"));
        }
        return Ok(SimplicityVerdict {
            simple: false,
            normalized: spec,
            reason: SimplicityReason::AlphaExcluded { u_alpha: u },
        });
    }
    let m = s_membership(&spec.k)?;
    Ok(SimplicityVerdict {
        simple: true,
        normalized: spec,
        reason: SimplicityReason::Simple(m),
    })
}

fn divisible<F: Field>(v: &Vector2<F>, u: &Poly<F>) -> bool {
    v.iter().all(|p| p.div_rem(u).map(|(_, r)| r.is_zero()).unwrap_or(false))
}

/// `(u F[h])^2` is `e`- and `f`-stable on `u h^j e_i`, `j <= bound`.
pub fn submodule_is_stable<F: Field>(spec: &ModuleSpec<F>, u: &Poly<F>, bound: usize) -> bool {
    let act = spec.action();
    basis::<F>(bound).all(|(_, _, v)| {
        let w = [u * &v[0], u * &v[1]];
        divisible(&act.e(&w), u) && divisible(&act.f(&w), u)
    })
}

/// Highest-weight data of the quotient by `(u_alpha F[h])^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport<F: Field> {
    pub u_alpha: Poly<F>,
    /// `2(alpha - 1)`: the eigenvalue of `2h` on the highest weight vectors.
    pub weight: F,
    /// `2 deg u_alpha = 4 alpha - 2`.
    pub dim: usize,
    pub submodule_stable: bool,
    pub highest_weight_vectors: bool,
}

impl<F: Field> QuotientReport<F> {
    pub fn ok(&self) -> bool {
        self.submodule_stable && self.highest_weight_vectors
    }
}

/// Checks the quotient `M(alpha,(0,2,0),K) / (u_alpha F[h])^2`.
pub fn quotient_hw_check<F: Field>(spec: &ModuleSpec<F>, bound: usize) -> Result<QuotientReport<F>> {
    if (spec.triple.minus, spec.triple.zero, spec.triple.plus) != (0, 2, 0) {
        return Err(Error::domain("the quotient check needs the triple (0,2,0)"));
    }
    let n = two_alpha_minus_two(&spec.alpha)
        .ok_or_else(|| Error::domain(format!("alpha = {} is not in 1 + (1/2) Z>=0", spec.alpha)))?;
    if !s_membership(&spec.k)?.in_s() {
        return Err(Error::domain("the quotient check needs K in the set (no rank-1 submodule)"));
    }
    let u = falling_product(&spec.alpha, n + 1);
    let w = falling_product(&spec.alpha, n);
    let act = spec.action();
    let two = F::from_i64(2);
    let weight = two.clone() * (spec.alpha.clone() - F::one());
    let hw = [[w.clone(), Poly::zero()], [Poly::zero(), w]].iter().all(|v| {
        let ev = act.e(v);
        let twoh = vscale(&act.h(v), &two);
        divisible(&ev, &u) && divisible(&vsub(&twoh, &vscale(v, &weight)), &u)
    });
    Ok(QuotientReport {
        dim: 2 * u.deg0(),
        submodule_stable: submodule_is_stable(spec, &u, bound),
        highest_weight_vectors: hw,
        weight,
        u_alpha: u,
    })
}

/// Checks `P(h) P_(a,alpha)(h) K_2(h) = P_(a,alpha)(h) K_1(h) P(h+1)` for a unit `P`.
pub fn verify_iso_certificate<F: Field>(a: &ModuleSpec<F>, b: &ModuleSpec<F>, p: &PolyMat2<F>) -> Result<bool> {
    let same = a.alpha == b.alpha && a.triple == b.triple;
    let dual = a.alpha.clone() + b.alpha.clone() == F::one() && b.triple == a.triple.flip();
    if !same && !dual {
        return Err(Error::domain(format!(
            "parameters ({}, {}) and ({}, {}) are not compatible",
            a.alpha, a.triple, b.alpha, b.triple
        )));
    }
    if !p.is_unit() {
        return Ok(false);
    }
    let pa = p_matrix(&a.triple, &a.alpha);
    Ok(&(p * &pa) * &b.k == &(&pa * &a.k) * &p.sigma_inv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::e_matrix;
    use crate::polymat::twisted_conjugate;
    use crate::scalar::Rational;

    type P = Poly<Rational>;
    type M = PolyMat2<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn t(a: u32, b: i32, c: u32) -> TripleA {
        TripleA::new(a, b, c).unwrap()
    }

    fn spec(alpha: Rational, tr: TripleA, k: M) -> ModuleSpec<Rational> {
        ModuleSpec::new(alpha, tr, k).unwrap()
    }

    #[test]
    fn p_matrices() {
        let a = q(3, 7);
        assert_eq!(p_matrix(&t(2, 0, 0), &a), M::identity());
        assert_eq!(
            p_matrix(&t(0, 2, 0), &q(1, 2)),
            M::new(P::linear(q(1, 2)), P::zero(), P::zero(), P::linear(q(1, 2)))
        );
        assert_eq!(
            p_matrix(&t(0, -2, 0), &a),
            M::new(P::linear(a.clone()), P::zero(), P::zero(), P::linear(a.clone()))
        );
        for tr in TripleA::all() {
            let prod = &pbar_matrix(&tr, &a) * &p_matrix(&tr, &a);
            let full = -&(&P::linear(q(4, 7)) * &P::linear(a.clone()));
            assert_eq!(prod, M::new(full.clone(), P::zero(), P::zero(), full));
        }
        assert_eq!(TripleA::all().len(), 9);
        assert!(TripleA::new(1, 1, 1).is_err());
    }

    #[test]
    fn action_examples() {
        let s = spec(q(0, 1), t(2, 0, 0), M::identity());
        let g = [P::from_coeffs(vec![q(1, 1), q(2, 1)]), P::h()];
        assert_eq!(act(&s, Generator::F, &g), [g[0].shift(1), g[1].shift(1)]);
        // e.(1,0) = sigma(-(h+1)h) = -h(h-1)
        let e1 = act(&s, Generator::E, &[P::one(), P::zero()]);
        assert_eq!(e1, [P::from_coeffs(vec![q(0, 1), q(1, 1), q(-1, 1)]), P::zero()]);
        let hv = act(&s, Generator::H, &[P::h(), P::one()]);
        assert_eq!(hv, [P::monomial(q(1, 1), 2), P::h()]);
    }

    #[test]
    fn relations_and_casimir() {
        let s = spec(q(0, 1), t(2, 0, 0), M::e(P::h()));
        assert!(verify_relations(&s, 6).ok());
        let c = casimir_check(&s, 6);
        assert!(c.ok());
        assert_eq!(s.central_character(), q(1, 1));
        let s = spec(q(3, 2), t(0, 2, 0), M::e(P::monomial(q(1, 1), 2)));
        assert!(verify_relations(&s, 6).ok());
        let s = spec(q(3, 2), t(0, 0, 2), M::e(P::h()));
        assert!(casimir_check(&s, 6).ok());
        assert_eq!(s.central_character(), q(4, 1));
        assert_eq!(spec(q(1, 2), t(1, 1, 0), M::e(P::h())).central_character(), q(0, 1));
    }

    #[test]
    fn corrupted_action_is_caught() {
        let s = spec(q(0, 1), t(2, 0, 0), M::e(P::h()));
        let mut bad = s.action();
        bad.f_left = &p_matrix(&s.triple, &s.alpha) * &s.k.sigma_inv();
        assert!(!verify_relations_with(&bad, 6).ok());
    }

    #[test]
    fn scalar_types() {
        assert!(is_scalar_type(&t(2, 0, 0)));
        assert!(!is_scalar_type(&t(1, 1, 0)));
        assert!(is_scalar_type(&t(0, -2, 0)));
    }

    #[test]
    fn rank1_examples() {
        let a = q(0, 1);
        assert!(rank1_submodules(&spec(a.clone(), t(2, 0, 0), M::e(P::h()))).unwrap().is_none());
        let k = M::new(P::from_i64(2), P::monomial(q(1, 1), 3), P::zero(), P::from_i64(5));
        let r = rank1_submodules(&spec(a.clone(), t(2, 0, 0), k)).unwrap().unwrap();
        assert_eq!((r.triangular.a, r.triangular.b), (q(2, 1), q(5, 1)));
        assert_eq!(r.triangular.u, P::monomial(q(1, 1), 3));
        let k = e_matrix(q(1, 1), q(1, 1), &[P::zero(), P::h()]).unwrap();
        let r = rank1_submodules(&spec(a.clone(), t(0, 0, 2), k)).unwrap().unwrap();
        assert_eq!((r.triangular.a, r.triangular.b), (q(-1, 1), q(-1, 1)));
        assert!(rank1_submodules(&spec(a, t(1, 1, 0), M::identity())).is_err());
    }

    #[test]
    fn simplicity_examples() {
        let k = M::e(P::h());
        assert!(is_simple(&spec(q(0, 1), t(2, 0, 0), k.clone())).unwrap().simple);
        let v = is_simple(&spec(q(3, 2), t(0, 2, 0), k.clone())).unwrap();
        assert!(!v.simple);
        let u = P::from_coeffs(vec![q(-1, 4), q(0, 1), q(1, 1)]);
        assert_eq!(v.reason, SimplicityReason::AlphaExcluded { u_alpha: u });
        let v = is_simple(&spec(q(7, 1), t(0, 0, 2), M::diag(q(2, 1), q(3, 1)))).unwrap();
        assert!(!v.simple && matches!(v.reason, SimplicityReason::KNotInS(_)));
        // (0,-2,0) at alpha = -1/2 is (0,2,0) at 3/2
        let v = is_simple(&spec(q(-1, 2), t(0, -2, 0), k.clone())).unwrap();
        assert!(!v.simple && v.normalized.alpha == q(3, 2));
        assert!(matches!(is_simple(&spec(q(0, 1), t(1, 0, 1), k)), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn simplicity_is_conjugation_invariant() {
        let k = e_matrix(q(2, 1), q(1, 1), &[P::h(), P::monomial(q(1, 1), 2)]).unwrap();
        let pm = M::e(P::from_coeffs(vec![q(1, 1), q(1, 1)]));
        let k2 = twisted_conjugate(&k, &pm).unwrap();
        for alpha in [q(0, 1), q(3, 2), q(1, 3)] {
            let a = is_simple(&spec(alpha.clone(), t(0, 2, 0), k.clone())).unwrap().simple;
            let b = is_simple(&spec(alpha, t(0, 2, 0), k2.clone())).unwrap().simple;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn u_alpha_examples() {
        assert_eq!(u_alpha(&q(1, 1)).unwrap(), P::h());
        let u = u_alpha(&q(3, 2)).unwrap();
        assert_eq!(u, &P::linear(q(1, 2)) * &P::linear(q(-1, 2)));
        let u2 = u_alpha(&q(2, 1)).unwrap();
        assert_eq!(u2, &(&P::linear(q(1, 1)) * &P::h()) * &P::linear(q(-1, 1)));
        for a in [q(1, 1), q(3, 2), q(2, 1), q(5, 2)] {
            let u = u_alpha(&a).unwrap();
            assert!(shift_equation_holds(&a, &u));
            assert_eq!(u.leading(), q(1, 1));
        }
        let fs = u_alpha_factors(&q(3, 2)).unwrap();
        assert_eq!(fs, vec![P::linear(q(1, 2)), P::linear(q(-1, 2))]);
        assert!(u_alpha(&q(1, 2)).is_err());
        assert!(u_alpha(&q(4, 3)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let r = quotient_hw_check(&spec(q(3, 2), t(0, 2, 0), M::e(P::h())), 6).unwrap();
        assert!(r.ok());
        assert_eq!((r.dim, r.weight.clone()), (4, q(1, 1)));
        let r = quotient_hw_check(&spec(q(1, 1), t(0, 2, 0), M::e(P::monomial(q(1, 1), 2))), 6).unwrap();
        assert!(r.ok());
        assert_eq!((r.dim, r.weight.clone()), (2, q(0, 1)));
        let r = quotient_hw_check(&spec(q(2, 1), t(0, 2, 0), M::e(P::h())), 6).unwrap();
        assert!(r.ok());
        assert_eq!((r.dim, r.weight), (6, q(2, 1)));
        assert!(quotient_hw_check(&spec(q(2, 1), t(0, 2, 0), M::identity()), 6).is_err());
    }

    #[test]
    fn iso_certificates() {
        let k = M::e(P::h());
        let a = spec(q(0, 1), t(2, 0, 0), k.clone());
        assert!(verify_iso_certificate(&a, &a, &M::identity()).unwrap());
        let pm = M::e(P::from_coeffs(vec![q(2, 1), q(1, 1)]));
        let b = spec(q(0, 1), t(2, 0, 0), twisted_conjugate(&k, &pm).unwrap());
        assert!(verify_iso_certificate(&a, &b, &pm).unwrap());
        assert!(!verify_iso_certificate(&a, &b, &M::e(P::h())).unwrap());
        let c = spec(q(2, 1), t(2, 0, 0), k);
        assert!(verify_iso_certificate(&a, &c, &M::identity()).is_err());
    }
}
