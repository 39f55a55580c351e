//! Explicit matrices twisted-conjugate to a constant diagonal `diag(a, b)`.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polymat::{DiagPair, EWord, PolyMat2};
use crate::scalar::Field;

/// `(-1)^e` as an exponent sign.
fn alt(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn sign_word<F: Field>(negative: bool, front: DiagPair<F>, factors: Vec<Poly<F>>) -> EWord<F> {
    let front = if negative { front.neg() } else { front };
    EWord::new(front, factors)
}

fn c<F: Field>(x: F) -> Poly<F> {
    Poly::constant(x)
}

/// The generic twisted conjugate of `diag(a, b)` by `E(u_1) ... E(u_k)`:
///
/// `(-1)^k diag(a,b)_[k] E(0) E(-(a/b)^{(-1)^k} u_k) ... E(-(a/b) u_2)
///  E(-(b/a) u_1 + u_1(h+1)) E(u_2(h+1)) ... E(u_k(h+1))`
///
/// where `diag(a,b)_[k]` swaps the entries for odd `k`.
pub fn make_similar_to_diag<F: Field>(a: &F, b: &F, u: &[Poly<F>]) -> Result<EWord<F>> {
    let k = u.len();
    let ab = DiagPair::new(a.clone(), b.clone())?;
    if k == 0 {
        return Err(Error::domain("need at least one polynomial"));
    }
    if k > 2 && u[1..k - 1].iter().any(Poly::is_constant) {
        return Err(Error::domain("interior polynomials must be nonconstant"));
    }
    if k == 2 && u.iter().all(Poly::is_zero) {
        return Err(Error::domain("(u_1, u_2) must not be (0, 0)"));
    }
    let r = a.clone() / b.clone();
    let mut fs = vec![Poly::zero()];
    for i in (2..=k).rev() {
        fs.push(-&u[i - 1].scale(&r.powi(alt(i))));
    }
    fs.push(&u[0].sigma_inv() - &u[0].scale(&r.inv().expect("a nonzero")));
    fs.extend(u[1..].iter().map(Poly::sigma_inv));
    Ok(sign_word(k % 2 == 1, ab.bracket(k), fs))
}

/// Which explicit form to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// The generic even-length family.
    D,
    /// Odd length, with a `beta` correction of the diagonal and centre.
    G,
    /// Odd length, with `eta` corrections at both boundaries.
    K,
    /// Even length, with `beta` and `eta` corrections.
    Z,
    /// `make_similar_to_diag`.
    Conj,
    /// `diag(a,b)_[eps]`.
    Sporadic0,
    /// `diag(-a,-b)_[delta] E(0)^{1-eps} E(beta) E(0)^eps`.
    Sporadic1,
    /// `-diag(a/beta, b beta) E(-beta - beta b/a)`.
    Sporadic2,
    /// `diag(-a beta/eta, -b eta/beta) E(eta) E(-(beta-eta) b/(a beta^2) + (beta-eta)/(beta eta))`.
    Sporadic3,
    /// `-diag(b/(beta eta), a beta eta) E(-eta) E(-beta^2 (a/b) u_1 - beta - 1/eta)
    ///  E(u_1(h+1) - 1/beta) E(-eta beta^2 a/b)`.
    Sporadic4,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::D,
        FamilyKind::G,
        FamilyKind::K,
        FamilyKind::Z,
        FamilyKind::Conj,
        FamilyKind::Sporadic0,
        FamilyKind::Sporadic1,
        FamilyKind::Sporadic2,
        FamilyKind::Sporadic3,
        FamilyKind::Sporadic4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::D => "D",
            FamilyKind::G => "G",
            FamilyKind::K => "K",
            FamilyKind::Z => "Z",
            FamilyKind::Conj => "conj",
            FamilyKind::Sporadic0 => "sporadic0",
            FamilyKind::Sporadic1 => "sporadic1",
            FamilyKind::Sporadic2 => "sporadic2",
            FamilyKind::Sporadic3 => "sporadic3",
            FamilyKind::Sporadic4 => "sporadic4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s))
    }

    /// Whether the family takes the polynomial list `u`.
    pub fn takes_polys(self) -> bool {
        matches!(
            self,
            FamilyKind::D | FamilyKind::G | FamilyKind::K | FamilyKind::Z | FamilyKind::Conj | FamilyKind::Sporadic4
        )
    }
}

/// Parameters of an explicit family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec<F: Field> {
    pub kind: FamilyKind,
    pub a: F,
    pub b: F,
    pub eps: bool,
    pub delta: bool,
    pub beta: Option<F>,
    pub eta: Option<F>,
    pub u: Vec<Poly<F>>,
}

impl<F: Field> FamilySpec<F> {
    pub fn new(kind: FamilyKind, a: F, b: F) -> Self {
        FamilySpec {
            kind,
            a,
            b,
            eps: false,
            delta: false,
            beta: None,
            eta: None,
            u: Vec::new(),
        }
    }

    fn nonzero(&self, x: &Option<F>, name: &str) -> Result<F> {
        match x {
            Some(v) if !v.is_zero() => Ok(v.clone()),
            Some(_) => Err(Error::domain(format!("{name} must be nonzero"))),
            None => Err(Error::domain(format!("family {} needs {name}", self.kind.name()))),
        }
    }

    fn check_u(&self, exact: Option<usize>) -> Result<()> {
        if self.u.is_empty() {
            return Err(Error::domain("need at least one polynomial u"));
        }
        if let Some(n) = exact {
            if self.u.len() != n {
                return Err(Error::domain(format!("family {} takes exactly {n} polynomial", self.kind.name())));
            }
        }
        if self.u.iter().any(Poly::is_constant) {
            return Err(Error::domain("family polynomials must be nonconstant"));
        }
        Ok(())
    }

    /// The family member as a word (not necessarily reduced).
    pub fn word(&self) -> Result<EWord<F>> {
        let (a, b) = (self.a.clone(), self.b.clone());
        let ab = DiagPair::new(a.clone(), b.clone())?;
        let r = a.clone() / b.clone();
        let (eps, delta) = (self.eps as usize, self.delta as usize);
        let u = &self.u;
        let k = u.len();
        match self.kind {
            FamilyKind::Conj => make_similar_to_diag(&a, &b, u),
            FamilyKind::D => {
                self.check_u(None)?;
                let mut fs = Vec::new();
                if eps == 0 {
                    fs.push(Poly::zero());
                }
                for i in (2..=k).rev() {
                    fs.push(-&u[i - 1].scale(&r.powi(alt(i + delta))));
                }
                fs.push(u[0].clone());
                fs.extend(u[1..].iter().map(Poly::sigma_inv));
                if eps == 1 {
                    fs.push(Poly::zero());
                }
                Ok(sign_word(k % 2 == 1, ab.bracket(k + eps + delta), fs))
            }
            FamilyKind::G => {
                self.check_u(None)?;
                let beta = self.nonzero(&self.beta, "beta")?;
                let s = beta.clone() * beta.clone() * r.clone();
                let corr = DiagPair {
                    d1: beta.powi(alt(k + 1 - eps)),
                    d2: beta.powi(alt(k + eps)),
                };
                let mut fs = Vec::new();
                if eps == 0 {
                    fs.push(Poly::zero());
                }
                for i in (2..=k).rev() {
                    fs.push(-&u[i - 1].scale(&s.powi(alt(i + 1))));
                }
                fs.push(&(-&u[0].scale(&s)) - &c(beta.clone()));
                fs.push(&u[0].sigma_inv() - &c(beta.inv().expect("nonzero")));
                fs.extend(u[1..].iter().map(Poly::sigma_inv));
                if eps == 1 {
                    fs.push(Poly::zero());
                }
                Ok(sign_word((k + 1) % 2 == 1, ab.bracket(k + 1 - eps).mul(&corr), fs))
            }
            FamilyKind::K => {
                self.check_u(None)?;
                let eta = self.nonzero(&self.eta, "eta")?;
                let eta_inv = eta.inv().expect("nonzero");
                let corr = DiagPair {
                    d1: eta_inv.clone(),
                    d2: eta.clone(),
                };
                let br = b.clone() / a.clone();
                if k == 1 {
                    let fs = vec![c(-eta.clone()), u[0].clone(), c(-(eta * br.powi(alt(eps))))];
                    return Ok(EWord::new(ab.bracket(eps).mul(&corr), fs));
                }
                let mut fs = vec![c(-eta.clone())];
                fs.push(&(-&u[k - 1].scale(&r.powi(alt(k + eps)))) - &c(eta_inv));
                for i in (2..k).rev() {
                    fs.push(-&u[i - 1].scale(&r.powi(alt(i + eps))));
                }
                fs.push(u[0].clone());
                fs.extend(u[1..].iter().map(Poly::sigma_inv));
                fs.push(c(-(eta * br.powi(alt(k + 1 - eps)))));
                Ok(sign_word((k + 1) % 2 == 1, ab.bracket(k + 1 - eps).mul(&corr), fs))
            }
            FamilyKind::Z => {
                self.check_u(None)?;
                let beta = self.nonzero(&self.beta, "beta")?;
                let eta = self.nonzero(&self.eta, "eta")?;
                let (beta_inv, eta_inv) = (beta.inv().expect("nonzero"), eta.inv().expect("nonzero"));
                let s = beta.clone() * beta.clone() * r.clone();
                if k == 1 {
                    let front = DiagPair {
                        d1: b * eta_inv.clone() * beta_inv.clone(),
                        d2: a * eta.clone() * beta.clone(),
                    };
                    let fs = vec![
                        c(-eta.clone()),
                        &(-&u[0].scale(&s)) - &c(beta + eta_inv),
                        &u[0].sigma_inv() - &c(beta_inv),
                        c(-(eta * s)),
                    ];
                    return Ok(sign_word(true, front, fs));
                }
                let corr = DiagPair {
                    d1: eta_inv.clone() * beta.powi(alt(k)),
                    d2: eta.clone() * beta.powi(alt(k + 1)),
                };
                let mut fs = vec![c(-eta.clone())];
                fs.push(&(-&u[k - 1].scale(&s.powi(alt(k + 1)))) - &c(eta_inv));
                for i in (2..k).rev() {
                    fs.push(-&u[i - 1].scale(&s.powi(alt(i + 1))));
                }
                fs.push(&(-&u[0].scale(&s)) - &c(beta.clone()));
                fs.push(&u[0].sigma_inv() - &c(beta_inv));
                fs.extend(u[1..].iter().map(Poly::sigma_inv));
                fs.push(c(-(eta * s.powi(alt(k + 1)))));
                Ok(sign_word(k % 2 == 1, ab.bracket(k).mul(&corr), fs))
            }
            FamilyKind::Sporadic0 => Ok(EWord::new(ab.bracket(eps), vec![])),
            FamilyKind::Sporadic1 => {
                let beta = self.nonzero(&self.beta, "beta")?;
                let fs = if eps == 0 {
                    vec![Poly::zero(), c(beta)]
                } else {
                    vec![c(beta), Poly::zero()]
                };
                Ok(EWord::new(ab.neg().bracket(delta), fs))
            }
            FamilyKind::Sporadic2 => {
                let beta = self.nonzero(&self.beta, "beta")?;
                let front = DiagPair {
                    d1: a.clone() / beta.clone(),
                    d2: b.clone() * beta.clone(),
                };
                let x = -beta.clone() - beta * b / a;
                Ok(sign_word(true, front, vec![c(x)]))
            }
            FamilyKind::Sporadic3 => {
                let beta = self.nonzero(&self.beta, "beta")?;
                let eta = self.nonzero(&self.eta, "eta")?;
                let front = DiagPair {
                    d1: -(a.clone() * beta.clone() / eta.clone()),
                    d2: -(b.clone() * eta.clone() / beta.clone()),
                };
                let d = beta.clone() - eta.clone();
                let x = -(d.clone() * b / (a * beta.clone() * beta.clone())) + d / (beta * eta.clone());
                Ok(EWord::new(front, vec![c(eta), c(x)]))
            }
            FamilyKind::Sporadic4 => {
                self.check_u(Some(1))?;
                let beta = self.nonzero(&self.beta, "beta")?;
                let eta = self.nonzero(&self.eta, "eta")?;
                let s = beta.clone() * beta.clone() * r;
                let be = beta.clone() * eta.clone();
                let front = DiagPair {
                    d1: b / be.clone(),
                    d2: a * be,
                };
                let fs = vec![
                    c(-eta.clone()),
                    &(-&u[0].scale(&s)) - &c(beta.clone() + eta.inv().expect("nonzero")),
                    &u[0].sigma_inv() - &c(beta.inv().expect("nonzero")),
                    c(-(eta * s)),
                ];
                Ok(sign_word(true, front, fs))
            }
        }
    }

    pub fn build(&self) -> Result<PolyMat2<F>> {
        Ok(self.word()?.expand())
    }
}
