use serde_json::{json, Map, Value};

use super::parse::{
    parse_eword, parse_group_element, parse_mat, parse_poly, parse_poly_list, parse_scalar,
    parse_triple, parse_tuple, parse_unit,
};
use super::{Command, ExprKind, ModuleArgs};
use crate::conjugacy::{s_membership, FamilyKind, FamilySpec, SMembership};
use crate::error::{Error, Result};
use crate::factorization::{lq_form, reduce_word, standard_form};
use crate::orbits::{act_group, isomorphism_test, orbit_conjugator, orbit_membership, psi, sigma_map, t_gamma, theta};
use crate::poly::Poly;
use crate::polymat::{cocycle, is_twisted_conjugate, PolyMat2};
use crate::scalar::Field;
use crate::sl2::{
    casimir_check, is_simple, quotient_hw_check, shift_equation_holds, u_alpha, u_alpha_factors, verify_relations,
    ModuleSpec, SimplicityReason,
};

/// What a command produced.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub result: Map<String, Value>,
    pub certificate: Option<Map<String, Value>>,
    pub text: Vec<String>,
}

impl Report {
    fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), v.into());
        self
    }

    fn line(&mut self, l: impl Into<String>) -> &mut Self {
        self.text.push(l.into());
        self
    }

    fn cert(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.certificate.get_or_insert_with(Map::new).insert(key.into(), v.into());
        self
    }
}

fn s<T: ToString>(x: &T) -> Value {
    Value::String(x.to_string())
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(s).collect())
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `(h+1/2)*(h-1/2)`; a bare `h` stays unparenthesised.
fn factored<F: Field>(fs: &[Poly<F>]) -> String {
    fs.iter()
        .map(|p| if p.coeff(0).is_zero() { p.to_string() } else { format!("({p})") })
        .collect::<Vec<_>>()
        .join("*")
}

pub(super) fn input_echo(cmd: &Command) -> Value {
    let module = |m: &ModuleArgs| json!({"alpha": m.alpha, "triple": m.triple, "K": m.k});
    match cmd {
        Command::Parse { expr, kind } => json!({"expr": expr, "kind": format!("{kind:?}").to_lowercase()}),
        Command::Expand { word } => json!({ "word": word }),
        Command::Lq { k } | Command::Standard { k } | Command::Length { k } | Command::Smember { k } => {
            json!({ "K": k })
        }
        Command::Family {
            kind,
            a,
            b,
            eps,
            delta,
            beta,
            eta,
            u,
        } => json!({"family": kind, "a": a, "b": b, "eps": eps, "delta": delta, "beta": beta, "eta": eta, "u": u}),
        Command::Simple(m) | Command::VerifyRelations(m) | Command::Casimir(m) | Command::QuotientHw(m) => module(m),
        Command::Iso {
            first,
            alpha2,
            triple2,
            k2,
        } => json!({"first": module(first), "alpha2": alpha2, "triple2": triple2, "K2": k2}),
        Command::Orbit { x, y, act } => json!({"x": x, "y": y, "act": act}),
        Command::Cocycle { k, m, n } => json!({"K": k, "m": m, "n": n}),
        Command::Aut { a, gamma, m } => json!({"A": a, "gamma": gamma, "m": m}),
    }
}

fn module<F: Field>(m: &ModuleArgs) -> Result<ModuleSpec<F>> {
    ModuleSpec::new(parse_scalar(&m.alpha)?, parse_triple(&m.triple)?, parse_unit(&m.k)?)
}

fn describe_module<F: Field>(r: &mut Report, spec: &ModuleSpec<F>) {
    r.set("alpha", s(&spec.alpha))
        .set("triple", s(&spec.triple))
        .set("K", s(&spec.k));
}

fn membership_cert<F: Field>(r: &mut Report, k: &PolyMat2<F>, m: &SMembership<F>) -> Result<()> {
    if !m.verify(k) {
        return Err(Error::internal("membership certificate did not verify"));
    }
    let p = m.witness();
    r.cert("conjugator", s(p))
        .cert("target", s(&m.target()))
        .cert("identity", "K(h) P(h+1) = P(h) target(h)")
        .cert("lhs", s(&(k * &p.sigma_inv())))
        .cert("rhs", s(&(p * &m.target())));
    Ok(())
}

pub(super) fn run<F: Field>(cmd: &Command, degree_bound: usize) -> Result<Report> {
    let mut r = Report::default();
    match cmd {
        Command::Parse { expr, kind } => parse_cmd::<F>(&mut r, expr, *kind)?,
        Command::Expand { word } => {
            let w = parse_eword::<F>(word)?;
            let m = w.expand();
            r.set("word", s(&w)).set("matrix", s(&m)).set("det", s(&m.det()));
            r.line(m.to_string());
        }
        Command::Lq { k } => {
            let k = parse_unit::<F>(k)?;
            let lq = lq_form(&k)?;
            let product = std::iter::once(lq.front().to_string())
                .chain(lq.word_order().iter().map(|q| format!("E({q})")))
                .collect::<Vec<_>>()
                .join(" ");
            r.set("a", s(&lq.a))
                .set("b", s(&lq.b))
                .set("u", s(&lq.u))
                .set("front", s(&lq.front()))
                .set("quotients", strings(&lq.quotients))
                .set("product", product.clone());
            r.line(format!("front: {}", lq.front()))
                .line(format!("quotients q_1..q_T: {}", joined(&lq.quotients)))
                .line(format!("K = {product}"));
        }
        Command::Standard { k } => {
            let k = parse_unit::<F>(k)?;
            let sf = standard_form(&k)?;
            r.set("standard", s(&sf))
                .set("length", sf.len())
                .set("front", s(&sf.front))
                .set("factors", strings(&sf.factors));
            r.line(sf.to_string()).line(format!("length: {}", sf.len()));
        }
        Command::Length { k } => {
            let k = parse_unit::<F>(k)?;
            let sf = standard_form(&k)?;
            r.set("length", sf.len());
            r.line(sf.len().to_string());
        }
        Command::Smember { k } => {
            let k = parse_unit::<F>(k)?;
            let m = s_membership(&k)?;
            membership_cert(&mut r, &k, &m)?;
            match &m {
                SMembership::InS { canonical, .. } => {
                    r.set("in_s", true).set("canonical", s(canonical)).set("length", canonical.len());
                    r.line("in S: yes").line(format!("conjugate to: {canonical}"));
                }
                SMembership::NotInS { diag, .. } => {
                    r.set("in_s", false).set("diag", s(diag));
                    r.line("in S: no").line(format!("conjugate to: {diag}"));
                }
            }
            r.line(format!("conjugator: {}", m.witness()));
        }
        Command::Family {
            kind,
            a,
            b,
            eps,
            delta,
            beta,
            eta,
            u,
        } => {
            let kind = FamilyKind::parse(kind).ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown family '{kind}'"),
            })?;
            let mut spec = FamilySpec::new(kind, parse_scalar::<F>(a)?, parse_scalar::<F>(b)?);
            spec.eps = *eps;
            spec.delta = *delta;
            spec.beta = beta.as_deref().map(parse_scalar).transpose()?;
            spec.eta = eta.as_deref().map(parse_scalar).transpose()?;
            spec.u = parse_poly_list(u)?;
            let word = spec.word()?;
            let k = spec.build()?;
            let m = s_membership(&k)?;
            let SMembership::NotInS { diag, .. } = &m else {
                return Err(Error::internal("family member is not diagonalizable"));
            };
            if !diag.same_multiset(&spec.a, &spec.b) {
                return Err(Error::internal("family member has the wrong diagonal"));
            }
            membership_cert(&mut r, &k, &m)?;
            let sf = reduce_word(&word);
            r.set("family", kind.name())
                .set("word", s(&word))
                .set("standard", s(&sf))
                .set("matrix", s(&k))
                .set("diag", s(diag));
            r.line(format!("{}: {word}", kind.name()))
                .line(format!("standard form: {sf}"))
                .line(format!("conjugate to: {diag}"))
                .line(format!("conjugator: {}", m.witness()));
        }
        Command::Simple(args) => simple_cmd::<F>(&mut r, args)?,
        Command::Iso {
            first,
            alpha2,
            triple2,
            k2,
        } => {
            let a = module::<F>(first)?;
            let second = ModuleArgs {
                alpha: alpha2.clone().unwrap_or_else(|| first.alpha.clone()),
                triple: triple2.clone().unwrap_or_else(|| first.triple.clone()),
                k: k2.clone(),
            };
            let b = module::<F>(&second)?;
            match isomorphism_test(&a, &b)? {
                Some(iso) => {
                    r.set("isomorphic", true)
                        .set("element", s(&iso.element))
                        .set("x", s(&iso.x))
                        .set("y", s(&iso.y));
                    r.cert("conjugator", s(&iso.conjugator))
                        .cert("identity", "P(h)^-1 K_A(h) P(h+1) = K_B(h)");
                    r.line("isomorphic: yes")
                        .line(format!("witness: {}", iso.element))
                        .line(format!("X = {}", iso.x))
                        .line(format!("Y = {}", iso.y))
                        .line(format!("conjugator: {}", iso.conjugator));
                }
                None => {
                    r.set("isomorphic", false);
                    r.line("isomorphic: no");
                }
            }
        }
        Command::Orbit { x, y, act } => {
            let x = parse_tuple::<F>(x)?;
            match (y, act) {
                (None, Some(g)) => {
                    let g = parse_group_element::<F>(g)?;
                    let y = act_group(&g, &x);
                    let p = orbit_conjugator(&g, &x);
                    if !is_twisted_conjugate(&x.matrix(), &p, &y.matrix()) {
                        return Err(Error::internal("orbit conjugator did not verify"));
                    }
                    r.set("image", s(&y)).set("element", s(&g));
                    r.cert("conjugator", s(&p));
                    r.line(format!("{g} * {x} = {y}")).line(format!("conjugator: {p}"));
                }
                (Some(y), None) => {
                    let y = parse_tuple::<F>(y)?;
                    match orbit_membership(&x, &y) {
                        Some(g) => {
                            let p = orbit_conjugator(&g, &x);
                            if act_group(&g, &x) != y || !is_twisted_conjugate(&x.matrix(), &p, &y.matrix()) {
                                return Err(Error::internal("orbit witness did not verify"));
                            }
                            r.set("same_orbit", true).set("element", s(&g));
                            r.cert("conjugator", s(&p));
                            r.line("same orbit: yes")
                                .line(format!("witness: {g}"))
                                .line(format!("conjugator: {p}"));
                        }
                        None => {
                            r.set("same_orbit", false);
                            r.line("same orbit: no");
                        }
                    }
                }
                _ => return Err(Error::domain("give either Y or --act")),
            }
        }
        Command::VerifyRelations(args) => {
            let spec = module::<F>(args)?;
            let rep = verify_relations(&spec, degree_bound);
            if let Some(f) = &rep.failure {
                return Err(Error::internal(f.clone()));
            }
            describe_module(&mut r, &spec);
            r.set("ok", true).set("checked", rep.checked).set("degree_bound", degree_bound);
            r.line(format!("relations hold: {} checks, degree bound {degree_bound}", rep.checked));
        }
        Command::Casimir(args) => {
            let spec = module::<F>(args)?;
            let rep = casimir_check(&spec, degree_bound);
            if let Some(f) = &rep.failure {
                return Err(Error::internal(f.clone()));
            }
            let c = spec.central_character();
            describe_module(&mut r, &spec);
            r.set("casimir", s(&c)).set("checked", rep.checked).set("degree_bound", degree_bound);
            r.line(format!("c acts by {c} ({} checks, degree bound {degree_bound})", rep.checked));
        }
        Command::Cocycle { k, m, n } => {
            let k = parse_unit::<F>(k)?;
            let cm = cocycle(&k, *m)?;
            r.set("c_m", s(&cm));
            r.line(format!("c({m}) = {cm}"));
            if let Some(n) = n {
                let cn = cocycle(&k, *n)?;
                let cmn = cocycle(&k, m + n)?;
                let rhs = &cm * &cn.shift(*m);
                if cmn != rhs {
                    return Err(Error::internal("cocycle identity failed"));
                }
                r.set("c_n", s(&cn)).set("c_m_plus_n", s(&cmn)).set("identity_holds", true);
                r.line(format!("c({n}) = {cn}"))
                    .line(format!("c({}) = c({m}) c({n})(h+{m}) = {cmn}", m + n));
            }
        }
        Command::QuotientHw(args) => {
            let spec = module::<F>(args)?;
            let q = quotient_hw_check(&spec, degree_bound)?;
            if !q.ok() {
                return Err(Error::internal("quotient check failed"));
            }
            let fs = u_alpha_factors(&spec.alpha)?;
            describe_module(&mut r, &spec);
            r.set("u_alpha", factored(&fs))
                .set("u_alpha_expanded", s(&q.u_alpha))
                .set("dim", q.dim)
                .set("highest_weight", s(&q.weight));
            r.line(format!("u_alpha = {}", factored(&fs)))
                .line(format!("quotient dimension: {}", q.dim))
                .line(format!("highest weight: {}", q.weight));
        }
        Command::Aut { a, gamma, m } => {
            let a = parse_unit::<F>(a)?;
            let g = parse_scalar::<F>(gamma)?;
            let tg = t_gamma(&a, &g)?;
            let th = theta(&a)?;
            let sg = sigma_map(&a)?;
            let ps = psi(&a, &g, *m)?;
            r.set("t_gamma", s(&tg)).set("theta", s(&th)).set("sigma", s(&sg)).set("psi", s(&ps));
            r.line(format!("T_{g}(A) = {tg}"))
                .line(format!("theta(A) = {th}"))
                .line(format!("sigma(A) = {sg}"))
                .line(format!("Psi({g}, {m})(A) = {ps}"));
        }
    }
    Ok(r)
}

fn parse_cmd<F: Field>(r: &mut Report, expr: &str, kind: ExprKind) -> Result<()> {
    let kind = match kind {
        ExprKind::Auto => match expr.trim_start().chars().next() {
            Some('[') => ExprKind::Matrix,
            Some('d' | 'E') => ExprKind::Word,
            _ => ExprKind::Poly,
        },
        k => k,
    };
    let (name, canonical) = match kind {
        ExprKind::Poly => ("poly", parse_poly::<F>(expr)?.to_string()),
        ExprKind::Matrix => ("matrix", parse_mat::<F>(expr)?.to_string()),
        ExprKind::Word => ("word", parse_eword::<F>(expr)?.to_string()),
        ExprKind::Tuple => ("tuple", parse_tuple::<F>(expr)?.to_string()),
        ExprKind::Group => ("group", parse_group_element::<F>(expr)?.to_string()),
        ExprKind::Triple => ("triple", parse_triple(expr)?.to_string()),
        ExprKind::Auto => unreachable!(),
    };
    r.set("kind", name).set("canonical", canonical.clone());
    r.line(canonical);
    Ok(())
}

fn simple_cmd<F: Field>(r: &mut Report, args: &ModuleArgs) -> Result<()> {
    let spec = module::<F>(args)?;
    let v = is_simple(&spec)?;
    describe_module(r, &v.normalized);
    r.set("simple", v.simple);
    r.line(format!("simple: {}", if v.simple { "yes" } else { "no" }));
    if v.normalized.alpha != spec.alpha {
        r.line(format!(
            "read as alpha = {}, triple {}",
            v.normalized.alpha, v.normalized.triple
        ));
    }
    match &v.reason {
        SimplicityReason::KNotInS(rank1) => {
            let t = &rank1.triangular;
            let tri = PolyMat2::new(
                Poly::constant(t.a.clone()),
                t.u.clone(),
                Poly::zero(),
                Poly::constant(t.b.clone()),
            );
            if !is_twisted_conjugate(&spec.k, &t.witness, &tri) {
                return Err(Error::internal("triangular certificate did not verify"));
            }
            let g = &rank1.generator;
            r.set("reason", "k-not-in-S").set("submodule_generator", strings(g));
            r.cert("conjugator", s(&t.witness)).cert("triangular", s(&tri));
            r.line("reason: K is twisted-conjugate to an upper triangular constant-diagonal matrix")
                .line(format!("rank-1 submodule generated by ({}, {})", g[0], g[1]))
                .line(format!("conjugator: {}", t.witness));
        }
        SimplicityReason::AlphaExcluded { u_alpha: u } => {
            let fs = u_alpha_factors(&v.normalized.alpha)?;
            if u_alpha(&v.normalized.alpha)? != *u || !shift_equation_holds(&v.normalized.alpha, u) {
                return Err(Error::internal("u_alpha certificate did not verify"));
            }
            let a = &v.normalized.alpha;
            let lhs = &Poly::linear(a.clone() - F::one()) * &u.sigma();
            r.set("reason", "alpha-excluded").set("u_alpha", factored(&fs));
            r.cert("u_alpha", s(u))
                .cert("identity", "(h+alpha-1) u(h-1) = (h-alpha) u(h)")
                .cert("lhs", s(&lhs))
                .cert("rhs", s(&(&Poly::linear(-a.clone()) * u)));
            r.line("reason: alpha-excluded")
                .line(format!("u_alpha = {}", factored(&fs)))
                .line("submodule: (u_alpha F[h])^2");
        }
        SimplicityReason::Simple(m) => {
            membership_cert(r, &v.normalized.k, m)?;
            let SMembership::InS { canonical, .. } = m else {
                return Err(Error::internal("simple verdict without a canonical word"));
            };
            r.set("reason", "k-in-S").set("canonical", s(canonical));
            r.line("reason: K is in S and alpha is admissible")
                .line(format!("K is conjugate to {canonical}"));
        }
    }
    Ok(())
}
