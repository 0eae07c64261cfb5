//! Elaboration of surface signatures into core syntax.
//!
//! Arrows are classified by their domain: a domain that mentions signature
//! names must be a small type (inductive function space); one that does not
//! is an external type (external or infinitary function space, depending on
//! whether the arrow sits in a large or a small position).

pub mod core_check;

use std::collections::HashSet;

use crate::core::print::{scope_of, show_tm, show_ty};
use crate::core::*;
use crate::diag::{Diagnostic, Rule, Span};
use crate::name::Name;
use crate::surface::{Expr, ExprKind, Motive, SurfaceModule};
use crate::target::{self, Kernel, Tm};

use core_check::{inst2, j_path_ty, j_result, jbeta_result, jbetau_result, ju_path_ty, kernel_ctx, Conv};

type R<T> = Result<T, Diagnostic>;

#[derive(Clone, Debug)]
enum Slot {
    Ext(Tm),
    Sig(STy),
    /// A declaration that failed to elaborate.
    Poisoned,
}

/// Elaboration scope: a zoned telescope plus failed entries.
struct Scope {
    names: Vec<String>,
    slots: Vec<Slot>,
}

impl Scope {
    fn push(&mut self, n: &str, s: Slot) {
        self.names.push(n.to_string());
        self.slots.push(s);
    }

    fn pop(&mut self) {
        self.names.pop();
        self.slots.pop();
    }

    fn lookup(&self, n: &str) -> Option<(usize, &Slot)> {
        let k = self.names.iter().rposition(|m| m == n)?;
        Some((self.names.len() - 1 - k, &self.slots[k]))
    }

    /// The telescope view; failed entries are shown to the kernel as
    /// signature entries so that they cannot be used externally either.
    fn tele(&self) -> Tele {
        self.names
            .iter()
            .zip(&self.slots)
            .map(|(n, s)| {
                let z = match s {
                    Slot::Ext(t) => Zone::Ext(t.clone()),
                    Slot::Sig(t) => Zone::Sig(t.clone()),
                    Slot::Poisoned => Zone::Sig(u()),
                };
                (Name::new(n), z)
            })
            .collect()
    }
}

pub struct Elaborator<'k> {
    kernel: &'k Kernel,
    sc: Scope,
}

/// Elaborates a parsed module, reporting every failing declaration.
pub fn elaborate_signature(m: &SurfaceModule) -> Result<SigContext, Vec<Diagnostic>> {
    let kernel = Kernel::default();
    elaborate_with(&kernel, m)
}

pub fn elaborate_with(kernel: &Kernel, m: &SurfaceModule) -> Result<SigContext, Vec<Diagnostic>> {
    let mut el = Elaborator { kernel, sc: Scope { names: Vec::new(), slots: Vec::new() } };
    let mut diags = Vec::new();
    let mut out = SigContext::default();
    for d in &m.ext {
        match el.ext_decl(&d.ty) {
            Ok(t) => {
                out.ext.push((Name::new(&d.name.name), t.clone()));
                el.sc.push(&d.name.name, Slot::Ext(t));
            }
            Err(e) => {
                diags.push(e);
                el.sc.push(&d.name.name, Slot::Poisoned);
            }
        }
    }
    for d in &m.sig {
        match el.check_type(&d.ty) {
            Ok(t) => {
                out.sig.push((Name::new(&d.name.name), t.clone()));
                el.sc.push(&d.name.name, Slot::Sig(t));
            }
            Err(e) => {
                diags.push(e);
                el.sc.push(&d.name.name, Slot::Poisoned);
            }
        }
    }
    if diags.is_empty() {
        Ok(out)
    } else {
        Err(diags)
    }
}

fn err(rule: Rule, span: Span, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(rule, span, msg)
}

impl Elaborator<'_> {
    fn tele(&self) -> Tele {
        self.sc.tele()
    }

    fn show_ty(&self, t: &STy) -> String {
        show_ty(t, &scope_of(&self.tele()))
    }

    fn show_tm(&self, t: &STm) -> String {
        show_tm(t, &scope_of(&self.tele()))
    }

    fn with<T>(&mut self, n: &str, s: Slot, f: impl FnOnce(&mut Self) -> T) -> T {
        self.sc.push(n, s);
        let r = f(self);
        self.sc.pop();
        r
    }

    fn conv_ty(&self, a: &STy, b: &STy) -> bool {
        Conv { kernel: self.kernel }.ty(&mut self.tele(), a, b)
    }

    fn conv_tm(&self, a: &STm, b: &STm) -> bool {
        Conv { kernel: self.kernel }.tm(&mut self.tele(), a, b)
    }

    /// Names free in `e` (respecting binders) that refer to signature or
    /// failed entries.
    fn mentions_sig(&self, e: &Expr) -> bool {
        let mut bound: Vec<(String, bool)> = Vec::new();
        self.mentions_sig_in(e, &mut bound)
    }

    fn mentions_sig_in(&self, e: &Expr, bound: &mut Vec<(String, bool)>) -> bool {
        match &e.kind {
            ExprKind::Name(n) => {
                if let Some((_, small)) = bound.iter().rev().find(|(m, _)| m == n) {
                    return *small;
                }
                matches!(self.sc.lookup(n), Some((_, Slot::Sig(_))) | Some((_, Slot::Poisoned)))
            }
            ExprKind::U | ExprKind::Set | ExprKind::Refl => false,
            ExprKind::Arrow { binders, dom, cod } => {
                let d = self.mentions_sig_in(dom, bound);
                let k = bound.len();
                bound.extend(binders.iter().map(|b| (b.name.clone(), d)));
                let c = self.mentions_sig_in(cod, bound);
                bound.truncate(k);
                d || c
            }
            ExprKind::App(f, a) => self.mentions_sig_in(f, bound) | self.mentions_sig_in(a, bound),
            ExprKind::Eq { ty, lhs, rhs } => {
                ty.as_ref().is_some_and(|t| self.mentions_sig_in(t, bound))
                    | self.mentions_sig_in(lhs, bound)
                    | self.mentions_sig_in(rhs, bound)
            }
            ExprKind::J { .. } | ExprKind::JBeta { .. } => true,
        }
    }

    fn poisoned(&self, e: &Expr) -> Option<Diagnostic> {
        let mut found = None;
        e.visit(&mut |x| {
            if found.is_none() {
                if let ExprKind::Name(n) = &x.kind {
                    if let Some((_, Slot::Poisoned)) = self.sc.lookup(n) {
                        found = Some(err(
                            Rule::Ctx,
                            x.span,
                            format!("depends on failed declaration `{}`", n),
                        ));
                    }
                }
            }
        });
        found
    }

    // ---- external terms ----

    fn ext_decl(&mut self, e: &Expr) -> R<Tm> {
        let t = self.ext_term(e)?;
        let mut ctx = kernel_ctx(&self.tele());
        self.kernel.refuel();
        match self.kernel.infer_sort(&mut ctx, &t) {
            Ok(l) if l <= 1 => Ok(t),
            Ok(_) => Err(err(Rule::External, e.span, "external parameter type is too large (must be in Set₁)")),
            Err(k) => Err(self.kernel_diag(e.span, k)),
        }
    }

    fn kernel_diag(&self, span: Span, k: target::KernelError) -> Diagnostic {
        err(Rule::External, span, k.msg)
    }

    /// Translates surface syntax to an external term (no typing yet).
    fn ext_term(&mut self, e: &Expr) -> R<Tm> {
        if let Some(d) = self.poisoned(e) {
            return Err(d);
        }
        match &e.kind {
            ExprKind::Name(n) => match self.sc.lookup(n) {
                Some((i, Slot::Ext(_))) => Ok(target::var(i)),
                Some((_, Slot::Sig(_))) => Err(err(
                    Rule::External,
                    e.span,
                    format!("`{}` belongs to the signature and cannot be used in an external term", n),
                )),
                Some((_, Slot::Poisoned)) => unreachable!(),
                None => Err(err(Rule::Var, e.span, format!("unbound name `{}`", n))),
            },
            ExprKind::Set => Ok(target::ty(0)),
            ExprKind::U => Err(err(Rule::Univ, e.span, "`U` is not an external type")),
            ExprKind::Refl => Err(err(Rule::External, e.span, "`refl` cannot be used in an external parameter")),
            ExprKind::Arrow { binders, dom, cod } => {
                let d = self.ext_term(dom)?;
                if binders.is_empty() {
                    let c = self.with("_", Slot::Ext(d.clone()), |s| s.ext_term(cod))?;
                    return Ok(target::pi("_", d, c));
                }
                self.ext_binders(binders.iter().map(|b| b.name.as_str()).collect(), d, cod)
            }
            ExprKind::App(f, a) => Ok(target::app(self.ext_term(f)?, self.ext_term(a)?)),
            ExprKind::Eq { ty, lhs, rhs } => {
                let l = self.ext_term(lhs)?;
                let r = self.ext_term(rhs)?;
                let a = match ty {
                    Some(t) => self.ext_term(t)?,
                    None => {
                        let mut ctx = kernel_ctx(&self.tele());
                        self.kernel.refuel();
                        self.kernel.infer(&mut ctx, &l).map_err(|k| self.kernel_diag(lhs.span, k))?
                    }
                };
                Ok(target::eq(a, l, r))
            }
            ExprKind::J { .. } | ExprKind::JBeta { .. } => {
                Err(err(Rule::External, e.span, "`J` cannot be used in an external parameter"))
            }
        }
    }

    fn ext_binders(&mut self, names: Vec<&str>, d: Tm, cod: &Expr) -> R<Tm> {
        match names.split_first() {
            None => self.ext_term(cod),
            Some((n, rest)) => {
                let rest = rest.to_vec();
                let d2 = target::shift(&d, 1);
                let body = self.with(n, Slot::Ext(d.clone()), |s| s.ext_binders(rest, d2, cod))?;
                Ok(target::pi(n, d, body))
            }
        }
    }

    /// Elaborates an external term and checks it against `want`.
    fn ext_check(&mut self, e: &Expr, want: &Tm, rule: Rule) -> R<Tm> {
        let t = self.ext_term(e)?;
        let mut ctx = kernel_ctx(&self.tele());
        self.kernel.refuel();
        match self.kernel.check(&mut ctx, &t, want) {
            Ok(()) => Ok(t),
            Err(k) => Err(err(rule, e.span, k.msg)),
        }
    }

    /// An external type that can serve as a rule-6/7 domain.
    fn ext_domain(&mut self, e: &Expr, rule: Rule) -> R<Tm> {
        let t = self.ext_term(e)?;
        let mut ctx = kernel_ctx(&self.tele());
        self.kernel.refuel();
        match self.kernel.infer_sort(&mut ctx, &t) {
            Ok(0) => Ok(t),
            Ok(_) => Err(err(
                rule,
                e.span,
                format!("external domain `{}` must be a type in Set", ctx.show(&t)),
            )),
            Err(k) => Err(err(rule, e.span, k.msg)),
        }
    }

    // ---- signature types ----

    pub fn check_type(&mut self, e: &Expr) -> R<STy> {
        if let Some(d) = self.poisoned(e) {
            return Err(d);
        }
        match &e.kind {
            ExprKind::U => Ok(u()),
            ExprKind::Arrow { binders, dom, cod } => {
                let names: Vec<String> = if binders.is_empty() {
                    vec!["_".into()]
                } else {
                    binders.iter().map(|b| b.name.clone()).collect()
                };
                if self.mentions_sig(dom) {
                    let a = self.check_small(dom, Rule::PiInd)?;
                    self.pi_ind_chain(&names, a, cod)
                } else {
                    let a = self.ext_domain(dom, Rule::PiExt)?;
                    self.pi_ext_chain(&names, a, cod)
                }
            }
            ExprKind::Eq { ty: None, lhs, .. } => {
                let (l, lt) = self.infer_term(lhs)?;
                if matches!(&*lt, SigType::U) {
                    let ExprKind::Eq { rhs, .. } = &e.kind else { unreachable!() };
                    let r = self.check_term(rhs, &u(), Rule::EqU)?;
                    return Ok(eq_u(l, r));
                }
                let t = self.small_eq(e, Some((l, lt)))?;
                Ok(el(t))
            }
            ExprKind::Set => Err(err(
                Rule::Univ,
                e.span,
                "`Set` is an external universe; signature entries are typed by `U` or small types",
            )),
            _ => {
                let (t, ty) = self.infer_term(e)?;
                match &*ty {
                    SigType::U => Ok(el(t)),
                    _ => Err(err(Rule::Univ, e.span, format!("`{}` is not a type", self.show_tm(&t)))
                        .with_types("U", self.show_ty(&ty))),
                }
            }
        }
    }

    fn pi_ind_chain(&mut self, names: &[String], a: STm, cod: &Expr) -> R<STy> {
        let (n, rest) = names.split_first().unwrap();
        let a_next = shift(&a, 0, 1);
        let body = self.with(n, Slot::Sig(el(a.clone())), |s| {
            if rest.is_empty() {
                s.check_type(cod)
            } else {
                s.pi_ind_chain(rest, a_next, cod)
            }
        })?;
        Ok(pi_ind(n, a, body))
    }

    fn pi_ext_chain(&mut self, names: &[String], a: Tm, cod: &Expr) -> R<STy> {
        let (n, rest) = names.split_first().unwrap();
        let a_next = target::shift(&a, 1);
        let body = self.with(n, Slot::Ext(a.clone()), |s| {
            if rest.is_empty() {
                s.check_type(cod)
            } else {
                s.pi_ext_chain(rest, a_next, cod)
            }
        })?;
        Ok(pi_ext(n, a, body))
    }

    /// Elaborates a small type (a term of `U`).
    fn check_small(&mut self, e: &Expr, rule: Rule) -> R<STm> {
        let (t, ty) = self.infer_term(e)?;
        match &*ty {
            SigType::U => Ok(t),
            _ => Err(err(rule, e.span, format!("`{}` is not a small type", self.show_tm(&t)))
                .with_types("U", self.show_ty(&ty))),
        }
    }

    // ---- signature terms ----

    pub fn check_term(&mut self, e: &Expr, want: &STy, rule: Rule) -> R<STm> {
        if let ExprKind::Refl = e.kind {
            return match &**want {
                SigType::El(a) => match &**a {
                    SigTerm::EqId(_, x, y) => {
                        if self.conv_tm(x, y) {
                            Ok(refl(x.clone()))
                        } else {
                            Err(err(
                                Rule::EqId,
                                e.span,
                                format!(
                                    "refl needs both sides to be equal, but `{}` and `{}` differ",
                                    self.show_tm(x),
                                    self.show_tm(y)
                                ),
                            ))
                        }
                    }
                    _ => Err(err(Rule::EqId, e.span, "refl checked against a non-equality type")
                        .with_types("an equality", self.show_ty(want))),
                },
                SigType::EqTyCon(a, b) => {
                    if self.conv_tm(a, b) {
                        Ok(refl_u(a.clone()))
                    } else {
                        Err(err(
                            Rule::EqU,
                            e.span,
                            format!(
                                "refl needs both sides to be equal, but `{}` and `{}` differ",
                                self.show_tm(a),
                                self.show_tm(b)
                            ),
                        ))
                    }
                }
                _ => Err(err(Rule::EqId, e.span, "refl checked against a non-equality type")
                    .with_types("an equality", self.show_ty(want))),
            };
        }
        let (t, got) = self.infer_term(e)?;
        if self.conv_ty(&got, want) {
            Ok(t)
        } else {
            Err(err(rule, e.span, format!("type mismatch for `{}`", self.show_tm(&t)))
                .with_types(self.show_ty(want), self.show_ty(&got)))
        }
    }

    /// Rule-4 equality type `t = u` (or `Id a t u`), optionally with the
    /// left side already inferred.
    fn small_eq(&mut self, e: &Expr, lhs_done: Option<(STm, STy)>) -> R<STm> {
        let ExprKind::Eq { ty, lhs, rhs } = &e.kind else { unreachable!() };
        if let Some(ty) = ty {
            let a = self.check_small(ty, Rule::EqId)?;
            let l = self.check_term(lhs, &el(a.clone()), Rule::EqId)?;
            let r = self.check_term(rhs, &el(a.clone()), Rule::EqId)?;
            return Ok(eq_id(a, l, r));
        }
        let (l, lt) = match lhs_done {
            Some(x) => x,
            None => self.infer_term(lhs)?,
        };
        match &*lt {
            SigType::El(a) => {
                let r = self.check_term(rhs, &lt, Rule::EqId)?;
                Ok(eq_id(a.clone(), l, r))
            }
            SigType::U => Err(err(
                Rule::EqU,
                e.span,
                "an equation between type constructors is not a small type and cannot appear here",
            )),
            _ => Err(err(Rule::EqId, lhs.span, format!("`{}` is not an element of a small type", self.show_tm(&l)))
                .with_types("an element of a small type", self.show_ty(&lt))),
        }
    }

    pub fn infer_term(&mut self, e: &Expr) -> R<(STm, STy)> {
        if let Some(d) = self.poisoned(e) {
            return Err(d);
        }
        match &e.kind {
            ExprKind::Name(n) => match self.sc.lookup(n) {
                Some((i, Slot::Sig(ty))) => {
                    let ty = shift_ty(ty, 0, i + 1);
                    Ok((v(i), ty))
                }
                Some((_, Slot::Ext(_))) => Err(err(
                    Rule::External,
                    e.span,
                    format!("external `{}` cannot be used as part of the signature", n),
                )),
                Some((_, Slot::Poisoned)) => unreachable!(),
                None => Err(err(Rule::Var, e.span, format!("unbound name `{}`", n))),
            },
            ExprKind::U => Err(err(Rule::Univ, e.span, "`U` is not a term; the universe is not small")),
            ExprKind::Set => Err(err(Rule::Univ, e.span, "`Set` is external and cannot be used as a signature term")),
            ExprKind::Refl => Err(err(Rule::EqId, e.span, "cannot infer the type of `refl` here; it needs a known equality type")),
            ExprKind::App(..) => self.infer_app(e),
            ExprKind::Arrow { binders, dom, cod } => {
                let names: Vec<String> = if binders.is_empty() {
                    vec!["_".into()]
                } else {
                    binders.iter().map(|b| b.name.clone()).collect()
                };
                if self.mentions_sig(dom) {
                    let cod_small = {
                        let mut bound: Vec<(String, bool)> = names.iter().map(|n| (n.clone(), true)).collect();
                        self.mentions_sig_in(cod, &mut bound)
                    };
                    if cod_small {
                        Err(err(
                            Rule::PiInd,
                            e.span,
                            "U is not closed under functions with a small domain; such a type can only be used as the type of a declaration",
                        ))
                    } else {
                        Err(err(
                            Rule::PiExt,
                            e.span,
                            "a small type cannot be the domain of a function into an external type",
                        ))
                    }
                } else {
                    let a = self.ext_domain(dom, Rule::PiInf)?;
                    let t = self.pi_inf_chain(&names, a, cod)?;
                    Ok((t, u()))
                }
            }
            ExprKind::Eq { .. } => Ok((self.small_eq(e, None)?, u())),
            ExprKind::J { ty, base: Some(base), motive, pr, end, path } => {
                let (a, t, x, z, p, prt) = self.j_common(ty, base, motive, pr)?;
                let u_ = self.check_term(end, &el(a.clone()), Rule::J)?;
                let eq = self.check_term(path, &el(eq_id(a.clone(), t.clone(), u_.clone())), Rule::J)?;
                let res = j_result(&p, &u_, &eq);
                Ok((std::rc::Rc::new(SigTerm::J { a, t, x, z, p, pr: prt, u: u_, eq }), res))
            }
            ExprKind::JBeta { ty, base: Some(base), motive, pr } => {
                let (a, t, x, z, p, prt) = self.j_common(ty, base, motive, pr)?;
                let res = jbeta_result(&a, &t, &x, &z, &p, &prt);
                Ok((std::rc::Rc::new(SigTerm::JBeta { a, t, x, z, p, pr: prt }), res))
            }
            ExprKind::J { ty, base: None, motive, pr, end, path } => {
                let (a, x, z, p, prt) = self.ju_common(ty, motive, pr)?;
                let b = self.check_term(end, &u(), Rule::J)?;
                let eq = self.check_term(path, &eq_u(a.clone(), b.clone()), Rule::J)?;
                let res = j_result(&p, &b, &eq);
                Ok((std::rc::Rc::new(SigTerm::JU { a, x, z, p, pr: prt, b, eq }), res))
            }
            ExprKind::JBeta { ty, base: None, motive, pr } => {
                let (a, x, z, p, prt) = self.ju_common(ty, motive, pr)?;
                let res = jbetau_result(&a, &x, &z, &p, &prt);
                Ok((std::rc::Rc::new(SigTerm::JBetaU { a, x, z, p, pr: prt }), res))
            }
        }
    }

    fn pi_inf_chain(&mut self, names: &[String], a: Tm, cod: &Expr) -> R<STm> {
        let (n, rest) = names.split_first().unwrap();
        let a_next = target::shift(&a, 1);
        let body = self.with(n, Slot::Ext(a.clone()), |s| {
            if rest.is_empty() {
                s.check_small(cod, Rule::PiInf)
            } else {
                s.pi_inf_chain(rest, a_next, cod)
            }
        })?;
        Ok(pi_inf(n, a, body))
    }

    #[allow(clippy::type_complexity)]
    fn j_common(&mut self, ty: &Expr, base: &Expr, m: &Motive, pr: &Expr) -> R<(STm, STm, Name, Name, STm, STm)> {
        let a = self.check_small(ty, Rule::J)?;
        let t = self.check_term(base, &el(a.clone()), Rule::J)?;
        let zt = j_path_ty(&a, &t);
        let p = self.with(&m.x.name, Slot::Sig(el(a.clone())), |s| {
            s.with(&m.z.name, Slot::Sig(zt), |s| s.check_small(&m.body, Rule::J))
        })?;
        let prt = self.check_term(pr, &el(inst2(&p, &t, &refl(t.clone()))), Rule::J)?;
        Ok((a, t, Name::new(&m.x.name), Name::new(&m.z.name), p, prt))
    }

    fn ju_common(&mut self, ty: &Expr, m: &Motive, pr: &Expr) -> R<(STm, Name, Name, STm, STm)> {
        let a = self.check_term(ty, &u(), Rule::J)?;
        let zt = ju_path_ty(&a);
        let p = self.with(&m.x.name, Slot::Sig(u()), |s| {
            s.with(&m.z.name, Slot::Sig(zt), |s| s.check_small(&m.body, Rule::J))
        })?;
        let prt = self.check_term(pr, &el(inst2(&p, &a, &refl_u(a.clone()))), Rule::J)?;
        Ok((a, Name::new(&m.x.name), Name::new(&m.z.name), p, prt))
    }

    fn infer_app(&mut self, e: &Expr) -> R<(STm, STy)> {
        let ExprKind::App(f, a) = &e.kind else { unreachable!() };
        // An external head can never take signature arguments.
        let mut head = &**f;
        while let ExprKind::App(g, _) = &head.kind {
            head = g;
        }
        if let ExprKind::Name(n) = &head.kind {
            if let Some((_, Slot::Ext(_))) = self.sc.lookup(n) {
                let small_arg = self.mentions_sig(e);
                let msg = if small_arg {
                    format!(
                        "external `{}` cannot be applied to signature terms; only the external theory can use it",
                        n
                    )
                } else {
                    format!("external term `{}` is used where a signature term is expected", n)
                };
                return Err(err(Rule::External, e.span, msg));
            }
        }
        let (ft, fty) = self.infer_term(f)?;
        match &*fty {
            SigType::PiInd(_, d, b) => {
                let at = self.check_term(a, &el(d.clone()), Rule::PiInd)?;
                let res = subst_ty(b, 0, &Repl::Sig(at.clone()));
                Ok((app_ind(ft, at), res))
            }
            SigType::PiExt(_, d, b) => {
                if self.mentions_sig(a) {
                    return Err(err(
                        Rule::PiExt,
                        a.span,
                        "this argument must be an external term but it mentions signature names",
                    ));
                }
                let at = self.ext_check(a, d, Rule::PiExt)?;
                let res = subst_ty(b, 0, &Repl::Ext(at.clone()));
                Ok((app_ext(ft, at), res))
            }
            SigType::El(s) if matches!(&**s, SigTerm::PiInf(..)) => {
                let SigTerm::PiInf(_, d, b) = &**s else { unreachable!() };
                if self.mentions_sig(a) {
                    return Err(err(
                        Rule::PiInf,
                        a.span,
                        "this argument must be an external term but it mentions signature names",
                    ));
                }
                let at = self.ext_check(a, d, Rule::PiInf)?;
                let res = el(subst(b, 0, &Repl::Ext(at.clone())));
                Ok((app_inf(ft, at), res))
            }
            _ => Err(err(Rule::Var, f.span, format!("`{}` is not a function", self.show_tm(&ft)))
                .with_types("a function type", self.show_ty(&fty))),
        }
    }
}

/// Unique display names for a telescope, in order.
pub fn distinct_names(sc: &SigContext) -> bool {
    let mut seen = HashSet::new();
    sc.ext.iter().map(|(n, _)| n).chain(sc.sig.iter().map(|(n, _)| n)).all(|n| seen.insert(n.as_str().to_string()))
}
