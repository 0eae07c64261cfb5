//! Whole-signature outputs and their verification.

use super::named::{self, *};
use super::{comp, type_of, Env, Translator, Vals};
use crate::checker::core_check::{j_path_ty, ju_path_ty};
use crate::core::{el, u, STm, STy, SigContext, SigTerm, SigType};
use crate::name::Name;
use crate::target::{self, Ctx, Kernel, Prim, Tm};

/// Position of a signature entry inside the nested Σ of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub name: Name,
    /// Number of `proj₁` steps before the final `proj₂`.
    pub depth: usize,
}

impl Component {
    /// The component projected out of `g`.
    pub fn project(&self, g: Tm) -> Tm {
        let mut t = g;
        for _ in 0..self.depth {
            t = target::proj1(t);
        }
        target::proj2(t)
    }
}

/// The four translations of a signature plus the three derived statements.
///
/// `alg_*` are closed over the external parameters. The derived statements
/// live in the scope `params, A, D, M, S, ⋆ : A` where `A`, `D`, `M`, `S`
/// are let-bound to the algebra outputs.
#[derive(Clone, Debug)]
pub struct ElabBundle {
    pub level: u8,
    pub params: Vec<(Name, Tm)>,
    pub alg_a: Tm,
    pub alg_d: Tm,
    pub alg_m: Tm,
    pub alg_s: Tm,
    pub induction: Tm,
    pub recursion: Tm,
    pub initiality: Tm,
    pub names: Vec<Component>,
}

impl Translator {
    fn base(&self, sc: &SigContext) -> (Env, Vec<u32>) {
        let mut env = Env::default();
        let mut ids = Vec::new();
        for (n, t) in &sc.ext {
            let k = self.g.fresh();
            ids.push(k);
            env = env.with_ext(n, t, named::v(k));
        }
        (env, ids)
    }

    fn extend(&self, base: &Env, sc: &SigContext, k: usize, vals: impl Fn(usize) -> Vals) -> Env {
        let mut env = base.clone();
        for (j, (n, t)) in sc.sig[..k].iter().enumerate() {
            env = env.with_sig(n, t, vals(j));
        }
        env
    }

    pub fn alg_a(&self, sc: &SigContext) -> Tm {
        let (base, ids) = self.base(sc);
        let n = self.alg_a_n(sc, &base);
        normalize(&to_tm(&n, &ids))
    }

    fn alg_a_n(&self, sc: &SigContext, base: &Env) -> N {
        let mut acc = unit();
        for (k, (_, t)) in sc.sig.iter().enumerate() {
            acc = self.g.sigma("γ", acc, |g| {
                self.ty_a(&self.extend(base, sc, k, |j| Vals::just(comp(&g, j, k))), t)
            });
        }
        acc
    }

    pub fn alg_d(&self, sc: &SigContext) -> Tm {
        let (base, ids) = self.base(sc);
        let m = sc.sig.len();
        let n = self.g.lam("γ", |g| {
            let mut acc = unit();
            for (k, (_, t)) in sc.sig.iter().enumerate() {
                acc = self.g.sigma("γᴰ", acc, |gd| {
                    let env = self.extend(&base, sc, k, |j| Vals { d: comp(&gd, j, k), ..Vals::just(comp(&g, j, m)) });
                    self.ty_d(&env, t, comp(&g, k, m))
                });
            }
            acc
        });
        normalize(&to_tm(&n, &ids))
    }

    pub fn alg_m(&self, sc: &SigContext) -> Tm {
        let (base, ids) = self.base(sc);
        let m = sc.sig.len();
        let n = self.g.lams(&["γ₀", "γ₁"], |gs| {
            let (g0, g1) = (&gs[0], &gs[1]);
            let mut acc = unit();
            for (k, (_, t)) in sc.sig.iter().enumerate() {
                acc = self.g.sigma("γᴹ", acc, |gm| {
                    let env = self.extend(&base, sc, k, |j| Vals {
                        a1: comp(g1, j, m),
                        m: comp(&gm, j, k),
                        ..Vals::just(comp(g0, j, m))
                    });
                    self.ty_m(&env, t, comp(g0, k, m), comp(g1, k, m))
                });
            }
            acc
        });
        normalize(&to_tm(&n, &ids))
    }

    pub fn alg_s(&self, sc: &SigContext) -> Tm {
        let (base, ids) = self.base(sc);
        let m = sc.sig.len();
        let n = self.g.lams(&["γ", "γᴰ"], |gs| {
            let (g, gd) = (&gs[0], &gs[1]);
            let mut acc = unit();
            for (k, (_, t)) in sc.sig.iter().enumerate() {
                acc = self.g.sigma("γˢ", acc, |gsec| {
                    let env = self.extend(&base, sc, k, |j| Vals {
                        d: comp(gd, j, m),
                        s: comp(&gsec, j, k),
                        ..Vals::just(comp(g, j, m))
                    });
                    self.ty_s(&env, t, comp(g, k, m), comp(gd, k, m))
                });
            }
            acc
        });
        normalize(&to_tm(&n, &ids))
    }
}

pub fn component_table(sc: &SigContext) -> Vec<Component> {
    let m = sc.sig.len();
    sc.sig.iter().enumerate().map(|(j, (n, _))| Component { name: n.clone(), depth: m - 1 - j }).collect()
}

/// Runs all four translations at displayed level `level`.
pub fn elaborate(sc: &SigContext, level: u8) -> ElabBundle {
    let tr = Translator::new(level);
    let (a, d) = (target::var(4), target::var(3));
    let star = target::var(0);
    // Induction: (γᴰ : D ⋆) → S ⋆ γᴰ.
    let induction = target::pi(
        "γᴰ",
        target::app(d, star.clone()),
        target::apps(target::var(2), [target::var(1), target::var(0)]),
    );
    // Recursion: (γ : A) → M ⋆ γ.
    let recursion = target::pi("γ", a.clone(), target::apps(target::var(3), [target::var(1), target::var(0)]));
    let initiality = target::pi(
        "γ",
        a,
        target::app(
            target::constant(Prim::IsContr),
            target::apps(target::var(3), [target::var(1), target::var(0)]),
        ),
    );
    ElabBundle {
        level,
        params: sc.ext.clone(),
        alg_a: tr.alg_a(sc),
        alg_d: tr.alg_d(sc),
        alg_m: tr.alg_m(sc),
        alg_s: tr.alg_s(sc),
        induction,
        recursion,
        initiality,
        names: component_table(sc),
    }
}

fn params_ctx(params: &[(Name, Tm)]) -> Ctx {
    let mut ctx = Ctx::new();
    for (n, t) in params {
        ctx.assume(n.as_str(), t.clone());
    }
    ctx
}

/// Header types of the four outputs, in the scope of the parameters.
pub fn header_types(b: &ElabBundle) -> [Tm; 4] {
    use target::{app, arrow, pi, shift, ty, var};
    let i = b.level;
    let a = b.alg_a.clone();
    let d1 = shift(&b.alg_d, 1);
    [
        ty(1),
        arrow(a.clone(), ty(i + 1)),
        arrow(a.clone(), arrow(a.clone(), ty(i))),
        pi("γ", a, arrow(app(d1, var(0)), ty(i))),
    ]
}

/// Checks the four outputs against their headers and the derived statements
/// for being types.
pub fn check_bundle(kernel: &Kernel, b: &ElabBundle) -> Result<(), String> {
    let mut ctx = params_ctx(&b.params);
    let outs = [("A", &b.alg_a), ("D", &b.alg_d), ("M", &b.alg_m), ("S", &b.alg_s)];
    for ((label, t), want) in outs.iter().zip(header_types(b)) {
        kernel.refuel();
        kernel
            .check(&mut ctx, t, &want)
            .map_err(|e| format!("{} translation does not have its header type: {}", label, e))?;
    }
    let [ta, td, tm, ts] = header_types(b);
    ctx.define("A", ta, b.alg_a.clone());
    ctx.define("D", target::shift(&td, 1), target::shift(&b.alg_d, 1));
    ctx.define("M", target::shift(&tm, 2), target::shift(&b.alg_m, 2));
    ctx.define("S", target::shift(&ts, 3), target::shift(&b.alg_s, 3));
    ctx.assume("⋆", target::var(3));
    for (label, t) in [("induction", &b.induction), ("recursion", &b.recursion), ("initiality", &b.initiality)] {
        kernel.refuel();
        kernel.check_type(&mut ctx, t).map_err(|e| format!("{} statement is not a type: {}", label, e))?;
    }
    Ok(())
}

/// Per-term checks of the fundamental theorem: every subterm and subtype of
/// every entry is translated under variables standing for its context, and
/// each translation is checked against the translation of its type.
pub struct Fundamental<'k> {
    tr: Translator,
    kernel: &'k Kernel,
    ctx: Ctx,
    ids: Vec<u32>,
    env: Env,
    pub checks: usize,
}

impl<'k> Fundamental<'k> {
    pub fn new(kernel: &'k Kernel, level: u8) -> Self {
        Fundamental { tr: Translator::new(level), kernel, ctx: Ctx::new(), ids: Vec::new(), env: Env::default(), checks: 0 }
    }

    fn close(&self, n: &N) -> Tm {
        normalize(&to_tm(n, &self.ids))
    }

    fn assume(&mut self, name: &str, ty: &N, check: bool) -> Result<N, String> {
        let t = self.close(ty);
        if check {
            self.kernel.refuel();
            self.kernel
                .check_type(&mut self.ctx, &t)
                .map_err(|e| format!("translated type of `{}` is ill-formed: {}", name, e))?;
            self.checks += 1;
        }
        let k = self.tr.g.fresh();
        self.ctx.assume(name, t);
        self.ids.push(k);
        Ok(named::v(k))
    }

    fn mark(&self) -> (usize, Env) {
        (self.ids.len(), self.env.clone())
    }

    fn reset(&mut self, (len, env): (usize, Env)) {
        while self.ids.len() > len {
            self.ids.pop();
            self.ctx.pop();
        }
        self.env = env;
    }

    fn push_ext(&mut self, n: &Name, t: &Tm) -> Result<(), String> {
        let ty = self.tr.imp(&self.env, t);
        let x = self.assume(n.as_str(), &ty, false)?;
        self.env = self.env.with_ext(n, t, x);
        Ok(())
    }

    fn push_sig(&mut self, n: &Name, t: &STy) -> Result<(), String> {
        let env = self.env.clone();
        let tr = &self.tr;
        let a = self.assume(n.as_str(), &tr.ty_a(&env, t), true)?;
        let a1 = self.assume(&format!("{}₁", n), &self.tr.ty_a(&env.side1(), t), false)?;
        let d = self.assume(&format!("{}ᴰ", n), &self.tr.ty_d(&env, t, a.clone()), true)?;
        let m = self.assume(&format!("{}ᴹ", n), &self.tr.ty_m(&env, t, a.clone(), a1.clone()), true)?;
        let s = self.assume(&format!("{}ˢ", n), &self.tr.ty_s(&env, t, a.clone(), d.clone()), true)?;
        self.env = env.with_sig(n, t, Vals { a, a1, d, m, s });
        Ok(())
    }

    fn check_tm(&mut self, t: &STm) -> Result<(), String> {
        let env = self.env.clone();
        let ty = type_of(&env.tele, t);
        let tr = &self.tr;
        let env1 = env.side1();
        let (ta, ta1, td) = (tr.tm_a(&env, t), tr.tm_a(&env1, t), tr.tm_d(&env, t));
        let pairs = [
            ("A", ta.clone(), tr.ty_a(&env, &ty)),
            ("D", td.clone(), tr.ty_d(&env, &ty, ta.clone())),
            ("M", tr.tm_m(&env, t), tr.ty_m(&env, &ty, ta.clone(), ta1)),
            ("S", tr.tm_s(&env, t), tr.ty_s(&env, &ty, ta, td)),
        ];
        for (label, tm, want) in pairs {
            let (tm, want) = (self.close(&tm), self.close(&want));
            self.kernel.refuel();
            self.kernel.check(&mut self.ctx, &tm, &want).map_err(|e| {
                let scope = crate::core::print::scope_of(&env.tele);
                format!("{} translation of `{}` is ill-typed: {}", label, crate::core::print::show_tm(t, &scope), e)
            })?;
            self.checks += 1;
        }
        Ok(())
    }

    fn walk_ty(&mut self, t: &STy) -> Result<(), String> {
        match &**t {
            SigType::U => Ok(()),
            SigType::El(a) => self.walk_tm(a),
            SigType::PiInd(n, a, b) => {
                self.walk_tm(a)?;
                let mk = self.mark();
                self.push_sig(n, &el(a.clone()))?;
                let r = self.walk_ty(b);
                self.reset(mk);
                r
            }
            SigType::PiExt(n, a, b) => {
                let mk = self.mark();
                self.push_ext(n, a)?;
                let r = self.walk_ty(b);
                self.reset(mk);
                r
            }
            SigType::EqTyCon(a, b) => {
                self.walk_tm(a)?;
                self.walk_tm(b)
            }
        }
    }

    fn walk_motive(&mut self, x: &Name, xt: STy, z: &Name, zt: STy, p: &STm) -> Result<(), String> {
        let mk = self.mark();
        let r = self.push_sig(x, &xt).and_then(|_| self.push_sig(z, &zt)).and_then(|_| self.walk_tm(p));
        self.reset(mk);
        r
    }

    fn walk_tm(&mut self, t: &STm) -> Result<(), String> {
        self.check_tm(t)?;
        match &**t {
            SigTerm::Var(_) => Ok(()),
            SigTerm::AppInd(f, u) => {
                self.walk_tm(f)?;
                self.walk_tm(u)
            }
            SigTerm::AppExt(f, _) | SigTerm::AppInf(f, _) => self.walk_tm(f),
            SigTerm::EqId(a, t, u) => {
                self.walk_tm(a)?;
                self.walk_tm(t)?;
                self.walk_tm(u)
            }
            SigTerm::PiInf(n, a, b) => {
                let mk = self.mark();
                let r = self.push_ext(n, a).and_then(|_| self.walk_tm(b));
                self.reset(mk);
                r
            }
            SigTerm::Refl(x) | SigTerm::ReflU(x) => self.walk_tm(x),
            SigTerm::J { a, t, x, z, p, pr, u, eq } => {
                self.walk_tm(a)?;
                self.walk_tm(t)?;
                self.walk_motive(x, el(a.clone()), z, j_path_ty(a, t), p)?;
                self.walk_tm(pr)?;
                self.walk_tm(u)?;
                self.walk_tm(eq)
            }
            SigTerm::JBeta { a, t, x, z, p, pr } => {
                self.walk_tm(a)?;
                self.walk_tm(t)?;
                self.walk_motive(x, el(a.clone()), z, j_path_ty(a, t), p)?;
                self.walk_tm(pr)
            }
            SigTerm::JU { a, x, z, p, pr, b, eq } => {
                self.walk_tm(a)?;
                self.walk_motive(x, u(), z, ju_path_ty(a), p)?;
                self.walk_tm(pr)?;
                self.walk_tm(b)?;
                self.walk_tm(eq)
            }
            SigTerm::JBetaU { a, x, z, p, pr } => {
                self.walk_tm(a)?;
                self.walk_motive(x, u(), z, ju_path_ty(a), p)?;
                self.walk_tm(pr)
            }
        }
    }

    /// Checks every entry of `sc`; returns the number of kernel checks run.
    pub fn run(mut self, sc: &SigContext) -> Result<usize, String> {
        for (n, t) in &sc.ext {
            self.push_ext(n, t)?;
        }
        for (n, t) in &sc.sig {
            self.walk_ty(t)?;
            self.push_sig(n, t)?;
        }
        Ok(self.checks)
    }
}

pub fn check_fundamental(kernel: &Kernel, sc: &SigContext, level: u8) -> Result<usize, String> {
    Fundamental::new(kernel, level).run(sc)
}
