//! The four operations on signatures: algebras (A), displayed algebras (D),
//! homomorphisms (M) and sections (S).
//!
//! Every clause is built over an environment that maps each telescope entry
//! to target terms. A signature entry carries all the values any operation
//! might need (its algebra component on both sides of a homomorphism, its
//! displayed component and its two witnesses); each translation reads only
//! the fields it uses.

pub mod named;
pub mod ops;

use crate::checker::core_check::{j_path_ty, j_result, jbeta_result, jbetau_result, ju_path_ty};
use crate::core::{el, eq_id, eq_u, refl_u, shift_ty, subst, subst_ty, u, Repl, STm, STy, SigTerm, SigType, Tele, Zone};
use crate::name::Name;
use crate::target::Tm;

use named::*;
use ops::{Ops, JD, JM, JS, JUD, JUM, JUS};

/// Values standing for one signature entry.
#[derive(Clone)]
pub struct Vals {
    /// Algebra component (the source side for homomorphisms).
    pub a: N,
    /// Algebra component on the target side of a homomorphism.
    pub a1: N,
    /// Displayed component.
    pub d: N,
    /// Homomorphism witness.
    pub m: N,
    /// Section witness.
    pub s: N,
}

impl Vals {
    pub fn just(a: N) -> Vals {
        Vals { a1: a.clone(), d: unit(), m: unit(), s: unit(), a }
    }
}

#[derive(Clone)]
pub enum Slot {
    Ext(N),
    Sig(Vals),
}

/// Core telescope paired with the values of its entries.
#[derive(Clone, Default)]
pub struct Env {
    pub tele: Tele,
    pub slots: Vec<Slot>,
}

impl Env {
    pub fn with_ext(&self, n: &Name, t: &Tm, x: N) -> Env {
        let mut e = self.clone();
        e.tele.push((n.clone(), Zone::Ext(t.clone())));
        e.slots.push(Slot::Ext(x));
        e
    }

    pub fn with_sig(&self, n: &Name, t: &STy, vals: Vals) -> Env {
        let mut e = self.clone();
        e.tele.push((n.clone(), Zone::Sig(t.clone())));
        e.slots.push(Slot::Sig(vals));
        e
    }

    fn sig(&self, i: usize) -> &Vals {
        match &self.slots[self.slots.len() - 1 - i] {
            Slot::Sig(v) => v,
            Slot::Ext(_) => panic!("signature variable {} resolves to an external entry", i),
        }
    }

    fn ext(&self, i: usize) -> N {
        match &self.slots[self.slots.len() - 1 - i] {
            Slot::Ext(x) => x.clone(),
            Slot::Sig(_) => panic!("external variable {} resolves to a signature entry", i),
        }
    }

    /// The target side of a homomorphism, seen as an algebra.
    pub fn side1(&self) -> Env {
        let slots = self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Sig(v) => Slot::Sig(Vals { a: v.a1.clone(), ..v.clone() }),
                e => e.clone(),
            })
            .collect();
        Env { tele: self.tele.clone(), slots }
    }
}

/// Type of a core term, read off without checking.
pub fn type_of(tele: &Tele, t: &STm) -> STy {
    match &**t {
        SigTerm::Var(i) => match &tele[tele.len() - 1 - i].1 {
            Zone::Sig(a) => shift_ty(a, 0, i + 1),
            Zone::Ext(_) => panic!("signature variable {} is external", i),
        },
        SigTerm::AppInd(f, u) => match &*type_of(tele, f) {
            SigType::PiInd(_, _, b) => subst_ty(b, 0, &Repl::Sig(u.clone())),
            _ => panic!("ill-typed application"),
        },
        SigTerm::AppExt(f, u) => match &*type_of(tele, f) {
            SigType::PiExt(_, _, b) => subst_ty(b, 0, &Repl::Ext(u.clone())),
            _ => panic!("ill-typed application"),
        },
        SigTerm::AppInf(f, u) => match &*type_of(tele, f) {
            SigType::El(pi) => match &**pi {
                SigTerm::PiInf(_, _, b) => el(subst(b, 0, &Repl::Ext(u.clone()))),
                _ => panic!("ill-typed application"),
            },
            _ => panic!("ill-typed application"),
        },
        SigTerm::EqId(..) | SigTerm::PiInf(..) => u(),
        SigTerm::Refl(x) => match &*type_of(tele, x) {
            SigType::El(a) => el(eq_id(a.clone(), x.clone(), x.clone())),
            _ => panic!("refl of a non-element"),
        },
        SigTerm::J { p, u, eq, .. } => j_result(p, u, eq),
        SigTerm::JBeta { a, t, x, z, p, pr } => jbeta_result(a, t, x, z, p, pr),
        SigTerm::ReflU(a) => eq_u(a.clone(), a.clone()),
        SigTerm::JU { p, b, eq, .. } => j_result(p, b, eq),
        SigTerm::JBetaU { a, x, z, p, pr } => jbetau_result(a, x, z, p, pr),
    }
}

/// `proj₂ (proj₁^(m-1-j) γ)`: component `j` of a left-nested tuple of length `m`.
pub fn comp(g: &N, j: usize, m: usize) -> N {
    let mut t = g.clone();
    for _ in 0..(m - 1 - j) {
        t = proj1(t);
    }
    proj2(t)
}

pub struct Translator {
    pub g: Gen,
    /// Level of displayed algebras: predicates land in `Type_i`.
    pub level: u8,
}

impl Translator {
    pub fn new(level: u8) -> Translator {
        Translator { g: Gen::default(), level }
    }

    fn ops(&self) -> Ops<'_> {
        Ops { g: &self.g, i: self.level }
    }

    fn imp(&self, env: &Env, t: &Tm) -> N {
        self.g.import(t, &|i| env.ext(i))
    }

    // ---- algebras --------------------------------------------------------------

    pub fn ty_a(&self, env: &Env, ty: &STy) -> N {
        let g = &self.g;
        match &**ty {
            SigType::U => named::ty(0),
            SigType::El(a) => self.tm_a(env, a),
            SigType::PiInd(n, a, b) => {
                g.pi(n.as_str(), self.tm_a(env, a), |x| self.ty_a(&env.with_sig(n, &el(a.clone()), Vals::just(x)), b))
            }
            SigType::PiExt(n, t, b) => g.pi(n.as_str(), self.imp(env, t), |x| self.ty_a(&env.with_ext(n, t, x), b)),
            SigType::EqTyCon(a, b) => id(named::ty(0), self.tm_a(env, a), self.tm_a(env, b)),
        }
    }

    /// Algebra motive `λ x z → p` of a rule-4 or rule-5 eliminator.
    fn motive_a(&self, env: &Env, xt: &STy, zt: &STy, x: &Name, z: &Name, p: &STm) -> N {
        self.g.lams(&[x.as_str(), z.as_str()], |v| {
            let e = env.with_sig(x, xt, Vals::just(v[0].clone())).with_sig(z, zt, Vals::just(v[1].clone()));
            self.tm_a(&e, p)
        })
    }

    pub fn tm_a(&self, env: &Env, t: &STm) -> N {
        let g = &self.g;
        match &**t {
            SigTerm::Var(i) => env.sig(*i).a.clone(),
            SigTerm::AppInd(f, u) => app(self.tm_a(env, f), self.tm_a(env, u)),
            SigTerm::AppExt(f, u) | SigTerm::AppInf(f, u) => app(self.tm_a(env, f), self.imp(env, u)),
            SigTerm::EqId(a, t, u) => id(self.tm_a(env, a), self.tm_a(env, t), self.tm_a(env, u)),
            SigTerm::PiInf(n, ty, b) => g.pi(n.as_str(), self.imp(env, ty), |x| self.tm_a(&env.with_ext(n, ty, x), b)),
            SigTerm::Refl(_) | SigTerm::JBeta { .. } | SigTerm::ReflU(_) | SigTerm::JBetaU { .. } => refl(),
            SigTerm::J { a, t, x, z, p, pr, u, eq } => {
                let pm = self.motive_a(env, &el(a.clone()), &j_path_ty(a, t), x, z, p);
                self.ops().j_a(&self.tm_a(env, a), &self.tm_a(env, t), &pm, &self.tm_a(env, pr), &self.tm_a(env, u), &self.tm_a(env, eq))
            }
            SigTerm::JU { a, x, z, p, pr, b, eq } => {
                let pm = self.motive_a(env, &u(), &ju_path_ty(a), x, z, p);
                self.ops().ju_a(&self.tm_a(env, a), &pm, &self.tm_a(env, pr), &self.tm_a(env, b), &self.tm_a(env, eq))
            }
        }
    }

    // ---- displayed algebras ----------------------------------------------------

    pub fn ty_d(&self, env: &Env, ty: &STy, val: N) -> N {
        let g = &self.g;
        let o = self.ops();
        match &**ty {
            SigType::U => g.arrow(val, o.type_i()),
            SigType::El(a) => app(self.tm_d(env, a), val),
            SigType::PiInd(n, a, b) => g.pi(n.as_str(), self.tm_a(env, a), |x| {
                g.pi(&format!("{}ᴰ", n), app(self.tm_d(env, a), x.clone()), |xd| {
                    let vals = Vals { d: xd, ..Vals::just(x.clone()) };
                    self.ty_d(&env.with_sig(n, &el(a.clone()), vals), b, app(val.clone(), x))
                })
            }),
            SigType::PiExt(n, t, b) => {
                g.pi(n.as_str(), self.imp(env, t), |x| self.ty_d(&env.with_ext(n, t, x.clone()), b, app(val.clone(), x)))
            }
            SigType::EqTyCon(a, b) => {
                o.equ_d_ty(&self.tm_a(env, a), &self.tm_d(env, a), &self.tm_a(env, b), &self.tm_d(env, b), &val)
            }
        }
    }

    fn motive_d(&self, env: &Env, xt: &STy, zt: &STy, x: &Name, z: &Name, p: &STm) -> N {
        let xd = format!("{}ᴰ", x);
        let zd = format!("{}ᴰ", z);
        self.g.lams(&[x.as_str(), &xd, z.as_str(), &zd], |v| {
            let e = env
                .with_sig(x, xt, Vals { d: v[1].clone(), ..Vals::just(v[0].clone()) })
                .with_sig(z, zt, Vals { d: v[3].clone(), ..Vals::just(v[2].clone()) });
            self.tm_d(&e, p)
        })
    }

    pub fn tm_d(&self, env: &Env, t: &STm) -> N {
        let g = &self.g;
        let o = self.ops();
        match &**t {
            SigTerm::Var(i) => env.sig(*i).d.clone(),
            SigTerm::AppInd(f, u) => apps(self.tm_d(env, f), &[self.tm_a(env, u), self.tm_d(env, u)]),
            SigTerm::AppExt(f, u) | SigTerm::AppInf(f, u) => app(self.tm_d(env, f), self.imp(env, u)),
            SigTerm::EqId(a, t, u) => g.lam("e", |e| {
                o.eq_d(
                    &self.tm_a(env, a),
                    &self.tm_d(env, a),
                    &self.tm_a(env, t),
                    &self.tm_d(env, t),
                    &self.tm_a(env, u),
                    &self.tm_d(env, u),
                    &e,
                )
            }),
            SigTerm::PiInf(n, ty, b) => g.lam("f", |f| {
                g.pi(n.as_str(), self.imp(env, ty), |x| app(self.tm_d(&env.with_ext(n, ty, x.clone()), b), app(f, x)))
            }),
            SigTerm::Refl(_) | SigTerm::JBeta { .. } | SigTerm::ReflU(_) | SigTerm::JBetaU { .. } => refl(),
            SigTerm::J { a, t, x, z, p, pr, u, eq } => o.j_d(&self.parts_d(env, a, t, x, z, p, pr, u, eq)),
            SigTerm::JU { a, x, z, p, pr, b, eq } => {
                let (xt, zt) = (u(), ju_path_ty(a));
                o.ju_d(&JUD {
                    a: self.tm_a(env, a),
                    ad: self.tm_d(env, a),
                    p: self.motive_a(env, &xt, &zt, x, z, p),
                    pd: self.motive_d(env, &xt, &zt, x, z, p),
                    pr: self.tm_a(env, pr),
                    prd: self.tm_d(env, pr),
                    b: self.tm_a(env, b),
                    bd: self.tm_d(env, b),
                    e: self.tm_a(env, eq),
                    ed: self.tm_d(env, eq),
                })
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn parts_d(&self, env: &Env, a: &STm, t: &STm, x: &Name, z: &Name, p: &STm, pr: &STm, u: &STm, eq: &STm) -> JD {
        let (xt, zt) = (el(a.clone()), j_path_ty(a, t));
        JD {
            a: self.tm_a(env, a),
            ad: self.tm_d(env, a),
            t: self.tm_a(env, t),
            td: self.tm_d(env, t),
            p: self.motive_a(env, &xt, &zt, x, z, p),
            pd: self.motive_d(env, &xt, &zt, x, z, p),
            pr: self.tm_a(env, pr),
            prd: self.tm_d(env, pr),
            u: self.tm_a(env, u),
            ud: self.tm_d(env, u),
            e: self.tm_a(env, eq),
            ed: self.tm_d(env, eq),
        }
    }

    // ---- homomorphisms ---------------------------------------------------------

    pub fn ty_m(&self, env: &Env, ty: &STy, v0: N, v1: N) -> N {
        let g = &self.g;
        let o = self.ops();
        let env1 = env.side1();
        match &**ty {
            SigType::U => g.arrow(v0, v1),
            SigType::El(a) => id(self.tm_a(&env1, a), app(self.tm_m(env, a), v0), v1),
            SigType::PiInd(n, a, b) => g.pi(&format!("{}₀", n), self.tm_a(env, a), |x0| {
                let x1 = app(self.tm_m(env, a), x0.clone());
                let vals = Vals { a1: x1.clone(), m: refl(), ..Vals::just(x0.clone()) };
                self.ty_m(&env.with_sig(n, &el(a.clone()), vals), b, app(v0.clone(), x0), app(v1.clone(), x1))
            }),
            SigType::PiExt(n, t, b) => g.pi(n.as_str(), self.imp(env, t), |x| {
                self.ty_m(&env.with_ext(n, t, x.clone()), b, app(v0.clone(), x.clone()), app(v1.clone(), x))
            }),
            SigType::EqTyCon(a, b) => o.equ_m_ty(
                &self.tm_a(env, a),
                &self.tm_a(&env1, a),
                &self.tm_m(env, a),
                &self.tm_a(env, b),
                &self.tm_a(&env1, b),
                &self.tm_m(env, b),
                &v0,
                &v1,
            ),
        }
    }

    fn motive_m(&self, env: &Env, xt: &STy, zt: &STy, x: &Name, z: &Name, p: &STm) -> N {
        let names = [format!("{}₀", x), format!("{}₀", z), format!("{}₁", x), format!("{}ᴹ", x), format!("{}₁", z), format!("{}ᴹ", z)];
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        self.g.lams(&refs, |v| {
            let xv = Vals { a1: v[2].clone(), m: v[3].clone(), ..Vals::just(v[0].clone()) };
            let zv = Vals { a1: v[4].clone(), m: v[5].clone(), ..Vals::just(v[1].clone()) };
            self.tm_m(&env.with_sig(x, xt, xv).with_sig(z, zt, zv), p)
        })
    }

    pub fn tm_m(&self, env: &Env, t: &STm) -> N {
        let g = &self.g;
        let o = self.ops();
        let env1 = env.side1();
        match &**t {
            SigTerm::Var(i) => env.sig(*i).m.clone(),
            SigTerm::AppInd(f, u) => {
                let (n, a, b) = match &*type_of(&env.tele, f) {
                    SigType::PiInd(n, a, b) => (n.clone(), a.clone(), b.clone()),
                    _ => panic!("ill-typed application"),
                };
                let (f0, f1) = (self.tm_a(env, f), self.tm_a(&env1, f));
                let (u0, u1) = (self.tm_a(env, u), self.tm_a(&env1, u));
                let am = self.tm_m(env, &a);
                g.j(
                    self.tm_a(&env1, &a),
                    app(am.clone(), u0.clone()),
                    &format!("{}₁", n),
                    &format!("{}ᴹ", n),
                    |y, q| {
                        let vals = Vals { a1: y.clone(), m: q, ..Vals::just(u0.clone()) };
                        self.ty_m(&env.with_sig(&n, &el(a.clone()), vals), &b, app(f0.clone(), u0.clone()), app(f1.clone(), y))
                    },
                    app(self.tm_m(env, f), u0.clone()),
                    u1,
                    self.tm_m(env, u),
                )
            }
            SigTerm::AppExt(f, u) => app(self.tm_m(env, f), self.imp(env, u)),
            SigTerm::AppInf(f, u) => {
                let (n, ty, b) = match &*type_of(&env.tele, f) {
                    SigType::El(pi) => match &**pi {
                        SigTerm::PiInf(n, ty, b) => (n.clone(), ty.clone(), b.clone()),
                        _ => panic!("ill-typed application"),
                    },
                    _ => panic!("ill-typed application"),
                };
                let uh = self.imp(env, u);
                let f0 = self.tm_a(env, f);
                o.ap(
                    g.pi(n.as_str(), self.imp(env, &ty), |x| self.tm_a(&env1.with_ext(&n, &ty, x), &b)),
                    self.tm_a(&env1.with_ext(&n, &ty, uh.clone()), &b),
                    g.lam("h", |h| app(h, uh.clone())),
                    g.lam(n.as_str(), |x| app(self.tm_m(&env.with_ext(&n, &ty, x.clone()), &b), app(f0.clone(), x))),
                    self.tm_a(&env1, f),
                    self.tm_m(env, f),
                )
            }
            SigTerm::EqId(a, t, u) => g.lam("e", |e| {
                o.eq_m(
                    &self.tm_a(env, a),
                    &self.tm_a(&env1, a),
                    &self.tm_m(env, a),
                    &self.tm_a(env, t),
                    &self.tm_a(&env1, t),
                    &self.tm_m(env, t),
                    &self.tm_a(env, u),
                    &self.tm_a(&env1, u),
                    &self.tm_m(env, u),
                    &e,
                )
            }),
            SigTerm::PiInf(n, ty, b) => g.lam("f", |f| {
                g.lam(n.as_str(), |x| app(self.tm_m(&env.with_ext(n, ty, x.clone()), b), app(f, x)))
            }),
            SigTerm::Refl(x) => {
                let a = match &*type_of(&env.tele, x) {
                    SigType::El(a) => a.clone(),
                    _ => panic!("refl of a non-element"),
                };
                o.inv(self.tm_a(&env1, &a), app(self.tm_m(env, &a), self.tm_a(env, x)), self.tm_a(&env1, x), self.tm_m(env, x))
            }
            SigTerm::J { a, t, x, z, p, pr, u, eq } => o.j_m(&self.parts_m(env, a, t, x, z, p, pr, u, eq)),
            SigTerm::JBeta { a, t, x, z, p, pr } => o.jb_m(&self.parts_m(env, a, t, x, z, p, pr, t, &crate::core::refl(t.clone()))),
            SigTerm::ReflU(_) => refl(),
            SigTerm::JU { a, x, z, p, pr, b, eq } => o.ju_m(&self.parts_um(env, a, x, z, p, pr, b, eq)),
            SigTerm::JBetaU { a, x, z, p, pr } => o.jbu_m(&self.parts_um(env, a, x, z, p, pr, a, &refl_u(a.clone()))),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn parts_m(&self, env: &Env, a: &STm, t: &STm, x: &Name, z: &Name, p: &STm, pr: &STm, u: &STm, eq: &STm) -> JM {
        let env1 = env.side1();
        let (xt, zt) = (el(a.clone()), j_path_ty(a, t));
        JM {
            a0: self.tm_a(env, a),
            a1: self.tm_a(&env1, a),
            am: self.tm_m(env, a),
            t0: self.tm_a(env, t),
            t1: self.tm_a(&env1, t),
            tm: self.tm_m(env, t),
            p0: self.motive_a(env, &xt, &zt, x, z, p),
            p1: self.motive_a(&env1, &xt, &zt, x, z, p),
            pm: self.motive_m(env, &xt, &zt, x, z, p),
            pr0: self.tm_a(env, pr),
            pr1: self.tm_a(&env1, pr),
            prm: self.tm_m(env, pr),
            u0: self.tm_a(env, u),
            u1: self.tm_a(&env1, u),
            um: self.tm_m(env, u),
            e0: self.tm_a(env, eq),
            e1: self.tm_a(&env1, eq),
            em: self.tm_m(env, eq),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn parts_um(&self, env: &Env, a: &STm, x: &Name, z: &Name, p: &STm, pr: &STm, b: &STm, eq: &STm) -> JUM {
        let env1 = env.side1();
        let (xt, zt) = (u(), ju_path_ty(a));
        JUM {
            a0: self.tm_a(env, a),
            a1: self.tm_a(&env1, a),
            am: self.tm_m(env, a),
            p0: self.motive_a(env, &xt, &zt, x, z, p),
            p1: self.motive_a(&env1, &xt, &zt, x, z, p),
            pm: self.motive_m(env, &xt, &zt, x, z, p),
            pr0: self.tm_a(env, pr),
            pr1: self.tm_a(&env1, pr),
            prm: self.tm_m(env, pr),
            b0: self.tm_a(env, b),
            b1: self.tm_a(&env1, b),
            bm: self.tm_m(env, b),
            e0: self.tm_a(env, eq),
            e1: self.tm_a(&env1, eq),
            em: self.tm_m(env, eq),
        }
    }

    // ---- sections --------------------------------------------------------------

    pub fn ty_s(&self, env: &Env, ty: &STy, val: N, vd: N) -> N {
        let g = &self.g;
        let o = self.ops();
        match &**ty {
            SigType::U => g.pi("x", val, |x| app(vd, x)),
            SigType::El(a) => id(app(self.tm_d(env, a), val.clone()), app(self.tm_s(env, a), val), vd),
            SigType::PiInd(n, a, b) => g.pi(n.as_str(), self.tm_a(env, a), |x| {
                let xd = app(self.tm_s(env, a), x.clone());
                let vals = Vals { d: xd.clone(), s: refl(), ..Vals::just(x.clone()) };
                self.ty_s(&env.with_sig(n, &el(a.clone()), vals), b, app(val.clone(), x.clone()), apps(vd.clone(), &[x, xd]))
            }),
            SigType::PiExt(n, t, b) => g.pi(n.as_str(), self.imp(env, t), |x| {
                self.ty_s(&env.with_ext(n, t, x.clone()), b, app(val.clone(), x.clone()), app(vd.clone(), x))
            }),
            SigType::EqTyCon(a, b) => o.equ_s_ty(
                &self.tm_a(env, a),
                &self.tm_d(env, a),
                &self.tm_s(env, a),
                &self.tm_a(env, b),
                &self.tm_d(env, b),
                &self.tm_s(env, b),
                &val,
                &vd,
            ),
        }
    }

    fn motive_s(&self, env: &Env, xt: &STy, zt: &STy, x: &Name, z: &Name, p: &STm) -> N {
        let names = [x.to_string(), format!("{}ᴰ", x), format!("{}ˢ", x), z.to_string(), format!("{}ᴰ", z), format!("{}ˢ", z)];
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        self.g.lams(&refs, |v| {
            let xv = Vals { d: v[1].clone(), s: v[2].clone(), ..Vals::just(v[0].clone()) };
            let zv = Vals { d: v[4].clone(), s: v[5].clone(), ..Vals::just(v[3].clone()) };
            self.tm_s(&env.with_sig(x, xt, xv).with_sig(z, zt, zv), p)
        })
    }

    pub fn tm_s(&self, env: &Env, t: &STm) -> N {
        let g = &self.g;
        let o = self.ops();
        match &**t {
            SigTerm::Var(i) => env.sig(*i).s.clone(),
            SigTerm::AppInd(f, u) => {
                let (n, a, b) = match &*type_of(&env.tele, f) {
                    SigType::PiInd(n, a, b) => (n.clone(), a.clone(), b.clone()),
                    _ => panic!("ill-typed application"),
                };
                let (fa, fd) = (self.tm_a(env, f), self.tm_d(env, f));
                let ua = self.tm_a(env, u);
                g.j(
                    app(self.tm_d(env, &a), ua.clone()),
                    app(self.tm_s(env, &a), ua.clone()),
                    &format!("{}ᴰ", n),
                    &format!("{}ˢ", n),
                    |y, q| {
                        let vals = Vals { d: y.clone(), s: q, ..Vals::just(ua.clone()) };
                        self.ty_s(&env.with_sig(&n, &el(a.clone()), vals), &b, app(fa.clone(), ua.clone()), apps(fd.clone(), &[ua.clone(), y]))
                    },
                    app(self.tm_s(env, f), ua.clone()),
                    self.tm_d(env, u),
                    self.tm_s(env, u),
                )
            }
            SigTerm::AppExt(f, u) => app(self.tm_s(env, f), self.imp(env, u)),
            SigTerm::AppInf(f, u) => {
                let (n, ty, b) = match &*type_of(&env.tele, f) {
                    SigType::El(pi) => match &**pi {
                        SigTerm::PiInf(n, ty, b) => (n.clone(), ty.clone(), b.clone()),
                        _ => panic!("ill-typed application"),
                    },
                    _ => panic!("ill-typed application"),
                };
                let uh = self.imp(env, u);
                let fa = self.tm_a(env, f);
                o.ap(
                    g.pi(n.as_str(), self.imp(env, &ty), |x| {
                        app(self.tm_d(&env.with_ext(&n, &ty, x.clone()), &b), app(fa.clone(), x))
                    }),
                    app(self.tm_d(&env.with_ext(&n, &ty, uh.clone()), &b), app(fa.clone(), uh.clone())),
                    g.lam("h", |h| app(h, uh.clone())),
                    g.lam(n.as_str(), |x| app(self.tm_s(&env.with_ext(&n, &ty, x.clone()), &b), app(fa.clone(), x))),
                    self.tm_d(env, f),
                    self.tm_s(env, f),
                )
            }
            SigTerm::EqId(a, t, u) => g.lam("e", |e| {
                o.eq_s(
                    &self.tm_a(env, a),
                    &self.tm_d(env, a),
                    &self.tm_s(env, a),
                    &self.tm_a(env, t),
                    &self.tm_d(env, t),
                    &self.tm_s(env, t),
                    &self.tm_a(env, u),
                    &self.tm_d(env, u),
                    &self.tm_s(env, u),
                    &e,
                )
            }),
            SigTerm::PiInf(n, ty, b) => g.lam("f", |f| {
                g.lam(n.as_str(), |x| app(self.tm_s(&env.with_ext(n, ty, x.clone()), b), app(f, x)))
            }),
            SigTerm::Refl(x) => {
                let a = match &*type_of(&env.tele, x) {
                    SigType::El(a) => a.clone(),
                    _ => panic!("refl of a non-element"),
                };
                o.refl_s(
                    &self.tm_a(env, &a),
                    &self.tm_d(env, &a),
                    &self.tm_s(env, &a),
                    &self.tm_a(env, x),
                    &self.tm_d(env, x),
                    &self.tm_s(env, x),
                )
            }
            SigTerm::J { a, t, x, z, p, pr, u, eq } => o.j_s(&self.parts_s(env, a, t, x, z, p, pr, u, eq)),
            SigTerm::JBeta { a, t, x, z, p, pr } => o.jb_s(&self.parts_s(env, a, t, x, z, p, pr, t, &crate::core::refl(t.clone()))),
            SigTerm::ReflU(_) => refl(),
            SigTerm::JU { a, x, z, p, pr, b, eq } => o.ju_s(&self.parts_us(env, a, x, z, p, pr, b, eq)),
            SigTerm::JBetaU { a, x, z, p, pr } => o.jbu_s(&self.parts_us(env, a, x, z, p, pr, a, &refl_u(a.clone()))),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn parts_s(&self, env: &Env, a: &STm, t: &STm, x: &Name, z: &Name, p: &STm, pr: &STm, u: &STm, eq: &STm) -> JS {
        let (xt, zt) = (el(a.clone()), j_path_ty(a, t));
        JS {
            a: self.tm_a(env, a),
            ad: self.tm_d(env, a),
            as_: self.tm_s(env, a),
            t: self.tm_a(env, t),
            td: self.tm_d(env, t),
            ts: self.tm_s(env, t),
            p: self.motive_a(env, &xt, &zt, x, z, p),
            pd: self.motive_d(env, &xt, &zt, x, z, p),
            ps: self.motive_s(env, &xt, &zt, x, z, p),
            pr: self.tm_a(env, pr),
            prd: self.tm_d(env, pr),
            prs: self.tm_s(env, pr),
            u: self.tm_a(env, u),
            ud: self.tm_d(env, u),
            us: self.tm_s(env, u),
            e: self.tm_a(env, eq),
            ed: self.tm_d(env, eq),
            es: self.tm_s(env, eq),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn parts_us(&self, env: &Env, a: &STm, x: &Name, z: &Name, p: &STm, pr: &STm, b: &STm, eq: &STm) -> JUS {
        let (xt, zt) = (u(), ju_path_ty(a));
        JUS {
            a: self.tm_a(env, a),
            ad: self.tm_d(env, a),
            as_: self.tm_s(env, a),
            p: self.motive_a(env, &xt, &zt, x, z, p),
            pd: self.motive_d(env, &xt, &zt, x, z, p),
            ps: self.motive_s(env, &xt, &zt, x, z, p),
            pr: self.tm_a(env, pr),
            prd: self.tm_d(env, pr),
            prs: self.tm_s(env, pr),
            b: self.tm_a(env, b),
            bd: self.tm_d(env, b),
            bs: self.tm_s(env, b),
            e: self.tm_a(env, eq),
            ed: self.tm_d(env, eq),
            es: self.tm_s(env, eq),
        }
    }
}

mod bundle;
pub use bundle::*;
