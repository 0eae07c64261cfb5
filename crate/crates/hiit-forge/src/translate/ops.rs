//! Path operations and the eliminator clauses of the four translations.
//!
//! Every eliminator clause is a chain of `J`s. Each step eliminates one path
//! and generalizes whatever depends on its free endpoint; the goal of a step
//! is recomputed from a record of parts, with the eliminated pieces replaced.

use super::named::*;
use crate::target::Prim;

pub struct Ops<'g> {
    pub g: &'g Gen,
    /// Universe level of displayed algebras.
    pub i: u8,
}

/// Parts of a rule-4 eliminator, displayed side.
#[derive(Clone)]
pub struct JD {
    pub a: N,
    pub ad: N,
    pub t: N,
    pub td: N,
    pub p: N,
    pub pd: N,
    pub pr: N,
    pub prd: N,
    pub u: N,
    pub ud: N,
    pub e: N,
    pub ed: N,
}

/// Parts of a rule-4 eliminator, homomorphism side.
#[derive(Clone)]
pub struct JM {
    pub a0: N,
    pub a1: N,
    pub am: N,
    pub t0: N,
    pub t1: N,
    pub tm: N,
    pub p0: N,
    pub p1: N,
    pub pm: N,
    pub pr0: N,
    pub pr1: N,
    pub prm: N,
    pub u0: N,
    pub u1: N,
    pub um: N,
    pub e0: N,
    pub e1: N,
    pub em: N,
}

/// Parts of a rule-4 eliminator, section side.
#[derive(Clone)]
pub struct JS {
    pub a: N,
    pub ad: N,
    pub as_: N,
    pub t: N,
    pub td: N,
    pub ts: N,
    pub p: N,
    pub pd: N,
    pub ps: N,
    pub pr: N,
    pub prd: N,
    pub prs: N,
    pub u: N,
    pub ud: N,
    pub us: N,
    pub e: N,
    pub ed: N,
    pub es: N,
}

/// Parts of a rule-5 eliminator, displayed side.
#[derive(Clone)]
pub struct JUD {
    pub a: N,
    pub ad: N,
    pub p: N,
    pub pd: N,
    pub pr: N,
    pub prd: N,
    pub b: N,
    pub bd: N,
    pub e: N,
    pub ed: N,
}

#[derive(Clone)]
pub struct JUM {
    pub a0: N,
    pub a1: N,
    pub am: N,
    pub p0: N,
    pub p1: N,
    pub pm: N,
    pub pr0: N,
    pub pr1: N,
    pub prm: N,
    pub b0: N,
    pub b1: N,
    pub bm: N,
    pub e0: N,
    pub e1: N,
    pub em: N,
}

#[derive(Clone)]
pub struct JUS {
    pub a: N,
    pub ad: N,
    pub as_: N,
    pub p: N,
    pub pd: N,
    pub ps: N,
    pub pr: N,
    pub prd: N,
    pub prs: N,
    pub b: N,
    pub bd: N,
    pub bs: N,
    pub e: N,
    pub ed: N,
    pub es: N,
}

impl JS {
    fn displayed(&self) -> JD {
        JD {
            a: self.a.clone(),
            ad: self.ad.clone(),
            t: self.t.clone(),
            td: self.td.clone(),
            p: self.p.clone(),
            pd: self.pd.clone(),
            pr: self.pr.clone(),
            prd: self.prd.clone(),
            u: self.u.clone(),
            ud: self.ud.clone(),
            e: self.e.clone(),
            ed: self.ed.clone(),
        }
    }
}

impl JUS {
    fn displayed(&self) -> JUD {
        JUD {
            a: self.a.clone(),
            ad: self.ad.clone(),
            p: self.p.clone(),
            pd: self.pd.clone(),
            pr: self.pr.clone(),
            prd: self.prd.clone(),
            b: self.b.clone(),
            bd: self.bd.clone(),
            e: self.e.clone(),
            ed: self.ed.clone(),
        }
    }
}

fn set0() -> N {
    ty(0)
}

impl Ops<'_> {
    pub fn tr(&self, a: N, p: N, x: N, y: N, e: N, px: N) -> N {
        prim(Prim::Tr, &[a, p, x, y, e, px])
    }

    pub fn coe(&self, a: N, b: N, e: N, x: N) -> N {
        prim(Prim::Coe, &[a, b, e, x])
    }

    pub fn ap(&self, a: N, b: N, f: N, x: N, y: N, e: N) -> N {
        prim(Prim::Ap, &[a, b, f, x, y, e])
    }

    pub fn apd(&self, a: N, p: N, f: N, x: N, y: N, e: N) -> N {
        prim(Prim::Apd, &[a, p, f, x, y, e])
    }

    pub fn sym(&self, a: N, x: N, y: N, p: N) -> N {
        prim(Prim::Sym, &[a, x, y, p])
    }

    pub fn comp(&self, a: N, x: N, y: N, z: N, p: N, q: N) -> N {
        prim(Prim::Comp, &[a, x, y, z, p, q])
    }

    pub fn inv(&self, a: N, x: N, y: N, p: N) -> N {
        prim(Prim::Inv, &[a, x, y, p])
    }

    pub fn type_i(&self) -> N {
        ty(self.i)
    }

    /// `λ X → X → Type_i`, the family of predicate spaces.
    pub fn fam_u(&self) -> N {
        self.g.lam("X", |x| self.g.arrow(x, self.type_i()))
    }

    /// `J a t (λ x z → p x z) pr u e`.
    pub fn j_a(&self, a: &N, t: &N, p: &N, pr: &N, u: &N, e: &N) -> N {
        self.g.j(a.clone(), t.clone(), "x", "z", |x, z| apps(p.clone(), &[x, z]), pr.clone(), u.clone(), e.clone())
    }

    pub fn ju_a(&self, a: &N, p: &N, pr: &N, b: &N, e: &N) -> N {
        self.j_a(&set0(), a, p, pr, b, e)
    }

    // ---- equality type formers -------------------------------------------------

    /// `tr a ad t u e td = ud`.
    #[allow(clippy::too_many_arguments)]
    pub fn eq_d(&self, a: &N, ad: &N, t: &N, td: &N, u: &N, ud: &N, e: &N) -> N {
        id(
            app(ad.clone(), u.clone()),
            self.tr(a.clone(), ad.clone(), t.clone(), u.clone(), e.clone(), td.clone()),
            ud.clone(),
        )
    }

    /// `(tm⁻¹ ∙ ap am e) ∙ um`.
    #[allow(clippy::too_many_arguments)]
    pub fn eq_m(&self, a0: &N, a1: &N, am: &N, t0: &N, t1: &N, tm: &N, u0: &N, u1: &N, um: &N, e: &N) -> N {
        let amt = app(am.clone(), t0.clone());
        let amu = app(am.clone(), u0.clone());
        let s = self.sym(a1.clone(), amt.clone(), t1.clone(), tm.clone());
        let ap = self.ap(a0.clone(), a1.clone(), am.clone(), t0.clone(), u0.clone(), e.clone());
        let c = self.comp(a1.clone(), t1.clone(), amt, amu.clone(), s, ap);
        self.comp(a1.clone(), t1.clone(), amu, u1.clone(), c, um.clone())
    }

    /// The doubly transported `apd as e`, a path `tr a ad t u e td = ud`.
    #[allow(clippy::too_many_arguments)]
    pub fn eq_s(&self, a: &N, ad: &N, as_: &N, t: &N, td: &N, ts: &N, u: &N, ud: &N, us: &N, e: &N) -> N {
        let g = self.g;
        let adu = app(ad.clone(), u.clone());
        let ast = app(as_.clone(), t.clone());
        let inner = self.tr(
            adu.clone(),
            g.lam("x", |x| {
                id(adu.clone(), self.tr(a.clone(), ad.clone(), t.clone(), u.clone(), e.clone(), ast.clone()), x)
            }),
            app(as_.clone(), u.clone()),
            ud.clone(),
            us.clone(),
            self.apd(a.clone(), ad.clone(), as_.clone(), t.clone(), u.clone(), e.clone()),
        );
        self.tr(
            app(ad.clone(), t.clone()),
            g.lam("x", |x| {
                id(adu.clone(), self.tr(a.clone(), ad.clone(), t.clone(), u.clone(), e.clone(), x), ud.clone())
            }),
            ast,
            td.clone(),
            ts.clone(),
            inner,
        )
    }

    /// Section of `refl`: `J (as t) (λ y q → …) refl td ts`.
    pub fn refl_s(&self, a: &N, ad: &N, as_: &N, t: &N, td: &N, ts: &N) -> N {
        let r = refl();
        self.g.j(
            app(ad.clone(), t.clone()),
            app(as_.clone(), t.clone()),
            "y",
            "q",
            |y, q| id(self.eq_d(a, ad, t, &y, t, &y, &r), self.eq_s(a, ad, as_, t, &y, &q, t, &y, &q, &r), refl()),
            refl(),
            td.clone(),
            ts.clone(),
        )
    }

    /// `tr (λ X → X → Type_i) e ad = bd`.
    pub fn equ_d_ty(&self, a: &N, ad: &N, b: &N, bd: &N, e: &N) -> N {
        id(
            self.g.arrow(b.clone(), self.type_i()),
            self.tr(set0(), self.fam_u(), a.clone(), b.clone(), e.clone(), ad.clone()),
            bd.clone(),
        )
    }

    /// `(λ x → bm (coe e0 x)) = (λ x → coe e1 (am x))`.
    #[allow(clippy::too_many_arguments)]
    pub fn equ_m_ty(&self, a0: &N, a1: &N, am: &N, b0: &N, b1: &N, bm: &N, e0: &N, e1: &N) -> N {
        let g = self.g;
        id(
            g.arrow(a0.clone(), b1.clone()),
            g.lam("x", |x| app(bm.clone(), self.coe(a0.clone(), b0.clone(), e0.clone(), x))),
            g.lam("x", |x| self.coe(a1.clone(), b1.clone(), e1.clone(), app(am.clone(), x))),
        )
    }

    fn equ_s_dom(&self, a: &N, b: &N, bd: &N, e: &N) -> N {
        self.g.pi("x", a.clone(), |x| app(bd.clone(), self.coe(a.clone(), b.clone(), e.clone(), x)))
    }

    fn equ_s_lhs(&self, a: &N, b: &N, bs: &N, e: &N) -> N {
        self.g.lam("x", |x| app(bs.clone(), self.coe(a.clone(), b.clone(), e.clone(), x)))
    }

    /// `λ x → tr ed (J (as x) e)`.
    #[allow(clippy::too_many_arguments)]
    fn equ_s_rhs(&self, a: &N, ad: &N, as_: &N, b: &N, bd: &N, e: &N, ed: &N) -> N {
        let g = self.g;
        g.lam("x", |x| {
            let c = self.coe(a.clone(), b.clone(), e.clone(), x.clone());
            let moved = g.j(
                set0(),
                a.clone(),
                "Y",
                "w",
                |y, w| {
                    app(
                        self.tr(set0(), self.fam_u(), a.clone(), y.clone(), w.clone(), ad.clone()),
                        self.coe(a.clone(), y, w, x.clone()),
                    )
                },
                app(as_.clone(), x.clone()),
                b.clone(),
                e.clone(),
            );
            self.tr(
                g.arrow(b.clone(), self.type_i()),
                g.lam("F", |f| app(f, c.clone())),
                self.tr(set0(), self.fam_u(), a.clone(), b.clone(), e.clone(), ad.clone()),
                bd.clone(),
                ed.clone(),
                moved,
            )
        })
    }

    #[allow(clippy::too_many_arguments)]
    pub fn equ_s_ty(&self, a: &N, ad: &N, as_: &N, b: &N, bd: &N, bs: &N, e: &N, ed: &N) -> N {
        id(self.equ_s_dom(a, b, bd, e), self.equ_s_lhs(a, b, bs, e), self.equ_s_rhs(a, ad, as_, b, bd, e, ed))
    }

    // ---- rule 4, displayed -----------------------------------------------------

    pub fn j_d(&self, q: &JD) -> N {
        let g = self.g;
        let outer = g.j(
            q.a.clone(),
            q.t.clone(),
            "x",
            "z",
            |y, w| {
                g.pi("xᴰ", app(q.ad.clone(), y.clone()), |yd| {
                    g.pi("zᴰ", self.eq_d(&q.a, &q.ad, &q.t, &q.td, &y, &yd, &w), |wd| {
                        app(apps(q.pd.clone(), &[y.clone(), yd, w.clone(), wd]), self.j_a(&q.a, &q.t, &q.p, &q.pr, &y, &w))
                    })
                })
            },
            g.lams(&["xᴰ", "zᴰ"], |v| {
                g.j(
                    app(q.ad.clone(), q.t.clone()),
                    q.td.clone(),
                    "xᴰ",
                    "zᴰ",
                    |y, w| {
                        app(
                            apps(q.pd.clone(), &[q.t.clone(), y, refl(), w]),
                            self.j_a(&q.a, &q.t, &q.p, &q.pr, &q.t, &refl()),
                        )
                    },
                    q.prd.clone(),
                    v[0].clone(),
                    v[1].clone(),
                )
            }),
            q.u.clone(),
            q.e.clone(),
        );
        apps(outer, &[q.ud.clone(), q.ed.clone()])
    }

    // ---- rule 4, homomorphisms -------------------------------------------------

    fn goal_m(&self, q: &JM) -> N {
        id(
            apps(q.p1.clone(), &[q.u1.clone(), q.e1.clone()]),
            app(
                apps(q.pm.clone(), &[q.u0.clone(), q.e0.clone(), q.u1.clone(), q.um.clone(), q.e1.clone(), q.em.clone()]),
                self.j_a(&q.a0, &q.t0, &q.p0, &q.pr0, &q.u0, &q.e0),
            ),
            self.j_a(&q.a1, &q.t1, &q.p1, &q.pr1, &q.u1, &q.e1),
        )
    }

    fn path_m(&self, q: &JM) -> N {
        self.eq_m(&q.a0, &q.a1, &q.am, &q.t0, &q.t1, &q.tm, &q.u0, &q.u1, &q.um, &q.e0)
    }

    /// `q` with its second path fixed to the composite and its witness to `refl`.
    fn settle_m(&self, mut q: JM) -> JM {
        q.e1 = self.path_m(&q);
        q.em = refl();
        q
    }

    fn motive_ty_m(&self, a1: &N, s: &N) -> N {
        let g = self.g;
        g.pi("x", a1.clone(), |x| g.arrow(id(a1.clone(), s.clone(), x), set0()))
    }

    fn pm_ty(&self, q: &JM) -> N {
        let g = self.g;
        g.pi("x₀", q.a0.clone(), |x0| {
            g.pi("z₀", id(q.a0.clone(), q.t0.clone(), x0.clone()), |z0| {
                g.pi("x₁", q.a1.clone(), |x1| {
                    g.pi("xᴹ", id(q.a1.clone(), app(q.am.clone(), x0.clone()), x1.clone()), |xm| {
                        g.pi("z₁", id(q.a1.clone(), q.t1.clone(), x1.clone()), |z1| {
                            let path = self.eq_m(&q.a0, &q.a1, &q.am, &q.t0, &q.t1, &q.tm, &x0, &x1, &xm, &z0);
                            g.pi("zᴹ", id(id(q.a1.clone(), q.t1.clone(), x1.clone()), path, z1.clone()), |_| {
                                g.arrow(apps(q.p0.clone(), &[x0.clone(), z0.clone()]), apps(q.p1.clone(), &[x1, z1]))
                            })
                        })
                    })
                })
            })
        })
    }

    fn refl_m(&self, q: &JM) -> N {
        self.inv(q.a1.clone(), app(q.am.clone(), q.t0.clone()), q.t1.clone(), q.tm.clone())
    }

    pub fn j_m(&self, q: &JM) -> N {
        let g = self.g;
        // Last step: the base path itself, generalizing the second motive.
        let step4 = {
            let fun = g.j(
                q.a1.clone(),
                app(q.am.clone(), q.t0.clone()),
                "t₁",
                "tᴹ",
                |s, sm| {
                    g.pi("P₁", self.motive_ty_m(&q.a1, &s), |p1| {
                        let mut r = q.clone();
                        r.t1 = s.clone();
                        r.tm = sm.clone();
                        r.p1 = p1.clone();
                        g.pi("Pᴹ", self.pm_ty(&r), |pm| {
                            r.pm = pm.clone();
                            g.pi("pr₁", apps(p1.clone(), &[s.clone(), refl()]), |pr1| {
                                let prm_ty = id(
                                    apps(p1.clone(), &[s.clone(), refl()]),
                                    app(
                                        apps(
                                            pm.clone(),
                                            &[q.t0.clone(), refl(), s.clone(), sm.clone(), refl(), self.refl_m(&r)],
                                        ),
                                        q.pr0.clone(),
                                    ),
                                    pr1.clone(),
                                );
                                g.pi("prᴹ", prm_ty, |prm| {
                                    r.pr1 = pr1;
                                    r.prm = prm;
                                    r.u0 = q.t0.clone();
                                    r.e0 = refl();
                                    r.u1 = app(q.am.clone(), q.t0.clone());
                                    r.um = refl();
                                    self.goal_m(&self.settle_m(r))
                                })
                            })
                        })
                    })
                },
                g.lams(&["P₁", "Pᴹ", "pr₁", "prᴹ"], |v| v[3].clone()),
                q.t1.clone(),
                q.tm.clone(),
            );
            apps(fun, &[q.p1.clone(), q.pm.clone(), q.pr1.clone(), q.prm.clone()])
        };
        let step3 = g.j(
            q.a0.clone(),
            q.t0.clone(),
            "u₀",
            "e₀",
            |y, w| {
                let mut r = q.clone();
                r.u0 = y.clone();
                r.e0 = w;
                r.u1 = app(q.am.clone(), y);
                r.um = refl();
                self.goal_m(&self.settle_m(r))
            },
            step4,
            q.u0.clone(),
            q.e0.clone(),
        );
        let step2 = g.j(
            q.a1.clone(),
            app(q.am.clone(), q.u0.clone()),
            "u₁",
            "uᴹ",
            |y, ym| {
                let mut r = q.clone();
                r.u1 = y;
                r.um = ym;
                self.goal_m(&self.settle_m(r))
            },
            step3,
            q.u1.clone(),
            q.um.clone(),
        );
        g.j(
            id(q.a1.clone(), q.t1.clone(), q.u1.clone()),
            self.path_m(q),
            "e₁",
            "eᴹ",
            |w, wm| {
                let mut r = q.clone();
                r.e1 = w;
                r.em = wm;
                self.goal_m(&r)
            },
            step2,
            q.e1.clone(),
            q.em.clone(),
        )
    }

    fn goal_bm(&self, q: &JM) -> N {
        let r = refl();
        let a0 = apps(q.p0.clone(), &[q.t0.clone(), r.clone()]);
        let a1 = apps(q.p1.clone(), &[q.t1.clone(), r.clone()]);
        let am = apps(q.pm.clone(), &[q.t0.clone(), r.clone(), q.t1.clone(), q.tm.clone(), r.clone(), self.refl_m(q)]);
        let j0 = self.j_a(&q.a0, &q.t0, &q.p0, &q.pr0, &q.t0, &r);
        let j1 = self.j_a(&q.a1, &q.t1, &q.p1, &q.pr1, &q.t1, &r);
        let mut at = q.clone();
        at.u0 = q.t0.clone();
        at.u1 = q.t1.clone();
        at.um = q.tm.clone();
        at.e0 = r.clone();
        at.e1 = r.clone();
        at.em = self.refl_m(q);
        let jm = self.j_m(&at);
        id(
            id(a1.clone(), j1.clone(), q.pr1.clone()),
            self.eq_m(&a0, &a1, &am, &j0, &j1, &jm, &q.pr0, &q.pr1, &q.prm, &r),
            refl(),
        )
    }

    /// Homomorphism clause of the rule-4 computation rule.
    pub fn jb_m(&self, q: &JM) -> N {
        let g = self.g;
        let r = refl();
        let step2 = {
            let fun = g.j(
                q.a1.clone(),
                app(q.am.clone(), q.t0.clone()),
                "t₁",
                "tᴹ",
                |s, sm| {
                    g.pi("P₁", self.motive_ty_m(&q.a1, &s), |p1| {
                        let mut w = q.clone();
                        w.t1 = s.clone();
                        w.tm = sm.clone();
                        w.p1 = p1;
                        g.pi("Pᴹ", self.pm_ty(&w), |pm| {
                            w.pm = pm.clone();
                            w.pr1 = app(
                                apps(pm, &[q.t0.clone(), r.clone(), s.clone(), sm.clone(), r.clone(), self.refl_m(&w)]),
                                q.pr0.clone(),
                            );
                            w.prm = refl();
                            self.goal_bm(&w)
                        })
                    })
                },
                g.lams(&["P₁", "Pᴹ"], |_| refl()),
                q.t1.clone(),
                q.tm.clone(),
            );
            apps(fun, &[q.p1.clone(), q.pm.clone()])
        };
        let am = apps(q.pm.clone(), &[q.t0.clone(), r.clone(), q.t1.clone(), q.tm.clone(), r.clone(), self.refl_m(q)]);
        g.j(
            apps(q.p1.clone(), &[q.t1.clone(), r.clone()]),
            app(am, q.pr0.clone()),
            "pr₁",
            "prᴹ",
            |y, ym| {
                let mut w = q.clone();
                w.pr1 = y;
                w.prm = ym;
                self.goal_bm(&w)
            },
            step2,
            q.pr1.clone(),
            q.prm.clone(),
        )
    }

    // ---- rule 4, sections ------------------------------------------------------

    fn goal_s(&self, q: &JS) -> N {
        let ja = self.j_a(&q.a, &q.t, &q.p, &q.pr, &q.u, &q.e);
        id(
            app(apps(q.pd.clone(), &[q.u.clone(), q.ud.clone(), q.e.clone(), q.ed.clone()]), ja.clone()),
            app(apps(q.ps.clone(), &[q.u.clone(), q.ud.clone(), q.us.clone(), q.e.clone(), q.ed.clone(), q.es.clone()]), ja),
            self.j_d(&q.displayed()),
        )
    }

    fn path_s(&self, q: &JS) -> N {
        self.eq_s(&q.a, &q.ad, &q.as_, &q.t, &q.td, &q.ts, &q.u, &q.ud, &q.us, &q.e)
    }

    fn settle_s(&self, mut q: JS) -> JS {
        q.ed = self.path_s(&q);
        q.es = refl();
        q
    }

    fn pd_ty(&self, q: &JS) -> N {
        let g = self.g;
        g.pi("x", q.a.clone(), |x| {
            g.pi("xᴰ", app(q.ad.clone(), x.clone()), |xd| {
                g.pi("z", id(q.a.clone(), q.t.clone(), x.clone()), |z| {
                    g.pi("zᴰ", self.eq_d(&q.a, &q.ad, &q.t, &q.td, &x, &xd, &z), |_| {
                        g.arrow(apps(q.p.clone(), &[x.clone(), z.clone()]), self.type_i())
                    })
                })
            })
        })
    }

    fn ps_ty(&self, q: &JS) -> N {
        let g = self.g;
        g.pi("x", q.a.clone(), |x| {
            g.pi("xᴰ", app(q.ad.clone(), x.clone()), |xd| {
                g.pi("xˢ", id(app(q.ad.clone(), x.clone()), app(q.as_.clone(), x.clone()), xd.clone()), |xs| {
                    g.pi("z", id(q.a.clone(), q.t.clone(), x.clone()), |z| {
                        let zd_ty = self.eq_d(&q.a, &q.ad, &q.t, &q.td, &x, &xd, &z);
                        g.pi("zᴰ", zd_ty.clone(), |zd| {
                            let path = self.eq_s(&q.a, &q.ad, &q.as_, &q.t, &q.td, &q.ts, &x, &xd, &xs, &z);
                            g.pi("zˢ", id(zd_ty, path, zd.clone()), |_| {
                                g.pi("v", apps(q.p.clone(), &[x.clone(), z.clone()]), |v| {
                                    app(apps(q.pd.clone(), &[x.clone(), xd.clone(), z.clone(), zd.clone()]), v)
                                })
                            })
                        })
                    })
                })
            })
        })
    }

    fn refl_s_of(&self, q: &JS) -> N {
        self.refl_s(&q.a, &q.ad, &q.as_, &q.t, &q.td, &q.ts)
    }

    pub fn j_s(&self, q: &JS) -> N {
        let g = self.g;
        let r = refl();
        let step4 = {
            let fun = g.j(
                app(q.ad.clone(), q.t.clone()),
                app(q.as_.clone(), q.t.clone()),
                "tᴰ",
                "tˢ",
                |s, ss| {
                    let mut w = q.clone();
                    w.td = s.clone();
                    w.ts = ss.clone();
                    g.pi("Pᴰ", self.pd_ty(&w), |pd| {
                        w.pd = pd.clone();
                        g.pi("Pˢ", self.ps_ty(&w), |ps| {
                            w.ps = ps.clone();
                            let prd_ty = app(apps(pd.clone(), &[q.t.clone(), s.clone(), r.clone(), r.clone()]), q.pr.clone());
                            g.pi("prᴰ", prd_ty.clone(), |prd| {
                                let prs_ty = id(
                                    prd_ty.clone(),
                                    app(
                                        apps(
                                            ps.clone(),
                                            &[q.t.clone(), s.clone(), ss.clone(), r.clone(), r.clone(), self.refl_s_of(&w)],
                                        ),
                                        q.pr.clone(),
                                    ),
                                    prd.clone(),
                                );
                                g.pi("prˢ", prs_ty, |prs| {
                                    w.prd = prd;
                                    w.prs = prs;
                                    w.u = q.t.clone();
                                    w.ud = app(q.as_.clone(), q.t.clone());
                                    w.us = refl();
                                    w.e = refl();
                                    self.goal_s(&self.settle_s(w))
                                })
                            })
                        })
                    })
                },
                g.lams(&["Pᴰ", "Pˢ", "prᴰ", "prˢ"], |v| v[3].clone()),
                q.td.clone(),
                q.ts.clone(),
            );
            apps(fun, &[q.pd.clone(), q.ps.clone(), q.prd.clone(), q.prs.clone()])
        };
        let step3 = g.j(
            q.a.clone(),
            q.t.clone(),
            "u",
            "e",
            |y, w| {
                let mut k = q.clone();
                k.u = y.clone();
                k.ud = app(q.as_.clone(), y);
                k.us = refl();
                k.e = w;
                self.goal_s(&self.settle_s(k))
            },
            step4,
            q.u.clone(),
            q.e.clone(),
        );
        let step2 = g.j(
            app(q.ad.clone(), q.u.clone()),
            app(q.as_.clone(), q.u.clone()),
            "uᴰ",
            "uˢ",
            |y, ys| {
                let mut k = q.clone();
                k.ud = y;
                k.us = ys;
                self.goal_s(&self.settle_s(k))
            },
            step3,
            q.ud.clone(),
            q.us.clone(),
        );
        g.j(
            self.eq_d(&q.a, &q.ad, &q.t, &q.td, &q.u, &q.ud, &q.e),
            self.path_s(q),
            "eᴰ",
            "eˢ",
            |w, ws| {
                let mut k = q.clone();
                k.ed = w;
                k.es = ws;
                self.goal_s(&k)
            },
            step2,
            q.ed.clone(),
            q.es.clone(),
        )
    }

    fn goal_bs(&self, q: &JS) -> N {
        let r = refl();
        let mut at = q.clone();
        at.u = q.t.clone();
        at.ud = q.td.clone();
        at.us = q.ts.clone();
        at.e = r.clone();
        at.ed = r.clone();
        at.es = self.refl_s_of(q);
        let jd = self.j_d(&at.displayed());
        let js = self.j_s(&at);
        let ja = self.j_a(&q.a, &q.t, &q.p, &q.pr, &q.t, &r);
        let a2 = apps(q.p.clone(), &[q.t.clone(), r.clone()]);
        let ad2 = apps(q.pd.clone(), &[q.t.clone(), q.td.clone(), r.clone(), r.clone()]);
        let as2 =
            apps(q.ps.clone(), &[q.t.clone(), q.td.clone(), q.ts.clone(), r.clone(), r.clone(), self.refl_s_of(q)]);
        id(
            self.eq_d(&a2, &ad2, &ja, &jd, &q.pr, &q.prd, &r),
            self.eq_s(&a2, &ad2, &as2, &ja, &jd, &js, &q.pr, &q.prd, &q.prs, &r),
            refl(),
        )
    }

    /// Section clause of the rule-4 computation rule.
    pub fn jb_s(&self, q: &JS) -> N {
        let g = self.g;
        let r = refl();
        let step2 = {
            let fun = g.j(
                app(q.ad.clone(), q.t.clone()),
                app(q.as_.clone(), q.t.clone()),
                "tᴰ",
                "tˢ",
                |s, ss| {
                    let mut w = q.clone();
                    w.td = s.clone();
                    w.ts = ss.clone();
                    g.pi("Pᴰ", self.pd_ty(&w), |pd| {
                        w.pd = pd;
                        g.pi("Pˢ", self.ps_ty(&w), |ps| {
                            w.ps = ps.clone();
                            w.prd = app(
                                apps(ps, &[q.t.clone(), s.clone(), ss.clone(), r.clone(), r.clone(), self.refl_s_of(&w)]),
                                q.pr.clone(),
                            );
                            w.prs = refl();
                            self.goal_bs(&w)
                        })
                    })
                },
                g.lams(&["Pᴰ", "Pˢ"], |_| refl()),
                q.td.clone(),
                q.ts.clone(),
            );
            apps(fun, &[q.pd.clone(), q.ps.clone()])
        };
        let ad2 = apps(q.pd.clone(), &[q.t.clone(), q.td.clone(), r.clone(), r.clone()]);
        let as2 =
            apps(q.ps.clone(), &[q.t.clone(), q.td.clone(), q.ts.clone(), r.clone(), r.clone(), self.refl_s_of(q)]);
        g.j(
            app(ad2, q.pr.clone()),
            app(as2, q.pr.clone()),
            "prᴰ",
            "prˢ",
            |y, ys| {
                let mut w = q.clone();
                w.prd = y;
                w.prs = ys;
                self.goal_bs(&w)
            },
            step2,
            q.prd.clone(),
            q.prs.clone(),
        )
    }

    // ---- rule 5 ----------------------------------------------------------------

    pub fn ju_d(&self, q: &JUD) -> N {
        let g = self.g;
        let outer = g.j(
            set0(),
            q.a.clone(),
            "X",
            "z",
            |y, w| {
                g.pi("Xᴰ", g.arrow(y.clone(), self.type_i()), |yd| {
                    g.pi("zᴰ", self.equ_d_ty(&q.a, &q.ad, &y, &yd, &w), |wd| {
                        app(apps(q.pd.clone(), &[y.clone(), yd, w.clone(), wd]), self.ju_a(&q.a, &q.p, &q.pr, &y, &w))
                    })
                })
            },
            g.lams(&["Xᴰ", "zᴰ"], |v| {
                g.j(
                    g.arrow(q.a.clone(), self.type_i()),
                    q.ad.clone(),
                    "Xᴰ",
                    "zᴰ",
                    |f, w| {
                        app(
                            apps(q.pd.clone(), &[q.a.clone(), f, refl(), w]),
                            self.ju_a(&q.a, &q.p, &q.pr, &q.a, &refl()),
                        )
                    },
                    q.prd.clone(),
                    v[0].clone(),
                    v[1].clone(),
                )
            }),
            q.b.clone(),
            q.e.clone(),
        );
        apps(outer, &[q.bd.clone(), q.ed.clone()])
    }

    fn goal_um(&self, q: &JUM) -> N {
        id(
            apps(q.p1.clone(), &[q.b1.clone(), q.e1.clone()]),
            app(
                apps(q.pm.clone(), &[q.b0.clone(), q.e0.clone(), q.b1.clone(), q.bm.clone(), q.e1.clone(), q.em.clone()]),
                self.ju_a(&q.a0, &q.p0, &q.pr0, &q.b0, &q.e0),
            ),
            self.ju_a(&q.a1, &q.p1, &q.pr1, &q.b1, &q.e1),
        )
    }

    fn pmu_ty(&self, q: &JUM) -> N {
        let g = self.g;
        g.pi("X₀", set0(), |x0| {
            g.pi("z₀", id(set0(), q.a0.clone(), x0.clone()), |z0| {
                g.pi("X₁", set0(), |x1| {
                    g.pi("Xᴹ", g.arrow(x0.clone(), x1.clone()), |xm| {
                        g.pi("z₁", id(set0(), q.a1.clone(), x1.clone()), |z1| {
                            let zm_ty = self.equ_m_ty(&q.a0, &q.a1, &q.am, &x0, &x1, &xm, &z0, &z1);
                            g.pi("zᴹ", zm_ty, |_| {
                                g.arrow(apps(q.p0.clone(), &[x0.clone(), z0.clone()]), apps(q.p1.clone(), &[x1, z1]))
                            })
                        })
                    })
                })
            })
        })
    }

    pub fn ju_m(&self, q: &JUM) -> N {
        let g = self.g;
        let r = refl();
        let step3 = |bm: N, em: N| {
            let fun = g.j(
                g.arrow(q.a0.clone(), q.a1.clone()),
                g.lam("x", |x| app(bm.clone(), self.coe(q.a0.clone(), q.a0.clone(), r.clone(), x))),
                "f",
                "w",
                |f, w| {
                    let mut k = q.clone();
                    k.am = f.clone();
                    g.pi("Pᴹ", self.pmu_ty(&k), |pm| {
                        let prm_ty = id(
                            apps(q.p1.clone(), &[q.a1.clone(), r.clone()]),
                            app(
                                apps(pm.clone(), &[q.a0.clone(), r.clone(), q.a1.clone(), f.clone(), r.clone(), r.clone()]),
                                q.pr0.clone(),
                            ),
                            q.pr1.clone(),
                        );
                        g.pi("prᴹ", prm_ty, |prm| {
                            k.b0 = q.a0.clone();
                            k.e0 = r.clone();
                            k.b1 = q.a1.clone();
                            k.e1 = r.clone();
                            k.bm = bm.clone();
                            k.em = w.clone();
                            k.pm = pm;
                            k.prm = prm;
                            self.goal_um(&k)
                        })
                    })
                },
                g.lams(&["Pᴹ", "prᴹ"], |v| v[1].clone()),
                g.lam("x", |x| self.coe(q.a1.clone(), q.a1.clone(), r.clone(), app(q.am.clone(), x))),
                em,
            );
            apps(fun, &[q.pm.clone(), q.prm.clone()])
        };
        let step2 = |bm: N, em: N| {
            let fun = g.j(
                set0(),
                q.a1.clone(),
                "X₁",
                "e₁",
                |y, w1| {
                    g.pi("Xᴹ", g.arrow(q.a0.clone(), y.clone()), |bm2| {
                        let em_ty = self.equ_m_ty(&q.a0, &q.a1, &q.am, &q.a0, &y, &bm2, &r, &w1);
                        g.pi("eᴹ", em_ty, |em2| {
                            let mut k = q.clone();
                            k.b0 = q.a0.clone();
                            k.e0 = r.clone();
                            k.b1 = y.clone();
                            k.e1 = w1.clone();
                            k.bm = bm2;
                            k.em = em2;
                            self.goal_um(&k)
                        })
                    })
                },
                g.lams(&["Xᴹ", "eᴹ"], |v| step3(v[0].clone(), v[1].clone())),
                q.b1.clone(),
                q.e1.clone(),
            );
            apps(fun, &[bm, em])
        };
        let fun = g.j(
            set0(),
            q.a0.clone(),
            "X₀",
            "e₀",
            |x, w0| {
                g.pi("Xᴹ", g.arrow(x.clone(), q.b1.clone()), |bm2| {
                    let em_ty = self.equ_m_ty(&q.a0, &q.a1, &q.am, &x, &q.b1, &bm2, &w0, &q.e1);
                    g.pi("eᴹ", em_ty, |em2| {
                        let mut k = q.clone();
                        k.b0 = x.clone();
                        k.e0 = w0.clone();
                        k.bm = bm2;
                        k.em = em2;
                        self.goal_um(&k)
                    })
                })
            },
            g.lams(&["Xᴹ", "eᴹ"], |v| step2(v[0].clone(), v[1].clone())),
            q.b0.clone(),
            q.e0.clone(),
        );
        apps(fun, &[q.bm.clone(), q.em.clone()])
    }

    pub fn jbu_m(&self, q: &JUM) -> N {
        let r = refl();
        self.inv(
            apps(q.p1.clone(), &[q.a1.clone(), r.clone()]),
            app(
                apps(q.pm.clone(), &[q.a0.clone(), r.clone(), q.a1.clone(), q.am.clone(), r.clone(), r.clone()]),
                q.pr0.clone(),
            ),
            q.pr1.clone(),
            q.prm.clone(),
        )
    }

    fn goal_us(&self, q: &JUS) -> N {
        let ja = self.ju_a(&q.a, &q.p, &q.pr, &q.b, &q.e);
        id(
            app(apps(q.pd.clone(), &[q.b.clone(), q.bd.clone(), q.e.clone(), q.ed.clone()]), ja.clone()),
            app(apps(q.ps.clone(), &[q.b.clone(), q.bd.clone(), q.bs.clone(), q.e.clone(), q.ed.clone(), q.es.clone()]), ja),
            self.ju_d(&q.displayed()),
        )
    }

    fn psu_ty(&self, q: &JUS) -> N {
        let g = self.g;
        g.pi("X", set0(), |x| {
            g.pi("Xᴰ", g.arrow(x.clone(), self.type_i()), |xd| {
                g.pi("Xˢ", g.pi("x", x.clone(), |y| app(xd.clone(), y)), |xs| {
                    g.pi("z", id(set0(), q.a.clone(), x.clone()), |z| {
                        g.pi("zᴰ", self.equ_d_ty(&q.a, &q.ad, &x, &xd, &z), |zd| {
                            let zs_ty = self.equ_s_ty(&q.a, &q.ad, &q.as_, &x, &xd, &xs, &z, &zd);
                            g.pi("zˢ", zs_ty, |_| {
                                g.pi("v", apps(q.p.clone(), &[x.clone(), z.clone()]), |v| {
                                    app(apps(q.pd.clone(), &[x.clone(), xd.clone(), z.clone(), zd.clone()]), v)
                                })
                            })
                        })
                    })
                })
            })
        })
    }

    pub fn ju_s(&self, q: &JUS) -> N {
        let g = self.g;
        let r = refl();
        let step3 = |bs: N, es: N| {
            let fun = g.j(
                self.equ_s_dom(&q.a, &q.a, &q.ad, &r),
                self.equ_s_lhs(&q.a, &q.a, &bs, &r),
                "f",
                "w",
                |f, w| {
                    let mut k = q.clone();
                    k.as_ = f.clone();
                    g.pi("Pˢ", self.psu_ty(&k), |ps| {
                        let prd_ty = app(apps(q.pd.clone(), &[q.a.clone(), q.ad.clone(), r.clone(), r.clone()]), q.pr.clone());
                        let prs_ty = id(
                            prd_ty,
                            app(
                                apps(ps.clone(), &[q.a.clone(), q.ad.clone(), f.clone(), r.clone(), r.clone(), r.clone()]),
                                q.pr.clone(),
                            ),
                            q.prd.clone(),
                        );
                        g.pi("prˢ", prs_ty, |prs| {
                            k.b = q.a.clone();
                            k.bd = q.ad.clone();
                            k.bs = bs.clone();
                            k.e = r.clone();
                            k.ed = r.clone();
                            k.es = w.clone();
                            k.ps = ps;
                            k.prs = prs;
                            self.goal_us(&k)
                        })
                    })
                },
                g.lams(&["Pˢ", "prˢ"], |v| v[1].clone()),
                self.equ_s_rhs(&q.a, &q.ad, &q.as_, &q.a, &q.ad, &r, &r),
                es,
            );
            apps(fun, &[q.ps.clone(), q.prs.clone()])
        };
        let step2 = |bd: N, bs: N, ed: N, es: N| {
            let fun = g.j(
                g.arrow(q.a.clone(), self.type_i()),
                q.ad.clone(),
                "Xᴰ",
                "eᴰ",
                |f, v| {
                    g.pi("Xˢ", g.pi("x", q.a.clone(), |y| app(f.clone(), y)), |bs2| {
                        let es_ty = self.equ_s_ty(&q.a, &q.ad, &q.as_, &q.a, &f, &bs2, &r, &v);
                        g.pi("eˢ", es_ty, |es2| {
                            let mut k = q.clone();
                            k.b = q.a.clone();
                            k.bd = f.clone();
                            k.bs = bs2;
                            k.e = r.clone();
                            k.ed = v.clone();
                            k.es = es2;
                            self.goal_us(&k)
                        })
                    })
                },
                g.lams(&["Xˢ", "eˢ"], |v| step3(v[0].clone(), v[1].clone())),
                bd,
                ed,
            );
            apps(fun, &[bs, es])
        };
        let fun = g.j(
            set0(),
            q.a.clone(),
            "X",
            "e",
            |x, w| {
                g.pi("Xᴰ", g.arrow(x.clone(), self.type_i()), |xd| {
                    g.pi("Xˢ", g.pi("x", x.clone(), |y| app(xd.clone(), y)), |xs| {
                        g.pi("eᴰ", self.equ_d_ty(&q.a, &q.ad, &x, &xd, &w), |wd| {
                            let ws_ty = self.equ_s_ty(&q.a, &q.ad, &q.as_, &x, &xd, &xs, &w, &wd);
                            g.pi("eˢ", ws_ty, |ws| {
                                let mut k = q.clone();
                                k.b = x.clone();
                                k.bd = xd.clone();
                                k.bs = xs.clone();
                                k.e = w.clone();
                                k.ed = wd;
                                k.es = ws;
                                self.goal_us(&k)
                            })
                        })
                    })
                })
            },
            g.lams(&["Xᴰ", "Xˢ", "eᴰ", "eˢ"], |v| step2(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())),
            q.b.clone(),
            q.e.clone(),
        );
        apps(fun, &[q.bd.clone(), q.bs.clone(), q.ed.clone(), q.es.clone()])
    }

    pub fn jbu_s(&self, q: &JUS) -> N {
        let g = self.g;
        let r = refl();
        let a2 = apps(q.p.clone(), &[q.a.clone(), r.clone()]);
        let ad2 = apps(q.pd.clone(), &[q.a.clone(), q.ad.clone(), r.clone(), r.clone()]);
        let as2 = apps(q.ps.clone(), &[q.a.clone(), q.ad.clone(), q.as_.clone(), r.clone(), r.clone(), r.clone()]);
        let ja = self.ju_a(&q.a, &q.p, &q.pr, &q.a, &r);
        g.j(
            app(ad2.clone(), q.pr.clone()),
            app(as2.clone(), q.pr.clone()),
            "prᴰ",
            "prˢ",
            |y, ys| {
                let mut k = q.clone();
                k.prd = y.clone();
                k.prs = ys.clone();
                k.b = q.a.clone();
                k.bd = q.ad.clone();
                k.bs = q.as_.clone();
                k.e = r.clone();
                k.ed = r.clone();
                k.es = r.clone();
                let jd = self.ju_d(&k.displayed());
                let js = self.ju_s(&k);
                id(
                    self.eq_d(&a2, &ad2, &ja, &jd, &q.pr, &y, &r),
                    self.eq_s(&a2, &ad2, &as2, &ja, &jd, &js, &q.pr, &y, &ys, &r),
                    refl(),
                )
            },
            refl(),
            q.prd.clone(),
            q.prs.clone(),
        )
    }
}
