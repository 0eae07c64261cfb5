//! Typing for already-elaborated core syntax: conversion, type inference and
//! whole-signature re-checking.

use std::rc::Rc;

use crate::core::print::{scope_of, show_tm, show_ty};
use crate::core::*;
use crate::name::Name;
use crate::target::{self, Ctx, Entry, Kernel, Tm};

/// Kernel context for a zoned telescope: external entries are assumptions,
/// signature entries are present but unusable.
pub fn kernel_ctx(tele: &Tele) -> Ctx {
    let mut ctx = Ctx::new();
    for (n, z) in tele {
        match z {
            Zone::Ext(t) => ctx.push(Entry::Assum { name: n.clone(), ty: t.clone() }),
            Zone::Sig(_) => ctx.push(Entry::Hidden {
                name: n.clone(),
                why: "signature entries cannot occur in external terms".into(),
            }),
        }
    }
    ctx
}

/// `p[x ↦ xv, z ↦ zv]` for a two-binder motive.
pub fn inst2(p: &STm, xv: &STm, zv: &STm) -> STm {
    let p1 = subst(p, 0, &Repl::Sig(shift(zv, 0, 1)));
    subst(&p1, 0, &Repl::Sig(xv.clone()))
}

/// Type of the path binder in a rule-4 motive, in the scope extended by `x`.
pub fn j_path_ty(a: &STm, t: &STm) -> STy {
    el(eq_id(shift(a, 0, 1), shift(t, 0, 1), v(0)))
}

/// Type of the path binder in a rule-5 motive, in the scope extended by `x`.
pub fn ju_path_ty(a: &STm) -> STy {
    eq_u(shift(a, 0, 1), v(0))
}

pub fn j_result(p: &STm, u: &STm, eq: &STm) -> STy {
    el(inst2(p, u, eq))
}

/// `J a t p pr t (refl t) =_{p[t, refl]} pr`.
pub fn jbeta_result(a: &STm, t: &STm, x: &Name, z: &Name, p: &STm, pr: &STm) -> STy {
    let r = refl(t.clone());
    let j = Rc::new(SigTerm::J {
        a: a.clone(),
        t: t.clone(),
        x: x.clone(),
        z: z.clone(),
        p: p.clone(),
        pr: pr.clone(),
        u: t.clone(),
        eq: r.clone(),
    });
    el(eq_id(inst2(p, t, &r), j, pr.clone()))
}

pub fn jbetau_result(a: &STm, x: &Name, z: &Name, p: &STm, pr: &STm) -> STy {
    let r = refl_u(a.clone());
    let j = Rc::new(SigTerm::JU {
        a: a.clone(),
        x: x.clone(),
        z: z.clone(),
        p: p.clone(),
        pr: pr.clone(),
        b: a.clone(),
        eq: r.clone(),
    });
    el(eq_id(inst2(p, a, &r), j, pr.clone()))
}

fn with<T>(tele: &mut Tele, n: &Name, z: Zone, f: impl FnOnce(&mut Tele) -> T) -> T {
    tele.push((n.clone(), z));
    let r = f(tele);
    tele.pop();
    r
}

fn with2<T>(tele: &mut Tele, n1: &Name, z1: Zone, n2: &Name, z2: Zone, f: impl FnOnce(&mut Tele) -> T) -> T {
    tele.push((n1.clone(), z1));
    tele.push((n2.clone(), z2));
    let r = f(tele);
    tele.pop();
    tele.pop();
    r
}

/// Definitional equality of signature syntax: α-equivalence, with embedded
/// external terms compared by the kernel.
pub struct Conv<'k> {
    pub kernel: &'k Kernel,
}

impl Conv<'_> {
    fn tgt(&self, tele: &Tele, a: &Tm, b: &Tm) -> bool {
        if a == b {
            return true;
        }
        let mut ctx = kernel_ctx(tele);
        self.kernel.refuel();
        self.kernel.conv(&mut ctx, a, b).unwrap_or(false)
    }

    pub fn ty(&self, tele: &mut Tele, a: &STy, b: &STy) -> bool {
        if a == b {
            return true;
        }
        match (&**a, &**b) {
            (SigType::U, SigType::U) => true,
            (SigType::El(x), SigType::El(y)) => self.tm(tele, x, y),
            (SigType::PiInd(n, a1, b1), SigType::PiInd(_, a2, b2)) => {
                self.tm(tele, a1, a2) && with(tele, n, Zone::Sig(el(a1.clone())), |t| self.ty(t, b1, b2))
            }
            (SigType::PiExt(n, a1, b1), SigType::PiExt(_, a2, b2)) => {
                self.tgt(tele, a1, a2) && with(tele, n, Zone::Ext(a1.clone()), |t| self.ty(t, b1, b2))
            }
            (SigType::EqTyCon(a1, b1), SigType::EqTyCon(a2, b2)) => self.tm(tele, a1, a2) && self.tm(tele, b1, b2),
            _ => false,
        }
    }

    pub fn tm(&self, tele: &mut Tele, a: &STm, b: &STm) -> bool {
        if a == b {
            return true;
        }
        let placeholder = || Zone::Sig(u());
        match (&**a, &**b) {
            (SigTerm::Var(i), SigTerm::Var(j)) => i == j,
            (SigTerm::AppInd(f1, x1), SigTerm::AppInd(f2, x2)) => self.tm(tele, f1, f2) && self.tm(tele, x1, x2),
            (SigTerm::AppExt(f1, x1), SigTerm::AppExt(f2, x2)) | (SigTerm::AppInf(f1, x1), SigTerm::AppInf(f2, x2)) => {
                self.tm(tele, f1, f2) && self.tgt(tele, x1, x2)
            }
            (SigTerm::EqId(a1, t1, u1), SigTerm::EqId(a2, t2, u2)) => {
                self.tm(tele, a1, a2) && self.tm(tele, t1, t2) && self.tm(tele, u1, u2)
            }
            (SigTerm::PiInf(n, a1, b1), SigTerm::PiInf(_, a2, b2)) => {
                self.tgt(tele, a1, a2) && with(tele, n, Zone::Ext(a1.clone()), |t| self.tm(t, b1, b2))
            }
            (SigTerm::Refl(x), SigTerm::Refl(y)) | (SigTerm::ReflU(x), SigTerm::ReflU(y)) => self.tm(tele, x, y),
            (
                SigTerm::J { a: a1, t: t1, x, z, p: p1, pr: r1, u: u1, eq: e1 },
                SigTerm::J { a: a2, t: t2, p: p2, pr: r2, u: u2, eq: e2, .. },
            ) => {
                self.tm(tele, a1, a2)
                    && self.tm(tele, t1, t2)
                    && with2(tele, x, placeholder(), z, placeholder(), |t| self.tm(t, p1, p2))
                    && self.tm(tele, r1, r2)
                    && self.tm(tele, u1, u2)
                    && self.tm(tele, e1, e2)
            }
            (
                SigTerm::JBeta { a: a1, t: t1, x, z, p: p1, pr: r1 },
                SigTerm::JBeta { a: a2, t: t2, p: p2, pr: r2, .. },
            ) => {
                self.tm(tele, a1, a2)
                    && self.tm(tele, t1, t2)
                    && with2(tele, x, placeholder(), z, placeholder(), |t| self.tm(t, p1, p2))
                    && self.tm(tele, r1, r2)
            }
            (
                SigTerm::JU { a: a1, x, z, p: p1, pr: r1, b: b1, eq: e1 },
                SigTerm::JU { a: a2, p: p2, pr: r2, b: b2, eq: e2, .. },
            ) => {
                self.tm(tele, a1, a2)
                    && with2(tele, x, placeholder(), z, placeholder(), |t| self.tm(t, p1, p2))
                    && self.tm(tele, r1, r2)
                    && self.tm(tele, b1, b2)
                    && self.tm(tele, e1, e2)
            }
            (SigTerm::JBetaU { a: a1, x, z, p: p1, pr: r1 }, SigTerm::JBetaU { a: a2, p: p2, pr: r2, .. }) => {
                self.tm(tele, a1, a2)
                    && with2(tele, x, placeholder(), z, placeholder(), |t| self.tm(t, p1, p2))
                    && self.tm(tele, r1, r2)
            }
            _ => false,
        }
    }
}

/// Re-checker for core syntax. Errors are plain messages; the elaborator
/// is responsible for positioned diagnostics.
pub struct CoreChecker<'k> {
    pub kernel: &'k Kernel,
}

type R<T> = Result<T, String>;

impl CoreChecker<'_> {
    fn conv(&self) -> Conv<'_> {
        Conv { kernel: self.kernel }
    }

    fn ext_type(&self, tele: &Tele, a: &Tm) -> R<()> {
        let mut ctx = kernel_ctx(tele);
        self.kernel.refuel();
        let l = self.kernel.infer_sort(&mut ctx, a).map_err(|e| e.to_string())?;
        if l > 0 {
            return Err(format!("external domain `{}` is not in Set", ctx.show(a)));
        }
        Ok(())
    }

    fn ext_check(&self, tele: &Tele, t: &Tm, a: &Tm) -> R<()> {
        let mut ctx = kernel_ctx(tele);
        self.kernel.refuel();
        self.kernel.check(&mut ctx, t, a).map_err(|e| e.to_string())
    }

    pub fn check_ty(&self, tele: &mut Tele, a: &STy) -> R<()> {
        match &**a {
            SigType::U => Ok(()),
            SigType::El(x) => self.expect(tele, x, &u()),
            SigType::PiInd(n, d, b) => {
                self.expect(tele, d, &u())?;
                with(tele, n, Zone::Sig(el(d.clone())), |t| self.check_ty(t, b))
            }
            SigType::PiExt(n, d, b) => {
                self.ext_type(tele, d)?;
                with(tele, n, Zone::Ext(d.clone()), |t| self.check_ty(t, b))
            }
            SigType::EqTyCon(x, y) => {
                self.expect(tele, x, &u())?;
                self.expect(tele, y, &u())
            }
        }
    }

    pub fn expect(&self, tele: &mut Tele, t: &STm, want: &STy) -> R<()> {
        let got = self.infer(tele, t)?;
        if self.conv().ty(tele, &got, want) {
            Ok(())
        } else {
            let sc = scope_of(tele);
            Err(format!(
                "`{}` has type `{}` but `{}` was expected",
                show_tm(t, &sc),
                show_ty(&got, &sc),
                show_ty(want, &sc)
            ))
        }
    }

    pub fn infer(&self, tele: &mut Tele, t: &STm) -> R<STy> {
        match &**t {
            SigTerm::Var(i) => match tele.len().checked_sub(i + 1).map(|k| &tele[k].1) {
                Some(Zone::Sig(ty)) => Ok(shift_ty(ty, 0, i + 1)),
                Some(Zone::Ext(_)) => Err("external variable used as a signature term".into()),
                None => Err(format!("unbound variable #{}", i)),
            },
            SigTerm::AppInd(f, a) => {
                let tf = self.infer(tele, f)?;
                match &*tf {
                    SigType::PiInd(_, d, b) => {
                        self.expect(tele, a, &el(d.clone()))?;
                        Ok(subst_ty(b, 0, &Repl::Sig(a.clone())))
                    }
                    _ => Err("inductive application of a non-function".into()),
                }
            }
            SigTerm::AppExt(f, a) => {
                let tf = self.infer(tele, f)?;
                match &*tf {
                    SigType::PiExt(_, d, b) => {
                        self.ext_check(tele, a, d)?;
                        Ok(subst_ty(b, 0, &Repl::Ext(a.clone())))
                    }
                    _ => Err("external application of a non-function".into()),
                }
            }
            SigTerm::AppInf(f, a) => {
                let tf = self.infer(tele, f)?;
                match &*tf {
                    SigType::El(pf) => match &**pf {
                        SigTerm::PiInf(_, d, b) => {
                            self.ext_check(tele, a, d)?;
                            Ok(el(subst(b, 0, &Repl::Ext(a.clone()))))
                        }
                        _ => Err("infinitary application of a non-function".into()),
                    },
                    _ => Err("infinitary application of a non-function".into()),
                }
            }
            SigTerm::EqId(a, x, y) => {
                self.expect(tele, a, &u())?;
                self.expect(tele, x, &el(a.clone()))?;
                self.expect(tele, y, &el(a.clone()))?;
                Ok(u())
            }
            SigTerm::PiInf(n, d, b) => {
                self.ext_type(tele, d)?;
                with(tele, n, Zone::Ext(d.clone()), |t| self.expect(t, b, &u()))?;
                Ok(u())
            }
            SigTerm::Refl(x) => match &*self.infer(tele, x)? {
                SigType::El(a) => Ok(el(eq_id(a.clone(), x.clone(), x.clone()))),
                _ => Err("refl of a non-element".into()),
            },
            SigTerm::ReflU(a) => {
                self.expect(tele, a, &u())?;
                Ok(eq_u(a.clone(), a.clone()))
            }
            SigTerm::J { a, t, x, z, p, pr, u: end, eq } => {
                self.j_common(tele, a, t, x, z, p, pr)?;
                self.expect(tele, end, &el(a.clone()))?;
                self.expect(tele, eq, &el(eq_id(a.clone(), t.clone(), end.clone())))?;
                Ok(j_result(p, end, eq))
            }
            SigTerm::JBeta { a, t, x, z, p, pr } => {
                self.j_common(tele, a, t, x, z, p, pr)?;
                Ok(jbeta_result(a, t, x, z, p, pr))
            }
            SigTerm::JU { a, x, z, p, pr, b, eq } => {
                self.ju_common(tele, a, x, z, p, pr)?;
                self.expect(tele, b, &u())?;
                self.expect(tele, eq, &eq_u(a.clone(), b.clone()))?;
                Ok(j_result(p, b, eq))
            }
            SigTerm::JBetaU { a, x, z, p, pr } => {
                self.ju_common(tele, a, x, z, p, pr)?;
                Ok(jbetau_result(a, x, z, p, pr))
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn j_common(&self, tele: &mut Tele, a: &STm, t: &STm, x: &Name, z: &Name, p: &STm, pr: &STm) -> R<()> {
        self.expect(tele, a, &u())?;
        self.expect(tele, t, &el(a.clone()))?;
        with2(tele, x, Zone::Sig(el(a.clone())), z, Zone::Sig(j_path_ty(a, t)), |tl| self.expect(tl, p, &u()))?;
        self.expect(tele, pr, &el(inst2(p, t, &refl(t.clone()))))
    }

    fn ju_common(&self, tele: &mut Tele, a: &STm, x: &Name, z: &Name, p: &STm, pr: &STm) -> R<()> {
        self.expect(tele, a, &u())?;
        with2(tele, x, Zone::Sig(u()), z, Zone::Sig(ju_path_ty(a)), |tl| self.expect(tl, p, &u()))?;
        self.expect(tele, pr, &el(inst2(p, a, &refl_u(a.clone()))))
    }

    /// Re-checks a whole signature from scratch.
    pub fn check_context(&self, sc: &SigContext) -> R<()> {
        let mut tele: Tele = Vec::new();
        for (n, a) in &sc.ext {
            let mut ctx = kernel_ctx(&tele);
            self.kernel.refuel();
            let l = self.kernel.infer_sort(&mut ctx, a).map_err(|e| format!("{}: {}", n, e))?;
            if l > 1 {
                return Err(format!("{}: external parameter type is too large", n));
            }
            tele.push((n.clone(), Zone::Ext(a.clone())));
        }
        for (n, a) in &sc.sig {
            self.check_ty(&mut tele, a).map_err(|e| format!("{}: {}", n, e))?;
            tele.push((n.clone(), Zone::Sig(a.clone())));
        }
        Ok(())
    }
}

/// Target-level helper for callers that only hold a telescope.
pub fn show_ext(tele: &Tele, t: &Tm) -> String {
    target::print::show(t, &scope_of(tele))
}
