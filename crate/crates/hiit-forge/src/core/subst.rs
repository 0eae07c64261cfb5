use std::rc::Rc;

use super::{STm, STy, SigTerm, SigType};
use crate::target::{self, subst::map_free, Tm};

/// Variable handlers: each gets the free index (relative to the outer scope)
/// and the number of binders crossed.
struct Map<'a> {
    sig: &'a dyn Fn(usize, usize) -> STm,
    ext: &'a dyn Fn(usize, usize) -> Tm,
}

impl Map<'_> {
    fn tgt(&self, t: &Tm, d: usize) -> Tm {
        map_free(t, d, &|i, dd| (self.ext)(i, dd))
    }

    fn ty(&self, t: &STy, d: usize) -> STy {
        Rc::new(match &**t {
            SigType::U => SigType::U,
            SigType::El(a) => SigType::El(self.tm(a, d)),
            SigType::PiInd(n, a, b) => SigType::PiInd(n.clone(), self.tm(a, d), self.ty(b, d + 1)),
            SigType::PiExt(n, a, b) => SigType::PiExt(n.clone(), self.tgt(a, d), self.ty(b, d + 1)),
            SigType::EqTyCon(a, b) => SigType::EqTyCon(self.tm(a, d), self.tm(b, d)),
        })
    }

    fn tm(&self, t: &STm, d: usize) -> STm {
        match &**t {
            SigTerm::Var(i) => {
                if *i < d {
                    t.clone()
                } else {
                    (self.sig)(*i - d, d)
                }
            }
            SigTerm::AppInd(f, a) => Rc::new(SigTerm::AppInd(self.tm(f, d), self.tm(a, d))),
            SigTerm::AppExt(f, a) => Rc::new(SigTerm::AppExt(self.tm(f, d), self.tgt(a, d))),
            SigTerm::AppInf(f, a) => Rc::new(SigTerm::AppInf(self.tm(f, d), self.tgt(a, d))),
            SigTerm::EqId(a, x, y) => Rc::new(SigTerm::EqId(self.tm(a, d), self.tm(x, d), self.tm(y, d))),
            SigTerm::PiInf(n, a, b) => Rc::new(SigTerm::PiInf(n.clone(), self.tgt(a, d), self.tm(b, d + 1))),
            SigTerm::Refl(x) => Rc::new(SigTerm::Refl(self.tm(x, d))),
            SigTerm::ReflU(x) => Rc::new(SigTerm::ReflU(self.tm(x, d))),
            SigTerm::J { a, t, x, z, p, pr, u, eq } => Rc::new(SigTerm::J {
                a: self.tm(a, d),
                t: self.tm(t, d),
                x: x.clone(),
                z: z.clone(),
                p: self.tm(p, d + 2),
                pr: self.tm(pr, d),
                u: self.tm(u, d),
                eq: self.tm(eq, d),
            }),
            SigTerm::JBeta { a, t, x, z, p, pr } => Rc::new(SigTerm::JBeta {
                a: self.tm(a, d),
                t: self.tm(t, d),
                x: x.clone(),
                z: z.clone(),
                p: self.tm(p, d + 2),
                pr: self.tm(pr, d),
            }),
            SigTerm::JU { a, x, z, p, pr, b, eq } => Rc::new(SigTerm::JU {
                a: self.tm(a, d),
                x: x.clone(),
                z: z.clone(),
                p: self.tm(p, d + 2),
                pr: self.tm(pr, d),
                b: self.tm(b, d),
                eq: self.tm(eq, d),
            }),
            SigTerm::JBetaU { a, x, z, p, pr } => Rc::new(SigTerm::JBetaU {
                a: self.tm(a, d),
                x: x.clone(),
                z: z.clone(),
                p: self.tm(p, d + 2),
                pr: self.tm(pr, d),
            }),
        }
    }
}

/// What a substituted variable is replaced by: signature variables take
/// signature terms, external variables take target terms.
#[derive(Clone, Debug)]
pub enum Repl {
    Sig(STm),
    Ext(Tm),
}

fn shifter(cutoff: usize, by: usize) -> (impl Fn(usize, usize) -> STm, impl Fn(usize, usize) -> Tm) {
    let bump = move |i: usize| if i >= cutoff { i + by } else { i };
    (move |i, d| Rc::new(SigTerm::Var(bump(i) + d)), move |i, d| target::var(bump(i) + d))
}

/// Shifts free variables at or above `cutoff` by `by`.
pub fn shift(t: &STm, cutoff: usize, by: usize) -> STm {
    if by == 0 {
        return t.clone();
    }
    let (s, e) = shifter(cutoff, by);
    Map { sig: &s, ext: &e }.tm(t, 0)
}

pub fn shift_ty(t: &STy, cutoff: usize, by: usize) -> STy {
    if by == 0 {
        return t.clone();
    }
    let (s, e) = shifter(cutoff, by);
    Map { sig: &s, ext: &e }.ty(t, 0)
}

fn substituter(j: usize, r: &Repl) -> (impl Fn(usize, usize) -> STm + '_, impl Fn(usize, usize) -> Tm + '_) {
    let s = move |i: usize, d: usize| {
        if i == j {
            match r {
                Repl::Sig(x) => shift(x, 0, d),
                Repl::Ext(_) => panic!("external replacement for a signature variable"),
            }
        } else {
            Rc::new(SigTerm::Var(if i > j { i - 1 } else { i } + d))
        }
    };
    let e = move |i: usize, d: usize| {
        if i == j {
            match r {
                Repl::Ext(x) => target::shift(x, d),
                Repl::Sig(_) => panic!("signature variable used inside an external term"),
            }
        } else {
            target::var(if i > j { i - 1 } else { i } + d)
        }
    };
    (s, e)
}

/// Replaces variable `j` by `r` (which lives in the scope with `j` removed)
/// and lowers the variables above `j`.
pub fn subst(t: &STm, j: usize, r: &Repl) -> STm {
    let (s, e) = substituter(j, r);
    Map { sig: &s, ext: &e }.tm(t, 0)
}

pub fn subst_ty(t: &STy, j: usize, r: &Repl) -> STy {
    let (s, e) = substituter(j, r);
    Map { sig: &s, ext: &e }.ty(t, 0)
}
