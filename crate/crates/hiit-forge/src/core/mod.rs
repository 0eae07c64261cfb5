//! Core syntax of signatures.
//!
//! Binding is nameless. Signature variables and external variables share a
//! single telescope; every entry is tagged with its zone, and the external
//! target terms embedded in signature syntax are indexed over that same
//! telescope (they simply never point at a signature entry).

pub mod print;
mod subst;

use std::rc::Rc;

use crate::name::Name;
use crate::target::Tm;

pub use subst::{shift, shift_ty, subst, subst_ty, Repl};

pub type STy = Rc<SigType>;
pub type STm = Rc<SigTerm>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SigType {
    U,
    El(STm),
    /// `(x : a) → B` with a small domain.
    PiInd(Name, STm, STy),
    /// `(x̂ ∈ Â) → B` over an external type.
    PiExt(Name, Tm, STy),
    /// `a =_U b`.
    EqTyCon(STm, STm),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SigTerm {
    Var(usize),
    AppInd(STm, STm),
    AppExt(STm, Tm),
    AppInf(STm, Tm),
    /// `t =_a u : U`, stored as `(a, t, u)`.
    EqId(STm, STm, STm),
    /// `(x̂ ∈ Â) → b : U`.
    PiInf(Name, Tm, STm),
    Refl(STm),
    /// `J a t (x.z.p) pr u eq`; the motive binds `x` then `z`.
    J { a: STm, t: STm, x: Name, z: Name, p: STm, pr: STm, u: STm, eq: STm },
    JBeta { a: STm, t: STm, x: Name, z: Name, p: STm, pr: STm },
    ReflU(STm),
    /// `J a (x.z.p) pr b eq` for paths between type constructors.
    JU { a: STm, x: Name, z: Name, p: STm, pr: STm, b: STm, eq: STm },
    JBetaU { a: STm, x: Name, z: Name, p: STm, pr: STm },
}

/// A telescope entry's zone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Zone {
    Ext(Tm),
    Sig(STy),
}

/// A zoned telescope, outermost entry first.
pub type Tele = Vec<(Name, Zone)>;

/// A checked signature: external parameters followed by the signature proper.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigContext {
    pub ext: Vec<(Name, Tm)>,
    pub sig: Vec<(Name, STy)>,
}

impl SigContext {
    pub fn tele(&self) -> Tele {
        self.ext
            .iter()
            .map(|(n, t)| (n.clone(), Zone::Ext(t.clone())))
            .chain(self.sig.iter().map(|(n, t)| (n.clone(), Zone::Sig(t.clone()))))
            .collect()
    }

    /// The prefix with the first `k` signature entries.
    pub fn prefix(&self, k: usize) -> SigContext {
        SigContext { ext: self.ext.clone(), sig: self.sig[..k].to_vec() }
    }
}

pub fn u() -> STy {
    Rc::new(SigType::U)
}

pub fn el(a: STm) -> STy {
    Rc::new(SigType::El(a))
}

pub fn pi_ind(n: &str, a: STm, b: STy) -> STy {
    Rc::new(SigType::PiInd(Name::new(n), a, b))
}

pub fn pi_ext(n: &str, a: Tm, b: STy) -> STy {
    Rc::new(SigType::PiExt(Name::new(n), a, b))
}

pub fn eq_u(a: STm, b: STm) -> STy {
    Rc::new(SigType::EqTyCon(a, b))
}

pub fn v(i: usize) -> STm {
    Rc::new(SigTerm::Var(i))
}

pub fn app_ind(f: STm, a: STm) -> STm {
    Rc::new(SigTerm::AppInd(f, a))
}

pub fn app_ext(f: STm, a: Tm) -> STm {
    Rc::new(SigTerm::AppExt(f, a))
}

pub fn app_inf(f: STm, a: Tm) -> STm {
    Rc::new(SigTerm::AppInf(f, a))
}

pub fn eq_id(a: STm, t: STm, u: STm) -> STm {
    Rc::new(SigTerm::EqId(a, t, u))
}

pub fn pi_inf(n: &str, a: Tm, b: STm) -> STm {
    Rc::new(SigTerm::PiInf(Name::new(n), a, b))
}

pub fn refl(t: STm) -> STm {
    Rc::new(SigTerm::Refl(t))
}

pub fn refl_u(a: STm) -> STm {
    Rc::new(SigTerm::ReflU(a))
}

impl SigType {
    pub fn size(&self) -> usize {
        match self {
            SigType::U => 1,
            SigType::El(a) => 1 + a.size(),
            SigType::PiInd(_, a, b) => 1 + a.size() + b.size(),
            SigType::PiExt(_, a, b) => 1 + a.size() + b.size(),
            SigType::EqTyCon(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Every variable index is below `n` (at the top level).
    pub fn well_scoped(&self, n: usize) -> bool {
        match self {
            SigType::U => true,
            SigType::El(a) => a.well_scoped(n),
            SigType::PiInd(_, a, b) => a.well_scoped(n) && b.well_scoped(n + 1),
            SigType::PiExt(_, a, b) => a.is_closed_under(n) && b.well_scoped(n + 1),
            SigType::EqTyCon(a, b) => a.well_scoped(n) && b.well_scoped(n),
        }
    }

    pub fn mentions(&self, i: usize) -> bool {
        match self {
            SigType::U => false,
            SigType::El(a) => a.mentions(i),
            SigType::PiInd(_, a, b) => a.mentions(i) || b.mentions(i + 1),
            SigType::PiExt(_, a, b) => a.mentions(i) || b.mentions(i + 1),
            SigType::EqTyCon(a, b) => a.mentions(i) || b.mentions(i),
        }
    }
}

impl SigTerm {
    pub fn size(&self) -> usize {
        match self {
            SigTerm::Var(_) => 1,
            SigTerm::AppInd(f, a) => 1 + f.size() + a.size(),
            SigTerm::AppExt(f, a) | SigTerm::AppInf(f, a) => 1 + f.size() + a.size(),
            SigTerm::EqId(a, t, u) => 1 + a.size() + t.size() + u.size(),
            SigTerm::PiInf(_, a, b) => 1 + a.size() + b.size(),
            SigTerm::Refl(t) | SigTerm::ReflU(t) => 1 + t.size(),
            SigTerm::J { a, t, p, pr, u, eq, .. } => {
                1 + a.size() + t.size() + p.size() + pr.size() + u.size() + eq.size()
            }
            SigTerm::JBeta { a, t, p, pr, .. } => 1 + a.size() + t.size() + p.size() + pr.size(),
            SigTerm::JU { a, p, pr, b, eq, .. } => 1 + a.size() + p.size() + pr.size() + b.size() + eq.size(),
            SigTerm::JBetaU { a, p, pr, .. } => 1 + a.size() + p.size() + pr.size(),
        }
    }

    pub fn well_scoped(&self, n: usize) -> bool {
        match self {
            SigTerm::Var(i) => *i < n,
            SigTerm::AppInd(f, a) => f.well_scoped(n) && a.well_scoped(n),
            SigTerm::AppExt(f, a) | SigTerm::AppInf(f, a) => f.well_scoped(n) && a.is_closed_under(n),
            SigTerm::EqId(a, t, u) => a.well_scoped(n) && t.well_scoped(n) && u.well_scoped(n),
            SigTerm::PiInf(_, a, b) => a.is_closed_under(n) && b.well_scoped(n + 1),
            SigTerm::Refl(t) | SigTerm::ReflU(t) => t.well_scoped(n),
            SigTerm::J { a, t, p, pr, u, eq, .. } => {
                a.well_scoped(n)
                    && t.well_scoped(n)
                    && p.well_scoped(n + 2)
                    && pr.well_scoped(n)
                    && u.well_scoped(n)
                    && eq.well_scoped(n)
            }
            SigTerm::JBeta { a, t, p, pr, .. } => {
                a.well_scoped(n) && t.well_scoped(n) && p.well_scoped(n + 2) && pr.well_scoped(n)
            }
            SigTerm::JU { a, p, pr, b, eq, .. } => {
                a.well_scoped(n)
                    && p.well_scoped(n + 2)
                    && pr.well_scoped(n)
                    && b.well_scoped(n)
                    && eq.well_scoped(n)
            }
            SigTerm::JBetaU { a, p, pr, .. } => a.well_scoped(n) && p.well_scoped(n + 2) && pr.well_scoped(n),
        }
    }

    pub fn mentions(&self, i: usize) -> bool {
        match self {
            SigTerm::Var(k) => *k == i,
            SigTerm::AppInd(f, a) => f.mentions(i) || a.mentions(i),
            SigTerm::AppExt(f, a) | SigTerm::AppInf(f, a) => f.mentions(i) || a.mentions(i),
            SigTerm::EqId(a, t, u) => a.mentions(i) || t.mentions(i) || u.mentions(i),
            SigTerm::PiInf(_, a, b) => a.mentions(i) || b.mentions(i + 1),
            SigTerm::Refl(t) | SigTerm::ReflU(t) => t.mentions(i),
            SigTerm::J { a, t, p, pr, u, eq, .. } => {
                a.mentions(i)
                    || t.mentions(i)
                    || p.mentions(i + 2)
                    || pr.mentions(i)
                    || u.mentions(i)
                    || eq.mentions(i)
            }
            SigTerm::JBeta { a, t, p, pr, .. } => {
                a.mentions(i) || t.mentions(i) || p.mentions(i + 2) || pr.mentions(i)
            }
            SigTerm::JU { a, p, pr, b, eq, .. } => {
                a.mentions(i) || p.mentions(i + 2) || pr.mentions(i) || b.mentions(i) || eq.mentions(i)
            }
            SigTerm::JBetaU { a, p, pr, .. } => a.mentions(i) || p.mentions(i + 2) || pr.mentions(i),
        }
    }
}

/// Structural equality up to display names.
pub fn alpha_eq_ty(a: &SigType, b: &SigType) -> bool {
    a == b
}

/// Structural equality up to display names.
pub fn alpha_eq(a: &SigTerm, b: &SigTerm) -> bool {
    a == b
}
