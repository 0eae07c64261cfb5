//! Substitution and α-equivalence laws for the signature core, with an
//! exhaustive enumerator of small terms and a random generator of larger ones.

use std::rc::Rc;

use hiit_forge::core::*;
use hiit_forge::name::Name;
use hiit_forge::target::{self, Tm};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Zone of each variable, innermost first (index order).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum K {
    Sig,
    Ext,
}

pub fn push(zs: &[K], k: K) -> Vec<K> {
    let mut v = vec![k];
    v.extend_from_slice(zs);
    v
}

/// Target terms of exactly size `s` over the external variables of `zs`.
pub fn ext_terms(zs: &[K], s: usize) -> Vec<Tm> {
    let vars = || zs.iter().enumerate().filter(|(_, k)| **k == K::Ext).map(|(i, _)| target::var(i));
    match s {
        1 => std::iter::once(target::tt()).chain(vars()).collect(),
        // A binder inside the external term exercises shifting under it.
        2 => std::iter::once(target::lam("y", target::var(0)))
            .chain(vars().map(|v| target::lam("y", target::shift(&v, 1))))
            .chain(vars().map(target::proj1))
            .collect(),
        _ => Vec::new(),
    }
}

/// Every scope-correct signature term of exactly size `s`.
pub fn terms(zs: &[K], s: usize) -> Vec<STm> {
    let mut out = Vec::new();
    if s == 1 {
        for (i, k) in zs.iter().enumerate() {
            if *k == K::Sig {
                out.push(v(i));
            }
        }
        return out;
    }
    let r = s - 1;
    for t in terms(zs, r) {
        out.push(refl(t.clone()));
        out.push(refl_u(t));
    }
    for a in 1..r {
        for f in terms(zs, a) {
            for x in terms(zs, r - a) {
                out.push(app_ind(f.clone(), x));
            }
            for e in ext_terms(zs, r - a) {
                out.push(app_ext(f.clone(), e.clone()));
                out.push(app_inf(f.clone(), e));
            }
        }
        for e in ext_terms(zs, a) {
            for b in terms(&push(zs, K::Ext), r - a) {
                out.push(pi_inf("p", e.clone(), b));
            }
        }
    }
    for a in 1..r {
        for b in 1..r - a {
            let c = r - a - b;
            if c == 0 {
                continue;
            }
            for x in terms(zs, a) {
                for y in terms(zs, b) {
                    for z in terms(zs, c) {
                        out.push(eq_id(x.clone(), y.clone(), z));
                    }
                }
            }
        }
    }
    out
}

/// Every scope-correct signature type of exactly size `s`.
pub fn types(zs: &[K], s: usize) -> Vec<STy> {
    let mut out = Vec::new();
    if s == 1 {
        return vec![u()];
    }
    let r = s - 1;
    for t in terms(zs, r) {
        out.push(el(t));
    }
    for a in 1..r {
        for d in terms(zs, a) {
            for b in types(&push(zs, K::Sig), r - a) {
                out.push(pi_ind("x", d.clone(), b));
            }
        }
        for d in ext_terms(zs, a) {
            for b in types(&push(zs, K::Ext), r - a) {
                out.push(pi_ext("x", d.clone(), b));
            }
        }
        for x in terms(zs, a) {
            for y in terms(zs, r - a) {
                out.push(eq_u(x.clone(), y));
            }
        }
    }
    out
}

pub fn upto<T>(f: impl Fn(usize) -> Vec<T>, n: usize) -> Vec<T> {
    (1..=n).flat_map(f).collect()
}

/// A copy of `t` with every display name changed.
pub fn rename(t: &STm) -> STm {
    let n = |x: &Name| Name::new(&format!("{}_r", x));
    Rc::new(match &**t {
        SigTerm::Var(i) => SigTerm::Var(*i),
        SigTerm::AppInd(f, a) => SigTerm::AppInd(rename(f), rename(a)),
        SigTerm::AppExt(f, a) => SigTerm::AppExt(rename(f), a.clone()),
        SigTerm::AppInf(f, a) => SigTerm::AppInf(rename(f), a.clone()),
        SigTerm::EqId(a, x, y) => SigTerm::EqId(rename(a), rename(x), rename(y)),
        SigTerm::PiInf(x, a, b) => SigTerm::PiInf(n(x), a.clone(), rename(b)),
        SigTerm::Refl(x) => SigTerm::Refl(rename(x)),
        SigTerm::ReflU(x) => SigTerm::ReflU(rename(x)),
        SigTerm::J { a, t, x, z, p, pr, u, eq } => SigTerm::J {
            a: rename(a),
            t: rename(t),
            x: n(x),
            z: n(z),
            p: rename(p),
            pr: rename(pr),
            u: rename(u),
            eq: rename(eq),
        },
        SigTerm::JBeta { a, t, x, z, p, pr } => {
            SigTerm::JBeta { a: rename(a), t: rename(t), x: n(x), z: n(z), p: rename(p), pr: rename(pr) }
        }
        SigTerm::JU { a, x, z, p, pr, b, eq } => SigTerm::JU {
            a: rename(a),
            x: n(x),
            z: n(z),
            p: rename(p),
            pr: rename(pr),
            b: rename(b),
            eq: rename(eq),
        },
        SigTerm::JBetaU { a, x, z, p, pr } => {
            SigTerm::JBetaU { a: rename(a), x: n(x), z: n(z), p: rename(p), pr: rename(pr) }
        }
    })
}

pub fn rename_ty(t: &STy) -> STy {
    let n = |x: &Name| Name::new(&format!("{}_r", x));
    Rc::new(match &**t {
        SigType::U => SigType::U,
        SigType::El(a) => SigType::El(rename(a)),
        SigType::PiInd(x, a, b) => SigType::PiInd(n(x), rename(a), rename_ty(b)),
        SigType::PiExt(x, a, b) => SigType::PiExt(n(x), a.clone(), rename_ty(b)),
        SigType::EqTyCon(a, b) => SigType::EqTyCon(rename(a), rename(b)),
    })
}

/// The laws, for one term in context `zs` and one replacement.
pub fn term_laws(zs: &[K], t: &STm, r: &STm) {
    let n = zs.len();
    assert!(t.well_scoped(n));
    // Weakening then substituting the new variable is the identity.
    assert_eq!(subst(&shift(t, 0, 1), 0, &Repl::Sig(r.clone())), *t, "{:?}", t);
    assert_eq!(subst(&shift(t, 0, 1), 0, &Repl::Ext(target::tt())), *t, "{:?}", t);
    for c in 0..=n {
        // Weakenings commute.
        assert_eq!(shift(&shift(t, c, 1), 0, 1), shift(&shift(t, 0, 1), c + 1, 1));
        assert!(shift(t, c, 1).well_scoped(n + 1));
    }
    for (j, k) in zs.iter().enumerate() {
        let rep = match k {
            K::Sig => Repl::Sig(r.clone()),
            K::Ext => Repl::Ext(target::var(0)),
        };
        let s = subst(t, j, &rep);
        assert!(s.well_scoped(n - 1), "{:?}", s);
        // Substitution commutes with weakening away from the hole.
        for c in 0..n {
            let shifted_rep = |c: usize| match &rep {
                Repl::Sig(x) => Repl::Sig(shift(x, c, 1)),
                Repl::Ext(x) => Repl::Ext(hiit_forge::target::shift_from(x, c, 1)),
            };
            if j <= c {
                assert_eq!(shift(&s, c, 1), subst(&shift(t, c + 1, 1), j, &shifted_rep(c)), "{:?} j={} c={}", t, j, c);
            } else {
                assert_eq!(shift(&s, c, 1), subst(&shift(t, c, 1), j + 1, &shifted_rep(c)), "{:?} j={} c={}", t, j, c);
            }
        }
        // Substitution respects α-equivalence.
        assert!(alpha_eq(&subst(&rename(t), j, &rep), &s));
    }
    // α-equivalence ignores names and is a congruence.
    let t2 = rename(t);
    assert!(alpha_eq(t, &t2) && alpha_eq(&t2, t) && alpha_eq(t, t));
    assert!(alpha_eq(&app_ind(t.clone(), r.clone()), &app_ind(t2.clone(), rename(r))));
    assert!(alpha_eq(&refl(t.clone()), &refl(t2.clone())));
    assert!(alpha_eq(&eq_id(r.clone(), t.clone(), t.clone()), &eq_id(r.clone(), t2.clone(), t2)));
    assert!(alpha_eq_ty(&el(t.clone()), &el(rename(t))));
}

pub fn type_laws(zs: &[K], a: &STy, r: &STm) {
    let n = zs.len();
    assert!(a.well_scoped(n));
    assert_eq!(subst_ty(&shift_ty(a, 0, 1), 0, &Repl::Sig(r.clone())), *a);
    for c in 0..=n {
        assert_eq!(shift_ty(&shift_ty(a, c, 1), 0, 1), shift_ty(&shift_ty(a, 0, 1), c + 1, 1));
    }
    for (j, k) in zs.iter().enumerate() {
        if *k == K::Sig {
            let s = subst_ty(a, j, &Repl::Sig(r.clone()));
            for c in j..n {
                assert_eq!(shift_ty(&s, c, 1), subst_ty(&shift_ty(a, c + 1, 1), j, &Repl::Sig(shift(r, c, 1))));
            }
            assert!(alpha_eq_ty(&subst_ty(&rename_ty(a), j, &Repl::Sig(r.clone())), &s));
        }
    }
    let a2 = rename_ty(a);
    assert!(alpha_eq_ty(a, &a2) && alpha_eq_ty(&a2, a));
    assert!(alpha_eq_ty(&pi_ind("x", r.clone(), a.clone()), &pi_ind("y", rename(r), a2)));
}

pub const CONTEXTS: [[K; 2]; 4] = [[K::Sig, K::Sig], [K::Sig, K::Ext], [K::Ext, K::Sig], [K::Ext, K::Ext]];

pub struct Rand {
    pub rng: StdRng,
}

impl Rand {
    pub fn ext(&mut self, zs: &[K]) -> Tm {
        let vars: Vec<usize> = zs.iter().enumerate().filter(|(_, k)| **k == K::Ext).map(|(i, _)| i).collect();
        match (self.rng.gen_range(0..4), vars.is_empty()) {
            (0, _) | (_, true) => target::tt(),
            (1, false) => target::lam("y", target::var(vars[self.rng.gen_range(0..vars.len())] + 1)),
            _ => target::var(vars[self.rng.gen_range(0..vars.len())]),
        }
    }

    pub fn var(&mut self, zs: &[K]) -> Option<STm> {
        let vars: Vec<usize> = zs.iter().enumerate().filter(|(_, k)| **k == K::Sig).map(|(i, _)| i).collect();
        (!vars.is_empty()).then(|| v(vars[self.rng.gen_range(0..vars.len())]))
    }

    pub fn tm(&mut self, zs: &[K], fuel: usize) -> STm {
        if fuel == 0 {
            return self.var(zs).unwrap_or_else(|| refl_u(v(0)));
        }
        let f = fuel - 1;
        let two = |zs: &[K]| push(&push(zs, K::Sig), K::Sig);
        match self.rng.gen_range(0..11) {
            0 => app_ind(self.tm(zs, f), self.tm(zs, f)),
            1 => app_ext(self.tm(zs, f), self.ext(zs)),
            2 => app_inf(self.tm(zs, f), self.ext(zs)),
            3 => eq_id(self.tm(zs, f), self.tm(zs, f), self.tm(zs, f)),
            4 => pi_inf("p", self.ext(zs), self.tm(&push(zs, K::Ext), f)),
            5 => refl(self.tm(zs, f)),
            6 => Rc::new(SigTerm::J {
                a: self.tm(zs, f),
                t: self.tm(zs, f),
                x: Name::new("x"),
                z: Name::new("z"),
                p: self.tm(&two(zs), f),
                pr: self.tm(zs, f),
                u: self.tm(zs, f),
                eq: self.tm(zs, f),
            }),
            7 => Rc::new(SigTerm::JBeta {
                a: self.tm(zs, f),
                t: self.tm(zs, f),
                x: Name::new("x"),
                z: Name::new("z"),
                p: self.tm(&two(zs), f),
                pr: self.tm(zs, f),
            }),
            8 => Rc::new(SigTerm::JU {
                a: self.tm(zs, f),
                x: Name::new("x"),
                z: Name::new("z"),
                p: self.tm(&two(zs), f),
                pr: self.tm(zs, f),
                b: self.tm(zs, f),
                eq: self.tm(zs, f),
            }),
            9 => Rc::new(SigTerm::JBetaU {
                a: self.tm(zs, f),
                x: Name::new("x"),
                z: Name::new("z"),
                p: self.tm(&two(zs), f),
                pr: self.tm(zs, f),
            }),
            _ => self.var(zs).unwrap_or_else(|| refl_u(v(0))),
        }
    }
}


/// Checks the laws on every term and type up to size 4 over each 2-entry
/// context. Returns the number of cases.
pub fn exhaustive() -> usize {
    let mut count = 0;
    for zs in CONTEXTS {
        let ts = upto(|s| terms(&zs, s), 4);
        // Replacements live in the context minus one entry; anything
        // closed enough works, so use the terms over a single variable.
        let reps: Vec<STm> = upto(|s| terms(&[K::Sig], s), 3);
        for t in &ts {
            for r in &reps {
                term_laws(&zs, t, r);
                count += 1;
            }
        }
        for a in upto(|s| types(&zs, s), 4) {
            for r in &reps {
                type_laws(&zs, &a, r);
                count += 1;
            }
        }
    }
        count
}

/// Checks the laws on 1000 random terms. Returns how many exceed size 4.
pub fn randomized() -> usize {
    let mut r = Rand { rng: StdRng::seed_from_u64(7) };
    let mut big = 0;
    for i in 0..1000 {
        let n = 2 + i % 3;
        let zs: Vec<K> = (0..n).map(|j| if (i >> j) & 1 == 0 { K::Sig } else { K::Ext }).collect();
        let mut zs = zs;
        zs[0] = K::Sig;
        let t = r.tm(&zs, 4);
        let rep = r.tm(&zs[1..], 2);
        if t.size() > 4 {
            big += 1;
        }
        term_laws(&zs, &t, &rep);
        let a = pi_ind("x", t.clone(), el(shift(&t, 0, 1)));
        type_laws(&zs, &a, &rep);
    }
        big
}
