//! Target terms with globally unique binder ids.
//!
//! Translation clauses are easiest to write with named binders built by
//! closures; the result is converted to de Bruijn form once at the end.

use std::cell::Cell;
use std::rc::Rc;

use crate::name::Name;
use crate::target::{self, JElim, Prim, Term, Tm};

pub type N = Rc<NT>;

pub enum NT {
    Type(u8),
    V(u32),
    Pi(u32, Name, N, N),
    Lam(u32, Name, N),
    App(N, N),
    Sigma(u32, Name, N, N),
    Pair(N, N),
    Proj1(N),
    Proj2(N),
    Unit,
    Tt,
    Eq(N, N, N),
    Refl,
    J(Box<NJ>),
    Const(Prim),
}

pub struct NJ {
    pub ty: N,
    pub base: N,
    pub x: (u32, Name),
    pub z: (u32, Name),
    pub motive: N,
    pub pr: N,
    pub end: N,
    pub path: N,
}

/// Source of fresh binder ids.
#[derive(Default)]
pub struct Gen {
    next: Cell<u32>,
}

impl Gen {
    pub fn fresh(&self) -> u32 {
        let k = self.next.get();
        self.next.set(k + 1);
        k
    }

    pub fn lam(&self, n: &str, f: impl FnOnce(N) -> N) -> N {
        let k = self.fresh();
        Rc::new(NT::Lam(k, Name::new(n), f(v(k))))
    }

    pub fn lams(&self, ns: &[&str], f: impl FnOnce(&[N]) -> N) -> N {
        let ks: Vec<u32> = ns.iter().map(|_| self.fresh()).collect();
        let vs: Vec<N> = ks.iter().map(|&k| v(k)).collect();
        let mut body = f(&vs);
        for (k, n) in ks.iter().zip(ns).rev() {
            body = Rc::new(NT::Lam(*k, Name::new(n), body));
        }
        body
    }

    pub fn pi(&self, n: &str, a: N, f: impl FnOnce(N) -> N) -> N {
        let k = self.fresh();
        Rc::new(NT::Pi(k, Name::new(n), a, f(v(k))))
    }

    pub fn arrow(&self, a: N, b: N) -> N {
        Rc::new(NT::Pi(self.fresh(), Name::new("_"), a, b))
    }

    pub fn sigma(&self, n: &str, a: N, f: impl FnOnce(N) -> N) -> N {
        let k = self.fresh();
        Rc::new(NT::Sigma(k, Name::new(n), a, f(v(k))))
    }

    /// `J ty base (λ x z → motive) pr end path`.
    #[allow(clippy::too_many_arguments)]
    pub fn j(&self, ty: N, base: N, xn: &str, zn: &str, motive: impl FnOnce(N, N) -> N, pr: N, end: N, path: N) -> N {
        let (kx, kz) = (self.fresh(), self.fresh());
        let motive = motive(v(kx), v(kz));
        Rc::new(NT::J(Box::new(NJ {
            ty,
            base,
            x: (kx, Name::new(xn)),
            z: (kz, Name::new(zn)),
            motive,
            pr,
            end,
            path,
        })))
    }

    /// Imports a de Bruijn term; free index `i` is resolved by `free(i)`.
    pub fn import(&self, t: &Tm, free: &dyn Fn(usize) -> N) -> N {
        let mut locals = Vec::new();
        self.import_in(t, free, &mut locals)
    }

    fn import_in(&self, t: &Tm, free: &dyn Fn(usize) -> N, locals: &mut Vec<u32>) -> N {
        let bind = |n: &Name, body: &Tm, locals: &mut Vec<u32>| {
            let k = self.fresh();
            locals.push(k);
            let b = self.import_in(body, free, locals);
            locals.pop();
            (k, n.clone(), b)
        };
        match &**t {
            Term::Type(l) => Rc::new(NT::Type(*l)),
            Term::Var(i) => {
                if *i < locals.len() {
                    v(locals[locals.len() - 1 - i])
                } else {
                    free(i - locals.len())
                }
            }
            Term::Pi(n, a, b) => {
                let a = self.import_in(a, free, locals);
                let (k, n, b) = bind(n, b, locals);
                Rc::new(NT::Pi(k, n, a, b))
            }
            Term::Lam(n, b) => {
                let (k, n, b) = bind(n, b, locals);
                Rc::new(NT::Lam(k, n, b))
            }
            Term::App(f, a) => app(self.import_in(f, free, locals), self.import_in(a, free, locals)),
            Term::Sigma(n, a, b) => {
                let a = self.import_in(a, free, locals);
                let (k, n, b) = bind(n, b, locals);
                Rc::new(NT::Sigma(k, n, a, b))
            }
            Term::Pair(a, b) => Rc::new(NT::Pair(self.import_in(a, free, locals), self.import_in(b, free, locals))),
            Term::Proj1(p) => proj1(self.import_in(p, free, locals)),
            Term::Proj2(p) => proj2(self.import_in(p, free, locals)),
            Term::Unit => unit(),
            Term::Tt => Rc::new(NT::Tt),
            Term::Eq(a, x, y) => {
                id(self.import_in(a, free, locals), self.import_in(x, free, locals), self.import_in(y, free, locals))
            }
            Term::Refl => refl(),
            Term::Const(p) => Rc::new(NT::Const(*p)),
            Term::J(j) => {
                let ty = self.import_in(&j.ty, free, locals);
                let base = self.import_in(&j.base, free, locals);
                let (kx, kz) = (self.fresh(), self.fresh());
                locals.push(kx);
                locals.push(kz);
                let motive = self.import_in(&j.motive, free, locals);
                locals.pop();
                locals.pop();
                Rc::new(NT::J(Box::new(NJ {
                    ty,
                    base,
                    x: (kx, j.x.clone()),
                    z: (kz, j.z.clone()),
                    motive,
                    pr: self.import_in(&j.pr, free, locals),
                    end: self.import_in(&j.end, free, locals),
                    path: self.import_in(&j.path, free, locals),
                })))
            }
        }
    }
}

pub fn v(k: u32) -> N {
    Rc::new(NT::V(k))
}

pub fn ty(l: u8) -> N {
    Rc::new(NT::Type(l))
}

pub fn app(f: N, a: N) -> N {
    Rc::new(NT::App(f, a))
}

pub fn apps(f: N, args: &[N]) -> N {
    args.iter().fold(f, |f, a| app(f, a.clone()))
}

pub fn pair(a: N, b: N) -> N {
    Rc::new(NT::Pair(a, b))
}

pub fn proj1(p: N) -> N {
    Rc::new(NT::Proj1(p))
}

pub fn proj2(p: N) -> N {
    Rc::new(NT::Proj2(p))
}

pub fn unit() -> N {
    Rc::new(NT::Unit)
}

pub fn id(a: N, x: N, y: N) -> N {
    Rc::new(NT::Eq(a, x, y))
}

pub fn refl() -> N {
    Rc::new(NT::Refl)
}

pub fn prim(p: Prim, args: &[N]) -> N {
    apps(Rc::new(NT::Const(p)), args)
}

/// Converts to de Bruijn form. `scope` lists the ids bound outside, outermost
/// first; an id missing from scope is a construction bug.
pub fn to_tm(t: &N, scope: &[u32]) -> Tm {
    let mut stack = scope.to_vec();
    go(t, &mut stack)
}

fn go(t: &N, stack: &mut Vec<u32>) -> Tm {
    let under = |k: u32, b: &N, stack: &mut Vec<u32>| {
        stack.push(k);
        let r = go(b, stack);
        stack.pop();
        r
    };
    Rc::new(match &**t {
        NT::Type(l) => Term::Type(*l),
        NT::V(k) => {
            let pos = stack.iter().rposition(|x| x == k).unwrap_or_else(|| panic!("unbound id {}", k));
            Term::Var(stack.len() - 1 - pos)
        }
        NT::Pi(k, n, a, b) => Term::Pi(n.clone(), go(a, stack), under(*k, b, stack)),
        NT::Lam(k, n, b) => Term::Lam(n.clone(), under(*k, b, stack)),
        NT::App(f, a) => Term::App(go(f, stack), go(a, stack)),
        NT::Sigma(k, n, a, b) => Term::Sigma(n.clone(), go(a, stack), under(*k, b, stack)),
        NT::Pair(a, b) => Term::Pair(go(a, stack), go(b, stack)),
        NT::Proj1(p) => Term::Proj1(go(p, stack)),
        NT::Proj2(p) => Term::Proj2(go(p, stack)),
        NT::Unit => Term::Unit,
        NT::Tt => Term::Tt,
        NT::Eq(a, x, y) => Term::Eq(go(a, stack), go(x, stack), go(y, stack)),
        NT::Refl => Term::Refl,
        NT::Const(p) => Term::Const(*p),
        NT::J(j) => {
            let ty = go(&j.ty, stack);
            let base = go(&j.base, stack);
            stack.push(j.x.0);
            stack.push(j.z.0);
            let motive = go(&j.motive, stack);
            stack.pop();
            stack.pop();
            Term::J(Rc::new(JElim {
                ty,
                base,
                x: j.x.1.clone(),
                z: j.z.1.clone(),
                motive,
                pr: go(&j.pr, stack),
                end: go(&j.end, stack),
                path: go(&j.path, stack),
            }))
        }
    })
}

/// β and projection-β normal form. Constants and `J` are left alone.
pub fn normalize(t: &Tm) -> Tm {
    use target::{instantiate, Term as T};
    match &**t {
        T::Type(_) | T::Var(_) | T::Unit | T::Tt | T::Refl | T::Const(_) => t.clone(),
        T::Pi(n, a, b) => Rc::new(T::Pi(n.clone(), normalize(a), normalize(b))),
        T::Lam(n, b) => Rc::new(T::Lam(n.clone(), normalize(b))),
        T::Sigma(n, a, b) => Rc::new(T::Sigma(n.clone(), normalize(a), normalize(b))),
        T::App(f, a) => {
            let f = normalize(f);
            let a = normalize(a);
            match &*f {
                T::Lam(_, b) => normalize(&instantiate(b, &a)),
                _ => target::app(f, a),
            }
        }
        T::Pair(a, b) => target::pair(normalize(a), normalize(b)),
        T::Proj1(p) => {
            let p = normalize(p);
            match &*p {
                T::Pair(a, _) => a.clone(),
                _ => target::proj1(p),
            }
        }
        T::Proj2(p) => {
            let p = normalize(p);
            match &*p {
                T::Pair(_, b) => b.clone(),
                _ => target::proj2(p),
            }
        }
        T::Eq(a, x, y) => target::eq(normalize(a), normalize(x), normalize(y)),
        T::J(j) => target::j_elim(JElim {
            ty: normalize(&j.ty),
            base: normalize(&j.base),
            x: j.x.clone(),
            z: j.z.clone(),
            motive: normalize(&j.motive),
            pr: normalize(&j.pr),
            end: normalize(&j.end),
            path: normalize(&j.path),
        }),
    }
}
