use hiit_forge::target::parse::{parse_defs, parse_term};
use hiit_forge::target::prelude::ALL;
use hiit_forge::target::print::show_closed;
use hiit_forge::target::*;
use hiit_forge::name::Name;
use std::rc::Rc;

#[test]
fn prelude_constants_typecheck() {
    let k = Kernel::default();
    for p in ALL {
        let mut ctx = Ctx::new();
        k.refuel();
        k.check_type(&mut ctx, &p.ty()).unwrap_or_else(|e| panic!("{}: {}", p.name(), e));
        k.check(&mut ctx, &p.def(), &p.ty()).unwrap_or_else(|e| panic!("{}: {}", p.name(), e));
    }
}

#[test]
fn prelude_prints_and_reparses() {
    for p in ALL {
        for t in [p.ty(), p.def()] {
            let s = show_closed(&t);
            let back = parse_term(&s, &[]).unwrap_or_else(|e| panic!("{}: {}", s, e));
            assert_eq!(back, t, "{}", s);
        }
    }
}

#[test]
fn definitions_file_substitutes_earlier_values() {
    let defs = parse_defs("N = ⊤ → ⊤\nf : N\nf = λ x → x\n").unwrap();
    assert_eq!(defs.len(), 2);
    assert_eq!(defs[1].ty.clone().unwrap(), arrow(unit(), unit()));
}

fn small_ctx() -> Ctx {
    let mut ctx = Ctx::new();
    ctx.assume("A", ty(0));
    ctx.assume("a", var(0));
    // g = λ x → x, q = (a , a), h = λ f → f: definitions give δβ-redexes.
    ctx.define("g", arrow(var(1), var(1)), lam("x", var(0)));
    ctx.define("q", sigma("_", var(2), var(3)), pair(var(1), var(1)));
    let endo = arrow(var(3), var(3));
    ctx.define("h", arrow(endo.clone(), endo), lam("f", var(0)));
    ctx
}

#[test]
fn whnf_examples() {
    let k = Kernel::default();
    let ctx = small_ctx();
    let beta = app(lam("x", var(0)), tt());
    assert_eq!(k.whnf(&ctx, &beta).unwrap(), tt());
    let sigma_beta = proj1(pair(var(3), tt()));
    assert_eq!(k.whnf(&ctx, &sigma_beta).unwrap(), var(3));
    let j = j_elim(JElim {
        ty: var(4),
        base: var(3),
        x: Name::new("x"),
        z: Name::new("z"),
        motive: var(6),
        pr: var(3),
        end: var(3),
        path: refl(),
    });
    assert_eq!(k.whnf(&ctx, &j).unwrap(), var(3));
    // Definitions unfold at the head.
    assert_eq!(k.whnf(&ctx, &app(var(2), var(3))).unwrap(), var(3));
    assert_eq!(k.whnf(&ctx, &proj2(var(1))).unwrap(), var(3));
}

#[test]
fn check_examples() {
    let k = Kernel::default();
    let mut ctx = small_ctx();
    k.check(&mut ctx, &lam("x", var(0)), &arrow(var(4), var(4))).unwrap();
    let err = k.check(&mut ctx, &tt(), &ty(0)).unwrap_err();
    assert!(!err.to_string().is_empty());
    // Unbound variables and universe overflow are rejected, not panics.
    assert!(k.infer(&mut ctx, &var(40)).is_err());
    assert!(k.check_type(&mut ctx, &ty(MAX_LEVEL + 1)).is_err());
    // Cumulativity: Set₀ inhabits Set₂.
    k.check(&mut ctx, &ty(0), &ty(2)).unwrap();
}

#[test]
fn eta_for_functions_pairs_and_unit() {
    let k = Kernel::default();
    let mut ctx = small_ctx();
    ctx.assume("f", arrow(var(4), var(4)));
    ctx.assume("p", sigma("_", var(5), var(6)));
    ctx.assume("u", unit());
    let eta_f = lam("x", app(var(3), var(0)));
    assert!(k.conv(&mut ctx, &eta_f, &var(2)).unwrap());
    let eta_p = pair(proj1(var(1)), proj2(var(1)));
    assert!(k.conv(&mut ctx, &eta_p, &var(1)).unwrap());
    assert!(k.conv(&mut ctx, &var(0), &tt()).unwrap());
    assert!(!k.conv(&mut ctx, &var(2), &lam("x", var(7))).unwrap());
}

fn rename(t: &Tm) -> Tm {
    let n = || Name::new("v");
    Rc::new(match &**t {
        Term::Pi(_, a, b) => Term::Pi(n(), rename(a), rename(b)),
        Term::Lam(_, b) => Term::Lam(n(), rename(b)),
        Term::Sigma(_, a, b) => Term::Sigma(n(), rename(a), rename(b)),
        Term::App(a, b) => Term::App(rename(a), rename(b)),
        Term::Pair(a, b) => Term::Pair(rename(a), rename(b)),
        Term::Proj1(a) => Term::Proj1(rename(a)),
        Term::Proj2(a) => Term::Proj2(rename(a)),
        Term::Eq(a, x, y) => Term::Eq(rename(a), rename(x), rename(y)),
        Term::J(j) => Term::J(Rc::new(JElim {
            ty: rename(&j.ty),
            base: rename(&j.base),
            x: n(),
            z: n(),
            motive: rename(&j.motive),
            pr: rename(&j.pr),
            end: rename(&j.end),
            path: rename(&j.path),
        })),
        other => other.clone(),
    })
}

#[test]
fn checking_ignores_display_names() {
    let k = Kernel::default();
    for p in ALL {
        let mut ctx = Ctx::new();
        let (def, ty) = (rename(&p.def()), rename(&p.ty()));
        assert_eq!(def, p.def());
        k.check(&mut ctx, &def, &ty).unwrap_or_else(|e| panic!("{}: {}", p.name(), e));
    }
}

/// Every term of exactly size `s` over `n` variables, well-typed or not.
fn enumerate(n: usize, s: usize) -> Vec<Tm> {
    let mut out = Vec::new();
    if s == 1 {
        out.extend((0..n).map(var));
        out.extend([tt(), unit(), ty(0), refl()]);
        return out;
    }
    let r = s - 1;
    for b in enumerate(n + 1, r) {
        out.push(lam("x", b));
    }
    for t in enumerate(n, r) {
        out.push(proj1(t.clone()));
        out.push(proj2(t));
    }
    for a in 1..r {
        for x in enumerate(n, a) {
            for y in enumerate(n, r - a) {
                out.push(app(x.clone(), y.clone()));
                out.push(pair(x.clone(), y));
            }
            for y in enumerate(n + 1, r - a) {
                out.push(pi("x", x.clone(), y.clone()));
                out.push(sigma("x", x.clone(), y));
            }
        }
    }
    for a in 1..r {
        for b in 1..r - a {
            let c = r - a - b;
            if c == 0 {
                continue;
            }
            for x in enumerate(n, a) {
                for y in enumerate(n, b) {
                    for z in enumerate(n, c) {
                        out.push(eq(x.clone(), y.clone(), z));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn subject_reduction_on_small_terms() {
    let k = Kernel::default();
    let ctx = small_ctx();
    let n = ctx.len();
    // Candidate types, in the scope of `small_ctx`.
    let goals = [
        var(4),
        arrow(var(4), var(4)),
        ty(0),
        ty(1),
        unit(),
        sigma("_", var(4), var(5)),
        eq(var(4), var(3), var(3)),
    ];
    let (mut typed, mut reduced) = (0, 0);
    for s in 1..=5 {
        for t in enumerate(n, s) {
            let mut c = ctx.clone();
            k.refuel();
            if let Ok(inferred) = k.infer(&mut c, &t) {
                let w = k.whnf(&c, &t).unwrap();
                if w != t {
                    reduced += 1;
                }
                k.refuel();
                k.check(&mut c, &w, &inferred).unwrap_or_else(|e| panic!("{:?} ~> {:?}: {}", t, w, e));
                typed += 1;
            }
            for g in &goals {
                k.refuel();
                if k.check(&mut c, &t, g).is_ok() {
                    let w = k.whnf(&c, &t).unwrap();
                    if w != t {
                        reduced += 1;
                    }
                    k.check(&mut c, &w, g).unwrap_or_else(|e| panic!("{:?} ~> {:?} : {:?}: {}", t, w, g, e));
                    typed += 1;
                }
            }
        }
    }
    assert!(typed > 500 && reduced > 20, "typed {} reduced {}", typed, reduced);
}
