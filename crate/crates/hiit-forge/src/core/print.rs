//! Debug printer for core syntax, in surface notation.

use super::{STm, STy, SigTerm, SigType, Tele};
use crate::target::print::{show, Scope};

pub fn scope_of(tele: &Tele) -> Scope {
    let mut sc = Scope::default();
    for (n, _) in tele {
        let f = sc.fresh(n.as_str());
        sc.push(f);
    }
    sc
}

pub fn show_ty(t: &STy, sc: &Scope) -> String {
    let mut sc = sc.clone();
    ty(t, &mut sc, false)
}

pub fn show_tm(t: &STm, sc: &Scope) -> String {
    let mut sc = sc.clone();
    tm(t, &mut sc, 0)
}

fn ty(t: &STy, sc: &mut Scope, atom: bool) -> String {
    let s = match &**t {
        SigType::U => return "U".into(),
        SigType::El(a) => return tm(a, sc, if atom { 2 } else { 0 }),
        SigType::PiInd(n, a, b) => {
            let dom = tm(a, sc, 0);
            binder(n.as_str(), dom, b, sc)
        }
        SigType::PiExt(n, a, b) => {
            let dom = show(a, sc);
            binder(n.as_str(), dom, b, sc)
        }
        SigType::EqTyCon(a, b) => format!("{} = {}", tm(a, sc, 1), tm(b, sc, 1)),
    };
    if atom {
        format!("({})", s)
    } else {
        s
    }
}

fn binder(n: &str, dom: String, b: &STy, sc: &mut Scope) -> String {
    if b.mentions(0) {
        let x = sc.fresh(n);
        sc.push(x.clone());
        let body = ty(b, sc, false);
        sc.pop();
        format!("({} : {}) -> {}", x, dom, body)
    } else {
        sc.push("_".into());
        let body = ty(b, sc, false);
        sc.pop();
        format!("({}) -> {}", dom, body)
    }
}

/// `prec`: 0 top, 1 application, 2 atom.
fn tm(t: &STm, sc: &mut Scope, prec: u8) -> String {
    let (s, level) = match &**t {
        SigTerm::Var(i) => (sc.get(*i).map_or_else(|| format!("#{}", i), str::to_string), 2),
        SigTerm::AppInd(f, a) => (format!("{} {}", tm(f, sc, 1), tm(a, sc, 2)), 1),
        SigTerm::AppExt(f, a) | SigTerm::AppInf(f, a) => {
            (format!("{} ({})", tm(f, sc, 1), show(a, sc)), 1)
        }
        SigTerm::EqId(a, x, y) => (format!("Id {} {} {}", tm(a, sc, 2), tm(x, sc, 2), tm(y, sc, 2)), 1),
        SigTerm::PiInf(n, a, b) => {
            let dom = show(a, sc);
            let x = sc.fresh(n.as_str());
            sc.push(x.clone());
            let body = tm(b, sc, 0);
            sc.pop();
            (format!("({} : {}) -> {}", x, dom, body), 0)
        }
        SigTerm::Refl(_) | SigTerm::ReflU(_) => ("refl".into(), 2),
        SigTerm::J { a, t, x, z, p, pr, u, eq } => {
            let m = motive(x.as_str(), z.as_str(), p, sc);
            let s = format!(
                "J {} {} {} {} {} {}",
                tm(a, sc, 2),
                tm(t, sc, 2),
                m,
                tm(pr, sc, 2),
                tm(u, sc, 2),
                tm(eq, sc, 2)
            );
            (s, 1)
        }
        SigTerm::JBeta { a, t, x, z, p, pr } => {
            let m = motive(x.as_str(), z.as_str(), p, sc);
            (format!("Jbeta {} {} {} {}", tm(a, sc, 2), tm(t, sc, 2), m, tm(pr, sc, 2)), 1)
        }
        SigTerm::JU { a, x, z, p, pr, b, eq } => {
            let m = motive(x.as_str(), z.as_str(), p, sc);
            let s = format!("J {} {} {} {} {}", tm(a, sc, 2), m, tm(pr, sc, 2), tm(b, sc, 2), tm(eq, sc, 2));
            (s, 1)
        }
        SigTerm::JBetaU { a, x, z, p, pr } => {
            let m = motive(x.as_str(), z.as_str(), p, sc);
            (format!("Jbeta {} {} {}", tm(a, sc, 2), m, tm(pr, sc, 2)), 1)
        }
    };
    if level < prec {
        format!("({})", s)
    } else {
        s
    }
}

fn motive(x: &str, z: &str, p: &STm, sc: &mut Scope) -> String {
    let x = sc.fresh(x);
    sc.push(x.clone());
    let z = sc.fresh(z);
    sc.push(z.clone());
    let body = tm(p, sc, 0);
    sc.pop();
    sc.pop();
    format!("({} {}. {})", x, z, body)
}
