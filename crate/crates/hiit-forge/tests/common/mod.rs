//! Shared helpers for the integration tests: corpus access and a random
//! generator of well-typed signatures.
#![allow(dead_code)]

pub mod laws;

use std::fs;
use std::path::{Path, PathBuf};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use hiit_forge::checker::core_check::{inst2, j_path_ty, ju_path_ty, kernel_ctx, Conv, CoreChecker};
use hiit_forge::core::print::{scope_of, show_ty};
use hiit_forge::core::*;
use hiit_forge::name::Name;
use hiit_forge::target::print::show;
use hiit_forge::target::{self, Kernel, Tm};

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).to_path_buf()
}

/// `(stem, source)` for every `.hiit` file in a corpus directory, sorted.
pub fn corpus(dir: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = fs::read_dir(root().join(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "hiit"))
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

/// Candidate external parameters; a prefix-closed subset is used per signature.
const PARAMS: [&str; 4] = ["A", "a", "f", "P"];

fn param_ty(name: &str) -> Tm {
    use target::{arrow, ty, var};
    match name {
        "A" => ty(0),
        "a" => var(0),
        "f" => arrow(var(1), var(1)),
        "P" => arrow(var(2), ty(0)),
        _ => unreachable!(),
    }
}

/// Random well-typed signatures. Terms are built type-directed where that
/// is cheap and otherwise guessed and kept only if the core checker infers
/// the wanted type.
pub struct SigGen<'k> {
    pub rng: StdRng,
    kernel: &'k Kernel,
    pub max_depth: usize,
    names: usize,
}

impl<'k> SigGen<'k> {
    pub fn new(kernel: &'k Kernel, seed: u64) -> Self {
        SigGen { rng: StdRng::seed_from_u64(seed), kernel, max_depth: 5, names: 0 }
    }

    fn chk(&self) -> CoreChecker<'k> {
        CoreChecker { kernel: self.kernel }
    }

    fn conv(&self, tele: &mut Tele, a: &STy, b: &STy) -> bool {
        Conv { kernel: self.kernel }.ty(tele, a, b)
    }

    fn conv_tm(&self, tele: &mut Tele, a: &STm, b: &STm) -> bool {
        Conv { kernel: self.kernel }.tm(tele, a, b)
    }

    fn name(&mut self, base: &str) -> Name {
        self.names += 1;
        Name::new(&format!("{}{}", base, self.names))
    }

    /// A signature with at most `max_decls` declarations.
    pub fn signature(&mut self, max_decls: usize) -> SigContext {
        self.names = 0;
        let np = self.rng.gen_range(0..=PARAMS.len());
        let mut sc = SigContext::default();
        for p in &PARAMS[..np] {
            sc.ext.push((Name::new(p), param_ty(p)));
        }
        let want = self.rng.gen_range(1..=max_decls);
        let mut tele = sc.tele();
        let mut tries = 0;
        while sc.sig.len() < want && tries < 40 {
            tries += 1;
            let first = sc.sig.is_empty();
            let Some(a) = self.decl(&mut tele, first) else { continue };
            if ty_depth(&a) > self.max_depth || self.chk().check_ty(&mut tele, &a).is_err() {
                continue;
            }
            let n = if is_sort(&a) { self.name("S") } else { self.name("c") };
            tele.push((n.clone(), Zone::Sig(a.clone())));
            sc.sig.push((n, a));
        }
        sc
    }

    fn decl(&mut self, tele: &mut Tele, first: bool) -> Option<STy> {
        if first || self.rng.gen_bool(0.2) {
            let n = self.rng.gen_range(0..=1);
            return self.telescope(tele, n, &|_, _| Some(u()));
        }
        let nargs = self.rng.gen_range(0..=2);
        match self.rng.gen_range(0..10) {
            0 => self.telescope(tele, nargs, &|g, t| {
                let a = g.small(t, 2)?;
                let b = g.small(t, 2)?;
                Some(eq_u(a, b))
            }),
            1..=3 => self.telescope(tele, nargs, &|g, t| {
                let d = g.max_depth - 1;
                let (x, a) = g.synth(t, d)?;
                let SigType::El(a) = &*a else { return None };
                let y = if g.rng.gen_bool(0.4) { x.clone() } else { g.term_of(t, &el(a.clone()), d)? };
                Some(el(eq_id(a.clone(), x, y)))
            }),
            // A bare infinitary codomain would read back as external binders.
            _ => self.telescope(tele, nargs, &|g, t| {
                let c = g.small(t, 3)?;
                (!matches!(&*c, SigTerm::PiInf(..))).then(|| el(c))
            }),
        }
    }

    /// `n` argument binders followed by a codomain built by `body`.
    fn telescope(
        &mut self,
        tele: &mut Tele,
        n: usize,
        body: &dyn Fn(&mut Self, &mut Tele) -> Option<STy>,
    ) -> Option<STy> {
        if n == 0 {
            return body(self, tele);
        }
        let x = self.name("x");
        let ext = self.ext_types(tele);
        let pick = self.rng.gen_range(0..3);
        if pick == 0 && !ext.is_empty() {
            let d = ext.choose(&mut self.rng).unwrap().clone();
            tele.push((x.clone(), Zone::Ext(d.clone())));
            let b = self.telescope(tele, n - 1, body);
            tele.pop();
            return Some(pi_ext(x.as_str(), d, b?));
        }
        let d = if pick == 1 && !ext.is_empty() {
            let k = ext.choose(&mut self.rng).unwrap().clone();
            let y = self.name("y");
            tele.push((y.clone(), Zone::Ext(k.clone())));
            let b = self.small(tele, 2);
            tele.pop();
            pi_inf(y.as_str(), k, b?)
        } else {
            self.small(tele, 3)?
        };
        tele.push((x.clone(), Zone::Sig(el(d.clone()))));
        let b = self.telescope(tele, n - 1, body);
        tele.pop();
        Some(pi_ind(x.as_str(), d, b?))
    }

    /// External types in `Set` available in `tele`.
    fn ext_types(&mut self, tele: &Tele) -> Vec<Tm> {
        let mut out = Vec::new();
        let set = target::ty(0);
        for i in 0..tele.len() {
            if let Zone::Ext(_) = tele[tele.len() - 1 - i].1 {
                if self.ext_has(tele, &target::var(i), &set) {
                    out.push(target::var(i));
                } else if let Some(arg) = self.ext_arg_for_family(tele, i) {
                    out.push(target::app(target::var(i), arg));
                }
            }
        }
        out
    }

    fn ext_arg_for_family(&mut self, tele: &Tele, i: usize) -> Option<Tm> {
        let mut ctx = kernel_ctx(tele);
        self.kernel.refuel();
        let t = self.kernel.infer(&mut ctx, &target::var(i)).ok()?;
        match &*self.kernel.whnf(&ctx, &t).ok()? {
            target::Term::Pi(_, d, b) if **b == target::Term::Type(0) => self.ext_term(tele, d),
            _ => None,
        }
    }

    fn ext_has(&self, tele: &Tele, t: &Tm, a: &Tm) -> bool {
        let mut ctx = kernel_ctx(tele);
        self.kernel.refuel();
        self.kernel.check(&mut ctx, t, a).is_ok()
    }

    /// An external term of type `a`: a variable, possibly under one function.
    fn ext_term(&mut self, tele: &Tele, a: &Tm) -> Option<Tm> {
        let mut cands = Vec::new();
        for i in 0..tele.len() {
            if let Zone::Ext(_) = tele[tele.len() - 1 - i].1 {
                let x = target::var(i);
                if self.ext_has(tele, &x, a) {
                    cands.push(x.clone());
                }
                for j in 0..tele.len() {
                    let fx = target::app(target::var(j), x.clone());
                    if self.ext_has(tele, &fx, a) {
                        cands.push(fx);
                    }
                }
            }
        }
        cands.choose(&mut self.rng).cloned()
    }

    /// A term of `U`.
    fn small(&mut self, tele: &mut Tele, depth: usize) -> Option<STm> {
        self.term_of(tele, &u(), depth)
    }

    /// A term of type `goal` of depth at most `depth`.
    pub fn term_of(&mut self, tele: &mut Tele, goal: &STy, depth: usize) -> Option<STm> {
        if depth == 0 {
            return None;
        }
        for _ in 0..12 {
            if let Some(t) = self.try_term_of(tele, goal, depth) {
                if self.chk().expect(tele, &t, goal).is_ok() {
                    return Some(t);
                }
            }
        }
        None
    }

    fn try_term_of(&mut self, tele: &mut Tele, goal: &STy, depth: usize) -> Option<STm> {
        let roll = self.rng.gen_range(0..10);
        match &**goal {
            SigType::U if roll < 2 && depth > 1 => {
                let (x, a) = self.synth(tele, depth - 1)?;
                let SigType::El(a) = &*a else { return None };
                let y = self.term_of(tele, &el(a.clone()), depth - 1).unwrap_or_else(|| x.clone());
                Some(eq_id(a.clone(), x, y))
            }
            SigType::U if roll < 3 && depth > 1 => {
                let ext = self.ext_types(tele);
                let k = ext.choose(&mut self.rng)?.clone();
                let y = self.name("y");
                tele.push((y.clone(), Zone::Ext(k.clone())));
                let b = self.small(tele, depth - 1);
                tele.pop();
                Some(pi_inf(y.as_str(), k, b?))
            }
            SigType::El(a) if roll < 3 => {
                if let SigTerm::EqId(_, x, y) = &**a {
                    if self.conv_tm(tele, x, y) {
                        return Some(refl(x.clone()));
                    }
                }
                if roll < 2 && depth > 1 {
                    return self.j_const(tele, a, depth);
                }
                self.spine(tele, goal, depth)
            }
            SigType::EqTyCon(a, b) if roll < 3 && self.conv_tm(tele, a, b) => Some(refl_u(a.clone())),
            _ => self.spine(tele, goal, depth),
        }
    }

    /// `J a t (x z. c) pr u e` with a motive not mentioning its binders.
    fn j_const(&mut self, tele: &mut Tele, c: &STm, depth: usize) -> Option<STm> {
        let (e, ety) = self.synth_path(tele, depth - 1)?;
        let SigType::El(p) = &*ety else { return None };
        let SigTerm::EqId(a, t, end) = &**p else { return None };
        let pr = self.term_of(tele, &el(c.clone()), depth - 1)?;
        Some(j(a, t, shift(c, 0, 2), pr, end.clone(), e))
    }

    fn synth_path(&mut self, tele: &mut Tele, depth: usize) -> Option<(STm, STy)> {
        for _ in 0..8 {
            if let Some((e, t)) = self.synth(tele, depth) {
                if let SigType::El(p) = &*t {
                    if matches!(&**p, SigTerm::EqId(..)) {
                        return Some((e, t));
                    }
                }
            }
        }
        None
    }

    /// A variable applied to arguments, kept if its type is `goal`.
    fn spine(&mut self, tele: &mut Tele, goal: &STy, depth: usize) -> Option<STm> {
        let (t, ty) = self.var_spine(tele, depth, true)?;
        self.conv(tele, &ty, goal).then_some(t)
    }

    fn var_spine(&mut self, tele: &mut Tele, depth: usize, saturate: bool) -> Option<(STm, STy)> {
        let sig: Vec<usize> =
            (0..tele.len()).filter(|i| matches!(tele[tele.len() - 1 - i].1, Zone::Sig(_))).collect();
        let i = *sig.choose(&mut self.rng)?;
        let mut t = v(i);
        let mut ty = self.chk().infer(tele, &t).ok()?;
        loop {
            if !saturate && self.rng.gen_bool(0.3) {
                break;
            }
            match &*ty.clone() {
                SigType::PiInd(_, d, b) => {
                    let a = self.term_of(tele, &el(d.clone()), depth.saturating_sub(1))?;
                    ty = subst_ty(b, 0, &Repl::Sig(a.clone()));
                    t = app_ind(t, a);
                }
                SigType::PiExt(_, d, b) => {
                    let a = self.ext_term(tele, d)?;
                    ty = subst_ty(b, 0, &Repl::Ext(a.clone()));
                    t = app_ext(t, a);
                }
                SigType::El(p) => match &**p {
                    SigTerm::PiInf(_, d, b) if self.rng.gen_bool(0.7) => {
                        let a = self.ext_term(tele, d)?;
                        ty = el(subst(b, 0, &Repl::Ext(a.clone())));
                        t = app_inf(t, a);
                    }
                    _ => break,
                },
                _ => break,
            }
        }
        Some((t, ty))
    }

    /// Any well-typed term together with its type.
    pub fn synth(&mut self, tele: &mut Tele, depth: usize) -> Option<(STm, STy)> {
        if depth == 0 {
            return None;
        }
        let t = match self.rng.gen_range(0..12) {
            0 if depth > 1 => {
                let (x, _) = self.element(tele, depth - 1)?;
                refl(x)
            }
            1 | 2 if depth > 2 => self.j_general(tele, depth, false)?,
            3 if depth > 2 => self.j_general(tele, depth, true)?,
            4 if depth > 2 => self.ju_general(tele, depth)?,
            _ => return self.var_spine(tele, depth, true),
        };
        let ty = self.chk().infer(tele, &t).ok()?;
        Some((t, ty))
    }

    fn element(&mut self, tele: &mut Tele, depth: usize) -> Option<(STm, STm)> {
        for _ in 0..6 {
            if let Some((t, ty)) = self.synth(tele, depth) {
                if let SigType::El(a) = &*ty {
                    return Some((t, a.clone()));
                }
            }
        }
        None
    }

    /// `J` (or `Jbeta`) with a motive drawn from the extended scope.
    fn j_general(&mut self, tele: &mut Tele, depth: usize, beta: bool) -> Option<STm> {
        let (t, a) = self.element(tele, depth - 2)?;
        let (x, z) = (Name::new("x"), Name::new("z"));
        tele.push((x.clone(), Zone::Sig(el(a.clone()))));
        tele.push((z.clone(), Zone::Sig(j_path_ty(&a, &t))));
        let p = self.small(tele, depth - 1);
        tele.pop();
        tele.pop();
        let p = p?;
        let pr = self.term_of(tele, &el(inst2(&p, &t, &refl(t.clone()))), depth - 1)?;
        if beta {
            return Some(std::rc::Rc::new(SigTerm::JBeta { a, t, x, z, p, pr }));
        }
        let end = if self.rng.gen_bool(0.5) { t.clone() } else { self.term_of(tele, &el(a.clone()), depth - 1)? };
        let e = self.term_of(tele, &el(eq_id(a.clone(), t.clone(), end.clone())), depth - 1)?;
        Some(std::rc::Rc::new(SigTerm::J { a, t, x, z, p, pr, u: end, eq: e }))
    }

    /// `J` or `Jbeta` over a path of type constructors.
    fn ju_general(&mut self, tele: &mut Tele, depth: usize) -> Option<STm> {
        let a = self.small(tele, 2)?;
        let (x, z) = (Name::new("X"), Name::new("w"));
        tele.push((x.clone(), Zone::Sig(u())));
        tele.push((z.clone(), Zone::Sig(ju_path_ty(&a))));
        let p = self.small(tele, depth - 1);
        tele.pop();
        tele.pop();
        let p = p?;
        let pr = self.term_of(tele, &el(inst2(&p, &a, &refl_u(a.clone()))), depth - 1)?;
        if self.rng.gen_bool(0.4) {
            return Some(std::rc::Rc::new(SigTerm::JBetaU { a, x, z, p, pr }));
        }
        let b = self.small(tele, 2)?;
        let e = self.term_of(tele, &eq_u(a.clone(), b.clone()), depth - 1)?;
        Some(std::rc::Rc::new(SigTerm::JU { a, x, z, p, pr, b, eq: e }))
    }
}

fn j(a: &STm, t: &STm, p: STm, pr: STm, u: STm, eq: STm) -> STm {
    std::rc::Rc::new(SigTerm::J {
        a: a.clone(),
        t: t.clone(),
        x: Name::new("x"),
        z: Name::new("z"),
        p,
        pr,
        u,
        eq,
    })
}

fn is_sort(a: &STy) -> bool {
    match &**a {
        SigType::U => true,
        SigType::PiInd(_, _, b) | SigType::PiExt(_, _, b) => is_sort(b),
        _ => false,
    }
}

/// Surface source for a signature.
pub fn to_source(sc: &SigContext) -> String {
    let mut out = String::new();
    let mut tele: Tele = Vec::new();
    if !sc.ext.is_empty() {
        out.push_str("assume");
        for (n, a) in &sc.ext {
            // Declared names follow the printer's renaming of reserved words.
            let sc = scope_of(&tele);
            out.push_str(&format!(" ({} : {})", sc.fresh(n.as_str()), show(a, &sc)));
            tele.push((n.clone(), Zone::Ext(a.clone())));
        }
        out.push('\n');
    }
    for (n, a) in &sc.sig {
        let sc = scope_of(&tele);
        out.push_str(&format!("{} : {};\n", sc.fresh(n.as_str()), show_ty(a, &sc)));
        tele.push((n.clone(), Zone::Sig(a.clone())));
    }
    out
}

/// Counts of syntactic features over a signature, for coverage reporting.
#[derive(Default, Debug)]
pub struct Features {
    pub j: usize,
    pub jbeta: usize,
    pub ju: usize,
    pub refl: usize,
    pub eq_u: usize,
    pub pi_ext: usize,
    pub pi_inf: usize,
    pub paths: usize,
}

pub fn features(sc: &SigContext) -> Features {
    fn tm(t: &STm, f: &mut Features) {
        match &**t {
            SigTerm::Var(_) => {}
            SigTerm::AppInd(a, b) => {
                tm(a, f);
                tm(b, f)
            }
            SigTerm::AppExt(a, _) | SigTerm::AppInf(a, _) => tm(a, f),
            SigTerm::EqId(a, x, y) => {
                tm(a, f);
                tm(x, f);
                tm(y, f)
            }
            SigTerm::PiInf(_, _, b) => {
                f.pi_inf += 1;
                tm(b, f)
            }
            SigTerm::Refl(x) | SigTerm::ReflU(x) => {
                f.refl += 1;
                tm(x, f)
            }
            SigTerm::J { a, t, p, pr, u, eq, .. } => {
                f.j += 1;
                for x in [a, t, p, pr, u, eq] {
                    tm(x, f)
                }
            }
            SigTerm::JBeta { a, t, p, pr, .. } => {
                f.jbeta += 1;
                for x in [a, t, p, pr] {
                    tm(x, f)
                }
            }
            SigTerm::JU { a, p, pr, b, eq, .. } => {
                f.ju += 1;
                for x in [a, p, pr, b, eq] {
                    tm(x, f)
                }
            }
            SigTerm::JBetaU { a, p, pr, .. } => {
                f.ju += 1;
                for x in [a, p, pr] {
                    tm(x, f)
                }
            }
        }
    }
    fn ty(t: &STy, f: &mut Features) {
        match &**t {
            SigType::U => {}
            SigType::El(a) => {
                if matches!(&**a, SigTerm::EqId(..)) {
                    f.paths += 1;
                }
                tm(a, f)
            }
            SigType::PiInd(_, a, b) => {
                tm(a, f);
                ty(b, f)
            }
            SigType::PiExt(_, _, b) => {
                f.pi_ext += 1;
                ty(b, f)
            }
            SigType::EqTyCon(a, b) => {
                f.eq_u += 1;
                tm(a, f);
                tm(b, f)
            }
        }
    }
    let mut f = Features::default();
    for (_, a) in &sc.sig {
        ty(a, &mut f);
    }
    f
}

/// Depth of a core term; an application spine counts as one level.
pub fn depth(t: &STm) -> usize {
    if let SigTerm::AppInd(f, a) = &**t {
        return depth(f).max(1 + depth(a));
    }
    1 + match &**t {
        SigTerm::Var(_) => 0,
        SigTerm::AppInd(..) => unreachable!(),
        SigTerm::AppExt(a, _) | SigTerm::AppInf(a, _) => depth(a) - 1,
        SigTerm::PiInf(_, _, a) => depth(a),
        SigTerm::EqId(a, x, y) => depth(a).max(depth(x)).max(depth(y)),
        SigTerm::Refl(x) | SigTerm::ReflU(x) => depth(x),
        SigTerm::J { a, t, p, pr, u, eq, .. } => [a, t, p, pr, u, eq].iter().map(|x| depth(x)).max().unwrap(),
        SigTerm::JBeta { a, t, p, pr, .. } => [a, t, p, pr].iter().map(|x| depth(x)).max().unwrap(),
        SigTerm::JU { a, p, pr, b, eq, .. } => [a, p, pr, b, eq].iter().map(|x| depth(x)).max().unwrap(),
        SigTerm::JBetaU { a, p, pr, .. } => [a, p, pr].iter().map(|x| depth(x)).max().unwrap(),
    }
}

/// Largest depth of a term occurring in a signature type.
pub fn ty_depth(a: &STy) -> usize {
    match &**a {
        SigType::U => 0,
        SigType::El(t) => depth(t),
        SigType::PiInd(_, d, b) => depth(d).max(ty_depth(b)),
        SigType::PiExt(_, _, b) => ty_depth(b),
        SigType::EqTyCon(x, y) => depth(x).max(depth(y)),
    }
}

/// Compares each `corpus/formulas/<sig>.formulas` (hand-written translations
/// closed over the signature's parameters, named A, D, M, S) with the
/// translator. Returns the `sig/X` entries checked, in order.
pub fn golden_formulas() -> Result<Vec<String>, String> {
    use hiit_forge::checker::elaborate_signature;
    use hiit_forge::surface::parse;
    use hiit_forge::target::lam;
    use hiit_forge::target::parse::parse_defs;
    use hiit_forge::target::print::show_closed;
    use hiit_forge::translate::elaborate;
    use hiit_forge::translate::named::normalize;

    let dir = root().join("corpus/formulas");
    let mut seen = Vec::new();
    for (name, src) in corpus("corpus") {
        let path = dir.join(format!("{}.formulas", name));
        let Ok(text) = fs::read_to_string(&path) else { continue };
        let defs = parse_defs(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
        let sc = elaborate_signature(&parse(&src).map_err(|d| d.to_string())?).map_err(|ds| format!("{:?}", ds))?;
        let b = elaborate(&sc, 0);
        for d in defs {
            let got = match d.name.as_str() {
                "A" => &b.alg_a,
                "D" => &b.alg_d,
                "M" => &b.alg_m,
                "S" => &b.alg_s,
                _ => continue,
            };
            let got = sc.ext.iter().rev().fold(got.clone(), |t, (n, _)| lam(n.as_str(), t));
            let want = normalize(d.val.as_ref().ok_or_else(|| format!("{} {}: no value", name, d.name))?);
            if want != got {
                return Err(format!("{} {}:\nwant {}\ngot  {}", name, d.name, show_closed(&want), show_closed(&got)));
            }
            seen.push(format!("{}/{}", name, d.name));
        }
    }
    Ok(seen)
}
