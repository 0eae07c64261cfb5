//! Agda output for elaborated signatures.
//!
//! The emitted file starts with a provenance header and the prelude (embedded
//! or imported), then defines `<Sig>ᴬ`, `<Sig>ᴰ`, `<Sig>ᴹ`, `<Sig>ˢ` and
//! postulates the induction, recursion and initiality statements. Algebra
//! bodies are printed as left-nested Σ chains, one component per line, each
//! preceded by a comment naming the signature entry it stands for.

mod layout;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::diag::{Diagnostic, Rule, Span};
use crate::target::print::{self, is_reserved, Scope};
use crate::target::{self, Term, Tm};
use crate::translate::ElabBundle;

pub use layout::reflow;

/// The prelude as stored next to the golden files.
pub const PRELUDE: &str = include_str!("../../corpus/HiitPrelude.agda");

pub const PRELUDE_MODULE: &str = "HiitPrelude";

/// One requested output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Trans {
    A,
    D,
    M,
    S,
    Ind,
    Rec,
    Init,
}

impl Trans {
    pub const ALL: [Trans; 7] = [Trans::A, Trans::D, Trans::M, Trans::S, Trans::Ind, Trans::Rec, Trans::Init];

    pub fn as_str(self) -> &'static str {
        match self {
            Trans::A => "A",
            Trans::D => "D",
            Trans::M => "M",
            Trans::S => "S",
            Trans::Ind => "IND",
            Trans::Rec => "REC",
            Trans::Init => "INIT",
        }
    }

    /// Outputs that this one refers to by name.
    fn deps(self) -> &'static [Trans] {
        match self {
            Trans::A => &[],
            Trans::D | Trans::M => &[Trans::A],
            Trans::S => &[Trans::A, Trans::D],
            Trans::Ind => &[Trans::A, Trans::D, Trans::S],
            Trans::Rec | Trans::Init => &[Trans::A, Trans::M],
        }
    }
}

impl FromStr for Trans {
    type Err = String;

    fn from_str(s: &str) -> Result<Trans, String> {
        Trans::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown translation `{}` (expected one of A,D,M,S,IND,REC,INIT)", s.trim()))
    }
}

impl fmt::Display for Trans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parses a comma-separated list such as `A,D,M,S`.
pub fn parse_trans_list(s: &str) -> Result<BTreeSet<Trans>, String> {
    let set = s.split(',').filter(|p| !p.trim().is_empty()).map(str::parse).collect::<Result<BTreeSet<_>, _>>()?;
    if set.is_empty() {
        return Err("empty translation list".into());
    }
    Ok(set)
}

/// Adds everything the requested outputs mention by name.
pub fn closure(set: &BTreeSet<Trans>) -> BTreeSet<Trans> {
    let mut out = set.clone();
    for t in set {
        out.extend(t.deps().iter().copied());
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PreludeMode {
    #[default]
    Embed,
    Import,
}

impl PreludeMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PreludeMode::Embed => "embed",
            PreludeMode::Import => "import",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EmitConfig {
    /// Agda module name; must match the output file stem.
    pub module_name: String,
    pub trans: BTreeSet<Trans>,
    pub level: u8,
    pub width: usize,
    pub prelude: PreludeMode,
    /// Hex digest of the input, recorded in the header.
    pub input_hash: Option<String>,
}

impl Default for EmitConfig {
    fn default() -> Self {
        EmitConfig {
            module_name: "Out".into(),
            trans: Trans::ALL.into_iter().collect(),
            level: 0,
            width: 100,
            prelude: PreludeMode::Embed,
            input_hash: None,
        }
    }
}

pub fn input_hash(src: &str) -> String {
    Sha256::digest(src.as_bytes()).iter().map(|b| format!("{:02x}", b)).collect()
}

/// The prelude text, byte-identical to the stored copy.
pub fn emit_prelude(_cfg: &EmitConfig) -> String {
    PRELUDE.to_string()
}

/// The prelude without its pragma and module line, for embedding.
fn prelude_body() -> &'static str {
    let key = "module HiitPrelude where\n";
    let at = PRELUDE.find(key).expect("prelude has a module line");
    PRELUDE[at + key.len()..].trim_start_matches('\n')
}

fn prelude_options() -> &'static str {
    PRELUDE.lines().next().unwrap_or_default()
}

/// Makes a source identifier usable as an Agda name. Agda treats `_` as an
/// operator hole, so it is replaced by a look-alike.
pub fn sanitize(s: &str) -> String {
    match s.strip_prefix('_') {
        Some(rest) => format!("x{}", rest),
        None => s.to_string(),
    }
    .replace('_', "ˍ")
}

/// Names of the top-level things in a file.
struct Names {
    params: Vec<String>,
    a: String,
    d: String,
    m: String,
    s: String,
    star: String,
    induction: String,
    recursion: String,
    initiality: String,
}

impl Names {
    fn new(b: &ElabBundle) -> Result<Names, Diagnostic> {
        let sig = b.names.first().map(|c| sanitize(c.name.as_str())).unwrap_or_else(|| "Sig".into());
        let mut taken: BTreeSet<String> = BTreeSet::new();
        let [a, d, m, s] = ["ᴬ", "ᴰ", "ᴹ", "ˢ"].map(|k| format!("{}{}", sig, k));
        let [induction, recursion, initiality] =
            ["induction", "recursion", "initiality"].map(|k| format!("{}-{}", sig, k));
        taken.extend([&a, &d, &m, &s, &induction, &recursion, &initiality].map(String::clone));
        taken.insert("⋆".into());

        let mut seen: Vec<(String, &str)> = Vec::new();
        for (n, _) in &b.params {
            let m = sanitize(n.as_str());
            if let Some((_, other)) = seen.iter().find(|(k, o)| *k == m && *o != n.as_str()) {
                return Err(Diagnostic::error(
                    Rule::Emit,
                    Span::default(),
                    format!("parameters `{}` and `{}` both become `{}` in the output", other, n, m),
                ));
            }
            seen.push((m, n.as_str()));
        }
        let mut params = Vec::new();
        for (m, _) in seen {
            let mut cand = m.clone();
            let mut k = 1;
            while is_reserved(&cand) || taken.contains(&cand) {
                cand = format!("{}{}", m, k);
                k += 1;
            }
            taken.insert(cand.clone());
            params.push(cand);
        }
        Ok(Names { params, a, d, m, s, star: "⋆".into(), induction, recursion, initiality })
    }

    fn scope(&self, extra: &[&String]) -> Scope {
        Scope::new(self.params.iter().cloned().chain(extra.iter().map(|s| (*s).clone())))
    }
}

/// The Agda names given to the external parameters of `bundle`.
pub fn param_names(bundle: &ElabBundle) -> Result<Vec<String>, Diagnostic> {
    Names::new(bundle).map(|n| n.params)
}

struct Out {
    text: String,
    indent: usize,
    width: usize,
}

impl Out {
    fn line(&mut self, s: &str) {
        if !s.is_empty() {
            self.text.push_str(&" ".repeat(self.indent));
        }
        self.text.push_str(s);
        self.text.push('\n');
    }

    /// `prefix` followed by a term, wrapped to the configured width.
    fn wrapped(&mut self, prefix: &str, term: &str, extra_indent: usize) {
        self.wrapped_then(prefix, term, "", extra_indent);
    }

    /// Like `wrapped`, with `suffix` glued to the end of the term.
    fn wrapped_then(&mut self, prefix: &str, term: &str, suffix: &str, extra_indent: usize) {
        let col = self.indent + prefix.chars().count();
        // Reserve room for the suffix on the last line.
        let body = reflow(term, col, self.indent + extra_indent, self.width.saturating_sub(suffix.len()));
        self.text.push_str(&" ".repeat(self.indent));
        self.text.push_str(prefix);
        self.text.push_str(&body);
        self.text.push_str(suffix);
        self.text.push('\n');
    }

    /// `name : ty` on one or more lines.
    fn signature(&mut self, name: &str, ty: &Tm, sc: &Scope) {
        self.wrapped(&format!("{} : ", name), &print::show(ty, sc), 4);
    }

    /// `name = body`, laying out a Σ chain of `comps` components under any
    /// leading lambdas.
    fn definition(&mut self, name: &str, body: &Tm, sc: &Scope, comps: &[String]) {
        let mut sc = sc.clone();
        let mut lams = String::new();
        let mut cur = body.clone();
        while let Term::Lam(n, b) = &*cur {
            let x = if b.mentions(0) { sc.fresh(n.as_str()) } else { "_".into() };
            lams.push_str(&format!(" {}", x));
            sc.push(x);
            cur = b.clone();
        }
        let head = if lams.is_empty() { format!("{} =", name) } else { format!("{} = λ{} →", name, lams) };
        match sigma_chain(&cur, comps.len()) {
            Some(chain) => {
                self.line(&head);
                self.indent += 2;
                if chain.is_empty() {
                    self.line("⊤");
                } else {
                    let opener = "Σ (".repeat(chain.len() - 1) + "Σ ⊤";
                    self.line(&opener);
                    self.indent += 2;
                    for (i, ((hint, fam), comp)) in chain.iter().zip(comps).enumerate() {
                        self.line(&format!("-- {}", comp));
                        let lam = print::binder_lam_string(hint, fam, &mut sc);
                        let close = if i + 1 < chain.len() { ")" } else { "" };
                        self.wrapped_then("", &lam, close, 2);
                    }
                    self.indent -= 2;
                }
                self.indent -= 2;
            }
            None => {
                self.line(&head);
                self.indent += 2;
                self.wrapped("", &print::show(&cur, &sc), 2);
                self.indent -= 2;
            }
        }
    }
}

/// Splits `Σ (Σ (Σ ⊤ B₁) B₂) B₃` into its families, outermost last.
fn sigma_chain(t: &Tm, n: usize) -> Option<Vec<(String, Tm)>> {
    let mut out = Vec::new();
    let mut cur = t.clone();
    while let Term::Sigma(name, a, b) = &*cur {
        out.push((name.as_str().to_string(), b.clone()));
        cur = a.clone();
    }
    if !matches!(&*cur, Term::Unit) || out.len() != n {
        return None;
    }
    out.reverse();
    Some(out)
}

/// Renders `bundle` as an Agda module.
pub fn emit_agda(bundle: &ElabBundle, cfg: &EmitConfig) -> Result<String, Diagnostic> {
    if cfg.trans.is_empty() {
        return Err(Diagnostic::error(Rule::Emit, Span::default(), "no translations requested"));
    }
    let names = Names::new(bundle)?;
    let want = closure(&cfg.trans);
    let mut o = Out { text: String::new(), indent: 0, width: cfg.width.max(20) };

    o.line(prelude_options());
    o.line(&format!("-- Generated by hiit-forge {}.", env!("CARGO_PKG_VERSION")));
    if let Some(h) = &cfg.input_hash {
        o.line(&format!("-- input sha256: {}", h));
    }
    let requested: Vec<&str> = cfg.trans.iter().map(|t| t.as_str()).collect();
    o.line(&format!(
        "-- flags: --trans {} --level {} --prelude {} --width {}",
        requested.join(","),
        bundle.level,
        cfg.prelude.as_str(),
        cfg.width
    ));
    let comps: Vec<&str> = bundle.names.iter().map(|c| c.name.as_str()).collect();
    o.line(&format!("-- components: {}", if comps.is_empty() { "(none)".to_string() } else { comps.join(", ") }));
    o.line("");
    o.line(&format!("module {} where", cfg.module_name));
    o.line("");
    match cfg.prelude {
        PreludeMode::Embed => {
            o.text.push_str(prelude_body());
            o.line("");
        }
        PreludeMode::Import => {
            o.line(&format!("open import {}", PRELUDE_MODULE));
            o.line("");
        }
    }

    if !bundle.params.is_empty() {
        let mut sc = Scope::default();
        let mut binders = String::new();
        for ((_, t), n) in bundle.params.iter().zip(&names.params) {
            binders.push_str(&format!(" ({} : {})", n, print::show(t, &sc)));
            sc.push(n.clone());
        }
        o.wrapped("module _ ", &format!("{} where", binders.trim_start()), 4);
        o.line("");
        o.indent += 2;
    }

    let [ty_a, ty_d, ty_m, ty_s] = named_headers(bundle.level);
    let with_marker = |k: &str| bundle.names.iter().map(|c| format!("{}{}", c.name, k)).collect::<Vec<_>>();
    let sc0 = names.scope(&[]);
    if want.contains(&Trans::A) {
        let comps: Vec<String> = bundle.names.iter().map(|c| c.name.to_string()).collect();
        o.signature(&names.a, &ty_a, &sc0);
        o.definition(&names.a, &bundle.alg_a, &sc0, &comps);
        o.line("");
    }
    if want.contains(&Trans::D) {
        o.signature(&names.d, &ty_d, &names.scope(&[&names.a]));
        o.definition(&names.d, &bundle.alg_d, &sc0, &with_marker("ᴰ"));
        o.line("");
    }
    if want.contains(&Trans::M) {
        o.signature(&names.m, &ty_m, &names.scope(&[&names.a]));
        o.definition(&names.m, &bundle.alg_m, &sc0, &with_marker("ᴹ"));
        o.line("");
    }
    if want.contains(&Trans::S) {
        o.signature(&names.s, &ty_s, &names.scope(&[&names.a, &names.d]));
        o.definition(&names.s, &bundle.alg_s, &sc0, &with_marker("ˢ"));
        o.line("");
    }

    let stmts: Vec<(&String, &Tm)> = [
        (Trans::Ind, &names.induction, &bundle.induction),
        (Trans::Rec, &names.recursion, &bundle.recursion),
        (Trans::Init, &names.initiality, &bundle.initiality),
    ]
    .into_iter()
    .filter(|(t, _, _)| want.contains(t))
    .map(|(_, n, t)| (n, t))
    .collect();
    if !stmts.is_empty() {
        o.line(&format!("module _ ({} : {}) where", names.star, names.a));
        o.indent += 2;
        o.line("postulate");
        o.indent += 2;
        let sc = names.scope(&[&names.a, &names.d, &names.m, &names.s, &names.star]);
        for (n, t) in stmts {
            o.signature(n, t, &sc);
        }
        o.indent -= 4;
    }

    while o.text.ends_with("\n\n") {
        o.text.pop();
    }
    Ok(o.text)
}

/// Header types of the four outputs, referring to earlier outputs by name.
/// Each is stated in the scope of the parameters followed by the outputs it
/// mentions.
fn named_headers(i: u8) -> [Tm; 4] {
    use target::{app, arrow, pi, ty, var};
    [
        ty(1),
        arrow(var(0), ty(i + 1)),
        arrow(var(0), arrow(var(0), ty(i))),
        pi("γ", var(1), arrow(app(var(1), var(0)), ty(i))),
    ]
}
