mod common;

use std::collections::BTreeSet;
use std::fs;

use hiit_forge::checker::elaborate_signature;
use hiit_forge::cli::{corpus_config, elab_source, run_corpus, Status};
use hiit_forge::core::{u, SigContext};
use hiit_forge::diag::Rule;
use hiit_forge::emit::{self, emit_agda, emit_prelude, EmitConfig, PreludeMode, Trans};
use hiit_forge::name::Name;
use hiit_forge::surface::parse;
use hiit_forge::target::parse::parse_term;
use hiit_forge::target::{self, Kernel, Term, Tm};
use hiit_forge::translate::{elaborate, header_types, ElabBundle};

use common::{corpus, root};

fn bundle(src: &str) -> (SigContext, ElabBundle) {
    let sc = elaborate_signature(&parse(src).unwrap()).unwrap();
    let b = elaborate(&sc, 0);
    (sc, b)
}

fn cfg(name: &str) -> EmitConfig {
    EmitConfig { module_name: name.into(), ..EmitConfig::default() }
}

fn trans(s: &str) -> BTreeSet<Trans> {
    emit::parse_trans_list(s).unwrap()
}

/// The text of the declaration or definition starting with `head`, with its
/// more-indented continuation lines.
fn block<'a>(text: &'a str, head: &str) -> Option<String> {
    let lines: Vec<&'a str> = text.lines().collect();
    let i = lines.iter().position(|l| l.trim_start().starts_with(head))?;
    let indent = lines[i].len() - lines[i].trim_start().len();
    let mut out = lines[i].trim_start()[head.len()..].to_string();
    for l in &lines[i + 1..] {
        if l.trim().is_empty() || l.len() - l.trim_start().len() <= indent {
            break;
        }
        out.push('\n');
        out.push_str(l);
    }
    Some(out)
}

fn mentions_subterm(t: &Tm, needle: &Tm) -> bool {
    if t == needle {
        return true;
    }
    match &**t {
        Term::Pi(_, a, b) | Term::Sigma(_, a, b) | Term::App(a, b) | Term::Pair(a, b) => {
            mentions_subterm(a, needle) || mentions_subterm(b, needle)
        }
        _ => false,
    }
}

#[test]
fn emission_is_deterministic() {
    for (name, src) in corpus("corpus") {
        let c = cfg(&name);
        let a = elab_source(&src, &c).unwrap();
        let b = elab_source(&src, &c).unwrap();
        assert_eq!(a, b, "{}", name);
    }
}

#[test]
fn corpus_matches_goldens_quickly() {
    let start = std::time::Instant::now();
    let results = run_corpus(&root().join("corpus"), false).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(results.len(), 13);
    for (n, st) in &results {
        assert_eq!(*st, Status::Ok, "{}", n);
    }
    assert!(elapsed.as_secs_f64() < 5.0, "corpus took {:?}", elapsed);
}

#[test]
fn emitted_terms_reparse_to_the_bundle() {
    for (name, src) in corpus("corpus") {
        let (_, b) = bundle(&src);
        let text = emit_agda(&b, &cfg(&name)).unwrap();
        let params = emit::param_names(&b).unwrap();
        let sig = emit::sanitize(b.names[0].name.as_str());
        for (marker, t) in [("ᴬ", &b.alg_a), ("ᴰ", &b.alg_d), ("ᴹ", &b.alg_m), ("ˢ", &b.alg_s)] {
            let head = format!("{}{} =", sig, marker);
            let body = block(&text, &head).unwrap_or_else(|| panic!("{}: no {}", name, head));
            let back = parse_term(&body, &params).unwrap_or_else(|e| panic!("{} {}: {}\n{}", name, head, e, body));
            assert_eq!(&back, t, "{} {}", name, head);
        }
        let mut scope = params.clone();
        scope.extend(["ᴬ", "ᴰ", "ᴹ", "ˢ"].map(|m| format!("{}{}", sig, m)));
        scope.push("⋆".into());
        for (what, t) in [("induction", &b.induction), ("recursion", &b.recursion), ("initiality", &b.initiality)] {
            let head = format!("{}-{} :", sig, what);
            let ty = block(&text, &head).unwrap_or_else(|| panic!("{}: no {}", name, head));
            let back = parse_term(&ty, &scope).unwrap_or_else(|e| panic!("{} {}: {}\n{}", name, head, e, ty));
            assert_eq!(&back, t, "{} {}", name, head);
        }
    }
}

#[test]
fn headers_name_earlier_outputs() {
    let (_, b) = bundle("Nat : U; zero : Nat; suc : Nat -> Nat;");
    let text = emit_agda(&b, &cfg("nat")).unwrap();
    for line in [
        "Natᴬ : Set₁",
        "Natᴰ : Natᴬ → Set₁",
        "Natᴹ : Natᴬ → Natᴬ → Set",
        "Natˢ : (γ : Natᴬ) → Natᴰ γ → Set",
        "module _ (⋆ : Natᴬ) where",
        "    Nat-induction : (γᴰ : Natᴰ ⋆) → Natˢ ⋆ γᴰ",
        "    Nat-recursion : (γ : Natᴬ) → Natᴹ ⋆ γ",
        "    Nat-initiality : (γ : Natᴬ) → isContr (Natᴹ ⋆ γ)",
    ] {
        assert!(text.lines().any(|l| l == line), "missing `{}`", line);
    }
}

#[test]
fn nat_homomorphisms_are_singleton_contracted() {
    let (_, b) = bundle("Nat : U; zero : Nat; suc : Nat -> Nat;");
    let text = emit_agda(&b, &cfg("nat")).unwrap();
    let m = block(&text, "Natᴹ =").unwrap();
    let flat = m.split_whitespace().collect::<Vec<_>>().join(" ");
    assert!(flat.contains(
        "-- sucᴹ (λ γᴹ → (x₀ : proj₂ (proj₁ (proj₁ γ₀))) → Id (proj₂ (proj₁ (proj₁ γ₁))) \
         ((proj₂ (proj₁ γᴹ)) ((proj₂ γ₀) x₀)) ((proj₂ γ₁) ((proj₂ (proj₁ γᴹ)) x₀)))"
    ), "{}", flat);
}

#[test]
fn circle_algebra_lists_its_components() {
    let (_, b) = bundle("S¹ : U; b : S¹; loop : b = b;");
    let text = emit_agda(&b, &cfg("circle")).unwrap();
    let a = block(&text, "S¹ᴬ =").unwrap();
    let want = "
    Σ (Σ (Σ ⊤
      -- S¹
      (λ _ → Set))
      -- b
      (λ γ → proj₂ γ))
      -- loop
      (λ γ → Id (proj₂ (proj₁ γ)) (proj₂ γ) (proj₂ γ))";
    assert_eq!(a.replace("\n  ", "\n    "), want);
    for c in ["-- S¹ᴰ", "-- bᴰ", "-- loopᴰ", "-- S¹ᴹ", "-- loopᴹ", "-- S¹ˢ", "-- loopˢ"] {
        assert!(text.contains(c), "{}", c);
    }
}

#[test]
fn empty_signature_is_unit() {
    let b = elaborate(&SigContext::default(), 0);
    let text = emit_agda(&b, &EmitConfig { trans: trans("A"), ..cfg("Empty") }).unwrap();
    assert!(text.ends_with("Sigᴬ : Set₁\nSigᴬ =\n  ⊤\n"), "{}", text);
}

#[test]
fn requesting_m_pulls_in_a_only() {
    let src = "Nat : U; zero : Nat; suc : Nat -> Nat;";
    let (_, b) = bundle(src);
    let text = emit_agda(&b, &EmitConfig { trans: trans("M"), ..cfg("nat") }).unwrap();
    assert!(text.contains("\nNatᴬ : Set₁\n") && text.contains("\nNatᴹ : Natᴬ → Natᴬ → Set\n"));
    assert!(!text.contains("Natᴰ") && !text.contains("Natˢ") && !text.contains("postulate"));
    // The dependency is real: M's header type is stated over A.
    let k = Kernel::default();
    let [_, _, hm, _] = header_types(&b);
    assert!(mentions_subterm(&hm, &b.alg_a));
    let mut ctx = target::Ctx::new();
    k.check(&mut ctx, &b.alg_m, &hm).unwrap();
    let unrelated = target::arrow(target::unit(), target::arrow(target::unit(), target::ty(0)));
    assert!(k.check(&mut ctx, &b.alg_m, &unrelated).is_err());
    assert_eq!(
        emit::closure(&trans("IND,REC")).into_iter().collect::<Vec<_>>(),
        vec![Trans::A, Trans::D, Trans::M, Trans::S, Trans::Ind, Trans::Rec]
    );
}

#[test]
fn prelude_is_the_stored_copy() {
    let stored = fs::read_to_string(root().join("corpus/HiitPrelude.agda")).unwrap();
    assert_eq!(emit_prelude(&EmitConfig::default()), stored);
    assert!(stored.starts_with("{-# OPTIONS --without-K"));
    // J computes on refl by pattern matching, and nothing else matches on refl.
    assert!(stored.contains("J A x P pr .x refl = pr"));
    assert_eq!(stored.matches(" refl = ").count(), 1);
    for name in ["⊤", "Σ", "Id", "tr", "coe", "ap", "apd", "_⁻¹", "_∙_", "inv", "isContr"] {
        assert!(stored.contains(&format!("\n{} : ", name)) || stored.contains(&format!("record {} ", name)) || stored.contains(&format!("data {} ", name)), "{}", name);
    }
}

#[test]
fn embed_and_import_modes() {
    let src = "Nat : U; zero : Nat; suc : Nat -> Nat;";
    let (_, b) = bundle(src);
    let embed = emit_agda(&b, &cfg("nat")).unwrap();
    assert!(embed.contains("data Id {a : Level}"));
    assert!(!embed.contains("open import HiitPrelude"));
    let import = emit_agda(&b, &EmitConfig { prelude: PreludeMode::Import, ..cfg("nat") }).unwrap();
    assert!(import.contains("\nmodule nat where\n\nopen import HiitPrelude\n"));
    assert!(!import.contains("data Id") && !import.contains("J A x P pr"));
    // Apart from the prelude and the flags line, the two files agree.
    let tail = |t: &str| t[t.find("\nNatᴬ :").unwrap()..].to_string();
    assert_eq!(tail(&embed), tail(&import));
}

#[test]
fn header_records_version_hash_and_flags() {
    let src = "Nat : U; zero : Nat;";
    let text = elab_source(src, &EmitConfig { trans: trans("A,D"), level: 1, ..cfg("n") }).unwrap();
    let head: Vec<&str> = text.lines().take(6).collect();
    assert_eq!(head[0], "{-# OPTIONS --without-K --cumulativity #-}");
    assert!(head[1].contains(env!("CARGO_PKG_VERSION")));
    assert_eq!(head[2], format!("-- input sha256: {}", emit::input_hash(src)));
    assert_eq!(head[3], "-- flags: --trans A,D --level 1 --prelude embed --width 100");
    assert!(text.contains("Natᴰ : Natᴬ → Set₂"));
}

#[test]
fn colliding_parameter_names_are_reported() {
    let sc = SigContext {
        ext: vec![(Name::new("a_b"), target::ty(0)), (Name::new("aˍb"), target::ty(0))],
        sig: vec![(Name::new("N"), u())],
    };
    let b = elaborate(&sc, 0);
    let d = emit_agda(&b, &cfg("x")).unwrap_err();
    assert_eq!(d.rule, Rule::Emit);
    assert!(d.message.contains("a_b") && d.message.contains("aˍb"), "{}", d.message);
}

#[test]
fn reserved_parameter_names_get_numeric_suffixes() {
    let src = corpus("corpus").into_iter().find(|(n, _)| n == "indexed-w").unwrap().1;
    let (_, b) = bundle(&src);
    assert_eq!(emit::param_names(&b).unwrap(), ["I", "S", "P", "out", "in1"]);
    let text = emit_agda(&b, &cfg("indexed-w")).unwrap();
    assert!(text.contains("(in1 : (s : S) → P s → I) where"));
}

#[test]
fn width_only_moves_whitespace() {
    for (name, src) in corpus("corpus") {
        let (_, b) = bundle(&src);
        let wide = emit_agda(&b, &EmitConfig { width: 100, ..cfg(&name) }).unwrap();
        let narrow = emit_agda(&b, &EmitConfig { width: 60, ..cfg(&name) }).unwrap();
        let body = |t: &str| t[t.find("\nmodule ").unwrap()..].split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(body(&wide), body(&narrow), "{}", name);
        let prelude_end = wide.find(&format!("{}ᴬ :", emit::sanitize(b.names[0].name.as_str()))).unwrap();
        for l in wide[prelude_end..].lines() {
            assert!(l.chars().count() <= 100, "{}: {}", name, l);
        }
    }
}

#[test]
fn corpus_config_uses_the_file_stem() {
    let c = corpus_config(&root().join("corpus/higher-int.hiit"));
    assert_eq!(c.module_name, "higher-int");
    assert_eq!(c.trans.len(), 7);
}
