//! Command-line driver.
//!
//! Exit codes: 0 success, 1 the input does not check or a golden differs,
//! 2 bad usage, 3 an I/O failure.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::checker::elaborate_with;
use crate::diag::{Diagnostic, Rule, Span};
use crate::emit::{self, EmitConfig, PreludeMode, Trans};
use crate::target::{Kernel, MAX_LEVEL};
use crate::translate::{check_bundle, elaborate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hiit-forge", version, about = "Elaborate HIIT signatures into Agda")]
struct Cli {
    /// Diagnostic format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Typecheck a signature and report diagnostics.
    Check {
        /// Input file, or `-` for stdin.
        input: PathBuf,
    },
    /// Typecheck, translate, verify and write an Agda file.
    Elab {
        /// Input file, or `-` for stdin.
        input: PathBuf,
        /// Output file, or `-` for stdout.
        #[arg(short, long)]
        out: PathBuf,
        /// Comma-separated subset of A,D,M,S,IND,REC,INIT.
        #[arg(long, default_value = "A,D,M,S,IND,REC,INIT", value_parser = emit::parse_trans_list)]
        trans: BTreeSet<Trans>,
        /// Universe level of the displayed algebras.
        #[arg(long, default_value_t = 0)]
        level: u8,
        #[arg(long, value_enum, default_value_t = Prelude::Embed)]
        prelude: Prelude,
        /// Target line width.
        #[arg(long, default_value_t = 100)]
        width: usize,
    },
    /// Check every `.hiit` file in a directory against its sibling `.agda` golden.
    Corpus {
        dir: PathBuf,
        /// Rewrite the goldens instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Lines,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Prelude {
    Embed,
    Import,
}

/// Where diagnostics point and how they are shown.
struct Reporter {
    format: Format,
    color: bool,
}

impl Reporter {
    fn render(&self, path: &str, src: &str, ds: &[Diagnostic]) -> String {
        let mut out = String::new();
        for d in ds {
            match self.format {
                Format::Lines => {
                    out.push_str(&d.line_format(path));
                    out.push('\n');
                }
                Format::Human => out.push_str(&d.human_format(path, src, self.color)),
            }
        }
        out
    }
}

fn color_enabled() -> bool {
    match std::env::var("HIIT_FORGE_COLOR").as_deref() {
        Ok("1") => true,
        Ok("0") => false,
        _ => io::stderr().is_terminal(),
    }
}

/// Runs the tool; `args` includes the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let rep = Reporter { format: cli.format, color: color_enabled() };
    match cli.cmd {
        Cmd::Check { input } => cmd_check(&rep, &input),
        Cmd::Elab { input, out, trans, level, prelude, width } => {
            if level + 1 > MAX_LEVEL {
                eprintln!("error: --level must be at most {}", MAX_LEVEL - 1);
                return EXIT_USAGE;
            }
            let prelude = match prelude {
                Prelude::Embed => PreludeMode::Embed,
                Prelude::Import => PreludeMode::Import,
            };
            let cfg = EmitConfig { module_name: module_name(&out, &input), trans, level, width, prelude, input_hash: None };
            cmd_elab(&rep, &input, &out, cfg)
        }
        Cmd::Corpus { dir, bless } => cmd_corpus(&dir, bless),
    }
}

fn display_path(p: &Path) -> String {
    if p == Path::new("-") {
        "<stdin>".into()
    } else {
        p.display().to_string()
    }
}

fn read_input(p: &Path) -> Result<String, i32> {
    let res = if p == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(p)
    };
    res.map_err(|e| {
        eprintln!("error: cannot read {}: {}", display_path(p), e);
        EXIT_IO
    })
}

fn module_name(out: &Path, input: &Path) -> String {
    let pick = |p: &Path| {
        (p != Path::new("-")).then(|| p.file_stem().map(|s| s.to_string_lossy().into_owned())).flatten()
    };
    pick(out).or_else(|| pick(input)).unwrap_or_else(|| "Out".into())
}

/// Parses and typechecks a signature.
pub fn check_source(src: &str) -> Result<(), Vec<Diagnostic>> {
    let m = crate::surface::parse(src).map_err(|d| vec![d])?;
    elaborate_with(&Kernel::default(), &m).map(|_| ())
}

/// The whole pipeline: parse, typecheck, translate, verify the outputs with
/// the target kernel and print them.
pub fn elab_source(src: &str, cfg: &EmitConfig) -> Result<String, Vec<Diagnostic>> {
    let kernel = Kernel::default();
    let m = crate::surface::parse(src).map_err(|d| vec![d])?;
    let sc = elaborate_with(&kernel, &m)?;
    let bundle = elaborate(&sc, cfg.level);
    check_bundle(&kernel, &bundle).map_err(|e| {
        vec![Diagnostic::error(Rule::Kernel, Span::default(), format!("generated output failed verification: {}", e))]
    })?;
    let cfg = EmitConfig { input_hash: Some(emit::input_hash(src)), ..cfg.clone() };
    emit::emit_agda(&bundle, &cfg).map_err(|d| vec![d])
}

fn cmd_check(rep: &Reporter, input: &Path) -> i32 {
    let src = match read_input(input) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match check_source(&src) {
        Ok(()) => EXIT_OK,
        Err(ds) => {
            eprint!("{}", rep.render(&display_path(input), &src, &ds));
            EXIT_CHECK
        }
    }
}

fn cmd_elab(rep: &Reporter, input: &Path, out: &Path, cfg: EmitConfig) -> i32 {
    let src = match read_input(input) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let text = match elab_source(&src, &cfg) {
        Ok(t) => t,
        Err(ds) => {
            eprint!("{}", rep.render(&display_path(input), &src, &ds));
            return EXIT_CHECK;
        }
    };
    if out == Path::new("-") {
        let mut so = io::stdout().lock();
        return match so.write_all(text.as_bytes()).and_then(|_| so.flush()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                eprintln!("error: cannot write to stdout: {}", e);
                EXIT_IO
            }
        };
    }
    if let Err(e) = fs::write(out, text) {
        eprintln!("error: cannot write {}: {}", out.display(), e);
        return EXIT_IO;
    }
    if cfg.prelude == PreludeMode::Import {
        // The import needs the prelude next to the output.
        let p = out.with_file_name(format!("{}.agda", emit::PRELUDE_MODULE));
        if !p.exists() {
            if let Err(e) = fs::write(&p, emit::emit_prelude(&cfg)) {
                eprintln!("error: cannot write {}: {}", p.display(), e);
                return EXIT_IO;
            }
        }
    }
    EXIT_OK
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Blessed,
    Mismatch,
    Missing,
    Failed(String),
}

impl Status {
    fn label(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Blessed => "blessed",
            Status::Mismatch => "MISMATCH",
            Status::Missing => "MISSING",
            Status::Failed(_) => "FAILED",
        }
    }

    fn is_ok(&self) -> bool {
        matches!(self, Status::Ok | Status::Blessed)
    }
}

/// Golden file for a corpus entry.
pub fn golden_path(hiit: &Path) -> PathBuf {
    hiit.with_extension("agda")
}

/// Default emission settings for corpus entries.
pub fn corpus_config(hiit: &Path) -> EmitConfig {
    let stem = hiit.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "Out".into());
    EmitConfig { module_name: stem, ..EmitConfig::default() }
}

fn corpus_entry(path: &Path, bless: bool) -> Status {
    let src = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return Status::Failed(format!("cannot read: {}", e)),
    };
    let text = match elab_source(&src, &corpus_config(path)) {
        Ok(t) => t,
        Err(ds) => return Status::Failed(ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")),
    };
    let golden = golden_path(path);
    if bless {
        if fs::read_to_string(&golden).ok().as_deref() == Some(text.as_str()) {
            return Status::Ok;
        }
        return match fs::write(&golden, text) {
            Ok(()) => Status::Blessed,
            Err(e) => Status::Failed(format!("cannot write golden: {}", e)),
        };
    }
    match fs::read_to_string(&golden) {
        Ok(g) if g == text => Status::Ok,
        Ok(_) => Status::Mismatch,
        Err(_) => Status::Missing,
    }
}

/// Runs every `.hiit` file directly inside `dir`. Files are processed in
/// parallel; results come back sorted by file name.
pub fn run_corpus(dir: &Path, bless: bool) -> io::Result<Vec<(String, Status)>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "hiit"))
        .collect();
    files.sort();
    let mut results: Vec<(String, Status)> = std::thread::scope(|s| {
        let handles: Vec<_> = files
            .iter()
            .map(|p| {
                let name = p.file_name().unwrap_or_default().to_string_lossy().into_owned();
                (name, s.spawn(move || corpus_entry(p, bless)))
            })
            .collect();
        handles
            .into_iter()
            .map(|(n, h)| (n, h.join().unwrap_or_else(|_| Status::Failed("internal error".into()))))
            .collect()
    });
    results.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(results)
}

pub fn summary_table(results: &[(String, Status)]) -> String {
    let w = results.iter().map(|(n, _)| n.chars().count()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<w$}  status\n", "file");
    for (n, st) in results {
        out.push_str(&format!("{:<w$}  {}", n, st.label()));
        if let Status::Failed(msg) = st {
            out.push_str(&format!("  {}", msg));
        }
        out.push('\n');
    }
    let passed = results.iter().filter(|(_, s)| s.is_ok()).count();
    out.push_str(&format!("{} of {} passed\n", passed, results.len()));
    out
}

fn cmd_corpus(dir: &Path, bless: bool) -> i32 {
    let results = match run_corpus(dir, bless) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", dir.display(), e);
            return EXIT_IO;
        }
    };
    print!("{}", summary_table(&results));
    if results.iter().all(|(_, s)| s.is_ok()) {
        EXIT_OK
    } else {
        EXIT_CHECK
    }
}
