use crate::diag::{Diagnostic, Rule, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Assume,
    U,
    Set,
    Id,
    Refl,
    J,
    JBeta,
    LParen,
    RParen,
    Colon,
    Semi,
    Arrow,
    Equals,
    Dot,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{}`", s),
            Tok::Assume => "`assume`".into(),
            Tok::U => "`U`".into(),
            Tok::Set => "`Set`".into(),
            Tok::Id => "`Id`".into(),
            Tok::Refl => "`refl`".into(),
            Tok::J => "`J`".into(),
            Tok::JBeta => "`Jbeta`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Dot => "`.`".into(),
        }
    }
}

pub const KEYWORDS: &[&str] = &["assume", "U", "Set", "Id", "refl", "J", "Jbeta"];

/// Superscripts the emitter appends to generated names.
pub const RESERVED_MARKERS: &[char] = &['ᴬ', 'ᴰ', 'ᴹ', 'ˢ'];

pub fn is_ident_char(c: char) -> bool {
    (c.is_alphanumeric() || c == '_' || c == '\'' || ('₀'..='₉').contains(&c))
        && !RESERVED_MARKERS.contains(&c)
}

/// Whether `s` could be written as a binder or declaration name.
pub fn is_valid_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_ident_char) && !KEYWORDS.contains(&s)
}

pub fn lex(src: &str) -> Result<Vec<(Tok, Span)>, Diagnostic> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    // Advances over one char, tracking the position.
    macro_rules! bump {
        () => {{
            let (_, c) = it.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        }};
    }
    while let Some(&(start, c)) = it.peek() {
        let (sl, sc) = (line, col);
        let span_to = |end: usize| Span { start, end, line: sl, col: sc };
        let rest = &src[start..];
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if rest.starts_with("--") {
            while let Some(&(_, c)) = it.peek() {
                if c == '\n' {
                    break;
                }
                bump!();
            }
            continue;
        }
        if rest.starts_with("{-") {
            let mut depth = 0usize;
            loop {
                let Some(&(i, _)) = it.peek() else {
                    return Err(Diagnostic::error(Rule::Parse, span_to(src.len()), "unterminated block comment"));
                };
                let r = &src[i..];
                if r.starts_with("{-") {
                    depth += 1;
                    bump!();
                    bump!();
                } else if r.starts_with("-}") {
                    depth -= 1;
                    bump!();
                    bump!();
                    if depth == 0 {
                        break;
                    }
                } else {
                    bump!();
                }
            }
            continue;
        }
        if rest.starts_with("->") {
            bump!();
            bump!();
            out.push((Tok::Arrow, span_to(start + 2)));
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ':' => Some(Tok::Colon),
            ';' => Some(Tok::Semi),
            '=' => Some(Tok::Equals),
            '.' => Some(Tok::Dot),
            '→' => Some(Tok::Arrow),
            _ => None,
        };
        if let Some(t) = single {
            bump!();
            out.push((t, span_to(start + c.len_utf8())));
            continue;
        }
        if is_ident_char(c) {
            let mut end = start;
            while let Some(&(i, c)) = it.peek() {
                if is_ident_char(c) {
                    end = i + c.len_utf8();
                    bump!();
                } else if RESERVED_MARKERS.contains(&c) {
                    return Err(Diagnostic::error(
                        Rule::Parse,
                        Span { start: i, end: i + c.len_utf8(), line, col },
                        format!("`{}` is reserved for generated names and cannot appear in identifiers", c),
                    ));
                } else {
                    break;
                }
            }
            let word = &src[start..end];
            let tok = match word {
                "assume" => Tok::Assume,
                "U" => Tok::U,
                "Set" => Tok::Set,
                "Id" => Tok::Id,
                "refl" => Tok::Refl,
                "J" => Tok::J,
                "Jbeta" => Tok::JBeta,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((tok, span_to(end)));
            continue;
        }
        let msg = if RESERVED_MARKERS.contains(&c) {
            format!("`{}` is reserved for generated names and cannot appear in identifiers", c)
        } else {
            format!("unexpected character `{}`", c.escape_debug())
        };
        return Err(Diagnostic::error(Rule::Parse, span_to(start + c.len_utf8()), msg));
    }
    Ok(out)
}
