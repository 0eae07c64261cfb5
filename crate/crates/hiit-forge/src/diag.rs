use std::fmt;

/// A region of the input: byte offsets plus the 1-based line and column of
/// its start.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

impl Span {
    /// Smallest span covering both.
    pub fn join(self, other: Span) -> Span {
        let (first, _) = if self.start <= other.start { (self, other) } else { (other, self) };
        Span { start: first.start, end: self.end.max(other.end), line: first.line, col: first.col }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// Which typing rule group (or pipeline stage) a diagnostic comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Context formation, names and scoping.
    Ctx,
    Var,
    Univ,
    PiInd,
    PiExt,
    PiInf,
    EqId,
    EqU,
    J,
    JBeta,
    /// External (target-theory) typing.
    External,
    /// Lexing and parsing.
    Parse,
    /// Verification of generated output by the target kernel.
    Kernel,
    /// Output generation.
    Emit,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::Ctx => "CTX",
            Rule::Var => "VAR",
            Rule::Univ => "UNIV",
            Rule::PiInd => "PI-IND",
            Rule::PiExt => "PI-EXT",
            Rule::PiInf => "PI-INF",
            Rule::EqId => "EQ-ID",
            Rule::EqU => "EQ-U",
            Rule::J => "J",
            Rule::JBeta => "JBETA",
            Rule::External => "EXTERNAL",
            Rule::Parse => "PARSE",
            Rule::Kernel => "KERNEL",
            Rule::Emit => "EMIT",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub span: Span,
    pub rule: Rule,
    pub message: String,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl Diagnostic {
    pub fn error(rule: Rule, span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            span,
            rule,
            message: message.into(),
            expected: None,
            actual: None,
        }
    }

    pub fn with_types(mut self, expected: impl Into<String>, actual: impl Into<String>) -> Diagnostic {
        self.expected = Some(expected.into());
        self.actual = Some(actual.into());
        self
    }

    /// `path:line:col:severity:ruletag:message` on one line.
    pub fn line_format(&self, path: &str) -> String {
        let mut msg = self.message.replace('\n', " ");
        if let (Some(e), Some(a)) = (&self.expected, &self.actual) {
            msg.push_str(&format!(" (expected `{}`, found `{}`)", e, a));
        }
        format!("{}:{}:{}:{}:{}:{}", path, self.span.line, self.span.col, self.severity, self.rule, msg)
    }

    /// Multi-line rendering with a source excerpt and caret.
    pub fn human_format(&self, path: &str, source: &str, color: bool) -> String {
        let (red, bold, reset) = if color { ("\x1b[31m", "\x1b[1m", "\x1b[0m") } else { ("", "", "") };
        let mut out = format!(
            "{bold}{path}:{}:{}: {red}{}{reset}{bold} [{}]{reset} {}\n",
            self.span.line, self.span.col, self.severity, self.rule, self.message
        );
        if let Some(line) = source.lines().nth(self.span.line.saturating_sub(1)) {
            let width = source
                .get(self.span.start..self.span.end)
                .map(|s| s.lines().next().unwrap_or("").chars().count())
                .unwrap_or(1)
                .max(1);
            let pad: String = line.chars().take(self.span.col.saturating_sub(1)).map(|c| if c == '\t' { '\t' } else { ' ' }).collect();
            out.push_str(&format!("  | {}\n  | {}{red}{}{reset}\n", line, pad, "^".repeat(width)));
        }
        if let Some(e) = &self.expected {
            out.push_str(&format!("  expected: {}\n", e));
        }
        if let Some(a) = &self.actual {
            out.push_str(&format!("  found:    {}\n", a));
        }
        out
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} [{}] {}", self.span.line, self.span.col, self.severity, self.rule, self.message)
    }
}
