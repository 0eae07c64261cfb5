use std::collections::HashMap;

use super::lexer::{lex, Tok};
use super::{Decl, Expr, ExprKind, Ident, Motive, SurfaceModule};
use crate::diag::{Diagnostic, Rule, Span};

/// Nesting bound that keeps recursion on hostile input finite.
const MAX_DEPTH: usize = 200;

pub fn parse(src: &str) -> Result<SurfaceModule, Diagnostic> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, src_len: src.len(), depth: 0 };
    let m = p.module()?;
    check_names(&m)?;
    if m.sig.is_empty() {
        let span = match p.toks.last() {
            Some((_, s)) => Span { start: s.end, end: s.end, line: s.line, col: s.col },
            None => Span { start: 0, end: 0, line: 1, col: 1 },
        };
        return Err(Diagnostic::error(Rule::Parse, span, "empty signature block"));
    }
    Ok(m)
}

fn check_names(m: &SurfaceModule) -> Result<(), Diagnostic> {
    let mut seen: HashMap<&str, Span> = HashMap::new();
    for d in m.decls() {
        if let Some(prev) = seen.get(d.name.name.as_str()) {
            return Err(Diagnostic::error(
                Rule::Ctx,
                d.name.span,
                format!("duplicate declaration `{}` (first declared at line {})", d.name.name, prev.line),
            ));
        }
        seen.insert(&d.name.name, d.name.span);
    }
    Ok(())
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    src_len: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        match self.toks.get(self.pos) {
            Some((_, s)) => *s,
            None => match self.toks.last() {
                Some((_, s)) => Span { start: s.end, end: s.end, line: s.line, col: s.col },
                None => Span { start: self.src_len, end: self.src_len, line: 1, col: 1 },
            },
        }
    }

    fn prev_span(&self) -> Span {
        self.toks[self.pos - 1].1
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let found = match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".into(),
        };
        Diagnostic::error(Rule::Parse, self.span(), format!("unexpected {}, expected {}", found, wanted))
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<Span, Diagnostic> {
        if self.eat(t) {
            Ok(self.prev_span())
        } else {
            Err(self.unexpected(&t.describe()))
        }
    }

    fn ident(&mut self) -> Result<Ident, Diagnostic> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let name = s.clone();
                self.pos += 1;
                Ok(Ident { name, span: self.prev_span() })
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn enter(&mut self) -> Result<(), Diagnostic> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(Diagnostic::error(Rule::Parse, self.span(), "expression nested too deeply"));
        }
        Ok(())
    }

    fn module(&mut self) -> Result<SurfaceModule, Diagnostic> {
        let mut m = SurfaceModule::default();
        if self.eat(&Tok::Assume) {
            while self.peek() == Some(&Tok::LParen) {
                self.pos += 1;
                let mut names = vec![self.ident()?];
                while let Some(Tok::Ident(_)) = self.peek() {
                    names.push(self.ident()?);
                }
                self.expect(&Tok::Colon)?;
                let ty = self.expr()?;
                self.expect(&Tok::RParen)?;
                for n in names {
                    m.ext.push(Decl { name: n, ty: ty.clone() });
                }
            }
        }
        while self.peek().is_some() {
            let name = self.ident()?;
            self.expect(&Tok::Colon)?;
            let ty = self.expr()?;
            self.expect(&Tok::Semi)?;
            m.sig.push(Decl { name, ty });
        }
        Ok(m)
    }

    /// `(` name+ `:` begins a binder group.
    fn binder_ahead(&self) -> bool {
        if self.peek() != Some(&Tok::LParen) {
            return false;
        }
        let mut k = 1;
        while let Some(Tok::Ident(_)) = self.peek_at(k) {
            k += 1;
        }
        k > 1 && self.peek_at(k) == Some(&Tok::Colon)
    }

    /// `(` name name `.` begins a J motive.
    fn motive_ahead(&self) -> bool {
        self.peek() == Some(&Tok::LParen)
            && matches!(self.peek_at(1), Some(Tok::Ident(_)))
            && matches!(self.peek_at(2), Some(Tok::Ident(_)))
            && self.peek_at(3) == Some(&Tok::Dot)
    }

    fn expr(&mut self) -> Result<Expr, Diagnostic> {
        self.enter()?;
        let r = self.expr_inner();
        self.depth -= 1;
        r
    }

    fn expr_inner(&mut self) -> Result<Expr, Diagnostic> {
        if self.binder_ahead() {
            let open = self.span();
            self.pos += 1;
            let mut binders = vec![self.ident()?];
            while let Some(Tok::Ident(_)) = self.peek() {
                binders.push(self.ident()?);
            }
            self.expect(&Tok::Colon)?;
            let dom = self.expr()?;
            self.expect(&Tok::RParen)?;
            // Consecutive groups share one arrow.
            let cod = if self.binder_ahead() {
                self.expr()?
            } else {
                self.expect(&Tok::Arrow)?;
                self.expr()?
            };
            let span = open.join(cod.span);
            return Ok(Expr { kind: ExprKind::Arrow { binders, dom: Box::new(dom), cod: Box::new(cod) }, span });
        }
        let lhs = self.eq_expr()?;
        if self.eat(&Tok::Arrow) {
            let cod = self.expr()?;
            let span = lhs.span.join(cod.span);
            return Ok(Expr {
                kind: ExprKind::Arrow { binders: Vec::new(), dom: Box::new(lhs), cod: Box::new(cod) },
                span,
            });
        }
        Ok(lhs)
    }

    fn eq_expr(&mut self) -> Result<Expr, Diagnostic> {
        let lhs = self.app()?;
        if self.eat(&Tok::Equals) {
            let rhs = self.app()?;
            let span = lhs.span.join(rhs.span);
            return Ok(Expr { kind: ExprKind::Eq { ty: None, lhs: Box::new(lhs), rhs: Box::new(rhs) }, span });
        }
        Ok(lhs)
    }

    fn app(&mut self) -> Result<Expr, Diagnostic> {
        let mut head = match self.peek() {
            Some(Tok::J) | Some(Tok::JBeta) => self.j_form()?,
            Some(Tok::Id) => {
                let start = self.span();
                self.pos += 1;
                let ty = self.atom_req()?;
                let lhs = self.atom_req()?;
                let rhs = self.atom_req()?;
                let span = start.join(rhs.span);
                Expr { kind: ExprKind::Eq { ty: Some(Box::new(ty)), lhs: Box::new(lhs), rhs: Box::new(rhs) }, span }
            }
            _ => self.atom_req()?,
        };
        while let Some(a) = self.atom()? {
            let span = head.span.join(a.span);
            head = Expr { kind: ExprKind::App(Box::new(head), Box::new(a)), span };
        }
        Ok(head)
    }

    fn j_form(&mut self) -> Result<Expr, Diagnostic> {
        let start = self.span();
        let beta = self.peek() == Some(&Tok::JBeta);
        self.pos += 1;
        let ty = Box::new(self.atom_req()?);
        let base = if self.motive_ahead() { None } else { Some(Box::new(self.atom_req()?)) };
        if !self.motive_ahead() {
            return Err(self.unexpected("a motive `(x z. p)`"));
        }
        let motive = self.motive()?;
        let pr = Box::new(self.atom_req()?);
        if beta {
            let span = start.join(pr.span);
            return Ok(Expr { kind: ExprKind::JBeta { ty, base, motive, pr }, span });
        }
        let end = Box::new(self.atom_req()?);
        let path = Box::new(self.atom_req()?);
        let span = start.join(path.span);
        Ok(Expr { kind: ExprKind::J { ty, base, motive, pr, end, path }, span })
    }

    fn motive(&mut self) -> Result<Motive, Diagnostic> {
        self.expect(&Tok::LParen)?;
        let x = self.ident()?;
        let z = self.ident()?;
        self.expect(&Tok::Dot)?;
        let body = Box::new(self.expr()?);
        self.expect(&Tok::RParen)?;
        Ok(Motive { x, z, body })
    }

    fn atom_req(&mut self) -> Result<Expr, Diagnostic> {
        match self.atom()? {
            Some(e) => Ok(e),
            None => Err(self.unexpected("a term")),
        }
    }

    fn atom(&mut self) -> Result<Option<Expr>, Diagnostic> {
        let span = self.span();
        let kind = match self.peek() {
            Some(Tok::Ident(s)) => ExprKind::Name(s.clone()),
            Some(Tok::U) => ExprKind::U,
            Some(Tok::Set) => ExprKind::Set,
            Some(Tok::Refl) => ExprKind::Refl,
            Some(Tok::LParen) if !self.motive_ahead() => {
                self.pos += 1;
                let mut e = self.expr()?;
                let close = self.expect(&Tok::RParen)?;
                e.span = span.join(close);
                return Ok(Some(e));
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        Ok(Some(Expr { kind, span }))
    }
}
