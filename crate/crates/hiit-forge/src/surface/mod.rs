//! Surface syntax of signature files.
//!
//! ```text
//! assume (A : Set) (P : A -> Set)
//! S1 : U;
//! base : S1;
//! loop : base = base;
//! ```

pub mod lexer;
mod parser;
mod print;

pub use parser::parse;
pub use print::{print_expr, print_module};

use crate::diag::Span;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Name(String),
    /// The signature universe.
    U,
    /// The external universe `Type₀`.
    Set,
    /// `(x y : A) -> B`, or `A -> B` when `binders` is empty.
    Arrow { binders: Vec<Ident>, dom: Box<Expr>, cod: Box<Expr> },
    App(Box<Expr>, Box<Expr>),
    /// `t = u`, or `Id a t u` when `ty` is given.
    Eq { ty: Option<Box<Expr>>, lhs: Box<Expr>, rhs: Box<Expr> },
    Refl,
    /// `J a t (x z. p) pr u eq`, or `J a (x z. p) pr b eq` without `base`.
    J { ty: Box<Expr>, base: Option<Box<Expr>>, motive: Motive, pr: Box<Expr>, end: Box<Expr>, path: Box<Expr> },
    /// `Jbeta a t (x z. p) pr`, or `Jbeta a (x z. p) pr` without `base`.
    JBeta { ty: Box<Expr>, base: Option<Box<Expr>>, motive: Motive, pr: Box<Expr> },
}

/// `(x z. body)`: binds the endpoint, then the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Motive {
    pub x: Ident,
    pub z: Ident,
    pub body: Box<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decl {
    pub name: Ident,
    pub ty: Expr,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurfaceModule {
    pub ext: Vec<Decl>,
    pub sig: Vec<Decl>,
}

impl SurfaceModule {
    /// A copy with every span zeroed, for comparisons that ignore positions.
    pub fn without_spans(&self) -> SurfaceModule {
        let mut m = self.clone();
        for d in m.ext.iter_mut().chain(m.sig.iter_mut()) {
            d.name.span = Span::default();
            d.ty.erase_spans();
        }
        m
    }

    pub fn decls(&self) -> impl Iterator<Item = &Decl> {
        self.ext.iter().chain(self.sig.iter())
    }
}

impl Expr {
    pub fn erase_spans(&mut self) {
        self.span = Span::default();
        match &mut self.kind {
            ExprKind::Name(_) | ExprKind::U | ExprKind::Set | ExprKind::Refl => {}
            ExprKind::Arrow { binders, dom, cod } => {
                binders.iter_mut().for_each(|b| b.span = Span::default());
                dom.erase_spans();
                cod.erase_spans();
            }
            ExprKind::App(f, a) => {
                f.erase_spans();
                a.erase_spans();
            }
            ExprKind::Eq { ty, lhs, rhs } => {
                if let Some(t) = ty {
                    t.erase_spans();
                }
                lhs.erase_spans();
                rhs.erase_spans();
            }
            ExprKind::J { ty, base, motive, pr, end, path } => {
                ty.erase_spans();
                if let Some(b) = base {
                    b.erase_spans();
                }
                motive.erase_spans();
                pr.erase_spans();
                end.erase_spans();
                path.erase_spans();
            }
            ExprKind::JBeta { ty, base, motive, pr } => {
                ty.erase_spans();
                if let Some(b) = base {
                    b.erase_spans();
                }
                motive.erase_spans();
                pr.erase_spans();
            }
        }
    }

    /// Calls `f` on this node and every descendant.
    pub fn visit(&self, f: &mut dyn FnMut(&Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Name(_) | ExprKind::U | ExprKind::Set | ExprKind::Refl => {}
            ExprKind::Arrow { dom, cod, .. } => {
                dom.visit(f);
                cod.visit(f);
            }
            ExprKind::App(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            ExprKind::Eq { ty, lhs, rhs } => {
                if let Some(t) = ty {
                    t.visit(f);
                }
                lhs.visit(f);
                rhs.visit(f);
            }
            ExprKind::J { ty, base, motive, pr, end, path } => {
                ty.visit(f);
                if let Some(b) = base {
                    b.visit(f);
                }
                motive.body.visit(f);
                pr.visit(f);
                end.visit(f);
                path.visit(f);
            }
            ExprKind::JBeta { ty, base, motive, pr } => {
                ty.visit(f);
                if let Some(b) = base {
                    b.visit(f);
                }
                motive.body.visit(f);
                pr.visit(f);
            }
        }
    }
}

impl Motive {
    fn erase_spans(&mut self) {
        self.x.span = Span::default();
        self.z.span = Span::default();
        self.body.erase_spans();
    }
}
