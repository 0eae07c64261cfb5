use super::{Expr, ExprKind, Motive, SurfaceModule};

pub fn print_module(m: &SurfaceModule) -> String {
    let mut out = String::new();
    if !m.ext.is_empty() {
        out.push_str("assume");
        for d in &m.ext {
            out.push_str(&format!("\n  ({} : {})", d.name.name, print_expr(&d.ty)));
        }
        out.push('\n');
    }
    for d in &m.sig {
        out.push_str(&format!("{} : {};\n", d.name.name, print_expr(&d.ty)));
    }
    out
}

pub fn print_expr(e: &Expr) -> String {
    go(e, 0)
}

/// `prec`: 0 arrow, 1 equation side, 2 application head, 3 argument.
fn go(e: &Expr, prec: u8) -> String {
    let (s, level) = match &e.kind {
        ExprKind::Name(n) => (n.clone(), 3),
        ExprKind::U => ("U".into(), 3),
        ExprKind::Set => ("Set".into(), 3),
        ExprKind::Refl => ("refl".into(), 3),
        ExprKind::Arrow { binders, dom, cod } => {
            let s = if binders.is_empty() {
                format!("{} -> {}", go(dom, 1), go(cod, 0))
            } else {
                let names: Vec<&str> = binders.iter().map(|b| b.name.as_str()).collect();
                format!("({} : {}) -> {}", names.join(" "), go(dom, 0), go(cod, 0))
            };
            (s, 0)
        }
        ExprKind::App(f, a) => (format!("{} {}", go(f, 2), go(a, 3)), 2),
        ExprKind::Eq { ty: None, lhs, rhs } => (format!("{} = {}", go(lhs, 2), go(rhs, 2)), 1),
        ExprKind::Eq { ty: Some(t), lhs, rhs } => {
            (format!("Id {} {} {}", go(t, 3), go(lhs, 3), go(rhs, 3)), 2)
        }
        ExprKind::J { ty, base, motive, pr, end, path } => {
            let mut s = format!("J {}", go(ty, 3));
            if let Some(b) = base {
                s.push_str(&format!(" {}", go(b, 3)));
            }
            s.push_str(&format!(" {} {} {} {}", motive_str(motive), go(pr, 3), go(end, 3), go(path, 3)));
            (s, 2)
        }
        ExprKind::JBeta { ty, base, motive, pr } => {
            let mut s = format!("Jbeta {}", go(ty, 3));
            if let Some(b) = base {
                s.push_str(&format!(" {}", go(b, 3)));
            }
            s.push_str(&format!(" {} {}", motive_str(motive), go(pr, 3)));
            (s, 2)
        }
    };
    if level < prec {
        format!("({})", s)
    } else {
        s
    }
}

fn motive_str(m: &Motive) -> String {
    format!("({} {}. {})", m.x.name, m.z.name, go(&m.body, 0))
}
