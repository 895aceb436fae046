use std::fmt::Write;

use super::ast::*;

/// Canonical text of a parsed file; parsing it gives back the same
/// declarations.
pub fn print(file: &SourceFile) -> String {
    let mut out = String::new();
    for d in &file.decls {
        decl(&mut out, d);
        out.push('\n');
    }
    out
}

fn decl(out: &mut String, d: &Decl) {
    match d {
        Decl::Field(FieldSpec::Rationals) => out.push_str("field Q"),
        Decl::Field(FieldSpec::Prime(p)) => {
            let _ = write!(out, "field F {p}");
        }
        Decl::Quiver { name, vertices, arrows } => {
            let _ = writeln!(out, "quiver {name} {{");
            if !vertices.is_empty() {
                let _ = writeln!(out, "  vertices {}", vertices.join(" "));
            }
            for a in arrows {
                let _ = writeln!(out, "  arrow {}: {} -> {}", a.name, a.source, a.target);
            }
            out.push('}');
        }
        Decl::Relations { name, relations } => {
            let _ = writeln!(out, "relations {name} {{");
            for r in relations {
                let _ = writeln!(out, "  {}", lincomb(r));
            }
            out.push('}');
        }
        Decl::Algebra { name, expr } => {
            let e = match expr {
                AlgebraExpr::Enveloping(a) => format!("enveloping({a})"),
                AlgebraExpr::Opposite(a) => format!("opposite({a})"),
                AlgebraExpr::Big(e) => format!("big({e})"),
                AlgebraExpr::Tensor(a, b) => format!("tensor({a}, {b})"),
                AlgebraExpr::Product(a, b) => format!("product({a}, {b})"),
            };
            let _ = write!(out, "algebra {name} = {e}");
        }
        Decl::Module { name, algebra, right, expr } => {
            let kw = if *right { "rmodule" } else { "module" };
            let _ = write!(out, "{kw} {name} over {algebra}");
            match expr {
                ModuleExpr::Matrices { dim, actions } => {
                    let _ = write!(out, " {{\n  dim {dim}\n");
                    for (k, m) in actions {
                        let _ = writeln!(out, "  {k} = {}", matrix(m));
                    }
                    out.push('}');
                }
                e => {
                    let _ = write!(out, " = {}", module(e));
                }
            }
        }
        Decl::Bimodule { name, over, expr } => {
            let _ = write!(out, "bimodule {name}");
            if let Some((l, r)) = over {
                let _ = write!(out, " over {l}, {r}");
            }
            match expr {
                BimoduleExpr::Matrices { dim, actions } => {
                    let _ = write!(out, " {{\n  dim {dim}\n");
                    for (s, k, m) in actions {
                        let side = match s {
                            Side::Left => "left",
                            Side::Right => "right",
                        };
                        let _ = writeln!(out, "  {side} {k} = {}", matrix(m));
                    }
                    out.push('}');
                }
                BimoduleExpr::Name(n) => {
                    let _ = write!(out, " = {n}");
                }
                BimoduleExpr::Regular => out.push_str(" = regular"),
                BimoduleExpr::Outer(x, y) => {
                    let _ = write!(out, " = outer({}, {})", module(x), module(y));
                }
                BimoduleExpr::Quotient(e) => {
                    let _ = write!(out, " = quotient({e})");
                }
            }
        }
        Decl::Extension { name, expr } => {
            let e = match expr {
                ExtensionExpr::Embed { small, big, matrix: None } => format!("embed({small}, {big})"),
                ExtensionExpr::Embed { small, big, matrix: Some(m) } => {
                    format!("embed({small}, {big}, {})", matrix(m))
                }
                ExtensionExpr::Trivial { algebra, bimodule } => format!("trivial({algebra}, {bimodule})"),
                ExtensionExpr::Split { algebra, bimodule, product } => {
                    format!("split({algebra}, {bimodule}, {})", matrix(product))
                }
                ExtensionExpr::Triangular { lambda, gamma, bimodule } => {
                    format!("triangular({lambda}, {gamma}, {bimodule})")
                }
                ExtensionExpr::ArrowRemoval { algebra, arrow } => format!("arrow_removal({algebra}, {arrow})"),
            };
            let _ = write!(out, "extension {name} = {e}");
        }
    }
}

/// `b*a - 2 d*c`.
pub fn lincomb(terms: &[Term]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let (neg, mag) = match t.coeff.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, t.coeff.as_str()),
        };
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if mag != "1" {
            s.push_str(mag);
            s.push(' ');
        }
        s.push_str(&t.path.join("*"));
    }
    s
}

fn vertex(v: &VertexRef) -> String {
    match v {
        VertexRef::Label(l) => l.clone(),
        VertexRef::Index(k) => format!("#{k}"),
    }
}

fn module(e: &ModuleExpr) -> String {
    match e {
        ModuleExpr::Name(n) => n.clone(),
        ModuleExpr::Simple(v) => format!("simple({})", vertex(v)),
        ModuleExpr::Proj(v) => format!("proj({})", vertex(v)),
        ModuleExpr::Regular => "regular".into(),
        ModuleExpr::Sum(parts) => {
            let p: Vec<String> = parts.iter().map(module).collect();
            format!("sum({})", p.join(", "))
        }
        ModuleExpr::Syzygy(m, n) => format!("syzygy({}, {n})", module(m)),
        // only reachable inside other expressions, which the grammar forbids
        ModuleExpr::Matrices { .. } => "regular".into(),
    }
}

fn matrix(m: &MatrixLit) -> String {
    let rows: Vec<String> = m.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", rows.join(", "))
}
