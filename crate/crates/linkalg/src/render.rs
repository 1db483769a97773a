//! Text, JSON and DOT renderings of expressions and forms.
//!
//! Every function here is deterministic: forms keep their entries in ordered
//! maps, so equal forms render byte-identically. `print_expr` emits the
//! minimal parenthesization that reparses to the same tree.

use std::fmt;

use serde::Serialize;

use crate::atom::{EdgeKind, VertexAtom};
use crate::expr::{Expr, GenCall};
use crate::form::Form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    CanonicalText,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: RenderFormat,
    /// Dash the strokes of negative-coefficient nodes and edges in DOT.
    /// The "~" labels stay either way so no information is dropped.
    pub anti_style: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { format: RenderFormat::CanonicalText, anti_style: true }
    }
}

/// Renders a form in the format selected by `opts`.
pub fn render(form: &Form, opts: &RenderOptions) -> String {
    match opts.format {
        RenderFormat::CanonicalText => print_form(form),
        RenderFormat::Json => to_json(form),
        RenderFormat::Dot => to_dot(form, opts),
    }
}

/// Coefficient prefix: `+` and `-` for the unit coefficients, the bare
/// integer otherwise (only reachable in arithmetical forms).
fn coeff_prefix(c: i64) -> String {
    match c {
        1 => "+".to_owned(),
        -1 => "-".to_owned(),
        n => n.to_string(),
    }
}

/// Canonical `{vertices | edges}` listing; the empty form prints as `phi`.
pub fn print_form(form: &Form) -> String {
    if form.is_empty() {
        return "phi".to_owned();
    }
    let vertices: Vec<String> = form
        .vertices()
        .iter()
        .map(|(v, c)| format!("{}{}", coeff_prefix(*c), v))
        .collect();
    let edges: Vec<String> = form
        .edges()
        .iter()
        .map(|(k, c)| format!("{}{}", coeff_prefix(*c), k))
        .collect();
    format!("{{{} | {}}}", vertices.join(", "), edges.join(", "))
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_form(self))
    }
}

// Binding strength of each node, loosest first. A child is parenthesized
// when its level is below its parent's, or equal on the right of a binary
// operator (all binary operators associate left).
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Union(..) => 1,
        Expr::Link(..) | Expr::DirectedLink { .. } => 2,
        Expr::Anti(_) | Expr::Scale(..) => 3,
        Expr::Twist(_) => 4,
        Expr::Atom(_) | Expr::Phi | Expr::Generator(_) => 5,
    }
}

/// Minimal-parentheses rendering; `parse(print_expr(e))` returns `e`.
pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e);
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_expr(self))
    }
}

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Atom(v) => out.push_str(v.as_str()),
        Expr::Phi => out.push_str("phi"),
        Expr::Union(l, r) => write_binary(out, l, " + ", r, 1),
        Expr::Link(l, r) => write_binary(out, l, " & ", r, 2),
        Expr::DirectedLink { left, right, reversed } => {
            write_binary(out, left, if *reversed { " <- " } else { " -> " }, right, 2)
        }
        Expr::Anti(x) => {
            out.push('~');
            write_child(out, x, 3);
        }
        Expr::Scale(n, x) => {
            out.push_str(&n.to_string());
            out.push('*');
            write_child(out, x, 3);
        }
        Expr::Twist(x) => {
            write_child(out, x, 4);
            out.push('\'');
        }
        Expr::Generator(call) => write_gen(out, call),
    }
}

fn write_binary(out: &mut String, l: &Expr, op: &str, r: &Expr, level: u8) {
    if prec(l) < level {
        write_parens(out, l);
    } else {
        write_expr(out, l);
    }
    out.push_str(op);
    if prec(r) <= level {
        write_parens(out, r);
    } else {
        write_expr(out, r);
    }
}

fn write_child(out: &mut String, e: &Expr, level: u8) {
    if prec(e) < level {
        write_parens(out, e);
    } else {
        write_expr(out, e);
    }
}

fn write_parens(out: &mut String, e: &Expr) {
    out.push('(');
    write_expr(out, e);
    out.push(')');
}

fn write_gen(out: &mut String, call: &GenCall) {
    let plain = |out: &mut String, name: &str, atoms: &[VertexAtom]| {
        out.push_str(name);
        out.push('(');
        write_names(out, atoms);
        out.push(')');
    };
    match call {
        GenCall::Path(v) => plain(out, "path", v),
        GenCall::Cycle(v) => plain(out, "cycle", v),
        GenCall::Complete(v) => plain(out, "complete", v),
        GenCall::Null(v) => plain(out, "null", v),
        GenCall::Star { center, leaves } => {
            out.push_str("star(");
            out.push_str(center.as_str());
            out.push_str("; ");
            write_names(out, leaves);
            out.push(')');
        }
        GenCall::Edge(u, w) => plain(out, "edge", &[u.clone(), w.clone()]),
        GenCall::AntiEdge(u, w) => plain(out, "antiedge", &[u.clone(), w.clone()]),
        GenCall::Loop(v) => plain(out, "loop", std::slice::from_ref(v)),
    }
}

fn write_names(out: &mut String, atoms: &[VertexAtom]) {
    for (i, a) in atoms.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(a.as_str());
    }
}

/// Indented tree dump of an expression, one node per line.
pub fn print_ast(e: &Expr) -> String {
    let mut out = String::new();
    write_ast(&mut out, e, 0);
    out
}

fn write_ast(out: &mut String, e: &Expr, depth: usize) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    match e {
        Expr::Atom(v) => {
            out.push_str("atom ");
            out.push_str(v.as_str());
            out.push('\n');
        }
        Expr::Phi => out.push_str("phi\n"),
        Expr::Union(l, r) => {
            out.push_str("union\n");
            write_ast(out, l, depth + 1);
            write_ast(out, r, depth + 1);
        }
        Expr::Link(l, r) => {
            out.push_str("link\n");
            write_ast(out, l, depth + 1);
            write_ast(out, r, depth + 1);
        }
        Expr::DirectedLink { left, right, reversed } => {
            out.push_str(if *reversed { "link <-\n" } else { "link ->\n" });
            write_ast(out, left, depth + 1);
            write_ast(out, right, depth + 1);
        }
        Expr::Anti(x) => {
            out.push_str("anti\n");
            write_ast(out, x, depth + 1);
        }
        Expr::Scale(n, x) => {
            out.push_str("scale ");
            out.push_str(&n.to_string());
            out.push('\n');
            write_ast(out, x, depth + 1);
        }
        Expr::Twist(x) => {
            out.push_str("twist\n");
            write_ast(out, x, depth + 1);
        }
        Expr::Generator(call) => {
            let mut line = String::new();
            write_gen(&mut line, call);
            out.push_str(&line);
            out.push('\n');
        }
    }
}

#[derive(Serialize)]
struct JsonForm<'a> {
    mode: String,
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<JsonEdge<'a>>,
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    name: &'a str,
    coeff: i64,
}

#[derive(Serialize)]
struct JsonEdge<'a> {
    ends: [&'a str; 2],
    kind: &'static str,
    coeff: i64,
}

/// Compact JSON with fixed field order: mode, vertices (name-sorted),
/// edges (key-sorted). Equal forms serialize byte-identically.
pub fn to_json(form: &Form) -> String {
    let doc = JsonForm {
        mode: form.mode().to_string(),
        vertices: form
            .vertices()
            .iter()
            .map(|(v, c)| JsonVertex { name: v.as_str(), coeff: *c })
            .collect(),
        edges: form
            .edges()
            .iter()
            .map(|(k, c)| {
                let (a, b) = k.ends();
                JsonEdge {
                    ends: [a.as_str(), b.as_str()],
                    kind: match k.kind() {
                        EdgeKind::Undirected => "undirected",
                        EdgeKind::Directed => "directed",
                    },
                    coeff: *c,
                }
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("form serialization cannot fail")
}

/// Graphviz output. Directed-capable modes emit `digraph` (undirected pairs
/// as `dir=none` edges); the rest emit `graph`. Negative coefficients keep a
/// "~" label, and a dashed stroke when `opts.anti_style` is set. Multiplicity
/// above one becomes a `×k` label.
pub fn to_dot(form: &Form, opts: &RenderOptions) -> String {
    let directed = form.mode().allows_directed();
    let mut out = String::new();
    out.push_str(if directed { "digraph G {\n" } else { "graph G {\n" });
    for (v, c) in form.vertices() {
        let mut attrs = Vec::new();
        if *c < 0 && opts.anti_style {
            attrs.push("style=dashed".to_owned());
        }
        if *c < 0 || c.abs() > 1 {
            let mut label = String::new();
            if *c < 0 {
                label.push('~');
            }
            label.push_str(v.as_str());
            if c.abs() > 1 {
                label.push_str(&format!(" ×{}", c.abs()));
            }
            attrs.push(format!("label=\"{label}\""));
        }
        out.push_str(&format!("  \"{v}\"{};\n", attr_list(&attrs)));
    }
    for (k, c) in form.edges() {
        let (a, b) = k.ends();
        let mut attrs = Vec::new();
        if directed && k.kind() == EdgeKind::Undirected {
            attrs.push("dir=none".to_owned());
        }
        if *c < 0 && opts.anti_style {
            attrs.push("style=dashed".to_owned());
        }
        if *c < 0 || c.abs() > 1 {
            let mut label = String::new();
            if *c < 0 {
                label.push('~');
            }
            if c.abs() > 1 {
                label.push_str(&format!("×{}", c.abs()));
            }
            attrs.push(format!("label=\"{label}\""));
        }
        let op = if directed { "->" } else { "--" };
        out.push_str(&format!("  \"{a}\" {op} \"{b}\"{};\n", attr_list(&attrs)));
    }
    out.push('}');
    out
}

fn attr_list(attrs: &[String]) -> String {
    if attrs.is_empty() {
        String::new()
    } else {
        format!(" [{}]", attrs.join(", "))
    }
}
