//! Evaluation of expression trees to canonical forms under a chosen mode.
//!
//! Evaluation is a bottom-up fold: every binary node evaluates its operands
//! first, so parenthesization is semantically significant (the algebras are
//! only associative away from the documented carve-out witnesses). Mode
//! legality is enforced here for operators and generators; coefficient and
//! edge-kind legality lives in the form layer.

use thiserror::Error;

use crate::atom::{EdgeKey, Mode, VertexAtom};
use crate::expr::{Expr, GenCall};
use crate::form::{Form, FormError};

/// Bounds used by the law harness when it generates random expressions.
/// `eval` itself never consults them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_atoms: 8, max_depth: 6 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalContext {
    pub mode: Mode,
    pub limits: Limits,
}

impl EvalContext {
    pub fn new(mode: Mode) -> Self {
        EvalContext { mode, limits: Limits::default() }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("`{op}` is not available in {mode} mode")]
    ModeViolation { op: &'static str, mode: Mode },
    #[error("edge({atom}, {atom}) is a loop and {mode} mode has no loops")]
    LoopEdge { atom: VertexAtom, mode: Mode },
}

/// Evaluates `e` in `ctx.mode`.
pub fn eval(e: &Expr, ctx: &EvalContext) -> Result<Form, EvalError> {
    let mode = ctx.mode;
    match e {
        Expr::Atom(v) => Ok(Form::vertex(v.clone(), 1, mode)?),
        Expr::Phi => Ok(Form::empty(mode)),
        Expr::Union(l, r) => Ok(eval(l, ctx)?.fuse(&eval(r, ctx)?)?),
        Expr::Link(l, r) => link_forms(&eval(l, ctx)?, &eval(r, ctx)?),
        Expr::DirectedLink { left, right, reversed } => {
            if !mode.allows_directed() {
                let op = if *reversed { "<-" } else { "->" };
                return Err(EvalError::ModeViolation { op, mode });
            }
            Ok(eval(left, ctx)?.link_directed(&eval(right, ctx)?, *reversed)?)
        }
        Expr::Anti(x) => Ok(eval(x, ctx)?.negate()),
        Expr::Scale(n, x) => Ok(eval(x, ctx)?.scale(*n)?),
        Expr::Twist(x) => {
            if !mode.allows_directed() {
                return Err(EvalError::ModeViolation { op: "'", mode });
            }
            Ok(eval(x, ctx)?.twist()?)
        }
        Expr::Generator(call) => eval_gen(call, mode),
    }
}

/// The undirected link, with the mode check the `&` operator needs. The
/// pure oriented algebra has no undirected link at all.
fn link_forms(a: &Form, b: &Form) -> Result<Form, EvalError> {
    if a.mode() == Mode::Oriented {
        return Err(EvalError::ModeViolation { op: "&", mode: Mode::Oriented });
    }
    Ok(a.link(b)?)
}

fn atom_form(v: &VertexAtom, mode: Mode) -> Result<Form, EvalError> {
    Ok(Form::vertex(v.clone(), 1, mode)?)
}

/// Generators expand by iterating the defining folds directly rather than
/// by building and re-evaluating expression trees.
fn eval_gen(call: &GenCall, mode: Mode) -> Result<Form, EvalError> {
    match call {
        GenCall::Path(vs) => {
            if vs.len() == 1 {
                return atom_form(&vs[0], mode);
            }
            let mut acc = Form::empty(mode);
            for pair in vs.windows(2) {
                let rung = link_forms(&atom_form(&pair[0], mode)?, &atom_form(&pair[1], mode)?)?;
                acc = acc.fuse(&rung)?;
            }
            Ok(acc)
        }
        GenCall::Cycle(vs) => {
            let path = eval_gen(&GenCall::Path(vs.clone()), mode)?;
            let first = &vs[0];
            let last = &vs[vs.len() - 1];
            let closing = link_forms(&atom_form(first, mode)?, &atom_form(last, mode)?)?;
            Ok(path.fuse(&closing)?)
        }
        GenCall::Star { center, leaves } => {
            let mut fused = Form::empty(mode);
            for leaf in leaves {
                fused = fused.fuse(&atom_form(leaf, mode)?)?;
            }
            link_forms(&atom_form(center, mode)?, &fused)
        }
        GenCall::Complete(vs) => {
            let mut acc = atom_form(&vs[0], mode)?;
            for v in &vs[1..] {
                acc = link_forms(&acc, &atom_form(v, mode)?)?;
            }
            Ok(acc)
        }
        GenCall::Null(vs) => {
            let mut acc = Form::empty(mode);
            for v in vs {
                acc = acc.fuse(&atom_form(v, mode)?)?;
            }
            Ok(acc)
        }
        GenCall::Edge(u, w) => signed_edge(u, w, 1, mode),
        GenCall::AntiEdge(u, w) => signed_edge(u, w, -1, mode),
        GenCall::Loop(v) => {
            if !mode.is_arithmetical() {
                return Err(EvalError::ModeViolation { op: "loop", mode });
            }
            Ok(Form::single_edge(EdgeKey::undirected(v.clone(), v.clone()), 1, mode)?)
        }
    }
}

/// A vertex-free single edge: the endpoints are not part of the form. With
/// equal endpoints this is a loop, which only arithmetical mode has.
fn signed_edge(u: &VertexAtom, w: &VertexAtom, coeff: i64, mode: Mode) -> Result<Form, EvalError> {
    if u == w && !mode.is_arithmetical() {
        return Err(EvalError::LoopEdge { atom: u.clone(), mode });
    }
    Ok(Form::single_edge(EdgeKey::undirected(u.clone(), w.clone()), coeff, mode)?)
}
