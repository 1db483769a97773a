//! Randomized checking of the algebra's laws.
//!
//! Each law pairs a generator with an equation. A trial draws random operands
//! at the generality the law actually holds at (arbitrary forms, sign-disjoint
//! forms, all-positive forms, grounded forms, or single signed vertices) and
//! checks the equation on canonical forms. Trials are deterministic: trial `t`
//! of a run with seed `s` always sees the same operands, independent of every
//! other trial.
//!
//! A few laws are deliberate counterexample witnesses (`expect_fail`). They
//! pin inputs where an equation genuinely breaks, so a run that finds the
//! counterexample is the correct outcome. [`default_catalog`] skips them;
//! they run only when asked for by name.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::atom::{EdgeKey, EdgeKind, Mode, VertexAtom};
use crate::eval::{eval, EvalContext, Limits};
use crate::expr::Expr;
use crate::form::Form;

/// Odd constant used to spread trial indices across seed space.
const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

type LawCheck = fn(&mut ChaCha8Rng, &Limits) -> Result<(), String>;

/// One checkable law: a name, the algebra it runs in, and a single-trial body.
#[derive(Clone, Copy)]
pub struct LawDef {
    pub name: &'static str,
    pub mode: Mode,
    pub about: &'static str,
    /// True for counterexample witnesses: a run is correct when it fails.
    pub expect_fail: bool,
    check: LawCheck,
}

/// Outcome of running one law for a number of trials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub name: &'static str,
    pub mode: Mode,
    pub expected_failure: bool,
    pub trials: u32,
    pub passes: u32,
    /// First failing trial and its operand bindings, if any trial failed.
    pub counterexample: Option<(u32, String)>,
}

impl LawReport {
    /// True when the run matches the law's expectation: no counterexample for
    /// ordinary laws, a counterexample for witness laws.
    pub fn ok(&self) -> bool {
        self.counterexample.is_some() == self.expected_failure
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown law `{0}`")]
pub struct UnknownLaw(pub String);

/// Every law, witnesses included.
pub fn law_catalog() -> &'static [LawDef] {
    CATALOG
}

/// The laws a plain verification run should execute: everything except the
/// expected-failure witnesses.
pub fn default_catalog() -> impl Iterator<Item = &'static LawDef> {
    CATALOG.iter().filter(|law| !law.expect_fail)
}

/// Runs the named law. Trial `t` draws from a rng seeded with
/// `seed ^ t * SEED_STRIDE`, so runs are reproducible and order-free.
pub fn check_law(
    name: &str,
    trials: u32,
    seed: u64,
    limits: &Limits,
) -> Result<LawReport, UnknownLaw> {
    let law = CATALOG
        .iter()
        .find(|law| law.name == name)
        .ok_or_else(|| UnknownLaw(name.to_string()))?;
    Ok(run_law(law, trials, seed, limits))
}

/// Runs one law definition, stopping at the first counterexample.
pub fn run_law(law: &LawDef, trials: u32, seed: u64, limits: &Limits) -> LawReport {
    let mut passes = 0;
    let mut counterexample = None;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(SEED_STRIDE));
        match (law.check)(&mut rng, limits) {
            Ok(()) => passes += 1,
            Err(detail) => {
                counterexample = Some((t, detail));
                break;
            }
        }
    }
    LawReport {
        name: law.name,
        mode: law.mode,
        expected_failure: law.expect_fail,
        trials,
        passes,
        counterexample,
    }
}

// ---------------------------------------------------------------------------
// Operand generation
// ---------------------------------------------------------------------------

/// Atom pool the generators draw from. At least two atoms even under tiny
/// limits, so laws over pairs always have material.
fn universe(limits: &Limits) -> Vec<VertexAtom> {
    (1..=limits.max_atoms.max(2))
        .map(|i| VertexAtom::new(format!("v{i}")).expect("generated names are valid"))
        .collect()
}

fn pick_sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.random_bool(0.7) { 1 } else { -1 }
}

/// Draws `k` distinct atoms from the pool (fewer if the pool is smaller).
fn sample_distinct(rng: &mut ChaCha8Rng, atoms: &[VertexAtom], k: usize) -> Vec<VertexAtom> {
    let mut pool: Vec<usize> = (0..atoms.len()).collect();
    let mut out = Vec::with_capacity(k.min(pool.len()));
    for _ in 0..k.min(atoms.len()) {
        let i = rng.random_range(0..pool.len());
        out.push(atoms[pool.swap_remove(i)].clone());
    }
    out
}

fn leaf(rng: &mut ChaCha8Rng, atoms: &[VertexAtom]) -> Expr {
    if rng.random_bool(0.12) {
        Expr::Phi
    } else {
        Expr::Atom(atoms[rng.random_range(0..atoms.len())].clone())
    }
}

fn rand_gen(rng: &mut ChaCha8Rng, mode: Mode, atoms: &[VertexAtom], signed: bool) -> Expr {
    if mode == Mode::Oriented {
        // The stock families build undirected edges, so only the edge-free
        // one is available here.
        let k = rng.random_range(1..=3);
        let picked = sample_distinct(rng, atoms, k);
        return Expr::null(picked).expect("sampled atoms are distinct");
    }
    let upper = if mode.is_arithmetical() { 8 } else { 7 };
    let family = rng.random_range(0..upper);
    let k = match family {
        0 | 2 => rng.random_range(2..=4),
        1 => rng.random_range(3..=4),
        3 => rng.random_range(1..=4),
        4 => rng.random_range(1..=3),
        _ => 2,
    };
    match family {
        0 => Expr::path(sample_distinct(rng, atoms, k)).expect("sampled atoms are distinct"),
        1 => Expr::cycle(sample_distinct(rng, atoms, k)).expect("sampled atoms are distinct"),
        2 => {
            let mut picked = sample_distinct(rng, atoms, k);
            let center = picked.remove(0);
            Expr::star(center, picked).expect("center was removed from the leaves")
        }
        3 => Expr::complete(sample_distinct(rng, atoms, k)).expect("sampled atoms are distinct"),
        4 => Expr::null(sample_distinct(rng, atoms, k)).expect("sampled atoms are distinct"),
        5 => {
            let pair = sample_distinct(rng, atoms, 2);
            Expr::edge(pair[0].clone(), pair[1].clone())
        }
        6 => {
            let pair = sample_distinct(rng, atoms, 2);
            if signed {
                Expr::antiedge(pair[0].clone(), pair[1].clone())
            } else {
                Expr::edge(pair[0].clone(), pair[1].clone())
            }
        }
        _ => Expr::loop_edge(atoms[rng.random_range(0..atoms.len())].clone()),
    }
}

fn scale_pick(rng: &mut ChaCha8Rng, mode: Mode, signed: bool) -> i64 {
    if mode.is_arithmetical() {
        let n = rng.random_range(1..=3);
        if signed && rng.random_bool(0.3) { -n } else { n }
    } else if signed && rng.random_bool(0.3) {
        -1
    } else {
        1
    }
}

/// Random expression over the pool, legal for `mode` by construction.
/// `signed: false` keeps every produced coefficient positive.
fn rand_expr(
    rng: &mut ChaCha8Rng,
    mode: Mode,
    depth: usize,
    atoms: &[VertexAtom],
    signed: bool,
) -> Expr {
    if depth == 0 || rng.random_bool(0.15) {
        return leaf(rng, atoms);
    }
    match rng.random_range(0u32..100) {
        0..34 => Expr::union(
            rand_expr(rng, mode, depth - 1, atoms, signed),
            rand_expr(rng, mode, depth - 1, atoms, signed),
        ),
        34..62 => {
            let l = rand_expr(rng, mode, depth - 1, atoms, signed);
            let r = rand_expr(rng, mode, depth - 1, atoms, signed);
            match mode {
                Mode::Oriented => Expr::directed_link(l, r, rng.random_bool(0.5)),
                Mode::Mixed if rng.random_bool(0.5) => {
                    Expr::directed_link(l, r, rng.random_bool(0.5))
                }
                _ => Expr::link(l, r),
            }
        }
        62..74 => {
            let inner = rand_expr(rng, mode, depth - 1, atoms, signed);
            if signed { Expr::anti(inner) } else { inner }
        }
        74..82 => Expr::scale(
            scale_pick(rng, mode, signed),
            rand_expr(rng, mode, depth - 1, atoms, signed),
        ),
        82..90 if mode.allows_directed() => {
            Expr::twist(rand_expr(rng, mode, depth - 1, atoms, signed))
        }
        _ => rand_gen(rng, mode, atoms, signed),
    }
}

/// Random canonical form: evaluates a random expression.
fn rand_form(rng: &mut ChaCha8Rng, mode: Mode, limits: &Limits) -> Form {
    let atoms = universe(limits);
    let depth = rng.random_range(1..=limits.max_depth.max(1));
    let e = rand_expr(rng, mode, depth, &atoms, true);
    eval(&e, &EvalContext::new(mode)).expect("generated expression is legal for its mode")
}

/// Random form with every coefficient positive.
fn rand_positive_form(rng: &mut ChaCha8Rng, mode: Mode, limits: &Limits) -> Form {
    let atoms = universe(limits);
    let depth = rng.random_range(1..=limits.max_depth.max(1));
    let e = rand_expr(rng, mode, depth, &atoms, false);
    eval(&e, &EvalContext::new(mode)).expect("generated expression is legal for its mode")
}

/// A single signed vertex as a base form.
fn signed_atom(rng: &mut ChaCha8Rng, atoms: &[VertexAtom]) -> Form {
    let atom = atoms[rng.random_range(0..atoms.len())].clone();
    Form::vertex(atom, pick_sign(rng), Mode::Base).expect("unit coefficient is valid")
}

/// `n` base forms whose combined support carries one sign per key: a fixed
/// per-trial sign is assigned to every vertex and edge key, and each form
/// samples a subset of keys at those signs.
fn sign_disjoint_forms(rng: &mut ChaCha8Rng, limits: &Limits, n: usize) -> Vec<Form> {
    let atoms = universe(limits);
    let sigma: Vec<i64> = atoms.iter().map(|_| pick_sign(rng)).collect();
    let mut tau: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for i in 0..atoms.len() {
        for j in i + 1..atoms.len() {
            tau.insert((i, j), pick_sign(rng));
        }
    }
    (0..n)
        .map(|_| {
            let mut vertices = BTreeMap::new();
            let mut edges = BTreeMap::new();
            for (i, atom) in atoms.iter().enumerate() {
                if rng.random_bool(0.35) {
                    vertices.insert(atom.clone(), sigma[i]);
                }
            }
            for i in 0..atoms.len() {
                for j in i + 1..atoms.len() {
                    if rng.random_bool(0.15) {
                        let key = EdgeKey::undirected(atoms[i].clone(), atoms[j].clone());
                        edges.insert(key, tau[&(i, j)]);
                    }
                }
            }
            Form::from_parts(Mode::Base, vertices, edges).expect("unit coefficients are valid")
        })
        .collect()
}

/// A base form whose edges sit between present vertices of the same sign and
/// carry that sign, so its edge-derived vertex support equals its vertex set.
fn grounded_form(rng: &mut ChaCha8Rng, limits: &Limits) -> Form {
    let atoms = universe(limits);
    let sigma: Vec<i64> = atoms.iter().map(|_| pick_sign(rng)).collect();
    let mut present = Vec::new();
    let mut vertices = BTreeMap::new();
    for (i, atom) in atoms.iter().enumerate() {
        if rng.random_bool(0.5) {
            vertices.insert(atom.clone(), sigma[i]);
            present.push(i);
        }
    }
    let mut edges = BTreeMap::new();
    for (a, &i) in present.iter().enumerate() {
        for &j in &present[a + 1..] {
            if sigma[i] == sigma[j] && rng.random_bool(0.4) {
                let key = EdgeKey::undirected(atoms[i].clone(), atoms[j].clone());
                edges.insert(key, sigma[i]);
            }
        }
    }
    Form::from_parts(Mode::Base, vertices, edges).expect("unit coefficients are valid")
}

/// Random plain graph: positive vertices and positive edges between them.
fn plain_graph(rng: &mut ChaCha8Rng, limits: &Limits) -> Form {
    let atoms = universe(limits);
    let k = rng.random_range(1..=atoms.len().min(6));
    let picked = sample_distinct(rng, &atoms, k);
    let mut vertices = BTreeMap::new();
    for atom in &picked {
        vertices.insert(atom.clone(), 1);
    }
    let mut edges = BTreeMap::new();
    for i in 0..picked.len() {
        for j in i + 1..picked.len() {
            if rng.random_bool(0.4) {
                edges.insert(EdgeKey::undirected(picked[i].clone(), picked[j].clone()), 1);
            }
        }
    }
    Form::from_parts(Mode::Base, vertices, edges).expect("unit coefficients are valid")
}

/// Vertex set of a form's link support, as an edge-free form.
fn support_null(f: &Form) -> Form {
    Form::from_parts(f.mode(), f.link_support(), BTreeMap::new())
        .expect("support coefficients are valid for the mode")
}

// ---------------------------------------------------------------------------
// Reporting helpers
// ---------------------------------------------------------------------------

fn bindings(parts: &[(&str, &Form)]) -> String {
    let mut s = String::new();
    for (label, form) in parts {
        let _ = write!(s, "{label} = {form}; ");
    }
    s
}

fn expect_eq(lhs: &Form, rhs: &Form, parts: &[(&str, &Form)]) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}lhs = {lhs}; rhs = {rhs}", bindings(parts)))
    }
}

fn expect_ne(lhs: &Form, rhs: &Form, parts: &[(&str, &Form)]) -> Result<(), String> {
    if lhs != rhs {
        Ok(())
    } else {
        Err(format!("{}both sides = {lhs}", bindings(parts)))
    }
}

fn op_err(e: impl std::fmt::Display) -> String {
    format!("operation failed: {e}")
}

// ---------------------------------------------------------------------------
// Axiom laws
// ---------------------------------------------------------------------------

fn law_closure_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Base, limits);
    let b = rand_form(rng, Mode::Base, limits);
    let out = a.fuse(&b).map_err(op_err)?;
    out.validate()
        .map_err(|e| format!("{}result invalid: {e}", bindings(&[("a", &a), ("b", &b)])))
}

fn law_closure_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Base, limits);
    let b = rand_form(rng, Mode::Base, limits);
    let out = a.link(&b).map_err(op_err)?;
    out.validate()
        .map_err(|e| format!("{}result invalid: {e}", bindings(&[("a", &a), ("b", &b)])))
}

fn law_idempotency_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let out = g.fuse(&g).map_err(op_err)?;
    expect_eq(&out, &g, &[("g", &g)])
}

fn law_idempotency_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = if rng.random_bool(0.1) { Form::empty(Mode::Base) } else { signed_atom(rng, &atoms) };
    let out = v.link(&v).map_err(op_err)?;
    expect_eq(&out, &v, &[("v", &v)])
}

fn law_assoc_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let ops = sign_disjoint_forms(rng, limits, 3);
    let (a, b, c) = (&ops[0], &ops[1], &ops[2]);
    let lhs = a.fuse(b).map_err(op_err)?.fuse(c).map_err(op_err)?;
    let rhs = a.fuse(&b.fuse(c).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("a", a), ("b", b), ("c", c)])
}

fn law_assoc_fuse_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Arithmetical, limits);
    let b = rand_form(rng, Mode::Arithmetical, limits);
    let c = rand_form(rng, Mode::Arithmetical, limits);
    let lhs = a.fuse(&b).map_err(op_err)?.fuse(&c).map_err(op_err)?;
    let rhs = a.fuse(&b.fuse(&c).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("a", &a), ("b", &b), ("c", &c)])
}

fn law_assoc_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_positive_form(rng, Mode::Base, limits);
    let b = rand_positive_form(rng, Mode::Base, limits);
    let c = rand_positive_form(rng, Mode::Base, limits);
    let lhs = a.link(&b).map_err(op_err)?.link(&c).map_err(op_err)?;
    let rhs = a.link(&b.link(&c).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("a", &a), ("b", &b), ("c", &c)])
}

fn law_identity_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let phi = Form::empty(Mode::Base);
    expect_eq(&g.fuse(&phi).map_err(op_err)?, &g, &[("g", &g)])?;
    expect_eq(&phi.fuse(&g).map_err(op_err)?, &g, &[("g", &g)])
}

fn law_identity_fuse_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Arithmetical, limits);
    let phi = Form::empty(Mode::Arithmetical);
    expect_eq(&g.fuse(&phi).map_err(op_err)?, &g, &[("g", &g)])?;
    expect_eq(&phi.fuse(&g).map_err(op_err)?, &g, &[("g", &g)])
}

fn law_identity_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let phi = Form::empty(Mode::Base);
    expect_eq(&g.link(&phi).map_err(op_err)?, &g, &[("g", &g)])?;
    expect_eq(&phi.link(&g).map_err(op_err)?, &g, &[("g", &g)])
}

fn law_identity_link_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Arithmetical, limits);
    let phi = Form::empty(Mode::Arithmetical);
    expect_eq(&g.link(&phi).map_err(op_err)?, &phi, &[("g", &g)])?;
    expect_eq(&phi.link(&g).map_err(op_err)?, &phi, &[("g", &g)])
}

fn law_inverse_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let anti = g.negate();
    let phi = Form::empty(Mode::Base);
    expect_eq(&g.fuse(&anti).map_err(op_err)?, &phi, &[("g", &g)])?;
    expect_eq(&anti.fuse(&g).map_err(op_err)?, &phi, &[("g", &g)])
}

fn law_inverse_fuse_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Arithmetical, limits);
    let anti = g.negate();
    let phi = Form::empty(Mode::Arithmetical);
    expect_eq(&g.fuse(&anti).map_err(op_err)?, &phi, &[("g", &g)])
}

fn law_inverse_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = signed_atom(rng, &atoms);
    let anti = v.negate();
    let phi = Form::empty(Mode::Base);
    expect_eq(&v.link(&anti).map_err(op_err)?, &phi, &[("v", &v)])?;
    expect_eq(&anti.link(&v).map_err(op_err)?, &phi, &[("v", &v)])
}

fn law_commutativity_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Base, limits);
    let b = rand_form(rng, Mode::Base, limits);
    expect_eq(
        &a.fuse(&b).map_err(op_err)?,
        &b.fuse(&a).map_err(op_err)?,
        &[("a", &a), ("b", &b)],
    )
}

fn law_commutativity_fuse_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Arithmetical, limits);
    let b = rand_form(rng, Mode::Arithmetical, limits);
    expect_eq(
        &a.fuse(&b).map_err(op_err)?,
        &b.fuse(&a).map_err(op_err)?,
        &[("a", &a), ("b", &b)],
    )
}

fn law_commutativity_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Base, limits);
    let b = rand_form(rng, Mode::Base, limits);
    expect_eq(
        &a.link(&b).map_err(op_err)?,
        &b.link(&a).map_err(op_err)?,
        &[("a", &a), ("b", &b)],
    )
}

fn law_commutativity_link_arith(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Arithmetical, limits);
    let b = rand_form(rng, Mode::Arithmetical, limits);
    expect_eq(
        &a.link(&b).map_err(op_err)?,
        &b.link(&a).map_err(op_err)?,
        &[("a", &a), ("b", &b)],
    )
}

/// Three signed vertices sharing one per-trial sign assignment, so no atom
/// appears with opposite signs across the operands.
fn sign_disjoint_atoms(rng: &mut ChaCha8Rng, limits: &Limits, n: usize) -> Vec<Form> {
    let atoms = universe(limits);
    let sigma: Vec<i64> = atoms.iter().map(|_| pick_sign(rng)).collect();
    (0..n)
        .map(|_| {
            let i = rng.random_range(0..atoms.len());
            Form::vertex(atoms[i].clone(), sigma[i], Mode::Base)
                .expect("unit coefficient is valid")
        })
        .collect()
}

fn law_distributivity_link_left(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let ops = sign_disjoint_atoms(rng, limits, 3);
    let (v, w, t) = (&ops[0], &ops[1], &ops[2]);
    let lhs = v.link(&w.fuse(t).map_err(op_err)?).map_err(op_err)?;
    let rhs = v.link(w).map_err(op_err)?.fuse(&v.link(t).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", v), ("w", w), ("t", t)])
}

fn law_distributivity_link_right(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let ops = sign_disjoint_atoms(rng, limits, 3);
    let (v, w, t) = (&ops[0], &ops[1], &ops[2]);
    let lhs = w.fuse(t).map_err(op_err)?.link(v).map_err(op_err)?;
    let rhs = w.link(v).map_err(op_err)?.fuse(&t.link(v).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", v), ("w", w), ("t", t)])
}

fn law_connectivity_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = grounded_form(rng, limits);
    let b = grounded_form(rng, limits);
    let lhs = a.link(&b).map_err(op_err)?;
    let bipartite = support_null(&a).link(&support_null(&b)).map_err(op_err)?;
    let rhs = a.fuse(&b).map_err(op_err)?.fuse(&bipartite).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("a", &a), ("b", &b)])
}

// ---------------------------------------------------------------------------
// Theorem laws
// ---------------------------------------------------------------------------

fn law_cancellation_link_left(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = signed_atom(rng, &atoms);
    let mut w = signed_atom(rng, &atoms);
    while w == v {
        w = signed_atom(rng, &atoms);
    }
    let t = if rng.random_bool(0.15) { Form::empty(Mode::Base) } else { signed_atom(rng, &atoms) };
    expect_ne(
        &v.link(&t).map_err(op_err)?,
        &w.link(&t).map_err(op_err)?,
        &[("v", &v), ("w", &w), ("t", &t)],
    )
}

fn law_cancellation_link_right(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = signed_atom(rng, &atoms);
    let mut w = signed_atom(rng, &atoms);
    while w == v {
        w = signed_atom(rng, &atoms);
    }
    let t = if rng.random_bool(0.15) { Form::empty(Mode::Base) } else { signed_atom(rng, &atoms) };
    expect_ne(
        &t.link(&v).map_err(op_err)?,
        &t.link(&w).map_err(op_err)?,
        &[("v", &v), ("w", &w), ("t", &t)],
    )
}

fn law_commuting_identity_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let phi = Form::empty(Mode::Base);
    let lhs = g.link(&phi).map_err(op_err)?;
    let rhs = phi.link(&g).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("g", &g)])?;
    expect_eq(&lhs, &g, &[("g", &g)])
}

fn law_unique_identity(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let e = rand_form(rng, Mode::Base, limits);
    if e.is_empty() {
        return Ok(());
    }
    let phi = Form::empty(Mode::Base);
    expect_ne(&e.fuse(&phi).map_err(op_err)?, &phi, &[("e", &e)])?;
    expect_ne(&e.link(&phi).map_err(op_err)?, &phi, &[("e", &e)])
}

fn law_inverse_commuting_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let anti = g.negate();
    expect_eq(
        &g.link(&anti).map_err(op_err)?,
        &anti.link(&g).map_err(op_err)?,
        &[("g", &g)],
    )
}

/// Perturbs the exact inverse of `g` into a different form.
fn perturb_inverse(rng: &mut ChaCha8Rng, g: &Form, atoms: &[VertexAtom]) -> Form {
    let anti = g.negate();
    let mut vertices = anti.vertices().clone();
    let mut edges = anti.edges().clone();
    let keys = vertices.len() + edges.len();
    let flip_or_drop = keys > 0 && rng.random_bool(0.66);
    if flip_or_drop {
        let pick = rng.random_range(0..keys);
        let flip = rng.random_bool(0.5);
        if pick < vertices.len() {
            let key = vertices.keys().nth(pick).expect("index is in range").clone();
            if flip {
                let flipped = -anti.vertices()[&key];
                vertices.insert(key, flipped);
            } else {
                vertices.remove(&key);
            }
        } else {
            let key = edges.keys().nth(pick - vertices.len()).expect("index is in range").clone();
            if flip {
                let flipped = -anti.edges()[&key];
                edges.insert(key, flipped);
            } else {
                edges.remove(&key);
            }
        }
    } else {
        // Insert a vertex outside the existing support, or flip one if the
        // whole pool is already used.
        match atoms.iter().find(|a| !vertices.contains_key(*a)) {
            Some(fresh) => {
                vertices.insert(fresh.clone(), pick_sign(rng));
            }
            None => {
                let key = vertices.keys().next().expect("pool is non-empty").clone();
                let flipped = -vertices[&key];
                vertices.insert(key, flipped);
            }
        }
    }
    Form::from_parts(Mode::Base, vertices, edges).expect("perturbed parts stay valid")
}

fn law_unique_inverse_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    let anti = g.negate();
    let phi = Form::empty(Mode::Base);
    expect_eq(&g.fuse(&anti).map_err(op_err)?, &phi, &[("g", &g)])?;
    let atoms = universe(limits);
    let x = perturb_inverse(rng, &g, &atoms);
    if x == anti {
        return Err(format!("perturbation returned the inverse itself: g = {g}"));
    }
    expect_ne(&g.fuse(&x).map_err(op_err)?, &phi, &[("g", &g), ("x", &x)])
}

fn law_unique_inverse_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = signed_atom(rng, &atoms);
    let anti = v.negate();
    let phi = Form::empty(Mode::Base);
    for atom in &atoms {
        for sign in [1, -1] {
            let x = Form::vertex(atom.clone(), sign, Mode::Base).expect("unit coefficient");
            let annihilates = v.link(&x).map_err(op_err)?.is_empty();
            if annihilates != (x == anti) {
                return Err(format!("{}x = {x}", bindings(&[("v", &v)])));
            }
        }
    }
    expect_eq(&v.link(&anti).map_err(op_err)?, &phi, &[("v", &v)])
}

fn law_link_solvable(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let v = signed_atom(rng, &atoms);
    let x0 = signed_atom(rng, &atoms);
    let target = v.link(&x0).map_err(op_err)?;
    let mut hits = Vec::new();
    for atom in &atoms {
        for sign in [1, -1] {
            let x = Form::vertex(atom.clone(), sign, Mode::Base).expect("unit coefficient");
            if v.link(&x).map_err(op_err)? == target {
                hits.push(x);
            }
        }
    }
    if hits.len() == 1 && hits[0] == x0 {
        Ok(())
    } else {
        Err(format!(
            "{}solution count = {}",
            bindings(&[("v", &v), ("x0", &x0), ("target", &target)]),
            hits.len()
        ))
    }
}

fn law_involution(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Base, limits);
    expect_eq(&g.negate().negate(), &g, &[("g", &g)])
}

fn law_complete_null_link(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let k = rng.random_range(1..=atoms.len().min(8));
    let picked = sample_distinct(rng, &atoms, k);
    let ctx = EvalContext::new(Mode::Base);
    let complete = eval(&Expr::complete(picked.clone()).expect("distinct atoms"), &ctx)
        .expect("complete graphs evaluate in base mode");
    let nulls = eval(&Expr::null(picked).expect("distinct atoms"), &ctx)
        .expect("null graphs evaluate in base mode");
    expect_eq(&nulls.link(&nulls).map_err(op_err)?, &complete, &[("vertices", &nulls)])
}

fn law_star_null_absorb(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let k = rng.random_range(2..=atoms.len().min(8));
    let mut picked = sample_distinct(rng, &atoms, k);
    let center = picked.remove(0);
    let ctx = EvalContext::new(Mode::Base);
    let star = eval(
        &Expr::star(center.clone(), picked.clone()).expect("center is outside the leaves"),
        &ctx,
    )
    .expect("stars evaluate in base mode");
    let leaves_null = eval(&Expr::null(picked.clone()).expect("distinct atoms"), &ctx)
        .expect("null graphs evaluate in base mode");
    expect_eq(&star.fuse(&leaves_null).map_err(op_err)?, &star, &[("star", &star)])?;
    picked.push(center);
    let all_null = eval(&Expr::null(picked).expect("distinct atoms"), &ctx)
        .expect("null graphs evaluate in base mode");
    expect_eq(&star.fuse(&all_null).map_err(op_err)?, &star, &[("star", &star)])
}

fn law_induction_path(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let n = rng.random_range(2..=atoms.len().min(10));
    let vs = sample_distinct(rng, &atoms, n);
    let ctx = EvalContext::new(Mode::Base);
    let whole = eval(&Expr::path(vs.clone()).expect("distinct atoms"), &ctx)
        .expect("paths evaluate in base mode");
    let prefix = eval(&Expr::path(vs[..n - 1].to_vec()).expect("distinct atoms"), &ctx)
        .expect("paths evaluate in base mode");
    let last = Form::vertex(vs[n - 1].clone(), 1, Mode::Base).expect("unit coefficient");
    let prev = Form::vertex(vs[n - 2].clone(), 1, Mode::Base).expect("unit coefficient");
    let step = prev.link(&last).map_err(op_err)?;
    expect_eq(&prefix.fuse(&step).map_err(op_err)?, &whole, &[("path", &whole)])
}

fn law_induction_cycle(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let m = rng.random_range(4..=atoms.len().min(10));
    let vs = sample_distinct(rng, &atoms, m);
    let ctx = EvalContext::new(Mode::Base);
    let whole = eval(&Expr::cycle(vs.clone()).expect("distinct atoms"), &ctx)
        .expect("cycles evaluate in base mode");
    let smaller = eval(&Expr::cycle(vs[..m - 1].to_vec()).expect("distinct atoms"), &ctx)
        .expect("cycles evaluate in base mode");
    let first = Form::vertex(vs[0].clone(), 1, Mode::Base).expect("unit coefficient");
    let prev = Form::vertex(vs[m - 2].clone(), 1, Mode::Base).expect("unit coefficient");
    let new = Form::vertex(vs[m - 1].clone(), 1, Mode::Base).expect("unit coefficient");
    let detour =
        prev.link(&new).map_err(op_err)?.fuse(&first.link(&new).map_err(op_err)?).map_err(op_err)?;
    let cut = Form::single_edge(EdgeKey::undirected(vs[0].clone(), vs[m - 2].clone()), -1, Mode::Base)
        .expect("unit coefficient");
    let rebuilt = smaller.fuse(&detour).map_err(op_err)?.fuse(&cut).map_err(op_err)?;
    expect_eq(&rebuilt, &whole, &[("cycle", &whole)])
}

fn law_star_split(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let n = rng.random_range(2..=atoms.len().min(9).saturating_sub(1));
    let mut picked = sample_distinct(rng, &atoms, n + 1);
    let center = picked.remove(0);
    let j = rng.random_range(1..n);
    let ctx = EvalContext::new(Mode::Base);
    let whole = eval(
        &Expr::star(center.clone(), picked.clone()).expect("center is outside the leaves"),
        &ctx,
    )
    .expect("stars evaluate in base mode");
    let left = eval(
        &Expr::star(center.clone(), picked[..j].to_vec()).expect("center is outside the leaves"),
        &ctx,
    )
    .expect("stars evaluate in base mode");
    let right = eval(
        &Expr::star(center, picked[j - 1..].to_vec()).expect("center is outside the leaves"),
        &ctx,
    )
    .expect("stars evaluate in base mode");
    expect_eq(&left.fuse(&right).map_err(op_err)?, &whole, &[("star", &whole)])
}

/// A star as a form; a leafless star is its bare center.
fn star_form(center: &VertexAtom, leaves: &[VertexAtom]) -> Form {
    if leaves.is_empty() {
        Form::vertex(center.clone(), 1, Mode::Base).expect("unit coefficient is valid")
    } else {
        let e = Expr::star(center.clone(), leaves.to_vec()).expect("leaves exclude the center");
        eval(&e, &EvalContext::new(Mode::Base)).expect("stars evaluate in base mode")
    }
}

fn law_star_merge(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let k = rng.random_range(2..=atoms.len().min(6));
    let mut picked = sample_distinct(rng, &atoms, k);
    let c = picked.remove(0);
    let d = picked.remove(0);
    let split = rng.random_range(0..=picked.len());
    let (l_leaves, m_leaves) = picked.split_at(split);
    let mut big_l = l_leaves.to_vec();
    big_l.push(d.clone());
    let mut big_m = m_leaves.to_vec();
    big_m.push(c.clone());
    let star_c = star_form(&c, &big_l);
    let star_d = star_form(&d, &big_m);
    let small_c = star_form(&c, l_leaves);
    let small_d = star_form(&d, m_leaves);
    let anti_shared = Form::single_edge(EdgeKey::undirected(c, d), -1, Mode::Base)
        .expect("unit coefficient");
    let lhs = star_c.fuse(&star_d).map_err(op_err)?.fuse(&anti_shared).map_err(op_err)?;
    let rhs = small_c.fuse(&small_d).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("star_c", &star_c), ("star_d", &star_d)])
}

fn law_complement_complete(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = plain_graph(rng, limits);
    let co = crate::analysis::complement(&g).map_err(op_err)?;
    let ctx = EvalContext::new(Mode::Base);
    let verts: Vec<VertexAtom> = g.vertices().keys().cloned().collect();
    let complete = eval(&Expr::complete(verts).expect("vertex keys are distinct"), &ctx)
        .expect("complete graphs evaluate in base mode");
    expect_eq(&co.fuse(&g).map_err(op_err)?, &complete, &[("g", &g), ("complement", &co)])
}

// ---------------------------------------------------------------------------
// Arithmetical laws
// ---------------------------------------------------------------------------

fn small_scalar(rng: &mut ChaCha8Rng) -> i64 {
    rng.random_range(-10..=10)
}

fn law_linearity_add(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let s = rand_form(rng, Mode::Arithmetical, limits);
    let (n, m) = (small_scalar(rng), small_scalar(rng));
    let lhs = s.scale(n + m).map_err(op_err)?;
    let rhs = s.scale(n).map_err(op_err)?.fuse(&s.scale(m).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("s", &s)]).map_err(|d| format!("n = {n}; m = {m}; {d}"))
}

fn law_linearity_mul(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let s = rand_form(rng, Mode::Arithmetical, limits);
    let (n, m) = (small_scalar(rng), small_scalar(rng));
    let lhs = s.scale(n * m).map_err(op_err)?;
    let rhs = s.scale(m).map_err(op_err)?.scale(n).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("s", &s)]).map_err(|d| format!("n = {n}; m = {m}; {d}"))
}

fn law_linearity_fuse(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let s = rand_form(rng, Mode::Arithmetical, limits);
    let t = rand_form(rng, Mode::Arithmetical, limits);
    let n = small_scalar(rng);
    let lhs = s.fuse(&t).map_err(op_err)?.scale(n).map_err(op_err)?;
    let rhs = s.scale(n).map_err(op_err)?.fuse(&t.scale(n).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("s", &s), ("t", &t)]).map_err(|d| format!("n = {n}; {d}"))
}

fn law_linearity_one(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let s = rand_form(rng, Mode::Arithmetical, limits);
    expect_eq(&s.scale(1).map_err(op_err)?, &s, &[("s", &s)])
}

fn law_edge_scaling(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let k = rng.random_range(-5..=5);
        if k != 0 {
            return k;
        }
    };
    let v = Form::vertex(atoms[rng.random_range(0..atoms.len())].clone(), nonzero(rng), Mode::Arithmetical)
        .expect("nonzero coefficient is valid");
    let w = Form::vertex(atoms[rng.random_range(0..atoms.len())].clone(), nonzero(rng), Mode::Arithmetical)
        .expect("nonzero coefficient is valid");
    let n = small_scalar(rng);
    let scaled_edge = v.link(&w).map_err(op_err)?.scale(n).map_err(op_err)?;
    let left = v.scale(n).map_err(op_err)?.link(&w).map_err(op_err)?;
    let right = v.link(&w.scale(n).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&scaled_edge, &left, &[("v", &v), ("w", &w)])
        .map_err(|d| format!("n = {n}; {d}"))?;
    expect_eq(&scaled_edge, &right, &[("v", &v), ("w", &w)])
        .map_err(|d| format!("n = {n}; {d}"))
}

// ---------------------------------------------------------------------------
// Oriented and mixed laws
// ---------------------------------------------------------------------------

fn law_arrow_flip(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let a = rand_form(rng, Mode::Oriented, limits);
    let b = rand_form(rng, Mode::Oriented, limits);
    expect_eq(
        &a.link_directed(&b, false).map_err(op_err)?,
        &b.link_directed(&a, true).map_err(op_err)?,
        &[("a", &a), ("b", &b)],
    )
}

fn law_twist_arrow(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let make = |rng: &mut ChaCha8Rng| {
        let atom = atoms[rng.random_range(0..atoms.len())].clone();
        Form::vertex(atom, pick_sign(rng), Mode::Oriented).expect("unit coefficient is valid")
    };
    let v = make(rng);
    let w = make(rng);
    let lhs = v.link_directed(&w, false).map_err(op_err)?.twist().map_err(op_err)?;
    let rhs = v.link_directed(&w, true).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", &v), ("w", &w)])
}

fn law_twist_involution(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Oriented, limits);
    expect_eq(&g.twist().map_err(op_err)?.twist().map_err(op_err)?, &g, &[("g", &g)])
}

fn law_twist_mixed_undirected(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let g = rand_form(rng, Mode::Mixed, limits);
    let t = g.twist().map_err(op_err)?;
    expect_eq(&t.twist().map_err(op_err)?, &g, &[("g", &g)])?;
    let undirected = |f: &Form| -> BTreeMap<EdgeKey, i64> {
        f.edges()
            .iter()
            .filter(|(k, _)| k.kind() == EdgeKind::Undirected)
            .map(|(k, c)| (k.clone(), *c))
            .collect()
    };
    if undirected(&g) == undirected(&t) {
        Ok(())
    } else {
        Err(format!("{}twisted = {t}", bindings(&[("g", &g)])))
    }
}

fn law_mixed_link_matches_base(rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(limits);
    let depth = rng.random_range(1..=limits.max_depth.max(1));
    let e = rand_expr(rng, Mode::Base, depth, &atoms, true);
    let base = eval(&e, &EvalContext::new(Mode::Base)).expect("expression is legal in base mode");
    let mixed = eval(&e, &EvalContext::new(Mode::Mixed))
        .expect("base-legal expressions stay legal in mixed mode");
    if base.vertices() == mixed.vertices() && base.edges() == mixed.edges() {
        Ok(())
    } else {
        Err(format!("expr = {e}; base = {base}; mixed = {mixed}"))
    }
}

// ---------------------------------------------------------------------------
// Counterexample witnesses
// ---------------------------------------------------------------------------

fn carveout_atom(limits: &Limits) -> Form {
    let atoms = universe(limits);
    Form::vertex(atoms[0].clone(), 1, Mode::Base).expect("unit coefficient is valid")
}

fn law_assoc_fuse_carveout(_rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let v = carveout_atom(limits);
    let anti = v.negate();
    let lhs = v.fuse(&v).map_err(op_err)?.fuse(&anti).map_err(op_err)?;
    let rhs = v.fuse(&v.fuse(&anti).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", &v), ("t", &anti)])
}

fn law_assoc_link_carveout(_rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let v = carveout_atom(limits);
    let anti = v.negate();
    let lhs = v.link(&v).map_err(op_err)?.link(&anti).map_err(op_err)?;
    let rhs = v.link(&v.link(&anti).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", &v), ("t", &anti)])
}

fn law_assoc_link_signed_carveout(_rng: &mut ChaCha8Rng, limits: &Limits) -> Result<(), String> {
    let atoms = universe(&Limits { max_atoms: limits.max_atoms.max(3), ..*limits });
    let v = Form::vertex(atoms[0].clone(), -1, Mode::Base).expect("unit coefficient");
    let w = Form::vertex(atoms[1].clone(), -1, Mode::Base).expect("unit coefficient");
    let t = Form::vertex(atoms[2].clone(), 1, Mode::Base).expect("unit coefficient");
    let lhs = v.link(&w).map_err(op_err)?.link(&t).map_err(op_err)?;
    let rhs = v.link(&w.link(&t).map_err(op_err)?).map_err(op_err)?;
    expect_eq(&lhs, &rhs, &[("v", &v), ("w", &w), ("t", &t)])
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

const CATALOG: &[LawDef] = &[
    LawDef {
        name: "closure-fuse",
        mode: Mode::Base,
        about: "a + b is a valid canonical form",
        expect_fail: false,
        check: law_closure_fuse,
    },
    LawDef {
        name: "closure-link",
        mode: Mode::Base,
        about: "a & b is a valid canonical form",
        expect_fail: false,
        check: law_closure_link,
    },
    LawDef {
        name: "idempotency-fuse",
        mode: Mode::Base,
        about: "g + g = g for every form",
        expect_fail: false,
        check: law_idempotency_fuse,
    },
    LawDef {
        name: "idempotency-link",
        mode: Mode::Base,
        about: "v & v = v for signed single vertices and phi",
        expect_fail: false,
        check: law_idempotency_link,
    },
    LawDef {
        name: "assoc-fuse",
        mode: Mode::Base,
        about: "(a + b) + c = a + (b + c) for sign-disjoint forms",
        expect_fail: false,
        check: law_assoc_fuse,
    },
    LawDef {
        name: "assoc-fuse-arith",
        mode: Mode::Arithmetical,
        about: "(a + b) + c = a + (b + c) for all arithmetical forms",
        expect_fail: false,
        check: law_assoc_fuse_arith,
    },
    LawDef {
        name: "assoc-link",
        mode: Mode::Base,
        about: "(a & b) & c = a & (b & c) for all-positive forms",
        expect_fail: false,
        check: law_assoc_link,
    },
    LawDef {
        name: "identity-fuse",
        mode: Mode::Base,
        about: "g + phi = phi + g = g",
        expect_fail: false,
        check: law_identity_fuse,
    },
    LawDef {
        name: "identity-fuse-arith",
        mode: Mode::Arithmetical,
        about: "g + phi = phi + g = g with integer coefficients",
        expect_fail: false,
        check: law_identity_fuse_arith,
    },
    LawDef {
        name: "identity-link",
        mode: Mode::Base,
        about: "g & phi = phi & g = g",
        expect_fail: false,
        check: law_identity_link,
    },
    LawDef {
        name: "identity-link-arith",
        mode: Mode::Arithmetical,
        about: "g & phi = phi & g = phi in the arithmetical algebra",
        expect_fail: false,
        check: law_identity_link_arith,
    },
    LawDef {
        name: "inverse-fuse",
        mode: Mode::Base,
        about: "g + ~g = phi for every form",
        expect_fail: false,
        check: law_inverse_fuse,
    },
    LawDef {
        name: "inverse-fuse-arith",
        mode: Mode::Arithmetical,
        about: "g + ~g = phi with integer coefficients",
        expect_fail: false,
        check: law_inverse_fuse_arith,
    },
    LawDef {
        name: "inverse-link",
        mode: Mode::Base,
        about: "v & ~v = phi for signed single vertices",
        expect_fail: false,
        check: law_inverse_link,
    },
    LawDef {
        name: "commutativity-fuse",
        mode: Mode::Base,
        about: "a + b = b + a",
        expect_fail: false,
        check: law_commutativity_fuse,
    },
    LawDef {
        name: "commutativity-fuse-arith",
        mode: Mode::Arithmetical,
        about: "a + b = b + a with integer coefficients",
        expect_fail: false,
        check: law_commutativity_fuse_arith,
    },
    LawDef {
        name: "commutativity-link",
        mode: Mode::Base,
        about: "a & b = b & a",
        expect_fail: false,
        check: law_commutativity_link,
    },
    LawDef {
        name: "commutativity-link-arith",
        mode: Mode::Arithmetical,
        about: "a & b = b & a with integer coefficients",
        expect_fail: false,
        check: law_commutativity_link_arith,
    },
    LawDef {
        name: "distributivity-link-left",
        mode: Mode::Base,
        about: "v & (w + t) = (v & w) + (v & t) for sign-disjoint vertices",
        expect_fail: false,
        check: law_distributivity_link_left,
    },
    LawDef {
        name: "distributivity-link-right",
        mode: Mode::Base,
        about: "(w + t) & v = (w & v) + (t & v) for sign-disjoint vertices",
        expect_fail: false,
        check: law_distributivity_link_right,
    },
    LawDef {
        name: "connectivity-link",
        mode: Mode::Base,
        about: "a & b = a + b + (Na & Nb) over grounded forms, N the vertex support",
        expect_fail: false,
        check: law_connectivity_link,
    },
    LawDef {
        name: "cancellation-link-left",
        mode: Mode::Base,
        about: "v distinct from w forces v & t distinct from w & t",
        expect_fail: false,
        check: law_cancellation_link_left,
    },
    LawDef {
        name: "cancellation-link-right",
        mode: Mode::Base,
        about: "v distinct from w forces t & v distinct from t & w",
        expect_fail: false,
        check: law_cancellation_link_right,
    },
    LawDef {
        name: "commuting-identity-link",
        mode: Mode::Base,
        about: "g & phi = phi & g for every form",
        expect_fail: false,
        check: law_commuting_identity_link,
    },
    LawDef {
        name: "unique-identity",
        mode: Mode::Base,
        about: "no nonempty form acts as the identity of either operation",
        expect_fail: false,
        check: law_unique_identity,
    },
    LawDef {
        name: "inverse-commuting-link",
        mode: Mode::Base,
        about: "g & ~g = ~g & g",
        expect_fail: false,
        check: law_inverse_commuting_link,
    },
    LawDef {
        name: "unique-inverse-fuse",
        mode: Mode::Base,
        about: "~g is the only form that fuses g to phi",
        expect_fail: false,
        check: law_unique_inverse_fuse,
    },
    LawDef {
        name: "unique-inverse-link",
        mode: Mode::Base,
        about: "~v is the only signed vertex that links v to phi",
        expect_fail: false,
        check: law_unique_inverse_link,
    },
    LawDef {
        name: "link-solvable",
        mode: Mode::Base,
        about: "v & x = v & x0 has exactly one signed-vertex solution",
        expect_fail: false,
        check: law_link_solvable,
    },
    LawDef {
        name: "involution",
        mode: Mode::Base,
        about: "~~g = g",
        expect_fail: false,
        check: law_involution,
    },
    LawDef {
        name: "complete-null-link",
        mode: Mode::Base,
        about: "linking a vertex set with itself yields the complete graph",
        expect_fail: false,
        check: law_complete_null_link,
    },
    LawDef {
        name: "star-null-absorb",
        mode: Mode::Base,
        about: "a star absorbs the vertex set it already spans",
        expect_fail: false,
        check: law_star_null_absorb,
    },
    LawDef {
        name: "induction-path",
        mode: Mode::Base,
        about: "a path grows by linking its last vertex to a new one",
        expect_fail: false,
        check: law_induction_path,
    },
    LawDef {
        name: "induction-cycle",
        mode: Mode::Base,
        about: "a cycle grows by a two-edge detour plus an anti-edge cut",
        expect_fail: false,
        check: law_induction_cycle,
    },
    LawDef {
        name: "star-split",
        mode: Mode::Base,
        about: "a star is the fuse of two sub-stars overlapping in one leaf",
        expect_fail: false,
        check: law_star_split,
    },
    LawDef {
        name: "star-merge",
        mode: Mode::Base,
        about: "fusing two stars and cutting their shared edge drops both tips",
        expect_fail: false,
        check: law_star_merge,
    },
    LawDef {
        name: "complement-complete",
        mode: Mode::Base,
        about: "a graph fused with its complement is complete",
        expect_fail: false,
        check: law_complement_complete,
    },
    LawDef {
        name: "linearity-add",
        mode: Mode::Arithmetical,
        about: "(n + m)s = ns + ms",
        expect_fail: false,
        check: law_linearity_add,
    },
    LawDef {
        name: "linearity-mul",
        mode: Mode::Arithmetical,
        about: "(nm)s = n(ms)",
        expect_fail: false,
        check: law_linearity_mul,
    },
    LawDef {
        name: "linearity-fuse",
        mode: Mode::Arithmetical,
        about: "n(s + t) = ns + nt",
        expect_fail: false,
        check: law_linearity_fuse,
    },
    LawDef {
        name: "linearity-one",
        mode: Mode::Arithmetical,
        about: "1s = s",
        expect_fail: false,
        check: law_linearity_one,
    },
    LawDef {
        name: "edge-scaling",
        mode: Mode::Arithmetical,
        about: "n(v & w) = (nv) & w = v & (nw) for weighted vertices",
        expect_fail: false,
        check: law_edge_scaling,
    },
    LawDef {
        name: "arrow-flip",
        mode: Mode::Oriented,
        about: "a -> b equals b <- a for every pair of forms",
        expect_fail: false,
        check: law_arrow_flip,
    },
    LawDef {
        name: "twist-arrow",
        mode: Mode::Oriented,
        about: "twisting v -> w yields v <- w for signed vertices",
        expect_fail: false,
        check: law_twist_arrow,
    },
    LawDef {
        name: "twist-involution",
        mode: Mode::Oriented,
        about: "twisting twice restores the form",
        expect_fail: false,
        check: law_twist_involution,
    },
    LawDef {
        name: "twist-mixed-undirected",
        mode: Mode::Mixed,
        about: "twist flips arrows only, undirected edges stay put",
        expect_fail: false,
        check: law_twist_mixed_undirected,
    },
    LawDef {
        name: "mixed-link-matches-base",
        mode: Mode::Mixed,
        about: "undirected expressions evaluate alike in base and mixed modes",
        expect_fail: false,
        check: law_mixed_link_matches_base,
    },
    LawDef {
        name: "assoc-fuse-carveout",
        mode: Mode::Base,
        about: "witness: (v + v) + ~v differs from v + (v + ~v)",
        expect_fail: true,
        check: law_assoc_fuse_carveout,
    },
    LawDef {
        name: "assoc-link-carveout",
        mode: Mode::Base,
        about: "witness: (v & v) & ~v differs from v & (v & ~v)",
        expect_fail: true,
        check: law_assoc_link_carveout,
    },
    LawDef {
        name: "assoc-link-signed-carveout",
        mode: Mode::Base,
        about: "witness: link is not associative on mixed-sign vertex triples",
        expect_fail: true,
        check: law_assoc_link_signed_carveout,
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    const SEED: u64 = 0xC0FFEE;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn every_default_law_passes_a_smoke_run() {
        for law in default_catalog() {
            let report = run_law(law, 60, SEED, &limits());
            assert!(
                report.counterexample.is_none(),
                "law {} failed at trial {:?}: {:?}",
                law.name,
                report.counterexample.as_ref().map(|(t, _)| *t),
                report.counterexample
            );
            assert_eq!(report.passes, 60);
            assert!(report.ok());
        }
    }

    /// Long-haul sweep for hunting rare counterexamples; run on demand with
    /// `cargo test -p linkalg stress -- --ignored`.
    #[test]
    #[ignore]
    fn stress_every_default_law() {
        for law in default_catalog() {
            let report = run_law(law, 3000, 0xFEED_5EED, &limits());
            assert!(
                report.counterexample.is_none(),
                "law {} failed: {:?}",
                law.name,
                report.counterexample
            );
        }
    }

    #[test]
    fn witness_laws_fail_as_expected() {
        for name in ["assoc-fuse-carveout", "assoc-link-carveout", "assoc-link-signed-carveout"] {
            let report = check_law(name, 5, SEED, &limits()).unwrap();
            assert!(report.expected_failure);
            assert!(report.counterexample.is_some(), "witness {name} found no counterexample");
            assert!(report.ok());
            assert_eq!(report.counterexample.as_ref().unwrap().0, 0);
        }
    }

    #[test]
    fn same_seed_reproduces_the_report() {
        let a = check_law("assoc-link", 40, 42, &limits()).unwrap();
        let b = check_law("assoc-link", 40, 42, &limits()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_law_is_rejected_by_name() {
        let err = check_law("no-such-law", 1, 0, &limits()).unwrap_err();
        assert_eq!(err, UnknownLaw("no-such-law".into()));
        assert!(err.to_string().contains("no-such-law"));
    }

    #[test]
    fn catalog_names_are_unique_kebab_case() {
        let mut seen = std::collections::BTreeSet::new();
        for law in law_catalog() {
            assert!(seen.insert(law.name), "duplicate law name {}", law.name);
            assert!(
                law.name.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'),
                "law name {} is not kebab-case",
                law.name
            );
            assert!(!law.about.is_empty());
        }
    }

    #[test]
    fn default_catalog_excludes_witnesses() {
        assert!(default_catalog().all(|law| !law.expect_fail));
        let witnesses = law_catalog().len() - default_catalog().count();
        assert_eq!(witnesses, 3);
    }

    #[test]
    fn report_ok_tracks_expectation() {
        let good = check_law("involution", 10, 7, &limits()).unwrap();
        assert!(good.ok() && !good.expected_failure);
        let witness = check_law("assoc-fuse-carveout", 10, 7, &limits()).unwrap();
        assert!(witness.ok() && witness.expected_failure);
    }
}
