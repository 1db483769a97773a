use std::collections::BTreeSet;

use thiserror::Error;

use crate::atom::VertexAtom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{name} needs at least one vertex")]
    EmptyArgs { name: &'static str },
    #[error("duplicate vertex `{0}` in generator arguments")]
    DuplicateAtom(VertexAtom),
    #[error("{name} needs at least {needed} distinct vertices, got {got}")]
    TooFewAtoms { name: &'static str, needed: usize, got: usize },
    #[error("{name} takes exactly {expected} vertex arguments, got {got}")]
    WrongArity { name: &'static str, expected: usize, got: usize },
    #[error("star center `{0}` cannot appear among its leaves")]
    CenterInLeaves(VertexAtom),
}

/// An expression tree. Evaluation happens bottom-up, so parenthesization is
/// semantically significant: the same operands grouped differently can give
/// different forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(VertexAtom),
    /// The empty form.
    Phi,
    /// `a + b`
    Union(Box<Expr>, Box<Expr>),
    /// `a & b`
    Link(Box<Expr>, Box<Expr>),
    /// `a -> b`, or `a <- b` when `reversed`. The reversed variant is kept
    /// in the tree for faithful printing and normalized at evaluation.
    DirectedLink { left: Box<Expr>, right: Box<Expr>, reversed: bool },
    /// `~a`
    Anti(Box<Expr>),
    /// `n*a`
    Scale(i64, Box<Expr>),
    /// `a'`
    Twist(Box<Expr>),
    Generator(GenCall),
}

/// A graph-family generator call. Construction validates arity and
/// distinctness; mode legality is checked at evaluation time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenCall {
    Path(Vec<VertexAtom>),
    Cycle(Vec<VertexAtom>),
    Star { center: VertexAtom, leaves: Vec<VertexAtom> },
    Complete(Vec<VertexAtom>),
    Null(Vec<VertexAtom>),
    Edge(VertexAtom, VertexAtom),
    AntiEdge(VertexAtom, VertexAtom),
    Loop(VertexAtom),
}

fn check_distinct(name: &'static str, atoms: &[VertexAtom]) -> Result<(), GeneratorError> {
    let mut seen = BTreeSet::new();
    for a in atoms {
        if !seen.insert(a) {
            return Err(GeneratorError::DuplicateAtom(a.clone()));
        }
    }
    if atoms.is_empty() {
        return Err(GeneratorError::EmptyArgs { name });
    }
    Ok(())
}

impl Expr {
    pub fn union(left: Expr, right: Expr) -> Expr {
        Expr::Union(Box::new(left), Box::new(right))
    }

    pub fn link(left: Expr, right: Expr) -> Expr {
        Expr::Link(Box::new(left), Box::new(right))
    }

    pub fn directed_link(left: Expr, right: Expr, reversed: bool) -> Expr {
        Expr::DirectedLink { left: Box::new(left), right: Box::new(right), reversed }
    }

    pub fn anti(inner: Expr) -> Expr {
        Expr::Anti(Box::new(inner))
    }

    pub fn scale(n: i64, inner: Expr) -> Expr {
        Expr::Scale(n, Box::new(inner))
    }

    pub fn twist(inner: Expr) -> Expr {
        Expr::Twist(Box::new(inner))
    }

    /// `path(v1, ..., vn)`: the vertices chained by links; a single vertex is
    /// the bare vertex.
    pub fn path(atoms: Vec<VertexAtom>) -> Result<Expr, GeneratorError> {
        check_distinct("path", &atoms)?;
        Ok(Expr::Generator(GenCall::Path(atoms)))
    }

    /// `cycle(v1, ..., vn)`: a path closed by a link from the last vertex
    /// back to the first. Shorter cycles would duplicate an edge or need a
    /// loop, so three distinct vertices are the minimum.
    pub fn cycle(atoms: Vec<VertexAtom>) -> Result<Expr, GeneratorError> {
        check_distinct("cycle", &atoms)?;
        if atoms.len() < 3 {
            return Err(GeneratorError::TooFewAtoms { name: "cycle", needed: 3, got: atoms.len() });
        }
        Ok(Expr::Generator(GenCall::Cycle(atoms)))
    }

    /// `star(center; l1, ..., ln)`: the center linked against the null form
    /// of the leaves.
    pub fn star(center: VertexAtom, leaves: Vec<VertexAtom>) -> Result<Expr, GeneratorError> {
        check_distinct("star", &leaves)?;
        if leaves.contains(&center) {
            return Err(GeneratorError::CenterInLeaves(center));
        }
        Ok(Expr::Generator(GenCall::Star { center, leaves }))
    }

    /// `complete(v1, ..., vn)`: the vertices linked pairwise, built as a
    /// left-nested chain of links.
    pub fn complete(atoms: Vec<VertexAtom>) -> Result<Expr, GeneratorError> {
        check_distinct("complete", &atoms)?;
        Ok(Expr::Generator(GenCall::Complete(atoms)))
    }

    /// `null(v1, ..., vn)`: the union of bare vertices, no edges.
    pub fn null(atoms: Vec<VertexAtom>) -> Result<Expr, GeneratorError> {
        check_distinct("null", &atoms)?;
        Ok(Expr::Generator(GenCall::Null(atoms)))
    }

    /// `edge(u, w)`: a single positive edge with no vertex terms. Equal
    /// endpoints make a loop, which only evaluates in arithmetical mode.
    pub fn edge(u: VertexAtom, w: VertexAtom) -> Expr {
        Expr::Generator(GenCall::Edge(u, w))
    }

    /// `antiedge(u, w)`: a single negative edge with no vertex terms.
    pub fn antiedge(u: VertexAtom, w: VertexAtom) -> Expr {
        Expr::Generator(GenCall::AntiEdge(u, w))
    }

    /// `loop(v)`: a vertex linked with itself; arithmetical mode only.
    pub fn loop_edge(v: VertexAtom) -> Expr {
        Expr::Generator(GenCall::Loop(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atoms(names: &[&str]) -> Vec<VertexAtom> {
        names.iter().map(|n| VertexAtom::new(*n).unwrap()).collect()
    }

    #[test]
    fn generators_reject_duplicates() {
        assert!(matches!(
            Expr::path(atoms(&["a", "b", "a"])),
            Err(GeneratorError::DuplicateAtom(_))
        ));
        assert!(matches!(
            Expr::null(atoms(&["a", "a"])),
            Err(GeneratorError::DuplicateAtom(_))
        ));
    }

    #[test]
    fn generators_reject_empty_argument_lists() {
        assert!(matches!(Expr::path(vec![]), Err(GeneratorError::EmptyArgs { .. })));
        let center = atoms(&["w"]).pop().unwrap();
        assert!(matches!(
            Expr::star(center, vec![]),
            Err(GeneratorError::EmptyArgs { .. })
        ));
    }

    #[test]
    fn cycles_need_three_vertices() {
        assert!(matches!(
            Expr::cycle(atoms(&["a", "b"])),
            Err(GeneratorError::TooFewAtoms { needed: 3, got: 2, .. })
        ));
        assert!(Expr::cycle(atoms(&["a", "b", "c"])).is_ok());
    }

    #[test]
    fn star_center_must_not_be_a_leaf() {
        let center = atoms(&["w"]).pop().unwrap();
        assert!(matches!(
            Expr::star(center.clone(), atoms(&["a", "w"])),
            Err(GeneratorError::CenterInLeaves(_))
        ));
        assert!(Expr::star(center, atoms(&["a", "b"])).is_ok());
    }

    #[test]
    fn single_vertex_path_is_allowed() {
        assert!(Expr::path(atoms(&["a"])).is_ok());
    }
}
