//! Derived constructions over canonical forms: complement, star
//! decomposition, degree sequences, isomorphism checks, union-equation
//! solving and coefficient comparison.
//!
//! Complement, star decomposition and everything built on them are defined
//! for plain base forms only: every coefficient +1 and every edge endpoint
//! present as a vertex. The solver and the coefficient comparison have their
//! own, looser preconditions.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::atom::{EdgeKey, Mode, VertexAtom};
use crate::eval::{eval, EvalContext};
use crate::expr::Expr;
use crate::form::{Form, FormError, FormKey};

/// Vertex-count ceiling for the exact isomorphism search.
pub const ISO_BOUND: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("{op} is defined only for base forms, got a {mode} form")]
    UnsupportedMode { op: &'static str, mode: Mode },
    #[error("{op} needs every coefficient positive, but {key} is negative")]
    NegativeCoefficients { op: &'static str, key: FormKey },
    #[error("edge {0} has an endpoint outside the form's vertex set")]
    DanglingEdge(EdgeKey),
    #[error("{vertices} vertices exceed the isomorphism search bound of {bound}")]
    SizeBound { vertices: usize, bound: usize },
    #[error(transparent)]
    Form(#[from] FormError),
}

/// A plain base form: all coefficients +1, edge endpoints in the vertex set.
fn check_plain(g: &Form, op: &'static str) -> Result<(), AnalysisError> {
    if g.mode() != Mode::Base {
        return Err(AnalysisError::UnsupportedMode { op, mode: g.mode() });
    }
    for (v, c) in g.vertices() {
        if *c < 0 {
            return Err(AnalysisError::NegativeCoefficients {
                op,
                key: FormKey::Vertex(v.clone()),
            });
        }
    }
    for (k, c) in g.edges() {
        if *c < 0 {
            return Err(AnalysisError::NegativeCoefficients { op, key: FormKey::Edge(k.clone()) });
        }
        let (a, b) = k.ends();
        if !g.vertices().contains_key(a) || !g.vertices().contains_key(b) {
            return Err(AnalysisError::DanglingEdge(k.clone()));
        }
    }
    Ok(())
}

/// The complete form over a plain vertex set: the vertices plus every pair
/// as a +1 edge.
fn complete_over(vertices: &BTreeMap<VertexAtom, i64>) -> Form {
    let names: Vec<&VertexAtom> = vertices.keys().collect();
    let mut edges = BTreeMap::new();
    for (i, u) in names.iter().enumerate() {
        for w in &names[i + 1..] {
            edges.insert(EdgeKey::undirected((*u).clone(), (*w).clone()), 1);
        }
    }
    Form::from_parts(Mode::Base, vertices.clone(), edges)
        .expect("a complete form over +1 vertices is valid")
}

/// Same vertices, exactly the missing edges. The vertex set is retained:
/// the fully cancelled spelling of the same construction is
/// [`complement_literal`].
pub fn complement(g: &Form) -> Result<Form, AnalysisError> {
    check_plain(g, "complement")?;
    let names: Vec<&VertexAtom> = g.vertices().keys().collect();
    let mut edges = BTreeMap::new();
    for (i, u) in names.iter().enumerate() {
        for w in &names[i + 1..] {
            let key = EdgeKey::undirected((*u).clone(), (*w).clone());
            if !g.edges().contains_key(&key) {
                edges.insert(key, 1);
            }
        }
    }
    Ok(Form::from_parts(Mode::Base, g.vertices().clone(), edges)?)
}

/// The complement computed by its defining equation: the complete form over
/// g's vertices fused with the negation of g. Every vertex meets its own
/// anti element and cancels, so the result is the vertex-free complement
/// edge set.
pub fn complement_literal(g: &Form) -> Result<Form, AnalysisError> {
    check_plain(g, "complement")?;
    Ok(complete_over(g.vertices()).fuse(&g.negate())?)
}

/// One vertex with its sorted neighbor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: VertexAtom,
    pub leaves: Vec<VertexAtom>,
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.leaves.is_empty() {
            return write!(f, "{}", self.center);
        }
        write!(f, "star({}; ", self.center)?;
        for (i, leaf) in self.leaves.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{leaf}")?;
        }
        f.write_str(")")
    }
}

/// The adjacency-list presentation of a plain form: one star per vertex,
/// ordered by leaf count descending with ties broken by center name. Each
/// edge appears in exactly two stars, once per endpoint; isolated vertices
/// appear as leafless stars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDecomposition {
    pub stars: Vec<Star>,
}

impl StarDecomposition {
    /// The decomposition as a union of star expressions, evaluable back to
    /// the source form. Leafless stars appear as bare atoms.
    pub fn to_expr(&self) -> Expr {
        let mut parts = self.stars.iter().map(|s| {
            if s.leaves.is_empty() {
                Expr::Atom(s.center.clone())
            } else {
                Expr::star(s.center.clone(), s.leaves.clone())
                    .expect("decomposition stars have distinct leaves")
            }
        });
        match parts.next() {
            None => Expr::Phi,
            Some(first) => parts.fold(first, Expr::union),
        }
    }

    /// Evaluates [`StarDecomposition::to_expr`] back to a base form.
    pub fn rebuild(&self) -> Form {
        eval(&self.to_expr(), &EvalContext::new(Mode::Base))
            .expect("star expressions evaluate in base mode")
    }
}

impl fmt::Display for StarDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stars.is_empty() {
            return f.write_str("phi");
        }
        for (i, s) in self.stars.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn star_composed_form(g: &Form) -> Result<StarDecomposition, AnalysisError> {
    check_plain(g, "star decomposition")?;
    let mut stars: Vec<Star> = g
        .vertices()
        .keys()
        .map(|v| {
            let mut leaves: Vec<VertexAtom> = g
                .edges()
                .keys()
                .filter_map(|k| {
                    let (a, b) = k.ends();
                    if a == v {
                        Some(b.clone())
                    } else if b == v {
                        Some(a.clone())
                    } else {
                        None
                    }
                })
                .collect();
            leaves.sort();
            Star { center: v.clone(), leaves }
        })
        .collect();
    stars.sort_by(|x, y| {
        y.leaves.len().cmp(&x.leaves.len()).then_with(|| x.center.cmp(&y.center))
    });
    Ok(StarDecomposition { stars })
}

/// Star cardinalities in descending order; one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

pub fn degree_sequence(g: &Form) -> Result<DegreeSequence, AnalysisError> {
    let decomposition = star_composed_form(g)?;
    Ok(DegreeSequence(decomposition.stars.iter().map(|s| s.leaves.len()).collect()))
}

/// The cardinality-matching test: equal degree sequences. Necessary for
/// isomorphism but not sufficient; [`isomorphic_exact`] is the real check.
pub fn scf_equivalent(a: &Form, b: &Form) -> Result<bool, AnalysisError> {
    Ok(degree_sequence(a)? == degree_sequence(b)?)
}

/// Adjacency-preserving vertex bijection from `a` onto `b`, or `None`.
/// Deterministic: returns the lexicographically least bijection (by `a`'s
/// vertex order). Vertex counts above [`ISO_BOUND`] are rejected.
pub fn isomorphic_exact(
    a: &Form,
    b: &Form,
) -> Result<Option<BTreeMap<VertexAtom, VertexAtom>>, AnalysisError> {
    isomorphic_exact_bounded(a, b, ISO_BOUND)
}

pub fn isomorphic_exact_bounded(
    a: &Form,
    b: &Form,
    bound: usize,
) -> Result<Option<BTreeMap<VertexAtom, VertexAtom>>, AnalysisError> {
    check_plain(a, "isomorphism search")?;
    check_plain(b, "isomorphism search")?;
    for g in [a, b] {
        let vertices = g.vertices().len();
        if vertices > bound {
            return Err(AnalysisError::SizeBound { vertices, bound });
        }
    }
    let n = a.vertices().len();
    if n != b.vertices().len() || a.edges().len() != b.edges().len() {
        return Ok(None);
    }
    let left: Vec<&VertexAtom> = a.vertices().keys().collect();
    let right: Vec<&VertexAtom> = b.vertices().keys().collect();
    let adjacency = |g: &Form, names: &[&VertexAtom]| {
        let index: BTreeMap<&VertexAtom, usize> =
            names.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut adj = vec![vec![false; names.len()]; names.len()];
        for k in g.edges().keys() {
            let (u, w) = k.ends();
            let (i, j) = (index[u], index[w]);
            adj[i][j] = true;
            adj[j][i] = true;
        }
        adj
    };
    let adj_a = adjacency(a, &left);
    let adj_b = adjacency(b, &right);
    let degree = |adj: &Vec<Vec<bool>>, i: usize| adj[i].iter().filter(|x| **x).count();
    let deg_a: Vec<usize> = (0..n).map(|i| degree(&adj_a, i)).collect();
    let deg_b: Vec<usize> = (0..n).map(|i| degree(&adj_b, i)).collect();
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(None);
    }

    // Depth-first search over partial assignments, left vertices in name
    // order, candidates in name order; the first complete assignment found
    // is therefore the least one.
    let mut image: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    loop {
        let i = image.len();
        if i == n {
            let map = image
                .iter()
                .enumerate()
                .map(|(i, &j)| (left[i].clone(), right[j].clone()))
                .collect();
            return Ok(Some(map));
        }
        let start = 0;
        match next_candidate(i, start, n, &deg_a, &deg_b, &adj_a, &adj_b, &image, &used) {
            Some(j) => {
                used[j] = true;
                image.push(j);
            }
            None => {
                // Backtrack: advance the most recent choice, unwinding
                // further whenever a level is exhausted.
                loop {
                    match image.pop() {
                        None => return Ok(None),
                        Some(prev) => {
                            used[prev] = false;
                            let i = image.len();
                            if let Some(j) = next_candidate(
                                i, prev + 1, n, &deg_a, &deg_b, &adj_a, &adj_b, &image, &used,
                            ) {
                                used[j] = true;
                                image.push(j);
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn next_candidate(
    i: usize,
    start: usize,
    n: usize,
    deg_a: &[usize],
    deg_b: &[usize],
    adj_a: &[Vec<bool>],
    adj_b: &[Vec<bool>],
    image: &[usize],
    used: &[bool],
) -> Option<usize> {
    (start..n).find(|&j| {
        !used[j]
            && deg_a[i] == deg_b[j]
            && (0..i).all(|u| adj_a[u][i] == adj_b[image[u]][j])
    })
}

/// The unique candidate for X in target = known ⊣⊢ X, with a flag recording
/// whether it actually solves the equation. The candidate is
/// fuse(target, ~known); re-fusing verifies it, which fails exactly when
/// some key carries opposite signs in target and known (impossible in
/// arithmetical mode, where fuse subtracts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionSolution {
    pub x: Form,
    pub verified: bool,
}

pub fn solve_union(target: &Form, known: &Form) -> Result<UnionSolution, AnalysisError> {
    let x = target.fuse(&known.negate())?;
    let verified = known.fuse(&x)? == *target;
    Ok(UnionSolution { x, verified })
}

/// Verdict of an engrosure comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngrosureOrder {
    Less,
    Equal,
    Greater,
    /// At least one side is not a multiple of the compared key; the
    /// relation only orders multiples of one same element.
    Incomparable,
}

impl fmt::Display for EngrosureOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngrosureOrder::Less => "less",
            EngrosureOrder::Equal => "equal",
            EngrosureOrder::Greater => "greater",
            EngrosureOrder::Incomparable => "incomparable",
        })
    }
}

/// Compares n·key against m·key for two arithmetical forms. Forms carrying
/// anything besides the compared key are incomparable; an absent key counts
/// as coefficient zero.
pub fn engrosure_compare(
    a: &Form,
    b: &Form,
    key: &FormKey,
) -> Result<EngrosureOrder, AnalysisError> {
    for g in [a, b] {
        if g.mode() != Mode::Arithmetical {
            return Err(AnalysisError::UnsupportedMode {
                op: "engrosure comparison",
                mode: g.mode(),
            });
        }
    }
    let pure = |g: &Form| {
        g.vertices().keys().all(|v| FormKey::Vertex(v.clone()) == *key)
            && g.edges().keys().all(|k| FormKey::Edge(k.clone()) == *key)
    };
    if !pure(a) || !pure(b) {
        return Ok(EngrosureOrder::Incomparable);
    }
    Ok(match a.coefficient(key).cmp(&b.coefficient(key)) {
        std::cmp::Ordering::Less => EngrosureOrder::Less,
        std::cmp::Ordering::Equal => EngrosureOrder::Equal,
        std::cmp::Ordering::Greater => EngrosureOrder::Greater,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::render::print_form;

    fn base(src: &str) -> Form {
        eval(&parse(src).unwrap(), &EvalContext::new(Mode::Base)).unwrap()
    }

    fn arith(src: &str) -> Form {
        eval(&parse(src).unwrap(), &EvalContext::new(Mode::Arithmetical)).unwrap()
    }

    fn gamma() -> Form {
        base("v1&v2&v3 + v3&v4")
    }

    fn gamma_prime() -> Form {
        base("w1&(w2+w3+w4) + w2&w4")
    }

    #[test]
    fn complement_keeps_vertices_and_flips_edges() {
        let c = complement(&gamma()).unwrap();
        assert_eq!(print_form(&c), "{+v1, +v2, +v3, +v4 | +{v1,v4}, +{v2,v4}}");
    }

    #[test]
    fn complement_swaps_complete_and_null() {
        assert_eq!(complement(&base("complete(a, b, c, d)")).unwrap(), base("null(a, b, c, d)"));
        assert_eq!(complement(&base("null(a, b, c, d)")).unwrap(), base("complete(a, b, c, d)"));
    }

    #[test]
    fn complement_is_an_involution() {
        let g = gamma();
        assert_eq!(complement(&complement(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn complement_fused_with_source_is_complete() {
        let g = gamma();
        assert_eq!(
            complement(&g).unwrap().fuse(&g).unwrap(),
            base("complete(v1, v2, v3, v4)"),
        );
    }

    #[test]
    fn literal_complement_cancels_the_vertices() {
        let lit = complement_literal(&gamma()).unwrap();
        assert_eq!(print_form(&lit), "{ | +{v1,v4}, +{v2,v4}}");
    }

    #[test]
    fn complement_rejects_unsuitable_forms() {
        assert!(matches!(
            complement(&arith("2*(a&b)")),
            Err(AnalysisError::UnsupportedMode { .. })
        ));
        assert!(matches!(
            complement(&base("~a")),
            Err(AnalysisError::NegativeCoefficients { .. })
        ));
        assert!(matches!(
            complement(&base("edge(a, b)")),
            Err(AnalysisError::DanglingEdge(_))
        ));
    }

    #[test]
    fn star_decomposition_matches_the_worked_example() {
        let d = star_composed_form(&gamma()).unwrap();
        let shape: Vec<(&str, usize)> =
            d.stars.iter().map(|s| (s.center.as_str(), s.leaves.len())).collect();
        assert_eq!(shape, [("v3", 3), ("v1", 2), ("v2", 2), ("v4", 1)]);
        assert_eq!(
            d.to_string(),
            "star(v3; v1, v2, v4) + star(v1; v2, v3) + star(v2; v1, v3) + star(v4; v3)",
        );
    }

    #[test]
    fn star_decomposition_rebuilds_its_source() {
        for src in ["v1&v2&v3 + v3&v4", "complete(a, b, c)", "null(a, b)", "phi", "a + edge1&x"] {
            let g = base(src);
            assert_eq!(star_composed_form(&g).unwrap().rebuild(), g, "{src}");
        }
    }

    #[test]
    fn leafless_stars_are_bare_atoms() {
        let d = star_composed_form(&base("null(a, b)")).unwrap();
        assert_eq!(d.to_string(), "a + b");
        assert_eq!(star_composed_form(&base("phi")).unwrap().to_string(), "phi");
    }

    #[test]
    fn degree_sequences_read_off_the_stars() {
        assert_eq!(degree_sequence(&gamma()).unwrap().0, [3, 2, 2, 1]);
        assert_eq!(degree_sequence(&gamma_prime()).unwrap().0, [3, 2, 2, 1]);
        assert_eq!(degree_sequence(&base("complete(a, b, c, d)")).unwrap().0, [3, 3, 3, 3]);
        assert_eq!(degree_sequence(&gamma()).unwrap().to_string(), "[3, 2, 2, 1]");
    }

    #[test]
    fn cardinality_matching_is_weaker_than_isomorphism() {
        assert!(scf_equivalent(&gamma(), &gamma_prime()).unwrap());
        assert!(!scf_equivalent(&base("complete(a, b, c)"), &base("path(a, b, c)")).unwrap());

        let six = base("cycle(a, b, c, d, e, f)");
        let split = base("cycle(a, b, c) + cycle(d, e, f)");
        assert!(scf_equivalent(&six, &split).unwrap());
        assert_eq!(isomorphic_exact(&six, &split).unwrap(), None);
    }

    #[test]
    fn exact_search_finds_a_real_bijection() {
        let (g, h) = (gamma(), gamma_prime());
        let map = isomorphic_exact(&g, &h).unwrap().expect("the example pair is isomorphic");
        for (k, c) in g.edges() {
            let (u, w) = k.ends();
            let key = EdgeKey::undirected(map[u].clone(), map[w].clone());
            assert_eq!(h.edges().get(&key), Some(c));
        }
        assert_eq!(map.len(), 4);
    }

    #[test]
    fn exact_search_maps_a_form_to_itself_identically() {
        let g = gamma();
        let map = isomorphic_exact(&g, &g).unwrap().unwrap();
        for (k, v) in &map {
            assert_eq!(k, v);
        }
    }

    #[test]
    fn exact_search_respects_its_bound() {
        let g = base("complete(a, b, c, d)");
        assert!(matches!(
            isomorphic_exact_bounded(&g, &g, 3),
            Err(AnalysisError::SizeBound { vertices: 4, bound: 3 })
        ));
    }

    #[test]
    fn mismatched_counts_short_circuit() {
        assert_eq!(isomorphic_exact(&base("null(a, b)"), &base("null(a, b, c)")).unwrap(), None);
        assert_eq!(
            isomorphic_exact(&base("a&b + c"), &base("null(a, b, c)")).unwrap(),
            None,
        );
    }

    #[test]
    fn union_solver_recovers_the_unknown() {
        let s = solve_union(&base("a&b + c"), &base("a&b")).unwrap();
        assert_eq!(print_form(&s.x), "{+c | }");
        assert!(s.verified);

        let g = gamma();
        let s = solve_union(&g, &g).unwrap();
        assert!(s.x.is_empty() && s.verified);

        let s = solve_union(&arith("3*a"), &arith("5*a")).unwrap();
        assert_eq!(print_form(&s.x), "{-2a | }");
        assert!(s.verified);
    }

    #[test]
    fn union_solver_flags_annihilating_witnesses() {
        let s = solve_union(&base("a"), &base("~a")).unwrap();
        assert_eq!(print_form(&s.x), "{+a | }");
        assert!(!s.verified);
    }

    #[test]
    fn union_solver_needs_matching_modes() {
        assert!(matches!(
            solve_union(&base("a"), &arith("a")),
            Err(AnalysisError::Form(FormError::ModeMismatch(..)))
        ));
    }

    #[test]
    fn engrosure_orders_multiples_of_one_key() {
        let key = FormKey::Vertex(VertexAtom::new("a").unwrap());
        assert_eq!(
            engrosure_compare(&arith("2*a"), &arith("3*a"), &key).unwrap(),
            EngrosureOrder::Less,
        );
        assert_eq!(
            engrosure_compare(&arith("2*a"), &arith("2*a"), &key).unwrap(),
            EngrosureOrder::Equal,
        );
        assert_eq!(
            engrosure_compare(&arith("-1*a"), &arith("-4*a"), &key).unwrap(),
            EngrosureOrder::Greater,
        );
        assert_eq!(
            engrosure_compare(&arith("phi"), &arith("2*a"), &key).unwrap(),
            EngrosureOrder::Less,
        );
        assert_eq!(
            engrosure_compare(&arith("2*a"), &arith("3*b"), &key).unwrap(),
            EngrosureOrder::Incomparable,
        );
        assert!(matches!(
            engrosure_compare(&base("a"), &base("a"), &key),
            Err(AnalysisError::UnsupportedMode { .. })
        ));
    }
}
