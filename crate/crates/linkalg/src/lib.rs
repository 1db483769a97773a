//! A symbolic engine for a signed-graph algebra. Expressions combine named
//! vertices with union, link and anti operators (plus directed and
//! integer-weighted variants); evaluation normalizes them to canonical
//! vertex/edge forms with signed coefficients. On top of the core sit the
//! derived constructions (complement, star decomposition, degree sequences,
//! union-equation solving) and a seeded randomized law checker.

pub mod analysis;
pub mod atom;
pub mod eval;
pub mod expr;
pub mod form;
pub mod laws;
pub mod lexer;
pub mod parser;
pub mod render;

pub use analysis::{
    complement, complement_literal, degree_sequence, engrosure_compare, isomorphic_exact,
    isomorphic_exact_bounded, scf_equivalent, solve_union, star_composed_form, AnalysisError,
    DegreeSequence, EngrosureOrder, Star, StarDecomposition, UnionSolution, ISO_BOUND,
};
pub use atom::{EdgeKey, EdgeKind, Mode, VertexAtom};
pub use eval::{eval, EvalContext, EvalError, Limits};
pub use expr::{Expr, GenCall, GeneratorError};
pub use form::{Form, FormError, FormKey};
pub use laws::{check_law, default_catalog, law_catalog, run_law, LawDef, LawReport, UnknownLaw};
pub use parser::{parse, ParseError, ParseErrorKind};
pub use render::{
    print_ast, print_expr, print_form, render, to_dot, to_json, RenderFormat, RenderOptions,
};
