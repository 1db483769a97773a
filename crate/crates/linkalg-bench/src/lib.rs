//! Deterministic workload builders shared by the benchmarks. Everything is
//! plain string construction so a benchmark's input never depends on timing,
//! host or iteration order.

use linkalg::{eval, parse, EvalContext, Form, Mode};

/// A chain of `blocks` triangles, consecutive triangles bridged by one edge.
/// Text length, vertex count and edge count all grow linearly.
pub fn triangle_chain_src(blocks: usize) -> String {
    let mut parts = Vec::new();
    for i in 0..blocks {
        let b = 3 * i;
        parts.push(format!("x{}&x{}&x{}", b + 1, b + 2, b + 3));
        if i + 1 < blocks {
            parts.push(format!("x{}&x{}", b + 3, b + 4));
        }
    }
    parts.join(" + ")
}

/// The 3-cube on eight vertices named `{prefix}0` through `{prefix}7`.
/// Every vertex has degree three, so the exact-isomorphism search cannot
/// lean on the degree sequence to prune candidates.
pub fn cube_src(prefix: &str) -> String {
    relabeled_cube_src(prefix, |v| v)
}

/// The same cube with corner indices scrambled by an affine permutation
/// of Z8, which is a relabeling but not a cube symmetry: the search has
/// to backtrack to line the corners up again.
pub fn scrambled_cube_src(prefix: &str) -> String {
    relabeled_cube_src(prefix, |v| (5 * v + 3) % 8)
}

fn relabeled_cube_src(prefix: &str, relabel: impl Fn(u32) -> u32) -> String {
    let mut edges = Vec::new();
    for v in 0..8u32 {
        for bit in 0..3 {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push(format!("{prefix}{}&{prefix}{}", relabel(v), relabel(w)));
            }
        }
    }
    edges.join(" + ")
}

/// Evaluates a builder's output in the plain-graph algebra.
pub fn form_of(src: &str) -> Form {
    eval(&parse(src).expect("builder output parses"), &EvalContext::new(Mode::Base))
        .expect("builder output evaluates")
}

#[cfg(test)]
mod tests {
    use super::*;
    use linkalg::{isomorphic_exact, scf_equivalent};

    #[test]
    fn triangle_chain_has_the_expected_size() {
        let g = form_of(&triangle_chain_src(10));
        assert_eq!(g.vertices().len(), 30);
        assert_eq!(g.edges().len(), 10 * 3 + 9);
    }

    #[test]
    fn the_scrambled_cube_is_still_a_cube() {
        let a = form_of(&cube_src("v"));
        let b = form_of(&scrambled_cube_src("w"));
        assert_eq!(a.vertices().len(), 8);
        assert_eq!(b.edges().len(), 12);
        assert!(scf_equivalent(&a, &b).expect("plain graphs"));
        assert!(isomorphic_exact(&a, &b).expect("within bound").is_some());
    }
}
