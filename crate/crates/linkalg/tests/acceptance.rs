//! The release gate. Each test is one acceptance criterion and prints a
//! single `acceptance <name>: PASS` / `FAIL` line (visible with
//! `cargo test --test acceptance -- --nocapture`). Criteria carry runtime
//! budgets; every test asserts its own.

use std::collections::BTreeMap;
use std::panic::AssertUnwindSafe;
use std::time::{Duration, Instant};

use linkalg::{
    check_law, complement, eval, isomorphic_exact, parse, print_expr, scf_equivalent, solve_union,
    star_composed_form, EdgeKey, EvalContext, Expr, Form, Limits, Mode, VertexAtom,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(name: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= budget => {
            println!("acceptance {name}: PASS ({elapsed:.2?})");
        }
        Ok(()) => {
            println!("acceptance {name}: FAIL (over budget: {elapsed:.2?} > {budget:.2?})");
            panic!("criterion {name} exceeded its runtime budget");
        }
        Err(cause) => {
            println!("acceptance {name}: FAIL ({elapsed:.2?})");
            std::panic::resume_unwind(cause);
        }
    }
}

fn base(src: &str) -> Form {
    eval(&parse(src).expect("example parses"), &EvalContext::new(Mode::Base))
        .expect("example evaluates")
}

fn in_mode(src: &str, mode: Mode) -> Form {
    eval(&parse(src).expect("example parses"), &EvalContext::new(mode))
        .expect("example evaluates")
}

fn atoms(names: &[&str]) -> Vec<VertexAtom> {
    names.iter().map(|n| VertexAtom::new(*n).expect("valid name")).collect()
}

#[test]
fn criterion_1_worked_examples() {
    criterion("1-worked-examples", Duration::from_secs(1), || {
        // Complement of the running example graph.
        let gamma = base("v1&v2&v3 + v3&v4");
        let co = complement(&gamma).expect("plain graph");
        assert_eq!(co.to_string(), "{+v1, +v2, +v3, +v4 | +{v1,v4}, +{v2,v4}}");

        // Star-composed form, largest star first.
        let scf = star_composed_form(&gamma).expect("plain graph");
        let shape: Vec<(String, Vec<String>)> = scf
            .stars
            .iter()
            .map(|s| (s.center.to_string(), s.leaves.iter().map(ToString::to_string).collect()))
            .collect();
        assert_eq!(
            shape,
            vec![
                ("v3".into(), vec!["v1".into(), "v2".into(), "v4".into()]),
                ("v1".into(), vec!["v2".into(), "v3".into()]),
                ("v2".into(), vec!["v1".into(), "v3".into()]),
                ("v4".into(), vec!["v3".into()]),
            ]
        );
        assert_eq!(scf.rebuild(), gamma);

        // The relabeled twin is equivalent by star shape and exactly isomorphic.
        let gamma_prime = base("w1&(w2+w3+w4) + w2&w4");
        assert!(scf_equivalent(&gamma, &gamma_prime).expect("plain graphs"));
        let bijection = isomorphic_exact(&gamma, &gamma_prime)
            .expect("plain graphs")
            .expect("the relabeling is an isomorphism");
        assert_eq!(bijection.len(), 4);

        // Multigraph of the four-landmass river walk, two equal spellings.
        let direct = in_mode("2*(v1&v2) + 2*(v2&v3) + v4&(v1+v2+v3)", Mode::Arithmetical);
        let composed = in_mode("2*path(v1,v2,v3) + star(v4; v1,v2,v3)", Mode::Arithmetical);
        assert_eq!(direct, composed);

        // Reversed arrows normalize away.
        let spelled = in_mode("w1->v1 + v1->v2 + v2->v3 + (v1<-v4) + (v4<-v3)", Mode::Oriented);
        let rewritten = in_mode("w1->v1 + v1->v2 + v2->v3 + v4->v1 + v3->v4", Mode::Oriented);
        assert_eq!(spelled, rewritten);
    });
}

/// Runs catalog laws and asserts zero counterexamples at the given trial count.
fn run_clean(names: &[&str], trials: u32, seed: u64) {
    let limits = Limits::default();
    for name in names {
        let report = check_law(name, trials, seed, &limits).expect("law exists");
        assert!(
            report.counterexample.is_none(),
            "law {name} failed at trial {:?}: {}",
            report.counterexample.as_ref().map(|(t, _)| *t),
            report.counterexample.as_ref().map(|(_, d)| d.as_str()).unwrap_or("")
        );
        assert_eq!(report.passes, trials);
    }
}

#[test]
fn criterion_2_axioms() {
    criterion("2-axioms", Duration::from_secs(10), || {
        run_clean(
            &[
                "closure-fuse",
                "closure-link",
                "idempotency-fuse",
                "idempotency-link",
                "assoc-fuse",
                "assoc-link",
                "identity-fuse",
                "identity-link",
                "inverse-fuse",
                "inverse-link",
                "commutativity-fuse",
                "commutativity-link",
                "distributivity-link-left",
                "distributivity-link-right",
                "connectivity-link",
            ],
            1000,
            0xA10A,
        );
        // The pinned witnesses must fail, and be reported as such.
        for witness in ["assoc-fuse-carveout", "assoc-link-carveout"] {
            let report = check_law(witness, 5, 0xA10A, &Limits::default()).expect("law exists");
            assert!(report.expected_failure);
            assert!(report.counterexample.is_some(), "witness {witness} did not fail");
            assert!(report.ok());
        }
    });
}

#[test]
fn criterion_3_theorems() {
    criterion("3-theorems", Duration::from_secs(10), || {
        run_clean(
            &[
                "cancellation-link-left",
                "cancellation-link-right",
                "commuting-identity-link",
                "unique-identity",
                "inverse-commuting-link",
                "unique-inverse-fuse",
                "unique-inverse-link",
                "link-solvable",
                "involution",
                "complete-null-link",
                "star-null-absorb",
                "induction-path",
                "induction-cycle",
                "star-split",
                "star-merge",
                "complement-complete",
            ],
            100,
            0x7E07,
        );
    });
}

#[test]
fn criterion_4_brute_force_small_graphs() {
    criterion("4-brute-force-small-graphs", Duration::from_secs(30), || {
        let labels = atoms(&["v1", "v2", "v3", "v4", "v5"]);
        let mut checked = 0usize;
        for n in 0..=5usize {
            let verts = &labels[..n];
            let pairs: Vec<EdgeKey> = (0..n)
                .flat_map(|i| {
                    (i + 1..n).map(move |j| EdgeKey::undirected(verts[i].clone(), verts[j].clone()))
                })
                .collect();
            let complete_edges: std::collections::BTreeSet<EdgeKey> =
                pairs.iter().cloned().collect();
            for mask in 0u32..(1 << pairs.len()) {
                let vertices: BTreeMap<VertexAtom, i64> =
                    verts.iter().map(|v| (v.clone(), 1)).collect();
                let mut edges = BTreeMap::new();
                for (i, key) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        edges.insert(key.clone(), 1);
                    }
                }
                let g = Form::from_parts(Mode::Base, vertices, edges.clone())
                    .expect("plain graphs are valid");

                // Complement agrees with the direct edge-set complement.
                let co = complement(&g).expect("plain graph");
                assert_eq!(co.vertices(), g.vertices());
                let direct: BTreeMap<EdgeKey, i64> = complete_edges
                    .iter()
                    .filter(|k| !edges.contains_key(*k))
                    .map(|k| (k.clone(), 1))
                    .collect();
                assert_eq!(co.edges(), &direct);

                // The star decomposition rebuilds the graph it came from.
                assert_eq!(star_composed_form(&g).expect("plain graph").rebuild(), g);

                // A graph fused with its complement is the complete graph.
                let complete = if n == 0 {
                    Form::empty(Mode::Base)
                } else {
                    eval(
                        &Expr::complete(verts.to_vec()).expect("labels are distinct"),
                        &EvalContext::new(Mode::Base),
                    )
                    .expect("complete graphs evaluate")
                };
                assert_eq!(g.fuse(&co).expect("same mode"), complete);

                checked += 1;
            }
        }
        assert_eq!(checked, 1100, "all labeled simple graphs on at most 5 vertices");
    });
}

#[test]
fn criterion_5_arithmetical_laws() {
    criterion("5-arithmetical-laws", Duration::from_secs(10), || {
        run_clean(
            &["linearity-add", "linearity-mul", "linearity-fuse", "linearity-one", "edge-scaling"],
            500,
            0x0A41,
        );
    });
}

#[test]
fn criterion_6_heuristic_gap() {
    criterion("6-heuristic-gap", Duration::from_secs(5), || {
        let six_cycle = base("cycle(c1, c2, c3, c4, c5, c6)");
        let two_triangles = base("cycle(a1, a2, a3) + cycle(b1, b2, b3)");
        assert!(scf_equivalent(&six_cycle, &two_triangles).expect("plain graphs"));
        assert_eq!(isomorphic_exact(&six_cycle, &two_triangles).expect("plain graphs"), None);
    });
}

#[test]
fn criterion_7_union_solving() {
    criterion("7-union-solving", Duration::from_secs(10), || {
        let labels = atoms(&["u1", "u2", "u3", "u4", "x1", "x2", "x3", "x4"]);
        let (known_pool, x_pool) = labels.split_at(4);
        let mut rng = ChaCha8Rng::seed_from_u64(0x501E);
        let random_over = |pool: &[VertexAtom], rng: &mut ChaCha8Rng| {
            let mut vertices = BTreeMap::new();
            for v in pool {
                if rng.random_bool(0.5) {
                    vertices.insert(v.clone(), if rng.random_bool(0.7) { 1 } else { -1 });
                }
            }
            let mut edges = BTreeMap::new();
            for i in 0..pool.len() {
                for j in i + 1..pool.len() {
                    if rng.random_bool(0.3) {
                        let key = EdgeKey::undirected(pool[i].clone(), pool[j].clone());
                        edges.insert(key, if rng.random_bool(0.7) { 1 } else { -1 });
                    }
                }
            }
            Form::from_parts(Mode::Base, vertices, edges).expect("unit coefficients")
        };
        for _ in 0..500 {
            let known = random_over(known_pool, &mut rng);
            let x = random_over(x_pool, &mut rng);
            let target = known.fuse(&x).expect("same mode");
            let solution = solve_union(&target, &known).expect("same mode");
            assert_eq!(solution.x, x);
            assert!(solution.verified);
        }
        // Annihilating pair: the residue fails verification and says so.
        let target = base("a");
        let known = base("~a");
        let witness = solve_union(&target, &known).expect("same mode");
        assert!(!witness.verified);
    });
}

#[test]
fn criterion_8_parser_round_trip_and_fuzz() {
    criterion("8-parser-round-trip-and-fuzz", Duration::from_secs(20), || {
        let labels = atoms(&["a", "b", "c", "d", "e"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0x9A25E);
        for _ in 0..10_000 {
            let e = random_syntax(&mut rng, &labels, 5);
            let text = print_expr(&e);
            let reparsed = parse(&text)
                .unwrap_or_else(|err| panic!("printed expression failed to parse: {text}: {err}"));
            assert_eq!(reparsed, e, "round trip changed the tree for {text}");
        }
        for _ in 0..10_000 {
            let len = rng.random_range(0..64);
            let bytes: Vec<u8> = (0..len).map(|_| rng.random_range(0..=255u8)).collect();
            let text = String::from_utf8_lossy(&bytes);
            if let Err(err) = parse(&text) {
                assert!(err.line >= 1, "unpositioned error for {text:?}");
                assert!(err.col >= 1, "unpositioned error for {text:?}");
            }
        }
    });
}

/// Random syntax tree over the pool; purely syntactic, no mode constraints.
fn random_syntax(rng: &mut ChaCha8Rng, pool: &[VertexAtom], depth: usize) -> Expr {
    if depth == 0 || rng.random_bool(0.2) {
        return match rng.random_range(0..8) {
            0 => Expr::Phi,
            1..=5 => Expr::Atom(pool[rng.random_range(0..pool.len())].clone()),
            _ => {
                let k = rng.random_range(1..=pool.len());
                let mut picked: Vec<usize> = (0..pool.len()).collect();
                let mut chosen = Vec::with_capacity(k);
                for _ in 0..k {
                    let i = rng.random_range(0..picked.len());
                    chosen.push(pool[picked.swap_remove(i)].clone());
                }
                match rng.random_range(0..6) {
                    0 => Expr::path(chosen).expect("distinct atoms"),
                    1 if chosen.len() >= 3 => Expr::cycle(chosen).expect("distinct atoms"),
                    2 if chosen.len() >= 2 => {
                        let center = chosen.remove(0);
                        Expr::star(center, chosen).expect("center removed")
                    }
                    3 => Expr::complete(chosen).expect("distinct atoms"),
                    4 if chosen.len() >= 2 => Expr::edge(chosen[0].clone(), chosen[1].clone()),
                    _ => Expr::null(chosen).expect("distinct atoms"),
                }
            }
        };
    }
    match rng.random_range(0..10) {
        0..=2 => Expr::union(
            random_syntax(rng, pool, depth - 1),
            random_syntax(rng, pool, depth - 1),
        ),
        3..=5 => Expr::link(
            random_syntax(rng, pool, depth - 1),
            random_syntax(rng, pool, depth - 1),
        ),
        6 => Expr::directed_link(
            random_syntax(rng, pool, depth - 1),
            random_syntax(rng, pool, depth - 1),
            rng.random_bool(0.5),
        ),
        7 => Expr::anti(random_syntax(rng, pool, depth - 1)),
        8 => Expr::scale(rng.random_range(-99..=99), random_syntax(rng, pool, depth - 1)),
        _ => Expr::twist(random_syntax(rng, pool, depth - 1)),
    }
}
