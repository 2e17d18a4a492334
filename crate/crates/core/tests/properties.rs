//! Property tests over random small graphs and systems.

use num_bigint::BigInt;
use proptest::prelude::*;

use matcharr::*;

/// Random simple graph with up to `max_v` vertices and `max_e` edges.
fn arb_graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Graph> {
    (2..=max_v).prop_flat_map(move |v| {
        let pairs: Vec<(usize, usize)> = (1..=v)
            .flat_map(|a| ((a + 1)..=v).map(move |b| (a, b)))
            .collect();
        let n = pairs.len();
        proptest::collection::btree_set(0..n, 0..=max_e.min(n)).prop_map(move |picks| {
            let edges: Vec<(usize, usize)> = picks.iter().map(|&i| pairs[i]).collect();
            Graph::new(v, edges).unwrap()
        })
    })
}

fn arb_tree(max_v: usize) -> impl Strategy<Value = Graph> {
    (2..=max_v).prop_flat_map(move |v| {
        // random attachment: vertex k+1 hangs off a uniform earlier vertex
        proptest::collection::vec(0u32..u32::MAX, v - 1).prop_map(move |picks| {
            let edges: Vec<(usize, usize)> = picks
                .iter()
                .enumerate()
                .map(|(i, &r)| {
                    let child = i + 2;
                    let parent = (r as usize % (i + 1)) + 1;
                    (parent, child)
                })
                .collect();
            Graph::new(v, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn line_graph_counts(g in arb_graph(6, 7)) {
        let l = line_graph(&g);
        prop_assert_eq!(l.vertex_count(), g.edge_count());
        let expect: usize = (1..=g.vertex_count())
            .map(|v| { let d = g.degree(v); d * d.saturating_sub(1) / 2 })
            .sum();
        prop_assert_eq!(l.edge_count(), expect);
    }

    #[test]
    fn isomorphism_reflexive_symmetric(g in arb_graph(6, 7), h in arb_graph(6, 7)) {
        prop_assert!(is_isomorphic(&g, &g).unwrap());
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), is_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn enumerated_sequences_validate(g in arb_graph(6, 7)) {
        for p in enumerate_simple_paths(&g).unwrap() {
            prop_assert_eq!(p.kind, SequenceKind::Path);
            prop_assert!(p.validate(&g).is_ok());
        }
        for c in enumerate_even_cycles(&g).unwrap() {
            prop_assert_eq!(c.kind, SequenceKind::EvenCycle);
            prop_assert!(c.validate(&g).is_ok());
        }
    }

    #[test]
    fn reversal_closure_of_paths(g in arb_graph(6, 7)) {
        // reversing a canonical path leads back to the same representative
        let paths = enumerate_simple_paths(&g).unwrap();
        let set: std::collections::HashSet<Vec<usize>> =
            paths.iter().map(|p| p.edges.clone()).collect();
        for p in &paths {
            let mut rev = p.edges.clone();
            rev.reverse();
            let canonical = if rev.len() == 1 || rev[0] < rev[rev.len() - 1] {
                rev
            } else {
                p.edges.clone()
            };
            prop_assert!(set.contains(&canonical));
        }
    }

    #[test]
    fn tree_path_and_hyperplane_counts(t in arb_tree(7)) {
        let n = t.edge_count();
        prop_assert_eq!(enumerate_simple_paths(&t).unwrap().len(), n * (n + 1) / 2);
        prop_assert_eq!(enumerate_even_cycles(&t).unwrap().len(), 0);
        let a = build_matching_arrangement(&t, &EdgeNumbering::identity(n)).unwrap();
        prop_assert_eq!(a.len(), n * (n + 1) / 2);
    }

    #[test]
    fn rank_invariant_under_permutation_and_scaling(
        rows in proptest::collection::vec(
            proptest::collection::vec(-3i64..=3, 4), 1..=4),
        scale in 1i64..=5,
    ) {
        let m = RatMatrix::new(rows.iter().map(|r| RatVector::from_integers(r)).collect()).unwrap();
        let base = rank(&m);
        let mut permuted = rows.clone();
        permuted.rotate_left(1);
        let pm = RatMatrix::new(permuted.iter().map(|r| RatVector::from_integers(r)).collect()).unwrap();
        prop_assert_eq!(rank(&pm), base);
        let scaled: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x * scale).collect()).collect();
        let sm = RatMatrix::new(scaled.iter().map(|r| RatVector::from_integers(r)).collect()).unwrap();
        prop_assert_eq!(rank(&sm), base);
    }

    #[test]
    fn span_membership_is_additive(
        rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 1..=3),
        v in proptest::collection::vec(-2i64..=2, 3),
        w in proptest::collection::vec(-2i64..=2, 3),
    ) {
        let basis = RatMatrix::new(rows.iter().map(|r| RatVector::from_integers(r)).collect()).unwrap();
        let rv = RatVector::from_integers(&v);
        let rw = RatVector::from_integers(&w);
        if in_span(&rv, &basis).unwrap() && in_span(&rw, &basis).unwrap() {
            let sum = rv.add(&rw).unwrap();
            prop_assert!(in_span(&sum, &basis).unwrap());
        }
    }

    #[test]
    fn fm_agrees_with_randomized_search(
        normals in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 3), 1..=5),
        signs in proptest::collection::vec(any::<bool>(), 5),
        seed in 0u64..1000,
    ) {
        use rand::{Rng, SeedableRng};
        let cons: Vec<(RatVector, Sign)> = normals
            .iter()
            .zip(&signs)
            .filter(|(n, _)| n.iter().any(|&x| x != 0))
            .map(|(n, &s)| (RatVector::from_integers(n), if s { Sign::Plus } else { Sign::Minus }))
            .collect();
        prop_assume!(!cons.is_empty());
        let sys = StrictSystem::new(cons.clone()).unwrap();
        let feasible = fm_feasible(&sys).unwrap();
        // whenever random search finds a witness, FM must agree
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut witness_found = false;
        'search: for _ in 0..10_000 {
            let p: Vec<i64> = (0..3).map(|_| rng.gen_range(-50i64..=50)).collect();
            let pv = RatVector::from_integers(&p);
            for (a, s) in &cons {
                let val = a.inner(&pv).unwrap();
                let ok = match s {
                    Sign::Plus => val > Rat::from(BigInt::from(0)),
                    Sign::Minus => val < Rat::from(BigInt::from(0)),
                };
                if !ok {
                    continue 'search;
                }
            }
            witness_found = true;
            break;
        }
        if witness_found {
            prop_assert!(feasible);
        }
    }

    #[test]
    fn arrangement_is_numbering_equivariant(g in arb_graph(5, 6), seed in 0u64..500) {
        // permuting the numbering permutes coordinates of the normal set
        let n = g.edge_count();
        prop_assume!(n >= 1);
        let id = EdgeNumbering::identity(n);
        let num = EdgeNumbering::random(n, seed);
        let a = build_matching_arrangement(&g, &id).unwrap();
        let b = build_matching_arrangement(&g, &num).unwrap();
        prop_assert_eq!(a.len(), b.len());
        let mut moved: Vec<Vec<i8>> = a
            .normals()
            .map(|normal| {
                let mut out = vec![0i8; n];
                for (pos, &c) in normal.iter().enumerate() {
                    // identity puts edge `pos` at coordinate `pos`
                    out[num.number_of(pos) - 1] = c;
                }
                if out.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                    for c in &mut out { *c = -*c; }
                }
                out
            })
            .collect();
        moved.sort();
        let got: Vec<Vec<i8>> = b.normals().map(|x| x.to_vec()).collect();
        prop_assert_eq!(moved, got);
    }

    #[test]
    fn reconstruction_is_line_graph(g in arb_graph(6, 7)) {
        let num = EdgeNumbering::identity(g.edge_count());
        let a = build_matching_arrangement(&g, &num).unwrap();
        prop_assert_eq!(reconstruct_line_graph(&a), line_graph(&g));
    }

    #[test]
    fn sign_vectors_are_antipodal(g in arb_graph(5, 5), seed in 0u64..500) {
        prop_assume!(g.edge_count() >= 1);
        let a = build_matching_arrangement(&g, &EdgeNumbering::identity(g.edge_count())).unwrap();
        let p = sample_generic_point(&a, seed).unwrap();
        let neg: Vec<i64> = p
            .weights()
            .entries()
            .iter()
            .map(|w| -i64::try_from(w.numer().clone()).unwrap())
            .collect();
        let q = WeightPoint::from_integers(&neg);
        let sp = sign_vector(&a, &p).unwrap();
        let sq = sign_vector(&a, &q).unwrap();
        prop_assert_eq!(sp.negate(), sq);
    }

    #[test]
    fn symdiff_pieces_are_paths_or_even_cycles(g in arb_graph(6, 7), i in 0usize..50, j in 0usize..50) {
        let ms = enumerate_matchings(&g).unwrap();
        let m1 = &ms[i % ms.len()];
        let m2 = &ms[j % ms.len()];
        for c in symdiff_decompose(m1, m2, &g) {
            match c.kind {
                SequenceKind::Path => prop_assert!(!c.edges.is_empty()),
                SequenceKind::EvenCycle => {
                    prop_assert_eq!(c.edges.len() % 2, 0);
                    prop_assert!(c.edges.len() >= 4);
                }
            }
            // alternation between the matchings
            for w in c.edges.windows(2) {
                prop_assert_ne!(m1.contains(w[0]), m1.contains(w[1]));
            }
        }
        if m1 == m2 {
            prop_assert!(symdiff_decompose(m1, m2, &g).is_empty());
        }
    }
}

#[test]
fn chromatic_vanishing_points() {
    // P(0) = 0 with a vertex, P(1) = 0 with an edge, on every 4-vertex graph
    for g in all_graphs(4).unwrap() {
        let chi = chromatic_polynomial(&g).unwrap();
        assert_eq!(chi.eval_int(&BigInt::from(0)), BigInt::from(0));
        if g.edge_count() > 0 {
            assert_eq!(chi.eval_int(&BigInt::from(1)), BigInt::from(0));
        }
    }
}
