use atomwidth_core::colouring::{self, ChiBound};
use atomwidth_core::{atoms, build_atom_expr, cwx, generators, hardness, Graph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn built_expressions_generate_the_atom(n in 6usize..24, seed in any::<u64>()) {
        let g = generators::random_c4p6free_atom(n, seed).unwrap();
        let out = build_atom_expr(&g).unwrap();
        prop_assert!(cwx::validate(&out.expr, &g));
        prop_assert!(out.width <= 18);
    }

    #[test]
    fn chi_agrees_with_brute_force(n in 4usize..14, seed in any::<u64>()) {
        let g = generators::random_c4p6free_atom(n, seed).unwrap();
        let brute = colouring::chromatic_bruteforce(&g).unwrap().0;
        let via = colouring::chromatic_via_atoms(&g).unwrap().chi;
        let e = build_atom_expr(&g).unwrap().expr;
        prop_assert_eq!(via, brute);
        prop_assert_eq!(colouring::chromatic_cwx(&e, None).unwrap(), ChiBound::Exact(brute));
    }

    #[test]
    fn atoms_cover_every_edge(n in 2usize..16, p in 0.1f64..0.6, seed in any::<u64>()) {
        let g = generators::random_split(n, p, seed);
        let tree = atoms::decompose_atoms(&g);
        for (u, v) in g.edges() {
            prop_assert!(tree.atoms.iter().any(|a| a.contains(&u) && a.contains(&v)));
        }
        for a in &tree.atoms {
            prop_assert!(atoms::is_atom(&g.induced(a).unwrap().0));
        }
    }

    #[test]
    fn reductions_preserve_colourability(seed in 0u64..10_000) {
        let (g, lists) = hardness::random_instance(18, seed);
        let r = hardness::reduce(&g, &lists).unwrap();
        prop_assert!(hardness::verify_equivalence(&r).unwrap().holds());
        prop_assert!(hardness::verify_freeness(&r).is_none());
    }
}

#[test]
fn glued_atoms_keep_the_maximum() {
    let a = generators::petersen();
    let b = Graph::complete(4);
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (u + 9, v + 9)));
    let g = Graph::from_edges(13, &edges).unwrap();
    assert_eq!(atoms::decompose_atoms(&g).atoms.len(), 2);
    assert_eq!(colouring::chromatic_bruteforce(&g).unwrap().0, 4);
}
