use super::*;
use crate::graphs::{build_kneser, build_local_complete, build_local_kneser, VertexLabel};
use crate::setkit::Subset;
use alloc::vec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn set(n: usize, xs: &[usize]) -> Subset {
    Subset::from_elements(n, xs.iter().copied()).unwrap()
}

fn brute_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn alpha_formula_examples() {
    assert_eq!(alpha_formula(3, 2, 1).unwrap(), 3);
    assert_eq!(alpha_formula(5, 4, 2).unwrap(), 15);
    assert_eq!(alpha_formula(4, 4, 2).unwrap(), 3);
    assert!(alpha_formula(3, 4, 1).is_err());
    assert!(alpha_formula(5, 3, 2).is_err());
    assert!(alpha_formula(5, 3, 0).is_err());
}

#[test]
fn alpha_exact_examples() {
    let budget = Budget::default();
    let lc = build_local_complete(3, 2).unwrap();
    assert_eq!(alpha_exact(&lc, &budget).unwrap(), 3);
    assert_eq!(brute_alpha(&lc), 3);
    let petersen = build_kneser(5, 2).unwrap();
    assert_eq!(alpha_exact(&petersen, &budget).unwrap(), 4);
    assert_eq!(brute_alpha(&petersen), 4);
    let g = build_local_kneser(5, 4, 2).unwrap();
    assert_eq!(alpha_exact(&g, &budget).unwrap(), 15);
}

#[test]
fn alpha_exact_agrees_with_formula_on_small_grid() {
    let budget = Budget::default();
    for n in 2..=6 {
        for t in 1..=n / 2 {
            for r in 2 * t..=n {
                let g = build_local_kneser(n, r, t).unwrap();
                let a = alpha_exact(&g, &budget).unwrap();
                assert_eq!(a as u64, alpha_formula(n, r, t).unwrap(), "({n},{r},{t})");
            }
        }
    }
}

#[test]
fn alpha_budget_is_enforced() {
    let g = build_kneser(6, 2).unwrap();
    let tight = Budget {
        alpha: 10,
        ..Budget::default()
    };
    assert!(alpha_exact(&g, &tight).unwrap_err().is_budget());
}

#[test]
fn s_sigma_identity_on_u1_3_2() {
    let g = build_local_kneser(3, 2, 1).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(3).unwrap()).unwrap();
    let labels: Vec<VertexLabel> = s.members().iter().map(|&v| *g.label(v).unwrap()).collect();
    let mut expected = vec![
        VertexLabel::new(set(3, &[1]), set(3, &[2])),
        VertexLabel::new(set(3, &[1]), set(3, &[3])),
        VertexLabel::new(set(3, &[2]), set(3, &[3])),
    ];
    expected.sort();
    let mut got = labels;
    got.sort();
    assert_eq!(got, expected);
}

#[test]
fn s_sigma_has_formula_size() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (n, r, t) in [(5, 4, 2), (6, 5, 2), (6, 3, 1), (5, 5, 2)] {
        let g = build_local_kneser(n, r, t).unwrap();
        for _ in 0..10 {
            let sigma = Permutation::random(n, &mut rng).unwrap();
            let s = build_s_sigma(&g, &sigma).unwrap();
            assert_eq!(s.len() as u64, alpha_formula(n, r, t).unwrap());
        }
    }
    let g = build_local_kneser(4, 3, 1).unwrap();
    assert!(build_s_sigma(&g, &Permutation::identity(5).unwrap()).is_err());
}

#[test]
fn independent_set_rejects_edges() {
    let g = build_kneser(4, 2).unwrap();
    let (u, v) = g.edges()[0];
    assert!(IndependentSet::new(&g, vec![u, v]).is_err());
    assert!(IndependentSet::new(&g, vec![99]).is_err());
    assert_eq!(IndependentSet::new(&g, vec![u, u]).unwrap().len(), 1);
}

#[test]
fn centers_of_s_identity() {
    let g = build_local_kneser(4, 3, 1).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(4).unwrap()).unwrap();
    let table = extract_centers(&g, &s).unwrap();
    assert_eq!(table.center(&set(4, &[2, 3, 4])), Some(2));
    assert_eq!(table.entries.len(), 4);

    let g = build_local_kneser(5, 5, 2).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(5).unwrap()).unwrap();
    let table = extract_centers(&g, &s).unwrap();
    assert_eq!(table.entries, vec![(set(5, &[1, 2, 3, 4, 5]), 1)]);
}

#[test]
fn non_star_block_is_rejected() {
    // two vertices of U_2(4,4) with disjoint A: independent, but not a star
    let g = build_local_kneser(4, 4, 2).unwrap();
    let u = g
        .index_of(&VertexLabel::new(set(4, &[1, 2]), set(4, &[3, 4])))
        .unwrap();
    let w = g
        .index_of(&VertexLabel::new(set(4, &[1, 3]), set(4, &[2, 4])))
        .unwrap();
    // both contain 1 but a full star in KG(4,2) has three members
    let s = IndependentSet::new(&g, vec![u, w]).unwrap();
    let err = extract_centers(&g, &s).unwrap_err();
    assert!(matches!(err, Error::NotAStar { .. }), "{err:?}");

    let s = IndependentSet::new(&g, vec![]).unwrap();
    assert!(matches!(
        extract_centers(&g, &s).unwrap_err(),
        Error::InternalInconsistency(_)
    ));
}

#[test]
fn center_consistency() {
    let g = build_local_kneser(5, 4, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..5 {
        let sigma = Permutation::random(5, &mut rng).unwrap();
        let s = build_s_sigma(&g, &sigma).unwrap();
        assert!(check_center_consistency(&extract_centers(&g, &s).unwrap()).is_empty());
    }
    let g = build_local_kneser(5, 5, 2).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(5).unwrap()).unwrap();
    assert!(check_center_consistency(&extract_centers(&g, &s).unwrap()).is_empty());

    // R = {1,2,3} -> 1, R' = {1,2,4} -> 2: both centers lie in R ∩ R'
    let table = CenterTable {
        n: 4,
        r: 3,
        t: 1,
        entries: vec![(set(4, &[1, 2, 3]), 1), (set(4, &[1, 2, 4]), 2)],
    };
    let violations = check_center_consistency(&table);
    assert!(!violations.is_empty());
    assert!(violations
        .iter()
        .any(|v| v.x == 1 && v.z == 2 && v.first == set(4, &[1, 2, 3])));
}

#[test]
fn d_s_of_s_identity() {
    let g = build_local_kneser(4, 3, 1).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(4).unwrap()).unwrap();
    let d = build_d_s(&g, &s).unwrap();
    let degrees: Vec<usize> = (1..=4).map(|i| d.out_degree(i)).collect();
    assert_eq!(degrees, vec![3, 2, 0, 0]);
    assert_eq!(d.arcs(), vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]);
    assert!(d.two_cycles().is_empty());

    let g = build_local_kneser(5, 5, 2).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(5).unwrap()).unwrap();
    let d = build_d_s(&g, &s).unwrap();
    let degrees: Vec<usize> = (1..=5).map(|i| d.out_degree(i)).collect();
    assert_eq!(degrees, vec![4, 0, 0, 0, 0]);
}

#[test]
fn d_s_degree_sequence_and_size_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (n, r, t) in [(5, 3, 1), (6, 4, 1), (6, 5, 2), (7, 5, 2)] {
        let g = build_local_kneser(n, r, t).unwrap();
        for _ in 0..5 {
            let sigma = Permutation::random(n, &mut rng).unwrap();
            let s = build_s_sigma(&g, &sigma).unwrap();
            let d = build_d_s(&g, &s).unwrap();
            let mut degrees: Vec<usize> = (1..=n).map(|i| d.out_degree(i)).collect();
            degrees.sort_unstable_by(|a, b| b.cmp(a));
            let mut expected: Vec<usize> = (r - 1..n).rev().collect();
            expected.resize(n, 0);
            assert_eq!(degrees, expected);
            let total: u64 = degrees
                .iter()
                .map(|&di| binomial(di as u64, r as u64 - 1) * binomial(r as u64 - 1, t as u64 - 1))
                .sum();
            assert_eq!(total, s.len() as u64);
        }
    }
}

#[test]
fn i_d_examples() {
    let g = build_local_kneser(4, 3, 1).unwrap();
    let empty = DirectedGraph::new(4).unwrap();
    assert!(build_i_d(&g, &empty).unwrap().is_empty());

    let s = build_s_sigma(&g, &Permutation::identity(4).unwrap()).unwrap();
    assert_eq!(build_i_d(&g, &build_d_s(&g, &s).unwrap()).unwrap(), s);

    let g = build_local_kneser(5, 4, 2).unwrap();
    let d = DirectedGraph::transitive_tournament(&[1, 2, 3, 4, 5]).unwrap();
    assert_eq!(build_i_d(&g, &d).unwrap().len(), 15);

    assert!(DirectedGraph::from_arcs(3, &[(1, 1)]).is_err());
    assert!(DirectedGraph::from_arcs(3, &[(1, 4)]).is_err());
}

#[test]
fn enumeration_examples() {
    let budget = Budget::default();
    let petersen = build_kneser(5, 2).unwrap();
    let sets = enumerate_maximum_independent_sets(&petersen, &budget).unwrap();
    assert_eq!(sets.len(), 5);
    for s in &sets {
        let common = s
            .members()
            .iter()
            .fold(Subset::full(5).unwrap(), |acc, &v| {
                acc.intersection(&petersen.label(v).unwrap().a)
            });
        assert_eq!(common.len(), 1);
    }
    let kg42 = build_kneser(4, 2).unwrap();
    assert_eq!(
        enumerate_maximum_independent_sets(&kg42, &budget)
            .unwrap()
            .len(),
        8
    );

    let g = build_local_kneser(4, 3, 1).unwrap();
    let enumerated: BTreeSet<IndependentSet> = enumerate_maximum_independent_sets(&g, &budget)
        .unwrap()
        .into_iter()
        .collect();
    assert_eq!(enumerated, distinct_s_sigmas(&g).unwrap());
}

#[test]
fn block_enumeration_matches_generic() {
    let budget = Budget::default();
    for (n, r, t) in [(4, 3, 1), (5, 3, 1), (5, 4, 1), (5, 5, 2), (6, 5, 2)] {
        let g = build_local_kneser(n, r, t).unwrap();
        let fast = enumerate_maximum_independent_sets(&g, &budget).unwrap();
        let slow = enumerate_maximum_independent_sets_generic(
            &g,
            &Budget {
                enumerate: usize::MAX,
                ..budget
            },
        )
        .unwrap();
        assert_eq!(fast, slow, "({n},{r},{t})");
    }
}

#[test]
fn enumeration_budget_is_enforced() {
    let g = build_local_kneser(7, 3, 1).unwrap();
    assert!(enumerate_maximum_independent_sets(&g, &Budget::default())
        .unwrap_err()
        .is_budget());
}

#[test]
fn match_to_sigma_examples() {
    let budget = Budget::default();
    let g = build_local_kneser(5, 3, 1).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(5).unwrap()).unwrap();
    let sigma = match_to_sigma(&g, &s).unwrap();
    assert_eq!(&sigma.as_slice()[..3], &[1, 2, 3]);

    let g = build_local_kneser(4, 3, 1).unwrap();
    for s in enumerate_maximum_independent_sets(&g, &budget).unwrap() {
        let sigma = match_to_sigma(&g, &s).unwrap();
        assert_eq!(build_s_sigma(&g, &sigma).unwrap(), s);
        let d = build_d_s(&g, &s).unwrap();
        assert_eq!(build_i_d(&g, &d).unwrap(), s);
    }

    // with t = 1 each block holds one vertex, so dropping one empties a block
    let s = build_s_sigma(&g, &Permutation::identity(4).unwrap()).unwrap();
    let mut members = s.into_members();
    members.pop();
    let smaller = IndependentSet::new(&g, members).unwrap();
    assert!(matches!(
        match_to_sigma(&g, &smaller).unwrap_err(),
        Error::InternalInconsistency(_)
    ));

    // with t = 2 a block keeps a partial star
    let g = build_local_kneser(5, 5, 2).unwrap();
    let s = build_s_sigma(&g, &Permutation::identity(5).unwrap()).unwrap();
    let mut members = s.into_members();
    members.pop();
    let smaller = IndependentSet::new(&g, members).unwrap();
    assert!(matches!(
        match_to_sigma(&g, &smaller).unwrap_err(),
        Error::NotAStar { .. }
    ));
}

#[test]
fn nu_mu_examples() {
    let budget = Budget::default();
    let k1 = Graph::complete(1).unwrap();
    let (nu, mu) = nu_mu_bruteforce(&build_kneser(4, 2).unwrap(), &k1, &budget).unwrap();
    assert_eq!((nu, mu), (3, Ratio::new(2, 1)));

    let g = build_local_kneser(5, 4, 2).unwrap();
    let (nu, mu) = nu_mu_bruteforce(&g, &k1, &budget).unwrap();
    assert_eq!((nu, mu), (15, Ratio::new(2, 1)));
    // C(r,t)/C(r-1,t-1) = 6/3 = 2 = |V|/α
    assert!(Ratio::new(6u64, 3) <= mu);

    let k2 = Graph::complete(2).unwrap();
    assert_eq!(
        nu_mu_bruteforce(&k2, &k2, &budget).unwrap(),
        (2, Ratio::new(1, 1))
    );

    // C5 -> K2 loses one vertex
    let c5 = Graph::cycle(5).unwrap();
    assert_eq!(
        nu_mu_bruteforce(&c5, &k2, &budget).unwrap(),
        (4, Ratio::new(5, 4))
    );

    let big = build_kneser(6, 2).unwrap();
    assert!(nu_mu_bruteforce(&big, &k2, &budget)
        .unwrap_err()
        .is_budget());
}
