use cycles_core::brute;
use cycles_core::gf2::{self, BitVec};
use cycles_core::hypergraph::{self, Hypergraph2, RookGrid};
use proptest::prelude::*;

fn hypergraph(max_v: usize) -> impl Strategy<Value = Hypergraph2> {
    (3usize..=max_v).prop_flat_map(|n| {
        let all = Hypergraph2::complete(n).faces().to_vec();
        prop::collection::vec(any::<bool>(), all.len())
            .prop_map(move |keep| Hypergraph2::new(n, all.iter().zip(&keep).filter(|(_, &k)| k).map(|(&f, _)| f)).unwrap())
    })
}

fn subset(len: usize, mask: u64) -> BitVec {
    BitVec::from_indices(len, (0..len).filter(|i| mask >> (i % 64) & 1 == 1))
}

// Edge parity computed straight from the face triples.
fn covers_edges_evenly(h: &Hypergraph2, c: &BitVec) -> bool {
    let mut count = std::collections::HashMap::new();
    for i in c.iter_ones() {
        let [a, b, d] = h.faces()[i];
        for e in [(a, b), (a, d), (b, d)] {
            *count.entry(e).or_insert(0usize) += 1;
        }
    }
    count.values().all(|n| n % 2 == 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn criteria_agree(h in hypergraph(6), mask in any::<u64>()) {
        let c = subset(h.nfaces(), mask);
        let want = covers_edges_evenly(&h, &c);
        prop_assert_eq!(hypergraph::edge_parity_criterion(&h, &c).unwrap(), want);
        prop_assert_eq!(hypergraph::boundary_sum_criterion(&h, &c).unwrap(), want);
    }

    #[test]
    fn two_cycles_form_a_space(h in hypergraph(6), a in any::<u64>(), b in any::<u64>()) {
        let basis = hypergraph::two_cycle_basis(&h);
        let pick = |m| gf2::combine(&basis, &subset(basis.len(), m), h.nfaces());
        let (x, y) = (pick(a), pick(b));
        prop_assert!(covers_edges_evenly(&h, &x) && covers_edges_evenly(&h, &y));
        prop_assert!(hypergraph::is_two_cycle(&h, &(&x ^ &y)).unwrap());
        if h.nfaces() <= 16 {
            let count = brute::count_two_cycles(h.faces(), h.edges(), 16).unwrap();
            prop_assert_eq!(count, 1u64 << basis.len());
        }
    }

    #[test]
    fn euler_identity(h in hypergraph(7)) {
        let r = hypergraph::euler_report(&h);
        prop_assert!(r.identity_holds);
        // Isolated vertices are components too.
        prop_assert_eq!(r.b0, h.edge_graph().component_count());
        prop_assert!(r.b0 >= h.nverts() - used_vertices(&h));
    }

    // Faces sharing one vertex carry no nonzero 2-cycle.
    #[test]
    fn cone_has_no_two_cycles(h in hypergraph(7), v in 0usize..3) {
        let star = Hypergraph2::new(h.nverts(), h.faces().iter().copied().filter(|f| f.contains(&v))).unwrap();
        prop_assert!(hypergraph::two_cycle_basis(&star).is_empty());
    }

    #[test]
    fn padding_keeps_b2(h in hypergraph(6), v in any::<prop::sample::Index>(), e in any::<prop::sample::Index>()) {
        prop_assume!(h.nfaces() > 0);
        let b2 = hypergraph::two_cycle_basis(&h).len();
        let padded = hypergraph::pad_vertex(&h, v.index(h.nverts())).unwrap();
        prop_assert_eq!(hypergraph::two_cycle_basis(&padded).len(), b2);
        prop_assert_eq!((padded.nverts(), padded.nedges(), padded.nfaces()), (h.nverts() + 2, h.nedges() + 3, h.nfaces() + 1));
        let (a, b) = h.edges()[e.index(h.nedges())];
        let padded = hypergraph::pad_edge(&h, a, b).unwrap();
        prop_assert_eq!(hypergraph::two_cycle_basis(&padded).len(), b2);
        prop_assert_eq!((padded.nverts(), padded.nedges(), padded.nfaces()), (h.nverts() + 1, h.nedges() + 2, h.nfaces() + 1));
    }

    #[test]
    fn complete_hypergraph_tetrahedra(n in 4usize..=7, mask in any::<u64>()) {
        let space = hypergraph::complete_2cycle_space(n).unwrap();
        let c = gf2::combine(&space.basis, &subset(space.basis.len(), mask), Hypergraph2::complete(n).nfaces());
        let terms = hypergraph::decompose_two_cycle(n, &c).unwrap();
        let h = Hypergraph2::complete(n);
        let mut back = h.empty_set();
        for [i, j, k] in terms {
            back ^= &hypergraph::tetrahedron(&h, [i, j, k, n - 1]).unwrap();
        }
        prop_assert_eq!(back, c);
    }

    #[test]
    fn rook_round_trip(n in 2usize..=4, ell in 1usize..=3, sides in prop::collection::vec(prop::collection::vec((0usize..4, 1usize..4), 3), 0..6)) {
        let grid = RookGrid::new(n, ell).unwrap();
        let mut c = grid.empty_set();
        for box_sides in &sides {
            // Offsets in 1..n keep the two sides distinct.
            let s: Vec<[usize; 2]> = box_sides.iter().take(ell).map(|&(a, d)| [a % n, (a + 1 + d % (n - 1)) % n]).collect();
            c ^= &grid.parallelepiped(&s).unwrap();
        }
        prop_assert!(grid.is_rook_cycle(&c).unwrap());
        let terms = grid.decompose(&c).unwrap();
        let mut back = grid.empty_set();
        for p in terms {
            back ^= &grid.corner_parallelepiped(&grid.coords(p)).unwrap();
        }
        prop_assert_eq!(back, c);
        prop_assert_eq!(grid.space_dim(), grid.claimed_dim());
    }
}

fn used_vertices(h: &Hypergraph2) -> usize {
    let mut used = vec![false; h.nverts()];
    for f in h.faces() {
        for &v in f {
            used[v] = true;
        }
    }
    used.iter().filter(|&&u| u).count()
}

#[test]
fn hypergraph_rook_bridge() {
    for n in 1..=3 {
        let r = hypergraph::hyper_rook_bridge(n).unwrap();
        assert_eq!(r.hypergraph_dim, r.rook_dim);
        assert_eq!(r.rook_dim, (n - 1).pow(3));
        assert!(r.forward && r.backward);
    }
}
