use std::sync::OnceLock;

use proptest::prelude::*;

use bruhatkit::bruhat::{find_distinguished, is_distinguished};
use bruhatkit::oracle::{cell_bwb, cell_bwb_minus, symmetric_group, FqMatrix, Perm};
use bruhatkit::root_system::{CartanKind, RootSystem, SimpleSubset};
use bruhatkit::weyl::{ElemId, WeylGroup, Word};

const TYPES: [(CartanKind, usize); 10] = [
    (CartanKind::A, 1),
    (CartanKind::A, 4),
    (CartanKind::B, 2),
    (CartanKind::B, 4),
    (CartanKind::C, 3),
    (CartanKind::D, 4),
    (CartanKind::G2, 2),
    (CartanKind::F4, 4),
    (CartanKind::BC, 2),
    (CartanKind::BC, 3),
];

fn groups() -> &'static [WeylGroup] {
    static GROUPS: OnceLock<Vec<WeylGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        TYPES
            .iter()
            .map(|&(k, r)| WeylGroup::enumerate(RootSystem::build(k, r).unwrap()).unwrap())
            .collect()
    })
}

/// A group, and a raw word in its generators.
fn group_and_word(max_len: usize) -> impl Strategy<Value = (usize, Vec<u8>)> {
    (0..TYPES.len()).prop_flat_map(move |k| {
        let rank = TYPES[k].1 as u8;
        (Just(k), prop::collection::vec(0..rank, 0..=max_len))
    })
}

fn elem(g: &WeylGroup, letters: &[u8]) -> ElemId {
    g.evaluate(&Word::new(letters.to_vec())).unwrap()
}

proptest! {
    #[test]
    fn simple_reflection_changes_length_by_one((k, word) in group_and_word(14), i in 0usize..5) {
        let g = &groups()[k];
        let i = i % g.rank();
        let w = elem(g, &word);
        let ws = g.rmul(w, i);
        let (lw, lws) = (g.length(w), g.length(ws));
        prop_assert_eq!(lw.abs_diff(lws), 1);
        prop_assert_eq!(g.is_right_descent(w, i), lws < lw);
        prop_assert_eq!(g.length(g.inv(w)), lw);
    }

    #[test]
    fn reduced_iff_length_matches((k, word) in group_and_word(10)) {
        let g = &groups()[k];
        let word = Word::new(word);
        let w = g.evaluate(&word).unwrap();
        prop_assert_eq!(g.is_reduced(&word).unwrap(), g.length(w) == word.len());
        prop_assert!(g.length(w) <= word.len());
    }

    #[test]
    fn bruhat_order_basics((k, a) in group_and_word(12), b in prop::collection::vec(0u8..5, 0..12)) {
        let g = &groups()[k];
        let b: Vec<u8> = b.into_iter().map(|x| x % g.rank() as u8).collect();
        let (v, w) = (elem(g, &a), elem(g, &b));
        prop_assert!(g.bruhat_leq(g.identity(), w));
        prop_assert!(g.bruhat_leq(w, g.longest()));
        if g.bruhat_leq(v, w) {
            prop_assert!(g.length(v) <= g.length(w));
            prop_assert!(g.bruhat_leq(g.inv(v), g.inv(w)));
            prop_assert_eq!(g.bruhat_leq(w, v), v == w);
        }
    }

    #[test]
    fn distinguished_search_hits_every_lower_element((k, a) in group_and_word(12), seed in any::<u64>()) {
        let g = &groups()[k];
        let w = elem(g, &a);
        let below: Vec<ElemId> = g.ids().filter(|&v| g.bruhat_leq(v, w)).collect();
        let target = below[(seed % below.len() as u64) as usize];
        let sub = find_distinguished(g, g.word(w), target).unwrap();
        prop_assert_eq!(sub.endpoint(), target);
        prop_assert!(is_distinguished(g, &sub).unwrap());
    }

    #[test]
    fn theta_is_an_involution_preserving_positivity(k in 0..TYPES.len(), pick in any::<prop::sample::Index>()) {
        let rs = groups()[k].root_system();
        let a = *pick.get(rs.roots());
        let t = rs.theta(&a).unwrap();
        prop_assert_eq!(rs.theta(&t).unwrap(), a);
        prop_assert_eq!(t.is_positive(), a.is_positive());
        prop_assert!(rs.is_root(&t));
    }

    #[test]
    fn span_subsystem_is_reflection_closed(k in 0..TYPES.len(), bits in any::<u16>()) {
        let g = &groups()[k];
        let rs = g.root_system();
        let s = SimpleSubset::from_bits(bits & SimpleSubset::full(g.rank()).bits());
        let span = rs.span_subsystem(s);
        for a in &span {
            for b in &span {
                prop_assert!(span.contains(&rs.cartan_type().reflect(a, b)));
            }
        }
    }

    #[test]
    fn double_coset_minimum((k, a) in group_and_word(12), sb in any::<u16>(), tb in any::<u16>()) {
        let g = &groups()[k];
        let full = SimpleSubset::full(g.rank()).bits();
        let (s, t) = (SimpleSubset::from_bits(sb & full), SimpleSubset::from_bits(tb & full));
        let w = elem(g, &a);
        let m = g.min_double_rep(w, s, t);
        prop_assert!(g.is_min_double_rep(m, s, t));
        prop_assert_eq!(g.min_double_rep(m, s, t), m);
        prop_assert!(g.bruhat_leq(m, w));
        prop_assert!(g.double_coset(w, s, t).contains(&m));
    }
}

fn invertible(n: usize, q: u8) -> impl Strategy<Value = FqMatrix> {
    prop::collection::vec(0..q, n * n)
        .prop_map(move |e| FqMatrix::new(n, q, e).unwrap())
        .prop_filter("singular", FqMatrix::is_invertible)
}

fn triangular(n: usize, q: u8, upper: bool) -> impl Strategy<Value = FqMatrix> {
    (prop::collection::vec(1..q, n), prop::collection::vec(0..q, n * n)).prop_map(move |(diag, off)| {
        let mut e = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                e[i * n + j] = match (i == j, (i < j) == upper) {
                    (true, _) => diag[i],
                    (false, true) => off[i * n + j],
                    (false, false) => 0,
                };
            }
        }
        FqMatrix::new(n, q, e).unwrap()
    })
}

fn cell_case() -> impl Strategy<Value = (FqMatrix, FqMatrix, FqMatrix, FqMatrix)> {
    (2usize..=4, prop::sample::select(vec![2u8, 3, 5])).prop_flat_map(|(n, q)| {
        (invertible(n, q), triangular(n, q, true), triangular(n, q, true), triangular(n, q, false))
    })
}

proptest! {
    #[test]
    fn cells_are_borel_invariant((g, b1, b2, bm) in cell_case()) {
        let w = cell_bwb(&g).unwrap();
        let wp = cell_bwb_minus(&g).unwrap();
        prop_assert_eq!(cell_bwb(&b1.mul(&g).mul(&b2)).unwrap(), w.clone());
        prop_assert_eq!(cell_bwb_minus(&b1.mul(&g).mul(&bm)).unwrap(), wp.clone());
        // a point of BwB ∩ Bw'B⁻ has w' <= w
        let s = symmetric_group(g.n()).unwrap();
        prop_assert!(s.bruhat_leq(wp.to_elem(&s).unwrap(), w.to_elem(&s).unwrap()));
    }

    #[test]
    fn permutation_matrices_lie_in_their_own_cells(n in 2usize..=4, pick in any::<prop::sample::Index>()) {
        let s = symmetric_group(n).unwrap();
        let ids: Vec<ElemId> = s.ids().collect();
        let w = *pick.get(&ids);
        let p = Perm::from_elem(&s, w);
        prop_assert_eq!(p.to_elem(&s).unwrap(), w);
        let m = FqMatrix::permutation(&p, 3);
        prop_assert_eq!(cell_bwb(&m).unwrap(), p.clone());
        prop_assert_eq!(cell_bwb_minus(&m).unwrap(), p);
    }
}
