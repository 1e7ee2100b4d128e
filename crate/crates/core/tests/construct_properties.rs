use circulant_total::construct::{NON_REPRESENTABLE, TYPE_II_ORDERS};
use circulant_total::{colour_5p9q, construct, decompose_5p9q, CirculantGraph, Construction};
use proptest::prelude::*;

#[test]
fn every_type_one_order_up_to_500_is_coloured() {
    for n in 7..=500 {
        let built = construct(n).unwrap();
        if TYPE_II_ORDERS.contains(&n) {
            assert_eq!(built, Construction::TypeTwo);
            continue;
        }
        let c = built.colouring().unwrap();
        assert_eq!((c.n(), c.k()), (n, 5));
        assert!(c.verify(&CirculantGraph::c13(n).unwrap()).unwrap().is_proper(), "n={n}");
        let words = [c.vertex_colours(), c.e1_colours(), c.e3_colours()];
        assert!(words.iter().all(|w| w.iter().all(|&x| (1..=5).contains(&x))));
    }
}

#[test]
fn decomposition_absent_exactly_on_the_gaps() {
    for n in 7..=500 {
        let brute = (0..=n / 5)
            .flat_map(|p| (0..=n / 9).map(move |q| (p, q)))
            .filter(|&(p, q)| 5 * p + 9 * q == n);
        let min_q = brute.min_by_key(|&(_, q)| q);
        assert_eq!(decompose_5p9q(n), min_q, "n={n}");
        assert_eq!(min_q.is_none(), NON_REPRESENTABLE.contains(&n), "n={n}");
    }
}

proptest! {
    #[test]
    fn block_seams_never_clash(p in 0usize..=40, q in 0usize..=22) {
        let n = 5 * p + 9 * q;
        prop_assume!((7..=200).contains(&n));
        let c = colour_5p9q(p, q).unwrap();
        let g = CirculantGraph::c13(n).unwrap();
        prop_assert!(c.verify(&g).unwrap().is_proper());
    }
}
