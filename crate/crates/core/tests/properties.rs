mod common;

use proptest::prelude::*;

use grpclass::field::GaloisField;
use grpclass::{Group, Permutation};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..=12).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

proptest! {
    #[test]
    fn composition_is_associative((a, b, c) in triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_law((a, b, _) in triple()) {
        let id = Permutation::identity(a.degree());
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(a.inverse().compose(&a).unwrap(), id);
        // (ab)^-1 = b^-1 a^-1
        prop_assert_eq!(a.compose(&b).unwrap().inverse(), b.inverse().compose(&a.inverse()).unwrap());
    }

    #[test]
    fn composition_matches_image_oracle((a, b, _) in triple()) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(common::images(&ab), common::compose(&common::images(&a), &common::images(&b)));
        prop_assert_eq!(a.order(), common::element_order(&common::images(&a)));
    }

    #[test]
    fn cycle_text_round_trips((a, _, _) in triple()) {
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse(&text, a.degree()).unwrap(), a);
    }

    #[test]
    fn prime_field_matches_modular_arithmetic(
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 31]),
        a in 0i64..1000,
        b in 0i64..1000,
    ) {
        let f = GaloisField::new(p).unwrap();
        let (x, y) = (f.from_int(a), f.from_int(b));
        let m = p as i64;
        prop_assert_eq!(x + y, f.from_int((a + b) % m));
        prop_assert_eq!(x * y, f.from_int((a * b) % m));
        prop_assert_eq!(x - y, f.from_int((a - b).rem_euclid(m)));
        if a % m != 0 {
            prop_assert_eq!(x.inv().unwrap() * x , f.one());
        }
    }

    #[test]
    fn extension_fields_are_fields(
        q in prop::sample::select(vec![4u64, 8, 9, 32]),
        i in 0u64..1000,
        j in 0u64..1000,
        k in 0u64..1000,
    ) {
        let f = GaloisField::new(q).unwrap();
        let (x, y, z) = (f.element(i), f.element(j), f.element(k));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        if !x.is_zero() {
            prop_assert_eq!(x * x.inv().unwrap(), f.one());
            prop_assert_eq!((q - 1) % x.multiplicative_order(), 0);
        }
        // Frobenius is additive
        prop_assert_eq!((x + y).frobenius(), x.frobenius() + y.frobenius());
    }

    #[test]
    fn group_order_matches_closure(gens in (2usize..=7).prop_flat_map(|n| prop::collection::vec(perm(n), 1..=3))) {
        let g = Group::new(gens).unwrap();
        prop_assert_eq!(g.order(), common::elements(&g).len() as u64);
    }
}

#[test]
fn multiplicative_groups_are_cyclic() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 32] {
        let f = GaloisField::new(q).unwrap();
        let orders: Vec<u64> = f.elements().skip(1).map(|e| e.multiplicative_order()).collect();
        assert_eq!(orders.iter().max().copied(), Some(q - 1), "GF({q})");
        assert!(orders.iter().all(|o| (q - 1) % o == 0));
    }
}

#[test]
fn unsupported_orders_are_rejected() {
    for q in [1, 6, 16, 25, 27] {
        assert!(GaloisField::new(q).is_err(), "GF({q})");
    }
}
