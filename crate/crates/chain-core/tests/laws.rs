mod common;

use chain_core::{parse_elem, Bounds, Chain, Elem, Monoid};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residuated_involutive_odd(seed in any::<u64>()) {
        for (name, a) in all_fixtures() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let b = Bounds::default();
            let xs: Vec<Elem> = (0..4).map(|_| a.sample(&mut rng, &b)).collect();
            let (x, y, z, v) = (&xs[0], &xs[1], &xs[2], &xs[3]);
            for e in &xs {
                prop_assert!(a.is_valid(e), "{}: sampled {} invalid", name, e);
                prop_assert_eq!(&a.comp(&a.comp(e)), e);
                prop_assert_eq!(parse_elem(&a, &e.to_string()).unwrap(), e.clone());
            }
            let xy = a.mul(x, y);
            prop_assert!(a.is_valid(&xy) && a.is_valid(&a.comp(x)) && a.is_valid(&a.res(x, z)));
            prop_assert_eq!(&xy, &a.mul(y, x));
            prop_assert_eq!(a.mul(&xy, z), a.mul(x, &a.mul(y, z)));
            prop_assert_eq!(&a.mul(&a.unit(), x), x);
            prop_assert_eq!(a.comp(&a.unit()), a.unit());
            let r = a.res(x, z);
            prop_assert_eq!(a.mul(x, v) <= *z, *v <= r, "{}: adjointness at {} {} {}", name, x, z, v);
            prop_assert!(a.mul(x, &r) <= *z);
            prop_assert!(a.mul(x, &a.x_up(&r)) > *z || a.x_up(&r) == r);
            prop_assert_eq!(a.is_invertible(x), a.mul(x, &a.comp(x)) == a.unit());
        }
    }
}
