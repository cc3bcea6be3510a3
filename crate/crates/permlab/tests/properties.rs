//! Randomized invariants over the whole stack.

use num_bigint::BigInt;
use proptest::prelude::*;

use permlab::biject::{
    gamma_min_one, gamma_min_one_inverse, gamma_symmetric, gamma_symmetric_inverse, phi,
    phi_inverse,
};
use permlab::gamma::gamma_vector;
use permlab::order::LinearOrder;
use permlab::stats::{lasc, ldes, lexc};
use permlab::sturm::is_real_rooted;
use permlab::{ColoredPerm, GroupSpec, IntPoly};

fn colored_perm(signed: bool) -> impl Strategy<Value = ColoredPerm> {
    (1usize..=6, 1u32..=3).prop_flat_map(move |(n, d)| {
        let values = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        let color = if signed {
            (1i32..=d as i32, prop::bool::ANY)
                .prop_map(|(c, neg)| if neg { -c } else { c })
                .boxed()
        } else {
            (0i32..d as i32).boxed()
        };
        let colors = prop::collection::vec(color, n);
        (values, colors).prop_map(move |(values, colors)| {
            let spec = if signed {
                GroupSpec::signed(n, d).unwrap()
            } else {
                GroupSpec::unsigned(n, d).unwrap()
            };
            ColoredPerm::new(values, colors, spec).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn cycle_form_round_trips(p in colored_perm(false), q in colored_perm(true)) {
        prop_assert_eq!(p.cycle_decomposition().to_perm().unwrap(), p);
        prop_assert_eq!(q.cycle_decomposition().to_perm().unwrap(), q);
    }

    #[test]
    fn descents_and_ascents_split_the_word(p in colored_perm(false), seed in any::<u64>()) {
        let order = LinearOrder::random(p.n(), p.spec().scheme().d(), seed).unwrap();
        prop_assert_eq!(ldes(&p, &order).unwrap() + lasc(&p, &order).unwrap(), p.n() - 1);
    }

    #[test]
    fn phi_round_trips_and_transports(p in colored_perm(false), seed in any::<u64>()) {
        let order = LinearOrder::random(p.n(), p.spec().scheme().d(), seed).unwrap();
        let image = phi(&p, &order).unwrap();
        prop_assert_eq!(ldes(&image, &order).unwrap(), lexc(&p, &order).unwrap());
        prop_assert_eq!(phi_inverse(&image, &order).unwrap(), p);
    }

    #[test]
    fn gamma_maps_round_trip(p in colored_perm(false), q in colored_perm(true)) {
        prop_assert_eq!(gamma_min_one_inverse(&gamma_min_one(&p).unwrap()).unwrap(), p);
        prop_assert_eq!(gamma_symmetric_inverse(&gamma_symmetric(&q).unwrap()).unwrap(), q);
    }

    #[test]
    fn gamma_expansion_inverts_construction(
        gammas in prop::collection::vec(-20i64..=20, 1..=5),
    ) {
        let m = 2 * (gammas.len() - 1) + 1;
        let mut f = IntPoly::zero();
        for (i, &g) in gammas.iter().enumerate() {
            let basis = IntPoly::one_plus_t_pow(m - 2 * i).mul_tpow(i);
            f = &f + &basis.scalar_mul(&BigInt::from(g));
        }
        let gv = gamma_vector(&f, m).unwrap();
        let expected: Vec<BigInt> = gammas.iter().map(|&g| BigInt::from(g)).collect();
        prop_assert_eq!(gv.gammas(), expected.as_slice());
        prop_assert_eq!(gv.reconstruct(), f);
    }

    #[test]
    fn sturm_certifies_constructed_root_data(
        roots in prop::collection::vec(-9i64..=9, 1..=6),
        shift in 1i64..=9,
    ) {
        let mut f = IntPoly::one();
        for &r in &roots {
            f = &f * &IntPoly::from_coeffs(vec![BigInt::from(-r), BigInt::from(1)]);
        }
        prop_assert!(is_real_rooted(&f).unwrap());
        // attaching a conjugate pair t^2 + shift breaks the certificate
        let spoiled = &f * &IntPoly::from_i64s(&[shift, 0, 1]);
        prop_assert!(!is_real_rooted(&spoiled).unwrap());
    }
}
