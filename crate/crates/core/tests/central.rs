use mcgext::central::{residual, solve, SolveMode};
use mcgext::{
    epsilon_counts, ig_value, solve_central_exponents, solve_central_exponents_g2, CentralError,
    Factorization, TwistType,
};
use proptest::prelude::*;

fn twists(g: u32) -> impl Strategy<Value = Vec<TwistType>> {
    prop::collection::vec(
        prop_oneof![
            Just(TwistType::Nonseparating),
            (0..=g / 2).prop_map(TwistType::Separating)
        ],
        0..30,
    )
}

proptest! {
    #[test]
    fn round_trip_genus_at_least_three(n_c in -20i64..=20, n_l in -20i64..=20, extra in 0i64..=40, g in 3u32..=8) {
        let m_ns = n_l + 10 * n_c;
        prop_assume!(m_ns >= 0);
        let m = m_ns + extra;
        let sigma = n_l + 6 * n_c + m - m_ns;
        let f = Factorization::from_counts(g, sigma, m as u64, m_ns as u64).unwrap();
        let e = solve_central_exponents(&f).unwrap();
        prop_assert_eq!((e.n_chain, e.n_lantern), (n_c, n_l));
    }

    #[test]
    fn round_trip_genus_two(n_c in -20i64..=20, m_ns in 0i64..=30, extra in 0i64..=40) {
        let m = m_ns + extra;
        let f = Factorization::from_counts(2, 6 * n_c + m - m_ns, m as u64, m_ns as u64).unwrap();
        let e = solve_central_exponents_g2(&f).unwrap();
        prop_assert_eq!((e.n_chain, e.n_lantern), (n_c, 0));
    }

    #[test]
    fn solutions_satisfy_the_system(sigma in -60i64..=60, m_ns in 0u64..=40, extra in 0u64..=40) {
        let f = Factorization::from_counts(4, sigma, m_ns + extra, m_ns).unwrap();
        match solve_central_exponents(&f) {
            Ok(e) => prop_assert_eq!(residual(&f, &e), (0, 0)),
            Err(err) => {
                prop_assert_eq!(err, CentralError::NonIntegral);
                prop_assert!((f.m() - sigma) % 4 != 0);
            }
        }
    }

    #[test]
    fn epsilon_counts_are_additive(a in twists(6), b in twists(6), s in -9i64..=9, t in -9i64..=9) {
        let f1 = Factorization::new(6, a, s).unwrap();
        let f2 = Factorization::new(6, b, t).unwrap();
        let joined = f1.concat(&f2).unwrap();
        prop_assert_eq!(epsilon_counts(&joined), epsilon_counts(&f1) + epsilon_counts(&f2));
        prop_assert_eq!(ig_value(&joined), ig_value(&f1) + ig_value(&f2));
        prop_assert_eq!(epsilon_counts(&joined).total(), joined.m());
    }

    #[test]
    fn json_round_trip(a in twists(5), s in -20i64..=20) {
        let f = Factorization::new(5, a, s).unwrap();
        prop_assert_eq!(Factorization::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn genus_two_rejects_non_multiples_of_six() {
    let f = Factorization::from_counts(2, 1, 0, 0).unwrap();
    assert_eq!(solve_central_exponents_g2(&f), Err(CentralError::NonIntegral));
    assert_eq!(solve(&f, SolveMode::System), Err(CentralError::NonIntegral));
}

#[test]
fn dispatch_by_genus() {
    let f = Factorization::from_counts(2, 6, 12, 12).unwrap();
    assert_eq!(solve(&f, SolveMode::System).unwrap().n_chain, 1);
    let f = Factorization::from_counts(5, 6, 10, 10).unwrap();
    assert_eq!(solve(&f, SolveMode::System).unwrap().n_chain, 1);
}
