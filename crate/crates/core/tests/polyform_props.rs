mod support;

use hullcoh_core::polyform::PolyForm;
use hullcoh_core::qkernel::{rat, ratio, QPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{iterated_simplex_integral, random_form, random_monomial, stokes_holds, volume};

#[test]
fn iterated_oracle_on_known_values() {
    assert_eq!(iterated_simplex_integral(&QPoly::one(1)), rat(1));
    assert_eq!(iterated_simplex_integral(&QPoly::var(2, 0)), ratio(1, 6));
    let t1t2 = &QPoly::var(2, 0) * &QPoly::var(2, 1);
    assert_eq!(iterated_simplex_integral(&t1t2), ratio(1, 24));
    assert_eq!(iterated_simplex_integral(&QPoly::one(3)), ratio(1, 6));
}

#[test]
fn dirichlet_matches_iterated_integration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let p = rand::Rng::gen_range(&mut rng, 1..=4);
        let m = random_monomial(&mut rng, p, 4);
        let w = PolyForm::function(m.clone()).wedge(&volume(p)).unwrap();
        assert_eq!(w.integrate_simplex().unwrap()[0], iterated_simplex_integral(&m), "{m}");
    }
}

#[test]
fn stokes_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let p = rand::Rng::gen_range(&mut rng, 1..=4);
        let w = random_form(&mut rng, p, p - 1, 4);
        assert!(stokes_holds(&w), "Stokes failed for {w:?}");
    }
}

#[test]
fn stokes_vector_valued() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let w = random_form(&mut rng, 3, 2, 3).tensor_vector(&[rat(1), ratio(-2, 3)]);
    assert!(stokes_holds(&w));
}

fn form_strategy(max_arity: usize) -> impl Strategy<Value = PolyForm> {
    (1..=max_arity, any::<u64>()).prop_flat_map(|(p, seed)| {
        (0..=p).prop_map(move |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_form(&mut rng, p, k, 4)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes(w in form_strategy(4)) {
        prop_assert!(w.d().d().is_zero());
    }

    #[test]
    fn leibniz(seed in any::<u64>(), p in 1usize..=4, ka in 0usize..=2, kb in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ka = ka.min(p);
        let kb = kb.min(p);
        let a = random_form(&mut rng, p, ka, 3);
        let b = random_form(&mut rng, p, kb, 3);
        let lhs = a.wedge(&b).unwrap().d();
        let sign = if ka % 2 == 0 { rat(1) } else { rat(-1) };
        let rhs = a.d().wedge(&b).unwrap().add(&a.wedge(&b.d()).unwrap().scale(&sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_commutativity(seed in any::<u64>(), p in 1usize..=4, ka in 0usize..=2, kb in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, p, ka.min(p), 2);
        let b = random_form(&mut rng, p, kb.min(p), 2);
        let sign = if (ka.min(p) * kb.min(p)) % 2 == 0 { rat(1) } else { rat(-1) };
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().scale(&sign));
    }
}
