mod support;

use hullcoh_core::fixtures;
use hullcoh_core::hull::{pullback_form, theta, GammaGenerator, GroupElement, HullPresentation};
use hullcoh_core::liecomplex::{complex_of, BracketSign};
use hullcoh_core::polyform::PolyForm;
use hullcoh_core::qkernel::{rat, QMatrix, Rational};
use hullcoh_core::simpclass::{group_cochain_d, iota, verify_cochain_map, GroupCochain, GroupTuple, Psi};
use hullcoh_core::Error;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{random_cochain, random_tuple};

/// A deliberately non-equivariant, nonlinear evaluator.
fn scramble(gs: &[GroupElement]) -> Vec<Rational> {
    let mut acc = rat(1);
    let mut sum = rat(0);
    for (i, g) in gs.iter().enumerate() {
        let a = g.ambient();
        let x = a.entries().iter().fold(rat(0), |s, e| s + e * rat(i as i64 + 1));
        acc = &acc * &(&x + rat(2));
        sum += x;
    }
    vec![acc, sum]
}

#[test]
fn group_d_squares_to_zero() {
    let h = fixtures::load("sol").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for p in 0..3 {
        let dd = group_cochain_d(group_cochain_d(GroupCochain::new(p, |gs| Ok(scramble(gs)))));
        for _ in 0..10 {
            let gs = random_tuple(&mut rng, &h, p + 3);
            assert!(dd.eval(&gs).unwrap().iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn constants_and_coboundaries_are_closed() {
    let h = fixtures::load("heisenberg").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let constant = group_cochain_d(GroupCochain::new(0, |_| Ok(vec![rat(7)])));
    let f = |g: &GroupElement| scramble(std::slice::from_ref(g));
    let cobound = group_cochain_d(GroupCochain::new(1, move |gs| {
        Ok(f(&gs[1]).iter().zip(f(&gs[0])).map(|(a, b)| a - b).collect())
    }));
    for _ in 0..10 {
        let gs = random_tuple(&mut rng, &h, 2);
        assert_eq!(constant.eval(&gs).unwrap(), vec![rat(0)]);
        let gs = random_tuple(&mut rng, &h, 3);
        assert!(cobound.eval(&gs).unwrap().iter().all(Zero::is_zero));
    }
    assert_eq!(
        constant.eval(&[h.identity()]).err(),
        Some(Error::DegreeMismatch { expected: 1, found: 0 })
    );
}

#[test]
fn tuples_are_normalized_at_the_identity() {
    let h = fixtures::load("sol").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let gs = random_tuple(&mut rng, &h, 3);
    let t = GroupTuple::new(&gs).unwrap();
    assert!(t.normalized()[0].is_identity());
    for (g, n) in gs.iter().zip(t.normalized()) {
        assert_eq!(&t.base().multiply(n).unwrap(), g);
    }
}

#[test]
fn zero_cochain_gives_zero_forms() {
    let h = fixtures::load("heisenberg").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let psi = Psi::new(&h, 1, vec![rat(0); 3]);
    let gs = random_tuple(&mut rng, &h, 3);
    assert!(psi.form(&gs).unwrap().is_zero());
    assert_eq!(iota(&PolyForm::zero(2, 2, 1)).unwrap(), vec![rat(0)]);
    assert_eq!(
        iota(&PolyForm::zero(2, 1, 1)),
        Err(Error::DegreeMismatch { expected: 2, found: 1 })
    );
}

#[test]
fn integers_line_integrates_to_the_exponent() {
    let x = QMatrix::unit(2, 2, 0, 1);
    let h = HullPresentation::new(
        2,
        vec![x.clone()],
        vec![],
        vec![GammaGenerator {
            name: "g".into(),
            s: QMatrix::identity(2),
            u: &QMatrix::identity(2) + &x,
            t_word: None,
        }],
        Some(1),
        None,
        None,
    )
    .unwrap();
    let psi = Psi::new(&h, 1, vec![rat(1)]);
    for n in [-2i64, 3, 5] {
        let gn = h.word(&vec![n.signum(); n.unsigned_abs() as usize]).unwrap();
        let gs = [h.identity(), gn];
        assert_eq!(psi.form(&gs).unwrap(), PolyForm::dt(1, 0).scale(&rat(n)));
        assert_eq!(psi.integrated().eval(&gs).unwrap(), vec![rat(n)]);
    }
}

#[test]
fn normalized_evaluation_matches_direct_pullback() {
    let mut rng = ChaCha8Rng::seed_from_u64(35);
    for name in ["sol_std", "heisenberg_std", "paper_k1"] {
        let h = fixtures::load(name).unwrap();
        let c = complex_of(&h).unwrap();
        for k in 0..=2 {
            if c.basis(k).is_empty() {
                continue;
            }
            for _ in 0..4 {
                let omega = random_cochain(&mut rng, &c, k);
                let psi = Psi::new(&h, k, omega.clone());
                let gs = random_tuple(&mut rng, &h, k + 2);
                assert_eq!(psi.form(&gs).unwrap(), pullback_form(&h, k, &omega, &gs).unwrap(), "{name}");
            }
        }
    }
}

#[test]
fn face_of_a_triangle_is_its_edge() {
    let h = fixtures::load("heisenberg").unwrap();
    let c = complex_of(&h).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let omega = random_cochain(&mut rng, &c, 1);
    let psi = Psi::new(&h, 1, omega);
    let gs = random_tuple(&mut rng, &h, 3);
    let edge = [gs[0].clone(), gs[2].clone()];
    assert_eq!(psi.form(&gs).unwrap().restrict_face(1), psi.form(&edge).unwrap());
}

#[test]
fn integration_of_psi_is_theta() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let h = fixtures::load("sol_std").unwrap();
    let c = complex_of(&h).unwrap();
    for _ in 0..50 {
        let k = 1 + (rand::Rng::gen_range(&mut rng, 0..2usize));
        if c.basis(k).is_empty() {
            continue;
        }
        let omega = random_cochain(&mut rng, &c, k);
        let gs = random_tuple(&mut rng, &h, k + 1);
        let psi = Psi::new(&h, k, omega.clone());
        assert_eq!(psi.integrated().eval(&gs).unwrap(), theta(&h, k, &omega, &gs).unwrap());
    }
}

#[test]
fn heisenberg_and_sol_pass_the_full_check() {
    for name in ["heisenberg", "sol"] {
        let h = fixtures::load(name).unwrap();
        let report = verify_cochain_map(&h, 3, 100, 7, BracketSign::Standard).unwrap();
        assert!(report.passed, "{name}: {:?}", report.counterexamples);
        for d in &report.degrees {
            if d.cochain_dim > 0 {
                assert_eq!(d.samples, 100);
                assert_eq!(d.cochain_map, 100);
                assert_eq!(d.equivariance, 100);
                assert_eq!(d.face_coherence, 100);
            }
        }
    }
}

#[test]
fn flipped_bracket_sign_is_caught() {
    let h = fixtures::load("heisenberg").unwrap();
    let report = verify_cochain_map(&h, 1, 30, 7, BracketSign::Flipped).unwrap();
    assert!(!report.passed);
    let cx = &report.counterexamples[0];
    assert_eq!(cx.check, "cochain_map");
    assert_eq!(cx.degree, 1);
    assert_eq!(cx.tuple.len(), 3);
    assert_ne!(cx.expected, cx.found);
}

#[test]
fn reports_are_reproducible() {
    let h = fixtures::load("heisenberg").unwrap();
    let a = verify_cochain_map(&h, 2, 10, 99, BracketSign::Flipped).unwrap();
    let b = verify_cochain_map(&h, 2, 10, 99, BracketSign::Flipped).unwrap();
    assert_eq!(a, b);
}
