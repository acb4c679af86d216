mod support;

use hullcoh_core::fixtures;
use hullcoh_core::hull::{
    exp_nilpotent, log_unipotent, maurer_cartan, pullback_form, theta, GammaGenerator, HullPresentation,
    PolyMatrix, SimplexBuilder,
};
use hullcoh_core::liecomplex::complex_of;
use hullcoh_core::polyform::PolyForm;
use hullcoh_core::qkernel::{rat, QMatrix, QPoly, Rational};
use hullcoh_core::Error;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{face_point, random_cochain, random_element, random_point, random_tuple, strictly_upper};

#[test]
fn exp_log_roundtrip_random_polynomial_unipotents() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let nvars = rng.gen_range(0..=3);
        let m = PolyMatrix::identity(n, nvars).add(&strictly_upper(&mut rng, n, nvars));
        let log = log_unipotent(&m).unwrap();
        assert_eq!(exp_nilpotent(&log).unwrap(), m);
        let x = strictly_upper(&mut rng, n, nvars);
        assert_eq!(log_unipotent(&exp_nilpotent(&x).unwrap()).unwrap(), x);
    }
}

#[test]
fn group_law_on_sol() {
    let h = fixtures::load("sol").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let e = h.identity();
    for _ in 0..30 {
        let a = random_element(&mut rng, &h, 5);
        let b = random_element(&mut rng, &h, 5);
        let c = random_element(&mut rng, &h, 5);
        assert_eq!(e.multiply(&a).unwrap(), a);
        assert!(a.multiply(&a.inverse().unwrap()).unwrap().is_identity());
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(ab_c, a_bc);
        assert_eq!(a.multiply(&b).unwrap().ambient(), &a.ambient() * &b.ambient());
        // α is an action: α(ab)x = α(a)α(b)x
        let x = c.u();
        assert_eq!(
            a.multiply(&b).unwrap().act(x).unwrap(),
            a.act(&b.act(x).unwrap()).unwrap()
        );
    }
}

#[test]
fn module_action_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for name in ["sol_std", "heisenberg_std"] {
        let h = fixtures::load(name).unwrap();
        for _ in 0..20 {
            let a = random_element(&mut rng, &h, 5);
            let b = random_element(&mut rng, &h, 5);
            let ab = a.multiply(&b).unwrap();
            assert_eq!(h.rho(&ab).unwrap(), &h.rho(&a).unwrap() * &h.rho(&b).unwrap());
        }
    }
}

fn integers_line() -> HullPresentation {
    let x = QMatrix::unit(2, 2, 0, 1);
    HullPresentation::new(
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
    .unwrap()
}

#[test]
fn sigma_zero_is_the_unipotent_part() {
    let h = fixtures::load("sol").unwrap();
    let g = h.word(&[1, 2]).unwrap();
    let m = SimplexBuilder::new().sigma(std::slice::from_ref(&g)).unwrap();
    assert_eq!(m.as_constant().unwrap(), *g.u());
}

#[test]
fn line_segment_and_its_integral() {
    let h = integers_line();
    for n in [-3i64, 1, 4] {
        let gn = h.word(&vec![if n > 0 { 1 } else { -1 }; n.unsigned_abs() as usize]).unwrap();
        let gs = [h.identity(), gn];
        let m = SimplexBuilder::new().sigma(&gs).unwrap();
        // log σ(e, g^n)(t) = t · n X
        let expected = PolyMatrix::from_fn(2, 2, 1, |i, j| {
            if (i, j) == (0, 1) {
                QPoly::var(1, 0).scale(&rat(n))
            } else {
                QPoly::zero(1)
            }
        });
        assert_eq!(log_unipotent(&m).unwrap(), expected);
        let mc = maurer_cartan(&h, &m).unwrap();
        assert_eq!(mc[0], PolyForm::dt(1, 0).scale(&rat(n)));
        assert_eq!(theta(&h, 1, &[rat(1)], &gs).unwrap(), vec![rat(n)]);
    }
    assert_eq!(
        theta(&h, 1, &[rat(1)], &[h.identity()]),
        Err(Error::DegreeMismatch { expected: 0, found: 1 })
    );
}

#[test]
fn maurer_cartan_of_identity_vanishes() {
    let h = fixtures::load("heisenberg").unwrap();
    let mc = maurer_cartan(&h, &PolyMatrix::identity(3, 2)).unwrap();
    assert!(mc.iter().all(PolyForm::is_zero));
}

#[test]
fn heisenberg_edge_has_low_degree_coefficients() {
    let h = fixtures::load("heisenberg").unwrap();
    let gs = [h.word(&[1]).unwrap(), h.word(&[2]).unwrap()];
    let m = SimplexBuilder::new().sigma(&gs).unwrap();
    for form in maurer_cartan(&h, &m).unwrap() {
        for (_, c) in form.terms() {
            assert!(c[0].total_degree().unwrap_or(0) <= 1);
        }
    }
}

#[test]
fn sigma_faces_are_shorter_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["heisenberg", "sol", "kodaira_thurston"] {
        let h = fixtures::load(name).unwrap();
        let mut builder = SimplexBuilder::new();
        for p in 1..=3 {
            for _ in 0..6 {
                let gs = random_tuple(&mut rng, &h, p + 1);
                let m = builder.sigma(&gs).unwrap();
                for i in 0..=p {
                    let mut fewer = gs.clone();
                    fewer.remove(i);
                    let face = builder.sigma(&fewer).unwrap();
                    for _ in 0..3 {
                        let u = random_point(&mut rng, p - 1);
                        assert_eq!(m.eval(&face_point(&u, i)), face.eval(&u), "{name} p={p} face {i}");
                    }
                }
            }
        }
    }
}

#[test]
fn sigma_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for name in ["heisenberg", "sol", "paper_k1"] {
        let h = fixtures::load(name).unwrap();
        let mut builder = SimplexBuilder::new();
        for p in 0..=3 {
            for _ in 0..4 {
                let gs = random_tuple(&mut rng, &h, p + 1);
                let g = random_element(&mut rng, &h, 5);
                let moved: Vec<_> = gs.iter().map(|x| g.multiply(x).unwrap()).collect();
                let lhs = builder.sigma(&moved).unwrap();
                let rhs = g.act_poly(&builder.sigma(&gs).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{name} p={p}");
            }
        }
    }
}

fn alternating_faces(h: &HullPresentation, k: usize, omega: &[Rational], gs: &[hullcoh_core::hull::GroupElement]) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); h.module_dim()];
    for i in 0..gs.len() {
        let mut fewer = gs.to_vec();
        fewer.remove(i);
        let v = theta(h, k, omega, &fewer).unwrap();
        for (a, x) in acc.iter_mut().zip(v) {
            if i % 2 == 0 {
                *a += x;
            } else {
                *a -= x;
            }
        }
    }
    acc
}

#[test]
fn theta_is_a_cochain_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["heisenberg", "sol", "sol_std", "heisenberg_std"] {
        let h = fixtures::load(name).unwrap();
        let c = complex_of(&h).unwrap();
        for k in 0..=2.min(h.n() - 1) {
            if c.basis(k).is_empty() {
                continue;
            }
            for _ in 0..5 {
                let omega = random_cochain(&mut rng, &c, k);
                let d_omega = c.apply_d(k, &omega);
                let gs = random_tuple(&mut rng, &h, k + 2);
                let lhs = theta(&h, k + 1, &d_omega, &gs).unwrap();
                assert_eq!(lhs, alternating_faces(&h, k, &omega, &gs), "{name} k={k}");
            }
        }
    }
}

#[test]
fn theta_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for name in ["sol_std", "heisenberg_std", "paper_k1"] {
        let h = fixtures::load(name).unwrap();
        let c = complex_of(&h).unwrap();
        for k in 0..=2 {
            if c.basis(k).is_empty() {
                continue;
            }
            let omega = random_cochain(&mut rng, &c, k);
            let gs = random_tuple(&mut rng, &h, k + 1);
            let g = random_element(&mut rng, &h, 4);
            let moved: Vec<_> = gs.iter().map(|x| g.multiply(x).unwrap()).collect();
            let lhs = theta(&h, k, &omega, &moved).unwrap();
            let rhs = h.rho(&g).unwrap().mul_vec(&theta(&h, k, &omega, &gs).unwrap());
            assert_eq!(lhs, rhs, "{name} k={k}");
        }
    }
}

#[test]
fn pullback_degree_zero_and_zero_form() {
    let h = fixtures::load("sol_std").unwrap();
    let c = complex_of(&h).unwrap();
    let v = c.expand(0, &vec![rat(1); c.basis(0).len()]);
    let g = h.word(&[2, 3]).unwrap();
    let form = pullback_form(&h, 0, &v, std::slice::from_ref(&g)).unwrap();
    assert_eq!(form.integrate_simplex().unwrap(), h.rho_u(g.u()).unwrap().mul_vec(&v));
    let zero = vec![rat(0); 3 * 3];
    let gs = [h.identity(), g];
    assert!(pullback_form(&h, 1, &zero, &gs).unwrap().is_zero());
}
