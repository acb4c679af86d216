use hullcoh_core::fixtures;
use hullcoh_core::hull::RationalModule;
use hullcoh_core::liecomplex::{
    ce_differential, cohomology, complex_of, invariant_subcomplex, lie_from_matrices, LieAlgebra,
};
use hullcoh_core::qkernel::{rat, QMatrix, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The Lie algebra generated by a few random strictly upper triangular
/// matrices, with a basis of matrices spanning it.
fn random_nilpotent<R: Rng>(rng: &mut R, size: usize) -> Vec<QMatrix> {
    let gens: Vec<QMatrix> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let mut m = QMatrix::zeros(size, size);
            for i in 0..size {
                for j in i + 1..size {
                    if rng.gen_bool(0.4) {
                        m[(i, j)] = rat(rng.gen_range(-2..=2));
                    }
                }
            }
            m
        })
        .collect();
    let mut span: Vec<QMatrix> = Vec::new();
    let mut frontier = gens;
    while !frontier.is_empty() {
        let mut cols: Vec<Vec<Rational>> = span.iter().map(|m| m.entries().to_vec()).collect();
        cols.extend(frontier.iter().map(|m| m.entries().to_vec()));
        let basis = QMatrix::from_columns(size * size, &cols).image_basis();
        let grown = basis.len() > span.len();
        let new_span: Vec<QMatrix> = basis
            .iter()
            .map(|v| QMatrix::from_rows(v.chunks(size).map(<[Rational]>::to_vec).collect()).unwrap())
            .collect();
        if !grown {
            break;
        }
        frontier = new_span
            .iter()
            .flat_map(|a| new_span.iter().map(move |b| a.commutator(b)))
            .filter(|m| !m.is_zero())
            .collect();
        span = new_span;
    }
    span
}

fn defining_module(basis: &[QMatrix]) -> RationalModule {
    RationalModule {
        dim: basis[0].rows(),
        r_gens: vec![],
        r_basis: basis.to_vec(),
    }
}

#[test]
fn d_squared_vanishes_on_random_nilpotent_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut seen = 0;
    while seen < 25 {
        let basis = random_nilpotent(&mut rng, 4);
        if basis.is_empty() {
            continue;
        }
        seen += 1;
        let l = lie_from_matrices(&basis).unwrap();
        assert!(l.satisfies_jacobi() && l.is_nilpotent());
        for module in [RationalModule::trivial(l.dim(), 0), defining_module(&basis)] {
            for k in 0..l.dim() {
                let dd = &ce_differential(&l, &module, k + 1) * &ce_differential(&l, &module, k);
                assert!(dd.is_zero(), "d^2 != 0 in degree {k}");
            }
        }
    }
}

#[test]
fn euler_characteristic_and_nilpotent_sanity() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut seen = 0;
    while seen < 20 {
        let basis = random_nilpotent(&mut rng, 4);
        if basis.is_empty() {
            continue;
        }
        seen += 1;
        let l = lie_from_matrices(&basis).unwrap();
        let n = l.dim();
        let c = invariant_subcomplex(&l, &RationalModule::trivial(n, 0), &[]).unwrap();
        let rep = cohomology(&c);
        let alt: i64 = (0..=n)
            .map(|k| if k % 2 == 0 { binomial(n, k) as i64 } else { -(binomial(n, k) as i64) })
            .sum();
        assert_eq!(rep.euler_characteristic, alt);
        assert_eq!(rep.betti[0], 1);
        assert_eq!(rep.betti[n], 1);
        assert_eq!(rep.betti[1], n - l.derived_dim());
    }
}

#[test]
fn betti_numbers_ignore_the_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut seen = 0;
    while seen < 15 {
        let basis = random_nilpotent(&mut rng, 4);
        if basis.is_empty() {
            continue;
        }
        let n = basis.len();
        let p = QMatrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect())
                .collect(),
        )
        .unwrap();
        if p.determinant() == rat(0) {
            continue;
        }
        seen += 1;
        let l = lie_from_matrices(&basis).unwrap();
        let l2 = l.change_basis(&p).unwrap();
        // the same change applied to the matrices themselves
        let moved: Vec<QMatrix> = (0..n)
            .map(|j| {
                (0..n).fold(QMatrix::zeros(4, 4), |acc, i| &acc + &basis[i].scale(&p[(i, j)]))
            })
            .collect();
        assert_eq!(lie_from_matrices(&moved).unwrap(), l2);
        for (m1, m2) in [
            (RationalModule::trivial(n, 0), RationalModule::trivial(n, 0)),
            (defining_module(&basis), defining_module(&moved)),
        ] {
            let b1 = cohomology(&invariant_subcomplex(&l, &m1, &[]).unwrap()).betti;
            let b2 = cohomology(&invariant_subcomplex(&l2, &m2, &[]).unwrap()).betti;
            assert_eq!(b1, b2);
        }
    }
}

#[test]
fn abelian_gives_binomials() {
    for m in 1..=5 {
        let l = LieAlgebra::abelian(m);
        let rep = cohomology(&invariant_subcomplex(&l, &RationalModule::trivial(m, 0), &[]).unwrap());
        let expected: Vec<usize> = (0..=m).map(|k| binomial(m, k)).collect();
        assert_eq!(rep.betti, expected);
    }
}

#[test]
fn fixture_betti_numbers() {
    let cases: [(&str, &[usize]); 6] = [
        ("heisenberg", &[1, 2, 2, 1]),
        ("sol", &[1, 1, 1, 1]),
        ("paper_k1", &[1, 2, 2, 2, 1]),
        ("paper_k2", &[1, 2, 3, 4, 3, 2, 1]),
        ("torus4", &[1, 4, 6, 4, 1]),
        ("kodaira_thurston", &[1, 3, 4, 3, 1]),
    ];
    for (name, expected) in cases {
        let h = fixtures::load(name).unwrap();
        let rep = cohomology(&complex_of(&h).unwrap());
        assert_eq!(rep.betti, expected, "{name}");
    }
}

#[test]
fn cat_map_extension_invariant_dimensions() {
    let h = fixtures::load("paper_k1").unwrap();
    assert_eq!(complex_of(&h).unwrap().dims(), vec![1, 2, 2, 2, 1]);
}

#[test]
fn restriction_commutes_with_d() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for name in ["sol", "sol_std", "paper_k1", "paper_k2"] {
        let c = complex_of(&fixtures::load(name).unwrap()).unwrap();
        for k in 0..c.n() {
            let coeffs: Vec<Rational> = (0..c.basis(k).len()).map(|_| rat(rng.gen_range(-4..=4))).collect();
            let lhs = c.apply_d(k, &c.expand(k, &coeffs));
            let rhs = c.expand(k + 1, &c.differential(k).mul_vec(&coeffs));
            assert_eq!(lhs, rhs, "{name} degree {k}");
        }
    }
}

#[test]
fn cocycle_classes_round_trip() {
    let h = fixtures::load("heisenberg").unwrap();
    let c = complex_of(&h).unwrap();
    let rep = cohomology(&c);
    for k in 0..=3 {
        for (i, r) in rep.representatives[k].iter().enumerate() {
            let mut shifted = r.clone();
            if let Some(b) = rep.coboundaries[k].first() {
                for (x, y) in shifted.iter_mut().zip(b) {
                    *x += y * rat(3);
                }
            }
            let class = rep.class_of(k, &shifted).unwrap();
            let mut unit = vec![rat(0); rep.betti[k]];
            unit[i] = rat(1);
            assert_eq!(class, unit);
        }
    }
}
