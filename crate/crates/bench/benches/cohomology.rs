use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hullcoh_core::fixtures;
use hullcoh_core::lefschetz::{find_symplectic, hard_lefschetz_check, SearchOptions};
use hullcoh_core::liecomplex::{cohomology, complex_of, BracketSign};
use hullcoh_core::oracle::wang_betti_for;
use hullcoh_core::simpclass::verify_cochain_map;

fn betti(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    for name in ["sol", "heisenberg", "paper_k1", "paper_k2"] {
        let h = fixtures::load(name).unwrap();
        group.bench_function(format!("{name}/invariant_cochains"), |b| {
            b.iter(|| cohomology(&complex_of(black_box(&h)).unwrap()).betti)
        });
        group.bench_function(format!("{name}/oracle"), |b| b.iter(|| wang_betti_for(black_box(&h)).unwrap()));
    }
    group.finish();
}

fn lefschetz(c: &mut Criterion) {
    let mut group = c.benchmark_group("lefschetz");
    for name in ["paper_k1", "paper_k2", "kodaira_thurston"] {
        let h = fixtures::load(name).unwrap();
        let cx = complex_of(&h).unwrap();
        let rep = cohomology(&cx);
        group.bench_function(name, |b| {
            b.iter(|| {
                let cert = find_symplectic(&cx, SearchOptions::default()).unwrap().unwrap();
                hard_lefschetz_check(&cx, &cert, &rep).unwrap().holds
            })
        });
    }
    group.finish();
}

fn psi(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi_test");
    group.sample_size(10);
    for name in ["heisenberg", "sol"] {
        let h = fixtures::load(name).unwrap();
        group.bench_function(format!("{name}/degree2x10"), |b| {
            b.iter(|| verify_cochain_map(&h, 2, 10, 1, BracketSign::Standard).unwrap().passed)
        });
    }
    group.finish();
}

criterion_group!(benches, betti, lefschetz, psi);
criterion_main!(benches);
