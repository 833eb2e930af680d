use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use queer_schur::hecke_clifford::{t_star, to_basis_b};
use queer_schur::qschur::formulas;
use queer_schur::{Composition, Engine, HCElem, Perm, SuperMatrix};

fn hecke_clifford(c: &mut Criterion) {
    let r = 5;
    let w0 = Perm::from_images(&[5, 4, 3, 2, 1]).unwrap();
    let x = HCElem::t(&w0).mul_c_mask(0b10101);
    let y = HCElem::c(r, 1).mul(&HCElem::t(&w0));
    c.bench_function("hc mul w0 r=5", |b| b.iter(|| black_box(&x).mul(black_box(&y))));
    c.bench_function("to_basis_b r=5", |b| b.iter(|| to_basis_b(black_box(&y)).unwrap()));
    let a = SuperMatrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 0]], &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 0, 0]])
        .unwrap();
    c.bench_function("t_star n=3 r=7", |b| b.iter(|| t_star(black_box(&a))));
}

fn products(c: &mut Criterion) {
    let a = SuperMatrix::from_rows(&[vec![1, 1, 0], vec![0, 0, 1], vec![1, 0, 0]], &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]])
        .unwrap();
    let x = formulas::x_even_f(&a.ro(), 1).unwrap();
    let y = formulas::x_odd_f(&a.ro(), 1).unwrap();

    c.bench_function("oracle even F n=3 r=5 cold", |b| {
        b.iter_batched(Engine::new, |e| e.product(&x, &a).unwrap(), BatchSize::SmallInput)
    });
    let warm = Engine::new();
    warm.product(&x, &a).unwrap();
    c.bench_function("oracle even F n=3 r=5 warm", |b| b.iter(|| warm.product(black_box(&x), black_box(&a)).unwrap()));
    c.bench_function("formula even F n=3 r=5", |b| b.iter(|| formulas::even_f(black_box(&a), 1)));

    c.bench_function("oracle odd F n=3 r=5 cold", |b| {
        b.iter_batched(Engine::new, |e| e.product(&y, &a).unwrap(), BatchSize::SmallInput)
    });
    c.bench_function("formula odd F head+HH n=3 r=5", |b| {
        b.iter(|| (formulas::odd_f_head(black_box(&a), 1), formulas::odd_f_correction(black_box(&a), 1)))
    });

    let lam = Composition::new(vec![2, 1, 1]);
    c.bench_function("standard basis rank (2,1,1)", |b| {
        b.iter_batched(
            Engine::new,
            |e| queer_schur::qschur::basis_property_check(&e, &lam, &lam),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, hecke_clifford, products);
criterion_main!(benches);
