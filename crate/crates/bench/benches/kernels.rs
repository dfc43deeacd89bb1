use criterion::{black_box, criterion_group, criterion_main, Criterion};
use repcalc::albanese::{gg_identity_checks, w_table, wedge_uo};
use repcalc::combinatorics::lr_product;
use repcalc::glrep::wedge_u;
use repcalc::tensor::{kernel_generator_checks, lem_connected};
use repcalc::RepGL;
use repcalc_bench::{bipartitions_up_to, partitions_up_to};

fn combinatorics(c: &mut Criterion) {
    let parts = partitions_up_to(4);
    c.bench_function("lr_product sizes<=4", |b| {
        b.iter(|| {
            for x in &parts {
                for y in &parts {
                    black_box(lr_product(x, y));
                }
            }
        })
    });
    let bps = bipartitions_up_to(2);
    c.bench_function("koike_tensor sizes<=2", |b| {
        b.iter(|| {
            for x in &bps {
                for y in &bps {
                    black_box(RepGL::irrep(x.clone()).koike_tensor(&RepGL::irrep(y.clone())));
                }
            }
        })
    });
}

fn tables(c: &mut Criterion) {
    c.bench_function("wedge_u(3)", |b| b.iter(|| black_box(wedge_u(3))));
    c.bench_function("wedge_uo(3)", |b| b.iter(|| black_box(wedge_uo(3).unwrap())));
    c.bench_function("w_table(3)", |b| b.iter(|| black_box(w_table(3).unwrap())));
}

fn tensors(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor");
    g.sample_size(10);
    g.bench_function("lem_connected(4, 6)", |b| b.iter(|| black_box(lem_connected(4, 6).unwrap())));
    g.bench_function("kernel_generator_checks(9)", |b| b.iter(|| black_box(kernel_generator_checks(9).unwrap())));
    g.bench_function("gg_identity_checks(6)", |b| b.iter(|| black_box(gg_identity_checks(6).unwrap())));
    g.finish();
}

criterion_group!(benches, combinatorics, tables, tensors);
criterion_main!(benches);
