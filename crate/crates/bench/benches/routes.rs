use criterion::{criterion_group, criterion_main, Criterion};
use symplectic_euler_core::counting::{Parity, PrimaryParams};
use symplectic_euler_core::genfun::{
    fsp_closed, fsp_exponential, fsp_p_recurrence, fsp_ts_recurrence, fsp_ts_recurrence_at,
    gsp_expansion,
};
use symplectic_euler_core::identities::verify_gl;

fn bench_routes(c: &mut Criterion) {
    c.bench_function("fsp_closed_symbolic_r6_n12", |b| {
        b.iter(|| fsp_closed(6, 12))
    });
    c.bench_function("fsp_closed_eval_q5", |b| {
        b.iter(|| fsp_closed(6, 6).eval_q_u64(5))
    });
    c.bench_function("fsp_exponential_r6_q5", |b| {
        b.iter(|| fsp_exponential(6, 5, 6))
    });
    c.bench_function("fsp_transform_recurrence_r5_q3", |b| {
        b.iter(|| fsp_ts_recurrence_at(5, 3, 6))
    });
    c.bench_function("fsp_p_recurrence_r5_p2_q3", |b| {
        let ctx = PrimaryParams::new(2, 3).unwrap();
        b.iter(|| fsp_p_recurrence(5, &ctx, 4))
    });
    c.bench_function("gsp_expansion_n6_q3", |b| {
        b.iter(|| gsp_expansion(6, 3, 6))
    });
    c.bench_function("identity_gl_degree8", |b| b.iter(|| verify_gl(-1, 8)));
    c.bench_function("ts_recurrence_symbolic_r4", |b| {
        b.iter(|| fsp_ts_recurrence(4, Parity::Odd, 6))
    });
}

criterion_group!(routes, bench_routes);
criterion_main!(routes);
