use criterion::{criterion_group, criterion_main};

criterion_group!(routes, parity_cf_bench::benchmarks);
criterion_main!(routes);
