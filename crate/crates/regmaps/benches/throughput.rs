//! Table generation throughput with the data-parallel scheduler on and
//! off.  The memo cache is rebuilt for every iteration so each sample
//! pays the full recurrence cost, not a hash-map lookup.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use regmaps::multiface::Memo;
use regmaps::tables::{generate, TableKind, TableSpec};

fn bench_tables(c: &mut Criterion) {
    let specs = [
        (
            "multi-rooted-d4-v6-g3",
            TableSpec {
                kind: TableKind::MultiRooted,
                d: 4,
                genus_max: 3,
                vertices_max: Some(6),
            },
        ),
        (
            "multi-unrooted-d3-v8-g3",
            TableSpec {
                kind: TableKind::MultiUnrooted,
                d: 3,
                genus_max: 3,
                vertices_max: Some(8),
            },
        ),
        (
            "oneface-unrooted-d5-g11",
            TableSpec {
                kind: TableKind::OneFaceUnrooted,
                d: 5,
                genus_max: 11,
                vertices_max: None,
            },
        ),
    ];
    let mut group = c.benchmark_group("tables");
    group.sample_size(10);
    for (name, spec) in &specs {
        for (mode, enabled) in [("parallel", true), ("sequential", false)] {
            group.bench_function(format!("{name}/{mode}"), |b| {
                regmaps::set_parallel(enabled);
                b.iter_batched(
                    Memo::new,
                    |memo| generate(&memo, spec).unwrap(),
                    BatchSize::SmallInput,
                );
            });
        }
    }
    group.finish();
    regmaps::set_parallel(true);
}

criterion_group!(benches, bench_tables);
criterion_main!(benches);
