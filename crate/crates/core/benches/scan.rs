//! Sequential vs rayon execution of the two data-parallel kernels: the
//! height-function scan over the binormal circle and the tangent space
//! computation behind codimension.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rxsurf::exec::Exec;
use rxsurf::geometry::CorankOneJet;
use rxsurf::heights::height_scan;
use rxsurf::jetalg::{parse_poly, MonomialOrder};
use rxsurf::rxclass::codimension_with;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn scan(c: &mut Criterion) {
    let j = CorankOneJet::parse("x, x*y + y^3, x^2 + x*y + 2*y^2 + x^3 - y^3, x^2 + y^3", 6).unwrap();
    let mut g = c.benchmark_group("height_scan");
    for grid in [500, 2000] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, grid), &grid, |b, &grid| {
                b.iter(|| height_scan(black_box(&j), grid, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn codim(c: &mut Criterion) {
    let mut g = c.benchmark_group("codimension");
    g.sample_size(10);
    for germ in ["Z+X^3", "W-X^2"] {
        let p = parse_poly(germ, 4).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, germ), &p, |b, p| {
                b.iter(|| codimension_with(black_box(p), 8, MonomialOrder::GrLex, exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, scan, codim);
criterion_main!(benches);
