use criterion::{criterion_group, criterion_main, Criterion};
use lochom::cmfication::{cmfication_candidate, two_planes_example};
use lochom::{ext_module, par, resolve, FPModule, Ring};
use std::hint::black_box;
use std::sync::Arc;

fn twisted_cubic(r: &Arc<Ring>) -> FPModule {
    let gens = ["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"].map(|s| r.poly(s));
    FPModule::cyclic(r, &gens).unwrap()
}

fn generic_quadrics(r: &Arc<Ring>) -> FPModule {
    let gens = [
        "x1^2 + 3*x2*x3 - x4^2",
        "x2^2 - 5*x1*x4 + 7*x3^2",
        "x3^2 + 2*x1*x2 - 11*x2*x4",
        "x1*x3 + x2*x4 + 13*x4^2",
    ]
    .map(|s| r.poly(s));
    FPModule::cyclic(r, &gens).unwrap()
}

fn modes(c: &mut Criterion, name: &str, mut f: impl FnMut()) {
    let mut group = c.benchmark_group(name);
    for (label, on) in [("parallel", true), ("sequential", false)] {
        let was = par::set_parallel(on);
        group.bench_function(label, |b| b.iter(&mut f));
        par::set_parallel(was);
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let r = Ring::standard(4);
    let planes = two_planes_example(&r).unwrap().ring_module;
    let cubic = twisted_cubic(&r);
    modes(c, "resolve_twisted_cubic", || {
        black_box(resolve(&cubic));
    });
    let generic = generic_quadrics(&r);
    modes(c, "ext_generic_quadrics", || {
        for i in 0..=4 {
            black_box(ext_module(i, &generic, -4));
        }
    });
    modes(c, "ext_two_planes", || {
        for i in 0..=4 {
            black_box(ext_module(i, &planes, -4));
        }
    });
    modes(c, "cmfication_two_planes", || {
        black_box(cmfication_candidate(&planes).unwrap());
    });
}

criterion_group!(benches, kernels);
criterion_main!(benches);
