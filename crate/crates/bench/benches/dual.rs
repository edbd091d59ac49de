use apolar_bench::{system, SYSTEMS};
use apolar_core::{bezout_report, buchberger, dual_member, dual_space, MonomialOrder, Point};
use criterion::{criterion_group, criterion_main, Criterion};

fn dual_spaces(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual_space_at_origin");
    for (name, vars, _) in SYSTEMS {
        let sys = system(name);
        let origin = Point::origin(vars.len());
        group.bench_function(*name, |b| b.iter(|| dual_space(sys.polys(), &origin)));
    }
    group.finish();
}

fn groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger_grevlex");
    for (name, vars, _) in SYSTEMS {
        let sys = system(name);
        let order = MonomialOrder::grevlex(vars.len());
        group.bench_function(*name, |b| {
            b.iter(|| buchberger(sys.polys(), &order).unwrap())
        });
    }
    group.finish();
}

fn theorems(c: &mut Criterion) {
    for (name, _, _) in SYSTEMS {
        let sys = system(name);
        c.bench_function(&format!("bezout_report/{name}"), |b| {
            b.iter(|| bezout_report(&sys, None).unwrap())
        });
    }
    let sys = system("tangent_cusp");
    let f = apolar_core::parse_poly("x^3*y - 2*x*y^2 + 7*y^3 - x^4", &["x", "y"]).unwrap();
    c.bench_function("dual_member/tangent_cusp", |b| {
        b.iter(|| dual_member(&f, &sys).unwrap())
    });
}

criterion_group!(benches, dual_spaces, groebner, theorems);
criterion_main!(benches);
