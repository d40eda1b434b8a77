use criterion::{criterion_group, criterion_main, Criterion};
use diracem_core::equation_engine::{expand, DiracForm};
use diracem_core::field_maps::{mapping, Orientation};
use diracem_core::planewave::{kernel, kernel_wave, numeric_bilinear_spotcheck, residual, symbol_matrix, Units};
use diracem_core::tolerance::Tolerances;
use diracem_core::Axis;

fn planewave(c: &mut Criterion) {
    let units = Units::default();
    let omega = 2f64.sqrt();
    c.bench_function("symbol_matrix_kernel", |b| {
        b.iter(|| kernel(&symbol_matrix(DiracForm::FORM_2_10, Axis::X, omega, 1.0, 1.0, units), 1e-10))
    });
    let map = mapping(Axis::X, Orientation::Clockwise);
    let wave = kernel_wave(DiracForm::FORM_2_10, &map, 1.0, 1.0, units, 1.0, 1e-10).unwrap().unwrap();
    let sys = expand(DiracForm::FORM_2_10, &map);
    c.bench_function("residual_100", |b| b.iter(|| residual(&sys, &wave, 100, 0)));
    let tol = Tolerances::default();
    c.bench_function("bilinear_spotcheck_100", |b| b.iter(|| numeric_bilinear_spotcheck(100, 0, &tol)));
}

criterion_group!(benches, planewave);
criterion_main!(benches);
