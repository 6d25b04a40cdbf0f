use bellbasis::basisgen::{generate_basis, generate_state};
use bellbasis::correlations::{avg_entanglement_entropy, ggm, quantum_discord, MeasureConfig};
use bellbasis::gates::{apply_family_flip, apply_phase, apply_single, SingleQubitGate};
use bellbasis::{ControlledFamily, PhaseId, QubitSubset};
use bellbasis_bench::{busy_state, discord_marginal, wide_spec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn gate_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("gates");
    for n in [8, 12] {
        let state = busy_state(n);
        let controls = QubitSubset::range(n, 1, n - 1).unwrap();
        group.bench_with_input(BenchmarkId::new("hadamard", n), &state, |b, s| {
            b.iter(|| apply_single(black_box(s), &SingleQubitGate::H, n / 2).unwrap())
        });
        for family in ControlledFamily::ALL {
            group.bench_with_input(BenchmarkId::new(format!("flip-{family}"), n), &state, |b, s| {
                b.iter(|| apply_family_flip(family, black_box(s), &controls, &[n]).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("phase-P3", n), &state, |b, s| {
            b.iter(|| apply_phase(black_box(s), PhaseId::P(3), &controls).unwrap())
        });
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    for n in [6, 10] {
        let spec = wide_spec(n);
        group.bench_with_input(BenchmarkId::new("state", n), &spec, |b, s| {
            b.iter(|| generate_state(black_box(s), 1).unwrap())
        });
    }
    let spec = wide_spec(6);
    group.bench_function("basis/6", |b| b.iter(|| generate_basis(black_box(&spec)).unwrap()));
    group.finish();
}

fn measures(c: &mut Criterion) {
    let mut group = c.benchmark_group("measures");
    let state = busy_state(8);
    group.bench_function("ggm/8", |b| b.iter(|| ggm(black_box(&state)).unwrap()));
    group.bench_function("avg-entropy/8", |b| {
        b.iter(|| avg_entanglement_entropy(black_box(&state)).unwrap())
    });
    let rho = discord_marginal();
    let cfg = MeasureConfig::default();
    group.sample_size(20);
    group.bench_function("discord/default-grid", |b| {
        b.iter(|| quantum_discord(black_box(&rho), &cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, gate_kernels, generation, measures);
criterion_main!(benches);
