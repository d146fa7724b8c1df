#include <benchmark/benchmark.h>

#include "vacrad/audit.hpp"
#include "vacrad/bremsstrahlung.hpp"
#include "vacrad/dynamics.hpp"
#include "vacrad/vacuum_radiation.hpp"

namespace {

using namespace vacrad;

void bm_step_standard(benchmark::State& state) {
  const ConstantsTable& k = constants();
  const FieldConfig config{{0.0, 1.0e6, 0.0}, {0.0, 0.0, 1.0}};
  ElectronState s{{0.0, 0.0, 0.0}, {1.0e7, 0.0, 0.0}, 0.0};
  for (auto _ : state) {
    s = step(s, config, 1.0e-13, DynamicsMode::standard_lorentz, k);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_step_standard);

void bm_integrate_1k(benchmark::State& state) {
  const ConstantsTable& k = constants();
  const FieldConfig config{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}};
  const ElectronState initial{{0.0, 0.0, 0.0}, {1.0e7, 0.0, 0.0}, 0.0};
  for (auto _ : state) {
    Trajectory t = integrate(initial, config, 1.0e-13, 1000, DynamicsMode::standard_lorentz, k);
    benchmark::DoNotOptimize(t.radiated_energy);
  }
}
BENCHMARK(bm_integrate_1k);

void bm_power_kinematic(benchmark::State& state) {
  const ConstantsTable& k = constants();
  const Vec3 v{1.0e8, 0.0, 0.0};
  const Vec3 a{0.0, 1.0e20, 0.0};
  for (auto _ : state) {
    PowerResult p = power_kinematic_form(v, a, PowerVariant::textbook, k);
    benchmark::DoNotOptimize(p.power);
  }
}
BENCHMARK(bm_power_kinematic);

void bm_vacuum_energy_literal(benchmark::State& state) {
  const ConstantsTable& k = constants();
  for (auto _ : state) {
    double e = vacuum_energy_electric(3.0e4, EvalMode::literal_formulas, k);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bm_vacuum_energy_literal);

void bm_full_audit(benchmark::State& state) {
  for (auto _ : state) {
    auto findings = run_full_audit();
    benchmark::DoNotOptimize(findings.size());
  }
}
BENCHMARK(bm_full_audit);

void bm_render_structured(benchmark::State& state) {
  const auto findings = run_full_audit();
  for (auto _ : state) {
    std::string doc = render_report(findings, ReportFormat::structured);
    benchmark::DoNotOptimize(doc.size());
  }
}
BENCHMARK(bm_render_structured);

}  // namespace

BENCHMARK_MAIN();
