// Copyright 2026 The HQPU Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "hqpu/effective/effective_params.hpp"
#include "hqpu/effective/phases.hpp"
#include "hqpu/model/builders.hpp"
#include "hqpu/qcore/propagate.hpp"

namespace {

using namespace hqpu;

qcore::StateVector ground(const qcore::HilbertSpace& space) {
  return qcore::StateVector::basis(space, 0);
}

// Sparse H(t)|psi>, the integrator's inner kernel.
void BM_HamiltonianApply(benchmark::State& state) {
  auto p = model::PhysicalParams::desk_scale();
  p.n_max = static_cast<std::size_t>(state.range(0));
  const auto h = model::build_two_qubit_interaction(p);
  const Vector psi = ground(h.space()).amplitudes();
  Vector out(psi.size());
  double t = 0.0;
  for (auto _ : state) {
    h.apply(t, psi, out);
    benchmark::DoNotOptimize(out.data());
    t += 0.37;
  }
  state.counters["dim"] = static_cast<double>(h.space().total_dim());
}
BENCHMARK(BM_HamiltonianApply)->DenseRange(1, 3);

// Dense assembly of H(t), used by diagnostics only.
void BM_HamiltonianEvaluate(benchmark::State& state) {
  auto p = model::PhysicalParams::desk_scale();
  p.n_max = static_cast<std::size_t>(state.range(0));
  const auto h = model::build_two_qubit_interaction(p);
  for (auto _ : state) benchmark::DoNotOptimize(h.evaluate(0.37));
}
BENCHMARK(BM_HamiltonianEvaluate)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

// Adaptive integration of the full two-qubit Hamiltonian over 100 ps.
void BM_AdaptivePropagation(benchmark::State& state) {
  auto p = model::PhysicalParams::desk_scale();
  p.n_max = static_cast<std::size_t>(state.range(0));
  const auto h = model::build_two_qubit_interaction(p);
  const auto psi = ground(h.space());
  std::size_t steps = 0;
  for (auto _ : state) {
    const auto r = qcore::propagate(h, psi, 0.0, 100.0);
    steps = r.accepted_steps;
    benchmark::DoNotOptimize(r.state);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_AdaptivePropagation)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

// One-off diagonalisation in the static frame.
void BM_FrameSetup(benchmark::State& state) {
  auto p = model::PhysicalParams::desk_scale();
  p.n_max = static_cast<std::size_t>(state.range(0));
  const auto h = model::build_two_qubit_interaction(p);
  for (auto _ : state) benchmark::DoNotOptimize(qcore::FramePropagator(h));
}
BENCHMARK(BM_FrameSetup)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Evolution to an arbitrary time once the frame is diagonalised.
void BM_FrameEvolve(benchmark::State& state) {
  auto p = model::PhysicalParams::desk_scale();
  p.n_max = static_cast<std::size_t>(state.range(0));
  const auto h = model::build_two_qubit_interaction(p);
  const qcore::FramePropagator frame(h);
  const auto psi = ground(h.space());
  for (auto _ : state) benchmark::DoNotOptimize(frame.evolve(psi, 2000.0));
}
BENCHMARK(BM_FrameEvolve)->DenseRange(1, 3);

void BM_ClosedFormGateTime(benchmark::State& state) {
  const auto p = model::PhysicalParams::paper();
  for (auto _ : state) {
    const auto e = effective::effective_params(p);
    benchmark::DoNotOptimize(effective::gate_time(effective::compute_phases(e, p)));
  }
}
BENCHMARK(BM_ClosedFormGateTime);

}  // namespace

BENCHMARK_MAIN();
