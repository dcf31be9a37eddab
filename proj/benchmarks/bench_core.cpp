// Copyright 2026 The descriptor-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "dlab/descriptor.hpp"
#include "dlab/pictures.hpp"
#include "dlab/random.hpp"
#include "dlab/tensor.hpp"

using namespace dlab;

namespace {

SystemLayout qubits(std::size_t n) {
  return SystemLayout(std::vector<std::size_t>(n, 2));
}

void BM_TensorEmbed(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  const Matrix cnot = gate_matrix("cnot");
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_embed(cnot, {0, n - 1}, layout));
  }
}
BENCHMARK(BM_TensorEmbed)->Arg(6)->Arg(8)->Arg(10);

void BM_Conjugate(benchmark::State& state) {
  const std::size_t dim = state.range(0);
  std::mt19937_64 rng(1);
  const Matrix u = haar_unitary(dim, rng);
  Matrix a = haar_unitary(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugate(u, a));
  }
}
BENCHMARK(BM_Conjugate)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_PauliDecompose(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(2);
  const Matrix u = haar_unitary(std::size_t{1} << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pauli_decompose(u, n));
  }
}
BENCHMARK(BM_PauliDecompose)->Arg(2)->Arg(4)->Arg(6);

void BM_EvolveStep(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  std::mt19937_64 rng(3);
  const DescriptorFrame frame = run_heisenberg(random_circuit(n, 6, rng), layout);
  const GateEvent event = make_gate_event(GateOp{"cnot", {0, n - 1}, {}}, layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_step(frame, event));
  }
}
BENCHMARK(BM_EvolveStep)->Arg(4)->Arg(6)->Arg(7);

void BM_EvolveGlobal(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  std::mt19937_64 rng(4);
  const Matrix u = haar_unitary(layout.total_dim(), rng);
  const DescriptorFrame frame = init_frame(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_global(frame, u));
  }
}
BENCHMARK(BM_EvolveGlobal)->Arg(4)->Arg(6)->Arg(7);

void BM_ReconstructDensity(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  std::mt19937_64 rng(5);
  const DescriptorFrame frame = run_heisenberg(random_circuit(n, 8, rng), layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct_density(frame, {0, n - 1}));
  }
}
BENCHMARK(BM_ReconstructDensity)->Arg(4)->Arg(6)->Arg(8);

void BM_SchrodingerRun(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  std::mt19937_64 rng(6);
  const Circuit circuit = random_circuit(n, 40, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schrodinger_run(circuit, layout));
  }
}
BENCHMARK(BM_SchrodingerRun)->Arg(8)->Arg(10)->Arg(12);

void BM_RecoverUnitary(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const SystemLayout layout = qubits(n);
  std::mt19937_64 rng(7);
  const DescriptorFrame frame =
      evolve_global(init_frame(layout), haar_unitary(layout.total_dim(), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(recover_unitary(frame));
  }
}
BENCHMARK(BM_RecoverUnitary)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
