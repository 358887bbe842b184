// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include <benchmark/benchmark.h>

#include "qucell/uqminus.hpp"

namespace {

using namespace qucell;

void BM_scalar_field_ops(benchmark::State& state) {
  const Scalar q = Scalar::q_power(1);
  const Scalar a = (Scalar::one() + q) / (Scalar::one() - q * q * q);
  const Scalar b = q / (Scalar::one() - q * q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b + a / b - b);
  }
}
BENCHMARK(BM_scalar_field_ops);

void BM_weight_space_gram(benchmark::State& state) {
  const auto height = state.range(0);
  for (auto _ : state) {
    // Rebuild the context each round so memo tables start cold.
    UqMinus u(RootDatum::from_type("A2"), height + 1);
    const Content c = {height / 2 + height % 2, height / 2};
    benchmark::DoNotOptimize(u.weight_space(c).dim());
  }
}
BENCHMARK(BM_weight_space_gram)->Arg(4)->Arg(6);

void BM_pairing_memoized(benchmark::State& state) {
  UqMinus u(RootDatum::from_type("B2"), 10);
  const NCElement x = NCElement::monomial({0, 1, 0, 1}, Scalar::one());
  const NCElement y = NCElement::monomial({1, 0, 1, 0}, Scalar::one());
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.lusztig_pair(x, y));
  }
}
BENCHMARK(BM_pairing_memoized);

}  // namespace

BENCHMARK_MAIN();
