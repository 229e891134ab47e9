#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posit/bench/backend.hpp"

namespace posit::bench {

// Constant-series benchmarks. Every literal enters through the backend
// (parse/from_int), so the identical op sequence runs on every format.
// Iteration counts follow the reference experiments.

Scalar pi_leibniz(ScalarBackend& be, long iterations);
Scalar pi_nilakantha(ScalarBackend& be, long iterations);
Scalar euler_e(ScalarBackend& be, long iterations);
Scalar sin_one(ScalarBackend& be, long iterations);

struct Level1Benchmark {
    const char* id;
    Scalar (*run)(ScalarBackend&, long);
    long iterations;
    const char* reference;  // high-precision decimal expansion
};

const std::vector<Level1Benchmark>& level1_benchmarks();
const Level1Benchmark& level1_benchmark(std::string_view id);

// Count of consecutive correct decimal fraction digits versus a reference
// expansion; 0 when the integer parts differ. `computed` should carry at
// least 12 significant digits.
int exact_fraction_digits(std::string_view computed, std::string_view reference);

// Fixed-point rendering helpers for reports and digit counting.
std::string render_fixed(double v, int decimals);
std::string render_value(double v);  // 15 fraction digits

// Expected accuracy per (benchmark, backend): digit count and the value
// string at its published precision.
struct Level1Expectation {
    const char* benchmark;
    const char* backend;
    int digits;
    const char* value;
};

const std::vector<Level1Expectation>& level1_expected();

}  // namespace posit::bench
