#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "posit/bench/backend.hpp"
#include "posit/bench/level1.hpp"
#include "posit/bench/level2.hpp"

namespace posit::bench {

struct BenchReport {
    std::string benchmark;
    std::string backend;
    long iterations = 0;
    double value = 0;        // exact binary64 of the result
    std::string value_text;  // 15 fraction digits
    std::string reference;
    int exact_digits = 0;
    RangeStats range;
    double wall_ms = 0;
};

// Truncated (not rounded) fixed-point rendering; accuracy tables print
// values cut at the digit position, so 3.1415960 prints as "3.14159".
std::string render_truncated(double v, int decimals);

// Runs every level-one benchmark on each backend, with range tracking.
std::vector<BenchReport> run_level1(const std::vector<std::string>& backends);

std::string level1_table(const std::vector<BenchReport>& reports);
std::string level1_json(const std::vector<BenchReport>& reports);

// Compares a run against the expected accuracy table. Posit cells must
// reproduce the digit count and the printed value; the binary32 baseline
// may differ from the printed value by one float ulp.
struct TableCheck {
    bool ok = true;
    std::string diagnostics;
};
TableCheck check_level1(const std::vector<BenchReport>& reports);

struct Level2Run {
    std::string backend;
    Level2Result result;
    double wall_ms = 0;
};

std::vector<Level2Run> run_level2(const std::vector<std::string>& backends,
                                  const IrisData& iris,
                                  const Level2Options& opt = {});

std::string level2_table(const std::vector<Level2Run>& runs);
std::string level2_json(const std::vector<Level2Run>& runs);

// True when every decision vector of `run` equals the reference run's.
bool same_decisions(const Level2Result& run, const Level2Result& reference);

}  // namespace posit::bench
