#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "posit/bench/backend.hpp"

namespace posit::bench {

// Iris rows keep their decimal text so every backend parses the same input
// through its own rounding.
struct IrisData {
    std::vector<std::array<std::string, 4>> features;
    std::vector<int> labels;
    std::vector<std::string> classes;  // id -> name, in file order

    std::size_t size() const { return features.size(); }
};

IrisData load_iris_csv(const std::string& path);

struct Level2Options {
    int mm_n = 182;
    std::uint64_t mm_seed = 42;
    int km_max_sweeps = 100;
    int knn_k = 5;
    int ct_max_depth = 5;
};

// Decision outputs of the ML kernels; these are what gets compared across
// backends (the regression also exposes its coefficients).
struct Level2Result {
    std::vector<int> km_assignments;
    std::vector<int> knn_predictions;
    std::vector<int> nb_predictions;
    std::vector<int> ct_predictions;
    std::array<double, 4> lr_coefficients;
    double mm_checksum;
};

Level2Result level_two_suite(ScalarBackend& be, const IrisData& iris,
                             const Level2Options& opt = {});

// Individual kernels.
double mm_checksum(ScalarBackend& be, int n, std::uint64_t seed);
std::vector<int> km_cluster(ScalarBackend& be, const IrisData& iris,
                            int max_sweeps);
std::vector<int> knn_loo(ScalarBackend& be, const IrisData& iris, int k);
std::array<double, 4> lr_coefficients(ScalarBackend& be, const IrisData& iris);
std::vector<int> nb_classify(ScalarBackend& be, const IrisData& iris);
std::vector<int> ct_classify(ScalarBackend& be, const IrisData& iris,
                             int max_depth);

// exp built from backend ops (range reduction by ln 2, then a fixed-depth
// Horner series), so the naive Bayes densities run on every format.
Scalar exp_scalar(ScalarBackend& be, Scalar x);

}  // namespace posit::bench
