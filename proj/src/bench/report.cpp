#include "posit/bench/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

#include <json.hpp>

namespace posit::bench {

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(
               clock::now().time_since_epoch())
        .count();
}

nlohmann::json report_json(const BenchReport& r) {
    nlohmann::json j;
    j["benchmark"] = r.benchmark;
    j["backend"] = r.backend;
    j["iterations"] = r.iterations;
    j["value"] = r.value_text;
    j["reference"] = r.reference;
    j["exact_fraction_digits"] = r.exact_digits;
    j["range"] = {
        {"min_01", r.range.seen_01 ? nlohmann::json(r.range.min_01)
                                   : nlohmann::json(nullptr)},
        {"max_1inf", r.range.seen_1inf ? nlohmann::json(r.range.max_1inf)
                                       : nlohmann::json(nullptr)},
    };
    j["wall_ms"] = r.wall_ms;
    return j;
}

}  // namespace

std::string render_truncated(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.18f", v);
    const char* dot = std::strchr(buf, '.');
    return std::string(buf, dot - buf + 1 + decimals);
}

std::vector<BenchReport> run_level1(const std::vector<std::string>& backends) {
    std::vector<BenchReport> out;
    for (const auto& spec : backends) {
        for (const auto& bench : level1_benchmarks()) {
            auto backend = make_backend(spec);
            BenchReport r;
            r.benchmark = bench.id;
            r.backend = spec;
            r.iterations = bench.iterations;
            r.reference = bench.reference;
            RangeTrackingBackend tracked(*backend, r.range);
            const double t0 = now_ms();
            const Scalar result = bench.run(tracked, bench.iterations);
            r.wall_ms = now_ms() - t0;
            r.value = backend->to_binary64(result);
            r.value_text = render_value(r.value);
            r.exact_digits = exact_fraction_digits(r.value_text, r.reference);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::string level1_table(const std::vector<BenchReport>& reports) {
    std::ostringstream out;
    out << "benchmark       backend          value | exact fraction digits\n";
    for (const auto& r : reports) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-15s %-16s %.10f | %d\n",
                      r.benchmark.c_str(), r.backend.c_str(), r.value,
                      r.exact_digits);
        out << line;
    }
    return out.str();
}

std::string level1_json(const std::vector<BenchReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

TableCheck check_level1(const std::vector<BenchReport>& reports) {
    TableCheck check;
    std::ostringstream diag;
    for (const auto& cell : level1_expected()) {
        const BenchReport* found = nullptr;
        for (const auto& r : reports)
            if (r.benchmark == cell.benchmark && r.backend == cell.backend)
                found = &r;
        if (!found) continue;  // backend not part of this run

        bool cell_ok = found->exact_digits == cell.digits;
        const std::string_view want(cell.value);
        const int decimals =
            static_cast<int>(want.size() - want.find('.') - 1);
        std::string got;
        if (found->backend == "f32") {
            // one float ulp of slack on the baseline's printed value
            const float expected = std::strtof(cell.value, nullptr);
            const auto actual = static_cast<float>(found->value);
            const float up = std::nextafterf(expected, 1e30f);
            const float dn = std::nextafterf(expected, -1e30f);
            got = render_truncated(found->value, decimals);
            if (actual > up || actual < dn) cell_ok = false;
        } else {
            got = render_truncated(found->value, decimals);
            if (got != cell.value) cell_ok = false;
        }
        if (!cell_ok) {
            check.ok = false;
            diag << "  " << cell.benchmark << " " << cell.backend
                 << ": digits=" << found->exact_digits << " (want "
                 << cell.digits << "), value=" << got << " (want "
                 << cell.value << ")\n";
        }
    }
    check.diagnostics = diag.str();
    return check;
}

std::vector<Level2Run> run_level2(const std::vector<std::string>& backends,
                                  const IrisData& iris,
                                  const Level2Options& opt) {
    std::vector<Level2Run> out;
    for (const auto& spec : backends) {
        auto backend = make_backend(spec);
        Level2Run run;
        run.backend = spec;
        const double t0 = now_ms();
        run.result = level_two_suite(*backend, iris, opt);
        run.wall_ms = now_ms() - t0;
        out.push_back(std::move(run));
    }
    return out;
}

bool same_decisions(const Level2Result& run, const Level2Result& reference) {
    return run.km_assignments == reference.km_assignments &&
           run.knn_predictions == reference.knn_predictions &&
           run.nb_predictions == reference.nb_predictions &&
           run.ct_predictions == reference.ct_predictions;
}

namespace {

nlohmann::json level2_json_one(const Level2Run& r) {
    nlohmann::json j;
    j["backend"] = r.backend;
    j["mm_checksum"] = r.result.mm_checksum;
    j["km_assignments"] = r.result.km_assignments;
    j["knn_predictions"] = r.result.knn_predictions;
    j["nb_predictions"] = r.result.nb_predictions;
    j["ct_predictions"] = r.result.ct_predictions;
    j["lr_coefficients"] = r.result.lr_coefficients;
    j["wall_ms"] = r.wall_ms;
    return j;
}

int count_diff(const std::vector<int>& a, const std::vector<int>& b) {
    int n = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) ++n;
    return n;
}

}  // namespace

std::string level2_table(const std::vector<Level2Run>& runs) {
    std::ostringstream out;
    const Level2Run* ref = nullptr;
    for (const auto& r : runs)
        if (r.backend == "f32") ref = &r;
    out << "backend          mm_checksum        km knn nb ct (differing "
           "decisions vs f32)  lr[3]\n";
    for (const auto& r : runs) {
        char line[200];
        if (ref) {
            std::snprintf(
                line, sizeof(line), "%-16s %.10e %3d %3d %2d %2d  %+.6f\n",
                r.backend.c_str(), r.result.mm_checksum,
                count_diff(r.result.km_assignments, ref->result.km_assignments),
                count_diff(r.result.knn_predictions, ref->result.knn_predictions),
                count_diff(r.result.nb_predictions, ref->result.nb_predictions),
                count_diff(r.result.ct_predictions, ref->result.ct_predictions),
                r.result.lr_coefficients[3]);
        } else {
            std::snprintf(line, sizeof(line), "%-16s %.10e  lr[3]=%+.6f\n",
                          r.backend.c_str(), r.result.mm_checksum,
                          r.result.lr_coefficients[3]);
        }
        out << line;
    }
    return out.str();
}

std::string level2_json(const std::vector<Level2Run>& runs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : runs) arr.push_back(level2_json_one(r));
    return arr.dump(2);
}

}  // namespace posit::bench
