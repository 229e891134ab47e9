// Acceptance suite: runs every stated criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is nonzero when any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "posit/arith.hpp"
#include "posit/bench/report.hpp"
#include "posit/convert.hpp"
#include "posit/oracle.hpp"

using namespace posit;
using namespace posit::bench;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail = "") {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str());
    if (!ok && !detail.empty()) std::printf("%s", detail.c_str());
    if (!ok) ++g_failures;
    std::fflush(stdout);
}

const oracle::ImplFn kImpl = [](const PositConfig& c, ArithOp o, PositBits a,
                                PositBits b) { return apply(c, o, a, b); };

const std::vector<ArithOp> kAllOps = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul,
                                      ArithOp::Div, ArithOp::Sqrt};

// 1. The five published 8-bit patterns decode and re-encode bit-exactly.
void criterion1() {
    struct Row {
        PositBits pattern;
        bool sn, s;
        double value;
    };
    const Row rows[] = {
        {0x00, true, false, 0.0}, {0x80, true, true, 0.0},
        {0x40, false, false, 1.0}, {0xB0, false, true, -2.0},
        {0x59, false, false, 3.125},
    };
    bool ok = true;
    std::ostringstream diag;
    for (const Row& r : rows) {
        const UnpackedPosit u = decode(P8, r.pattern);
        const PositBits back = encode(P8, u);
        bool row_ok = u.sn == r.sn && u.s == r.s && back == r.pattern;
        if (!r.sn && !std::isnan(r.value))
            row_ok = row_ok && posit_to_binary64(P8, r.pattern) == r.value;
        if (!row_ok) {
            ok = false;
            diag << "  0x" << to_hex(P8, r.pattern) << " decode/encode mismatch\n";
        }
    }
    report(1, ok, "bit-pattern vectors (0x00 0x80 0x40 0xB0 0x59) round-trip",
           diag.str());
}

// 2. Exhaustive oracle equivalence for every P8 operation.
void criterion2() {
    bool ok = true;
    std::ostringstream diag;
    std::uint64_t checked = 0;
    for (const ArithOp op : kAllOps) {
        const auto rep = oracle::exhaustive_check(P8, op, kImpl);
        checked += rep.checked;
        if (!rep.ok()) {
            ok = false;
            diag << rep.to_text();
        }
    }
    report(2, ok,
           "exhaustive P8 oracle equivalence (" + std::to_string(checked) +
               " cases, add/sub/mul/div/sqrt)",
           diag.str());
}

// 3. Round-trip and ordering invariants, exhaustive for P8 and P16.
void criterion3() {
    bool ok = true;
    std::ostringstream diag;
    for (const auto& cfg : {P8, P16}) {
        const std::uint64_t count = 1ull << cfg.ps;
        for (std::uint64_t p = 0; p < count; ++p) {
            if (encode(cfg, decode(cfg, p)) != p) {
                ok = false;
                diag << "  " << cfg.name() << " round-trip failed at 0x"
                     << to_hex(cfg, p) << "\n";
                break;
            }
        }
        bool first = true;
        oracle::Rational prev;
        const std::int64_t lo = -(std::int64_t(1) << (cfg.ps - 1)) + 1;
        const std::int64_t hi = (std::int64_t(1) << (cfg.ps - 1)) - 1;
        for (std::int64_t s = lo; s <= hi; ++s) {
            const PositBits p = static_cast<PositBits>(s) & cfg.mask();
            const auto v = oracle::exact_value(cfg, p);
            if (!first && !(prev < v.value())) {
                ok = false;
                diag << "  " << cfg.name() << " ordering failed at 0x"
                     << to_hex(cfg, p) << "\n";
                break;
            }
            prev = v.value();
            first = false;
        }
    }
    report(3, ok, "encode/decode identity and signed-pattern ordering (P8, P16)",
           diag.str());
}

// 4. Sampled oracle equivalence for P16 and P32.
void criterion4() {
    bool ok = true;
    std::ostringstream diag;
    std::uint64_t checked = 0;
    for (const auto& cfg : {P16, P32}) {
        for (const ArithOp op : kAllOps) {
            const auto rep =
                oracle::sampled_check(cfg, op, kImpl, 100000, oracle::kDefaultSeed);
            checked += rep.checked;
            if (!rep.ok()) {
                ok = false;
                diag << rep.to_text();
            }
        }
    }
    report(4, ok,
           "sampled P16/P32 oracle equivalence (" + std::to_string(checked) +
               " cases, seed " + std::to_string(oracle::kDefaultSeed) + ")",
           diag.str());
}

// Criteria 5, 6, 7 and 9 share the level-one runs.
void criteria_5_6_7_9() {
    const std::vector<std::string> backends = {"f32", "p8", "p16", "p32",
                                               "hybrid-p8-p16"};
    const auto reports = run_level1(backends);

    // 5. Accuracy table reproduction.
    const TableCheck check = check_level1(reports);
    report(5, check.ok,
           "level-one accuracy table (16 cells: digit counts and printed values)",
           check.diagnostics);

    const auto find = [&](const std::string& bench, const std::string& be)
        -> const BenchReport& {
        for (const auto& r : reports)
            if (r.benchmark == bench && r.backend == be) return r;
        throw std::logic_error("missing report");
    };

    // 6. Conversion-loss experiment.
    {
        auto conv = make_backend("p32-converting");
        const Scalar r = euler_e(*conv, 20);
        const double v = conv->to_binary64(r);
        const int conv_digits = exact_fraction_digits(
            render_value(v), level1_benchmark("euler").reference);
        const int direct_digits = find("euler", "p32").exact_digits;
        const bool ok = direct_digits == 6 && conv_digits <= 2;
        std::ostringstream diag;
        diag << "  direct p32 euler digits = " << direct_digits
             << " (need 6), converting digits = " << conv_digits
             << " (need <= 2, expected 1); converting value = "
             << render_value(v) << "\n";
        report(6, ok,
               "conversion-loss experiment (p32-converting euler vs direct)",
               diag.str());
    }

    // 7. Dynamic-range rows under binary64 tracking of the binary32 run.
    {
        bool ok = true;
        std::ostringstream diag;
        const auto near = [](double got, double want, double tol) {
            return std::fabs(got - want) <= tol * want;
        };
        const auto& euler = find("euler", "f32");
        if (!near(euler.range.min_01, 8.22e-18, 0.01) ||
            euler.range.max_1inf != 20.0) {
            ok = false;
            diag << "  euler range [" << euler.range.min_01 << ", "
                 << euler.range.max_1inf << "] want [8.22e-18 +-1%, 20]\n";
        }
        const auto& leibniz = find("pi-leibniz", "f32");
        if (leibniz.range.max_1inf != 3999999.0 ||
            !near(leibniz.range.min_01, 1.0e-6, 0.05)) {
            ok = false;
            diag << "  leibniz range [" << leibniz.range.min_01 << ", "
                 << leibniz.range.max_1inf
                 << "] want [1.0e-06 +-5%, 3999999]\n";
        }
        const auto& nila = find("pi-nilakantha", "f32");
        if (!near(nila.range.min_01, 6.2e-8, 0.02) ||
            nila.range.max_1inf != 64480800.0) {
            ok = false;
            diag << "  nilakantha range [" << nila.range.min_01 << ", "
                 << nila.range.max_1inf
                 << "] want [6.2e-08 +-2%, 64480800]\n";
        }
        report(7, ok, "dynamic-range rows (euler, leibniz, nilakantha)",
               diag.str());
    }

    // 9. Hybrid storage/compute accuracy dominates pure P8.
    {
        bool ok = true;
        std::ostringstream diag;
        for (const auto& bench : level1_benchmarks()) {
            const int hybrid = find(bench.id, "hybrid-p8-p16").exact_digits;
            const int pure = find(bench.id, "p8").exact_digits;
            if (hybrid < pure) {
                ok = false;
                diag << "  " << bench.id << ": hybrid " << hybrid << " < p8 "
                     << pure << "\n";
            }
        }
        report(9, ok, "hybrid p8-store/p16-compute digits >= pure p8",
               diag.str());
    }
}

// 8. Level-two decision equivalence.
void criterion8() {
    IrisData iris;
    try {
        iris = load_iris_csv(std::string(POSIT_TEST_DATA_DIR) + "/iris.csv");
    } catch (const std::exception& e) {
        report(8, false, "level-two decision equivalence",
               std::string("  ") + e.what() + "\n");
        return;
    }
    const auto runs = run_level2({"f32", "p8", "p16", "p32"}, iris, {});
    const auto get = [&](const std::string& name) -> const Level2Run& {
        for (const auto& r : runs)
            if (r.backend == name) return r;
        throw std::logic_error("missing run");
    };
    const Level2Result& ref = get("f32").result;

    bool ok = true;
    std::ostringstream diag;
    for (const char* be : {"p16", "p32"}) {
        const Level2Result& r = get(be).result;
        if (!same_decisions(r, ref)) {
            ok = false;
            diag << "  " << be << " decisions differ from f32 (km/knn/nb/ct)\n";
        }
    }
    // p32 regression coefficients match f32 to 4 significant digits
    const auto& c32 = get("p32").result.lr_coefficients;
    for (int i = 0; i < 4; ++i) {
        const double rel = std::fabs(c32[i] - ref.lr_coefficients[i]) /
                           std::fabs(ref.lr_coefficients[i]);
        if (rel > 5e-4) {
            ok = false;
            diag << "  p32 lr[" << i << "] = " << c32[i] << " vs f32 "
                 << ref.lr_coefficients[i] << " (rel " << rel << ")\n";
        }
    }
    // p8 must get something wrong
    {
        const Level2Result& p8r = get("p8").result;
        bool differs = !same_decisions(p8r, ref);
        for (int i = 0; i < 4 && !differs; ++i)
            differs = std::fabs(p8r.lr_coefficients[i] -
                                ref.lr_coefficients[i]) >
                      5e-4 * std::fabs(ref.lr_coefficients[i]);
        if (!differs) {
            ok = false;
            diag << "  p8 unexpectedly reproduced every reference decision\n";
        }
    }
    report(8, ok,
           "level-two decisions: p16/p32 match f32, p32 LR to 4 digits, p8 differs",
           diag.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criteria_5_6_7_9();
    criterion8();
    std::printf(
        "NOTE criterion 10: cycle counts, FPGA utilization, power, NPB and "
        "CNN runs are excluded by design; the suites above substitute.\n");
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
