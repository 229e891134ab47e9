#include <doctest.h>

#include <cmath>

#include "posit/bench/level1.hpp"
#include "posit/bench/level2.hpp"
#include "posit/bench/report.hpp"

using namespace posit;
using namespace posit::bench;

namespace {

const char* kDataDir = POSIT_TEST_DATA_DIR;

// Records the op kinds a kernel performs, for the backend-opacity check.
class TraceBackend : public ScalarBackend {
  public:
    TraceBackend(ScalarBackend& inner, std::string& trace)
        : inner_(inner), trace_(trace) {}
    std::string name() const override { return inner_.name(); }
    Scalar from_int(std::int64_t i) override { trace_ += 'i'; return inner_.from_int(i); }
    Scalar parse(std::string_view t) override { trace_ += 'p'; return inner_.parse(t); }
    Scalar add(Scalar a, Scalar b) override { trace_ += '+'; return inner_.add(a, b); }
    Scalar sub(Scalar a, Scalar b) override { trace_ += '-'; return inner_.sub(a, b); }
    Scalar mul(Scalar a, Scalar b) override { trace_ += '*'; return inner_.mul(a, b); }
    Scalar div(Scalar a, Scalar b) override { trace_ += '/'; return inner_.div(a, b); }
    Scalar sqrt(Scalar a) override { trace_ += 'q'; return inner_.sqrt(a); }
    std::int64_t to_int(Scalar a) override { trace_ += 'I'; return inner_.to_int(a); }
    Ordering compare(Scalar a, Scalar b) override { trace_ += 'c'; return inner_.compare(a, b); }
    double to_binary64(Scalar a) const override { return inner_.to_binary64(a); }
    Scalar sync(Scalar a) override { trace_ += 's'; return inner_.sync(a); }

  private:
    ScalarBackend& inner_;
    std::string& trace_;
};

}  // namespace

TEST_CASE("exact fraction digit counting") {
    const char* pi = "3.14159265358979323846";
    const char* e = "2.71828182845904523536";
    CHECK(exact_fraction_digits("3.1415922", pi) == 6);
    CHECK(exact_fraction_digits("3.5", pi) == 0);
    CHECK(exact_fraction_digits("2.7182818284", e) == 10);
    CHECK(exact_fraction_digits("4.1415926", pi) == 0);  // integer part differs
    CHECK(exact_fraction_digits("3", pi) == 0);
    CHECK(exact_fraction_digits("3.14159265358979323846", pi) == 20);
}

TEST_CASE("truncated rendering cuts instead of rounding") {
    CHECK(render_truncated(3.1415960789, 5) == "3.14159");
    CHECK(render_truncated(3.1415929794, 7) == "3.1415929");
    CHECK(render_truncated(2.625, 3) == "2.625");
    CHECK(render_truncated(2.71875, 3) == "2.718");
    CHECK(render_truncated(0.8414709568, 7) == "0.8414709");
}

TEST_CASE("binary32 backend gives the reference euler value") {
    auto be = make_backend("f32");
    const Scalar r = euler_e(*be, 20);
    const double v = be->to_binary64(r);
    // reproduce with plain float arithmetic
    float e = 2, k = 2, fact = 1;
    for (int i = 2; i < 20; ++i) {
        fact = fact / k;
        k = k + 1.0f;
        e = e + fact;
    }
    CHECK(v == double(e));
    CHECK(exact_fraction_digits(render_value(v),
                                level1_benchmark("euler").reference) == 6);
}

TEST_CASE("posit backends are deterministic") {
    auto a = make_backend("p16");
    auto b = make_backend("p16");
    CHECK(pi_nilakantha(*a, 200).bits == pi_nilakantha(*b, 200).bits);
    CHECK(euler_e(*a, 20).bits == euler_e(*b, 20).bits);
}

TEST_CASE("range tracking excludes zero and splits at one") {
    RangeStats stats;
    stats.observe(0.0);
    CHECK_FALSE(stats.seen_01);
    stats.observe(-0.25);
    stats.observe(4.0);
    stats.observe(1.0);  // belongs to both intervals
    CHECK(stats.min_01 == 0.25);
    CHECK(stats.max_1inf == 4.0);
    stats.observe(std::nan(""));
    CHECK(stats.min_01 == 0.25);

    auto be = make_backend("f32");
    RangeStats r;
    RangeTrackingBackend tracked(*be, r);
    (void)euler_e(tracked, 20);
    CHECK(r.max_1inf == 20.0);
    CHECK(r.min_01 == doctest::Approx(8.22064e-18).epsilon(0.01));
}

TEST_CASE("kernels execute the identical op sequence on every backend") {
    for (const auto& bench : level1_benchmarks()) {
        std::string t32, tp, th;
        {
            auto be = make_backend("f32");
            TraceBackend traced(*be, t32);
            (void)bench.run(traced, 25);
        }
        {
            auto be = make_backend("p16");
            TraceBackend traced(*be, tp);
            (void)bench.run(traced, 25);
        }
        {
            auto be = make_backend("hybrid-p8-p16");
            TraceBackend traced(*be, th);
            (void)bench.run(traced, 25);
        }
        REQUIRE(t32 == tp);
        REQUIRE(t32 == th);
    }
}

TEST_CASE("converting backend funnels values through binary32") {
    auto direct = make_backend("p32");
    auto conv = make_backend("p32-converting");
    // a value with more posit fraction bits than a float significand
    const Scalar x = direct->parse("2.718281828459045");
    const Scalar y = conv->sync(conv->parse("2.718281828459045"));
    CHECK(direct->to_binary64(x) != conv->to_binary64(y));
    CHECK(conv->to_binary64(y) == double(float(direct->to_binary64(x))));
    // exact values survive unchanged
    CHECK(conv->sync(conv->parse("2")).bits == conv->parse("2").bits);
}

TEST_CASE("hybrid backend stores narrow and computes wide") {
    HybridBackend hy(P8, P16);
    // 1/3 in P16 then narrowed to P8 differs from pure P8 division only in
    // the compute step; storage stays 8-bit
    const Scalar third = hy.div(hy.parse("1"), hy.parse("3"));
    auto p8 = make_backend("p8");
    const Scalar third8 = p8->div(p8->parse("1"), p8->parse("3"));
    CHECK(hy.to_binary64(third) == p8->to_binary64(third8));
    CHECK(hy.name() == "hybrid-p8-p16");
}

TEST_CASE("make_backend rejects unknown specs") {
    CHECK_THROWS_AS((void)make_backend("p24"), std::invalid_argument);
    CHECK_THROWS_AS((void)make_backend(""), std::invalid_argument);
}

TEST_CASE("level two: deterministic and reference-consistent") {
    const IrisData iris = load_iris_csv(std::string(kDataDir) + "/iris.csv");
    REQUIRE(iris.size() == 150);
    REQUIRE(iris.classes.size() == 3);
    REQUIRE(iris.labels[0] == 0);
    REQUIRE(iris.labels[50] == 1);
    REQUIRE(iris.labels[100] == 2);

    Level2Options opt;
    opt.mm_n = 24;  // keep the unit suite quick; the full size runs in acceptance
    auto f32a = make_backend("f32");
    auto f32b = make_backend("f32");
    const Level2Result ra = level_two_suite(*f32a, iris, opt);
    const Level2Result rb = level_two_suite(*f32b, iris, opt);
    CHECK(same_decisions(ra, rb));
    CHECK(ra.mm_checksum == rb.mm_checksum);
    CHECK(ra.km_assignments.size() == 150);
    CHECK(ra.knn_predictions.size() == 150);
    CHECK(ra.nb_predictions.size() == 150);
    CHECK(ra.ct_predictions.size() == 150);
    for (double c : ra.lr_coefficients) CHECK(std::isfinite(c));

    // the kernels should classify iris decently; this guards against a
    // degenerate implementation, not against rounding
    int knn_ok = 0, nb_ok = 0, ct_ok = 0;
    for (std::size_t i = 0; i < iris.size(); ++i) {
        knn_ok += ra.knn_predictions[i] == iris.labels[i];
        nb_ok += ra.nb_predictions[i] == iris.labels[i];
        ct_ok += ra.ct_predictions[i] == iris.labels[i];
    }
    CHECK(knn_ok > 135);
    CHECK(nb_ok > 135);
    CHECK(ct_ok > 135);
}

TEST_CASE("exp_scalar approximates exp on the f32 backend") {
    auto be = make_backend("f32");
    for (double x : {-20.0, -3.5, -1.0, 0.0, 0.5, 3.0, 10.0}) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        const double got = be->to_binary64(exp_scalar(*be, be->parse(buf)));
        CHECK(got == doctest::Approx(std::exp(x)).epsilon(1e-5));
    }
}
