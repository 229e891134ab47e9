#include "posit/bench/level1.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace posit::bench {

namespace {

constexpr const char* kPi = "3.14159265358979323846264338327950288419717";
constexpr const char* kE = "2.71828182845904523536028747135266249775725";
constexpr const char* kSin1 = "0.841470984807896506652502321630298999622563";

}  // namespace

Scalar pi_leibniz(ScalarBackend& be, long iterations) {
    const Scalar four = be.parse("4");
    const Scalar two = be.parse("2");
    Scalar acc = be.parse("0");
    Scalar d = be.parse("1");
    for (long i = 1; i < iterations; ++i) {
        const Scalar term = be.div(four, d);
        acc = (i % 2 == 1) ? be.add(acc, term) : be.sub(acc, term);
        d = be.add(d, two);
        acc = be.sync(acc);
        d = be.sync(d);
    }
    return acc;
}

Scalar pi_nilakantha(ScalarBackend& be, long iterations) {
    const Scalar four = be.parse("4");
    const Scalar two = be.parse("2");
    const Scalar one = be.parse("1");
    Scalar acc = be.parse("3");
    Scalar m = two;
    for (long i = 0; i < iterations; ++i) {
        const Scalar m1 = be.add(m, one);
        const Scalar m2 = be.add(m1, one);
        const Scalar prod = be.mul(be.mul(m, m1), m2);
        const Scalar term = be.div(four, prod);
        acc = (i % 2 == 0) ? be.add(acc, term) : be.sub(acc, term);
        m = be.add(m, two);
        acc = be.sync(acc);
        m = be.sync(m);
    }
    return acc;
}

Scalar euler_e(ScalarBackend& be, long iterations) {
    const Scalar one = be.parse("1");
    const Scalar two = be.parse("2");
    Scalar e = two;
    Scalar k = two;
    Scalar fact = one;
    for (long i = 2; i < iterations; ++i) {
        fact = be.div(fact, k);
        k = be.add(k, one);
        e = be.add(e, fact);
        fact = be.sync(fact);
        k = be.sync(k);
        e = be.sync(e);
    }
    return e;
}

Scalar sin_one(ScalarBackend& be, long iterations) {
    const Scalar one = be.parse("1");
    const Scalar two = be.parse("2");
    const Scalar x = one;
    Scalar sum = x;
    Scalar fact = one;
    Scalar m = one;
    for (long j = 1; j <= iterations; ++j) {
        const Scalar c1 = be.add(m, one);
        const Scalar c2 = be.add(c1, one);
        fact = be.mul(fact, be.mul(c1, c2));
        const Scalar term = be.div(x, fact);
        sum = (j % 2 == 1) ? be.sub(sum, term) : be.add(sum, term);
        m = be.add(m, two);
        sum = be.sync(sum);
        fact = be.sync(fact);
        m = be.sync(m);
    }
    return sum;
}

const std::vector<Level1Benchmark>& level1_benchmarks() {
    static const std::vector<Level1Benchmark> b = {
        {"pi-leibniz", pi_leibniz, 2000000, kPi},
        {"pi-nilakantha", pi_nilakantha, 200, kPi},
        {"euler", euler_e, 20, kE},
        {"sin1", sin_one, 10, kSin1},
    };
    return b;
}

const Level1Benchmark& level1_benchmark(std::string_view id) {
    for (const auto& b : level1_benchmarks())
        if (id == b.id) return b;
    throw std::invalid_argument("unknown benchmark: " + std::string(id));
}

int exact_fraction_digits(std::string_view computed, std::string_view reference) {
    const auto split = [](std::string_view s) {
        std::size_t dot = s.find('.');
        if (dot == std::string_view::npos) return std::pair(s, std::string_view{});
        return std::pair(s.substr(0, dot), s.substr(dot + 1));
    };
    auto [ci, cf] = split(computed);
    auto [ri, rf] = split(reference);
    if (ci != ri) return 0;
    int n = 0;
    for (std::size_t i = 0; i < cf.size() && i < rf.size(); ++i) {
        if (cf[i] != rf[i]) break;
        ++n;
    }
    return n;
}

std::string render_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string render_value(double v) { return render_fixed(v, 15); }

const std::vector<Level1Expectation>& level1_expected() {
    static const std::vector<Level1Expectation> t = {
        {"pi-leibniz", "f32", 5, "3.14159"},
        {"pi-leibniz", "p8", 0, "3.5"},
        {"pi-leibniz", "p16", 2, "3.14"},
        {"pi-leibniz", "p32", 5, "3.14159"},
        {"pi-nilakantha", "f32", 6, "3.1415929"},
        {"pi-nilakantha", "p8", 1, "3.125"},
        {"pi-nilakantha", "p16", 3, "3.141"},
        {"pi-nilakantha", "p32", 6, "3.1415922"},
        {"euler", "f32", 6, "2.7182819"},
        {"euler", "p8", 0, "2.625"},
        {"euler", "p16", 3, "2.718"},
        {"euler", "p32", 6, "2.7182817"},
        {"sin1", "f32", 7, "0.8414709"},
        {"sin1", "p8", 0, "0.78"},
        {"sin1", "p16", 3, "0.8413"},
        {"sin1", "p32", 8, "0.84147098"},
    };
    return t;
}

}  // namespace posit::bench
