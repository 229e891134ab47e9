#include "posit/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace posit::oracle {

ExactNumber ExactNumber::operator+(const ExactNumber& o) const {
    if (nar_ || o.nar_) return nar();
    return ExactNumber(value_ + o.value_);
}

ExactNumber ExactNumber::operator-(const ExactNumber& o) const {
    if (nar_ || o.nar_) return nar();
    return ExactNumber(value_ - o.value_);
}

ExactNumber ExactNumber::operator*(const ExactNumber& o) const {
    if (nar_ || o.nar_) return nar();
    return ExactNumber(value_ * o.value_);
}

ExactNumber ExactNumber::operator/(const ExactNumber& o) const {
    if (nar_ || o.nar_ || o.value_ == 0) return nar();
    return ExactNumber(value_ / o.value_);
}

ExactNumber ExactNumber::operator-() const {
    if (nar_) return nar();
    return ExactNumber(-value_);
}

namespace {

// Value of a positive non-special pattern of an arbitrary-width format.
// `mag` carries the ps-1 bits below the sign. Widths beyond 64 bits appear
// when the rounding cut of a 64-bit format is evaluated.
Rational positive_value(int ps, int es, const BigInt& mag) {
    int idx = ps - 2;
    const bool run_bit = boost::multiprecision::bit_test(mag, idx);
    int rn = 0;
    while (idx >= 0 && boost::multiprecision::bit_test(mag, idx) == run_bit) {
        ++rn;
        --idx;
    }
    if (idx >= 0) --idx;  // terminating regime bit, if present
    const long k = run_bit ? rn - 1 : -rn;

    // exponent bits keep their weight when cut off by the end of the word
    std::int64_t e = 0;
    int got = 0;
    while (got < es && idx >= 0) {
        e = (e << 1) | (boost::multiprecision::bit_test(mag, idx) ? 1 : 0);
        ++got;
        --idx;
    }
    e <<= (es - got);

    const int frs = idx + 1;
    BigInt frac = 0;
    if (frs > 0) frac = mag & ((BigInt(1) << frs) - 1);
    const BigInt num = (BigInt(1) << frs) + frac;

    const Int128 total = (Int128(k) << es) + e;
    const Int128 shift = total - frs;
    if (shift >= 0) return Rational(num << static_cast<long>(shift));
    return Rational(num, BigInt(1) << static_cast<long>(-shift));
}

// Cached per-format value tables make the exhaustive suites tractable.
struct ValueTable {
    std::vector<Rational> values;  // positive patterns 1 .. 2^(ps-1)-1
    std::vector<Rational> halves;  // rounding cuts between n and n+1
};

const ValueTable* table_for(const PositConfig& cfg) {
    if (cfg.ps > 16) return nullptr;
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<ValueTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{cfg.ps, cfg.es}];
    if (!slot) {
        auto t = std::make_unique<ValueTable>();
        const PositBits top = cfg.sign_bit();
        t->values.resize(top);
        t->halves.resize(top);
        for (PositBits n = 1; n < top; ++n)
            t->values[n] = positive_value(cfg.ps, cfg.es, BigInt(n));
        for (PositBits n = 1; n + 1 < top; ++n)
            t->halves[n] =
                positive_value(cfg.ps + 1, cfg.es, BigInt(n) * 2 + 1);
        slot = std::move(t);
    }
    return slot.get();
}

Rational pattern_value(const PositConfig& cfg, PositBits n,
                       const ValueTable* t) {
    if (t) return t->values[n];
    return positive_value(cfg.ps, cfg.es, BigInt(n));
}

Rational cut_value(const PositConfig& cfg, PositBits n, const ValueTable* t) {
    if (t) return t->halves[n];
    return positive_value(cfg.ps + 1, cfg.es, BigInt(n) * 2 + 1);
}

// Largest positive pattern whose value (or squared value) does not exceed x.
template <typename LessEq>
PositBits bisect_floor(PositBits lo, PositBits hi, const LessEq& leq) {
    while (lo < hi) {
        const PositBits mid = lo + (hi - lo + 1) / 2;
        if (leq(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

PositBits round_positive(const PositConfig& cfg, const Rational& x) {
    const PositConstants cs = constants(cfg);
    const ValueTable* t = table_for(cfg);
    if (x >= pattern_value(cfg, cs.max_pos, t)) return cs.max_pos;
    if (x <= pattern_value(cfg, cs.min_pos, t)) return cs.min_pos;

    const PositBits n = bisect_floor(cs.min_pos, cs.max_pos, [&](PositBits m) {
        return pattern_value(cfg, m, t) <= x;
    });
    if (pattern_value(cfg, n, t) == x) return n;
    const Rational cut = cut_value(cfg, n, t);
    if (x < cut) return n;
    if (x > cut) return n + 1;
    return (n & 1) ? n + 1 : n;  // tie: even final bit
}

}  // namespace

ExactNumber exact_value(const PositConfig& cfg, PositBits p) {
    p &= cfg.mask();
    if (p == 0) return ExactNumber{};
    if (is_nar_pattern(cfg, p)) return ExactNumber::nar();
    const bool negative = (p & cfg.sign_bit()) != 0;
    const PositBits mag = negative ? negate_pattern(cfg, p) : p;
    Rational v = positive_value(cfg.ps, cfg.es, BigInt(mag));
    if (negative) v = -v;
    return ExactNumber(std::move(v));
}

PositBits round_to_posit(const PositConfig& cfg, const ExactNumber& x) {
    if (x.is_nar()) return cfg.sign_bit();
    if (x.value() == 0) return 0;
    const bool negative = x.value() < 0;
    const Rational a = negative ? Rational(-x.value()) : x.value();
    const PositBits n = round_positive(cfg, a);
    return negative ? negate_pattern(cfg, n) : n;
}

PositBits round_sqrt_to_posit(const PositConfig& cfg, const Rational& x) {
    if (x < 0) return cfg.sign_bit();
    if (x == 0) return 0;
    const PositConstants cs = constants(cfg);
    const ValueTable* t = table_for(cfg);

    auto sq = [](const Rational& v) { return v * v; };
    if (x >= sq(pattern_value(cfg, cs.max_pos, t))) return cs.max_pos;
    if (x <= sq(pattern_value(cfg, cs.min_pos, t))) return cs.min_pos;

    const PositBits n = bisect_floor(cs.min_pos, cs.max_pos, [&](PositBits m) {
        return sq(pattern_value(cfg, m, t)) <= x;
    });
    if (sq(pattern_value(cfg, n, t)) == x) return n;
    const Rational cut2 = sq(cut_value(cfg, n, t));
    if (x < cut2) return n;
    if (x > cut2) return n + 1;
    return (n & 1) ? n + 1 : n;  // root is exactly on the cut
}

PositBits ref_op(const PositConfig& cfg, ArithOp op, PositBits a, PositBits b) {
    const PositBits nar = cfg.sign_bit();
    const bool a_nar = is_nar_pattern(cfg, a);
    const bool b_nar = is_nar_pattern(cfg, b);

    switch (op) {
        case ArithOp::Add:
        case ArithOp::Sub: {
            if (a_nar || b_nar) return nar;
            const ExactNumber va = exact_value(cfg, a);
            const ExactNumber vb = exact_value(cfg, b);
            return round_to_posit(cfg, op == ArithOp::Add ? va + vb : va - vb);
        }
        case ArithOp::Mul: {
            if (a_nar || b_nar) return nar;  // NaR wins over zero
            return round_to_posit(cfg, exact_value(cfg, a) * exact_value(cfg, b));
        }
        case ArithOp::Div: {
            if (a_nar || b_nar) return nar;
            if (b == 0) return nar;
            if (a == 0) return 0;
            return round_to_posit(cfg, exact_value(cfg, a) / exact_value(cfg, b));
        }
        case ArithOp::Sqrt: {
            if (a_nar) return nar;
            if (a == 0) return 0;
            if (a & cfg.sign_bit()) return nar;  // negative
            return round_sqrt_to_posit(cfg, exact_value(cfg, a).value());
        }
    }
    throw std::logic_error("unreachable");
}

std::string MismatchReport::to_text() const {
    std::ostringstream out;
    for (const Mismatch& m : mismatches) {
        out << op_name(op) << ' ' << cfg.name() << ' ' << to_hex(cfg, m.a)
            << ' '
            << (op == ArithOp::Sqrt ? std::string("-") : to_hex(cfg, m.b))
            << ' ' << to_hex(cfg, m.got) << ' ' << to_hex(cfg, m.want)
            << '\n';
    }
    return out.str();
}

MismatchReport exhaustive_check(const PositConfig& cfg, ArithOp op,
                                const ImplFn& impl) {
    if (cfg.ps > 16)
        throw std::invalid_argument(
            "exhaustive mode requires ps <= 16; use sampled_check");
    MismatchReport report{cfg, op};
    const PositBits count = PositBits{1} << cfg.ps;
    if (op == ArithOp::Sqrt) {
        for (PositBits a = 0; a < count; ++a) {
            const PositBits got = impl(cfg, op, a, 0);
            const PositBits want = ref_op(cfg, op, a, 0);
            ++report.checked;
            if (got != want) report.mismatches.push_back({a, 0, got, want});
        }
        return report;
    }
    for (PositBits a = 0; a < count; ++a) {
        for (PositBits b = 0; b < count; ++b) {
            const PositBits got = impl(cfg, op, a, b);
            const PositBits want = ref_op(cfg, op, a, b);
            ++report.checked;
            if (got != want) report.mismatches.push_back({a, b, got, want});
        }
    }
    return report;
}

MismatchReport sampled_check(const PositConfig& cfg, ArithOp op,
                             const ImplFn& impl, std::uint64_t samples,
                             std::uint64_t seed) {
    MismatchReport report{cfg, op};
    std::mt19937_64 rng(seed);
    const PositBits mask = cfg.mask();
    for (std::uint64_t i = 0; i < samples; ++i) {
        const PositBits a = rng() & mask;
        const PositBits b = op == ArithOp::Sqrt ? 0 : (rng() & mask);
        const PositBits got = impl(cfg, op, a, b);
        const PositBits want = ref_op(cfg, op, a, b);
        ++report.checked;
        if (got != want) report.mismatches.push_back({a, b, got, want});
    }
    return report;
}

}  // namespace posit::oracle
