#include "posit/convert.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

#include "posit/oracle.hpp"

namespace posit {

namespace {

// Builds a canonical unpacked value f/2^fs * 2^total (f already normalized:
// 2^fs <= f < 2^(fs+1)), folding the exponent into regime and exponent
// fields.
UnpackedPosit unpacked_from_total(const PositConfig& cfg, bool sign,
                                  Int128 total, Wide f, int fs) {
    UnpackedPosit u;
    u.s = sign;
    u.f = std::move(f);
    u.fs = fs;
    const Int128 e = total & ((Int128(1) << cfg.es) - 1);
    u.e = static_cast<std::uint64_t>(e);
    u.k = static_cast<std::int32_t>((total - e) >> cfg.es);
    return u;
}

void require_binary64_exact(const PositConfig& cfg) {
    if (cfg.ps > 32)
        throw std::domain_error(
            "binary64 cannot hold every " + cfg.name() +
            " value exactly; conversions support ps <= 32 only");
}

}  // namespace

double posit_to_binary64(const PositConfig& cfg, PositBits p) {
    require_binary64_exact(cfg);
    const UnpackedPosit u = decode(cfg, p);
    if (u.sn) {
        if (u.s) return std::numeric_limits<double>::quiet_NaN();
        return 0.0;
    }
    const auto frac = static_cast<double>(static_cast<std::uint64_t>(u.f));
    const int exp = static_cast<int>(total_exponent(cfg, u)) - u.fs;
    const double mag = std::ldexp(frac, exp);
    return u.s ? -mag : mag;
}

float posit_to_binary32(const PositConfig& cfg, PositBits p) {
    return static_cast<float>(posit_to_binary64(cfg, p));
}

PositBits binary64_to_posit(const PositConfig& cfg, double x) {
    if (std::isnan(x) || std::isinf(x)) return cfg.sign_bit();
    if (x == 0.0) return 0;
    int exp;
    const double m = std::frexp(std::fabs(x), &exp);  // m in [0.5, 1)
    const auto sig = static_cast<std::uint64_t>(std::ldexp(m, 53));
    return encode(cfg, unpacked_from_total(cfg, x < 0, Int128(exp) - 1,
                                           Wide(sig), 52));
}

PositBits binary32_to_posit(const PositConfig& cfg, float x) {
    return binary64_to_posit(cfg, static_cast<double>(x));
}

PositBits resize_posit(const PositConfig& src, const PositConfig& dst,
                       PositBits p) {
    const UnpackedPosit u = decode(src, p);
    if (u.sn) return u.s ? dst.sign_bit() : 0;
    return encode(dst, unpacked_from_total(dst, u.s, total_exponent(src, u),
                                           u.f, u.fs));
}

std::int64_t posit_to_int(const PositConfig& cfg, PositBits p) {
    if (is_nar_pattern(cfg, p))
        throw std::domain_error("cannot convert NaR to integer");
    const UnpackedPosit u = decode(cfg, p);
    if (u.sn) return 0;

    const Int128 shift = total_exponent(cfg, u) - u.fs;
    Wide mag;
    if (shift >= 0) {
        if (shift + u.fs >= 64)  // beyond the int64 range either way
            return u.s ? std::numeric_limits<std::int64_t>::min()
                       : std::numeric_limits<std::int64_t>::max();
        mag = u.f << static_cast<int>(shift);
    } else {
        const Int128 down = -shift;
        if (down > u.fs + 1) {
            mag = 0;  // |value| < 1/2
        } else {
            const int d = static_cast<int>(down);
            mag = u.f >> d;
            const bool guard = boost::multiprecision::bit_test(u.f, d - 1);
            const bool sticky =
                d > 1 && (u.f & ((Wide(1) << (d - 1)) - 1)) != 0;
            if (guard && (sticky || boost::multiprecision::bit_test(mag, 0)))
                ++mag;
        }
    }
    if (mag > Wide(std::numeric_limits<std::int64_t>::max()))
        return u.s ? std::numeric_limits<std::int64_t>::min()
                   : std::numeric_limits<std::int64_t>::max();
    const auto v = static_cast<std::int64_t>(static_cast<std::uint64_t>(mag));
    return u.s ? -v : v;
}

PositBits int_to_posit(const PositConfig& cfg, std::int64_t i) {
    if (i == 0) return 0;
    const bool negative = i < 0;
    const std::uint64_t mag =
        negative ? ~static_cast<std::uint64_t>(i) + 1
                 : static_cast<std::uint64_t>(i);
    const int hi = 63 - std::countl_zero(mag);
    return encode(cfg,
                  unpacked_from_total(cfg, negative, hi, Wide(mag), hi));
}

PositBits parse_decimal(const PositConfig& cfg, std::string_view text) {
    using oracle::BigInt;
    using oracle::Rational;

    std::size_t i = 0;
    const auto fail = [&]() -> PositBits {
        throw std::invalid_argument("malformed decimal: '" +
                                    std::string(text) + "'");
    };
    if (text.empty()) return fail();

    if (text == "nar" || text == "NaR" || text == "NAR")
        return cfg.sign_bit();

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }

    BigInt mantissa = 0;
    std::int64_t frac_digits = 0;
    bool any_digits = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digits = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            any_digits = true;
        }
    }
    if (!any_digits) return fail();

    std::int64_t exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        bool exp_digits = false;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            exp10 = exp10 * 10 + (text[i] - '0');
            if (exp10 > 100000) return fail();
            exp_digits = true;
        }
        if (!exp_digits) return fail();
        if (exp_neg) exp10 = -exp10;
    }
    if (i != text.size()) return fail();

    exp10 -= frac_digits;
    Rational value(mantissa);
    if (exp10 > 0) {
        value *= Rational(boost::multiprecision::pow(BigInt(10),
                                                     static_cast<unsigned>(exp10)));
    } else if (exp10 < 0) {
        value /= Rational(boost::multiprecision::pow(BigInt(10),
                                                     static_cast<unsigned>(-exp10)));
    }
    if (negative) value = -value;
    return oracle::round_to_posit(cfg, oracle::ExactNumber(std::move(value)));
}

std::string format_decimal(const PositConfig& cfg, PositBits p, int digits) {
    if (is_nar_pattern(cfg, p)) return "nar";
    const double v = posit_to_binary64(cfg, p);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace posit
