#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace posit {

// A posit bit pattern. Only the low `ps` bits are significant; the word is
// interpreted as a ps-bit two's-complement integer.
using PositBits = std::uint64_t;

// Workspace integer for fractions. The codec uses a 3*ps-bit alignment
// buffer and the divider shifts a full-width fraction left by ps, so 256
// bits cover every format up to ps = 64 without truncation.
using Wide = boost::multiprecision::uint256_t;
using SWide = boost::multiprecision::int256_t;

// Total binary exponents (k * 2^es + e) can exceed 64 bits for large es.
using Int128 = __int128;

// Format descriptor: total width `ps` and maximum exponent field width `es`.
struct PositConfig {
    int ps;
    int es;

    PositConfig(int ps_, int es_) : ps(ps_), es(es_) {
        if (ps < 3 || ps > 64)
            throw std::invalid_argument("posit size must be in [3, 64], got " +
                                        std::to_string(ps));
        if (es < 0 || es > ps - 3)
            throw std::invalid_argument(
                "exponent size must be in [0, ps-3], got es=" +
                std::to_string(es) + " for ps=" + std::to_string(ps));
    }

    bool operator==(const PositConfig&) const = default;

    // Mask of the ps significant bits.
    PositBits mask() const {
        return ps == 64 ? ~PositBits{0} : (PositBits{1} << ps) - 1;
    }

    PositBits sign_bit() const { return PositBits{1} << (ps - 1); }

    std::string name() const {
        return "p" + std::to_string(ps) + "e" + std::to_string(es);
    }
};

inline const PositConfig P8{8, 1};
inline const PositConfig P16{16, 2};
inline const PositConfig P32{32, 3};

struct PositConstants {
    PositBits zero;
    PositBits nar;
    PositBits one;
    PositBits min_pos;
    PositBits max_pos;
};

inline PositConstants constants(const PositConfig& cfg) {
    return PositConstants{
        .zero = 0,
        .nar = cfg.sign_bit(),
        .one = PositBits{1} << (cfg.ps - 2),
        .min_pos = 1,
        .max_pos = cfg.sign_bit() - 1,
    };
}

inline bool is_zero_pattern(const PositConfig&, PositBits p) { return p == 0; }

inline bool is_nar_pattern(const PositConfig& cfg, PositBits p) {
    return p == cfg.sign_bit();
}

// Two's complement on ps bits.
inline PositBits negate_pattern(const PositConfig& cfg, PositBits p) {
    return (~p + 1) & cfg.mask();
}

// Sign-extend a ps-bit pattern to a signed 64-bit integer.
inline std::int64_t signed_pattern(const PositConfig& cfg, PositBits p) {
    if (cfg.ps == 64) return static_cast<std::int64_t>(p);
    std::uint64_t ext = (p & cfg.sign_bit()) ? (p | ~cfg.mask()) : p;
    return static_cast<std::int64_t>(ext);
}

// Hex serialization: zero-padded, ceil(ps/4) digits, no prefix.
std::string to_hex(const PositConfig& cfg, PositBits p);

// Parses a pattern in hex. Accepts an optional 0x/0X prefix; the digit count
// must be exactly ceil(ps/4). Throws std::invalid_argument otherwise.
PositBits parse_hex(const PositConfig& cfg, std::string_view text);

}  // namespace posit
