#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "posit/codec.hpp"

namespace posit {

// Exact conversion; requires ps <= 32 so every value fits a binary64
// (at most 27 fraction bits and |exponent| <= 240). NaR maps to a quiet
// NaN, zero to +0. Throws std::domain_error for wider formats.
double posit_to_binary64(const PositConfig& cfg, PositBits p);

// Nearest-even narrowing of the exact value.
float posit_to_binary32(const PositConfig& cfg, PositBits p);

// NaN and infinities map to NaR, signed zeros to 0. Finite values round
// nearest-even and saturate at min_pos/max_pos (never to 0 or NaR).
PositBits binary64_to_posit(const PositConfig& cfg, double x);
PositBits binary32_to_posit(const PositConfig& cfg, float x);

// Decode in src, re-encode in dst. Widening P8 -> P16 -> P32 is exact.
PositBits resize_posit(const PositConfig& src, const PositConfig& dst,
                       PositBits p);

// Nearest-even integer conversion, clamped to the int64 range.
// Throws std::domain_error on NaR.
std::int64_t posit_to_int(const PositConfig& cfg, PositBits p);

PositBits int_to_posit(const PositConfig& cfg, std::int64_t i);

// Decimal/scientific text to the correctly rounded pattern, through an
// exact decimal-to-rational step. Accepts "nar" for the NaR pattern.
// Throws std::invalid_argument on malformed text.
PositBits parse_decimal(const PositConfig& cfg, std::string_view text);

// Renders the exact binary64 value with `digits` significant digits
// ("nar" for NaR). Requires ps <= 32.
std::string format_decimal(const PositConfig& cfg, PositBits p, int digits);

}  // namespace posit
