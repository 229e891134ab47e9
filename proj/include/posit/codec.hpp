#pragma once

#include "posit/format.hpp"

namespace posit {

// Internal representation of a posit. Decode produces the canonical form:
// 2^fs <= f < 2^(fs+1) (hidden bit included) and 0 <= e < 2^es. Arithmetic
// results are "raw": f and e may be out of those bounds until canonicalize
// restores them. When sn is set the number is 0 (s = 0) or NaR (s = 1) and
// every other field is meaningless.
struct UnpackedPosit {
    bool sn = false;       // special-number flag
    bool s = false;        // sign
    std::int32_t k = 0;    // regime value
    std::int32_t rs = 0;   // regime field size in bits (decode output only)
    std::uint64_t e = 0;   // exponent value
    std::int32_t ers = 0;  // exponent bits present in the pattern (decode only)
    Wide f = 0;            // fraction with hidden bit, f / 2^fs in [1, 2)
    std::int32_t fs = 0;   // fraction size in bits
    bool bm = false;       // sticky: a 1 was shifted/truncated past the fraction
};

inline UnpackedPosit unpacked_zero() { return UnpackedPosit{.sn = true, .s = false}; }
inline UnpackedPosit unpacked_nar() { return UnpackedPosit{.sn = true, .s = true}; }

// Total binary exponent k * 2^es + e.
inline Int128 total_exponent(const PositConfig& cfg, const UnpackedPosit& u) {
    return (Int128(u.k) << cfg.es) + Int128(u.e);
}

// Unpacks a bit pattern. Every ps-bit pattern decodes; the result is
// canonical with bm = 0.
UnpackedPosit decode(const PositConfig& cfg, PositBits bp);

// Restores the canonical bounds on a raw value, preserving it exactly except
// for low bits lost on a fraction right-shift, which OR into bm. Rejects
// f = 0 (exact zeros must be mapped to the special zero by the caller).
UnpackedPosit canonicalize(const PositConfig& cfg, const UnpackedPosit& u);

// Packs a value into a bit pattern, canonicalizing first, saturating at
// min_pos/max_pos and rounding to nearest with ties to the even pattern.
// Never returns the zero or NaR pattern for a nonzero finite input.
PositBits encode(const PositConfig& cfg, const UnpackedPosit& u);

}  // namespace posit
