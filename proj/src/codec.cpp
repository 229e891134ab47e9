#include "posit/codec.hpp"

#include <algorithm>
#include <bit>

namespace posit {

namespace {

// Mask of the low n bits of a Wide, safe for n >= 256.
Wide low_mask(int n) {
    if (n <= 0) return 0;
    if (n >= 256) return ~Wide(0);
    return (Wide(1) << n) - 1;
}

bool any_low_bits(const Wide& v, int n) {
    return n > 0 && (v & low_mask(n)) != 0;
}

}  // namespace

UnpackedPosit decode(const PositConfig& cfg, PositBits bp) {
    const int ps = cfg.ps, es = cfg.es;
    bp &= cfg.mask();
    UnpackedPosit u;
    u.s = (bp & cfg.sign_bit()) != 0;
    if ((bp & (cfg.mask() >> 1)) == 0) {
        // all non-sign bits zero: 0 or NaR
        u.sn = true;
        return u;
    }
    PositBits m = u.s ? negate_pattern(cfg, bp) : bp;

    // Regime: run of identical bits starting below the sign. Left-align the
    // ps-1 payload bits so the run length falls out of a count-leading scan;
    // the zero padding terminates an all-ones run at exactly ps-1.
    const bool r_i = (m >> (ps - 2)) & 1;
    const std::uint64_t aligned = m << (64 - (ps - 1));
    const int rn = r_i ? std::countl_one(aligned) : std::countl_zero(aligned);
    u.k = r_i ? rn - 1 : -rn;
    u.rs = rn + 1;

    u.ers = std::max(0, std::min(es, ps - u.rs - 1));
    if (u.ers > 0) {
        std::uint64_t ebits = (m >> (ps - 1 - u.rs - u.ers)) & ((1ull << u.ers) - 1);
        // a truncated exponent keeps its high bits
        u.e = ebits << (es - u.ers);
    }

    const int frs = std::max(0, ps - u.rs - es - 1);
    u.fs = frs;
    const std::uint64_t fbits = frs > 0 ? (m & ((1ull << frs) - 1)) : 0;
    u.f = Wide(fbits) | (Wide(1) << frs);  // hidden bit
    u.bm = false;
    return u;
}

UnpackedPosit canonicalize(const PositConfig& cfg, const UnpackedPosit& u) {
    if (u.sn) return u;
    if (u.f == 0)
        throw std::domain_error(
            "canonicalize: zero fraction (map exact zeros to the special zero first)");

    UnpackedPosit r = u;
    Int128 total = total_exponent(cfg, u);

    const int hi = static_cast<int>(boost::multiprecision::msb(r.f));
    if (hi > r.fs) {
        // carry: widen the fraction size instead of shifting bits out, so
        // no value bit is demoted below the rounding guard
        total += hi - r.fs;
        r.fs = hi;
    } else if (hi < r.fs) {
        const int shift = r.fs - hi;
        r.f <<= shift;
        total -= shift;
    }

    // fold the exponent into 0 <= e < 2^es
    const Int128 e = total & ((Int128(1) << cfg.es) - 1);
    r.e = static_cast<std::uint64_t>(e);
    r.k = static_cast<std::int32_t>((total - e) >> cfg.es);
    r.rs = 0;
    r.ers = 0;
    return r;
}

PositBits encode(const PositConfig& cfg, const UnpackedPosit& raw) {
    const int ps = cfg.ps, es = cfg.es;
    if (raw.sn) return raw.s ? cfg.sign_bit() : 0;

    UnpackedPosit u = raw;
    // Oversized working fractions (a resize from a wider format) will not fit
    // the 3*ps alignment buffer; fold the excess into the sticky bit.
    if (u.fs > 2 * ps - 2) {
        const int shift = u.fs - (2 * ps - 2);
        if (any_low_bits(u.f, shift)) u.bm = true;
        u.f >>= shift;
        u.fs = 2 * ps - 2;
    }
    u = canonicalize(cfg, u);

    PositBits bp;
    if (u.k >= ps - 2) {
        bp = cfg.sign_bit() - 1;  // maxvalue
    } else if (u.k < -(ps - 2)) {
        bp = 1;  // minvalue
    } else {
        int rn;
        PositBits regimebits;
        if (u.k >= 0) {
            rn = u.k + 1;
            regimebits = ((PositBits{1} << rn) - 1) << 1;
        } else {
            rn = -u.k;
            regimebits = 1;
        }
        const int rs = rn + 1;
        const int nrs = std::max(0, ps - rs - 1);
        regimebits <<= nrs;

        // 3*ps-bit alignment buffer: hidden bit at 2*ps, exponent above it,
        // then everything shifted so the exponent MSB sits at bit 3*ps - 1.
        const Wide frac = u.f << (2 * ps - u.fs);
        Wide other = (Wide(u.e) << (2 * ps)) | (frac & low_mask(2 * ps));
        other <<= (ps - es);

        const Wide top = other >> (2 * ps);  // ps payload bits
        bp = regimebits |
             static_cast<PositBits>(top >> (ps - nrs));

        // round to nearest, ties to even: guard is the first dropped bit,
        // everything below it ORs into the sticky
        const int guard_pos = ps - nrs - 1;
        const bool guard = boost::multiprecision::bit_test(top, guard_pos);
        const bool sticky =
            u.bm || any_low_bits(top, guard_pos) || any_low_bits(other, 2 * ps);
        if (guard && (sticky || (bp & 1))) ++bp;
    }

    if (u.s) bp = negate_pattern(cfg, bp);
    return bp;
}

}  // namespace posit
