#include "posit/arith.hpp"

namespace posit {

namespace {

Wide low_mask(int n) {
    if (n <= 0) return 0;
    if (n >= 256) return ~Wide(0);
    return (Wide(1) << n) - 1;
}

// |a| < |b| for decoded operands. Zero counts as the smallest magnitude;
// NaR ordering does not matter because the adder returns NaR regardless.
bool magnitude_less(const PositConfig& cfg, const UnpackedPosit& a,
                    const UnpackedPosit& b) {
    if (a.sn) return !a.s && !b.sn;  // |0| < any nonzero
    if (b.sn) return false;
    const Int128 ta = total_exponent(cfg, a);
    const Int128 tb = total_exponent(cfg, b);
    if (ta != tb) return ta < tb;
    return (a.f << b.fs) < (b.f << a.fs);
}

UnpackedPosit add_sub(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b, int op) {
    const SelectedOperands sel = add_sub_select(cfg, a, b, op);
    const UnpackedPosit& p1 = sel.p1;
    const UnpackedPosit& p2 = sel.p2;

    if ((p1.sn && p1.s) || (p2.sn && p2.s)) return unpacked_nar();
    if (p2.sn && !p2.s) {
        // second operand is zero (a zero first operand implies both are)
        if (p1.sn) return unpacked_zero();
        UnpackedPosit r = p1;
        r.s = sel.sign;
        return r;
    }

    UnpackedPosit r;
    r.s = sel.sign;
    r.k = p1.k;
    r.e = p1.e;
    r.fs = 2 * cfg.ps - 4;

    const Int128 t = total_exponent(cfg, p1) - total_exponent(cfg, p2);
    const Wide a1 = p1.f << (r.fs - p1.fs);
    const Wide a2 = p2.f << (r.fs - p2.fs);
    Wide a2s = 0;
    bool sticky;
    if (t >= r.fs) {
        // aligned past the working word: only the sticky survives
        sticky = true;
    } else {
        const int ti = static_cast<int>(t);
        sticky = (a2 & low_mask(ti)) != 0;
        a2s = a2 >> ti;
    }

    if (sel.op == 0) {
        r.f = a1 + a2s;
    } else {
        r.f = a1 - a2s;
        if (r.f == 0) return unpacked_zero();  // exact cancellation
    }
    r.bm = sticky;
    return r;
}

}  // namespace

SelectedOperands add_sub_select(const PositConfig& cfg, const UnpackedPosit& p1,
                                const UnpackedPosit& p2, int op) {
    SelectedOperands sel{p1, p2, op, false};
    if (p1.s == p2.s) {
        sel.sign = p1.s;
    } else {
        // mixed signs flip the effective operation; the sign follows p1
        sel.op = 1 - op;
        sel.sign = p1.s;
    }
    if (magnitude_less(cfg, p1, p2)) {
        std::swap(sel.p1, sel.p2);
        if (sel.op == 1) sel.sign = !sel.sign;
    }
    return sel;
}

UnpackedPosit add_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b) {
    return add_sub(cfg, a, b, 0);
}

UnpackedPosit sub_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b) {
    return add_sub(cfg, a, b, 1);
}

UnpackedPosit mul_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b) {
    (void)cfg;
    if ((a.sn && a.s) || (b.sn && b.s)) return unpacked_nar();
    if ((a.sn && !a.s) || (b.sn && !b.s)) return unpacked_zero();

    UnpackedPosit r;
    r.s = a.s != b.s;
    r.k = a.k + b.k;
    r.e = a.e + b.e;
    r.fs = a.fs + b.fs;
    r.f = a.f * b.f;
    r.bm = false;
    return r;
}

UnpackedPosit div_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b) {
    if ((a.sn && a.s) || (b.sn && b.s)) return unpacked_nar();
    if (b.sn && !b.s) return unpacked_nar();  // zero divisor
    if (a.sn && !a.s) return unpacked_zero();

    UnpackedPosit r;
    r.s = a.s != b.s;
    r.k = a.k - b.k;
    if (b.e > a.e) {
        r.e = a.e + (std::uint64_t{1} << cfg.es) - b.e;
        r.k -= 1;
    } else {
        r.e = a.e - b.e;
    }
    r.fs = a.fs + cfg.ps - b.fs;
    const Wide num = a.f << cfg.ps;
    r.f = num / b.f;
    r.bm = (num % b.f) != 0;
    return r;
}

UnpackedPosit sqrt_raw(const PositConfig& cfg, const UnpackedPosit& a) {
    if (a.sn && a.s) return unpacked_nar();
    if (a.sn) return unpacked_zero();
    if (a.s) return unpacked_nar();  // negative input

    UnpackedPosit r;
    r.s = false;
    r.k = a.k >> 1;
    // An odd regime halves to k/2 plus a 2^(es-1) half-step; fold that
    // half-step into the exponent so the parity logic below sees it.
    const std::uint64_t e_adj = a.e + (std::uint64_t(a.k & 1) << cfg.es);
    const int shift = static_cast<int>(e_adj & 1) + (a.fs & 1);
    // Widen by 2*ps bits so the integer root carries ps bits below the
    // decoded fraction; without this the root is too coarse to round.
    const Wide prepared = (a.f << (2 * cfg.ps)) >> shift;
    const UintSqrtResult qr = uint_sqrt(prepared);
    r.f = qr.q;
    r.bm = (qr.r != 0);
    r.e = (e_adj + (e_adj & 1)) >> 1;
    r.fs = ((a.fs - (a.fs & 1)) >> 1) + cfg.ps;
    return r;
}

UintSqrtResult uint_sqrt(const Wide& d) {
    if (d == 0) return {0, 0};
    int size = static_cast<int>(boost::multiprecision::msb(d)) + 1;
    if (size & 1) ++size;  // even width; the implicit pad bit is zero

    SWide rem = 0;
    Wide q = 0;
    for (int i = size / 2 - 1; i >= 0; --i) {
        const SWide two_bits = static_cast<SWide>((d >> (2 * i)) & 3);
        const SWide trial = (rem << 2) | two_bits;
        if (rem >= 0)
            rem = trial - static_cast<SWide>((q << 2) | 1);
        else
            rem = trial + static_cast<SWide>((q << 2) | 3);
        if (rem >= 0)
            q = (q << 1) | 1;
        else
            q = q << 1;
    }
    if (rem < 0) rem += static_cast<SWide>((q << 2) | 1);
    return {q, static_cast<Wide>(rem)};
}

PositBits add(const PositConfig& cfg, PositBits a, PositBits b) {
    return encode(cfg, add_raw(cfg, decode(cfg, a), decode(cfg, b)));
}

PositBits sub(const PositConfig& cfg, PositBits a, PositBits b) {
    return encode(cfg, sub_raw(cfg, decode(cfg, a), decode(cfg, b)));
}

PositBits mul(const PositConfig& cfg, PositBits a, PositBits b) {
    return encode(cfg, mul_raw(cfg, decode(cfg, a), decode(cfg, b)));
}

PositBits div(const PositConfig& cfg, PositBits a, PositBits b) {
    return encode(cfg, div_raw(cfg, decode(cfg, a), decode(cfg, b)));
}

PositBits sqrt(const PositConfig& cfg, PositBits a) {
    return encode(cfg, sqrt_raw(cfg, decode(cfg, a)));
}

PositBits apply(const PositConfig& cfg, ArithOp op, PositBits a, PositBits b) {
    switch (op) {
        case ArithOp::Add: return add(cfg, a, b);
        case ArithOp::Sub: return sub(cfg, a, b);
        case ArithOp::Mul: return mul(cfg, a, b);
        case ArithOp::Div: return div(cfg, a, b);
        case ArithOp::Sqrt: return sqrt(cfg, a);
    }
    throw std::logic_error("unreachable");
}

Ordering compare(const PositConfig& cfg, PositBits a, PositBits b) {
    if (is_nar_pattern(cfg, a) || is_nar_pattern(cfg, b))
        return Ordering::Unordered;
    const std::int64_t sa = signed_pattern(cfg, a);
    const std::int64_t sb = signed_pattern(cfg, b);
    if (sa < sb) return Ordering::Less;
    if (sa > sb) return Ordering::Greater;
    return Ordering::Equal;
}

bool eq(const PositConfig& cfg, PositBits a, PositBits b) {
    return compare(cfg, a, b) == Ordering::Equal;
}

bool lt(const PositConfig& cfg, PositBits a, PositBits b) {
    return compare(cfg, a, b) == Ordering::Less;
}

bool le(const PositConfig& cfg, PositBits a, PositBits b) {
    const Ordering c = compare(cfg, a, b);
    return c == Ordering::Less || c == Ordering::Equal;
}

PositBits neg(const PositConfig& cfg, PositBits a) {
    return negate_pattern(cfg, a);  // NaR maps to NaR
}

PositBits abs(const PositConfig& cfg, PositBits a) {
    if (is_nar_pattern(cfg, a)) return a;
    return (a & cfg.sign_bit()) ? negate_pattern(cfg, a) : a;
}

PositBits min(const PositConfig& cfg, PositBits a, PositBits b) {
    if (is_nar_pattern(cfg, a)) return b;
    if (is_nar_pattern(cfg, b)) return a;
    return lt(cfg, a, b) ? a : b;
}

PositBits max(const PositConfig& cfg, PositBits a, PositBits b) {
    if (is_nar_pattern(cfg, a)) return b;
    if (is_nar_pattern(cfg, b)) return a;
    return lt(cfg, a, b) ? b : a;
}

PositBits fused_mul_add(const PositConfig& cfg, PositBits a, PositBits b,
                        PositBits c) {
    return add(cfg, mul(cfg, a, b), c);
}

}  // namespace posit
