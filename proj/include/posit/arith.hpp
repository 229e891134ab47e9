#pragma once

#include "posit/codec.hpp"
#include "posit/ops.hpp"

namespace posit {

// Output of the add/sub operand selector: effective magnitude operation
// (0 = add, 1 = sub), operands ordered so |p1| >= |p2|, and the sign of
// the final result.
struct SelectedOperands {
    UnpackedPosit p1;
    UnpackedPosit p2;
    int op;
    bool sign;
};

SelectedOperands add_sub_select(const PositConfig& cfg, const UnpackedPosit& p1,
                                const UnpackedPosit& p2, int op);

// Raw arithmetic on decoded operands. Results may be non-canonical; encode
// normalizes and rounds them.
UnpackedPosit add_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b);
UnpackedPosit sub_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b);
UnpackedPosit mul_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b);
UnpackedPosit div_raw(const PositConfig& cfg, const UnpackedPosit& a,
                      const UnpackedPosit& b);
UnpackedPosit sqrt_raw(const PositConfig& cfg, const UnpackedPosit& a);

// Pattern-in/pattern-out operations (decode, compute, round, encode).
PositBits add(const PositConfig& cfg, PositBits a, PositBits b);
PositBits sub(const PositConfig& cfg, PositBits a, PositBits b);
PositBits mul(const PositConfig& cfg, PositBits a, PositBits b);
PositBits div(const PositConfig& cfg, PositBits a, PositBits b);
PositBits sqrt(const PositConfig& cfg, PositBits a);

// Dispatch helper; b is ignored for Sqrt.
PositBits apply(const PositConfig& cfg, ArithOp op, PositBits a, PositBits b);

// Non-restoring integer square root: d = q^2 + r with 0 <= r <= 2q.
struct UintSqrtResult {
    Wide q;
    Wide r;
};
UintSqrtResult uint_sqrt(const Wide& d);

// NaR compares unordered; everything else follows the signed-integer order
// of the patterns.
Ordering compare(const PositConfig& cfg, PositBits a, PositBits b);
bool eq(const PositConfig& cfg, PositBits a, PositBits b);
bool lt(const PositConfig& cfg, PositBits a, PositBits b);
bool le(const PositConfig& cfg, PositBits a, PositBits b);

PositBits neg(const PositConfig& cfg, PositBits a);
PositBits abs(const PositConfig& cfg, PositBits a);

// min/max prefer the non-NaR operand when exactly one is NaR.
PositBits min(const PositConfig& cfg, PositBits a, PositBits b);
PositBits max(const PositConfig& cfg, PositBits a, PositBits b);

// add(mul(a, b), c) with rounding after each step.
PositBits fused_mul_add(const PositConfig& cfg, PositBits a, PositBits b,
                        PositBits c);

}  // namespace posit
