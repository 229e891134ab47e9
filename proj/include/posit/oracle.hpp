#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posit/format.hpp"
#include "posit/ops.hpp"

// Exact-arithmetic reference for the posit codec and arithmetic. Everything
// here is value-based: patterns are mapped to rationals by a plain field
// scan and rounded back by bisecting the pattern space, so none of the
// bit-level shortcuts of the main implementation are shared.
namespace posit::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A rational with a distinguished NaR state. NaR absorbs all arithmetic;
// division by zero produces NaR.
class ExactNumber {
  public:
    ExactNumber() = default;  // zero
    explicit ExactNumber(Rational v) : value_(std::move(v)) {}
    static ExactNumber nar() {
        ExactNumber n;
        n.nar_ = true;
        return n;
    }

    bool is_nar() const { return nar_; }
    const Rational& value() const { return value_; }

    ExactNumber operator+(const ExactNumber& o) const;
    ExactNumber operator-(const ExactNumber& o) const;
    ExactNumber operator*(const ExactNumber& o) const;
    ExactNumber operator/(const ExactNumber& o) const;
    ExactNumber operator-() const;

    bool operator==(const ExactNumber& o) const {
        return nar_ == o.nar_ && (nar_ || value_ == o.value_);
    }

  private:
    Rational value_ = 0;
    bool nar_ = false;
};

// Value of a pattern, by direct field scan: (-1)^s * f/2^fs * 2^(k*2^es+e).
ExactNumber exact_value(const PositConfig& cfg, PositBits p);

// The unique correctly rounded pattern for x: saturating at min_pos/max_pos,
// otherwise nearest with ties to the even pattern, where "nearest" cuts at
// the value of the in-between pattern of the one-bit-wider format (this is
// what guard/sticky rounding of the truncated encoding yields).
PositBits round_to_posit(const PositConfig& cfg, const ExactNumber& x);

// Correctly rounded square root of a non-negative rational, decided purely
// by comparing squares, so irrational roots never need approximation.
PositBits round_sqrt_to_posit(const PositConfig& cfg, const Rational& x);

// Reference operation: exact rational arithmetic plus the special-value
// rules of the arithmetic unit (NaR dominates, NaR*0 = NaR, x/0 = NaR,
// sqrt of a negative is NaR). b is ignored for Sqrt.
PositBits ref_op(const PositConfig& cfg, ArithOp op, PositBits a, PositBits b);

struct Mismatch {
    PositBits a;
    PositBits b;
    PositBits got;
    PositBits want;
};

struct MismatchReport {
    PositConfig cfg;
    ArithOp op;
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    // One line per mismatch: "op cfg a b got want" (hex patterns, "-" for
    // the unused operand of sqrt).
    std::string to_text() const;
};

// The implementation under test; exhaustive_check injects operands and
// compares against ref_op.
using ImplFn =
    std::function<PositBits(const PositConfig&, ArithOp, PositBits, PositBits)>;

// Full operand space; requires cfg.ps <= 16.
MismatchReport exhaustive_check(const PositConfig& cfg, ArithOp op,
                                const ImplFn& impl);

// Seeded uniform sampling for formats too wide to enumerate.
MismatchReport sampled_check(const PositConfig& cfg, ArithOp op,
                             const ImplFn& impl, std::uint64_t samples,
                             std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 1;

}  // namespace posit::oracle
