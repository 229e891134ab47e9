#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include "posit/format.hpp"
#include "posit/ops.hpp"

namespace posit::bench {

// Opaque scalar handle; the meaning of the bits belongs to the backend.
struct Scalar {
    std::uint64_t bits = 0;
};

// Abstract arithmetic used by every benchmark kernel. Kernels contain no
// format-specific branches: the same op sequence runs on binary32 and on
// every posit instantiation.
class ScalarBackend {
  public:
    virtual ~ScalarBackend() = default;

    virtual std::string name() const = 0;
    virtual Scalar from_int(std::int64_t i) = 0;
    virtual Scalar parse(std::string_view decimal) = 0;
    virtual Scalar add(Scalar a, Scalar b) = 0;
    virtual Scalar sub(Scalar a, Scalar b) = 0;
    virtual Scalar mul(Scalar a, Scalar b) = 0;
    virtual Scalar div(Scalar a, Scalar b) = 0;
    virtual Scalar sqrt(Scalar a) = 0;
    virtual std::int64_t to_int(Scalar a) = 0;  // nearest integer
    virtual Ordering compare(Scalar a, Scalar b) = 0;
    virtual double to_binary64(Scalar a) const = 0;

    // Memory round-trip applied to loop-carried values at each iteration
    // boundary. Identity for plain backends; the converting backend funnels
    // the value through binary32 here.
    virtual Scalar sync(Scalar a) { return a; }
};

// IEEE 754 binary32 with one nearest-even rounding per operation.
class Binary32Backend : public ScalarBackend {
  public:
    std::string name() const override { return "f32"; }
    Scalar from_int(std::int64_t i) override;
    Scalar parse(std::string_view decimal) override;
    Scalar add(Scalar a, Scalar b) override;
    Scalar sub(Scalar a, Scalar b) override;
    Scalar mul(Scalar a, Scalar b) override;
    Scalar div(Scalar a, Scalar b) override;
    Scalar sqrt(Scalar a) override;
    std::int64_t to_int(Scalar a) override;
    Ordering compare(Scalar a, Scalar b) override;
    double to_binary64(Scalar a) const override;
};

class PositBackend : public ScalarBackend {
  public:
    explicit PositBackend(PositConfig cfg, std::string name = "");
    std::string name() const override { return name_; }
    Scalar from_int(std::int64_t i) override;
    Scalar parse(std::string_view decimal) override;
    Scalar add(Scalar a, Scalar b) override;
    Scalar sub(Scalar a, Scalar b) override;
    Scalar mul(Scalar a, Scalar b) override;
    Scalar div(Scalar a, Scalar b) override;
    Scalar sqrt(Scalar a) override;
    std::int64_t to_int(Scalar a) override;  // NaR converts to 0
    Ordering compare(Scalar a, Scalar b) override;
    double to_binary64(Scalar a) const override;

  protected:
    PositConfig cfg_;
    std::string name_;
};

// Emulates a core that keeps binary32 in memory and posits in registers:
// every loop-carried value crosses the formats once per iteration.
class ConvertingPositBackend : public PositBackend {
  public:
    explicit ConvertingPositBackend(PositConfig cfg);
    Scalar sync(Scalar a) override;
};

// Stores scalars in a narrow format, computes in a wider one.
class HybridBackend : public ScalarBackend {
  public:
    HybridBackend(PositConfig store, PositConfig compute);
    std::string name() const override { return name_; }
    Scalar from_int(std::int64_t i) override;
    Scalar parse(std::string_view decimal) override;
    Scalar add(Scalar a, Scalar b) override;
    Scalar sub(Scalar a, Scalar b) override;
    Scalar mul(Scalar a, Scalar b) override;
    Scalar div(Scalar a, Scalar b) override;
    Scalar sqrt(Scalar a) override;
    std::int64_t to_int(Scalar a) override;
    Ordering compare(Scalar a, Scalar b) override;
    double to_binary64(Scalar a) const override;

  private:
    Scalar widen(Scalar a) const;
    Scalar narrow(Scalar a) const;
    PositConfig store_;
    PositConfig compute_;
    std::string name_;
};

// Dynamic-range observation: smallest |v| in (0,1] and largest in [1,inf),
// measured in binary64 over every operand and result. Zeros and NaR/NaN
// are excluded.
struct RangeStats {
    double min_01 = std::numeric_limits<double>::infinity();
    double max_1inf = 0.0;
    bool seen_01 = false;
    bool seen_1inf = false;

    void observe(double v);
};

// Decorator that feeds every operand and result of the wrapped backend
// into a RangeStats.
class RangeTrackingBackend : public ScalarBackend {
  public:
    RangeTrackingBackend(ScalarBackend& inner, RangeStats& stats)
        : inner_(inner), stats_(stats) {}

    std::string name() const override { return inner_.name(); }
    Scalar from_int(std::int64_t i) override;
    Scalar parse(std::string_view decimal) override;
    Scalar add(Scalar a, Scalar b) override;
    Scalar sub(Scalar a, Scalar b) override;
    Scalar mul(Scalar a, Scalar b) override;
    Scalar div(Scalar a, Scalar b) override;
    Scalar sqrt(Scalar a) override;
    std::int64_t to_int(Scalar a) override;
    Ordering compare(Scalar a, Scalar b) override;
    double to_binary64(Scalar a) const override;
    Scalar sync(Scalar a) override;

  private:
    Scalar seen(Scalar a);
    ScalarBackend& inner_;
    RangeStats& stats_;
};

// Backend specifiers understood by tools and tests:
//   f32 | p8 | p16 | p32 | p32-converting | hybrid-p8-p16
std::unique_ptr<ScalarBackend> make_backend(std::string_view spec);

}  // namespace posit::bench
