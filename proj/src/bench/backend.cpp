#include "posit/bench/backend.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "posit/arith.hpp"
#include "posit/convert.hpp"

namespace posit::bench {

namespace {

float as_float(Scalar a) {
    return std::bit_cast<float>(static_cast<std::uint32_t>(a.bits));
}

Scalar from_float(float f) {
    return Scalar{std::bit_cast<std::uint32_t>(f)};
}

}  // namespace

Scalar Binary32Backend::from_int(std::int64_t i) {
    return from_float(static_cast<float>(i));
}

Scalar Binary32Backend::parse(std::string_view decimal) {
    return from_float(std::strtof(std::string(decimal).c_str(), nullptr));
}

Scalar Binary32Backend::add(Scalar a, Scalar b) {
    return from_float(as_float(a) + as_float(b));
}

Scalar Binary32Backend::sub(Scalar a, Scalar b) {
    return from_float(as_float(a) - as_float(b));
}

Scalar Binary32Backend::mul(Scalar a, Scalar b) {
    return from_float(as_float(a) * as_float(b));
}

Scalar Binary32Backend::div(Scalar a, Scalar b) {
    return from_float(as_float(a) / as_float(b));
}

Scalar Binary32Backend::sqrt(Scalar a) {
    return from_float(std::sqrt(as_float(a)));
}

std::int64_t Binary32Backend::to_int(Scalar a) {
    const float f = as_float(a);
    if (std::isnan(f)) return 0;
    return std::llrintf(f);
}

Ordering Binary32Backend::compare(Scalar a, Scalar b) {
    const float x = as_float(a), y = as_float(b);
    if (std::isnan(x) || std::isnan(y)) return Ordering::Unordered;
    if (x < y) return Ordering::Less;
    if (x > y) return Ordering::Greater;
    return Ordering::Equal;
}

double Binary32Backend::to_binary64(Scalar a) const {
    return static_cast<double>(as_float(a));
}

PositBackend::PositBackend(PositConfig cfg, std::string name)
    : cfg_(cfg), name_(name.empty() ? "p" + std::to_string(cfg.ps) : std::move(name)) {}

Scalar PositBackend::from_int(std::int64_t i) {
    return Scalar{int_to_posit(cfg_, i)};
}

Scalar PositBackend::parse(std::string_view decimal) {
    return Scalar{parse_decimal(cfg_, decimal)};
}

Scalar PositBackend::add(Scalar a, Scalar b) {
    return Scalar{posit::add(cfg_, a.bits, b.bits)};
}

Scalar PositBackend::sub(Scalar a, Scalar b) {
    return Scalar{posit::sub(cfg_, a.bits, b.bits)};
}

Scalar PositBackend::mul(Scalar a, Scalar b) {
    return Scalar{posit::mul(cfg_, a.bits, b.bits)};
}

Scalar PositBackend::div(Scalar a, Scalar b) {
    return Scalar{posit::div(cfg_, a.bits, b.bits)};
}

Scalar PositBackend::sqrt(Scalar a) {
    return Scalar{posit::sqrt(cfg_, a.bits)};
}

std::int64_t PositBackend::to_int(Scalar a) {
    if (is_nar_pattern(cfg_, a.bits)) return 0;
    return posit_to_int(cfg_, a.bits);
}

Ordering PositBackend::compare(Scalar a, Scalar b) {
    return posit::compare(cfg_, a.bits, b.bits);
}

double PositBackend::to_binary64(Scalar a) const {
    return posit_to_binary64(cfg_, a.bits);
}

ConvertingPositBackend::ConvertingPositBackend(PositConfig cfg)
    : PositBackend(cfg, "p" + std::to_string(cfg.ps) + "-converting") {}

Scalar ConvertingPositBackend::sync(Scalar a) {
    return Scalar{binary32_to_posit(cfg_, posit_to_binary32(cfg_, a.bits))};
}

HybridBackend::HybridBackend(PositConfig store, PositConfig compute)
    : store_(store),
      compute_(compute),
      name_("hybrid-p" + std::to_string(store.ps) + "-p" +
            std::to_string(compute.ps)) {}

Scalar HybridBackend::widen(Scalar a) const {
    return Scalar{resize_posit(store_, compute_, a.bits)};
}

Scalar HybridBackend::narrow(Scalar a) const {
    return Scalar{resize_posit(compute_, store_, a.bits)};
}

Scalar HybridBackend::from_int(std::int64_t i) {
    return Scalar{int_to_posit(store_, i)};
}

Scalar HybridBackend::parse(std::string_view decimal) {
    return Scalar{parse_decimal(store_, decimal)};
}

Scalar HybridBackend::add(Scalar a, Scalar b) {
    return narrow(Scalar{posit::add(compute_, widen(a).bits, widen(b).bits)});
}

Scalar HybridBackend::sub(Scalar a, Scalar b) {
    return narrow(Scalar{posit::sub(compute_, widen(a).bits, widen(b).bits)});
}

Scalar HybridBackend::mul(Scalar a, Scalar b) {
    return narrow(Scalar{posit::mul(compute_, widen(a).bits, widen(b).bits)});
}

Scalar HybridBackend::div(Scalar a, Scalar b) {
    return narrow(Scalar{posit::div(compute_, widen(a).bits, widen(b).bits)});
}

Scalar HybridBackend::sqrt(Scalar a) {
    return narrow(Scalar{posit::sqrt(compute_, widen(a).bits)});
}

std::int64_t HybridBackend::to_int(Scalar a) {
    if (is_nar_pattern(store_, a.bits)) return 0;
    return posit_to_int(store_, a.bits);
}

Ordering HybridBackend::compare(Scalar a, Scalar b) {
    return posit::compare(store_, a.bits, b.bits);
}

double HybridBackend::to_binary64(Scalar a) const {
    return posit_to_binary64(store_, a.bits);
}

void RangeStats::observe(double v) {
    if (std::isnan(v) || v == 0.0) return;
    const double a = std::fabs(v);
    if (a <= 1.0) {
        if (a < min_01 || !seen_01) min_01 = a;
        seen_01 = true;
    }
    if (a >= 1.0) {
        if (a > max_1inf || !seen_1inf) max_1inf = a;
        seen_1inf = true;
    }
}

Scalar RangeTrackingBackend::seen(Scalar a) {
    stats_.observe(inner_.to_binary64(a));
    return a;
}

Scalar RangeTrackingBackend::from_int(std::int64_t i) {
    return seen(inner_.from_int(i));
}

Scalar RangeTrackingBackend::parse(std::string_view decimal) {
    return seen(inner_.parse(decimal));
}

Scalar RangeTrackingBackend::add(Scalar a, Scalar b) {
    seen(a);
    seen(b);
    return seen(inner_.add(a, b));
}

Scalar RangeTrackingBackend::sub(Scalar a, Scalar b) {
    seen(a);
    seen(b);
    return seen(inner_.sub(a, b));
}

Scalar RangeTrackingBackend::mul(Scalar a, Scalar b) {
    seen(a);
    seen(b);
    return seen(inner_.mul(a, b));
}

Scalar RangeTrackingBackend::div(Scalar a, Scalar b) {
    seen(a);
    seen(b);
    return seen(inner_.div(a, b));
}

Scalar RangeTrackingBackend::sqrt(Scalar a) {
    seen(a);
    return seen(inner_.sqrt(a));
}

std::int64_t RangeTrackingBackend::to_int(Scalar a) {
    seen(a);
    return inner_.to_int(a);
}

Ordering RangeTrackingBackend::compare(Scalar a, Scalar b) {
    seen(a);
    seen(b);
    return inner_.compare(a, b);
}

double RangeTrackingBackend::to_binary64(Scalar a) const {
    return inner_.to_binary64(a);
}

Scalar RangeTrackingBackend::sync(Scalar a) {
    return seen(inner_.sync(a));
}

std::unique_ptr<ScalarBackend> make_backend(std::string_view spec) {
    if (spec == "f32") return std::make_unique<Binary32Backend>();
    if (spec == "p8") return std::make_unique<PositBackend>(P8);
    if (spec == "p16") return std::make_unique<PositBackend>(P16);
    if (spec == "p32") return std::make_unique<PositBackend>(P32);
    if (spec == "p8-converting")
        return std::make_unique<ConvertingPositBackend>(P8);
    if (spec == "p16-converting")
        return std::make_unique<ConvertingPositBackend>(P16);
    if (spec == "p32-converting")
        return std::make_unique<ConvertingPositBackend>(P32);
    if (spec == "hybrid-p8-p16")
        return std::make_unique<HybridBackend>(P8, P16);
    if (spec == "hybrid-p8-p32")
        return std::make_unique<HybridBackend>(P8, P32);
    if (spec == "hybrid-p16-p32")
        return std::make_unique<HybridBackend>(P16, P32);
    throw std::invalid_argument("unknown backend: " + std::string(spec));
}

}  // namespace posit::bench
