#include <doctest.h>

#include <cmath>
#include <random>

#include "posit/arith.hpp"
#include "posit/convert.hpp"

using namespace posit;

namespace {

PositBits p8(double v) { return binary64_to_posit(P8, v); }

}  // namespace

TEST_CASE("add/sub selector orders by magnitude and resolves the sign") {
    // (1.0, -2.0, add): effective sub, operands swapped, result negative
    auto sel = add_sub_select(P8, decode(P8, p8(1.0)), decode(P8, p8(-2.0)), 0);
    CHECK(sel.op == 1);
    CHECK(sel.sign);
    CHECK(total_exponent(P8, sel.p1) == 1);  // |p1'| = 2.0
    CHECK(total_exponent(P8, sel.p2) == 0);

    // (3.0, 2.0, add), same signs: op unchanged, sign of p1
    sel = add_sub_select(P8, decode(P8, p8(3.0)), decode(P8, p8(2.0)), 0);
    CHECK(sel.op == 0);
    CHECK_FALSE(sel.sign);

    // (1.0, 3.0, sub): swap flips the sign
    sel = add_sub_select(P8, decode(P8, p8(1.0)), decode(P8, p8(3.0)), 1);
    CHECK(sel.op == 1);
    CHECK(sel.sign);
    CHECK(total_exponent(P8, sel.p1) == 1);
}

TEST_CASE("adder special cases") {
    const PositBits one = 0x40, nar = 0x80;
    CHECK(add(P8, one, one) == 0x50);          // 1 + 1 = 2
    CHECK(negate_pattern(P8, 0x50) == 0xB0);   // -2.0 row of the table
    CHECK(add(P8, nar, one) == nar);
    CHECK(add(P8, one, nar) == nar);
    CHECK(sub(P8, 0x55, 0x55) == 0x00);        // exact cancellation
    for (unsigned x = 0; x < 256; ++x) {
        if (x == nar) continue;
        REQUIRE(add(P8, x, 0x00) == x);
        REQUIRE(add(P8, 0x00, x) == x);
        REQUIRE(sub(P8, x, 0x00) == x);
    }
    // 0 - x = -x
    for (unsigned x = 0; x < 256; ++x) {
        if (x == nar) continue;
        REQUIRE(sub(P8, 0x00, x) == negate_pattern(P8, x));
    }
}

TEST_CASE("multiplier special cases and rounding") {
    const PositBits nar = 0x80;
    CHECK(mul(P8, nar, 0x00) == nar);  // NaR check precedes zero
    CHECK(mul(P8, 0x00, nar) == nar);
    CHECK(mul(P8, 0x00, 0x59) == 0x00);
    for (unsigned x = 0; x < 256; ++x) {
        if (x == nar) continue;
        REQUIRE(mul(P8, 0x40, x) == x);  // 1.0 * x
    }
    // -2.0 * 3.125 = -6.25 exactly; P8 neighbors are 6.0 and 6.5, the tie
    // goes to the even pattern, giving -6.0
    CHECK(mul(P8, 0xB0, 0x59) == 0x9C);
    CHECK(posit_to_binary64(P8, negate_pattern(P8, 0x9C)) == 6.0);
}

TEST_CASE("divider special cases") {
    const PositBits nar = 0x80;
    CHECK(div(P8, 0x40, 0x00) == nar);  // x / 0
    CHECK(div(P8, 0x00, 0x40) == 0x00);
    CHECK(div(P8, nar, 0x40) == nar);
    CHECK(div(P8, 0x40, 0x50) == 0x30);  // 1 / 2 = 0.5
    for (unsigned x = 0; x < 256; ++x) {
        if (x == nar) continue;
        REQUIRE(div(P8, x, 0x40) == x);  // x / 1.0
    }
}

TEST_CASE("square root special cases") {
    CHECK(sqrt(P8, p8(-2.0)) == 0x80);
    CHECK(sqrt(P8, 0x80) == 0x80);
    CHECK(sqrt(P8, 0x00) == 0x00);
    CHECK(sqrt(P8, 0x40) == 0x40);
    CHECK(sqrt(P8, 0x52) == 0x48);  // sqrt(2.25) = 1.5, both exact
    CHECK(posit_to_binary64(P8, 0x52) == 2.25);
    CHECK(posit_to_binary64(P8, 0x48) == 1.5);
    // odd regime: sqrt(4) = 2
    CHECK(sqrt(P8, p8(4.0)) == p8(2.0));
    CHECK(sqrt(P16, binary64_to_posit(P16, 64.0)) ==
          binary64_to_posit(P16, 8.0));
}

TEST_CASE("uint_sqrt: q,r decomposition") {
    auto qr = uint_sqrt(16);
    CHECK(qr.q == 4);
    CHECK(qr.r == 0);
    qr = uint_sqrt(10);
    CHECK(qr.q == 3);
    CHECK(qr.r == 1);
    qr = uint_sqrt(0);
    CHECK(qr.q == 0);
    CHECK(qr.r == 0);

    for (std::uint64_t d = 0; d < (1ull << 16); ++d) {
        const auto r = uint_sqrt(Wide(d));
        const auto q = static_cast<std::uint64_t>(r.q);
        REQUIRE(q == static_cast<std::uint64_t>(std::sqrt(double(d))));
        REQUIRE(r.r == Wide(d) - r.q * r.q);
    }

    // wide operands: d = q^2 + r with 0 <= r <= 2q
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        Wide d = Wide(rng()) << (rng() % 128);
        const auto r = uint_sqrt(d);
        REQUIRE(r.q * r.q + r.r == d);
        REQUIRE(r.r <= 2 * r.q);
    }
}

TEST_CASE("commutativity and sign symmetry, exhaustive P8") {
    for (unsigned a = 0; a < 256; ++a) {
        for (unsigned b = 0; b < 256; ++b) {
            REQUIRE(add(P8, a, b) == add(P8, b, a));
            REQUIRE(mul(P8, a, b) == mul(P8, b, a));
            REQUIRE(sub(P8, a, b) == add(P8, a, neg(P8, b)));
            if (!is_nar_pattern(P8, a) && !is_nar_pattern(P8, b))
                REQUIRE(mul(P8, neg(P8, a), b) == neg(P8, mul(P8, a, b)));
        }
    }
}

TEST_CASE("comparison and pattern helpers") {
    const PositBits nar = 0x80;
    CHECK(compare(P8, 0xB0, 0x40) == Ordering::Less);  // -2 < 1
    CHECK(compare(P8, 0x40, 0x40) == Ordering::Equal);
    CHECK(compare(P8, 0x59, 0x40) == Ordering::Greater);
    for (unsigned x = 0; x < 256; ++x) {
        REQUIRE(compare(P8, nar, x) == Ordering::Unordered);
        REQUIRE_FALSE(lt(P8, nar, x));
        REQUIRE_FALSE(le(P8, nar, x));
        REQUIRE_FALSE(eq(P8, nar, x));
    }
    CHECK(neg(P8, 0x50) == 0xB0);
    CHECK(neg(P8, nar) == nar);
    CHECK(abs(P8, 0xB0) == 0x50);
    CHECK(abs(P8, nar) == nar);
    CHECK(min(P8, nar, 0x40) == 0x40);
    CHECK(max(P8, nar, 0x40) == 0x40);
    CHECK(min(P8, nar, nar) == nar);
    CHECK(min(P8, 0xB0, 0x40) == 0xB0);
    CHECK(max(P8, 0xB0, 0x40) == 0x40);
}

TEST_CASE("fused multiply-add rounds after each step") {
    // fma(a, b, c) is specified as add(mul(a, b), c): two roundings
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20000; ++i) {
        const PositBits a = rng() & 0xff, b = rng() & 0xff, c = rng() & 0xff;
        REQUIRE(fused_mul_add(P8, a, b, c) == add(P8, mul(P8, a, b), c));
    }
}
