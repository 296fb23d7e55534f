#include "doctest.h"

#include <gmpxx.h>

#include "betacyl/errors.hpp"
#include "betacyl/parry_root.hpp"

using namespace betacyl;

namespace {

// independent oracle: exact sign of x^n - w_1 x^{n-1} - ... - w_n at q
int oracle_sign(const DigitWord& w, const mpq_class& q) {
    mpq_class acc = 1;
    for (int d : w) acc = acc * q - d;
    return sgn(acc);
}

// bisect [1, hi] down to width 2^-bits with exact rational arithmetic
std::pair<mpq_class, mpq_class> oracle_root(const DigitWord& w, long bits) {
    mpq_class lo = 1;
    mpq_class hi = 1;
    for (int d : w) hi += d; // root <= 1 + digit sum
    while (oracle_sign(w, hi) <= 0) hi *= 2;
    for (long i = 0; i < bits + 8; ++i) {
        mpq_class mid = (lo + hi) / 2;
        if (oracle_sign(w, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

bool encloses_same_root(const RealEnclosure& e, const DigitWord& w, long bits) {
    auto [qlo, qhi] = oracle_root(w, bits);
    return e.lo.cmp_mpq(qhi) <= 0 && e.hi.cmp_mpq(qlo) >= 0;
}

} // namespace

TEST_CASE("root enclosures agree with an exact bisection oracle") {
    std::vector<DigitWord> words{{1, 1},    {2, 1},       {1, 0, 1},   {3, 3},
                                 {2, 2},    {1, 1, 0, 1}, {2, 1, 1},   {1, 0, 0, 1},
                                 {9, 9, 9}, {1, 1, 0, 1, 1}};
    for (const DigitWord& w : words) {
        CAPTURE(word_to_string(w));
        RealEnclosure e = parry_poly_root(w, 48);
        CHECK(e.width() <= Dyadic(1).mul_pow2(-48));
        CHECK(encloses_same_root(e, w, 52));
    }
}

TEST_CASE("frozen digits of well-known roots") {
    // golden ratio
    RealEnclosure phi = parry_poly_root(DigitWord{1, 1}, 40);
    CHECK(phi.lo.cmp_mpq(mpq_class("16180339887498948483/10000000000000000000")) < 0);
    CHECK(phi.hi.cmp_mpq(mpq_class("16180339887498948482/10000000000000000000")) > 0);
    // 1 + sqrt 2
    RealEnclosure sl = parry_poly_root(DigitWord{2, 1}, 40);
    CHECK(sl.lo.cmp_mpq(mpq_class("24142135623730950489/10000000000000000000")) < 0);
    CHECK(sl.hi.cmp_mpq(mpq_class("24142135623730950488/10000000000000000000")) > 0);
    // real root of x^3 = x^2 + 1
    RealEnclosure r = parry_poly_root(DigitWord{1, 0, 1}, 40);
    CHECK(r.lo.cmp_mpq(mpq_class("14655712318767680267/10000000000000000000")) < 0);
    CHECK(r.hi.cmp_mpq(mpq_class("14655712318767680266/10000000000000000000")) > 0);
}

TEST_CASE("raising precision refines to a sub-cell") {
    DigitWord w{1, 1, 0, 1};
    RealEnclosure prev = parry_poly_root(w, 8);
    for (long p : {16L, 33L, 64L}) {
        RealEnclosure e = parry_poly_root(w, p);
        CHECK(e.width() <= Dyadic(1).mul_pow2(-p));
        CHECK(e.lo >= prev.lo);
        CHECK(e.hi <= prev.hi);
        prev = e;
    }
}

TEST_CASE("dyadic and integer roots come out as exact points") {
    RealEnclosure two = parry_poly_root(DigitWord{2}, 30);
    CHECK(two.is_point());
    CHECK(two.lo == Dyadic(2));
    // trailing zeros do not move the root
    RealEnclosure two0 = parry_poly_root(DigitWord{2, 0, 0}, 30);
    CHECK(two0.is_point());
    CHECK(two0.lo == Dyadic(2));
    // digit sum 1 pins the root at 1
    CHECK(parry_poly_root(DigitWord{1}, 30).lo == Dyadic(1));
    CHECK(parry_poly_root(DigitWord{1, 0}, 30).is_point());
    CHECK(parry_poly_root(DigitWord{1, 0}, 30).lo == Dyadic(1));
}

TEST_CASE("bad words are rejected") {
    CHECK_THROWS_AS(parry_poly_root(DigitWord{}, 20), EmptyWordError);
    CHECK_THROWS_AS(parry_poly_root(DigitWord{0, 0}, 20), RootBelowOneError);
    CHECK_THROWS_AS(parry_poly_root(DigitWord{1, -1}, 20), OutOfRangeError);
}

TEST_CASE("exact sign evaluation at dyadic points") {
    DigitWord w{1, 1}; // x^2 - x - 1
    CHECK(parry_sign_at(w, Dyadic(2)) > 0);
    CHECK(parry_sign_at(w, Dyadic(mpz_class(3), -1)) < 0);
    CHECK(parry_sign_at(DigitWord{2, 0}, Dyadic(2)) == 0);
    CHECK(parry_sign_at(DigitWord{2}, Dyadic(2)) == 0);
    // far from the root the sign matches the side
    CHECK(parry_sign_at(w, Dyadic(1)) < 0);
    CHECK(parry_sign_at(w, Dyadic(100)) > 0);
}

TEST_CASE("root comparisons are exact") {
    CHECK(compare_root_to_rational(DigitWord{1, 1}, mpq_class(8, 5)) > 0);
    CHECK(compare_root_to_rational(DigitWord{1, 1}, mpq_class(13, 8)) < 0);
    CHECK(compare_root_to_rational(DigitWord{2, 0}, mpq_class(2)) == 0);
    CHECK(compare_root_to_rational(DigitWord{1, 0}, mpq_class(1)) == 0);

    CHECK(compare_roots(DigitWord{1, 1}, DigitWord{1, 0, 1}) > 0);
    CHECK(compare_roots(DigitWord{1, 0, 1}, DigitWord{1, 1}) < 0);
    // distinct words sharing a root are detected as equal
    CHECK(compare_roots(DigitWord{1, 1}, DigitWord{1, 1, 0}) == 0);
    CHECK(compare_roots(DigitWord{2}, DigitWord{2, 0}) == 0);
    CHECK(compare_roots(DigitWord{3, 3}, DigitWord{3, 3}) == 0);
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(mpz_class(1)) == 0);
    CHECK(ceil_log2(mpz_class(2)) == 1);
    CHECK(ceil_log2(mpz_class(3)) == 2);
    CHECK(ceil_log2(mpz_class(1024)) == 10);
    CHECK(ceil_log2(mpz_class(1025)) == 11);
}
