#include "doctest.h"

#include <gmpxx.h>

#include "betacyl/dyadic.hpp"

using namespace betacyl;

namespace {

// 25-digit bracket of ln 2, used to pin the log routines from outside
const mpq_class kLn2Lo("6931471805599453094172321/10000000000000000000000000");
const mpq_class kLn2Hi("6931471805599453094172322/10000000000000000000000000");

bool overlaps(const DyadicInterval& i, const mpq_class& lo, const mpq_class& hi) {
    return i.lo().cmp_mpq(hi) <= 0 && i.hi().cmp_mpq(lo) >= 0;
}

} // namespace

TEST_CASE("arithmetic is exact and representations are canonical") {
    Dyadic a(mpz_class(3), -2); // 0.75
    Dyadic b(mpz_class(1), -1); // 0.5
    CHECK(a + b == Dyadic(mpz_class(5), -2));
    CHECK(a - b == Dyadic(mpz_class(1), -2));
    CHECK(a * b == Dyadic(mpz_class(3), -3));
    CHECK((-a).sign() == -1);
    CHECK(a.mul_pow2(2) == Dyadic(3));
    // even mantissas normalize away
    CHECK(Dyadic(mpz_class(4), 0) == Dyadic(mpz_class(1), 2));
    CHECK(Dyadic(mpz_class(4), 0).man() == 1);
    CHECK(Dyadic::zero().is_zero());
    CHECK(Dyadic::zero().bit_length() == 0);
    CHECK(Dyadic(mpz_class(5), -3).bit_length() == 3);
}

TEST_CASE("comparisons agree with rational values") {
    Dyadic half(mpz_class(1), -1);
    CHECK(half.cmp_mpq(mpq_class(1, 2)) == 0);
    CHECK(half.cmp_mpq(mpq_class(1, 3)) > 0);
    CHECK(half.cmp_mpq(mpq_class(2, 3)) < 0);
    CHECK(Dyadic(3) > Dyadic(mpz_class(5), -1));
    CHECK(Dyadic(-1) < Dyadic::zero());
    CHECK(Dyadic(mpz_class(1), 40) > Dyadic(mpz_class(1), 3));
}

TEST_CASE("floor and to_mpq") {
    CHECK(Dyadic(mpz_class(7), -2).floor() == 1);
    CHECK(Dyadic(mpz_class(-7), -2).floor() == -2);
    CHECK(Dyadic(6).floor() == 6);
    CHECK(Dyadic(mpz_class(5), -3).to_mpq() == mpq_class(5, 8));
    CHECK(Dyadic(mpz_class(-5), 2).to_mpq() == mpq_class(-20));
}

TEST_CASE("directed rounding drops bits in the requested direction") {
    Dyadic x(21); // 10101 in binary
    Dyadic up = x;
    Dyadic down = x;
    CHECK(up.round_sig(3, true));
    CHECK(down.round_sig(3, false));
    CHECK(up == Dyadic(24)); // ceil(21 / 4) * 4
    CHECK(down == Dyadic(20));
    Dyadic same = x;
    CHECK_FALSE(same.round_sig(10, true));
    CHECK(same == x);

    mpq_class third(1, 3);
    Dyadic lo = Dyadic::from_mpq_dir(third, 30, false);
    Dyadic hi = Dyadic::from_mpq_dir(third, 30, true);
    CHECK(lo.cmp_mpq(third) < 0);
    CHECK(hi.cmp_mpq(third) > 0);
    CHECK(hi - lo <= Dyadic(1).mul_pow2(-28));

    CHECK(Dyadic::from_mpq_grid(third, -5, false).to_mpq() == mpq_class(5, 16));
    CHECK(Dyadic::from_mpq_grid(third, -5, true).to_mpq() == mpq_class(11, 32));
    // exact values stay put
    CHECK(Dyadic::from_mpq_dir(mpq_class(3, 4), 50, true) == Dyadic(mpz_class(3), -2));
}

TEST_CASE("string round trips") {
    for (const char* s : {"3*2^-5", "-7*2^2", "0*2^0", "1*2^0"}) {
        CHECK(Dyadic::parse(s).to_string() == s);
    }
    CHECK(Dyadic::parse("3*2^-5") == Dyadic(mpz_class(3), -5));
    CHECK(Dyadic(mpz_class(1), -1).to_decimal().substr(0, 3) == "0.5");
}

TEST_CASE("interval arithmetic keeps containment under outward rounding") {
    DyadicInterval a(Dyadic(1), Dyadic(2));
    DyadicInterval b(Dyadic(mpz_class(1), -1), Dyadic(1));
    DyadicInterval s = a + b;
    CHECK(s.lo() == Dyadic(mpz_class(3), -1));
    CHECK(s.hi() == Dyadic(3));
    DyadicInterval d = a - b;
    CHECK(d.lo() == Dyadic::zero());
    CHECK(d.hi() == Dyadic(mpz_class(3), -1));
    DyadicInterval m = a * b;
    CHECK(m.lo() == Dyadic(mpz_class(1), -1));
    CHECK(m.hi() == Dyadic(2));
    CHECK(a.mul_scalar(3).hi() == Dyadic(6));
    CHECK(a.mul_scalar(-3).lo() == Dyadic(-6));
    CHECK((-a).hi() == Dyadic(-1));
    CHECK(a.contains(Dyadic(mpz_class(3), -1)));
    CHECK_FALSE(a.contains(Dyadic(3)));
    CHECK(a.contains_mpq(mpq_class(7, 4)));

    DyadicInterval wide(Dyadic(mpz_class(1), 0), Dyadic(mpz_class((1L << 40) + 1), -40));
    Dyadic lo_before = wide.lo();
    Dyadic hi_before = wide.hi();
    CHECK(wide.round_out(8));
    CHECK(wide.lo() <= lo_before);
    CHECK(wide.hi() >= hi_before);
}

TEST_CASE("division and powers bound the true value") {
    DyadicInterval one = DyadicInterval::point(Dyadic(1));
    DyadicInterval three = DyadicInterval::point(Dyadic(3));
    DyadicInterval q = one.div_out(three, 40);
    CHECK(q.contains_mpq(mpq_class(1, 3)));
    CHECK(q.width() <= Dyadic(1).mul_pow2(-38));
    CHECK(q.strictly_positive());

    DyadicInterval p = DyadicInterval::point(Dyadic(2)).pow_out(10, 64);
    CHECK(p.contains_mpq(mpq_class(1024)));
    CHECK(p.width() <= Dyadic(1).mul_pow2(-50));

    Dyadic dn = div_dir(Dyadic(1), Dyadic(3), 40, false);
    Dyadic up = div_dir(Dyadic(1), Dyadic(3), 40, true);
    CHECK(dn.cmp_mpq(mpq_class(1, 3)) < 0);
    CHECK(up.cmp_mpq(mpq_class(1, 3)) > 0);
}

TEST_CASE("logarithms are directed and enclose ln 2") {
    Dyadic two(2);
    Dyadic dn = log_dir(two, 64, false);
    Dyadic up = log_dir(two, 64, true);
    CHECK(dn <= up);
    CHECK(dn.cmp_mpq(kLn2Hi) < 0);
    CHECK(up.cmp_mpq(kLn2Lo) > 0);

    DyadicInterval l = log_out(DyadicInterval::point(two), 64);
    CHECK(overlaps(l, kLn2Lo, kLn2Hi));
    CHECK(l.width() <= Dyadic(1).mul_pow2(-60));
    // log of an exact 1 is exactly 0
    DyadicInterval z = log_out(DyadicInterval::point(Dyadic(1)), 32);
    CHECK(z.contains(Dyadic::zero()));
}
