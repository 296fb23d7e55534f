#ifndef BETACYL_DYADIC_HPP
#define BETACYL_DYADIC_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

namespace betacyl {

// Exact dyadic rational m * 2^e with an mpz mantissa.  Canonical form keeps
// the mantissa odd (zero is stored as 0 * 2^0), so equal values have equal
// representations and serialized strings are stable.
//
// Addition, subtraction and multiplication are exact; rounding only happens
// where a caller asks for it (round_sig / from_mpq_dir / div_dir), always
// with an explicit direction so intervals can round outward.
class Dyadic {
  public:
    Dyadic() : man_(0), exp_(0) {}
    explicit Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    Dyadic(mpz_class man, long exp) : man_(std::move(man)), exp_(exp) { normalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }
    // value = q rounded to a multiple of 2^grid_exp (floor or ceil).
    static Dyadic from_mpq_grid(const mpq_class& q, long grid_exp, bool round_up);
    // value = q rounded to at most `prec` significant bits in direction `round_up`.
    static Dyadic from_mpq_dir(const mpq_class& q, long prec, bool round_up);

    const mpz_class& man() const { return man_; }
    long exp() const { return exp_; }

    int sign() const { return mpz_sgn(man_.get_mpz_t()); }
    bool is_zero() const { return sign() == 0; }
    // number of bits in |mantissa| (0 for zero)
    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(man_.get_mpz_t(), 2); }

    Dyadic operator-() const { return Dyadic(-man_, exp_); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator*(const Dyadic& o) const;
    Dyadic mul_pow2(long k) const { return is_zero() ? *this : Dyadic(man_, exp_ + k); }

    // sign of (*this - o) without materializing huge aligned mantissas when
    // magnitudes already decide.
    int cmp(const Dyadic& o) const;
    bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
    bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
    bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }
    bool operator==(const Dyadic& o) const { return man_ == o.man_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    int cmp_mpq(const mpq_class& q) const;

    mpz_class floor() const;
    mpq_class to_mpq() const;

    // Round to at most `prec` significant bits.  Returns true when the value
    // actually changed (i.e. information was dropped).
    bool round_sig(long prec, bool round_up);
    // Round to a multiple of 2^grid_exp.
    Dyadic round_grid(long grid_exp, bool round_up) const;

    // serialized as "m*2^e" with the canonical (odd or zero) mantissa
    std::string to_string() const;
    static Dyadic parse(const std::string& s);
    // decimal rendering with `digits` significant digits, for reports
    std::string to_decimal(int digits = 20) const;

    double to_double_approx() const;

  private:
    void normalize();

    mpz_class man_;
    long exp_;
};

// Closed interval [lo, hi] of dyadic rationals.  Arithmetic is exact unless
// round_out is called; outward rounding widens but never loses containment.
class DyadicInterval {
  public:
    DyadicInterval() = default;
    DyadicInterval(Dyadic lo, Dyadic hi);
    static DyadicInterval point(const Dyadic& d) { return DyadicInterval(d, d); }

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    bool is_point() const { return lo_ == hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic midpoint() const { return (lo_ + hi_).mul_pow2(-1); }

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator-(const DyadicInterval& o) const;
    DyadicInterval operator*(const DyadicInterval& o) const;
    DyadicInterval operator-() const { return DyadicInterval(-hi_, -lo_); }
    DyadicInterval mul_scalar(long v) const;
    DyadicInterval mul_pow2(long k) const { return DyadicInterval(lo_.mul_pow2(k), hi_.mul_pow2(k)); }

    // widen endpoints to at most `prec` significant bits; returns true when
    // any rounding occurred
    bool round_out(long prec);

    // requires o.lo > 0 or o.hi < 0; result rounded outward to `prec` bits
    DyadicInterval div_out(const DyadicInterval& o, long prec) const;
    DyadicInterval pow_out(unsigned long k, long prec) const;

    bool contains(const Dyadic& d) const { return lo_ <= d && d <= hi_; }
    bool contains_mpq(const mpq_class& q) const {
        return lo_.cmp_mpq(q) <= 0 && hi_.cmp_mpq(q) >= 0;
    }
    bool strictly_positive() const { return lo_.sign() > 0; }

  private:
    Dyadic lo_, hi_;
};

// Directed division helper: a/b rounded to `prec` significant bits.
Dyadic div_dir(const Dyadic& a, const Dyadic& b, long prec, bool round_up);

// Natural log with certified direction, via MPFR (whose values are dyadic,
// so the conversion back is exact).  Requires x > 0.
Dyadic log_dir(const Dyadic& x, long prec, bool round_up);
// log over an interval with positive lower end; outward
DyadicInterval log_out(const DyadicInterval& x, long prec);

} // namespace betacyl

#endif
