#include "betacyl/dyadic.hpp"

#include "betacyl/errors.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace betacyl {

void Dyadic::normalize() {
    if (mpz_sgn(man_.get_mpz_t()) == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long e = std::min(exp_, o.exp_);
    mpz_class a = man_, b = o.man_;
    if (exp_ > e) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), exp_ - e);
    if (o.exp_ > e) mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), o.exp_ - e);
    return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
    if (is_zero() || o.is_zero()) return Dyadic();
    return Dyadic(man_ * o.man_, exp_ + o.exp_);
}

int Dyadic::cmp(const Dyadic& o) const {
    int sa = sign(), sb = o.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // same sign: compare magnitudes via bit positions first
    long ha = static_cast<long>(bit_length()) + exp_;
    long hb = static_cast<long>(o.bit_length()) + o.exp_;
    if (ha != hb) return (ha < hb) ? -sa : sa;
    Dyadic d = *this - o;
    return d.sign();
}

int Dyadic::cmp_mpq(const mpq_class& q) const {
    // compare m*2^e with num/den, den > 0
    mpz_class lhs = man_, rhs = q.get_num();
    if (exp_ >= 0) {
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), exp_);
        lhs *= q.get_den();
    } else {
        lhs *= q.get_den();
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), -exp_);
    }
    return mpz_cmp(lhs.get_mpz_t(), rhs.get_mpz_t());
}

mpz_class Dyadic::floor() const {
    mpz_class r = man_;
    if (exp_ >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp_);
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), -exp_);
    }
    return r;
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q(man_);
    if (exp_ >= 0) {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 2, exp_);
        q *= mpq_class(s);
    } else {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 2, -exp_);
        q /= mpq_class(s);
    }
    q.canonicalize();
    return q;
}

bool Dyadic::round_sig(long prec, bool round_up) {
    if (prec < 1) prec = 1;
    long bl = static_cast<long>(bit_length());
    if (bl <= prec) return false;
    long shift = bl - prec;
    mpz_class q;
    if (round_up) {
        mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    } else {
        mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    }
    mpz_class check;
    mpz_mul_2exp(check.get_mpz_t(), q.get_mpz_t(), shift);
    bool changed = (check != man_);
    man_ = q;
    exp_ += shift;
    normalize();
    return changed;
}

Dyadic Dyadic::round_grid(long grid_exp, bool round_up) const {
    if (is_zero() || exp_ >= grid_exp) return *this;
    long shift = grid_exp - exp_;
    mpz_class q;
    if (round_up) {
        mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    } else {
        mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    }
    return Dyadic(q, grid_exp);
}

Dyadic Dyadic::from_mpq_grid(const mpq_class& q, long grid_exp, bool round_up) {
    // q / 2^grid_exp, rounded to an integer in the requested direction
    mpz_class num = q.get_num(), den = q.get_den();
    if (grid_exp >= 0) {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), grid_exp);
    } else {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), -grid_exp);
    }
    mpz_class k;
    if (round_up) {
        mpz_cdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return Dyadic(k, grid_exp);
}

Dyadic Dyadic::from_mpq_dir(const mpq_class& q, long prec, bool round_up) {
    if (mpq_sgn(q.get_mpq_t()) == 0) return Dyadic();
    long nb = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    // |q| is within a factor 2 of 2^(nb-db); grid for `prec` significant bits
    long grid = (nb - db) - prec - 1;
    return from_mpq_grid(q, grid, round_up);
}

std::string Dyadic::to_string() const {
    return man_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& s) {
    auto star = s.find("*2^");
    if (star == std::string::npos) throw ParseError("dyadic literal must look like m*2^e: " + s);
    try {
        mpz_class m(s.substr(0, star));
        long e = std::stol(s.substr(star + 3));
        return Dyadic(m, e);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad dyadic literal: " + s);
    }
}

std::string Dyadic::to_decimal(int digits) const {
    if (is_zero()) return "0";
    mpfr_t f;
    mpfr_init2(f, std::max<long>(static_cast<long>(bit_length()) + 8, 64));
    mpfr_set_z_2exp(f, man_.get_mpz_t(), exp_, MPFR_RNDN);
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, f);
    mpfr_clear(f);
    return buf;
}

double Dyadic::to_double_approx() const {
    if (is_zero()) return 0.0;
    signed long ex;
    double d = mpz_get_d_2exp(&ex, man_.get_mpz_t());
    double tot = static_cast<double>(ex) + static_cast<double>(exp_);
    if (tot > 1020) return d > 0 ? 1e308 : -1e308;
    if (tot < -1020) return 0.0;
    return std::ldexp(d, static_cast<int>(tot));
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw Error("interval endpoints out of order");
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    return DyadicInterval(lo_ + o.lo_, hi_ + o.hi_);
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const {
    return DyadicInterval(lo_ - o.hi_, hi_ - o.lo_);
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
    Dyadic c[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    Dyadic mn = c[0], mx = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < mn) mn = c[i];
        if (c[i] > mx) mx = c[i];
    }
    return DyadicInterval(mn, mx);
}

DyadicInterval DyadicInterval::mul_scalar(long v) const {
    Dyadic a = lo_ * Dyadic(v), b = hi_ * Dyadic(v);
    return v >= 0 ? DyadicInterval(a, b) : DyadicInterval(b, a);
}

bool DyadicInterval::round_out(long prec) {
    bool r1 = lo_.round_sig(prec, /*round_up=*/false);
    bool r2 = hi_.round_sig(prec, /*round_up=*/true);
    return r1 || r2;
}

Dyadic div_dir(const Dyadic& a, const Dyadic& b, long prec, bool round_up) {
    if (b.is_zero()) throw Error("division by zero dyadic");
    if (a.is_zero()) return Dyadic();
    mpq_class q = a.to_mpq() / b.to_mpq();
    q.canonicalize();
    return Dyadic::from_mpq_dir(q, prec, round_up);
}

DyadicInterval DyadicInterval::div_out(const DyadicInterval& o, long prec) const {
    if (o.lo_.sign() <= 0 && o.hi_.sign() >= 0) throw Error("interval division by interval containing 0");
    const bool den_pos = o.lo_.sign() > 0;
    const Dyadic &dl = o.lo_, &dh = o.hi_;
    Dyadic rl, rh;
    if (den_pos) {
        rl = div_dir(lo_, lo_.sign() >= 0 ? dh : dl, prec, false);
        rh = div_dir(hi_, hi_.sign() >= 0 ? dl : dh, prec, true);
    } else {
        rl = div_dir(hi_, hi_.sign() >= 0 ? dh : dl, prec, false);
        rh = div_dir(lo_, lo_.sign() >= 0 ? dl : dh, prec, true);
    }
    return DyadicInterval(rl, rh);
}

DyadicInterval DyadicInterval::pow_out(unsigned long k, long prec) const {
    DyadicInterval acc = DyadicInterval::point(Dyadic::one());
    DyadicInterval base = *this;
    while (k > 0) {
        if (k & 1) {
            acc = acc * base;
            acc.round_out(prec);
        }
        k >>= 1;
        if (k) {
            base = base * base;
            base.round_out(prec);
        }
    }
    return acc;
}

Dyadic log_dir(const Dyadic& x, long prec, bool round_up) {
    if (x.sign() <= 0) throw OutOfRangeError("log requires a positive argument");
    mpfr_t in, out;
    mpfr_init2(in, std::max<long>(static_cast<long>(x.bit_length()) + 4, 16));
    mpfr_set_z_2exp(in, x.man().get_mpz_t(), x.exp(), MPFR_RNDN); // exact: precision covers the mantissa
    mpfr_init2(out, std::max<long>(prec, 16));
    mpfr_log(out, in, round_up ? MPFR_RNDU : MPFR_RNDD);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), out);
    mpfr_clear(in);
    mpfr_clear(out);
    if (mpz_sgn(m.get_mpz_t()) == 0) return Dyadic();
    return Dyadic(m, static_cast<long>(e));
}

DyadicInterval log_out(const DyadicInterval& x, long prec) {
    return DyadicInterval(log_dir(x.lo(), prec, false), log_dir(x.hi(), prec, true));
}

} // namespace betacyl
