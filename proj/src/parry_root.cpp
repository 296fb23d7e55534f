#include "betacyl/parry_root.hpp"

#include <algorithm>

#include "betacyl/errors.hpp"

namespace betacyl {

namespace {

// digits with trailing zeros removed; validates digit range
DigitWord trimmed_digits(const DigitWord& w) {
    if (w.empty()) throw EmptyWordError();
    for (int d : w) {
        if (d < 0) throw OutOfRangeError("digits must be nonnegative");
    }
    DigitWord t = w;
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

mpz_class digit_sum(const DigitWord& w) {
    mpz_class s = 0;
    for (int d : w) s += d;
    return s;
}

} // namespace

std::string RealEnclosure::to_string() const {
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

long ceil_log2(const mpz_class& v) {
    if (mpz_sgn(v.get_mpz_t()) <= 0) throw OutOfRangeError("ceil_log2 needs a positive value");
    size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    // v <= 2^bits - 1; v is a power of two exactly when only one bit is set
    bool pow2 = mpz_scan1(v.get_mpz_t(), 0) == bits - 1;
    return pow2 ? long(bits) - 1 : long(bits);
}

QPoly parry_polynomial(const DigitWord& w) {
    size_t n = w.size();
    QPoly p(n + 1);
    p[n] = 1;
    for (size_t i = 0; i < n; ++i) p[n - 1 - i] = -w[i];
    qpoly_trim(p);
    return p;
}

int parry_sign_at(const DigitWord& w, const Dyadic& x) {
    for (int d : w) {
        if (d < 0) throw OutOfRangeError("digits must be nonnegative");
    }
    // Horner: h <- h*x - d, starting from h = 1, ends at the polynomial value.
    // Exact mantissas grow like n * bits(x), so run the loop on intervals
    // rounded outward to q bits and only escalate while the sign is unsettled.
    long q = std::max<long>(64, long(x.bit_length()) + 64);
    const DyadicInterval xi = DyadicInterval::point(x);
    for (;;) {
        DyadicInterval h = DyadicInterval::point(Dyadic::one());
        bool rounded = false;
        for (int d : w) {
            h = h * xi - DyadicInterval::point(Dyadic(d));
            rounded = h.round_out(q) || rounded;
        }
        if (h.lo().sign() > 0) return 1;
        if (h.hi().sign() < 0) return -1;
        if (!rounded) {
            // no bits were ever dropped, so h is an exact point; a nonzero
            // value would have been decided above, leaving only a true zero
            return 0;
        }
        if (q > (1L << 30)) throw Error("sign evaluation failed to converge");
        q *= 2;
    }
}

RealEnclosure parry_poly_root(const DigitWord& w, long p) {
    if (p < 1) throw OutOfRangeError("enclosure precision must be >= 1");
    DigitWord t = trimmed_digits(w);
    mpz_class s = digit_sum(t);
    if (s == 0) throw RootBelowOneError("all digits are zero, the root is 0");
    if (s == 1) {
        // x^n = x^{n-i} forces x = 1
        RealEnclosure e;
        e.lo = Dyadic::one();
        e.hi = Dyadic::one();
        e.p = p;
        return e;
    }

    // Bracket [1, 1 + 2^c] with 2^c >= digit sum: the polynomial is negative
    // at 1 (1 - s < 0) and positive past 1 + s.  Starting from a power-of-two
    // width makes every bisection cell a dyadic grid cell, so enclosures are
    // canonical and nest as p grows.
    long c = ceil_log2(s);
    Dyadic lo = Dyadic::one();
    Dyadic hi = Dyadic::one() + Dyadic(1).mul_pow2(c);
    for (long step = 0; step < c + p; ++step) {
        Dyadic mid = (lo + hi).mul_pow2(-1);
        int sg = parry_sign_at(t, mid);
        if (sg == 0) {
            RealEnclosure e;
            e.lo = mid;
            e.hi = mid;
            e.p = p;
            return e;
        }
        if (sg < 0) lo = mid; else hi = mid;
    }
    RealEnclosure e;
    e.lo = lo;
    e.hi = hi;
    e.p = p;
    return e;
}

int compare_root_to_rational(const DigitWord& w, const mpq_class& q) {
    DigitWord t = trimmed_digits(w);
    if (mpq_sgn(q.get_mpq_t()) <= 0) throw OutOfRangeError("comparison point must be positive");
    mpz_class s = digit_sum(t);
    if (s == 0) throw RootBelowOneError("all digits are zero, the root is 0");
    if (s == 1) return -cmp(q, 1);
    // sign of P(q) flips exactly once on (0, oo), from - to + across the root
    mpq_class h = 1;
    for (int d : t) h = h * q - d;
    int sg = mpq_sgn(h.get_mpq_t());
    return -sg;
}

int compare_roots(const DigitWord& a, const DigitWord& b) {
    DigitWord ta = trimmed_digits(a);
    DigitWord tb = trimmed_digits(b);
    if (ta == tb) return 0;

    bool have_gcd = false;
    QPoly g;

    for (long p = 32;; p *= 2) {
        RealEnclosure ea = parry_poly_root(ta, p);
        RealEnclosure eb = parry_poly_root(tb, p);
        if (ea.hi < eb.lo) return -1;
        if (eb.hi < ea.lo) return 1;

        // overlapping (or touching) enclosures: consult the common factor
        if (!have_gcd) {
            g = qpoly_gcd(parry_polynomial(ta), parry_polynomial(tb));
            have_gcd = true;
        }
        Dyadic l = std::max(ea.lo, eb.lo);
        Dyadic r = std::min(ea.hi, eb.hi);
        if (qpoly_degree(g) >= 1) {
            mpq_class gl = qpoly_eval_mpq(g, l.to_mpq());
            if (l == r) {
                if (mpq_sgn(gl.get_mpq_t()) == 0) return 0;
            } else {
                mpq_class gr = qpoly_eval_mpq(g, r.to_mpq());
                int sl = mpq_sgn(gl.get_mpq_t());
                int sr = mpq_sgn(gr.get_mpq_t());
                // a common root inside [l, r] is a positive root of both
                // polynomials, and each has exactly one, so they coincide
                if (sl == 0 || sr == 0 || sl != sr) return 0;
            }
        }
        if (l == r) {
            // enclosures touch at a single dyadic point and the roots differ
            mpq_class lq = l.to_mpq();
            int ca = compare_root_to_rational(ta, lq);
            int cb = compare_root_to_rational(tb, lq);
            if (ca < cb) return -1;
            if (ca > cb) return 1;
            // both roots sit strictly on the same side inside touching cells;
            // refine to separate them
        }
        if (p > (1L << 24)) throw Error("root comparison failed to converge");
    }
}

} // namespace betacyl
