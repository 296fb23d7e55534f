#ifndef BETACYL_PARRY_ROOT_HPP
#define BETACYL_PARRY_ROOT_HPP

#include <gmpxx.h>

#include "betacyl/dyadic.hpp"
#include "betacyl/qpoly.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

// Certified enclosure lo <= x <= hi of a real number, with hi - lo <= 2^-p.
// Enclosures coming out of parry_poly_root are cells of the dyadic grid (or
// exact points when the root is dyadic), so the same input always produces
// the same bits, and raising p refines an enclosure to a sub-cell of the old
// one rather than to something merely overlapping it.
struct RealEnclosure {
    Dyadic lo;
    Dyadic hi;
    long p = 0;

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }
    DyadicInterval interval() const { return DyadicInterval(lo, hi); }
    bool contains_mpq(const mpq_class& q) const {
        return lo.cmp_mpq(q) <= 0 && hi.cmp_mpq(q) >= 0;
    }
    std::string to_string() const;
};

// Coefficients of x^n - w_1 x^{n-1} - ... - w_n, index k = coefficient of x^k.
QPoly parry_polynomial(const DigitWord& w);

// Exact sign of x^n - sum_i w_i x^{n-i} at a dyadic point.  Evaluation runs
// interval Horner at escalating working precision; a pass that never rounds
// is exact, which is how a true zero is recognized rather than guessed.
int parry_sign_at(const DigitWord& w, const Dyadic& x);

// Enclosure of width <= 2^-p of the unique root >= 1 of
//     x^n = w_1 x^{n-1} + ... + w_n.
// Trailing zero digits do not move the root and are ignored.  Throws
// EmptyWordError for an empty word, OutOfRangeError for a negative digit, and
// RootBelowOneError when every digit is zero (the only root is 0).  A word of
// digit sum 1 yields the exact point enclosure [1, 1].
RealEnclosure parry_poly_root(const DigitWord& w, long p);

// -1 / 0 / +1 as the root of w is below / equal to / above the positive
// rational q.  Exact: one rational Horner evaluation decides, because the
// polynomial changes sign exactly once on (0, oo).
int compare_root_to_rational(const DigitWord& w, const mpq_class& q);

// -1 / 0 / +1 comparing the roots of two words.  Distinct words can share
// their root, so equality is certified through a gcd of the two polynomials
// instead of by refining forever.
int compare_roots(const DigitWord& a, const DigitWord& b);

// Smallest c >= 0 with 2^c >= v; v must be positive.
long ceil_log2(const mpz_class& v);

} // namespace betacyl

#endif
