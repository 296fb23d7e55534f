#ifndef BETACYL_QPOLY_HPP
#define BETACYL_QPOLY_HPP

#include <gmpxx.h>

#include <vector>

#include "betacyl/dyadic.hpp"

namespace betacyl {

// Dense polynomial over Q, coefficient of x^i at index i.  Only the handful
// of operations the digit engines need; degrees stay small in practice.
using QPoly = std::vector<mpq_class>;

void qpoly_trim(QPoly& p);
bool qpoly_is_zero(const QPoly& p);
int qpoly_degree(const QPoly& p); // -1 for the zero polynomial

QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// remainder of a modulo b (b nonzero), standard long division over Q
QPoly qpoly_rem(QPoly a, const QPoly& b);
// monic gcd; gcd(0, b) = monic b
QPoly qpoly_gcd(QPoly a, QPoly b);

// exact evaluation at a rational point
mpq_class qpoly_eval_mpq(const QPoly& p, const mpq_class& x);

// certified interval evaluation: coefficients rounded outward at `prec`,
// Horner over the interval with outward rounding
DyadicInterval qpoly_eval_interval(const QPoly& p, const DyadicInterval& x, long prec);

} // namespace betacyl

#endif
