#ifndef BETACYL_DENSITY_HPP
#define BETACYL_DENSITY_HPP

#include <vector>

#include <gmpxx.h>

#include "betacyl/beta_spec.hpp"
#include "betacyl/dyadic.hpp"

namespace betacyl {

// One row of the density table.  d_n is a certified enclosure of
// (-log |I_n(beta)| / log beta) / n, where I_n(beta) is the parameter
// cylinder of depth n around beta.  tau is the smallest period of the
// digit prefix of length n, t = n mod tau.  Rows whose prefix has digit
// sum <= 1 (shape (1,0^k)) have a lower endpoint pinned at 1 and are
// marked degenerate; their d values are still certified.
struct DensityRow {
    long n = 0;
    long tau = 0;
    long t = 0;
    bool degenerate = false;
    Dyadic d_lo;
    Dyadic d_hi;
};

struct DensityProfile {
    std::vector<DensityRow> rows; // n = 1 .. n_max
    long window_lo = 0;           // tail window used for the aggregates
    long window_hi = 0;
    Dyadic liminf_lo, liminf_hi;  // encloses min of d_n over the window
    Dyadic limsup_lo, limsup_hi;  // encloses max of d_n over the window
    long precision = 0;           // root precision actually used
};

// Precision that keeps lengths around beta^(-2n) resolvable.
long auto_density_precision(const BetaSpec& beta, long n_max);

// Requires n_max >= 2.  p = 0 selects auto_density_precision.  Throws
// PrecisionExhaustedError when a cylinder length cannot be certified
// positive at the chosen precision.
DensityProfile density_profile(const BetaSpec& beta, long n_max, long p = 0);

// Finite-horizon stand-in for limsup (tau_n - t_n)/n: the exact maximum
// of that ratio over the tail window [n_max/2, n_max].  Requires n_max >= 2.
mpq_class tau_beta_estimate(const BetaSpec& beta, long n_max);

// All n <= n_max whose digit prefix has no proper period (tau_n = n).
// n_max = 0 yields an empty list.
std::vector<long> full_recurrence_indices(const BetaSpec& beta, long n_max);

} // namespace betacyl

#endif
