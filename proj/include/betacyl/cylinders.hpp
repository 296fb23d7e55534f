#ifndef BETACYL_CYLINDERS_HPP
#define BETACYL_CYLINDERS_HPP

#include <vector>

#include "betacyl/beta_spec.hpp"
#include "betacyl/expansion.hpp"
#include "betacyl/parry_root.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

// The set of bases whose expansion of 1 begins with a given word.  It is an
// interval: closed on the left at the word's own root when that root exceeds
// 1, open at 1 otherwise, and open on the right at the root of the
// incremented recurrent prefix.
struct ParameterCylinder {
    DigitWord word;
    RealEnclosure lower;
    RealEnclosure upper;
    bool lower_closed = true;
    // certified bounds on upper - lower (length_lo is clamped at 0 when the
    // endpoint enclosures still overlap)
    Dyadic length_lo;
    Dyadic length_hi;
};

// Endpoint enclosures of width <= 2^-p for a self-admissible word.  The left
// endpoint is the root of the word itself; the right endpoint is the root of
// its first tau digits with the last of them incremented.
ParameterCylinder cylinder_endpoints(const DigitWord& w, long p);

// Cylinder of the first n digits of the expansion of 1 in the given base.
ParameterCylinder cylinder_of_beta(const BetaSpec& spec, long n, long p);

// Certified lower bound on the cylinder length at depth n:
//   (lower-1)^2/lower * upper^-n, times, when n is not a multiple of the
//   recurrence time, the digit tail sum from t+1 to tau with the last digit
//   incremented.  degenerate marks the vacuous case lower = 1 (value 0).
struct LengthLowerBound {
    Dyadic value;
    bool degenerate = false;
    long tau = 0;
    long t = 0;
};
LengthLowerBound length_lower_bound(const BetaSpec& spec, long n, long p);

// One cylinder visited by the partition walk, with the certified bound on the
// distance between its right endpoint and the next cylinder's left endpoint
// (the two are equal numbers; the bound just reflects enclosure width).
struct PartitionRow {
    DigitWord word;
    RealEnclosure lower;
    RealEnclosure upper;
    bool has_next = false;
    Dyadic gap_bound;
    bool adjacent_ok = true;
};

struct PartitionReport {
    std::vector<PartitionRow> rows;
    long violations = 0;
    bool ok() const { return violations == 0; }
};

// Walk the depth-n cylinders that meet (beta_lo, beta_hi] in successor order
// and check that consecutive endpoint enclosures agree to within 2^-(p-1).
PartitionReport verify_partition(long n, const BetaSpec& beta_lo, const BetaSpec& beta_hi,
                                 long p);

// Cylinders of the expansion of 1 at every depth 1..n_max (lower endpoints
// increase to beta, upper endpoints decrease to it).
std::vector<ParameterCylinder> endpoint_sequences(const BetaSpec& spec, long n_max, long p);

// Self-admissible words of length n whose cylinder meets (beta1, beta2] and
// whose digits at positions t+1 .. t+k (1-based, t from recurrence_time) are
// all zero.  Requires 1 <= k < n and beta1 < beta2.  Lexicographic order.
std::vector<DigitWord> lambda_nk(long n, long k, const BetaSpec& beta1, const BetaSpec& beta2);

} // namespace betacyl

#endif
