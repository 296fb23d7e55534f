#ifndef BETACYL_EXPANSION_HPP
#define BETACYL_EXPANSION_HPP

#include <gmpxx.h>

#include "betacyl/beta_spec.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

// Digit engine for the map x -> beta*x - floor(beta*x).  A digit is committed
// only when the enclosure of beta*x_k fits inside [m, m+1) for an integer m;
// otherwise the whole orbit is re-run at doubled precision.  Orbits whose
// enclosures stay exact points (integer or dyadic data throughout) decide
// boundary hits exactly instead of escalating.

// precision cap used when the caller does not pass one: the BETACYL_PMAX
// environment variable, or 4096 bits
long default_pmax();

struct DigitsResult {
    DigitWord digits;
    long precision = 0; // working precision of the successful pass; 0 = symbolic
};

// First n digits of the expansion of 1 in base beta.  For a root-of-word
// base the answer is the word itself padded with zeros (such a word is the
// expansion of 1 of its own root), returned without any numeric work.
DigitsResult digits_of_one(const BetaSpec& beta, long n, long p_max = default_pmax());

// First n digits of the expansion of x in base beta, 0 <= x < 1.
DigitsResult digits_of_x(const BetaSpec& beta, const mpq_class& x, long n,
                         long p_max = default_pmax());

struct InfiniteExpansionResult {
    // true: the base is a proven simple Parry number and `sequence` holds the
    // periodic form of its infinite expansion of 1.  false: only `prefix` is
    // certified (the orbit was not proven to terminate within the horizon).
    bool periodic = false;
    EventuallyPeriodicSequence sequence;
    DigitWord prefix;
    long precision = 0;
};

// Infinite expansion of 1.  A root-of-word base always terminates, with the
// periodic form (w_1, ..., w_{m-1}, w_m - 1) repeating.  A literal base gets
// the periodic form only when its orbit provably reaches an exact zero
// (integers do); everything else is reported as a certified prefix.
InfiniteExpansionResult infinite_expansion_of_one(const BetaSpec& beta, long horizon,
                                                  long p_max = default_pmax());

} // namespace betacyl

#endif
