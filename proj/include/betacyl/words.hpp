#ifndef BETACYL_WORDS_HPP
#define BETACYL_WORDS_HPP

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace betacyl {

// Finite digit string w_1..w_n, nonnegative entries, stored 0-based.
using DigitWord = std::vector<int>;

DigitWord parse_word(const std::string& csv);
std::string word_to_string(const DigitWord& w);

// Lexicographic comparison with zero padding: the shorter word is compared
// as if extended by zeros, so (1) == (1,0).
int lex_compare(const DigitWord& a, const DigitWord& b);

// w is self-admissible when every proper shift sigma^i(w) is lexicographically
// <= the prefix of w of the same length (1 <= i < n).
bool is_self_admissible(const DigitWord& w);
// quadratic reference implementation, kept for cross-checks
bool is_self_admissible_naive(const DigitWord& w);

// Failure function (longest proper border) of every prefix; border[k-1] is
// the border length of w_1..w_k.
std::vector<int> prefix_borders(const DigitWord& w);

struct RecurrenceInfo {
    long tau;           // smallest k < n with sigma^k(w) = w_1..w_{n-k}, or n if none
    long t;             // n - floor(n/tau)*tau  (equivalently n mod tau)
    bool non_recurrent; // tau == n
};

// Requires w self-admissible (throws NotSelfAdmissibleError otherwise).
RecurrenceInfo recurrence_time(const DigitWord& w);
// tau of every prefix of w in one linear pass; no admissibility requirement,
// the value is the smallest period of the prefix.
std::vector<long> tau_profile(const DigitWord& w);

// Immediate lexicographic successor inside the set of length-n
// self-admissible words: increment position tau, zero the tail.
DigitWord successor(const DigitWord& w);

// Walk self-admissible words of length n in lexicographic order starting at
// (1,0,...,0), while the first digit stays <= max_first_digit.  emit returns
// false to stop early.
void enumerate_self_admissible(int n, int max_first_digit,
                               const std::function<bool(const DigitWord&)>& emit);

// A digit sequence that is eventually periodic: preperiod then repeated
// period.  Used for the infinite expansion of 1.
struct EventuallyPeriodicSequence {
    DigitWord preperiod;
    DigitWord period; // nonempty

    int digit_at(size_t i) const; // 0-based
    DigitWord prefix(size_t n) const;
};

// Admissibility criterion for words of the beta-shift: every shift
// sigma^i(w), i >= shift_from, must be lexicographically <= the prefix of
// eps_star of the same length.  shift_from is 0 for the full criterion
// (the word itself included); 1 checks proper shifts only.
bool is_admissible(const DigitWord& w, const EventuallyPeriodicSequence& eps_star,
                   int shift_from = 0);

// Number of admissible words of length n for the shift with expansion
// eps_star, via the path-count automaton of the shift.
mpz_class count_admissible(long n, const EventuallyPeriodicSequence& eps_star);

} // namespace betacyl

#endif
