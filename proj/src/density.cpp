#include "betacyl/density.hpp"

#include <algorithm>
#include <string>

#include "betacyl/errors.hpp"
#include "betacyl/expansion.hpp"
#include "betacyl/parry_root.hpp"
#include "betacyl/words.hpp"

namespace betacyl {

namespace {

// Log precision for the d_n ratios.  The lengths are certified at the root
// precision already; the ratio itself only needs a few dozen good bits.
constexpr long kLogPrecision = 128;

DyadicInterval log_of_beta(const BetaSpec& beta) {
    long p = 32;
    for (;;) {
        RealEnclosure e = beta.refine(p);
        if (e.lo > Dyadic::one()) return log_out(e.interval(), kLogPrecision);
        if (p > (1L << 24)) throw Error("beta enclosure does not separate from 1");
        p *= 2;
    }
}

} // namespace

long auto_density_precision(const BetaSpec& beta, long n_max) {
    RealEnclosure e = beta.refine(8);
    mpz_class top = e.hi.floor() + 1;
    long lam = std::max(1L, ceil_log2(top));
    // lengths can shrink like beta^(-2n) when the prefix is far from
    // recurrent, so budget twice the naive beta^(-n) scale
    return 2 * n_max * lam + 64;
}

DensityProfile density_profile(const BetaSpec& beta, long n_max, long p) {
    if (n_max < 2) throw OutOfRangeError("density profile needs n_max >= 2");
    if (p == 0) p = auto_density_precision(beta, n_max);
    if (p < 1) throw OutOfRangeError("precision must be >= 1");

    DigitWord word = digits_of_one(beta, n_max).digits;
    std::vector<int> pi = prefix_borders(word);
    DyadicInterval logb = log_of_beta(beta);

    DensityProfile out;
    out.precision = p;
    out.window_lo = std::max(1L, n_max / 2);
    out.window_hi = n_max;
    out.rows.reserve(static_cast<size_t>(n_max));

    long digit_sum = 0;
    for (long n = 1; n <= n_max; ++n) {
        digit_sum += word[n - 1];
        DensityRow row;
        row.n = n;
        row.tau = n - pi[n - 1];
        row.t = n % row.tau;
        row.degenerate = digit_sum <= 1;

        DigitWord prefix(word.begin(), word.begin() + n);
        RealEnclosure lower = parry_poly_root(prefix, p);
        DigitWord up(word.begin(), word.begin() + row.tau);
        up.back() += 1;
        RealEnclosure upper = parry_poly_root(up, p);

        Dyadic len_lo = upper.lo - lower.hi;
        Dyadic len_hi = upper.hi - lower.lo;
        if (len_lo.sign() <= 0) {
            throw PrecisionExhaustedError("cylinder length at depth " + std::to_string(n) +
                                              " is not certified positive",
                                          -1, p);
        }
        DyadicInterval log_len = log_out(DyadicInterval(len_lo, len_hi), kLogPrecision);
        DyadicInterval d = (-log_len).div_out(logb.mul_scalar(n), kLogPrecision);
        row.d_lo = d.lo();
        row.d_hi = d.hi();
        out.rows.push_back(row);
    }

    bool first = true;
    for (const DensityRow& row : out.rows) {
        if (row.n < out.window_lo) continue;
        if (first) {
            out.liminf_lo = row.d_lo;
            out.liminf_hi = row.d_hi;
            out.limsup_lo = row.d_lo;
            out.limsup_hi = row.d_hi;
            first = false;
            continue;
        }
        if (row.d_lo < out.liminf_lo) out.liminf_lo = row.d_lo;
        if (row.d_hi < out.liminf_hi) out.liminf_hi = row.d_hi;
        if (row.d_lo > out.limsup_lo) out.limsup_lo = row.d_lo;
        if (row.d_hi > out.limsup_hi) out.limsup_hi = row.d_hi;
    }
    return out;
}

mpq_class tau_beta_estimate(const BetaSpec& beta, long n_max) {
    if (n_max < 2) throw OutOfRangeError("tau estimate needs n_max >= 2");
    DigitWord word = digits_of_one(beta, n_max).digits;
    std::vector<int> pi = prefix_borders(word);
    long lo = std::max(1L, n_max / 2);
    mpq_class best;
    bool first = true;
    for (long n = lo; n <= n_max; ++n) {
        long tau = n - pi[n - 1];
        long t = n % tau;
        mpq_class v(tau - t, n);
        v.canonicalize();
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

std::vector<long> full_recurrence_indices(const BetaSpec& beta, long n_max) {
    if (n_max < 0) throw OutOfRangeError("n_max must be nonnegative");
    std::vector<long> out;
    if (n_max == 0) return out;
    DigitWord word = digits_of_one(beta, n_max).digits;
    std::vector<int> pi = prefix_borders(word);
    for (long n = 1; n <= n_max; ++n) {
        if (pi[n - 1] == 0) out.push_back(n);
    }
    return out;
}

} // namespace betacyl
