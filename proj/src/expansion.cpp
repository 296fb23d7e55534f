#include "betacyl/expansion.hpp"

#include <climits>
#include <cstdlib>
#include <string>

#include "betacyl/errors.hpp"

namespace betacyl {

long default_pmax() {
    static long cached = [] {
        const char* env = std::getenv("BETACYL_PMAX");
        if (env != nullptr) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != nullptr && *end == '\0' && v >= 1) return v;
        }
        return 4096L;
    }();
    return cached;
}

namespace {

bool is_exact_zero(const DyadicInterval& y) {
    return y.is_point() && y.lo().is_zero();
}

struct OrbitPass {
    bool decided = false;
    long fail_index = 0; // 0-based digit that could not be committed
    DigitWord digits;
    long zero_at = -1; // 1-based step after which the remainder is exactly 0
};

int digit_to_int(const mpz_class& m) {
    if (!m.fits_sint_p()) throw OutOfRangeError("digit does not fit in an int");
    return int(m.get_si());
}

// One full orbit pass at enclosure precision p.  The working precision q is
// padded by n * log2(beta) so that per-step outward rounding cannot eat into
// the 2^-p budget; exact point orbits (integer and small dyadic data) stay
// points because their mantissas never reach q bits.
OrbitPass run_orbit(const BetaSpec& beta, const mpq_class& x0, bool from_one,
                    long n, long p) {
    RealEnclosure be = beta.refine(p);
    DyadicInterval b = be.interval();
    long lam = ceil_log2(mpz_class(be.hi.floor() + 1));
    long q = p + 8 + n * std::max<long>(1, lam);

    DyadicInterval y;
    if (from_one) {
        y = DyadicInterval::point(Dyadic::one());
    } else {
        Dyadic lo = Dyadic::from_mpq_grid(x0, -q, false);
        if (lo.cmp_mpq(x0) == 0) {
            y = DyadicInterval::point(lo);
        } else {
            y = DyadicInterval(lo, lo + Dyadic(1).mul_pow2(-q));
        }
    }

    OrbitPass pass;
    pass.digits.reserve(size_t(n));
    for (long k = 1; k <= n; ++k) {
        if (is_exact_zero(y)) {
            pass.digits.push_back(0);
            continue;
        }
        DyadicInterval z = b * y;
        z.round_out(q);
        mpz_class m = z.lo().floor();
        if (m < 0) {
            pass.fail_index = k - 1;
            return pass;
        }
        if (z.hi().cmp(Dyadic(mpz_class(m + 1), 0)) >= 0) {
            // enclosure straddles the integer boundary, digit not certified
            pass.fail_index = k - 1;
            return pass;
        }
        pass.digits.push_back(digit_to_int(m));
        y = z - DyadicInterval::point(Dyadic(m, 0));
        if (pass.zero_at < 0 && is_exact_zero(y)) pass.zero_at = k;
    }
    pass.decided = true;
    return pass;
}

// escalation wrapper: double the precision until every digit commits
OrbitPass run_orbit_escalating(const BetaSpec& beta, const mpq_class& x0,
                               bool from_one, long n, long p_max, long* p_used) {
    if (n < 1) throw OutOfRangeError("digit count must be >= 1");
    if (p_max < 1) throw OutOfRangeError("precision cap must be >= 1");
    long p = std::min<long>(64, p_max);
    for (;;) {
        OrbitPass pass = run_orbit(beta, x0, from_one, n, p);
        if (pass.decided) {
            *p_used = p;
            return pass;
        }
        if (p >= p_max) {
            throw PrecisionExhaustedError(
                "digit " + std::to_string(pass.fail_index) +
                    " straddles an integer at the precision cap",
                pass.fail_index, p);
        }
        p = std::min(p * 2, p_max);
    }
}

DigitWord trimmed(const DigitWord& w) {
    DigitWord t = w;
    while (!t.empty() && t.back() == 0) t.pop_back();
    return t;
}

} // namespace

DigitsResult digits_of_one(const BetaSpec& beta, long n, long p_max) {
    if (n < 1) throw OutOfRangeError("digit count must be >= 1");
    if (beta.kind() == BetaSpec::Kind::RootOfWord) {
        // a word whose shifts stay below its own prefixes is the expansion of
        // 1 of its root, so the digits are the word itself and then zeros
        DigitWord w = trimmed(beta.word());
        DigitsResult r;
        r.digits.assign(size_t(n), 0);
        for (size_t i = 0; i < w.size() && i < size_t(n); ++i) r.digits[i] = w[i];
        r.precision = 0;
        return r;
    }
    DigitsResult r;
    OrbitPass pass = run_orbit_escalating(beta, 0, true, n, p_max, &r.precision);
    r.digits = std::move(pass.digits);
    return r;
}

DigitsResult digits_of_x(const BetaSpec& beta, const mpq_class& x, long n, long p_max) {
    if (n < 1) throw OutOfRangeError("digit count must be >= 1");
    if (mpq_sgn(x.get_mpq_t()) < 0 || cmp(x, 1) >= 0)
        throw OutOfRangeError("x must lie in [0, 1)");
    DigitsResult r;
    OrbitPass pass = run_orbit_escalating(beta, x, false, n, p_max, &r.precision);
    r.digits = std::move(pass.digits);
    return r;
}

InfiniteExpansionResult infinite_expansion_of_one(const BetaSpec& beta, long horizon,
                                                  long p_max) {
    if (horizon < 1) throw OutOfRangeError("horizon must be >= 1");
    InfiniteExpansionResult r;
    if (beta.kind() == BetaSpec::Kind::RootOfWord) {
        DigitWord w = trimmed(beta.word());
        r.periodic = true;
        r.sequence.preperiod = {};
        r.sequence.period = w;
        r.sequence.period.back() -= 1;
        r.prefix = r.sequence.prefix(size_t(horizon));
        r.precision = 0;
        return r;
    }
    OrbitPass pass = run_orbit_escalating(beta, 0, true, horizon, p_max, &r.precision);
    if (pass.zero_at >= 1) {
        // the orbit of 1 reached an exact zero: simple Parry, periodic form
        DigitWord w(pass.digits.begin(), pass.digits.begin() + pass.zero_at);
        r.periodic = true;
        r.sequence.preperiod = {};
        r.sequence.period = std::move(w);
        r.sequence.period.back() -= 1;
        r.prefix = r.sequence.prefix(size_t(horizon));
        return r;
    }
    r.periodic = false;
    r.prefix = std::move(pass.digits);
    return r;
}

} // namespace betacyl
