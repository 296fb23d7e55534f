#include "betacyl/cylinders.hpp"

#include <algorithm>

#include "betacyl/errors.hpp"

namespace betacyl {

namespace {

// word for the right endpoint: first tau digits, last one incremented
DigitWord upper_word(const DigitWord& w, long tau) {
    DigitWord u(w.begin(), w.begin() + tau);
    u.back() += 1;
    return u;
}

int compare_word_root_to_beta(const DigitWord& w, const BetaSpec& b) {
    if (b.is_rational()) return compare_root_to_rational(w, b.rational());
    return compare_roots(w, b.word());
}

// certified upper bound on |x - y| given enclosures of x and y
Dyadic enclosure_distance_bound(const RealEnclosure& a, const RealEnclosure& b) {
    Dyadic d1 = b.hi - a.lo;
    Dyadic d2 = a.hi - b.lo;
    Dyadic m = std::max(d1, d2);
    return m.sign() < 0 ? Dyadic::zero() : m;
}

} // namespace

ParameterCylinder cylinder_endpoints(const DigitWord& w, long p) {
    if (w.empty()) throw EmptyWordError();
    if (!is_self_admissible(w)) throw NotSelfAdmissibleError(word_to_string(w));
    RecurrenceInfo rec = recurrence_time(w);

    ParameterCylinder c;
    c.word = w;
    mpz_class s = 0;
    for (int d : w) s += d;
    if (s == 0) throw RootBelowOneError("word of zero digits has no cylinder");
    if (s == 1) {
        // root exactly 1: interval open at 1
        c.lower.lo = Dyadic::one();
        c.lower.hi = Dyadic::one();
        c.lower.p = p;
        c.lower_closed = false;
    } else {
        c.lower = parry_poly_root(w, p);
        c.lower_closed = true;
    }
    c.upper = parry_poly_root(upper_word(w, rec.tau), p);
    c.length_lo = c.upper.lo - c.lower.hi;
    if (c.length_lo.sign() < 0) c.length_lo = Dyadic::zero();
    c.length_hi = c.upper.hi - c.lower.lo;
    return c;
}

ParameterCylinder cylinder_of_beta(const BetaSpec& spec, long n, long p) {
    DigitWord w = digits_of_one(spec, n).digits;
    return cylinder_endpoints(w, p);
}

LengthLowerBound length_lower_bound(const BetaSpec& spec, long n, long p) {
    DigitWord w = digits_of_one(spec, n).digits;
    RecurrenceInfo rec = recurrence_time(w);

    LengthLowerBound out;
    out.tau = rec.tau;
    out.t = rec.t;
    mpz_class s = 0;
    for (int d : w) s += d;
    if (s <= 1) {
        // lower endpoint is exactly 1, the bound collapses
        out.value = Dyadic::zero();
        out.degenerate = true;
        return out;
    }

    RealEnclosure lo = parry_poly_root(w, p);
    RealEnclosure up = parry_poly_root(upper_word(w, rec.tau), p);
    DyadicInterval l = lo.interval();
    DyadicInterval u = up.interval();
    DyadicInterval one = DyadicInterval::point(Dyadic::one());

    // (l - 1)^2 / l
    DyadicInterval c = (l - one).pow_out(2, p).div_out(l, p);
    // u^-n
    DyadicInterval scale = one.div_out(u.pow_out(static_cast<unsigned long>(n), p), p);
    DyadicInterval bound = c * scale;
    bound.round_out(p);

    if (rec.t > 0) {
        DyadicInterval inv_u = one.div_out(u, p);
        DyadicInterval tail = DyadicInterval::point(Dyadic::zero());
        for (long i = rec.tau; i >= rec.t + 1; --i) {
            long d = w[size_t(i - 1)] + (i == rec.tau ? 1 : 0);
            tail = (tail + DyadicInterval::point(Dyadic(d))) * inv_u;
            tail.round_out(p);
        }
        bound = bound * tail;
        bound.round_out(p);
    }

    out.value = bound.lo();
    if (out.value.sign() < 0) out.value = Dyadic::zero();
    return out;
}

PartitionReport verify_partition(long n, const BetaSpec& beta_lo, const BetaSpec& beta_hi,
                                 long p) {
    if (n < 1) throw OutOfRangeError("depth must be >= 1");
    if (compare_betas(beta_lo, beta_hi) >= 0) return PartitionReport{};

    PartitionReport report;
    Dyadic allowance = Dyadic(1).mul_pow2(-p + 1);

    DigitWord w = digits_of_one(beta_lo, n).digits;
    ParameterCylinder cur = cylinder_endpoints(w, p);
    for (;;) {
        PartitionRow row;
        row.word = cur.word;
        row.lower = cur.lower;
        row.upper = cur.upper;

        DigitWord next = successor(cur.word);
        ParameterCylinder nc = cylinder_endpoints(next, p);
        // every walked pair gets the adjacency check, including the closing
        // pair against the first cylinder past the range
        row.gap_bound = enclosure_distance_bound(cur.upper, nc.lower);
        row.adjacent_ok = row.gap_bound <= allowance;
        if (!row.adjacent_ok) report.violations += 1;
        // the next cylinder starts where ours ends; stop once that point has
        // reached the top of the range
        if (compare_word_root_to_beta(next, beta_hi) >= 0) {
            report.rows.push_back(std::move(row));
            break;
        }
        row.has_next = true;
        report.rows.push_back(std::move(row));
        cur = std::move(nc);
    }
    return report;
}

std::vector<ParameterCylinder> endpoint_sequences(const BetaSpec& spec, long n_max, long p) {
    if (n_max < 1) throw OutOfRangeError("n_max must be >= 1");
    DigitWord full = digits_of_one(spec, n_max).digits;
    std::vector<ParameterCylinder> out;
    out.reserve(size_t(n_max));
    for (long n = 1; n <= n_max; ++n) {
        DigitWord prefix(full.begin(), full.begin() + n);
        out.push_back(cylinder_endpoints(prefix, p));
    }
    return out;
}

std::vector<DigitWord> lambda_nk(long n, long k, const BetaSpec& beta1, const BetaSpec& beta2) {
    if (n < 1) throw InvalidRangeError("word length must be >= 1");
    if (k < 1 || k >= n) throw InvalidRangeError("gap must satisfy 1 <= k < n");
    if (compare_betas(beta1, beta2) >= 0) throw InvalidRangeError("need beta1 < beta2");

    // words met by some beta <= beta2 start with a digit <= floor(beta2)
    mpz_class top = beta2.refine(8).hi.floor();
    int max_first = top.fits_sint_p() ? static_cast<int>(top.get_si()) : 0;
    if (max_first < 1) throw InvalidRangeError("beta2 leaves no admissible first digit");

    std::vector<DigitWord> out;
    enumerate_self_admissible(static_cast<int>(n), max_first, [&](const DigitWord& w) {
        RecurrenceInfo info = recurrence_time(w);
        if (info.t + k > n) return true;
        for (long i = info.t; i < info.t + k; ++i) {
            if (w[i] != 0) return true;
        }
        // cylinder [root(w), root(w+)) meets (beta1, beta2] exactly when
        // root(w) <= beta2 and root(w+) > beta1
        if (compare_word_root_to_beta(w, beta2) > 0) return true;
        DigitWord up(w.begin(), w.begin() + info.tau);
        up.back() += 1;
        if (compare_word_root_to_beta(up, beta1) <= 0) return true;
        out.push_back(w);
        return true;
    });
    return out;
}

} // namespace betacyl
