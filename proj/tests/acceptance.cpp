// Acceptance checks for the toolkit: each check prints one PASS/FAIL line
// and the process exits nonzero if any of them fail.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "betacyl/beta_spec.hpp"
#include "betacyl/cantor.hpp"
#include "betacyl/cylinders.hpp"
#include "betacyl/density.hpp"
#include "betacyl/dyadic.hpp"
#include "betacyl/errors.hpp"
#include "betacyl/expansion.hpp"
#include "betacyl/parry_root.hpp"
#include "betacyl/words.hpp"

using namespace betacyl;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, bool ok, const std::string& detail) {
    std::cout << "CRITERION " << idx << (ok ? " PASS" : " FAIL");
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

void run(int idx, bool (*fn)(std::string&)) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(idx, ok, detail);
}

// independent quadratic-time admissibility check used by the brute forces
bool naive_self_admissible(const DigitWord& w) {
    for (size_t k = 1; k < w.size(); ++k) {
        for (size_t i = 0; k + i < w.size(); ++i) {
            if (w[k + i] != w[i]) {
                if (w[k + i] > w[i]) return false;
                break;
            }
        }
    }
    return true;
}

// all length-n words with digits in [0, top] and first digit >= 1 that pass
// the naive check, in lexicographic order
std::vector<DigitWord> brute_self_admissible(int n, int top) {
    std::vector<DigitWord> out;
    DigitWord w(size_t(n), 0);
    w[0] = 1;
    for (;;) {
        if (naive_self_admissible(w)) out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[size_t(i)] == top) {
            w[size_t(i)] = 0;
            --i;
        }
        if (i < 0) break;
        w[size_t(i)] += 1;
    }
    return out;
}

mpq_class mpq_pow(const mpq_class& q, long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// 1. The lexicographic admissibility criterion matches the words actually
// observed as expansion prefixes over a fine grid of x values.
bool criterion1(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    for (const char* text : {"root:1,1", "root:2,1", "2"}) {
        BetaSpec beta = BetaSpec::parse(text);
        EventuallyPeriodicSequence eps = infinite_expansion_of_one(beta, 8).sequence;
        int top = eps.digit_at(0);

        std::vector<std::set<DigitWord>> observed(6);
        for (long j = 0; j < 4096; ++j) {
            mpq_class x(j, 4096);
            x.canonicalize();
            DigitWord d = digits_of_x(beta, x, 5).digits;
            for (size_t n = 1; n <= 5; ++n) {
                observed[n].insert(DigitWord(d.begin(), d.begin() + n));
            }
        }

        for (int n = 1; n <= 5; ++n) {
            std::set<DigitWord> predicted;
            DigitWord w(size_t(n), 0);
            for (;;) {
                if (is_admissible(w, eps)) predicted.insert(w);
                int i = n - 1;
                while (i >= 0 && w[size_t(i)] == top) {
                    w[size_t(i)] = 0;
                    --i;
                }
                if (i < 0) break;
                w[size_t(i)] += 1;
            }
            if (predicted != observed[size_t(n)]) {
                detail = std::string(text) + " n=" + std::to_string(n) + ": criterion gives " +
                         std::to_string(predicted.size()) + " words, grid gives " +
                         std::to_string(observed[size_t(n)].size());
                return false;
            }
        }
    }
    double dt = seconds_since(t0);
    detail = "3 bases, grid 2^12, " + std::to_string(dt).substr(0, 4) + "s";
    return dt < 10.0;
}

// 2. Word counts for the golden base match brute force and sit inside the
// certified sandwich beta^n <= count <= beta^(n+1)/(beta-1).
bool criterion2(std::string& detail) {
    const long golden_counts[13] = {0, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
    BetaSpec beta = BetaSpec::parse("root:1,1");
    EventuallyPeriodicSequence eps = infinite_expansion_of_one(beta, 4).sequence;
    RealEnclosure phi = parry_poly_root(DigitWord{1, 1}, 128);
    DyadicInterval phi_iv(phi.lo, phi.hi);

    for (long n = 1; n <= 12; ++n) {
        mpz_class count = count_admissible(n, eps);
        if (count != golden_counts[n]) {
            detail = "n=" + std::to_string(n) + ": count " + count.get_str();
            return false;
        }
        long brute = 0;
        DigitWord w(size_t(n), 0);
        for (;;) {
            if (is_admissible(w, eps)) ++brute;
            int i = int(n) - 1;
            while (i >= 0 && w[size_t(i)] == 1) {
                w[size_t(i)] = 0;
                --i;
            }
            if (i < 0) break;
            w[size_t(i)] += 1;
        }
        if (brute != golden_counts[n]) {
            detail = "n=" + std::to_string(n) + ": brute " + std::to_string(brute);
            return false;
        }
        Dyadic cd(count, 0);
        DyadicInterval lowpow = phi_iv.pow_out(static_cast<unsigned long>(n), 128);
        if (cd < lowpow.hi()) {
            detail = "n=" + std::to_string(n) + ": count below beta^n";
            return false;
        }
        DyadicInterval up = phi_iv.pow_out(static_cast<unsigned long>(n + 1), 128)
                                .div_out(DyadicInterval(phi.lo - Dyadic(1), phi.hi - Dyadic(1)),
                                         128);
        if (cd > up.lo()) {
            detail = "n=" + std::to_string(n) + ": count above beta^(n+1)/(beta-1)";
            return false;
        }
    }
    detail = "n <= 12, counts 2..377";
    return true;
}

// 3. The closed-form successor agrees with the brute-force next element.
bool criterion3(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    long checked = 0;
    for (int n = 1; n <= 8; ++n) {
        std::vector<DigitWord> all = brute_self_admissible(n, 5);
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            int maxd = 0;
            for (int d : all[i]) maxd = std::max(maxd, d);
            if (maxd > 4) continue;
            if (successor(all[i]) != all[i + 1]) {
                std::ostringstream os;
                os << "n=" << n << " word " << word_to_string(all[i]);
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    double dt = seconds_since(t0);
    detail = std::to_string(checked) + " successors, " + std::to_string(dt).substr(0, 4) + "s";
    return dt < 30.0;
}

// 4. Consecutive cylinders over (1.1, 3] share endpoints to within 2^-78.
bool criterion4(std::string& detail) {
    BetaSpec lo = BetaSpec::parse("1.1");
    BetaSpec hi = BetaSpec::parse("3");
    Dyadic tol = Dyadic(1).mul_pow2(-78);
    long rows = 0;
    for (long n = 1; n <= 6; ++n) {
        PartitionReport rep = verify_partition(n, lo, hi, 80);
        if (rep.violations != 0) {
            detail = "n=" + std::to_string(n) + ": " + std::to_string(rep.violations) +
                     " violations";
            return false;
        }
        for (const PartitionRow& row : rep.rows) {
            ++rows;
            if (row.has_next && row.gap_bound > tol) {
                detail = "n=" + std::to_string(n) + ": gap above 2^-78";
                return false;
            }
        }
    }
    detail = std::to_string(rows) + " cylinders, all adjacent";
    return true;
}

// 5. Cylinder endpoints are monotone in the depth (exact root comparisons)
// and pinch the base to within 10^-6 by depth 40.
bool criterion5(std::string& detail) {
    for (const char* text : {"1.8", "root:2,1,1"}) {
        BetaSpec beta = BetaSpec::parse(text);
        DigitWord digits = digits_of_one(beta, 40).digits;
        std::vector<DigitWord> lowers, uppers;
        for (long n = 1; n <= 40; ++n) {
            DigitWord pre(digits.begin(), digits.begin() + n);
            lowers.push_back(pre);
            RecurrenceInfo info = recurrence_time(pre);
            DigitWord up(pre.begin(), pre.begin() + info.tau);
            up.back() += 1;
            uppers.push_back(up);
        }
        for (size_t i = 0; i + 1 < lowers.size(); ++i) {
            if (compare_roots(lowers[i], lowers[i + 1]) > 0) {
                detail = std::string(text) + ": lower endpoint drops at depth " +
                         std::to_string(i + 2);
                return false;
            }
            if (compare_roots(uppers[i], uppers[i + 1]) < 0) {
                detail = std::string(text) + ": upper endpoint rises at depth " +
                         std::to_string(i + 2);
                return false;
            }
        }
        std::vector<ParameterCylinder> seq = endpoint_sequences(beta, 40, 256);
        Dyadic gap = seq.back().upper.hi - seq.back().lower.lo;
        if (gap.cmp_mpq(mpq_class(1, 1000000)) >= 0) {
            detail = std::string(text) + ": width at depth 40 not below 10^-6";
            return false;
        }
    }
    detail = "2 bases, depths to 40";
    return true;
}

// 6. Certified cylinder lengths respect the analytic sandwich.
bool criterion6(std::string& detail) {
    const long p = 160;
    Dyadic slack = Dyadic(1).mul_pow2(-p + 3);
    for (const char* text : {"1.8", "root:2,1,1"}) {
        BetaSpec beta = BetaSpec::parse(text);
        for (long n = 1; n <= 30; ++n) {
            ParameterCylinder cyl = cylinder_of_beta(beta, n, p);
            LengthLowerBound lb = length_lower_bound(beta, n, p);
            if (cyl.length_lo < lb.value - slack) {
                detail = std::string(text) + " n=" + std::to_string(n) + ": below lower bound";
                return false;
            }
            DyadicInterval upper_iv(cyl.upper.lo, cyl.upper.hi);
            DyadicInterval cap = n == 1
                                     ? DyadicInterval::point(Dyadic(1))
                                     : DyadicInterval::point(Dyadic(1))
                                           .div_out(upper_iv.pow_out(
                                                        static_cast<unsigned long>(n - 1), p + 32),
                                                    p + 32);
            if (cyl.length_hi > cap.hi() + slack) {
                detail = std::string(text) + " n=" + std::to_string(n) + ": above upper bound";
                return false;
            }
        }
    }
    detail = "2 bases, 30 depths, slack 2^-157";
    return true;
}

// 7. Shrink-rate exponents sit near 1 for bases with fully non-recurrent
// prefixes, and the tail estimate caps the upper density for seeded bases.
bool criterion7(std::string& detail) {
    for (const char* text : {"2", "root:1,1"}) {
        DensityProfile prof = density_profile(BetaSpec::parse(text), 200, 512);
        for (const DensityRow& row : prof.rows) {
            if (row.n < 100) continue;
            if (row.d_lo.cmp_mpq(mpq_class(19, 20)) < 0 ||
                row.d_hi.cmp_mpq(mpq_class(21, 20)) > 0) {
                detail = std::string(text) + " n=" + std::to_string(row.n) +
                         ": exponent leaves [0.95, 1.05]";
                return false;
            }
        }
    }
    for (int i = 0; i < 10; ++i) {
        std::mt19937_64 rng(1000 + i);
        DigitWord w;
        for (;;) {
            w.assign(6, 0);
            w[0] = 1 + int(rng() % 3);
            long sum = 0;
            for (size_t j = 0; j < 6; ++j) {
                if (j > 0) w[j] = int(rng() % static_cast<unsigned long>(w[0] + 1));
                sum += w[j];
            }
            if (sum >= 2 && is_self_admissible(w)) break;
        }
        BetaSpec beta = BetaSpec::from_word(w);
        DensityProfile prof = density_profile(beta, 60);
        mpq_class cap = 1 + tau_beta_estimate(beta, 60) + mpq_class(1, 20);
        if (prof.limsup_hi.cmp_mpq(cap) > 0) {
            detail = "seed " + std::to_string(1000 + i) + " word " + word_to_string(w) +
                     ": upper density exceeds 1 + tail estimate + 0.05";
            return false;
        }
    }
    detail = "2 pinned bases at p=512, 10 seeded bases";
    return true;
}

// 8. Zero-window word counts stay under beta2^(n-k+1)/(beta2 - 1).
bool criterion8(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    struct Range {
        const char* lo;
        const char* hi;
        mpq_class hi_q;
    };
    const Range ranges[2] = {{"1.5", "2.5", mpq_class(5, 2)}, {"2", "3", mpq_class(3)}};
    long total = 0;
    for (const Range& r : ranges) {
        BetaSpec b1 = BetaSpec::parse(r.lo);
        BetaSpec b2 = BetaSpec::parse(r.hi);
        for (long n = 2; n <= 10; ++n) {
            for (long k = 1; k < n; ++k) {
                size_t count = lambda_nk(n, k, b1, b2).size();
                mpq_class bound = mpq_pow(r.hi_q, n - k + 1) / (r.hi_q - 1);
                if (mpq_class(static_cast<unsigned long>(count)) > bound) {
                    detail = "(" + std::string(r.lo) + "," + r.hi + "] n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + ": count " + std::to_string(count) +
                             " breaks the bound";
                    return false;
                }
                total += long(count);
            }
        }
    }
    double dt = seconds_since(t0);
    detail = std::to_string(total) + " words across 90 cells, " +
             std::to_string(dt).substr(0, 4) + "s";
    return dt < 60.0;
}

CantorConfig acceptance_cantor_config() {
    CantorConfig cfg;
    cfg.delta = mpq_class(3, 2);
    cfg.zeta = mpq_class(1, 10);
    cfg.N = 10;
    cfg.growth = 4;
    return cfg;
}

// 9. First-generation schedule and the sampled word's period data.
bool criterion9(std::string& detail) {
    CantorConfig cfg = acceptance_cantor_config();
    cfg.n1_override = 10;
    cfg.K = 1;
    GenerationParams gp = generation_params(cfg, 1);
    if (gp.a != 8 || gp.b != 34 || gp.c != 14 || gp.m != 101) {
        detail = "schedule (" + std::to_string(gp.a) + "," + std::to_string(gp.b) + "," +
                 std::to_string(gp.c) + "," + std::to_string(gp.m) + ")";
        return false;
    }
    DigitWord w = sample_word(cfg, 1);
    if (!is_self_admissible(w)) {
        detail = "sampled word not self-admissible";
        return false;
    }
    RecurrenceInfo info = recurrence_time(w);
    if (info.tau != 58 || info.t != 43) {
        detail = "tau=" + std::to_string(info.tau) + " t=" + std::to_string(info.t);
        return false;
    }
    detail = "(8,34,14,101), tau 58, t 43";
    return true;
}

// 10. Mass-to-length ratios from generation 2 on stay above the target
// constant minus 0.05.
bool criterion10(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    CantorConfig cfg = acceptance_cantor_config();
    cfg.K = 3;
    LocalDimensionReport rep = local_dimension_sequence(cfg, 3);
    long m1 = generation_params(cfg, 1).m;
    mpq_class floor_q(1638, 10000); // 0.2138 - 0.05
    long rows = 0;
    for (const LocalDimensionRow& row : rep.rows) {
        if (row.n <= m1) continue;
        ++rows;
        if (row.r_lo.cmp_mpq(floor_q) <= 0) {
            detail = "n=" + std::to_string(row.n) + ": ratio at or below 0.1638";
            return false;
        }
    }
    double dt = seconds_since(t0);
    detail = std::to_string(rows) + " depths past generation 1, " +
             std::to_string(dt).substr(0, 4) + "s";
    return dt < 300.0;
}

// 11. The box-counting estimate interval meets the theoretical window.
bool criterion11(std::string& detail) {
    CantorConfig cfg = acceptance_cantor_config();
    cfg.zeta = mpq_class(1, 100);
    cfg.K = 3;
    BoxDimensionEstimate est = box_dimension_estimate(cfg, 3);

    const long p = 192;
    DyadicInterval ratio = log_out(DyadicInterval::point(Dyadic(9)), p)
                               .div_out(log_out(DyadicInterval::point(Dyadic(11)), p), p);
    mpq_class f = mpq_class(1, 3) - mpq_class(1, 100);
    DyadicInterval f_iv(Dyadic::from_mpq_dir(f, p, false), Dyadic::from_mpq_dir(f, p, true));
    DyadicInterval shift(Dyadic::from_mpq_dir(mpq_class(2, 25), p, false),
                         Dyadic::from_mpq_dir(mpq_class(2, 25), p, true));
    DyadicInterval target_lo = ratio * f_iv - shift;
    mpq_class target_hi = mpq_class(1, 3) + mpq_class(2, 25);

    if (est.hi < target_lo.hi()) {
        detail = "estimate entirely below the window";
        return false;
    }
    if (est.lo.cmp_mpq(target_hi) > 0) {
        detail = "estimate entirely above the window";
        return false;
    }
    detail = "estimate [" + est.lo.to_decimal(8) + ", " + est.hi.to_decimal(8) +
             "] meets window";
    return true;
}

// 12. Sibling counts inside sampled balls respect the uniform bound.
bool criterion12(std::string& detail) {
    CantorConfig cfg;
    cfg.delta = mpq_class(3, 2);
    cfg.zeta = mpq_class(3, 20);
    cfg.N = 5;
    cfg.growth = 4;
    cfg.n1_override = 4;
    cfg.K = 2;
    BallCheckReport rep = ball_mass_bound_check(cfg, 50);
    if (rep.violations != 0) {
        detail = std::to_string(rep.violations) + " violations";
        return false;
    }
    detail = "50 samples, no violations";
    return true;
}

} // namespace

int main() {
    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, criterion9);
    run(10, criterion10);
    run(11, criterion11);
    run(12, criterion12);
    std::cout << "ACCEPTANCE: " << (12 - g_failures) << "/12 criteria pass" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
