#include "betacyl/cantor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "betacyl/errors.hpp"
#include "betacyl/parry_root.hpp"

namespace betacyl {

namespace {

constexpr long kDefaultLogPrecision = 128;

mpz_class floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long floor_to_long(const mpq_class& q) {
    mpz_class f = floor_q(q);
    if (!f.fits_slong_p()) throw OutOfRangeError("generation parameter exceeds machine range");
    return f.get_si();
}

struct Slot {
    enum Kind { Fixed, Free, Mirror } kind = Fixed;
    int value = 0;  // Fixed digit
    long source = 0; // Mirror source position, 0-based
};

std::vector<Slot> build_template(const CantorConfig& cfg,
                                 const std::vector<GenerationParams>& ps) {
    int top = static_cast<int>(cfg.N);
    std::vector<Slot> slots;
    slots.push_back({Slot::Fixed, top, 0});
    slots.push_back({Slot::Fixed, top, 0});
    for (const GenerationParams& gp : ps) {
        for (long i = 0; i < gp.a; ++i) slots.push_back({Slot::Free, 0, 0});
        for (long i = 0; i < gp.b - 1; ++i) slots.push_back({Slot::Fixed, 0, 0});
        slots.push_back({Slot::Fixed, top, 0});
        for (long i = 0; i < gp.c; ++i) slots.push_back({Slot::Free, 0, 0});
        // the leading block of length n repeats verbatim
        for (long i = 0; i < gp.n; ++i) slots.push_back({Slot::Mirror, 0, i});
        for (long i = 0; i < gp.b - 1; ++i) slots.push_back({Slot::Fixed, 0, 0});
    }
    return slots;
}

// Free slots are filled in position order, which matches the draw order of
// the construction: within each generation the first free block precedes
// the second, and later generations only append.
DigitWord fill_template(const CantorConfig& cfg, const std::vector<Slot>& slots) {
    std::mt19937_64 eng(cfg.seed);
    unsigned long span = static_cast<unsigned long>(cfg.N - 1);
    DigitWord w(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
        const Slot& s = slots[i];
        if (s.kind == Slot::Fixed) {
            w[i] = s.value;
        } else if (s.kind == Slot::Free) {
            w[i] = 1 + static_cast<int>(eng() % span);
        } else {
            w[i] = w[static_cast<size_t>(s.source)];
        }
    }
    return w;
}

struct LogTable {
    DyadicInterval log_nm1; // log(N-1)
    DyadicInterval log_n;   // log N
    DyadicInterval log_np1; // log(N+1)
    DyadicInterval log_c;   // log((N-1)^2/N), negative of magnitude < log N
};

LogTable make_log_table(long n, long p) {
    LogTable t{DyadicInterval::point(Dyadic::zero()), DyadicInterval::point(Dyadic::zero()),
               DyadicInterval::point(Dyadic::zero()), DyadicInterval::point(Dyadic::zero())};
    t.log_nm1 = log_out(DyadicInterval::point(Dyadic(n - 1)), p);
    t.log_n = log_out(DyadicInterval::point(Dyadic(n)), p);
    t.log_np1 = log_out(DyadicInterval::point(Dyadic(n + 1)), p);
    mpq_class c((n - 1) * (n - 1), n);
    c.canonicalize();
    t.log_c = log_out(DyadicInterval(Dyadic::from_mpq_dir(c, p, false),
                                     Dyadic::from_mpq_dir(c, p, true)),
                      p);
    return t;
}

DigitWord upper_endpoint_word(const DigitWord& w) {
    std::vector<int> pi = prefix_borders(w);
    long tau = static_cast<long>(w.size()) - pi.back();
    DigitWord u(w.begin(), w.begin() + tau);
    u.back() += 1;
    return u;
}

} // namespace

void CantorConfig::validate() const {
    if (delta <= 1 || delta > 2) throw OutOfRangeError("delta must lie in (1, 2]");
    mpq_class zmax = (2 - delta) / (2 * delta);
    if (zeta <= 0 || zeta >= zmax) {
        throw OutOfRangeError("zeta must lie strictly between 0 and (2-delta)/(2*delta)");
    }
    if (N < 3) throw OutOfRangeError("top digit N must be at least 3");
    if (growth < 1) throw OutOfRangeError("growth factor must be at least 1");
    if (K < 0) throw OutOfRangeError("generation horizon must be nonnegative");
    if (n1_override < 0) throw OutOfRangeError("n1 override must be nonnegative");
}

std::vector<GenerationParams> generation_schedule(const CantorConfig& cfg, long k) {
    cfg.validate();
    if (k < 0 || k > cfg.K) throw OutOfRangeError("generation index outside [0, K]");
    mpq_class bcoef = (cfg.delta - 1) / (cfg.delta * cfg.zeta);
    mpq_class ccoef = (2 - cfg.delta) / (cfg.delta * cfg.zeta) - 2;
    std::vector<GenerationParams> ps;
    long m_prev = 2;
    for (long g = 1; g <= k; ++g) {
        long n;
        if (g == 1 && cfg.n1_override > 0) {
            n = cfg.n1_override;
        } else {
            n = std::max(cfg.growth * m_prev, m_prev + 1);
        }
        if (n <= m_prev) {
            throw ScheduleTooSmallError("generation " + std::to_string(g) + " depth " +
                                        std::to_string(n) + " does not exceed the previous length " +
                                        std::to_string(m_prev));
        }
        GenerationParams gp;
        gp.k = g;
        gp.n = n;
        gp.a = n - m_prev;
        gp.b = floor_to_long(bcoef * n) + 1;
        gp.c = floor_to_long(ccoef * n) + 1;
        gp.m = 2 * gp.n + 2 * gp.b + gp.c - 1;
        ps.push_back(gp);
        m_prev = gp.m;
    }
    return ps;
}

GenerationParams generation_params(const CantorConfig& cfg, long k) {
    if (k < 1) throw OutOfRangeError("generation index must be at least 1");
    return generation_schedule(cfg, k).back();
}

DigitWord sample_word(const CantorConfig& cfg, long k) {
    cfg.validate();
    if (k < 0 || k > cfg.K) throw OutOfRangeError("generation index outside [0, K]");
    int top = static_cast<int>(cfg.N);
    if (k == 0) return DigitWord{top, top};
    return fill_template(cfg, build_template(cfg, generation_schedule(cfg, k)));
}

long mass_exponent(const CantorConfig& cfg, long n) {
    cfg.validate();
    if (n < 2) throw OutOfRangeError("mass is defined from depth 2 on");
    if (n == 2) return 0;
    std::vector<GenerationParams> ps = generation_schedule(cfg, cfg.K);
    long m_prev = 2;
    long s = 0; // free digits consumed by completed generations
    for (const GenerationParams& gp : ps) {
        if (n <= gp.m) {
            if (n <= gp.n) return n - m_prev + s;
            if (n <= gp.n + gp.b) return gp.a + s;
            if (n <= gp.n + gp.b + gp.c) return gp.a + (n - gp.n - gp.b) + s;
            return gp.a + gp.c + s;
        }
        s += gp.a + gp.c;
        m_prev = gp.m;
    }
    throw OutOfRangeError("depth exceeds the configured generation horizon");
}

mpq_class mass(const CantorConfig& cfg, long n) {
    long e = mass_exponent(cfg, n);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(cfg.N - 1),
                  static_cast<unsigned long>(e));
    mpq_class m(mpz_class(1), den);
    m.canonicalize();
    return m;
}

RefinedRole refined_cylinder_role(const CantorConfig& cfg, long n) {
    cfg.validate();
    if (n < 2) throw OutOfRangeError("refined cylinders start at depth 2");
    if (n == 2) return {CylinderRole::UseOwn, 2};
    std::vector<GenerationParams> ps = generation_schedule(cfg, cfg.K);
    for (const GenerationParams& gp : ps) {
        if (n > gp.m) continue;
        if (n <= gp.n) return {CylinderRole::UseOwn, n};
        if (n <= gp.n + gp.b) return {CylinderRole::SnapToPrev, gp.n};
        if (n <= gp.n + gp.b + gp.c) return {CylinderRole::UseOwn, n};
        return {CylinderRole::SnapToPrev, gp.n + gp.b + gp.c};
    }
    throw OutOfRangeError("depth exceeds the configured generation horizon");
}

LocalDimensionReport local_dimension_sequence(const CantorConfig& cfg, long k_max, long p) {
    cfg.validate();
    if (k_max < 1 || k_max > cfg.K) throw OutOfRangeError("k_max must lie in [1, K]");
    long lp = p > 0 ? p : kDefaultLogPrecision;
    if (lp < 32) throw OutOfRangeError("log precision must be at least 32");

    std::vector<GenerationParams> ps = generation_schedule(cfg, k_max);
    long mk = ps.back().m;
    DigitWord w = fill_template(cfg, build_template(cfg, ps));
    std::vector<int> pi = prefix_borders(w);
    LogTable logs = make_log_table(cfg.N, lp);

    // first 0-based position >= i holding a nonzero digit (mk when none)
    std::vector<long> next_nonzero(w.size() + 1, mk);
    for (long i = mk - 1; i >= 0; --i) {
        next_nonzero[size_t(i)] = w[size_t(i)] > 0 ? i : next_nonzero[size_t(i) + 1];
    }

    LocalDimensionReport rep;
    mpq_class f = (2 - cfg.delta) / cfg.delta - cfg.zeta;
    DyadicInterval fenc(Dyadic::from_mpq_dir(f, lp, false), Dyadic::from_mpq_dir(f, lp, true));
    DyadicInterval bound = logs.log_nm1.div_out(logs.log_np1, lp) * fenc;
    rep.bound_lo = bound.lo();
    rep.bound_hi = bound.hi();

    rep.rows.reserve(static_cast<size_t>(mk - 1));
    size_t gi = 0;
    long m_prev = 2;
    long s = 0;
    for (long n = 2; n <= mk; ++n) {
        while (n > ps[gi].m) {
            s += ps[gi].a + ps[gi].c;
            m_prev = ps[gi].m;
            ++gi;
        }
        const GenerationParams& gp = ps[gi];
        long e;
        if (n <= gp.n) e = n - m_prev + s;
        else if (n <= gp.n + gp.b) e = gp.a + s;
        else if (n <= gp.n + gp.b + gp.c) e = gp.a + (n - gp.n - gp.b) + s;
        else e = gp.a + gp.c + s;

        long np = n + 1;
        long tau, t;
        if (np <= mk) {
            tau = np - pi[np - 1];
            t = np % tau;
        } else {
            // one more free digit keeps the word free of proper periods
            tau = np;
            t = 0;
        }
        // the tail sum of the length bound keeps only its first nonzero
        // digit, at 1-based index j in (t, tau]; the incremented last digit
        // makes j = tau a guaranteed fallback
        long shift = 0;
        if (t > 0) {
            long hit = next_nonzero[size_t(t)];
            long j = hit <= tau - 2 ? hit + 1 : tau;
            shift = j - t;
        }

        // log mass is -e log(N-1) exactly; log length is sandwiched by
        // log C - (n+1+shift) log(N+1) and -n log N
        DyadicInterval num(-(logs.log_nm1.hi() * Dyadic(e)), -(logs.log_nm1.lo() * Dyadic(e)));
        DyadicInterval den(logs.log_c.lo() - logs.log_np1.hi() * Dyadic(np + shift),
                           -(logs.log_n.lo() * Dyadic(n)));
        DyadicInterval r = num.div_out(den, lp);
        rep.rows.push_back({n, r.lo(), r.hi()});
    }
    return rep;
}

BoxDimensionEstimate box_dimension_estimate(const CantorConfig& cfg, long k, long p) {
    cfg.validate();
    if (k < 1 || k > cfg.K) throw OutOfRangeError("generation index must lie in [1, K]");
    long lp = p > 0 ? p : kDefaultLogPrecision;
    std::vector<GenerationParams> ps = generation_schedule(cfg, k);
    long s = 0;
    for (const GenerationParams& gp : ps) s += gp.a + gp.c;
    long mk = ps.back().m;
    long ck = ps.back().c;
    LogTable logs = make_log_table(cfg.N, lp);

    // -log L_k lies between (m_k - 1) log N and (m_k + c_k + 1) log(N+1) - log C
    DyadicInterval num(logs.log_nm1.lo() * Dyadic(s), logs.log_nm1.hi() * Dyadic(s));
    DyadicInterval den(logs.log_n.lo() * Dyadic(mk - 1),
                       logs.log_np1.hi() * Dyadic(mk + ck + 1) - logs.log_c.lo());
    DyadicInterval est = num.div_out(den, lp);
    BoxDimensionEstimate out;
    out.lo = est.lo();
    out.hi = est.hi();
    out.free_exponent = s;
    out.depth = mk;
    return out;
}

BallCheckReport ball_mass_bound_check(const CantorConfig& cfg, long samples, long p) {
    cfg.validate();
    if (samples < 1) throw OutOfRangeError("need at least one ball sample");
    if (cfg.K < 1) throw OutOfRangeError("ball check needs at least one generation");
    std::vector<GenerationParams> ps = generation_schedule(cfg, cfg.K);
    std::vector<Slot> slots = build_template(cfg, ps);
    DigitWord path = fill_template(cfg, slots);
    long mk = ps.back().m;
    long lam = ceil_log2(mpz_class(cfg.N + 1));
    unsigned long span = static_cast<unsigned long>(cfg.N - 1);

    // depths where the refined cylinder at n and at n+1 are both genuine,
    // so the radius window [|J_{n+1}|, |J_n|) is nonempty
    std::vector<long> candidates;
    long m_prev = 2;
    for (const GenerationParams& gp : ps) {
        for (long n = m_prev + 1; n < gp.n; ++n) candidates.push_back(n);
        for (long n = gp.n + gp.b + 1; n < gp.n + gp.b + gp.c; ++n) candidates.push_back(n);
        m_prev = gp.m;
    }
    if (candidates.empty()) throw OutOfRangeError("schedule leaves no refinable depths to sample");

    // ball center: left endpoint of the deepest sampled cylinder
    long pbeta = p > 0 ? p : mk * lam + 64;
    RealEnclosure beta = parry_poly_root(path, pbeta);

    mpq_class c1(2 * cfg.N * cfg.N, (cfg.N - 1) * (cfg.N - 1));
    c1.canonicalize();
    c1 += 2;

    std::mt19937_64 eng(cfg.seed + 0x9e3779b97f4a7c15ULL);
    BallCheckReport rep;
    rep.samples = samples;
    for (long sidx = 0; sidx < samples; ++sidx) {
        long n = candidates[static_cast<size_t>(eng() % candidates.size())];
        long pn = (n + 1) * lam + 64;

        DigitWord pref_n(path.begin(), path.begin() + n);
        DigitWord pref_n1(path.begin(), path.begin() + n + 1);
        RealEnclosure lo_n = parry_poly_root(pref_n, pn);
        RealEnclosure hi_n = parry_poly_root(upper_endpoint_word(pref_n), pn);
        RealEnclosure lo_n1 = parry_poly_root(pref_n1, pn);
        RealEnclosure hi_n1 = parry_poly_root(upper_endpoint_word(pref_n1), pn);
        Dyadic len_n_lo = hi_n.lo - lo_n.hi;    // certified lower bound on |J_n|
        Dyadic len_n1_hi = hi_n1.hi - lo_n1.lo; // certified upper bound on |J_{n+1}|
        if (len_n_lo.sign() <= 0 || !(len_n1_hi < len_n_lo)) {
            throw PrecisionExhaustedError(
                "radius window at depth " + std::to_string(n) + " did not separate", -1, pn);
        }
        Dyadic r = (len_n1_hi + len_n_lo).mul_pow2(-1);
        Dyadic x_left = beta.lo - r;
        Dyadic x_right = beta.hi + r;

        // lexicographic rank space of the sibling family at depth n
        std::vector<long> free_pos;
        for (long i = 0; i < n; ++i) {
            if (slots[static_cast<size_t>(i)].kind == Slot::Free) free_pos.push_back(i);
        }
        long nfree = static_cast<long>(free_pos.size());
        mpz_class total;
        mpz_ui_pow_ui(total.get_mpz_t(), span, static_cast<unsigned long>(nfree));
        mpz_class prank = 0;
        for (long pos : free_pos) prank = prank * (cfg.N - 1) + (path[pos] - 1);

        auto word_at = [&](const mpz_class& rank) {
            std::vector<int> fd(static_cast<size_t>(nfree));
            mpz_class q = rank;
            for (long j = nfree - 1; j >= 0; --j) {
                fd[static_cast<size_t>(j)] =
                    1 + static_cast<int>(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), span));
            }
            DigitWord w(static_cast<size_t>(n));
            long fj = 0;
            for (long i = 0; i < n; ++i) {
                const Slot& sl = slots[static_cast<size_t>(i)];
                if (sl.kind == Slot::Fixed) w[i] = sl.value;
                else if (sl.kind == Slot::Free) w[i] = fd[fj++];
                else w[i] = w[sl.source];
            }
            return w;
        };
        // certainly left: the sibling's right endpoint sits below the ball
        auto cert_left = [&](const mpz_class& rank) {
            return parry_sign_at(upper_endpoint_word(word_at(rank)), x_left) > 0;
        };
        // certainly right: the sibling's left endpoint sits above the ball
        auto cert_right = [&](const mpz_class& rank) {
            return parry_sign_at(word_at(rank), x_right) < 0;
        };

        // first rank not certainly left (the path rank never is)
        mpz_class lo = 0, hi = prank;
        while (lo < hi) {
            mpz_class mid = (lo + hi) / 2;
            if (cert_left(mid)) lo = mid + 1;
            else hi = mid;
        }
        mpz_class first = lo;
        // last rank not certainly right
        lo = prank;
        hi = total - 1;
        while (lo < hi) {
            mpz_class mid = (lo + hi + 1) / 2;
            if (cert_right(mid)) hi = mid - 1;
            else lo = mid;
        }
        mpz_class count = lo - first + 1;

        mpz_class pw_np1, pw_n;
        mpz_ui_pow_ui(pw_np1.get_mpz_t(), static_cast<unsigned long>(cfg.N + 1),
                      static_cast<unsigned long>(n));
        mpz_ui_pow_ui(pw_n.get_mpz_t(), static_cast<unsigned long>(cfg.N),
                      static_cast<unsigned long>(n));
        mpq_class ratio(pw_np1, pw_n);
        ratio.canonicalize();
        mpq_class bound = c1 * ratio;

        BallCheckRow row;
        row.n = n;
        row.count = count;
        row.bound = bound;
        row.ok = mpq_class(count) <= bound;
        if (!row.ok) rep.violations += 1;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace betacyl
