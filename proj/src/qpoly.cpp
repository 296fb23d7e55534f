#include "betacyl/qpoly.hpp"

#include "betacyl/errors.hpp"

namespace betacyl {

void qpoly_trim(QPoly& p) {
    while (!p.empty() && mpq_sgn(p.back().get_mpq_t()) == 0) p.pop_back();
}

bool qpoly_is_zero(const QPoly& p) {
    for (const auto& c : p)
        if (mpq_sgn(c.get_mpq_t()) != 0) return false;
    return true;
}

int qpoly_degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (mpq_sgn(p[i].get_mpq_t()) != 0) return i;
    return -1;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qpoly_trim(r);
    return r;
}

QPoly qpoly_rem(QPoly a, const QPoly& b) {
    int db = qpoly_degree(b);
    if (db < 0) throw Error("polynomial remainder by zero");
    qpoly_trim(a);
    while (qpoly_degree(a) >= db) {
        int da = qpoly_degree(a);
        mpq_class f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        qpoly_trim(a);
    }
    return a;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    qpoly_trim(a);
    qpoly_trim(b);
    while (!b.empty()) {
        QPoly r = qpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = qpoly_degree(a);
    if (d >= 0) {
        mpq_class lead = a[d];
        for (auto& c : a) c /= lead;
    }
    return a;
}

mpq_class qpoly_eval_mpq(const QPoly& p, const mpq_class& x) {
    mpq_class acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        acc = acc * x + p[i];
    }
    return acc;
}

DyadicInterval qpoly_eval_interval(const QPoly& p, const DyadicInterval& x, long prec) {
    DyadicInterval acc = DyadicInterval::point(Dyadic::zero());
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        DyadicInterval c(Dyadic::from_mpq_dir(p[i], prec, false),
                         Dyadic::from_mpq_dir(p[i], prec, true));
        acc = acc * x + c;
        acc.round_out(prec);
    }
    return acc;
}

} // namespace betacyl
