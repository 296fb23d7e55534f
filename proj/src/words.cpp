#include "betacyl/words.hpp"

#include "betacyl/errors.hpp"

#include <sstream>

namespace betacyl {

DigitWord parse_word(const std::string& csv) {
    DigitWord w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty digit in word: " + csv);
        item = item.substr(a, b - a + 1);
        try {
            size_t pos = 0;
            int d = std::stoi(item, &pos);
            if (pos != item.size()) throw ParseError("bad digit '" + item + "'");
            if (d < 0) throw OutOfRangeError("digits must be nonnegative: " + csv);
            w.push_back(d);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad digit '" + item + "' in word: " + csv);
        } catch (const std::out_of_range&) {
            throw ParseError("digit out of range in word: " + csv);
        }
    }
    if (w.empty()) throw EmptyWordError();
    return w;
}

std::string word_to_string(const DigitWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

int lex_compare(const DigitWord& a, const DigitWord& b) {
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int da = i < a.size() ? a[i] : 0;
        int db = i < b.size() ? b[i] : 0;
        if (da != db) return da < db ? -1 : 1;
    }
    return 0;
}

// Z-array: z[i] = length of the longest common prefix of w and sigma^i(w).
static std::vector<int> z_array(const DigitWord& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> z(n, 0);
    z[0] = n;
    for (int i = 1, l = 0, r = 0; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && w[z[i]] == w[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

bool is_self_admissible(const DigitWord& w) {
    int n = static_cast<int>(w.size());
    if (n <= 1) return true;
    std::vector<int> z = z_array(w);
    for (int i = 1; i < n; ++i) {
        int j = z[i];
        if (i + j == n) continue; // shift equals the prefix entirely
        // first mismatch at offset j: need w[i+j] < w[j]
        if (w[i + j] > w[j]) return false;
    }
    return true;
}

bool is_self_admissible_naive(const DigitWord& w) {
    int n = static_cast<int>(w.size());
    for (int i = 1; i < n; ++i) {
        for (int j = 0; i + j < n; ++j) {
            if (w[i + j] != w[j]) {
                if (w[i + j] > w[j]) return false;
                break;
            }
        }
    }
    return true;
}

std::vector<int> prefix_borders(const DigitWord& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> pi(n, 0);
    for (int i = 1; i < n; ++i) {
        int k = pi[i - 1];
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    return pi;
}

std::vector<long> tau_profile(const DigitWord& w) {
    std::vector<int> pi = prefix_borders(w);
    std::vector<long> tau(w.size());
    for (size_t k = 0; k < w.size(); ++k) tau[k] = static_cast<long>(k + 1) - pi[k];
    return tau;
}

RecurrenceInfo recurrence_time(const DigitWord& w) {
    if (w.empty()) throw EmptyWordError();
    if (!is_self_admissible(w)) {
        throw NotSelfAdmissibleError("recurrence time requires a self-admissible word: " +
                                     word_to_string(w));
    }
    long n = static_cast<long>(w.size());
    long tau = tau_profile(w).back();
    RecurrenceInfo info;
    info.tau = tau;
    info.t = n % tau;
    info.non_recurrent = (tau == n);
    return info;
}

DigitWord successor(const DigitWord& w) {
    RecurrenceInfo info = recurrence_time(w); // validates self-admissibility
    DigitWord next = w;
    next[info.tau - 1] += 1;
    for (size_t i = info.tau; i < next.size(); ++i) next[i] = 0;
    return next;
}

void enumerate_self_admissible(int n, int max_first_digit,
                               const std::function<bool(const DigitWord&)>& emit) {
    if (n < 1) throw OutOfRangeError("word length must be >= 1");
    if (max_first_digit < 1) throw OutOfRangeError("first-digit bound must be >= 1");
    DigitWord w(n, 0);
    w[0] = 1;
    while (w[0] <= max_first_digit) {
        if (!emit(w)) return;
        w = successor(w);
    }
}

int EventuallyPeriodicSequence::digit_at(size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty()) throw Error("eventually periodic sequence with empty period");
    return period[(i - preperiod.size()) % period.size()];
}

DigitWord EventuallyPeriodicSequence::prefix(size_t n) const {
    DigitWord p(n);
    for (size_t i = 0; i < n; ++i) p[i] = digit_at(i);
    return p;
}

bool is_admissible(const DigitWord& w, const EventuallyPeriodicSequence& eps_star,
                   int shift_from) {
    int n = static_cast<int>(w.size());
    for (int i = shift_from; i < n; ++i) {
        // compare sigma^i(w) with the eps_star prefix of length n-i
        for (int j = 0; i + j < n; ++j) {
            int d = w[i + j], e = eps_star.digit_at(j);
            if (d != e) {
                if (d > e) return false;
                break;
            }
        }
    }
    return true;
}

mpz_class count_admissible(long n, const EventuallyPeriodicSequence& eps_star) {
    if (n < 0) throw OutOfRangeError("length must be nonnegative");
    if (n == 0) return 1;
    // Path counting in the standard presentation of the shift: from state s
    // (s digits of eps_star matched), digit eps_star[s] advances to s+1 and
    // any smaller digit returns to state 0.  States only up to depth n are
    // reachable in n steps, so the eventually periodic tail needs no special
    // handling here.
    std::vector<mpz_class> v(n + 1, 0);
    v[0] = 1;
    for (long step = 0; step < n; ++step) {
        std::vector<mpz_class> nv(n + 1, 0);
        for (long s = 0; s <= step; ++s) {
            if (v[s] == 0) continue;
            int e = eps_star.digit_at(s);
            nv[s + 1] += v[s];        // follow eps_star
            nv[0] += v[s] * e;        // any digit 0..e-1 restarts
        }
        v = std::move(nv);
    }
    mpz_class total = 0;
    for (const auto& c : v) total += c;
    return total;
}

} // namespace betacyl
