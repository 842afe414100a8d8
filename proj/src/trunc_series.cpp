#include "weyl/trunc_series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace weyl {

TruncSeries TruncSeries::zero(Window w, bool exact) {
    if (w.lo > w.hi) throw std::invalid_argument("empty window");
    TruncSeries s;
    s.win_ = w;
    s.exact_ = exact;
    s.c_.assign(static_cast<size_t>(w.width()) + 1, Int(0));
    return s;
}

TruncSeries TruncSeries::monomial(Int coeff, int exp) {
    TruncSeries s;
    s.win_ = {exp, exp};
    s.exact_ = true;
    s.c_ = {std::move(coeff)};
    return s;
}

TruncSeries TruncSeries::polynomial(int lo, std::vector<Int> cs) {
    if (cs.empty()) cs.push_back(0);
    TruncSeries s;
    s.win_ = {lo, lo + static_cast<int>(cs.size()) - 1};
    s.exact_ = true;
    s.c_ = std::move(cs);
    return s;
}

TruncSeries TruncSeries::truncated(int lo, std::vector<Int> cs) {
    TruncSeries s = polynomial(lo, std::move(cs));
    s.exact_ = false;
    return s;
}

Int TruncSeries::coeff(int e) const {
    if (e < win_.lo) return 0;
    if (e <= win_.hi) return stored(e);
    if (exact_) return 0;
    throw std::logic_error("coefficient requested above truncation window");
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v == 0; });
}

std::optional<int> TruncSeries::support_min() const {
    for (int e = win_.lo; e <= win_.hi; ++e)
        if (stored(e) != 0) return e;
    return std::nullopt;
}

std::optional<int> TruncSeries::support_max() const {
    for (int e = win_.hi; e >= win_.lo; --e)
        if (stored(e) != 0) return e;
    return std::nullopt;
}

Int TruncSeries::coeff_sum() const {
    Int s = 0;
    for (const Int& v : c_) s += v;
    return s;
}

TruncSeries TruncSeries::shifted(int s) const {
    TruncSeries r = *this;
    r.win_ = win_.shifted(s);
    return r;
}

TruncSeries TruncSeries::scaled(const Int& k) const {
    TruncSeries r = *this;
    for (Int& v : r.c_) v *= k;
    return r;
}

TruncSeries TruncSeries::with_window(Window w) const {
    if (w.lo > w.hi) throw std::invalid_argument("empty window");
    if (!exact_ && w.hi > win_.hi)
        throw std::runtime_error("cannot widen a truncated series");
    for (int e = win_.lo; e < w.lo && e <= win_.hi; ++e)
        if (stored(e) != 0)
            throw std::runtime_error("window would drop nonzero support");
    TruncSeries r = zero(w, false);
    bool dropped_above = false;
    for (int e = std::max(w.lo, win_.lo); e <= win_.hi; ++e) {
        if (e > w.hi) {
            if (stored(e) != 0) dropped_above = true;
            continue;
        }
        r.c_[static_cast<size_t>(e - w.lo)] = stored(e);
    }
    r.exact_ = exact_ && !dropped_above;
    return r;
}

bool TruncSeries::dualizable() const {
    if (exact_) return true;
    auto mn = support_min();
    if (!mn) return true; // zero on the whole window
    return *mn > win_.lo && *support_max() < win_.hi;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    Window w{};
    bool exact = false;
    if (a.exact_ && b.exact_) {
        w = {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
        exact = true;
    } else if (a.exact_) {
        w = {std::min(a.lo(), b.lo()), b.hi()};
    } else if (b.exact_) {
        w = {std::min(a.lo(), b.lo()), a.hi()};
    } else {
        // Both truncated: knowledge is capped by the shorter truncation.
        if (a.hi() < b.lo() || b.hi() < a.lo())
            throw std::invalid_argument("incompatible windows");
        w = {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
    }
    TruncSeries r = TruncSeries::zero(w, exact);
    for (int e = w.lo; e <= w.hi; ++e)
        r.c_[static_cast<size_t>(e - w.lo)] = a.coeff(e) + b.coeff(e);
    return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return a + b.negated();
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    Window w{};
    bool exact = a.exact_ && b.exact_;
    w.lo = a.lo() + b.lo();
    if (exact) {
        w.hi = a.hi() + b.hi();
    } else {
        // The unknown tail of an inexact factor first pollutes exponent
        // factor.hi + other.lo + 1, so knowledge stops at factor.hi + other.lo.
        int hi = std::numeric_limits<int>::max();
        if (!a.exact_) hi = std::min(hi, a.hi() + b.lo());
        if (!b.exact_) hi = std::min(hi, b.hi() + a.lo());
        w.hi = hi;
    }
    TruncSeries r = TruncSeries::zero(w, exact);
    for (int i = a.lo(); i <= a.hi(); ++i) {
        const Int& ai = a.stored(i);
        if (ai == 0) continue;
        int jlo = std::max(b.lo(), w.lo - i);
        int jhi = std::min(b.hi(), w.hi - i);
        for (int j = jlo; j <= jhi; ++j) {
            const Int& bj = b.stored(j);
            if (bj == 0) continue;
            r.c_[static_cast<size_t>(i + j - w.lo)] += ai * bj;
        }
    }
    return r;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi;
    if (a.exact_ && b.exact_) {
        hi = std::max(a.hi(), b.hi());
    } else if (a.exact_) {
        hi = b.hi();
    } else if (b.exact_) {
        hi = a.hi();
    } else {
        hi = std::min(a.hi(), b.hi());
    }
    for (int e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int e = win_.lo; e <= win_.hi; ++e) {
        const Int& v = stored(e);
        if (v == 0) continue;
        Int mag = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag;
            os << "u";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    return os.str();
}

// --- q-combinatorial primitives -------------------------------------------

TruncSeries q_int(int n) {
    if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
    if (n == 0) return TruncSeries::polynomial(0, {Int(0)});
    return TruncSeries::polynomial(0, std::vector<Int>(static_cast<size_t>(n), Int(1)));
}

TruncSeries q_binom(int n, int s) {
    if (n < 0) throw std::invalid_argument("q_binom: n must be nonnegative");
    if (s == 0) return TruncSeries::one();
    if (s < 0 || s > n) return TruncSeries::polynomial(0, {Int(0)});
    // q-Pascal: [n,s] = [n-1,s-1] + u^s [n-1,s].  Row-by-row over dense rows.
    std::vector<std::vector<Int>> row(static_cast<size_t>(n) + 1);
    row[0] = {Int(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::vector<Int>> next(static_cast<size_t>(i) + 1);
        next[0] = {Int(1)};
        for (int j = 1; j < i; ++j) {
            size_t len = static_cast<size_t>(j * (i - j)) + 1;
            std::vector<Int> v(len, Int(0));
            for (size_t e = 0; e < row[static_cast<size_t>(j - 1)].size(); ++e)
                v[e] += row[static_cast<size_t>(j - 1)][e];
            for (size_t e = 0; e < row[static_cast<size_t>(j)].size(); ++e)
                v[e + static_cast<size_t>(j)] += row[static_cast<size_t>(j)][e];
            next[static_cast<size_t>(j)] = std::move(v);
        }
        next[static_cast<size_t>(i)] = {Int(1)};
        row = std::move(next);
    }
    return TruncSeries::polynomial(0, std::move(row[static_cast<size_t>(s)]));
}

TruncSeries poch_poly(int n) {
    if (n < 0) throw std::invalid_argument("poch_poly: n must be nonnegative");
    std::vector<Int> c{Int(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Int> next(c.size() + static_cast<size_t>(k), Int(0));
        for (size_t e = 0; e < c.size(); ++e) {
            next[e] += c[e];
            next[e + static_cast<size_t>(k)] -= c[e];
        }
        c = std::move(next);
    }
    return TruncSeries::polynomial(0, std::move(c));
}

TruncSeries poch_inv(int n, Window w) {
    if (n < 0) throw std::invalid_argument("poch_inv: n must be nonnegative");
    if (w.hi < 0) throw std::invalid_argument("poch_inv: window must reach exponent 0");
    if (n == 0) return TruncSeries::one().with_window(w);
    std::vector<Int> c(static_cast<size_t>(w.hi) + 1, Int(0));
    c[0] = 1;
    for (int k = 1; k <= n; ++k) // multiply by 1/(1-u^k) in place
        for (int e = k; e <= w.hi; ++e)
            c[static_cast<size_t>(e)] += c[static_cast<size_t>(e - k)];
    return TruncSeries::truncated(0, std::move(c)).with_window(w);
}

TruncSeries substitute_inverse(const TruncSeries& f) {
    if (!f.dualizable()) throw std::invalid_argument("not dualizable");
    Window w{-f.hi(), -f.lo()};
    TruncSeries r = TruncSeries::zero(w, f.exact());
    std::vector<Int> cs(static_cast<size_t>(w.width()) + 1);
    for (int e = f.lo(); e <= f.hi(); ++e)
        cs[static_cast<size_t>(-e - w.lo)] = f.coeff(e);
    r = f.exact() ? TruncSeries::polynomial(w.lo, std::move(cs))
                  : TruncSeries::truncated(w.lo, std::move(cs));
    return r;
}

} // namespace weyl
