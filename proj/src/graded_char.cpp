#include "weyl/graded_char.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace weyl {

TruncSeries GradedChar::series(int lambda) const {
    auto it = t_.find(lambda);
    if (it != t_.end()) return it->second;
    return TruncSeries::zero(win_, all_exact());
}

bool GradedChar::all_exact() const {
    return std::all_of(t_.begin(), t_.end(),
                       [](const auto& kv) { return kv.second.exact(); });
}

void GradedChar::add_term(int lambda, const TruncSeries& s) {
    if (lambda < 0) throw std::invalid_argument("graded character label must be nonnegative");
    auto it = t_.find(lambda);
    TruncSeries sum = (it == t_.end()) ? s : it->second + s;
    TruncSeries fitted = sum.with_window(win_);
    if (fitted.is_zero() && fitted.exact())
        t_.erase(lambda);
    else
        t_[lambda] = std::move(fitted);
}

GradedChar GradedChar::shifted(int s) const {
    GradedChar r(win_.shifted(s));
    for (const auto& [l, ser] : t_) r.t_.emplace(l, ser.shifted(s));
    return r;
}

GradedChar GradedChar::dual() const {
    GradedChar r(Window{-win_.hi, -win_.lo});
    for (const auto& [l, ser] : t_) r.add_term(l, substitute_inverse(ser));
    return r;
}

GradedChar GradedChar::scaled_by(const TruncSeries& f) const {
    bool aex = all_exact();
    Window w{};
    w.lo = win_.lo + f.lo();
    if (aex && f.exact()) {
        w.hi = win_.hi + f.hi();
    } else {
        int hi = std::numeric_limits<int>::max();
        if (!aex) hi = std::min(hi, win_.hi + f.lo());
        if (!f.exact()) hi = std::min(hi, f.hi() + win_.lo);
        w.hi = hi;
    }
    GradedChar r(w);
    for (const auto& [l, ser] : t_) r.add_term(l, ser * f);
    return r;
}

GradedChar GradedChar::with_window(Window w) const {
    if (!all_exact() && w.hi > win_.hi)
        throw std::runtime_error("cannot widen a truncated graded character");
    GradedChar r(w);
    for (const auto& [l, ser] : t_) r.add_term(l, ser);
    return r;
}

Int GradedChar::dimension_at_u1() const {
    Int total = 0;
    for (const auto& [l, ser] : t_) total += Int(l + 1) * ser.coeff_sum();
    return total;
}

Sl2Char GradedChar::u1_collapse() const {
    Sl2Char c;
    for (const auto& [l, ser] : t_) {
        Int m = ser.coeff_sum();
        for (int mu = -l; mu <= l; mu += 2) c.add(mu, m);
    }
    return c;
}

GradedChar operator+(const GradedChar& a, const GradedChar& b) {
    bool aex = a.all_exact(), bex = b.all_exact();
    Window w{};
    if (aex && bex) {
        w = {std::min(a.win_.lo, b.win_.lo), std::max(a.win_.hi, b.win_.hi)};
    } else if (aex) {
        w = {std::min(a.win_.lo, b.win_.lo), b.win_.hi};
    } else if (bex) {
        w = {std::min(a.win_.lo, b.win_.lo), a.win_.hi};
    } else {
        if (a.win_.hi < b.win_.lo || b.win_.hi < a.win_.lo)
            throw std::invalid_argument("incompatible windows");
        w = {std::min(a.win_.lo, b.win_.lo), std::min(a.win_.hi, b.win_.hi)};
    }
    GradedChar r(w);
    for (const auto& [l, ser] : a.t_) r.add_term(l, ser);
    for (const auto& [l, ser] : b.t_) r.add_term(l, ser);
    return r;
}

GradedChar tensor(const GradedChar& a, const GradedChar& b) {
    bool aex = a.all_exact(), bex = b.all_exact();
    Window w{};
    w.lo = a.win_.lo + b.win_.lo;
    if (aex && bex) {
        w.hi = a.win_.hi + b.win_.hi;
    } else {
        int hi = std::numeric_limits<int>::max();
        if (!aex) hi = std::min(hi, a.win_.hi + b.win_.lo);
        if (!bex) hi = std::min(hi, b.win_.hi + a.win_.lo);
        w.hi = hi;
    }
    GradedChar r(w);
    for (const auto& [l1, s1] : a.t_) {
        for (const auto& [l2, s2] : b.t_) {
            TruncSeries prod = s1 * s2;
            for (int nu = 0; nu <= std::min(l1, l2); ++nu)
                r.add_term(l1 + l2 - 2 * nu, prod);
        }
    }
    return r;
}

bool operator==(const GradedChar& a, const GradedChar& b) {
    std::map<int, char> keys;
    for (const auto& [l, s] : a.t_) keys[l] = 1;
    for (const auto& [l, s] : b.t_) keys[l] = 1;
    for (const auto& [l, unused] : keys)
        if (a.series(l) != b.series(l)) return false;
    return true;
}

bool equal_on(const GradedChar& a, const GradedChar& b, Window w) {
    auto covers = [&](const GradedChar& c) {
        return c.all_exact() || c.window().hi >= w.hi;
    };
    if (!covers(a) || !covers(b))
        throw std::runtime_error("window too small for requested comparison");
    std::map<int, char> keys;
    for (const auto& [l, s] : a.terms()) keys[l] = 1;
    for (const auto& [l, s] : b.terms()) keys[l] = 1;
    for (const auto& [l, unused] : keys) {
        TruncSeries sa = a.series(l), sb = b.series(l);
        for (int e = w.lo; e <= w.hi; ++e)
            if (sa.coeff(e) != sb.coeff(e)) return false;
    }
    return true;
}

std::string GradedChar::str() const {
    std::ostringstream os;
    os << "window [" << win_.lo << "," << win_.hi << "] {";
    bool first = true;
    for (const auto& [l, ser] : t_) {
        if (!first) os << "; ";
        first = false;
        os << l << ": " << ser.str();
    }
    os << "}";
    return os.str();
}

Window default_window(int lambda) {
    return {-lambda * lambda, 3 * lambda * lambda};
}

GradedChar weyl_local_char(int lambda) {
    if (lambda < 0) throw std::invalid_argument("weyl_local_char: lambda must be nonnegative");
    GradedChar c(Window{0, socle_grade(lambda)});
    for (int r = 0; 2 * r <= lambda; ++r)
        c.add_term(lambda - 2 * r, q_binom(lambda, r) - q_binom(lambda, r - 1));
    return c;
}

GradedChar weyl_global_char(int lambda, Window w) {
    if (lambda < 0) throw std::invalid_argument("weyl_global_char: lambda must be nonnegative");
    if (w.hi < 0) throw std::invalid_argument("weyl_global_char: window must reach grade 0");
    GradedChar local = weyl_local_char(lambda);
    TruncSeries p = poch_inv(lambda, Window{0, w.hi});
    GradedChar c(w);
    for (const auto& [l, ser] : local.terms()) c.add_term(l, ser * p);
    return c;
}

TruncSeries weight_hilbert(int lambda, int p, Window w) {
    if (p < 0 || p > lambda) return TruncSeries::zero(w); // empty weight space
    return (q_binom(lambda, p) * poch_inv(lambda, Window{0, w.hi})).with_window(w);
}

GradedChar tilting_char(int lambda, Window w) {
    if (lambda < 0) throw std::invalid_argument("tilting_char: lambda must be nonnegative");
    // Summands reach down to grade -floor(l/2)*ceil(l/2); widen to hold them.
    Window wide{std::min(w.lo, -socle_grade(lambda)), w.hi};
    GradedChar acc(wide);
    for (int s = 0; 2 * s <= lambda; ++s) {
        int shift = s * (s - lambda);
        Window inner = wide.shifted(-shift);
        GradedChar g = weyl_global_char(lambda - 2 * s, inner);
        GradedChar term = g.scaled_by(poch_inv(s, Window{0, inner.width()}));
        acc = acc + term.shifted(shift);
    }
    return acc;
}

GradedChar wedge_power_char(int lambda, Window w) {
    if (lambda < 0) throw std::invalid_argument("wedge_power_char: lambda must be nonnegative");
    int a = wedge_shift(lambda);
    int s = socle_grade(lambda);
    GradedChar dual_local = weyl_local_char(lambda).dual();
    TruncSeries p = poch_inv(lambda, Window{0, w.hi - a + s});
    GradedChar scaled = dual_local.scaled_by(p).shifted(a);
    return scaled.with_window(Window{std::min(w.lo, a - s), w.hi});
}

} // namespace weyl
