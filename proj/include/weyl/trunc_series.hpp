#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyl/numbers.hpp"

namespace weyl {

/// Inclusive exponent range [lo, hi] tracked by a truncated series.
struct Window {
    int lo = 0;
    int hi = 0;

    bool contains(int e) const { return lo <= e && e <= hi; }
    int width() const { return hi - lo; }
    Window shifted(int s) const { return {lo + s, hi + s}; }
    bool operator==(const Window&) const = default;
};

/// Laurent series in u with exact integer coefficients, truncated to a window.
///
/// Semantics of the window:
///   - coefficients below lo() are zero (lo is a proven support bound),
///   - coefficients in [lo(), hi()] are stored exactly,
///   - coefficients above hi() are zero when exact(), unknown otherwise.
///
/// A series with exact() set represents a Laurent polynomial known in full
/// (e.g. a Gaussian binomial); truncated expansions of infinite series such
/// as (1:u)_n are never exact.  Operations combine windows so that every
/// stored coefficient of a result is fully determined by the operands; they
/// never silently extend a truncation.
class TruncSeries {
public:
    TruncSeries() : win_{0, 0}, exact_(true), c_(1) {} // exact zero

    static TruncSeries zero(Window w, bool exact = false);
    static TruncSeries one() { return monomial(1, 0); }
    static TruncSeries monomial(Int coeff, int exp);
    /// Exact Laurent polynomial with coefficients cs for exponents lo, lo+1, ...
    static TruncSeries polynomial(int lo, std::vector<Int> cs);
    /// Truncated (inexact) series with the same layout.
    static TruncSeries truncated(int lo, std::vector<Int> cs);

    int lo() const { return win_.lo; }
    int hi() const { return win_.hi; }
    Window window() const { return win_; }
    bool exact() const { return exact_; }

    /// Coefficient of u^e.  Zero below the window; zero above it only for
    /// exact series (otherwise the coefficient is not determined and this
    /// throws).
    Int coeff(int e) const;
    bool is_zero() const;
    std::optional<int> support_min() const;
    std::optional<int> support_max() const;

    /// Sum of all known coefficients, i.e. the value at u = 1 for polynomials.
    Int coeff_sum() const;

    TruncSeries shifted(int s) const; // multiply by u^s
    TruncSeries scaled(const Int& k) const;
    TruncSeries negated() const { return scaled(-1); }

    /// Re-window: pads with zeros below, truncates above.  Extending the top
    /// of an inexact series or dropping nonzero support below w.lo throws.
    TruncSeries with_window(Window w) const;

    /// True when the support is provably finite: the series is exact, or all
    /// nonzero coefficients sit strictly inside the window (one zero margin
    /// on each end).  Guards against dualizing a truncated infinite series.
    bool dualizable() const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    /// Rendering like "u^-1 + 2 + 3u^2".
    std::string str() const;

private:
    Window win_;
    bool exact_;
    std::vector<Int> c_; // coefficient of u^(win_.lo + i) at index i

    Int stored(int e) const { return c_[static_cast<size_t>(e - win_.lo)]; }
};

// --- q-combinatorial primitives -------------------------------------------

/// [n] = (1 - u^n) / (1 - u) = 1 + u + ... + u^{n-1};  [0] = 0.
TruncSeries q_int(int n);

/// Gaussian binomial as an exact polynomial (q-Pascal recurrence).
/// Returns 0 for s < 0 or s > n, and 1 for s = 0.
TruncSeries q_binom(int n, int s);

/// The exact polynomial (1-u)(1-u^2)...(1-u^n); reciprocal of (1:u)_n.
TruncSeries poch_poly(int n);

/// Truncated expansion of (1:u)_n = 1 / ((1-u)...(1-u^n)) on the window.
TruncSeries poch_inv(int n, Window w);

/// Substitute u -> u^{-1}.  Requires provably finite support.
TruncSeries substitute_inverse(const TruncSeries& f);

} // namespace weyl
