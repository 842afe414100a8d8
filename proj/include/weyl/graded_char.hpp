#pragma once

#include <map>
#include <string>

#include "weyl/sl2char.hpp"
#include "weyl/trunc_series.hpp"

namespace weyl {

/// Graded character of a graded sl2[t]-module with bounded weights: for each
/// sl2 highest weight lambda >= 0 the multiplicity series
/// sum_r [V[r] : V(lambda)] u^r.  All stored series carry the character's
/// window; identically-zero series are not stored.
class GradedChar {
public:
    GradedChar() : win_{0, 0} {}
    explicit GradedChar(Window w) : win_(w) {}

    Window window() const { return win_; }
    const std::map<int, TruncSeries>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }

    /// Multiplicity series of V(lambda); a zero series when absent.
    TruncSeries series(int lambda) const;

    /// True when every stored series is an exact (Laurent) polynomial.
    bool all_exact() const;

    /// Accumulate a contribution to the V(lambda) series.  Terms whose label
    /// would be negative must be dropped by the caller (V(lambda) = 0 there).
    void add_term(int lambda, const TruncSeries& s);

    GradedChar shifted(int s) const;        // grade shift: multiply by u^s
    GradedChar dual() const;                // u -> u^{-1}; needs finite support
    GradedChar scaled_by(const TruncSeries& f) const;
    GradedChar with_window(Window w) const;

    /// Total dimension at u = 1: sum over lambda of (lambda+1) * m_lambda(1).
    /// Meaningful for polynomial characters (finite-dimensional modules).
    Int dimension_at_u1() const;

    /// Forget the grading: sum of m_lambda(1) * ch V(lambda).
    Sl2Char u1_collapse() const;

    friend GradedChar operator+(const GradedChar& a, const GradedChar& b);
    friend GradedChar tensor(const GradedChar& a, const GradedChar& b);
    friend bool operator==(const GradedChar& a, const GradedChar& b);
    friend bool operator!=(const GradedChar& a, const GradedChar& b) { return !(a == b); }

    std::string str() const;

private:
    Window win_;
    std::map<int, TruncSeries> t_;
};

/// Coefficientwise equality of all multiplicity series on the window w.
/// Throws when either character's knowledge does not cover w.
bool equal_on(const GradedChar& a, const GradedChar& b, Window w);

/// Fallback window [-lambda^2, 3*lambda^2] used when a caller gives none.
Window default_window(int lambda);

// --- named module families --------------------------------------------------

/// ch_gr of the local Weyl module: the V(lambda-2r) series is the polynomial
/// qbinom(lambda, r) - qbinom(lambda, r-1); dimension 2^lambda.
GradedChar weyl_local_char(int lambda);

/// ch_gr of the global Weyl module: the local character times (1:u)_lambda.
GradedChar weyl_global_char(int lambda, Window w);

/// Hilbert series of the weight space of the global Weyl module at weight
/// lambda - 2p, i.e. (1:u)_lambda * qbinom(lambda, p); zero out of range.
TruncSeries weight_hilbert(int lambda, int p, Window w);

/// ch_gr of the indecomposable tilting module T(lambda, 0):
/// sum_{s=0}^{floor(lambda/2)} u^{s(s-lambda)} (1:u)_s ch_gr W(lambda-2s).
/// Carries negative exponents; the window is widened to hold them all.
GradedChar tilting_char(int lambda, Window w);

/// ch_gr of the lambda-th exterior power of W(1), which realizes
/// T(lambda, a_lambda) with a_lambda = C(lambda, 2):
/// u^{a_lambda} (1:u)_lambda ch_gr(local)^*.
GradedChar wedge_power_char(int lambda, Window w);

inline int wedge_shift(int lambda) { return lambda * (lambda - 1) / 2; } // a_lambda
inline int socle_grade(int lambda) { return (lambda / 2) * (lambda - lambda / 2); }

} // namespace weyl
