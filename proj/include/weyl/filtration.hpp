#pragma once

#include <map>
#include <string>
#include <vector>

#include "weyl/graded_char.hpp"

namespace weyl {

enum class FiltBasis { GlobalWeyl, LocalWeyl, DualLocalWeyl };

std::string to_string(FiltBasis b);
FiltBasis basis_from_string(const std::string& s);

/// Filtration multiplicities of a graded character with respect to one of the
/// three bases.  certified_nonneg records whether every coefficient of every
/// multiplicity series is nonnegative within the window; this is a necessary
/// condition for an actual filtration, reported as a certificate, never a
/// proof.
struct FiltMultiplicity {
    FiltBasis basis = FiltBasis::GlobalWeyl;
    std::map<int, TruncSeries> mults;
    bool certified_nonneg = false;
    Window window{0, 0};

    TruncSeries at(int mu) const;
};

/// The character of the basis element labelled mu, on window w where needed.
GradedChar filt_basis_char(FiltBasis basis, int mu, Window w);

/// Triangular peel from the highest weight.  For the global-Weyl basis each
/// coefficient series is multiplied by the reciprocal polynomial
/// (1-u)...(1-u^mu), so exactness is automatic in integer arithmetic.
/// Throws when a nonzero remainder survives within the window.
FiltMultiplicity peel(const GradedChar& chi, FiltBasis basis);

/// Sum of m_mu * basis-character(mu); inverse of peel on its image.
GradedChar reconstruct(const FiltMultiplicity& fm, Window w);

/// Closed-form multiplicities of W(lambda+mu-2nu) in W(lambda) (x) W(mu):
/// qbinom(lambda+mu-2nu, mu-nu) * (1:u)_nu.
FiltMultiplicity tensor_weyl_multiplicities(int lambda, int mu, Window w);

/// Closed form b_lambda(s) = u^{s(s-lambda)} (1:u)_s (1:u)_{lambda-2s} / (1:u)_lambda,
/// the coefficient of ch_gr(local(lambda-2s)) in ch_gr(local(lambda))^*.
/// Zero when 2s > lambda.  Errors when the window cannot certify that the
/// result is a Laurent polynomial (nonzero coefficient at the top edge).
TruncSeries b_coeff_closed(int lambda, int s, Window w);

/// All b_lambda(s), lambda <= lambda_max, generated purely from the recursion
///   b_{l+1}(s) = b_l(s) + (1-u^{l-2s+2}) b_l(s-1) - (1-u^{-l}) b_{l-1}(s-1)
/// with b_0(0) = b_1(0) = 1.  Entries are exact Laurent polynomials;
/// table[l][s] is b_l(s) for 0 <= 2s <= l.
std::vector<std::vector<TruncSeries>> b_coeff_recursion(int lambda_max);

/// The q-binomial identity used in the tensor-multiplicity induction:
///   (1:u)_nu (1:u)_1 ( qb(l+m-2n, m-n) - qb(l+m-1-2n, m-1-n) )
/// = (1:u)_{nu+1} ( qb(l+m-1-2n, m-n) [m+1] - qb(l+m-2-2n, m-1-n) [l+m-1-2n] ).
bool verify_mult_identity(int lambda, int mu, int nu, Window w);

/// Checks ch(local(l)) ch(local(1)) = ch(local(l+1)) + (1-u^l) ch(local(l-1))
/// together with its dualized form.  Vacuously true at lambda = 0.
bool verify_local_tensor(int lambda);

} // namespace weyl
