#include "weyl/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace weyl {

std::string to_string(FiltBasis b) {
    switch (b) {
    case FiltBasis::GlobalWeyl: return "global";
    case FiltBasis::LocalWeyl: return "local";
    case FiltBasis::DualLocalWeyl: return "dual-local";
    }
    return "?";
}

FiltBasis basis_from_string(const std::string& s) {
    if (s == "global") return FiltBasis::GlobalWeyl;
    if (s == "local") return FiltBasis::LocalWeyl;
    if (s == "dual-local") return FiltBasis::DualLocalWeyl;
    throw std::invalid_argument("unknown basis: " + s);
}

TruncSeries FiltMultiplicity::at(int mu) const {
    auto it = mults.find(mu);
    return it == mults.end() ? TruncSeries::zero(window) : it->second;
}

GradedChar filt_basis_char(FiltBasis basis, int mu, Window w) {
    switch (basis) {
    case FiltBasis::GlobalWeyl: return weyl_global_char(mu, w);
    case FiltBasis::LocalWeyl: return weyl_local_char(mu);
    case FiltBasis::DualLocalWeyl: return weyl_local_char(mu).dual();
    }
    throw std::logic_error("bad basis");
}

FiltMultiplicity peel(const GradedChar& chi, FiltBasis basis) {
    FiltMultiplicity fm;
    fm.basis = basis;
    fm.window = chi.window();
    fm.certified_nonneg = true;
    if (chi.empty()) return fm;

    GradedChar rem = chi;
    int top = chi.terms().rbegin()->first;
    for (int mu = top; mu >= 0; --mu) {
        TruncSeries m = rem.series(mu);
        if (basis == FiltBasis::GlobalWeyl)
            m = m * poch_poly(mu); // divide by (1:u)_mu exactly
        if (m.is_zero()) continue;
        fm.mults.emplace(mu, m);
        GradedChar sub = filt_basis_char(basis, mu, rem.window()).scaled_by(m.negated());
        rem = rem + sub;
    }
    for (const auto& [mu, ser] : rem.terms())
        if (!ser.is_zero())
            throw std::runtime_error(
                "peel: nonzero remainder within window (window too small or "
                "character not in basis span)");
    for (const auto& [mu, ser] : fm.mults)
        for (int e = ser.lo(); e <= ser.hi(); ++e)
            if (ser.coeff(e) < 0) fm.certified_nonneg = false;
    return fm;
}

GradedChar reconstruct(const FiltMultiplicity& fm, Window w) {
    GradedChar acc(w);
    for (const auto& [mu, m] : fm.mults)
        acc = acc + filt_basis_char(fm.basis, mu, w).scaled_by(m);
    return acc;
}

FiltMultiplicity tensor_weyl_multiplicities(int lambda, int mu, Window w) {
    if (lambda < 0 || mu < 0)
        throw std::invalid_argument("tensor_weyl_multiplicities: weights must be nonnegative");
    FiltMultiplicity fm;
    fm.basis = FiltBasis::GlobalWeyl;
    fm.window = w;
    fm.certified_nonneg = true;
    for (int nu = 0; nu <= std::min(lambda, mu); ++nu) {
        TruncSeries m =
            (q_binom(lambda + mu - 2 * nu, mu - nu) * poch_inv(nu, Window{0, w.hi}))
                .with_window(w);
        fm.mults.emplace(lambda + mu - 2 * nu, std::move(m));
    }
    for (const auto& [mu2, ser] : fm.mults)
        for (int e = ser.lo(); e <= ser.hi(); ++e)
            if (ser.coeff(e) < 0) fm.certified_nonneg = false;
    return fm;
}

TruncSeries b_coeff_closed(int lambda, int s, Window w) {
    if (lambda < 0) throw std::invalid_argument("b_coeff_closed: lambda must be nonnegative");
    if (s < 0 || 2 * s > lambda) return TruncSeries::zero(w, true);
    int shift = s * (s - lambda);
    if (w.hi < shift) throw std::runtime_error("b_coeff_closed: window too small");
    Window inner{0, w.hi - shift};
    TruncSeries prod =
        poch_inv(s, inner) * poch_inv(lambda - 2 * s, inner) * poch_poly(lambda);
    TruncSeries res = prod.shifted(shift);
    if (res.coeff(w.hi) != 0)
        throw std::runtime_error(
            "b_coeff_closed: window cannot certify finite support");
    return res.with_window(w);
}

std::vector<std::vector<TruncSeries>> b_coeff_recursion(int lambda_max) {
    if (lambda_max < 1)
        throw std::invalid_argument("b_coeff_recursion: lambda_max must be >= 1");
    std::vector<std::vector<TruncSeries>> b(static_cast<size_t>(lambda_max) + 1);
    b[0] = {TruncSeries::one()};
    b[1] = {TruncSeries::one()};
    auto get = [&](int l, int s) -> TruncSeries {
        if (s < 0 || 2 * s > l) return TruncSeries();
        return b[static_cast<size_t>(l)][static_cast<size_t>(s)];
    };
    auto one_minus_u = [](int k) {
        return TruncSeries::one() - TruncSeries::monomial(1, k);
    };
    for (int l = 1; l < lambda_max; ++l) {
        std::vector<TruncSeries> row(static_cast<size_t>(l + 1) / 2 + 1);
        for (int s = 0; 2 * s <= l + 1; ++s) {
            TruncSeries v = get(l, s) + one_minus_u(l - 2 * s + 2) * get(l, s - 1) -
                            one_minus_u(-l) * get(l - 1, s - 1);
            row[static_cast<size_t>(s)] = std::move(v);
        }
        b[static_cast<size_t>(l) + 1] = std::move(row);
    }
    return b;
}

bool verify_mult_identity(int lambda, int mu, int nu, Window w) {
    if (lambda < 0 || mu < 0 || nu < 0)
        throw std::invalid_argument("verify_mult_identity: indices must be nonnegative");
    Window inner{0, w.hi};
    auto qb = [](int n, int s) -> TruncSeries {
        if (s < 0) return TruncSeries();
        if (s == 0) return TruncSeries::one();
        return q_binom(n, s);
    };
    // [k] only ever multiplies a nonzero binomial, in which case k >= 1.
    auto times_qint = [&](const TruncSeries& f, int k) -> TruncSeries {
        if (f.is_zero() && f.exact()) return TruncSeries();
        return f * q_int(k);
    };
    int n0 = lambda + mu - 2 * nu;
    TruncSeries lhs = poch_inv(nu, inner) * poch_inv(1, inner) *
                      (qb(n0, mu - nu) - qb(n0 - 1, mu - 1 - nu));
    TruncSeries rhs = poch_inv(nu + 1, inner) *
                      (times_qint(qb(n0 - 1, mu - nu), mu + 1) -
                       times_qint(qb(n0 - 2, mu - 1 - nu), n0 - 1));
    return lhs == rhs;
}

bool verify_local_tensor(int lambda) {
    if (lambda < 0) throw std::invalid_argument("verify_local_tensor: lambda must be nonnegative");
    if (lambda == 0) return true; // the W_loc(-1) term vanishes
    auto one_minus_u = [](int k) {
        return TruncSeries::one() - TruncSeries::monomial(1, k);
    };
    GradedChar lhs = tensor(weyl_local_char(lambda), weyl_local_char(1));
    GradedChar rhs = weyl_local_char(lambda + 1) +
                     weyl_local_char(lambda - 1).scaled_by(one_minus_u(lambda));
    if (lhs != rhs) return false;
    GradedChar dlhs = tensor(weyl_local_char(lambda).dual(), weyl_local_char(1).dual());
    GradedChar drhs = weyl_local_char(lambda + 1).dual() +
                      weyl_local_char(lambda - 1).dual().scaled_by(one_minus_u(-lambda));
    return dlhs == drhs;
}

} // namespace weyl
