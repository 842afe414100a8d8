#include "weyl/verify_suites.hpp"

#include <algorithm>

#include "weyl/filtration.hpp"
#include "weyl/graded_char.hpp"
#include "weyl/module_lab.hpp"
#include "weyl/sl2char.hpp"
#include "weyl/trunc_series.hpp"

namespace weyl {

namespace {

// Deterministic generator for sampled ring-axiom checks.
struct Lcg {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    int next(int lo, int hi) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((state >> 33) % static_cast<unsigned>(hi - lo + 1));
    }
};

TruncSeries random_poly(Lcg& rng, int max_deg) {
    int deg = rng.next(0, max_deg);
    std::vector<Int> cs(static_cast<size_t>(deg) + 1);
    for (Int& c : cs) c = rng.next(-5, 5);
    return TruncSeries::polynomial(0, std::move(cs));
}

Sl2Char random_char(Lcg& rng, int max_weight) {
    Sl2Char c;
    int k = rng.next(1, 4);
    for (int i = 0; i < k; ++i) c.add(rng.next(-max_weight, max_weight), rng.next(1, 3));
    return c;
}

void run(std::vector<CheckResult>& out, const std::string& name,
         const std::function<bool()>& body) {
    bool ok = false;
    try {
        ok = body();
    } catch (...) {
        ok = false;
    }
    out.push_back({name, ok});
}

} // namespace

std::vector<CheckResult> verify_qseries(VerifyCaps caps) {
    int nmax = caps.lambda_max > 0 ? caps.lambda_max : 20;
    int whi = caps.window_hi > 0 ? caps.window_hi : 30;
    std::vector<CheckResult> out;

    run(out, "gaussian binomial palindromy qb(n,s) = qb(n,n-s)", [&] {
        for (int n = 0; n <= nmax; ++n)
            for (int s = 0; s <= n; ++s)
                if (q_binom(n, s) != q_binom(n, n - s)) return false;
        return true;
    });
    run(out, "gaussian binomial at u=1 equals C(n,s)", [&] {
        for (int n = 0; n <= nmax; ++n)
            for (int s = 0; s <= n; ++s)
                if (q_binom(n, s).coeff_sum() != binomial(n, s)) return false;
        return true;
    });
    run(out, "q-Pascal recurrence", [&] {
        for (int n = 1; n <= nmax; ++n)
            for (int s = 0; s <= n; ++s)
                if (q_binom(n, s) !=
                    q_binom(n - 1, s - 1) + q_binom(n - 1, s).shifted(s))
                    return false;
        return true;
    });
    run(out, "poch_poly * poch_inv = 1 within window", [&] {
        for (int n = 0; n <= std::min(nmax, 15); ++n) {
            TruncSeries prod = poch_poly(n) * poch_inv(n, Window{0, whi});
            if (prod != TruncSeries::one()) return false;
        }
        return true;
    });
    run(out, "series multiplication associative and commutative on samples", [&] {
        Lcg rng;
        for (int i = 0; i < 40; ++i) {
            TruncSeries a = random_poly(rng, 6), b = random_poly(rng, 6),
                        c = random_poly(rng, 6);
            if ((a * b) * c != a * (b * c)) return false;
            if (a * b != b * a) return false;
            TruncSeries at = a.with_window({0, 4}), bt = b.with_window({0, 4}),
                        ct = c.with_window({0, 4});
            if ((at * bt) * ct != at * (bt * ct)) return false;
        }
        return true;
    });
    run(out, "substitute_inverse is an involution on polynomials", [&] {
        Lcg rng;
        for (int i = 0; i < 40; ++i) {
            TruncSeries a = random_poly(rng, 8).shifted(rng.next(-4, 4));
            if (substitute_inverse(substitute_inverse(a)) != a) return false;
        }
        return true;
    });
    return out;
}

std::vector<CheckResult> verify_characters(VerifyCaps caps) {
    int lmax = caps.lambda_max > 0 ? caps.lambda_max : 14;
    std::vector<CheckResult> out;

    run(out, "clebsch-gordan equals decompose of character product", [&] {
        for (int l = 0; l <= std::min(lmax, 10); ++l)
            for (int m = 0; m <= std::min(lmax, 10); ++m)
                if (decompose(char_mul(irr_char(l), irr_char(m))) != clebsch_gordan(l, m))
                    return false;
        return true;
    });
    run(out, "character product commutative and associative on samples", [&] {
        Lcg rng;
        for (int i = 0; i < 40; ++i) {
            Sl2Char a = random_char(rng, 10), b = random_char(rng, 10),
                    c = random_char(rng, 10);
            if (char_mul(a, b) != char_mul(b, a)) return false;
            if (char_mul(char_mul(a, b), c) != char_mul(a, char_mul(b, c))) return false;
        }
        return true;
    });
    run(out, "local Weyl total dimension is 2^lambda", [&] {
        Int p = 2;
        for (int l = 1; l <= lmax; ++l, p *= 2)
            if (weyl_local_char(l).dimension_at_u1() != p) return false;
        return true;
    });
    run(out, "graded tensor collapses to the sl2 product at u=1", [&] {
        for (int l = 0; l <= std::min(lmax, 6); ++l)
            for (int m = 0; m <= std::min(lmax, 6); ++m) {
                GradedChar t = tensor(weyl_local_char(l), weyl_local_char(m));
                Sl2Char plain =
                    char_mul(weyl_local_char(l).u1_collapse(), weyl_local_char(m).u1_collapse());
                if (t.u1_collapse() != plain) return false;
            }
        return true;
    });
    run(out, "top grade of the local V(lambda-bar) series is floor*ceil", [&] {
        for (int l = 1; l <= std::min(lmax, 12); ++l) {
            auto top = weyl_local_char(l).series(l % 2).support_max();
            if (!top || *top != socle_grade(l)) return false;
        }
        return true;
    });
    run(out, "local Weyl series nonnegative with unit top-weight series", [&] {
        for (int l = 0; l <= std::min(lmax, 12); ++l) {
            GradedChar c = weyl_local_char(l);
            for (const auto& [w, s] : c.terms())
                for (int e = s.lo(); e <= s.hi(); ++e)
                    if (s.coeff(e) < 0) return false;
            if (c.series(l) != TruncSeries::one()) return false;
        }
        return true;
    });
    return out;
}

std::vector<CheckResult> verify_filtration(VerifyCaps caps) {
    int lmax = caps.lambda_max > 0 ? caps.lambda_max : 12;
    int whi = caps.window_hi > 0 ? caps.window_hi : 40;
    std::vector<CheckResult> out;

    run(out, "b-coefficient recursion equals closed form", [&] {
        auto table = b_coeff_recursion(lmax);
        for (int l = 0; l <= lmax; ++l)
            for (int s = 0; 2 * s <= l; ++s)
                if (table[static_cast<size_t>(l)][static_cast<size_t>(s)] !=
                    b_coeff_closed(l, s, Window{-whi, whi}))
                    return false;
        return true;
    });
    run(out, "peel of the dual local character gives the b-coefficients", [&] {
        for (int l = 0; l <= std::min(lmax, 10); ++l) {
            FiltMultiplicity fm = peel(weyl_local_char(l).dual(), FiltBasis::LocalWeyl);
            for (int s = 0; 2 * s <= l; ++s)
                if (fm.at(l - 2 * s) != b_coeff_closed(l, s, Window{-whi, whi}))
                    return false;
        }
        return true;
    });
    run(out, "peel of global tensor products matches closed multiplicities", [&] {
        Window w{0, std::min(whi, 24)};
        for (int l = 0; l <= std::min(lmax, 6); ++l)
            for (int m = 0; m <= std::min(lmax, 6); ++m) {
                GradedChar chi = tensor(weyl_global_char(l, w), weyl_global_char(m, w));
                FiltMultiplicity got = peel(chi, FiltBasis::GlobalWeyl);
                FiltMultiplicity want = tensor_weyl_multiplicities(l, m, w);
                if (!got.certified_nonneg) return false;
                if (got.mults.size() != want.mults.size()) return false;
                for (const auto& [mu, s] : want.mults)
                    if (got.at(mu) != s) return false;
            }
        return true;
    });
    run(out, "peel reconstruction reproduces the input exactly", [&] {
        Window w{0, 20};
        GradedChar chi = tensor(weyl_global_char(3, w), weyl_global_char(2, w));
        if (reconstruct(peel(chi, FiltBasis::GlobalWeyl), w) != chi) return false;
        GradedChar d6 = weyl_local_char(6).dual();
        if (reconstruct(peel(d6, FiltBasis::LocalWeyl), d6.window()) != d6) return false;
        GradedChar l5 = weyl_local_char(5);
        FiltMultiplicity unit = peel(l5, FiltBasis::LocalWeyl);
        if (unit.mults.size() != 1 || unit.at(5) != TruncSeries::one()) return false;
        return true;
    });
    run(out, "tilting character equals the shifted wedge character", [&] {
        for (int l = 0; l <= std::min(lmax, 8); ++l) {
            Window w{-20, 40};
            GradedChar t = tilting_char(l, w);
            GradedChar sh = wedge_power_char(l, w.shifted(wedge_shift(l))).shifted(-wedge_shift(l));
            if (!equal_on(t, sh, w)) return false;
        }
        return true;
    });
    run(out, "q-binomial multiplicity identity", [&] {
        for (int l = 0; l <= std::min(lmax, 8); ++l)
            for (int m = 0; m <= std::min(lmax, 8); ++m)
                for (int nu = 0; nu <= std::min(l, m); ++nu)
                    if (!verify_mult_identity(l, m, nu, Window{0, whi})) return false;
        return true;
    });
    run(out, "local tensor expansion and its dual", [&] {
        for (int l = 0; l <= std::min(lmax, 8); ++l)
            if (!verify_local_tensor(l)) return false;
        return true;
    });
    return out;
}

std::vector<CheckResult> verify_modulelab(VerifyCaps caps) {
    int lmax = caps.lambda_max > 0 ? caps.lambda_max : 4;
    int trunc = caps.trunc > 0 ? caps.trunc : 8;
    std::vector<CheckResult> out;
    using lab::Gen;
    using lab::Kind;
    using lab::Realization;

    run(out, "bimodule: generators commute with right power sums", [&] {
        for (Kind k : {Kind::Tensor, Kind::Sym, Kind::Wedge}) {
            Realization m = Realization::build(k, 2, std::min(trunc, 6));
            for (Gen g : {Gen::X, Gen::Y, Gen::H})
                for (int r = 0; r <= 2; ++r)
                    for (int s = 1; s <= 2; ++s)
                        for (const auto& [key, basis] : m.blocks()) {
                            if (key.degree > m.trunc() - r - s) continue;
                            for (const auto& lbl : basis) {
                                Realization::Vec v{{lbl, Rat(1)}};
                                auto a = m.apply_gen(g, r, m.apply_powersum(s, v));
                                auto b = m.apply_powersum(s, m.apply_gen(g, r, v));
                                if (a != b) return false;
                            }
                        }
        }
        return true;
    });
    run(out, "Sym build has the global Weyl character", [&] {
        for (int l = 1; l <= lmax; ++l) {
            int safe = trunc - l;
            GradedChar brute = lab::graded_char_of(Realization::build(Kind::Sym, l, trunc), safe);
            if (!equal_on(brute, weyl_global_char(l, Window{0, safe}), Window{0, safe}))
                return false;
        }
        return true;
    });
    run(out, "Wedge build matches the wedge character and top-space Hilbert", [&] {
        for (int l = 1; l <= lmax; ++l) {
            int d = wedge_shift(l) + 4;
            int safe = d - l;
            GradedChar brute = lab::graded_char_of(Realization::build(Kind::Wedge, l, d), safe);
            if (!equal_on(brute, wedge_power_char(l, Window{0, safe}), Window{0, safe}))
                return false;
            TruncSeries top = lab::wedge_top_space(l, d);
            TruncSeries expect =
                poch_inv(l, Window{0, d - wedge_shift(l)}).shifted(wedge_shift(l));
            if (top != expect) return false;
        }
        return true;
    });
    run(out, "local quotient has dimension 2^lambda and the local character", [&] {
        for (int l = 1; l <= lmax; ++l) {
            int d = socle_grade(l) + 1;
            Realization q = lab::local_weyl_quotient(l, d);
            Int want = 1;
            for (int i = 0; i < l; ++i) want *= 2;
            if (Int(q.total_dim()) != want) return false;
            if (lab::graded_char_of(q, d) != weyl_local_char(l)) return false;
        }
        return true;
    });
    run(out, "Sym weight-space dimensions match the weight Hilbert series", [&] {
        for (int l = 1; l <= lmax; ++l) {
            Realization m = Realization::build(Kind::Sym, l, trunc);
            for (int p = 0; p <= l; ++p) {
                TruncSeries want = weight_hilbert(l, p, Window{0, trunc});
                for (int d = 0; d <= trunc; ++d)
                    if (Int(m.block_dim({d, l - 2 * p})) != want.coeff(d)) return false;
            }
        }
        return true;
    });
    run(out, "no highest-weight vectors below the top weight in Tensor builds", [&] {
        for (int l = 1; l <= std::min(lmax, 3); ++l) {
            Realization m = Realization::build(Kind::Tensor, l, trunc);
            for (int d = 0; d <= trunc - l; ++d)
                for (int mu = l - 2; mu >= -l; mu -= 2)
                    if (!lab::highest_weight_vectors(m, d, mu).empty()) return false;
        }
        return true;
    });
    run(out, "Garland ladder, vanishing, and comultiplication", [&] {
        for (int l = 1; l <= lmax; ++l)
            for (int s = 0; s <= l + 2; ++s)
                if (!lab::verify_garland(l, s, s + 1)) return false;
        return true;
    });
    run(out, "o-canonical filtration of W(lambda) (x) W(1)", [&] {
        for (int l = 0; l <= std::min(lmax, 2); ++l) {
            Realization m =
                (l == 0) ? Realization::build_sym_product({1}, trunc)
                         : Realization::build_sym_product({l, 1}, trunc);
            lab::OCanonicalResult oc = lab::ocanonical_filtration(m, l + 1);
            Window w{0, trunc};
            GradedChar sub_want = weyl_global_char(l + 1, w).scaled_by(q_int(l + 1));
            if (!equal_on(oc.submodule, sub_want, w)) return false;
            GradedChar quo_want =
                l == 0 ? GradedChar(w)
                       : weyl_global_char(l - 1, w).scaled_by(poch_inv(1, Window{0, trunc}));
            if (!equal_on(oc.quotient, quo_want, w)) return false;
        }
        return true;
    });
    run(out, "o-canonical: Sym(lambda) is generated by its top weight", [&] {
        for (int l = 1; l <= std::min(lmax, 3); ++l) {
            Realization m = Realization::build(Kind::Sym, l, std::min(trunc, 5));
            lab::OCanonicalResult oc = lab::ocanonical_filtration(m, l);
            if (!oc.quotient.empty()) return false;
            if (oc.submodule != lab::graded_char_of(m, m.trunc())) return false;
        }
        return true;
    });
    return out;
}

std::vector<CheckResult> verify_all(VerifyCaps caps) {
    std::vector<CheckResult> out;
    for (auto& suite : {verify_qseries(caps), verify_characters(caps),
                        verify_filtration(caps), verify_modulelab(caps)})
        out.insert(out.end(), suite.begin(), suite.end());
    return out;
}

} // namespace weyl
