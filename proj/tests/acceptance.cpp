// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, with the per-criterion runtime budget enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "weyl/filtration.hpp"
#include "weyl/graded_char.hpp"
#include "weyl/module_lab.hpp"

using namespace weyl;

namespace {

struct Criterion {
    std::string name;
    long budget_ms;
    std::function<bool()> body;
};

bool crit1_local_dimension() {
    Int p = 2;
    for (int l = 1; l <= 14; ++l, p *= 2)
        if (weyl_local_char(l).dimension_at_u1() != p) return false;
    return true;
}

bool crit2_tensor_with_w1() {
    Window w{0, 30};
    for (int l = 0; l <= 12; ++l) {
        GradedChar lhs = tensor(weyl_global_char(l, w), weyl_global_char(1, w));
        GradedChar rhs = weyl_global_char(l + 1, w).scaled_by(q_int(l + 1));
        if (l >= 1)
            rhs = rhs + weyl_global_char(l - 1, w).scaled_by(poch_inv(1, {0, w.hi}));
        if (!equal_on(lhs, rhs, w)) return false;
    }
    return true;
}

bool crit3_tensor_multiplicities() {
    Window w{0, 24};
    for (int l = 0; l <= 6; ++l)
        for (int m = 0; m <= 6; ++m) {
            GradedChar chi = tensor(weyl_global_char(l, w), weyl_global_char(m, w));
            FiltMultiplicity got = peel(chi, FiltBasis::GlobalWeyl);
            FiltMultiplicity want = tensor_weyl_multiplicities(l, m, w);
            if (!got.certified_nonneg) return false;
            if (got.mults.size() != want.mults.size()) return false;
            for (const auto& [mu, s] : want.mults)
                if (got.at(mu) != s) return false;
        }
    return true;
}

bool crit4_b_coefficients() {
    Window w{-40, 40};
    auto table = b_coeff_recursion(12);
    for (int l = 0; l <= 12; ++l)
        for (int s = 0; 2 * s <= l; ++s)
            if (table[static_cast<size_t>(l)][static_cast<size_t>(s)] !=
                b_coeff_closed(l, s, w))
                return false;
    for (int l = 0; l <= 10; ++l) {
        GradedChar acc(w);
        for (int s = 0; 2 * s <= l; ++s)
            acc = acc + weyl_local_char(l - 2 * s).scaled_by(b_coeff_closed(l, s, w));
        if (acc != weyl_local_char(l).dual()) return false;
    }
    return true;
}

bool crit5_tilting_cross_check() {
    Window w{-20, 40};
    for (int l = 0; l <= 8; ++l) {
        GradedChar t = tilting_char(l, w);
        GradedChar sh =
            wedge_power_char(l, w.shifted(wedge_shift(l))).shifted(-wedge_shift(l));
        if (!equal_on(t, sh, w)) return false;
    }
    return true;
}

bool crit6_brute_force_global() {
    const int D = 8;
    for (int l = 1; l <= 4; ++l) {
        auto m = lab::Realization::build(lab::Kind::Sym, l, D);
        GradedChar brute = lab::graded_char_of(m, D - l);
        if (!equal_on(brute, weyl_global_char(l, {0, D - l}), {0, D - l})) return false;
    }
    return true;
}

bool crit7_brute_force_wedge() {
    for (int l = 1; l <= 4; ++l) {
        int D = wedge_shift(l) + 6;
        auto m = lab::Realization::build(lab::Kind::Wedge, l, D);
        GradedChar brute = lab::graded_char_of(m, D - l);
        if (!equal_on(brute, wedge_power_char(l, {0, D - l}), {0, D - l})) return false;
        TruncSeries top = lab::wedge_top_space(l, D);
        TruncSeries expect =
            poch_inv(l, {0, D - wedge_shift(l)}).shifted(wedge_shift(l));
        if (top != expect) return false;
    }
    return true;
}

bool crit8_brute_force_local() {
    for (int l = 1; l <= 6; ++l) {
        int D = socle_grade(l) + 1;
        auto q = lab::local_weyl_quotient(l, D);
        GradedChar brute = lab::graded_char_of(q, D);
        if (brute != weyl_local_char(l)) return false;
        int top = -1;
        for (const auto& [hw, s] : brute.terms())
            if (auto mx = s.support_max(); mx && *mx > top) top = *mx;
        if (top != socle_grade(l)) return false;
        if (brute.series(l % 2).coeff(top) != 1) return false;
        for (const auto& [hw, s] : brute.terms())
            if (hw != l % 2 && s.support_max() && *s.support_max() == top) return false;
    }
    return true;
}

bool crit9_garland() {
    for (int l = 1; l <= 5; ++l)
        for (int s = 0; s <= l + 2; ++s)
            if (!lab::verify_garland(l, s, s + 1)) return false;
    return true;
}

bool crit10_ocanonical() {
    const int D = 6;
    Window w{0, D};
    for (int l = 0; l <= 2; ++l) {
        auto m = (l == 0) ? lab::Realization::build_sym_product({1}, D)
                          : lab::Realization::build_sym_product({l, 1}, D);
        auto oc = lab::ocanonical_filtration(m, l + 1);
        GradedChar sub_want = weyl_global_char(l + 1, w).scaled_by(q_int(l + 1));
        if (!equal_on(oc.submodule, sub_want, w)) return false;
        GradedChar quo_want =
            l == 0 ? GradedChar(w)
                   : weyl_global_char(l - 1, w).scaled_by(poch_inv(1, {0, D}));
        if (!equal_on(oc.quotient, quo_want, w)) return false;
    }
    return true;
}

bool crit11_mult_identity() {
    Window w{0, 40};
    for (int l = 0; l <= 8; ++l)
        for (int m = 0; m <= 8; ++m)
            for (int nu = 0; nu <= std::min(l, m); ++nu)
                if (!verify_mult_identity(l, m, nu, w)) return false;
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"local Weyl dimension 2^lambda, lambda <= 14", 1000, crit1_local_dimension},
        {"W(lambda) (x) W(1) = [lambda+1] W(lambda+1) + (1:u)_1 W(lambda-1), lambda <= 12",
         5000, crit2_tensor_with_w1},
        {"global tensor multiplicities via peel, lambda,mu <= 6, certified", 10000,
         crit3_tensor_multiplicities},
        {"b-coefficients: recursion = closed form, and dual local expansion", 5000,
         crit4_b_coefficients},
        {"tilting character = shifted wedge character, lambda <= 8", 2000,
         crit5_tilting_cross_check},
        {"brute-force Sym = global Weyl character, lambda <= 4, D = 8", 30000,
         crit6_brute_force_global},
        {"brute-force Wedge = wedge character + top space, lambda <= 4", 60000,
         crit7_brute_force_wedge},
        {"brute-force local quotient: character and socle grade, lambda <= 6", 30000,
         crit8_brute_force_local},
        {"Garland ladder, vanishing and comultiplication, lambda <= 5", 10000,
         crit9_garland},
        {"o-canonical filtration of W(lambda) (x) W(1), lambda <= 2", 60000,
         crit10_ocanonical},
        {"q-binomial multiplicity identity, lambda,mu <= 8", 5000, crit11_mult_identity},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criteria[i].body();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ms >= criteria[i].budget_ms) {
            ok = false;
            note += " [over budget]";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << criteria[i].name << " (" << ms << " ms, budget "
                  << criteria[i].budget_ms << " ms)" << note << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << criteria.size() - static_cast<size_t>(failures) << "/" << criteria.size()
              << ")\n";
    return failures == 0 ? 0 : 1;
}
