#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/module_lab.hpp"
#include "weyl/verify_suites.hpp"

using namespace weyl;
using namespace weyl::lab;

namespace {
Label lab_of(std::initializer_list<std::pair<int, int>> fs) {
    Label l;
    for (auto [j, k] : fs) l.push_back({j, k});
    return l;
}
Realization::Vec unit(const Label& l) { return { {l, Rat(1)} }; }
} // namespace

TEST_CASE("tensor build of W(1)") {
    Realization m = Realization::build(Kind::Tensor, 1, 5);
    for (int k = 0; k <= 5; ++k) {
        CHECK(m.block_dim({k, 1}) == 1);
        CHECK(m.block_dim({k, -1}) == 1);
    }
    CHECK(m.total_dim() == 12);
}

TEST_CASE("wedge and sym block dimensions") {
    Realization w2 = Realization::build(Kind::Wedge, 2, 3);
    CHECK(w2.block_dim({0, 2}) == 0);
    CHECK(w2.block_dim({1, 2}) == 1);
    CHECK(w2.block_dim({2, 2}) == 1);
    CHECK(w2.block_dim({3, 2}) == 2);

    Realization s2 = Realization::build(Kind::Sym, 2, 2);
    CHECK(s2.block_dim({0, 0}) == 1);
    CHECK(s2.block_dim({1, 0}) == 2);
    CHECK(s2.block_dim({2, 0}) == 3);
}

TEST_CASE("generator actions") {
    Realization m = Realization::build(Kind::Tensor, 1, 4);
    // (x (x) t^r) e_2 = e_1 t^r
    for (int r = 0; r <= 3; ++r) {
        auto img = m.apply_gen(Gen::X, r, unit(lab_of({{2, 0}})));
        REQUIRE(img.size() == 1);
        CHECK(img.begin()->first == lab_of({{1, r}}));
        CHECK(img.begin()->second == 1);
    }
    // x kills e_1, y kills e_2
    CHECK(m.apply_gen(Gen::X, 0, unit(lab_of({{1, 2}}))).empty());
    CHECK(m.apply_gen(Gen::Y, 1, unit(lab_of({{2, 2}}))).empty());
    // h (x) 1 is the weight scalar
    Realization s = Realization::build(Kind::Sym, 3, 3);
    auto hv = s.apply_gen(Gen::H, 0, unit(lab_of({{1, 0}, {1, 1}, {2, 0}})));
    REQUIRE(hv.size() == 1);
    CHECK(hv.begin()->second == 1); // weight +1
    // x (x) 1 kills the top weight space of Sym
    CHECK(s.apply_gen(Gen::X, 0, unit(lab_of({{1, 0}, {1, 1}, {1, 2}}))).empty());
    // truncation drops images beyond trunc
    CHECK(m.apply_gen(Gen::X, 3, unit(lab_of({{2, 2}}))).empty());
}

TEST_CASE("right power sums") {
    Realization t2 = Realization::build(Kind::Tensor, 2, 4);
    auto img = t2.apply_powersum(1, unit(lab_of({{1, 0}, {2, 0}})));
    CHECK(img.size() == 2);
    CHECK(img.at(lab_of({{1, 1}, {2, 0}})) == 1);
    CHECK(img.at(lab_of({{1, 0}, {2, 1}})) == 1);

    // wedge collisions vanish by antisymmetry
    Realization w2 = Realization::build(Kind::Wedge, 2, 4);
    auto wimg = w2.apply_powersum(1, unit(lab_of({{1, 0}, {1, 1}})));
    REQUIRE(wimg.size() == 1);
    CHECK(wimg.at(lab_of({{1, 0}, {1, 2}})) == 1);

    // sym doubles on equal factors
    Realization s2 = Realization::build(Kind::Sym, 2, 4);
    auto simg = s2.apply_powersum(2, unit(lab_of({{1, 0}, {1, 0}})));
    REQUIRE(simg.size() == 1);
    CHECK(simg.at(lab_of({{1, 0}, {1, 2}})) == 2);
}

TEST_CASE("bimodule commutators vanish with headroom") {
    for (Kind k : {Kind::Tensor, Kind::Sym, Kind::Wedge}) {
        Realization m = Realization::build(k, 2, 6);
        for (const auto& [key, basis] : m.blocks()) {
            if (key.degree > 6 - 3) continue;
            for (const auto& l : basis) {
                auto a = m.apply_gen(Gen::X, 1, m.apply_powersum(2, unit(l)));
                auto b = m.apply_powersum(2, m.apply_gen(Gen::X, 1, unit(l)));
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("local Weyl quotient") {
    Realization q1 = local_weyl_quotient(1, 3);
    CHECK(q1.block_dim({0, 1}) == 1);
    CHECK(q1.block_dim({0, -1}) == 1);
    CHECK(q1.block_dim({1, 1}) == 0);
    CHECK(q1.total_dim() == 2);

    Realization q2 = local_weyl_quotient(2, 3);
    CHECK(q2.total_dim() == 4);
    CHECK(graded_char_of(q2, 3) == weyl_local_char(2));

    Realization q3 = local_weyl_quotient(3, 4);
    GradedChar c3 = graded_char_of(q3, 4);
    CHECK(c3 == weyl_local_char(3));
    CHECK(*c3.series(1).support_max() == 2); // socle grade
}

TEST_CASE("wedge top weight space") {
    CHECK(wedge_top_space(1, 4) ==
          TruncSeries::truncated(0, {Int(1), Int(1), Int(1), Int(1), Int(1)}));
    CHECK(wedge_top_space(2, 3) ==
          TruncSeries::truncated(0, {Int(0), Int(1), Int(1), Int(2)}));
    CHECK(*wedge_top_space(3, 6).support_min() == 3); // a_3 = C(3,2)
}

TEST_CASE("highest weight vectors") {
    Realization s2 = Realization::build(Kind::Sym, 2, 4);
    auto hw = highest_weight_vectors(s2, 0, 2);
    REQUIRE(hw.size() == 1);
    CHECK(hw[0].count(lab_of({{1, 0}, {1, 0}})) == 1);

    Realization t1 = Realization::build(Kind::Tensor, 1, 5);
    for (int r = 0; r <= 4; ++r)
        CHECK(highest_weight_vectors(t1, r, 1).size() == 1);

    Realization w2 = Realization::build(Kind::Wedge, 2, 4);
    auto vand = highest_weight_vectors(w2, 1, 2);
    REQUIRE(vand.size() == 1);
    CHECK(vand[0].count(lab_of({{1, 0}, {1, 1}})) == 1);

    CHECK_THROWS_WITH(highest_weight_vectors(s2, 4, 2),
                      "no headroom; kernel not certifiable");
}

TEST_CASE("garland elements") {
    GarlandElement p0 = garland_p(0);
    REQUIRE(p0.terms.size() == 1);
    CHECK(p0.terms.at({}) == 1);

    GarlandElement p1 = garland_p(1);
    REQUIRE(p1.terms.size() == 1);
    CHECK(p1.terms.at({1}) == -1);

    GarlandElement p2 = garland_p(2);
    REQUIRE(p2.terms.size() == 2);
    CHECK(p2.terms.at({1, 1}) == Rat(1, 2));
    CHECK(p2.terms.at({2}) == Rat(-1, 2));
}

TEST_CASE("garland identities") {
    CHECK(verify_garland(1, 1, 3));
    CHECK(verify_garland(2, 3, 4)); // includes P_3 w_2 = 0
    CHECK(verify_garland(3, 2, 4));
    CHECK(verify_garland(2, 2, 4)); // comultiplication at n = 2
}

TEST_CASE("brute-force characters match the closed formulas") {
    CHECK(equal_on(graded_char_of(Realization::build(Kind::Sym, 2, 6), 4),
                   weyl_global_char(2, {0, 4}), {0, 4}));
    CHECK(graded_char_of(local_weyl_quotient(3, 4), 4) == weyl_local_char(3));
    CHECK(equal_on(graded_char_of(Realization::build(Kind::Wedge, 2, 6), 4),
                   wedge_power_char(2, {0, 4}), {0, 4}));
}

TEST_CASE("o-canonical filtration") {
    // Sym(lambda) is generated by its top weight space
    Realization s2 = Realization::build(Kind::Sym, 2, 5);
    OCanonicalResult oc = ocanonical_filtration(s2, 2);
    CHECK(oc.quotient.empty());
    CHECK(oc.submodule == graded_char_of(s2, 5));

    // W(1) (x) W(1) at weight 2: the short exact sequence quotients
    Realization t2 = Realization::build(Kind::Tensor, 2, 6);
    OCanonicalResult oc2 = ocanonical_filtration(t2, 2);
    Window w{0, 6};
    CHECK(equal_on(oc2.submodule, weyl_global_char(2, w).scaled_by(q_int(2)), w));
    CHECK(equal_on(oc2.quotient,
                   weyl_global_char(0, w).scaled_by(poch_inv(1, {0, 6})), w));
}

TEST_CASE("build caps") {
    CHECK_THROWS(Realization::build(Kind::Tensor, 7, 1));
    CHECK_THROWS(Realization::build(Kind::Sym, 2, 13));
    BuildLimits tight;
    tight.max_basis = 5;
    CHECK_THROWS(Realization::build(Kind::Sym, 2, 6, tight));
}

TEST_CASE("no highest-weight vectors below the top weight") {
    for (int l = 1; l <= 3; ++l) {
        Realization m = Realization::build(Kind::Tensor, l, 6);
        for (int d = 0; d <= 6 - l; ++d)
            for (int mu = l - 2; mu >= -l; mu -= 2)
                CHECK(highest_weight_vectors(m, d, mu).empty());
    }
}

TEST_CASE("module lab identity suite") {
    for (const auto& r : verify_modulelab()) {
        INFO(r.name);
        CHECK(r.pass);
    }
}
