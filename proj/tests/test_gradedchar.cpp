#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weyl/graded_char.hpp"
#include "weyl/json_io.hpp"

using namespace weyl;

namespace {
TruncSeries poly(std::initializer_list<int> cs, int lo = 0) {
    std::vector<Int> v;
    for (int c : cs) v.emplace_back(c);
    return TruncSeries::polynomial(lo, std::move(v));
}
} // namespace

TEST_CASE("local Weyl characters") {
    GradedChar l0 = weyl_local_char(0);
    CHECK(l0.series(0) == TruncSeries::one());
    CHECK(l0.terms().size() == 1);

    GradedChar l1 = weyl_local_char(1);
    CHECK(l1.terms().size() == 1);
    CHECK(l1.series(1) == TruncSeries::one());

    GradedChar l2 = weyl_local_char(2);
    CHECK(l2.series(2) == TruncSeries::one());
    CHECK(l2.series(0) == poly({0, 1})); // u

    GradedChar l3 = weyl_local_char(3);
    CHECK(l3.series(3) == TruncSeries::one());
    CHECK(l3.series(1) == poly({0, 1, 1})); // u + u^2
}

TEST_CASE("global Weyl characters") {
    GradedChar g0 = weyl_global_char(0, {0, 10});
    CHECK(g0.series(0) == TruncSeries::one());

    GradedChar g1 = weyl_global_char(1, {0, 2});
    CHECK(g1.series(1) == TruncSeries::truncated(0, {Int(1), Int(1), Int(1)}));

    GradedChar g2 = weyl_global_char(2, {0, 3});
    CHECK(g2.series(2) == TruncSeries::truncated(0, {Int(1), Int(1), Int(2), Int(2)}));
}

TEST_CASE("weight space Hilbert series") {
    CHECK(weight_hilbert(2, 1, {0, 2}) ==
          TruncSeries::truncated(0, {Int(1), Int(2), Int(3)}));
    CHECK(weight_hilbert(1, 0, {0, 2}) ==
          TruncSeries::truncated(0, {Int(1), Int(1), Int(1)}));
    CHECK(weight_hilbert(3, 4, {0, 5}).is_zero());
}

TEST_CASE("grade shift") {
    GradedChar l2 = weyl_local_char(2);
    CHECK(l2.shifted(0) == l2);
    GradedChar one(Window{0, 0});
    one.add_term(1, TruncSeries::one());
    CHECK(one.shifted(3).series(1) == TruncSeries::monomial(1, 3));
    CHECK(l2.shifted(5).shifted(-5) == l2);
}

TEST_CASE("dual characters") {
    GradedChar d2 = weyl_local_char(2).dual();
    CHECK(d2.series(2) == TruncSeries::one());
    CHECK(d2.series(0) == TruncSeries::monomial(1, -1));
    CHECK(d2.dual() == weyl_local_char(2));
    // W_loc(1) is self-dual
    CHECK(weyl_local_char(1).dual() == weyl_local_char(1));
}

TEST_CASE("graded tensor products") {
    Window w{0, 12};
    GradedChar triv(w);
    triv.add_term(0, TruncSeries::one());
    GradedChar g2 = weyl_global_char(2, w);
    CHECK(equal_on(tensor(g2, triv), g2, w));

    GradedChar ll = tensor(weyl_local_char(1), weyl_local_char(1));
    CHECK(ll.series(2) == TruncSeries::one());
    CHECK(ll.series(0) == TruncSeries::one());

    // W(1) (x) W(1) = [2] W(2) + (1:u)_1 W(0)
    GradedChar lhs = tensor(weyl_global_char(1, w), weyl_global_char(1, w));
    GradedChar rhs = weyl_global_char(2, w).scaled_by(q_int(2)) +
                     weyl_global_char(0, w).scaled_by(poch_inv(1, {0, w.hi}));
    CHECK(equal_on(lhs, rhs, w));
}

TEST_CASE("tilting characters") {
    CHECK(tilting_char(0, {0, 8}).series(0) == TruncSeries::one());
    // the window is widened to hold the negatively graded terms
    CHECK(tilting_char(4, {0, 10}).window().lo == -socle_grade(4));

    Window w{-2, 10};
    CHECK(equal_on(tilting_char(1, w), weyl_global_char(1, w), w));

    // T(2,0): W(2) plus the shifted s=1 term u^{-1} (1:u)_1 ch W(0)
    GradedChar t2 = tilting_char(2, w);
    GradedChar low(w);
    low.add_term(0, poch_inv(1, {0, w.hi + 1}).shifted(-1).with_window(w));
    GradedChar expect = weyl_global_char(2, w) + low;
    CHECK(equal_on(t2, expect, w));
    CHECK(t2.series(0).coeff(-1) == 1);
}

TEST_CASE("wedge power characters") {
    Window w{0, 10};
    GradedChar w1 = wedge_power_char(1, w);
    CHECK(equal_on(w1, weyl_global_char(1, w), w));

    GradedChar w2 = wedge_power_char(2, w);
    CHECK(w2.series(0) == poch_inv(2, {0, 10}));
    // lowest grade of the top-weight series is a_lambda
    GradedChar w3 = wedge_power_char(3, {0, 12});
    CHECK(*w3.series(3).support_min() == wedge_shift(3));
}

TEST_CASE("dimension counts") {
    Int p = 2;
    for (int l = 1; l <= 14; ++l, p *= 2)
        CHECK(weyl_local_char(l).dimension_at_u1() == p);
}

TEST_CASE("negative labels are dropped by construction") {
    // lambda = 1: the r = 1 term would have label -1 and a zero coefficient
    GradedChar l1 = weyl_local_char(1);
    CHECK(l1.terms().count(-1) == 0);
    CHECK(l1.terms().size() == 1);
    // above an inexact window the coefficient is unknown
    CHECK_THROWS(weyl_global_char(1, {0, 5}).series(1).coeff(99));
}

TEST_CASE("JSON round trips") {
    GradedChar g = weyl_global_char(3, {0, 9});
    CHECK(gchar_from_json(to_json(g)) == g);
    GradedChar t = tilting_char(2, {-4, 8});
    CHECK(gchar_from_json(to_json(t)) == t);
    std::string csv = to_csv(weyl_local_char(2));
    CHECK(csv == "weight,exponent,coefficient\n0,1,1\n2,0,1\n");
}
