#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "copatt/bigint.hpp"
#include "copatt/series.hpp"

using namespace copatt;

namespace {

TruncatedSeries3 one_minus_x() { return TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}}); }

}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("mul telescopes against the geometric series") {
    const Caps caps{12, 0, 0};
    const auto geom = invert_unit(one_minus_x().restricted(caps));
    for (int a = 0; a <= 12; ++a) CHECK(geom.coeff(a, 0, 0) == 1);
    CHECK(mul(one_minus_x().restricted(caps), geom) == TruncatedSeries3::one(caps));
}

TEST_CASE("add and mul basics") {
    const Caps caps{4, 4, 4};
    const auto z = TruncatedSeries3::zero(caps);
    auto f = TruncatedSeries3::zero(caps);
    f.set(1, 2, 0, 7);
    CHECK(add(f, z) == f);

    const auto x = TruncatedSeries3::poly({{1, 0, 0, 1}});
    const auto y = TruncatedSeries3::poly({{0, 1, 0, 1}});
    const auto xy = mul(x, y);
    CHECK(xy.coeff(1, 1, 0) == 1);
    CHECK(xy.caps() == Caps{1, 1, 0});

    CHECK_THROWS_AS(add(TruncatedSeries3::zero({2, 0, 0}), TruncatedSeries3::zero({3, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("invert_unit") {
    // 1/(1-x-xy) = sum_k x^k (1+y)^k, and (1-x)/(1-x-xy) carries C(n,l);
    // both checked against the sum_l (xy)^l/(1-x)^l expansion
    const Caps caps{8, 8, 0};
    const auto f = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 0, 0, -1}, {1, 1, 0, -1}});
    const auto g = invert_unit(f.restricted(caps));
    CHECK(g.coeff(4, 2, 0) == binomial(4, 2));
    CHECK(g.coeff(6, 3, 0) == binomial(6, 3));
    const auto cnl = mul(one_minus_x().restricted(caps), g);
    auto geometric_sum = TruncatedSeries3::zero(caps);  // sum_l (xy)^l (1-x)^-l
    const auto ratio = mul(TruncatedSeries3::poly({{1, 1, 0, 1}}).restricted(caps),
                           invert_unit(one_minus_x().restricted(caps)));
    auto term = TruncatedSeries3::one(caps);
    for (int l = 0; l <= caps.ny; ++l) {
        geometric_sum = add(geometric_sum, term);
        term = mul(term, ratio);
    }
    CHECK(cnl == geometric_sum);
    for (int n = 0; n <= 8; ++n)
        for (int l = 0; l <= 8; ++l)
            CHECK(cnl.coeff(n, l, 0) == (n == 0 && l == 0 ? 1 : binomial(n - 1, l - 1)));
    CHECK(invert_unit(TruncatedSeries3::one(caps)) == TruncatedSeries3::one(caps));
    CHECK_THROWS_AS(invert_unit(TruncatedSeries3::zero(caps)), std::invalid_argument);

    auto minus = TruncatedSeries3::zero(caps);
    minus.set(0, 0, 0, -1);
    minus.set(1, 0, 0, 3);
    const auto inv = invert_unit(minus);
    CHECK(mul(minus, inv) == TruncatedSeries3::one(caps));
    CHECK(mul(inv, minus) == TruncatedSeries3::one(caps));
}

TEST_CASE("expand") {
    // x^2/(1-x)^2: coefficient of x^4 is 3
    const RationalGF r(TruncatedSeries3::poly({{2, 0, 0, 1}}), mul(one_minus_x(), one_minus_x()));
    const auto f = expand(r, {8, 0, 0});
    CHECK(f.coeff(4, 0, 0) == 3);
    CHECK(f.coeff(2, 0, 0) == 1);
    CHECK(f.coeff(1, 0, 0) == 0);

    const RationalGF unit(one_minus_x(), one_minus_x());
    CHECK(expand(unit, {6, 0, 0}) == TruncatedSeries3::one({6, 0, 0}));

    const RationalGF constant(TruncatedSeries3::poly({{0, 0, 0, 1}}),
                              TruncatedSeries3::poly({{0, 0, 0, 1}}));
    CHECK(expand(constant, {5, 0, 0}) == TruncatedSeries3::one({5, 0, 0}));

    CHECK_THROWS_AS(RationalGF(one_minus_x(), TruncatedSeries3::poly({{1, 0, 0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("coeff bounds") {
    const auto f = TruncatedSeries3::zero({3, 3, 3});
    CHECK(f.coeff(2, 2, 2) == 0);
    CHECK_THROWS_AS(f.coeff(4, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(f.coeff(0, 0, 4), std::out_of_range);
}

TEST_CASE("substitution collapses variables") {
    // p = 1 - x y z: set_y1 -> 1 - x z, set_z1 of that -> 1 - x
    const auto p = TruncatedSeries3::poly({{0, 0, 0, 1}, {1, 1, 1, -1}});
    const auto py = set_y1(p);
    CHECK(py.caps().ny == 0);
    CHECK(py.coeff(1, 0, 1) == -1);
    const auto pz = set_z1(py);
    CHECK(pz.coeff(1, 0, 0) == -1);
    CHECK(pz.coeff(0, 0, 0) == 1);
}

TEST_CASE("dump format") {
    auto f = TruncatedSeries3::zero({2, 1, 0});
    f.set(0, 0, 0, 1);
    f.set(2, 1, 0, -5);
    CHECK(dump(f) == "0 0 0 1\n2 1 0 -5\n");
}
