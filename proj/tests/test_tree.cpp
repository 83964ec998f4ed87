#include <cmath>
#include <complex>

#include "checks.hpp"
#include "jct/tree.hpp"
#include "jct/words.hpp"

using namespace jct;

namespace {
const double kSqrt3 = std::sqrt(3.0);

cplx pi_at(const CodingTree& t, const std::string& word, double eps = 1e-10) {
    return pi_eval(t, parse_word(word, t.r.dsym()), eps, 64).value;
}
} // namespace

TEST_CASE("words: parse and print") {
    Word w = parse_word("1121", 2);
    CHECK(w.pre == std::vector<int>{1, 1, 2, 1});
    CHECK(w.per.empty());
    CHECK(!w.infinite());

    Word p = parse_word("121^", 2);
    CHECK(p.pre.empty());
    CHECK(p.per == std::vector<int>{1, 2, 1});
    CHECK(p.at(0) == 1);
    CHECK(p.at(5) == 1);

    Word q = parse_word("1.21^", 2);
    CHECK(q.pre == std::vector<int>{1});
    CHECK(q.per == std::vector<int>{2, 1});
    CHECK(q.str() == "1.21^");

    CHECK_THROWS_AS(parse_word("13", 2), Error);
    CHECK_THROWS_AS(parse_word("", 2), Error);
    CHECK_THROWS_AS(parse_word("1^2", 2), Error);
    CHECK_THROWS_AS((void)parse_word("12", 2).at(5), Error);
}

TEST_CASE("tree: quadcantor endpoints down to level two") {
    MapModel m = make_map("quadcantor");
    Radial r;
    r.base = 0;
    Curve l1, l2;
    l1.pts = {cplx(0, 0), cplx(kSqrt3, 0)};
    l2.pts = {cplx(0, 0), cplx(-kSqrt3, 0)};
    r.legs = {l1, l2};
    r.validate(m);
    CHECK(r.proper());

    CodingTree t = extend_tree(m, r, 6);
    REQUIRE(t.levels.size() == 7);
    CHECK(t.levels[0].size() == 1);
    CHECK(t.levels[1].size() == 2);
    CHECK(t.levels[6].size() == 64);
    CHECK(std::abs(t.levels[1][0].x - cplx(kSqrt3, 0)) < 1e-12);
    CHECK(std::abs(t.levels[1][1].x - cplx(-kSqrt3, 0)) < 1e-12);
    // x_11 = sqrt(3 + sqrt 3), x_12 = sqrt(3 - sqrt 3): positive roots, since
    // lifts of legs from +sqrt(3) stay in the right half plane.
    CHECK(std::abs(t.levels[2][t.index_of({1, 1})].x - std::sqrt(3 + kSqrt3)) < 1e-9);
    CHECK(std::abs(t.levels[2][t.index_of({1, 2})].x - std::sqrt(3 - kSqrt3)) < 1e-9);
    CHECK(t.contraction > 1.0);
    CHECK(t.tail_constant() > 0.0);

    // Shift equivariance: f(x_w) = x_{w2..wk} for every stored node.
    for (size_t k = 2; k < t.levels.size(); ++k)
        for (size_t idx = 0; idx < t.levels[k].size(); ++idx) {
            cplx fx = map_eval(m, t.levels[k][idx].x);
            cplx parent = t.levels[k - 1][idx % t.levels[k - 1].size()].x;
            CHECK(std::abs(fx - parent) < kShiftTol);
        }
}

TEST_CASE("tree: coding map values on the quadcantor radial") {
    MapModel m = make_map("quadcantor");
    Radial r;
    r.base = 0;
    Curve l1, l2;
    l1.pts = {cplx(0, 0), cplx(kSqrt3, 0)};
    l2.pts = {cplx(0, 0), cplx(-kSqrt3, 0)};
    r.legs = {l1, l2};
    CodingTree t = extend_tree(m, r, 6);

    // Fixed point of z^2 - 3 on the positive axis.
    cplx fix = pi_at(t, "1^");
    CHECK(std::abs(fix - cplx((1 + std::sqrt(13.0)) / 2, 0)) < 1e-9);
    // The period-two cycle 1 -> -2 -> 1.
    CHECK(std::abs(pi_at(t, "12^") - cplx(1, 0)) < 1e-9);
    CHECK(std::abs(pi_at(t, "21^") - cplx(-2, 0)) < 1e-9);
    // pi is f-equivariant: f(pi(w)) = pi(shift w).
    cplx v = pi_at(t, "2.12^");
    CHECK(std::abs(map_eval(m, v) - pi_at(t, "12^")) < 1e-8);
    cplx u = pi_at(t, "112^");
    CHECK(std::abs(map_eval(m, u) - pi_at(t, "121^")) < 1e-8);
    PiResult pr = pi_eval(t, parse_word("1^", 2), 1e-10, 64);
    CHECK(pr.bound <= 1e-10);
    CHECK(pr.depth_used <= 64);
    CHECK(code_of([&] { pi_eval(t, parse_word("1^", 2), 1e-30, 10); }) ==
          Err::AccuracyUnreachable);
    CHECK_THROWS_AS(pi_eval(t, parse_word("11", 2), 1e-8, 64), Error);
}

TEST_CASE("tree: power arc radial realizes circle codings") {
    MapModel m = make_map("power:2");
    Radial r = power_arc_radial(m, {0, 1});
    r.validate(m);
    CHECK(r.proper());
    CHECK(std::abs(r.base - cplx(1, 0)) < 1e-12);

    CodingTree t = extend_tree(m, r, 6);
    CHECK(std::abs(pi_at(t, "1^") - cplx(1, 0)) < 1e-9);
    CHECK(std::abs(pi_at(t, "2^") - cplx(1, 0)) < 1e-9);
    CHECK(std::abs(pi_at(t, "1.2^") - cplx(-1, 0)) < 1e-9);
    CHECK(std::abs(pi_at(t, "2.1^") - cplx(-1, 0)) < 1e-9);
    // (12)-periodic: binary angle 0.0101... = 1/3 of a clockwise turn.
    CHECK(std::abs(pi_at(t, "12^") - std::polar(1.0, -2 * M_PI / 3)) < 1e-9);

    MapModel m3 = make_map("power:3");
    CodingTree t3 = extend_tree(m3, power_arc_radial(m3, {0, 1, 2}), 4);
    CHECK(std::abs(pi_at(t3, "3^") - cplx(1, 0)) < 1e-9);

    CHECK(code_of([&] { power_arc_radial(make_map("cheb:2"), {0, 1}); }) ==
          Err::FamilyMismatch);
    CHECK(code_of([&] { power_arc_radial(m, {0, 1, 2}); }) == Err::InvalidClassEntry);
}

TEST_CASE("tree: image probe counts preimage collisions") {
    MapModel m = make_map("power:2");
    // Both digits zero: the two legs coincide, the tree collapses to single
    // points at every level.
    Radial same = power_arc_radial(m, {0, 0});
    CHECK(!same.proper());
    CodingTree ts = extend_tree(m, same, 4);
    for (int level : {1, 2, 3}) {
        auto probe = image_probe(ts, level);
        REQUIRE(probe.size() == 1);
        CHECK(probe[0].second == 1 << level);
    }
    // Digits (0,2): legs end at the same point but differ upstairs, so the
    // level sets stay full.
    CodingTree tw = extend_tree(m, power_arc_radial(m, {0, 2}), 4);
    for (int level : {1, 2, 3})
        CHECK(image_probe(tw, level).size() == (size_t)(1 << level));
}
