#include <cmath>
#include <complex>
#include <sstream>

#include "checks.hpp"
#include "jct/geom.hpp"

using namespace jct;

namespace {

Curve segment(cplx a, cplx b) {
    Curve c;
    c.pts = {a, b};
    return c;
}

// Polygonal circuit around `center`, `turns` full turns, slightly irregular so
// no vertex lands on a branch cut.
Curve circuit(cplx center, double radius, int turns, int n_per_turn = 24) {
    Curve c;
    int total = std::abs(turns) * n_per_turn;
    double dir = turns >= 0 ? 1.0 : -1.0;
    for (int k = 0; k <= total; ++k) {
        double a = dir * 2 * M_PI * k / n_per_turn + 0.137;
        double r = radius * (1 + 0.05 * std::sin(3.1 * k));
        c.pts.push_back(center + std::polar(k == total ? radius * (1 + 0.05 * std::sin(0.0)) : r, a));
    }
    c.pts.back() = c.pts.front();
    c.closed = true;
    return c;
}

// Independent winding number by angle accumulation.
int winding(const Curve& c, cplx p) {
    double total = 0;
    for (size_t k = 1; k < c.pts.size(); ++k)
        total += std::arg((c.pts[k] - p) / (c.pts[k - 1] - p));
    return (int)std::lround(total / (2 * M_PI));
}

int net_letter(const std::vector<int>& word, int k) {
    int n = 0;
    for (int l : word) {
        if (l == k) ++n;
        if (l == -k) --n;
    }
    return n;
}

} // namespace

TEST_CASE("curve: structural validation") {
    Curve c = segment(0, cplx(1, 1));
    c.validate();
    CHECK(c.diameter() == doctest::Approx(std::sqrt(2.0)));

    Curve dup;
    dup.pts = {cplx(0, 0), cplx(0, 0), cplx(1, 0)};
    CHECK_THROWS_AS(dup.validate(), Error);

    Curve open_marked_closed = segment(0, cplx(1, 0));
    open_marked_closed.closed = true;
    CHECK_THROWS_AS(open_marked_closed.validate(), Error);

    Curve loop;
    loop.pts = {cplx(0, 0), cplx(1, 0), cplx(1, 1), cplx(0, 0)};
    loop.closed = true;
    loop.validate();
}

TEST_CASE("curve: distance to a polyline") {
    Curve c = segment(cplx(0, 0), cplx(2, 0));
    CHECK(c.distance_to(cplx(1, 1)) == doctest::Approx(1.0));
    CHECK(c.distance_to(cplx(3, 0)) == doctest::Approx(1.0));
    CHECK(c.distance_to(cplx(0.7, 0)) == doctest::Approx(0.0));
}

TEST_CASE("curve: concatenation and reversal") {
    Curve a = segment(0, cplx(1, 0));
    Curve b = segment(cplx(1, 0), cplx(1, 1));
    Curve ab = curve_concat(a, b);
    CHECK(ab.pts.size() == 3);
    CHECK(ab.start() == cplx(0, 0));
    CHECK(ab.end() == cplx(1, 1));

    Curve far = segment(cplx(2, 0), cplx(3, 0));
    CHECK(code_of([&] { curve_concat(a, far); }) == Err::EndpointMismatch);

    Curve r = curve_reverse(ab);
    CHECK(r.start() == ab.end());
    CHECK(r.end() == ab.start());
    CHECK(r.pts[1] == ab.pts[1]);
}

TEST_CASE("crossing word: single signed crossings") {
    CutConfig cuts{{cplx(0, 0), cplx(3, 1)}};
    // Left-to-right under the first puncture: one +1 letter.
    CHECK(crossing_word(segment(cplx(-1, -1), cplx(1, -1)), cuts) == std::vector<int>{1});
    CHECK(crossing_word(segment(cplx(1, -1), cplx(-1, -1)), cuts) == std::vector<int>{-1});
    // Passing above the puncture crosses nothing.
    CHECK(crossing_word(segment(cplx(-1, 1), cplx(1, 1)), cuts).empty());
    // Under the second puncture only.
    CHECK(crossing_word(segment(cplx(2, 0), cplx(4, 0)), cuts) == std::vector<int>{2});
}

TEST_CASE("crossing word: vertex on a cut is degenerate") {
    CutConfig cuts{{cplx(0, 0)}};
    Curve c;
    c.pts = {cplx(-1, -1), cplx(0, -1), cplx(1, -1)};
    CHECK(code_of([&] { crossing_word(c, cuts); }) == Err::DegenerateCrossing);
}

TEST_CASE("crossing word: reduced words match winding numbers") {
    CutConfig cuts{{cplx(-1, 0), cplx(2, 1)}};
    std::uint64_t st = 7;
    for (int trial = 0; trial < 20; ++trial) {
        int which = (int)(test_rng(st) % 2);
        int turns = 1 + (int)(test_rng(st) % 3);
        if (test_rng(st) % 2) turns = -turns;
        Curve c = circuit(cuts.punctures[which], 0.4 + 0.01 * trial, turns);
        std::vector<int> w = reduce_word(crossing_word(c, cuts));
        for (int k = 1; k <= 2; ++k)
            CHECK(net_letter(w, k) == winding(c, cuts.punctures[k - 1]));
    }
    // A loop around both punctures winds once around each.
    Curve big = circuit(cplx(0.5, 0.5), 3.0, 1, 48);
    std::vector<int> w = reduce_word(crossing_word(big, cuts));
    CHECK(net_letter(w, 1) == 1);
    CHECK(net_letter(w, 2) == 1);
}

TEST_CASE("reduce word: cancellation") {
    CHECK(reduce_word({1, -1}).empty());
    CHECK(reduce_word({1, 2, -2, -1}).empty());
    CHECK(reduce_word({1, 2, -2, 1}) == std::vector<int>{1, 1});
    CHECK(reduce_word({-2, 2, 1}) == std::vector<int>{1});
    CHECK(reduce_word({}).empty());
}

TEST_CASE("curve: text round trip is bit exact") {
    Curve c;
    c.pts = {cplx(0.1, -0.333333333333333314), cplx(1e-17, 2.5),
             cplx(-3.0000000000000004, 1.0 / 3.0)};
    std::ostringstream os;
    write_curve(os, c);
    std::istringstream is(os.str());
    Curve back = read_curve(is);
    REQUIRE(back.pts.size() == c.pts.size());
    CHECK(back.closed == c.closed);
    for (size_t k = 0; k < c.pts.size(); ++k) {
        CHECK(back.pts[k].real() == c.pts[k].real());
        CHECK(back.pts[k].imag() == c.pts[k].imag());
    }
}
