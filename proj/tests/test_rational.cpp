#include <cstdint>

#include "checks.hpp"
#include "jct/rational.hpp"

using namespace jct;

namespace {
Rat rand_rat(std::uint64_t& st) {
    long long n = (long long)(test_rng(st) % 41) - 20;
    long long d = 1 + (long long)(test_rng(st) % 9);
    return Rat(n, d);
}
GRat rand_grat(std::uint64_t& st) { return GRat(rand_rat(st), rand_rat(st)); }
} // namespace

TEST_CASE("rational: normalization and signs") {
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(6, 4).n == 3);
    CHECK(Rat(6, 4).d == 2);
    CHECK(code_of([] { Rat(1, 0); }) == Err::NumericalFailure);
}

TEST_CASE("rational: field laws on random values") {
    std::uint64_t st = 1;
    for (int k = 0; k < 200; ++k) {
        Rat a = rand_rat(st), b = rand_rat(st), c = rand_rat(st);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rat(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational: order, floor, abs") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(-1, 3));
    CHECK(Rat(3, 2).floor() == 1);
    CHECK(Rat(-3, 2).floor() == -2);
    CHECK(Rat(-4, 2).floor() == -2);
    CHECK(Rat(-3, 2).abs() == Rat(3, 2));
    CHECK(Rat(7, 2) >= Rat(7, 2));
}

TEST_CASE("rational: overflow is an error, not a wrap") {
    Rat big(INT64_MAX, 1);
    CHECK(code_of([&] { (void)(big + big); }) == Err::NumericalFailure);
    CHECK(code_of([&] { (void)(big * Rat(2)); }) == Err::NumericalFailure);
}

TEST_CASE("gaussian rational: ring laws and division") {
    std::uint64_t st = 2;
    for (int k = 0; k < 200; ++k) {
        GRat a = rand_grat(st), b = rand_grat(st), c = rand_grat(st);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * a.conj() == GRat(a.norm()));
    }
    CHECK(code_of([] { (void)(GRat(1) / GRat(0)); }) == Err::NumericalFailure);
}

TEST_CASE("gaussian rational: quarter turns") {
    CHECK(ipow(0) == GRat(1));
    CHECK(ipow(1) == GRat(0, 1));
    CHECK(ipow(2) == GRat(-1));
    CHECK(ipow(3) == GRat(0, -1));
    CHECK(ipow(5) == ipow(1));
    CHECK(ipow(-1) == ipow(3));
    std::uint64_t st = 3;
    for (int k = 0; k < 50; ++k) {
        GRat z = rand_grat(st);
        CHECK(times_i(z) == GRat(0, 1) * z);
        CHECK(times_i(times_i(times_i(times_i(z)))) == z);
    }
}

TEST_CASE("gaussian rational: integers and text") {
    CHECK(GRat(3, -4).is_gaussian_integer());
    CHECK(!GRat(Rat(1, 2), Rat(0)).is_gaussian_integer());
    CHECK(Rat(3, 2).str() == "3/2");
    CHECK(Rat(-7).str() == "-7");
    CHECK(GRat(Rat(1, 2), Rat(0)).str() == "1/2");
    CHECK(GRat(0, 1).str() == "i");
    CHECK(GRat(Rat(0), Rat(-1)).str() == "-i");
    CHECK(GRat(Rat(-1), Rat(-1, 2)).str() == "-1-1/2i");
    CHECK(GRat(Rat(1), Rat(1, 2)).str() == "1+1/2i");
}
