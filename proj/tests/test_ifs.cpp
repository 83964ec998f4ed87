#include <cmath>
#include <cstdio>
#include <fstream>

#include "checks.hpp"
#include "jct/codspace.hpp"
#include "jct/ifs.hpp"

using namespace jct;

namespace {
RadialClass power_class(int degree, std::vector<long long> n) {
    RadialClass c;
    c.fam = Family::Power;
    c.degree = degree;
    c.n = std::move(n);
    return c;
}

RadialClass cheb_class(int e1, long long n1, int e2, long long n2) {
    RadialClass c;
    c.fam = Family::Chebyshev;
    c.degree = 2;
    c.eps = {e1, e2};
    c.n = {n1, n2};
    return c;
}

long set_span(const TileRaster& r, long& mn, long& mx) {
    long count = 0;
    mn = r.ix0 + r.w;
    mx = r.ix0 - 1;
    for (long ix = r.ix0; ix < r.ix0 + r.w; ++ix)
        if (r.outer_at(ix, 0)) {
            mn = std::min(mn, ix);
            mx = std::max(mx, ix);
            ++count;
        }
    return count;
}
} // namespace

TEST_CASE("lift: exact coefficients per family") {
    LiftedIFS p = lift_radial_class(power_class(3, {0, 1, 5}));
    REQUIRE(p.maps.size() == 3);
    CHECK(p.maps[1].a == GRat(Rat(1, 3)));
    CHECK(p.maps[2].b == GRat(Rat(5, 3)));
    CHECK(!p.planar);

    LiftedIFS c = lift_radial_class(cheb_class(+1, 0, -1, 1));
    CHECK(c.maps[0].a == GRat(Rat(1, 2)));
    CHECK(c.maps[1].a == GRat(Rat(-1, 2)));
    CHECK(c.maps[1].b == GRat(1));

    LiftedIFS l = lift_radial_class(parse_class("lattes", "i/2,3/2+i"));
    CHECK(l.planar);
    // (1-i)/2 * i = (1+i)/2
    CHECK(l.maps[0].a == GRat(Rat(1, 2), Rat(1, 2)));
    CHECK(l.maps[1].a == GRat(Rat(1, 2), Rat(-1, 2)));
    CHECK(l.maps[1].b == GRat(1, 1));

    RadialClass qc;
    qc.fam = Family::QuadCantor;
    qc.degree = 2;
    CHECK(code_of([&] { lift_radial_class(qc); }) == Err::UnsupportedFamily);
}

TEST_CASE("closed form: power digit sets") {
    CHECK(closed_form_measure(power_class(2, {0, 3})).measure == Rat(3));
    CHECK(closed_form_measure(power_class(2, {-1, 2})).measure == Rat(3));
    ClosedForm iv = closed_form_measure(power_class(2, {0, 2}));
    CHECK(iv.has_interval);
    CHECK(iv.lo == Rat(0));
    CHECK(iv.hi == Rat(2));

    // Degree three: measure g = gcd of the offsets when the digit sum fits,
    // zero otherwise; an interval only for arithmetic progressions.
    CHECK(closed_form_measure(power_class(3, {0, 1, 2})).measure == Rat(1));
    CHECK(closed_form_measure(power_class(3, {0, 1, 2})).has_interval);
    CHECK(closed_form_measure(power_class(3, {0, 1, 5})).measure == Rat(1));
    CHECK(!closed_form_measure(power_class(3, {0, 1, 5})).has_interval);
    CHECK(closed_form_measure(power_class(3, {0, 1, 3})).measure == Rat(0));
    CHECK(closed_form_measure(power_class(3, {0, 2, 4})).measure == Rat(2));
    CHECK(closed_form_measure(power_class(3, {0, 3, 6})).measure == Rat(3));
}

TEST_CASE("closed form: chebyshev min/max cases") {
    ClosedForm bp = closed_form_measure(cheb_class(+1, 0, +1, 3));
    CHECK(bp.lo == Rat(0));
    CHECK(bp.hi == Rat(6));
    ClosedForm bm = closed_form_measure(cheb_class(-1, 0, -1, 1));
    CHECK(bm.lo == Rat(-2, 3));
    CHECK(bm.hi == Rat(4, 3));
    ClosedForm mx = closed_form_measure(cheb_class(+1, 0, -1, 1));
    CHECK(mx.lo == Rat(0));
    CHECK(mx.hi == Rat(1));
    CHECK(mx.measure == Rat(1));
}

TEST_CASE("closed form: lattes rotation table") {
    CHECK(closed_form_measure(parse_class("lattes", "1/2,3/2+i")).measure == Rat(4));
    CHECK(closed_form_measure(parse_class("lattes", "i/2,3/2+i")).measure == Rat(1));
    CHECK(closed_form_measure(parse_class("lattes", "1+i/2,3/2")).measure == Rat(1));
    CHECK(closed_form_measure(parse_class("lattes", "1/2,1/2+i")).measure == Rat(2));
}

TEST_CASE("raster: interval tiles are pixel exact") {
    LiftedIFS s = lift_radial_class(power_class(2, {0, 1}));
    TileRaster r = attractor_raster(s, 64);
    CHECK(r.converged);
    long mn, mx;
    long count = set_span(r, mn, mx);
    CHECK(count == mx - mn + 1); // no holes
    CHECK(mn >= -1);
    CHECK(mx <= 64);
    CHECK(count >= 64);
    CHECK(count <= 66);

    // Kenyon-style full-interval digit set at degree three.
    TileRaster k = attractor_raster(lift_radial_class(power_class(3, {0, 1, 2})), 128);
    long kmn, kmx;
    CHECK(set_span(k, kmn, kmx) == 128);
    CHECK(kmn == 0);
    CHECK(kmx == 127);
}

TEST_CASE("raster: chebyshev endpoints track the closed form") {
    for (auto c : {cheb_class(-1, 1, -1, 3), cheb_class(+1, 2, -1, -1)}) {
        ClosedForm cf = closed_form_measure(c);
        TileRaster r = attractor_raster(lift_radial_class(c), 128);
        long mn, mx;
        set_span(r, mn, mx);
        CHECK(std::fabs((double)mn - cf.lo.to_double() * 128) <= 1.0);
        CHECK(std::fabs((double)(mx + 1) - cf.hi.to_double() * 128) <= 1.0);
    }
}

TEST_CASE("raster: one more sweep fixes a converged bitmap") {
    LiftedIFS s = lift_radial_class(power_class(2, {0, 3}));
    TileRaster r = attractor_raster(s, 128);
    REQUIRE(r.converged);
    TileRaster r2 = raster_step(s, r);
    CHECK(r2.converged);
    CHECK(r2.outer == r.outer);
    CHECK(r2.inner == r.inner);
}

TEST_CASE("raster: sandwich brackets the true measure") {
    for (auto c : {power_class(2, {0, 2}), power_class(3, {0, 1, 5}),
                   cheb_class(-1, 0, -1, 1)}) {
        double truth = closed_form_measure(c).measure.to_double();
        MeasureReport mr = measure_estimate(lift_radial_class(c), 256);
        CHECK(mr.lower <= truth + 1e-12);
        CHECK(truth <= mr.upper + 1e-12);
        CHECK(mr.lower2 <= truth + 1e-12);
        CHECK(truth <= mr.upper2 + 1e-12);
        CHECK(mr.value == mr.upper);
    }
    // Richardson on an exact interval cancels the collar completely.
    MeasureReport mr = measure_estimate(lift_radial_class(power_class(2, {0, 3})), 128);
    CHECK(mr.richardson == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("multiplicity: closed forms decide") {
    MultReport m3 = multiplicity_estimate(power_class(2, {0, 3}), 128);
    CHECK(m3.n == 3);
    CHECK(m3.gap == 0.0);
    MultReport mc = multiplicity_estimate(cheb_class(+1, 0, -1, 1), 128);
    CHECK(mc.n == 1);
    MultReport mz = multiplicity_estimate(power_class(3, {0, 1, 3}), 128);
    CHECK(mz.n == 0);
    CHECK(mz.gap == 0.0);
}

TEST_CASE("deck elements: exact group operations") {
    std::uint64_t st = 5;
    for (int k = 0; k < 60; ++k) {
        DeckEl e, f;
        e.rot = (int)(test_rng(st) % 4);
        f.rot = (int)(test_rng(st) % 4);
        e.sign = test_rng(st) % 2 ? 1 : -1;
        f.sign = test_rng(st) % 2 ? 1 : -1;
        e.t = GRat((long long)(test_rng(st) % 9) - 4, (long long)(test_rng(st) % 9) - 4);
        f.t = GRat((long long)(test_rng(st) % 9) - 4, (long long)(test_rng(st) % 9) - 4);
        GRat z((long long)(test_rng(st) % 9) - 4, (long long)(test_rng(st) % 9) - 4);
        CHECK(deck_apply(deck_compose(e, f), z) == deck_apply(e, deck_apply(f, z)));
        DeckEl id = deck_compose(e, deck_inverse(e));
        CHECK(deck_apply(id, z) == z);
    }
    DeckEl t;
    t.t = GRat(1);
    CHECK(t.str(Family::Power) == "z+1");
    DeckEl rot;
    rot.rot = 1;
    rot.t = GRat(0, 2);
    CHECK(rot.str(Family::Lattes) == "i*z+2i");
    DeckEl neg;
    neg.sign = -1;
    CHECK(neg.str(Family::Chebyshev) == "-z");
}

TEST_CASE("tiling: translates of an interval tile the window") {
    LiftedIFS s = lift_radial_class(power_class(2, {0, 1}));
    TilingReport t = tiling_check(s, 0, 0, 4, 1, 128);
    CHECK(t.coverage >= 0.999);
    CHECK(t.overlap <= 0.005);
    CHECK(t.tiles.size() == 4);

    LiftedIFS z = lift_radial_class(power_class(3, {0, 1, 3}));
    CHECK(code_of([&] { tiling_check(z, 0, 0, 2, 1, 128); }) == Err::ZeroMeasureTile);
}

TEST_CASE("growth: exact composition counts") {
    GrowthReport g = growth_rate_exact(lift_radial_class(power_class(2, {0, 1})), 8);
    REQUIRE(g.counts.size() == 8);
    for (int k = 1; k <= 8; ++k) CHECK(g.counts[k - 1] == (1LL << k));
    CHECK(g.surjective_evidence);
    CHECK(g.degenerate_at == 0);

    GrowthReport d = growth_rate_exact(lift_radial_class(power_class(2, {0, 0})), 6);
    for (long long v : d.counts) CHECK(v == 1);
    CHECK(d.degenerate_at == 1);
    CHECK(!d.surjective_evidence);
}

TEST_CASE("pgm: header and payload") {
    LiftedIFS s = lift_radial_class(power_class(2, {0, 1}));
    TileRaster r = attractor_raster(s, 32);
    std::string path = "test_tile_tmp.pgm";
    write_pgm(r, s, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string magic;
    in >> magic;
    CHECK(magic == "P5");
    std::string rest((std::istreambuf_iterator<char>(in)), {});
    CHECK(rest.find("power:2") != std::string::npos);
    CHECK((long)rest.size() > r.w * r.h); // header plus one byte per pixel
    in.close();
    std::remove(path.c_str());
}
