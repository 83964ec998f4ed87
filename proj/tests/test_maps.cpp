#include <cmath>
#include <complex>

#include "checks.hpp"
#include "jct/maps.hpp"

using namespace jct;

namespace {
cplx rand_pt(std::uint64_t& st, double span = 3.0) {
    auto u = [&] { return span * (2.0 * (double)(test_rng(st) % 10000) / 10000.0 - 1.0); };
    double re = u(), im = u();
    return {re, im};
}

Curve segment(cplx a, cplx b) {
    Curve c;
    c.pts = {a, b};
    return c;
}
} // namespace

TEST_CASE("maps: family tokens") {
    Family f;
    int d;
    parse_family("power:5", f, d);
    CHECK(f == Family::Power);
    CHECK(d == 5);
    parse_family("cheb:2", f, d);
    CHECK(f == Family::Chebyshev);
    parse_family("lattes", f, d);
    CHECK(f == Family::Lattes);
    parse_family("quadcantor", f, d);
    CHECK(f == Family::QuadCantor);
    CHECK(code_of([&] { parse_family("power:1", f, d); }) == Err::UnsupportedFamily);
    CHECK(code_of([&] { parse_family("henon", f, d); }) == Err::UnsupportedFamily);
    CHECK(family_token(Family::Power, 3) == "power:3");
    CHECK(family_token(Family::Lattes, 2) == "lattes");
}

TEST_CASE("maps: evaluation per family") {
    std::uint64_t st = 11;
    MapModel pw = make_map("power:3");
    MapModel ch = make_map("cheb:2");
    MapModel la = make_map("lattes");
    MapModel qc = make_map("quadcantor");
    for (int k = 0; k < 40; ++k) {
        cplx z = rand_pt(st);
        CHECK(std::abs(map_eval(pw, z) - z * z * z) < 1e-12);
        CHECK(std::abs(map_eval(ch, z) - (z * z - 2.0)) < 1e-12);
        CHECK(std::abs(map_eval(qc, z) - (z * z - 3.0)) < 1e-12);
        if (std::abs(z) > 1e-3) {
            cplx w = -(z - 1.0) * (z - 1.0) / (4.0 * z);
            CHECK(std::abs(map_eval(la, z) - w) < 1e-10);
        }
    }
    CHECK(code_of([&] { map_eval(la, cplx(0, 0)); }) == Err::PoleAtInput);
}

TEST_CASE("maps: postcritical data of the catalog") {
    MapModel pw = make_map("power:2");
    REQUIRE(pw.post.size() == 1);
    CHECK(std::abs(pw.post[0]) < 1e-12);
    CHECK(pw.post_inf);

    MapModel ch = make_map("cheb:2");
    REQUIRE(ch.post.size() == 2);
    CHECK(std::abs(ch.post[0] * ch.post[1] + 4.0) < 1e-9); // {2, -2}

    MapModel la = make_map("lattes");
    REQUIRE(la.post.size() == 2);

    MapModel qc = make_map("quadcantor");
    CHECK(qc.post.size() >= 2); // -3 and 6 at least
    bool has3 = false, has6 = false;
    for (cplx p : qc.post) {
        has3 = has3 || std::abs(p + 3.0) < 1e-9;
        has6 = has6 || std::abs(p - 6.0) < 1e-9;
    }
    CHECK(has3);
    CHECK(has6);
}

TEST_CASE("maps: preimages are polished roots") {
    std::uint64_t st = 13;
    for (const char* tok : {"power:2", "power:4", "cheb:2", "lattes", "quadcantor"}) {
        MapModel m = make_map(tok);
        for (int k = 0; k < 12; ++k) {
            cplx w = rand_pt(st, 2.0);
            if (m.fam == Family::Lattes && std::abs(w) < 0.05) continue;
            std::vector<cplx> pre = map_preimages(m, w);
            CHECK((int)pre.size() == m.degree);
            for (cplx z : pre)
                CHECK(std::abs(map_eval(m, z) - w) <= 1e-10 * (1.0 + std::abs(w)));
        }
    }
}

TEST_CASE("maps: orbit certificates cover every critical point") {
    for (const char* tok : {"power:2", "cheb:2", "lattes", "quadcantor"}) {
        MapModel m = make_map(tok);
        CHECK(!m.certs.empty());
        for (const OrbitCertificate& c : m.certs) {
            if (c.to_infinity) continue;
            CHECK(c.period >= 1);
            CHECK(c.residual <= 1e-10);
        }
    }
}

TEST_CASE("lift: lifted curves project back onto the input") {
    MapModel m = make_map("power:2");
    Curve l = segment(cplx(1, 0), cplx(0, 1)); // stays away from the critical value 0
    for (cplx x0 : map_preimages(m, l.start())) {
        Curve up = lift_curve(m, l, x0);
        CHECK(up.start() == x0);
        CHECK(std::abs(map_eval(m, up.end()) - l.end()) < 1e-9);
        for (cplx z : up.pts) CHECK(l.distance_to(map_eval(m, z)) < 1e-9);
    }
}

TEST_CASE("lift: guard rails") {
    MapModel m = make_map("power:2");
    // Through the critical value at 0.
    Curve bad = segment(cplx(1, 0), cplx(-1, 0));
    CHECK(code_of([&] { lift_curve(m, bad, cplx(1, 0)); }) ==
          Err::CriticalValueProximity);
    // Start that is no preimage of the start of the curve.
    Curve l = segment(cplx(1, 0), cplx(2, 0));
    CHECK(code_of([&] { lift_curve(m, l, cplx(0.5, 0)); }) == Err::EndpointMismatch);
    // Running past the working window.
    Curve out = segment(cplx(1, 0), cplx(99000, 0));
    CHECK(code_of([&] { lift_curve(m, out, cplx(1, 0)); }) == Err::WindowEscape);
}
