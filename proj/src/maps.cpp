#include "jct/maps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace jct {

std::string family_token(Family f, int degree) {
    switch (f) {
    case Family::Power:      return "power:" + std::to_string(degree);
    case Family::Chebyshev:  return "cheb:" + std::to_string(degree);
    case Family::Lattes:     return "lattes";
    case Family::QuadCantor: return "quadcantor";
    }
    return "?";
}

void parse_family(const std::string& tok, Family& fam, int& degree) {
    auto deg_of = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            fail(Err::UnsupportedFamily, "bad degree in family token '" + tok + "'");
        int d = std::stoi(s);
        if (d < 2 || d > 16)
            fail(Err::UnsupportedFamily, "degree out of range in '" + tok + "'");
        return d;
    };
    if (tok.rfind("power:", 0) == 0) {
        fam = Family::Power;
        degree = deg_of(tok.substr(6));
    } else if (tok.rfind("cheb:", 0) == 0) {
        fam = Family::Chebyshev;
        degree = deg_of(tok.substr(5));
    } else if (tok == "lattes") {
        fam = Family::Lattes;
        degree = 2;
    } else if (tok == "quadcantor") {
        fam = Family::QuadCantor;
        degree = 2;
    } else {
        fail(Err::UnsupportedFamily, "unknown family token '" + tok + "'");
    }
}

static cplx eval_raw(Family fam, int d, cplx z) {
    switch (fam) {
    case Family::Power: {
        cplx r = 1;
        for (int i = 0; i < d; ++i) r *= z;
        return r;
    }
    case Family::Chebyshev: {
        // 2*T_d(z/2) by the Chebyshev recurrence.
        cplx x = z / 2.0;
        cplx tm = 1.0, t = x;
        for (int k = 1; k < d; ++k) {
            cplx tn = 2.0 * x * t - tm;
            tm = t;
            t = tn;
        }
        return 2.0 * t;
    }
    case Family::Lattes: {
        if (z == cplx(0, 0)) fail(Err::PoleAtInput, "lattes map has a pole at 0");
        cplx u = z - 1.0;
        return -(u * u) / (4.0 * z);
    }
    case Family::QuadCantor:
        return z * z - 3.0;
    }
    fail(Err::UnsupportedFamily, "eval");
}

static cplx deriv_raw(Family fam, int d, cplx z) {
    switch (fam) {
    case Family::Power: {
        cplx r = (double)d;
        for (int i = 0; i < d - 1; ++i) r *= z;
        return r;
    }
    case Family::Chebyshev: {
        // d/dz [2 T_d(z/2)] = d * U_{d-1}(z/2).
        cplx x = z / 2.0;
        cplx um = 1.0, u = 2.0 * x;
        if (d == 1) return cplx(1, 0);
        for (int k = 2; k < d; ++k) {
            cplx un = 2.0 * x * u - um;
            um = u;
            u = un;
        }
        return (double)d * u;
    }
    case Family::Lattes: {
        // f' = -(z-1)(z+1) / (4 z^2)
        return -(z - 1.0) * (z + 1.0) / (4.0 * z * z);
    }
    case Family::QuadCantor:
        return 2.0 * z;
    }
    fail(Err::UnsupportedFamily, "deriv");
}

cplx map_eval(const MapModel& m, cplx z) { return eval_raw(m.fam, m.degree, z); }

static const double kPi = 3.14159265358979323846;

std::vector<cplx> map_preimages(const MapModel& m, cplx w) {
    std::vector<cplx> roots;
    switch (m.fam) {
    case Family::Power: {
        if (w == cplx(0, 0)) return std::vector<cplx>(m.degree, cplx(0, 0));
        double r = std::pow(std::abs(w), 1.0 / m.degree);
        double th = std::arg(w) / m.degree;
        for (int k = 0; k < m.degree; ++k) {
            double a = th + 2 * kPi * k / m.degree;
            roots.push_back(std::polar(r, a));
        }
        break;
    }
    case Family::Chebyshev: {
        // 2 T_d(z/2) = w  <=>  z = 2 cos((acos(w/2) + 2 pi k)/d).
        cplx A = std::acos(w / 2.0);
        for (int k = 0; k < m.degree; ++k)
            roots.push_back(2.0 * std::cos((A + 2.0 * kPi * k) / (double)m.degree));
        break;
    }
    case Family::Lattes: {
        // z^2 + (4w - 2) z + 1 = 0; the two roots multiply to 1.
        cplx b = 4.0 * w - 2.0;
        cplx s = std::sqrt(b * b - 4.0);
        if (std::real(std::conj(b) * s) < 0) s = -s; // |b + s| maximal
        cplx q = -(b + s) / 2.0;
        if (q == cplx(0, 0)) { // b = +-2, double root
            roots = {-b / 2.0, -b / 2.0};
        } else {
            roots = {q, 1.0 / q};
        }
        break;
    }
    case Family::QuadCantor: {
        cplx s = std::sqrt(w + 3.0);
        roots = {s, -s};
        break;
    }
    }
    // Newton polish; skipped near multiple roots where the formula value is
    // already the accurate one.
    for (cplx& z : roots) {
        for (int it = 0; it < 2; ++it) {
            cplx dz = deriv_raw(m.fam, m.degree, z);
            if (std::abs(dz) < 1e-8) break;
            z -= (eval_raw(m.fam, m.degree, z) - w) / dz;
        }
        if (std::abs(eval_raw(m.fam, m.degree, z) - w) > 1e-10 * (1.0 + std::abs(w)))
            fail(Err::NumericalFailure, "preimage residual too large");
    }
    return roots;
}

static PointE step_point(const MapModel& m, PointE p) {
    if (p.inf) {
        // All four families fix infinity.
        return PointE::infinity();
    }
    if (m.fam == Family::Lattes && p.z == cplx(0, 0)) return PointE::infinity();
    cplx v = eval_raw(m.fam, m.degree, p.z);
    if (std::abs(v) > m.window_radius) return PointE::at(v); // caller watches escape
    return PointE::at(v);
}

static OrbitCertificate certify_orbit(const MapModel& m, PointE start) {
    OrbitCertificate c;
    c.start = start;
    c.orbit.push_back(start);
    PointE p = start;
    for (int n = 1; n <= 64; ++n) {
        p = step_point(m, p);
        c.orbit.push_back(p);
        if (p.inf) {
            // Infinity is fixed for every family here; certify immediately.
            c.preperiod = n;
            c.period = 1;
            c.to_infinity = true;
            c.orbit.push_back(PointE::infinity());
            return c;
        }
        if (std::abs(p.z) > m.window_radius) {
            // Escaped the window and (for these families) grows monotonically:
            // attracted to infinity.
            c.preperiod = n;
            c.period = 1;
            c.to_infinity = true;
            return c;
        }
        for (int k = 0; k < n; ++k) {
            if (!c.orbit[k].inf && std::abs(c.orbit[k].z - p.z) <= 1e-10) {
                c.preperiod = k;
                c.period = n - k;
                c.residual = std::abs(c.orbit[k].z - p.z);
                return c;
            }
        }
    }
    fail(Err::NoConvergence, "critical orbit not resolved within 64 steps");
}

MapModel make_map(Family fam, int degree) {
    MapModel m;
    m.fam = fam;
    m.degree = degree;
    switch (fam) {
    case Family::Power:
        m.crit = {cplx(0, 0)};
        m.crit_inf = true;
        m.crit_val = {cplx(0, 0)};
        m.post = {cplx(0, 0)};
        m.post_inf = true;
        m.attracting = {cplx(0, 0)};
        m.attracting_inf = true;
        break;
    case Family::Chebyshev: {
        for (int k = 1; k < degree; ++k)
            m.crit.push_back(2.0 * std::cos(kPi * k / degree));
        m.crit_inf = true;
        // f(2 cos(k pi / d)) = 2 cos(k pi) = +-2; only values actually taken
        // are critical values.
        bool has2 = false, hasm2 = false;
        for (int k = 1; k < degree; ++k)
            ((k % 2) ? hasm2 : has2) = true;
        if (hasm2) m.crit_val.push_back(cplx(-2, 0));
        if (has2) m.crit_val.push_back(cplx(2, 0));
        m.post = {cplx(-2, 0), cplx(2, 0)};
        m.post_inf = true;
        m.attracting_inf = true;
        break;
    }
    case Family::Lattes:
        m.degree = 2;
        m.crit = {cplx(1, 0), cplx(-1, 0)};
        m.crit_inf = false;
        m.crit_val = {cplx(0, 0), cplx(1, 0)};
        m.post = {cplx(1, 0), cplx(0, 0)};
        m.post_inf = true;
        // Lattes: Julia set is the whole sphere, no attracting orbits.
        break;
    case Family::QuadCantor: {
        m.degree = 2;
        m.crit = {cplx(0, 0)};
        m.crit_inf = true;
        m.crit_val = {cplx(-3, 0)};
        // Critical orbit 0 -> -3 -> 6 -> 33 -> ... escapes; postcritical set
        // is truncated at the working window.
        cplx p(-3, 0);
        while (std::abs(p) <= m.window_radius) {
            m.post.push_back(p);
            p = p * p - 3.0;
        }
        m.post_inf = true;
        m.attracting_inf = true;
        break;
    }
    }
    for (const cplx& c : m.crit) m.certs.push_back(certify_orbit(m, PointE::at(c)));
    if (m.crit_inf) m.certs.push_back(certify_orbit(m, PointE::infinity()));
    return m;
}

MapModel make_map(const std::string& token) {
    Family f;
    int d;
    parse_family(token, f, d);
    return make_map(f, d);
}

Curve lift_curve(const MapModel& m, const Curve& l, cplx x0) {
    l.validate();
    if (std::abs(eval_raw(m.fam, m.degree, x0) - l.start()) > kLiftStartEps)
        fail(Err::EndpointMismatch, "lift start is not a preimage of the curve start");

    auto guard_target = [&](cplx w) {
        for (const cplx& cv : m.crit_val)
            if (std::abs(w - cv) < kCritValEps)
                fail(Err::CriticalValueProximity, "curve too close to a critical value");
    };
    guard_target(l.start());

    Curve out;
    out.pts.push_back(x0);
    cplx z = x0;

    // Advance the tracked preimage to the fiber over w; returns false when the
    // branch choice is ambiguous at this step size.
    auto advance = [&](cplx w) -> bool {
        guard_target(w);
        std::vector<cplx> roots = map_preimages(m, w);
        size_t best = 0;
        double d1 = 1e300, d2 = 1e300;
        for (size_t i = 0; i < roots.size(); ++i) {
            double di = std::abs(roots[i] - z);
            if (di < d1) { d2 = d1; d1 = di; best = i; }
            else if (di < d2) d2 = di;
        }
        if (roots.size() > 1 && d2 < 3.0 * d1) return false;
        z = roots[best];
        if (std::abs(z) > m.window_radius)
            fail(Err::WindowEscape, "lift escaped the working window");
        if (out.pts.back() != z) out.pts.push_back(z);
        return true;
    };

    for (size_t i = 0; i + 1 < l.pts.size(); ++i) {
        cplx a = l.pts[i], b = l.pts[i + 1];
        // Targets pending along this segment, deepest first.
        std::vector<std::pair<cplx, cplx>> stack{{a, b}};
        while (!stack.empty()) {
            auto [u, v] = stack.back();
            stack.pop_back();
            if (advance(v)) continue;
            if (std::abs(v - u) < 1e-12 * (1.0 + std::abs(v)))
                fail(Err::BranchAmbiguity, "preimage branches not separable at step floor");
            cplx mid = (u + v) / 2.0;
            stack.push_back({mid, v});
            stack.push_back({u, mid});
        }
    }

    if (out.pts.size() < 2) {
        // The whole input collapsed onto x0's fiber point; represent the
        // constant lift as a degenerate two-point excursion is not allowed,
        // so report it.
        fail(Err::NumericalFailure, "lift produced a constant curve");
    }
    if (l.closed && std::abs(out.end() - out.start()) <= kLiftStartEps) {
        out.pts.back() = out.start();
        if (out.pts.size() >= 2 && out.pts[out.pts.size() - 2] == out.pts.back())
            out.pts.pop_back();
        out.closed = true;
    }
    out.validate();
    return out;
}

} // namespace jct
