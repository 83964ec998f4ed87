#include "jct/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace jct {

double Curve::diameter() const {
    double d = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            d = std::max(d, std::abs(pts[i] - pts[j]));
    return d;
}

double Curve::length() const {
    double s = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) s += std::abs(pts[i + 1] - pts[i]);
    return s;
}

void Curve::validate() const {
    if (pts.size() < 2)
        fail(Err::NumericalFailure, "curve needs at least two vertices");
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1])
            fail(Err::NumericalFailure, "curve has repeated consecutive vertex");
    if (closed && std::abs(pts.front() - pts.back()) > 0)
        fail(Err::EndpointMismatch, "closed curve must end at its start");
}

static double seg_point_dist(cplx a, cplx b, cplx z) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0) return std::abs(z - a);
    double t = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

double Curve::distance_to(cplx z) const {
    double d = std::abs(pts.front() - z);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        d = std::min(d, seg_point_dist(pts[i], pts[i + 1], z));
    return d;
}

std::vector<int> reduce_word(std::vector<int> w) {
    std::vector<int> out;
    for (int s : w) {
        if (!out.empty() && out.back() == -s) out.pop_back();
        else out.push_back(s);
    }
    return out;
}

std::vector<int> crossing_word(const Curve& c, const CutConfig& cuts) {
    c.validate();
    struct Hit {
        double pos; // segment index + parameter, for ordering along the curve
        int letter;
    };
    std::vector<Hit> hits;
    for (size_t k = 0; k < cuts.punctures.size(); ++k) {
        double cx = cuts.punctures[k].real();
        double cy = cuts.punctures[k].imag();
        // A vertex sitting on the cut ray makes the crossing count ambiguous.
        for (const cplx& p : c.pts)
            if (p.real() == cx && p.imag() < cy)
                fail(Err::DegenerateCrossing, "curve vertex lies on a branch cut");
        for (size_t i = 0; i + 1 < c.pts.size(); ++i) {
            cplx a = c.pts[i], b = c.pts[i + 1];
            double da = a.real() - cx, db = b.real() - cx;
            if (da == 0 && db == 0) {
                // Vertical segment on the cut line; only degenerate if below
                // the puncture.
                if (std::min(a.imag(), b.imag()) < cy)
                    fail(Err::DegenerateCrossing, "curve segment runs along a branch cut");
                continue;
            }
            if ((da > 0 && db > 0) || (da < 0 && db < 0)) continue;
            if (da == 0 || db == 0) continue; // endpoint handled as vertex above (it is >= cy here)
            double t = da / (da - db);
            double y = a.imag() + t * (b.imag() - a.imag());
            if (y == cy)
                fail(Err::DegenerateCrossing, "curve passes through a puncture's cut origin");
            if (y < cy) {
                int sign = da < 0 ? +1 : -1; // left-to-right crossing is positive
                hits.push_back({(double)i + t, sign * (int)(k + 1)});
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& u, const Hit& v) { return u.pos < v.pos; });
    std::vector<int> w;
    w.reserve(hits.size());
    for (const Hit& h : hits) w.push_back(h.letter);
    return w;
}

Curve curve_concat(const Curve& a, const Curve& b) {
    a.validate();
    b.validate();
    if (std::abs(a.end() - b.start()) > kConcatEps)
        fail(Err::EndpointMismatch, "concat endpoints differ");
    Curve r;
    r.pts = a.pts;
    // Drop b's start: it coincides with a's end (within kConcatEps; keep a's
    // copy so the joint is a single vertex).
    for (size_t i = 1; i < b.pts.size(); ++i) {
        if (b.pts[i] == r.pts.back()) continue;
        r.pts.push_back(b.pts[i]);
    }
    if (r.pts.size() < 2) fail(Err::NumericalFailure, "concat collapsed to a point");
    r.closed = std::abs(r.start() - r.end()) == 0;
    return r;
}

Curve curve_reverse(const Curve& a) {
    a.validate();
    Curve r;
    r.pts.assign(a.pts.rbegin(), a.pts.rend());
    r.closed = a.closed;
    return r;
}

// Shortest decimal form that parses back to the same double.
static std::string double_repr(double v) {
    char buf[64];
    for (int prec = 15; prec <= 17; ++prec) {
        snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

void write_curve(std::ostream& os, const Curve& c) {
    c.validate();
    os << "closed " << (c.closed ? 1 : 0) << "\n";
    for (const cplx& p : c.pts)
        os << double_repr(p.real()) << " " << double_repr(p.imag()) << "\n";
}

Curve read_curve(std::istream& is) {
    std::string tag;
    int cl = 0;
    if (!(is >> tag >> cl) || tag != "closed")
        fail(Err::NumericalFailure, "curve stream missing 'closed' header");
    Curve c;
    c.closed = cl != 0;
    double re, im;
    while (is >> re >> im) c.pts.push_back(cplx(re, im));
    c.validate();
    return c;
}

} // namespace jct
