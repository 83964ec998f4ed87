#include "jct/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "jct/geom.hpp"

namespace jct {

long long TileRaster::outer_count() const {
    long long c = 0;
    for (std::uint8_t v : outer) c += v;
    return c;
}

long long TileRaster::inner_count() const {
    long long c = 0;
    for (std::uint8_t v : inner) c += v;
    return c;
}

LiftedIFS lift_radial_class(const RadialClass& c) {
    LiftedIFS s;
    s.fam = c.fam;
    s.degree = c.degree;
    s.cls = c;
    switch (c.fam) {
    case Family::Power:
        for (long long ni : c.n)
            s.maps.push_back({GRat(Rat(1, c.degree)), GRat(Rat(ni, c.degree))});
        break;
    case Family::Chebyshev:
        for (size_t i = 0; i < c.n.size(); ++i)
            s.maps.push_back({GRat(Rat(c.eps[i], 2)), GRat(Rat(c.n[i]))});
        break;
    case Family::Lattes:
        s.planar = true;
        for (size_t i = 0; i < c.beta.size(); ++i) {
            GRat a = GRat(Rat(1, 2), Rat(-1, 2)) * ipow(c.rot[i]); // (1-i)/2 * alpha
            s.maps.push_back({a, c.beta[i]});
        }
        break;
    case Family::QuadCantor:
        fail(Err::UnsupportedFamily,
             "quadcantor branches do not lift to invertible contractions");
    }
    for (const AffineMap& m : s.maps)
        if (!(m.a.norm() < Rat(1)))
            fail(Err::InvalidClassEntry, "lifted coefficient is not a contraction");
    return s;
}

// ---- grid planning -----------------------------------------------------------

namespace {

struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

cplx to_c(const GRat& z) { return {z.re.to_double(), z.im.to_double()}; }

// A box guaranteed to contain the attractor: hull of the fixed points
// fattened by the geometric tail bound, then tightened by iterating the
// hull-of-images operator (which preserves "contains K").
Box plan_box(const LiftedIFS& s) {
    double smax = 0;
    Box b;
    bool first = true;
    for (const AffineMap& m : s.maps) {
        cplx fp = to_c(m.b / (GRat(1) - m.a));
        if (first) {
            b = {fp.real(), fp.imag(), fp.real(), fp.imag()};
            first = false;
        } else {
            b.x0 = std::min(b.x0, fp.real());
            b.y0 = std::min(b.y0, fp.imag());
            b.x1 = std::max(b.x1, fp.real());
            b.y1 = std::max(b.y1, fp.imag());
        }
        smax = std::max(smax, std::sqrt(m.a.norm().to_double()));
    }
    cplx z0((b.x0 + b.x1) / 2, (b.y0 + b.y1) / 2);
    double R = 0;
    for (const AffineMap& m : s.maps)
        R = std::max(R, std::abs(to_c(m.a) * z0 + to_c(m.b) - z0));
    R = R / (1 - smax) + 1e-9;
    b.x0 -= R;
    b.y0 -= R;
    b.x1 += R;
    b.y1 += R;
    for (int it = 0; it < 96; ++it) {
        Box nb{1e300, 1e300, -1e300, -1e300};
        for (const AffineMap& m : s.maps) {
            cplx a = to_c(m.a), t = to_c(m.b);
            for (int corner = 0; corner < 4; ++corner) {
                cplx z(corner & 1 ? b.x1 : b.x0, corner & 2 ? b.y1 : b.y0);
                cplx w = a * z + t;
                nb.x0 = std::min(nb.x0, w.real());
                nb.y0 = std::min(nb.y0, w.imag());
                nb.x1 = std::max(nb.x1, w.real());
                nb.y1 = std::max(nb.y1, w.imag());
            }
        }
        double slack = 1e-12 * (1 + std::abs(nb.x0) + std::abs(nb.x1) + std::abs(nb.y0) +
                                std::abs(nb.y1));
        nb.x0 -= slack;
        nb.y0 -= slack;
        nb.x1 += slack;
        nb.y1 += slack;
        // Rotating branches can re-inflate an axis-aligned hull, so clamp to
        // the previous box; both contain K, hence so does the intersection.
        nb.x0 = std::max(nb.x0, b.x0);
        nb.y0 = std::max(nb.y0, b.y0);
        nb.x1 = std::min(nb.x1, b.x1);
        nb.y1 = std::min(nb.y1, b.y1);
        if (nb.x0 == b.x0 && nb.y0 == b.y0 && nb.x1 == b.x1 && nb.y1 == b.y1) break;
        b = nb;
    }
    return b;
}

void init_grid(TileRaster& r, const LiftedIFS& s, long res) {
    Box b = plan_box(s);
    r.res = res;
    r.planar = s.planar;
    r.ix0 = (long)std::floor(b.x0 * res) - 2;
    long ix1 = (long)std::floor(b.x1 * res) + 2;
    r.w = ix1 - r.ix0 + 1;
    if (s.planar) {
        r.iy0 = (long)std::floor(b.y0 * res) - 2;
        long iy1 = (long)std::floor(b.y1 * res) + 2;
        r.h = iy1 - r.iy0 + 1;
    } else {
        r.iy0 = 0;
        r.h = 1;
    }
    if (r.w < 1 || r.h < 1 || r.w > 60000 || r.h > 60000 ||
        (long long)r.w * r.h > 150000000LL)
        fail(Err::NumericalFailure, "raster grid too large for this resolution");
}

long long ceil_rat(const Rat& r) { return -(-r).floor(); }

struct Rect {
    long x0, y0, x1, y1; // inclusive pixel indices, empty when x1 < x0
    bool empty() const { return x1 < x0 || y1 < y0; }
};

Rect content_bbox(const TileRaster& g, const std::vector<std::uint8_t>& bits) {
    Rect r{0, 0, -1, -1};
    bool any = false;
    for (long iy = 0; iy < g.h; ++iy) {
        const std::uint8_t* row = &bits[(size_t)iy * g.w];
        long lo = -1, hi = -1;
        for (long ix = 0; ix < g.w; ++ix)
            if (row[ix]) {
                if (lo < 0) lo = ix;
                hi = ix;
            }
        if (lo < 0) continue;
        if (!any) {
            r = {g.ix0 + lo, g.iy0 + iy, g.ix0 + hi, g.iy0 + iy};
            any = true;
        } else {
            r.x0 = std::min(r.x0, g.ix0 + lo);
            r.x1 = std::max(r.x1, g.ix0 + hi);
            r.y1 = g.iy0 + iy;
        }
    }
    return any ? r : Rect{0, 0, -1, -1};
}

// Pixels outside this rectangle cannot become set by one application of the
// operators when the source content lies in `src`: their preimage diamonds
// miss the source region entirely.
Rect forward_rect(const LiftedIFS& s, const TileRaster& g, const Rect& src) {
    double x0 = (src.x0 - 3.0) / g.res, x1 = (src.x1 + 4.0) / g.res;
    double y0 = (src.y0 - 3.0) / g.res, y1 = (src.y1 + 4.0) / g.res;
    double rx0 = 1e300, ry0 = 1e300, rx1 = -1e300, ry1 = -1e300;
    for (const AffineMap& m : s.maps) {
        cplx a = to_c(m.a), t = to_c(m.b);
        for (int corner = 0; corner < 4; ++corner) {
            cplx z(corner & 1 ? x1 : x0, corner & 2 ? y1 : y0);
            cplx w = a * z + t;
            rx0 = std::min(rx0, w.real());
            ry0 = std::min(ry0, w.imag());
            rx1 = std::max(rx1, w.real());
            ry1 = std::max(ry1, w.imag());
        }
    }
    Rect r;
    r.x0 = std::max(g.ix0, (long)std::floor(rx0 * g.res) - 3);
    r.x1 = std::min(g.ix0 + g.w - 1, (long)std::floor(rx1 * g.res) + 3);
    r.y0 = std::max(g.iy0, (long)std::floor(ry0 * g.res) - 3);
    r.y1 = std::min(g.iy0 + g.h - 1, (long)std::floor(ry1 * g.res) + 3);
    return r;
}

// One Jacobi application of the discretized outer operator: a pixel stays set
// when some branch preimage of its extent still meets a set source pixel, so
// "extent meets K" pixels are preserved from one round to the next.  Pixels
// outside the forward image of the current content cannot be set and are
// cleared without being scanned.  Candidate ranges are the pixels whose
// closed extents cover the preimage span with nothing grazing-only added.
void sweep_outer(const LiftedIFS& s, const TileRaster& g, std::vector<std::uint8_t>& dst) {
    const long W = g.w, H = g.h;
    dst.assign((size_t)W * H, 0);
    Rect src = content_bbox(g, g.outer);
    if (src.empty()) return;
    Rect act = forward_rect(s, g, src);
    if (act.empty()) return;

    auto out_any = [&](long iy, long q0, long q1) -> bool {
        if (iy < g.iy0 || iy >= g.iy0 + H) return false;
        q0 = std::max(q0, g.ix0);
        q1 = std::min(q1, g.ix0 + W - 1);
        const std::uint8_t* row = &g.outer[(size_t)(iy - g.iy0) * W];
        for (long q = q0; q <= q1; ++q)
            if (row[q - g.ix0]) return true;
        return false;
    };

    if (!s.planar) {
        // Exact rational preimage spans on the line.
        struct Lin {
            Rat ia;  // 1/a
            Rat brs; // b * res
        };
        std::vector<Lin> lin;
        for (const AffineMap& m : s.maps)
            lin.push_back({Rat(1) / m.a.re, m.b.re * Rat(g.res)});
        for (long ix = act.x0; ix <= act.x1; ++ix) {
            bool o = false;
            for (size_t bi = 0; bi < lin.size() && !o; ++bi) {
                Rat e0 = (Rat(ix) - lin[bi].brs) * lin[bi].ia;
                Rat e1 = (Rat(ix + 1) - lin[bi].brs) * lin[bi].ia;
                if (e1 < e0) std::swap(e0, e1);
                o = out_any(0, e0.floor(), ceil_rat(e1) - 1);
            }
            dst[ix - g.ix0] = o;
        }
        return;
    }

    // Planar case: the preimage of a pixel extent is the square of side |1/a|
    // centered at the mapped center, rotated by arg(1/a) — a diamond for the
    // base 45-degree branches, axis-aligned for even compositions of them; an
    // enclosing disk covers any other angle.  Centers are dyadic at
    // power-of-two resolutions, so the eps inflation only matters for exotic
    // resolutions; it errs outward, which keeps the operator conservative.
    const double eps = 1e-5;
    enum class Shape { Axis, Diamond, Round };
    struct Pl {
        cplx inv; // 1/a
        cplx brs; // b * res
        Shape shape;
        double half; // half side for Axis, L1 radius / circumradius otherwise
    };
    std::vector<Pl> pl;
    for (const AffineMap& m : s.maps) {
        Pl p;
        p.inv = to_c(GRat(1) / m.a);
        p.brs = to_c(m.b) * (double)g.res;
        double side = std::abs(p.inv);
        if (m.a.re.is_zero() || m.a.im.is_zero()) {
            p.shape = Shape::Axis;
            p.half = side / 2;
        } else if (m.a.re.abs() == m.a.im.abs()) {
            p.shape = Shape::Diamond;
            p.half = side * std::sqrt(0.5);
        } else {
            p.shape = Shape::Round;
            p.half = side * std::sqrt(0.5);
        }
        pl.push_back(p);
    }
    for (long iy = act.y0; iy <= act.y1; ++iy) {
        std::uint8_t* orow = &dst[(size_t)(iy - g.iy0) * W];
        for (long ix = act.x0; ix <= act.x1; ++ix) {
            bool o = false;
            for (size_t bi = 0; bi < pl.size() && !o; ++bi) {
                const Pl& p = pl[bi];
                cplx M = (cplx(ix + 0.5, iy + 0.5) - p.brs) * p.inv;
                long r0 = (long)std::floor(M.imag() - p.half - eps);
                long r1 = (long)std::ceil(M.imag() + p.half + eps) - 1;
                for (long ry = r0; ry <= r1 && !o; ++ry) {
                    double dy = 0;
                    if ((double)ry > M.imag()) dy = ry - M.imag();
                    else if (ry + 1.0 < M.imag()) dy = M.imag() - (ry + 1.0);
                    double hw;
                    switch (p.shape) {
                    case Shape::Axis: hw = p.half; break;
                    case Shape::Diamond: hw = p.half - dy; break;
                    default:
                        hw = dy < p.half ? std::sqrt(p.half * p.half - dy * dy) : -1.0;
                    }
                    if (hw < -eps) continue;
                    if (hw < 0) hw = 0;
                    double xlo = M.real() - hw - eps, xhi = M.real() + hw + eps;
                    o = out_any(ry, (long)std::floor(xlo), (long)std::ceil(xhi) - 1);
                }
            }
            orow[ix - g.ix0] = o;
        }
    }
}

// Exact interior certification on the line.  The complement of K inside its
// convex hull is the union of the branch-word images of the finitely many
// level-zero gaps G0 = hull \ U g_i(hull), so a pixel extent lies in K
// exactly when no such image meets it.  That is decidable: E meets g_i(X)
// iff g_i^{-1}(E) meets X, and the pulled-back query interval grows by
// 1/|a_i| per level, so once it swallows the hull (which contains a gap)
// the answer is yes, and intervals pulled outside the hull answer no.
// Everything runs in rational arithmetic on pixel coordinates.
class LineInterior {
public:
    LineInterior(const LiftedIFS& s, long res) {
        for (const AffineMap& m : s.maps)
            lin.push_back({m.a.re, m.b.re * Rat(res), Rat(1) / m.a.re});
        solve_hull();
        level_gaps();
        double smax = 0;
        for (const Lin& l : lin) smax = std::max(smax, std::fabs(l.a.to_double()));
        double span = (hh - hl).to_double();
        maxd = 4 + (int)std::ceil(std::log(std::max(4.0 * span, 8.0)) / std::log(1.0 / smax));
    }

    void fill(const TileRaster& g, std::vector<std::uint8_t>& dst) const {
        dst.assign(g.inner.size(), 0);
        long p0 = ceil_px(hl), p1 = floor_px(hh - Rat(1));
        p0 = std::max(p0, g.ix0);
        p1 = std::min(p1, g.ix0 + g.w - 1);
        if (p1 < p0) return;
        if (gaps.empty()) {
            for (long p = p0; p <= p1; ++p) dst[p - g.ix0] = 1;
            return;
        }
        mark(p0, p1 + 1, g, dst);
    }

private:
    struct Lin {
        Rat a, brs, ia; // pixel coordinates: X -> a X + brs
    };
    struct Gap {
        Rat lo, hi; // open interval, pixel coordinates
    };
    std::vector<Lin> lin;
    std::vector<Gap> gaps;
    Rat hl, hh; // hull endpoints, pixel coordinates
    int maxd = 0;

    static long ceil_px(const Rat& v) {
        Rat f(v.floor());
        return f < v ? v.floor() + 1 : v.floor();
    }
    static long floor_px(const Rat& v) { return v.floor(); }

    // The hull endpoints satisfy m = min_i g_i({m,M}), M = max_i g_i({m,M}),
    // and each extreme is attained by some branch at the endpoint picked by
    // its slope sign.  Trying every branch pair, solving the 2x2 linear
    // system, and checking the candidate against the full min/max recovers
    // the hull exactly.
    void solve_hull() {
        bool found = false;
        for (const Lin& bi : lin)
            for (const Lin& bj : lin) {
                Rat m, M;
                bool ip = Rat(0) < bi.a, jp = Rat(0) < bj.a;
                if (ip && jp) {
                    m = bi.brs / (Rat(1) - bi.a);
                    M = bj.brs / (Rat(1) - bj.a);
                } else if (ip && !jp) {
                    m = bi.brs / (Rat(1) - bi.a);
                    M = bj.a * m + bj.brs;
                } else if (!ip && jp) {
                    M = bj.brs / (Rat(1) - bj.a);
                    m = bi.a * M + bi.brs;
                } else {
                    m = (bi.a * bj.brs + bi.brs) / (Rat(1) - bi.a * bj.a);
                    M = bj.a * m + bj.brs;
                }
                if (M < m) continue;
                bool ok = true;
                Rat mn = m, mx = M;
                for (const Lin& l : lin) {
                    Rat u = l.a * m + l.brs, v = l.a * M + l.brs;
                    if (v < u) std::swap(u, v);
                    mn = std::min(mn, u);
                    mx = std::max(mx, v);
                    if (u < m || M < v) ok = false;
                }
                if (ok && mn == m && mx == M) {
                    hl = m;
                    hh = M;
                    found = true;
                }
            }
        if (!found) fail(Err::NumericalFailure, "hull fixed point did not resolve");
    }

    void level_gaps() {
        std::vector<std::pair<Rat, Rat>> im;
        for (const Lin& l : lin) {
            Rat u = l.a * hl + l.brs, v = l.a * hh + l.brs;
            if (v < u) std::swap(u, v);
            im.push_back({u, v});
        }
        std::sort(im.begin(), im.end());
        Rat cover = hl;
        for (const auto& i : im) {
            if (cover < i.first) gaps.push_back({cover, i.first});
            cover = std::max(cover, i.second);
        }
        if (cover < hh) gaps.push_back({cover, hh});
    }

    bool hits(const Rat& e0, const Rat& e1, int depth) const {
        if (e1 < hl || hh < e0) return false;
        if (!(hl < e0) && !(e1 < hh)) return true; // swallows the hull, so some gap
        for (const Gap& gp : gaps)
            if (gp.lo < e1 && e0 < gp.hi) return true;
        if (depth == 0) return true; // unresolved: err toward "not interior"
        for (const Lin& l : lin) {
            Rat f0 = (e0 - l.brs) * l.ia, f1 = (e1 - l.brs) * l.ia;
            if (f1 < f0) std::swap(f0, f1);
            f0 = std::max(f0, hl);
            f1 = std::min(f1, hh);
            if (f1 < f0) continue;
            if (hits(f0, f1, depth - 1)) return true;
        }
        return false;
    }

    // Pixel range [A, B): certify whole blocks at once and subdivide only
    // where a gap image interferes, which keeps the work near the boundary.
    void mark(long A, long B, const TileRaster& g, std::vector<std::uint8_t>& dst) const {
        if (B <= A) return;
        if (!hits(Rat(A), Rat(B), maxd)) {
            for (long p = A; p < B; ++p) dst[p - g.ix0] = 1;
            return;
        }
        if (B - A == 1) return;
        long mid = A + (B - A) / 2;
        mark(A, mid, g, dst);
        mark(mid, B, g, dst);
    }
};

// All branch words of the given length, composed into one system with the
// same attractor.
LiftedIFS composed_system(const LiftedIFS& s, int depth) {
    LiftedIFS c = s;
    c.maps.assign(1, {GRat(1), GRat(0)});
    for (int k = 0; k < depth; ++k) {
        std::vector<AffineMap> next;
        next.reserve(c.maps.size() * s.maps.size());
        for (const AffineMap& w : c.maps)
            for (const AffineMap& m : s.maps)
                next.push_back({w.a * m.a, w.a * m.b + w.b});
        c.maps.swap(next);
    }
    return c;
}

constexpr int kPlanarComposeDepth = 4;

} // namespace

TileRaster attractor_raster(const LiftedIFS& s, long res) {
    if (res < 16) throw std::invalid_argument("resolution must be at least 16 px/unit");
    TileRaster r;
    init_grid(r, s, res);
    r.outer.assign((size_t)r.w * r.h, 1);
    r.inner.assign((size_t)r.w * r.h, 0);
    std::vector<std::uint8_t> next;
    bool stable = false;
    for (int it = 0; it < 256 && !stable; ++it) {
        sweep_outer(s, r, next);
        stable = next == r.outer;
        r.outer.swap(next);
        ++r.iterations;
    }
    if (stable && s.planar) {
        // The base fixed point carries a halo several pixels wide, sustained
        // by corner-touching pixel chains (each sweep loses only a factor
        // 1/|a| of the offset but regains a pixel of rounding).  Iterating
        // the depth-four composition, contraction 1/4, starves those chains
        // down to a sub-pixel collar; K is the attractor of the composed
        // system too, so the raster stays a superset.
        LiftedIFS s4 = composed_system(s, kPlanarComposeDepth);
        stable = false;
        for (int it = 0; it < 256 && !stable; ++it) {
            sweep_outer(s4, r, next);
            stable = next == r.outer;
            r.outer.swap(next);
            ++r.iterations;
        }
    }
    if (stable && !s.planar) LineInterior(s, res).fill(r, r.inner);
    r.converged = stable;
    if (!r.converged)
        fail(Err::NoConvergence, "raster still changing after 256 iterations");
    return r;
}

TileRaster raster_step(const LiftedIFS& s, const TileRaster& r) {
    TileRaster out = r;
    if (s.planar) {
        LiftedIFS s4 = composed_system(s, kPlanarComposeDepth);
        sweep_outer(s4, r, out.outer);
    } else {
        sweep_outer(s, r, out.outer);
        LineInterior(s, r.res).fill(r, out.inner);
    }
    out.iterations = r.iterations + 1;
    out.converged = out.outer == r.outer && out.inner == r.inner;
    return out;
}

static void sandwich(const TileRaster& r, double& lo, double& val, double& hi) {
    double px = r.planar ? 1.0 / ((double)r.res * r.res) : 1.0 / (double)r.res;
    lo = (double)r.inner_count() * px;
    hi = (double)r.outer_count() * px;
    val = hi;
}

MeasureReport measure_estimate(const LiftedIFS& s, long res) {
    MeasureReport m;
    m.res = res;
    TileRaster a = attractor_raster(s, res);
    sandwich(a, m.lower, m.value, m.upper);
    TileRaster b = attractor_raster(s, 2 * res);
    sandwich(b, m.lower2, m.value2, m.upper2);
    m.richardson = 2 * m.value2 - m.value;
    return m;
}

ClosedForm closed_form_measure(const RadialClass& c) {
    ClosedForm out;
    switch (c.fam) {
    case Family::Power: {
        if (c.degree == 2) {
            long long lo = std::min(c.n[0], c.n[1]), hi = std::max(c.n[0], c.n[1]);
            out.measure = Rat(hi - lo);
            out.has_interval = true;
            out.lo = Rat(lo);
            out.hi = Rat(hi);
            return out;
        }
        if (c.degree == 3) {
            long long d1 = c.n[1] - c.n[0], d2 = c.n[2] - c.n[0];
            long long g = std::gcd(std::llabs(d1), std::llabs(d2));
            if (g == 0) {
                out.measure = Rat(0);
                return out;
            }
            if ((((d1 + d2) / g) % 3 + 3) % 3 != 0) {
                out.measure = Rat(0);
                return out;
            }
            out.measure = Rat(g);
            std::vector<long long> v(c.n.begin(), c.n.end());
            std::sort(v.begin(), v.end());
            if (v[1] - v[0] == g && v[2] - v[1] == g) {
                // digits in arithmetic progression: the attractor is the
                // interval [v0/2, v0/2 + g]
                out.has_interval = true;
                out.lo = Rat(v[0], 2);
                out.hi = out.lo + Rat(g);
            }
            return out;
        }
        fail(Err::UnsupportedFamily, "closed form known for power degrees 2 and 3 only");
    }
    case Family::Chebyshev: {
        long long n1 = c.n[0], n2 = c.n[1];
        int e1 = c.eps[0], e2 = c.eps[1];
        Rat lo, hi;
        if (e1 == +1 && e2 == +1) {
            lo = Rat(2 * std::min(n1, n2));
            hi = Rat(2 * std::max(n1, n2));
        } else if (e1 == -1 && e2 == -1) {
            long long a = std::min(n1, n2), b = std::max(n1, n2);
            lo = Rat(4 * a - 2 * b, 3);
            hi = Rat(4 * b - 2 * a, 3);
        } else {
            long long np = e1 == +1 ? n1 : n2; // entry with the + branch
            long long nm = e1 == +1 ? n2 : n1;
            Rat u(2 * np), v(nm - np);
            lo = std::min(u, v);
            hi = std::max(u, v);
        }
        out.has_interval = true;
        out.lo = lo;
        out.hi = hi;
        out.measure = hi - lo;
        return out;
    }
    case Family::Lattes: {
        int r1 = c.rot[0], r2 = c.rot[1];
        if (r1 == r2) {
            out.measure = Rat(2) * (c.beta[1] - c.beta[0]).norm();
            return out;
        }
        GRat f1 = c.beta[0] / lattes_divisor(r1);
        GRat f2 = c.beta[1] / lattes_divisor(r2);
        Rat nd = (f2 - f1).norm();
        bool a1 = r1 == 0 || r1 == 1, a2 = r2 == 0 || r2 == 1; // alpha in {1, i}
        if (a1 && a2) out.measure = nd;
        else if (!a1 && !a2) out.measure = Rat(25) * nd;
        else out.measure = Rat(10) * nd;
        return out;
    }
    default:
        fail(Err::UnsupportedFamily, "no closed-form measure for this family");
    }
}

// ---- deck elements -----------------------------------------------------------

GRat deck_apply(const DeckEl& e, const GRat& z) {
    GRat w = ipow(e.rot) * z;
    if (e.sign < 0) w = -w;
    return w + e.t;
}

DeckEl deck_inverse(const DeckEl& e) {
    DeckEl r;
    r.rot = (4 - ((e.rot % 4) + 4) % 4) % 4;
    r.sign = e.sign;
    GRat it = ipow(r.rot) * e.t;
    r.t = e.sign < 0 ? it : -it;
    return r;
}

DeckEl deck_compose(const DeckEl& e, const DeckEl& f) {
    DeckEl r;
    r.rot = (((e.rot + f.rot) % 4) + 4) % 4;
    r.sign = e.sign * f.sign;
    GRat tf = ipow(e.rot) * f.t;
    if (e.sign < 0) tf = -tf;
    r.t = tf + e.t;
    return r;
}

std::string DeckEl::str(Family fam) const {
    auto shift = [&]() -> std::string {
        if (t.is_zero()) return "";
        std::string ts = t.str();
        if (!ts.empty() && ts[0] != '-') return "+" + ts;
        return ts;
    };
    std::string head;
    if (fam == Family::Lattes) {
        static const char* pre[4] = {"", "i*", "-", "-i*"};
        head = std::string(pre[((rot % 4) + 4) % 4]) + "z";
    } else if (fam == Family::Chebyshev) {
        head = sign < 0 ? "-z" : "z";
    } else {
        head = "z";
    }
    std::string sh = shift();
    return sh.empty() ? head : head + sh;
}

// ---- tiling ------------------------------------------------------------------

namespace {

// Pixel-index image of a pixel under a deck element: quarter-turn rotations
// and reflections permute the pixel lattice exactly.
inline void deck_px(int rot, int sign, long sx, long sy, long ix, long iy, long& ox,
                    long& oy) {
    long rx, ry;
    switch (((rot % 4) + 4) % 4) {
    case 0: rx = ix; ry = iy; break;
    case 1: rx = -iy - 1; ry = ix; break;
    case 2: rx = -ix - 1; ry = -iy - 1; break;
    default: rx = iy; ry = -ix - 1; break;
    }
    if (sign < 0) rx = -rx - 1;
    ox = rx + sx;
    oy = ry + sy;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

TilingReport tiling_check(const LiftedIFS& s, double wx0, double wy0, double wx1,
                          double wy1, long res) {
    // A tiling statement is vacuous for a null tile, so rule that out first:
    // the closed form is exact where it exists, and on the line the certified
    // interior is exact too.
    bool zero;
    try {
        zero = closed_form_measure(s.cls).measure.is_zero();
    } catch (const Error& e) {
        if (e.code != Err::UnsupportedFamily) throw;
        zero = !s.planar && attractor_raster(s, res).inner_count() == 0;
    }
    if (zero)
        fail(Err::ZeroMeasureTile,
             "tile has measure zero; a tiling claim would be vacuous");
    TileRaster K = attractor_raster(s, res);

    long ux0 = (long)std::llround(std::floor(wx0 * res + 1e-9));
    long ux1 = (long)std::llround(std::ceil(wx1 * res - 1e-9)) - 1;
    long uy0 = 0, uy1 = 0;
    if (s.planar) {
        uy0 = (long)std::llround(std::floor(wy0 * res + 1e-9));
        uy1 = (long)std::llround(std::ceil(wy1 * res - 1e-9)) - 1;
    }
    if (ux1 < ux0 || uy1 < uy0) throw std::invalid_argument("window is empty");
    long WW = ux1 - ux0 + 1, WH = uy1 - uy0 + 1;
    if ((long long)WW * WH > 150000000LL)
        fail(Err::NumericalFailure, "tiling window too large for this resolution");

    // Pixel lists of the tile, one per rotation/reflection variant, so each
    // candidate is a pure lattice shift of a precomputed list.
    struct Variant {
        int rot, sign;
        std::vector<std::pair<long, long>> outer_px, inner_px;
        long bx0, by0, bx1, by1; // transformed content bbox
    };
    std::vector<Variant> variants;
    auto add_variant = [&](int rot, int sign) {
        Variant v;
        v.rot = rot;
        v.sign = sign;
        bool first = true;
        for (long iy = 0; iy < K.h; ++iy)
            for (long ix = 0; ix < K.w; ++ix) {
                size_t idx = (size_t)iy * K.w + ix;
                if (!K.outer[idx]) continue;
                long ox, oy;
                deck_px(rot, sign, 0, 0, K.ix0 + ix, K.iy0 + iy, ox, oy);
                v.outer_px.push_back({ox, oy});
                if (K.inner[idx]) v.inner_px.push_back({ox, oy});
                if (first) {
                    v.bx0 = v.bx1 = ox;
                    v.by0 = v.by1 = oy;
                    first = false;
                } else {
                    v.bx0 = std::min(v.bx0, ox);
                    v.bx1 = std::max(v.bx1, ox);
                    v.by0 = std::min(v.by0, oy);
                    v.by1 = std::max(v.by1, oy);
                }
            }
        variants.push_back(std::move(v));
    };
    switch (s.fam) {
    case Family::Power: add_variant(0, +1); break;
    case Family::Chebyshev:
        add_variant(0, +1);
        add_variant(0, -1);
        break;
    case Family::Lattes:
        for (int r = 0; r < 4; ++r) add_variant(r, +1);
        break;
    default:
        fail(Err::UnsupportedFamily, "no deck group for this family");
    }

    // Shift steps in pixels: power translates by integers, the others by twice
    // the lattice.
    long step = s.fam == Family::Power ? res : 2 * res;

    struct Cand {
        long long key0;
        long sx, sy;
        int vi;
    };
    std::vector<Cand> cands;
    for (size_t vi = 0; vi < variants.size(); ++vi) {
        const Variant& v = variants[vi];
        long long nx0 = floor_div(ux0 - v.bx1, step), nx1 = floor_div(ux1 - v.bx0, step) + 1;
        long long ny0 = 0, ny1 = 0;
        if (s.planar) {
            ny0 = floor_div(uy0 - v.by1, step);
            ny1 = floor_div(uy1 - v.by0, step) + 1;
        }
        for (long long nx = nx0; nx <= nx1; ++nx)
            for (long long ny = ny0; ny <= ny1; ++ny) {
                Cand c;
                c.sx = (long)(nx * step);
                c.sy = (long)(ny * step);
                c.vi = (int)vi;
                c.key0 = (long long)c.sx * c.sx + (long long)c.sy * c.sy;
                cands.push_back(c);
                if (cands.size() > 200000)
                    fail(Err::NumericalFailure, "tiling candidate set too large");
            }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.key0 != b.key0) return a.key0 < b.key0;
        if (a.sx != b.sx) return a.sx < b.sx;
        if (a.sy != b.sy) return a.sy < b.sy;
        return a.vi < b.vi;
    });

    std::vector<std::uint8_t> cov((size_t)WW * WH, 0);
    std::vector<std::uint8_t> cnt((size_t)WW * WH, 0);
    auto widx = [&](long gx, long gy) -> long long {
        if (gx < ux0 || gx > ux1 || gy < uy0 || gy > uy1) return -1;
        return (long long)(gy - uy0) * WW + (gx - ux0);
    };

    TilingReport rep;
    rep.res = res;
    rep.window_px = (long long)WW * WH;
    for (const Cand& c : cands) {
        const Variant& v = variants[c.vi];
        bool clash = false;
        for (const auto& p : v.inner_px) {
            long long i = widx(p.first + c.sx, p.second + c.sy);
            if (i >= 0 && cnt[i]) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        long long gain = 0;
        for (const auto& p : v.outer_px) {
            long long i = widx(p.first + c.sx, p.second + c.sy);
            if (i >= 0 && !cov[i]) ++gain;
        }
        if (gain == 0) continue;
        for (const auto& p : v.outer_px) {
            long long i = widx(p.first + c.sx, p.second + c.sy);
            if (i >= 0) cov[i] = 1;
        }
        for (const auto& p : v.inner_px) {
            long long i = widx(p.first + c.sx, p.second + c.sy);
            if (i >= 0 && cnt[i] < 255) ++cnt[i];
        }
        DeckEl e;
        e.rot = v.rot;
        e.sign = v.sign;
        if (s.fam == Family::Power) e.t = GRat(Rat(c.sx, res));
        else e.t = GRat(Rat(c.sx, res), Rat(c.sy, res));
        rep.tiles.push_back(e);
    }

    long long covered = 0, doubled = 0;
    for (size_t i = 0; i < cov.size(); ++i) {
        covered += cov[i] ? 1 : 0;
        doubled += cnt[i] >= 2 ? 1 : 0;
    }
    rep.coverage = (double)covered / (double)rep.window_px;
    rep.overlap = (double)doubled / (double)rep.window_px;
    return rep;
}

MultReport multiplicity_estimate(const RadialClass& c, long res) {
    LiftedIFS s = lift_radial_class(c);
    MeasureReport m = measure_estimate(s, res);
    MultReport r;
    r.res = res;
    // The Richardson value goes in the report as a cross-check against the
    // exact count; it is not what decides.
    r.measure = m.richardson;
    // One deck fundamental domain has unit measure in each of these
    // normalizations, so the multiplicity is the tile measure itself.  Where
    // a closed form exists it is exact and settles the count outright.
    try {
        ClosedForm f = closed_form_measure(c);
        double cf = f.measure.to_double();
        r.n = std::llround(cf);
        r.gap = std::fabs(cf - (double)r.n);
        return r;
    } catch (const Error& e) {
        if (e.code != Err::UnsupportedFamily) throw;
    }
    long long n = std::llround(m.richardson);
    r.n = n;
    r.gap = std::fabs(m.richardson - (double)n);
    if (r.gap > 0.2)
        fail(Err::Inconclusive, "measure estimate not near an integer; raise the resolution");
    return r;
}

GrowthReport growth_rate_exact(const LiftedIFS& s, int kmax) {
    if (kmax < 1) throw std::invalid_argument("kmax must be positive");
    double total = std::pow((double)s.maps.size(), kmax);
    if (total > 4.5e6) throw std::invalid_argument("kmax too large for exact enumeration");
    GrowthReport g;
    std::vector<GRat> cur{GRat(0)};
    long long dk = 1;
    bool ok = true;
    for (int k = 1; k <= kmax; ++k) {
        std::unordered_set<GRat, GRatHash> seen;
        std::vector<GRat> next;
        next.reserve(cur.size() * s.maps.size());
        for (const GRat& p : cur)
            for (const AffineMap& m : s.maps) {
                GRat q = m.a * p + m.b;
                if (seen.insert(q).second) next.push_back(q);
            }
        cur = std::move(next);
        dk *= (long long)s.maps.size();
        g.counts.push_back((long long)cur.size());
        if (ok && (long long)cur.size() != dk) {
            ok = false;
            g.degenerate_at = k;
        }
    }
    g.surjective_evidence = ok;
    return g;
}

void write_pgm(const TileRaster& r, const LiftedIFS& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Err::NumericalFailure, "cannot open '" + path + "' for writing");
    f << "P5\n# family=" << family_token(s.fam, s.degree) << " class=" << s.cls.str()
      << " res=" << r.res << " iters=" << r.iterations << "\n"
      << r.w << " " << r.h << "\n255\n";
    std::vector<std::uint8_t> row((size_t)r.w);
    for (long iy = r.h - 1; iy >= 0; --iy) {
        for (long ix = 0; ix < r.w; ++ix) {
            size_t idx = (size_t)iy * r.w + ix;
            row[ix] = r.inner[idx] ? 0 : (r.outer[idx] ? 128 : 255);
        }
        f.write((const char*)row.data(), (std::streamsize)row.size());
    }
    if (!f) fail(Err::NumericalFailure, "short write to '" + path + "'");
}

} // namespace jct
