#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jct/codspace.hpp"
#include "jct/maps.hpp"
#include "jct/rational.hpp"

namespace jct {

// One contraction z -> a z + b of the lifted system, with exact coefficients.
struct AffineMap {
    GRat a, b;
};

struct LiftedIFS {
    Family fam = Family::Power;
    int degree = 2;
    bool planar = false; // line families keep everything on the real axis
    std::vector<AffineMap> maps;
    RadialClass cls; // kept for deck enumeration and report headers
};

// Expands a radial class into its affine contractions.  QuadCantor has no
// invertible lift, so it is rejected here and handled by the graph machinery.
LiftedIFS lift_radial_class(const RadialClass& c);

// Raster of the attractor.  `outer` is the bitmap: the fixed point of the
// discretized union-of-images operator iterated down from the full box, so
// it keeps every pixel whose closed extent meets K plus a bounded collar
// (under one pixel for line families, under two pixels for planar ones,
// where a depth-four composition of the system is iterated to keep the
// corner-to-corner pixel chains from sustaining a wide halo).  `inner`
// marks pixels whose extent provably lies inside K.  On the line the
// complement of K inside its convex hull is covered by the branch-word
// images of the finitely many level-zero gaps, and a rational-arithmetic
// preimage recursion certifies that no such image meets the pixel.  When
// the first-level branch cells meet only at endpoints that cover is exact
// and so is `inner`; when the cells overlap (spread digit sets such as
// 0,1,5) a gap image may still contain points of K reached through another
// branch, the recursion then rejects pixels it cannot separate, and `inner`
// is a sound under-approximation.  Certifying interior pixels of the planar
// tiles would need the same machinery on polygons with subpixel boundary
// tracking, so there `inner` stays empty and the sandwich
//     inner area <= measure(K) <= outer area
// degenerates to its upper half.
struct TileRaster {
    long res = 0; // pixels per unit
    bool planar = false;
    long ix0 = 0, iy0 = 0; // pixel-lattice coordinates of the lower-left corner
    long w = 0, h = 0;
    std::vector<std::uint8_t> outer, inner; // row-major, h rows of w
    int iterations = 0;
    bool converged = false;

    bool outer_at(long ix, long iy) const {
        if (ix < ix0 || ix >= ix0 + w || iy < iy0 || iy >= iy0 + h) return false;
        return outer[(size_t)(iy - iy0) * w + (ix - ix0)] != 0;
    }
    bool inner_at(long ix, long iy) const {
        if (ix < ix0 || ix >= ix0 + w || iy < iy0 || iy >= iy0 + h) return false;
        return inner[(size_t)(iy - iy0) * w + (ix - ix0)] != 0;
    }
    long long outer_count() const;
    long long inner_count() const;
};

TileRaster attractor_raster(const LiftedIFS& ifs, long res);

// One Jacobi sweep of the raster's operators on the same grid (the composed
// system for planar grids, matching attractor_raster); used to check the
// fixed-point property externally.
TileRaster raster_step(const LiftedIFS& ifs, const TileRaster& r);

struct MeasureReport {
    long res = 0;
    double value = 0, lower = 0, upper = 0;    // set-pixel measure and sandwich at res
    double value2 = 0, lower2 = 0, upper2 = 0; // the same at 2*res
    double richardson = 0;                     // first-order extrapolation of the pair
};

// value = set-pixel count x pixel measure (upper-biased by the collar);
// lower comes from the certified-interior bitmap.  The pair at 2*res feeds
// the Richardson extrapolant, which cancels the leading 1/res collar term
// of tiles with rectifiable boundary.
MeasureReport measure_estimate(const LiftedIFS& ifs, long res);

// Exact measure (and, where the attractor is an interval, its endpoints).
struct ClosedForm {
    Rat measure;
    bool has_interval = false;
    Rat lo, hi;
};

ClosedForm closed_form_measure(const RadialClass& c);

// Deck transformation of the cover: z -> sign * i^rot * z + t.  Power uses
// t in Z, Chebyshev sign z + 2n, Lattes i^rot z + 2b; unused parts stay at
// their defaults so elements compose exactly.
struct DeckEl {
    int rot = 0;   // Lattes only, power of i
    int sign = +1; // Chebyshev only
    GRat t;

    std::string str(Family fam) const;
};

GRat deck_apply(const DeckEl& e, const GRat& z);
DeckEl deck_inverse(const DeckEl& e);
DeckEl deck_compose(const DeckEl& e, const DeckEl& f); // e after f

struct TilingReport {
    double coverage = 0, overlap = 0;
    std::vector<DeckEl> tiles;
    long long window_px = 0;
    long res = 0;
};

// Greedy construction of a tiling subset of the deck group over the given
// window.  A candidate translate is accepted when it covers at least one new
// window pixel without its inner region meeting any previously accepted
// inner region; for a genuine tiling the accepted set reaches full coverage
// with overlap exactly zero.
TilingReport tiling_check(const LiftedIFS& ifs, double wx0, double wy0, double wx1,
                          double wy1, long res);

struct MultReport {
    long long n = 0;
    double gap = 0;    // distance of the normalized measure to n
    double measure = 0; // raster cross-check (Richardson value at res)
    long res = 0;
};

// Multiplicity is the cover measure of the tile in deck-fundamental-domain
// units (1 for every catalog family).  The exact closed-form measure decides
// n whenever the family has one; the raster estimate is reported alongside
// as a cross-check.  Only the raster fallback path (no closed form) can
// return Inconclusive, when the estimate sits further than 0.2 from every
// integer.
MultReport multiplicity_estimate(const RadialClass& c, long res);

struct GrowthReport {
    std::vector<long long> counts; // counts[k-1] = #{g_w(0) : |w| = k}
    bool surjective_evidence = false;
    int degenerate_at = 0; // first level with a collision, 0 if none
};

GrowthReport growth_rate_exact(const LiftedIFS& ifs, int kmax);

// Binary PGM with a comment line recording family, class, resolution and
// iteration count; inner pixels are black, the outer collar mid-gray.
void write_pgm(const TileRaster& r, const LiftedIFS& ifs, const std::string& path);

} // namespace jct
