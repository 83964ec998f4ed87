#pragma once
#include <complex>
#include <iosfwd>
#include <vector>

#include "jct/error.hpp"

namespace jct {

using cplx = std::complex<double>;

// Minimum distance any curve vertex or segment keeps from a puncture.
constexpr double kPunctureEps = 1e-9;
// Endpoints must agree this closely for concatenation.
constexpr double kConcatEps = 1e-12;

// Piecewise-linear path in C.  Vertices are ordered along the path;
// consecutive vertices are distinct, and a closed curve repeats its first
// vertex at the end.
struct Curve {
    std::vector<cplx> pts;
    bool closed = false;

    cplx start() const { return pts.front(); }
    cplx end() const { return pts.back(); }
    double diameter() const;
    double length() const; // arc length (sum of segment lengths)

    // Checks the structural invariants; throws on violation.
    void validate() const;
    // Distance from the polyline (as a point set) to z.
    double distance_to(cplx z) const;
};

// Homotopy bookkeeping for the punctured plane: one generator per puncture,
// realized as a branch cut hanging straight down from it.  A signed crossing
// of cut k contributes the letter +k / -k (1-based).
struct CutConfig {
    std::vector<cplx> punctures;
};

// Sequence of signed generator letters in path order.  +k means the segment
// crossed cut k left to right (counterclockwise around the puncture, which
// sits on the left of the direction of travel); -k the reverse.  A vertex on
// a cut, or a segment running along one, is DegenerateCrossing: the caller
// must perturb or subdivide.
std::vector<int> crossing_word(const Curve& c, const CutConfig& cuts);

// Free reduction: cancel adjacent +k,-k pairs.
std::vector<int> reduce_word(std::vector<int> w);

Curve curve_concat(const Curve& a, const Curve& b);
Curve curve_reverse(const Curve& a);

// Plain text serialization, bit-exact round trip:
//   closed 0|1
//   <re> <im>          (one vertex per line, shortest round-trip decimals)
void write_curve(std::ostream& os, const Curve& c);
Curve read_curve(std::istream& is);

} // namespace jct
