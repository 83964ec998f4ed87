#pragma once
#include <optional>
#include <string>
#include <vector>

#include "jct/geom.hpp"

namespace jct {

enum class Family { Power, Chebyshev, Lattes, QuadCantor };

std::string family_token(Family f, int degree); // "power:2", "lattes", ...
// Parses "power:d", "cheb:d", "lattes", "quadcantor"; UnsupportedFamily on
// anything else.
void parse_family(const std::string& tok, Family& fam, int& degree);

// Point on the sphere: finite value or infinity.
struct PointE {
    bool inf = false;
    cplx z{};
    static PointE infinity() { return {true, {}}; }
    static PointE at(cplx v) { return {false, v}; }
};

// Eventually periodic orbit data for a critical point: f^(preperiod+period)
// agrees with f^(preperiod) within 1e-10, or the orbit is attracted to
// infinity (escapes the window and keeps growing).
struct OrbitCertificate {
    PointE start;
    std::vector<PointE> orbit; // start, f(start), ... up to preperiod+period
    int preperiod = 0;
    int period = 0;
    bool to_infinity = false;
    double residual = 0; // |f^(k+p) - f^k| for the periodic case
};

// One of the four map families with its critical/postcritical data.
struct MapModel {
    Family fam;
    int degree;
    std::vector<cplx> crit;     // finite critical points
    bool crit_inf = false;      // infinity is critical
    std::vector<cplx> crit_val; // finite critical values (lift targets to avoid)
    std::vector<cplx> post;     // finite postcritical points inside the window
    bool post_inf = false;
    std::vector<cplx> attracting; // finite attracting postcritical points
    bool attracting_inf = false;
    std::vector<OrbitCertificate> certs;
    double window_radius = 100.0;

    CutConfig cuts() const { return CutConfig{post}; }
};

MapModel make_map(Family fam, int degree);
MapModel make_map(const std::string& token);

// f(z); PoleAtInput if z is a pole.
cplx map_eval(const MapModel& m, cplx z);
// All degree preimages of w, repeated per multiplicity, polished so that
// |f(z) - w| <= 1e-10 * (1 + |w|).
std::vector<cplx> map_preimages(const MapModel& m, cplx w);

// Lift of l through f starting at the preimage x0 of l.start: the unique
// continuous curve with f(lift) = l and lift.start = x0.  Requires
// |f(x0) - l.start| <= 1e-9.  Steps adapt: the tracked root must be at least
// three times closer than the runner-up or the step halves (BranchAmbiguity
// at the floor).  Points of l closer than 1e-4 to a critical value raise
// CriticalValueProximity; lifts leaving |z| <= window_radius raise
// WindowEscape.
Curve lift_curve(const MapModel& m, const Curve& l, cplx x0);

constexpr double kCritValEps = 1e-4;
constexpr double kLiftStartEps = 1e-9;

} // namespace jct
