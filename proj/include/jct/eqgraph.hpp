#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jct/maps.hpp"
#include "jct/tree.hpp"
#include "jct/words.hpp"

namespace jct {

// Finite quotient of the fundamental group of the punctured plane by the
// subgroup of loops whose every iterated lift closes.  For QuadCantor the
// generators are B1 (loop around -3) and B2 (around 6) with relations
// B1^2 = B2^2 = (B1B2)^4 = e, giving the dihedral group of order 8.
// Elements are indexed in shortest-word breadth-first order from the
// identity, so index 0 is "e" and names are canonical reduced words.
struct QuotientGroup {
    std::vector<std::string> gen_names;  // {"B1", "B2"}
    std::vector<std::string> names;      // canonical label per element
    std::vector<std::vector<int>> words; // canonical generator letters per element
    std::vector<std::vector<int>> mul;   // mul[a][b] = index of a*b
    std::vector<int> inv;                // index of the inverse per element

    int order() const { return (int)names.size(); }
    // Class of a signed generator word such as a reduced crossing word;
    // letter -k is the inverse of generator k.
    int word_class(const std::vector<int>& letters) const;
};

QuotientGroup quadcantor_quotient();

// Octagonal loop around the k-th puncture (1-based index into the map's
// postcritical list), based at `base`: a straight spoke to the vertex at
// 22.5 degrees, the octagon counterclockwise, and the spoke back.  The
// radius keeps every point well clear of the critical values, so the loop
// lifts without proximity errors.
constexpr double kLoopRadius = 0.4;
Curve generator_loop(const MapModel& m, cplx base, int k);

// Radial described by per-leg loop prefixes: leg i traverses the listed
// generator loops and then runs straight to the i-th preimage of the
// basepoint.  QuadCantor radials are based at 0 with legs to +-sqrt(3).
struct RadialSpec {
    std::vector<std::vector<int>> prefixes; // prefixes[i-1]: loops before leg i
};

Radial build_radial(const MapModel& m, const RadialSpec& spec);

// The three published QuadCantor radials.  r1 = straight legs; r2 = the B1
// loop before leg 2; r3 = the B2 loop before leg 2.  The r3 prefix is frozen
// from calibrate_r3, which searches all per-leg prefix words of length <= 2
// and keeps the first assignment (shortest, then lexicographic) whose
// classification table reproduces the published relation table.
RadialSpec named_radial_spec(const std::string& name);
Radial named_radial(const MapModel& m, const std::string& name);
RadialSpec calibrate_r3(const MapModel& m);

// Class of l_i * F_{x_i}(gamma) * (l'_j)^{-1} in the quotient group, where
// F_{x_i}(gamma) is the lift of the loop of `gamma` starting at the i-th leg
// endpoint of r.  NonClosedLift when the lift does not end at the j-th leg
// endpoint of r' (the (i, j) pair fights the monodromy; callers treat this
// as "no edge").  i and j are 1-based.
constexpr double kLiftCloseTol = 1e-9;
int classify_lift(const MapModel& m, const QuotientGroup& G, const Radial& r,
                  const Radial& rp, int gamma, int i, int j);

// Equivalence-recognizing graph: edge cls -> gamma' with weight (i, j)
// whenever classify_lift(r, r', gamma', i, j) = cls, pruned so every vertex
// keeps an outgoing edge.  pi_r(w) = pi_r'(w') holds iff the graph carries
// an infinite path whose k-th edge is labeled (w_k, w'_k).
struct EqEdge {
    int from = 0, to = 0; // positions in verts
    int i = 0, j = 0;     // symbol labels, 1-based
};

struct EqGraph {
    QuotientGroup group;
    int dsym = 2;
    std::vector<int> verts;   // group element indices, canonical order
    std::vector<EqEdge> edges; // sorted by (from, to, i, j)

    const std::string& vert_name(int v) const { return group.names[verts[v]]; }
};

EqGraph build_eq_graph(const MapModel& m, const Radial& r, const Radial& rp,
                       const QuotientGroup& G);

// Exact decision of pi_r(w) = pi_r'(w') for eventually periodic words: run
// the label-driven subset automaton from the full vertex set and detect a
// repeating nonempty subset at period boundaries.
bool relation_decide(const EqGraph& g, const Word& w, const Word& wp);

// Monte Carlo fiber-size classification plus the structural singleton
// certificate search.  Each sample is a uniform word of length `depth`; the
// sample's class size is the number of distinct companion prefixes over the
// first depth - margin positions among companions surviving the automaton
// to full depth (margin = min(40, 2 depth / 3) discards trailing
// divergences that never represent a second preimage).  Certificates are
// the prefix-minimal label words of length <= 5 that empty the
// divergence-closure subset automaton: an omega containing one infinitely
// often has a singleton fiber.  Inconclusive when the modal class size
// carries less than 95% of the samples.
struct MultClassifyReport {
    int almost_sure = 0;   // modal class size
    int max_observed = 0;
    double modal_share = 0;
    int depth = 0, window = 0, margin = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
    bool diverged_reachable = false;      // some off-diagonal edge is usable
    std::vector<std::string> certificates; // sorted by length then lex
};

MultClassifyReport multiplicity_classify(const EqGraph& g, long long samples,
                                         int depth, std::uint64_t seed);

// DOT emission with canonical vertex order; edges labeled "i|j".
void write_eq_dot(std::ostream& os, const EqGraph& g);

} // namespace jct
