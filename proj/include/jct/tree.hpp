#pragma once
#include <vector>

#include "jct/maps.hpp"
#include "jct/words.hpp"

namespace jct {

// Star of legs from the basepoint to its d preimages.  Leg i runs from base
// to the i-th preimage x_i; legs avoid the postcritical set, and a radial is
// proper when the x_i are pairwise distinct preimages of base.
struct Radial {
    cplx base;
    std::vector<Curve> legs; // legs[i-1] is leg i

    int dsym() const { return (int)legs.size(); }
    void validate(const MapModel& m) const;
    bool proper() const;
};

// Unit-circle radial for the degree-d power map realizing the class with
// digits (n_1, ..., n_d): basepoint 1, leg i the clockwise arc through the
// angle -2 pi n_i / d (counterclockwise for negative digits).  A zero digit
// gets a small null-homotopic detour square, since legs need at least one
// segment.  Lifting leg i under x -> exp(-2 pi i x) from 0 ends at n_i / d.
Radial power_arc_radial(const MapModel& m, const std::vector<long long>& digits);

// Node of the lifted curve tree.  For a word w = w1..wk the tree holds the
// endpoints x_w (f(x_w) = x_{w2..wk}, shift equivariance) and the final curve
// piece from the node's prefix parent x_{w1..w(k-1)} to x_w; concatenating
// pieces along the prefix chain reconstructs the full lifted path l_w.
struct TreeNode {
    cplx x;
    Curve piece;
};

struct CodingTree {
    MapModel map;
    Radial r;
    int depth = 0;
    // levels[k] holds the d^k nodes of depth k (level 0 is the basepoint with
    // an empty piece); node index encodes the word in base d, first symbol
    // most significant: idx = sum (w_j - 1) * d^(k-j).
    std::vector<std::vector<TreeNode>> levels;
    double contraction = 0; // empirical arc-length shrink factor, deepest levels
    double leg_length = 0;  // max leg arc length
    // Per-level minimum of source-to-lift arc length ratios, entry k-2 for
    // level k; 0 marks a level with no nondegenerate sample.
    std::vector<double> level_shrink;

    size_t index_of(const std::vector<int>& w) const;
    // Tail envelope M with |pi(word) - x_{w<=k}| <= M * contraction^(-k),
    // valid for k >= depth (the sampled range is covered by the measured
    // per-level ratios, the rest by the asymptotic factor).
    double tail_constant() const;
};

CodingTree extend_tree(const MapModel& m, const Radial& r, int depth);

struct PiResult {
    cplx value;
    double bound;   // certified tail bound at the used depth
    int depth_used;
};

// Evaluates the coding map at an eventually periodic word by lifting the
// periodic tail deep enough that the geometric tail bound drops below eps.
// AccuracyUnreachable when the certified depth exceeds max_depth.
PiResult pi_eval(const CodingTree& t, const Word& w, double eps, int max_depth = 64);

// Level-k endpoints clustered at tolerance 1e-7: (representative, count).
std::vector<std::pair<cplx, int>> image_probe(const CodingTree& t, int level);

constexpr double kClusterTol = 1e-7;
constexpr double kShiftTol = 1e-8;

} // namespace jct
