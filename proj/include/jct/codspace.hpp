#pragma once
#include <string>
#include <vector>

#include "jct/maps.hpp"
#include "jct/rational.hpp"

namespace jct {

// Radial class: the ordered list of lifted leg endpoints on the orbifold
// cover, in leg order.  Entries are stored decoded per family:
//   power:d      integer n_i; the endpoint upstairs is n_i/d and the lifted
//                inverse branch is z -> (z + n_i)/d
//   cheb:2       (eps_i, n_i), eps = +-1; endpoint eps/4 + n, branch
//                z -> eps z/2 + n
//   lattes       (alpha_i = i^rot_i, beta_i in (1+i)Z[i]); endpoint
//                alpha/2 + beta, branch z -> (1-i) alpha z/2 + beta
// quadcantor has a hyperbolic (free) cover and no class catalog.
struct RadialClass {
    Family fam;
    int degree = 2;
    std::vector<long long> n;  // power, cheb
    std::vector<int> eps;      // cheb
    std::vector<int> rot;      // lattes: alpha = i^rot
    std::vector<GRat> beta;    // lattes
    int count() const;
    // Lifted endpoint of entry i (0-based).
    GRat entry_point(int i) const;
    std::string str() const;
};

// Parse a comma-separated entry list such as "0,3" (power), "1/4,-1/4+1"
// (cheb), "i/2,1/2+1+i" (lattes).  Each entry is a Gaussian rational written
// as a +-separated sum of terms n, n/m, i, n*i/m.
RadialClass parse_class(const std::string& family_tok, const std::string& entries);
RadialClass class_from_points(Family fam, int degree, const std::vector<GRat>& pts);

// Deck transformation of the orbifold cover in the normal form used by the
// class action:
//   power:d   z -> z + n            (n integer)
//   cheb:2    z -> a z + 2n         (a = +-1, n integer)
//   lattes    z -> a z + 2b         (a = i^rot, b in Z[i])
struct DeckAction {
    Family fam;
    int degree = 2;
    long long n = 0; // power, cheb
    int a = 1;       // cheb: +-1
    int rot = 0;     // lattes
    GRat b;          // lattes
};

RadialClass deck_act(const DeckAction& t, const RadialClass& c);

// The unit attached to a lattes branch rotation: 2 - (1-i) i^rot.  Branch
// fixed points are beta / lattes_divisor(rot), and deck translations act on
// beta through it.
GRat lattes_divisor(int rot);

// Whether the class codes a degenerate (single point) image.
bool class_degenerate(const RadialClass& c);

// Exact decision: same deck orbit?  FamilyMismatch when families or degrees
// differ; DegenerateClass when either side is degenerate (outside the
// coding-class catalog).
bool cod_equal(const RadialClass& a, const RadialClass& b);

// Distinguished orbit representative (idempotent, orbit-constant).
RadialClass canonical_form(const RadialClass& c);

// Degree-changing monoid action on power classes: (m,k) sends n_i to
// k n_i + m; k >= 1.  Multiplicities scale by k.
RadialClass power_monoid_act(long long m, long long k, const RadialClass& c);

// Multiplicity of the class as an exact integer where a closed form exists
// (power:2 interval length).
long long power_mul(const RadialClass& c);

} // namespace jct
