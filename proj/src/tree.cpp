#include "jct/tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jct {

std::string Word::str() const {
    std::string s;
    for (int v : pre) s += char('0' + v);
    if (!per.empty()) {
        if (!pre.empty()) s += '.';
        for (int v : per) s += char('0' + v);
        s += '^';
    }
    return s;
}

Word parse_word(const std::string& s, int dsym) {
    if (s.empty()) throw std::invalid_argument("empty word");
    Word w;
    std::vector<int>* cur = &w.pre;
    bool caret = false;
    std::vector<int> head, tail;
    cur = &head;
    for (char ch : s) {
        if (ch == '.') {
            if (cur == &tail) throw std::invalid_argument("multiple '.' in word");
            cur = &tail;
        } else if (ch == '^') {
            if (caret) throw std::invalid_argument("multiple '^' in word");
            caret = true;
        } else if (ch >= '1' && ch <= '9') {
            if (caret) throw std::invalid_argument("digits after '^'");
            int v = ch - '0';
            if (v > dsym) throw std::invalid_argument("symbol out of range for this map");
            cur->push_back(v);
        } else {
            throw std::invalid_argument(std::string("bad character '") + ch + "' in word");
        }
    }
    if (cur == &tail) {
        // explicit preperiod "u.v^"
        if (!caret) throw std::invalid_argument("'.' requires a periodic tail");
        if (tail.empty()) throw std::invalid_argument("empty period");
        w.pre = head;
        w.per = tail;
    } else if (caret) {
        if (head.empty()) throw std::invalid_argument("empty period");
        w.per = head;
    } else {
        w.pre = head;
    }
    return w;
}

void Radial::validate(const MapModel& m) const {
    if ((int)legs.size() != m.degree)
        fail(Err::NumericalFailure, "radial needs one leg per preimage");
    for (const Curve& l : legs) {
        l.validate();
        if (std::abs(l.start() - base) > kConcatEps)
            fail(Err::NumericalFailure, "radial leg does not start at the basepoint");
        if (std::abs(map_eval(m, l.end()) - base) > kLiftStartEps)
            fail(Err::NumericalFailure, "radial leg does not end on the basepoint fiber");
        for (const cplx& p : m.post)
            if (l.distance_to(p) < kPunctureEps)
                fail(Err::NumericalFailure, "radial leg meets the postcritical set");
    }
}

bool Radial::proper() const {
    for (size_t i = 0; i < legs.size(); ++i)
        for (size_t j = i + 1; j < legs.size(); ++j)
            if (std::abs(legs[i].end() - legs[j].end()) < kLiftStartEps) return false;
    return true;
}

Radial power_arc_radial(const MapModel& m, const std::vector<long long>& digits) {
    if (m.fam != Family::Power)
        fail(Err::FamilyMismatch, "arc radials exist for power maps only");
    if ((int)digits.size() != m.degree)
        fail(Err::InvalidClassEntry, "need one digit per symbol of the power map");
    const double kTau = 6.28318530717958647692;

    Radial r;
    r.base = cplx(1.0, 0.0);
    for (long long n : digits) {
        Curve leg;
        if (n == 0) {
            const double e = 0.05;
            leg.pts = {cplx(1, 0), cplx(1 + e, 0), cplx(1 + e, e), cplx(1, e),
                       cplx(1, 0)};
        } else {
            // Enough samples that consecutive points subtend well under the
            // branch-separation angle at the origin.
            long long steps = 16 * (std::llabs(n) + m.degree) / m.degree;
            for (long long t = 0; t <= steps; ++t) {
                double a = -kTau * (double)n * (double)t / ((double)m.degree * steps);
                leg.pts.push_back(std::polar(1.0, a));
            }
        }
        r.legs.push_back(std::move(leg));
    }
    r.validate(m);
    return r;
}

size_t CodingTree::index_of(const std::vector<int>& w) const {
    size_t idx = 0;
    int d = r.dsym();
    for (int s : w) idx = idx * d + (size_t)(s - 1);
    return idx;
}

namespace {
// Safety discount on a measured shrink ratio, always toward the unsafe side.
double discounted(double r) { return std::min(r, 1.0 + 0.9 * (r - 1.0)); }
} // namespace

double CodingTree::tail_constant() const {
    if (contraction <= 1.0)
        return 0; // no certificate available
    // The deepest sampled pieces have length at most
    //     L = leg_length / prod_j discounted(level_shrink[j]),
    // and past the sampled depth every further level shrinks by at least the
    // asymptotic factor c, so the tail beyond k >= depth sums to
    //     L * c^(depth - k) * c / (c - 1) = M * c^(-k).
    double L = leg_length;
    for (double r : level_shrink)
        if (r > 0) L /= discounted(r);
    return L * std::pow(contraction, (double)depth) * contraction /
           (contraction - 1.0);
}

CodingTree extend_tree(const MapModel& m, const Radial& r, int depth) {
    r.validate(m);
    CodingTree t;
    t.map = m;
    t.r = r;
    t.depth = depth;
    int d = r.dsym();

    t.levels.resize(depth + 1);
    t.levels[0].push_back(TreeNode{r.base, Curve{}});
    if (depth >= 1) {
        for (int i = 0; i < d; ++i)
            t.levels[1].push_back(TreeNode{r.legs[i].end(), r.legs[i]});
    }
    size_t pow_prev = d; // d^(k-1)
    for (int k = 2; k <= depth; ++k) {
        size_t count = pow_prev * d;
        t.levels[k].reserve(count);
        for (size_t idx = 0; idx < count; ++idx) {
            size_t parent = idx / d;          // w1..w(k-1)
            size_t shifted = idx % pow_prev;  // w2..wk
            const TreeNode& par = t.levels[k - 1][parent];
            const TreeNode& src = t.levels[k - 1][shifted];
            Curve piece = lift_curve(m, src.piece, par.x);
            t.levels[k].push_back(TreeNode{piece.end(), std::move(piece)});
        }
        pow_prev = count;
    }

    for (const Curve& l : r.legs) t.leg_length = std::max(t.leg_length, l.length());

    // One-level expansion: each piece is a lift of the piece of its shift
    // image, so source-to-lift arc length ratios sample |f'| along the tree.
    // Length is the right quantity here: a detour loop around a puncture has
    // a tiny chord but opens into a wide arc under one lift, so chord ratios
    // of such pieces dip below 1 even though length ratios stay above the
    // expansion floor.  The per-level minima are kept separately because the
    // shallow levels still carry transients of the legs' detours (a loop
    // around a postcritical point lifts through the branch point two levels
    // later, where |f'| is small); the asymptotic factor is read off the
    // deepest two sampled levels, which sit at the expansion floor of the
    // Julia neighborhood.
    size_t pw = d;
    for (int k = 2; k <= depth; ++k) {
        double mn = 1e300;
        for (size_t idx = 0; idx < t.levels[k].size(); ++idx) {
            double dc = t.levels[k][idx].piece.length();
            double dp = t.levels[k - 1][idx % pw].piece.length();
            if (dc > 0 && dp > 0) mn = std::min(mn, dp / dc);
        }
        t.level_shrink.push_back(mn == 1e300 ? 0.0 : mn);
        pw *= d;
    }
    double tailmin = 1e300;
    int seen = 0;
    for (size_t i = t.level_shrink.size(); i-- > 0 && seen < 2;)
        if (t.level_shrink[i] > 0) {
            tailmin = std::min(tailmin, t.level_shrink[i]);
            ++seen;
        }
    t.contraction = seen ? 1.0 + 0.9 * (tailmin - 1.0) : 0.0;
    return t;
}

PiResult pi_eval(const CodingTree& t, const Word& w, double eps, int max_depth) {
    if (!w.infinite())
        fail(Err::NumericalFailure, "pi_eval needs an eventually periodic word");
    double c = t.contraction;
    double M = t.tail_constant();
    if (c <= 1.0005 || M <= 0)
        fail(Err::AccuracyUnreachable,
             "no expansion certificate for this tree (empirical factor <= 1)");
    int k = 1;
    while (M * std::pow(c, -k) > eps) {
        ++k;
        if (k > max_depth)
            fail(Err::AccuracyUnreachable,
                 "certified depth " + std::to_string(k) + " exceeds max depth " +
                     std::to_string(max_depth));
    }
    // Build l_{w1..wk} right to left: prepend leg w_j and lift the suffix.
    const Radial& r = t.r;
    Curve cur = r.legs[w.at(k - 1) - 1];
    for (int j = k - 2; j >= 0; --j) {
        int sym = w.at(j);
        Curve lifted = lift_curve(t.map, cur, r.legs[sym - 1].end());
        cur = curve_concat(r.legs[sym - 1], lifted);
    }
    return PiResult{cur.end(), M * std::pow(c, -k), k};
}

std::vector<std::pair<cplx, int>> image_probe(const CodingTree& t, int level) {
    if (level < 0 || level > t.depth)
        fail(Err::NumericalFailure, "image_probe level outside stored depth");
    std::vector<std::pair<cplx, int>> clusters;
    for (const TreeNode& n : t.levels[level]) {
        bool found = false;
        for (auto& cl : clusters) {
            if (std::abs(cl.first - n.x) <= kClusterTol) {
                ++cl.second;
                found = true;
                break;
            }
        }
        if (!found) clusters.push_back({n.x, 1});
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return clusters;
}

} // namespace jct
