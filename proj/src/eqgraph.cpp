#include "jct/eqgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "jct/geom.hpp"

namespace jct {

namespace {

const double kPi = 3.14159265358979323846;

// Dihedral element (s, k): z -> i^k z for s = 0, z -> i^k conj(z) for s = 1.
// B1 = (1, 0) and B2 = (1, 1), so both generators are involutions and B1*B2
// is the quarter turn, matching B1^2 = B2^2 = (B1B2)^4 = e.
struct Dih {
    int s, k;
};

int dih_enc(Dih a) { return a.s * 4 + a.k; }

Dih dih_mul(Dih a, Dih b) {
    int s = a.s ^ b.s;
    int k = b.s ? b.k - a.k : a.k + b.k;
    return {s, ((k % 4) + 4) % 4};
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

int QuotientGroup::word_class(const std::vector<int>& letters) const {
    int acc = 0;
    for (int l : letters) {
        int g = l > 0 ? l : -l;
        if (g < 1 || g > (int)gen_names.size())
            fail(Err::NumericalFailure,
                 "crossing letter " + std::to_string(l) + " is outside the generator set");
        int ge = -1;
        for (int v = 0; v < order(); ++v)
            if (words[v].size() == 1 && words[v][0] == g) {
                ge = v;
                break;
            }
        if (ge < 0)
            fail(Err::NumericalFailure, "generator missing from the element table");
        acc = mul[acc][l > 0 ? ge : inv[ge]];
    }
    return acc;
}

QuotientGroup quadcantor_quotient() {
    QuotientGroup G;
    G.gen_names = {"B1", "B2"};
    const Dih gens[2] = {{1, 0}, {1, 1}};

    std::vector<int> index_of(8, -1);
    std::vector<Dih> elems;
    auto add = [&](Dih e, std::vector<int> w) {
        index_of[dih_enc(e)] = (int)elems.size();
        elems.push_back(e);
        std::string name;
        for (int g : w) name += G.gen_names[g - 1];
        G.names.push_back(name.empty() ? "e" : name);
        G.words.push_back(std::move(w));
    };
    add({0, 0}, {});
    for (size_t at = 0; at < elems.size(); ++at) {
        Dih cur = elems[at];
        std::vector<int> w = G.words[at];
        for (int g = 1; g <= 2; ++g) {
            Dih nx = dih_mul(cur, gens[g - 1]);
            if (index_of[dih_enc(nx)] >= 0) continue;
            std::vector<int> nw = w;
            nw.push_back(g);
            add(nx, std::move(nw));
        }
    }

    int n = (int)elems.size();
    G.mul.assign(n, std::vector<int>(n, 0));
    G.inv.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            G.mul[a][b] = index_of[dih_enc(dih_mul(elems[a], elems[b]))];
            if (G.mul[a][b] == 0) G.inv[a] = b;
        }
    return G;
}

Curve generator_loop(const MapModel& m, cplx base, int k) {
    if (k < 1 || k > (int)m.post.size())
        fail(Err::NumericalFailure,
             "generator index " + std::to_string(k) + " has no puncture");
    cplx p = m.post[k - 1];

    Curve c;
    c.pts.push_back(base);
    // Vertices at 22.5 + 45 t degrees: no vertex or edge midpoint sits on the
    // vertical cut below the puncture, so crossing words stay nondegenerate.
    cplx first;
    for (int t = 0; t < 8; ++t) {
        double a = kPi / 8.0 + t * (kPi / 4.0);
        cplx v = p + kLoopRadius * cplx(std::cos(a), std::sin(a));
        if (t == 0) first = v;
        c.pts.push_back(v);
    }
    c.pts.push_back(first);
    c.pts.push_back(base);
    c.closed = true;
    c.validate();
    return c;
}

Radial build_radial(const MapModel& m, const RadialSpec& spec) {
    if (m.fam != Family::QuadCantor)
        fail(Err::FamilyMismatch, "loop-prefixed radials exist for quadcantor only");
    cplx base(0.0, 0.0);
    std::vector<cplx> ends = map_preimages(m, base);
    if (spec.prefixes.size() != ends.size())
        fail(Err::NumericalFailure,
             "radial spec needs exactly one loop prefix per leg");

    Radial r;
    r.base = base;
    for (size_t i = 0; i < ends.size(); ++i) {
        Curve leg;
        leg.pts = {base, ends[i]};
        const std::vector<int>& pre = spec.prefixes[i];
        for (auto it = pre.rbegin(); it != pre.rend(); ++it)
            leg = curve_concat(generator_loop(m, base, *it), leg);
        r.legs.push_back(std::move(leg));
    }
    r.validate(m);
    return r;
}

RadialSpec named_radial_spec(const std::string& name) {
    if (name == "r1") return RadialSpec{{{}, {}}};
    if (name == "r2") return RadialSpec{{{}, {1}}};
    if (name == "r3") return RadialSpec{{{}, {2}}}; // frozen calibrate_r3 output
    fail(Err::NumericalFailure, "unknown radial name (expected r1, r2 or r3)");
}

Radial named_radial(const MapModel& m, const std::string& name) {
    return build_radial(m, named_radial_spec(name));
}

RadialSpec calibrate_r3(const MapModel& m) {
    QuotientGroup G = quadcantor_quotient();

    // Published relation table for the third radial, as (gamma, i, j, class)
    // with canonical element indices 0 e, 2 B2, 3 B1B2, 4 B2B1, 6 B2B1B2.
    static const int table[][4] = {
        {0, 1, 1, 0}, {0, 2, 2, 0}, // e <- (11) e, (22) e
        {1, 1, 2, 2}, {1, 2, 1, 2}, // B1 <- (12) B2, (21) B2
        {2, 1, 1, 0}, {2, 2, 2, 6}, // B2 <- (11) e, (22) B2B1B2
        {3, 1, 2, 3}, {3, 2, 1, 2}, // B1B2 <- (12) B1B2, (21) B2
        {4, 1, 2, 2}, {4, 2, 1, 4}, // B2B1 <- (12) B2, (21) B2B1
        {6, 1, 2, 3}, {6, 2, 1, 4}, // B2B1B2 <- (12) B1B2, (21) B2B1
    };

    std::vector<std::vector<int>> prefix_words = {{},     {1},    {2},   {1, 1},
                                                  {1, 2}, {2, 1}, {2, 2}};
    struct Cand {
        std::vector<int> a, b;
        size_t len;
    };
    std::vector<Cand> cands;
    for (const auto& a : prefix_words)
        for (const auto& b : prefix_words)
            cands.push_back({a, b, a.size() + b.size()});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        return std::tie(x.len, x.a, x.b) < std::tie(y.len, y.a, y.b);
    });

    for (const Cand& c : cands) {
        RadialSpec spec{{c.a, c.b}};
        Radial r;
        try {
            r = build_radial(m, spec);
        } catch (const Error&) {
            continue;
        }
        bool ok = true;
        for (const auto& row : table) {
            try {
                if (classify_lift(m, G, r, r, row[0], row[1], row[2]) != row[3]) {
                    ok = false;
                    break;
                }
            } catch (const Error&) {
                ok = false;
                break;
            }
        }
        if (ok) return spec;
    }
    fail(Err::NumericalFailure,
         "no prefix assignment of length <= 2 matches the published table");
}

int classify_lift(const MapModel& m, const QuotientGroup& G, const Radial& r,
                  const Radial& rp, int gamma, int i, int j) {
    if (gamma < 0 || gamma >= G.order())
        fail(Err::NumericalFailure, "group element index out of range");
    if (i < 1 || i > r.dsym() || j < 1 || j > rp.dsym())
        fail(Err::NumericalFailure, "leg index out of range");
    if (std::abs(r.base - rp.base) != 0.0)
        fail(Err::NumericalFailure, "radials must share the basepoint");

    CutConfig cuts = m.cuts();
    cplx xi = r.legs[i - 1].end();

    // Crossing word of l_i, then of the lift of gamma's loop from x_i, then
    // of (l'_j)^-1; the concatenation represents l_i F_{x_i}(gamma) l'_j^-1.
    std::vector<int> word = crossing_word(r.legs[i - 1], cuts);
    cplx end = xi;
    if (!G.words[gamma].empty()) {
        Curve loop = generator_loop(m, r.base, G.words[gamma][0]);
        for (size_t t = 1; t < G.words[gamma].size(); ++t)
            loop = curve_concat(loop, generator_loop(m, r.base, G.words[gamma][t]));
        Curve lift = lift_curve(m, loop, xi);
        end = lift.end();
        std::vector<int> lw = crossing_word(lift, cuts);
        word.insert(word.end(), lw.begin(), lw.end());
    }

    cplx xj = rp.legs[j - 1].end();
    if (std::abs(end - xj) > kLiftCloseTol)
        fail(Err::NonClosedLift, "lift ends on the wrong fiber point");
    std::vector<int> back = crossing_word(rp.legs[j - 1], cuts);
    for (auto it = back.rbegin(); it != back.rend(); ++it) word.push_back(-*it);

    return G.word_class(reduce_word(std::move(word)));
}

EqGraph build_eq_graph(const MapModel& m, const Radial& r, const Radial& rp,
                       const QuotientGroup& G) {
    if (r.dsym() != rp.dsym())
        fail(Err::NumericalFailure, "radials must have the same number of legs");
    int d = r.dsym();

    struct Raw {
        int from, to, i, j;
    };
    std::vector<Raw> raw;
    for (int to = 0; to < G.order(); ++to)
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) {
                try {
                    int from = classify_lift(m, G, r, rp, to, i, j);
                    raw.push_back({from, to, i, j});
                } catch (const Error& e) {
                    if (e.code != Err::NonClosedLift) throw;
                }
            }

    // Keep only vertices that head an infinite path: drop any vertex whose
    // outgoing edges all point at dropped vertices, to a fixed point.
    std::vector<char> alive(G.order(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < G.order(); ++v) {
            if (!alive[v]) continue;
            bool out = false;
            for (const Raw& e : raw)
                if (e.from == v && alive[e.to]) {
                    out = true;
                    break;
                }
            if (!out) {
                alive[v] = 0;
                changed = true;
            }
        }
    }

    EqGraph g;
    g.group = G;
    g.dsym = d;
    std::vector<int> pos(G.order(), -1);
    for (int v = 0; v < G.order(); ++v)
        if (alive[v]) {
            pos[v] = (int)g.verts.size();
            g.verts.push_back(v);
        }
    if (g.verts.empty())
        fail(Err::EmptyGraph, "every candidate vertex lost its outgoing edges");
    for (const Raw& e : raw)
        if (alive[e.from] && alive[e.to])
            g.edges.push_back({pos[e.from], pos[e.to], e.i, e.j});
    std::sort(g.edges.begin(), g.edges.end(), [](const EqEdge& a, const EqEdge& b) {
        return std::tie(a.from, a.to, a.i, a.j) < std::tie(b.from, b.to, b.i, b.j);
    });
    return g;
}

namespace {

std::uint32_t subset_step(const EqGraph& g, std::uint32_t mask, int i, int j) {
    std::uint32_t out = 0;
    for (const EqEdge& e : g.edges)
        if (e.i == i && e.j == j && (mask >> e.from & 1u)) out |= 1u << e.to;
    return out;
}

} // namespace

bool relation_decide(const EqGraph& g, const Word& w, const Word& wp) {
    if ((int)g.verts.size() > 30)
        fail(Err::NumericalFailure, "subset automaton limited to 30 vertices");
    std::uint32_t mask = (std::uint32_t(1) << g.verts.size()) - 1;

    if (!w.infinite() || !wp.infinite()) {
        if (w.infinite() != wp.infinite())
            fail(Err::Inconclusive,
                 "finite against infinite word: undecided beyond the finite depth");
        size_t n = std::min(w.pre.size(), wp.pre.size());
        for (size_t k = 0; k < n && mask; ++k)
            mask = subset_step(g, mask, w.at(k), wp.at(k));
        if (!mask) return false;
        fail(Err::Inconclusive,
             "live paths remain at the end of the finite words: undecided");
    }

    size_t p = std::max(w.pre.size(), wp.pre.size());
    size_t q = std::lcm(w.per.size(), wp.per.size());
    if (q > 1000000)
        fail(Err::NumericalFailure, "combined period too large");

    for (size_t k = 0; k < p && mask; ++k)
        mask = subset_step(g, mask, w.at(k), wp.at(k));

    // Subsets at period boundaries evolve by a fixed monotone map, so a
    // repeated nonempty subset proves an infinite path exists (the graph is
    // finitely branching) and the empty subset is absorbing.
    std::vector<char> seen(std::size_t(1) << g.verts.size(), 0);
    size_t k = p;
    while (mask && !seen[mask]) {
        seen[mask] = 1;
        for (size_t t = 0; t < q && mask; ++t, ++k)
            mask = subset_step(g, mask, w.at(k), wp.at(k));
    }
    return mask != 0;
}

MultClassifyReport multiplicity_classify(const EqGraph& g, long long samples,
                                         int depth, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be positive");
    if (depth < 3 || depth > 4096) throw std::invalid_argument("depth out of range");
    int nv = (int)g.verts.size();
    if (nv > 20)
        fail(Err::NumericalFailure, "subset automaton limited to 20 vertices");
    int d = g.dsym;
    std::size_t nmask = std::size_t(1) << nv;

    std::vector<std::uint32_t> succ((size_t)nv * d * d, 0);
    for (const EqEdge& e : g.edges)
        succ[((size_t)e.from * d + (e.i - 1)) * d + (e.j - 1)] |= std::uint32_t(1) << e.to;
    auto step = [&](std::uint32_t mask, int i, int j) {
        std::uint32_t out = 0;
        for (int v = 0; v < nv; ++v)
            if (mask >> v & 1u) out |= succ[((size_t)v * d + (i - 1)) * d + (j - 1)];
        return out;
    };

    MultClassifyReport rep;
    rep.depth = depth;
    rep.margin = std::min(40, 2 * depth / 3);
    rep.window = depth - rep.margin;
    rep.samples = samples;
    rep.seed = seed;

    // Divergence closure: vertices reachable after the companion has once
    // differed from the sample.  A label word that kills every subset path
    // out of the closure certifies multiplicity 1 for any word containing
    // it infinitely often.
    std::uint32_t div = 0;
    for (const EqEdge& e : g.edges)
        if (e.i != e.j) div |= std::uint32_t(1) << e.to;
    for (bool changed = true; changed;) {
        changed = false;
        for (const EqEdge& e : g.edges)
            if ((div >> e.from & 1u) && !(div >> e.to & 1u)) {
                div |= std::uint32_t(1) << e.to;
                changed = true;
            }
    }
    rep.diverged_reachable = div != 0;
    if (div) {
        struct Node {
            std::uint32_t mask;
            std::string word;
        };
        std::vector<Node> layer = {{div, ""}};
        for (int len = 1; len <= 5 && !layer.empty(); ++len) {
            std::vector<Node> next;
            for (const Node& nd : layer)
                for (int sym = 1; sym <= d; ++sym) {
                    std::uint32_t mm = 0;
                    for (int j = 1; j <= d; ++j) mm |= step(nd.mask, sym, j);
                    std::string word = nd.word + char('0' + sym);
                    if (mm == 0)
                        rep.certificates.push_back(word); // prefix-minimal: stop here
                    else
                        next.push_back({mm, word});
                }
            layer = std::move(next);
        }
    }

    // Per sample: companion count = number of distinct window prefixes whose
    // subset survives the remaining depth - window letters.
    std::vector<int> syms(depth);
    std::vector<char> live(nmask), live_next(nmask);
    std::vector<long long> cnt(nmask), cnt_next(nmask);
    std::map<long long, long long> hist;
    long long max_seen = 0;

    for (long long s = 0; s < samples; ++s) {
        std::uint64_t state = seed + (std::uint64_t)s * 0x9E3779B97F4A7C15ull;
        for (int k = 0; k < depth; ++k)
            syms[k] = (int)((splitmix64(state) >> 33) % (std::uint64_t)d) + 1;

        for (std::size_t msk = 0; msk < nmask; ++msk) live[msk] = msk != 0;
        for (int k = depth - 1; k >= rep.window; --k) {
            for (std::size_t msk = 1; msk < nmask; ++msk) {
                char ok = 0;
                for (int j = 1; j <= d && !ok; ++j)
                    ok = live[step((std::uint32_t)msk, syms[k], j)];
                live_next[msk] = ok;
            }
            live_next[0] = 0;
            std::swap(live, live_next);
        }

        std::fill(cnt.begin(), cnt.end(), 0);
        cnt[nmask - 1] = 1;
        for (int k = 0; k < rep.window; ++k) {
            std::fill(cnt_next.begin(), cnt_next.end(), 0);
            for (std::size_t msk = 1; msk < nmask; ++msk)
                if (cnt[msk])
                    for (int j = 1; j <= d; ++j)
                        cnt_next[step((std::uint32_t)msk, syms[k], j)] += cnt[msk];
            std::swap(cnt, cnt_next);
        }

        long long total = 0;
        for (std::size_t msk = 1; msk < nmask; ++msk)
            if (live[msk]) total += cnt[msk];
        ++hist[total];
        max_seen = std::max(max_seen, total);
    }

    long long modal = 0, modal_freq = -1;
    for (const auto& kv : hist)
        if (kv.second > modal_freq) {
            modal = kv.first;
            modal_freq = kv.second;
        }
    rep.almost_sure = (int)modal;
    rep.max_observed = (int)max_seen;
    rep.modal_share = (double)modal_freq / (double)samples;
    if (rep.modal_share < 0.95)
        fail(Err::Inconclusive, "no class size reaches a 95% share of the samples");
    return rep;
}

void write_eq_dot(std::ostream& os, const EqGraph& g) {
    os << "digraph eqgraph {\n";
    for (int v = 0; v < (int)g.verts.size(); ++v)
        os << "  \"" << g.vert_name(v) << "\";\n";
    for (const EqEdge& e : g.edges)
        os << "  \"" << g.vert_name(e.from) << "\" -> \"" << g.vert_name(e.to)
           << "\" [label=\"" << e.i << "|" << e.j << "\"];\n";
    os << "}\n";
}

} // namespace jct
