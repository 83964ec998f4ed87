#include "jct/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jct/codspace.hpp"
#include "jct/eqgraph.hpp"
#include "jct/error.hpp"
#include "jct/ifs.hpp"
#include "jct/maps.hpp"
#include "jct/tree.hpp"
#include "jct/words.hpp"

namespace jct {

namespace {

using nlohmann::json;

constexpr long kDefaultRes = 512;
constexpr int kDefaultDepth = 40;
constexpr int kDefaultEvalDepth = 64; // pi_eval certified-depth cap
constexpr std::uint64_t kDefaultSeed = 0xC0D1A6;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt_hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", (unsigned long long)v);
    return buf;
}

// key = value lines as they accumulate, then one JSON block with the same
// content for machines.  The header repeats the subcommand's defaults so a
// bare invocation is reproducible from the report alone.
struct Report {
    std::ostream& out;
    json j;

    Report(std::ostream& os, const std::string& sub, long res_def, int depth_def)
        : out(os) {
        out << "# jct " << sub << "\n";
        out << "# defaults: res = " << res_def << ", depth = " << depth_def
            << ", seed = " << fmt_hex(kDefaultSeed) << "\n";
        j["subcommand"] = sub;
    }
    void kv(const std::string& k, const std::string& v) {
        out << k << " = " << v << "\n";
        j[k] = v;
    }
    void kv(const std::string& k, const char* v) { kv(k, std::string(v)); }
    void kv(const std::string& k, double v) {
        out << k << " = " << fmt(v) << "\n";
        j[k] = v;
    }
    void kv(const std::string& k, long long v) {
        out << k << " = " << v << "\n";
        j[k] = v;
    }
    void kv(const std::string& k, long v) { kv(k, (long long)v); }
    void kv(const std::string& k, int v) { kv(k, (long long)v); }
    void kv(const std::string& k, bool v) {
        out << k << " = " << (v ? "true" : "false") << "\n";
        j[k] = v;
    }
    void finish() { out << "\n" << j.dump(2) << "\n"; }
};

std::uint64_t parse_seed(const std::string& s) {
    try {
        size_t used = 0;
        std::uint64_t v = std::stoull(s, &used, 0);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seed", "not an integer: '" + s + "'");
    }
}

std::vector<double> parse_window(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--window", "not a number: '" + part + "'");
        }
    }
    if (v.size() != 4)
        throw CLI::ValidationError("--window", "expected x0,y0,x1,y1");
    return v;
}

std::vector<long long> parse_digits(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stoll(part, &used, 10));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--class", "not an integer digit: '" + part + "'");
        }
    }
    return v;
}

// --config support: the file holds the same long flags as key = value lines.
// Its entries are spliced in right after the subcommand tokens, so explicit
// command-line flags come later and win (every option takes the last value).
void splice_config(std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size())
                throw CLI::ValidationError("--config", "missing file path");
            path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
        } else {
            rest.push_back(a);
        }
    }
    if (path.empty()) return;

    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open '" + path + "'");
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key = value: '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        if (key.empty())
            throw CLI::ValidationError("--config", "empty key in '" + line + "'");
        extra.push_back("--" + key + "=" + val);
    }

    // Subcommand tokens are the leading non-flag words.
    size_t cut = 0;
    while (cut < rest.size() && rest[cut].rfind("-", 0) != 0) ++cut;
    args.assign(rest.begin(), rest.begin() + cut);
    args.insert(args.end(), extra.begin(), extra.end());
    args.insert(args.end(), rest.begin() + cut, rest.end());
}

std::string class_token(const LiftedIFS& s) { return s.cls.str(); }

// Tree storage depth for contraction sampling: at least three levels, at
// most about d^depth = 4096 stored curves.
int eval_tree_depth(int degree) {
    int depth = 3;
    long long count = (long long)degree * degree * degree;
    while (count * degree <= 4096) {
        count *= degree;
        ++depth;
    }
    return depth;
}

struct TileArgs {
    std::string family, cls;
    long res = kDefaultRes;
    std::string out_path = "tile.pgm";
    std::string window = "0,0,4,4";
};

struct EvalArgs {
    std::string map, radial, cls, word;
    double eps = 1e-8;
    int depth = kDefaultEvalDepth;
};

struct GrowthArgs {
    std::string family, cls;
    int kmax = 12;
};

struct GraphArgs {
    std::string map = "quadcantor";
    std::string radial = "r1", radial2;
    std::string word, word2;
    std::string out_path = "eqgraph.dot";
    long long samples = 10000;
    int depth = kDefaultDepth;
    std::string seed = "0xc0d1a6";
};

struct CodArgs {
    std::string family, a, b;
};

Radial eval_radial(const MapModel& m, const EvalArgs& a) {
    if (m.fam == Family::QuadCantor) {
        if (a.radial.empty())
            fail(Err::UnsupportedFamily, "quadcantor evaluation needs --radial");
        return named_radial(m, a.radial);
    }
    if (m.fam == Family::Power) {
        if (a.cls.empty())
            fail(Err::UnsupportedFamily, "power evaluation needs --class digits");
        return power_arc_radial(m, parse_digits(a.cls));
    }
    fail(Err::UnsupportedFamily,
         "code eval covers quadcantor radials and power arc classes; " +
             family_token(m.fam, m.degree) + " has no curve model here");
}

int do_tile_render(std::ostream& out, const TileArgs& a) {
    RadialClass c = parse_class(a.family, a.cls);
    LiftedIFS s = lift_radial_class(c);
    TileRaster r = attractor_raster(s, a.res);
    write_pgm(r, s, a.out_path);

    Report rep(out, "tile render", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("class", class_token(s));
    rep.kv("res", a.res);
    rep.kv("box", "[" + fmt((double)r.ix0 / r.res) + ", " + fmt((double)r.iy0 / r.res) +
                      "] to [" + fmt((double)(r.ix0 + r.w) / r.res) + ", " +
                      fmt((double)(r.iy0 + r.h) / r.res) + "]");
    rep.kv("width_px", r.w);
    rep.kv("height_px", r.h);
    rep.kv("iterations", r.iterations);
    rep.kv("converged", r.converged);
    rep.kv("outer_px", r.outer_count());
    rep.kv("inner_px", r.inner_count());
    rep.kv("out", a.out_path);
    rep.finish();
    return 0;
}

int do_tile_measure(std::ostream& out, const TileArgs& a) {
    RadialClass c = parse_class(a.family, a.cls);
    LiftedIFS s = lift_radial_class(c);

    Report rep(out, "tile measure", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("class", class_token(s));
    rep.kv("res", a.res);
    try {
        ClosedForm cf = closed_form_measure(c);
        rep.kv("closed_form", cf.measure.str());
        if (cf.has_interval)
            rep.kv("closed_form_interval",
                   "[" + cf.lo.str() + ", " + cf.hi.str() + "]");
    } catch (const Error& e) {
        if (e.code != Err::UnsupportedFamily) throw;
        rep.kv("closed_form", "none");
    }
    MeasureReport m = measure_estimate(s, a.res);
    rep.kv("measure_estimate", m.value);
    rep.kv("lower", m.lower);
    rep.kv("upper", m.upper);
    rep.kv("value_2res", m.value2);
    rep.kv("lower_2res", m.lower2);
    rep.kv("upper_2res", m.upper2);
    rep.kv("richardson", m.richardson);
    rep.finish();
    return 0;
}

int do_tile_tiling(std::ostream& out, const TileArgs& a) {
    RadialClass c = parse_class(a.family, a.cls);
    LiftedIFS s = lift_radial_class(c);
    std::vector<double> w = parse_window(a.window);
    TilingReport t = tiling_check(s, w[0], w[1], w[2], w[3], a.res);

    Report rep(out, "tile check-tiling", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("class", class_token(s));
    rep.kv("res", a.res);
    rep.kv("window", a.window);
    rep.kv("window_px", t.window_px);
    rep.kv("coverage", t.coverage);
    rep.kv("overlap", t.overlap);
    rep.kv("tiles", (long long)t.tiles.size());
    std::string names;
    json jt = json::array();
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        std::string e = t.tiles[i].str(c.fam);
        jt.push_back(e);
        if (i < 12) names += (i ? ", " : "") + e;
    }
    if (t.tiles.size() > 12) names += ", ...";
    rep.kv("tile_list", names);
    rep.j["tile_list"] = jt;
    rep.finish();
    return 0;
}

int do_tile_mult(std::ostream& out, const TileArgs& a) {
    RadialClass c = parse_class(a.family, a.cls);
    MultReport m = multiplicity_estimate(c, a.res);

    Report rep(out, "tile multiplicity", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("class", c.str());
    rep.kv("res", m.res);
    rep.kv("multiplicity", m.n);
    rep.kv("gap", m.gap);
    rep.kv("measure_crosscheck", m.measure);
    rep.finish();
    return 0;
}

int do_code_eval(std::ostream& out, const EvalArgs& a) {
    MapModel m = make_map(a.map);
    Radial r = eval_radial(m, a);
    CodingTree t = extend_tree(m, r, eval_tree_depth(m.degree));
    Word w = parse_word(a.word, m.degree);
    PiResult p = pi_eval(t, w, a.eps, a.depth);

    Report rep(out, "code eval", kDefaultRes, kDefaultEvalDepth);
    rep.kv("map", a.map);
    if (!a.radial.empty()) rep.kv("radial", a.radial);
    if (!a.cls.empty()) rep.kv("class", a.cls);
    rep.kv("word", w.str());
    rep.kv("eps", a.eps);
    rep.kv("point", "(" + fmt(p.value.real()) + ", " + fmt(p.value.imag()) + ")");
    rep.j["point_re"] = p.value.real();
    rep.j["point_im"] = p.value.imag();
    rep.kv("bound", p.bound);
    rep.kv("depth_used", p.depth_used);
    rep.kv("contraction", t.contraction);
    rep.finish();
    return 0;
}

int do_code_growth(std::ostream& out, const GrowthArgs& a) {
    RadialClass c = parse_class(a.family, a.cls);
    LiftedIFS s = lift_radial_class(c);
    GrowthReport g = growth_rate_exact(s, a.kmax);

    Report rep(out, "code growth", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("class", class_token(s));
    rep.kv("kmax", a.kmax);
    std::string counts;
    json jc = json::array();
    for (size_t i = 0; i < g.counts.size(); ++i) {
        counts += (i ? " " : "") + std::to_string(g.counts[i]);
        jc.push_back(g.counts[i]);
    }
    rep.kv("counts", counts);
    rep.j["counts"] = jc;
    rep.kv("surjective_evidence", g.surjective_evidence);
    rep.kv("degenerate_at", g.degenerate_at);
    rep.finish();
    return 0;
}

int do_eq_build(std::ostream& out, const GraphArgs& a) {
    MapModel m = make_map(a.map);
    QuotientGroup G = quadcantor_quotient();
    Radial r = named_radial(m, a.radial);
    std::string r2name = a.radial2.empty() ? a.radial : a.radial2;
    Radial rp = named_radial(m, r2name);
    EqGraph g = build_eq_graph(m, r, rp, G);

    std::ofstream dot(a.out_path);
    if (!dot) fail(Err::NumericalFailure, "cannot write '" + a.out_path + "'");
    write_eq_dot(dot, g);

    Report rep(out, "eqgraph build", kDefaultRes, kDefaultDepth);
    rep.kv("map", a.map);
    rep.kv("radial", a.radial);
    rep.kv("radial2", r2name);
    rep.kv("group_order", G.order());
    rep.kv("vertices", (long long)g.verts.size());
    std::string names;
    json jv = json::array();
    for (int v = 0; v < (int)g.verts.size(); ++v) {
        names += (v ? ", " : "") + g.vert_name(v);
        jv.push_back(g.vert_name(v));
    }
    rep.kv("vertex_list", names);
    rep.j["vertex_list"] = jv;
    rep.kv("edges", (long long)g.edges.size());
    rep.kv("out", a.out_path);
    rep.finish();
    return 0;
}

int do_eq_decide(std::ostream& out, const GraphArgs& a) {
    MapModel m = make_map(a.map);
    QuotientGroup G = quadcantor_quotient();
    Radial r = named_radial(m, a.radial);
    std::string r2name = a.radial2.empty() ? a.radial : a.radial2;
    Radial rp = named_radial(m, r2name);
    EqGraph g = build_eq_graph(m, r, rp, G);
    Word w = parse_word(a.word, g.dsym);
    Word w2 = parse_word(a.word2, g.dsym);
    bool eq = relation_decide(g, w, w2);

    Report rep(out, "eqgraph decide", kDefaultRes, kDefaultDepth);
    rep.kv("map", a.map);
    rep.kv("radial", a.radial);
    rep.kv("radial2", r2name);
    rep.kv("word", w.str());
    rep.kv("word2", w2.str());
    rep.kv("equal", eq);
    rep.finish();
    return 0;
}

int do_eq_mult(std::ostream& out, const GraphArgs& a) {
    MapModel m = make_map(a.map);
    QuotientGroup G = quadcantor_quotient();
    Radial r = named_radial(m, a.radial);
    EqGraph g = build_eq_graph(m, r, r, G);
    std::uint64_t seed = parse_seed(a.seed);
    MultClassifyReport mc = multiplicity_classify(g, a.samples, a.depth, seed);

    Report rep(out, "eqgraph mult", kDefaultRes, kDefaultDepth);
    rep.kv("map", a.map);
    rep.kv("radial", a.radial);
    rep.kv("samples", mc.samples);
    rep.kv("depth", mc.depth);
    rep.kv("window", mc.window);
    rep.kv("margin", mc.margin);
    rep.kv("seed", fmt_hex(mc.seed));
    rep.kv("almost_sure", mc.almost_sure);
    rep.kv("max_observed", mc.max_observed);
    rep.kv("modal_share", mc.modal_share);
    rep.kv("diverged_reachable", mc.diverged_reachable);
    std::string certs;
    json jc = json::array();
    for (size_t i = 0; i < mc.certificates.size(); ++i) {
        certs += (i ? " " : "") + mc.certificates[i];
        jc.push_back(mc.certificates[i]);
    }
    rep.kv("certificates", certs.empty() ? "none" : certs);
    rep.j["certificates"] = jc;
    rep.finish();
    return 0;
}

int do_cod_equal(std::ostream& out, const CodArgs& a) {
    RadialClass ca = parse_class(a.family, a.a);
    RadialClass cb = parse_class(a.family, a.b);
    bool eq = cod_equal(ca, cb);

    Report rep(out, "cod equal", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("a", ca.str());
    rep.kv("b", cb.str());
    rep.kv("equal", eq);
    rep.finish();
    return 0;
}

int do_cod_canon(std::ostream& out, const CodArgs& a) {
    RadialClass c = parse_class(a.family, a.a);
    RadialClass k = canonical_form(c);

    Report rep(out, "cod canon", kDefaultRes, kDefaultDepth);
    rep.kv("family", a.family);
    rep.kv("a", c.str());
    rep.kv("canonical", k.str());
    rep.finish();
    return 0;
}

void add_last_wins(CLI::App* app) {
    for (CLI::Option* o : app->get_options())
        if (o->get_expected_min() >= 1)
            o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

} // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    CLI::App app{"symbolic codings and lifted Julia tiles for subhyperbolic families"};
    app.name("jct");
    app.require_subcommand(1);

    TileArgs tile_a;
    EvalArgs eval_a;
    GrowthArgs growth_a;
    GraphArgs graph_a;
    CodArgs cod_a;
    int action = 0;

    CLI::App* tile = app.add_subcommand("tile", "lifted IFS tiles");
    tile->require_subcommand(1);
    auto add_tile_common = [&](CLI::App* s) {
        s->add_option("--family", tile_a.family, "family token (power:d, cheb:d, lattes)")
            ->required();
        s->add_option("--class", tile_a.cls, "radial class entries")->required();
        s->add_option("--res", tile_a.res, "pixels per unit")
            ->capture_default_str();
    };
    CLI::App* t_render = tile->add_subcommand("render", "rasterize the attractor to PGM");
    add_tile_common(t_render);
    t_render->add_option("--out", tile_a.out_path, "PGM output path")->capture_default_str();
    t_render->callback([&] { action = 1; });
    CLI::App* t_measure = tile->add_subcommand("measure", "measure estimate and closed form");
    add_tile_common(t_measure);
    t_measure->callback([&] { action = 2; });
    CLI::App* t_tiling = tile->add_subcommand("check-tiling", "deck-translate coverage/overlap");
    add_tile_common(t_tiling);
    t_tiling->add_option("--window", tile_a.window, "window x0,y0,x1,y1 (y ignored on the line)")
        ->capture_default_str();
    t_tiling->callback([&] { action = 3; });
    CLI::App* t_mult = tile->add_subcommand("multiplicity", "coding multiplicity of the class");
    add_tile_common(t_mult);
    t_mult->callback([&] { action = 4; });

    CLI::App* code = app.add_subcommand("code", "coding map evaluation");
    code->require_subcommand(1);
    CLI::App* c_eval = code->add_subcommand("eval", "evaluate pi at a word");
    c_eval->add_option("--map", eval_a.map, "map token (quadcantor, power:d)")->required();
    c_eval->add_option("--radial", eval_a.radial, "named radial (quadcantor: r1, r2, r3)");
    c_eval->add_option("--class", eval_a.cls, "power class digits, e.g. 0,1");
    c_eval->add_option("--word", eval_a.word, "symbol word; '^' marks the periodic tail")
        ->required();
    c_eval->add_option("--eps", eval_a.eps, "target accuracy")->capture_default_str();
    c_eval->add_option("--depth", eval_a.depth, "certified depth cap")->capture_default_str();
    c_eval->callback([&] { action = 5; });
    CLI::App* c_growth = code->add_subcommand("growth", "exact branch-image growth counts");
    c_growth->add_option("--family", growth_a.family, "family token")->required();
    c_growth->add_option("--class", growth_a.cls, "radial class entries")->required();
    c_growth->add_option("--kmax", growth_a.kmax, "deepest level")->capture_default_str();
    c_growth->callback([&] { action = 6; });

    CLI::App* eq = app.add_subcommand("eqgraph", "equivalence-recognizing graphs");
    eq->require_subcommand(1);
    auto add_eq_common = [&](CLI::App* s, bool second) {
        s->add_option("--map", graph_a.map, "map token (quadcantor)")->capture_default_str();
        s->add_option("--radial", graph_a.radial, "radial name r1|r2|r3")->capture_default_str();
        if (second)
            s->add_option("--radial2", graph_a.radial2, "second radial (default: --radial)");
    };
    CLI::App* e_build = eq->add_subcommand("build", "build and emit the graph");
    add_eq_common(e_build, true);
    e_build->add_option("--out", graph_a.out_path, "DOT output path")->capture_default_str();
    e_build->callback([&] { action = 7; });
    CLI::App* e_decide = eq->add_subcommand("decide", "decide pi(w) = pi(w')");
    add_eq_common(e_decide, true);
    e_decide->add_option("--word", graph_a.word, "first word")->required();
    e_decide->add_option("--word2", graph_a.word2, "second word")->required();
    e_decide->callback([&] { action = 8; });
    CLI::App* e_mult = eq->add_subcommand("mult", "sampled multiplicity classification");
    add_eq_common(e_mult, false);
    e_mult->add_option("--samples", graph_a.samples, "sample count")->capture_default_str();
    e_mult->add_option("--depth", graph_a.depth, "word length per sample")->capture_default_str();
    e_mult->add_option("--seed", graph_a.seed, "RNG seed")->capture_default_str();
    e_mult->callback([&] { action = 9; });

    CLI::App* cod = app.add_subcommand("cod", "coding-map classes");
    cod->require_subcommand(1);
    CLI::App* d_equal = cod->add_subcommand("equal", "same coding map?");
    d_equal->add_option("--family", cod_a.family, "family token")->required();
    d_equal->add_option("--a", cod_a.a, "first class")->required();
    d_equal->add_option("--b", cod_a.b, "second class")->required();
    d_equal->callback([&] { action = 10; });
    CLI::App* d_canon = cod->add_subcommand("canon", "canonical orbit representative");
    d_canon->add_option("--family", cod_a.family, "family token")->required();
    d_canon->add_option("--a", cod_a.a, "class")->required();
    d_canon->callback([&] { action = 11; });

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance suite");
    self->callback([&] { action = 12; });

    for (CLI::App* s : {t_render, t_measure, t_tiling, t_mult, c_eval, c_growth,
                        e_build, e_decide, e_mult, d_equal, d_canon})
        add_last_wins(s);

    std::vector<std::string> args = args_in;
    try {
        splice_config(args);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        switch (action) {
        case 1: return do_tile_render(out, tile_a);
        case 2: return do_tile_measure(out, tile_a);
        case 3: return do_tile_tiling(out, tile_a);
        case 4: return do_tile_mult(out, tile_a);
        case 5: return do_code_eval(out, eval_a);
        case 6: return do_code_growth(out, growth_a);
        case 7: return do_eq_build(out, graph_a);
        case 8: return do_eq_decide(out, graph_a);
        case 9: return do_eq_mult(out, graph_a);
        case 10: return do_cod_equal(out, cod_a);
        case 11: return do_cod_canon(out, cod_a);
        case 12: return run_acceptance(out) == 0 ? 0 : 2;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: missing subcommand\n";
    return 1;
}

} // namespace jct
