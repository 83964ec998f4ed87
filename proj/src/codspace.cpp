#include "jct/codspace.hpp"

#include <algorithm>
#include <numeric>

namespace jct {

int RadialClass::count() const {
    switch (fam) {
    case Family::Power:     return (int)n.size();
    case Family::Chebyshev: return (int)n.size();
    case Family::Lattes:    return (int)beta.size();
    default:                return 0;
    }
}

GRat RadialClass::entry_point(int i) const {
    switch (fam) {
    case Family::Power:
        return GRat(Rat(n[i], degree));
    case Family::Chebyshev:
        return GRat(Rat(eps[i], 4) + Rat(n[i]));
    case Family::Lattes:
        return ipow(rot[i]) * GRat(Rat(1, 2)) + beta[i];
    default:
        fail(Err::UnsupportedFamily, "no class entries for this family");
    }
}

std::string RadialClass::str() const {
    std::string s;
    for (int i = 0; i < count(); ++i) {
        if (i) s += ",";
        if (fam == Family::Power) s += std::to_string(n[i]);
        else s += entry_point(i).str();
    }
    return s;
}

// ---- entry parsing ---------------------------------------------------------

// One Gaussian rational written as +-separated terms: "1/2+1+i", "-i/2+2".
static GRat parse_grat(const std::string& s) {
    GRat total;
    size_t pos = 0;
    if (s.empty()) fail(Err::InvalidClassEntry, "empty entry");
    while (pos < s.size()) {
        long long sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        size_t start = pos;
        bool imag = false;
        long long num = 1, den = 1;
        bool have_num = false;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (pos > start) {
            num = std::stoll(s.substr(start, pos - start));
            have_num = true;
        }
        if (pos < s.size() && s[pos] == 'i') {
            imag = true;
            ++pos;
        }
        if (!have_num && !imag)
            fail(Err::InvalidClassEntry, "cannot parse entry '" + s + "'");
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t ds = pos;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
            if (pos == ds) fail(Err::InvalidClassEntry, "missing denominator in '" + s + "'");
            den = std::stoll(s.substr(ds, pos - ds));
            if (den == 0) fail(Err::InvalidClassEntry, "zero denominator in '" + s + "'");
        }
        Rat v(sign * num, den);
        if (imag) total = total + GRat(Rat(0), v);
        else total = total + GRat(v);
        if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
            fail(Err::InvalidClassEntry, "cannot parse entry '" + s + "'");
    }
    return total;
}

RadialClass class_from_points(Family fam, int degree, const std::vector<GRat>& pts) {
    RadialClass c;
    c.fam = fam;
    c.degree = degree;
    switch (fam) {
    case Family::Power:
        if ((int)pts.size() != degree)
            fail(Err::InvalidClassEntry, "power class needs one entry per branch");
        for (const GRat& p : pts) {
            if (!p.im.is_zero() || !p.re.is_integer())
                fail(Err::InvalidClassEntry, "power entries are integers");
            c.n.push_back(p.re.n);
        }
        break;
    case Family::Chebyshev: {
        if (degree != 2)
            fail(Err::UnsupportedFamily, "class catalog covers cheb:2 only");
        if (pts.size() != 2)
            fail(Err::InvalidClassEntry, "cheb class needs two entries");
        for (const GRat& p : pts) {
            // p = eps/4 + n
            if (!p.im.is_zero())
                fail(Err::InvalidClassEntry, "cheb entries are real");
            Rat q = p.re * Rat(4); // = eps + 4n
            if (!q.is_integer())
                fail(Err::InvalidClassEntry, "cheb entry must be +-1/4 plus an integer");
            long long v = q.n;
            long long rem = ((v % 4) + 4) % 4;
            if (rem == 1) {
                c.eps.push_back(+1);
                c.n.push_back((v - 1) / 4);
            } else if (rem == 3) {
                c.eps.push_back(-1);
                c.n.push_back((v + 1) / 4);
            } else {
                fail(Err::InvalidClassEntry, "cheb entry must be +-1/4 plus an integer");
            }
        }
        break;
    }
    case Family::Lattes: {
        if (pts.size() != 2)
            fail(Err::InvalidClassEntry, "lattes class needs two entries");
        for (const GRat& p : pts) {
            // p = i^r / 2 + beta: exactly one coordinate is a half-integer.
            Rat re2 = p.re * Rat(2), im2 = p.im * Rat(2);
            if (!re2.is_integer() || !im2.is_integer())
                fail(Err::InvalidClassEntry, "lattes entry must lie on the half-integer lattice");
            bool re_half = ((re2.n % 2) + 2) % 2 != 0;
            bool im_half = ((im2.n % 2) + 2) % 2 != 0;
            if (re_half == im_half)
                fail(Err::InvalidClassEntry, "lattes entry must be alpha/2 + beta, alpha in {1,i,-1,-i}");
            // The half coordinate carries alpha = +-1 (or +-i); beta must land
            // in (1+i)Z[i], i.e. have coordinates of even sum.  Exactly one
            // sign choice satisfies the parity, which makes the decomposition
            // unique.
            auto even = [](long long a, long long b) { return (((a + b) % 2) + 2) % 2 == 0; };
            int r = -1;
            GRat beta;
            if (re_half) {
                for (int sgn : {+1, -1}) {
                    long long br = (re2.n - sgn) / 2, bi = im2.n / 2;
                    if (even(br, bi)) { r = sgn == 1 ? 0 : 2; beta = GRat(br, bi); break; }
                }
            } else {
                for (int sgn : {+1, -1}) {
                    long long br = re2.n / 2, bi = (im2.n - sgn) / 2;
                    if (even(br, bi)) { r = sgn == 1 ? 1 : 3; beta = GRat(br, bi); break; }
                }
            }
            if (r < 0)
                fail(Err::InvalidClassEntry, "lattes translation part must lie in (1+i)Z[i]");
            c.rot.push_back(r);
            c.beta.push_back(beta);
        }
        break;
    }
    case Family::QuadCantor:
        fail(Err::UnsupportedFamily, "quadcantor has no class catalog (free cover)");
    }
    return c;
}

RadialClass parse_class(const std::string& family_tok, const std::string& entries) {
    Family fam;
    int degree;
    parse_family(family_tok, fam, degree);
    std::vector<GRat> pts;
    std::string cur;
    for (char ch : entries) {
        if (ch == ',') {
            pts.push_back(parse_grat(cur));
            cur.clear();
        } else if (!isspace((unsigned char)ch)) {
            cur += ch;
        }
    }
    if (!cur.empty()) pts.push_back(parse_grat(cur));
    return class_from_points(fam, degree, pts);
}

// ---- deck action ------------------------------------------------------------

GRat lattes_divisor(int rot) {
    // 2 - (1-i) * i^rot
    return GRat(2) - (GRat(1, -1) * ipow(rot));
}

RadialClass deck_act(const DeckAction& t, const RadialClass& c) {
    if (t.fam != c.fam || t.degree != c.degree)
        fail(Err::FamilyMismatch, "deck action family does not match the class");
    RadialClass r = c;
    switch (c.fam) {
    case Family::Power:
        for (auto& v : r.n) v += (c.degree - 1) * t.n;
        break;
    case Family::Chebyshev:
        if (t.a != 1 && t.a != -1)
            fail(Err::InvalidClassEntry, "cheb deck reflection must be +-1");
        for (size_t i = 0; i < r.n.size(); ++i)
            r.n[i] = t.a * c.n[i] + (2 - c.eps[i]) * t.n;
        break;
    case Family::Lattes: {
        if (!t.b.is_gaussian_integer())
            fail(Err::InvalidClassEntry, "lattes deck translation must be a Gaussian integer");
        GRat a = ipow(t.rot);
        for (size_t i = 0; i < r.beta.size(); ++i)
            r.beta[i] = a * c.beta[i] + lattes_divisor(c.rot[i]) * t.b;
        break;
    }
    default:
        fail(Err::UnsupportedFamily, "no deck action for this family");
    }
    return r;
}

bool class_degenerate(const RadialClass& c) {
    switch (c.fam) {
    case Family::Power: {
        for (size_t i = 1; i < c.n.size(); ++i)
            if (c.n[i] != c.n[0]) return false;
        return true;
    }
    case Family::Chebyshev: {
        // Both branches share the fixed point 2n iff the entries are
        // {(+1, n), (-1, 3n)}.
        for (int i = 0; i < 2; ++i)
            if (c.eps[i] == +1 && c.eps[1 - i] == -1 && c.n[1 - i] == 3 * c.n[i])
                return true;
        return false;
    }
    case Family::Lattes: {
        // Shared fixed point beta / (2 - (1-i) alpha).
        GRat f0 = c.beta[0] / lattes_divisor(c.rot[0]);
        GRat f1 = c.beta[1] / lattes_divisor(c.rot[1]);
        return f0 == f1;
    }
    default:
        return false;
    }
}

bool cod_equal(const RadialClass& a, const RadialClass& b) {
    if (a.fam != b.fam || a.degree != b.degree)
        fail(Err::FamilyMismatch, "cod_equal needs classes of the same family");
    if (class_degenerate(a) || class_degenerate(b))
        fail(Err::DegenerateClass, "degenerate classes are outside the coding catalog");
    switch (a.fam) {
    case Family::Power: {
        long long diff = b.n[0] - a.n[0];
        if (diff % (a.degree - 1) != 0) return false;
        long long t = diff / (a.degree - 1);
        for (size_t i = 0; i < a.n.size(); ++i)
            if (a.n[i] + (a.degree - 1) * t != b.n[i]) return false;
        return true;
    }
    case Family::Chebyshev: {
        if (a.eps != b.eps) return false;
        for (int s : {+1, -1}) {
            long long num = b.n[0] - s * a.n[0];
            int den = 2 - a.eps[0];
            if (num % den != 0) continue;
            long long t = num / den;
            bool ok = true;
            for (size_t i = 0; i < a.n.size(); ++i)
                if (s * a.n[i] + (2 - a.eps[i]) * t != b.n[i]) ok = false;
            if (ok) return true;
        }
        return false;
    }
    case Family::Lattes: {
        if (a.rot != b.rot) return false;
        for (int r = 0; r < 4; ++r) {
            GRat ar = ipow(r);
            GRat bb = (b.beta[0] - ar * a.beta[0]) / lattes_divisor(a.rot[0]);
            if (!bb.is_gaussian_integer()) continue;
            bool ok = true;
            for (size_t i = 0; i < a.beta.size(); ++i)
                if (ar * a.beta[i] + lattes_divisor(a.rot[i]) * bb != b.beta[i]) ok = false;
            if (ok) return true;
        }
        return false;
    }
    default:
        fail(Err::UnsupportedFamily, "cod_equal undefined for this family");
    }
}

RadialClass canonical_form(const RadialClass& c) {
    switch (c.fam) {
    case Family::Power: {
        long long step = c.degree - 1;
        long long r = ((c.n[0] % step) + step) % step; // target first entry in [0, d-2]
        DeckAction t{c.fam, c.degree, (r - c.n[0]) / step, 1, 0, GRat()};
        return deck_act(t, c);
    }
    case Family::Chebyshev: {
        // Minimize (sum |n'|, n'_1, ..., n'_d) over the deck group; the
        // translation part is bounded because |n'_1| >= |t| - |n_1| grows
        // once |t| exceeds the current entries.
        long long B = 3, mx = 0;
        for (long long v : c.n) { B += std::abs(v); mx = std::max(mx, std::abs(v)); }
        B += mx;
        RadialClass best = c;
        auto key = [](const RadialClass& x) {
            std::vector<long long> k;
            long long s = 0;
            for (long long v : x.n) s += std::abs(v);
            k.push_back(s);
            for (long long v : x.n) k.push_back(v);
            return k;
        };
        std::vector<long long> bk = key(c);
        for (int s : {+1, -1})
            for (long long t = -B; t <= B; ++t) {
                RadialClass cand = deck_act(DeckAction{c.fam, 2, t, s, 0, GRat()}, c);
                auto ck = key(cand);
                if (ck < bk) { bk = ck; best = cand; }
            }
        return best;
    }
    case Family::Lattes: {
        long long B = 2;
        for (const GRat& b : c.beta)
            B += b.re.abs().floor() + b.im.abs().floor() + 1;
        RadialClass best = c;
        auto key = [](const RadialClass& x) {
            std::vector<Rat> k;
            Rat s(0);
            for (const GRat& b : x.beta) s = s + b.norm();
            k.push_back(s);
            for (const GRat& b : x.beta) {
                k.push_back(b.re);
                k.push_back(b.im);
            }
            return k;
        };
        auto bk = key(c);
        for (int r = 0; r < 4; ++r)
            for (long long br = -B; br <= B; ++br)
                for (long long bi = -B; bi <= B; ++bi) {
                    RadialClass cand =
                        deck_act(DeckAction{c.fam, 2, 0, 1, r, GRat(br, bi)}, c);
                    auto ck = key(cand);
                    if (ck < bk) { bk = ck; best = cand; }
                }
        return best;
    }
    default:
        fail(Err::UnsupportedFamily, "canonical_form undefined for this family");
    }
}

RadialClass power_monoid_act(long long m, long long k, const RadialClass& c) {
    if (c.fam != Family::Power)
        fail(Err::FamilyMismatch, "monoid action applies to power classes");
    if (k < 1) fail(Err::InvalidClassEntry, "monoid scale must be >= 1");
    RadialClass r = c;
    for (auto& v : r.n) v = k * v + m;
    return r;
}

long long power_mul(const RadialClass& c) {
    if (c.fam != Family::Power || c.degree != 2)
        fail(Err::UnsupportedFamily, "exact multiplicity requires power:2");
    return std::abs(c.n[1] - c.n[0]);
}

} // namespace jct
