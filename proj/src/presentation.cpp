#include "dualab/presentation.hpp"

#include <algorithm>

namespace dualab {

int Presentation::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < m.exp.size(); ++i) d += m.exp[i] * gens[i].degree;
    return d;
}

int Presentation::d_max() const {
    int d = 1;
    for (auto& g : gens) d = std::max(d, g.degree);
    return d;
}

int Presentation::d_min() const {
    if (gens.empty()) return 1;
    int d = gens[0].degree;
    for (auto& g : gens) d = std::min(d, g.degree);
    return d;
}

int Presentation::max_relation_degree() const {
    int d = 0;
    for (int r : relation_degrees) d = std::max(d, r);
    return d;
}

std::string Presentation::render(const Monomial& m) const {
    std::string out;
    for (size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += gens[i].name;
        if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
    }
    return out.empty() ? "1" : out;
}

MonoProduct mono_mul(const Presentation& p, const Monomial& a, const Monomial& b) {
    const int n = p.num_gens();
    Monomial out;
    out.exp.resize(n);
    int sign = 1;
    if (!p.char_two()) {
        // Every odd factor of `a` at generator i passes, on its way to
        // canonical position, each odd factor of `b` at generators < i.
        long long passes = 0, odd_b_prefix = 0;
        for (int i = 0; i < n; ++i) {
            if (p.gens[i].odd) {
                passes += static_cast<long long>(a.exp[i]) * odd_b_prefix;
                odd_b_prefix += b.exp[i];
            }
        }
        if (passes % 2) sign = -1;
    }
    for (int i = 0; i < n; ++i) {
        out.exp[i] = a.exp[i] + b.exp[i];
        if (!p.char_two() && p.gens[i].odd && out.exp[i] > 1) return {0, {}};
    }
    return {sign, std::move(out)};
}

namespace {
void enumerate_rec(const Presentation& p, int gi, int remaining, Monomial& cur,
                   std::vector<Monomial>& out) {
    if (gi == p.num_gens()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const auto& g = p.gens[gi];
    int cap = remaining / g.degree;
    if (!p.char_two() && g.odd) cap = std::min(cap, 1);
    for (int e = cap; e >= 0; --e) {  // descending: larger exponent on earlier generator first
        cur.exp[gi] = e;
        enumerate_rec(p, gi + 1, remaining - e * g.degree, cur, out);
    }
    cur.exp[gi] = 0;
}
}  // namespace

std::vector<Monomial> enumerate_monomials(const Presentation& p, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial cur;
    cur.exp.assign(p.num_gens(), 0);
    enumerate_rec(p, 0, degree, cur, out);
    return out;
}

FreePoly poly_add(const FreePoly& a, const FreePoly& b) {
    FreePoly out = a;
    for (auto& [m, c] : b) {
        auto [it, fresh] = out.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

FreePoly poly_scale(const FreePoly& a, const Rat& c) {
    FreePoly out;
    if (c == 0) return out;
    for (auto& [m, v] : a) out.emplace(m, v * c);
    return out;
}

FreePoly poly_mul(const Presentation& p, const FreePoly& a, const FreePoly& b) {
    FreePoly out;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            MonoProduct mp = mono_mul(p, ma, mb);
            if (mp.sign == 0) continue;
            Rat c = ca * cb * mp.sign;
            auto [it, fresh] = out.emplace(mp.mono, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

}  // namespace dualab
