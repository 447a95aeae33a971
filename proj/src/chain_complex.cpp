#include "dualab/chain_complex.hpp"

#include <string>

#include "dualab/errors.hpp"

namespace dualab {

namespace {
const GradedVectorSpace kEmpty{};
}

ChainComplex::ChainComplex(Field f, std::map<int, GradedVectorSpace> terms,
                           std::map<int, std::map<int, Matrix>> diffs)
    : field_(f), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    // drop empty terms so s_min/s_max describe actual support
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.empty() ? terms_.erase(it) : std::next(it);
    if (!terms_.empty()) {
        s_min_ = terms_.begin()->first;
        s_max_ = terms_.rbegin()->first;
    }
    for (auto& [s, per_degree] : diffs_) {
        for (auto& [j, m] : per_degree) {
            int want_rows = term(s - 1).dim(j);
            int want_cols = term(s).dim(j);
            if (m.rows() != want_rows || m.cols() != want_cols)
                throw MalformedComplex("differential shape mismatch at s=" + std::to_string(s) +
                                       " j=" + std::to_string(j));
        }
    }
    for (int s = s_min_; s <= s_max_ + 1; ++s) {
        Window w = degree_window();
        for (int j = w.lo; j <= w.hi; ++j) {
            Matrix d1 = diff(s, j);
            Matrix d0 = diff(s - 1, j);
            if (d1.cols() == 0 || d0.rows() == 0) continue;
            if (!(d0 * d1).is_zero())
                throw MalformedComplex("d∘d ≠ 0 at s=" + std::to_string(s) +
                                       " j=" + std::to_string(j));
        }
    }
}

const GradedVectorSpace& ChainComplex::term(int s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? kEmpty : it->second;
}

Matrix ChainComplex::diff(int s, int j) const {
    auto it = diffs_.find(s);
    if (it != diffs_.end()) {
        auto jt = it->second.find(j);
        if (jt != it->second.end()) return jt->second;
    }
    return Matrix(field_, term(s - 1).dim(j), term(s).dim(j));
}

Window ChainComplex::degree_window() const {
    Window w;
    bool first = true;
    for (auto& [s, t] : terms_) {
        if (t.dims.empty()) continue;
        int lo = t.dims.begin()->first, hi = t.dims.rbegin()->first;
        if (first) {
            w = {lo, hi};
            first = false;
        } else {
            w.lo = std::min(w.lo, lo);
            w.hi = std::max(w.hi, hi);
        }
    }
    return w;
}

GradedVectorSpace ChainComplex::homology(int s) const {
    GradedVectorSpace h;
    h.window = degree_window();
    const GradedVectorSpace& t = term(s);
    for (auto& [j, d] : t.dims) {
        Matrix out = diff(s, j);
        Matrix in = diff(s + 1, j);
        int k = d - out.rank();
        int b = in.rank();
        h.set_dim(j, k - b);
    }
    return h;
}

ChainComplex ChainComplex::truncate_above(int n) const {
    std::map<int, GradedVectorSpace> terms;
    std::map<int, std::map<int, Matrix>> diffs;
    for (auto& [s, t] : terms_)
        if (s <= n) terms[s] = t;
    for (auto& [s, per] : diffs_)
        if (s <= n) diffs[s] = per;
    // replacement term at n+1: image of d_{n+1}, mapping in by inclusion
    if (terms_.count(n + 1) || !term(n + 1).empty()) {
        GradedVectorSpace img;
        img.window = term(n).window;
        std::map<int, Matrix> incl;
        for (auto& [j, d] : term(n + 1).dims) {
            (void)d;
            Matrix basis = diff(n + 1, j).image_basis();
            if (basis.cols() > 0) {
                img.set_dim(j, basis.cols());
                incl[j] = basis;
            }
        }
        if (!img.empty()) {
            terms[n + 1] = img;
            diffs[n + 1] = std::move(incl);
        }
    }
    return ChainComplex(field_, std::move(terms), std::move(diffs));
}

ChainComplex ChainComplex::truncate_below(int n) const {
    std::map<int, GradedVectorSpace> terms;
    std::map<int, std::map<int, Matrix>> diffs;
    for (auto& [s, t] : terms_)
        if (s >= n) terms[s] = t;
    for (auto& [s, per] : diffs_)
        if (s >= n + 1) diffs[s] = per;
    if (!term(n - 1).empty()) {
        GradedVectorSpace img;
        img.window = term(n - 1).window;
        std::map<int, Matrix> cores;
        for (auto& [j, d] : term(n).dims) {
            (void)d;
            Matrix dn = diff(n, j);
            Matrix basis = dn.image_basis();
            if (basis.cols() > 0) {
                img.set_dim(j, basis.cols());
                auto coords = basis.solve(dn);  // basis spans im(d_n), always consistent
                cores[j] = *coords;
            }
        }
        if (!img.empty()) {
            terms[n - 1] = img;
            diffs[n] = std::move(cores);
        }
    }
    return ChainComplex(field_, std::move(terms), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    std::map<int, GradedVectorSpace> terms;
    std::map<int, std::map<int, Matrix>> diffs;
    int lo = std::min(a.s_min(), b.s_min()), hi = std::max(a.s_max(), b.s_max());
    for (int s = lo; s <= hi; ++s) {
        GradedVectorSpace t;
        std::map<int, int> all;
        for (auto& [j, d] : a.term(s).dims) all[j] += d;
        for (auto& [j, d] : b.term(s).dims) all[j] += d;
        for (auto& [j, d] : all) t.set_dim(j, d);
        t.window = {std::min(a.term(s).window.lo, b.term(s).window.lo),
                    std::max(a.term(s).window.hi, b.term(s).window.hi)};
        if (!t.empty()) terms[s] = t;
    }
    for (int s = lo; s <= hi + 1; ++s) {
        for (auto& [j, dsum] : terms.count(s) ? terms[s].dims : std::map<int, int>{}) {
            (void)dsum;
            Matrix da = a.diff(s, j), db = b.diff(s, j);
            Matrix m(a.field(), da.rows() + db.rows(), da.cols() + db.cols());
            m.set_block(0, 0, da);
            m.set_block(da.rows(), da.cols(), db);
            if (m.rows() > 0 && m.cols() > 0) diffs[s][j] = m;
        }
    }
    return ChainComplex(a.field(), std::move(terms), std::move(diffs));
}

}  // namespace dualab
