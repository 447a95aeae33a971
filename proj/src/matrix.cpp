#include "dualab/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dualab {

namespace {

long long mod_pos(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

// extended Euclid
long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = mod_pos(a, p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    assert(r == 1 && "division by zero in F_p");
    return mod_pos(t, p);
}

Rat rat_mod(const Rat& v, long long p) {
    Int num = numerator(v) % p;
    Int den = denominator(v) % p;
    long long n = mod_pos(num.convert_to<long long>(), p);
    long long d = mod_pos(den.convert_to<long long>(), p);
    if (d == 0) throw std::invalid_argument("denominator not invertible in F_p");
    return Rat(n * mod_inv(d, p) % p);
}

}  // namespace

Matrix::Matrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
    assert(rows >= 0 && cols >= 0);
    if (f.characteristic() == 2) {
        F2Store s;
        s.words = (cols + 63) / 64;
        s.bits.assign(static_cast<size_t>(rows) * s.words, 0);
        store_ = std::move(s);
    } else if (f.is_prime_field()) {
        store_ = FpStore{std::vector<long long>(static_cast<size_t>(rows) * cols, 0)};
    } else {
        store_ = QStore{std::vector<Rat>(static_cast<size_t>(rows) * cols)};
    }
}

Matrix Matrix::identity(Field f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(int i, int j, long long v) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    if (auto* s = std::get_if<F2Store>(&store_)) {
        auto& w = s->bits[static_cast<size_t>(i) * s->words + j / 64];
        if (v & 1)
            w |= (std::uint64_t{1} << (j % 64));
        else
            w &= ~(std::uint64_t{1} << (j % 64));
    } else if (auto* sp = std::get_if<FpStore>(&store_)) {
        sp->a[static_cast<size_t>(i) * cols_ + j] = mod_pos(v, field_.characteristic());
    } else {
        std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j] = Rat(v);
    }
}

void Matrix::set(int i, int j, const Rat& v) {
    if (field_.is_prime_field()) {
        set(i, j, rat_mod(v, field_.characteristic()).convert_to<long long>());
    } else {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j] = v;
    }
}

void Matrix::add_at(int i, int j, long long v) {
    if (auto* s = std::get_if<F2Store>(&store_)) {
        if (v & 1) s->bits[static_cast<size_t>(i) * s->words + j / 64] ^= (std::uint64_t{1} << (j % 64));
    } else if (auto* sp = std::get_if<FpStore>(&store_)) {
        auto& e = sp->a[static_cast<size_t>(i) * cols_ + j];
        e = mod_pos(e + mod_pos(v, field_.characteristic()), field_.characteristic());
    } else {
        std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j] += v;
    }
}

void Matrix::add_at(int i, int j, const Rat& v) {
    if (field_.is_prime_field()) {
        add_at(i, j, rat_mod(v, field_.characteristic()).convert_to<long long>());
    } else {
        std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j] += v;
    }
}

Rat Matrix::get(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    if (const auto* s = std::get_if<F2Store>(&store_)) {
        return Rat((s->bits[static_cast<size_t>(i) * s->words + j / 64] >> (j % 64)) & 1);
    }
    if (const auto* sp = std::get_if<FpStore>(&store_)) {
        return Rat(sp->a[static_cast<size_t>(i) * cols_ + j]);
    }
    return std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j];
}

bool Matrix::entry_nonzero(int i, int j) const {
    if (const auto* s = std::get_if<F2Store>(&store_))
        return (s->bits[static_cast<size_t>(i) * s->words + j / 64] >> (j % 64)) & 1;
    if (const auto* sp = std::get_if<FpStore>(&store_))
        return sp->a[static_cast<size_t>(i) * cols_ + j] != 0;
    return std::get<QStore>(store_).a[static_cast<size_t>(i) * cols_ + j] != 0;
}

bool Matrix::is_zero() const {
    if (const auto* s = std::get_if<F2Store>(&store_)) {
        for (auto w : s->bits)
            if (w) return false;
        return true;
    }
    if (const auto* sp = std::get_if<FpStore>(&store_)) {
        for (auto v : sp->a)
            if (v) return false;
        return true;
    }
    for (const auto& v : std::get<QStore>(store_).a)
        if (v != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    assert(field_ == rhs.field_ && cols_ == rhs.rows_);
    Matrix out(field_, rows_, rhs.cols_);
    if (const auto* a = std::get_if<F2Store>(&store_)) {
        const auto& b = std::get<F2Store>(rhs.store_);
        auto& c = std::get<F2Store>(out.store_);
        for (int i = 0; i < rows_; ++i) {
            std::uint64_t* crow = c.words ? &c.bits[static_cast<size_t>(i) * c.words] : nullptr;
            for (int k = 0; k < cols_; ++k) {
                if ((a->bits[static_cast<size_t>(i) * a->words + k / 64] >> (k % 64)) & 1) {
                    const std::uint64_t* brow = &b.bits[static_cast<size_t>(k) * b.words];
                    for (int w = 0; w < b.words; ++w) crow[w] ^= brow[w];
                }
            }
        }
    } else if (const auto* ap = std::get_if<FpStore>(&store_)) {
        const long long p = field_.characteristic();
        const auto& b = std::get<FpStore>(rhs.store_);
        auto& c = std::get<FpStore>(out.store_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                long long aik = ap->a[static_cast<size_t>(i) * cols_ + k];
                if (!aik) continue;
                for (int j = 0; j < rhs.cols_; ++j) {
                    auto& e = c.a[static_cast<size_t>(i) * rhs.cols_ + j];
                    e = (e + aik * b.a[static_cast<size_t>(k) * rhs.cols_ + j]) % p;
                }
            }
    } else {
        const auto& a = std::get<QStore>(store_);
        const auto& b = std::get<QStore>(rhs.store_);
        auto& c = std::get<QStore>(out.store_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& aik = a.a[static_cast<size_t>(i) * cols_ + k];
                if (aik == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j)
                    c.a[static_cast<size_t>(i) * rhs.cols_ + j] +=
                        aik * b.a[static_cast<size_t>(k) * rhs.cols_ + j];
            }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    assert(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out = *this;
    if (auto* c = std::get_if<F2Store>(&out.store_)) {
        const auto& b = std::get<F2Store>(rhs.store_);
        for (size_t t = 0; t < c->bits.size(); ++t) c->bits[t] ^= b.bits[t];
    } else if (auto* cp = std::get_if<FpStore>(&out.store_)) {
        const long long p = field_.characteristic();
        const auto& b = std::get<FpStore>(rhs.store_);
        for (size_t t = 0; t < cp->a.size(); ++t) cp->a[t] = (cp->a[t] + b.a[t]) % p;
    } else {
        auto& c = std::get<QStore>(out.store_);
        const auto& b = std::get<QStore>(rhs.store_);
        for (size_t t = 0; t < c.a.size(); ++t) c.a[t] += b.a[t];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    assert(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_);
    Matrix out = *this;
    if (auto* c = std::get_if<F2Store>(&out.store_)) {
        const auto& b = std::get<F2Store>(rhs.store_);
        for (size_t t = 0; t < c->bits.size(); ++t) c->bits[t] ^= b.bits[t];
    } else if (auto* cp = std::get_if<FpStore>(&out.store_)) {
        const long long p = field_.characteristic();
        const auto& b = std::get<FpStore>(rhs.store_);
        for (size_t t = 0; t < cp->a.size(); ++t) cp->a[t] = mod_pos(cp->a[t] - b.a[t], p);
    } else {
        auto& c = std::get<QStore>(out.store_);
        const auto& b = std::get<QStore>(rhs.store_);
        for (size_t t = 0; t < c.a.size(); ++t) c.a[t] -= b.a[t];
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (entry_nonzero(i, j)) out.set(j, i, get(i, j));
    return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
    Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (!entry_nonzero(i, j)) continue;
            Rat a = get(i, j);
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l)
                    if (rhs.entry_nonzero(k, l))
                        out.set(i * rhs.rows_ + k, j * rhs.cols_ + l, a * rhs.get(k, l));
        }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    if (const auto* a = std::get_if<F2Store>(&store_))
        return a->bits == std::get<F2Store>(rhs.store_).bits;
    if (const auto* ap = std::get_if<FpStore>(&store_))
        return ap->a == std::get<FpStore>(rhs.store_).a;
    return std::get<QStore>(store_).a == std::get<QStore>(rhs.store_).a;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    assert(!blocks.empty());
    int rows = blocks[0].rows_;
    int cols = 0;
    for (const auto& b : blocks) {
        assert(b.rows_ == rows);
        cols += b.cols_;
    }
    Matrix out(blocks[0].field_, rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        out.set_block(0, at, b);
        at += b.cols_;
    }
    return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    assert(!blocks.empty());
    int cols = blocks[0].cols_;
    int rows = 0;
    for (const auto& b : blocks) {
        assert(b.cols_ == cols);
        rows += b.rows_;
    }
    Matrix out(blocks[0].field_, rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        out.set_block(at, 0, b);
        at += b.rows_;
    }
    return out;
}

void Matrix::set_block(int i0, int j0, const Matrix& src) {
    assert(i0 + src.rows_ <= rows_ && j0 + src.cols_ <= cols_);
    for (int i = 0; i < src.rows_; ++i)
        for (int j = 0; j < src.cols_; ++j)
            if (src.entry_nonzero(i, j)) set(i0 + i, j0 + j, src.get(i, j));
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix out(field_, rows_, static_cast<int>(idx.size()));
    for (size_t c = 0; c < idx.size(); ++c)
        for (int i = 0; i < rows_; ++i)
            if (entry_nonzero(i, idx[c])) out.set(i, static_cast<int>(c), get(i, idx[c]));
    return out;
}

// ---------------------------------------------------------------------------
// Echelon forms. Pivot rule in all backends: scan columns left to right, take
// the topmost not-yet-pivotal row with a nonzero entry.
// ---------------------------------------------------------------------------

namespace {

void rref_f2(std::vector<std::uint64_t>& bits, int rows, int cols, int words,
             std::vector<int>& pivots) {
    int prow = 0;
    for (int c = 0; c < cols && prow < rows; ++c) {
        const int w = c / 64;
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        int sel = -1;
        for (int r = prow; r < rows; ++r)
            if (bits[static_cast<size_t>(r) * words + w] & mask) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow)
            for (int t = 0; t < words; ++t)
                std::swap(bits[static_cast<size_t>(sel) * words + t],
                          bits[static_cast<size_t>(prow) * words + t]);
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            if (bits[static_cast<size_t>(r) * words + w] & mask)
                for (int t = w; t < words; ++t)
                    bits[static_cast<size_t>(r) * words + t] ^=
                        bits[static_cast<size_t>(prow) * words + t];
        }
        pivots.push_back(c);
        ++prow;
    }
}

void rref_fp(std::vector<long long>& a, int rows, int cols, long long p,
             std::vector<int>& pivots) {
    int prow = 0;
    for (int c = 0; c < cols && prow < rows; ++c) {
        int sel = -1;
        for (int r = prow; r < rows; ++r)
            if (a[static_cast<size_t>(r) * cols + c]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow)
            for (int t = c; t < cols; ++t)
                std::swap(a[static_cast<size_t>(sel) * cols + t],
                          a[static_cast<size_t>(prow) * cols + t]);
        long long inv = mod_inv(a[static_cast<size_t>(prow) * cols + c], p);
        for (int t = c; t < cols; ++t) {
            auto& e = a[static_cast<size_t>(prow) * cols + t];
            e = e * inv % p;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            long long f = a[static_cast<size_t>(r) * cols + c];
            if (!f) continue;
            for (int t = c; t < cols; ++t) {
                auto& e = a[static_cast<size_t>(r) * cols + t];
                e = mod_pos(e - f * a[static_cast<size_t>(prow) * cols + t] % p, p);
            }
        }
        pivots.push_back(c);
        ++prow;
    }
}

void rref_q(std::vector<Rat>& a, int rows, int cols, std::vector<int>& pivots) {
    int prow = 0;
    for (int c = 0; c < cols && prow < rows; ++c) {
        int sel = -1;
        for (int r = prow; r < rows; ++r)
            if (a[static_cast<size_t>(r) * cols + c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != prow)
            for (int t = c; t < cols; ++t)
                std::swap(a[static_cast<size_t>(sel) * cols + t],
                          a[static_cast<size_t>(prow) * cols + t]);
        Rat inv = Rat(1) / a[static_cast<size_t>(prow) * cols + c];
        for (int t = c; t < cols; ++t) a[static_cast<size_t>(prow) * cols + t] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            Rat f = a[static_cast<size_t>(r) * cols + c];
            if (f == 0) continue;
            for (int t = c; t < cols; ++t)
                a[static_cast<size_t>(r) * cols + t] -= f * a[static_cast<size_t>(prow) * cols + t];
        }
        pivots.push_back(c);
        ++prow;
    }
}

}  // namespace

Matrix Matrix::rref(std::vector<int>* pivots) const {
    Matrix out = *this;
    std::vector<int> piv;
    if (auto* s = std::get_if<F2Store>(&out.store_)) {
        rref_f2(s->bits, rows_, cols_, s->words, piv);
    } else if (auto* sp = std::get_if<FpStore>(&out.store_)) {
        rref_fp(sp->a, rows_, cols_, field_.characteristic(), piv);
    } else {
        rref_q(std::get<QStore>(out.store_).a, rows_, cols_, piv);
    }
    if (pivots) *pivots = std::move(piv);
    return out;
}

int Matrix::rank() const {
    std::vector<int> piv;
    rref(&piv);
    return static_cast<int>(piv.size());
}

Matrix Matrix::kernel_basis() const {
    std::vector<int> piv;
    Matrix R = rref(&piv);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (pi < piv.size() && piv[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    Matrix K(field_, cols_, static_cast<int>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int f = free_cols[t];
        K.set(f, static_cast<int>(t), 1);
        for (size_t r = 0; r < piv.size(); ++r)
            if (R.entry_nonzero(static_cast<int>(r), f))
                K.set(piv[r], static_cast<int>(t), Rat(0) - R.get(static_cast<int>(r), f));
    }
    return K;
}

Matrix Matrix::image_basis() const {
    std::vector<int> piv;
    Matrix Rt = transpose().rref(&piv);
    Matrix out(field_, rows_, static_cast<int>(piv.size()));
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < rows_; ++j)
            if (Rt.entry_nonzero(static_cast<int>(r), j))
                out.set(j, static_cast<int>(r), Rt.get(static_cast<int>(r), j));
    return out;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs) const {
    assert(rhs.rows_ == rows_ && field_ == rhs.field_);
    Matrix aug = hstack({*this, rhs});
    std::vector<int> piv;
    Matrix R = aug.rref(&piv);
    for (int c : piv)
        if (c >= cols_) return std::nullopt;
    Matrix x(field_, cols_, rhs.cols_);
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < rhs.cols_; ++j)
            if (R.entry_nonzero(static_cast<int>(r), cols_ + j))
                x.set(piv[r], j, R.get(static_cast<int>(r), cols_ + j));
    return x;
}

RankKernelImage rank_kernel_image(const Matrix& m) {
    return RankKernelImage{m.rank(), m.kernel_basis(), m.image_basis()};
}

}  // namespace dualab
