#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dualab/field.hpp"

namespace dualab {

/// Dense exact matrix over a Field. Three storage backends: bit-packed rows
/// for F_2, machine integers for odd F_p, arbitrary-precision rationals for Q.
///
/// Echelon forms use leftmost-pivot, topmost-row tie-breaking, so every
/// derived basis (kernel, image, homology representatives) is reproducible
/// byte-for-byte across runs and platforms.
class Matrix {
public:
    Matrix(Field f, int rows, int cols);  // zero matrix
    static Matrix identity(Field f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Field field() const { return field_; }

    void set(int i, int j, long long v);
    void set(int i, int j, const Rat& v);
    void add_at(int i, int j, long long v);
    void add_at(int i, int j, const Rat& v);
    Rat get(int i, int j) const;  // canonical representative (0..p-1 over F_p)
    bool entry_nonzero(int i, int j) const;
    bool is_zero() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix kronecker(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    static Matrix hstack(const std::vector<Matrix>& blocks);
    static Matrix vstack(const std::vector<Matrix>& blocks);
    /// Copy `src` into this matrix with top-left corner at (i0, j0).
    void set_block(int i0, int j0, const Matrix& src);
    Matrix columns(const std::vector<int>& idx) const;

    /// Reduced row echelon form; pivot column indices (ascending) appended
    /// to *pivots when given.
    Matrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;

    /// Columns form the canonical kernel basis: one vector per free column of
    /// the RREF, unit at the free column, back-filled at pivot columns.
    Matrix kernel_basis() const;
    /// Columns form an echelonized basis of the column space.
    Matrix image_basis() const;

    /// Solve A x = b for every column of b; x has free coordinates zero.
    /// Returns nullopt when any column is inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs) const;

private:
    struct F2Store {
        int words = 0;
        std::vector<std::uint64_t> bits;  // row-major, `words` per row
    };
    struct FpStore {
        std::vector<long long> a;  // row-major
    };
    struct QStore {
        std::vector<Rat> a;  // row-major
    };

    Field field_;
    int rows_, cols_;
    std::variant<F2Store, FpStore, QStore> store_;

    bool is_f2() const { return std::holds_alternative<F2Store>(store_); }
    friend struct MatrixOps;
};

/// rank + deterministic kernel/image bases in one call.
struct RankKernelImage {
    int rank;
    Matrix kernel;  // columns
    Matrix image;   // columns
};
RankKernelImage rank_kernel_image(const Matrix& m);

}  // namespace dualab
