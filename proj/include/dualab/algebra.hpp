#pragma once

#include <memory>
#include <mutex>

#include "dualab/graded.hpp"
#include "dualab/matrix.hpp"
#include "dualab/presentation.hpp"

namespace dualab {

/// Per-degree linear-algebra model of a presented graded-commutative algebra.
/// No Gröbner bases: the degree-j piece of the relation ideal is spanned by
/// the finitely many monomial multiples of relations landing in degree j, and
/// the quotient basis is read off a deterministic echelon form.
///
/// Degree tables are memoized under a single writer lock; all queries are
/// pure, so concurrent readers are safe once a degree is built.
class Algebra {
public:
    explicit Algebra(Presentation p);

    const Presentation& pres() const { return pres_; }
    Field field() const { return pres_.field; }

    struct DegreeBasis {
        std::vector<Monomial> monos;       // all free monomials at this degree, fixed order
        std::map<Monomial, int> mono_col;  // monomial -> column index
        std::vector<int> basis_cols;       // quotient basis = non-pivot columns, ascending
        Matrix nf;                         // dim x #monos: normal-form coordinates per monomial
        std::vector<std::string> labels;
        int dim() const { return static_cast<int>(basis_cols.size()); }
    };

    /// Degree-j quotient basis and normal form (degree < 0 is the zero space).
    const DegreeBasis& basis(int j) const;
    int dim(int j) const { return j < 0 ? 0 : basis(j).dim(); }

    GradedTable hilbert_function(Window w) const;

    /// Homogeneous element in normal form: coefficient column over basis(degree).
    struct Elem {
        int degree = 0;
        Matrix coeffs;  // dim(degree) x 1
    };
    Elem zero(int degree) const;
    Elem one() const;
    Elem generator(int i) const;
    Elem from_poly(const FreePoly& poly, int degree) const;
    bool is_zero(const Elem& e) const { return e.coeffs.is_zero(); }

    Elem multiply(const Elem& a, const Elem& b) const;
    Elem power(const Elem& a, int n) const;

    /// Structure constants basis(d1) ⊗ basis(d2) -> basis(d1+d2); columns in
    /// i1-major order (col = i1 * dim(d2) + i2). Cached.
    const Matrix& mult_tensor(int d1, int d2) const;

    /// Matrix of left multiplication by `a`: A_j -> A_{j+|a|}.
    Matrix mult_matrix(const Elem& a, int j) const;

    std::string render_elem(const Elem& e) const;

private:
    Presentation pres_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<DegreeBasis>> memo_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Matrix>> tensor_memo_;
    DegreeBasis build_basis(int j) const;
};

}  // namespace dualab
