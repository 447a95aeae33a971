#pragma once

#include <map>
#include <string>
#include <vector>

#include "dualab/field.hpp"

namespace dualab {

struct Generator {
    std::string name;
    int degree = 1;   // >= 1, connected graded
    bool odd = false; // sign-rule parity; ignored in characteristic 2
};

/// Monomial of the free graded-commutative algebra: exponent vector aligned
/// with the generator list. Odd generators in characteristic != 2 square to
/// zero, so their exponents stay in {0, 1}.
struct Monomial {
    std::vector<int> exp;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Homogeneous element of the free graded-commutative algebra.
using FreePoly = std::map<Monomial, Rat>;

/// A finitely presented connected graded-commutative algebra.
struct Presentation {
    Field field = Field::rationals();
    std::vector<Generator> gens;
    std::vector<FreePoly> relations;     // each homogeneous
    std::vector<int> relation_degrees;

    int num_gens() const { return static_cast<int>(gens.size()); }
    int monomial_degree(const Monomial& m) const;
    /// Max generator degree; 1 when there are no generators.
    int d_max() const;
    /// Min generator degree; 1 when there are no generators.
    int d_min() const;
    int max_relation_degree() const;
    bool char_two() const { return field.characteristic() == 2; }

    std::string render(const Monomial& m) const;
};

/// Product of two canonical monomials. Returns sign in {1, -1} and the
/// product, or sign 0 when an odd generator squares away (char != 2).
struct MonoProduct {
    int sign = 0;
    Monomial mono;
};
MonoProduct mono_mul(const Presentation& p, const Monomial& a, const Monomial& b);

/// All monomials of the given total degree, in the fixed order: descending
/// lexicographic on exponent vectors (earlier generators weigh more).
std::vector<Monomial> enumerate_monomials(const Presentation& p, int degree);

FreePoly poly_add(const FreePoly& a, const FreePoly& b);
FreePoly poly_scale(const FreePoly& a, const Rat& c);
FreePoly poly_mul(const Presentation& p, const FreePoly& a, const FreePoly& b);

}  // namespace dualab
