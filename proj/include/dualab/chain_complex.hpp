#pragma once

#include <map>

#include "dualab/graded.hpp"
#include "dualab/matrix.hpp"

namespace dualab {

/// Bounded complex of graded vector spaces with degree-preserving
/// differentials d_s : term(s) -> term(s-1). Degree shifts live in the terms,
/// never in the maps, so every internal degree is an independent complex of
/// ordinary vector spaces.
///
/// The constructor checks matrix shapes and that d∘d = 0 in every bidegree;
/// it throws MalformedComplex otherwise.
class ChainComplex {
public:
    ChainComplex(Field f, std::map<int, GradedVectorSpace> terms,
                 std::map<int, std::map<int, Matrix>> diffs);

    Field field() const { return field_; }
    int s_min() const { return s_min_; }
    int s_max() const { return s_max_; }
    const GradedVectorSpace& term(int s) const;
    /// Differential at homological index s, internal degree j; a zero matrix
    /// of the correct shape when no block was stored.
    Matrix diff(int s, int j) const;

    /// H_s per internal degree: dim ker d_s − rank d_{s+1}.
    GradedVectorSpace homology(int s) const;

    /// Good truncation killing homology above n: term n+1 becomes the image
    /// of d_{n+1} inside term n.
    ChainComplex truncate_above(int n) const;
    /// Good truncation killing homology below n: term n-1 becomes the image
    /// of d_n, with d_n corestricted.
    ChainComplex truncate_below(int n) const;

    /// Union of the terms' degree windows.
    Window degree_window() const;

private:
    Field field_;
    int s_min_ = 0, s_max_ = -1;
    std::map<int, GradedVectorSpace> terms_;
    std::map<int, std::map<int, Matrix>> diffs_;
};

/// Block-diagonal direct sum.
ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

}  // namespace dualab
