#pragma once

#include <map>
#include <string>
#include <vector>

namespace dualab {

/// Closed integer interval of internal degrees. Empty when lo > hi.
struct Window {
    int lo = 0;
    int hi = -1;
    bool contains(int j) const { return lo <= j && j <= hi; }
    int span() const { return hi - lo + 1; }
    friend bool operator==(const Window&, const Window&) = default;
};

/// Finitely supported map degree -> dimension, with optional basis labels.
struct GradedVectorSpace {
    Window window;
    std::map<int, int> dims;  // nonzero entries only
    std::map<int, std::vector<std::string>> labels;

    int dim(int j) const {
        auto it = dims.find(j);
        return it == dims.end() ? 0 : it->second;
    }
    void set_dim(int j, int d) {
        if (d != 0) dims[j] = d;
    }
    long total_dim() const {
        long t = 0;
        for (auto& [j, d] : dims) t += d;
        return t;
    }
    bool empty() const { return dims.empty(); }
};

/// Degree -> dimension table (the universal single-graded output shape).
using GradedTable = std::map<int, long>;

/// (homological/cohomological index, internal degree) -> dimension.
using BigradedTable = std::map<std::pair<int, int>, long>;

}  // namespace dualab
