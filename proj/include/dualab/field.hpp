#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace dualab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Coefficient field: F_p for a prime p, or Q.
/// All arithmetic in the engine is exact; there is no floating point anywhere.
class Field {
public:
    static Field prime(long long p);
    static Field rationals() { return Field(0); }

    /// Parse a field tag: "F<p>" or "Q". Returns nullopt for anything else
    /// (including F_q with q non-prime).
    static std::optional<Field> from_tag(const std::string& tag);

    bool is_prime_field() const { return p_ != 0; }
    long long characteristic() const { return p_; }
    std::string tag() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

private:
    explicit Field(long long p) : p_(p) {}
    long long p_ = 0;  // 0 means Q
};

bool is_prime(long long n);

}  // namespace dualab
