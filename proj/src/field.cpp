#include "dualab/field.hpp"

#include <stdexcept>

namespace dualab {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    return Field(p);
}

std::optional<Field> Field::from_tag(const std::string& tag) {
    if (tag == "Q") return rationals();
    if (tag.size() >= 2 && tag[0] == 'F') {
        long long p = 0;
        for (size_t i = 1; i < tag.size(); ++i) {
            if (tag[i] < '0' || tag[i] > '9') return std::nullopt;
            p = p * 10 + (tag[i] - '0');
            if (p > 1'000'000'000) return std::nullopt;
        }
        if (!is_prime(p)) return std::nullopt;
        return Field(p);
    }
    return std::nullopt;
}

std::string Field::tag() const {
    return is_prime_field() ? "F" + std::to_string(p_) : std::string("Q");
}

}  // namespace dualab
