#ifndef OIDEAL_MONOMIAL_HPP
#define OIDEAL_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "oideal/errors.hpp"

namespace oideal {

// Exponent vector with cached total degree. Comparison is graded reverse
// lexicographic: higher total degree wins; on ties the rightmost nonzero
// entry of the exponent difference decides (negative means greater).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(int nvars, int i);

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial mul(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // quotient o / this of exponent vectors; caller guarantees divisibility
    Monomial divide_into(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial pow(int e) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// strong ordering under grevlex; throws on length mismatch
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b);

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == std::strong_ordering::less;
}
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) == std::strong_ordering::greater;
}

// All monomials of the given total degree in nvars variables, listed in
// grevlex-descending order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace oideal

#endif
