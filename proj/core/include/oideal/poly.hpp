#ifndef OIDEAL_POLY_HPP
#define OIDEAL_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "oideal/monomial.hpp"
#include "oideal/ring.hpp"

namespace oideal {

struct Term {
    Monomial mono;
    mpq_class coeff;
};

// Sparse exact-coefficient polynomial in canonical form: terms strictly
// descending under grevlex, no zero coefficients, no duplicate monomials.
// Values are immutable after construction and safe to share across threads.
class Poly {
public:
    Poly() = default;
    static Poly zero(RingPtr ring) { return Poly(std::move(ring), {}); }
    static Poly constant(RingPtr ring, const mpq_class& c);
    static Poly variable(RingPtr ring, int i);
    static Poly from_term(RingPtr ring, Monomial m, const mpq_class& c);
    // canonicalizes: sorts, merges, drops zeros
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const mpq_class& leading_coeff() const { return leading_term().coeff; }

    // max total degree among terms; -1 for the zero polynomial
    int degree() const;
    // common degree if homogeneous; nullopt for 0 (homogeneous of every degree)
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    mpq_class constant_coeff() const;
    bool is_constant() const { return is_zero() || (nterms() == 1 && terms_[0].mono.is_one()); }
    // nonzero constant
    bool is_unit() const { return nterms() == 1 && terms_[0].mono.is_one(); }

    Poly add(const Poly& o) const;
    Poly sub(const Poly& o) const;
    Poly mul(const Poly& o) const;
    Poly neg() const;
    Poly scale(const mpq_class& c) const;
    Poly mul_term(const Monomial& m, const mpq_class& c) const;
    Poly monic() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Poly operator+(const Poly& a, const Poly& b) { return a.add(b); }
inline Poly operator-(const Poly& a, const Poly& b) { return a.sub(b); }
inline Poly operator*(const Poly& a, const Poly& b) { return a.mul(b); }
inline Poly operator-(const Poly& a) { return a.neg(); }

// quotient f/g when g divides f exactly (division leaves no remainder)
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

Poly poly_pow(const Poly& f, int e);

}  // namespace oideal

#endif
