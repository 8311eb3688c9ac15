#ifndef OIDEAL_IDEAL_HPP
#define OIDEAL_IDEAL_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "oideal/module_gb.hpp"
#include "oideal/poly.hpp"

namespace oideal {

// Reduced Groebner basis under grevlex: monic, interreduced, sorted by
// ascending leading monomial. Unique for a given ideal.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> elements;

    bool is_unit() const;
    bool is_zero() const { return elements.empty(); }
    std::vector<Monomial> leading_monomials() const;
};

// Homogeneous ideal with a set-once Groebner cache shared across copies.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    const GroebnerBasis& groebner(const GBLimits& lim = default_limits()) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const GroebnerBasis> gb;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

GroebnerBasis buchberger(const Ideal& I, const GBLimits& lim = default_limits());

Poly normal_form(const Poly& f, const GroebnerBasis& G,
                 ReduceStrategy strategy = ReduceStrategy::prefer_first);

// normal form plus quotients: f = sum(q_i * G_i) + remainder
struct DivisionResult {
    Poly remainder;
    std::vector<Poly> quotients;
};
DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors,
                      ReduceStrategy strategy = ReduceStrategy::prefer_first);

bool ideal_contains(const Ideal& I, const Poly& f, const GBLimits& lim = default_limits());
bool ideal_equal(const Ideal& I, const Ideal& J, const GBLimits& lim = default_limits());
bool is_proper(const Ideal& I, const GBLimits& lim = default_limits());

// Krull dimension of R/I via independent variable subsets modulo the leading
// term ideal. Throws UnitIdealError for the unit ideal.
int dim_quotient(const Ideal& I, const GBLimits& lim = default_limits());

// grade(I) = height(I) = n - dim(R/I); valid because R is regular.
int grade_of_ideal(const Ideal& I, const GBLimits& lim = default_limits());

// dim_k (R/I)_t = number of degree-t standard monomials
long hilbert_function(const Ideal& I, int t, const GBLimits& lim = default_limits());

// (I : J) = { f : fJ <= I }, computed elementwise via intersection and exact
// division; generators are verified by direct membership.
Ideal colon(const Ideal& I, const Ideal& J, const GBLimits& lim = default_limits());

Ideal intersect(const Ideal& I, const Ideal& J, const GBLimits& lim = default_limits());

Ideal ideal_sum(const Ideal& I, const Ideal& J);

}  // namespace oideal

#endif
