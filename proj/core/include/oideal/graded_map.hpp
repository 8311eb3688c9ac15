#ifndef OIDEAL_GRADED_MAP_HPP
#define OIDEAL_GRADED_MAP_HPP

#include <string>
#include <vector>

#include "oideal/ideal.hpp"
#include "oideal/module_gb.hpp"

namespace oideal {

// Graded free module: twists[i] is the degree of the i-th generator, so a
// term m*e_i has module degree deg(m) + twists[i].
struct FreeModule {
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    bool operator==(const FreeModule& o) const { return twists == o.twists; }

    // dim_k of the degree-t graded piece
    long piece_dim(int nvars, int t) const;
};

// Matrix of homogeneous polynomials between twisted free modules. Entry
// (r, c) is zero or homogeneous of degree source.twists[c] - target.twists[r];
// construction enforces this, so columns are homogeneous module elements.
class GradedMap {
public:
    GradedMap() = default;  // empty placeholder; assign before use
    GradedMap(RingPtr ring, FreeModule target, FreeModule source,
              std::vector<std::vector<Poly>> entries);

    static GradedMap zero(RingPtr ring, FreeModule target, FreeModule source);
    static GradedMap identity(RingPtr ring, const FreeModule& F);
    // build from columns (elements of target); source twists are the column degrees
    static GradedMap from_columns(RingPtr ring, const FreeModule& target,
                                  const std::vector<VecP>& cols);

    const RingPtr& ring() const { return ring_; }
    const FreeModule& source() const { return source_; }
    const FreeModule& target() const { return target_; }
    int rows() const { return target_.rank(); }
    int cols() const { return source_.rank(); }
    const Poly& entry(int r, int c) const { return entries_[r][c]; }
    const std::vector<std::vector<Poly>>& entries() const { return entries_; }

    VecP column(int c) const;
    std::vector<VecP> columns() const;
    VecP apply(const VecP& v) const;

    GradedMap compose(const GradedMap& then_me_after) const;  // this * other
    // Hom(-, R): transposed matrix, negated twists
    GradedMap dual() const;
    GradedMap negate() const;
    bool is_zero() const;
    // true when every entry has zero constant term (all entries in m)
    bool entries_in_maximal_ideal() const;

    std::vector<std::string> entry_strings() const;  // row-major
    std::string to_string() const;

private:
    RingPtr ring_;
    FreeModule source_, target_;
    std::vector<std::vector<Poly>> entries_;  // entries_[row][col]
};

// matrix product a*b where a: F1 -> F0, b: F2 -> F1, result F2 -> F0
GradedMap compose(const GradedMap& a, const GradedMap& b);

}  // namespace oideal

#endif
