#include "oideal/graded_map.hpp"

#include <sstream>

namespace oideal {

long FreeModule::piece_dim(int nvars, int t) const {
    long total = 0;
    for (int tw : twists) {
        int d = t - tw;
        if (d < 0) continue;
        total += static_cast<long>(monomials_of_degree(nvars, d).size());
    }
    return total;
}

GradedMap::GradedMap(RingPtr ring, FreeModule target, FreeModule source,
                     std::vector<std::vector<Poly>> entries)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)),
      entries_(std::move(entries)) {
    if (!ring_) throw InvalidInputError("graded map needs a ring");
    if (static_cast<int>(entries_.size()) != target_.rank())
        throw InvalidInputError("graded map row count does not match target rank");
    for (int r = 0; r < target_.rank(); ++r) {
        if (static_cast<int>(entries_[r].size()) != source_.rank())
            throw InvalidInputError("graded map column count does not match source rank");
        for (int c = 0; c < source_.rank(); ++c) {
            const Poly& e = entries_[r][c];
            require_same_ring(e.ring(), ring_, "graded map entries");
            if (e.is_zero()) continue;
            if (!e.is_homogeneous())
                throw InvalidInputError("graded map entry (" + std::to_string(r) + "," +
                                        std::to_string(c) + ") is not homogeneous");
            int expected = source_.twists[c] - target_.twists[r];
            if (e.degree() != expected)
                throw InvalidInputError("graded map entry (" + std::to_string(r) + "," +
                                        std::to_string(c) + ") has degree " +
                                        std::to_string(e.degree()) + ", expected " +
                                        std::to_string(expected));
        }
    }
}

GradedMap GradedMap::zero(RingPtr ring, FreeModule target, FreeModule source) {
    std::vector<std::vector<Poly>> e(target.rank(),
                                     std::vector<Poly>(source.rank(), Poly::zero(ring)));
    return GradedMap(std::move(ring), std::move(target), std::move(source), std::move(e));
}

GradedMap GradedMap::identity(RingPtr ring, const FreeModule& F) {
    std::vector<std::vector<Poly>> e(F.rank(), std::vector<Poly>(F.rank(), Poly::zero(ring)));
    for (int i = 0; i < F.rank(); ++i) e[i][i] = Poly::constant(ring, 1);
    return GradedMap(std::move(ring), F, F, std::move(e));
}

GradedMap GradedMap::from_columns(RingPtr ring, const FreeModule& target,
                                  const std::vector<VecP>& cols) {
    FreeModule source;
    std::vector<std::vector<Poly>> e(target.rank(), std::vector<Poly>(cols.size(), Poly::zero(ring)));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != target.rank())
            throw InvalidInputError("column rank mismatch");
        int deg = 0;
        bool found = false;
        for (int r = 0; r < target.rank(); ++r) {
            const Poly& p = cols[c][r];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous()) throw InvalidInputError("column entry not homogeneous");
            int d = p.degree() + target.twists[r];
            if (found && d != deg)
                throw InvalidInputError("column is not a homogeneous module element");
            deg = d;
            found = true;
        }
        source.twists.push_back(found ? deg : 0);
        for (int r = 0; r < target.rank(); ++r) e[r][c] = cols[c][r];
    }
    return GradedMap(std::move(ring), target, std::move(source), std::move(e));
}

VecP GradedMap::column(int c) const {
    VecP out;
    out.reserve(static_cast<size_t>(rows()));
    for (int r = 0; r < rows(); ++r) out.push_back(entries_[r][c]);
    return out;
}

std::vector<VecP> GradedMap::columns() const {
    std::vector<VecP> out;
    out.reserve(static_cast<size_t>(cols()));
    for (int c = 0; c < cols(); ++c) out.push_back(column(c));
    return out;
}

VecP GradedMap::apply(const VecP& v) const {
    if (static_cast<int>(v.size()) != cols()) throw InvalidInputError("apply: rank mismatch");
    VecP out = vec_zero(ring_, rows());
    for (int c = 0; c < cols(); ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < rows(); ++r) {
            if (entries_[r][c].is_zero()) continue;
            out[r] = out[r].add(entries_[r][c].mul(v[c]));
        }
    }
    return out;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
    require_same_ring(ring_, other.ring_, "compose");
    if (!(source_ == other.target_))
        throw InvalidInputError("compose: shapes do not match");
    std::vector<std::vector<Poly>> e(rows(), std::vector<Poly>(other.cols(), Poly::zero(ring_)));
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < other.cols(); ++c) {
            Poly acc = Poly::zero(ring_);
            for (int k = 0; k < cols(); ++k) {
                if (entries_[r][k].is_zero() || other.entries_[k][c].is_zero()) continue;
                acc = acc.add(entries_[r][k].mul(other.entries_[k][c]));
            }
            e[r][c] = std::move(acc);
        }
    return GradedMap(ring_, target_, other.source_, std::move(e));
}

GradedMap compose(const GradedMap& a, const GradedMap& b) { return a.compose(b); }

GradedMap GradedMap::dual() const {
    FreeModule ns, nt;
    for (int tw : source_.twists) nt.twists.push_back(-tw);
    for (int tw : target_.twists) ns.twists.push_back(-tw);
    std::vector<std::vector<Poly>> e(cols(), std::vector<Poly>(rows(), Poly::zero(ring_)));
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) e[c][r] = entries_[r][c];
    return GradedMap(ring_, std::move(nt), std::move(ns), std::move(e));
}

GradedMap GradedMap::negate() const {
    std::vector<std::vector<Poly>> e(entries_);
    for (auto& row : e)
        for (auto& p : row) p = p.neg();
    return GradedMap(ring_, target_, source_, std::move(e));
}

bool GradedMap::is_zero() const {
    for (const auto& row : entries_)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

bool GradedMap::entries_in_maximal_ideal() const {
    for (const auto& row : entries_)
        for (const auto& p : row)
            if (p.constant_coeff() != 0) return false;
    return true;
}

std::vector<std::string> GradedMap::entry_strings() const {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(rows() * cols()));
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < cols(); ++c) out.push_back(entries_[r][c].to_string());
    return out;
}

std::string GradedMap::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows(); ++r) {
        if (r) os << "; ";
        for (int c = 0; c < cols(); ++c) {
            if (c) os << ", ";
            os << entries_[r][c].to_string();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace oideal
