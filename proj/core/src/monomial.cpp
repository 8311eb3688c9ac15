#include "oideal/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace oideal {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw InvalidInputError("negative exponent in monomial");
        degree_ += e;
    }
}

Monomial Monomial::variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::mul(const Monomial& o) const {
    if (nvars() != o.nvars()) throw InvalidInputError("monomial length mismatch in mul");
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) throw InvalidInputError("monomial length mismatch in divides");
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    std::vector<int> e(o.exps_);
    for (int i = 0; i < nvars(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] = std::max(e[i], o.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (int i = 0; i < nvars(); ++i) e[i] = std::min(e[i], o.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::pow(int p) const {
    std::vector<int> e(exps_);
    for (int& v : e) v *= p;
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
        if (exps_[i] > 0 && o.exps_[i] > 0) return false;
    return true;
}

std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw InvalidInputError("monomial length mismatch in grevlex_compare");
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exponent(i) != b.exponent(i))
            // rightmost nonzero difference negative => a greater
            return a.exponent(i) < b.exponent(i) ? std::strong_ordering::greater
                                                 : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

namespace {

void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (nvars == 0) {
        if (degree == 0) return {Monomial(std::vector<int>{})};
        return {};
    }
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, 0, degree, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& x, const Monomial& y) { return grevlex_greater(x, y); });
    return out;
}

}  // namespace oideal
