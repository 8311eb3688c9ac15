#include "oideal/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace oideal {

bool GroebnerBasis::is_unit() const {
    for (const auto& g : elements)
        if (g.is_unit()) return true;
    return false;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_monomial());
    return out;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidInputError("ideal needs a ring");
    for (auto& g : gens) {
        require_same_ring(g.ring(), ring_, "ideal generators");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw InvalidInputError("ideal generator is not homogeneous: " + g.to_string());
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner(const GBLimits& lim) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(*this, lim));
    return *cache_->gb;
}

std::string Ideal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].to_string();
    }
    if (gens_.empty()) os << "0";
    os << ")";
    return os.str();
}

GroebnerBasis buchberger(const Ideal& I, const GBLimits& lim) {
    std::vector<VecP> cols;
    cols.reserve(I.gens().size());
    for (const auto& g : I.gens()) cols.push_back(VecP{g});
    ModuleGB gb = ModuleGB::compute(I.ring(), 1, cols, false, lim);
    GroebnerBasis out;
    out.ring = I.ring();
    for (const auto& b : gb.basis()) out.elements.push_back(b[0]);
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G, ReduceStrategy strategy) {
    require_same_ring(f.ring(), G.ring, "normal_form");
    DivisionResult d = divide(f, G.elements, strategy);
    return d.remainder;
}

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors, ReduceStrategy strategy) {
    const RingPtr& ring = f.ring();
    const Field& k = ring->field;
    int n = static_cast<int>(divisors.size());
    DivisionResult out{Poly::zero(ring), std::vector<Poly>(divisors.size(), Poly::zero(ring))};
    Poly work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        int r = -1;
        if (strategy == ReduceStrategy::prefer_first) {
            for (int i = 0; i < n; ++i)
                if (!divisors[i].is_zero() && divisors[i].leading_monomial().divides(lt.mono)) {
                    r = i;
                    break;
                }
        } else {
            for (int i = n - 1; i >= 0; --i)
                if (!divisors[i].is_zero() && divisors[i].leading_monomial().divides(lt.mono)) {
                    r = i;
                    break;
                }
        }
        if (r >= 0) {
            Monomial m = divisors[r].leading_monomial().divide_into(lt.mono);
            mpq_class c = k.div(lt.coeff, divisors[r].leading_coeff());
            work = work.sub(divisors[r].mul_term(m, c));
            out.quotients[r] = out.quotients[r].add(Poly::from_term(ring, m, c));
        } else {
            Poly t = Poly::from_term(ring, lt.mono, lt.coeff);
            out.remainder = out.remainder.add(t);
            work = work.sub(t);
        }
    }
    return out;
}

bool ideal_contains(const Ideal& I, const Poly& f, const GBLimits& lim) {
    return normal_form(f, I.groebner(lim)).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBLimits& lim) {
    const auto& a = I.groebner(lim).elements;
    const auto& b = J.groebner(lim).elements;
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool is_proper(const Ideal& I, const GBLimits& lim) { return !I.groebner(lim).is_unit(); }

int dim_quotient(const Ideal& I, const GBLimits& lim) {
    const GroebnerBasis& G = I.groebner(lim);
    if (G.is_unit()) throw UnitIdealError("dim(R/I) undefined for the unit ideal");
    int n = I.ring()->nvars();
    std::vector<Monomial> lead = G.leading_monomials();
    int best = 0;
    // a variable subset S is independent iff no leading monomial has support in S
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lead) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.exponent(i) > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

int grade_of_ideal(const Ideal& I, const GBLimits& lim) {
    return I.ring()->nvars() - dim_quotient(I, lim);
}

long hilbert_function(const Ideal& I, int t, const GBLimits& lim) {
    if (t < 0) return 0;
    const GroebnerBasis& G = I.groebner(lim);
    std::vector<Monomial> lead = G.leading_monomials();
    long count = 0;
    for (const auto& m : monomials_of_degree(I.ring()->nvars(), t)) {
        bool standard = true;
        for (const auto& l : lead)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
    }
    return count;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring(), "ideal_sum");
    std::vector<Poly> gens = I.gens();
    for (const auto& g : J.gens()) gens.push_back(g);
    return Ideal(I.ring(), std::move(gens));
}

namespace {

// re-generate by the reduced GB so emitted ideals have canonical generators
Ideal canonicalized(const Ideal& I, const GBLimits& lim) {
    return Ideal(I.ring(), I.groebner(lim).elements);
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const GBLimits& lim) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    const RingPtr& ring = I.ring();
    // h in I cap J exactly when (h, a, b) is a syzygy of the columns
    // [(1,1), (f_i,0), (0,g_j)]; the first coordinates of a syzygy
    // generating set generate the intersection.
    std::vector<VecP> cols;
    {
        VecP one{Poly::constant(ring, 1), Poly::constant(ring, 1)};
        cols.push_back(std::move(one));
    }
    for (const auto& f : I.gens()) cols.push_back(VecP{f, Poly::zero(ring)});
    for (const auto& g : J.gens()) cols.push_back(VecP{Poly::zero(ring), g});
    ModuleGB gb = ModuleGB::compute(ring, 2, cols, true, lim);
    std::vector<Poly> gens;
    for (const auto& s : gb.syzygies()) {
        const Poly& h = s[0];
        if (!h.is_zero()) gens.push_back(h);
    }
    Ideal out = canonicalized(Ideal(ring, std::move(gens)), lim);
    // two-way membership sanity on the generators we emit
    for (const auto& h : out.gens())
        if (!ideal_contains(I, h, lim) || !ideal_contains(J, h, lim))
            throw Error("internal: intersection generator failed membership verification");
    return out;
}

Ideal colon(const Ideal& I, const Ideal& J, const GBLimits& lim) {
    require_same_ring(I.ring(), J.ring(), "colon");
    const RingPtr& ring = I.ring();
    if (J.is_zero_ideal())
        return Ideal(ring, {Poly::constant(ring, 1)});  // (I : 0) = R
    bool first = true;
    Ideal acc(ring, {});
    for (const auto& g : J.gens()) {
        // (I : g) = (I cap (g)) / g
        Ideal meet = intersect(I, Ideal(ring, {g}), lim);
        std::vector<Poly> quots;
        for (const auto& h : meet.gens()) {
            auto q = exact_divide(h, g);
            if (!q) throw Error("internal: intersection with (g) produced a non-multiple of g");
            quots.push_back(*q);
        }
        Ideal part(ring, std::move(quots));
        acc = first ? part : intersect(acc, part, lim);
        first = false;
    }
    acc = canonicalized(acc, lim);
    // membership verification: every reported generator multiplies J into I
    for (const auto& f : acc.gens())
        for (const auto& g : J.gens())
            if (!ideal_contains(I, f.mul(g), lim))
                throw Error("internal: colon generator failed membership verification");
    return acc;
}

}  // namespace oideal
