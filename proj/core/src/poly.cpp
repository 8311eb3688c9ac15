#include "oideal/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace oideal {

namespace {

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

}  // namespace

std::string Ring::describe() const {
    std::string s = field.describe() + "[";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    return s + "]";
}

RingPtr make_ring(Field field, std::vector<std::string> vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw InvalidInputError("duplicate variable name '" + vars[i] + "'");
    return std::make_shared<const Ring>(Ring{field, std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw RingMismatchError(std::string("ring mismatch in ") + where);
}

Poly Poly::constant(RingPtr ring, const mpq_class& c) {
    return from_term(std::move(ring), Monomial::one(ring ? ring->nvars() : 0), c);
}

Poly Poly::variable(RingPtr ring, int i) {
    if (!ring || i < 0 || i >= ring->nvars()) throw InvalidInputError("variable index out of range");
    int n = ring->nvars();
    return from_term(std::move(ring), Monomial::variable(n, i), 1);
}

Poly Poly::from_term(RingPtr ring, Monomial m, const mpq_class& c) {
    std::vector<Term> t;
    t.push_back(Term{std::move(m), c});
    return from_terms(std::move(ring), std::move(t));
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    if (!ring) throw InvalidInputError("polynomial needs a ring");
    std::map<Monomial, mpq_class, GrevlexGreater> acc;
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars())
            throw InvalidInputError("monomial arity does not match ring");
        acc[t.mono] += t.coeff;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
        mpq_class r = ring->field.reduce(c);
        if (r != 0) out.push_back(Term{m, r});
    }
    return Poly(std::move(ring), std::move(out));
}

const Term& Poly::leading_term() const {
    if (is_zero()) throw InvalidInputError("leading term of zero polynomial");
    return terms_.front();
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (is_zero()) return std::nullopt;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) throw InvalidInputError("polynomial is not homogeneous");
    return d;
}

bool Poly::is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

mpq_class Poly::constant_coeff() const {
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return 0;
}

Poly Poly::add(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "add");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    const Field& k = ring_->field;
    while (i < terms_.size() && j < o.terms_.size()) {
        auto c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
        if (c == std::strong_ordering::greater) {
            out.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(o.terms_[j++]);
        } else {
            mpq_class s = k.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) out.push_back(Term{terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Poly(ring_, std::move(out));
}

Poly Poly::neg() const {
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = ring_->field.neg(t.coeff);
    return Poly(ring_, std::move(out));
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::mul(const Poly& o) const {
    require_same_ring(ring_, o.ring_, "mul");
    std::map<Monomial, mpq_class, GrevlexGreater> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc[a.mono.mul(b.mono)] += a.coeff * b.coeff;
    std::vector<Term> out;
    const Field& k = ring_->field;
    for (auto& [m, c] : acc) {
        mpq_class r = k.reduce(c);
        if (r != 0) out.push_back(Term{m, r});
    }
    return Poly(ring_, std::move(out));
}

Poly Poly::scale(const mpq_class& c) const {
    const Field& k = ring_->field;
    mpq_class r = k.reduce(c);
    if (r == 0) return zero(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out) t.coeff = k.mul(t.coeff, r);
    return Poly(ring_, std::move(out));
}

Poly Poly::mul_term(const Monomial& m, const mpq_class& c) const {
    const Field& k = ring_->field;
    mpq_class r = k.reduce(c);
    if (r == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono.mul(m), k.mul(t.coeff, r)});
    return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field.inv(leading_coeff()));
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class c = t.coeff;
        bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        mpq_class a = negative ? mpq_class(-c) : c;
        bool printed_coeff = false;
        if (a != 1 || t.mono.is_one()) {
            os << a.get_str();
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!first_factor) os << "*";
            os << ring_->vars[i];
            if (e > 1) os << "^" << e;
            first_factor = false;
        }
        first = false;
    }
    return os.str();
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    require_same_ring(f.ring(), g.ring(), "exact_divide");
    const Field& k = f.ring()->field;
    Poly rem = f;
    Poly quo = Poly::zero(f.ring());
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!g.leading_monomial().divides(lt.mono)) return std::nullopt;
        Monomial m = g.leading_monomial().divide_into(lt.mono);
        mpq_class c = k.div(lt.coeff, g.leading_coeff());
        quo = quo.add(Poly::from_term(f.ring(), m, c));
        rem = rem.sub(g.mul_term(m, c));
    }
    return quo;
}

Poly poly_pow(const Poly& f, int e) {
    if (e < 0) throw InvalidInputError("negative polynomial power");
    Poly r = Poly::constant(f.ring(), 1);
    for (int i = 0; i < e; ++i) r = r.mul(f);
    return r;
}

}  // namespace oideal
