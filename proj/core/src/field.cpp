#include "oideal/field.hpp"

namespace oideal {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(long p) {
    if (p <= 0 || p >= (1L << 31) || !is_prime(p))
        throw InvalidInputError("field characteristic must be a prime < 2^31, got " + std::to_string(p));
    return Field(FieldKind::prime_field, p);
}

mpq_class Field::reduce(const mpq_class& a) const {
    if (kind_ == FieldKind::rationals) {
        mpq_class r = a;
        r.canonicalize();
        return r;
    }
    mpz_class p(p_);
    mpz_class num = a.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = a.get_den() % p;
    if (den < 0) den += p;
    if (den == 0) throw InvalidInputError("division by zero in F_" + std::to_string(p_));
    if (den != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw InvalidInputError("non-invertible denominator in F_" + std::to_string(p_));
        num = (num * dinv) % p;
    }
    return mpq_class(num);
}

mpq_class Field::inv(const mpq_class& a) const {
    mpq_class r = reduce(a);
    if (r == 0) throw InvalidInputError("division by zero");
    if (kind_ == FieldKind::rationals) return mpq_class(1) / r;
    mpz_class p(p_), x = r.get_num(), xinv;
    if (mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InvalidInputError("non-invertible element in F_" + std::to_string(p_));
    return mpq_class(xinv);
}

mpq_class Field::parse(const std::string& text) const {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw InvalidInputError("bad coefficient literal: '" + text + "'");
    v.canonicalize();
    return reduce(v);
}

std::string Field::to_string(const mpq_class& a) const { return reduce(a).get_str(); }

std::string Field::describe() const {
    return kind_ == FieldKind::rationals ? "QQ" : "Fp " + std::to_string(p_);
}

}  // namespace oideal
