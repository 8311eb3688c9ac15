#ifndef OIDEAL_FIELD_HPP
#define OIDEAL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "oideal/errors.hpp"

namespace oideal {

enum class FieldKind { rationals, prime_field };

// Exact coefficient field: QQ (arbitrary precision) or F_p for a prime
// p < 2^31. Prime-field values are kept as canonical integers in [0, p)
// with denominator 1, so one mpq_class storage type serves both fields.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    static Field prime(long p);

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }

    mpq_class reduce(const mpq_class& a) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
    mpq_class neg(const mpq_class& a) const { return reduce(-a); }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    bool is_zero(const mpq_class& a) const { return reduce(a) == 0; }
    bool equal(const mpq_class& a, const mpq_class& b) const { return reduce(a) == reduce(b); }

    mpq_class from_long(long v) const { return reduce(mpq_class(v)); }
    mpq_class parse(const std::string& text) const;
    std::string to_string(const mpq_class& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

private:
    Field(FieldKind k, long p) : kind_(k), p_(p) {}
    FieldKind kind_;
    long p_;
};

}  // namespace oideal

#endif
