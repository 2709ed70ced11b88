#ifndef GINCALC_COEFFICIENT_HPP
#define GINCALC_COEFFICIENT_HPP

#include <gmpxx.h>

#include <string>

namespace gincalc {

/// Exact field coefficient. Over characteristic 0 this is a normalized
/// rational (canonical mpq form, positive denominator); over characteristic
/// p it is the residue in [0, p) with denominator 1.
class Coeff {
public:
    /// Zero of characteristic 0 by default.
    Coeff() : v_(0), p_(0) {}

    static Coeff rational(mpq_class q);
    static Coeff integer(long v, unsigned long characteristic = 0);
    /// Parse "p/q" or integer literal into the given characteristic.
    static Coeff from_string(const std::string& s, unsigned long characteristic);

    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    const mpq_class& value() const { return v_; }
    /// Numerator / denominator of the canonical representation.
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;  // throws on division by zero
    Coeff operator-() const;
    Coeff inverse() const;

    bool operator==(const Coeff& o) const { return p_ == o.p_ && v_ == o.v_; }

    std::string str() const;

private:
    Coeff(mpq_class v, unsigned long p) : v_(std::move(v)), p_(p) {}
    void reduce();  // canonicalize; fold into [0,p) when p_ > 0

    mpq_class v_;
    unsigned long p_;
};

}  // namespace gincalc

#endif
