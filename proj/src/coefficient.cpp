#include "gincalc/coefficient.hpp"

#include <stdexcept>

namespace gincalc {

namespace {

void check_same_char(const Coeff& a, const Coeff& b) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument("coefficient characteristics differ");
}

mpz_class mod_p(const mpz_class& v, unsigned long p) {
    mpz_class r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r;
}

}  // namespace

Coeff Coeff::rational(mpq_class q) {
    q.canonicalize();
    return Coeff(std::move(q), 0);
}

Coeff Coeff::integer(long v, unsigned long characteristic) {
    Coeff c(mpq_class(v), characteristic);
    c.reduce();
    return c;
}

Coeff Coeff::from_string(const std::string& s, unsigned long characteristic) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad coefficient literal: " + s);
    q.canonicalize();
    Coeff c(std::move(q), characteristic);
    c.reduce();
    return c;
}

void Coeff::reduce() {
    v_.canonicalize();
    if (p_ == 0) return;
    mpz_class num = mod_p(v_.get_num(), p_);
    if (v_.get_den() != 1) {
        mpz_class den = mod_p(v_.get_den(), p_);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
            throw std::invalid_argument("coefficient denominator vanishes mod p");
        num = mod_p(num * inv, p_);
    }
    v_ = mpq_class(num);
}

Coeff Coeff::operator+(const Coeff& o) const {
    check_same_char(*this, o);
    Coeff r(v_ + o.v_, p_);
    r.reduce();
    return r;
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_same_char(*this, o);
    Coeff r(v_ - o.v_, p_);
    r.reduce();
    return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_same_char(*this, o);
    Coeff r(v_ * o.v_, p_);
    r.reduce();
    return r;
}

Coeff Coeff::operator/(const Coeff& o) const {
    check_same_char(*this, o);
    return *this * o.inverse();
}

Coeff Coeff::operator-() const {
    Coeff r(-v_, p_);
    r.reduce();
    return r;
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw std::invalid_argument("division by zero coefficient");
    if (p_ == 0) return Coeff(1 / v_, 0);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), numerator().get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Coeff(mpq_class(mod_p(inv, p_)), p_);
}

std::string Coeff::str() const { return v_.get_str(); }

}  // namespace gincalc
