#ifndef GINCALC_HILBERT_HPP
#define GINCALC_HILBERT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gincalc {

class MonomialIdeal;

/// Dense univariate polynomial over Z, used for Hilbert series numerators.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({mpz_class(1)}); }
    /// 1 - t^d
    static IntPoly one_minus_power(int d);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int i) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    /// Multiply by t^k.
    IntPoly shifted(int k) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    mpz_class eval_at_one() const;
    /// Multiplicity of the root t = 1 (0 for the zero polynomial).
    int one_root_multiplicity() const;
    /// Exact quotient by (1 - t); requires eval_at_one() == 0.
    IntPoly div_one_minus_t() const;

    /// Coefficients 0..upto of the power series this(t) / (1-t)^n.
    std::vector<mpz_class> series_coeffs(int n, int upto) const;

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;  // c_[i] = coefficient of t^i, no trailing zeros
};

/// Numerator N(t) of the Hilbert series HS_{S/J} = N(t) / (1-t)^n, together
/// with the Krull dimension of S/J read off as the order of the pole at t=1.
struct HilbertNumerator {
    IntPoly numerator;
    int nvars = 0;
    int dimension = 0;

    /// dim_k (S/J)_m.
    long hf(int m) const;
    /// Hilbert function values for m = 0..upto.
    std::vector<long> hf_values(int upto) const;
};

/// Exact Hilbert numerator of S/J by pivot recursion: split at the variable
/// occurring in the most generators, HS_{S/J} = HS_{S/(J+(x))} + t * HS_{S/(J:x)};
/// base cases are the zero ideal and pairwise-coprime generators.
HilbertNumerator hilbert_numerator(const MonomialIdeal& J);

}  // namespace gincalc

#endif
