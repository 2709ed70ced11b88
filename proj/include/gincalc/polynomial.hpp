#ifndef GINCALC_POLYNOMIAL_HPP
#define GINCALC_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "gincalc/coefficient.hpp"
#include "gincalc/monomial.hpp"
#include "gincalc/ring.hpp"
#include "gincalc/term_order.hpp"

namespace gincalc {

struct Term {
    Monomial mono;
    Coeff coeff;
};

/// Sparse multivariate polynomial with exact coefficients. Terms are kept
/// in a canonical order-independent form (no zero coefficients, no
/// duplicate monomials, sorted descending by the canonical monomial
/// comparison); the active term order is a parameter of the operations
/// that need one, not part of the value.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Coeff& c);
    static Polynomial monomial(RingPtr ring, Monomial m, Coeff c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_monomial(const Monomial& m, const Coeff& c) const;

    bool operator==(const Polynomial& o) const;

    /// Maximal term under ord. Throws std::invalid_argument on zero input.
    const Term& leading_term(TermOrder ord) const;
    /// All terms, sorted descending under ord.
    std::vector<Term> sorted_terms(TermOrder ord) const;

    /// Divide by the gcd of the integer coefficients (after clearing
    /// denominators) and make the canonically-largest monomial's coefficient
    /// positive. Over F_p, makes the polynomial monic at that monomial.
    /// The result generates the same ideal.
    Polynomial primitive_part() const;

    /// Debug / error-message rendering; the canonical writer lives in ideal_io.
    std::string str() const;

private:
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Substitute x_j -> sum_k g[j][k] * x_k for the n x n integer matrix g and
/// expand. A ring homomorphism; preserves degree of homogeneous input.
Polynomial apply_linear_substitution(const Polynomial& p,
                                     const std::vector<std::vector<long>>& g);

}  // namespace gincalc

#endif
