#ifndef GINCALC_GROEBNER_HPP
#define GINCALC_GROEBNER_HPP

#include <vector>

#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"

namespace gincalc {

/// A reduced Groebner basis: leading monomials pairwise indivisible, every
/// non-leading term irreducible modulo the other leading terms. Elements are
/// normalized to primitive integer form with positive leading coefficient
/// over Q (monic over F_p), sorted by ascending leading monomial.
struct GroebnerBasis {
    RingPtr ring;
    TermOrder order;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> source;

    /// Minimal generators of the ideal of leading monomials.
    MonomialIdeal leading_ideal() const;
};

/// Remainder of f on division by G (divisors tried in sequence order, every
/// term reduced). f - result lies in the ideal generated by G and no term of
/// the result is divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       TermOrder ord);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by the order then input index) and the product and
/// chain criteria. Throws UnitIdealError if the ideal is the whole ring.
GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& F, TermOrder ord);

/// in(F): the initial ideal of the ideal generated by F.
MonomialIdeal initial_ideal(const std::vector<Polynomial>& F, TermOrder ord);

}  // namespace gincalc

#endif
