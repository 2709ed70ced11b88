#ifndef GINCALC_TERM_ORDER_HPP
#define GINCALC_TERM_ORDER_HPP

#include <optional>
#include <string>

#include "gincalc/monomial.hpp"

namespace gincalc {

/// Supported term orders, all with x1 > x2 > ... > xn.
enum class TermOrder { lex, deglex, degrevlex };

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Total multiplicative comparison of two monomials in the same ring.
/// lex: first nonzero entry of a-b decides; deglex/degrevlex compare
/// total degree first. The degrevlex tie-break: a > b iff the last
/// nonzero entry of a-b is negative.
Cmp monomial_compare(const Monomial& a, const Monomial& b, TermOrder ord);

inline bool monomial_less(const Monomial& a, const Monomial& b, TermOrder ord) {
    return monomial_compare(a, b, ord) == Cmp::LT;
}
inline bool monomial_greater(const Monomial& a, const Monomial& b, TermOrder ord) {
    return monomial_compare(a, b, ord) == Cmp::GT;
}

std::string term_order_name(TermOrder ord);
std::optional<TermOrder> term_order_from_name(const std::string& name);

}  // namespace gincalc

#endif
