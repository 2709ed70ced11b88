#include "gincalc/term_order.hpp"

#include <stdexcept>

namespace gincalc {

Cmp monomial_compare(const Monomial& a, const Monomial& b, TermOrder ord) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial_compare: mismatched variable counts");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    const int n = a.nvars();

    if (ord != TermOrder::lex) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? Cmp::LT : Cmp::GT;
    }
    switch (ord) {
        case TermOrder::lex:
        case TermOrder::deglex:
            for (int i = 0; i < n; ++i) {
                if (ea[i] != eb[i]) return ea[i] > eb[i] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        case TermOrder::degrevlex:
            for (int i = n - 1; i >= 0; --i) {
                if (ea[i] != eb[i]) return ea[i] < eb[i] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
    }
    return Cmp::EQ;  // unreachable
}

std::string term_order_name(TermOrder ord) {
    switch (ord) {
        case TermOrder::lex: return "lex";
        case TermOrder::deglex: return "deglex";
        case TermOrder::degrevlex: return "degrevlex";
    }
    return "?";
}

std::optional<TermOrder> term_order_from_name(const std::string& name) {
    if (name == "lex") return TermOrder::lex;
    if (name == "deglex") return TermOrder::deglex;
    if (name == "degrevlex") return TermOrder::degrevlex;
    return std::nullopt;
}

}  // namespace gincalc
