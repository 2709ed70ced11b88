#ifndef GINCALC_TESTS_HELPERS_HPP
#define GINCALC_TESTS_HELPERS_HPP

#include <sstream>
#include <string>

#include "gincalc/ideal_io.hpp"

namespace gincalc::testing {

inline std::string ring_line(const RingPtr& ring) {
    std::ostringstream os;
    os << "ring " << ring->characteristic();
    for (const auto& v : ring->var_names()) os << " " << v;
    return os.str();
}

/// Parse a single polynomial in the given ring.
inline Polynomial poly(const RingPtr& ring, const std::string& s) {
    return parse_ideal(ring_line(ring) + "\n" + s + "\n").polys.at(0);
}

/// Parse a single monomial (one-term polynomial) in the given ring.
inline Monomial mono(const RingPtr& ring, const std::string& s) {
    return poly(ring, s).terms().at(0).mono;
}

/// Parse "x1^2, x1*x2, ..." into a monomial ideal; "" is the zero ideal.
inline MonomialIdeal mideal(const RingPtr& ring, const std::string& gens) {
    std::vector<Monomial> ms;
    std::string current;
    std::istringstream is(gens);
    while (std::getline(is, current, ','))
        if (current.find_first_not_of(" \t") != std::string::npos)
            ms.push_back(mono(ring, current));
    return MonomialIdeal(ring, std::move(ms));
}

}  // namespace gincalc::testing

#endif
