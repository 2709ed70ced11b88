#ifndef GINCALC_BETTI_HPP
#define GINCALC_BETTI_HPP

#include <map>
#include <vector>

#include "gincalc/invariants.hpp"
#include "gincalc/monomial_ideal.hpp"

namespace gincalc {

/// Graded Betti numbers beta_{i,j} of either a stable ideal J or its
/// quotient S/J, with the row maxima b_i = max{ j : beta_{i,j} != 0 }.
struct BettiTable {
    enum class Subject { ideal, quotient };

    Subject subject = Subject::ideal;
    std::map<std::pair<int, int>, long> beta;  // (i, j) -> multiplicity, nonzero only
    std::vector<ExtInt> b;                     // b[i], -inf for an empty row
    int projective_dimension = 0;              // largest i with a nonzero row

    long beta_at(int i, int j) const;
    /// Shifted table of S/J: beta_{0,0} = 1, beta_{i,j}(S/J) = beta_{i-1,j}(J).
    BettiTable quotient_table() const;
};

/// An extremal Betti number beta_{l, m+l}: nonzero with beta_{i, j+i} = 0
/// for every other (i, j) with i >= l, j >= m.
struct ExtremalBetti {
    int l = 0;
    int m = 0;
    long multiplicity = 0;

    bool operator==(const ExtremalBetti&) const = default;
};

/// Eliahou-Kervaire Betti numbers of a stable monomial ideal:
/// beta_{i,j}(J) = sum over minimal generators u of degree j-i of
/// binom(m(u)-1, i). Requires characteristic 0 and J Borel-fixed.
BettiTable ek_betti(const MonomialIdeal& J);

/// Profiles of S/J read off the resolution: reg_t = max{ b_i - i : i >= n-t },
/// a*_t = max{ b_i : i >= n-t } - n, over the quotient table.
InvariantProfile profiles_from_betti(const MonomialIdeal& J);
InvariantProfile profiles_from_betti(const BettiTable& quotient_table, int nvars);

/// All extremal positions of the given table, with multiplicities.
std::vector<ExtremalBetti> extremal_betti(const BettiTable& table);

/// l-regularity read off the table: max{ b_i - i : i >= l }.
ExtInt l_regularity(const BettiTable& table, int l);

}  // namespace gincalc

#endif
