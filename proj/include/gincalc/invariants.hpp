#ifndef GINCALC_INVARIANTS_HPP
#define GINCALC_INVARIANTS_HPP

#include <vector>

#include "gincalc/ext_int.hpp"
#include "gincalc/monomial_ideal.hpp"

namespace gincalc {

/// The running cohomological maxima of the quotient ring S/J, one value per
/// truncation level t = 0..n-1:
///   reg_t(S/J)  = max{ a_i(S/J)+i : i <= t },
///   a*_t(S/J)   = max{ a_i(S/J)   : i <= t }.
/// Both are nondecreasing in t; level n-1 carries the full invariants.
/// Ideal-level regularity is the quotient value plus one.
struct InvariantProfile {
    std::vector<ExtInt> reg_q;    // reg_t(S/J), t = 0..n-1
    std::vector<ExtInt> astar_q;  // a*_t(S/J)

    int levels() const { return static_cast<int>(reg_q.size()); }
    ExtInt reg_full() const { return reg_q.empty() ? ExtInt::neg_inf() : reg_q.back(); }
    ExtInt astar_full() const { return astar_q.empty() ? ExtInt::neg_inf() : astar_q.back(); }
    ExtInt reg_ideal() const { return reg_full() + 1; }

    bool operator==(const InvariantProfile& o) const = default;
};

/// Colon route: reg_t(S/J) = max{ delta_i : i = n-t..n } and
/// a*_t(S/J) = max{ delta_i - (n-i) : i = n-t..n } from the colon-degree
/// profile. Requires x_n,...,x_1 filter-regular in S/J; otherwise throws
/// NotFilterRegularError carrying the offending variable index.
InvariantProfile profiles_colon(const MonomialIdeal& J);
InvariantProfile profiles_colon(const DeltaProfile& deltas);

/// Borel generator route (characteristic 0, J Borel-fixed):
/// reg_t(ideal) = max{ deg u : u minimal generator, m(u) >= n-t }, reported
/// as reg_t(S/J) = reg_t(ideal) - 1; a*_t(S/J) = max{ deg u + m(u) } - n - 1
/// over the same generators. Throws NotBorelFixedError / CharNotZeroError.
InvariantProfile profiles_borel(const MonomialIdeal& J);

/// reg_t of the ideal itself via the Borel route (max generator degree among
/// generators with m(u) >= n-t), for reporting alongside the quotient values.
std::vector<ExtInt> borel_reg_ideal_profile(const MonomialIdeal& J);

}  // namespace gincalc

#endif
