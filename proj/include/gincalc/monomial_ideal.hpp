#ifndef GINCALC_MONOMIAL_IDEAL_HPP
#define GINCALC_MONOMIAL_IDEAL_HPP

#include <vector>

#include "gincalc/ext_int.hpp"
#include "gincalc/monomial.hpp"
#include "gincalc/ring.hpp"

namespace gincalc {

/// A proper monomial ideal, stored via its unique minimal generating set
/// (a divisibility antichain), canonically sorted. The empty generating set
/// encodes the zero ideal.
class MonomialIdeal {
public:
    /// Minimalizes the given generators. Throws UnitIdealError if the unit
    /// monomial is among them.
    MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

    static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    /// Maximum degree of a minimal generator; -1 for the zero ideal.
    int max_gen_degree() const;

    /// Membership: some minimal generator divides m.
    bool contains(const Monomial& m) const;

    /// (J : x_i), 1-based variable index.
    MonomialIdeal colon_by_variable(int i) const;
    /// J + (x_i).
    MonomialIdeal plus_variable(int i) const;
    /// Image of J in k[x_1..x_i] under x_{i+1},...,x_n -> 0: keeps the
    /// generators with m_index <= i, reinterpreted in the smaller ring.
    MonomialIdeal restrict_below(int i) const;

    bool operator==(const MonomialIdeal& o) const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

/// The colon degrees delta_i (one per variable, i = 1..n): the largest m
/// where [(J,x_n..x_{i+1}) : x_i]_m differs from (J,x_n..x_{i+1})_m; -inf if
/// they never differ, +inf if the colon quotient has infinite length.
struct DeltaProfile {
    std::vector<ExtInt> deltas;  // deltas[i-1] = delta_i
    bool filter_regular = true;  // no +inf entry

    const ExtInt& delta(int i) const { return deltas.at(i - 1); }
    int nvars() const { return static_cast<int>(deltas.size()); }
    /// Smallest variable index with an infinite entry; 0 if none.
    int first_infinite() const;
};

/// delta_i computed exactly from Hilbert numerators of the restricted ideal
/// and its colon: the difference series is a polynomial iff (1-t)^i divides
/// the numerator difference.
DeltaProfile delta_profile(const MonomialIdeal& J);

/// dim S/J = n minus the minimum size of a variable set meeting the support
/// of every minimal generator. Exhaustive search; requires n <= 16.
int krull_dimension(const MonomialIdeal& J);

/// Strong stability check (characteristic 0 only): every single swap
/// u * x_i / x_j of a minimal generator u (x_j | u, i < j) stays in J.
/// Throws CharNotZeroError in characteristic p.
bool is_borel_fixed(const MonomialIdeal& J);

/// Smallest strongly stable ideal containing the given monomials
/// (characteristic 0 only).
MonomialIdeal borel_closure(const RingPtr& ring, const std::vector<Monomial>& ms);

/// All monomials of degree <= bound not contained in J, canonically sorted.
std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& J, int bound);

/// "x1^2*x3" style rendering with the ring's variable names; "1" for the unit.
std::string monomial_str(const Ring& ring, const Monomial& m);
/// Comma-separated minimal generators; "0" for the zero ideal.
std::string ideal_str(const MonomialIdeal& J);

}  // namespace gincalc

#endif
