#ifndef GINCALC_REDUCTION_HPP
#define GINCALC_REDUCTION_HPP

#include <cstdint>
#include <optional>

#include "gincalc/gin.hpp"
#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"

namespace gincalc {

/// Reduction number of S/I together with how it was obtained. The witness
/// is the pure power x_{n-d}^{r+1} for the Bresinsky-Hoa route and the top
/// standard-monomial degree of the artinian restriction for the direct route.
struct ReductionResult {
    enum class Route { direct, bh, combined };

    int dimension = 0;
    int r = 0;
    Route route = Route::bh;
    std::optional<Monomial> bh_witness;       // in the ring of the gin
    std::optional<int> direct_top_degree;
    bool agreement = true;                    // meaningful for combined
};

/// Least r >= 0 with x_{n-d}^{r+1} in J. Throws NoPowerError when no power
/// of x_{n-d} lies in J (wrong d, or J not generic).
ReductionResult bh_reduction(const MonomialIdeal& J, int d);

/// Lemma 4.1 route in the given coordinates: d = dim S/in(I); the image of
/// (in(I), x_n..x_{n-d+1}) in k[x_1..x_{n-d}] must be artinian, and r is the
/// top nonvanishing degree of its quotient. Throws NotAReductionError when
/// the last d variables do not cut down to an artinian ring (coordinates not
/// generic for I). The order should be degrevlex for the theory to apply.
ReductionResult direct_reduction_degree(const std::vector<Polynomial>& I, TermOrder ord);

/// r(S/I) via random coordinate changes: every trial must yield the same
/// direct reduction degree, cross-checked against the Bresinsky-Hoa value on
/// gin_degrevlex(I). Throws RouteDisagreementError if the routes differ.
ReductionResult reduction_number(const std::vector<Polynomial>& I, int trials = 5,
                                 std::uint64_t seed = 42, long bound = 100);

}  // namespace gincalc

#endif
