#ifndef GINCALC_GIN_HPP
#define GINCALC_GIN_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "gincalc/groebner.hpp"
#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"

namespace gincalc {

using IntMatrix = std::vector<std::vector<long>>;

/// Outcome of the randomized gin computation. agreement is true iff all
/// trials produced identical minimal generators; the sampled matrices are
/// kept for audit.
struct GinResult {
    MonomialIdeal gin;
    TermOrder order;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> seeds_used;
    bool agreement = false;
    std::vector<IntMatrix> matrices;
};

/// Invertible n x n integer matrix with entries uniform in [-bound, bound],
/// resampled until the determinant is nonzero (nonzero mod p over F_p).
/// Deterministic in (n, seed, bound).
IntMatrix random_coordinate_change(int n, std::uint64_t seed, long bound,
                                   unsigned long characteristic = 0);

/// Exact integer determinant (Bareiss elimination).
mpz_class int_matrix_det(const IntMatrix& g);

/// Generic initial ideal by sampling: computes in(g_k I) for `trials`
/// independent coordinate changes and requires all trials to agree.
/// In characteristic 0 the agreed ideal is certified Borel-fixed.
/// Throws GinUnstableError / BorelCheckFailedError / NotHomogeneousError.
GinResult gin(const std::vector<Polynomial>& I, TermOrder ord, int trials = 5,
              std::uint64_t seed = 42, long bound = 100);

}  // namespace gincalc

#endif
