#ifndef GINCALC_TESTS_CORPUS_HPP
#define GINCALC_TESTS_CORPUS_HPP

// Deterministic pseudo-random corpora for property tests.

#include <vector>

#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"
#include "gincalc/prng.hpp"

namespace gincalc::testing {

Monomial random_monomial(SplitMix64& rng, int n, int degree);

/// Random proper monomial ideal: `gens` monomials of degree 1..maxdeg.
MonomialIdeal random_monomial_ideal(SplitMix64& rng, const RingPtr& ring, int gens,
                                    int maxdeg);

/// Random nonzero homogeneous polynomial of the given degree with integer
/// coefficients in [-coeff_bound, coeff_bound].
Polynomial random_homogeneous(SplitMix64& rng, const RingPtr& ring, int degree,
                              long coeff_bound);

/// The Theorem 4.3 / Lemma 1.2 corpus shape: 1..max_gens homogeneous
/// generators of degree 1..max_deg.
std::vector<Polynomial> random_homogeneous_ideal(SplitMix64& rng, const RingPtr& ring,
                                                 int max_gens, int max_deg,
                                                 long coeff_bound = 5);

/// Borel-fixed corpus element: the strongly stable closure of a few random
/// monomials.
MonomialIdeal random_borel_ideal(SplitMix64& rng, const RingPtr& ring, int seeds,
                                 int maxdeg);

}  // namespace gincalc::testing

#endif
