#include "support/corpus.hpp"

#include "support/oracles.hpp"

namespace gincalc::testing {

Monomial random_monomial(SplitMix64& rng, int n, int degree) {
    std::vector<int> exps(n, 0);
    for (int k = 0; k < degree; ++k)
        ++exps[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(n)))];
    return Monomial(std::move(exps));
}

MonomialIdeal random_monomial_ideal(SplitMix64& rng, const RingPtr& ring, int gens,
                                    int maxdeg) {
    std::vector<Monomial> ms;
    ms.reserve(gens);
    for (int k = 0; k < gens; ++k) {
        int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg)));
        ms.push_back(random_monomial(rng, ring->nvars(), d));
    }
    return MonomialIdeal(ring, std::move(ms));
}

Polynomial random_homogeneous(SplitMix64& rng, const RingPtr& ring, int degree,
                              long coeff_bound) {
    const auto basis = monomials_of_degree(ring->nvars(), degree);
    while (true) {
        std::vector<Term> terms;
        for (const auto& m : basis) {
            long c = rng.symmetric(coeff_bound);
            if (c != 0)
                terms.push_back({m, Coeff::integer(c, ring->characteristic())});
        }
        Polynomial p(ring, std::move(terms));
        if (!p.is_zero()) return p;
    }
}

std::vector<Polynomial> random_homogeneous_ideal(SplitMix64& rng, const RingPtr& ring,
                                                 int max_gens, int max_deg,
                                                 long coeff_bound) {
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
    std::vector<Polynomial> polys;
    polys.reserve(count);
    for (int k = 0; k < count; ++k) {
        int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg)));
        polys.push_back(random_homogeneous(rng, ring, d, coeff_bound));
    }
    return polys;
}

MonomialIdeal random_borel_ideal(SplitMix64& rng, const RingPtr& ring, int seeds,
                                 int maxdeg) {
    std::vector<Monomial> ms;
    ms.reserve(seeds);
    for (int k = 0; k < seeds; ++k) {
        int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxdeg)));
        ms.push_back(random_monomial(rng, ring->nvars(), d));
    }
    return borel_closure(ring, ms);
}

}  // namespace gincalc::testing
