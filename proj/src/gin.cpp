#include "gincalc/gin.hpp"

#include <optional>
#include <sstream>

#include "gincalc/errors.hpp"
#include "gincalc/prng.hpp"

namespace gincalc {

mpz_class int_matrix_det(const IntMatrix& g) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g[i][j];

    // Bareiss fraction-free elimination.
    mpz_class prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r) {
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntMatrix random_coordinate_change(int n, std::uint64_t seed, long bound,
                                   unsigned long characteristic) {
    if (bound < 1) throw std::invalid_argument("coordinate-change bound must be >= 1");
    SplitMix64 rng(seed);
    while (true) {
        IntMatrix g(n, std::vector<long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g[i][j] = rng.symmetric(bound);
        mpz_class det = int_matrix_det(g);
        if (characteristic == 0 ? det != 0 : (det % mpz_class(characteristic)) != 0)
            return g;
    }
}

GinResult gin(const std::vector<Polynomial>& I, TermOrder ord, int trials,
              std::uint64_t seed, long bound) {
    if (I.empty()) throw std::invalid_argument("gin: empty generator list");
    const RingPtr& ring = I.front().ring();
    for (const auto& f : I) {
        if (!f.is_homogeneous()) throw NotHomogeneousError();
    }
    if (trials < 1) throw std::invalid_argument("gin: trials must be >= 1");

    GinResult result{MonomialIdeal::zero(ring), ord, trials, seed, {}, false, {}};
    std::optional<MonomialIdeal> agreed;
    bool all_agree = true;
    for (int k = 0; k < trials; ++k) {
        std::uint64_t ts = trial_seed(seed, static_cast<std::uint64_t>(k));
        IntMatrix g = random_coordinate_change(ring->nvars(), ts, bound,
                                               ring->characteristic());
        std::vector<Polynomial> transformed;
        transformed.reserve(I.size());
        for (const auto& f : I) transformed.push_back(apply_linear_substitution(f, g));
        MonomialIdeal in_k = initial_ideal(transformed, ord);
        result.seeds_used.push_back(ts);
        result.matrices.push_back(std::move(g));
        if (!agreed) {
            agreed = std::move(in_k);
        } else if (!(*agreed == in_k)) {
            all_agree = false;
        }
    }
    result.agreement = all_agree;
    if (!all_agree) {
        throw GinUnstableError(
            "coordinate-change trials disagree on the initial ideal; raise "
            "--coeff-bound or --trials");
    }
    result.gin = std::move(*agreed);
    if (ring->characteristic() == 0 && !is_borel_fixed(result.gin)) {
        throw BorelCheckFailedError("agreed initial ideal (" + ideal_str(result.gin) +
                                    ") is not Borel-fixed; randomness bound too small");
    }
    return result;
}

}  // namespace gincalc
