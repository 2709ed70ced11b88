#include "gincalc/reduction.hpp"

#include <string>

#include "gincalc/errors.hpp"
#include "gincalc/hilbert.hpp"
#include "gincalc/prng.hpp"

namespace gincalc {

ReductionResult bh_reduction(const MonomialIdeal& J, int d) {
    const int n = J.ring()->nvars();
    if (d < 0 || n - d < 1 || n - d > n)
        throw std::invalid_argument("bh_reduction: invalid dimension " + std::to_string(d));
    const int v = n - d;
    // A power of x_v lies in J iff some minimal generator is a pure power of x_v.
    int least_power = -1;
    for (const auto& g : J.gens()) {
        if (g.m_index() == v && g.exponent(v) == g.degree()) {
            least_power = g.degree();
            break;  // generators are canonically sorted by degree
        }
    }
    if (least_power < 0)
        throw NoPowerError("no power of x" + std::to_string(v) +
                           " lies in the ideal; wrong dimension or non-generic ideal");
    ReductionResult res;
    res.dimension = d;
    res.r = least_power - 1;
    res.route = ReductionResult::Route::bh;
    res.bh_witness = Monomial::var(n, v, least_power);
    return res;
}

ReductionResult direct_reduction_degree(const std::vector<Polynomial>& I, TermOrder ord) {
    if (I.empty()) throw std::invalid_argument("direct_reduction_degree: empty ideal");
    for (const auto& f : I)
        if (!f.is_homogeneous()) throw NotHomogeneousError();
    MonomialIdeal in_ideal = initial_ideal(I, ord);
    if (in_ideal.is_zero())
        throw std::invalid_argument("direct_reduction_degree: zero ideal");
    const int n = in_ideal.ring()->nvars();
    const int d = krull_dimension(in_ideal);
    // Image of (in(I), x_n..x_{n-d+1}) in k[x_1..x_{n-d}].
    MonomialIdeal restricted = in_ideal.restrict_below(n - d);
    HilbertNumerator h = hilbert_numerator(restricted);
    if (h.dimension != 0)
        throw NotAReductionError(
            "the last " + std::to_string(d) +
            " variables do not give an artinian restriction; coordinates are "
            "not generic for the ideal");
    // Finite length: the Hilbert series is the polynomial N/(1-t)^{n-d}.
    int top = h.numerator.degree() - (n - d);
    ReductionResult res;
    res.dimension = d;
    res.r = top;
    res.route = ReductionResult::Route::direct;
    res.direct_top_degree = top;
    return res;
}

ReductionResult reduction_number(const std::vector<Polynomial>& I, int trials,
                                 std::uint64_t seed, long bound) {
    if (I.empty()) throw std::invalid_argument("reduction_number: empty ideal");
    const RingPtr& ring = I.front().ring();
    std::optional<ReductionResult> direct;
    for (int k = 0; k < trials; ++k) {
        std::uint64_t ts = trial_seed(seed, static_cast<std::uint64_t>(k));
        IntMatrix g = random_coordinate_change(ring->nvars(), ts, bound,
                                               ring->characteristic());
        std::vector<Polynomial> transformed;
        transformed.reserve(I.size());
        for (const auto& f : I) transformed.push_back(apply_linear_substitution(f, g));
        ReductionResult trial = direct_reduction_degree(transformed, TermOrder::degrevlex);
        if (!direct) {
            direct = trial;
        } else if (direct->r != trial.r || direct->dimension != trial.dimension) {
            throw GinUnstableError(
                "reduction trials disagree; raise --coeff-bound or --trials");
        }
    }
    GinResult g = gin(I, TermOrder::degrevlex, trials, seed, bound);
    ReductionResult bh = bh_reduction(g.gin, direct->dimension);
    if (bh.r != direct->r) {
        throw RouteDisagreementError(
            "direct generic reduction gives " + std::to_string(direct->r) +
            " but the Bresinsky-Hoa criterion on gin gives " + std::to_string(bh.r));
    }
    ReductionResult res = *direct;
    res.route = ReductionResult::Route::combined;
    res.bh_witness = bh.bh_witness;
    res.agreement = true;
    return res;
}

}  // namespace gincalc
