#include "gincalc/invariants.hpp"

#include "gincalc/errors.hpp"

namespace gincalc {

InvariantProfile profiles_colon(const DeltaProfile& deltas) {
    if (!deltas.filter_regular) throw NotFilterRegularError(deltas.first_infinite());
    const int n = deltas.nvars();
    InvariantProfile prof;
    prof.reg_q.reserve(n);
    prof.astar_q.reserve(n);
    ExtInt reg = ExtInt::neg_inf();
    ExtInt astar = ExtInt::neg_inf();
    for (int t = 0; t < n; ++t) {
        const int i = n - t;
        reg = ExtInt::max(reg, deltas.delta(i));
        astar = ExtInt::max(astar, deltas.delta(i) - (n - i));
        prof.reg_q.push_back(reg);
        prof.astar_q.push_back(astar);
    }
    return prof;
}

InvariantProfile profiles_colon(const MonomialIdeal& J) {
    return profiles_colon(delta_profile(J));
}

std::vector<ExtInt> borel_reg_ideal_profile(const MonomialIdeal& J) {
    const int n = J.ring()->nvars();
    std::vector<ExtInt> out;
    out.reserve(n);
    ExtInt reg = ExtInt::neg_inf();
    for (int t = 0; t < n; ++t) {
        for (const auto& u : J.gens())
            if (u.m_index() == n - t) reg = ExtInt::max(reg, ExtInt(u.degree()));
        out.push_back(reg);
    }
    return out;
}

InvariantProfile profiles_borel(const MonomialIdeal& J) {
    if (!is_borel_fixed(J)) throw NotBorelFixedError();
    const int n = J.ring()->nvars();
    InvariantProfile prof;
    prof.reg_q.reserve(n);
    prof.astar_q.reserve(n);
    ExtInt reg = ExtInt::neg_inf();
    ExtInt astar = ExtInt::neg_inf();
    for (int t = 0; t < n; ++t) {
        // Generators joining at this level have m-index exactly n-t.
        for (const auto& u : J.gens()) {
            if (u.m_index() == n - t) {
                reg = ExtInt::max(reg, ExtInt(u.degree()));
                astar = ExtInt::max(astar, ExtInt(u.degree() + u.m_index()));
            }
        }
        prof.reg_q.push_back(reg - 1);
        prof.astar_q.push_back(astar - (n + 1));
    }
    return prof;
}

}  // namespace gincalc
