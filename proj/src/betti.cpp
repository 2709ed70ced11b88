#include "gincalc/betti.hpp"

#include <algorithm>

#include "gincalc/errors.hpp"

namespace gincalc {

namespace {

long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

void fill_row_maxima(BettiTable& t) {
    int pd = 0;
    for (const auto& [ij, mult] : t.beta) pd = std::max(pd, ij.first);
    t.projective_dimension = pd;
    t.b.assign(pd + 1, ExtInt::neg_inf());
    for (const auto& [ij, mult] : t.beta)
        t.b[ij.first] = ExtInt::max(t.b[ij.first], ExtInt(ij.second));
}

}  // namespace

long BettiTable::beta_at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
}

BettiTable BettiTable::quotient_table() const {
    BettiTable q;
    q.subject = Subject::quotient;
    q.beta[{0, 0}] = 1;
    for (const auto& [ij, mult] : beta) q.beta[{ij.first + 1, ij.second}] = mult;
    fill_row_maxima(q);
    return q;
}

BettiTable ek_betti(const MonomialIdeal& J) {
    if (!is_borel_fixed(J)) throw NotBorelFixedError();
    BettiTable t;
    t.subject = BettiTable::Subject::ideal;
    for (const auto& u : J.gens()) {
        for (int i = 0; i <= u.m_index() - 1; ++i) {
            long c = binomial(u.m_index() - 1, i);
            if (c != 0) t.beta[{i, u.degree() + i}] += c;
        }
    }
    fill_row_maxima(t);
    return t;
}

InvariantProfile profiles_from_betti(const BettiTable& quotient_table, int nvars) {
    const auto& b = quotient_table.b;
    InvariantProfile prof;
    prof.reg_q.reserve(nvars);
    prof.astar_q.reserve(nvars);
    ExtInt reg = ExtInt::neg_inf();
    ExtInt astar = ExtInt::neg_inf();
    for (int t = 0; t < nvars; ++t) {
        const int i = nvars - t;  // rows join from the tail of the resolution
        if (i < static_cast<int>(b.size()) && !b[i].is_neg_inf()) {
            reg = ExtInt::max(reg, b[i] - i);
            astar = ExtInt::max(astar, b[i]);
        }
        prof.reg_q.push_back(reg);
        prof.astar_q.push_back(astar - nvars);
    }
    return prof;
}

InvariantProfile profiles_from_betti(const MonomialIdeal& J) {
    return profiles_from_betti(ek_betti(J).quotient_table(), J.ring()->nvars());
}

ExtInt l_regularity(const BettiTable& table, int l) {
    ExtInt r = ExtInt::neg_inf();
    for (int i = std::max(l, 0); i < static_cast<int>(table.b.size()); ++i)
        if (!table.b[i].is_neg_inf()) r = ExtInt::max(r, table.b[i] - i);
    return r;
}

std::vector<ExtremalBetti> extremal_betti(const BettiTable& table) {
    std::vector<ExtremalBetti> out;
    for (const auto& [lm, mult] : table.beta) {
        const int l = lm.first;
        const int m = lm.second - lm.first;
        bool extremal = true;
        for (const auto& [ij, other] : table.beta) {
            const int i = ij.first;
            const int j = ij.second - ij.first;
            if (i >= l && j >= m && !(i == l && j == m)) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back({l, m, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const ExtremalBetti& a, const ExtremalBetti& b) {
                  return std::tie(a.l, a.m) < std::tie(b.l, b.m);
              });
    return out;
}

}  // namespace gincalc
