#include "gincalc/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "gincalc/errors.hpp"
#include "gincalc/hilbert.hpp"

namespace gincalc {

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
    for (const auto& m : generators) {
        if (m.nvars() != ring_->nvars())
            throw std::invalid_argument("generator variable count does not match ring");
        if (m.is_unit()) throw UnitIdealError("monomial ideal contains the unit monomial");
    }
    // Keep the divisibility antichain: sort by degree so divisors precede
    // multiples, then sweep.
    std::sort(generators.begin(), generators.end(), Monomial::canonical_less);
    for (const auto& m : generators) {
        bool redundant = false;
        for (const auto& kept : gens_) {
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens_.push_back(m);
    }
}

int MonomialIdeal::max_gen_degree() const {
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != ring_->nvars())
        throw std::invalid_argument("monomial variable count does not match ring");
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::colon_by_variable(int i) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_)
        out.push_back(g.exponent(i) > 0 ? g.times_var(i, -1) : g);
    return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus_variable(int i) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size() + 1);
    out.push_back(Monomial::var(ring_->nvars(), i));
    for (const auto& g : gens_)
        if (g.exponent(i) == 0) out.push_back(g);
    return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::restrict_below(int i) const {
    const int n = ring_->nvars();
    if (i < 1 || i > n) throw std::invalid_argument("restrict_below: index out of range");
    if (i == n) return *this;
    std::vector<std::string> names(ring_->var_names().begin(),
                                   ring_->var_names().begin() + i);
    auto sub = make_ring(std::move(names), ring_->characteristic());
    std::vector<Monomial> out;
    for (const auto& g : gens_) {
        if (g.m_index() <= i) {
            std::vector<int> e(g.exponents().begin(), g.exponents().begin() + i);
            out.emplace_back(std::move(e));
        }
    }
    return MonomialIdeal(std::move(sub), std::move(out));
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
    return *ring_ == *o.ring_ && gens_ == o.gens_;
}

int DeltaProfile::first_infinite() const {
    for (int i = 1; i <= nvars(); ++i)
        if (deltas[i - 1].is_pos_inf()) return i;
    return 0;
}

DeltaProfile delta_profile(const MonomialIdeal& J) {
    const int n = J.ring()->nvars();
    DeltaProfile prof;
    prof.deltas.assign(n, ExtInt::neg_inf());
    for (int i = n; i >= 1; --i) {
        MonomialIdeal Ji = J.restrict_below(i);
        MonomialIdeal Ki = Ji.colon_by_variable(i);
        IntPoly diff = hilbert_numerator(Ji).numerator - hilbert_numerator(Ki).numerator;
        ExtInt delta = ExtInt::neg_inf();
        if (!diff.is_zero()) {
            // The colon quotient's Hilbert series is diff / (1-t)^i; it is a
            // polynomial (finite length) iff (1-t)^i divides diff exactly.
            if (diff.one_root_multiplicity() >= i) {
                delta = ExtInt(diff.degree() - i);
            } else {
                delta = ExtInt::pos_inf();
                prof.filter_regular = false;
            }
        }
        prof.deltas[i - 1] = delta;
    }
    return prof;
}

int krull_dimension(const MonomialIdeal& J) {
    const int n = J.ring()->nvars();
    if (n > 16) throw std::invalid_argument("krull_dimension supports at most 16 variables");
    if (J.is_zero()) return n;
    std::vector<unsigned> supports;
    supports.reserve(J.num_gens());
    for (const auto& g : J.gens()) {
        unsigned s = 0;
        for (int i = 1; i <= n; ++i)
            if (g.exponent(i) > 0) s |= 1u << (i - 1);
        supports.push_back(s);
    }
    for (int size = 1; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            bool covers = true;
            for (unsigned s : supports) {
                if ((s & mask) == 0) {
                    covers = false;
                    break;
                }
            }
            if (covers) return n - size;
        }
    }
    return 0;  // unreachable for proper ideals
}

bool is_borel_fixed(const MonomialIdeal& J) {
    if (J.ring()->characteristic() != 0)
        throw CharNotZeroError("Borel-fixedness check requires characteristic 0");
    for (const auto& u : J.gens()) {
        for (int j = 2; j <= u.nvars(); ++j) {
            if (u.exponent(j) == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial swapped = u.times_var(j, -1).times_var(i, 1);
                if (!J.contains(swapped)) return false;
            }
        }
    }
    return true;
}

MonomialIdeal borel_closure(const RingPtr& ring, const std::vector<Monomial>& ms) {
    if (ring->characteristic() != 0)
        throw CharNotZeroError("borel_closure requires characteristic 0");
    std::set<std::vector<int>> known;
    std::vector<Monomial> work = ms;
    std::vector<Monomial> all = ms;
    for (const auto& m : ms) known.insert(m.exponents());
    while (!work.empty()) {
        Monomial u = work.back();
        work.pop_back();
        for (int j = 2; j <= u.nvars(); ++j) {
            if (u.exponent(j) == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial v = u.times_var(j, -1).times_var(i, 1);
                if (known.insert(v.exponents()).second) {
                    work.push_back(v);
                    all.push_back(v);
                }
            }
        }
    }
    return MonomialIdeal(ring, std::move(all));
}

std::string monomial_str(const Ring& ring, const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (int i = 1; i <= m.nvars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.var_name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string ideal_str(const MonomialIdeal& J) {
    if (J.is_zero()) return "0";
    std::string out;
    for (const auto& g : J.gens()) {
        if (!out.empty()) out += ", ";
        out += monomial_str(*J.ring(), g);
    }
    return out;
}

std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& J, int bound) {
    const int n = J.ring()->nvars();
    std::vector<Monomial> out;
    std::vector<int> exps(n, 0);
    // Depth-first enumeration of all exponent vectors of degree <= bound.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            Monomial m{exps};
            if (!J.contains(m)) out.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), Monomial::canonical_less);
    return out;
}

}  // namespace gincalc
