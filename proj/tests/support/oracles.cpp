#include "support/oracles.hpp"

#include <gmpxx.h>

#include <map>

namespace gincalc::testing {

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    std::vector<int> exps(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            exps[pos] = remaining;
            out.emplace_back(exps);
            exps[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    if (n == 0) return out;
    rec(rec, 0, d);
    return out;
}

long full_slice_dim(int n, int m) {
    return static_cast<long>(monomials_of_degree(n, m).size());
}

namespace {

/// Exact rank over Q by row-echelon elimination with per-row integer
/// normalization (rows are kept primitive to contain entry growth).
class RankAccumulator {
public:
    explicit RankAccumulator(int cols) : cols_(cols) {}

    void add_row(std::vector<mpq_class> row) {
        // Reduce against the echelon rows collected so far.
        for (const auto& [pivot_col, pivot_row] : echelon_) {
            if (row[pivot_col] == 0) continue;
            mpq_class factor = row[pivot_col] / pivot_row[pivot_col];
            for (int c = pivot_col; c < cols_; ++c) row[c] -= factor * pivot_row[c];
        }
        int lead = -1;
        for (int c = 0; c < cols_; ++c) {
            if (row[c] != 0) {
                lead = c;
                break;
            }
        }
        if (lead < 0) return;
        normalize(row);
        echelon_.emplace(lead, std::move(row));
    }

    long rank() const { return static_cast<long>(echelon_.size()); }

private:
    void normalize(std::vector<mpq_class>& row) {
        mpz_class den(1);
        for (const auto& v : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
        mpz_class g(0);
        for (auto& v : row) {
            v *= den;
            v.canonicalize();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
        }
        if (g != 0)
            for (auto& v : row) {
                v /= g;
                v.canonicalize();
            }
    }

    int cols_;
    std::map<int, std::vector<mpq_class>> echelon_;  // pivot column -> row
};

std::map<std::vector<int>, int> index_monomials(const std::vector<Monomial>& ms) {
    std::map<std::vector<int>, int> idx;
    for (size_t k = 0; k < ms.size(); ++k) idx[ms[k].exponents()] = static_cast<int>(k);
    return idx;
}

std::vector<mpq_class> poly_row(const Polynomial& p,
                                const std::map<std::vector<int>, int>& idx) {
    std::vector<mpq_class> row(idx.size(), mpq_class(0));
    for (const auto& t : p.terms()) row[idx.at(t.mono.exponents())] = t.coeff.value();
    return row;
}

/// Feed all monomial multiples u*f (deg u = m - deg f) of each generator.
void add_ideal_rows(RankAccumulator& acc, const std::vector<Polynomial>& F, int m,
                    const std::map<std::vector<int>, int>& idx, int n) {
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        const int d = f.degree();
        if (d > m) continue;
        for (const auto& u : monomials_of_degree(n, m - d)) {
            Polynomial shifted = f.times_monomial(u, Coeff::integer(1, f.ring()->characteristic()));
            acc.add_row(poly_row(shifted, idx));
        }
    }
}

std::vector<Polynomial> with_tail_variables(const std::vector<Polynomial>& F, int i) {
    std::vector<Polynomial> out = F;
    const auto& ring = F.front().ring();
    for (int j = i + 1; j <= ring->nvars(); ++j)
        out.push_back(Polynomial::monomial(
            ring, Monomial::var(ring->nvars(), j),
            Coeff::integer(1, ring->characteristic())));
    return out;
}

}  // namespace

long ideal_slice_dim(const std::vector<Polynomial>& F, int m) {
    const int n = F.front().ring()->nvars();
    auto basis = monomials_of_degree(n, m);
    auto idx = index_monomials(basis);
    RankAccumulator acc(static_cast<int>(basis.size()));
    add_ideal_rows(acc, F, m, idx, n);
    return acc.rank();
}

long extended_slice_dim(const std::vector<Polynomial>& F, int i, int m) {
    return ideal_slice_dim(with_tail_variables(F, i), m);
}

long colon_slice_dim(const std::vector<Polynomial>& F, int i, int m) {
    const auto& ring = F.front().ring();
    const int n = ring->nvars();
    const auto ext = with_tail_variables(F, i);

    auto basis = monomials_of_degree(n, m + 1);
    auto idx = index_monomials(basis);

    RankAccumulator ideal_rank(static_cast<int>(basis.size()));
    add_ideal_rows(ideal_rank, ext, m + 1, idx, n);
    const long dim_j = ideal_rank.rank();

    RankAccumulator sum_rank(static_cast<int>(basis.size()));
    add_ideal_rows(sum_rank, ext, m + 1, idx, n);
    for (const auto& u : monomials_of_degree(n, m)) {
        std::vector<mpq_class> row(basis.size(), mpq_class(0));
        row[idx.at(u.times_var(i).exponents())] = 1;
        sum_rank.add_row(std::move(row));
    }
    return full_slice_dim(n, m) + dim_j - sum_rank.rank();
}

long monomial_slice_count(const MonomialIdeal& J, int m) {
    long count = 0;
    for (const auto& u : monomials_of_degree(J.ring()->nvars(), m))
        if (J.contains(u)) ++count;
    return count;
}

long monomial_colon_slice_count(const MonomialIdeal& J, int i, int m) {
    const int n = J.ring()->nvars();
    long count = 0;
    for (const auto& u : monomials_of_degree(n, m))
        if (u.m_index() > i || J.contains(u.times_var(i))) ++count;
    return count;
}

long monomial_extended_slice_count(const MonomialIdeal& J, int i, int m) {
    const int n = J.ring()->nvars();
    long count = 0;
    for (const auto& u : monomials_of_degree(n, m))
        if (u.m_index() > i || J.contains(u)) ++count;
    return count;
}

ExtInt delta_oracle(const MonomialIdeal& J, int i) {
    MonomialIdeal Ji = J.restrict_below(i);
    if (Ji.is_zero()) return ExtInt::neg_inf();
    const int cap = Ji.max_gen_degree();
    // Enumerate the box [0, cap]^i.
    std::vector<int> exps(i, 0);
    bool infinite = false;
    ExtInt best = ExtInt::neg_inf();
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == i) {
            Monomial w{exps};
            if (!Ji.contains(w) && Ji.contains(w.times_var(i))) {
                bool at_cap = false;
                for (int e : exps)
                    if (e >= cap) at_cap = true;
                if (at_cap)
                    infinite = true;
                else
                    best = ExtInt::max(best, ExtInt(w.degree()));
            }
            return;
        }
        for (int e = 0; e <= cap; ++e) {
            exps[pos] = e;
            self(self, pos + 1);
        }
        exps[pos] = 0;
    };
    rec(rec, 0);
    if (infinite) return ExtInt::pos_inf();
    return best;
}

}  // namespace gincalc::testing
