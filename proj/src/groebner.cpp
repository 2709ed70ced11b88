#include "gincalc/groebner.hpp"

#include <algorithm>
#include <optional>

#include "gincalc/errors.hpp"

namespace gincalc {

namespace {

/// Working representation: terms sorted strictly descending under the active
/// order, so the leading term is the front and cancellation is a merge.
struct OrdPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
};

OrdPoly to_ordered(const Polynomial& p, TermOrder ord) {
    return OrdPoly{p.sorted_terms(ord)};
}

Polynomial to_polynomial(const RingPtr& ring, const OrdPoly& p) {
    return Polynomial(ring, p.terms);
}

/// a + c * m * b, merged in descending order.
OrdPoly axpy(const OrdPoly& a, const Coeff& c, const Monomial& m, const OrdPoly& b,
             TermOrder ord) {
    OrdPoly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        Monomial bm = b.terms[j].mono * m;
        Cmp cmp = monomial_compare(a.terms[i].mono, bm, ord);
        if (cmp == Cmp::GT) {
            out.terms.push_back(a.terms[i++]);
        } else if (cmp == Cmp::LT) {
            out.terms.push_back({std::move(bm), b.terms[j].coeff * c});
            ++j;
        } else {
            Coeff s = a.terms[i].coeff + b.terms[j].coeff * c;
            if (!s.is_zero()) out.terms.push_back({a.terms[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j)
        out.terms.push_back({b.terms[j].mono * m, b.terms[j].coeff * c});
    return out;
}

struct Reducer {
    OrdPoly poly;
    Monomial lead_mono;
    Coeff lead_coeff;
};

/// Full division: reduces every term of f; divisors are tried in sequence
/// order. Returns the exact remainder (no rescaling).
OrdPoly divide(OrdPoly h, const std::vector<Reducer>& G, TermOrder ord) {
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Monomial& lm = h.lead().mono;
        const Reducer* red = nullptr;
        for (const auto& g : G) {
            if (g.lead_mono.divides(lm)) {
                red = &g;
                break;
            }
        }
        if (red == nullptr) {
            remainder.push_back(h.lead());
            h.terms.erase(h.terms.begin());
            continue;
        }
        Coeff factor = -(h.lead().coeff / red->lead_coeff);
        h = axpy(h, factor, lm / red->lead_mono, red->poly, ord);
    }
    return OrdPoly{std::move(remainder)};
}

Reducer make_reducer(const Polynomial& p, TermOrder ord) {
    OrdPoly op = to_ordered(p, ord);
    Monomial lm = op.lead().mono;
    Coeff lc = op.lead().coeff;
    return Reducer{std::move(op), std::move(lm), std::move(lc)};
}

OrdPoly s_polynomial(const Reducer& f, const Reducer& g, const Monomial& lcm,
                     TermOrder ord) {
    // (lcm/lt_f) f - (lcm/lt_g) g
    OrdPoly left;
    Coeff inv_f = f.lead_coeff.inverse();
    left.terms.reserve(f.poly.terms.size());
    Monomial mf = lcm / f.lead_mono;
    for (const auto& t : f.poly.terms) left.terms.push_back({t.mono * mf, t.coeff * inv_f});
    Coeff factor = -(g.lead_coeff.inverse());
    return axpy(left, factor, lcm / g.lead_mono, g.poly, ord);
}

struct Pair {
    size_t i, j;
    Monomial lcm;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       TermOrder ord) {
    if (G.empty()) throw std::invalid_argument("normal_form: empty divisor sequence");
    std::vector<Reducer> reducers;
    reducers.reserve(G.size());
    for (const auto& g : G) {
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor polynomial");
        if (!(*g.ring() == *f.ring()))
            throw std::invalid_argument("normal_form: mixed rings");
        reducers.push_back(make_reducer(g, ord));
    }
    return to_polynomial(f.ring(), divide(to_ordered(f, ord), reducers, ord));
}

GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& F, TermOrder ord) {
    RingPtr ring;
    std::vector<Reducer> basis;
    std::vector<Pair> pending;

    auto check_unit = [](const OrdPoly& p) {
        if (!p.is_zero() && p.lead().mono.is_unit())
            throw UnitIdealError("1 lies in the ideal");
    };

    auto add_element = [&](const Polynomial& p) {
        Reducer r = make_reducer(p, ord);
        size_t t = basis.size();
        for (size_t i = 0; i < t; ++i)
            pending.push_back({i, t, Monomial::lcm(basis[i].lead_mono, r.lead_mono)});
        basis.push_back(std::move(r));
    };

    for (const auto& f : F) {
        if (!ring) ring = f.ring();
        if (!(*ring == *f.ring()))
            throw std::invalid_argument("reduced_groebner_basis: mixed rings");
        if (f.is_zero()) continue;
        OrdPoly of = to_ordered(f, ord);
        check_unit(of);
        add_element(f.primitive_part());
    }
    if (!ring) {
        // Zero ideal: empty basis over an unknown ring is meaningless.
        throw std::invalid_argument("reduced_groebner_basis: no nonzero generators");
    }

    while (!pending.empty()) {
        // Normal strategy: smallest lcm degree, then the order, then indices.
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
                continue;
            }
            Cmp c = monomial_compare(a.lcm, b.lcm, ord);
            if (c == Cmp::LT || (c == Cmp::EQ && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = k;
        }
        Pair pair = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));

        const Reducer& fi = basis[pair.i];
        const Reducer& fj = basis[pair.j];
        // Product criterion.
        if (pair.lcm.degree() == fi.lead_mono.degree() + fj.lead_mono.degree()) continue;
        // Chain criterion: some other leading monomial divides the lcm and
        // both connecting pairs are already settled.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].lead_mono.divides(pair.lcm)) continue;
            bool pending_ik = false, pending_jk = false;
            for (const auto& p : pending) {
                if ((p.i == std::min(pair.i, k) && p.j == std::max(pair.i, k))) pending_ik = true;
                if ((p.i == std::min(pair.j, k) && p.j == std::max(pair.j, k))) pending_jk = true;
            }
            if (!pending_ik && !pending_jk) skip = true;
        }
        if (skip) continue;

        OrdPoly s = s_polynomial(fi, fj, pair.lcm, ord);
        OrdPoly h = divide(std::move(s), basis, ord);
        if (h.is_zero()) continue;
        check_unit(h);
        add_element(to_polynomial(ring, h).primitive_part());
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another surviving leading monomial.
    std::vector<size_t> order_by_lm(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) order_by_lm[k] = k;
    std::sort(order_by_lm.begin(), order_by_lm.end(), [&](size_t a, size_t b) {
        return monomial_less(basis[a].lead_mono, basis[b].lead_mono, ord);
    });
    std::vector<size_t> kept;
    for (size_t k : order_by_lm) {
        bool redundant = false;
        for (size_t m : kept) {
            if (basis[m].lead_mono.divides(basis[k].lead_mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(k);
    }

    // Tail reduction against the other minimal elements.
    std::vector<Polynomial> reduced;
    reduced.reserve(kept.size());
    for (size_t k : kept) {
        std::vector<Reducer> others;
        others.reserve(kept.size() - 1);
        for (size_t m : kept)
            if (m != k) others.push_back(basis[m]);
        OrdPoly r = others.empty() ? basis[k].poly : divide(basis[k].poly, others, ord);
        reduced.push_back(to_polynomial(ring, r).primitive_part());
    }

    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = ord;
    gb.generators = std::move(reduced);
    gb.source = F;
    return gb;
}

MonomialIdeal GroebnerBasis::leading_ideal() const {
    std::vector<Monomial> lms;
    lms.reserve(generators.size());
    for (const auto& g : generators) lms.push_back(g.leading_term(order).mono);
    return MonomialIdeal(ring, std::move(lms));
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& F, TermOrder ord) {
    return reduced_groebner_basis(F, ord).leading_ideal();
}

}  // namespace gincalc
