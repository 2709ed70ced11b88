#include "gincalc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gincalc {

namespace {

bool term_canonical_greater(const Term& a, const Term& b) {
    return Monomial::canonical_less(b.mono, a.mono);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.mono.nvars() != ring_->nvars())
            throw std::invalid_argument("term variable count does not match ring");
        if (t.coeff.characteristic() != ring_->characteristic())
            throw std::invalid_argument("coefficient characteristic does not match ring");
    }
    normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
    auto n = ring->nvars();
    return Polynomial(std::move(ring), {{Monomial::unit(n), c}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
    return Polynomial(std::move(ring), {{std::move(m), std::move(c)}});
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_canonical_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_unit());
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!(*ring_ == *o.ring_)) throw std::invalid_argument("polynomial rings differ");
    // Merge of two canonically sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Coeff c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (term_canonical_greater(terms_[i], o.terms_[j])) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!(*ring_ == *o.ring_)) throw std::invalid_argument("polynomial rings differ");
    std::map<std::vector<int>, Coeff> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.mono * b.mono;
            Coeff c = a.coeff * b.coeff;
            auto [it, inserted] = acc.emplace(m.exponents(), c);
            if (!inserted) it->second = it->second + c;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({Monomial(e), std::move(c)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Coeff& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a fixed monomial preserves the canonical term order.
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono && terms_[i].coeff == o.terms_[i].coeff))
            return false;
    return true;
}

const Term& Polynomial::leading_term(TermOrder ord) const {
    if (terms_.empty())
        throw std::invalid_argument("leading_term of the zero polynomial");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (monomial_greater(t.mono, best->mono, ord)) best = &t;
    return *best;
}

std::vector<Term> Polynomial::sorted_terms(TermOrder ord) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [ord](const Term& a, const Term& b) {
        return monomial_greater(a.mono, b.mono, ord);
    });
    return out;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    if (ring_->characteristic() != 0) {
        // Monic at the canonically largest monomial.
        return scaled(terms_.front().coeff.inverse());
    }
    mpz_class den(1);
    for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    mpz_class num(0);
    for (const auto& t : terms_) {
        mpz_class scaled_num = t.coeff.numerator() * (den / t.coeff.denominator());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled_num.get_mpz_t());
    }
    mpq_class factor(den, num);
    factor.canonicalize();
    if (terms_.front().coeff.value() < 0) factor = -factor;
    return scaled(Coeff::rational(factor));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class v = t.coeff.value();
        bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpq_class a = neg ? mpq_class(-v) : v;
        bool unit_mono = t.mono.is_unit();
        if (a != 1 || unit_mono) {
            os << a.get_str();
            if (!unit_mono) os << "*";
        }
        bool first_var = true;
        for (int i = 1; i <= t.mono.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->var_name(i);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

Polynomial apply_linear_substitution(const Polynomial& p,
                                     const std::vector<std::vector<long>>& g) {
    const auto& ring = p.ring();
    const int n = ring->nvars();
    if (static_cast<int>(g.size()) != n)
        throw std::invalid_argument("substitution matrix size does not match ring");
    for (const auto& row : g)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("substitution matrix is not square");

    // Images of the variables, with power caches filled on demand.
    std::vector<Polynomial> image;
    image.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::vector<Term> terms;
        for (int k = 0; k < n; ++k) {
            if (g[j][k] == 0) continue;
            terms.push_back({Monomial::var(n, k + 1),
                             Coeff::integer(g[j][k], ring->characteristic())});
        }
        image.emplace_back(ring, std::move(terms));
    }
    std::vector<std::vector<Polynomial>> powers(n, {Polynomial::constant(ring, Coeff::integer(1, ring->characteristic()))});
    auto power = [&](int j, int e) -> const Polynomial& {
        auto& cache = powers[j];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[j]);
        return cache[e];
    };

    Polynomial result(ring);
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(ring, t.coeff);
        for (int j = 1; j <= n; ++j) {
            int e = t.mono.exponent(j);
            if (e > 0) prod = prod * power(j - 1, e);
        }
        result = result + prod;
    }
    return result;
}

}  // namespace gincalc
