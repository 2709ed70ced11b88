#include "gincalc/hilbert.hpp"

#include <sstream>
#include <stdexcept>

#include "gincalc/monomial_ideal.hpp"

namespace gincalc {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::one_minus_power(int d) {
    if (d == 0) return IntPoly();  // 1 - 1
    std::vector<mpz_class> c(d + 1);
    c[0] = 1;
    c[d] = -1;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] -= o.c_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> c(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return IntPoly(std::move(c));
}

mpz_class IntPoly::eval_at_one() const {
    mpz_class s(0);
    for (const auto& v : c_) s += v;
    return s;
}

int IntPoly::one_root_multiplicity() const {
    if (is_zero()) return 0;
    IntPoly p = *this;
    int e = 0;
    while (!p.is_zero() && p.eval_at_one() == 0) {
        p = p.div_one_minus_t();
        ++e;
    }
    return e;
}

IntPoly IntPoly::div_one_minus_t() const {
    // (1-t) * (prefix sums) reproduces the input when N(1) = 0.
    if (eval_at_one() != 0)
        throw std::invalid_argument("numerator not divisible by (1-t)");
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> b(c_.size() - 1);
    mpz_class run(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        run += c_[i];
        b[i] = run;
    }
    return IntPoly(std::move(b));
}

std::vector<mpz_class> IntPoly::series_coeffs(int n, int upto) const {
    std::vector<mpz_class> s(upto + 1);
    for (int i = 0; i <= upto; ++i) s[i] = coeff(i);
    // 1/(1-t)^n is n rounds of prefix summation.
    for (int round = 0; round < n; ++round)
        for (int i = 1; i <= upto; ++i) s[i] += s[i - 1];
    return s;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        mpz_class mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

long HilbertNumerator::hf(int m) const {
    if (m < 0) return 0;
    auto s = numerator.series_coeffs(nvars, m);
    if (!s[m].fits_slong_p())
        throw std::overflow_error("Hilbert function value exceeds long range");
    return s[m].get_si();
}

std::vector<long> HilbertNumerator::hf_values(int upto) const {
    std::vector<long> out;
    if (upto < 0) return out;
    auto s = numerator.series_coeffs(nvars, upto);
    out.reserve(upto + 1);
    for (const auto& v : s) {
        if (!v.fits_slong_p())
            throw std::overflow_error("Hilbert function value exceeds long range");
        out.push_back(v.get_si());
    }
    return out;
}

namespace {

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (size_t a = 0; a < gens.size(); ++a)
        for (size_t b = a + 1; b < gens.size(); ++b)
            if (!gens[a].is_coprime_with(gens[b])) return false;
    return true;
}

IntPoly numerator_rec(const MonomialIdeal& J) {
    const auto& gens = J.gens();
    if (gens.empty()) return IntPoly::one();
    if (pairwise_coprime(gens)) {
        // Disjoint supports: the quotient is a tensor product of
        // hypersurface quotients, N = prod (1 - t^deg).
        IntPoly n = IntPoly::one();
        for (const auto& g : gens) n = n * IntPoly::one_minus_power(g.degree());
        return n;
    }
    // Pivot: variable hitting the most generators, lowest index on ties.
    const int n = J.ring()->nvars();
    int best = 1, best_count = -1;
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (const auto& g : gens)
            if (g.exponent(i) > 0) ++count;
        if (count > best_count) {
            best = i;
            best_count = count;
        }
    }
    return numerator_rec(J.plus_variable(best)) +
           numerator_rec(J.colon_by_variable(best)).shifted(1);
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& J) {
    HilbertNumerator h;
    h.numerator = numerator_rec(J);
    h.nvars = J.ring()->nvars();
    h.dimension = h.nvars - h.numerator.one_root_multiplicity();
    return h;
}

}  // namespace gincalc
