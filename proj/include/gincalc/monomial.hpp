#ifndef GINCALC_MONOMIAL_HPP
#define GINCALC_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gincalc {

/// A monomial x^A as an exponent vector, with cached total degree and
/// m-index (the largest i such that x_i divides it; 0 for the unit).
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
        recache();
    }

    static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    /// x_i^e with 1-based variable index i.
    static Monomial var(int nvars, int i, int e = 1) {
        std::vector<int> v(nvars, 0);
        v.at(i - 1) = e;
        return Monomial(std::move(v));
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    /// Largest 1-based index of a variable dividing this monomial; 0 if unit.
    int m_index() const { return m_index_; }
    bool is_unit() const { return degree_ == 0; }
    /// 1-based exponent access.
    int exponent(int i) const { return exps_[i - 1]; }
    const std::vector<int>& exponents() const { return exps_; }

    bool divides(const Monomial& other) const {
        assert(nvars() == other.nvars());
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        assert(nvars() == o.nvars());
        std::vector<int> v(exps_);
        for (int i = 0; i < nvars(); ++i) v[i] += o.exps_[i];
        return Monomial(std::move(v));
    }

    /// Exact quotient; requires o | *this.
    Monomial operator/(const Monomial& o) const {
        assert(o.divides(*this));
        std::vector<int> v(exps_);
        for (int i = 0; i < nvars(); ++i) v[i] -= o.exps_[i];
        return Monomial(std::move(v));
    }

    /// Multiply / divide by a single variable (1-based index).
    Monomial times_var(int i, int e = 1) const {
        std::vector<int> v(exps_);
        v[i - 1] += e;
        assert(v[i - 1] >= 0);
        return Monomial(std::move(v));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        std::vector<int> v(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) v[i] = std::max(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(v));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        std::vector<int> v(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) v[i] = std::min(a.exps_[i], b.exps_[i]);
        return Monomial(std::move(v));
    }

    bool is_coprime_with(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    /// Order-free canonical comparison: degree, then exponent vector
    /// lexicographically descending. Used to sort generator sets and
    /// polynomial terms deterministically.
    static bool canonical_less(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return a.exps_ > b.exps_;
    }

private:
    void recache() {
        degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
        m_index_ = 0;
        for (int i = nvars(); i >= 1; --i) {
            if (exps_[i - 1] > 0) {
                m_index_ = i;
                break;
            }
        }
    }

    std::vector<int> exps_;
    int degree_ = 0;
    int m_index_ = 0;
};

}  // namespace gincalc

#endif
