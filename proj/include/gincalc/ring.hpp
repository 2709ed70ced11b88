#ifndef GINCALC_RING_HPP
#define GINCALC_RING_HPP

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gincalc {

/// The ambient polynomial ring k[x_1,...,x_n]. Variable position 1 is the
/// greatest variable under every supported term order. Characteristic is 0
/// or a prime.
class Ring {
public:
    Ring(std::vector<std::string> var_names, unsigned long characteristic)
        : var_names_(std::move(var_names)), char_(characteristic) {
        if (var_names_.empty()) throw std::invalid_argument("ring needs at least one variable");
        std::set<std::string> seen(var_names_.begin(), var_names_.end());
        if (seen.size() != var_names_.size())
            throw std::invalid_argument("ring variable names must be distinct");
        if (char_ != 0 && !is_prime(char_))
            throw std::invalid_argument("ring characteristic must be 0 or a prime");
    }

    int nvars() const { return static_cast<int>(var_names_.size()); }
    unsigned long characteristic() const { return char_; }
    /// 1-based variable name lookup.
    const std::string& var_name(int i) const { return var_names_.at(i - 1); }
    const std::vector<std::string>& var_names() const { return var_names_; }

    bool operator==(const Ring& o) const {
        return char_ == o.char_ && var_names_ == o.var_names_;
    }

    static bool is_prime(unsigned long p) {
        if (p < 2) return false;
        for (unsigned long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::vector<std::string> var_names_;
    unsigned long char_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Ring with default variable names x1..xn.
inline RingPtr make_ring(int n, unsigned long characteristic = 0) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return std::make_shared<Ring>(std::move(names), characteristic);
}

inline RingPtr make_ring(std::vector<std::string> names, unsigned long characteristic = 0) {
    return std::make_shared<Ring>(std::move(names), characteristic);
}

}  // namespace gincalc

#endif
