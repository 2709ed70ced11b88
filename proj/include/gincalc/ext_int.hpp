#ifndef GINCALC_EXT_INT_HPP
#define GINCALC_EXT_INT_HPP

#include <cassert>
#include <compare>
#include <string>

namespace gincalc {

/// An integer extended by -inf and +inf. Used for degrees of graded pieces
/// (colon degrees, regularity profiles), where the empty maximum is -inf and
/// an unbounded quotient is +inf.
class ExtInt {
public:
    constexpr ExtInt() : kind_(Kind::NegInf), value_(0) {}
    constexpr ExtInt(int v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design

    static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
    static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    constexpr int value() const {
        assert(is_finite());
        return value_;
    }

    /// Shift by a finite amount; infinities absorb.
    constexpr ExtInt operator+(int d) const {
        return is_finite() ? ExtInt(value_ + d) : *this;
    }
    constexpr ExtInt operator-(int d) const { return *this + (-d); }

    friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ != b.kind_) {
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        }
        return a.value_ <=> b.value_;
    }
    friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }

    static constexpr ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

    std::string str() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return std::to_string(value_);
    }

private:
    enum class Kind { NegInf = 0, Finite = 1, PosInf = 2 };
    constexpr explicit ExtInt(Kind k) : kind_(k), value_(0) {}
    Kind kind_;
    int value_;
};

}  // namespace gincalc

#endif
