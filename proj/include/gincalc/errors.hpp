#ifndef GINCALC_ERRORS_HPP
#define GINCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gincalc {

/// Base class for all computation errors. `code()` is the stable
/// machine-readable identifier used in JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// The ideal contains a unit (equals the whole ring).
struct UnitIdealError : Error {
    explicit UnitIdealError(const std::string& msg = "ideal contains a unit")
        : Error("unit_ideal", msg) {}
};

/// Sampled coordinate changes disagree on the initial ideal.
struct GinUnstableError : Error {
    explicit GinUnstableError(const std::string& msg)
        : Error("gin_unstable", msg) {}
};

/// The agreed gin is not Borel-fixed in characteristic 0.
struct BorelCheckFailedError : Error {
    explicit BorelCheckFailedError(const std::string& msg)
        : Error("borel_check_failed", msg) {}
};

/// x_n,...,x_1 is not a filter-regular sequence; carries the offending
/// variable index (1-based).
struct NotFilterRegularError : Error {
    explicit NotFilterRegularError(int variable_index)
        : Error("not_filter_regular",
                "x" + std::to_string(variable_index) +
                    " is not filter-regular (colon quotient has infinite length)"),
          variable_index(variable_index) {}
    int variable_index;
};

struct NotBorelFixedError : Error {
    explicit NotBorelFixedError(const std::string& msg = "ideal is not Borel-fixed")
        : Error("not_borel_fixed", msg) {}
};

struct CharNotZeroError : Error {
    explicit CharNotZeroError(const std::string& msg = "operation requires characteristic 0")
        : Error("char_not_zero", msg) {}
};

/// No power of the distinguished variable lies in the ideal.
struct NoPowerError : Error {
    explicit NoPowerError(const std::string& msg) : Error("no_power", msg) {}
};

/// The candidate variable reduction is not a reduction (restriction not artinian).
struct NotAReductionError : Error {
    explicit NotAReductionError(const std::string& msg)
        : Error("not_a_reduction", msg) {}
};

/// Direct and Bresinsky-Hoa reduction routes disagree.
struct RouteDisagreementError : Error {
    explicit RouteDisagreementError(const std::string& msg)
        : Error("route_disagreement", msg) {}
};

/// Pipelines refuse non-homogeneous input.
struct NotHomogeneousError : Error {
    explicit NotHomogeneousError(const std::string& msg = "input ideal is not homogeneous")
        : Error("not_homogeneous", msg) {}
};

/// Positioned ideal-file syntax error.
struct ParseError : Error {
    ParseError(int line, int column, const std::string& msg)
        : Error("parse_error",
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

}  // namespace gincalc

#endif
