#ifndef GINCALC_IDEAL_IO_HPP
#define GINCALC_IDEAL_IO_HPP

#include <string>
#include <vector>

#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"

namespace gincalc {

/// A parsed ideal file: ring declaration plus one polynomial per line.
struct IdealFile {
    RingPtr ring;
    std::vector<Polynomial> polys;
};

/// Grammar:
///   line 1:   ring CHAR name1 ... nameN        (CHAR = 0 or a prime)
///   others:   one polynomial per non-empty line; '#' starts a comment
///   poly:     [sign] term { ('+'|'-') term }
///   term:     factor { '*' factor }
///   factor:   INT [ '/' INT ]  |  VAR [ '^' INT ]
/// Products need an explicit '*'. Variables are exactly the declared tokens.
/// Throws ParseError with line/column on syntax errors, undeclared variables
/// and zero polynomial lines.
IdealFile parse_ideal(const std::string& text);

/// Canonical writer; its output re-parses to an equal IdealFile.
std::string write_ideal(const IdealFile& file);

/// Interpret the polynomials as monomial generators (used by --no-gin).
/// Each polynomial must be a single term; its coefficient is dropped.
MonomialIdeal as_monomial_ideal(const IdealFile& file);

}  // namespace gincalc

#endif
