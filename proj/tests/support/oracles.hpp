#ifndef GINCALC_TESTS_ORACLES_HPP
#define GINCALC_TESTS_ORACLES_HPP

// Brute-force oracles, independent of the library's computation paths:
// degree-slice linear algebra over Q for arbitrary homogeneous ideals and
// box enumeration for monomial colon quotients.

#include <vector>

#include "gincalc/ext_int.hpp"
#include "gincalc/monomial_ideal.hpp"
#include "gincalc/polynomial.hpp"

namespace gincalc::testing {

/// All monomials of S of exact degree d, deterministic order.
std::vector<Monomial> monomials_of_degree(int n, int d);

long full_slice_dim(int n, int m);

/// dim_k of the degree-m slice of the ideal generated by F (exact rank of
/// the spanning set {u * f}, Gaussian elimination over Q).
long ideal_slice_dim(const std::vector<Polynomial>& F, int m);

/// dim_k [(F, x_n..x_{i+1}) : x_i]_m via
/// dim(x_i S_m ∩ J_{m+1}) = dim S_m + dim J_{m+1} - dim(x_i S_m + J_{m+1}).
long colon_slice_dim(const std::vector<Polynomial>& F, int i, int m);

/// dim_k of the degree-m slice of the ideal (F, x_n..x_{i+1}) itself.
long extended_slice_dim(const std::vector<Polynomial>& F, int i, int m);

/// Number of degree-m monomials inside the monomial ideal J.
long monomial_slice_count(const MonomialIdeal& J, int m);
/// Number of degree-m monomials in [(J, x_n..x_{i+1}) : x_i].
long monomial_colon_slice_count(const MonomialIdeal& J, int i, int m);
/// Number of degree-m monomials in (J, x_n..x_{i+1}).
long monomial_extended_slice_count(const MonomialIdeal& J, int i, int m);

/// Enumeration oracle for delta_i of the monomial ideal J: witnesses are
/// monomials w of k[x_1..x_i] with w not in J|_i and w*x_i in J|_i. All
/// witnesses of a finite-length quotient live in the box [0, D]^i with
/// D = max generator degree, and a witness with an exponent >= D pumps to
/// arbitrarily high degree, so scanning the box decides finiteness exactly.
ExtInt delta_oracle(const MonomialIdeal& J, int i);

}  // namespace gincalc::testing

#endif
