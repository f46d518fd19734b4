#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgr/coefficient_quiver.hpp"
#include "qgr/polynomial.hpp"

namespace qgr {

/// F-polynomial variables: x, y for a two-vertex quiver (source first in
/// file order), otherwise x_<vertex> for every vertex.
std::vector<std::string> fpoly_variables(const Quiver& q);

/// sum_e (number of successor-closed subsets of type e) x^e.
/// Throws ValidationError for a ramified coefficient quiver.
Polynomial fpoly_bruteforce(const CoefficientQuiver& g);

/// F_0 .. F_n from F_k = F_delta F_(k-1) - x^delta F_(k-2), with F_0 = 1 and
/// F_1 = F_delta (equivalently F_(-1) = 0). Each term is checked against the
/// (1,2) entry of [[0, 1], [-x^delta, F_delta]]^(k+1); a mismatch throws
/// InternalError. Throws ValidationError if x_delta is not a monomial.
std::vector<Polynomial> fdelta_sequence(const Polynomial& f_delta, const Polynomial& x_delta, std::size_t n);

// F_(n delta) as the (1,2) entry of the companion matrix power alone.
Polynomial companion_power_entry(const Polynomial& f_delta, const Polynomial& x_delta, std::size_t n);

// 1 + y + x*y and x*y over the Kronecker variables.
Polynomial kronecker_f_delta();
Polynomial kronecker_x_delta();

enum class FpolyMethod { Recursion, ProductFormula };
std::string to_string(FpolyMethod m);
FpolyMethod parse_fpoly_method(const std::string& text);

/// F-polynomial of the n-th preprojective Kronecker representation:
///   Recursion:      F_n = (1 + y + xy) F_(n-1) - xy F_(n-2), F_(-1) = 1, F_0 = 1 + y
///   ProductFormula: F_n = F_(n delta) F_0 - xy F_((n-1) delta)
Polynomial kronecker_preproj_fpoly(std::size_t n, FpolyMethod method);

}  // namespace qgr
