#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgr/coefficient_quiver.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/polynomial.hpp"

namespace qgr {

// Formal partial derivatives in variable order.
std::vector<Polynomial> jacobian(const Polynomial& p);

struct AffineCellPresentation {
  std::vector<std::string> variables;
  std::vector<Polynomial> equations;
  std::vector<std::string> free_variables;
};

/// Solves eq for variable var when eq is c*var + (terms without var) with
/// c = +-1, returning the expression for var.
Polynomial solve_linear(const Polynomial& eq, std::size_t var);

/// Moves p onto a new variable list; mapping[i] is the new index of old
/// variable i. Variables absent from p may map anywhere.
Polynomial rename_variables(const Polynomial& p, std::vector<std::string> new_variables,
                            const std::vector<std::size_t>& mapping);

/// The open Schubert cell of Gr_(1,2) of the Kronecker string with points
/// 1..6 at the subset {3,5,6}: U_0 = <b6 + w26 b2 + w46 b4>,
/// U_1 = <b3 + w13 b1, b5 + w15 b1>.
struct Kronecker3DeltaCell {
  AffineCellPresentation cell;  // variables w13 w15 w26 w46
  Polynomial w15_solution;      // w26 + w13*w46
  Polynomial hypersurface;      // in x = w26, y = w13, z = w46
};

Kronecker3DeltaCell kronecker_3delta_cell();

/// Integer points of [-n, n]^3 where p and all its partials vanish.
/// The OpenMP version splits the first coordinate across threads.
std::vector<std::array<std::int64_t, 3>> singular_box_scan(const Polynomial& p, std::int64_t n);
namespace reference {
std::vector<std::array<std::int64_t, 3>> singular_box_scan(const Polynomial& p, std::int64_t n);
}

/// Schubert-cell coordinates of a point of Gr_(1,2) of the 3-delta string:
/// the bottom-pivot normal form. Returns false when the point is not in the
/// cell of {3,5,6}.
bool kronecker_cell_coordinates(const FiniteSubrep& u, std::array<std::uint32_t, 4>& w);

/// The A~2 family. Quiver left -a-> middle <-b- right, right -c-> left;
/// points 1,4 over left, 2,5 over middle, 3,6 over right; edges 1-a->2,
/// 3-b->2, 3-c->1 (weight L), 3-c->4, 6-c->4 (weight L), 4-a->5, 6-b->5.
struct TildeA2Family {
  CoefficientQuiver gamma;    // with the parameter L
  CoefficientQuiver bound;    // L substituted, zero edges dropped
  RepresentationData rep;
  DimVector e;                // (1,2,1)
  std::string ambient;        // "P1 x P1"
  // b*D4*D3 - b*D1*D6 + c*D1*D3 for lambda = b/c, in variables D1 D4 D3 D6.
  // U_left = <D1 b1 - D4 b4>, U_right = <D3 b3 - D6 b6>.
  Polynomial equation;
};

Quiver tildeA2_quiver();
CoefficientQuiver tildeA2_family_gamma();
TildeA2Family tildeA2_family(const Rational& lambda);

/// Bihomogeneous coordinates (D1, D4, D3, D6) of a point of the family's
/// Grassmannian, normalized as in TildeA2Family::equation.
std::array<std::uint32_t, 4> tildeA2_coordinates(const FiniteSubrep& u);

struct NamedDimVector {
  std::string name;
  DimVector dims;
};

/// D~4 in subspace orientation (centre first, then four arms pointing in)
/// and the dimension vectors S, T, P, P' of its rank-two tube example.
/// Documentation only; no matrices are attached.
Quiver dtilde4_subspace_quiver();
std::vector<NamedDimVector> dtilde4_tube_dimvecs();

}  // namespace qgr
