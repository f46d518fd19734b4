#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

enum class RepKind { Finite = 0, Tame = 1, Wild = 2 };

std::string to_string(RepKind k);

struct RepType {
  RepKind kind = RepKind::Finite;
  // Minimal positive radical generator of the Tits form; set iff kind is Tame.
  // On a disconnected quiver it is supported on the first tame component.
  std::optional<DimVector> delta;
  std::size_t tame_components = 0;

  bool operator==(const RepType&) const = default;
};

/// Decided on the symmetrized Gram matrix by exact rational elimination:
/// positive definite -> Finite, positive semidefinite with one-dimensional
/// radical -> Tame, otherwise Wild. Components are classified separately and
/// the worst verdict wins.
RepType classify_representation_type(const Quiver& q);

// Throws ValidationError unless q is tame.
DimVector delta_root(const Quiver& q);

/// <delta, x_dim>. Throws ValidationError unless q is tame.
std::int64_t defect(const Quiver& q, const DimVector& x_dim);

enum class WitnessKind {
  MultiKronecker,      // two vertices joined by m >= 3 arrows
  EmbeddedKronecker,   // a doubled arrow inside a larger wild subquiver
  ExtendedDynkinPlus,  // tame subquiver plus one arrow or one vertex and arrow
};

std::string to_string(WitnessKind k);

struct WildWitness {
  WitnessKind kind = WitnessKind::MultiKronecker;
  // Minimal connected wild subquiver: removing any arrow makes it tame or
  // finite or disconnects it.
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> arrows;
  // MultiKronecker / EmbeddedKronecker: the parallel arrows.
  std::vector<std::size_t> kronecker_arrows;
  // ExtendedDynkinPlus: the tame part, its delta (indexed like tame_vertices)
  // and what was added to it.
  std::vector<std::size_t> tame_vertices;
  std::vector<std::size_t> tame_arrows;
  std::optional<DimVector> tame_delta;
  std::optional<std::size_t> extra_vertex;
  std::optional<std::size_t> extra_arrow;

  std::string describe(const Quiver& q) const;
};

/// Smallest wild connected full subquiver (vertex subsets by size, then
/// lexicographically), thinned by dropping arrows in order while it stays
/// connected and wild. Throws ValidationError unless q is wild.
WildWitness minimal_wild_witness(const Quiver& q);

}  // namespace qgr
