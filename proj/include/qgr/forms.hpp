#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qgr/quiver.hpp"

namespace qgr {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// <a,b> = sum_q a_q b_q - sum_{v: s->t} a_s b_t
std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
std::int64_t euler_form(const Quiver& q, std::span<const std::int64_t> a,
                        std::span<const std::int64_t> b);

std::int64_t tits_form(const Quiver& q, const DimVector& a);

// E[i][j] = <e_i, e_j>.
IntMatrix euler_matrix(const Quiver& q);

// Symmetrized Gram matrix E + E^T.
IntMatrix symmetric_gram(const Quiver& q);

// P[i][j] = number of directed paths i -> j, trivial paths included. P = E^{-1}.
IntMatrix path_count_matrix(const Quiver& q);

/// Dimension vector of the indecomposable projective at p: entry r counts the
/// paths from p to r.
DimVector projective_dimvec(const Quiver& q, std::size_t p);
DimVector projective_dimvec(const Quiver& q, std::string_view p);

enum class Translate { Forward, Inverse };

/// Dimension-vector action of the Auslander-Reiten translate.
///
/// Convention (column vectors, E the Euler matrix, P = E^{-1}):
///   Inverse (tau^-1):  a -> -P^T E a
///   Forward (tau):     a -> -P E^T a
/// so that dim tau^-1 P_q2 = (0,1,1,1) on A~{2,2} in the order (q1,s1,t1,q2).
/// Returns nullopt when the image has a negative entry, i.e. the input is the
/// dimension vector of an injective (Inverse) or projective (Forward).
std::optional<DimVector> coxeter_transform(const Quiver& q, const DimVector& a, Translate direction);

// Unclamped integral action; used by tests and the classifier.
std::vector<std::int64_t> coxeter_apply(const Quiver& q, std::span<const std::int64_t> a,
                                        Translate direction);

}  // namespace qgr
