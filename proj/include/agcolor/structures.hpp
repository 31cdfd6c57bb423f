#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agcolor/field.hpp"
#include "agcolor/space.hpp"

namespace agcolor {

/// A (k-1)-spread of PG(2k-1, q): q^k + 1 pairwise disjoint (k-1)-dimensional
/// subspaces covering every point.
struct Spread {
  int k = 0;
  ProjectiveSpace ambient;
  std::vector<Subspace> members;            // ordered by least point
  std::vector<std::uint32_t> point_member;  // ambient point id -> member index
};

/// Regular spread by field reduction: GF(q)^{2k} read as GF(q^k)^2, whose
/// one-dimensional GF(q^k)-subspaces become the members.
Spread build_spread(int k, const Field& f);

/// Partition {Q} u A u B of PG(2k, q) with assigned subspaces S(P):
/// dim S(a) = k for a in A, dim S(b) = k - 1 for b in B, P in S(P), and
/// S(a), S(b) disjoint for every a in A, b in B.
struct GoodPartition {
  int k = 0;
  ProjectiveSpace ambient;
  PointId q_point = 0;
  std::vector<PointId> a;         // ascending
  std::vector<PointId> b;         // ascending
  std::vector<Subspace> assigned;  // indexed by ambient point id; empty for Q
};

/// Inductive construction: pencil of lines through Q in the plane case, then
/// lifting through a pencil of hyperplanes with a codimension-2 carrier.
/// Every free choice takes the lexicographically least admissible point. Q
/// defaults to the least point of the space.
GoodPartition build_good_partition(int k, const Field& f, std::optional<Vec> q_point = std::nullopt);

/// Perfect difference set modulo v = q^2 + q + 1 with d_0 = 0, d_1 = 1.
struct DifferenceSet {
  std::uint32_t q = 0;
  std::uint32_t v = 0;
  std::vector<std::uint32_t> d;  // ascending; starts 0, 1
  /// Cyclic model realization: label -> point of PG(2, q). The translates
  /// D + j are exactly the lines. Empty when the set came from a search.
  std::vector<Vec> points;
  std::uint32_t multiplier = 1;
  std::uint32_t translation = 0;
};

bool is_perfect_difference_set(std::span<const std::uint32_t> d, std::uint32_t v);

/// Singer construction: logarithms (base a primitive element of GF(q^3)) of
/// the points of the line <1, w>, then the lexicographically least image
/// under x -> s x + j (s a unit) that contains 0 and 1.
DifferenceSet singer_difference_set(const Field& f);

/// Backtracking search for the lexicographically least perfect difference
/// set of size q + 1 containing 0 and 1. Only intended for v <= 133.
std::optional<std::vector<std::uint32_t>> exhaustive_difference_set(std::uint32_t q);

/// The unique line through p meeting the skew subspaces s1 and s2, computed
/// as <p, s1> n <p, s2>. Throws std::invalid_argument if s1 and s2 meet, if
/// p lies on either, or if the intersection is not a line.
Subspace transversal(const Field& f, const Vec& p, const Subspace& s1, const Subspace& s2);

}  // namespace agcolor
