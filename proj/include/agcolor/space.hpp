#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "agcolor/field.hpp"

namespace agcolor {

using Vec = std::vector<Element>;
using PointId = std::uint32_t;
using LineId = std::uint32_t;
using DirectionId = std::uint32_t;

struct SpaceLimits {
  int max_dimension = 8;
  std::uint64_t max_points = 1u << 20;
  std::uint64_t max_lines = 1u << 22;
};

namespace linalg {

bool is_zero(const Vec& v);
/// Scales v so its first nonzero coordinate is 1. Throws on the zero vector.
Vec normalize(const Field& f, Vec v);
/// Reduced row echelon form with zero rows dropped.
std::vector<Vec> rref(const Field& f, std::vector<Vec> rows);
/// Basis (in RREF) of { x : r . x = 0 for every row r }.
std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols);
Vec axpy(const Field& f, Element a, const Vec& x, const Vec& y);  // a*x + y

}  // namespace linalg

/// Homogeneous coordinates normalized so the first nonzero entry is 1.
struct ProjectivePoint {
  Vec coords;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// A projective subspace, stored as the RREF basis of the spanning linear
/// subspace. Equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t vector_length = 0) : length_(vector_length) {}
  static Subspace from_rows(const Field& f, std::size_t vector_length, std::vector<Vec> rows);
  static Subspace from_point(const Field& f, const Vec& v) { return from_rows(f, v.size(), {v}); }

  std::size_t vector_length() const { return length_; }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(rows_.size()) - 1; }
  bool empty() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }

  bool contains(const Field& f, const Vec& v) const;
  bool contains(const Field& f, const Subspace& other) const;
  std::uint64_t point_count(const Field& f) const;
  /// All points, normalized, in lexicographic order.
  std::vector<ProjectivePoint> points(const Field& f) const;

  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  std::size_t length_;
  std::vector<Vec> rows_;
};

/// Smallest subspace containing both inputs. Throws if the ambient spaces differ.
Subspace span(const Field& f, const Subspace& a, const Subspace& b);
Subspace span_points(const Field& f, std::span<const Vec> points);
Subspace intersect(const Field& f, const Subspace& a, const Subspace& b);

/// PG(n, q): points in lexicographic order of normalized coordinates.
class ProjectiveSpace {
 public:
  ProjectiveSpace(Field f, int n, SpaceLimits limits = {});

  const Field& field() const { return field_; }
  int dimension() const { return n_; }
  std::size_t point_count() const { return points_.size(); }
  const Vec& point(PointId id) const { return points_.at(id); }
  /// Accepts any nonzero vector; normalizes first.
  PointId index_of(const Vec& v) const;
  std::vector<PointId> points_of(const Subspace& s) const;
  Subspace whole() const;
  Subspace subspace_of(PointId id) const { return Subspace::from_point(field_, points_.at(id)); }

 private:
  Field field_;
  int n_;
  std::vector<Vec> points_;
  std::unordered_map<std::uint64_t, PointId> index_;
};

/// Lexicographically ordered normalized vectors of length len (the points of
/// PG(len - 1, q)).
std::vector<Vec> normalized_vectors(const Field& f, std::size_t len);

struct AffineLine {
  DirectionId direction;
  PointId base;  // lexicographically least point on the line
};

/// AG(n, q) with every line enumerated.
///
/// Point ids are the base-q reading of the coordinates (first coordinate most
/// significant), so id order is lexicographic order. Directions are the
/// points of the hyperplane at infinity, in lexicographic order. Lines are
/// ordered by (direction, base point). H-infinity is the hyperplane with last
/// homogeneous coordinate 0; an affine point (a_1..a_n) embeds as
/// (a_1:..:a_n:1).
class AffineSpace {
 public:
  AffineSpace(Field f, int n, SpaceLimits limits = {});

  const Field& field() const { return field_; }
  int dimension() const { return n_; }
  std::uint32_t order() const { return field_.order(); }

  std::size_t point_count() const { return point_count_; }
  Vec point(PointId id) const;
  PointId point_id(const Vec& coords) const;

  std::size_t direction_count() const { return directions_.size(); }
  const Vec& direction(DirectionId d) const { return directions_.at(d); }
  /// Accepts any nonzero vector; normalizes first.
  DirectionId direction_id(const Vec& v) const;

  std::size_t line_count() const { return lines_.size(); }
  const AffineLine& line(LineId l) const { return lines_.at(l); }
  std::span<const PointId> line_points(LineId l) const;
  std::span<const LineId> lines_through(PointId p) const;
  LineId line_with(PointId p, DirectionId d) const { return line_of_[std::size_t(d) * point_count_ + p]; }
  /// Unique line through two distinct points; throws std::invalid_argument if a == b.
  LineId line_through(PointId a, PointId b) const;
  bool lines_meet(LineId a, LineId b) const;
  std::optional<PointId> common_point(LineId a, LineId b) const;

  /// "d:<idx,...>|b:<idx,...>" with element indices; n entries each.
  std::string line_key(LineId l) const;
  /// Inverse of line_key; only canonical keys are accepted.
  LineId parse_line_key(std::string_view key) const;

  // Projective closure, with H-infinity = {x_{n+1} = 0}.
  Vec embed(PointId p) const;
  ProjectivePoint point_at_infinity(LineId l) const;
  Subspace closure(LineId l) const;
  Subspace hyperplane_at_infinity() const;
  bool inside_infinity(const Subspace& s) const;
  /// Affine points of a projective subspace; empty when it lies in H-infinity.
  std::vector<PointId> affine_points(const Subspace& s) const;
  /// The affine line of a projective line; nullopt when the line lies in
  /// H-infinity. Throws std::invalid_argument if s is not a line.
  std::optional<LineId> affine_line(const Subspace& s) const;

  /// Cosets of the linear subspace spanned by `directions` (vectors of
  /// length n), each sorted, ordered by least point.
  std::vector<std::vector<PointId>> parallel_flats(const std::vector<Vec>& directions) const;
  /// Lines with direction d through the points of a flat that contains them.
  std::vector<LineId> lines_in(std::span<const PointId> flat, DirectionId d) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;

 private:
  Field field_;
  int n_;
  std::size_t point_count_;
  std::vector<Vec> directions_;
  std::unordered_map<std::uint64_t, DirectionId> direction_index_;
  std::vector<AffineLine> lines_;
  std::vector<PointId> line_points_;       // q entries per line, ascending
  std::vector<LineId> line_of_;            // [direction][point]
  std::vector<LineId> lines_through_;      // direction_count entries per point
};

std::uint64_t encode(const Vec& v, std::uint32_t q);

}  // namespace agcolor
