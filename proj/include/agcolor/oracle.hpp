#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "agcolor/coloring.hpp"

namespace agcolor {

/// Lines given only as point sets; two lines are adjacent when they share a
/// point. Nothing else about the geometry is assumed.
class IntersectionGraph {
 public:
  static constexpr std::size_t kMaxLines = 64;

  /// Throws std::invalid_argument on an empty set and std::length_error
  /// above kMaxLines sets.
  explicit IntersectionGraph(std::vector<std::vector<std::uint32_t>> point_sets);
  static IntersectionGraph of_space(const AffineSpace& space);

  std::size_t size() const { return sets_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return (adj_[a] >> b) & 1u; }
  std::uint64_t neighbours(std::size_t a) const { return adj_[a]; }
  std::size_t degree(std::size_t a) const;
  std::size_t edge_count() const;
  /// Largest number of sets sharing one point (a clique of the graph).
  std::size_t max_point_degree() const { return max_point_degree_; }
  const std::vector<std::uint32_t>& set(std::size_t a) const { return sets_[a]; }

 private:
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::uint64_t> adj_;
  std::size_t max_point_degree_ = 0;
};

enum class Index { chromatic, achromatic, pseudoachromatic };

std::string_view index_name(Index i);  // chi, alpha, psi
Index parse_index(std::string_view name);

struct OracleOptions {
  double budget_seconds = 60.0;
};

/// When the budget runs out the true value lies in [lower, upper] and exact
/// is false; the witness always realizes `lower` (or `upper` for chi).
struct OracleResult {
  Index index = Index::pseudoachromatic;
  bool exact = false;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::vector<std::vector<std::size_t>> witness;  // classes of set indices
  std::uint64_t nodes = 0;
};

OracleResult exact_pseudoachromatic(const IntersectionGraph& g, const OracleOptions& opt = {});
OracleResult exact_achromatic(const IntersectionGraph& g, const OracleOptions& opt = {});
OracleResult exact_chromatic(const IntersectionGraph& g, const OracleOptions& opt = {});
OracleResult run_oracle(Index index, const IntersectionGraph& g, const OracleOptions& opt = {});

/// Reads {"sets": [[p, ...], ...]} or a bare list of point-id lists.
IntersectionGraph graph_from_json(const Json& j);
Json oracle_result_to_json(const OracleResult& r);

}  // namespace agcolor
