#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agcolor/coloring.hpp"

namespace agcolor::detail {

std::shared_ptr<const AffineSpace> make_affine(int n, const Field& f);

Json vec_json(const Vec& v);
Json subspace_json(const Subspace& s);

/// Collects classes in emission order and checks the partition invariant on
/// finish().
class ColoringBuilder {
 public:
  ColoringBuilder(std::shared_ptr<const AffineSpace> space, std::string construction);

  Json& trace() { return trace_; }
  const AffineSpace& space() const { return *space_; }
  void add(std::string id, std::vector<LineId> lines, Json provenance);
  /// Throws std::logic_error unless the classes partition all lines.
  Coloring finish();

 private:
  std::shared_ptr<const AffineSpace> space_;
  std::string construction_;
  std::vector<ColorClass> classes_;
  Json trace_ = Json::object();
  Json provenance_ = Json::object();
};

/// All lines of one direction.
std::vector<LineId> lines_with_direction(const AffineSpace& space, DirectionId d);

}  // namespace agcolor::detail
