#include <stdexcept>

#include "agcolor/coloring.hpp"
#include "../construction_util.hpp"

namespace agcolor {

using detail::ColoringBuilder;
using detail::lines_with_direction;
using detail::vec_json;

namespace {

Coloring parallel_classes(int n, const Field& f, std::string construction) {
  if (n < 2) throw std::invalid_argument("parallel-class coloring requires n >= 2");
  ColoringBuilder b(detail::make_affine(n, f), std::move(construction));
  const auto& space = b.space();
  for (DirectionId d = 0; d < space.direction_count(); ++d)
    b.add("S" + std::to_string(d + 1), lines_with_direction(space, d),
          {{"type", "parallel class"}, {"direction", vec_json(space.direction(d))}});
  return b.finish();
}

}  // namespace

Coloring chromatic_parallel(int n, const Field& f) { return parallel_classes(n, f, "chromatic"); }

Coloring plane_achromatic(const Field& f) { return parallel_classes(2, f, "plane-achromatic"); }

Coloring plane_pseudo(const Field& f) {
  ColoringBuilder b(detail::make_affine(2, f), "plane-pseudo");
  const auto& space = b.space();
  const std::uint32_t q = f.order();
  const PointId origin = 0;

  // e_k: the q+1 lines through the origin, one per parallel class.
  std::vector<LineId> pencil;
  for (DirectionId d = 0; d < space.direction_count(); ++d) pencil.push_back(space.line_with(origin, d));

  // l_{m(q+1)+i} is the m-th line of S_i \ {e_i}; consecutive lines are never parallel.
  std::vector<LineId> rest;
  std::vector<std::vector<LineId>> others;
  for (DirectionId d = 0; d < space.direction_count(); ++d) {
    std::vector<LineId> cls;
    for (auto l : lines_with_direction(space, d))
      if (l != pencil[d]) cls.push_back(l);
    others.push_back(std::move(cls));
  }
  for (std::uint32_t m = 0; m + 1 < q; ++m)
    for (DirectionId d = 0; d < space.direction_count(); ++d) rest.push_back(others[d][m]);

  for (std::size_t k = 0; k < pencil.size(); ++k)
    b.add("E" + std::to_string(k + 1), {pencil[k]},
          {{"type", "line through origin"}, {"k", k + 1}, {"through", vec_json(space.point(origin))}});

  const std::size_t pairs = rest.size() / 2;
  for (std::size_t k = 0; k < pairs; ++k) {
    std::vector<LineId> lines{rest[2 * k], rest[2 * k + 1]};
    Json prov = {{"type", "pair"}, {"l", {2 * k + 1, 2 * k + 2}}};
    if (k + 1 == pairs && rest.size() % 2 == 1) {
      lines.push_back(rest.back());
      prov["l"].push_back(rest.size());
    }
    b.add("L" + std::to_string(k + 1), std::move(lines), std::move(prov));
  }
  b.trace()["point"] = vec_json(space.point(origin));
  b.trace()["interleaved_lines"] = rest.size();
  return b.finish();
}

}  // namespace agcolor
