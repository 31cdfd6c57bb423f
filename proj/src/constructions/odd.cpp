#include <stdexcept>

#include "agcolor/coloring.hpp"
#include "agcolor/structures.hpp"
#include "../construction_util.hpp"

namespace agcolor {

using detail::ColoringBuilder;
using detail::lines_with_direction;
using detail::subspace_json;
using detail::vec_json;

Coloring odd_pseudo(int k, const Field& f) {
  if (k < 1) throw std::invalid_argument("odd-pseudo requires k >= 1 (odd n >= 3)");
  ColoringBuilder b(detail::make_affine(2 * k + 1, f), "odd-pseudo");
  const auto& space = b.space();
  const GoodPartition gp = build_good_partition(k, f);
  const std::uint32_t q = f.order();

  std::uint64_t qk = 1;
  for (int i = 0; i < k; ++i) qk *= q;
  if (gp.a.size() != gp.b.size() * q) throw std::logic_error("good partition has unexpected class sizes");

  // Each A point carries q^k parallel (k+1)-flats, each B point q^(k+1) parallel k-flats.
  auto flats_of = [&](PointId p) { return space.parallel_flats(gp.assigned[p].basis()); };

  for (std::size_t j = 0; j < gp.b.size(); ++j) {
    const PointId r = gp.b[j];
    const auto rflats = flats_of(r);
    for (std::uint32_t i = 0; i < q; ++i) {
      const PointId p = gp.a[j * q + i];
      const auto pflats = flats_of(p);
      for (std::uint64_t m = 0; m < qk; ++m) {
        auto lines = space.lines_in(pflats[m], p);
        auto lr = space.lines_in(rflats[i * qk + m], r);
        lines.insert(lines.end(), lr.begin(), lr.end());
        b.add("C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(m + 1) + ")",
              std::move(lines),
              {{"type", "subspace pair"},
               {"P", vec_json(space.direction(p))},
               {"R", vec_json(space.direction(r))},
               {"A_flat", m + 1},
               {"B_flat", i * qk + m + 1}});
      }
    }
  }
  b.add("C1", lines_with_direction(space, gp.q_point),
        {{"type", "parallel class"}, {"direction", vec_json(space.direction(gp.q_point))}});

  auto assigned = [&](const std::vector<PointId>& pts) {
    Json out = Json::array();
    for (auto p : pts) out.push_back({{"point", vec_json(space.direction(p))}, {"subspace", subspace_json(gp.assigned[p])}});
    return out;
  };
  b.trace()["Q"] = vec_json(space.direction(gp.q_point));
  b.trace()["A"] = assigned(gp.a);
  b.trace()["B"] = assigned(gp.b);
  return b.finish();
}

}  // namespace agcolor
