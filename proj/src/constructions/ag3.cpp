#include <algorithm>
#include <stdexcept>

#include "agcolor/coloring.hpp"
#include "agcolor/structures.hpp"
#include "agcolor/verify.hpp"
#include "../construction_util.hpp"

namespace agcolor {

using detail::ColoringBuilder;
using detail::lines_with_direction;
using detail::vec_json;

namespace {

struct Labeling {
  std::string orientation;
  std::vector<Vec> points;       // label -> point of H-infinity
  std::vector<std::uint32_t> d;  // ascending, contains 0 and 1
};

std::size_t flat_containing(const std::vector<std::vector<PointId>>& flats, PointId x) {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (std::binary_search(flats[i].begin(), flats[i].end(), x)) return i;
  throw std::logic_error("point in no flat");
}

Coloring build(const Field& f, const Labeling& lab, std::uint32_t shift) {
  ColoringBuilder b(detail::make_affine(3, f), "ag3-achromatic");
  const auto& space = b.space();
  const std::uint32_t q = f.order();
  const std::uint32_t v = q * q + q + 1;

  std::vector<DirectionId> label_dir(v);
  for (std::uint32_t y = 0; y < v; ++y) label_dir[y] = space.direction_id(lab.points[y]);

  // Line with label set D + j, as a projective subspace of H-infinity.
  auto line_basis = [&](std::uint32_t j) {
    std::vector<Vec> rows;
    for (auto x : lab.d) rows.push_back(lab.points[(x + j) % v]);
    const auto s = span_points(f, rows);
    if (s.dim() != 1) throw std::logic_error("difference set translate is not a line");
    return s.basis();
  };

  for (std::uint32_t i = 1; i + 1 < v; i += 2) {
    const DirectionId pi = label_dir[i], pn = label_dir[i + 1];
    const auto planes_i = space.parallel_flats(line_basis(i));
    const auto planes_n = space.parallel_flats(line_basis(i + 1));
    // W_i: the plane through the origin over the line D + (i + 1 - d); it
    // contains P_{i+1}, the common point of the two lines above.
    const auto w = space.parallel_flats(line_basis((i + 1 + v - shift) % v))[0];

    std::vector<LineId> e(q);
    std::vector<std::size_t> partner(q);
    for (std::uint32_t j = 0; j < q; ++j) {
      std::vector<PointId> meet;
      std::set_intersection(planes_i[j].begin(), planes_i[j].end(), w.begin(), w.end(), std::back_inserter(meet));
      if (meet.size() != q) throw std::logic_error("plane and W do not meet in a line");
      e[j] = space.line_through(meet[0], meet[1]);
      if (space.line(e[j]).direction != pn) throw std::logic_error("e-line has unexpected direction");
      partner[j] = flat_containing(planes_n, meet[0]);
    }

    const std::string tag = std::to_string(i);
    b.add("C(" + tag + ",0)", e, {{"type", "transversals"}, {"i", i}});
    for (std::uint32_t j = 0; j < q; ++j) {
      auto lines = space.lines_in(planes_i[j], pi);
      for (auto l : space.lines_in(planes_n[partner[j]], pn))
        if (l != e[j]) lines.push_back(l);
      b.add("C(" + tag + "," + std::to_string(j + 1) + ")", std::move(lines),
            {{"type", "plane pair"}, {"i", i}, {"j", j + 1}});
    }
  }
  b.add("C(v)", lines_with_direction(space, label_dir[0]),
        {{"type", "parallel class"}, {"direction", vec_json(space.direction(label_dir[0]))}});

  Json labels = Json::array();
  for (const auto& p : lab.points) labels.push_back(vec_json(p));
  b.trace()["orientation"] = lab.orientation;
  b.trace()["difference_set"] = lab.d;
  b.trace()["d"] = shift;
  b.trace()["labels"] = std::move(labels);
  return b.finish();
}

}  // namespace

Coloring ag3_achromatic(const Field& f) {
  const DifferenceSet ds = singer_difference_set(f);
  const std::uint32_t v = ds.v;

  std::vector<Labeling> candidates;
  candidates.push_back({"forward", ds.points, ds.d});
  Labeling reflected{"reflected", {}, {}};
  for (std::uint32_t y = 0; y < v; ++y) reflected.points.push_back(ds.points[(v - y) % v]);
  for (auto x : ds.d) reflected.d.push_back((1 + v - x) % v);
  std::sort(reflected.d.begin(), reflected.d.end());
  candidates.push_back(std::move(reflected));

  Json rejected = Json::array();
  for (const auto& lab : candidates) {
    for (auto shift : lab.d) {
      if (shift == 0 || shift == 1) continue;
      Coloring c = build(f, lab, shift);
      if (is_proper(c).proper && is_complete(c).complete) {
        c.trace["rejected_parameters"] = std::move(rejected);
        return c;
      }
      rejected.push_back({{"orientation", lab.orientation}, {"d", shift}});
    }
  }
  throw std::logic_error("no cyclic labeling produced a complete proper coloring of AG(3," + std::to_string(f.order()) +
                         ")");
}

}  // namespace agcolor
