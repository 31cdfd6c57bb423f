#include <algorithm>
#include <stdexcept>

#include "agcolor/coloring.hpp"
#include "agcolor/structures.hpp"
#include "../construction_util.hpp"

namespace agcolor {

using detail::ColoringBuilder;
using detail::lines_with_direction;
using detail::subspace_json;
using detail::vec_json;

namespace {

using Pairing = std::vector<std::pair<DirectionId, DirectionId>>;

// Perfect matching of three groups with no pair inside a group.
Pairing match_three(const std::vector<PointId>& a, const std::vector<PointId>& b, const std::vector<PointId>& c) {
  const long na = static_cast<long>(a.size()), nb = static_cast<long>(b.size()), nc = static_cast<long>(c.size());
  if ((na + nb + nc) % 2 != 0 || na > nb + nc || nb > na + nc || nc > na + nb)
    throw std::logic_error("three-group matching does not exist");
  const long ab = (na + nb - nc) / 2, ac = (na + nc - nb) / 2, bc = (nb + nc - na) / 2;
  Pairing out;
  for (long i = 0; i < ab; ++i) out.emplace_back(a[i], b[i]);
  for (long i = 0; i < ac; ++i) out.emplace_back(a[ab + i], c[i]);
  for (long i = 0; i < bc; ++i) out.emplace_back(b[ab + i], c[ac + i]);
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<LineId> without(std::vector<LineId> lines, LineId drop) {
  auto it = std::find(lines.begin(), lines.end(), drop);
  if (it == lines.end()) throw std::logic_error("expected line is missing from its flat");
  lines.erase(it);
  return lines;
}

PointId point_of(const ProjectiveSpace& ps, const Subspace& s) {
  if (s.dim() != 0) throw std::logic_error("expected a single point");
  return ps.index_of(s.basis().front());
}

}  // namespace

Coloring even_pseudo(int k, const Field& f) {
  if (k < 2) throw std::invalid_argument("even-pseudo requires k >= 2 (even n >= 4)");
  ColoringBuilder b(detail::make_affine(2 * k, f), "even-pseudo");
  const auto& space = b.space();
  const Spread spread = build_spread(k, f);
  const std::uint32_t q = f.order();
  const std::size_t members = spread.members.size();

  std::vector<std::vector<PointId>> pts;
  for (const auto& m : spread.members) pts.push_back(spread.ambient.points_of(m));

  Pairing pairing;
  std::optional<DirectionId> removed;
  if (q % 2 == 1) {
    for (std::size_t t = 0; t + 1 < members; t += 2)
      for (std::size_t j = 0; j < pts[t].size(); ++j) pairing.emplace_back(pts[t][j], pts[t + 1][j]);
  } else {
    removed = pts[0][0];
    const std::vector<PointId> first(pts[0].begin() + 1, pts[0].end());
    pairing = match_three(first, pts[1], pts[2]);
    for (std::size_t t = 3; t + 1 < members; t += 2)
      for (std::size_t j = 0; j < pts[t].size(); ++j) pairing.emplace_back(pts[t][j], pts[t + 1][j]);
  }
  for (auto [u, v] : pairing)
    if (spread.point_member[u] == spread.point_member[v])
      throw std::logic_error("pairing joins two points of one spread member");

  std::vector<std::vector<std::vector<PointId>>> flats;
  for (const auto& m : spread.members) flats.push_back(space.parallel_flats(m.basis()));

  const std::uint64_t per_pair = ipow(q, k);
  for (std::size_t pi = 0; pi < pairing.size(); ++pi) {
    const auto [u, v] = pairing[pi];
    const auto& fu = flats[spread.point_member[u]];
    const auto& fv = flats[spread.point_member[v]];
    for (std::uint64_t i = 0; i < per_pair; ++i) {
      auto lines = space.lines_in(fu[i], u);
      auto lv = space.lines_in(fv[i], v);
      lines.insert(lines.end(), lv.begin(), lv.end());
      b.add("C(" + std::to_string(pi + 1) + "," + std::to_string(i + 1) + ")", std::move(lines),
            {{"type", "point pair"},
             {"U", vec_json(space.direction(u))},
             {"V", vec_json(space.direction(v))},
             {"i", i + 1}});
    }
  }
  if (removed)
    b.add("C1", lines_with_direction(space, *removed),
          {{"type", "parallel class"}, {"direction", vec_json(space.direction(*removed))}});

  Json spread_json = Json::array();
  for (const auto& m : spread.members) spread_json.push_back(subspace_json(m));
  Json pairs_json = Json::array();
  for (auto [u, v] : pairing) pairs_json.push_back({vec_json(space.direction(u)), vec_json(space.direction(v))});
  b.trace()["spread"] = std::move(spread_json);
  b.trace()["pairing"] = std::move(pairs_json);
  b.trace()["unpaired_point"] = removed ? vec_json(space.direction(*removed)) : Json(nullptr);
  return b.finish();
}

Coloring even_achromatic(int k, const Field& f) {
  if (k < 2) throw std::invalid_argument("even-achromatic requires k >= 2 (even n >= 4)");
  ColoringBuilder b(detail::make_affine(2 * k, f), "even-achromatic");
  const auto& space = b.space();
  const Spread spread = build_spread(k, f);
  const ProjectiveSpace& ps = spread.ambient;
  const std::uint32_t q = f.order();
  const std::size_t members = spread.members.size();
  const std::size_t eps = members % 3;
  const std::size_t triples = (members - eps) / 3;
  const std::uint64_t qk = ipow(q, k);

  std::vector<std::vector<PointId>> pts;
  std::vector<std::vector<std::vector<PointId>>> flats;
  for (const auto& m : spread.members) {
    pts.push_back(ps.points_of(m));
    flats.push_back(space.parallel_flats(m.basis()));
  }
  const std::size_t u = pts[0].size();

  auto flat_containing = [&](std::size_t member, PointId x) -> std::size_t {
    const auto& fl = flats[member];
    for (std::size_t i = 0; i < fl.size(); ++i)
      if (std::binary_search(fl[i].begin(), fl[i].end(), x)) return i;
    throw std::logic_error("point in no flat");
  };

  Json triples_json = Json::array();
  for (std::size_t t = 0; t < triples; ++t) {
    const std::size_t e = 3 * t, fm = 3 * t + 1, g = 3 * t + 2, d = (3 * t + 3) % members;
    const auto& se = spread.members[e];
    const auto& sf = spread.members[fm];
    const auto& sg = spread.members[g];
    const auto& dpts = pts[d];

    std::vector<DirectionId> E(u), F(u), G(u);
    for (std::size_t i = 0; i < u; ++i) {
      const auto line = transversal(f, ps.point(dpts[i]), se, sg);
      E[i] = point_of(ps, intersect(f, line, se));
      G[i] = point_of(ps, intersect(f, line, sg));
      // D_i F_{i+1} meets g; D_u F_1 closes the cycle.
      const auto line_f = transversal(f, ps.point(dpts[i]), sf, sg);
      F[(i + 1) % u] = point_of(ps, intersect(f, line_f, sf));
    }
    for (auto [numbering, member] : {std::pair{&E, e}, std::pair{&F, fm}, std::pair{&G, g}}) {
      auto sorted = *numbering;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != pts[member]) throw std::logic_error("transversal numbering is not a bijection");
    }

    const auto& mpts = flats[d][0];
    std::vector<std::size_t> pe(qk), pf(qk), pg(qk);
    for (std::uint64_t i = 0; i < qk; ++i) {
      pe[i] = flat_containing(e, mpts[i]);
      pf[i] = flat_containing(fm, mpts[i]);
      pg[i] = flat_containing(g, mpts[i]);
    }

    const std::string tag = std::to_string(t + 1);
    for (std::size_t i = 0; i < u; ++i) {
      for (int side = 0; side < 2; ++side) {
        const DirectionId dir = side == 0 ? E[i] : F[i];
        std::vector<LineId> lines;
        for (auto m : mpts) lines.push_back(space.line_with(m, dir));
        b.add("B(" + tag + "," + std::to_string(i + 1) + "," + std::to_string(side) + ")", std::move(lines),
              {{"type", side == 0 ? "star first" : "star second"},
               {"triple", t + 1},
               {"i", i + 1},
               {"direction", vec_json(space.direction(dir))}});
      }
    }
    for (std::uint64_t i = 0; i < qk; ++i) {
      for (std::size_t j = 0; j < u; ++j) {
        auto lines = without(space.lines_in(flats[e][pe[i]], E[j]), space.line_with(mpts[i], E[j]));
        auto lf = without(space.lines_in(flats[fm][pf[i]], F[j]), space.line_with(mpts[i], F[j]));
        auto lg = space.lines_in(flats[g][pg[i]], G[j]);
        lines.insert(lines.end(), lf.begin(), lf.end());
        lines.insert(lines.end(), lg.begin(), lg.end());
        b.add("C(" + tag + "," + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", std::move(lines),
              {{"type", "triple mix"}, {"triple", t + 1}, {"i", i + 1}, {"j", j + 1}, {"M", vec_json(space.point(mpts[i]))}});
      }
    }

    Json tj;
    tj["e"] = e + 1;
    tj["f"] = fm + 1;
    tj["g"] = g + 1;
    tj["d"] = d + 1;
    auto dirs = [&](const std::vector<DirectionId>& xs) {
      Json a = Json::array();
      for (auto x : xs) a.push_back(vec_json(space.direction(x)));
      return a;
    };
    tj["D"] = dirs(dpts);
    tj["E"] = dirs(E);
    tj["F"] = dirs(F);
    tj["G"] = dirs(G);
    Json mj = Json::array();
    for (auto m : mpts) mj.push_back(vec_json(space.point(m)));
    tj["M"] = std::move(mj);
    triples_json.push_back(std::move(tj));
  }

  Json leftovers = Json::array();
  for (std::size_t m = 3 * triples; m < members; ++m) {
    leftovers.push_back(m + 1);
    for (auto p : pts[m])
      b.add("D(" + std::to_string(p + 1) + ")", lines_with_direction(space, p),
            {{"type", "parallel class"}, {"member", m + 1}, {"P", vec_json(space.direction(p))}});
  }

  Json spread_json = Json::array();
  for (const auto& m : spread.members) spread_json.push_back(subspace_json(m));
  b.trace()["spread"] = std::move(spread_json);
  b.trace()["epsilon"] = eps;
  b.trace()["u"] = u;
  b.trace()["triples"] = std::move(triples_json);
  b.trace()["leftover_members"] = std::move(leftovers);
  return b.finish();
}

}  // namespace agcolor
