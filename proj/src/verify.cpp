#include "agcolor/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "agcolor/bounds.hpp"

namespace agcolor {

namespace {

void require_space(const Coloring& c) {
  if (!c.space) throw std::invalid_argument("coloring has no space");
  for (const auto& cls : c.classes)
    for (auto l : cls.lines)
      if (l >= c.space->line_count())
        throw std::out_of_range("class '" + cls.id + "' refers to a line outside the space");
}

}  // namespace

PartitionCheck check_partition(const Coloring& c) {
  require_space(c);
  PartitionCheck out;
  std::vector<std::uint32_t> uses(c.space->line_count(), 0);
  for (const auto& cls : c.classes) {
    if (cls.lines.empty()) out.empty_classes.push_back(cls.id);
    for (auto l : cls.lines) ++uses[l];
  }
  for (LineId l = 0; l < uses.size(); ++l) {
    if (uses[l] == 0) out.missing.push_back(l);
    if (uses[l] > 1) out.duplicated.push_back(l);
  }
  out.ok = out.missing.empty() && out.duplicated.empty() && out.empty_classes.empty();
  return out;
}

ProperResult is_proper(const Coloring& c) {
  require_space(c);
  const auto& space = *c.space;
  std::vector<std::size_t> stamp(space.point_count(), SIZE_MAX);
  for (std::size_t ci = 0; ci < c.classes.size(); ++ci) {
    auto lines = c.classes[ci].lines;
    std::sort(lines.begin(), lines.end());
    bool clash = false;
    for (auto l : lines) {
      for (auto p : space.line_points(l)) {
        if (stamp[p] == ci) clash = true;
        stamp[p] = ci;
      }
      if (clash) break;
    }
    if (!clash) continue;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j)
        if (auto p = space.common_point(lines[i], lines[j]); p || lines[i] == lines[j])
          return {false, ProperWitness{ci, lines[i], lines[j], p ? *p : space.line_points(lines[i])[0]}};
  }
  return {true, std::nullopt};
}

CompleteResult is_complete(const Coloring& c) {
  require_space(c);
  const auto& space = *c.space;
  const std::size_t k = c.classes.size();
  std::vector<std::vector<std::uint32_t>> classes_of(space.line_count());
  for (std::size_t ci = 0; ci < k; ++ci)
    for (auto l : c.classes[ci].lines) classes_of[l].push_back(static_cast<std::uint32_t>(ci));

  std::vector<char> met(k * k, 0);
  std::vector<std::uint32_t> here;
  for (PointId p = 0; p < space.point_count(); ++p) {
    here.clear();
    for (auto l : space.lines_through(p)) here.insert(here.end(), classes_of[l].begin(), classes_of[l].end());
    std::sort(here.begin(), here.end());
    here.erase(std::unique(here.begin(), here.end()), here.end());
    for (std::size_t i = 0; i < here.size(); ++i)
      for (std::size_t j = i + 1; j < here.size(); ++j) met[std::size_t(here[i]) * k + here[j]] = 1;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (!met[a * k + b]) return {false, CompleteWitness{a, b}};
  return {true, std::nullopt};
}

VerificationReport verify(const Coloring& c) {
  VerificationReport r;
  r.n = c.space->dimension();
  r.q = c.space->order();
  r.construction = c.construction;
  r.class_count = c.classes.size();
  r.line_count = c.space->line_count();
  r.partition = check_partition(c);
  r.proper = is_proper(c);
  r.complete = is_complete(c);
  for (const auto& cls : c.classes) ++r.size_histogram[cls.lines.size()];
  r.chain.chromatic = chromatic_index(r.n, r.q).convert_to<std::uint64_t>();
  if (r.n >= 2) {
    r.chain.psi_upper = psi_upper(r.n, r.q).exact.convert_to<std::uint64_t>();
    r.chain.within_psi_upper = r.class_count <= r.chain.psi_upper;
  }
  r.chain.at_least_chromatic = !r.proper.proper || r.class_count >= r.chain.chromatic;
  return r;
}

Json report_to_json(const VerificationReport& r, const Coloring& c) {
  const auto& space = *c.space;
  Json j;
  j["space"] = {{"kind", "affine"}, {"n", r.n}, {"field", field_to_json(space.field())}};
  j["construction"] = r.construction;
  j["class_count"] = r.class_count;
  j["line_count"] = r.line_count;

  Json part;
  part["ok"] = r.partition.ok;
  part["missing"] = Json::array();
  for (auto l : r.partition.missing) part["missing"].push_back(space.line_key(l));
  part["duplicated"] = Json::array();
  for (auto l : r.partition.duplicated) part["duplicated"].push_back(space.line_key(l));
  part["empty_classes"] = r.partition.empty_classes;
  j["partition"] = part;

  Json proper;
  proper["holds"] = r.proper.proper;
  if (r.proper.witness) {
    const auto& w = *r.proper.witness;
    Json point = Json::array();
    for (auto e : space.point(w.point)) point.push_back(e.index);
    proper["witness"] = {{"class", c.classes[w.class_index].id},
                         {"lines", {space.line_key(w.first), space.line_key(w.second)}},
                         {"point", point}};
  } else {
    proper["witness"] = nullptr;
  }
  j["proper"] = proper;

  Json complete;
  complete["holds"] = r.complete.complete;
  if (r.complete.witness)
    complete["witness"] = {{"classes", {c.classes[r.complete.witness->first].id, c.classes[r.complete.witness->second].id}}};
  else
    complete["witness"] = nullptr;
  j["complete"] = complete;

  Json hist = Json::object();
  for (auto [size, count] : r.size_histogram) hist[std::to_string(size)] = count;
  j["class_sizes"] = hist;
  j["chain"] = {{"chromatic", r.chain.chromatic},
                {"psi_upper_exact", r.chain.psi_upper},
                {"within_psi_upper", r.chain.within_psi_upper},
                {"at_least_chromatic", r.chain.at_least_chromatic}};
  return j;
}

std::uint64_t count_meeting_lines(const AffineSpace& space, std::span<const LineId> lines, bool include_members) {
  if (lines.empty()) throw std::invalid_argument("count_meeting_lines needs a nonempty line set");
  std::vector<char> member(space.line_count(), 0), hit(space.line_count(), 0);
  for (auto l : lines) member.at(l) = 1;
  std::uint64_t count = 0;
  for (auto l : lines)
    for (auto p : space.line_points(l))
      for (auto m : space.lines_through(p)) {
        if (hit[m] || (member[m] && !include_members)) continue;
        hit[m] = 1;
        ++count;
      }
  return count;
}

}  // namespace agcolor
