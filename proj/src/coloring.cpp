#include <algorithm>
#include <stdexcept>

#include "agcolor/coloring.hpp"
#include "construction_util.hpp"

namespace agcolor {

namespace detail {

std::shared_ptr<const AffineSpace> make_affine(int n, const Field& f) { return std::make_shared<AffineSpace>(f, n); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (auto e : v) out.push_back(e.index);
  return out;
}

Json subspace_json(const Subspace& s) {
  Json out = Json::array();
  for (const auto& row : s.basis()) out.push_back(vec_json(row));
  return out;
}

ColoringBuilder::ColoringBuilder(std::shared_ptr<const AffineSpace> space, std::string construction)
    : space_(std::move(space)), construction_(std::move(construction)) {}

void ColoringBuilder::add(std::string id, std::vector<LineId> lines, Json provenance) {
  std::sort(lines.begin(), lines.end());
  provenance_[id] = std::move(provenance);
  classes_.push_back({std::move(id), std::move(lines)});
}

Coloring ColoringBuilder::finish() {
  std::vector<std::uint32_t> uses(space_->line_count(), 0);
  for (const auto& cls : classes_) {
    if (cls.lines.empty()) throw std::logic_error(construction_ + ": empty class " + cls.id);
    for (auto l : cls.lines) ++uses[l];
  }
  for (LineId l = 0; l < uses.size(); ++l)
    if (uses[l] != 1)
      throw std::logic_error(construction_ + ": line " + space_->line_key(l) + " assigned " + std::to_string(uses[l]) +
                             " times");
  Coloring c;
  c.space = space_;
  c.construction = construction_;
  c.classes = std::move(classes_);
  c.trace = std::move(trace_);
  c.trace["provenance"] = std::move(provenance_);
  return c;
}

std::vector<LineId> lines_with_direction(const AffineSpace& space, DirectionId d) {
  std::vector<LineId> out;
  for (LineId l = 0; l < space.line_count(); ++l)
    if (space.line(l).direction == d) out.push_back(l);
  return out;
}

}  // namespace detail

namespace {

constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::chromatic, "chromatic"},
    {Method::plane_achromatic, "plane-achromatic"},
    {Method::plane_pseudo, "plane-pseudo"},
    {Method::even_pseudo, "even-pseudo"},
    {Method::odd_pseudo, "odd-pseudo"},
    {Method::even_achromatic, "even-achromatic"},
    {Method::ag3_achromatic, "ag3-achromatic"},
};

}  // namespace

std::string_view method_name(Method m) {
  for (auto [method, name] : kMethodNames)
    if (method == m) return name;
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (auto [method, n] : kMethodNames)
    if (n == name) return method;
  throw std::invalid_argument("unknown construction method '" + std::string(name) + "'");
}

std::string method_constraint_violation(Method m, int n) {
  switch (m) {
    case Method::chromatic:
      return n >= 2 ? "" : "chromatic requires n >= 2";
    case Method::plane_achromatic:
    case Method::plane_pseudo:
      return n == 2 ? "" : std::string(method_name(m)) + " requires n = 2";
    case Method::even_pseudo:
    case Method::even_achromatic:
      return (n >= 4 && n % 2 == 0) ? "" : std::string(method_name(m)) + " requires even n >= 4";
    case Method::odd_pseudo:
      return (n >= 3 && n % 2 == 1) ? "" : "odd-pseudo requires odd n >= 3";
    case Method::ag3_achromatic:
      return n == 3 ? "" : "ag3-achromatic requires n = 3";
  }
  return "unknown method";
}

Coloring construct(Method m, int n, const Field& f) {
  if (auto why = method_constraint_violation(m, n); !why.empty()) throw std::invalid_argument(why);
  switch (m) {
    case Method::chromatic: return chromatic_parallel(n, f);
    case Method::plane_achromatic: return plane_achromatic(f);
    case Method::plane_pseudo: return plane_pseudo(f);
    case Method::even_pseudo: return even_pseudo(n / 2, f);
    case Method::odd_pseudo: return odd_pseudo((n - 1) / 2, f);
    case Method::even_achromatic: return even_achromatic(n / 2, f);
    case Method::ag3_achromatic: return ag3_achromatic(f);
  }
  throw std::invalid_argument("unknown method");
}

// ---------------------------------------------------------------------------
// JSON

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  j["modulus"] = f.modulus();
  return j;
}

Field field_from_json(const Json& j) {
  try {
    const Field f = Field::create(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    if (j.contains("modulus") && j.at("modulus").get<std::vector<std::uint32_t>>() != f.modulus())
      throw std::invalid_argument("field modulus does not match the canonical modulus");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed field descriptor: ") + e.what());
  }
}

Json coloring_to_json(const Coloring& c) {
  Json j;
  j["space"] = {{"kind", "affine"}, {"n", c.space->dimension()}, {"field", field_to_json(c.space->field())}};
  j["construction"] = c.construction;
  Json classes = Json::array();
  for (const auto& cls : c.classes) {
    Json lines = Json::array();
    for (auto l : cls.lines) lines.push_back(c.space->line_key(l));
    classes.push_back({{"id", cls.id}, {"lines", std::move(lines)}});
  }
  j["classes"] = std::move(classes);
  j["trace"] = c.trace;
  return j;
}

Coloring coloring_from_json(const Json& j) {
  try {
    const auto& sp = j.at("space");
    if (sp.value("kind", "affine") != "affine") throw std::invalid_argument("only affine colorings are supported");
    Coloring c;
    c.space = detail::make_affine(sp.at("n").get<int>(), field_from_json(sp.at("field")));
    c.construction = j.value("construction", "");
    for (const auto& cls : j.at("classes")) {
      ColorClass cc;
      cc.id = cls.at("id").get<std::string>();
      for (const auto& key : cls.at("lines")) cc.lines.push_back(c.space->parse_line_key(key.get<std::string>()));
      c.classes.push_back(std::move(cc));
    }
    if (j.contains("trace")) c.trace = j.at("trace");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed coloring file: ") + e.what());
  }
}

}  // namespace agcolor
