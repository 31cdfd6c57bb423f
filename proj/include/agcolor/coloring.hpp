#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "agcolor/field.hpp"
#include "agcolor/space.hpp"
#include "json.hpp"

namespace agcolor {

using Json = nlohmann::ordered_json;

struct ColorClass {
  std::string id;
  std::vector<LineId> lines;  // ascending
};

/// A partition of the lines of an affine space into color classes.
///
/// `trace` records the scaffolding of the construction that produced the
/// coloring; trace["provenance"][id] describes each class.
struct Coloring {
  std::shared_ptr<const AffineSpace> space;
  std::string construction;
  std::vector<ColorClass> classes;
  Json trace = Json::object();

  std::size_t class_count() const { return classes.size(); }
};

enum class Method { chromatic, plane_achromatic, plane_pseudo, even_pseudo, odd_pseudo, even_achromatic, ag3_achromatic };

std::string_view method_name(Method m);
/// Throws std::invalid_argument on unknown names.
Method parse_method(std::string_view name);
/// Empty when (n, q) suits the method, else a message naming the constraint.
std::string method_constraint_violation(Method m, int n);

/// One class per parallel class: (q^n - 1)/(q - 1) classes, proper and complete.
Coloring chromatic_parallel(int n, const Field& f);
/// q + 1 parallel classes of AG(2, q).
Coloring plane_achromatic(const Field& f);
/// floor((q+1)^2 / 2) classes of AG(2, q): q + 1 singletons through the
/// origin, then pairs of consecutive lines from an interleaved enumeration
/// of the remaining lines.
Coloring plane_pseudo(const Field& f);
/// Complete (not proper) coloring of AG(2k, q), k >= 2, from a spread of
/// H-infinity and a pairing of its points across distinct spread members.
Coloring even_pseudo(int k, const Field& f);
/// Complete (not proper) coloring of AG(2k+1, q), k >= 1, from a good
/// partition of H-infinity.
Coloring odd_pseudo(int k, const Field& f);
/// Proper and complete coloring of AG(2k, q), k >= 2, from spread triples.
Coloring even_achromatic(int k, const Field& f);
/// Proper and complete coloring of AG(3, q) with q(q+1)^2/2 + 1 classes,
/// built on the cyclic model of H-infinity.
Coloring ag3_achromatic(const Field& f);

/// Dispatch by method; n is the affine dimension. Throws
/// std::invalid_argument when the method does not apply to n.
Coloring construct(Method m, int n, const Field& f);

// JSON (stable key order).
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);
Json coloring_to_json(const Coloring& c);
/// Throws std::invalid_argument on malformed input or unknown line ids.
Coloring coloring_from_json(const Json& j);

}  // namespace agcolor
