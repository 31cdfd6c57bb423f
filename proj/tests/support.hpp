#pragma once

// Brute-force reference implementations shared by the unit tests. Nothing
// here uses the library's incidence tables; only field arithmetic is reused.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "agcolor/coloring.hpp"
#include "agcolor/field.hpp"

namespace testing_support {

using agcolor::Element;
using agcolor::Field;
using PointSet = std::vector<std::uint32_t>;

inline std::uint32_t ipow(std::uint32_t b, int e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Point id convention of the library: base q, first coordinate most significant.
inline std::vector<std::uint32_t> digits(std::uint32_t id, std::uint32_t q, int n) {
  std::vector<std::uint32_t> out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = id % q;
    id /= q;
  }
  return out;
}

inline std::uint32_t undigits(const std::vector<std::uint32_t>& c, std::uint32_t q) {
  std::uint32_t id = 0;
  for (auto x : c) id = id * q + x;
  return id;
}

/// Every line of AG(n,q) as the sorted point set {a + t(b - a)}, found by
/// sweeping all point pairs and deduplicating.
inline std::set<PointSet> brute_lines(const Field& f, int n) {
  const std::uint32_t q = f.order(), v = ipow(q, n);
  std::set<PointSet> lines;
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = a + 1; b < v; ++b) {
      const auto ca = digits(a, q, n), cb = digits(b, q, n);
      PointSet pts;
      for (std::uint32_t t = 0; t < q; ++t) {
        std::vector<std::uint32_t> c(n);
        for (int i = 0; i < n; ++i) {
          const Element diff = f.sub(Element{cb[i]}, Element{ca[i]});
          c[i] = f.add(Element{ca[i]}, f.mul(Element{t}, diff)).index;
        }
        pts.push_back(undigits(c, q));
      }
      std::sort(pts.begin(), pts.end());
      lines.insert(pts);
    }
  return lines;
}

inline bool meet(const PointSet& a, const PointSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

inline std::vector<std::vector<PointSet>> class_point_sets(const agcolor::Coloring& c) {
  std::vector<std::vector<PointSet>> out;
  for (const auto& cls : c.classes) {
    std::vector<PointSet> sets;
    for (auto l : cls.lines) {
      auto pts = c.space->line_points(l);
      sets.emplace_back(pts.begin(), pts.end());
    }
    out.push_back(std::move(sets));
  }
  return out;
}

/// Pairwise definition of properness.
inline bool brute_proper(const agcolor::Coloring& c) {
  for (const auto& cls : class_point_sets(c))
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (meet(cls[i], cls[j])) return false;
  return true;
}

/// Pairwise definition of completeness.
inline bool brute_complete(const agcolor::Coloring& c) {
  const auto sets = class_point_sets(c);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      bool found = false;
      for (const auto& x : sets[a]) {
        for (const auto& y : sets[b])
          if (meet(x, y)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
  return true;
}

/// Lines outside `chosen` meeting at least one chosen line.
inline std::uint64_t brute_meeting(const std::set<PointSet>& all, const std::vector<PointSet>& chosen) {
  std::uint64_t count = 0;
  for (const auto& l : all) {
    if (std::find(chosen.begin(), chosen.end(), l) != chosen.end()) continue;
    for (const auto& m : chosen)
      if (meet(l, m)) {
        ++count;
        break;
      }
  }
  return count;
}

}  // namespace testing_support
