#include "agcolor/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace agcolor {

// ---------------------------------------------------------------------------
// Spread

Spread build_spread(int k, const Field& f) {
  if (k < 1) throw std::invalid_argument("spread parameter k must be at least 1");
  ProjectiveSpace ambient(f, 2 * k - 1);
  const Extension ext(f, static_cast<std::uint32_t>(k));
  const std::size_t len = 2 * static_cast<std::size_t>(k);

  std::vector<Extension::Value> basis;  // 1, t, t^2, ... as GF(q)-basis of GF(q^k)
  for (int r = 0; r < k; ++r) {
    Extension::Value e = ext.zero();
    e[r] = f.one();
    basis.push_back(e);
  }

  auto concat = [&](const Extension::Value& x, const Extension::Value& y) {
    Vec v(x);
    v.insert(v.end(), y.begin(), y.end());
    return v;
  };

  std::vector<Subspace> members;
  for (std::uint64_t i = 0; i < ext.order(); ++i) {
    const auto a = ext.from_index(i);
    std::vector<Vec> rows;
    for (const auto& x : basis) rows.push_back(concat(x, ext.mul(a, x)));
    members.push_back(Subspace::from_rows(f, len, std::move(rows)));
  }
  {
    std::vector<Vec> rows;
    for (const auto& x : basis) rows.push_back(concat(ext.zero(), x));
    members.push_back(Subspace::from_rows(f, len, std::move(rows)));
  }

  std::vector<std::vector<PointId>> member_points;
  for (const auto& m : members) member_points.push_back(ambient.points_of(m));
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return member_points[x].front() < member_points[y].front(); });

  Spread s{k, ambient, {}, std::vector<std::uint32_t>(ambient.point_count(), UINT32_MAX)};
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    s.members.push_back(members[order[idx]]);
    for (auto p : member_points[order[idx]]) {
      if (s.point_member[p] != UINT32_MAX) throw std::logic_error("spread members overlap");
      s.point_member[p] = static_cast<std::uint32_t>(idx);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Good partition

namespace {

struct PartialPartition {
  std::vector<PointId> a;
  std::vector<PointId> b;
  std::map<PointId, Subspace> assigned;
};

PartialPartition partition_subspace(const ProjectiveSpace& ps, const Subspace& sigma, PointId q_point) {
  const Field& f = ps.field();
  const auto pts = ps.points_of(sigma);
  const Subspace qs = ps.subspace_of(q_point);
  PartialPartition out;

  if (sigma.dim() == 2) {
    // Pencil of lines through Q; the first line l_0 carries B.
    const auto x0 = *std::find_if(pts.begin(), pts.end(), [&](PointId p) { return p != q_point; });
    const Subspace l0 = span(f, qs, ps.subspace_of(x0));
    for (auto p : pts) {
      if (p == q_point) continue;
      if (l0.contains(f, ps.point(p))) {
        out.b.push_back(p);
        out.assigned.emplace(p, ps.subspace_of(p));
      } else {
        out.a.push_back(p);
        out.assigned.emplace(p, span(f, qs, ps.subspace_of(p)));
      }
    }
    return out;
  }

  // Carrier: a subspace of codimension 2 through Q.
  Subspace carrier = qs;
  for (auto p : pts) {
    if (carrier.dim() == sigma.dim() - 2) break;
    if (!carrier.contains(f, ps.point(p))) carrier = span(f, carrier, ps.subspace_of(p));
  }
  const PartialPartition inner = partition_subspace(ps, carrier, q_point);

  const auto x0 = *std::find_if(pts.begin(), pts.end(), [&](PointId p) { return !carrier.contains(f, ps.point(p)); });
  const Subspace h0 = span(f, carrier, ps.subspace_of(x0));

  std::vector<PointId> outside_h0, h0_minus_carrier;
  for (auto p : pts) {
    if (!h0.contains(f, ps.point(p))) outside_h0.push_back(p);
    else if (!carrier.contains(f, ps.point(p))) h0_minus_carrier.push_back(p);
  }

  const Subspace lift_a = ps.subspace_of(outside_h0.front());
  const Subspace lift_b = ps.subspace_of(h0_minus_carrier.front());
  const Subspace& inner_a = inner.assigned.at(*std::min_element(inner.a.begin(), inner.a.end()));
  const Subspace& inner_b = inner.assigned.at(*std::min_element(inner.b.begin(), inner.b.end()));

  for (auto p : inner.a) out.assigned.emplace(p, span(f, inner.assigned.at(p), lift_a));
  for (auto p : outside_h0) out.assigned.emplace(p, span(f, ps.subspace_of(p), inner_a));
  for (auto p : inner.b) out.assigned.emplace(p, span(f, inner.assigned.at(p), lift_b));
  for (auto p : h0_minus_carrier) out.assigned.emplace(p, span(f, ps.subspace_of(p), inner_b));

  out.a = inner.a;
  out.a.insert(out.a.end(), outside_h0.begin(), outside_h0.end());
  out.b = inner.b;
  out.b.insert(out.b.end(), h0_minus_carrier.begin(), h0_minus_carrier.end());
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

}  // namespace

GoodPartition build_good_partition(int k, const Field& f, std::optional<Vec> q_point) {
  if (k < 1) throw std::invalid_argument("good partition parameter k must be at least 1");
  ProjectiveSpace ambient(f, 2 * k);
  const PointId q = q_point ? ambient.index_of(*q_point) : 0;
  auto partial = partition_subspace(ambient, ambient.whole(), q);

  GoodPartition gp{k, ambient, q, std::move(partial.a), std::move(partial.b), {}};
  gp.assigned.assign(ambient.point_count(), Subspace(ambient.dimension() + 1));
  for (auto& [p, s] : partial.assigned) gp.assigned[p] = std::move(s);
  return gp;
}

// ---------------------------------------------------------------------------
// Difference sets

bool is_perfect_difference_set(std::span<const std::uint32_t> d, std::uint32_t v) {
  if (v == 0) return false;
  std::vector<char> seen(v, 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      const std::uint32_t diff = (d[i] + v - d[j] % v) % v;
      if (diff == 0 || seen[diff]) return false;
      seen[diff] = 1;
    }
  return d.size() * (d.size() - 1) == v - 1;
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t m) {
  for (std::uint32_t x = 1; x < m; ++x)
    if (std::uint64_t(a) * x % m == 1) return x;
  throw std::domain_error("no modular inverse");
}

}  // namespace

DifferenceSet singer_difference_set(const Field& f) {
  const std::uint32_t q = f.order();
  const std::uint32_t v = q * q + q + 1;
  const Extension ext(f, 3);
  const auto w = ext.primitive_element();

  std::vector<Vec> powers(v);
  Extension::Value x = ext.one();
  for (std::uint32_t i = 0; i < v; ++i) {
    powers[i] = linalg::normalize(f, x);
    x = ext.mul(x, w);
  }
  const Subspace base_line = Subspace::from_rows(f, 3, {ext.one(), w});
  std::vector<std::uint32_t> logs;
  for (std::uint32_t i = 0; i < v; ++i)
    if (base_line.contains(f, powers[i])) logs.push_back(i);
  if (!is_perfect_difference_set(logs, v)) throw std::logic_error("Singer construction failed");

  DifferenceSet best{q, v, {}, {}, 1, 0};
  for (std::uint32_t s = 1; s < v; ++s) {
    if (std::gcd(s, v) != 1) continue;
    std::vector<std::uint32_t> scaled;
    for (auto d : logs) scaled.push_back(static_cast<std::uint32_t>(std::uint64_t(s) * d % v));
    std::sort(scaled.begin(), scaled.end());
    for (auto a : scaled) {
      if (!std::binary_search(scaled.begin(), scaled.end(), (a + 1) % v)) continue;
      std::vector<std::uint32_t> cand;
      for (auto d : scaled) cand.push_back((d + v - a) % v);
      std::sort(cand.begin(), cand.end());
      if (best.d.empty() || cand < best.d) {
        best.d = std::move(cand);
        best.multiplier = s;
        best.translation = (v - a) % v;
      }
    }
  }

  // New label y corresponds to old label s^{-1} (y - j).
  const std::uint32_t s_inv = mod_inverse(best.multiplier, v);
  best.points.resize(v);
  for (std::uint32_t y = 0; y < v; ++y) {
    const std::uint32_t old = static_cast<std::uint32_t>(std::uint64_t(s_inv) * ((y + v - best.translation) % v) % v);
    best.points[y] = powers[old];
  }
  return best;
}

std::optional<std::vector<std::uint32_t>> exhaustive_difference_set(std::uint32_t q) {
  const std::uint32_t v = q * q + q + 1;
  const std::size_t size = q + 1;
  std::vector<std::uint32_t> d{0, 1};
  std::vector<char> used(v, 0);
  used[1] = used[v - 1] = 1;

  auto extend = [&](auto&& self, std::uint32_t next) -> bool {
    if (d.size() == size) return true;
    for (std::uint32_t c = next; c < v; ++c) {
      std::vector<std::uint32_t> diffs;
      bool ok = true;
      for (auto e : d) {
        const std::uint32_t a = (c + v - e) % v, b = (e + v - c) % v;
        if (used[a] || used[b] || a == b) { ok = false; break; }
        diffs.push_back(a);
        diffs.push_back(b);
      }
      if (!ok) continue;
      std::sort(diffs.begin(), diffs.end());
      if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end()) continue;
      for (auto x : diffs) used[x] = 1;
      d.push_back(c);
      if (self(self, c + 1)) return true;
      d.pop_back();
      for (auto x : diffs) used[x] = 0;
    }
    return false;
  };
  if (q == 1 ? false : extend(extend, 2)) return d;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Subspace transversal(const Field& f, const Vec& p, const Subspace& s1, const Subspace& s2) {
  if (!intersect(f, s1, s2).empty()) throw std::invalid_argument("transversal needs skew subspaces");
  if (s1.contains(f, p) || s2.contains(f, p)) throw std::invalid_argument("transversal point lies on an input subspace");
  const Subspace ps = Subspace::from_point(f, p);
  Subspace line = intersect(f, span(f, ps, s1), span(f, ps, s2));
  if (line.dim() != 1) throw std::invalid_argument("no unique transversal through the point");
  return line;
}

}  // namespace agcolor
