#include "agcolor/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <stdexcept>

namespace agcolor {

IntersectionGraph::IntersectionGraph(std::vector<std::vector<std::uint32_t>> point_sets) : sets_(std::move(point_sets)) {
  if (sets_.size() > kMaxLines)
    throw std::length_error("oracle accepts at most " + std::to_string(kMaxLines) + " lines, got " +
                            std::to_string(sets_.size()));
  std::map<std::uint32_t, std::size_t> on_point;
  for (auto& s : sets_) {
    if (s.empty()) throw std::invalid_argument("oracle input contains an empty point set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (auto p : s) max_point_degree_ = std::max(max_point_degree_, ++on_point[p]);
  }
  adj_.assign(sets_.size(), 0);
  for (std::size_t a = 0; a < sets_.size(); ++a)
    for (std::size_t b = a + 1; b < sets_.size(); ++b) {
      std::vector<std::uint32_t> common;
      std::set_intersection(sets_[a].begin(), sets_[a].end(), sets_[b].begin(), sets_[b].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        adj_[a] |= std::uint64_t{1} << b;
        adj_[b] |= std::uint64_t{1} << a;
      }
    }
}

IntersectionGraph IntersectionGraph::of_space(const AffineSpace& space) {
  if (space.line_count() > kMaxLines)
    throw std::length_error("oracle accepts at most " + std::to_string(kMaxLines) + " lines; AG(" +
                            std::to_string(space.dimension()) + "," + std::to_string(space.order()) + ") has " +
                            std::to_string(space.line_count()));
  std::vector<std::vector<std::uint32_t>> sets;
  for (LineId l = 0; l < space.line_count(); ++l) {
    auto pts = space.line_points(l);
    sets.emplace_back(pts.begin(), pts.end());
  }
  return IntersectionGraph(std::move(sets));
}

std::size_t IntersectionGraph::degree(std::size_t a) const { return static_cast<std::size_t>(std::popcount(adj_[a])); }

std::size_t IntersectionGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t a = 0; a < size(); ++a) twice += degree(a);
  return twice / 2;
}

std::string_view index_name(Index i) {
  switch (i) {
    case Index::chromatic: return "chi";
    case Index::achromatic: return "alpha";
    case Index::pseudoachromatic: return "psi";
  }
  return "unknown";
}

Index parse_index(std::string_view name) {
  if (name == "chi") return Index::chromatic;
  if (name == "alpha") return Index::achromatic;
  if (name == "psi") return Index::pseudoachromatic;
  throw std::invalid_argument("unknown index '" + std::string(name) + "' (expected chi, alpha or psi)");
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kMaxClasses = IntersectionGraph::kMaxLines;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

// Largest K with K(K-1)/2 <= pairs.
std::uint64_t max_classes_for_pairs(std::uint64_t pairs) {
  std::uint64_t k = 0;
  while ((k + 1) * k / 2 <= pairs) ++k;
  return k;
}

std::vector<std::vector<std::size_t>> classes_of(const std::vector<int>& assign) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < assign.size(); ++i) {
    if (static_cast<std::size_t>(assign[i]) >= out.size()) out.resize(assign[i] + 1);
    out[assign[i]].push_back(i);
  }
  return out;
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}
  bool expired(std::uint64_t nodes) {
    if (hit_) return true;
    if ((nodes & 1023u) == 0 && Clock::now() > end_) hit_ = true;
    return hit_;
  }
  bool hit() const { return hit_; }

 private:
  Clock::time_point end_;
  bool hit_ = false;
};

// Maximum number of classes in a complete partition, optionally proper.
// Lines are placed in index order; a new class only ever takes the next
// unused label, which removes label permutations.
class MaxSearch {
 public:
  MaxSearch(const IntersectionGraph& g, bool proper, double budget)
      : g_(g), proper_(proper), n_(g.size()), deadline_(budget), assign_(n_, -1), edges_from_(n_ + 1, 0) {
    // An edge {a, b} with a < b touches the lines >= i exactly when b >= i.
    for (std::size_t i = n_; i-- > 0;)
      edges_from_[i] = edges_from_[i + 1] + std::popcount(g.neighbours(i) & low_mask(i));
    global_upper_ = std::min<std::uint64_t>(n_, max_classes_for_pairs(g.edge_count()));
  }

  OracleResult run(Index index) {
    if (!proper_) {
      // One class is always complete.
      best_ = 1;
      best_assign_.assign(n_, 0);
    }
    if (best_ < global_upper_) dfs(0, 0);
    OracleResult r;
    r.index = index;
    r.nodes = nodes_;
    r.exact = !deadline_.hit();
    r.lower = best_;
    r.upper = r.exact ? best_ : global_upper_;
    if (!best_assign_.empty()) r.witness = classes_of(best_assign_);
    return r;
  }

 private:
  std::uint64_t bound(std::size_t i, std::uint64_t met_count) const {
    const std::uint64_t r = n_ - i;
    const std::uint64_t remaining = low_mask(n_) & ~low_mask(i);
    // Every unmet pair needs a remaining line in one of its two classes, so
    // those lines cover the unmet graph; a maximal matching bounds the cover.
    std::uint64_t used = 0, matching = 0;
    for (std::size_t a = 0; a < k_; ++a) {
      const std::uint64_t unmet = ~met_[a] & low_mask(k_) & ~bit(a);
      if (unmet == 0) continue;
      for (std::size_t b = a + 1; b < k_; ++b) {
        if (!((unmet >> b) & 1u)) continue;
        const std::uint64_t into_a = proper_ ? remaining & ~near_[a] : remaining;
        const std::uint64_t into_b = proper_ ? remaining & ~near_[b] : remaining;
        bool fixable = false;
        for (std::uint64_t m = into_a; m && !fixable; m &= m - 1)
          fixable = (g_.neighbours(std::countr_zero(m)) & (members_[b] | remaining)) != 0;
        for (std::uint64_t m = into_b; m && !fixable; m &= m - 1)
          fixable = (g_.neighbours(std::countr_zero(m)) & (members_[a] | remaining)) != 0;
        if (!fixable) return 0;
        if (!((used >> a) & 1u) && !((used >> b) & 1u)) {
          used |= bit(a) | bit(b);
          ++matching;
        }
      }
    }
    const std::uint64_t by_lines = k_ + r - std::min(r, matching);
    // Each class pair still to be met consumes its own edge touching a remaining line.
    const std::uint64_t by_edges = max_classes_for_pairs(met_count + edges_from_[i]);
    return std::min(by_lines, by_edges);
  }

  void dfs(std::size_t i, std::uint64_t met_count) {
    if (deadline_.expired(++nodes_)) return;
    if (i == n_) {
      if (met_count == k_ * (k_ - 1) / 2 && k_ > best_) {
        best_ = k_;
        best_assign_ = assign_;
      }
      return;
    }
    if (bound(i, met_count) <= best_) return;
    const std::uint64_t nb = g_.neighbours(i);
    for (std::size_t c = 0; c <= k_ && c < kMaxClasses; ++c) {
      if (proper_ && c < k_ && (nb & members_[c])) continue;
      const bool fresh = c == k_;
      std::array<std::uint64_t, kMaxClasses + 1> saved_met;
      std::copy_n(met_.begin(), k_ + 1, saved_met.begin());
      const std::uint64_t saved_members = members_[c], saved_near = near_[c];
      if (fresh) {
        members_[c] = 0;
        near_[c] = 0;
        met_[c] = 0;
        ++k_;
      }
      members_[c] |= bit(i);
      near_[c] |= nb;
      std::uint64_t gained = 0;
      for (std::size_t d = 0; d < k_; ++d) {
        if (d == c || ((met_[c] >> d) & 1u) || !(nb & members_[d])) continue;
        met_[c] |= bit(d);
        met_[d] |= bit(c);
        ++gained;
      }
      assign_[i] = static_cast<int>(c);
      dfs(i + 1, met_count + gained);
      assign_[i] = -1;
      if (fresh) --k_;
      members_[c] = saved_members;
      near_[c] = saved_near;
      std::copy_n(saved_met.begin(), k_ + 1, met_.begin());
      if (deadline_.hit() || best_ >= global_upper_) return;
    }
  }

  const IntersectionGraph& g_;
  bool proper_;
  std::size_t n_;
  Deadline deadline_;
  std::vector<int> assign_;
  std::vector<std::uint64_t> edges_from_;  // edges with an endpoint >= i
  std::uint64_t global_upper_ = 0;
  std::size_t k_ = 0;
  std::array<std::uint64_t, kMaxClasses + 1> members_{};
  std::array<std::uint64_t, kMaxClasses + 1> near_{};  // lines meeting some member
  std::array<std::uint64_t, kMaxClasses + 1> met_{};   // classes already met
  std::uint64_t best_ = 0;
  std::vector<int> best_assign_;
  std::uint64_t nodes_ = 0;
};

class MinSearch {
 public:
  MinSearch(const IntersectionGraph& g, double budget) : g_(g), n_(g.size()), deadline_(budget), assign_(n_, -1) {}

  OracleResult run() {
    // First-fit gives the incumbent; lines through one point form a clique.
    std::vector<std::uint64_t> cls;
    best_assign_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t c = 0;
      while (c < cls.size() && (g_.neighbours(i) & cls[c])) ++c;
      if (c == cls.size()) cls.push_back(0);
      cls[c] |= bit(i);
      best_assign_[i] = static_cast<int>(c);
    }
    best_ = cls.size();
    lower_ = std::max<std::uint64_t>(1, g_.max_point_degree());
    if (best_ > lower_) dfs(0);
    OracleResult r;
    r.index = Index::chromatic;
    r.nodes = nodes_;
    r.exact = !deadline_.hit() || best_ == lower_;
    r.lower = r.exact ? best_ : lower_;
    r.upper = best_;
    r.witness = classes_of(best_assign_);
    return r;
  }

 private:
  void dfs(std::size_t i) {
    if (deadline_.expired(++nodes_) || best_ == lower_) return;
    if (k_ >= best_) return;
    if (i == n_) {
      best_ = k_;
      best_assign_ = assign_;
      return;
    }
    const std::uint64_t nb = g_.neighbours(i);
    for (std::size_t c = 0; c < k_; ++c) {
      if (nb & members_[c]) continue;
      members_[c] |= bit(i);
      assign_[i] = static_cast<int>(c);
      dfs(i + 1);
      members_[c] &= ~bit(i);
    }
    if (k_ + 1 < best_) {
      members_[k_] = bit(i);
      assign_[i] = static_cast<int>(k_);
      ++k_;
      dfs(i + 1);
      --k_;
      members_[k_] = 0;
    }
    assign_[i] = -1;
  }

  const IntersectionGraph& g_;
  std::size_t n_;
  Deadline deadline_;
  std::vector<int> assign_;
  std::array<std::uint64_t, kMaxClasses> members_{};
  std::size_t k_ = 0;
  std::uint64_t best_ = 0;
  std::uint64_t lower_ = 0;
  std::vector<int> best_assign_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult exact_pseudoachromatic(const IntersectionGraph& g, const OracleOptions& opt) {
  return MaxSearch(g, false, opt.budget_seconds).run(Index::pseudoachromatic);
}

OracleResult exact_achromatic(const IntersectionGraph& g, const OracleOptions& opt) {
  return MaxSearch(g, true, opt.budget_seconds).run(Index::achromatic);
}

OracleResult exact_chromatic(const IntersectionGraph& g, const OracleOptions& opt) {
  return MinSearch(g, opt.budget_seconds).run();
}

OracleResult run_oracle(Index index, const IntersectionGraph& g, const OracleOptions& opt) {
  switch (index) {
    case Index::chromatic: return exact_chromatic(g, opt);
    case Index::achromatic: return exact_achromatic(g, opt);
    case Index::pseudoachromatic: return exact_pseudoachromatic(g, opt);
  }
  throw std::invalid_argument("unknown index");
}

IntersectionGraph graph_from_json(const Json& j) {
  try {
    const Json& sets = j.is_object() ? j.at("sets") : j;
    if (!sets.is_array()) throw std::invalid_argument("oracle input must be a list of point-id lists");
    return IntersectionGraph(sets.get<std::vector<std::vector<std::uint32_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed oracle input: ") + e.what());
  }
}

Json oracle_result_to_json(const OracleResult& r) {
  Json j;
  j["index"] = index_name(r.index);
  j["exact"] = r.exact;
  j["value"] = r.exact ? Json(r.lower) : Json(nullptr);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["nodes"] = r.nodes;
  j["witness"] = r.witness;
  return j;
}

}  // namespace agcolor
